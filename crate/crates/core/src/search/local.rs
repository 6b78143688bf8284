use std::collections::{BTreeMap, HashMap};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{SearchOptions, SearchResult, WitnessPool};
use crate::error::{Error, Result};
use crate::graph::{LatticeSet, PLGraph, Point};

const START_TEMPERATURE: f64 = 2.0;
const END_TEMPERATURE: f64 = 0.05;

pub fn local_search_min_boundary(g: &PLGraph, m: usize, iterations: u64, seed: u64) -> Result<SearchResult> {
    local_search(g, m, iterations, seed, &SearchOptions::default())
}

/// Simulated annealing over `m`-sets, starting from a greedy growth out of
/// the origin. A move drops one point and adds a neighbour of another one.
pub fn local_search(
    g: &PLGraph,
    m: usize,
    iterations: u64,
    seed: u64,
    opts: &SearchOptions,
) -> Result<SearchResult> {
    if m == 0 {
        return Err(Error::NonPositive("cardinality 0".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut state = State::greedy(g, m, &mut rng);
    let mut pool = WitnessPool::new(g.dim(), opts);
    let mut best = state.internal;
    pool.offer(state.snapshot());

    let gens = g.generators();
    for step in 0..iterations {
        let frac = step as f64 / iterations.max(1) as f64;
        let temperature = START_TEMPERATURE * (END_TEMPERATURE / START_TEMPERATURE).powf(frac);

        let p = state.members[rng.gen_range(0..m)].clone();
        let anchor = state.members[rng.gen_range(0..m)].clone();
        if anchor == p && m > 1 {
            continue;
        }
        let v = &gens[rng.gen_range(0..gens.len())];
        let sign = if rng.gen::<bool>() { 1 } else { -1 };
        let q: Point = anchor.iter().zip(v).map(|(a, b)| a + sign * b).collect();
        if state.contains(&q) {
            continue;
        }
        let lost = state.degree_in(&p, None);
        let gained = state.degree_in(&q, Some(&p));
        let delta = gained as i64 - lost as i64;
        let accept = delta >= 0 || rng.gen::<f64>() < (2.0 * delta as f64 / temperature).exp();
        if !accept {
            continue;
        }
        state.replace(&p, q);
        state.internal = (state.internal as i64 + delta) as u64;
        if state.internal > best {
            best = state.internal;
            pool.clear();
        }
        if state.internal == best {
            pool.offer(state.snapshot());
        }
    }

    Ok(SearchResult {
        cardinality: m,
        min_boundary: 2 * g.k() as u64 * m as u64 - 2 * best,
        witnesses: pool.into_vec(),
        exhaustive: false,
    })
}

struct State<'a> {
    g: &'a PLGraph,
    members: Vec<Point>,
    position: HashMap<Point, usize>,
    internal: u64,
}

impl<'a> State<'a> {
    /// Grows from the origin, each time adding a frontier point with the
    /// most neighbours in the set; ties are broken at random.
    fn greedy(g: &'a PLGraph, m: usize, rng: &mut ChaCha8Rng) -> Self {
        let origin = vec![0i64; g.dim()];
        let mut state = State {
            g,
            members: vec![origin.clone()],
            position: HashMap::from([(origin.clone(), 0)]),
            internal: 0,
        };
        let mut frontier: BTreeMap<Point, u64> = BTreeMap::new();
        for y in g.neighbors(&origin) {
            *frontier.entry(y).or_default() += 1;
        }
        while state.members.len() < m {
            let top = *frontier.values().max().expect("frontier is never empty");
            let ties: Vec<&Point> = frontier.iter().filter(|(_, &c)| c == top).map(|(p, _)| p).collect();
            let pick = ties[rng.gen_range(0..ties.len())].clone();
            frontier.remove(&pick);
            state.internal += top;
            for y in g.neighbors(&pick) {
                if !state.contains(&y) {
                    *frontier.entry(y).or_default() += 1;
                }
            }
            state.position.insert(pick.clone(), state.members.len());
            state.members.push(pick);
        }
        state
    }

    fn contains(&self, x: &[i64]) -> bool {
        self.position.contains_key(x)
    }

    /// Neighbours of `x` in the set, not counting `skip`.
    fn degree_in(&self, x: &[i64], skip: Option<&Point>) -> u64 {
        self.g
            .neighbors(x)
            .filter(|y| Some(y) != skip && self.contains(y))
            .count() as u64
    }

    fn replace(&mut self, old: &Point, new: Point) {
        let i = self.position.remove(old).expect("member");
        self.position.insert(new.clone(), i);
        self.members[i] = new;
    }

    fn snapshot(&self) -> LatticeSet {
        LatticeSet::new(self.g.dim(), self.members.iter().cloned()).expect("consistent dimension")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::builtin_graph;
    use crate::graph::edge_boundary_direct;
    use std::collections::HashSet;

    fn distinct(points: &[Point]) -> bool {
        points.iter().collect::<HashSet<_>>().len() == points.len()
    }

    fn graph(name: &str) -> PLGraph {
        builtin_graph(name).unwrap().graph().unwrap()
    }

    #[test]
    fn small_targets() {
        let linf = graph("linf:2");
        for seed in 0..3 {
            assert!(local_search_min_boundary(&linf, 4, 2000, seed).unwrap().min_boundary <= 20);
        }
        let tri = graph("tri");
        assert!(local_search_min_boundary(&tri, 7, 5000, 1).unwrap().min_boundary <= 18);
    }

    #[test]
    fn witnesses_recount() {
        let g = graph("linf:2");
        let r = local_search_min_boundary(&g, 9, 3000, 7).unwrap();
        assert!(!r.exhaustive);
        assert!(!r.witnesses.is_empty());
        for w in &r.witnesses {
            assert_eq!(w.len(), 9);
            assert!(distinct(w.points()));
            assert_eq!(edge_boundary_direct(&g, w).unwrap(), r.min_boundary);
        }
    }

    #[test]
    fn deterministic_per_seed() {
        let g = graph("tri");
        let a = local_search_min_boundary(&g, 12, 4000, 42).unwrap();
        let b = local_search_min_boundary(&g, 12, 4000, 42).unwrap();
        assert_eq!(a, b);
    }
}
