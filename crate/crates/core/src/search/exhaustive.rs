use std::collections::HashMap;

use super::{is_connected, SearchOptions, SearchResult, WitnessPool};
use crate::error::{Error, Result};
use crate::graph::{LatticeSet, PLGraph, Point};

/// Exact minimum over all `m`-sets whose canonical translate lies in
/// `[-r, r]^n`, with default options.
pub fn exhaustive_min_boundary(g: &PLGraph, m: usize, box_radius: i64) -> Result<SearchResult> {
    exhaustive_search(g, m, box_radius, &SearchOptions::default())
}

/// Every canonical set contains the origin as its smallest point, so the
/// search picks `m - 1` points among the box points lexicographically after
/// the origin. Points join in increasing order, and a point's neighbours
/// that precede it are exactly `x - v_i`, so each step adds at most `k`
/// internal edges; that bound prunes branches that cannot tie the best.
pub fn exhaustive_search(g: &PLGraph, m: usize, box_radius: i64, opts: &SearchOptions) -> Result<SearchResult> {
    if m == 0 {
        return Err(Error::NonPositive("cardinality 0".into()));
    }
    if box_radius < 0 {
        return Err(Error::NonPositive(format!("box radius {box_radius}")));
    }
    let n = g.dim();
    let origin = vec![0i64; n];
    let candidates = box_points_after_origin(n, box_radius);
    let picks = m - 1;
    let estimate = binomial(candidates.len() as u128, picks as u128);
    if estimate > opts.budget {
        return Err(Error::BudgetExceeded {
            estimate,
            budget: opts.budget,
        });
    }
    if picks > candidates.len() {
        return Err(Error::Inconsistent(format!(
            "a box of radius {box_radius} cannot hold {m} points"
        )));
    }

    let index: HashMap<&Point, usize> = candidates.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut lower: Vec<Vec<usize>> = Vec::with_capacity(candidates.len());
    let mut origin_adjacent: Vec<u32> = Vec::with_capacity(candidates.len());
    for x in &candidates {
        let mut below = Vec::new();
        let mut touches_origin = 0;
        for v in g.generators() {
            let y: Point = x.iter().zip(v).map(|(a, b)| a - b).collect();
            if y == origin {
                touches_origin += 1;
            } else if let Some(&j) = index.get(&y) {
                below.push(j);
            }
        }
        lower.push(below);
        origin_adjacent.push(touches_origin);
    }

    let mut state = Dfs {
        g,
        opts,
        candidates: &candidates,
        lower: &lower,
        origin_adjacent: &origin_adjacent,
        k: g.k() as i64,
        picks,
        chosen: vec![false; candidates.len()],
        stack: Vec::with_capacity(picks),
        best: -1,
        pool: WitnessPool::new(n, opts),
        origin: origin.clone(),
    };
    state.run(0, 0);
    if state.best < 0 {
        return Err(Error::Inconsistent("no admissible set in the box".into()));
    }
    let best = state.best as u64;
    let boundary = 2 * g.k() as u64 * m as u64 - 2 * best;
    Ok(SearchResult {
        cardinality: m,
        min_boundary: boundary,
        witnesses: state.pool.into_vec(),
        exhaustive: true,
    })
}

struct Dfs<'a> {
    g: &'a PLGraph,
    opts: &'a SearchOptions,
    candidates: &'a [Point],
    lower: &'a [Vec<usize>],
    origin_adjacent: &'a [u32],
    k: i64,
    picks: usize,
    chosen: Vec<bool>,
    stack: Vec<usize>,
    /// Most internal edges seen so far.
    best: i64,
    pool: WitnessPool,
    origin: Point,
}

impl Dfs<'_> {
    fn run(&mut self, start: usize, internal: i64) {
        let depth = self.stack.len();
        if depth == self.picks {
            self.leaf(internal);
            return;
        }
        let remaining = self.picks - depth;
        if internal + remaining as i64 * self.k < self.best {
            return;
        }
        let last = self.candidates.len() - remaining;
        for i in start..=last {
            let added = i64::from(self.origin_adjacent[i])
                + self.lower[i].iter().filter(|&&j| self.chosen[j]).count() as i64;
            self.chosen[i] = true;
            self.stack.push(i);
            self.run(i + 1, internal + added);
            self.stack.pop();
            self.chosen[i] = false;
        }
    }

    fn leaf(&mut self, internal: i64) {
        if internal < self.best {
            return;
        }
        let points = || {
            std::iter::once(self.origin.clone())
                .chain(self.stack.iter().map(|&i| self.candidates[i].clone()))
                .collect::<Vec<Point>>()
        };
        if self.opts.connected_only && !is_connected(self.g, &points()) {
            return;
        }
        if internal > self.best {
            self.best = internal;
            self.pool.clear();
        }
        if !self.pool.full() {
            let set = LatticeSet::new(self.origin.len(), points()).expect("consistent dimension");
            self.pool.offer(set);
        }
    }
}

/// Points of `[-r, r]^n` lexicographically greater than the origin, sorted.
fn box_points_after_origin(n: usize, r: i64) -> Vec<Point> {
    let mut out = Vec::new();
    let mut cur = vec![-r; n];
    loop {
        if cur.iter().find(|&&c| c != 0).is_some_and(|&c| c > 0) {
            out.push(cur.clone());
        }
        let mut axis = n;
        loop {
            if axis == 0 {
                return out;
            }
            axis -= 1;
            if cur[axis] < r {
                cur[axis] += 1;
                for c in cur.iter_mut().skip(axis + 1) {
                    *c = -r;
                }
                break;
            }
        }
    }
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul(n - i) / (i + 1);
    }
    acc
}
