//! Minimum edge-boundary sets: exhaustive and heuristic search, zonotope
//! point sets and convergence experiments.

mod convergence;
mod exhaustive;
mod local;
mod shape;

use std::collections::{BTreeSet, HashSet, VecDeque};

pub use convergence::{convergence_experiment, zonotope_point_set, ConvergenceRow, ZonotopePointSet};
pub use exhaustive::{exhaustive_min_boundary, exhaustive_search};
pub use local::{local_search_min_boundary, local_search};
pub use shape::{analyze_result, limiting_shape_report, zonotope_sets, ShapeRow, ZonotopeSet};

use crate::catalog::SignedPermutation;
use crate::graph::{LatticeSet, PLGraph, Point};

/// Environment variable overriding [`DEFAULT_BUDGET`].
pub const BUDGET_VAR: &str = "ISOZONO_BUDGET";
pub const DEFAULT_BUDGET: u128 = 500_000_000;

/// The enumeration budget, from `ISOZONO_BUDGET` when set and valid.
pub fn budget_from_env() -> u128 {
    std::env::var(BUDGET_VAR)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_BUDGET)
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SearchResult {
    pub cardinality: usize,
    pub min_boundary: u64,
    /// Canonical translates, in lexicographic order.
    pub witnesses: Vec<LatticeSet>,
    /// True when the value is proven minimal over the searched region.
    pub exhaustive: bool,
}

#[derive(Clone, Debug)]
pub struct SearchOptions {
    pub witness_cap: usize,
    pub budget: u128,
    /// Only count connected sets.
    pub connected_only: bool,
    /// Witnesses equivalent under this group keep one representative.
    pub symmetry: Vec<SignedPermutation>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            witness_cap: 100,
            budget: budget_from_env(),
            connected_only: false,
            symmetry: Vec::new(),
        }
    }
}

/// Closure of `hints` under composition, identity included.
pub fn symmetry_group(dim: usize, hints: &[SignedPermutation]) -> Vec<SignedPermutation> {
    let identity = SignedPermutation {
        perm: (0..dim).collect(),
        signs: vec![1; dim],
    };
    let mut seen: HashSet<SignedPermutation> = HashSet::new();
    seen.insert(identity.clone());
    let mut queue = VecDeque::from([identity]);
    while let Some(g) = queue.pop_front() {
        for h in hints {
            // (h ∘ g)(x)_i = h.signs[i] * g(x)[h.perm[i]]
            let perm: Vec<usize> = h.perm.iter().map(|&p| g.perm[p]).collect();
            let signs: Vec<i64> = h
                .perm
                .iter()
                .zip(&h.signs)
                .map(|(&p, &s)| s * g.signs[p])
                .collect();
            let composed = SignedPermutation { perm, signs };
            if seen.insert(composed.clone()) {
                queue.push_back(composed);
            }
        }
    }
    let mut out: Vec<SignedPermutation> = seen.into_iter().collect();
    out.sort_by(|a, b| (&a.perm, &a.signs).cmp(&(&b.perm, &b.signs)));
    out
}

/// Smallest canonical translate over the group orbit.
pub fn orbit_canonical(s: &LatticeSet, group: &[SignedPermutation]) -> LatticeSet {
    let base = s.canonical();
    group
        .iter()
        .map(|g| {
            LatticeSet::new(s.dim(), s.points().iter().map(|p| g.apply(p)))
                .expect("dimension preserved")
                .canonical()
        })
        .min()
        .unwrap_or(base)
}

pub fn is_connected(g: &PLGraph, points: &[Point]) -> bool {
    let Some(first) = points.first() else {
        return true;
    };
    let set: HashSet<&Point> = points.iter().collect();
    let mut seen: HashSet<Point> = HashSet::from([first.clone()]);
    let mut queue = VecDeque::from([first.clone()]);
    while let Some(x) = queue.pop_front() {
        for y in g.neighbors(&x) {
            if set.contains(&y) && seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen.len() == set.len()
}

/// Collects tied witnesses up to a cap, optionally one per symmetry orbit.
struct WitnessPool {
    cap: usize,
    group: Vec<SignedPermutation>,
    orbits: HashSet<LatticeSet>,
    sets: BTreeSet<LatticeSet>,
}

impl WitnessPool {
    fn new(dim: usize, opts: &SearchOptions) -> Self {
        WitnessPool {
            cap: opts.witness_cap,
            group: if opts.symmetry.is_empty() {
                Vec::new()
            } else {
                symmetry_group(dim, &opts.symmetry)
            },
            orbits: HashSet::new(),
            sets: BTreeSet::new(),
        }
    }

    fn clear(&mut self) {
        self.orbits.clear();
        self.sets.clear();
    }

    fn full(&self) -> bool {
        self.sets.len() >= self.cap
    }

    fn offer(&mut self, s: LatticeSet) {
        if self.full() {
            return;
        }
        let s = s.canonical();
        if !self.group.is_empty() && !self.orbits.insert(orbit_canonical(&s, &self.group)) {
            return;
        }
        self.sets.insert(s);
    }

    fn into_vec(self) -> Vec<LatticeSet> {
        self.sets.into_iter().collect()
    }
}
