//! Face counting by closing vertex-facet incidences under intersection.

use std::collections::{BTreeMap, HashSet};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

use super::polytope::Polytope;

/// Face counts `(f_0, ..., f_{n-1})` of an `n`-polytope.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FVector(pub Vec<usize>);

impl FVector {
    /// `sum (-1)^i f_i == 1 - (-1)^n`.
    pub fn satisfies_euler(&self) -> bool {
        let n = self.0.len();
        let alt: i64 = self
            .0
            .iter()
            .enumerate()
            .map(|(i, &f)| if i % 2 == 0 { f as i64 } else { -(f as i64) })
            .sum();
        let rhs = if n % 2 == 0 { 0 } else { 2 };
        alt == rhs
    }
}

impl std::fmt::Display for FVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

/// f-vector from a vertex-facet incidence table (`facets[j]` lists the
/// vertices on facet `j`) of an `n`-polytope with `vertex_count` vertices.
///
/// The facets of a `k`-face `F` are the inclusion-maximal proper nonempty
/// sets `F ∩ G` over facets `G`, so the lattice is generated level by level.
pub fn f_vector_from_incidence(n: usize, vertex_count: usize, facets: &[Vec<usize>]) -> FVector {
    let mut counts = vec![0usize; n];
    if n == 0 {
        return FVector(counts);
    }
    counts[0] = vertex_count;
    if n == 1 {
        return FVector(counts);
    }
    let mut vertex_facets: Vec<Vec<usize>> = vec![Vec::new(); vertex_count];
    for (j, f) in facets.iter().enumerate() {
        for &v in f {
            vertex_facets[v].push(j);
        }
    }
    let mut level: Vec<Vec<usize>> = facets
        .iter()
        .map(|f| {
            let mut f = f.clone();
            f.sort_unstable();
            f
        })
        .collect::<HashSet<_>>()
        .into_iter()
        .collect();
    level.sort();
    counts[n - 1] = level.len();
    for k in (1..n - 1).rev() {
        let mut next: HashSet<Vec<usize>> = HashSet::new();
        for face in &level {
            for sub in maximal_subfaces(face, &vertex_facets) {
                next.insert(sub);
            }
        }
        counts[k] = next.len();
        level = next.into_iter().collect();
        level.sort();
    }
    FVector(counts)
}

fn maximal_subfaces(face: &[usize], vertex_facets: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut by_facet: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &v in face {
        for &g in &vertex_facets[v] {
            by_facet.entry(g).or_default().push(v);
        }
    }
    let mut candidates: Vec<Vec<usize>> = by_facet
        .into_values()
        .filter(|s| s.len() < face.len())
        .collect::<HashSet<_>>()
        .into_iter()
        .collect();
    candidates.sort_by_key(|s| std::cmp::Reverse(s.len()));
    let mut maximal: Vec<Vec<usize>> = Vec::new();
    for c in candidates {
        if !maximal.iter().any(|m| is_subset(&c, m)) {
            maximal.push(c);
        }
    }
    maximal
}

fn is_subset(small: &[usize], big: &[usize]) -> bool {
    let mut j = 0;
    for &x in small {
        while j < big.len() && big[j] < x {
            j += 1;
        }
        if j == big.len() || big[j] != x {
            return false;
        }
        j += 1;
    }
    true
}

/// f-vector of a full-dimensional polytope.
pub fn polytope_f_vector<T: Scalar>(p: &Polytope<T>) -> Result<FVector> {
    if !p.is_full_dimensional() {
        return Err(Error::NotFullDimensional {
            actual: p.dim(),
            ambient: p.ambient_dim(),
        });
    }
    let complete = p.complete()?;
    let verts = complete.vertex_list()?.len();
    Ok(f_vector_from_incidence(p.ambient_dim(), verts, &complete.incidence()?))
}
