//! Primitive-lattice graphs and edge boundaries of finite vertex sets.
//!
//! A PL graph on `Z^n` joins every `x` to `x ± v_i` for a fixed list of
//! primitive, pairwise non-antipodal generators `v_1..v_k` spanning `R^n`.

use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::linalg::{gcd_all, int_rank, sign_normalize};

/// A lattice point.
pub type Point = Vec<i64>;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PLGraph {
    dim: usize,
    generators: Vec<Point>,
}

impl PLGraph {
    /// Validates generators and puts them in canonical order: each sign
    /// normalised (first nonzero coordinate positive), then sorted.
    pub fn new(dim: usize, raw_generators: &[Point]) -> Result<Self> {
        validate_pl_graph(dim, raw_generators)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Point] {
        &self.generators
    }

    /// Number of generators `k`; every vertex has degree `2k`.
    pub fn k(&self) -> usize {
        self.generators.len()
    }

    pub fn degree(&self) -> usize {
        2 * self.generators.len()
    }

    /// The `2k` neighbours of `x`.
    pub fn neighbors<'a>(&'a self, x: &'a [i64]) -> impl Iterator<Item = Point> + 'a {
        self.generators.iter().flat_map(move |v| {
            [
                x.iter().zip(v).map(|(a, b)| a + b).collect::<Point>(),
                x.iter().zip(v).map(|(a, b)| a - b).collect::<Point>(),
            ]
        })
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i >= self.generators.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                count: self.generators.len(),
            });
        }
        Ok(())
    }

    fn check_set(&self, s: &LatticeSet) -> Result<()> {
        if s.dim != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: s.dim,
            });
        }
        Ok(())
    }
}

pub fn validate_pl_graph(dim: usize, raw_generators: &[Point]) -> Result<PLGraph> {
    if dim == 0 {
        return Err(Error::BadDimension { dim, min: 1 });
    }
    for v in raw_generators {
        if v.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: v.len(),
            });
        }
        if gcd_all(v) != 1 {
            return Err(Error::NonPrimitive(v.clone()));
        }
    }
    for (i, a) in raw_generators.iter().enumerate() {
        for b in &raw_generators[i + 1..] {
            if a.iter().zip(b).all(|(x, y)| *x == -y) {
                return Err(Error::AntipodalPair(a.clone(), b.clone()));
            }
            if a == b {
                return Err(Error::DuplicateGenerator(a.clone()));
            }
        }
    }
    let mut generators: Vec<Point> = raw_generators.iter().map(|v| sign_normalize(v)).collect();
    generators.sort();
    let rank = int_rank(&generators);
    if rank < dim {
        return Err(Error::RankDeficient { rank, dim });
    }
    Ok(PLGraph { dim, generators })
}

/// A finite set of lattice points, kept sorted and duplicate-free.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct LatticeSet {
    dim: usize,
    points: Vec<Point>,
}

impl LatticeSet {
    pub fn new(dim: usize, points: impl IntoIterator<Item = Point>) -> Result<Self> {
        let mut points: Vec<Point> = points.into_iter().collect();
        for p in &points {
            if p.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: p.len(),
                });
            }
        }
        points.sort();
        points.dedup();
        Ok(LatticeSet { dim, points })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, x: &[i64]) -> bool {
        self.points.binary_search_by(|p| p.as_slice().cmp(x)).is_ok()
    }

    pub fn translate(&self, t: &[i64]) -> LatticeSet {
        LatticeSet {
            dim: self.dim,
            points: self
                .points
                .iter()
                .map(|p| p.iter().zip(t).map(|(a, b)| a + b).collect())
                .collect(),
        }
    }

    /// Translate whose lexicographically smallest point is the origin.
    pub fn canonical(&self) -> LatticeSet {
        match self.points.first() {
            Some(first) => {
                let shift: Point = first.iter().map(|c| -c).collect();
                self.translate(&shift)
            }
            None => self.clone(),
        }
    }

    /// One point per line, coordinates separated by spaces.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for p in &self.points {
            let row: Vec<String> = p.iter().map(|c| c.to_string()).collect();
            writeln!(out, "{}", row.join(" ")).unwrap();
        }
        out
    }

    /// Parses the one-point-per-line format. Blank lines and `#` comments
    /// are skipped; all rows must have `dim` integers.
    pub fn from_text(dim: usize, text: &str) -> Result<Self> {
        let mut points = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let p: Point = line
                .split_whitespace()
                .map(|t| t.parse::<i64>().map_err(|_| Error::parse(idx + 1, format!("bad integer {t:?}"))))
                .collect::<Result<_>>()?;
            if p.len() != dim {
                return Err(Error::parse(
                    idx + 1,
                    format!("expected {dim} coordinates, found {}", p.len()),
                ));
            }
            points.push(p);
        }
        LatticeSet::new(dim, points)
    }
}

/// Edges with exactly one endpoint in `s`.
pub fn edge_boundary_direct(g: &PLGraph, s: &LatticeSet) -> Result<u64> {
    g.check_set(s)?;
    let mut count = 0u64;
    for x in &s.points {
        for y in g.neighbors(x) {
            if !s.contains(&y) {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// Groups `s` into lines parallel to generator `v` (primitive): each point
/// `x` is written `x = r + t v` with `r` the class representative whose
/// pivot coordinate lies in `[0, v_j)`. Values are the sorted `t`s.
fn lines_along(v: &[i64], s: &LatticeSet) -> BTreeMap<Point, Vec<i64>> {
    let j = v.iter().position(|&c| c != 0).expect("generator is nonzero");
    let vj = v[j];
    let mut lines: BTreeMap<Point, Vec<i64>> = BTreeMap::new();
    for x in &s.points {
        let t = x[j].div_euclid(vj);
        let r: Point = x.iter().zip(v).map(|(a, b)| a - t * b).collect();
        lines.entry(r).or_default().push(t);
    }
    for ts in lines.values_mut() {
        ts.sort_unstable();
    }
    lines
}

/// `|gap_{v_i}(S)|`: points `x ∉ S` with `x - v_i ∈ S` and `x + b v_i ∈ S`
/// for some `b >= 1`.
pub fn gap_count(g: &PLGraph, s: &LatticeSet, i: usize) -> Result<u64> {
    g.check_set(s)?;
    g.check_index(i)?;
    Ok(lines_along(&g.generators[i], s)
        .values()
        .map(|ts| ts.windows(2).filter(|w| w[1] - w[0] > 1).count() as u64)
        .sum())
}

/// `|P_{v_i}(S)|`: classes of `S` under `x ~ y ⇔ x - y ∈ Z v_i`.
pub fn projection_count(g: &PLGraph, s: &LatticeSet, i: usize) -> Result<u64> {
    g.check_set(s)?;
    g.check_index(i)?;
    Ok(lines_along(&g.generators[i], s).len() as u64)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct GeneratorCounts {
    pub projection_count: u64,
    pub gap_count: u64,
}

/// Both sides of `|∂_e S| = 2 Σ_i (|P_{v_i}(S)| + |gap_{v_i}(S)|)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EdgeBoundaryReport {
    pub direct_count: u64,
    pub per_generator: Vec<GeneratorCounts>,
    pub identity_holds: bool,
}

impl EdgeBoundaryReport {
    pub fn formula_count(&self) -> u64 {
        2 * self
            .per_generator
            .iter()
            .map(|c| c.projection_count + c.gap_count)
            .sum::<u64>()
    }

    pub fn has_gaps(&self) -> bool {
        self.per_generator.iter().any(|c| c.gap_count > 0)
    }
}

pub fn boundary_identity_report(g: &PLGraph, s: &LatticeSet) -> Result<EdgeBoundaryReport> {
    let direct_count = edge_boundary_direct(g, s)?;
    let per_generator = (0..g.k())
        .map(|i| {
            Ok(GeneratorCounts {
                projection_count: projection_count(g, s, i)?,
                gap_count: gap_count(g, s, i)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let mut report = EdgeBoundaryReport {
        direct_count,
        per_generator,
        identity_holds: false,
    };
    report.identity_holds = report.formula_count() == direct_count;
    Ok(report)
}

/// Number of unordered adjacent pairs inside `s`.
pub fn internal_edges(g: &PLGraph, s: &LatticeSet) -> u64 {
    let set: HashSet<&[i64]> = s.points.iter().map(|p| p.as_slice()).collect();
    let mut count = 0;
    for x in &s.points {
        for v in &g.generators {
            let y: Point = x.iter().zip(v).map(|(a, b)| a + b).collect();
            if set.contains(y.as_slice()) {
                count += 1;
            }
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn l1() -> PLGraph {
        PLGraph::new(2, &[vec![1, 0], vec![0, 1]]).unwrap()
    }

    fn linf2() -> PLGraph {
        PLGraph::new(2, &[vec![1, 0], vec![0, 1], vec![1, 1], vec![1, -1]]).unwrap()
    }

    fn set(points: &[[i64; 2]]) -> LatticeSet {
        LatticeSet::new(2, points.iter().map(|p| p.to_vec())).unwrap()
    }

    fn grid3() -> LatticeSet {
        let mut pts = Vec::new();
        for x in 0..3 {
            for y in 0..3 {
                pts.push([x, y]);
            }
        }
        set(&pts)
    }

    #[test]
    fn validation_errors() {
        assert!(PLGraph::new(2, &[vec![1, 0], vec![0, 1]]).is_ok());
        assert_eq!(
            PLGraph::new(2, &[vec![2, 0], vec![0, 1]]),
            Err(Error::NonPrimitive(vec![2, 0]))
        );
        assert_eq!(
            PLGraph::new(2, &[vec![1, 0], vec![-1, 0]]),
            Err(Error::AntipodalPair(vec![1, 0], vec![-1, 0]))
        );
        assert_eq!(
            PLGraph::new(2, &[vec![1, 0], vec![1, 0], vec![0, 1]]),
            Err(Error::DuplicateGenerator(vec![1, 0]))
        );
        assert_eq!(
            PLGraph::new(2, &[vec![1, 1]]),
            Err(Error::RankDeficient { rank: 1, dim: 2 })
        );
        assert_eq!(PLGraph::new(2, &[vec![0, 0], vec![1, 0]]), Err(Error::NonPrimitive(vec![0, 0])));
    }

    #[test]
    fn canonical_generator_order() {
        let g = PLGraph::new(2, &[vec![-1, 1], vec![0, -1], vec![1, 0]]).unwrap();
        assert_eq!(g.generators(), &[vec![0, 1], vec![1, -1], vec![1, 0]]);
    }

    #[test]
    fn direct_boundaries() {
        assert_eq!(edge_boundary_direct(&l1(), &set(&[[5, -2]])).unwrap(), 4);
        assert_eq!(edge_boundary_direct(&l1(), &grid3()).unwrap(), 12);
        assert_eq!(edge_boundary_direct(&linf2(), &set(&[[0, 0]])).unwrap(), 8);
        let s3 = LatticeSet::new(3, vec![vec![0, 0, 0]]).unwrap();
        assert!(matches!(
            edge_boundary_direct(&l1(), &s3),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn gaps_along_x() {
        let g = l1();
        let x = g.generators().iter().position(|v| v == &vec![1, 0]).unwrap();
        assert_eq!(gap_count(&g, &set(&[[0, 0], [2, 0]]), x).unwrap(), 1);
        assert_eq!(gap_count(&g, &set(&[[0, 0], [1, 0], [2, 0]]), x).unwrap(), 0);
        assert_eq!(gap_count(&g, &set(&[[0, 0], [1, 0], [3, 0], [5, 0]]), x).unwrap(), 2);
        assert!(gap_count(&g, &set(&[[0, 0]]), 7).is_err());
    }

    #[test]
    fn projections() {
        let g = l1();
        let x = g.generators().iter().position(|v| v == &vec![1, 0]).unwrap();
        assert_eq!(projection_count(&g, &grid3(), x).unwrap(), 3);
        let diag = PLGraph::new(2, &[vec![1, 1], vec![1, 0]]).unwrap();
        let d = diag.generators().iter().position(|v| v == &vec![1, 1]).unwrap();
        assert_eq!(projection_count(&diag, &set(&[[0, 0], [2, 2]]), d).unwrap(), 1);
        assert_eq!(projection_count(&diag, &set(&[[0, 0], [1, 2]]), d).unwrap(), 2);
    }

    #[test]
    fn identity_examples() {
        let r = boundary_identity_report(&l1(), &set(&[[0, 0], [2, 0]])).unwrap();
        assert_eq!(r.direct_count, 8);
        // generators sorted: (0,1), (1,0)
        assert_eq!(
            r.per_generator,
            vec![
                GeneratorCounts { projection_count: 2, gap_count: 0 },
                GeneratorCounts { projection_count: 1, gap_count: 1 },
            ]
        );
        assert!(r.identity_holds);
        let r = boundary_identity_report(&l1(), &grid3()).unwrap();
        assert_eq!(r.direct_count, 12);
        assert_eq!(r.formula_count(), 12);
        assert!(!r.has_gaps());
    }

    #[test]
    fn singleton_has_full_degree() {
        let g = PLGraph::new(3, &[vec![1, 2, 3], vec![0, 1, 0], vec![0, 0, 1], vec![1, 1, 1]]).unwrap();
        let s = LatticeSet::new(3, vec![vec![4, -4, 9]]).unwrap();
        let r = boundary_identity_report(&g, &s).unwrap();
        assert_eq!(r.direct_count, 2 * g.k() as u64);
        assert!(r.identity_holds);
    }

    #[test]
    fn text_format() {
        let s = set(&[[1, -2], [0, 3]]);
        let text = s.to_text();
        assert_eq!(text, "0 3\n1 -2\n");
        assert_eq!(LatticeSet::from_text(2, &text).unwrap(), s);
        assert!(matches!(
            LatticeSet::from_text(2, "0 0\n1\n"),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    fn arb_set() -> impl Strategy<Value = LatticeSet> {
        proptest::collection::vec((-6i64..=6, -6i64..=6), 1..30)
            .prop_map(|pts| LatticeSet::new(2, pts.into_iter().map(|(a, b)| vec![a, b])).unwrap())
    }

    proptest! {
        #[test]
        fn theorem_identity_on_linf(s in arb_set()) {
            let r = boundary_identity_report(&linf2(), &s).unwrap();
            prop_assert!(r.identity_holds);
        }

        #[test]
        fn translation_invariant(s in arb_set(), tx in -20i64..20, ty in -20i64..20) {
            let g = linf2();
            prop_assert_eq!(
                edge_boundary_direct(&g, &s).unwrap(),
                edge_boundary_direct(&g, &s.translate(&[tx, ty])).unwrap()
            );
        }

        #[test]
        fn degree_bound(s in arb_set()) {
            let g = linf2();
            let b = edge_boundary_direct(&g, &s).unwrap();
            let bound = (g.degree() * s.len()) as u64;
            prop_assert!(b <= bound);
            prop_assert_eq!(b == bound, internal_edges(&g, &s) == 0);
            prop_assert_eq!(b + 2 * internal_edges(&g, &s), bound);
        }

        #[test]
        fn gap_free_sets_use_projections_only(s in arb_set()) {
            let r = boundary_identity_report(&l1(), &s).unwrap();
            if !r.has_gaps() {
                let proj: u64 = r.per_generator.iter().map(|c| c.projection_count).sum();
                prop_assert_eq!(r.direct_count, 2 * proj);
            }
        }
    }
}
