use std::collections::BTreeSet;

use num_traits::Zero;

use super::{exhaustive_search, SearchOptions, SearchResult};
use crate::error::Result;
use crate::geometry::{convex_hull, Vector};
use crate::graph::{LatticeSet, PLGraph, Point};
use crate::scalar::Scalar;
use crate::zonotope::Zonotope;
use crate::Rational;

/// `Z^n ∩ (αZ + t)` for a shift `t ∈ {0, 1/2}^n`, stored as its canonical
/// translate. `alpha` is the smallest scale producing the set (zero for the
/// single centre point).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ZonotopeSet {
    pub alpha: Rational,
    pub shift: Vec<Rational>,
    pub set: LatticeSet,
}

/// Every distinct set `Z^n ∩ (αZ + t)` with at most `max_points` points.
pub fn zonotope_sets(g: &PLGraph, max_points: usize) -> Result<Vec<ZonotopeSet>> {
    let n = g.dim();
    let z = Zonotope::from_graph(g);
    let normals = z.facet_normals();
    let supports: Vec<Rational> = normals.iter().map(|u| Rational::from_i64(z.support(u))).collect();
    // max_i h(e_i) bounds the sup-norm of Z, so a point outside [-R, R]^n has
    // gauge at least (R + 1/2) / reach for any shift in [0, 1/2]^n.
    let reach = (0..n)
        .map(|i| {
            let mut e = vec![0; n];
            e[i] = 1;
            z.support(&e)
        })
        .max()
        .unwrap_or(1);
    let half = Rational::new(1.into(), 2.into());

    let mut seen: BTreeSet<LatticeSet> = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0..(1u32 << n) {
        let shift: Vec<Rational> = (0..n)
            .map(|i| if mask >> i & 1 == 1 { half.clone() } else { Rational::zero() })
            .collect();
        let mut radius = 1i64;
        let ranked = loop {
            let mut ranked: Vec<(Rational, Point)> = box_points(n, radius)
                .into_iter()
                .map(|x| (gauge(&normals, &supports, &x, &shift), x))
                .collect();
            ranked.sort();
            let safe = Rational::new((2 * radius + 1).into(), (2 * reach).into());
            if ranked.len() > max_points && ranked[max_points].0 < safe {
                break ranked;
            }
            radius *= 2;
        };
        let mut i = 0;
        while i < ranked.len() {
            let level = ranked[i].0.clone();
            let mut j = i;
            while j < ranked.len() && ranked[j].0 == level {
                j += 1;
            }
            if j > max_points {
                break;
            }
            let set = LatticeSet::new(n, ranked[..j].iter().map(|(_, x)| x.clone()))?.canonical();
            if seen.insert(set.clone()) {
                out.push(ZonotopeSet {
                    alpha: level,
                    shift: shift.clone(),
                    set,
                });
            }
            i = j;
        }
    }
    out.sort_by(|a, b| (a.set.len(), &a.alpha, &a.set).cmp(&(b.set.len(), &b.alpha, &b.set)));
    Ok(out)
}

fn gauge(normals: &[Point], supports: &[Rational], x: &[i64], shift: &[Rational]) -> Rational {
    normals
        .iter()
        .zip(supports)
        .map(|(u, h)| {
            let dot = u
                .iter()
                .zip(x.iter().zip(shift))
                .fold(Rational::zero(), |acc, (&c, (&xi, t))| {
                    acc + Rational::from_i64(c) * (Rational::from_i64(xi) - t)
                });
            dot / h
        })
        .max()
        .unwrap_or_else(Rational::zero)
}

fn box_points(n: usize, r: i64) -> Vec<Point> {
    let mut out = Vec::new();
    let mut cur = vec![-r; n];
    loop {
        out.push(cur.clone());
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

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ShapeRow {
    pub cardinality: usize,
    pub min_boundary: u64,
    pub exhaustive: bool,
    /// Zonotope sets of this cardinality.
    pub candidates: Vec<ZonotopeSet>,
    /// Candidates that are also witnesses.
    pub matches: Vec<ZonotopeSet>,
    /// Facet count of each witness hull, in witness order.
    pub witness_hull_facets: Vec<usize>,
}

impl ShapeRow {
    pub fn matched(&self) -> bool {
        !self.matches.is_empty()
    }
}

/// Compares a search result's witnesses with the zonotope sets of the same
/// cardinality.
pub fn analyze_result(g: &PLGraph, result: &SearchResult) -> Result<ShapeRow> {
    let m = result.cardinality;
    let candidates: Vec<ZonotopeSet> = zonotope_sets(g, m)?
        .into_iter()
        .filter(|z| z.set.len() == m)
        .collect();
    let witnesses: BTreeSet<LatticeSet> = result.witnesses.iter().map(LatticeSet::canonical).collect();
    let matches = candidates
        .iter()
        .filter(|z| witnesses.contains(&z.set))
        .cloned()
        .collect();
    let witness_hull_facets = result
        .witnesses
        .iter()
        .map(hull_facet_count)
        .collect::<Result<Vec<usize>>>()?;
    Ok(ShapeRow {
        cardinality: m,
        min_boundary: result.min_boundary,
        exhaustive: result.exhaustive,
        candidates,
        matches,
        witness_hull_facets,
    })
}

/// Exhaustive search for every `m <= m_max`, each analysed as above.
pub fn limiting_shape_report(g: &PLGraph, m_max: usize, box_radius: i64) -> Result<Vec<ShapeRow>> {
    let opts = SearchOptions::default();
    (1..=m_max)
        .map(|m| analyze_result(g, &exhaustive_search(g, m, box_radius, &opts)?))
        .collect()
}

/// Number of facets of the convex hull, counted in its affine hull.
pub fn hull_facet_count(s: &LatticeSet) -> Result<usize> {
    let pts: Vec<Vector<Rational>> = s.points().iter().map(|p| Vector::from_ints(p)).collect();
    let hull = convex_hull(&pts)?;
    if let Some(f) = hull.facets() {
        return Ok(f.len());
    }
    Ok(hull.affine_hull().map_or(0, |a| a.chart_facets.len()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::builtin_graph;

    fn graph(name: &str) -> PLGraph {
        builtin_graph(name).unwrap().graph().unwrap()
    }

    #[test]
    fn l1_box_sets() {
        let sets = zonotope_sets(&graph("l1:2"), 9).unwrap();
        let sizes: Vec<usize> = sets.iter().map(|z| z.set.len()).collect();
        assert_eq!(sizes, vec![1, 2, 2, 4, 6, 6, 9]);
    }

    #[test]
    fn octagon_is_a_zonotope_set() {
        let sets = zonotope_sets(&graph("linf:2"), 37).unwrap();
        let oct = sets.iter().find(|z| z.set.len() == 37).unwrap();
        assert_eq!(oct.alpha, Rational::from_i64(1));
        assert_eq!(hull_facet_count(&oct.set).unwrap(), 8);
    }

    #[test]
    fn report_rows() {
        let rows = limiting_shape_report(&graph("l1:2"), 5, 2).unwrap();
        assert!(rows[0].matched());
        assert!(rows[3].matched());
        assert_eq!(rows[3].witness_hull_facets, vec![4]);
        assert!(rows[4].candidates.is_empty());
        assert!(!rows[4].matched());
        let linf = limiting_shape_report(&graph("linf:2"), 1, 1).unwrap();
        assert!(linf[0].matched());
        assert_eq!(linf[0].witness_hull_facets, vec![0]);
    }
}
