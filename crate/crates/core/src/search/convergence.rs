use num_traits::{One, Zero};

use super::budget_from_env;
use crate::error::{Error, Result};
use crate::functional::continuous_boundary;
use crate::geometry::{Facet, Polytope};
use crate::graph::{edge_boundary_direct, LatticeSet, PLGraph};
use crate::lattice::{box_size, lattice_points};
use crate::scalar::Scalar;
use crate::zonotope::Zonotope;
use crate::Rational;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ZonotopePointSet {
    pub alpha: Rational,
    pub set: LatticeSet,
    pub boundary: u64,
}

/// `Z^n ∩ αZ(G)`.
pub fn zonotope_point_set(g: &PLGraph, alpha: &Rational) -> Result<ZonotopePointSet> {
    point_set(g, alpha, budget_from_env())
}

fn point_set(g: &PLGraph, alpha: &Rational, budget: u128) -> Result<ZonotopePointSet> {
    if *alpha <= Rational::zero() {
        return Err(Error::NonPositive(format!("scale {alpha}")));
    }
    let facets = Zonotope::from_graph(g)
        .hrep::<Rational>()
        .facet_list()?
        .iter()
        .map(|f| Facet {
            normal: f.normal.clone(),
            offset: f.offset.clone() * alpha,
        })
        .collect();
    let scaled = Polytope::from_hrep(g.dim(), facets);
    let estimate = box_size(&scaled)?;
    if estimate > budget {
        return Err(Error::BudgetExceeded { estimate, budget });
    }
    let set = LatticeSet::new(g.dim(), lattice_points(&scaled)?)?;
    let boundary = edge_boundary_direct(g, &set)?;
    Ok(ZonotopePointSet {
        alpha: alpha.clone(),
        set,
        boundary,
    })
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ConvergenceRow {
    pub alpha: Rational,
    /// `|Z^n ∩ αZ|`.
    pub points: u64,
    /// `vol(αZ)`.
    pub volume: Rational,
    pub discrete_boundary: u64,
    /// `b(αZ)`.
    pub continuous_boundary: Rational,
    /// `volume / points`.
    pub vol_ratio: Rational,
    /// `continuous_boundary / discrete_boundary`.
    pub boundary_ratio: Rational,
}

/// One row per scale. Scales must be positive, strictly increasing, and large
/// enough that `αZ` holds more than the origin.
pub fn convergence_experiment(g: &PLGraph, alphas: &[Rational]) -> Result<Vec<ConvergenceRow>> {
    let n = g.dim();
    let z = Zonotope::from_graph(g);
    let unit = z.polytope::<Rational>();
    let unit_volume: Rational = z.volume();
    // b is homogeneous of degree n - 1 in the body.
    let unit_boundary = continuous_boundary(&unit, &z)?.value;
    let budget = budget_from_env();
    let mut rows = Vec::with_capacity(alphas.len());
    for (i, alpha) in alphas.iter().enumerate() {
        if i > 0 && *alpha <= alphas[i - 1] {
            return Err(Error::NotIncreasing);
        }
        let ps = point_set(g, alpha, budget)?;
        let points = ps.set.len() as u64;
        if points <= 1 {
            return Err(Error::DegenerateScale(alpha.to_string()));
        }
        let volume = pow(alpha, n) * unit_volume.clone();
        let continuous = pow(alpha, n - 1) * unit_boundary.clone();
        rows.push(ConvergenceRow {
            alpha: alpha.clone(),
            points,
            vol_ratio: volume.clone() / Rational::from_i64(points as i64),
            boundary_ratio: continuous.clone() / Rational::from_i64(ps.boundary as i64),
            volume,
            discrete_boundary: ps.boundary,
            continuous_boundary: continuous,
        });
    }
    Ok(rows)
}

fn pow(x: &Rational, k: usize) -> Rational {
    (0..k).fold(Rational::one(), |acc, _| acc * x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::builtin_graph;

    fn graph(name: &str) -> PLGraph {
        builtin_graph(name).unwrap().graph().unwrap()
    }

    fn q(s: &str) -> Rational {
        Rational::parse_exact(s).unwrap()
    }

    #[test]
    fn point_sets() {
        assert_eq!(zonotope_point_set(&graph("l1:2"), &q("1")).unwrap().set.len(), 9);
        let oct = zonotope_point_set(&graph("linf:2"), &q("1")).unwrap();
        assert_eq!(oct.set.len(), 37);
        assert_eq!(oct.boundary, 64);
        let tri = graph("tri");
        assert_eq!(zonotope_point_set(&tri, &q("1")).unwrap().set.len(), 19);
        let hex = zonotope_point_set(&tri, &q("1/2")).unwrap();
        assert_eq!(hex.set.len(), 7);
        assert_eq!(hex.boundary, 18);
    }

    #[test]
    fn l1_rows() {
        let rows = convergence_experiment(&graph("l1:2"), &[q("10"), q("50")]).unwrap();
        let r = &rows[0];
        assert_eq!(r.points, 441);
        assert_eq!(r.volume, q("400"));
        assert_eq!(r.discrete_boundary, 84);
        assert_eq!(r.continuous_boundary, q("80"));
        assert_eq!(r.vol_ratio, q("400/441"));
        assert_eq!(r.boundary_ratio, q("20/21"));
        assert_eq!(rows[1].vol_ratio, q("10000/10201"));
    }

    #[test]
    fn preconditions() {
        let g = graph("l1:2");
        assert!(matches!(
            convergence_experiment(&g, &[q("1/2")]),
            Err(Error::DegenerateScale(_))
        ));
        assert!(matches!(convergence_experiment(&g, &[q("2"), q("1")]), Err(Error::NotIncreasing)));
        assert!(matches!(convergence_experiment(&g, &[q("0")]), Err(Error::NonPositive(_))));
    }
}
