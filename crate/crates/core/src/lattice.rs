//! Integer lattices: kernel bases of projection lattices, lattice point
//! counting, Pick's formula.

use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::geometry::{Polytope, Vector};
use crate::graph::Point;
use crate::linalg::{determinant, gcd_all, int_dot};
use crate::scalar::{int, Scalar};
use crate::Rational;

/// A lattice basis together with its Gram determinant `det(<b_i, b_j>)`,
/// the squared covolume of the lattice in its span.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LatticeBasis {
    pub vectors: Vec<Point>,
    pub gram_det: Rational,
}

impl LatticeBasis {
    pub fn new(vectors: Vec<Point>) -> Result<Self> {
        let gram_det = gram_determinant(&vectors);
        if gram_det <= Rational::zero() {
            return Err(Error::RankDeficient {
                rank: crate::linalg::int_rank(&vectors),
                dim: vectors.len(),
            });
        }
        Ok(LatticeBasis { vectors, gram_det })
    }

    /// Basis `B U` for an integer matrix `U` (columns index old vectors).
    pub fn transformed(&self, u: &[Vec<i64>]) -> Result<Self> {
        let k = self.vectors.len();
        let n = self.vectors.first().map_or(0, Vec::len);
        let vectors = (0..k)
            .map(|col| {
                (0..n)
                    .map(|c| (0..k).map(|row| self.vectors[row][c] * u[row][col]).sum())
                    .collect()
            })
            .collect();
        LatticeBasis::new(vectors)
    }
}

pub fn gram_determinant(vectors: &[Point]) -> Rational {
    let gram: Vec<Vec<Rational>> = vectors
        .iter()
        .map(|a| vectors.iter().map(|b| int(int_dot(a, b))).collect())
        .collect();
    determinant(&gram)
}

/// Integer basis of `{x ∈ Z^n : <x, a> = 0}`.
///
/// Column-reduces the row `a` with unimodular moves (Euclid on entries)
/// until a single entry `±gcd` remains; the other columns of the
/// accumulated transform span the kernel lattice.
pub fn dual_projection_lattice_basis(a: &[i64]) -> Result<LatticeBasis> {
    let n = a.len();
    if n < 2 {
        return Err(Error::BadDimension { dim: n, min: 2 });
    }
    if a.iter().all(|&c| c == 0) {
        return Err(Error::ZeroVector);
    }
    if gcd_all(a) != 1 {
        return Err(Error::NonPrimitive(a.to_vec()));
    }
    let mut w = a.to_vec();
    // columns of the unimodular transform
    let mut cols: Vec<Vec<i64>> = (0..n)
        .map(|j| (0..n).map(|i| i64::from(i == j)).collect())
        .collect();
    loop {
        let nonzero: Vec<usize> = (0..n).filter(|&j| w[j] != 0).collect();
        if nonzero.len() == 1 {
            break;
        }
        let p = *nonzero.iter().min_by_key(|&&j| w[j].abs()).unwrap();
        for &j in &nonzero {
            if j == p {
                continue;
            }
            let q = Integer::div_floor(&w[j], &w[p]);
            w[j] -= q * w[p];
            let cp = cols[p].clone();
            for (x, y) in cols[j].iter_mut().zip(&cp) {
                *x -= q * y;
            }
        }
    }
    let pivot = (0..n).find(|&j| w[j] != 0).unwrap();
    let vectors = (0..n).filter(|&j| j != pivot).map(|j| cols[j].clone()).collect();
    LatticeBasis::new(vectors)
}

/// `det(Λ)^2 = 1 / Σ a_i^2` for the projection lattice of `Z^n` along the
/// primitive vector `a`, cross-checked against `1 / gram_det` of the
/// kernel basis (the dual lattice).
pub fn projection_lattice_det_squared(a: &[i64]) -> Result<Rational> {
    let formula = Rational::new(1.into(), int_dot(a, a).into());
    let basis = dual_projection_lattice_basis(a)?;
    let dual = Rational::from_integer(1.into()) / basis.gram_det;
    if dual != formula {
        return Err(Error::Inconsistent(format!(
            "projection lattice of {a:?}: 1/Σa² = {formula} but 1/gram = {dual}"
        )));
    }
    Ok(formula)
}

/// Integer bounding box of a polytope's vertices.
fn bounding_box<T: Scalar>(p: &Polytope<T>) -> Result<Vec<(i64, i64)>> {
    let verts = p.vertex_list()?;
    (0..p.ambient_dim())
        .map(|c| {
            let lo = verts.iter().map(|v| &v[c]).min().unwrap();
            let hi = verts.iter().map(|v| &v[c]).max().unwrap();
            let lo = lo.ceil_big().to_i64().ok_or(Error::Inconsistent("coordinate overflow".into()))?;
            let hi = hi.floor_big().to_i64().ok_or(Error::Inconsistent("coordinate overflow".into()))?;
            Ok((lo, hi))
        })
        .collect()
}

/// Number of integer points in the bounding box that would be tested.
pub fn box_size<T: Scalar>(p: &Polytope<T>) -> Result<u128> {
    Ok(bounding_box(p)?
        .iter()
        .map(|&(lo, hi)| if hi < lo { 0 } else { (hi - lo + 1) as u128 })
        .product())
}

/// `Z^n ∩ P` in lexicographic order.
pub fn lattice_points<T: Scalar>(p: &Polytope<T>) -> Result<Vec<Point>> {
    if p.facets().is_none() && p.affine_hull().is_none() {
        return Err(Error::MissingFacets);
    }
    let bounds = bounding_box(p)?;
    let mut out = Vec::new();
    if bounds.iter().any(|&(lo, hi)| hi < lo) {
        return Ok(out);
    }
    // Normals are primitive integer vectors, so `<u, x> <= b` on Z^n is
    // `<u, x> <= floor(b)` and can be tested in machine integers.
    let int_facets: Option<Vec<(Point, i128)>> = p
        .facets()
        .filter(|_| p.is_full_dimensional())
        .and_then(|fs| {
            fs.iter()
                .map(|f| Some((f.normal.to_i64s()?, f.offset.floor_big().to_i128()?)))
                .collect()
        });
    let mut cur: Vec<i64> = bounds.iter().map(|b| b.0).collect();
    loop {
        let inside = match &int_facets {
            Some(fs) => fs.iter().all(|(u, b)| {
                u.iter().zip(&cur).map(|(&a, &c)| a as i128 * c as i128).sum::<i128>() <= *b
            }),
            None => {
                let x: Vec<T> = cur.iter().map(|&c| int(c)).collect();
                p.contains(&x)?
            }
        };
        if inside {
            out.push(cur.clone());
        }
        let mut axis = bounds.len();
        loop {
            if axis == 0 {
                return Ok(out);
            }
            axis -= 1;
            if cur[axis] < bounds[axis].1 {
                cur[axis] += 1;
                for (c, b) in cur.iter_mut().zip(&bounds).skip(axis + 1) {
                    *c = b.0;
                }
                break;
            }
        }
    }
}

/// `|Z^n ∩ P|` by bounding-box enumeration.
pub fn count_lattice_points<T: Scalar>(p: &Polytope<T>) -> Result<u64> {
    Ok(lattice_points(p)?.len() as u64)
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PickCount<T> {
    pub interior: u64,
    pub boundary: u64,
    /// `I + B/2 - 1`.
    pub area: T,
}

/// Pick's formula for a lattice polygon.
pub fn pick_area<T: Scalar>(p: &Polytope<T>) -> Result<PickCount<T>> {
    if p.ambient_dim() != 2 || !p.is_full_dimensional() {
        return Err(Error::NotFullDimensional {
            actual: p.dim(),
            ambient: 2,
        });
    }
    let cycle = p.polygon_cycle()?;
    let mut ints: Vec<Point> = Vec::with_capacity(cycle.len());
    for v in &cycle {
        ints.push(v.to_i64s().ok_or_else(|| Error::NonIntegerVertex(v.to_string()))?);
    }
    let m = ints.len();
    let boundary: u64 = (0..m)
        .map(|i| {
            let a = &ints[i];
            let b = &ints[(i + 1) % m];
            (b[0] - a[0]).gcd(&(b[1] - a[1])) as u64
        })
        .sum();
    let total = count_lattice_points(p)?;
    let interior = total - boundary;
    let area = int::<T>(interior as i64) + int::<T>(boundary as i64) / int::<T>(2) - T::one();
    Ok(PickCount {
        interior,
        boundary,
        area,
    })
}

/// Convenience for tests and callers holding integer data.
pub fn int_polytope<T: Scalar>(points: &[Point]) -> Result<Polytope<T>> {
    let pts: Vec<Vector<T>> = points.iter().map(|p| Vector::from_ints(p)).collect();
    crate::geometry::convex_hull(&pts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::polytope_volume;
    use proptest::prelude::*;

    type Q = Rational;

    fn q(s: &str) -> Q {
        Q::parse_exact(s).unwrap()
    }

    fn octagon() -> Polytope<Q> {
        int_polytope(&[
            vec![3, 1], vec![3, -1], vec![-3, 1], vec![-3, -1],
            vec![1, 3], vec![-1, 3], vec![1, -3], vec![-1, -3],
        ])
        .unwrap()
    }

    #[test]
    fn kernel_bases() {
        let b = dual_projection_lattice_basis(&[1, 1]).unwrap();
        assert_eq!(b.vectors.len(), 1);
        assert_eq!(int_dot(&b.vectors[0], &[1, 1]), 0);
        assert_eq!(b.gram_det, q("2"));

        let b = dual_projection_lattice_basis(&[1, 0, 0]).unwrap();
        assert_eq!(b.gram_det, q("1"));

        let b = dual_projection_lattice_basis(&[1, 2, 3]).unwrap();
        assert_eq!(b.vectors.len(), 2);
        for v in &b.vectors {
            assert_eq!(int_dot(v, &[1, 2, 3]), 0);
        }
        assert_eq!(b.gram_det, q("14"));
    }

    #[test]
    fn kernel_basis_errors() {
        assert_eq!(dual_projection_lattice_basis(&[0, 0]), Err(Error::ZeroVector));
        assert_eq!(dual_projection_lattice_basis(&[2, 4]), Err(Error::NonPrimitive(vec![2, 4])));
        assert!(dual_projection_lattice_basis(&[1]).is_err());
    }

    #[test]
    fn projection_determinants() {
        assert_eq!(projection_lattice_det_squared(&[1, 0]).unwrap(), q("1"));
        assert_eq!(projection_lattice_det_squared(&[1, 1]).unwrap(), q("1/2"));
        assert_eq!(projection_lattice_det_squared(&[1, 2, 3]).unwrap(), q("1/14"));
    }

    #[test]
    fn counting() {
        let sq: Polytope<Q> = int_polytope(&[vec![0, 0], vec![2, 0], vec![0, 2], vec![2, 2]]).unwrap();
        assert_eq!(count_lattice_points(&sq).unwrap(), 9);
        let tri: Polytope<Q> = int_polytope(&[vec![0, 0], vec![2, 0], vec![0, 2]]).unwrap();
        assert_eq!(count_lattice_points(&tri).unwrap(), 6);
        assert_eq!(count_lattice_points(&octagon()).unwrap(), 37);
        let seg: Polytope<Q> = int_polytope(&[vec![0, 0, 0], vec![3, 3, 3]]).unwrap();
        assert_eq!(count_lattice_points(&seg).unwrap(), 4);
        let hrep = Polytope::<Q>::from_hrep(1, vec![]);
        assert!(count_lattice_points(&hrep).is_err());
    }

    #[test]
    fn pick_examples() {
        let tri: Polytope<Q> = int_polytope(&[vec![0, 0], vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(
            pick_area(&tri).unwrap(),
            PickCount { interior: 0, boundary: 3, area: q("1/2") }
        );
        let sq: Polytope<Q> = int_polytope(&[vec![0, 0], vec![2, 0], vec![0, 2], vec![2, 2]]).unwrap();
        assert_eq!(pick_area(&sq).unwrap(), PickCount { interior: 1, boundary: 8, area: q("4") });
        assert_eq!(
            pick_area(&octagon()).unwrap(),
            PickCount { interior: 21, boundary: 16, area: q("28") }
        );
        let half: Polytope<Q> = crate::geometry::convex_hull(&[
            Vector::new(vec![q("1/2"), q("0")]),
            Vector::from_ints(&[2, 0]),
            Vector::from_ints(&[0, 2]),
        ])
        .unwrap();
        assert!(matches!(pick_area(&half), Err(Error::NonIntegerVertex(_))));
    }

    fn unimodular(ops: &[(usize, usize, i64)], k: usize) -> Vec<Vec<i64>> {
        let mut u: Vec<Vec<i64>> = (0..k).map(|i| (0..k).map(|j| i64::from(i == j)).collect()).collect();
        for &(a, b, m) in ops {
            let (a, b) = (a % k, b % k);
            if a == b {
                continue;
            }
            // column a += m * column b
            for row in u.iter_mut() {
                row[a] += m * row[b];
            }
        }
        u
    }

    proptest! {
        #[test]
        fn gram_det_is_unimodular_invariant(
            a in proptest::collection::vec(-9i64..=9, 3..=4),
            ops in proptest::collection::vec((0usize..3, 0usize..3, -3i64..=3), 0..6)
        ) {
            prop_assume!(gcd_all(&a) == 1);
            let b = dual_projection_lattice_basis(&a).unwrap();
            let u = unimodular(&ops, b.vectors.len());
            let b2 = b.transformed(&u).unwrap();
            prop_assert_eq!(b2.gram_det, b.gram_det.clone());
            prop_assert_eq!(b.gram_det, Q::from_integer(int_dot(&a, &a).into()));
        }

        #[test]
        fn pick_matches_volume(pts in proptest::collection::vec((-8i64..=8, -8i64..=8), 3..10)) {
            let raw: Vec<Point> = pts.iter().map(|&(x, y)| vec![x, y]).collect();
            let p: Polytope<Q> = int_polytope(&raw).unwrap();
            prop_assume!(p.is_full_dimensional());
            prop_assert_eq!(pick_area(&p).unwrap().area, polytope_volume(&p).unwrap());
        }
    }
}
