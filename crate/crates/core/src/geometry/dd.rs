//! Double description: extreme rays of a pointed polyhedral cone
//! `{ y : <row, y> >= 0 for every row }`, with exact adjacency.

use fixedbitset::FixedBitSet;

use super::vector::{dot, primitive_multiple};
use crate::error::{Error, Result};
use crate::linalg::{echelon, solve};
use crate::scalar::Scalar;

#[derive(Clone, Debug)]
pub(crate) struct Ray<T> {
    pub coords: Vec<T>,
    /// Rows the ray is tight on.
    pub zeros: FixedBitSet,
}

/// Extreme rays of the cone cut out by `rows`, each scaled to a primitive
/// integer vector, with their tight-row sets over all rows.
///
/// The rows must have full column rank (the cone is pointed).
pub(crate) fn extreme_rays<T: Scalar>(rows: &[Vec<T>]) -> Result<Vec<Ray<T>>> {
    let d = rows.first().map(Vec::len).ok_or(Error::EmptyInput)?;
    let m = rows.len();
    let ech = echelon(rows);
    if ech.rank() < d {
        return Err(Error::NotFullDimensional {
            actual: ech.rank().saturating_sub(1),
            ambient: d.saturating_sub(1),
        });
    }
    let basis: Vec<usize> = ech.pivot_rows.clone();
    let basis_matrix: Vec<Vec<T>> = basis.iter().map(|&i| rows[i].clone()).collect();

    let mut rays: Vec<Ray<T>> = Vec::with_capacity(d);
    for k in 0..d {
        let mut e = vec![T::zero(); d];
        e[k] = T::one();
        let coords = solve(&basis_matrix, &e).ok_or_else(|| {
            Error::Inconsistent("independent rows produced a singular system".into())
        })?;
        let mut zeros = FixedBitSet::with_capacity(m);
        for (j, &row) in basis.iter().enumerate() {
            if j != k {
                zeros.insert(row);
            }
        }
        rays.push(Ray {
            coords: primitive_multiple(&coords),
            zeros,
        });
    }

    let mut in_basis = vec![false; m];
    for &b in &basis {
        in_basis[b] = true;
    }

    for (r, row) in rows.iter().enumerate() {
        if in_basis[r] {
            continue;
        }
        let values: Vec<T> = rays.iter().map(|ray| dot(row, &ray.coords)).collect();
        let positive: Vec<usize> = (0..rays.len()).filter(|&i| values[i] > T::zero()).collect();
        let negative: Vec<usize> = (0..rays.len()).filter(|&i| values[i] < T::zero()).collect();

        let mut next: Vec<Ray<T>> = Vec::with_capacity(rays.len());
        for (i, ray) in rays.iter().enumerate() {
            if values[i].is_zero() {
                let mut ray = ray.clone();
                ray.zeros.insert(r);
                next.push(ray);
            } else if values[i] > T::zero() {
                next.push(ray.clone());
            }
        }
        if !negative.is_empty() {
            for &p in &positive {
                for &n in &negative {
                    let mut common = rays[p].zeros.clone();
                    common.intersect_with(&rays[n].zeros);
                    if common.count_ones(..) + 2 < d {
                        continue;
                    }
                    let blocked = rays.iter().enumerate().any(|(o, other)| {
                        o != p && o != n && common.is_subset(&other.zeros)
                    });
                    if blocked {
                        continue;
                    }
                    let vp = values[p].clone();
                    let vn = values[n].clone();
                    let coords: Vec<T> = rays[n]
                        .coords
                        .iter()
                        .zip(&rays[p].coords)
                        .map(|(a, b)| vp.clone() * a.clone() - vn.clone() * b.clone())
                        .collect();
                    common.insert(r);
                    next.push(Ray {
                        coords: primitive_multiple(&coords),
                        zeros: common,
                    });
                }
            }
        }
        rays = next;
    }
    Ok(rays)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn q(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    #[test]
    fn orthant_rays_are_axes() {
        let rows = vec![vec![q(1), q(0)], vec![q(0), q(1)]];
        let mut rays: Vec<Vec<BigRational>> =
            extreme_rays(&rows).unwrap().into_iter().map(|r| r.coords).collect();
        rays.sort();
        assert_eq!(rays, vec![vec![q(0), q(1)], vec![q(1), q(0)]]);
    }

    #[test]
    fn square_pyramid_cone_has_four_rays() {
        // Cone over the square |x| <= t, |y| <= t: rays (±1, ±1, 1).
        let rows = vec![
            vec![q(-1), q(0), q(1)],
            vec![q(1), q(0), q(1)],
            vec![q(0), q(-1), q(1)],
            vec![q(0), q(1), q(1)],
        ];
        let rays = extreme_rays(&rows).unwrap();
        assert_eq!(rays.len(), 4);
        for r in &rays {
            assert_eq!(r.coords[2], q(1));
            assert_eq!(r.zeros.count_ones(..), 2);
        }
    }

    #[test]
    fn rank_deficient_rows_rejected() {
        let rows = vec![vec![q(1), q(1)], vec![q(2), q(2)]];
        assert!(extreme_rays(&rows).is_err());
    }
}
