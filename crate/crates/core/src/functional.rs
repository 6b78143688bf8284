//! The continuous boundary functional `b(A) = lim (vol(A + εZ) - vol(A)) / ε`
//! for a centred zonotope `Z = Σ [-v_i, v_i]`, computed as exact sweep
//! volumes: `b(A) = 2 Σ_i (vol(A + [0, v_i]) - vol(A))`.

use crate::error::{Error, Result};
use crate::geometry::{minkowski_sum_segment, polytope_volume, Polytope, Vector};
use crate::scalar::{int, Scalar};
use crate::zonotope::{homothety_check, Zonotope};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BoundaryValue<T> {
    pub value: T,
    /// `vol(A + [0, v_i]) - vol(A)` in generator order.
    pub per_generator_sweeps: Vec<T>,
}

/// `vol(A + [0, v]) - vol(A)`.
pub fn directional_sweep<T: Scalar>(a: &Polytope<T>, v: &[i64]) -> Result<T> {
    if v.len() != a.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: a.ambient_dim(),
            found: v.len(),
        });
    }
    if v.iter().all(|&c| c == 0) {
        return Err(Error::ZeroVector);
    }
    let base = polytope_volume(a)?;
    let swept = minkowski_sum_segment(a, &Vector::zeros(v.len()), &Vector::from_ints(v))?;
    Ok(polytope_volume(&swept)? - base)
}

pub fn continuous_boundary<T: Scalar>(a: &Polytope<T>, z: &Zonotope) -> Result<BoundaryValue<T>> {
    if a.ambient_dim() != z.dim() {
        return Err(Error::DimensionMismatch {
            expected: z.dim(),
            found: a.ambient_dim(),
        });
    }
    let per_generator_sweeps = z
        .generators()
        .iter()
        .map(|v| directional_sweep(a, v))
        .collect::<Result<Vec<T>>>()?;
    let sum = per_generator_sweeps.iter().fold(T::zero(), |acc, s| acc + s.clone());
    Ok(BoundaryValue {
        value: int::<T>(2) * sum,
        per_generator_sweeps,
    })
}

/// `A + εZ`, built one segment at a time.
pub fn scaled_minkowski_sum<T: Scalar>(a: &Polytope<T>, z: &Zonotope, eps: &T) -> Result<Polytope<T>> {
    let mut acc = a.clone();
    for v in z.generators() {
        let hi = Vector::<T>::from_ints(v).scale(eps);
        acc = minkowski_sum_segment(&acc, &hi.neg(), &hi)?;
    }
    Ok(acc)
}

/// `(vol(A + εZ) - vol(A)) / ε` for each `ε`.
pub fn finite_difference_probe<T: Scalar>(a: &Polytope<T>, z: &Zonotope, epsilons: &[T]) -> Result<Vec<T>> {
    if a.ambient_dim() != z.dim() {
        return Err(Error::DimensionMismatch {
            expected: z.dim(),
            found: a.ambient_dim(),
        });
    }
    let base = polytope_volume(a)?;
    epsilons
        .iter()
        .map(|eps| {
            if *eps <= T::zero() {
                return Err(Error::NonPositive(eps.to_string()));
            }
            let grown = scaled_minkowski_sum(a, z, eps)?;
            Ok((polytope_volume(&grown)? - base.clone()) / eps.clone())
        })
        .collect()
}

/// Both sides of `b(A) >= n vol(A)^{(n-1)/n} vol(Z)^{1/n}`, raised to the
/// `n`-th power.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BrunnMinkowskiCertificate<T> {
    /// `b(A)^n`.
    pub lhs_power: T,
    /// `n^n vol(A)^{n-1} vol(Z)`.
    pub rhs_power: T,
    pub homothetic: bool,
}

impl<T: Scalar> BrunnMinkowskiCertificate<T> {
    pub fn holds(&self) -> bool {
        self.lhs_power >= self.rhs_power
    }

    pub fn is_equality(&self) -> bool {
        self.lhs_power == self.rhs_power
    }

    /// The inequality holds, and is tight exactly for homothets.
    pub fn consistent(&self) -> bool {
        self.holds() && self.is_equality() == self.homothetic
    }
}

pub fn brunn_minkowski_certificate<T: Scalar>(
    a: &Polytope<T>,
    z: &Zonotope,
) -> Result<BrunnMinkowskiCertificate<T>> {
    let n = z.dim();
    if !a.is_full_dimensional() {
        return Err(Error::NotFullDimensional {
            actual: a.dim(),
            ambient: a.ambient_dim(),
        });
    }
    let b = continuous_boundary(a, z)?.value;
    let vol_a = polytope_volume(a)?;
    let vol_z: T = z.volume();
    let lhs_power = pow(&b, n);
    let rhs_power = pow(&int::<T>(n as i64), n) * pow(&vol_a, n - 1) * vol_z;
    let zp = z.polytope::<T>();
    let homothetic = homothety_check(&zp, a)?.is_some();
    Ok(BrunnMinkowskiCertificate {
        lhs_power,
        rhs_power,
        homothetic,
    })
}

fn pow<T: Scalar>(x: &T, k: usize) -> T {
    (0..k).fold(T::one(), |acc, _| acc * x.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{convex_hull, project_polytope};
    use crate::Rational;
    use num_traits::{One, Zero};

    type Q = Rational;

    fn q(s: &str) -> Q {
        Q::parse_exact(s).unwrap()
    }

    fn poly(raw: &[&[i64]]) -> Polytope<Q> {
        let pts: Vec<Vector<Q>> = raw.iter().map(|p| Vector::from_ints(p)).collect();
        convex_hull(&pts).unwrap()
    }

    fn unit_square() -> Polytope<Q> {
        poly(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]])
    }

    fn square_z() -> Zonotope {
        Zonotope::new(2, &[vec![1, 0], vec![0, 1]]).unwrap()
    }

    fn linf2() -> Zonotope {
        Zonotope::new(2, &[vec![1, 0], vec![0, 1], vec![1, 1], vec![1, -1]]).unwrap()
    }

    #[test]
    fn sweeps() {
        assert_eq!(directional_sweep(&unit_square(), &[1, 0]).unwrap(), q("1"));
        assert_eq!(directional_sweep(&unit_square(), &[1, 1]).unwrap(), q("2"));
        let big = square_z().polytope::<Q>();
        assert_eq!(directional_sweep(&big, &[1, 1]).unwrap(), q("4"));
        assert_eq!(directional_sweep(&linf2().polytope::<Q>(), &[1, 0]).unwrap(), q("6"));
        assert!(matches!(directional_sweep(&big, &[0, 0]), Err(Error::ZeroVector)));
    }

    #[test]
    fn sweep_matches_shadow() {
        let oct = linf2().polytope::<Q>();
        for v in [[1, 0], [1, 1], [2, -1], [3, 5]] {
            let sweep = directional_sweep(&oct, &v).unwrap();
            let shadow = project_polytope(&oct, &Vector::from_ints(&v)).unwrap().shadow_sweep().unwrap();
            assert_eq!(sweep, shadow);
        }
    }

    #[test]
    fn boundary_of_zonotopes() {
        let sq = square_z();
        let b = continuous_boundary(&sq.polytope::<Q>(), &sq).unwrap();
        assert_eq!(b.value, q("8"));
        assert_eq!(b.per_generator_sweeps, vec![q("2"), q("2")]);
        let oct = linf2();
        assert_eq!(continuous_boundary(&oct.polytope::<Q>(), &oct).unwrap().value, q("56"));
        // d/dε (1 + 2ε)^2 at 0
        assert_eq!(continuous_boundary(&unit_square(), &sq).unwrap().value, q("4"));
        assert_eq!(continuous_boundary(&unit_square(), &oct).unwrap().value, q("12"));
    }

    #[test]
    fn finite_differences() {
        let sq = square_z();
        let a = sq.polytope::<Q>();
        let eps = [q("1"), q("1/2"), q("1/10")];
        assert_eq!(finite_difference_probe(&a, &sq, &eps).unwrap(), vec![q("12"), q("10"), q("42/5")]);
        assert!(finite_difference_probe(&a, &sq, &[q("0")]).is_err());
    }

    #[test]
    fn brunn_minkowski() {
        let oct = linf2();
        let c = brunn_minkowski_certificate(&unit_square(), &oct).unwrap();
        assert_eq!(c.lhs_power, q("144"));
        assert_eq!(c.rhs_power, q("112"));
        assert!(!c.homothetic);
        assert!(c.consistent());

        let z = oct.polytope::<Q>();
        let c = brunn_minkowski_certificate(&z, &oct).unwrap();
        assert!(c.is_equality() && c.homothetic);
        let moved = z.transform(&q("5"), &Vector::from_ints(&[2, -7])).unwrap();
        let c = brunn_minkowski_certificate(&moved, &oct).unwrap();
        assert!(c.is_equality() && c.homothetic);
    }

    #[test]
    fn translation_and_linearity() {
        let a = poly(&[&[0, 0], &[3, 1], &[1, 4], &[-1, 2]]);
        let moved = a.transform(&Q::one(), &Vector::from_ints(&[5, -3])).unwrap();
        let oct = linf2();
        assert_eq!(
            continuous_boundary(&a, &oct).unwrap(),
            continuous_boundary(&moved, &oct).unwrap()
        );
        let s1 = directional_sweep(&a, &[1, 2]).unwrap();
        let s3 = directional_sweep(&a, &[3, 6]).unwrap();
        assert_eq!(s3, s1.clone() * q("3"));
        assert!(!s1.is_zero());
    }
}
