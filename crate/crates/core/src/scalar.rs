//! Exact scalar fields.
//!
//! Every geometric predicate in this crate is decided exactly, so the
//! geometry is generic over ordered fields without rounding. Floats do not
//! implement [`Scalar`]: they are not `Ord` and would make facet and
//! homothety tests meaningless.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, One, Signed, ToPrimitive, Zero};

/// An exact, totally ordered field.
pub trait Scalar:
    Clone + Ord + Hash + Debug + Display + Num + Signed + Send + Sync + 'static
{
    fn from_i64(v: i64) -> Self;

    /// Panics if a fixed-width field cannot hold `v`.
    fn from_bigint(v: &BigInt) -> Self;

    fn from_fraction(numer: &BigInt, denom: &BigInt) -> Self {
        Self::from_bigint(numer) / Self::from_bigint(denom)
    }

    fn numer_big(&self) -> BigInt;

    fn denom_big(&self) -> BigInt;

    /// Lossy conversion for figure output.
    fn to_f64_lossy(&self) -> f64;

    fn is_integral(&self) -> bool {
        self.denom_big().is_one()
    }

    /// Parses `p`, `-p` or `p/q`.
    fn parse_exact(s: &str) -> Option<Self> {
        let s = s.trim();
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let n: BigInt = n.parse().ok()?;
        let d: BigInt = d.parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(Self::from_fraction(&n, &d))
    }

    fn floor_big(&self) -> BigInt {
        self.numer_big().div_floor(&self.denom_big())
    }

    fn ceil_big(&self) -> BigInt {
        self.numer_big().div_ceil(&self.denom_big())
    }
}

macro_rules! impl_fixed_ratio {
    ($int:ty, $to:ident) => {
        impl Scalar for Ratio<$int> {
            fn from_i64(v: i64) -> Self {
                Ratio::from_integer(<$int>::from_i64(v).expect("value out of range"))
            }

            fn from_bigint(v: &BigInt) -> Self {
                Ratio::from_integer(v.$to().expect("value out of range"))
            }

            fn numer_big(&self) -> BigInt {
                BigInt::from(*self.numer())
            }

            fn denom_big(&self) -> BigInt {
                BigInt::from(*self.denom())
            }

            fn to_f64_lossy(&self) -> f64 {
                self.to_f64().unwrap_or(f64::NAN)
            }
        }
    };
}

impl_fixed_ratio!(i64, to_i64);
impl_fixed_ratio!(i128, to_i128);

impl Scalar for Ratio<BigInt> {
    fn from_i64(v: i64) -> Self {
        Ratio::from_integer(BigInt::from(v))
    }

    fn from_bigint(v: &BigInt) -> Self {
        Ratio::from_integer(v.clone())
    }

    fn from_fraction(numer: &BigInt, denom: &BigInt) -> Self {
        Ratio::new(numer.clone(), denom.clone())
    }

    fn numer_big(&self) -> BigInt {
        self.numer().clone()
    }

    fn denom_big(&self) -> BigInt {
        self.denom().clone()
    }

    fn to_f64_lossy(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

/// Shorthand for integer constants in generic code.
#[inline]
pub fn int<T: Scalar>(v: i64) -> T {
    T::from_i64(v)
}

/// Decimal rendering with `digits` significant digits, for figures only.
pub fn to_decimal<T: Scalar>(value: &T, digits: usize) -> String {
    let x = value.to_f64_lossy();
    if x == 0.0 {
        return "0".to_string();
    }
    let magnitude = x.abs().log10().floor() as i64;
    let decimals = (digits as i64 - 1 - magnitude).max(0) as usize;
    let mut s = format!("{:.*}", decimals, x);
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
    if s == "-0" {
        s = "0".to_string();
    }
    s
}
