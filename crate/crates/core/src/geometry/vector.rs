use std::fmt;
use std::ops::{Deref, Index};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::scalar::Scalar;

/// A point or direction of `T^n`. Ordering is lexicographic.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Vector<T>(Vec<T>);

impl<T: Scalar> Vector<T> {
    pub fn new(coords: Vec<T>) -> Self {
        Vector(coords)
    }

    pub fn zeros(dim: usize) -> Self {
        Vector(vec![T::zero(); dim])
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Vector(coords.iter().map(|&c| T::from_i64(c)).collect())
    }

    pub fn unit(dim: usize, axis: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.0[axis] = T::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[T] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<T> {
        self.0
    }

    pub fn dot(&self, other: &[T]) -> T {
        dot(&self.0, other)
    }

    pub fn add(&self, other: &Self) -> Self {
        Vector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        Vector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        )
    }

    pub fn scale(&self, factor: &T) -> Self {
        Vector(self.0.iter().map(|a| a.clone() * factor.clone()).collect())
    }

    pub fn neg(&self) -> Self {
        Vector(self.0.iter().map(|a| -a.clone()).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn norm_squared(&self) -> T {
        self.dot(&self.0)
    }

    /// Drops coordinate `axis`.
    pub fn drop_axis(&self, axis: usize) -> Self {
        Vector(
            self.0
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != axis)
                .map(|(_, c)| c.clone())
                .collect(),
        )
    }

    /// Inserts `value` at position `axis`.
    pub fn insert_axis(&self, axis: usize, value: T) -> Self {
        let mut c = self.0.clone();
        c.insert(axis, value);
        Vector(c)
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(Scalar::is_integral)
    }

    /// Integer coordinates, if all fit in `i64`.
    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        use num_traits::ToPrimitive;
        self.0
            .iter()
            .map(|c| if c.is_integral() { c.numer_big().to_i64() } else { None })
            .collect()
    }

    /// Positive multiple with coprime integer coordinates. Zero stays zero.
    pub fn primitive(&self) -> Self {
        Vector(primitive_multiple(&self.0))
    }
}

impl<T> Deref for Vector<T> {
    type Target = [T];

    fn deref(&self) -> &[T] {
        &self.0
    }
}

impl<T> Index<usize> for Vector<T> {
    type Output = T;

    fn index(&self, i: usize) -> &T {
        &self.0[i]
    }
}

impl<T> From<Vec<T>> for Vector<T> {
    fn from(v: Vec<T>) -> Self {
        Vector(v)
    }
}

impl<T: fmt::Display> fmt::Display for Vector<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

pub(crate) fn dot<T: Scalar>(a: &[T], b: &[T]) -> T {
    a.iter()
        .zip(b)
        .fold(T::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

/// Scales a rational vector to the coprime integer vector pointing the same way.
pub(crate) fn primitive_multiple<T: Scalar>(v: &[T]) -> Vec<T> {
    let mut lcm = BigInt::from(1);
    for c in v {
        lcm = lcm.lcm(&c.denom_big());
    }
    let ints: Vec<BigInt> = v
        .iter()
        .map(|c| c.numer_big() * (&lcm / c.denom_big()))
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() {
        return v.to_vec();
    }
    ints.iter()
        .map(|x| T::from_bigint(&(x / &g)))
        .collect()
}
