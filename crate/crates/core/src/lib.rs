//! Exact tools for edge-isoperimetric problems on lattice graphs.

pub mod catalog;
pub mod error;
pub mod functional;
pub mod geometry;
pub mod graph;
pub mod lattice;
pub mod linalg;
pub mod scalar;
pub mod search;
pub mod zonotope;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// The default exact field.
pub type Rational = num_rational::BigRational;
/// A point of `Q^n`.
pub type RationalVector = geometry::Vector<Rational>;
pub type Polytope = geometry::Polytope<Rational>;
pub type Facet = geometry::Facet<Rational>;
