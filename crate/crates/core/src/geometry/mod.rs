//! Exact convex polytopes: hulls, facets, volumes, projections and segment
//! Minkowski sums.

mod dd;
mod faces;
mod measure;
mod polytope;
mod text;
mod vector;

pub use faces::{f_vector_from_incidence, polytope_f_vector, FVector};
pub use measure::{chart_volume, minkowski_sum_segment, polytope_volume, project_polytope, Projection};
pub use polytope::{convex_hull, AffineHull, Facet, Polytope};
pub(crate) use polytope::enumerate_vertices;
pub use text::{format_polytope, parse_polytope};
pub use vector::Vector;
