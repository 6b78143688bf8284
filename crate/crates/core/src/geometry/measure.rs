//! Volumes, projections and segment Minkowski sums.

use super::polytope::{convex_hull, Polytope};
use super::vector::Vector;
use crate::error::{Error, Result};
use crate::scalar::{int, Scalar};

/// Exact Lebesgue volume of a full-dimensional polytope.
///
/// Uses the cone decomposition from a vertex `p`:
/// `vol(P) = 1/n * sum_F (c_F - <a_F, p>) * vol_{n-1}(F|_j) / |a_{F,j}|`,
/// where `F|_j` is facet `F` with coordinate `j` dropped. Every term is
/// rational, so no norms are ever taken.
pub fn polytope_volume<T: Scalar>(p: &Polytope<T>) -> Result<T> {
    if !p.is_full_dimensional() {
        return Err(Error::NotFullDimensional {
            actual: p.dim(),
            ambient: p.ambient_dim(),
        });
    }
    let p = if p.vertices().is_some() && p.facets().is_some() {
        std::borrow::Cow::Borrowed(p)
    } else {
        std::borrow::Cow::Owned(p.complete()?)
    };
    full_volume(&p)
}

/// `k`-volume of a polytope measured in its coordinate chart (the chart of
/// its affine hull for lower-dimensional polytopes). Zero-dimensional
/// polytopes have chart volume 1.
pub fn chart_volume<T: Scalar>(p: &Polytope<T>) -> Result<T> {
    if p.is_full_dimensional() {
        return polytope_volume(p);
    }
    let affine = p.affine_hull().ok_or(Error::MissingFacets)?;
    if p.dim() == 0 {
        return Ok(T::one());
    }
    let chart: Vec<Vector<T>> = p
        .vertex_list()?
        .iter()
        .map(|v| Vector::new(affine.chart.iter().map(|&c| v[c].clone()).collect()))
        .collect();
    polytope_volume(&convex_hull(&chart)?)
}

fn full_volume<T: Scalar>(p: &Polytope<T>) -> Result<T> {
    let n = p.ambient_dim();
    let verts = p.vertex_list()?;
    match n {
        1 => Ok(verts[verts.len() - 1][0].clone() - verts[0][0].clone()),
        2 => {
            let cycle = p.polygon_cycle()?;
            let m = cycle.len();
            let twice = (0..m).fold(T::zero(), |acc, i| {
                let a = &cycle[i];
                let b = &cycle[(i + 1) % m];
                acc + a[0].clone() * b[1].clone() - a[1].clone() * b[0].clone()
            });
            Ok(twice.abs() / int::<T>(2))
        }
        _ => {
            let apex = &verts[0];
            let mut total = T::zero();
            for facet in p.facet_list()? {
                let height = facet.slack(apex);
                if height.is_zero() {
                    continue;
                }
                let j = facet
                    .normal
                    .iter()
                    .position(|c| !c.is_zero())
                    .expect("facet normal is nonzero");
                let face: Vec<Vector<T>> = verts
                    .iter()
                    .filter(|v| facet.is_tight(v))
                    .map(|v| v.drop_axis(j))
                    .collect();
                let base = polytope_volume(&convex_hull(&face)?)?;
                total = total + height * base / facet.normal[j].abs();
            }
            Ok(total / int::<T>(n as i64))
        }
    }
}

/// Orthogonal projection of a polytope onto the hyperplane `direction⊥`,
/// expressed in the chart that drops coordinate `dropped_axis`.
///
/// The chart is a linear isomorphism of the hyperplane that scales
/// `(n-1)`-volume by `|v_j| / ‖v‖`.
#[derive(Clone, Debug)]
pub struct Projection<T> {
    pub direction: Vector<T>,
    pub dropped_axis: usize,
    pub chart: Polytope<T>,
}

impl<T: Scalar> Projection<T> {
    /// Volume of the chart image.
    pub fn chart_volume(&self) -> Result<T> {
        chart_volume(&self.chart)
    }

    /// Square of the `(n-1)`-volume of the projection in the ambient metric.
    pub fn ambient_volume_squared(&self) -> Result<T> {
        let cv = self.chart_volume()?;
        let vj = self.direction[self.dropped_axis].clone();
        Ok(cv.clone() * cv * self.direction.norm_squared() / (vj.clone() * vj))
    }

    /// `‖v‖ · vol_{n-1}(P_v)`, which is rational.
    pub fn shadow_sweep(&self) -> Result<T> {
        let cv = self.chart_volume()?;
        Ok(cv * self.direction.norm_squared() / self.direction[self.dropped_axis].abs())
    }

    /// Lifts a chart point back onto the hyperplane `direction⊥`.
    pub fn lift(&self, chart_point: &Vector<T>) -> Vector<T> {
        let j = self.dropped_axis;
        let v = &self.direction;
        let partial = chart_point
            .iter()
            .enumerate()
            .fold(T::zero(), |acc, (i, c)| {
                let axis = if i < j { i } else { i + 1 };
                acc + c.clone() * v[axis].clone()
            });
        chart_point.insert_axis(j, -partial / v[j].clone())
    }
}

/// Projects `p` orthogonally along `direction`.
pub fn project_polytope<T: Scalar>(p: &Polytope<T>, direction: &Vector<T>) -> Result<Projection<T>> {
    if direction.dim() != p.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: p.ambient_dim(),
            found: direction.dim(),
        });
    }
    if direction.is_zero() {
        return Err(Error::ZeroVector);
    }
    let j = direction
        .iter()
        .position(|c| !c.is_zero())
        .expect("nonzero direction");
    let vv = direction.norm_squared();
    let projected: Vec<Vector<T>> = p
        .vertex_list()?
        .iter()
        .map(|x| {
            let t = direction.dot(x) / vv.clone();
            x.sub(&direction.scale(&t)).drop_axis(j)
        })
        .collect();
    Ok(Projection {
        direction: direction.clone(),
        dropped_axis: j,
        chart: convex_hull(&projected)?,
    })
}

/// `P + [a, b]`.
pub fn minkowski_sum_segment<T: Scalar>(
    p: &Polytope<T>,
    a: &Vector<T>,
    b: &Vector<T>,
) -> Result<Polytope<T>> {
    let n = p.ambient_dim();
    for v in [a, b] {
        if v.dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: v.dim(),
            });
        }
    }
    let verts = p.vertex_list()?;
    let mut points = Vec::with_capacity(2 * verts.len());
    for v in verts.iter() {
        points.push(v.add(a));
        points.push(v.add(b));
    }
    convex_hull(&points)
}
