use std::borrow::Cow;
use std::collections::BTreeSet;

use fixedbitset::FixedBitSet;

use super::dd::extreme_rays;
use super::vector::{dot, primitive_multiple, Vector};
use crate::error::{Error, Result};
use crate::linalg::{echelon, nullspace};
use crate::scalar::Scalar;

/// The inequality `<normal, x> <= offset`, with `normal` a primitive integer
/// outward normal. Ordering is by normal, then offset.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Facet<T> {
    pub normal: Vector<T>,
    pub offset: T,
}

impl<T: Scalar> Facet<T> {
    /// Rescales so the normal is primitive and integral.
    pub fn canonical(normal: Vector<T>, offset: T) -> Self {
        let prim = normal.primitive();
        // normal = s * prim with s > 0; find s from the first nonzero coordinate.
        let scale = match normal.iter().zip(prim.iter()).find(|(a, _)| !a.is_zero()) {
            Some((a, b)) => a.clone() / b.clone(),
            None => T::one(),
        };
        Facet {
            normal: prim,
            offset: offset / scale,
        }
    }

    pub fn slack(&self, x: &[T]) -> T {
        self.offset.clone() - dot(&self.normal, x)
    }

    pub fn is_tight(&self, x: &[T]) -> bool {
        self.slack(x).is_zero()
    }

    pub fn holds(&self, x: &[T]) -> bool {
        self.slack(x) >= T::zero()
    }
}

/// Affine hull of a lower-dimensional polytope.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AffineHull<T> {
    /// Equations `<normal, x> = offset` cutting out the hull.
    pub equations: Vec<Facet<T>>,
    /// Coordinates whose projection is injective on the hull.
    pub chart: Vec<usize>,
    /// Facets of the polytope's image in the chart.
    pub chart_facets: Vec<Facet<T>>,
}

/// An exact convex polytope with a vertex description, a facet description,
/// or both.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polytope<T> {
    ambient: usize,
    dim: usize,
    vertices: Option<Vec<Vector<T>>>,
    facets: Option<Vec<Facet<T>>>,
    affine: Option<AffineHull<T>>,
}

impl<T: Scalar> Polytope<T> {
    /// Convex hull of a finite point set; see [`convex_hull`].
    pub fn from_points(points: &[Vector<T>]) -> Result<Self> {
        convex_hull(points)
    }

    /// A full-dimensional polytope given only by inequalities. The caller
    /// promises the system is bounded, feasible and irredundant.
    pub fn from_hrep(ambient: usize, facets: Vec<Facet<T>>) -> Self {
        let mut facets: Vec<Facet<T>> = facets
            .into_iter()
            .map(|f| Facet::canonical(f.normal, f.offset))
            .collect();
        facets.sort();
        facets.dedup();
        Polytope {
            ambient,
            dim: ambient,
            vertices: None,
            facets: Some(facets),
            affine: None,
        }
    }

    /// Ambient dimension.
    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    /// Affine dimension.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.dim == self.ambient
    }

    pub fn vertices(&self) -> Option<&[Vector<T>]> {
        self.vertices.as_deref()
    }

    pub fn facets(&self) -> Option<&[Facet<T>]> {
        self.facets.as_deref()
    }

    pub fn affine_hull(&self) -> Option<&AffineHull<T>> {
        self.affine.as_ref()
    }

    /// Vertices, enumerating them from the facets when necessary.
    pub fn vertex_list(&self) -> Result<Cow<'_, [Vector<T>]>> {
        match &self.vertices {
            Some(v) => Ok(Cow::Borrowed(v)),
            None => Ok(Cow::Owned(enumerate_vertices(self.ambient, self.facet_list()?)?)),
        }
    }

    pub fn facet_list(&self) -> Result<&[Facet<T>]> {
        self.facets.as_deref().ok_or(Error::MissingFacets)
    }

    /// The same polytope with both descriptions present.
    pub fn complete(&self) -> Result<Self> {
        if self.vertices.is_some() {
            return Ok(self.clone());
        }
        convex_hull(&self.vertex_list()?)
    }

    pub fn contains(&self, x: &[T]) -> Result<bool> {
        if x.len() != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: x.len(),
            });
        }
        if let Some(facets) = &self.facets {
            return Ok(facets.iter().all(|f| f.holds(x)));
        }
        let affine = self
            .affine
            .as_ref()
            .ok_or(Error::MissingFacets)?;
        if !affine.equations.iter().all(|e| e.is_tight(x)) {
            return Ok(false);
        }
        let chart: Vec<T> = affine.chart.iter().map(|&c| x[c].clone()).collect();
        Ok(affine.chart_facets.iter().all(|f| f.holds(&chart)))
    }

    /// Image under `x -> scale * x + shift`.
    pub fn transform(&self, scale: &T, shift: &Vector<T>) -> Result<Self> {
        if scale <= &T::zero() {
            return Err(Error::NonPositive(format!("scale {scale}")));
        }
        let points: Vec<Vector<T>> = self
            .vertex_list()?
            .iter()
            .map(|v| v.scale(scale).add(shift))
            .collect();
        match (&self.facets, self.is_full_dimensional()) {
            // normals are unchanged; only offsets move
            (Some(facets), true) => {
                let facets = facets
                    .iter()
                    .map(|f| Facet {
                        normal: f.normal.clone(),
                        offset: f.offset.clone() * scale.clone() + f.normal.dot(shift),
                    })
                    .collect();
                Ok(Polytope::assemble(self.ambient, self.dim, points, Some(facets), None))
            }
            _ => convex_hull(&points),
        }
    }

    /// Drops coordinate `axis` of every vertex. The caller is responsible for
    /// the projection being meaningful (e.g. the polytope lies in a
    /// hyperplane not parallel to that axis).
    pub fn drop_axis(&self, axis: usize) -> Result<Self> {
        let points: Vec<Vector<T>> = self.vertex_list()?.iter().map(|v| v.drop_axis(axis)).collect();
        convex_hull(&points)
    }

    /// Vertices in counterclockwise order; 2-dimensional polytopes only.
    pub fn polygon_cycle(&self) -> Result<Vec<Vector<T>>> {
        if self.ambient != 2 || self.dim != 2 {
            return Err(Error::NotFullDimensional {
                actual: self.dim,
                ambient: 2,
            });
        }
        let verts = self.vertex_list()?;
        Ok(monotone_chain(&verts).into_iter().map(|i| verts[i].clone()).collect())
    }

    /// Indices of the vertices lying on each facet.
    pub fn incidence(&self) -> Result<Vec<Vec<usize>>> {
        let verts = self.vertex_list()?;
        Ok(self
            .facet_list()?
            .iter()
            .map(|f| (0..verts.len()).filter(|&i| f.is_tight(&verts[i])).collect())
            .collect())
    }

    pub(crate) fn assemble(
        ambient: usize,
        dim: usize,
        vertices: Vec<Vector<T>>,
        facets: Option<Vec<Facet<T>>>,
        affine: Option<AffineHull<T>>,
    ) -> Self {
        Polytope {
            ambient,
            dim,
            vertices: Some(vertices),
            facets,
            affine,
        }
    }
}

/// Convex hull of `points` with an irredundant vertex list.
///
/// Full-dimensional inputs also get an irredundant facet list. Lower
/// dimensional inputs carry their affine hull (equations, an injective
/// coordinate chart, and the facets of the chart image).
pub fn convex_hull<T: Scalar>(points: &[Vector<T>]) -> Result<Polytope<T>> {
    let first = points.first().ok_or(Error::EmptyInput)?;
    let n = first.dim();
    if n == 0 {
        return Err(Error::BadDimension { dim: 0, min: 1 });
    }
    for p in points {
        if p.dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: p.dim(),
            });
        }
    }
    let unique: Vec<Vector<T>> = points.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect();
    let base = unique[0].clone();
    let directions: Vec<Vec<T>> = unique[1..].iter().map(|p| p.sub(&base).into_inner()).collect();
    let ech = echelon(&directions);
    let k = ech.rank();

    if k == n {
        let (vertex_idx, facets) = full_hull(&unique)?;
        let vertices = vertex_idx.into_iter().map(|i| unique[i].clone()).collect();
        return Ok(Polytope::assemble(n, n, vertices, Some(facets), None));
    }

    let mut chart = ech.pivots.clone();
    chart.sort_unstable();
    let equations: Vec<Facet<T>> = nullspace(&directions, n)
        .into_iter()
        .map(|normal| {
            let normal = Vector::new(primitive_multiple(&normal));
            let offset = normal.dot(&base);
            Facet { normal, offset }
        })
        .collect();

    if k == 0 {
        let affine = AffineHull {
            equations,
            chart,
            chart_facets: Vec::new(),
        };
        return Ok(Polytope::assemble(n, 0, vec![base], None, Some(affine)));
    }

    let projected: Vec<Vector<T>> = unique
        .iter()
        .map(|p| Vector::new(chart.iter().map(|&c| p[c].clone()).collect()))
        .collect();
    let (vertex_idx, chart_facets) = full_hull(&projected)?;
    let mut vertices: Vec<Vector<T>> = vertex_idx.into_iter().map(|i| unique[i].clone()).collect();
    vertices.sort();
    let affine = AffineHull {
        equations,
        chart,
        chart_facets,
    };
    Ok(Polytope::assemble(n, k, vertices, None, Some(affine)))
}

/// Hull of distinct, affinely spanning points: vertex indices (in sorted
/// point order) and sorted canonical facets.
fn full_hull<T: Scalar>(points: &[Vector<T>]) -> Result<(Vec<usize>, Vec<Facet<T>>)> {
    let n = points[0].dim();
    let (mut vertex_idx, mut facets) = match n {
        1 => {
            let (lo, hi) = points
                .iter()
                .enumerate()
                .fold((0, 0), |(lo, hi), (i, p)| {
                    (
                        if p[0] < points[lo][0] { i } else { lo },
                        if p[0] > points[hi][0] { i } else { hi },
                    )
                });
            let facets = vec![
                Facet {
                    normal: Vector::from_ints(&[-1]),
                    offset: -points[lo][0].clone(),
                },
                Facet {
                    normal: Vector::from_ints(&[1]),
                    offset: points[hi][0].clone(),
                },
            ];
            (vec![lo, hi], facets)
        }
        2 => {
            let cycle = monotone_chain(points);
            let facets = (0..cycle.len())
                .map(|i| {
                    let a = &points[cycle[i]];
                    let b = &points[cycle[(i + 1) % cycle.len()]];
                    let normal = Vector::new(vec![
                        b[1].clone() - a[1].clone(),
                        a[0].clone() - b[0].clone(),
                    ]);
                    let offset = normal.dot(a);
                    Facet::canonical(normal, offset)
                })
                .collect();
            (cycle, facets)
        }
        _ => dd_hull(points)?,
    };
    vertex_idx.sort_unstable();
    facets.sort();
    Ok((vertex_idx, facets))
}

fn dd_hull<T: Scalar>(points: &[Vector<T>]) -> Result<(Vec<usize>, Vec<Facet<T>>)> {
    let m = points.len();
    let rows: Vec<Vec<T>> = points
        .iter()
        .map(|p| {
            let mut r: Vec<T> = p.iter().map(|c| -c.clone()).collect();
            r.push(T::one());
            r
        })
        .collect();
    let rays = extreme_rays(&rows)?;
    let n = points[0].dim();
    let mut facets = Vec::with_capacity(rays.len());
    let mut tight: Vec<FixedBitSet> = Vec::with_capacity(rays.len());
    for ray in rays {
        let normal = Vector::new(ray.coords[..n].to_vec());
        if normal.is_zero() {
            continue;
        }
        let offset = ray.coords[n].clone();
        facets.push(Facet::canonical(normal, offset));
        tight.push(ray.zeros);
    }
    let mut on_facets: Vec<Vec<usize>> = vec![Vec::new(); m];
    for (f, set) in tight.iter().enumerate() {
        for p in set.ones() {
            on_facets[p].push(f);
        }
    }
    let vertices = (0..m)
        .filter(|&p| {
            let fs = &on_facets[p];
            if fs.is_empty() {
                return false;
            }
            let mut common = tight[fs[0]].clone();
            for &f in &fs[1..] {
                common.intersect_with(&tight[f]);
            }
            common.count_ones(..) == 1
        })
        .collect();
    Ok((vertices, facets))
}

fn cross<T: Scalar>(o: &[T], a: &[T], b: &[T]) -> T {
    (a[0].clone() - o[0].clone()) * (b[1].clone() - o[1].clone())
        - (a[1].clone() - o[1].clone()) * (b[0].clone() - o[0].clone())
}

/// Andrew's monotone chain on lexicographically sorted distinct points;
/// returns the strictly convex counterclockwise vertex cycle as indices.
fn monotone_chain<T: Scalar>(points: &[Vector<T>]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&a, &b| points[a].cmp(&points[b]));
    if order.len() < 3 {
        return order;
    }
    let mut hull: Vec<usize> = Vec::with_capacity(2 * order.len());
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &usize>> = if pass == 0 {
            Box::new(order.iter())
        } else {
            Box::new(order.iter().rev())
        };
        for &i in iter {
            while hull.len() >= start + 2 {
                let a = hull[hull.len() - 2];
                let b = hull[hull.len() - 1];
                if cross(&points[a], &points[b], &points[i]) <= T::zero() {
                    hull.pop();
                } else {
                    break;
                }
            }
            hull.push(i);
        }
        hull.pop();
    }
    hull
}

/// Vertices of the bounded full-dimensional polyhedron `{x : facets}`.
pub(crate) fn enumerate_vertices<T: Scalar>(ambient: usize, facets: &[Facet<T>]) -> Result<Vec<Vector<T>>> {
    let mut rows: Vec<Vec<T>> = facets
        .iter()
        .map(|f| {
            let mut r: Vec<T> = f.normal.iter().map(|c| -c.clone()).collect();
            r.push(f.offset.clone());
            r
        })
        .collect();
    let mut t_row = vec![T::zero(); ambient + 1];
    t_row[ambient] = T::one();
    rows.push(t_row);
    let rays = extreme_rays(&rows)?;
    let mut out: Vec<Vector<T>> = Vec::new();
    for ray in rays {
        let t = ray.coords[ambient].clone();
        if t.is_zero() {
            return Err(Error::Inconsistent("facet system is unbounded".into()));
        }
        out.push(Vector::new(
            ray.coords[..ambient].iter().map(|c| c.clone() / t.clone()).collect(),
        ));
    }
    out.sort();
    out.dedup();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type Q = BigRational;

    fn pts(raw: &[&[i64]]) -> Vec<Vector<Q>> {
        raw.iter().map(|p| Vector::from_ints(p)).collect()
    }

    fn q(s: &str) -> Q {
        Q::parse_exact(s).unwrap()
    }

    #[test]
    fn interior_point_is_dropped() {
        let mut p = pts(&[&[0, 0], &[1, 0], &[0, 1]]);
        p.push(Vector::new(vec![q("1/2"), q("1/4")]));
        let hull = convex_hull(&p).unwrap();
        assert_eq!(hull.vertices().unwrap(), &pts(&[&[0, 0], &[0, 1], &[1, 0]])[..]);
        assert_eq!(hull.facets().unwrap().len(), 3);
    }

    #[test]
    fn single_point_is_zero_dimensional() {
        let hull = convex_hull(&pts(&[&[0, 0]])).unwrap();
        assert_eq!(hull.dim(), 0);
        assert_eq!(hull.vertices().unwrap().len(), 1);
        assert!(hull.facets().is_none());
    }

    #[test]
    fn octagon_has_eight_facets() {
        let mut raw = Vec::new();
        for (a, b) in [(3, 1), (1, 3)] {
            for sa in [-1, 1] {
                for sb in [-1, 1] {
                    raw.push(vec![sa * a, sb * b]);
                }
            }
        }
        raw.push(vec![0, 0]);
        raw.push(vec![2, 2]);
        let points: Vec<Vector<Q>> = raw.iter().map(|p| Vector::from_ints(p)).collect();
        let hull = convex_hull(&points).unwrap();
        assert_eq!(hull.vertices().unwrap().len(), 8);
        let facets = hull.facets().unwrap();
        assert_eq!(facets.len(), 8);
        assert!(facets.contains(&Facet {
            normal: Vector::from_ints(&[1, 1]),
            offset: q("4")
        }));
        assert!(facets.contains(&Facet {
            normal: Vector::from_ints(&[-1, 0]),
            offset: q("3")
        }));
    }

    #[test]
    fn cube_through_double_description() {
        let mut raw = Vec::new();
        for x in 0..2 {
            for y in 0..2 {
                for z in 0..2 {
                    raw.push(vec![x, y, z]);
                }
            }
        }
        raw.push(vec![1, 1, 0]);
        let mut points: Vec<Vector<Q>> = raw.iter().map(|p| Vector::from_ints(p)).collect();
        points.push(Vector::new(vec![q("1/2"), q("1/2"), q("1")]));
        let hull = convex_hull(&points).unwrap();
        assert_eq!(hull.vertices().unwrap().len(), 8);
        assert_eq!(hull.facets().unwrap().len(), 6);
    }

    #[test]
    fn collinear_points_in_space() {
        let hull = convex_hull(&pts(&[&[0, 0, 0], &[2, 2, 2], &[1, 1, 1], &[3, 3, 3]])).unwrap();
        assert_eq!(hull.dim(), 1);
        assert_eq!(hull.vertices().unwrap(), &pts(&[&[0, 0, 0], &[3, 3, 3]])[..]);
        let aff = hull.affine_hull().unwrap();
        assert_eq!(aff.equations.len(), 2);
        assert!(hull.contains(&pts(&[&[2, 2, 2]])[0]).unwrap());
        assert!(!hull.contains(&pts(&[&[4, 4, 4]])[0]).unwrap());
        assert!(!hull.contains(&pts(&[&[1, 1, 0]])[0]).unwrap());
    }

    #[test]
    fn mismatched_dimensions_rejected() {
        let p = vec![Vector::<Q>::from_ints(&[0, 0]), Vector::from_ints(&[1, 0, 0])];
        assert!(matches!(convex_hull(&p), Err(Error::DimensionMismatch { .. })));
        assert!(matches!(convex_hull::<Q>(&[]), Err(Error::EmptyInput)));
    }

    #[test]
    fn hrep_round_trip_through_vertex_enumeration() {
        let facets = vec![
            Facet { normal: Vector::from_ints(&[1, 0]), offset: q("1") },
            Facet { normal: Vector::from_ints(&[-1, 0]), offset: q("1") },
            Facet { normal: Vector::from_ints(&[0, 2]), offset: q("2") },
            Facet { normal: Vector::from_ints(&[0, -1]), offset: q("1") },
        ];
        let p = Polytope::from_hrep(2, facets);
        let verts = p.vertex_list().unwrap();
        assert_eq!(&verts[..], &pts(&[&[-1, -1], &[-1, 1], &[1, -1], &[1, 1]])[..]);
        let full = p.complete().unwrap();
        assert_eq!(full.facets(), p.facets());
    }
}
