//! Centred zonotopes `Z = Σ [-v_i, v_i]` with integer generators.
//!
//! Facet normals come from `(n-1)`-subsets of generators, offsets from the
//! support function `h(u) = Σ |<u, v_i>|`. Vertices are enumerated as sign
//! vectors of regions of the central arrangement `{<x, v_i> = 0}`: every
//! region touches a ray, the rays are the facet normals, and the regions at
//! a ray are the regions of the arrangement restricted to the generators
//! orthogonal to it.

use std::collections::{BTreeSet, HashSet};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::geometry::{
    convex_hull, enumerate_vertices, f_vector_from_incidence, FVector, Facet, Polytope, Vector,
};
use crate::graph::{PLGraph, Point};
use crate::linalg::{gcd_all, int_cross, int_determinant, int_dot, int_rank, sign_normalize};
use crate::scalar::{int, Scalar};
use num_traits::Signed;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Zonotope {
    dim: usize,
    generators: Vec<Point>,
}

impl Zonotope {
    /// Sign-normalises and sorts generators. They must be nonzero and span.
    pub fn new(dim: usize, generators: &[Point]) -> Result<Self> {
        if dim == 0 {
            return Err(Error::BadDimension { dim, min: 1 });
        }
        let mut gens = Vec::with_capacity(generators.len());
        for v in generators {
            if v.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: v.len(),
                });
            }
            if v.iter().all(|&c| c == 0) {
                return Err(Error::ZeroVector);
            }
            gens.push(sign_normalize(v));
        }
        gens.sort();
        let rank = int_rank(&gens);
        if rank < dim {
            return Err(Error::RankDeficient { rank, dim });
        }
        Ok(Zonotope {
            dim,
            generators: gens,
        })
    }

    /// `Σ [-v_i, v_i]` over the graph's generators.
    pub fn from_graph(g: &PLGraph) -> Self {
        Zonotope {
            dim: g.dim(),
            generators: g.generators().to_vec(),
        }
    }

    /// Sum of one-sided segments `[0, w]`. Every `w` must be matched by a
    /// `-w` (with multiplicity); each pair collapses to `[-w, w]`.
    pub fn from_segments(dim: usize, segments: &[Point]) -> Result<Self> {
        let mut pending: Vec<Point> = Vec::new();
        let mut generators = Vec::new();
        for w in segments {
            let neg: Point = w.iter().map(|c| -c).collect();
            if let Some(pos) = pending.iter().position(|p| *p == neg) {
                pending.swap_remove(pos);
                generators.push(w.clone());
            } else {
                pending.push(w.clone());
            }
        }
        if let Some(w) = pending.first() {
            return Err(Error::Inconsistent(format!(
                "segment [0, {w:?}] has no opposite partner"
            )));
        }
        Zonotope::new(dim, &generators)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Point] {
        &self.generators
    }

    /// `h(u) = Σ |<u, v_i>|`.
    pub fn support(&self, u: &[i64]) -> i64 {
        self.generators.iter().map(|v| int_dot(u, v).abs()).sum()
    }

    /// `2^n Σ |det(v_{i_1}, ..., v_{i_n})|` over `n`-subsets.
    pub fn volume<T: Scalar>(&self) -> T {
        let mut sum: i128 = 0;
        for_each_subset(self.generators.len(), self.dim, |idx| {
            let m: Vec<Point> = idx.iter().map(|&i| self.generators[i].clone()).collect();
            sum += int_determinant(&m).abs();
        });
        let total = i64::try_from(sum).expect("volume overflow");
        int::<T>(total) * int::<T>(1i64 << self.dim)
    }

    /// Primitive outward facet normals, both orientations, sorted.
    pub fn facet_normals(&self) -> Vec<Point> {
        facet_normals(&self.generators, self.dim)
    }

    /// Facet description `<u, x> <= h(u)`.
    pub fn hrep<T: Scalar>(&self) -> Polytope<T> {
        let facets = self
            .facet_normals()
            .into_iter()
            .map(|u| {
                let offset = int(self.support(&u));
                Facet {
                    normal: Vector::from_ints(&u),
                    offset,
                }
            })
            .collect();
        Polytope::from_hrep(self.dim, facets)
    }

    /// All vertices, sorted.
    pub fn vertices(&self) -> Vec<Point> {
        let mut out: BTreeSet<Point> = BTreeSet::new();
        for signs in region_signs(&self.generators, self.dim) {
            let mut w = vec![0i64; self.dim];
            for (s, v) in signs.iter().zip(&self.generators) {
                for (x, c) in w.iter_mut().zip(v) {
                    *x += i64::from(*s) * c;
                }
            }
            out.insert(w);
        }
        out.into_iter().collect()
    }

    /// Both descriptions.
    pub fn polytope<T: Scalar>(&self) -> Polytope<T> {
        let verts: Vec<Vector<T>> = self.vertices().iter().map(|v| Vector::from_ints(v)).collect();
        let facets = self.hrep::<T>().facets().unwrap().to_vec();
        Polytope::assemble(self.dim, self.dim, verts, Some(facets), None)
    }

    /// Vertex indices on each facet, in `facet_normals` order.
    pub fn incidence(&self) -> (Vec<Point>, Vec<Point>, Vec<Vec<usize>>) {
        let verts = self.vertices();
        let normals = self.facet_normals();
        let incidence = normals
            .iter()
            .map(|u| {
                let h = self.support(u);
                (0..verts.len()).filter(|&i| int_dot(u, &verts[i]) == h).collect()
            })
            .collect();
        (verts, normals, incidence)
    }

    pub fn f_vector(&self) -> FVector {
        let (verts, _, incidence) = self.incidence();
        f_vector_from_incidence(self.dim, verts.len(), &incidence)
    }

    /// The face maximising `<e_axis, ·>`, in the chart without `axis`.
    pub fn facet_polytope<T: Scalar>(&self, axis: usize) -> Result<AxisFace<T>> {
        self.check_axis(axis)?;
        let mut e = vec![0i64; self.dim];
        e[axis] = 1;
        let h = self.support(&e);
        let tight: Vec<Vector<T>> = self
            .vertices()
            .into_iter()
            .filter(|v| v[axis] == h)
            .map(|v| Vector::from_ints(&v))
            .collect();
        let face = convex_hull(&tight)?;
        let mut translation = vec![0i64; self.dim];
        for v in &self.generators {
            let s = v[axis].signum();
            if s != 0 {
                for (t, c) in translation.iter_mut().zip(v) {
                    *t += s * c;
                }
            }
        }
        let chart = if self.dim == 1 {
            face.clone()
        } else {
            face.drop_axis(axis)?
        };
        Ok(AxisFace {
            face_dim: face.dim(),
            is_facet: face.dim() + 1 == self.dim,
            support: h,
            translation: Vector::from_ints(&translation),
            chart,
        })
    }

    /// `Z ∩ {x_axis = level}` in the chart without `axis`.
    pub fn hyperplane_section<T: Scalar>(&self, axis: usize, level: &T) -> Result<Polytope<T>> {
        self.check_axis(axis)?;
        if self.dim < 2 {
            return Err(Error::BadDimension { dim: self.dim, min: 2 });
        }
        let mut e = vec![0i64; self.dim];
        e[axis] = 1;
        let h: T = int(self.support(&e));
        if level.abs() > h {
            return Err(Error::EmptySection {
                level: level.to_string(),
                support: h.to_string(),
            });
        }
        let facets: Vec<Facet<T>> = self
            .facet_normals()
            .into_iter()
            .map(|u| {
                let offset: T = int::<T>(self.support(&u)) - int::<T>(u[axis]) * level.clone();
                let normal: Vector<T> = Vector::from_ints(&u).drop_axis(axis);
                Facet { normal, offset }
            })
            .collect();
        let points = enumerate_vertices(self.dim - 1, &facets)?;
        convex_hull(&points)
    }

    fn check_axis(&self, axis: usize) -> Result<()> {
        if axis >= self.dim {
            return Err(Error::IndexOutOfRange {
                index: axis,
                count: self.dim,
            });
        }
        Ok(())
    }

    /// `dim n` followed by one generator per line.
    pub fn to_text(&self) -> String {
        let mut out = format!("dim {}\n", self.dim);
        for v in &self.generators {
            let row: Vec<String> = v.iter().map(|c| c.to_string()).collect();
            writeln!(out, "{}", row.join(" ")).unwrap();
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut dim = None;
        let mut gens = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("dim") {
                dim = Some(
                    rest.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::parse(idx + 1, "bad dimension"))?,
                );
                continue;
            }
            let d = dim.ok_or_else(|| Error::parse(idx + 1, "expected `dim n` first"))?;
            let v: Point = line
                .split_whitespace()
                .map(|t| t.parse().map_err(|_| Error::parse(idx + 1, format!("bad integer {t:?}"))))
                .collect::<Result<_>>()?;
            if v.len() != d {
                return Err(Error::parse(idx + 1, format!("expected {d} coordinates")));
            }
            gens.push(v);
        }
        let d = dim.ok_or_else(|| Error::parse(1, "missing `dim n` line"))?;
        Zonotope::new(d, &gens)
    }
}

/// A face of a zonotope selected by a coordinate direction.
#[derive(Clone, Debug)]
pub struct AxisFace<T> {
    pub face_dim: usize,
    pub is_facet: bool,
    /// `max <e_axis, x>` over the zonotope.
    pub support: i64,
    /// `Σ sign(v_axis) v` over generators with nonzero `axis` coordinate;
    /// the face is this translate of the zonotope of the remaining ones.
    pub translation: Vector<T>,
    /// The face with coordinate `axis` dropped.
    pub chart: Polytope<T>,
}

fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn facet_normals(gens: &[Point], dim: usize) -> Vec<Point> {
    let mut normals: HashSet<Point> = HashSet::new();
    if dim == 1 {
        normals.insert(vec![1]);
        normals.insert(vec![-1]);
    } else {
        for_each_subset(gens.len(), dim - 1, |idx| {
            let vs: Vec<&[i64]> = idx.iter().map(|&i| gens[i].as_slice()).collect();
            let u = int_cross(&vs);
            let g = gcd_all(&u);
            if g == 0 {
                return;
            }
            let u: Point = sign_normalize(&u.iter().map(|c| c / g).collect::<Point>());
            if !normals.contains(&u) {
                normals.insert(u.iter().map(|c| -c).collect());
                normals.insert(u);
            }
        });
    }
    let mut out: Vec<Point> = normals.into_iter().collect();
    out.sort();
    out
}

/// Sign vectors of the regions of `{<x, g> = 0 : g ∈ gens}` in `R^dim`.
fn region_signs(gens: &[Point], dim: usize) -> HashSet<Vec<i8>> {
    let mut out = HashSet::new();
    if dim == 1 {
        let s: Vec<i8> = gens.iter().map(|g| g[0].signum() as i8).collect();
        out.insert(s.iter().map(|x| -x).collect());
        out.insert(s);
        return out;
    }
    for u in facet_normals(gens, dim) {
        let dots: Vec<i64> = gens.iter().map(|g| int_dot(&u, g)).collect();
        let zero: Vec<usize> = (0..gens.len()).filter(|&i| dots[i] == 0).collect();
        let j = u.iter().position(|&c| c != 0).unwrap();
        let sub: Vec<Point> = zero
            .iter()
            .map(|&i| {
                gens[i]
                    .iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, &x)| x)
                    .collect()
            })
            .collect();
        let base: Vec<i8> = dots.iter().map(|d| d.signum() as i8).collect();
        for s in region_signs(&sub, dim - 1) {
            let mut full = base.clone();
            for (&i, &si) in zero.iter().zip(&s) {
                full[i] = si;
            }
            out.insert(full);
        }
    }
    out
}

/// `Some((λ, t))` with `Q = λ P + t` and `λ > 0`, decided by matching vertex
/// sets after centring at the vertex centroid.
pub fn homothety_check<T: Scalar>(p: &Polytope<T>, q: &Polytope<T>) -> Result<Option<(T, Vector<T>)>> {
    if p.ambient_dim() != q.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: p.ambient_dim(),
            found: q.ambient_dim(),
        });
    }
    let pv = p.vertex_list()?;
    let qv = q.vertex_list()?;
    if pv.len() != qv.len() || p.dim() != q.dim() {
        return Ok(None);
    }
    let n = p.ambient_dim();
    let centroid = |vs: &[Vector<T>]| -> Vector<T> {
        let count = int::<T>(vs.len() as i64);
        let sum = vs.iter().fold(Vector::zeros(n), |acc, v| acc.add(v));
        Vector::new(sum.iter().map(|c| c.clone() / count.clone()).collect())
    };
    let cp = centroid(&pv);
    let cq = centroid(&qv);
    let width = |vs: &[Vector<T>], c: usize| -> T {
        let lo = vs.iter().map(|v| &v[c]).min().unwrap().clone();
        let hi = vs.iter().map(|v| &v[c]).max().unwrap().clone();
        hi - lo
    };
    let Some(axis) = (0..n).find(|&c| !width(&pv, c).is_zero()) else {
        // single points
        return Ok(Some((T::one(), cq.sub(&cp))));
    };
    let scale = width(&qv, axis) / width(&pv, axis);
    if scale <= T::zero() {
        return Ok(None);
    }
    let mut a: Vec<Vector<T>> = pv.iter().map(|v| v.sub(&cp).scale(&scale)).collect();
    let mut b: Vec<Vector<T>> = qv.iter().map(|v| v.sub(&cq)).collect();
    a.sort();
    b.sort();
    if a != b {
        return Ok(None);
    }
    Ok(Some((scale.clone(), cq.sub(&cp.scale(&scale)))))
}
