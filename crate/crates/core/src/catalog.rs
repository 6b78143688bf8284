//! Builtin graphs and the graph spec text format.
//!
//! ```text
//! name linf:2
//! dim 2
//! gen 1 0
//! gen 0 1
//! gen 1 1
//! gen 1 -1
//! sym 2 1
//! sym -1 2
//! ```
//!
//! A `sym` row is a signed permutation in one-based notation: entry `i` is
//! `±j`, meaning `y_i = ±x_j`. `basis` rows, when present, are the columns of
//! the matrix taking graph coordinates back to the original lattice.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{PLGraph, Point};
use crate::linalg::{int_determinant, sign_normalize, solve};
use crate::scalar::Scalar;
use crate::zonotope::Zonotope;
use crate::Rational;

/// `y_i = signs[i] · x_{perm[i]}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SignedPermutation {
    pub perm: Vec<usize>,
    pub signs: Vec<i64>,
}

impl SignedPermutation {
    pub fn new(perm: Vec<usize>, signs: Vec<i64>) -> Result<Self> {
        let n = perm.len();
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || seen[p] {
                return Err(Error::Inconsistent(format!("{perm:?} is not a permutation")));
            }
            seen[p] = true;
        }
        if signs.len() != n || signs.iter().any(|s| s.abs() != 1) {
            return Err(Error::Inconsistent("signs must be ±1, one per coordinate".into()));
        }
        Ok(SignedPermutation { perm, signs })
    }

    pub fn apply(&self, x: &[i64]) -> Point {
        self.perm
            .iter()
            .zip(&self.signs)
            .map(|(&p, &s)| s * x[p])
            .collect()
    }

    fn swap(n: usize, a: usize, b: usize) -> Self {
        let mut perm: Vec<usize> = (0..n).collect();
        perm.swap(a, b);
        SignedPermutation {
            perm,
            signs: vec![1; n],
        }
    }

    fn flip(n: usize, a: usize) -> Self {
        let mut signs = vec![1; n];
        signs[a] = -1;
        SignedPermutation {
            perm: (0..n).collect(),
            signs,
        }
    }

    fn to_text(&self) -> String {
        let cells: Vec<String> = self
            .perm
            .iter()
            .zip(&self.signs)
            .map(|(&p, &s)| (s * (p as i64 + 1)).to_string())
            .collect();
        cells.join(" ")
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GraphSpec {
    pub name: String,
    pub dim: usize,
    pub generators: Vec<Point>,
    /// Generators of a symmetry group of the graph.
    pub symmetry_hints: Vec<SignedPermutation>,
    /// Columns of the basis expressing graph coordinates in the original
    /// lattice, when the graph was rewritten onto `Z^n`.
    pub basis: Option<Vec<Point>>,
}

impl GraphSpec {
    pub fn graph(&self) -> Result<PLGraph> {
        PLGraph::new(self.dim, &self.generators)
    }

    /// The image of a graph-coordinate point in original coordinates.
    pub fn to_original(&self, x: &[i64]) -> Point {
        match &self.basis {
            None => x.to_vec(),
            Some(cols) => {
                let mut out = vec![0; self.dim];
                for (c, col) in x.iter().zip(cols) {
                    for (o, b) in out.iter_mut().zip(col) {
                        *o += c * b;
                    }
                }
                out
            }
        }
    }

    /// Checks generators and that every hint maps the generator set to
    /// itself up to sign.
    pub fn validate(&self) -> Result<PLGraph> {
        let g = self.graph()?;
        for s in &self.symmetry_hints {
            if s.perm.len() != self.dim {
                return Err(Error::DimensionMismatch {
                    expected: self.dim,
                    found: s.perm.len(),
                });
            }
            let mut image: Vec<Point> = g.generators().iter().map(|v| sign_normalize(&s.apply(v))).collect();
            image.sort();
            if image != g.generators() {
                return Err(Error::Inconsistent(format!(
                    "symmetry {} does not preserve the generators",
                    s.to_text()
                )));
            }
        }
        Ok(g)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "name {}", self.name).unwrap();
        writeln!(out, "dim {}", self.dim).unwrap();
        for v in &self.generators {
            writeln!(out, "gen {}", join(v)).unwrap();
        }
        for s in &self.symmetry_hints {
            writeln!(out, "sym {}", s.to_text()).unwrap();
        }
        for b in self.basis.iter().flatten() {
            writeln!(out, "basis {}", join(b)).unwrap();
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut name = None;
        let mut dim: Option<usize> = None;
        let mut generators = Vec::new();
        let mut symmetry_hints = Vec::new();
        let mut basis: Vec<Point> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
            let rest = rest.trim();
            match key {
                "name" => name = Some(rest.to_string()),
                "dim" => {
                    dim = Some(rest.parse().map_err(|_| Error::parse(line_no, "bad dimension"))?);
                }
                "gen" | "sym" | "basis" => {
                    let d = dim.ok_or_else(|| Error::parse(line_no, "`dim` must come first"))?;
                    let row = parse_ints(rest, line_no)?;
                    if row.len() != d {
                        return Err(Error::parse(line_no, format!("expected {d} integers")));
                    }
                    match key {
                        "gen" => generators.push(row),
                        "basis" => basis.push(row),
                        _ => {
                            let perm = row.iter().map(|p| p.unsigned_abs() as usize).collect::<Vec<_>>();
                            if perm.contains(&0) {
                                return Err(Error::parse(line_no, "permutation entries are one-based"));
                            }
                            let sym = SignedPermutation::new(
                                perm.iter().map(|p| p - 1).collect(),
                                row.iter().map(|p| p.signum()).collect(),
                            )
                            .map_err(|e| Error::parse(line_no, e.to_string()))?;
                            symmetry_hints.push(sym);
                        }
                    }
                }
                other => return Err(Error::parse(line_no, format!("unknown field {other:?}"))),
            }
        }
        let dim = dim.ok_or_else(|| Error::parse(1, "missing `dim`"))?;
        if !basis.is_empty() && basis.len() != dim {
            return Err(Error::parse(1, format!("basis needs {dim} rows")));
        }
        Ok(GraphSpec {
            name: name.unwrap_or_default(),
            dim,
            generators,
            symmetry_hints,
            basis: if basis.is_empty() { None } else { Some(basis) },
        })
    }
}

fn join(v: &[i64]) -> String {
    v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
}

fn parse_ints(s: &str, line: usize) -> Result<Point> {
    s.split_whitespace()
        .map(|t| t.parse().map_err(|_| Error::parse(line, format!("bad integer {t:?}"))))
        .collect()
}

/// `l1:n`, `linf:n` (`1 <= n <= 4`), `tri` or `d4cross`.
pub fn builtin_graph(name: &str) -> Result<GraphSpec> {
    let family = |prefix: &str| -> Result<Option<usize>> {
        match name.strip_prefix(prefix) {
            None => Ok(None),
            Some(n) => {
                let n: usize = n.parse().map_err(|_| Error::UnknownGraph(name.to_string()))?;
                if !(1..=4).contains(&n) {
                    return Err(Error::BadDimension { dim: n, min: 1 });
                }
                Ok(Some(n))
            }
        }
    };
    if let Some(n) = family("l1:")? {
        let generators = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        return Ok(with_hyperoctahedral(name, n, generators));
    }
    if let Some(n) = family("linf:")? {
        return Ok(with_hyperoctahedral(name, n, linf_generators(n)));
    }
    match name {
        "tri" => Ok(GraphSpec {
            name: name.into(),
            dim: 2,
            generators: vec![vec![1, 0], vec![0, 1], vec![1, 1]],
            symmetry_hints: vec![
                SignedPermutation::swap(2, 0, 1),
                SignedPermutation::new(vec![0, 1], vec![-1, -1]).unwrap(),
            ],
            basis: None,
        }),
        "d4cross" => {
            let basis = d4_basis();
            let generators = d4_segments()
                .iter()
                .map(|e| in_basis(&basis, e))
                .collect::<Result<Vec<Point>>>()?;
            let mut generators: Vec<Point> = generators.iter().map(|v| sign_normalize(v)).collect();
            generators.sort();
            generators.dedup();
            Ok(GraphSpec {
                name: name.into(),
                dim: 4,
                generators,
                symmetry_hints: Vec::new(),
                basis: Some(basis),
            })
        }
        _ => Err(Error::UnknownGraph(name.to_string())),
    }
}

/// Names accepted by [`builtin_graph`].
pub fn builtin_names() -> Vec<String> {
    let mut out = Vec::new();
    for n in 1..=4 {
        out.push(format!("l1:{n}"));
    }
    for n in 1..=4 {
        out.push(format!("linf:{n}"));
    }
    out.push("tri".into());
    out.push("d4cross".into());
    out
}

fn with_hyperoctahedral(name: &str, n: usize, mut generators: Vec<Point>) -> GraphSpec {
    generators.sort();
    let mut symmetry_hints = vec![SignedPermutation::flip(n, 0)];
    for i in 1..n {
        symmetry_hints.push(SignedPermutation::swap(n, 0, i));
    }
    GraphSpec {
        name: name.into(),
        dim: n,
        generators,
        symmetry_hints,
        basis: None,
    }
}

/// Sign-canonical nonzero vectors of `{-1, 0, 1}^n`.
pub fn linf_generators(n: usize) -> Vec<Point> {
    let mut out = Vec::new();
    for code in 0..3usize.pow(n as u32) {
        let mut c = code;
        let v: Point = (0..n)
            .map(|_| {
                let d = (c % 3) as i64 - 1;
                c /= 3;
                d
            })
            .collect();
        if v.iter().any(|&x| x != 0) && sign_normalize(&v) == v {
            out.push(v);
        }
    }
    out.sort();
    out
}

/// Columns of a basis of the even-sum lattice `D4`.
pub fn d4_basis() -> Vec<Point> {
    vec![
        vec![1, -1, 0, 0],
        vec![0, 1, -1, 0],
        vec![0, 0, 1, -1],
        vec![0, 0, 1, 1],
    ]
}

/// The 24 edge vectors of `D4`: every `±e_i ± e_j` with `i < j`.
pub fn d4_segments() -> Vec<Point> {
    let mut out = Vec::new();
    for i in 0..4 {
        for j in i + 1..4 {
            for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                let mut v = vec![0; 4];
                v[i] = si;
                v[j] = sj;
                out.push(v);
            }
        }
    }
    out
}

/// `Σ [0, w]` over the 24 edge vectors, in original coordinates.
pub fn d4_original_zonotope() -> Result<Zonotope> {
    Zonotope::from_segments(4, &d4_segments())
}

/// Integer coordinates of `x` in the basis with the given columns.
pub fn in_basis(columns: &[Point], x: &[i64]) -> Result<Point> {
    let n = x.len();
    let m: Vec<Vec<Rational>> = (0..n)
        .map(|r| columns.iter().map(|c| Rational::from_i64(c[r])).collect())
        .collect();
    let rhs: Vec<Rational> = x.iter().map(|&c| Rational::from_i64(c)).collect();
    let sol = solve(&m, &rhs).ok_or_else(|| Error::Inconsistent("singular basis".into()))?;
    crate::geometry::Vector::new(sol)
        .to_i64s()
        .ok_or_else(|| Error::Inconsistent(format!("{x:?} is not in the lattice")))
}

/// `|det|` of the basis matrix.
pub fn basis_index(columns: &[Point]) -> i128 {
    int_determinant(columns).abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_sizes() {
        assert_eq!(builtin_graph("l1:2").unwrap().generators, vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(builtin_graph("linf:3").unwrap().generators.len(), 13);
        assert_eq!(builtin_graph("linf:4").unwrap().generators.len(), 40);
        assert_eq!(builtin_graph("d4cross").unwrap().generators.len(), 12);
        for name in builtin_names() {
            builtin_graph(&name).unwrap().validate().unwrap();
        }
        assert!(matches!(builtin_graph("l1:5"), Err(Error::BadDimension { .. })));
        assert!(matches!(builtin_graph("hex"), Err(Error::UnknownGraph(_))));
    }

    #[test]
    fn d4_basis_sanity() {
        let spec = builtin_graph("d4cross").unwrap();
        assert_eq!(basis_index(spec.basis.as_ref().unwrap()), 2);
        let mut back: Vec<Point> = spec
            .generators
            .iter()
            .map(|g| sign_normalize(&spec.to_original(g)))
            .collect();
        back.sort();
        let mut orig: Vec<Point> = d4_segments().iter().map(|v| sign_normalize(v)).collect();
        orig.sort();
        orig.dedup();
        assert_eq!(back, orig);
        assert!(in_basis(&d4_basis(), &[1, 0, 0, 0]).is_err());
    }

    #[test]
    fn spec_text_round_trip() {
        for name in builtin_names() {
            let spec = builtin_graph(&name).unwrap();
            assert_eq!(GraphSpec::from_text(&spec.to_text()).unwrap(), spec);
        }
    }

    #[test]
    fn spec_errors_carry_lines() {
        let err = GraphSpec::from_text("dim 2\ngen 1 0\ngen 1 x\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }));
        let err = GraphSpec::from_text("gen 1 0\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
        let bad_sym = GraphSpec::from_text("dim 2\ngen 1 0\ngen 1 1\nsym 2 1\n").unwrap();
        assert!(bad_sym.validate().is_err());
    }
}
