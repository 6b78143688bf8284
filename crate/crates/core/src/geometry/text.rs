//! Plain-text polytope format:
//!
//! ```text
//! dim 2
//! V
//! 0 0
//! 1/2 1/4
//! H
//! -1 0 <= 0
//! ```
//!
//! Blank lines and `#` comments are ignored. Either block may be absent.

use std::fmt::Write as _;

use super::polytope::{convex_hull, Facet, Polytope};
use super::vector::Vector;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub fn format_polytope<T: Scalar>(p: &Polytope<T>) -> String {
    let mut out = String::new();
    writeln!(out, "dim {}", p.ambient_dim()).unwrap();
    if let Some(verts) = p.vertices() {
        out.push_str("V\n");
        for v in verts {
            writeln!(out, "{v}").unwrap();
        }
    }
    if let Some(facets) = p.facets() {
        out.push_str("H\n");
        for f in facets {
            writeln!(out, "{} <= {}", f.normal, f.offset).unwrap();
        }
    }
    out
}

#[derive(PartialEq)]
enum Block {
    None,
    Vertices,
    Facets,
}

pub fn parse_polytope<T: Scalar>(text: &str) -> Result<Polytope<T>> {
    let mut dim: Option<usize> = None;
    let mut block = Block::None;
    let mut vertices: Vec<Vector<T>> = Vec::new();
    let mut facets: Vec<Facet<T>> = Vec::new();
    let mut saw_v = false;
    let mut saw_h = false;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("dim") {
            if dim.is_some() {
                return Err(Error::parse(line_no, "duplicate dim line"));
            }
            let d: usize = rest
                .trim()
                .parse()
                .map_err(|_| Error::parse(line_no, "dimension is not a nonnegative integer"))?;
            if d == 0 {
                return Err(Error::parse(line_no, "dimension must be positive"));
            }
            dim = Some(d);
            continue;
        }
        let n = dim.ok_or_else(|| Error::parse(line_no, "expected `dim n` first"))?;
        match line {
            "V" => {
                block = Block::Vertices;
                saw_v = true;
                continue;
            }
            "H" => {
                block = Block::Facets;
                saw_h = true;
                continue;
            }
            _ => {}
        }
        match block {
            Block::None => return Err(Error::parse(line_no, "row outside a V or H block")),
            Block::Vertices => vertices.push(parse_row(line, n, line_no)?),
            Block::Facets => {
                let (lhs, rhs) = line
                    .split_once("<=")
                    .or_else(|| line.split_once('≤'))
                    .ok_or_else(|| Error::parse(line_no, "facet row needs `<=`"))?;
                let normal = parse_row(lhs, n, line_no)?;
                let offset = T::parse_exact(rhs)
                    .ok_or_else(|| Error::parse(line_no, format!("bad offset {:?}", rhs.trim())))?;
                facets.push(Facet { normal, offset });
            }
        }
    }
    let n = dim.ok_or_else(|| Error::parse(1, "missing `dim n` line"))?;
    if saw_v {
        if vertices.is_empty() {
            return Err(Error::parse(1, "empty V block"));
        }
        let hull = convex_hull(&vertices)?;
        if saw_h {
            let mut given: Vec<Facet<T>> = facets
                .into_iter()
                .map(|f| Facet::canonical(f.normal, f.offset))
                .collect();
            given.sort();
            if hull.facets() != Some(&given[..]) {
                return Err(Error::parse(1, "H block does not describe the hull of the V block"));
            }
        }
        Ok(hull)
    } else if saw_h {
        Ok(Polytope::from_hrep(n, facets))
    } else {
        Err(Error::parse(1, "no V or H block"))
    }
}

fn parse_row<T: Scalar>(line: &str, n: usize, line_no: usize) -> Result<Vector<T>> {
    let coords: Vec<T> = line
        .split_whitespace()
        .map(|tok| T::parse_exact(tok).ok_or_else(|| Error::parse(line_no, format!("bad number {tok:?}"))))
        .collect::<Result<_>>()?;
    if coords.len() != n {
        return Err(Error::parse(
            line_no,
            format!("expected {n} coordinates, found {}", coords.len()),
        ));
    }
    Ok(Vector::new(coords))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use proptest::prelude::*;

    type Q = BigRational;

    #[test]
    fn exact_round_trip() {
        let text = "dim 2\nV\n0 0\n0 1\n1 0\nH\n-1 0 <= 0\n0 -1 <= 0\n1 1 <= 1\n";
        let p: Polytope<Q> = parse_polytope(text).unwrap();
        assert_eq!(format_polytope(&p), text);
    }

    #[test]
    fn hrep_only_and_unicode_le() {
        let p: Polytope<Q> = parse_polytope("dim 1\nH\n1 ≤ 1/2\n-1 <= 1/2\n").unwrap();
        assert_eq!(format_polytope(&p), "dim 1\nH\n-1 <= 1/2\n1 <= 1/2\n");
        assert_eq!(p.vertex_list().unwrap().len(), 2);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let e = parse_polytope::<Q>("dim 2\nV\n0 0\n1 x\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 4, .. }));
        let e = parse_polytope::<Q>("dim 2\n0 0\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }));
        let e = parse_polytope::<Q>("dim 2\nV\n0 0\n1 0\n0 1\nH\n1 0 <= 5\n").unwrap_err();
        assert!(matches!(e, Error::Parse { .. }));
    }

    proptest! {
        #[test]
        fn emitted_text_reparses_identically(
            pts in proptest::collection::vec((-6i64..6, -6i64..6, 1i64..4), 1..12)
        ) {
            let points: Vec<Vector<Q>> = pts
                .iter()
                .map(|&(x, y, d)| Vector::new(vec![
                    Q::new(x.into(), d.into()),
                    Q::new(y.into(), 1.into()),
                ]))
                .collect();
            let p = convex_hull(&points).unwrap();
            let text = format_polytope(&p);
            let back: Polytope<Q> = parse_polytope(&text).unwrap();
            prop_assert_eq!(&back, &p);
            prop_assert_eq!(format_polytope(&back), text);
        }
    }
}
