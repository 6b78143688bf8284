//! Figure output: SVG for polygons, OFF for 3-polytopes. Coordinates are
//! printed with 12 significant digits.

use std::collections::HashMap;
use std::fmt::Write as _;

use anyhow::{bail, Context, Result};
use isozono::geometry::{convex_hull, Vector};
use isozono::scalar::to_decimal;
use isozono::{Polytope, Rational, RationalVector};
use num_traits::{Signed, Zero};

const DIGITS: usize = 12;

fn dec(x: &Rational) -> String {
    to_decimal(x, DIGITS)
}

/// SVG or OFF depending on the dimension.
pub fn render(p: &Polytope) -> Result<String> {
    match (p.ambient_dim(), p.dim()) {
        (2, 2) => render_svg(p),
        (3, 3) => render_off(p),
        (a, d) => bail!("cannot render a {d}-dimensional polytope in R^{a}; need a polygon or a 3-polytope"),
    }
}

/// File extension matching [`render`].
pub fn extension(p: &Polytope) -> &'static str {
    if p.ambient_dim() == 3 {
        "off"
    } else {
        "svg"
    }
}

/// A closed polygon with the y axis pointing up.
pub fn render_svg(p: &Polytope) -> Result<String> {
    let cycle = p.polygon_cycle().context("SVG output needs a full-dimensional polygon")?;
    let xs: Vec<&Rational> = cycle.iter().map(|v| &v[0]).collect();
    let ys: Vec<&Rational> = cycle.iter().map(|v| &v[1]).collect();
    let (min_x, max_x) = (xs.iter().min().unwrap(), xs.iter().max().unwrap());
    let (min_y, max_y) = (ys.iter().min().unwrap(), ys.iter().max().unwrap());
    let width = (*max_x).clone() - (*min_x).clone();
    let height = (*max_y).clone() - (*min_y).clone();
    let extent = width.clone().max(height.clone());
    let margin = extent.clone() / Rational::from_integer(20.into());
    let stroke = extent / Rational::from_integer(200.into());

    let points: Vec<String> = cycle
        .iter()
        .map(|v| format!("{},{}", dec(&v[0]), dec(&-v[1].clone())))
        .collect();
    let mut out = String::new();
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{} {} {} {}\">",
        dec(&((*min_x).clone() - margin.clone())),
        dec(&(-(*max_y).clone() - margin.clone())),
        dec(&(width + margin.clone() * Rational::from_integer(2.into()))),
        dec(&(height + margin * Rational::from_integer(2.into()))),
    )?;
    writeln!(
        out,
        "  <polygon points=\"{}\" fill=\"none\" stroke=\"black\" stroke-width=\"{}\"/>",
        points.join(" "),
        dec(&stroke)
    )?;
    out.push_str("</svg>\n");
    Ok(out)
}

/// Vertices, then one face per facet with its vertices in counterclockwise
/// order seen from outside.
pub fn render_off(p: &Polytope) -> Result<String> {
    let p = p.complete()?;
    let verts = p.vertex_list()?;
    let facets = p.facet_list()?;
    let incidence = p.incidence()?;
    let mut out = String::new();
    writeln!(out, "OFF")?;
    writeln!(out, "{} {} 0", verts.len(), facets.len())?;
    for v in verts.iter() {
        let row: Vec<String> = v.iter().map(dec).collect();
        writeln!(out, "{}", row.join(" "))?;
    }
    for (facet, on) in facets.iter().zip(&incidence) {
        let order = face_cycle(&verts, on, &facet.normal)?;
        let row: Vec<String> = order.iter().map(usize::to_string).collect();
        writeln!(out, "{} {}", order.len(), row.join(" "))?;
    }
    Ok(out)
}

fn face_cycle(verts: &[RationalVector], on: &[usize], normal: &RationalVector) -> Result<Vec<usize>> {
    let drop = (0..3)
        .max_by_key(|&i| normal[i].clone().abs())
        .expect("three coordinates");
    let mut back: HashMap<RationalVector, usize> = HashMap::new();
    let projected: Vec<RationalVector> = on
        .iter()
        .map(|&i| {
            let q = verts[i].drop_axis(drop);
            back.insert(q.clone(), i);
            q
        })
        .collect();
    let polygon = convex_hull(&projected)?;
    let mut order: Vec<usize> = polygon
        .polygon_cycle()?
        .iter()
        .map(|q| back[q])
        .collect();
    let a = verts[order[1]].sub(&verts[order[0]]);
    let b = verts[order[2]].sub(&verts[order[0]]);
    let cross = Vector::new(vec![
        a[1].clone() * b[2].clone() - a[2].clone() * b[1].clone(),
        a[2].clone() * b[0].clone() - a[0].clone() * b[2].clone(),
        a[0].clone() * b[1].clone() - a[1].clone() * b[0].clone(),
    ]);
    if cross.dot(normal) < Rational::zero() {
        order.reverse();
    }
    Ok(order)
}
