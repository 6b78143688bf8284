//! Command-line driver for the isozono toolkit.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use isozono::catalog::{builtin_graph, d4_original_zonotope, GraphSpec};
use isozono::geometry::{parse_polytope, Vector};
use isozono::graph::{boundary_identity_report, LatticeSet, PLGraph};
use isozono::search::{
    analyze_result, convergence_experiment, exhaustive_search, local_search, symmetry_group, SearchOptions,
};
use isozono::zonotope::{homothety_check, Zonotope};
use isozono::{Polytope, Rational, Scalar};
use num_traits::Zero;

pub mod render;
pub mod reproduce;

#[derive(Parser, Debug)]
#[command(name = "isozono", version, about = "Exact edge-isoperimetry experiments on lattice graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GraphArg {
    /// Built-in name (l1:n, linf:n, tri, d4cross) or a graph spec file.
    #[arg(short, long)]
    pub graph: String,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check a graph spec and print its generators.
    Validate(GraphArg),
    /// Edge boundary of a point set, directly and per generator.
    Boundary {
        #[command(flatten)]
        graph: GraphArg,
        /// One point per line.
        #[arg(short, long)]
        set: PathBuf,
    },
    /// Data of the zonotope of a graph.
    Zonotope {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        fvector: bool,
        #[arg(long)]
        vertices: bool,
        #[arg(long)]
        facets: bool,
        #[arg(long)]
        volume: bool,
        /// Use original coordinates for graphs given in a lattice basis.
        #[arg(long)]
        original: bool,
    },
    /// Minimum edge boundary over m-point sets.
    Search {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(short, long)]
        m: usize,
        /// Half-width of the search box.
        #[arg(short, long, default_value_t = 3)]
        radius: i64,
        /// Simulated annealing instead of exhaustive search.
        #[arg(long)]
        heuristic: bool,
        #[arg(long, default_value_t = 200_000)]
        iterations: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Keep one witness per symmetry class.
        #[arg(long)]
        symmetry: bool,
        /// Only connected sets.
        #[arg(long)]
        connected: bool,
        /// Write each witness to DIR/witness_<i>.txt.
        #[arg(long)]
        witness_dir: Option<PathBuf>,
    },
    /// Section of the zonotope by x_axis = level.
    Section {
        #[command(flatten)]
        graph: GraphArg,
        /// 1-based coordinate index.
        #[arg(long)]
        axis: usize,
        #[arg(long, default_value = "0")]
        level: String,
        /// Write a figure of the section.
        #[arg(long)]
        render: Option<PathBuf>,
    },
    /// Lattice points and boundaries of αZ against their continuous values.
    Converge {
        #[command(flatten)]
        graph: GraphArg,
        /// `a..b` (integers) or a comma-separated list of rationals.
        #[arg(long, default_value = "1..20")]
        alphas: String,
    },
    /// Figure of a scaled zonotope or of a polytope file.
    Render {
        #[arg(short, long, conflicts_with = "polytope")]
        graph: Option<String>,
        #[arg(long, default_value = "1")]
        scale: String,
        #[arg(long)]
        polytope: Option<PathBuf>,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Run the regression criteria.
    Reproduce {
        /// Only this criterion (1-based).
        #[arg(long)]
        criterion: Option<usize>,
    },
}

/// Runs a command and returns the process exit code.
pub fn run(cli: Cli, out: &mut impl Write) -> Result<i32> {
    match cli.command {
        Command::Validate(g) => {
            let spec = load_spec(&g.graph)?;
            let graph = spec.validate()?;
            writeln!(out, "valid: {} (n = {}, k = {}, degree {})", spec.name, graph.dim(), graph.k(), graph.degree())?;
            for v in graph.generators() {
                writeln!(out, "{}", join(v))?;
            }
        }
        Command::Boundary { graph, set } => {
            let g = load_graph(&graph.graph)?;
            let text = fs::read_to_string(&set).with_context(|| format!("reading {}", set.display()))?;
            let s = LatticeSet::from_text(g.dim(), &text)?;
            let report = boundary_identity_report(&g, &s)?;
            writeln!(out, "direct\t{}", report.direct_count)?;
            writeln!(out, "generator\tprojection\tgaps")?;
            for (v, c) in g.generators().iter().zip(&report.per_generator) {
                writeln!(out, "{}\t{}\t{}", join(v), c.projection_count, c.gap_count)?;
            }
            writeln!(out, "formula\t{}", report.formula_count())?;
            writeln!(out, "identity\t{}", if report.identity_holds { "holds" } else { "fails" })?;
        }
        Command::Zonotope {
            graph,
            fvector,
            vertices,
            facets,
            volume,
            original,
        } => {
            let spec = load_spec(&graph.graph)?;
            let g = spec.graph()?;
            let z = if original && spec.name == "d4cross" {
                d4_original_zonotope()?
            } else if original {
                let gens: Vec<Vec<i64>> = g.generators().iter().map(|v| spec.to_original(v)).collect();
                Zonotope::new(g.dim(), &gens)?
            } else {
                Zonotope::from_graph(&g)
            };
            let all = !(fvector || vertices || facets || volume);
            if fvector || all {
                writeln!(out, "{}", z.f_vector())?;
            }
            if volume || all {
                writeln!(out, "volume {}", z.volume::<Rational>())?;
            }
            if vertices {
                for v in z.vertices() {
                    writeln!(out, "{}", join(&v))?;
                }
            }
            if facets {
                for u in z.facet_normals() {
                    writeln!(out, "{} <= {}", join(&u), z.support(&u))?;
                }
            }
        }
        Command::Search {
            graph,
            m,
            radius,
            heuristic,
            iterations,
            seed,
            symmetry,
            connected,
            witness_dir,
        } => {
            let spec = load_spec(&graph.graph)?;
            let g = spec.validate()?;
            let opts = SearchOptions {
                connected_only: connected,
                symmetry: if symmetry {
                    symmetry_group(g.dim(), &spec.symmetry_hints)
                } else {
                    Vec::new()
                },
                ..SearchOptions::default()
            };
            let result = if heuristic {
                local_search(&g, m, iterations, seed, &opts)?
            } else {
                exhaustive_search(&g, m, radius, &opts)?
            };
            let row = analyze_result(&g, &result)?;
            writeln!(out, "m\tmin_boundary\texhaustive\twitnesses\tzonotope_sets\tmatched")?;
            writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}\t{}",
                m,
                result.min_boundary,
                result.exhaustive,
                result.witnesses.len(),
                row.candidates.len(),
                row.matches.len()
            )?;
            if let Some(dir) = witness_dir {
                fs::create_dir_all(&dir)?;
                for (i, w) in result.witnesses.iter().enumerate() {
                    fs::write(dir.join(format!("witness_{i}.txt")), w.to_text())?;
                }
            }
        }
        Command::Section {
            graph,
            axis,
            level,
            render: figure,
        } => {
            let g = load_graph(&graph.graph)?;
            if axis == 0 || axis > g.dim() {
                bail!("axis must lie in 1..={}", g.dim());
            }
            let level = parse_rational(&level)?;
            let z = Zonotope::from_graph(&g);
            let section = z.hyperplane_section::<Rational>(axis - 1, &level)?;
            let verts = section.vertex_list()?;
            writeln!(out, "vertices {}", verts.len())?;
            for v in verts.iter() {
                writeln!(out, "{v}")?;
            }
            let lower = lower_zonotope(&g, axis - 1)?;
            let homothetic = match &lower {
                Some(p) if section.is_full_dimensional() => homothety_check(p, &section)?.is_some(),
                _ => false,
            };
            writeln!(out, "homothetic to Z_{}: {}", g.dim() - 1, if homothetic { "yes" } else { "no" })?;
            if let Some(path) = figure {
                fs::write(&path, render::render(&section)?)?;
            }
        }
        Command::Converge { graph, alphas } => {
            let g = load_graph(&graph.graph)?;
            let alphas = parse_alphas(&alphas)?;
            let rows = convergence_experiment(&g, &alphas)?;
            writeln!(out, "alpha\tpoints\tvolume\tdiscrete_boundary\tcontinuous_boundary\tvol_ratio\tboundary_ratio")?;
            for r in rows {
                writeln!(
                    out,
                    "{}\t{}\t{}\t{}\t{}\t{}\t{}",
                    r.alpha,
                    r.points,
                    r.volume,
                    r.discrete_boundary,
                    r.continuous_boundary,
                    r.vol_ratio,
                    r.boundary_ratio
                )?;
            }
        }
        Command::Render {
            graph,
            scale,
            polytope,
            out: path,
        } => {
            let p = match (graph, polytope) {
                (Some(name), None) => {
                    let g = load_graph(&name)?;
                    if !(2..=3).contains(&g.dim()) {
                        bail!("cannot render the {}-dimensional zonotope of {name}; need dimension 2 or 3", g.dim());
                    }
                    let scale = parse_rational(&scale)?;
                    if scale <= Rational::zero() {
                        bail!("scale must be positive");
                    }
                    Zonotope::from_graph(&g)
                        .polytope::<Rational>()
                        .transform(&scale, &Vector::zeros(g.dim()))?
                }
                (None, Some(file)) => {
                    let text = fs::read_to_string(&file).with_context(|| format!("reading {}", file.display()))?;
                    parse_polytope::<Rational>(&text)?.complete()?
                }
                _ => bail!("give either --graph or --polytope"),
            };
            fs::write(&path, render::render(&p)?)?;
            writeln!(out, "wrote {} ({} vertices)", path.display(), p.vertex_list()?.len())?;
        }
        Command::Reproduce { criterion } => {
            let outcomes = match criterion {
                Some(id) if (1..=reproduce::TITLES.len()).contains(&id) => vec![reproduce::run_criterion(id)],
                Some(id) => bail!("no criterion {id}"),
                None => {
                    let mut v = Vec::new();
                    for id in 1..=reproduce::TITLES.len() {
                        let o = reproduce::run_criterion(id);
                        writeln!(out, "{}", o.line())?;
                        v.push(o);
                    }
                    let failed = v.iter().filter(|o| !o.passed).count();
                    writeln!(out, "{} passed, {failed} failed", v.len() - failed)?;
                    return Ok(i32::from(failed > 0));
                }
            };
            for o in &outcomes {
                writeln!(out, "{}", o.line())?;
            }
            return Ok(i32::from(outcomes.iter().any(|o| !o.passed)));
        }
    }
    Ok(0)
}

/// A built-in name or the path of a graph spec file.
pub fn load_spec(name: &str) -> Result<GraphSpec> {
    if let Ok(spec) = builtin_graph(name) {
        return Ok(spec);
    }
    let path = Path::new(name);
    if !path.exists() {
        bail!("`{name}` is neither a built-in graph nor a file");
    }
    let text = fs::read_to_string(path).with_context(|| format!("reading {name}"))?;
    GraphSpec::from_text(&text).with_context(|| format!("parsing {name}"))
}

pub fn load_graph(name: &str) -> Result<PLGraph> {
    Ok(load_spec(name)?.validate()?)
}

/// The zonotope of the generators lying in `x_axis = 0`, with that axis
/// dropped; `None` if they do not span.
fn lower_zonotope(g: &PLGraph, axis: usize) -> Result<Option<Polytope>> {
    let gens: Vec<Vec<i64>> = g
        .generators()
        .iter()
        .filter(|v| v[axis] == 0)
        .map(|v| {
            let mut w = v.clone();
            w.remove(axis);
            w
        })
        .collect();
    match Zonotope::new(g.dim() - 1, &gens) {
        Ok(z) => Ok(Some(z.polytope())),
        Err(_) => Ok(None),
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    Rational::parse_exact(s).with_context(|| format!("`{s}` is not a rational number"))
}

pub fn parse_alphas(s: &str) -> Result<Vec<Rational>> {
    if let Some((a, b)) = s.split_once("..") {
        let a: i64 = a.trim().parse().with_context(|| format!("bad range start in `{s}`"))?;
        let b: i64 = b.trim().parse().with_context(|| format!("bad range end in `{s}`"))?;
        if a > b {
            bail!("empty range `{s}`");
        }
        return Ok((a..=b).map(Rational::from_i64).collect());
    }
    s.split(',').map(parse_rational).collect()
}

fn join(v: &[i64]) -> String {
    v.iter().map(i64::to_string).collect::<Vec<_>>().join(" ")
}
