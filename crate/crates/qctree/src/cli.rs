//! Command-line front end: argument parsing, subcommand dispatch, and
//! report emission.
//!
//! Reports are JSON on stdout unless `--out` redirects them to a file; the
//! one exception is `graph arc`, which prints one word per line. Exit codes:
//! 0 on success, 1 on a domain error (bad codes, invalid trees, unsatisfied
//! preconditions), 2 on a usage error (unknown flags, missing arguments).
//! Rationals cross the process boundary as `"p/q"` strings so that output
//! fed back into another subcommand loses nothing.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use num::BigRational;
use serde_json::{json, Value};

use crate::words::{decimal_string, parse_ratio, ratio_string, PointCode, Weight, Word};
use crate::{branching, dimension, gluing, graphs, metric, planar, Alphabet, Error, Result};

#[derive(Parser)]
#[command(
    name = "qctree",
    version,
    about = "Exact geometry of self-similar metric trees",
    max_term_width = 100
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Weight selection shared by the metric subcommands: an explicit JSON file
/// or the uniform weight on `m` letters.
#[derive(Args)]
struct WeightArgs {
    /// Weight JSON file, e.g. {"m":3,"a":["1/2","1/2","1/4"]}.
    #[arg(long)]
    weights: Option<PathBuf>,
    /// Use the uniform weight a(i) = 1/2 on m letters instead of a file.
    #[arg(long)]
    m: Option<u32>,
}

impl WeightArgs {
    fn load(&self) -> Result<Weight> {
        match (&self.weights, self.m) {
            (Some(path), _) => Weight::from_json_str(&std::fs::read_to_string(path)?),
            (None, Some(m)) if m >= 2 => Ok(Weight::uniform(m)),
            (None, Some(m)) => Err(Error::InvalidParameter(format!(
                "uniform weight needs m >= 2, got {m}"
            ))),
            (None, None) => Err(Error::InvalidParameter(
                "need --weights FILE or --m INT".into(),
            )),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Model {
    /// The planar tree family with spur angle pi/(3m-3).
    CsstLike,
    /// The Vicsek cross on the diagonals of a square.
    Vicsek,
}

impl Model {
    fn name(self) -> &'static str {
        match self {
            Model::CsstLike => "csst-like",
            Model::Vicsek => "vicsek",
        }
    }

    fn skeleton(self, m: u32, depth: usize) -> Result<Vec<planar::Segment>> {
        match self {
            Model::CsstLike => {
                planar::skeleton(&planar::family_ifs(m)?, &planar::family_generator(), depth)
            }
            Model::Vicsek => planar::skeleton(
                &planar::vicsek_ifs(),
                &planar::vicsek_generators(),
                depth,
            ),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Svg,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    /// Branch heights (maximal reach from the branch point).
    Reach,
    /// Branch diameters in the geodesic realization.
    Diameter,
}

#[derive(Subcommand)]
enum Command {
    /// Exact distance between two points given by eventually periodic codes.
    Dist {
        #[command(flatten)]
        weight: WeightArgs,
        /// First point code, e.g. "(1)" or "1,2,(3)".
        #[arg(long)]
        x: String,
        /// Second point code.
        #[arg(long)]
        y: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Level-graph queries: adjacency, neighbor stars, arcs, structure checks.
    #[command(subcommand)]
    Graph(GraphCommand),
    /// Branch points up to a stem level, with canonical codes and heights.
    Branches {
        #[command(flatten)]
        weight: WeightArgs,
        /// Maximal stem length to enumerate.
        #[arg(long, default_value_t = 3)]
        level: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Tile boundary gates and neighbor tiles of a word.
    Tiles {
        #[command(flatten)]
        weight: WeightArgs,
        /// The tile word, e.g. "1,2".
        #[arg(long)]
        word: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Similarity dimension from the Moran equation, or the tail-sum certificate.
    Dim {
        #[command(flatten)]
        weight: WeightArgs,
        /// Bisection tolerance for the exponent.
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
        /// Certify the infinite-alphabet dimension bound instead.
        #[arg(long)]
        infinite: bool,
        /// Exponent to certify (with --infinite).
        #[arg(long)]
        s: Option<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Render a planar skeleton to SVG or CSV.
    Render {
        #[arg(long, value_enum)]
        model: Model,
        /// Alphabet size for the csst-like family (ignored by vicsek).
        #[arg(long, default_value_t = 3)]
        m: u32,
        #[arg(long, default_value_t = 4)]
        depth: usize,
        /// Output format; defaults to the --out extension, else svg.
        #[arg(long, value_enum)]
        format: Option<OutputFormat>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run branch-structure property checks at a level.
    Verify {
        #[command(flatten)]
        weight: WeightArgs,
        #[arg(long, default_value_t = 3)]
        level: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Apply a gluing transform (step 1, 2, or 3) to a tree JSON file.
    Glue {
        /// Input tree JSON {"vertices":[...],"edges":[["a","b","1/2"],...]}.
        #[arg(long = "in")]
        input: PathBuf,
        /// 1 = uniform growth, 2 = uniform valence, 3 = attach scaled skeletons.
        #[arg(long)]
        step: u8,
        #[command(flatten)]
        weight: WeightArgs,
        /// Scale base for step 3; must lie in (0, 1/3).
        #[arg(long, default_value = "1/4")]
        delta: String,
        /// Step-3 scale prefactor (a free choice, defaulting to 1/2).
        #[arg(long, default_value = "1/2")]
        c: String,
        /// Truncation depth of the attached skeletons.
        #[arg(long, default_value_t = 1)]
        depth: usize,
        /// JSON file [["vertex",level],...] of double points for step 3;
        /// without it, points are generated by subdividing every edge at
        /// spacing delta (a stand-in for an externally supplied set).
        #[arg(long)]
        vertices: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check separation, growth, and density constants of a finite tree.
    #[command(name = "verify-tree")]
    VerifyTree {
        /// Input tree JSON.
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Reach)]
        mode: Mode,
        /// Optional bound "p/q"; pass/fail is reported against it.
        #[arg(long)]
        bound: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sampled Hausdorff distance between two skeleton depths.
    Hausdorff {
        #[arg(long, value_enum)]
        model: Model,
        /// Alphabet size for the csst-like family (ignored by vicsek).
        #[arg(long, default_value_t = 3)]
        m: u32,
        #[arg(long)]
        depth: usize,
        /// Second depth; defaults to depth + 1.
        #[arg(long)]
        depth2: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum GraphCommand {
    /// Whether two same-length words are adjacent in their level graph.
    Adjacent {
        #[arg(long)]
        w: String,
        #[arg(long)]
        u: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// All words adjacent to the given word, for an m-letter alphabet.
    Neighbors {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        word: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Vertices of the arc joining two words, one per line.
    Arc {
        /// Optional alphabet size; when given, the endpoint letters are checked.
        #[arg(long)]
        m: Option<u32>,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare the closed-form adjacency against the inductive edge sets.
    Check {
        #[arg(long)]
        m: u32,
        #[arg(long, default_value_t = 3)]
        level: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Parses arguments and runs one subcommand, writing reports to `out`.
/// Returns the process exit code: 0 success, 1 domain error, 2 usage error.
pub fn run<I, T>(args: I, out: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    eprint!("{e}");
                    2
                }
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

fn emit(out: &mut impl Write, path: Option<&Path>, content: &str) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, content)?,
        None => {
            out.write_all(content.as_bytes())?;
            if !content.ends_with('\n') {
                writeln!(out)?;
            }
        }
    }
    Ok(())
}

fn pretty(value: &Value) -> String {
    serde_json::to_string_pretty(value).expect("JSON reports serialize")
}

fn witness_json(cw: &Option<gluing::ConstantWitness>) -> Value {
    match cw {
        None => Value::Null,
        Some(cw) => json!({
            "constant": ratio_string(&cw.constant),
            "witness": cw.witness,
        }),
    }
}

fn dispatch(command: Command, out: &mut impl Write) -> Result<()> {
    match command {
        Command::Dist { weight, x, y, out: path } => {
            let a = weight.load()?;
            let px: PointCode = x.parse()?;
            let py: PointCode = y.parse()?;
            let d = metric::distance_exact(&px, &py, &a)?;
            let report = json!({
                "x": px.canonical().to_string(),
                "y": py.canonical().to_string(),
                "rational": ratio_string(&d),
                "decimal": decimal_string(&d, 12),
            });
            emit(out, path.as_deref(), &pretty(&report))
        }
        Command::Graph(graph) => dispatch_graph(graph, out),
        Command::Branches { weight, level, out: path } => {
            let a = weight.load()?;
            let points = branching::branch_points(level, &a)?;
            let report = json!({
                "level": level,
                "count": points.len(),
                "branch_points": points.iter().map(|p| json!({
                    "stem": p.stem.to_string(),
                    "code": p.code.to_string(),
                    "height": ratio_string(&p.height_diam),
                })).collect::<Vec<_>>(),
            });
            emit(out, path.as_deref(), &pretty(&report))
        }
        Command::Tiles { weight, word, out: path } => {
            let a = weight.load()?;
            let w: Word = word.parse()?;
            let boundary: Vec<String> = branching::tile_boundary(&w)
                .iter()
                .map(|c| c.to_string())
                .collect();
            let report = branching::neighbor_tiles(&w, &a)?;
            let value = json!({
                "word": w.to_string(),
                "boundary": boundary,
                "neighbors": report.neighbors.iter().map(|n| json!({
                    "word": n.word.to_string(),
                    "ratio": ratio_string(&n.ratio),
                })).collect::<Vec<_>>(),
                "low": report.low.as_ref().map(ratio_string),
                "high": report.high.as_ref().map(ratio_string),
                "all_within_bounds": report.all_within_bounds,
            });
            emit(out, path.as_deref(), &pretty(&value))
        }
        Command::Dim { weight, tol, infinite, s, out: path } => {
            let a = weight.load()?;
            let value = if infinite {
                let s = s.ok_or_else(|| {
                    Error::InvalidParameter("--infinite needs --s EXPONENT".into())
                })?;
                let sum = dimension::alphabet_sum(&a, s)?;
                json!({
                    "s": s,
                    "sum": if sum.is_finite() { json!(sum) } else { json!("divergent") },
                    "certified": dimension::dimension_bound_infinity(&a, s)?,
                })
            } else {
                if a.is_infinite() {
                    return Err(Error::InvalidParameter(
                        "geometric-tail weights take --infinite --s EXPONENT".into(),
                    ));
                }
                let sol = dimension::moran_dimension(a.m(), &a, tol)?;
                json!({
                    "m": a.m(),
                    "exponent": sol.exponent,
                    "residual": sol.residual,
                    "bracket": [sol.bracket.0, sol.bracket.1],
                })
            };
            emit(out, path.as_deref(), &pretty(&value))
        }
        Command::Render { model, m, depth, format, out: path } => {
            let segments = model.skeleton(m, depth)?;
            let format = format.unwrap_or_else(|| match &path {
                Some(p) if p.extension().map_or(false, |e| e == "csv") => OutputFormat::Csv,
                _ => OutputFormat::Svg,
            });
            let content = match format {
                OutputFormat::Svg => planar::svg_string(&segments),
                OutputFormat::Csv => planar::csv_string(&segments),
            };
            emit(out, path.as_deref(), &content)
        }
        Command::Verify { weight, level, out: path } => {
            let a = weight.load()?;
            let mut reports = vec![branching::verify_separation(level, &a)?];
            reports.extend(branching::verify_uniform_branching(level, &a)?);
            let value = serde_json::to_value(&reports)?;
            emit(out, path.as_deref(), &pretty(&value))
        }
        Command::Glue { input, step, weight, delta, c, depth, vertices, out: path } => {
            let tree = gluing::FiniteGeodesicTree::from_json_str(&std::fs::read_to_string(
                &input,
            )?)?;
            let result = match step {
                1 => gluing::step1_uniform_growth(&tree)?,
                2 => {
                    let m = weight.m.ok_or_else(|| {
                        Error::InvalidParameter("step 2 needs --m VALENCE".into())
                    })?;
                    gluing::step2_uniform_valence(&tree, m as usize)?
                }
                3 => {
                    let a = weight.load()?;
                    let m = weight.m.unwrap_or(a.m());
                    let delta = parse_ratio(&delta)?;
                    let c = parse_ratio(&c)?;
                    let (base, points) = match vertices {
                        Some(vpath) => {
                            let listed: Vec<(String, u32)> =
                                serde_json::from_str(&std::fs::read_to_string(&vpath)?)?;
                            (tree, listed)
                        }
                        None => gluing::subdivision_points(&tree, &delta, 1)?,
                    };
                    gluing::step3_attach(&base, &points, m, &a, &delta, &c, depth)?
                }
                other => {
                    return Err(Error::InvalidParameter(format!(
                        "step must be 1, 2, or 3, got {other}"
                    )))
                }
            };
            emit(out, path.as_deref(), &result.to_json_string())
        }
        Command::VerifyTree { input, mode, bound, out: path } => {
            let tree = gluing::FiniteGeodesicTree::from_json_str(&std::fs::read_to_string(
                &input,
            )?)?;
            let bound: Option<BigRational> = bound.as_deref().map(parse_ratio).transpose()?;
            let (mode, label) = match mode {
                Mode::Reach => (gluing::HeightMode::Reach, "reach"),
                Mode::Diameter => (gluing::HeightMode::Diameter, "diameter"),
            };
            let report = gluing::verify_tree_properties(&tree, mode, bound.as_ref())?;
            let value = json!({
                "mode": label,
                "branch_points": report.branch_points,
                "separation": witness_json(&report.separation),
                "growth": witness_json(&report.growth),
                "density": witness_json(&report.density),
                "density_uncovered": report.density_uncovered,
                "bound": bound.as_ref().map(ratio_string),
                "pass": report.pass,
            });
            emit(out, path.as_deref(), &pretty(&value))
        }
        Command::Hausdorff { model, m, depth, depth2, out: path } => {
            let depth2 = depth2.unwrap_or(depth + 1);
            let coarse = planar::sample_points(&model.skeleton(m, depth)?, 16);
            let fine = planar::sample_points(&model.skeleton(m, depth2)?, 16);
            let value = json!({
                "model": model.name(),
                "depth": depth,
                "depth2": depth2,
                "distance": planar::hausdorff_distance(&coarse, &fine),
            });
            emit(out, path.as_deref(), &pretty(&value))
        }
    }
}

fn dispatch_graph(command: GraphCommand, out: &mut impl Write) -> Result<()> {
    match command {
        GraphCommand::Adjacent { w, u, out: path } => {
            let ww: Word = w.parse()?;
            let uu: Word = u.parse()?;
            let value = json!({
                "w": ww.to_string(),
                "u": uu.to_string(),
                "adjacent": graphs::adjacent(&ww, &uu)?,
            });
            emit(out, path.as_deref(), &pretty(&value))
        }
        GraphCommand::Neighbors { m, word, out: path } => {
            let w: Word = word.parse()?;
            let list = graphs::neighbors(&w, Alphabet::Finite(m))?;
            let value = json!({
                "word": w.to_string(),
                "neighbors": list.iter().map(|n| n.to_string()).collect::<Vec<_>>(),
            });
            emit(out, path.as_deref(), &pretty(&value))
        }
        GraphCommand::Arc { m, from, to, out: path } => {
            let w: Word = from.parse()?;
            let u: Word = to.parse()?;
            if let Some(m) = m {
                for l in w.letters().iter().chain(u.letters()) {
                    if *l > m {
                        return Err(Error::LetterOutOfRange(*l, m));
                    }
                }
            }
            let arc = graphs::arc(&w, &u)?;
            let mut text = String::new();
            for v in &arc {
                text.push_str(&v.to_string());
                text.push('\n');
            }
            emit(out, path.as_deref(), &text)
        }
        GraphCommand::Check { m, level, out: path } => {
            let report = graphs::verify_tree_structure(level, m)?;
            let value = json!({
                "level": report.level,
                "m": report.m,
                "vertices": report.vertices,
                "edges": report.edges,
                "connected": report.connected,
                "passed": report.passed,
            });
            emit(out, path.as_deref(), &pretty(&value))
        }
    }
}
