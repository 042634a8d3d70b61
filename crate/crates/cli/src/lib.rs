//! The `tropconv` command-line tool.
//!
//! [`run`] parses arguments, executes one command and returns the exit code
//! together with everything meant for stdout and stderr, so the binary and
//! the tests share one code path.

pub mod error;
pub mod input;
pub mod report;
pub mod svg;

use std::ffi::OsString;
use std::io::Read;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use tropconv::membership::certificate;
use tropconv::tropdet::solve;
use tropconv::{
    cube, facets2d, hull, hull_triple_sort_bucketed, hypersimplex, minimal_halfspaces2d, pseudovertices,
    segment_breakpoints, standard_simplex, tau, tau_closure, AffinePoint2, Halfspace, HullAlgorithm, HullStats,
    MembershipCertificate, Polytope, TdetConfig, TropMatrix, TropPoint,
};

use error::{exit, CliError, CliResult};
use input::{parse_point_arg, parse_points, parse_rows, read_source, write_points, Mode};
use report::*;
use svg::{render_svg, RenderOptions};

#[derive(Debug, Parser)]
#[command(name = "tropconv", version, about = "Tropical convexity: hulls, membership, determinants")]
struct Cli {
    /// Print results as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Read and write points in affine chart coordinates (a leading 0 is implied).
    #[arg(long, global = true)]
    affine: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Algo {
    Triple,
    Jarvis,
    Chan,
}

impl Algo {
    fn name(self) -> &'static str {
        match self {
            Algo::Triple => "triple",
            Algo::Jarvis => "jarvis",
            Algo::Chan => "chan",
        }
    }

    fn algorithm(self) -> HullAlgorithm {
        match self {
            Algo::Triple => HullAlgorithm::TripleSort,
            Algo::Jarvis => HullAlgorithm::Jarvis,
            Algo::Chan => HullAlgorithm::Chan,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BenchAlgo {
    Triple,
    Bucketed,
    Jarvis,
    Chan,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Workload {
    /// Uniform points in the unit square.
    Uniform,
    /// `h` hull vertices on a circle plus a uniform cloud inside.
    Cloud,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Counter-clockwise hull vertices of a planar point set.
    Hull {
        #[arg(long, value_enum, default_value_t = Algo::Triple)]
        algo: Algo,
        file: Option<String>,
    },
    /// Minimal generating set, in input order (any dimension).
    Vertices { file: Option<String> },
    /// Membership certificate of POINT in the hull of the file's points.
    Contains {
        #[arg(allow_hyphen_values = true)]
        point: String,
        file: Option<String>,
    },
    /// A closed halfspace separating POINT from the hull.
    Separate {
        #[arg(allow_hyphen_values = true)]
        point: String,
        file: Option<String>,
    },
    /// Tropical determinant of a square matrix (with --affine, rows are chart coordinates).
    Tdet { file: Option<String> },
    /// Tropical determinant and sign of a square matrix.
    Tsgn { file: Option<String> },
    /// Orientation of POINT relative to the d points of the file.
    Tau {
        #[arg(allow_hyphen_values = true)]
        point: String,
        file: Option<String>,
    },
    /// Minimal set of closed halfspaces cutting out a planar hull.
    Halfspaces { file: Option<String> },
    /// Pseudovertices on the boundary of a planar hull.
    Pseudovertices { file: Option<String> },
    /// Facets and f-vector of a planar hull.
    Facets { file: Option<String> },
    /// Print a named point set.
    Gen {
        #[command(subcommand)]
        family: Family,
    },
    /// Draw a planar hull as SVG.
    Render {
        /// Output path, or `-` for stdout.
        #[arg(long)]
        out: String,
        /// Lines of the three directions through the vertices.
        #[arg(long)]
        arrangement: bool,
        /// Mark pseudovertices.
        #[arg(long)]
        pseudovertices: bool,
        /// Shade a halfspace given as APEX:K, e.g. `0,0,0:1,2`.
        #[arg(long, allow_hyphen_values = true)]
        halfspace: Option<String>,
        file: Option<String>,
    },
    /// Time the hull algorithms on seeded floating-point workloads.
    Bench {
        #[arg(long, value_enum, default_value_t = Workload::Cloud)]
        workload: Workload,
        #[arg(long, default_value_t = 100_000)]
        n: usize,
        /// Hull size for the cloud workload.
        #[arg(long, default_value_t = 20)]
        h: usize,
        #[arg(long, default_value_t = 3)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = BenchAlgo::All)]
        algo: BenchAlgo,
        /// Leave out wall-clock times, making the output reproducible.
        #[arg(long)]
        no_timing: bool,
    },
}

#[derive(Debug, Subcommand)]
enum Family {
    /// Vertices of the hypersimplex Δ_k^d.
    Hypersimplex { d: usize, k: usize },
    /// Generators of the tropical cube [-1, 1]^d.
    Cube { d: usize },
    /// The standard simplex Δ^d.
    Simplex { d: usize },
}

/// Result of one invocation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs the tool on `args` (including the program name).
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { exit::USAGE } else { exit::OK };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code, stdout: String::new(), stderr: text }
            } else {
                Outcome { code, stdout: text, stderr: String::new() }
            };
        }
    };
    let mut stderr = String::new();
    match execute(&cli, stdin, &mut stderr) {
        Ok((code, stdout)) => Outcome { code, stdout, stderr },
        Err(e) => {
            stderr.push_str(&format!("error: {e}\n"));
            Outcome {
                code: e.exit_code(),
                stdout: String::new(),
                stderr,
            }
        }
    }
}

fn emit<R: Report>(r: &R, json: bool) -> (i32, String) {
    let text = if json {
        serde_json::to_string_pretty(r).expect("reports serialize") + "\n"
    } else {
        r.plain()
    };
    (r.exit_code(), text)
}

fn load(file: &Option<String>, mode: Mode, stdin: &mut dyn Read) -> CliResult<Vec<TropPoint>> {
    let (text, source) = read_source(file.as_deref(), stdin)?;
    let points = parse_points(&text, &source, mode)?;
    let d = points[0].dim();
    if let Some(p) = points.iter().find(|p| p.dim() != d) {
        return Err(CliError::Dimension(format!("mixed dimensions {d} and {}", p.dim())));
    }
    Ok(points)
}

fn planar(points: &[TropPoint]) -> CliResult<Vec<AffinePoint2>> {
    points
        .iter()
        .map(|p| {
            AffinePoint2::from_trop(p)
                .map_err(|_| CliError::Dimension(format!("this command needs points of TP^2, got TP^{}", p.dim())))
        })
        .collect()
}

fn chart_coords(p: &AffinePoint2, mode: Mode) -> Coords {
    coords(&p.to_trop(), mode)
}

fn same_dim(points: &[TropPoint], x: &TropPoint) -> CliResult<()> {
    if x.dim() != points[0].dim() {
        return Err(CliError::Dimension(format!(
            "point is in TP^{} but the input is in TP^{}",
            x.dim(),
            points[0].dim()
        )));
    }
    Ok(())
}

fn parse_halfspace(arg: &str, mode: Mode) -> CliResult<Halfspace> {
    let (apex, ks) = arg
        .rsplit_once(':')
        .ok_or_else(|| CliError::Usage(format!("halfspace `{arg}` must look like APEX:K, e.g. 0,0,0:1,2")))?;
    let apex = parse_point_arg(apex, mode)?;
    let ks = ks
        .split(',')
        .filter(|t| !t.is_empty())
        .map(|t| t.trim().parse::<usize>().map_err(|_| CliError::Usage(format!("invalid sector index `{t}`"))))
        .collect::<CliResult<Vec<usize>>>()?;
    Ok(Halfspace::closed(apex, ks)?)
}

fn matrix(file: &Option<String>, mode: Mode, stdin: &mut dyn Read) -> CliResult<TropMatrix> {
    let (text, source) = read_source(file.as_deref(), stdin)?;
    let rows = parse_rows(&text, &source)?;
    let rows: Vec<Vec<_>> = rows
        .rows
        .into_iter()
        .map(|(_, r)| match mode {
            Mode::Projective => r,
            Mode::Affine => std::iter::once(tropconv::rat(0)).chain(r).collect(),
        })
        .collect();
    Ok(TropMatrix::new(rows)?)
}

fn execute(cli: &Cli, stdin: &mut dyn Read, stderr: &mut String) -> CliResult<(i32, String)> {
    let mode = if cli.affine { Mode::Affine } else { Mode::Projective };
    let json = cli.json;
    match &cli.command {
        Command::Hull { algo, file } => {
            let pts = planar(&load(file, mode, stdin)?)?;
            let h = hull(&pts, algo.algorithm())?;
            Ok(emit(
                &HullReport {
                    command: "hull",
                    algorithm: algo.name(),
                    vertices: h.vertices.iter().map(|v| chart_coords(v, mode)).collect(),
                    vertex_indices: h.vertex_indices.clone(),
                    stats: HullStatsReport {
                        comparisons: h.stats.comparisons,
                        tau_evals: h.stats.tau_evals,
                        rounds: h.stats.rounds,
                    },
                },
                json,
            ))
        }
        Command::Vertices { file } => {
            let pts = load(file, mode, stdin)?;
            let poly = Polytope::new(pts.clone())?;
            let indices = poly
                .vertices()
                .iter()
                .map(|v| pts.iter().position(|p| p == v).expect("vertices are generators"))
                .collect();
            Ok(emit(
                &VerticesReport {
                    command: "vertices",
                    dimension: poly.dim(),
                    vertices: poly.vertices().iter().map(|v| coords(v, mode)).collect(),
                    indices,
                },
                json,
            ))
        }
        Command::Contains { point, file } => {
            let x = parse_point_arg(point, mode)?;
            let pts = load(file, mode, stdin)?;
            same_dim(&pts, &x)?;
            let report = match certificate(&pts, &x)? {
                MembershipCertificate::Member { coefficients, witnesses } => ContainsReport {
                    command: "contains",
                    point: coords(&x, mode),
                    member: true,
                    coefficients: Some(coefficients.iter().map(rat).collect()),
                    witnesses: Some(witnesses),
                    missing_sector: None,
                },
                MembershipCertificate::NonMember { missing_sector } => ContainsReport {
                    command: "contains",
                    point: coords(&x, mode),
                    member: false,
                    coefficients: None,
                    witnesses: None,
                    missing_sector: Some(missing_sector),
                },
            };
            Ok(emit(&report, json))
        }
        Command::Separate { point, file } => {
            let x = parse_point_arg(point, mode)?;
            let pts = load(file, mode, stdin)?;
            same_dim(&pts, &x)?;
            let h = Polytope::new(pts)?.separate(&x)?;
            Ok(emit(
                &SeparateReport {
                    command: "separate",
                    point: coords(&x, mode),
                    halfspace: HalfspaceReport::new(&h, mode),
                },
                json,
            ))
        }
        Command::Tdet { file } | Command::Tsgn { file } => {
            let m = matrix(file, mode, stdin)?;
            let r = solve(&m, TdetConfig::global(), false);
            let command = if matches!(cli.command, Command::Tdet { .. }) { "tdet" } else { "tsgn" };
            Ok(emit(
                &TdetReport {
                    command,
                    size: m.size(),
                    value: rat(&r.value),
                    singular: r.is_singular(),
                    sign: r.tsgn().to_i8(),
                },
                json,
            ))
        }
        Command::Tau { point, file } => {
            let x = parse_point_arg(point, mode)?;
            let pts = load(file, mode, stdin)?;
            same_dim(&pts, &x)?;
            Ok(emit(
                &TauReport {
                    command: "tau",
                    point: coords(&x, mode),
                    tau: tau(&pts, &x)?.to_i8(),
                    tau_closure: tau_closure(&pts, &x)?.to_i8(),
                },
                json,
            ))
        }
        Command::Halfspaces { file } => {
            let pts = planar(&load(file, mode, stdin)?)?;
            let set = minimal_halfspaces2d(&pts)?;
            let warning = set.warning.as_ref().map(|w| WarningReport {
                message: "the hull is not full-dimensional; the listed halfspaces do not cut it out".to_string(),
                witness: HalfspaceReport::new(&w.witness, mode),
            });
            if let Some(w) = &warning {
                stderr.push_str(&format!("warning: {} (witness {})\n", w.message, w.witness.apex.join(" ")));
            }
            Ok(emit(
                &HalfspacesReport {
                    command: "halfspaces",
                    halfspaces: set.halfspaces.iter().map(|h| HalfspaceReport::new(h, mode)).collect(),
                    warning,
                },
                json,
            ))
        }
        Command::Pseudovertices { file } => {
            let pts = planar(&load(file, mode, stdin)?)?;
            Ok(emit(
                &PointsReport {
                    command: "pseudovertices",
                    points: pseudovertices(&pts)?.iter().map(|p| chart_coords(p, mode)).collect(),
                },
                json,
            ))
        }
        Command::Facets { file } => {
            let pts = planar(&load(file, mode, stdin)?)?;
            let f = facets2d(&pts)?;
            let facets = f
                .facets
                .iter()
                .map(|(u, w)| {
                    let pieces = segment_breakpoints(&u.to_trop(), &w.to_trop())?;
                    Ok(FacetReport {
                        from: chart_coords(u, mode),
                        to: chart_coords(w, mode),
                        breakpoints: pieces.iter().map(|p| coords(p, mode)).collect(),
                    })
                })
                .collect::<CliResult<Vec<_>>>()?;
            Ok(emit(
                &FacetsReport {
                    command: "facets",
                    facets,
                    f_vector: f.lattice.f_vector(),
                },
                json,
            ))
        }
        Command::Gen { family } => {
            let (name, d, k, pts) = match *family {
                Family::Hypersimplex { d, k } => ("hypersimplex", d, Some(k), hypersimplex(d, k)?),
                Family::Cube { d } => ("cube", d, None, cube(d)?),
                Family::Simplex { d } => ("simplex", d, None, standard_simplex(d)?),
            };
            Ok(emit(
                &GenReport {
                    command: "gen",
                    family: name,
                    dimension: d,
                    k,
                    points: pts.iter().map(|p| coords(p, mode)).collect(),
                    file: write_points(&pts, mode),
                },
                json,
            ))
        }
        Command::Render {
            out,
            arrangement,
            pseudovertices: with_pv,
            halfspace,
            file,
        } => {
            let halfspace = halfspace.as_deref().map(|h| parse_halfspace(h, mode)).transpose()?;
            let raw = load(file, mode, stdin)?;
            let pts = planar(&raw)?;
            if let Some(h) = &halfspace {
                if h.dim() != 2 {
                    return Err(CliError::Dimension(format!("halfspace apex is in TP^{}", h.dim())));
                }
            }
            let h = hull(&pts, HullAlgorithm::TripleSort)?;
            let options = RenderOptions {
                arrangement: *arrangement,
                pseudovertices: if *with_pv { Some(pseudovertices(&pts)?) } else { None },
                halfspace,
            };
            let doc = render_svg(&pts, &h.vertices, &options);
            let facets = match h.vertices.len() {
                0 | 1 => 0,
                2 => 1,
                n => n,
            };
            if out == "-" {
                return Ok((exit::OK, doc));
            }
            std::fs::write(out, &doc).map_err(|e| CliError::Io(format!("{out}: {e}")))?;
            Ok(emit(
                &RenderReport {
                    command: "render",
                    out: out.clone(),
                    bytes: doc.len(),
                    vertices: h.vertices.len(),
                    facets,
                },
                json,
            ))
        }
        Command::Bench {
            workload,
            n,
            h,
            trials,
            seed,
            algo,
            no_timing,
        } => {
            if *n == 0 {
                return Err(CliError::Usage("--n must be positive".to_string()));
            }
            let algos: Vec<BenchAlgo> = match algo {
                BenchAlgo::All => vec![BenchAlgo::Triple, BenchAlgo::Bucketed, BenchAlgo::Jarvis, BenchAlgo::Chan],
                a => vec![*a],
            };
            let mut rows = Vec::new();
            for t in 0..*trials {
                let s = seed + t as u64;
                let pts = match workload {
                    Workload::Uniform => tropconv_bench::uniform_square(*n, s),
                    Workload::Cloud => tropconv_bench::hull_with_cloud(*n, *h, s),
                };
                for a in &algos {
                    let start = Instant::now();
                    let (name, r) = match a {
                        BenchAlgo::Triple => ("triple", hull(&pts, HullAlgorithm::TripleSort)?),
                        BenchAlgo::Bucketed => ("bucketed", hull_triple_sort_bucketed(&pts)?),
                        BenchAlgo::Jarvis => ("jarvis", hull(&pts, HullAlgorithm::Jarvis)?),
                        BenchAlgo::Chan | BenchAlgo::All => ("chan", hull(&pts, HullAlgorithm::Chan)?),
                    };
                    let elapsed = start.elapsed().as_secs_f64() * 1e3;
                    let HullStats { comparisons, tau_evals, rounds } = r.stats;
                    rows.push(TrialReport {
                        trial: t,
                        seed: s,
                        algorithm: name,
                        n: *n,
                        vertices: r.vertices.len(),
                        comparisons,
                        tau_evals,
                        rounds,
                        millis: if *no_timing { None } else { Some(elapsed) },
                    });
                }
            }
            Ok(emit(
                &BenchReport {
                    command: "bench",
                    workload: match workload {
                        Workload::Uniform => "uniform",
                        Workload::Cloud => "cloud",
                    },
                    trials: rows,
                },
                json,
            ))
        }
    }
}
