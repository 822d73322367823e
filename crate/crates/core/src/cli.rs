//! Command-line front end. [`run`] does all the work so it can be tested
//! without spawning a process; the binary only prints the result.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use crate::bounds::{bounds_report, BoundsOptions};
use crate::corpus;
use crate::error::{Error, Result};
use crate::graph::PlanarEmbedding;
use crate::grinberg::{self, FaceLengthVector};
use crate::reduction::reduction_report_anchored;
use crate::walks::{self, ClosedWalk, DEFAULT_SOLVE_LIMIT, DEFAULT_SPECTRUM_LIMIT};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "hamnum",
    version,
    about = "Grinberg bounds and Hamiltonian numbers of planar graphs"
)]
struct Cli {
    /// Emit a JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Suppress human-readable output.
    #[arg(long, short, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct WalkArgs {
    /// Graph file.
    file: PathBuf,
    /// Walk file.
    #[arg(long)]
    walk: PathBuf,
    /// Host face pinned to the `+` class (display only).
    #[arg(long = "outer-face")]
    outer_face: Option<usize>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Trace and list the faces of an embedding.
    Faces { file: PathBuf },
    /// Grinberg set and number, from a graph file or a literal face-length list.
    Grinberg {
        #[arg(required_unless_present = "face_lengths", conflicts_with = "face_lengths")]
        file: Option<PathBuf>,
        #[arg(long = "face-lengths", value_name = "L1,L2,...")]
        face_lengths: Option<String>,
    },
    /// Upper and lower bounds on the Hamiltonian number.
    Bounds {
        file: PathBuf,
        /// Also compute the exact value.
        #[arg(long)]
        solve: bool,
        #[arg(long, default_value_t = DEFAULT_SOLVE_LIMIT)]
        limit: usize,
        /// A known closed spanning walk, used as an upper bound.
        #[arg(long)]
        walk: Option<PathBuf>,
    },
    /// Exact Hamiltonian number and an optimal walk.
    Solve {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_SOLVE_LIMIT)]
        limit: usize,
    },
    /// Hamiltonian spectrum by exhaustive enumeration.
    Spectrum {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_SPECTRUM_LIMIT)]
        limit: usize,
    },
    /// Validate a closed spanning walk and report its repeats.
    Verify {
        file: PathBuf,
        #[arg(long)]
        walk: PathBuf,
    },
    /// Reduction of the graph relative to a walk, with all identity checks.
    Reduce(WalkArgs),
    /// Reduction plus a pass/fail verdict on the repeat bound.
    #[command(name = "theorem-check")]
    TheoremCheck(WalkArgs),
    /// Emit a built-in fixture in the graph (or walk) file format.
    Corpus {
        name: String,
        params: Vec<String>,
        /// Emit the fixture's witness walks instead of the graph.
        #[arg(long)]
        walks: bool,
    },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CommandResult {
    pub code: i32,
    /// Human-readable output for stdout.
    pub text: String,
    /// JSON document for stdout; present exactly when `--json` was given.
    pub json: Option<String>,
    /// Diagnostics for stderr.
    pub diagnostics: String,
}

impl CommandResult {
    /// What the binary writes to stdout.
    pub fn stdout(&self) -> String {
        match &self.json {
            Some(doc) => format!("{doc}\n"),
            None => self.text.clone(),
        }
    }
}

struct Output {
    text: String,
    json: serde_json::Value,
    warnings: Vec<String>,
    code: i32,
}

impl Output {
    fn new(text: String, json: serde_json::Value) -> Self {
        Output {
            text,
            json,
            warnings: Vec::new(),
            code: EXIT_OK,
        }
    }
}

pub fn run<I, T>(argv: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => CommandResult {
                    code: EXIT_OK,
                    text: rendered,
                    ..CommandResult::default()
                },
                _ => CommandResult {
                    code: EXIT_USAGE,
                    diagnostics: rendered,
                    ..CommandResult::default()
                },
            };
        }
    };
    match execute(&cli.command) {
        Ok(out) => {
            let mut diagnostics = String::new();
            for w in &out.warnings {
                let _ = writeln!(diagnostics, "warning: {w}");
            }
            if out.code != EXIT_OK {
                let _ = writeln!(diagnostics, "error: TheoremViolated");
            }
            CommandResult {
                code: out.code,
                text: if cli.quiet || cli.json { String::new() } else { out.text },
                json: cli
                    .json
                    .then(|| serde_json::to_string(&out.json).expect("serializable")),
                diagnostics,
            }
        }
        Err(e) => CommandResult {
            code: EXIT_DOMAIN,
            text: String::new(),
            json: cli
                .json
                .then(|| json!({ "error": e.name(), "message": e.to_string() }).to_string()),
            diagnostics: format!("error: {}: {e}\n", e.name()),
        },
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

fn load_graph(path: &Path) -> Result<PlanarEmbedding> {
    PlanarEmbedding::parse(&read(path)?)
}

fn load_walk(path: &Path) -> Result<ClosedWalk> {
    ClosedWalk::parse(&read(path)?)
}

fn list<T: std::fmt::Display>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

fn to_value<T: Serialize>(value: &T) -> serde_json::Value {
    serde_json::to_value(value).expect("serializable")
}

fn execute(command: &Command) -> Result<Output> {
    match command {
        Command::Faces { file } => faces(&load_graph(file)?),
        Command::Grinberg { file, face_lengths } => match (file, face_lengths) {
            (_, Some(literal)) => grinberg_literal(&FaceLengthVector::parse_list(literal)?),
            (Some(file), None) => grinberg_graph(&load_graph(file)?),
            (None, None) => unreachable!("clap requires one source"),
        },
        Command::Bounds {
            file,
            solve,
            limit,
            walk,
        } => {
            let g = load_graph(file)?;
            let options = BoundsOptions {
                solve: *solve,
                limit: *limit,
                witness: walk.as_deref().map(load_walk).transpose()?,
            };
            bounds(&g, &options)
        }
        Command::Solve { file, limit } => solve(&load_graph(file)?, *limit),
        Command::Spectrum { file, limit } => {
            let g = load_graph(file)?;
            let spectrum = walks::hamiltonian_spectrum(&g, *limit)?;
            let text = format!("H(G) = {{{}}}\nh = {}\n", list(&spectrum), spectrum[0]);
            Ok(Output::new(
                text,
                json!({ "n": g.num_vertices(), "spectrum": spectrum, "h": spectrum[0] }),
            ))
        }
        Command::Verify { file, walk } => {
            let g = load_graph(file)?;
            let stats = walks::validate_walk(&g, &load_walk(walk)?)?;
            let text = format!(
                "closed spanning walk: L={} repeats={} (n={})\n",
                stats.length,
                stats.repeats,
                g.num_vertices()
            );
            Ok(Output::new(text, to_value(&stats)))
        }
        Command::Reduce(args) => reduce(args, false),
        Command::TheoremCheck(args) => reduce(args, true),
        Command::Corpus { name, params, walks } => {
            let params: Vec<&str> = params.iter().map(String::as_str).collect();
            corpus_command(&corpus::fixture(name, &params)?, *walks)
        }
    }
}

fn faces(g: &PlanarEmbedding) -> Result<Output> {
    let faces = g.trace_faces();
    let mut text = format!("n={} m={} faces={}\n", g.num_vertices(), g.num_edges(), faces.len());
    let mut entries = Vec::new();
    for face in faces.faces() {
        let vertices: Vec<usize> = face.boundary.iter().map(|&d| g.tail(d)).collect();
        let edges: Vec<usize> = face.boundary.iter().map(|d| d.edge()).collect();
        let _ = writeln!(text, "face {}: length {}: {}", face.id, face.len(), list(&vertices));
        entries.push(json!({ "id": face.id, "length": face.len(), "vertices": vertices, "edges": edges }));
    }
    let json = json!({
        "n": g.num_vertices(),
        "m": g.num_edges(),
        "num_faces": faces.len(),
        "lengths": faces.lengths(),
        "faces": entries,
    });
    Ok(Output::new(text, json))
}

fn grinberg_literal(faces: &FaceLengthVector) -> Result<Output> {
    let set = grinberg::grinberg_set(faces)?;
    let g = set.min();
    let bound = grinberg::repeat_lower_bound(g)?;
    let text = format!(
        "Grinberg set: {{{}}}\nGrinberg number: {g}\nrepeat lower bound: {bound}\n",
        list(set.values())
    );
    Ok(Output::new(
        text,
        json!({ "set": set.values(), "g": g, "repeat_lower_bound": bound }),
    ))
}

fn grinberg_graph(graph: &PlanarEmbedding) -> Result<Output> {
    let analysis = grinberg::analyze(graph)?;
    let g = analysis.number();
    let bound = grinberg::repeat_lower_bound(g)?;
    let n = graph.num_vertices() as u64;
    let text = format!(
        "face lengths: {}\nGrinberg set: {{{}}}\nGrinberg number: {g}\nrepeat lower bound: {bound}\nHamiltonian number >= {}\n",
        list(analysis.faces.lengths()),
        list(analysis.set.values()),
        n + bound
    );
    let mut out = Output::new(
        text,
        json!({
            "set": analysis.set.values(),
            "g": g,
            "repeat_lower_bound": bound,
            "n": n,
            "hamiltonian_lower_bound": n + bound,
            "face_lengths": analysis.faces.lengths(),
            "bridges": analysis.bridges,
        }),
    );
    if !analysis.bridges.is_empty() {
        out.warnings.push(format!(
            "bridges {} appear twice on face boundaries; doubling every edge first is the recommended route",
            list(&analysis.bridges)
        ));
    }
    Ok(out)
}

fn bounds(g: &PlanarEmbedding, options: &BoundsOptions) -> Result<Output> {
    let report = bounds_report(g, options)?;
    let opt = |v: Option<u64>| v.map_or_else(|| "n/a".to_string(), |v| v.to_string());
    let mut text = format!("n = {}\n", report.n);
    let _ = writeln!(
        text,
        "lower: elementary {}, Grinberg {}{}",
        report.lower_elementary,
        opt(report.lower_grinberg),
        if report.grinberg_on_doubled {
            " (edge-doubled)"
        } else {
            ""
        }
    );
    let _ = writeln!(
        text,
        "upper: elementary {}, Goodman-Hedetniemi {} (k={}, d={}), Bermond {} (c={}){}",
        report.upper_elementary,
        opt(report.upper_gh),
        report.k,
        report.d,
        opt(report.upper_bermond),
        opt(report.c),
        report
            .upper_witness
            .map(|w| format!(", witness {w}"))
            .unwrap_or_default()
    );
    if let Some(h) = report.exact {
        let _ = writeln!(text, "exact: {h}");
    }
    let _ = writeln!(
        text,
        "certified: {}",
        if report.certified {
            format!("h = {}", report.exact.unwrap_or_else(|| report.best_upper()))
        } else {
            format!("{} <= h <= {}", report.best_lower(), report.best_upper())
        }
    );
    let mut out = Output::new(text, to_value(&report));
    if report.grinberg_on_doubled {
        out.warnings
            .push("graph has bridges; the Grinberg bound was computed on the edge-doubled graph".into());
    }
    Ok(out)
}

fn solve(g: &PlanarEmbedding, limit: usize) -> Result<Output> {
    let solution = walks::hamiltonian_number_exact(g, limit)?;
    let repeats = solution.h.saturating_sub(g.num_vertices() as u64);
    let text = format!(
        "h = {}\nordering: {}\nwalk: {}\nrepeats: {repeats}\n",
        solution.h,
        list(&solution.ordering.order),
        list(solution.walk.vertices())
    );
    let mut out = Output::new(
        text,
        json!({
            "n": g.num_vertices(),
            "h": solution.h,
            "ordering": solution.ordering.order,
            "walk": solution.walk,
            "repeats": repeats,
        }),
    );
    if g.num_vertices() == 1 {
        out.warnings.push("single-vertex graph: h is reported as 0".into());
    }
    Ok(out)
}

fn reduce(args: &WalkArgs, verdict: bool) -> Result<Output> {
    let g = load_graph(&args.file)?;
    let walk = load_walk(&args.walk)?;
    let report = reduction_report_anchored(&g, &walk, args.outer_face)?;
    let c = &report.checks;
    let mut text = format!(
        "phi={} sum_m={} n_plus={} n_minus={} |delta|={} nu={} pi={} f={}\n",
        report.phi, report.sum_m, report.n_plus, report.n_minus, report.delta_abs, report.nu, report.pi, report.f
    );
    let signs: Vec<&str> = report.epsilon.iter().map(|&e| if e > 0 { "+" } else { "-" }).collect();
    let _ = writeln!(text, "epsilon: {}", signs.join(" "));
    for (name, ok) in [
        ("eq1", c.eq1),
        ("balance", c.balance),
        ("signed_difference", c.signed_difference),
        ("eq3", c.eq3),
        ("theorem", c.theorem),
        ("rho_identity", c.rho_identity),
        ("f_accounted", c.f_accounted),
        ("degrees", c.degrees),
        ("euler", c.euler),
        ("two_gons", c.two_gons),
    ] {
        let _ = writeln!(text, "{name}: {}", if ok { "ok" } else { "FAILED" });
    }
    if !c.f_in_grinberg_set && report.constant_signs {
        let _ = writeln!(
            text,
            "note: f={} lies outside the Grinberg set (all host faces share one sign)",
            report.f
        );
    }
    let mut json = to_value(&report);
    let mut out_code = EXIT_OK;
    if verdict {
        let half = report.grinberg_number / 2;
        let line = format!(
            "ρ={} ≥ g/2={}{}; f={}",
            report.sum_m,
            half,
            if report.is_tight() { " (tight)" } else { "" },
            report.f
        );
        let passed = report.checks.all();
        let _ = writeln!(text, "{}: {line}", if passed { "PASS" } else { "FAIL" });
        json["verdict"] = json!(line);
        json["passed"] = json!(passed);
        if !passed {
            out_code = EXIT_DOMAIN;
        }
    }
    let mut out = Output::new(text, json);
    out.code = out_code;
    Ok(out)
}

fn corpus_command(fixture: &corpus::Fixture, walks: bool) -> Result<Output> {
    let mut text = format!("# {}\n", fixture.name);
    if walks {
        for w in &fixture.walks {
            text.push_str(&w.to_walk_file());
        }
    } else {
        match &fixture.embedding {
            Some(g) => text.push_str(&g.to_graph_file()),
            None => {
                let _ = writeln!(text, "# face lengths only: {}", list(&fixture.face_lengths));
            }
        }
    }
    let json = json!({
        "name": fixture.name,
        "face_lengths": fixture.face_lengths,
        "graph": fixture.embedding.as_ref().map(PlanarEmbedding::to_graph_file),
        "walks": fixture.walks,
    });
    Ok(Output::new(text, json))
}
