use std::fmt;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use dualdiam_core::complex::{DiagramJson, SCHEMA_VERSION};
use dualdiam_core::constructions::{assemble_delta, boundary_length_formula, fatten, TrivalentTree};
use dualdiam_core::duality::{dual_tree, tree_diameter, EdgeSet};
use dualdiam_core::export::{dual_to_dot, to_dot, to_svg};
use dualdiam_core::metrics::{metrics_report, Graph};
use dualdiam_core::shelling::{
    exact_filling_length, logarithmic_shelling, replay, tunnelling_bound, tunnelling_shelling, ShellingRecord,
    DEFAULT_EXACT_CAP,
};
use dualdiam_core::verification::{check_theorem, sample_rng, wilson_random_spanning_tree, CheckOptions};
use dualdiam_core::{Diagram, Error};

#[derive(Parser)]
#[command(
    name = "dualdiam",
    version,
    about = "Planar diagrams, dual spanning trees and shellings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build Δ_n (or its fattened tree A_n) and write it out.
    Construct(ConstructArgs),
    /// Shell a diagram and print the boundary-length trace.
    Shell(ShellArgs),
    /// Diameters, degrees and boundary data of a diagram.
    Metrics(MetricsArgs),
    /// Sample spanning trees of G_n and audit the diameter bounds.
    Verify(VerifyArgs),
    /// Draw a diagram as DOT or SVG.
    Export(ExportArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Part {
    Full,
    Fattened,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Svg,
    Table,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Strategy {
    Tunnel,
    Log,
    Exact,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Build Δ_n for this n.
    #[arg(long)]
    n: Option<usize>,
    /// Read a diagram written by `construct`.
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Args)]
struct Build {
    /// Which part of Δ_n to build.
    #[arg(long, value_enum, default_value_t = Part::Full)]
    part: Part,
    /// Choose the identified leaves of T_n at random with this seed.
    #[arg(long)]
    tree_seed: Option<u64>,
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(long)]
    n: usize,
    #[command(flatten)]
    build: Build,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long)]
    output: Option<PathBuf>,
    /// Also write the inscribed tree map as JSON.
    #[arg(long)]
    sidecar: Option<PathBuf>,
}

#[derive(Args)]
struct ShellArgs {
    #[command(flatten)]
    source: Source,
    #[command(flatten)]
    build: Build,
    #[arg(long, value_enum, default_value_t = Strategy::Log)]
    strategy: Strategy,
    /// Spanning tree for tunnelling, as a JSON array of edge ids.
    #[arg(long)]
    tree: Option<PathBuf>,
    /// Seed for the random spanning tree used when no tree is given.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Limit on area + edges for the exact search.
    #[arg(long, default_value_t = DEFAULT_EXACT_CAP, value_parser = positive)]
    cap: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct MetricsArgs {
    #[command(flatten)]
    source: Source,
    #[command(flatten)]
    build: Build,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_parser = positive)]
    n: usize,
    #[arg(long, default_value_t = 100, value_parser = positive)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Enumerate every spanning tree when the graph is small enough.
    #[arg(long)]
    exhaustive: bool,
    /// Skip the exact diameters of G_n and G*_n.
    #[arg(long)]
    no_diameters: bool,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct ExportArgs {
    #[command(flatten)]
    source: Source,
    #[command(flatten)]
    build: Build,
    #[arg(long, value_enum, default_value_t = Format::Dot)]
    format: Format,
    /// Draw the dual graph instead (DOT only).
    #[arg(long)]
    dual: bool,
    /// Edge ids to highlight, as a JSON array.
    #[arg(long)]
    tree: Option<PathBuf>,
    /// Relaxation rounds of the SVG layout.
    #[arg(long, default_value_t = 400)]
    iterations: usize,
    #[arg(long)]
    output: Option<PathBuf>,
}

/// Document written by `construct`: the diagram plus optional metadata.
#[derive(Serialize, Deserialize)]
struct DiagramDoc {
    #[serde(flatten)]
    diagram: DiagramJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    metadata: Option<Value>,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Invariant(String),
    Io(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Invariant(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Io(_) => 3,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) => write!(f, "usage: {m}"),
            Failure::Invariant(m) => write!(f, "check failed: {m}"),
            Failure::Io(m) => write!(f, "i/o: {m}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidParameter(_)
            | Error::TooLargeForExactSearch { .. }
            | Error::LevelMismatch { .. }
            | Error::KTooSmall { .. } => Failure::Usage(e.to_string()),
            Error::Malformed(_) => Failure::Io(e.to_string()),
            _ => Failure::Invariant(e.to_string()),
        }
    }
}

fn positive(s: &str) -> std::result::Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be at least 1".into()),
        Ok(x) => Ok(x),
        Err(e) => Err(e.to_string()),
    }
}

type Outcome<T> = std::result::Result<T, Failure>;

fn emit(output: Option<&Path>, text: &str) -> Outcome<()> {
    match output {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Io(format!("{}: {e}", p.display()))),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| {
                    if text.ends_with('\n') {
                        Ok(())
                    } else {
                        out.write_all(b"\n")
                    }
                })
                .map_err(|e| Failure::Io(e.to_string()))
        }
    }
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Outcome<T> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn to_pretty<T: Serialize>(x: &T) -> String {
    serde_json::to_string_pretty(x).expect("value serializes")
}

struct Built {
    diagram: Diagram,
    metadata: Option<Value>,
    sidecar: Option<Value>,
}

fn build(n: usize, b: &Build) -> Outcome<Built> {
    match b.part {
        Part::Full => {
            let delta = assemble_delta(n, b.tree_seed)?;
            Ok(Built {
                metadata: Some(serde_json::to_value(&delta.metadata).expect("metadata serializes")),
                sidecar: Some(serde_json::to_value(delta.sidecar()).expect("sidecar serializes")),
                diagram: delta.diagram,
            })
        }
        Part::Fattened => {
            let tree = TrivalentTree::new(n, b.tree_seed);
            let fat = fatten(&tree, n)?;
            let d = fat.diagram;
            let c = d.complex();
            let metadata = json!({
                "n": n,
                "seed": b.tree_seed,
                "p_n": boundary_length_formula(n),
                "lambda": d.max_cell_degree(),
                "boundary_length": d.boundary_length(),
                "vertex_count": c.vertex_count(),
                "edge_count": c.edge_count(),
                "face_count": c.face_count(),
            });
            let sidecar = json!({
                "version": SCHEMA_VERSION,
                "tree_edges": tree.edges(),
                "inscribed": fat.inscribed,
            });
            Ok(Built {
                diagram: d,
                metadata: Some(metadata),
                sidecar: Some(sidecar),
            })
        }
    }
}

fn load(source: &Source, b: &Build) -> Outcome<Diagram> {
    match (&source.input, source.n) {
        (Some(path), _) => {
            let doc: DiagramDoc = read_json(path)?;
            Diagram::from_json(&doc.diagram).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
        }
        (None, Some(n)) => Ok(build(n, b)?.diagram),
        (None, None) => Err(Failure::Usage("one of --n or --input is required".into())),
    }
}

fn read_tree(path: &Path, d: &Diagram) -> Outcome<EdgeSet> {
    let ids: Vec<usize> = read_json(path)?;
    EdgeSet::from_ids(d.complex().edge_count(), ids).map_err(Failure::from)
}

fn construct(a: &ConstructArgs) -> Outcome<()> {
    let built = build(a.n, &a.build)?;
    let text = match a.format {
        Format::Json => to_pretty(&DiagramDoc {
            diagram: built.diagram.to_json(),
            metadata: built.metadata,
        }),
        Format::Dot => to_dot(&built.diagram, None),
        Format::Svg => to_svg(&built.diagram, 400),
        Format::Table => {
            let m = built.metadata.unwrap_or(Value::Null);
            let mut s = String::new();
            if let Value::Object(map) = m {
                let width = map.keys().map(String::len).max().unwrap_or(0);
                for (k, v) in map {
                    s.push_str(&format!("{k:<width$}  {v}\n"));
                }
            }
            s
        }
    };
    emit(a.output.as_deref(), &text)?;
    if let (Some(path), Some(side)) = (&a.sidecar, built.sidecar) {
        emit(Some(path), &to_pretty(&side))?;
    }
    Ok(())
}

#[derive(Serialize)]
struct ShellDoc<'a> {
    version: u32,
    strategy: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    tree: Option<Vec<usize>>,
    /// Right-hand side of the tunnelling bound, when a tree is used.
    #[serde(skip_serializing_if = "Option::is_none")]
    bound: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    filling_length: Option<usize>,
    record: &'a ShellingRecord,
}

fn shell(a: &ShellArgs) -> Outcome<()> {
    let d = load(&a.source, &a.build)?;
    let c = d.complex();
    let (name, record, tree, bound, fl) = match a.strategy {
        Strategy::Tunnel => {
            let g = Graph::skeleton(c);
            let t = match &a.tree {
                Some(p) => read_tree(p, &d)?,
                None => wilson_random_spanning_tree(&g, &mut sample_rng(a.seed, 0)),
            };
            let pair = dual_tree(&d, &t)?;
            let record = tunnelling_shelling(&d, &pair)?;
            let rhs = tunnelling_bound(
                tree_diameter(&g, &pair.tree)?,
                tree_diameter(&Graph::dual(c), &pair.dual_tree)?,
                d.max_cell_degree(),
                d.boundary_length(),
            );
            ("tunnel", record, Some(t.ids().collect()), Some(rhs), None)
        }
        Strategy::Log => ("log", logarithmic_shelling(&d)?, None, None, None),
        Strategy::Exact => {
            let (fl, record) = exact_filling_length(&d, a.cap)?;
            ("exact", record, None, None, Some(fl))
        }
    };
    replay(&d, &record)?;
    let summary = format!(
        "strategy {name}: {} moves, initial boundary {}, max boundary {}{}",
        record.moves.len(),
        record.trace[0],
        record.max_boundary,
        bound.map_or(String::new(), |b| format!(", bound {b}")),
    );
    let text = match a.format {
        Format::Json => to_pretty(&ShellDoc {
            version: SCHEMA_VERSION,
            strategy: name,
            tree,
            bound,
            filling_length: fl,
            record: &record,
        }),
        Format::Table => {
            let trace: Vec<String> = record.trace.iter().map(usize::to_string).collect();
            format!("{summary}\ntrace {}\n", trace.join(" "))
        }
        other => return Err(Failure::Usage(format!("shell cannot write {other:?}"))),
    };
    emit(a.output.as_deref(), &text)?;
    if a.format == Format::Json {
        eprintln!("{summary}");
    }
    if let Some(b) = bound {
        if record.max_boundary > b {
            return Err(Failure::Invariant(format!(
                "max boundary {} exceeds bound {b}",
                record.max_boundary
            )));
        }
    }
    Ok(())
}

fn metrics(a: &MetricsArgs) -> Outcome<()> {
    let d = load(&a.source, &a.build)?;
    let report = metrics_report(&d)?;
    let text = match a.format {
        Format::Json => to_pretty(&report),
        Format::Table => report.to_string(),
        other => return Err(Failure::Usage(format!("metrics cannot write {other:?}"))),
    };
    emit(a.output.as_deref(), &text)
}

fn verify(a: &VerifyArgs) -> Outcome<()> {
    let options = CheckOptions {
        exact_diameters: !a.no_diameters,
        exhaustive: a.exhaustive,
        audit_shellings: true,
    };
    let report = check_theorem(a.n, a.samples, a.seed, options)?;
    let text = match a.format {
        Format::Json => report.to_json_string(),
        Format::Table => report.to_string(),
        other => return Err(Failure::Usage(format!("verify cannot write {other:?}"))),
    };
    emit(a.output.as_deref(), &text)?;
    if !report.passed() {
        return Err(Failure::Invariant(format!("verification of n = {} failed", a.n)));
    }
    Ok(())
}

fn export(a: &ExportArgs) -> Outcome<()> {
    let d = load(&a.source, &a.build)?;
    let highlight = a.tree.as_deref().map(|p| read_tree(p, &d)).transpose()?;
    let text = match (a.format, a.dual) {
        (Format::Dot, false) => to_dot(&d, highlight.as_ref()),
        (Format::Dot, true) => dual_to_dot(&d, highlight.map(|t| t.complement()).as_ref()),
        (Format::Svg, false) => to_svg(&d, a.iterations),
        (f, dual) => {
            return Err(Failure::Usage(format!(
                "export cannot write {f:?}{}",
                if dual { " for the dual" } else { "" }
            )))
        }
    };
    emit(a.output.as_deref(), &text)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Construct(a) => construct(a),
        Command::Shell(a) => shell(a),
        Command::Metrics(a) => metrics(a),
        Command::Verify(a) => verify(a),
        Command::Export(a) => export(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            log::debug!("{e:?}");
            eprintln!("dualdiam: {e}");
            ExitCode::from(e.code())
        }
    }
}
