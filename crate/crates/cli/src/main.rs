//! `shuriken`: build shuriken graphs, compute exact invariants and audit
//! the closed forms.
//!
//! Exit codes: 0 success, 1 input error, 2 solver timeout, 3 audit failure.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use shuriken_core::graph::io::{self, Format};
use shuriken_core::graph::{generator, Family};
use shuriken_core::indices::{m1_direct, m2_direct};
use shuriken_core::ring::{self, FiniteRing};
use shuriken_core::solvers::{self, SolverBudget, Timeout};
use shuriken_core::theorems::{self, AuditConfig, NamedGraph};
use shuriken_core::{build, Error, Graph, ShurikenParams};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "shuriken", version, about = "Shuriken graphs, exact invariants and formula audits")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a standard graph.
    Gen(GenArgs),
    /// Build Shu^t_n of an input graph.
    Shuriken(ShurikenArgs),
    /// Compute exact invariants with witnesses.
    Invariants(InvariantsArgs),
    /// First and second Zagreb indices, optionally with the closed forms.
    Indices(IndicesArgs),
    /// Audit every closed form against exact computation.
    Audit(AuditArgs),
    /// Idempotents, units and graphs of a finite ring.
    Ring(RingArgs),
    /// Convert a graph file to another format.
    Export(ExportArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Dimacs,
    Json,
    Dot,
}

impl From<GraphFormat> for Format {
    fn from(f: GraphFormat) -> Format {
        match f {
            GraphFormat::Dimacs => Format::Dimacs,
            GraphFormat::Json => Format::Json,
            GraphFormat::Dot => Format::Dot,
        }
    }
}

#[derive(Args)]
struct GenArgs {
    /// path, cycle, complete, star or null
    #[arg(long)]
    family: String,
    #[arg(long)]
    order: usize,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "dimacs")]
    format: GraphFormat,
}

#[derive(Args)]
struct ShurikenArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(short)]
    t: usize,
    #[arg(short)]
    n: usize,
    /// Where to write the built graph; only the summary is printed otherwise.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: GraphFormat,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Invariant {
    Clique,
    Independence,
    Chromatic,
    Domination,
    Euler,
    Hamilton,
}

#[derive(Args)]
struct InvariantsArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum, value_delimiter = ',', default_value = "clique,independence,chromatic,domination,euler,hamilton")]
    which: Vec<Invariant>,
    #[arg(long, default_value_t = 60_000)]
    timeout_ms: u64,
}

#[derive(Args)]
struct IndicesArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(short, requires = "n")]
    t: Option<usize>,
    #[arg(short, requires = "t")]
    n: Option<usize>,
}

#[derive(Args)]
struct AuditArgs {
    /// `builtin`, `builtin+null`, or a comma-separated list of graph files.
    #[arg(long, default_value = "builtin")]
    corpus: String,
    /// Semicolon-separated `t,n` pairs.
    #[arg(long, default_value = "1,1;2,2;3,3;1,3;2,4;4,4;2,6")]
    params: String,
    /// Report path; the report goes to standard output otherwise.
    #[arg(long)]
    report: Option<PathBuf>,
    #[arg(long, default_value_t = 32)]
    order_cap: usize,
    #[arg(long, default_value_t = 60_000)]
    timeout_ms: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    Idempotents,
    Units,
    IdempotentGraph,
    CleanGraph,
    Correspondence,
}

#[derive(Args)]
struct RingArgs {
    #[arg(long, conflicts_with = "table", required_unless_present = "table")]
    modulus: Option<usize>,
    /// JSON file with `order`, `add`, `mul`, `zero` and `one`.
    #[arg(long)]
    table: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "correspondence")]
    emit: Emit,
}

#[derive(Args)]
struct ExportArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum)]
    format: GraphFormat,
    #[arg(long)]
    out: Option<PathBuf>,
}

enum Failure {
    Input(Error),
    Timeout,
    Audit,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e)
    }
}

type CmdResult = Result<(), Failure>;

fn read_graph(path: &Path) -> Result<Graph, Error> {
    let text = std::fs::read_to_string(path)?;
    io::parse_auto(&text)
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), Error> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn print_json(value: &Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("json values serialize"));
}

fn graph_value(g: &Graph) -> Value {
    serde_json::from_str(&io::to_json(g)).expect("graph json is valid")
}

fn run_gen(a: GenArgs) -> CmdResult {
    let family: Family = a.family.parse()?;
    let g = generator(family, a.order)?;
    emit(&io::write(&g, a.format.into()), a.out.as_deref())?;
    Ok(())
}

fn run_shuriken(a: ShurikenArgs) -> CmdResult {
    let base = read_graph(&a.input)?;
    let params = ShurikenParams::new(a.t, a.n)?;
    let s = build(&base, params);
    if let Some(out) = &a.out {
        std::fs::write(out, io::write(&s.graph, a.format.into())).map_err(Error::from)?;
    }
    let (v, e) = (base.order(), base.size());
    print_json(&json!({
        "t": a.t,
        "n": a.n,
        "order": s.graph.order(),
        "size": s.graph.size(),
        "paper_size": shuriken_core::shuriken::paper_size(params, v, e),
        "corrected_size": shuriken_core::shuriken::corrected_size(params, v, e),
    }));
    Ok(())
}

fn witnessed(r: &Result<solvers::Witnessed, Timeout>) -> Value {
    match r {
        Ok(w) => json!({ "value": w.value, "witness": w.witness }),
        Err(t) => json!({ "status": "timeout", "nodes": t.nodes }),
    }
}

fn run_invariants(a: InvariantsArgs) -> CmdResult {
    let g = read_graph(&a.input)?;
    let budget = SolverBudget {
        wall_limit: std::time::Duration::from_millis(a.timeout_ms),
        ..SolverBudget::default()
    };
    let mut out = serde_json::Map::new();
    let mut timed_out = false;
    let mut which = a.which.clone();
    which.dedup();
    for inv in which {
        let (key, value) = match inv {
            Invariant::Clique => ("clique", witnessed(&solvers::max_clique(&g, &budget))),
            Invariant::Independence => ("independence", witnessed(&solvers::max_independent_set(&g, &budget))),
            Invariant::Domination => ("domination", witnessed(&solvers::min_dominating_set(&g, &budget))),
            Invariant::Chromatic => (
                "chromatic",
                match solvers::chromatic_number(&g, &budget) {
                    Ok(c) => json!({ "value": c.value, "coloring": c.colors }),
                    Err(t) => json!({ "status": "timeout", "nodes": t.nodes }),
                },
            ),
            Invariant::Euler => {
                let circuit = solvers::eulerian_circuit(&g);
                ("euler", json!({ "eulerian": circuit.is_some(), "circuit": circuit }))
            }
            Invariant::Hamilton => (
                "hamilton",
                match solvers::hamiltonian_cycle(&g, &budget) {
                    Ok(cycle) => json!({ "hamiltonian": cycle.is_some(), "cycle": cycle }),
                    Err(t) => json!({ "status": "timeout", "nodes": t.nodes }),
                },
            ),
        };
        timed_out |= value.get("status").is_some();
        out.insert(key.to_string(), value);
    }
    print_json(&Value::Object(out));
    if timed_out {
        Err(Failure::Timeout)
    } else {
        Ok(())
    }
}

fn run_indices(a: IndicesArgs) -> CmdResult {
    let g = read_graph(&a.input)?;
    let (m1, m2) = (m1_direct(&g), m2_direct(&g));
    let value = match a.t.zip(a.n) {
        None => json!({ "m1_direct": m1, "m2_direct": m2 }),
        Some((t, n)) => {
            let params = ShurikenParams::new(t, n)?;
            let s = build(&g, params);
            let (v, e) = (g.order(), g.size());
            let (m1_paper, m1_corrected) = theorems::zagreb_m1_closed(params, v, e, m1);
            json!({
                "t": t,
                "n": n,
                "base_m1": m1,
                "base_m2": m2,
                "m1_direct": m1_direct(&s.graph),
                "m2_direct": m2_direct(&s.graph),
                "m1_paper": m1_paper as i64,
                "m1_corrected": m1_corrected as i64,
                "m2_paper": theorems::zagreb_m2_closed(params, v, e, m1, m2) as i64,
            })
        }
    };
    print_json(&value);
    Ok(())
}

fn load_corpus(source: &str) -> Result<Vec<NamedGraph>, Error> {
    match source {
        "builtin" => Ok(theorems::builtin()),
        "builtin+null" => Ok(theorems::builtin_with_null()),
        files => files
            .split(',')
            .map(|f| {
                let path = Path::new(f.trim());
                let name = path.file_stem().map_or_else(|| f.to_string(), |s| s.to_string_lossy().into_owned());
                Ok(NamedGraph::new(name, read_graph(path)?))
            })
            .collect(),
    }
}

fn run_audit(a: AuditArgs) -> CmdResult {
    let corpus = load_corpus(&a.corpus)?;
    let params = theorems::parse_params(&a.params)?;
    let config = AuditConfig {
        budget: SolverBudget {
            wall_limit: std::time::Duration::from_millis(a.timeout_ms),
            ..SolverBudget::default()
        },
        order_cap: a.order_cap,
        ..AuditConfig::default()
    };
    let report = theorems::run_audit(&corpus, &params, &config);
    let text = report.to_json() + "\n";
    match &a.report {
        Some(path) => {
            std::fs::write(path, &text).map_err(Error::from)?;
            print_json(&serde_json::to_value(&report.summary).expect("summary serializes"));
        }
        None => print!("{text}"),
    }
    if report.has_failures() {
        Err(Failure::Audit)
    } else {
        Ok(())
    }
}

fn run_ring(a: RingArgs) -> CmdResult {
    let r = match (&a.modulus, &a.table) {
        (Some(m), _) => FiniteRing::modular(*m)?,
        (None, Some(path)) => FiniteRing::from_json(&std::fs::read_to_string(path).map_err(Error::from)?)?,
        (None, None) => unreachable!("clap requires one source"),
    };
    let value = match a.emit {
        Emit::Idempotents => json!({
            "order": r.order(),
            "idempotents": ring::idempotents(&r),
            "nontrivial": ring::nontrivial_idempotents(&r),
        }),
        Emit::Units => {
            let us = ring::units(&r);
            json!({ "units": us.units, "inverses": us.inverses, "t": us.t, "n": us.n() })
        }
        Emit::IdempotentGraph => graph_value(&ring::idempotent_graph(&r)),
        Emit::CleanGraph => graph_value(&ring::clean_graph(&r).graph),
        Emit::Correspondence => {
            let c = ring::clean_as_shuriken(&r)?;
            json!({
                "verdict": if c.matched { "MATCH" } else { "MISMATCH" },
                "t": c.params.t(),
                "n": c.params.n(),
                "base": graph_value(&c.base),
                "shuriken_order": c.shuriken.graph.order(),
                "shuriken_size": c.shuriken.graph.size(),
                "clean_size": c.clean.graph.size(),
                "missing_edges": c.missing,
                "extra_edges": c.extra,
                "bijection": c.bijection,
            })
        }
    };
    print_json(&value);
    Ok(())
}

fn run_export(a: ExportArgs) -> CmdResult {
    let g = read_graph(&a.input)?;
    emit(&io::write(&g, a.format.into()), a.out.as_deref())?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Gen(a) => run_gen(a),
        Command::Shuriken(a) => run_shuriken(a),
        Command::Invariants(a) => run_invariants(a),
        Command::Indices(a) => run_indices(a),
        Command::Audit(a) => run_audit(a),
        Command::Ring(a) => run_ring(a),
        Command::Export(a) => run_export(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Timeout) => {
            eprintln!("error: solver budget exhausted");
            ExitCode::from(2)
        }
        Err(Failure::Audit) => {
            eprintln!("error: audit found failing construction or theorem checks");
            ExitCode::from(3)
        }
    }
}
