//! `hypertrans`: count, enumerate, construct, bound, search and verify.
//!
//! Exit status is 0 on success, 1 when a verification check fails, and 2 on
//! any usage, parse or parameter error.

mod output;

use std::fs;
use std::io::{self, Read};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::json;

use hypertrans::bounds::{self, ExactValue, Prop1Case, Prop1Claim, Row, Table1Cell};
use hypertrans::constructions::{ConstructionKind, ConstructionSpec};
use hypertrans::engine::{Mode, TransversalQuery};
use hypertrans::search::{self, SearchReport, SearchSpace};
use hypertrans::verify::{self, Fault, Level, VerifyOptions};
use hypertrans::{parse_hypergraph, serialize_hypergraph, Hypergraph, Profile, VertexSet};

use output::{Sink, Table};

#[derive(Parser)]
#[command(name = "hypertrans", version, about = "Exact A-transversal counting and extremal search in uniform hypergraphs")]
struct Cli {
    /// Tab-separated table instead of JSON.
    #[arg(long, global = true)]
    tsv: bool,
    /// Write the result to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Report measured times; otherwise they are zero so output is reproducible.
    #[arg(long, global = true)]
    timings: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count the (maximal) A-transversals of a hypergraph file.
    Count(QueryArgs),
    /// Print every (maximal) A-transversal, one sorted vertex list per line.
    Enumerate(QueryArgs),
    /// Emit a construction in the hypergraph text format.
    Construct(ConstructArgs),
    /// Evaluate a closed-form bound.
    Bounds {
        #[command(subcommand)]
        bound: BoundCommand,
    },
    /// Exhaustive search for the maximum count over all hypergraphs.
    SearchExtremal(SearchArgs),
    /// Replay every reference value and report pass/fail per check.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct QueryArgs {
    /// Hypergraph file; stdin when absent or `-`.
    file: Option<PathBuf>,
    /// Comma-separated sizes, or strong|independent|even|odd|all.
    #[arg(long, short)]
    profile: String,
    #[arg(long, short, default_value = "all")]
    mode: Mode,
    /// Also list the first K sets (count only).
    #[arg(long, value_name = "K")]
    witnesses: Option<usize>,
}

#[derive(Args)]
struct ConstructArgs {
    /// matching, thm1_extremal, star, prop1v, thm3i_sunflower, parity_overlap, complete.
    kind: ConstructionKind,
    #[arg(long)]
    n: usize,
    /// Uniformity; fixed at 3 for thm1_extremal and 2 for star.
    #[arg(long)]
    r: Option<usize>,
    /// Required by thm3i_sunflower.
    #[arg(long)]
    profile: Option<String>,
}

#[derive(Subcommand)]
enum BoundCommand {
    /// Maximum number of maximal independent sets in an n-vertex graph.
    Mm { n: usize },
    /// Upper bound on maximal strongly independent sets, 3-uniform.
    G { n: usize },
    /// Graph table: g (all, no isolated vertices) and h (maximal) per profile.
    Table1 {
        #[arg(long)]
        n: usize,
        /// One profile; every non-empty subset of {0,1,2} when absent.
        #[arg(long)]
        profile: Option<String>,
        /// g or h; both when absent.
        #[arg(long)]
        row: Option<Row>,
    },
    /// Maximum number of even (equivalently odd) transversals.
    Parity {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
    },
    /// Special profiles, cases i to vii.
    Prop1 {
        case: Prop1Case,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
    },
    /// Best (p, i) for the general lower-bound construction.
    Exponent {
        #[arg(long)]
        profile: String,
        #[arg(long)]
        r: usize,
    },
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long)]
    n: usize,
    /// Scan every n up to this value.
    #[arg(long, value_name = "N")]
    to: Option<usize>,
    #[arg(long)]
    r: usize,
    #[arg(long, short)]
    profile: String,
    #[arg(long, short, default_value = "all")]
    mode: Mode,
    #[arg(long)]
    no_isolated: bool,
    /// One representative per isomorphism class.
    #[arg(long)]
    iso: bool,
    #[arg(long, default_value_t = 1)]
    workers: usize,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value = "quick")]
    level: Level,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// Harness self-test: corrupt a reference formula (`g`).
    #[arg(long, hide = true, value_name = "FORMULA")]
    inject_fault: Option<String>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let sink = Sink::new(cli.out.clone(), cli.tsv);
    match cli.command {
        Command::Count(args) => count(&sink, args, cli.timings),
        Command::Enumerate(args) => enumerate(&sink, args),
        Command::Construct(args) => construct(&sink, args),
        Command::Bounds { bound } => bound_command(&sink, bound),
        Command::SearchExtremal(args) => search_extremal(&sink, args, cli.timings),
        Command::Verify(args) => run_verify(&sink, args, cli.timings),
    }
}

fn read_hypergraph(file: Option<&PathBuf>) -> Result<Hypergraph> {
    let text = match file {
        Some(path) if path.as_os_str() != "-" => {
            fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
        }
        _ => {
            let mut buf = String::new();
            io::stdin().read_to_string(&mut buf).context("reading stdin")?;
            buf
        }
    };
    Ok(parse_hypergraph(&text)?)
}

fn vertex_list(s: VertexSet) -> Vec<usize> {
    s.to_vec()
}

fn count(sink: &Sink, args: QueryArgs, timings: bool) -> Result<ExitCode> {
    let h = read_hypergraph(args.file.as_ref())?;
    let profile = Profile::parse(&args.profile, h.r())?;
    let (n, r) = (h.n(), h.r());
    let query = TransversalQuery::new(h, profile, args.mode)?;
    let result = match args.witnesses {
        Some(k) => query.count_with_witnesses(k),
        None => query.count(),
    };
    let elapsed = if timings { result.elapsed } else { Duration::ZERO };
    let mut value = json!({
        "n": n,
        "r": r,
        "profile": profile,
        "mode": args.mode,
        "count": result.count,
    });
    if let Some(w) = &result.witnesses {
        value["witnesses"] = json!(w.iter().map(|&s| vertex_list(s)).collect::<Vec<_>>());
    }
    if timings {
        value["elapsed_ms"] = json!(elapsed.as_millis() as u64);
    }
    let table = Table::new(["n", "r", "profile", "mode", "count"]).row([
        n.to_string(),
        r.to_string(),
        profile.to_string(),
        args.mode.to_string(),
        result.count.to_string(),
    ]);
    sink.emit(&value, &table)?;
    Ok(ExitCode::SUCCESS)
}

fn enumerate(sink: &Sink, args: QueryArgs) -> Result<ExitCode> {
    if args.witnesses.is_some() {
        bail!("--witnesses applies to count only");
    }
    let h = read_hypergraph(args.file.as_ref())?;
    let profile = Profile::parse(&args.profile, h.r())?;
    let query = TransversalQuery::new(h, profile, args.mode)?;
    sink.stream(query.enumerate().map(|s| {
        if s.is_empty() {
            "-".to_string()
        } else {
            s.to_string()
        }
    }))?;
    Ok(ExitCode::SUCCESS)
}

fn construct(sink: &Sink, args: ConstructArgs) -> Result<ExitCode> {
    let r = match (args.kind, args.r) {
        (ConstructionKind::Thm1Extremal, None | Some(3)) => 3,
        (ConstructionKind::Star, None | Some(2)) => 2,
        (ConstructionKind::Thm1Extremal | ConstructionKind::Star, Some(r)) => {
            bail!("{} has fixed uniformity, got --r {r}", args.kind)
        }
        (_, Some(r)) => r,
        (kind, None) => bail!("{kind} needs --r"),
    };
    let profile = args.profile.as_deref().map(|p| Profile::parse(p, r)).transpose()?;
    let h = ConstructionSpec { kind: args.kind, n: args.n, r, profile }.build()?;
    sink.text(&serialize_hypergraph(&h))?;
    Ok(ExitCode::SUCCESS)
}

fn exact_json(name: &str, params: serde_json::Value, value: &ExactValue) -> serde_json::Value {
    let mut v = params;
    v["bound"] = json!(name);
    v["value"] = json!(value);
    v["approx"] = json!(value.to_f64());
    v
}

fn bound_command(sink: &Sink, bound: BoundCommand) -> Result<ExitCode> {
    match bound {
        BoundCommand::Mm { n } => single_value(sink, "mm", n, &bounds::moon_moser(n)?),
        BoundCommand::G { n } => single_value(sink, "g", n, &bounds::g_thm1(n)),
        BoundCommand::Parity { r, n } => {
            let v = ExactValue::from(bounds::parity_bound(r, n)?);
            let table = Table::new(["bound", "r", "n", "value"]).row(["parity".into(), r.to_string(), n.to_string(), v.to_string()]);
            sink.emit(&exact_json("parity", json!({ "r": r, "n": n }), &v), &table)
        }
        BoundCommand::Table1 { n, profile, row } => {
            let profiles: Vec<Profile> = match profile {
                Some(p) => vec![Profile::parse(&p, 2)?],
                None => (1u64..8).map(|m| Profile::from_mask(m).expect("non-empty")).collect(),
            };
            let rows = row.map_or(vec![Row::G, Row::H], |r| vec![r]);
            let mut cells = Vec::new();
            let mut table = Table::new(["row", "profile", "n", "value"]);
            for &row in &rows {
                for &a in &profiles {
                    let cell = bounds::table1_value(a, n, row)?;
                    let shown = match &cell {
                        Table1Cell::Value(v) => v.to_string(),
                        Table1Cell::Undefined => "-".to_string(),
                    };
                    table = table.row([row.to_string(), a.to_string(), n.to_string(), shown]);
                    let mut v = json!({ "row": row, "profile": a, "n": n });
                    match cell.value() {
                        Some(value) => {
                            v["value"] = json!(value);
                            v["approx"] = json!(value.to_f64());
                        }
                        None => v["value"] = serde_json::Value::Null,
                    }
                    cells.push(v);
                }
            }
            sink.emit(&json!(cells), &table)
        }
        BoundCommand::Prop1 { case, r, n } => {
            let claim = bounds::prop1_value(case, r, n)?;
            let (kind, shown) = match &claim {
                Prop1Claim::Value { function, value } => (function.clone(), value.to_string()),
                Prop1Claim::Relation(rel) => ("relation".to_string(), serde_json::to_value(rel)?.as_str().unwrap_or_default().to_string()),
            };
            let table = Table::new(["case", "r", "n", "claim", "value"]).row([case.to_string(), r.to_string(), n.to_string(), kind, shown]);
            sink.emit(&json!({ "case": case, "r": r, "n": n, "claim": claim }), &table)
        }
        BoundCommand::Exponent { profile, r } => {
            let a = Profile::parse(&profile, r)?;
            let c = bounds::best_exponent(a, r)?;
            let table = Table::new(["profile", "r", "p", "i", "f", "base"]).row([
                a.to_string(),
                r.to_string(),
                c.p.to_string(),
                c.i.to_string(),
                c.f.to_string(),
                format!("{:.6}", c.base),
            ]);
            sink.emit(&json!({ "profile": a, "r": r, "p": c.p, "i": c.i, "f": c.f, "base": c.base }), &table)
        }
    }?;
    Ok(ExitCode::SUCCESS)
}

fn single_value(sink: &Sink, name: &str, n: usize, v: &ExactValue) -> Result<()> {
    let table = Table::new(["bound", "n", "value", "approx"]).row([name.into(), n.to_string(), v.to_string(), format!("{:.6}", v.to_f64())]);
    sink.emit(&exact_json(name, json!({ "n": n }), v), &table)
}

fn search_extremal(sink: &Sink, args: SearchArgs, timings: bool) -> Result<ExitCode> {
    let profile = Profile::parse(&args.profile, args.r)?;
    let template = SearchSpace::new(args.n, args.r, args.no_isolated, args.iso)?;
    let last = args.to.unwrap_or(args.n);
    if last < args.n {
        bail!("--to {last} is below --n {}", args.n);
    }
    let mut reports = search::scan_range(template, args.n..=last, profile, args.mode, args.workers)?;
    if !timings {
        for r in &mut reports {
            r.elapsed = Duration::ZERO;
        }
    }
    let mut table = Table::new(["n", "r", "profile", "mode", "no_isolated", "iso", "maximum", "explored", "witness"]);
    for rep in &reports {
        table = table.row([
            rep.n.to_string(),
            rep.r.to_string(),
            rep.profile.to_string(),
            rep.mode.to_string(),
            rep.no_isolated.to_string(),
            rep.iso_reduce.to_string(),
            rep.maximum.to_string(),
            rep.explored.to_string(),
            witness_summary(rep),
        ]);
    }
    let value = match reports.as_slice() {
        [one] if args.to.is_none() => serde_json::to_value(one)?,
        many => serde_json::to_value(many)?,
    };
    sink.emit(&value, &table)?;
    Ok(ExitCode::SUCCESS)
}

fn witness_summary(rep: &SearchReport) -> String {
    let edges: Vec<String> = rep
        .witness
        .edges()
        .iter()
        .map(|e| e.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","))
        .collect();
    if edges.is_empty() {
        "-".into()
    } else {
        edges.join(" ")
    }
}

fn run_verify(sink: &Sink, args: VerifyArgs, timings: bool) -> Result<ExitCode> {
    let fault = match args.inject_fault.as_deref() {
        None => Fault::None,
        Some("g") => Fault::CorruptG,
        Some(other) => bail!("unknown fault {other:?}"),
    };
    if args.workers == 0 {
        bail!("--workers must be at least 1");
    }
    let mut report = verify::run_verification(VerifyOptions { level: args.level, workers: args.workers, fault });
    if !timings {
        report = report.without_timings();
    }
    let mut table = Table::new(["check", "expected", "observed", "pass"]);
    for c in &report.checks {
        table = table.row([c.name.clone(), c.expected.clone(), c.observed.clone(), c.pass.to_string()]);
    }
    sink.emit(&serde_json::to_value(&report)?, &table)?;
    eprintln!("{} passed, {} failed", report.summary.passed, report.summary.failed);
    Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}
