//! The `excessive` command line: `index`, `splitting` and `verify`.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 not `[m]`-coverable,
//! 3 search budget exceeded, 4 a proven claim was refuted.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::ThreadPool;
use serde_json::json;

use crate::error::Error;
use crate::graph::construct::{complete_with_pendants, path, petersen, star};
use crate::graph::{load_graph, Graph, GraphFormat};
use crate::index::{
    exact_excessive_index, formula_index_small_m, tree_index_m4, BoundMode, IndexResult,
    IndexValue, Method, SolveOptions, DEFAULT_NODE_LIMIT,
};
use crate::lab::{
    check_graph_conjecture, check_tree_conjecture, connected_graphs_up_to,
    verify_paper_claims_with, write_jsonl, LabOptions, TrialReport, Verdict,
};
use crate::splitting::splitting_number;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_NOT_COVERABLE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_REFUTED: i32 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "excessive",
    version,
    about = "Exact excessive [m]-index of small graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute the excessive [m]-index with its lower bounds and a cover.
    Index(IndexArgs),
    /// Compute splitting numbers s^t with witness edge sets.
    Splitting(SplittingArgs),
    /// Run the claim suite or a conjecture sweep and write a JSON-lines report.
    Verify(VerifyArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Construction {
    K6Pendants,
    Petersen,
    PetersenMinusEdge,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum MethodChoice {
    /// Branch-and-bound search.
    Exact,
    /// Closed formula (m <= 3, or trees at m = 4), falling back to search.
    Auto,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct Input {
    /// Graph in graph6 format.
    #[arg(long)]
    graph6: Option<String>,
    /// File with one `u v` edge per line.
    #[arg(long, value_name = "FILE")]
    edge_list: Option<PathBuf>,
    /// Caterpillar, e.g. `0,1,1,1,0` or `CAT(0,1,1,1,0)`.
    #[arg(long)]
    cat: Option<String>,
    /// Path with this many edges.
    #[arg(long, value_name = "EDGES")]
    path: Option<usize>,
    /// Star with this many edges.
    #[arg(long, value_name = "EDGES")]
    star: Option<usize>,
    #[arg(long, value_enum)]
    construct: Option<Construction>,
}

impl Input {
    fn load(&self) -> Result<Graph, String> {
        let g: Result<Graph, crate::graph::GraphError> = if let Some(s) = &self.graph6 {
            load_graph(s, GraphFormat::Graph6)
        } else if let Some(p) = &self.edge_list {
            let text =
                fs::read_to_string(p).map_err(|e| format!("cannot read {}: {e}", p.display()))?;
            load_graph(&text, GraphFormat::EdgeList)
        } else if let Some(c) = &self.cat {
            load_graph(c, GraphFormat::CatNotation)
        } else if let Some(k) = self.path {
            Ok(path(k))
        } else if let Some(k) = self.star {
            Ok(star(k))
        } else {
            Ok(match self.construct.expect("clap enforces one input") {
                Construction::K6Pendants => complete_with_pendants(6),
                Construction::Petersen => petersen(),
                Construction::PetersenMinusEdge => {
                    return petersen().without_edge(0).map_err(|e| e.to_string())
                }
            })
        };
        g.map_err(|e| e.to_string())
    }
}

#[derive(Args, Debug)]
struct IndexArgs {
    #[command(flatten)]
    input: Input,
    #[arg(long)]
    m: usize,
    /// Print the cover as explicit edge lists.
    #[arg(long)]
    witness: bool,
    #[arg(long, value_enum, default_value = "exact")]
    method: MethodChoice,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long, default_value_t = DEFAULT_NODE_LIMIT)]
    node_limit: u64,
    #[arg(long)]
    workers: Option<usize>,
}

#[derive(Args, Debug)]
struct SplittingArgs {
    #[command(flatten)]
    input: Input,
    #[arg(long)]
    m: usize,
    /// Order `t`, a range `a..b` (inclusive), or omitted for `1..m-1`.
    #[arg(long)]
    t: Option<String>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long)]
    workers: Option<usize>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Named suite; only `paper` exists.
    #[arg(long, value_parser = ["paper"])]
    suite: Option<String>,
    /// Tree size bound: the conjecture sweep size, or the suite's tree universe.
    #[arg(long)]
    trees: Option<usize>,
    /// Sweep all connected graphs up to this many vertices instead of trees.
    #[arg(long)]
    graphs: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Also write the JSON-lines report here.
    #[arg(long, value_name = "FILE")]
    output: Option<PathBuf>,
    /// Zero the timing field so repeated runs are byte-identical.
    #[arg(long)]
    deterministic: bool,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    node_limit: Option<u64>,
    #[arg(long)]
    workers: Option<usize>,
}

/// Parses `args` (including the program name) and runs the command,
/// writing the report to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                EXIT_OK
            } else {
                let _ = write!(err, "{e}");
                EXIT_USAGE
            };
        }
    };
    let workers = match &cli.command {
        Command::Index(a) => a.workers,
        Command::Splitting(a) => a.workers,
        Command::Verify(a) => a.workers,
    };
    let pool = match workers {
        Some(0) => {
            let _ = writeln!(err, "error: --workers must be at least 1");
            return EXIT_USAGE;
        }
        Some(w) => rayon::ThreadPoolBuilder::new().num_threads(w).build(),
        None => rayon::ThreadPoolBuilder::new().build(),
    };
    let pool = match pool {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let r = match &cli.command {
        Command::Index(a) => cmd_index(a, &pool, out, err),
        Command::Splitting(a) => cmd_splitting(a, &pool, out, err),
        Command::Verify(a) => cmd_verify(a, &pool, out, err),
    };
    r.unwrap_or_else(|e| {
        let _ = writeln!(err, "error: {e}");
        EXIT_USAGE
    })
}

type CmdResult = Result<i32, String>;

fn io<E: std::fmt::Display>(e: E) -> String {
    format!("write failed: {e}")
}

fn pairs_text(pairs: &[(usize, usize)]) -> String {
    pairs
        .iter()
        .map(|(u, v)| format!("{u}-{v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn cmd_index(
    a: &IndexArgs,
    pool: &ThreadPool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    let g = a.input.load()?;
    if a.m == 0 {
        return Err("--m must be at least 1".into());
    }
    let opts = SolveOptions {
        node_limit: a.node_limit,
        bounds: BoundMode::Full,
    };
    let result = pool.install(|| match a.method {
        MethodChoice::Auto if a.m <= 3 => formula_index_small_m(&g, a.m),
        MethodChoice::Auto if a.m == 4 && g.is_tree() => tree_index_m4(&g),
        _ => exact_excessive_index(&g, a.m, &opts),
    });
    let r = match result {
        Ok(r) => r,
        Err(Error::NotCoverable { m, .. }) => IndexResult {
            m,
            value: IndexValue::Infinite,
            lower_bounds: None,
            witness: None,
            method: Method::ExactSearch,
            nodes: 0,
        },
        Err(e @ Error::BudgetExceeded { .. }) => {
            writeln!(err, "error: {e}").map_err(io)?;
            return Ok(EXIT_BUDGET);
        }
        Err(e) => return Err(e.to_string()),
    };
    if r.value == IndexValue::Infinite {
        if let Some(e) = crate::matching::uncoverable_edge(&g, a.m) {
            let (u, v) = g.edge(e);
            writeln!(err, "edge {u}-{v} lies in no {}-matching", a.m).map_err(io)?;
        }
    }
    print_index(&g, &r, a, out).map_err(io)?;
    Ok(if r.value == IndexValue::Infinite {
        EXIT_NOT_COVERABLE
    } else {
        EXIT_OK
    })
}

fn print_index(
    g: &Graph,
    r: &IndexResult,
    a: &IndexArgs,
    out: &mut dyn Write,
) -> std::io::Result<()> {
    let method = serde_json::to_value(r.method).expect("serializable");
    let method = method.as_str().unwrap_or_default().to_string();
    let cover: Option<Vec<Vec<(usize, usize)>>> = r.witness.as_ref().map(|c| c.to_pairs(g));
    match a.format {
        Format::Text => {
            writeln!(out, "{}", r.value)?;
            if r.value == IndexValue::Infinite {
                return Ok(());
            }
            writeln!(out, "method: {method}")?;
            if let Some(lb) = &r.lower_bounds {
                let mut parts = vec![
                    format!("chromatic {}", lb.chromatic),
                    format!("density {}", lb.density),
                ];
                for (t, s) in &lb.splitting {
                    parts.push(format!("s^{t} {} (bound {})", s.size, s.bound));
                }
                writeln!(out, "lower bounds: {}; max {}", parts.join(", "), lb.max)?;
            }
            if a.witness {
                if let Some(cover) = &cover {
                    for (i, m) in cover.iter().enumerate() {
                        writeln!(out, "matching {}: {}", i + 1, pairs_text(m))?;
                    }
                }
            }
        }
        Format::Json => {
            let mut v = json!({
                "m": r.m,
                "value": r.value,
                "method": method,
                "lower_bounds": r.lower_bounds,
                "nodes": r.nodes,
            });
            if a.witness {
                v["witness"] = json!(cover);
            }
            writeln!(out, "{v}")?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            let lb = r.lower_bounds.as_ref();
            let splitting = lb
                .map(|lb| {
                    lb.splitting
                        .iter()
                        .map(|(t, s)| format!("{t}:{}", s.size))
                        .collect::<Vec<_>>()
                        .join(";")
                })
                .unwrap_or_default();
            let mut header = vec![
                "m",
                "value",
                "method",
                "chromatic",
                "density",
                "splitting",
                "lower_bound",
                "nodes",
            ];
            let mut row = vec![
                r.m.to_string(),
                r.value.to_string(),
                method,
                lb.map(|l| l.chromatic.to_string()).unwrap_or_default(),
                lb.map(|l| l.density.to_string()).unwrap_or_default(),
                splitting,
                lb.map(|l| l.max.to_string()).unwrap_or_default(),
                r.nodes.to_string(),
            ];
            if a.witness {
                header.push("witness");
                row.push(
                    cover
                        .as_ref()
                        .map(|c| {
                            c.iter()
                                .map(|m| pairs_text(m))
                                .collect::<Vec<_>>()
                                .join("|")
                        })
                        .unwrap_or_default(),
                );
            }
            w.write_record(&header)?;
            w.write_record(&row)?;
            w.flush()?;
        }
    }
    Ok(())
}

fn parse_orders(spec: Option<&str>, m: usize) -> Result<Vec<usize>, String> {
    let top = m.saturating_sub(1);
    let (lo, hi) = match spec {
        None => (1, top),
        Some(s) => match s.split_once("..") {
            Some((a, b)) => (
                a.trim()
                    .parse()
                    .map_err(|_| format!("bad order range {s:?}"))?,
                b.trim()
                    .parse()
                    .map_err(|_| format!("bad order range {s:?}"))?,
            ),
            None => {
                let t = s.trim().parse().map_err(|_| format!("bad order {s:?}"))?;
                (t, t)
            }
        },
    };
    if lo == 0 || hi > top || lo > hi {
        return Err(format!("orders must satisfy 1 <= t <= m - 1 = {top}"));
    }
    Ok((lo..=hi).collect())
}

fn cmd_splitting(
    a: &SplittingArgs,
    pool: &ThreadPool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    let g = a.input.load()?;
    let orders = parse_orders(a.t.as_deref(), a.m)?;
    if !crate::matching::is_m_coverable(&g, a.m) {
        writeln!(err, "warning: graph is not [{}]-coverable", a.m).map_err(io)?;
    }
    let mut rows = Vec::new();
    for t in orders {
        let r = pool
            .install(|| splitting_number(&g, a.m, t))
            .map_err(|e| e.to_string())?;
        let witness = r.certificate.map(|c| g.edge_pairs(c.edge_set));
        rows.push((t, r.value, r.value.div_ceil(t), witness));
    }
    match a.format {
        Format::Text => {
            for (t, value, bound, witness) in &rows {
                let w = witness
                    .as_deref()
                    .map(pairs_text)
                    .unwrap_or_else(|| "-".into());
                writeln!(out, "s^{t} = {value} (bound {bound}) witness: {w}").map_err(io)?;
            }
        }
        Format::Json => {
            let v: Vec<_> = rows
                .iter()
                .map(|(t, value, bound, witness)| json!({"m": a.m, "t": t, "value": value, "bound": bound, "witness": witness}))
                .collect();
            writeln!(out, "{}", json!(v)).map_err(io)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["m", "t", "value", "bound", "witness"])
                .map_err(io)?;
            for (t, value, bound, witness) in &rows {
                w.write_record([
                    a.m.to_string(),
                    t.to_string(),
                    value.to_string(),
                    bound.to_string(),
                    witness.as_deref().map(pairs_text).unwrap_or_default(),
                ])
                .map_err(io)?;
            }
            w.flush().map_err(io)?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_verify(
    a: &VerifyArgs,
    pool: &ThreadPool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    let mut opts = LabOptions::default();
    if let Some(s) = a.seed {
        opts.seed = s;
    }
    if let Some(n) = a.node_limit {
        opts.node_limit = n;
    }
    let mut reports: Vec<TrialReport> = pool.install(|| -> Result<Vec<TrialReport>, String> {
        Ok(if a.suite.is_some() {
            if a.graphs.is_some() || a.m.is_some() {
                return Err("--suite does not take --graphs or --m".into());
            }
            if let Some(n) = a.trees {
                opts.tree_max = n;
                opts.pruner_tree_max = opts.pruner_tree_max.min(n);
            }
            verify_paper_claims_with(&opts).map_err(|e| e.to_string())?
        } else {
            let m = a.m.ok_or("a sweep needs --m (or use --suite paper)")?;
            match (a.trees, a.graphs) {
                (Some(n), None) => check_tree_conjecture(n, m, &opts).map_err(|e| e.to_string())?,
                (None, Some(n)) => {
                    let graphs = connected_graphs_up_to(n).map_err(|e| e.to_string())?;
                    check_graph_conjecture(&graphs, m, &opts).map_err(|e| e.to_string())?
                }
                _ => {
                    return Err(
                        "give exactly one of --trees N or --graphs N (or --suite paper)".into(),
                    )
                }
            }
        })
    })?;
    if reports.is_empty() {
        writeln!(err, "note: no instance in range is [m]-coverable").map_err(io)?;
    }
    if a.deterministic {
        crate::lab::report::strip_timing(&mut reports);
    }
    if let Some(p) = &a.output {
        let file =
            fs::File::create(p).map_err(|e| format!("cannot create {}: {e}", p.display()))?;
        write_jsonl(std::io::BufWriter::new(file), &reports).map_err(io)?;
    }
    match a.format {
        Format::Json => write_jsonl(&mut *out, &reports).map_err(io)?,
        Format::Text => {
            for r in &reports {
                let v = match r.verdict {
                    Verdict::Confirmed => "confirmed",
                    Verdict::Refuted => "refuted",
                    Verdict::SkippedBudget => "skipped-budget",
                };
                writeln!(out, "{v:<14} {:<40} {}", r.claim, r.instance).map_err(io)?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["claim", "instance", "expected", "verdict", "millis"])
                .map_err(io)?;
            for r in &reports {
                let v = serde_json::to_value(r.verdict).expect("serializable");
                w.write_record([
                    r.claim.as_str(),
                    r.instance.as_str(),
                    r.expected.as_str(),
                    v.as_str().unwrap_or_default(),
                    &r.millis.to_string(),
                ])
                .map_err(io)?;
            }
            w.flush().map_err(io)?;
        }
    }
    let broken: Vec<&str> = reports
        .iter()
        .filter(|r| r.is_broken_proof())
        .map(|r| r.claim.as_str())
        .collect();
    if broken.is_empty() {
        Ok(EXIT_OK)
    } else {
        writeln!(err, "refuted proven claims: {}", broken.join(", ")).map_err(io)?;
        Ok(EXIT_REFUTED)
    }
}
