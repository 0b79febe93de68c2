//! `copwin`: corner ranks, capture times, realizer census and the
//! verification suites from the command line.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 domain failure (not
//! cop-win under `--require-copwin`, failing checks, oracle disagreement),
//! 3 search cap or budget exceeded.

use clap::{Parser, Subcommand, ValueEnum};
use copwin::catalog::{named_graph, named::REGISTRY};
use copwin::game::capture_time_by_game;
use copwin::graph::{parse_graph, sniff_format, GraphFormat, LabeledGraph};
use copwin::rank::{capture_time_by_rank, corner_rank, summarize};
use copwin::search::{
    census, check_minimal, verify_suite, CensusOptions, Method, RFilter, SuiteOptions, SuiteReport, DEFAULT_CAP,
    MAX_CAP, SUITES,
};
use copwin::{Error, RankVector};
use serde_json::{json, Value};
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

const SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(name = "copwin", version, about = "Corner ranking and capture time for one-cop cops and robbers")]
struct Cli {
    /// Output mode.
    #[arg(long, global = true, value_enum, default_value_t = Output::Human)]
    output: Output,
    /// Largest order searched exhaustively (10 is slow).
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    cap: usize,
    /// Worker threads; defaults to the number of cores.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Human,
    Structured,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Auto,
    Adjlist,
    Pairs,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Oracle {
    Rank,
    Game,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Auto,
    Enumerate,
    Lift,
}

#[derive(Subcommand)]
enum Command {
    /// Corner rank of every vertex, top class, vector and capture time.
    Rank {
        /// Graph file, or `-` for stdin.
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Auto)]
        format: Format,
        /// Exit with status 2 when the graph is not cop-win.
        #[arg(long)]
        require_copwin: bool,
    },
    /// Capture time from the ranking, the game solver, or both.
    Capture {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Auto)]
        format: Format,
        #[arg(long, value_enum, default_value_t = Oracle::Rank)]
        oracle: Oracle,
        #[arg(long)]
        require_copwin: bool,
    },
    /// Count (and optionally print) the graphs realizing a vector.
    Realize {
        /// Vector such as "(2,2,2,1)".
        vector: String,
        /// Top class: 0, 1 or any.
        #[arg(long, default_value = "any")]
        r: String,
        /// Print each realizer in compact form.
        #[arg(long)]
        emit: bool,
        /// Let a vector of length 1 match its clique.
        #[arg(long)]
        include_cliques: bool,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
    },
    /// Whether no smaller vector of length at least 2 is r-realizable.
    Minimal {
        vector: String,
        #[arg(long)]
        r: u8,
    },
    /// Run a verification suite, or `all`.
    Verify {
        suite: String,
        /// Corpus directory for the `fixtures` suite (default: $COPWIN_CORPUS,
        /// then the bundled corpus).
        #[arg(long)]
        corpus: Option<PathBuf>,
    },
    /// Named graphs from the figures.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    List,
    Show {
        name: String,
        #[arg(long)]
        n: Option<usize>,
    },
}

/// A failure with its exit status.
struct Fail(u8, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::NotCopWin => 2,
            Error::Resource { .. } | Error::Budget { .. } => 3,
            _ => 1,
        };
        Fail(code, e.to_string())
    }
}

type CmdResult = Result<u8, Fail>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Fail(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}

fn run(cli: Cli) -> CmdResult {
    if cli.cap > MAX_CAP {
        return Err(Error::Resource {
            requested: cli.cap,
            cap: MAX_CAP,
        }
        .into());
    }
    if cli.cap > DEFAULT_CAP {
        eprintln!("warning: --cap={} enumerates far more graphs and can take a long time", cli.cap);
    }
    if let Some(t) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| Fail(1, e.to_string()))?;
    }
    let out = cli.output;
    match cli.command {
        Command::Rank {
            file,
            format,
            require_copwin,
        } => cmd_rank(&read_graph(&file, format)?, out, require_copwin),
        Command::Capture {
            file,
            format,
            oracle,
            require_copwin,
        } => cmd_capture(&read_graph(&file, format)?, out, oracle, require_copwin),
        Command::Realize {
            vector,
            r,
            emit,
            include_cliques,
            method,
        } => {
            let opts = CensusOptions {
                include_cliques,
                method: match method {
                    MethodArg::Auto => Method::Auto,
                    MethodArg::Enumerate => Method::Enumerate,
                    MethodArg::Lift => Method::Lift,
                },
                ..CensusOptions::with_cap(cli.cap)
            };
            cmd_realize(&parse_vector(&vector)?, r.parse()?, &opts, emit, out)
        }
        Command::Minimal { vector, r } => cmd_minimal(&parse_vector(&vector)?, r, cli.cap, out),
        Command::Verify { suite, corpus } => cmd_verify(&suite, SuiteOptions { cap: cli.cap, corpus }, out),
        Command::Catalog { action } => cmd_catalog(action, out),
    }
}

fn parse_vector(s: &str) -> Result<RankVector, Fail> {
    s.parse().map_err(Fail::from)
}

fn read_graph(path: &PathBuf, format: Format) -> Result<LabeledGraph, Fail> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| Fail(1, e.to_string()))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| Fail(1, format!("{}: {e}", path.display())))?
    };
    let format = match format {
        Format::Auto => sniff_format(&text),
        Format::Adjlist => GraphFormat::Adjlist,
        Format::Pairs => GraphFormat::Pairs,
    };
    parse_graph(&text, format).map_err(|e| Fail(1, format!("{}: {e}", path.display())))
}

fn print_json(v: &Value) {
    use std::io::Write;
    let _ = writeln!(std::io::stdout().lock(), "{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn cmd_rank(lg: &LabeledGraph, out: Output, require_copwin: bool) -> CmdResult {
    let s = summarize(&lg.graph);
    let mut order: Vec<usize> = (0..lg.graph.n()).collect();
    order.sort_by_key(|&v| lg.label(v));
    match out {
        Output::Structured => {
            let ranks: Vec<Value> = order
                .iter()
                .map(|&v| json!({ "label": lg.label(v), "rank": s.vertex_ranks[v] }))
                .collect();
            print_json(&json!({
                "schema_version": SCHEMA_VERSION,
                "command": "rank",
                "n": s.n,
                "cop_win": s.cop_win,
                "rank": s.rank,
                "top": s.top,
                "vector": s.vector,
                "capture_time": s.capture_time,
                "vertex_ranks": ranks,
            }));
        }
        Output::Human => {
            match (&s.vector, s.top) {
                (Some(v), Some(t)) => println!("rank={} top={t} vector={v} capture_time={}", s.rank, s.capture_time),
                _ => println!("rank=infinity cop_win=false"),
            }
            let ranks: Vec<String> = order
                .iter()
                .map(|&v| format!("{}:{}", lg.label(v), s.vertex_ranks[v]))
                .collect();
            println!("ranks {}", ranks.join(" "));
        }
    }
    Ok(if require_copwin && !s.cop_win { 2 } else { 0 })
}

fn cmd_capture(lg: &LabeledGraph, out: Output, oracle: Oracle, require_copwin: bool) -> CmdResult {
    let g = &lg.graph;
    let r = corner_rank(g);
    let by_rank = (oracle != Oracle::Game).then(|| capture_time_by_rank(g, &r));
    let by_game = (oracle != Oracle::Rank).then(|| capture_time_by_game(g));
    let agree = match (by_rank, by_game) {
        (Some(a), Some(b)) => Some(a == b),
        _ => None,
    };
    match out {
        Output::Structured => print_json(&json!({
            "schema_version": SCHEMA_VERSION,
            "command": "capture",
            "cop_win": r.is_cop_win(),
            "rank_oracle": by_rank,
            "game_oracle": by_game,
            "agree": agree,
        })),
        Output::Human => match (by_rank, by_game) {
            (Some(a), Some(b)) => println!(
                "rank={a} game={b} {}",
                if a == b { "agree" } else { "DISAGREE" }
            ),
            (Some(t), None) | (None, Some(t)) => println!("capture_time={t}"),
            (None, None) => unreachable!(),
        },
    }
    if agree == Some(false) {
        eprintln!("error: the rank and game oracles disagree; this is a bug");
        return Ok(2);
    }
    Ok(if require_copwin && !r.is_cop_win() { 2 } else { 0 })
}

fn cmd_realize(v: &RankVector, filter: RFilter, opts: &CensusOptions, emit: bool, out: Output) -> CmdResult {
    let c = census(v, filter, opts)?;
    match out {
        Output::Structured => {
            let mut value = serde_json::to_value(&c).expect("serializable");
            value["schema_version"] = json!(SCHEMA_VERSION);
            value["count"] = json!(c.count());
            if !emit {
                value.as_object_mut().unwrap().remove("realizers");
            }
            print_json(&value);
        }
        Output::Human => {
            println!(
                "vector={v} r={} count={} exhaustive={}",
                filter,
                c.count(),
                c.exhaustive
            );
            if emit {
                for g in &c.realizers {
                    println!("{}", g.to_compact());
                }
            }
        }
    }
    Ok(0)
}

fn cmd_minimal(x: &RankVector, r: u8, cap: usize, out: Output) -> CmdResult {
    let v = check_minimal(x, r, x.sum().min(cap))?;
    match out {
        Output::Structured => {
            let mut value = serde_json::to_value(&v).expect("serializable");
            value["schema_version"] = json!(SCHEMA_VERSION);
            value["conclusive"] = json!(v.is_conclusive());
            print_json(&value);
        }
        Output::Human => {
            match &v.witness {
                Some((y, g)) => println!("{x} r={r}: not minimal, witness {y} realized by {}", g.to_compact()),
                None if v.residual.is_empty() => println!("{x} r={r}: minimal ({} predecessors tested)", v.tested),
                None => println!(
                    "{x} r={r}: minimal among predecessors with sum <= {} ({} tested); untested: {}",
                    v.sum_cap_used,
                    v.tested,
                    v.residual.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
                ),
            }
            if v.self_realizable == Some(false) {
                println!("note: {x} itself is not {r}-realizable");
            }
        }
    }
    Ok(0)
}

fn cmd_verify(suite: &str, opts: SuiteOptions, out: Output) -> CmdResult {
    let names: Vec<&str> = if suite == "all" { SUITES.to_vec() } else { vec![suite] };
    let mut reports: Vec<SuiteReport> = Vec::new();
    for name in names {
        let rep = verify_suite(name, &opts)?;
        if out == Output::Human {
            print!("{}", rep.lines());
            for s in &rep.skipped {
                println!("SUITE {} SKIP {s} (above cap {})", rep.suite, rep.cap);
            }
        }
        reports.push(rep);
    }
    if out == Output::Structured {
        let value = if reports.len() == 1 {
            serde_json::to_value(&reports[0])
        } else {
            serde_json::to_value(&reports)
        };
        print_json(&value.expect("serializable"));
    }
    Ok(if reports.iter().all(|r| r.pass) { 0 } else { 2 })
}

fn cmd_catalog(action: CatalogAction, out: Output) -> CmdResult {
    match action {
        CatalogAction::List => match out {
            Output::Structured => {
                let items: Vec<Value> = REGISTRY
                    .iter()
                    .map(|(name, takes_n, desc)| json!({ "name": name, "takes_n": takes_n, "description": desc }))
                    .collect();
                print_json(&json!({ "schema_version": SCHEMA_VERSION, "graphs": items }));
            }
            Output::Human => {
                for (name, takes_n, desc) in REGISTRY {
                    let name = if *takes_n { format!("{name} --n=N") } else { name.to_string() };
                    println!("{name:<16} {desc}");
                }
            }
        },
        CatalogAction::Show { name, n } => {
            let ng = named_graph(&name, n)?;
            let r = corner_rank(&ng.graph);
            let s = summarize(&ng.graph);
            let label = |v: usize| ng.vertex_names[v].clone();
            let edges: Vec<(String, String)> = ng.graph.edges().map(|(a, b)| (label(a), label(b))).collect();
            match out {
                Output::Structured => {
                    let ranks: Vec<Value> = (0..ng.graph.n())
                        .map(|v| {
                            json!({
                                "name": label(v),
                                "rank": r.rank(v),
                                "printed": ng.printed_ranks.as_ref().map(|p| p[v]),
                            })
                        })
                        .collect();
                    print_json(&json!({
                        "schema_version": SCHEMA_VERSION,
                        "name": ng.name,
                        "n": ng.graph.n(),
                        "compact": ng.graph.to_compact(),
                        "edges": edges,
                        "cop_win": s.cop_win,
                        "rank": s.rank,
                        "top": s.top,
                        "vector": s.vector,
                        "capture_time": s.capture_time,
                        "vertices": ranks,
                    }));
                }
                Output::Human => {
                    println!("{} ({} vertices, {} edges)", ng.name, ng.graph.n(), edges.len());
                    let e: Vec<String> = edges.iter().map(|(a, b)| format!("{a}-{b}")).collect();
                    println!("edges {}", e.join(" "));
                    let ranks: Vec<String> = (0..ng.graph.n()).map(|v| format!("{}:{}", label(v), r.rank(v))).collect();
                    println!("ranks {}", ranks.join(" "));
                    match (&s.vector, s.top) {
                        (Some(v), Some(t)) => println!("rank={} top={t} vector={v} capture_time={}", s.rank, s.capture_time),
                        _ => println!("rank=infinity cop_win=false"),
                    }
                }
            }
        }
    }
    Ok(0)
}
