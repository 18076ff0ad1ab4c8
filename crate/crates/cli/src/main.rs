//! Batch command-line front end: generate graphs, simulate forcing, run the
//! exact search, emit constructions, verify claims, and reproduce the full
//! value table.
//!
//! Exit codes: 0 success/verified, 1 claim failed, 2 usage error,
//! 3 capacity refusal, 4 I/O or parse error.

mod expr;
mod report;

use std::fmt;
use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use zforce::construct::{
    grid_construction, prism_construction, strong_grid_construction, strong_torus_construction,
    torus_construction,
};
use zforce::{
    apply_rule_once, certificate_record, construction_record, corona_construction,
    corona_witness_need, derived_coloring, derived_set, failed_zero_forcing_number,
    lexicographic_construction, lexicographic_witness_need, parse_graph, parse_vertex_set,
    serialize_graph, structural_upper_bound, zero_forcing_number, Certificate, ConstructionResult,
    CoronaWitnessNeed, ExactOptions, Graph, LexWitnessNeed, Stat, VertexSet, DEFAULT_CAP,
};

#[derive(Parser)]
#[command(
    name = "zforce",
    version,
    about = "Zero forcing and failed zero forcing on small graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum Format {
    #[default]
    Text,
    Structured,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StatArg {
    #[value(name = "F", alias = "f")]
    F,
    #[value(name = "Z", alias = "z")]
    Z,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CheckArg {
    Zfs,
    Failed,
    Stalled,
    Maximal,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph from an expression, e.g. `path:4 box path:3`
    Gen {
        /// Expression tokens; quoting is optional
        #[arg(required = true)]
        expr: Vec<String>,
        /// Label any unlabeled vertex `v_i`
        #[arg(long)]
        seed_labels: bool,
    },
    /// Run the color-change rule from an initial blue set
    Simulate {
        /// Graph file path, or `-` for standard input
        file: String,
        /// Initial blue set, e.g. `0,2,4-6`
        #[arg(long)]
        blue: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Compute Z or F exactly, with a certificate
    Exact {
        /// Graph file path, or `-` for standard input
        file: String,
        /// Which invariant to compute
        #[arg(long, value_enum)]
        stat: StatArg,
        /// Largest order accepted by the exhaustive search
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        /// Worker threads for subset enumeration
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Build a construction and verify its claims live
    Construct {
        /// One of: grid, torus, prism, strong-grid, strong-torus, lex, corona
        tag: String,
        /// Construction parameters (numbers, or expressions for lex/corona)
        #[arg(required = true)]
        params: Vec<String>,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Check a set predicate; exit 0 iff it holds
    Verify {
        /// Graph file path, or `-` for standard input
        file: String,
        /// The vertex set to check
        set: String,
        /// Which predicate to check
        #[arg(long, value_enum)]
        check: CheckArg,
    },
    /// Structural upper bound on the failed zero forcing number
    Bound {
        /// Graph file path, or `-` for standard input
        file: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Recompute the full value table and print one row per check
    Report {
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

enum CliError {
    Usage(String),
    Capacity(String),
    Input(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Capacity(_) => 3,
            CliError::Input(_) => 4,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Capacity(m) | CliError::Input(m) => f.write_str(m),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(all_claims_hold) => {
            if all_claims_hold {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}

fn load_graph(path: &str) -> Result<Graph, CliError> {
    let text = if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| CliError::Input(format!("reading standard input: {e}")))?;
        buf
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("reading {path}: {e}")))?
    };
    parse_graph(&text).map_err(|e| CliError::Input(format!("{path}: {e}")))
}

fn load_set(text: &str, g: &Graph) -> Result<VertexSet, CliError> {
    let set = parse_vertex_set(text).map_err(|e| CliError::Usage(format!("set `{text}`: {e}")))?;
    if let Some(v) = (set - g.vertex_set()).lowest() {
        return Err(CliError::Usage(format!(
            "set contains vertex {v}, but the graph has order {}",
            g.order()
        )));
    }
    Ok(set)
}

fn exact_with(g: &Graph, stat: Stat, opts: &ExactOptions) -> Result<Certificate, CliError> {
    let result = match stat {
        Stat::F => failed_zero_forcing_number(g, opts),
        Stat::Z => zero_forcing_number(g, opts),
    };
    result.map_err(|e| CliError::Capacity(format!("{e}; rerun with --cap {}", g.order())))
}

fn print_certificate(cert: &Certificate, format: Format) {
    match format {
        Format::Text => {
            println!("target: {}", cert.target);
            println!("value: {}", cert.value);
            println!("witness: {}", cert.witness);
            println!("route: {}", cert.route);
            println!("basis: {}", cert.basis.as_deref().unwrap_or("-"));
        }
        Format::Structured => {
            print!("{}", certificate_record(cert));
            println!();
        }
    }
}

fn run(command: Command) -> Result<bool, CliError> {
    match command {
        Command::Gen { expr, seed_labels } => cmd_gen(&expr.join(" "), seed_labels),
        Command::Simulate { file, blue, format } => cmd_simulate(&file, &blue, format),
        Command::Exact {
            file,
            stat,
            cap,
            workers,
            format,
        } => cmd_exact(&file, stat, cap, workers, format),
        Command::Construct {
            tag,
            params,
            cap,
            workers,
            format,
        } => cmd_construct(&tag, &params.join(" "), cap, workers, format),
        Command::Verify { file, set, check } => cmd_verify(&file, &set, check),
        Command::Bound { file, format } => cmd_bound(&file, format),
        Command::Report { workers, format } => cmd_report(workers, format),
    }
}

fn cmd_gen(expr_text: &str, seed_labels: bool) -> Result<bool, CliError> {
    let expr = expr::parse_expr(expr_text)
        .map_err(|e| CliError::Usage(format!("expression `{expr_text}`: {e}")))?;
    let mut graph = expr.build().map_err(|e| {
        if matches!(
            e,
            zforce::FamilyError::Graph(zforce::GraphError::CapacityExceeded { .. })
        ) {
            CliError::Capacity(format!("{e}"))
        } else {
            CliError::Usage(format!("{e}"))
        }
    })?;
    if seed_labels {
        for v in 0..graph.order() {
            if graph.label(v).is_none() {
                graph.set_label(v, format!("v_{v}"));
            }
        }
    }
    print!("{}", serialize_graph(&graph));
    Ok(true)
}

fn cmd_simulate(file: &str, blue: &str, format: Format) -> Result<bool, CliError> {
    let graph = load_graph(file)?;
    let initial = load_set(blue, &graph)?;
    let (fin, chain) = derived_coloring(&graph, &initial);
    let white = fin.complement_within(graph.order());
    match format {
        Format::Text => {
            if !chain.is_empty() {
                println!("{chain}");
            }
            println!("forces: {}", chain.len());
            if white.is_empty() {
                println!("verdict: ZERO FORCING");
            } else {
                println!("verdict: FAILED");
                println!("white: {white}");
            }
        }
        Format::Structured => {
            let steps = chain
                .steps
                .iter()
                .map(|(u, v)| format!("{u} -> {v}"))
                .collect::<Vec<_>>()
                .join("; ");
            println!("record: simulation");
            println!("chain: {}", if steps.is_empty() { "-" } else { &steps });
            println!("final: {fin}");
            println!("forces: {}", chain.len());
            println!(
                "verdict: {}",
                if white.is_empty() {
                    "zero-forcing"
                } else {
                    "failed"
                }
            );
            println!("white: {white}");
            println!();
        }
    }
    Ok(true)
}

fn cmd_exact(
    file: &str,
    stat: StatArg,
    cap: usize,
    workers: usize,
    format: Format,
) -> Result<bool, CliError> {
    let graph = load_graph(file)?;
    let opts = ExactOptions { cap, workers };
    let stat = match stat {
        StatArg::F => Stat::F,
        StatArg::Z => Stat::Z,
    };
    let cert = exact_with(&graph, stat, &opts)?;
    print_certificate(&cert, format);
    Ok(true)
}

fn int_params(tag: &str, params: &str, count: usize) -> Result<Vec<usize>, CliError> {
    let items: Vec<&str> = params.split_whitespace().collect();
    if items.len() != count {
        return Err(CliError::Usage(format!(
            "`{tag}` takes {count} integer parameter(s), found {}",
            items.len()
        )));
    }
    items
        .iter()
        .map(|t| {
            t.parse()
                .map_err(|_| CliError::Usage(format!("`{t}` is not an integer")))
        })
        .collect()
}

fn cmd_construct(
    tag: &str,
    params: &str,
    cap: usize,
    workers: usize,
    format: Format,
) -> Result<bool, CliError> {
    let opts = ExactOptions { cap, workers };
    let map_err = |e: zforce::ConstructionError| match e {
        zforce::ConstructionError::Graph(zforce::GraphError::CapacityExceeded { .. }) => {
            CliError::Capacity(format!("{e}"))
        }
        other => CliError::Usage(format!("{other}")),
    };

    let (graph, result): (Graph, ConstructionResult) = match tag {
        "grid" => {
            let p = int_params(tag, params, 2)?;
            grid_construction(p[0], p[1]).map_err(map_err)?
        }
        "torus" => {
            let p = int_params(tag, params, 2)?;
            torus_construction(p[0], p[1]).map_err(map_err)?
        }
        "prism" => {
            let p = int_params(tag, params, 1)?;
            prism_construction(p[0]).map_err(map_err)?
        }
        "strong-grid" => {
            let p = int_params(tag, params, 2)?;
            strong_grid_construction(p[0], p[1]).map_err(map_err)?
        }
        "strong-torus" => {
            let p = int_params(tag, params, 2)?;
            strong_torus_construction(p[0], p[1]).map_err(map_err)?
        }
        "lex" | "corona" => {
            let exprs = expr::parse_expr_list(params, 2)
                .map_err(|e| CliError::Usage(format!("parameters `{params}`: {e}")))?;
            let build = |e: &zforce::GraphExpr| {
                e.build().map_err(|err| CliError::Usage(format!("{err}")))
            };
            let g = build(&exprs[0])?;
            let h = build(&exprs[1])?;
            if tag == "lex" {
                let witness = match lexicographic_witness_need(&h) {
                    LexWitnessNeed::InnerMaxFailed => exact_with(&h, Stat::F, &opts)?,
                    LexWitnessNeed::OuterMaxFailed => exact_with(&g, Stat::F, &opts)?,
                };
                lexicographic_construction(&g, &h, &witness).map_err(map_err)?
            } else {
                let witness = match corona_witness_need(&h) {
                    CoronaWitnessNeed::OuterMaxFailed => Some(exact_with(&g, Stat::F, &opts)?),
                    CoronaWitnessNeed::InnerMaxFailed => Some(exact_with(&h, Stat::F, &opts)?),
                    CoronaWitnessNeed::None => None,
                    CoronaWitnessNeed::ReducedInnerMaxFailed(reduced, _) => {
                        Some(exact_with(&reduced, Stat::F, &opts)?)
                    }
                };
                corona_construction(&g, &h, witness.as_ref()).map_err(map_err)?
            }
        }
        other => {
            return Err(CliError::Usage(format!(
                "unknown construction `{other}` (expected grid, torus, prism, strong-grid, strong-torus, lex, corona)"
            )))
        }
    };

    let verdicts = result.verify(&graph);
    match format {
        Format::Text => {
            println!("construction: {}", result.source);
            println!("order: {}", graph.order());
            println!("predicted_size: {}", result.predicted_size);
            println!("set: {}", result.set);
            for (claim, ok) in &verdicts {
                println!("claim {claim}: {}", if *ok { "PASS" } else { "FAIL" });
            }
        }
        Format::Structured => {
            print!("{}", construction_record(&result));
            println!();
            println!("record: verification");
            for (claim, ok) in &verdicts {
                println!("{claim}: {}", if *ok { "PASS" } else { "FAIL" });
            }
            println!();
        }
    }
    Ok(verdicts.iter().all(|(_, ok)| *ok))
}

fn cmd_verify(file: &str, set_text: &str, check: CheckArg) -> Result<bool, CliError> {
    let graph = load_graph(file)?;
    let set = load_set(set_text, &graph)?;
    let (fin, chain) = derived_coloring(&graph, &set);
    let forces_all = fin == graph.vertex_set();
    match check {
        CheckArg::Zfs => {
            if forces_all {
                println!("verified: zero forcing set");
                Ok(true)
            } else {
                println!("check failed: derived coloring stalls");
                println!("white: {}", fin.complement_within(graph.order()));
                Ok(false)
            }
        }
        CheckArg::Failed => {
            if !forces_all {
                println!("verified: failed zero forcing set");
                println!("white: {}", fin.complement_within(graph.order()));
                Ok(true)
            } else {
                println!("check failed: the set forces the whole graph");
                if !chain.is_empty() {
                    println!("{chain}");
                }
                Ok(false)
            }
        }
        CheckArg::Stalled => {
            if set == graph.vertex_set() {
                println!("check failed: the full vertex set is not a proper subset");
                return Ok(false);
            }
            match apply_rule_once(&graph, &set) {
                None => {
                    println!("verified: stalled");
                    Ok(true)
                }
                Some((u, v)) => {
                    println!("check failed: force available");
                    println!("{u} -> {v}");
                    Ok(false)
                }
            }
        }
        CheckArg::Maximal => {
            if forces_all {
                println!("check failed: the set is not failed; it forces the whole graph");
                if !chain.is_empty() {
                    println!("{chain}");
                }
                return Ok(false);
            }
            for v in set.complement_within(graph.order()).iter() {
                let mut bigger = set;
                bigger.insert(v);
                let fin = derived_set(&graph, &bigger);
                if fin != graph.vertex_set() {
                    println!("check failed: adding vertex {v} still leaves a failed set");
                    println!("white: {}", fin.complement_within(graph.order()));
                    return Ok(false);
                }
            }
            println!("verified: maximal failed zero forcing set");
            Ok(true)
        }
    }
}

fn cmd_bound(file: &str, format: Format) -> Result<bool, CliError> {
    let graph = load_graph(file)?;
    let (bound, basis) = structural_upper_bound(&graph);
    match format {
        Format::Text => {
            println!("order: {}", graph.order());
            println!("bound: {bound}");
            println!("basis: {basis}");
        }
        Format::Structured => {
            println!("record: bound");
            println!("value: {bound}");
            println!("basis: {basis}");
            println!();
        }
    }
    Ok(true)
}

fn cmd_report(workers: usize, format: Format) -> Result<bool, CliError> {
    let rows = report::build_rows(workers.max(1));
    let mut failures = 0usize;
    for row in &rows {
        let status = if row.pass { "PASS" } else { "FAIL" };
        if !row.pass {
            failures += 1;
        }
        match format {
            Format::Text => println!(
                "{} | expected {} | computed {} | {} | {status}",
                row.claim, row.expected, row.computed, row.route
            ),
            Format::Structured => {
                println!("record: report-row");
                println!("claim: {}", row.claim);
                println!("expected: {}", row.expected);
                println!("computed: {}", row.computed);
                println!("route: {}", row.route);
                println!("status: {status}");
                println!();
            }
        }
    }
    println!("rows: {}", rows.len());
    println!("failures: {failures}");
    Ok(failures == 0)
}
