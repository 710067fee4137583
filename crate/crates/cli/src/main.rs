use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use clique_bounds::io::{
    emit_dimacs, emit_edge_list, generate, limits_from_env, render_csv, render_json_lines,
    render_table, run_report, sweep, Generator, GraphFormat, GraphSource, LabeledGraph,
    OutputFormat, ReportOptions,
};
use clique_bounds::{Error, TieBreak};

const EXIT_USAGE: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_VIOLATION: u8 = 3;

/// Degree-sequence lower bounds on the clique number.
#[derive(Parser, Debug)]
#[command(name = "clique-bounds", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Wei bound and greedy α/β-sequence certificates.
    Bound(ReportArgs),
    /// Bounds plus the exact φ and ω oracles.
    Exact(ReportArgs),
    /// Print a generated graph, e.g. `gen turan 9 3`.
    Gen {
        /// Generator name followed by its parameters.
        #[arg(required = true, num_args = 1..)]
        spec: Vec<String>,
        /// dimacs or edgelist.
        #[arg(long, default_value = "dimacs")]
        emit: String,
    },
    /// Fraction of G(n, p) instances where a sequence beats ⌈W(G)⌉.
    Sweep {
        #[arg(long, default_value_t = 12)]
        n: usize,
        #[arg(long, default_value_t = 0.3)]
        p: f64,
        #[arg(long, default_value_t = 200)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Tie-break seed; lowest vertex id when absent.
        #[arg(long)]
        tie_seed: Option<u64>,
        /// table or json.
        #[arg(long, default_value = "table")]
        output: String,
    },
}

#[derive(Args, Debug)]
struct ReportArgs {
    /// Graph files (DIMACS or edge list).
    files: Vec<PathBuf>,
    /// Generated graph, e.g. --gen "gnp 12 0.3 7". Repeatable.
    #[arg(long = "gen")]
    generators: Vec<String>,
    /// Input format for files: dimacs, edgelist, or auto.
    #[arg(long, default_value = "auto")]
    format: String,
    /// table, csv, or json.
    #[arg(long, default_value = "table")]
    output: String,
    /// Tie-break seed; lowest vertex id when absent.
    #[arg(long)]
    tie_seed: Option<u64>,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. } | Error::Io(_) => EXIT_PARSE,
        Error::InvariantViolation(_) => EXIT_VIOLATION,
        _ => EXIT_USAGE,
    }
}

fn fail(e: Error) -> ExitCode {
    eprintln!("clique-bounds: {e}");
    ExitCode::from(exit_code(&e))
}

fn tie_break(seed: Option<u64>) -> TieBreak {
    seed.map_or(TieBreak::LowestId, TieBreak::Seeded)
}

fn report(args: ReportArgs, exact: bool) -> Result<ExitCode, Error> {
    let output: OutputFormat = args.output.parse()?;
    let format = match args.format.as_str() {
        "auto" => None,
        f => Some(f.parse::<GraphFormat>()?),
    };
    let mut sources: Vec<GraphSource> = args
        .files
        .into_iter()
        .map(|path| GraphSource::File { path, format })
        .collect();
    for spec in &args.generators {
        sources.push(GraphSource::Generator(spec.parse()?));
    }
    if sources.is_empty() {
        return Err(Error::Usage("no input graphs; pass files or --gen".into()));
    }
    let graphs = sources
        .iter()
        .map(|s| {
            s.load()
                .map(|lg| (s.name(), lg.graph))
                .map_err(|e| match e {
                    Error::Parse { line, msg } => Error::Parse {
                        line,
                        msg: format!("{}: {msg}", s.name()),
                    },
                    other => other,
                })
        })
        .collect::<Result<Vec<_>, _>>()?;

    let opts = ReportOptions {
        exact,
        limits: limits_from_env()?,
        tie_break: tie_break(args.tie_seed),
    };
    let records = run_report(&graphs, &opts);
    let text = match output {
        OutputFormat::Table => render_table(&records),
        OutputFormat::Csv => render_csv(&records),
        OutputFormat::JsonLines => render_json_lines(&records),
    };
    print!("{text}");
    for r in &records {
        if output != OutputFormat::Table {
            for e in &r.errors {
                eprintln!("{}: error: {e}", r.name);
            }
        }
        for v in &r.violations {
            eprintln!("{}: internal invariant violated: {v}", r.name);
        }
    }
    if records.iter().all(|r| r.is_consistent()) {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(EXIT_VIOLATION))
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Bound(args) => report(args, false),
        Command::Exact(args) => report(args, true),
        Command::Gen { spec, emit } => {
            let generator: Generator = spec.join(" ").parse()?;
            let g = generate(&generator)?;
            match emit.parse::<GraphFormat>()? {
                GraphFormat::Dimacs => {
                    println!("c {generator}");
                    print!("{}", emit_dimacs(&g));
                }
                GraphFormat::EdgeList => {
                    println!("# {generator}");
                    print!("{}", emit_edge_list(&LabeledGraph::numbered(g)));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Sweep {
            n,
            p,
            count,
            seed,
            tie_seed,
            output,
        } => {
            let stats = sweep(n, p, count, seed, tie_break(tie_seed))?;
            match output.parse::<OutputFormat>()? {
                OutputFormat::JsonLines => println!("{}", stats.to_json_line()),
                OutputFormat::Table | OutputFormat::Csv => {
                    println!(
                        "G({}, {}) x {} from seed {}: improved {} ({:.4}); alpha {}, beta {}",
                        stats.n,
                        stats.p,
                        stats.count,
                        stats.seed,
                        stats.improved,
                        stats.fraction,
                        stats.improved_alpha,
                        stats.improved_beta
                    );
                }
            }
            if stats.violations > 0 {
                eprintln!(
                    "clique-bounds: {} instance(s) violated an invariant",
                    stats.violations
                );
                return Ok(ExitCode::from(EXIT_VIOLATION));
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    run(cli).unwrap_or_else(fail)
}
