use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};
use maxmult::oracle::OracleConfig;
use maxmult_cli::input::{parse_graphs, read_source};
use maxmult_cli::witness::Request;
use maxmult_cli::{classify, survey, witness, CliError, Config, Format};

/// Maximum eigenvalue multiplicity of graphs: which graphs have M(G) = 2.
#[derive(Parser)]
#[command(version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify each input graph as M1, M2 or MGe3, with a certificate.
    Classify {
        #[arg(long, value_enum, default_value = "graph6", env = "MAXMULT_FORMAT")]
        format: Format,
        /// Input file, or `-` for standard input.
        #[arg(default_value = "-")]
        input: PathBuf,
    },
    /// Emit a matrix of a requested corank, or a rank lower-bound
    /// certificate, for each input graph.
    Witness {
        #[arg(long, value_enum, default_value = "graph6", env = "MAXMULT_FORMAT")]
        format: Format,
        #[arg(default_value = "-")]
        input: PathBuf,
        #[arg(long, conflicts_with = "lower_bound", required_unless_present = "lower_bound")]
        corank: Option<usize>,
        #[arg(long)]
        lower_bound: bool,
        #[command(flatten)]
        oracle: OracleArgs,
    },
    /// Classify, cross-check and re-verify every graph of a graph6 corpus,
    /// appending records to a JSON-lines file. Exits with 2 on mismatches.
    Survey {
        corpus: PathBuf,
        #[arg(long, default_value = "survey.jsonl", env = "MAXMULT_OUT")]
        out: PathBuf,
        /// Largest graph cross-checked with the numeric oracle.
        #[arg(long, default_value_t = 10, env = "MAXMULT_MAX_EXHAUSTIVE_N")]
        max_exhaustive_n: usize,
        /// Worker threads (0: one per core).
        #[arg(long, default_value_t = 0, env = "MAXMULT_JOBS")]
        jobs: usize,
        #[command(flatten)]
        oracle: OracleArgs,
    },
}

#[derive(Args)]
struct OracleArgs {
    #[arg(long, default_value_t = 0, env = "MAXMULT_SEED")]
    seed: u64,
    #[arg(long, default_value_t = 32, env = "MAXMULT_RESTARTS")]
    restarts: usize,
    #[arg(long, default_value_t = 400, env = "MAXMULT_MAX_ITERS")]
    max_iters: usize,
    #[arg(long, default_value_t = 1e-16, env = "MAXMULT_ACCEPT_TOL")]
    accept_tol: f64,
    #[arg(long, default_value_t = 1e-4, env = "MAXMULT_GAP_TOL")]
    gap_tol: f64,
    #[arg(long, default_value_t = 1e-3, env = "MAXMULT_PATTERN_FLOOR")]
    pattern_floor: f64,
    #[arg(long, default_value_t = 1e-2, env = "MAXMULT_ACCEPT_FLOOR")]
    accept_floor: f64,
}

impl From<OracleArgs> for OracleConfig {
    fn from(a: OracleArgs) -> Self {
        OracleConfig {
            restarts: a.restarts,
            max_iters: a.max_iters,
            accept_tol: a.accept_tol,
            gap_tol: a.gap_tol,
            pattern_floor: a.pattern_floor,
            accept_floor: a.accept_floor,
            seed: a.seed,
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Classify { format, input } => {
            let text = read_source(&input).with_context(|| format!("reading {}", input.display()))?;
            let failures = classify::run(&text, format, &mut std::io::stdout().lock(), &mut std::io::stderr())?;
            Ok(if failures == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Witness { format, input, corank, lower_bound, oracle } => {
            let text = read_source(&input).with_context(|| format!("reading {}", input.display()))?;
            let request = if lower_bound { Request::LowerBound } else { Request::Corank(corank.unwrap_or(0)) };
            let cfg = Config { oracle: oracle.into(), ..Config::default() };
            cfg.validate()?;
            let mut failures = 0;
            for (line, parsed) in parse_graphs(&text, format) {
                let result = parsed
                    .map_err(|e| CliError::Input(e.to_string()))
                    .and_then(|g| witness::witness(&g, request, &cfg.oracle));
                match result {
                    Ok(v) => println!("{v}"),
                    Err(e) => {
                        failures += 1;
                        eprintln!("line {line}: {e}");
                    }
                }
            }
            Ok(if failures == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Survey { corpus, out, max_exhaustive_n, jobs, oracle } => {
            let cfg = Config { oracle: oracle.into(), max_exhaustive_n, out, jobs };
            let text = read_source(&corpus).with_context(|| format!("reading corpus {}", corpus.display()))?;
            let result = survey::run(&text, &cfg)?;
            for (line, e) in &result.parse_errors {
                eprintln!("line {line}: {e}");
            }
            eprintln!(
                "computed {} new records, reused {}",
                result.computed,
                result.summary.total - result.computed
            );
            println!("{}", serde_json::to_string_pretty(&result.summary)?);
            Ok(if !result.summary.mismatches.is_empty() {
                ExitCode::from(2)
            } else if !result.parse_errors.is_empty() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            })
        }
    }
}
