//! `osvg`: batch computation and verification for the Orlik–Solomon algebra
//! and the Varchenko–Gel'fand ring of the braid arrangement.

use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use osvg::invariants::{hilbert_full, hilbert_invariants, invariant_subspace};
use osvg::theorems::{Statement, VerificationReport};
use osvg::{Element, Ring};
use rayon::prelude::*;
use serde_json::json;

const DEFAULT_MAX_N: usize = 5;
const UNGATED_MAX_N: usize = 5;

#[derive(Parser)]
#[command(name = "osvg", version, about = "Invariants of the Orlik–Solomon algebra and Varchenko–Gel'fand ring")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Worker threads; 0 lets rayon decide.
    #[arg(long, env = "OSVG_THREADS", global = true)]
    threads: Option<usize>,
    /// Print timings to stderr.
    #[arg(short, long, action = clap::ArgAction::Count, global = true)]
    verbose: u8,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Graded dimensions, lowest degree first.
    Hilbert {
        #[arg(long)]
        ring: Ring,
        #[arg(long)]
        n: usize,
        /// Restrict to the S_n-invariants.
        #[arg(long)]
        invariant: bool,
    },
    /// Reduce a word in the generators to NBC normal form.
    Straighten {
        #[arg(long)]
        ring: Ring,
        #[arg(long)]
        n: usize,
        text: String,
    },
    /// Run verifiers and report pass/fail.
    Verify {
        /// Statement id or `all`.
        #[arg(long, default_value = "all", value_parser = parse_target)]
        statement: Target,
        /// Single rank.
        #[arg(long, conflicts_with = "max_n")]
        n: Option<usize>,
        /// Run every rank from 2 up to this bound.
        #[arg(long)]
        max_n: Option<usize>,
        /// Allow --max-n above 5.
        #[arg(long)]
        extended: bool,
    },
    /// A basis of the degree-d S_n-invariants.
    InvariantBasis {
        #[arg(long)]
        ring: Ring,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        degree: usize,
    },
}

#[derive(Clone, Copy)]
enum Target {
    All,
    One(Statement),
}

fn parse_target(s: &str) -> Result<Target, String> {
    if s == "all" {
        return Ok(Target::All);
    }
    s.parse().map(Target::One).map_err(|_| {
        let ids: Vec<&str> = Statement::ALL.iter().map(|s| s.id()).collect();
        format!("unknown statement {s:?}; expected all or one of {}", ids.join(", "))
    })
}

enum Failure {
    Usage(String),
    Verification,
}

impl From<osvg::Error> for Failure {
    fn from(e: osvg::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.global.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global() {
            eprintln!("osvg: {e}");
            return ExitCode::from(2);
        }
    }
    let start = Instant::now();
    let outcome = run(&cli);
    if cli.global.verbose > 0 {
        eprintln!("elapsed {:.2?}", start.elapsed());
    }
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("osvg: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let format = cli.global.format;
    match cli.command {
        Command::Hilbert { ring, n, invariant } => {
            let poly = if invariant { hilbert_invariants(ring, n)? } else { hilbert_full(n)? };
            match format {
                Format::Text => println!("{poly}"),
                Format::Json => {
                    println!("{}", json!({"ring": ring, "n": n, "invariant": invariant, "coefficients": poly}))
                }
            }
        }
        Command::Straighten { ring, n, ref text } => {
            let x = Element::parse(ring, n, text)?;
            match format {
                Format::Text => println!("{x}"),
                Format::Json => {
                    println!("{}", json!({"ring": ring, "n": n, "input": text, "normal_form": x.to_string()}))
                }
            }
        }
        Command::InvariantBasis { ring, n, degree } => {
            let basis = invariant_subspace(ring, n, degree)?;
            let vectors: Vec<String> = basis.vectors.iter().map(|v| v.to_string()).collect();
            match format {
                Format::Text => {
                    println!("dim {}", vectors.len());
                    for v in &vectors {
                        println!("{v}");
                    }
                }
                Format::Json => println!(
                    "{}",
                    json!({"ring": ring, "n": n, "degree": degree, "dim": vectors.len(), "vectors": vectors})
                ),
            }
        }
        Command::Verify { statement, n, max_n, extended } => {
            let ranks: Vec<usize> = match (n, max_n) {
                (Some(n), _) => vec![n],
                (None, bound) => {
                    let bound = bound.unwrap_or(DEFAULT_MAX_N);
                    if bound < 2 {
                        return Err(Failure::Usage("--max-n must be at least 2".into()));
                    }
                    if bound > UNGATED_MAX_N && !extended {
                        return Err(Failure::Usage(format!("--max-n {bound} requires --extended")));
                    }
                    (2..=bound).collect()
                }
            };
            let statements: Vec<Statement> = match statement {
                Target::All => Statement::ALL.to_vec(),
                Target::One(s) => vec![s],
            };
            let jobs: Vec<(Statement, usize)> =
                statements.iter().flat_map(|&s| ranks.iter().map(move |&n| (s, n))).collect();
            let reports: Vec<VerificationReport> =
                jobs.par_iter().map(|&(s, n)| s.run(n)).collect::<osvg::Result<_>>()?;
            let mut failed = 0;
            for r in &reports {
                match format {
                    Format::Text => println!("{r}"),
                    Format::Json => println!("{}", serde_json::to_string(r).expect("report serializes")),
                }
                failed += usize::from(!r.pass);
            }
            if cli.global.verbose > 0 {
                eprintln!("{} passed, {failed} failed", reports.len() - failed);
            }
            if failed > 0 {
                return Err(Failure::Verification);
            }
        }
    }
    Ok(())
}
