mod commands;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde::Serialize;
use sha2::{Digest, Sha256};

use commands::{Failure, Outcome};

#[derive(Parser, Debug)]
#[command(name = "repring", version, about = "Representation rings of finite groups as lambda-rings")]
struct Cli {
    /// Write the JSON report to this path (`-` for stdout).
    #[arg(long, global = true)]
    json: Option<PathBuf>,
    /// Human-readable output (the default when --json is absent).
    #[arg(long, global = true)]
    pretty: bool,
    /// Seed for the randomized eigenspace splitting.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Largest group order accepted from files or permutation generators.
    #[arg(long, global = true, default_value_t = repring::groups::DEFAULT_ORDER_LIMIT)]
    limit_order: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Character table.
    Chartable { group: String },
    /// Matrix of the Adams operation in the irreducible basis.
    Adams {
        group: String,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
    },
    /// λⁿ of one irreducible.
    Lambda {
        group: String,
        #[arg(long)]
        irr: usize,
        #[arg(long)]
        n: usize,
    },
    /// Frobenius–Schur indicators of every irreducible.
    Fs {
        group: String,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
    },
    /// Group order recovered from the representation ring.
    RingOrder { group: String },
    /// Group exponent recovered from the Adams operations.
    RingExponent { group: String },
    /// Based ring isomorphisms between two representation rings.
    RingIso {
        group1: String,
        group2: String,
        #[arg(long, allow_hyphen_values = true)]
        check_adams: Option<i64>,
    },
    /// Builds a twisted group from a twist spec file.
    Twist {
        spec: PathBuf,
        #[arg(long)]
        emit_group: Option<PathBuf>,
    },
    /// Checks that every odd Adams operation agrees on G and its twist.
    VerifyOddAdams {
        spec: PathBuf,
        #[arg(long)]
        kmax: Option<i64>,
    },
    /// Compares one Adams operation on G and its twist.
    CompareAdams {
        spec: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
    },
    /// Built-in worked examples.
    Example {
        #[arg(value_parser = ["d8", "klein"])]
        name: String,
    },
    /// Runs the full verification suite.
    Selftest,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Chartable { .. } => "chartable",
            Command::Adams { .. } => "adams",
            Command::Lambda { .. } => "lambda",
            Command::Fs { .. } => "fs",
            Command::RingOrder { .. } => "ring-order",
            Command::RingExponent { .. } => "ring-exponent",
            Command::RingIso { .. } => "ring-iso",
            Command::Twist { .. } => "twist",
            Command::VerifyOddAdams { .. } => "verify-odd-adams",
            Command::CompareAdams { .. } => "compare-adams",
            Command::Example { .. } => "example",
            Command::Selftest => "selftest",
        }
    }

    fn input_files(&self) -> Vec<&std::path::Path> {
        match self {
            Command::Twist { spec, .. } | Command::VerifyOddAdams { spec, .. } | Command::CompareAdams { spec, .. } => {
                vec![spec.as_path()]
            }
            Command::Chartable { group }
            | Command::Adams { group, .. }
            | Command::Lambda { group, .. }
            | Command::Fs { group, .. }
            | Command::RingOrder { group }
            | Command::RingExponent { group } => vec![std::path::Path::new(group.as_str())],
            Command::RingIso { group1, group2, .. } => {
                vec![std::path::Path::new(group1.as_str()), std::path::Path::new(group2.as_str())]
            }
            _ => Vec::new(),
        }
    }
}

#[derive(Serialize)]
struct Report {
    command: &'static str,
    inputs_digest: String,
    verified: bool,
    results: serde_json::Value,
}

/// SHA-256 over the parsed arguments and the bytes of every input file.
fn digest(cli: &Cli) -> String {
    let mut h = Sha256::new();
    h.update(format!("{:?}|seed={}|limit={}", cli.command, cli.seed, cli.limit_order).as_bytes());
    for path in cli.command.input_files() {
        if let Ok(bytes) = std::fs::read(path) {
            h.update(&bytes);
        }
    }
    hex::encode(h.finalize())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let outcome = commands::dispatch(&cli);
    let elapsed = start.elapsed();
    match outcome {
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Ok(Outcome { results, pretty, verified }) => {
            let report = Report {
                command: cli.command.name(),
                inputs_digest: digest(&cli),
                verified,
                results,
            };
            match &cli.json {
                Some(path) => {
                    let text = serde_json::to_string_pretty(&report).expect("report serializes") + "\n";
                    if path.as_os_str() == "-" {
                        print!("{text}");
                    } else if let Err(e) = std::fs::write(path, text) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                    if cli.pretty {
                        print!("{pretty}");
                    }
                }
                None => print!("{pretty}"),
            }
            eprintln!("{} finished in {:.2?}", report.command, elapsed);
            if verified {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
    }
}
