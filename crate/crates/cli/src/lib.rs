//! `chsh` command-line front end.
//!
//! Every command is reachable through [`run_command`], which returns the
//! exit code and both output streams instead of touching the process, so
//! the whole interface is testable in-process.
//!
//! Exit codes: 0 success, 1 unreadable or unparseable input file, 2
//! validation failure, 3 optimizer non-convergence, 64 usage error.

mod commands;
mod error;
pub mod format;
pub mod statefile;

use std::path::PathBuf;

use clap::{Parser, Subcommand};

pub use error::CliError;
pub use statefile::{read_state, State, StateFile};

pub const EXIT_USAGE: i32 = 64;

#[derive(Debug, Parser)]
#[command(
    name = "chsh",
    version,
    about = "Two-qubit CHSH analysis: exact maximal violations and a numerical oracle"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Closed-form maximal CHSH value 2√(1+sin²θ) and entanglement entropy E(θ).
    Analytic {
        /// Schmidt angle in radians, within [0, π].
        #[arg(long, value_parser = format::parse_radians, allow_negative_numbers = true)]
        theta: f64,
    },
    /// Schmidt angle and local unitaries of a pure state.
    Schmidt {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Multistart numerical maximization of |⟨𝔹⟩| over all measurement schemes.
    Maximize {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = 32)]
        restarts: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 2000)]
        max_iters: usize,
    },
    /// Measurement scheme attaining the maximal violation of a pure state.
    Optimal {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Horodecki M(ρ), the maximal CHSH value 2√M and the purity.
    Horodecki {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// CSV of bound and entropy over N+1 equally spaced θ in [0, π].
    Sweep {
        #[arg(long)]
        steps: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// CSV of purity and 2√M over random Ginibre density matrices.
    ScanMixed {
        #[arg(long)]
        count: usize,
        #[arg(long)]
        seed: u64,
        /// Fixed Ginibre rank in 1..=4; drawn uniformly per sample when omitted.
        #[arg(long)]
        rank: Option<usize>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Runs the invariant suite and prints one pass/fail line per property.
    Verify {
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        trials: usize,
    },
}

/// Process outcome of one command line.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CommandOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses and runs `argv`, which excludes the program name.
pub fn run_command<S: AsRef<str>>(argv: &[S]) -> CommandOutput {
    let args = std::iter::once("chsh").chain(argv.iter().map(|s| s.as_ref()));
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                CommandOutput {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: rendered,
                }
            } else {
                CommandOutput {
                    code: 0,
                    stdout: rendered,
                    stderr: String::new(),
                }
            };
        }
    };

    let mut stdout = String::new();
    let result = match cli.command {
        Command::Analytic { theta } => commands::analytic(theta, &mut stdout),
        Command::Schmidt { input } => commands::schmidt(&input, &mut stdout),
        Command::Maximize {
            input,
            restarts,
            seed,
            max_iters,
        } => commands::maximize(&input, restarts, seed, max_iters, &mut stdout),
        Command::Optimal { input } => commands::optimal(&input, &mut stdout),
        Command::Horodecki { input } => commands::horodecki(&input, &mut stdout),
        Command::Sweep { steps, out } => commands::sweep(steps, &out, &mut stdout),
        Command::ScanMixed { count, seed, rank, out } => commands::scan_mixed(count, seed, rank, &out, &mut stdout),
        Command::Verify { seed, trials } => commands::verify(seed, trials, &mut stdout),
    };
    match result {
        Ok(()) => CommandOutput {
            code: 0,
            stdout,
            stderr: String::new(),
        },
        Err(e) => CommandOutput {
            code: e.exit_code(),
            stdout,
            stderr: format!("error: {e}\n"),
        },
    }
}
