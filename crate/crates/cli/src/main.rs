use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use hardy_cli::commands::{cmd_certify, cmd_gen_state, cmd_lhv_check, cmd_noise_threshold};
use hardy_cli::generate::StateSpec;
use hardy_cli::report::to_json;
use hardy_cli::CliError;
use hardy_core::{DEFAULT_DELTA, DEFAULT_LHV_TOL};

/// Hardy-type nonlocality certification for bipartite mixed states.
#[derive(Parser)]
#[command(name = "hardy", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the 6ε < a criterion for a state against a Hardy candidate.
    Certify {
        #[arg(long)]
        state: PathBuf,
        /// Pure candidate state; defaults to the top eigenvector of the state.
        #[arg(long)]
        candidate: Option<PathBuf>,
        /// Schmidt weights closer than this count as equal.
        #[arg(long, default_value_t = DEFAULT_DELTA)]
        delta: f64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Critical weight of a pure Hardy state mixed with a given noise state.
    NoiseThreshold {
        /// Pure Hardy state.
        #[arg(long)]
        state: PathBuf,
        #[arg(long)]
        noise: PathBuf,
        #[arg(long, default_value_t = DEFAULT_DELTA)]
        delta: f64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Decide by linear programming whether a local hidden-variable model
    /// reproduces the state's statistics on the candidate's Hardy observables.
    LhvCheck {
        #[arg(long)]
        state: PathBuf,
        #[arg(long)]
        candidate: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_DELTA)]
        delta: f64,
        /// Residual tolerance of the feasibility LP.
        #[arg(long, default_value_t = DEFAULT_LHV_TOL)]
        tol: f64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Write a fixture state file.
    GenState {
        #[command(subcommand)]
        kind: GenKind,
        #[arg(long, global = true)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum GenKind {
    /// √p1_sq |00⟩ + √(1 − p1_sq) |11⟩.
    Hardy {
        #[arg(long)]
        p1_sq: f64,
        #[arg(long, default_value_t = 2)]
        d1: usize,
        #[arg(long, default_value_t = 2)]
        d2: usize,
    },
    /// Maximally entangled state on min(d1, d2) levels.
    Bell {
        #[arg(long, default_value_t = 2)]
        d1: usize,
        #[arg(long, default_value_t = 2)]
        d2: usize,
    },
    /// |00⟩.
    Product {
        #[arg(long, default_value_t = 2)]
        d1: usize,
        #[arg(long, default_value_t = 2)]
        d2: usize,
    },
    /// p |ψ⟩⟨ψ| + (1 − p) I/(d1 d2) for the Hardy state ψ.
    WhiteNoiseMix {
        #[arg(long)]
        p1_sq: f64,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 2)]
        d1: usize,
        #[arg(long, default_value_t = 2)]
        d2: usize,
    },
}

fn emit(text: &str, output: Option<&Path>) -> Result<(), CliError> {
    match output {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Write {
            path: path.to_owned(),
            source,
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Certify {
            state,
            candidate,
            delta,
            output,
        } => {
            let report = cmd_certify(&state, candidate.as_deref(), delta)?;
            emit(&to_json(&report), output.as_deref())
        }
        Command::NoiseThreshold {
            state,
            noise,
            delta,
            output,
        } => {
            let report = cmd_noise_threshold(&state, &noise, delta)?;
            emit(&to_json(&report), output.as_deref())
        }
        Command::LhvCheck {
            state,
            candidate,
            delta,
            tol,
            output,
        } => {
            let report = cmd_lhv_check(&state, candidate.as_deref(), delta, tol)?;
            emit(&to_json(&report), output.as_deref())
        }
        Command::GenState { kind, output } => {
            let spec = match kind {
                GenKind::Hardy { p1_sq, d1, d2 } => StateSpec::Hardy { p1_sq, d1, d2 },
                GenKind::Bell { d1, d2 } => StateSpec::Bell { d1, d2 },
                GenKind::Product { d1, d2 } => StateSpec::Product { d1, d2 },
                GenKind::WhiteNoiseMix { p1_sq, p, d1, d2 } => {
                    StateSpec::WhiteNoiseMix { p1_sq, p, d1, d2 }
                }
            };
            emit(&cmd_gen_state(spec)?.to_json(), output.as_deref())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
