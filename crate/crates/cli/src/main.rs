//! `pants`: verification pipelines with JSON reports on stdout.
//!
//! Exit status is 0 when every check in the report passes, 1 when one fails and
//! 2 on usage or precondition errors.

mod commands;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};

use crate::commands::MinimalModelArgs;
use crate::report::{Report, UsageError};

#[derive(Parser)]
#[command(name = "pants", version, about = "Exact minimal-model and combinatorics checks for z1⋯z_{n+2}")]
struct Cli {
    /// Worker threads for parallel sections (default: all cores)
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Tolerance for the floating-point geometric checks
    #[arg(long, global = true, default_value_t = 1e-9)]
    tolerance: f64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// δ² = W, d² = 0 and cohomology of the exterior pieces
    MfCheck {
        #[arg(long)]
        n: usize,
    },
    /// μ^k tables with Stasheff, grading, normalization and obstruction-class checks
    MinimalModel {
        #[arg(long)]
        n: usize,
        /// Largest arity computed (default 2n+1)
        #[arg(long)]
        max_arity: Option<usize>,
        /// Coefficients a_j of δ, summing to 1 (default 1/(n+2) each)
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        a_weights: Option<Vec<String>>,
        /// 1-based auxiliary index k(j) ≠ j for each ∂̄_j
        #[arg(long, value_delimiter = ',')]
        dbar_aux: Option<Vec<usize>>,
    },
    /// Dimension of the invariant HKR piece in total degree r and internal degree t
    Hkr {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        r: i64,
        #[arg(long, allow_hyphen_values = true)]
        t: i64,
    },
    /// Cells, Euler characteristic and homology of the zonotope boundary
    Zonotope {
        #[arg(long)]
        n: usize,
    },
    /// Classify an angle vector against the open zonotope π·Z_n
    Coamoeba {
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        theta: Vec<f64>,
    },
    /// Critical points of the Morse function on the sphere
    Morse {
        #[arg(long)]
        n: usize,
    },
    /// Degree of a pearl with output label K0 and input labels (comma-separated, 1-based)
    PearlDegree {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "")]
        k0: String,
        /// One flag per input label; an empty string is ∅
        #[arg(long = "inputs", num_args = 1..)]
        inputs: Vec<String>,
    },
    /// Check pearl-tree labels from a JSON file
    ValidateLabels {
        #[arg(long)]
        file: PathBuf,
    },
    /// Rational normal curve through the vertices p_{j} and a target p_φ
    Rnc {
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        pphi: Vec<String>,
    },
    /// Opposite A∞ structure of a model file
    Opposite {
        #[arg(long)]
        model: PathBuf,
    },
    /// Smash product of a model file with trivial, sum (ℤ_{n+2}) or full (ℤ_{n+2}^{n+1})
    Smash {
        #[arg(long)]
        model: PathBuf,
        #[arg(long)]
        group: String,
    },
}

fn run(cli: &Cli) -> Result<Report, UsageError> {
    let tol = cli.tolerance;
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(UsageError("tolerance must be positive".into()));
    }
    match &cli.command {
        Command::MfCheck { n } => commands::mf_check(*n),
        Command::MinimalModel { n, max_arity, a_weights, dbar_aux } => commands::minimal_model(MinimalModelArgs {
            n: *n,
            max_arity: *max_arity,
            a_weights: a_weights.clone(),
            dbar_aux: dbar_aux.clone(),
        }),
        Command::Hkr { n, r, t } => commands::hkr(*n, *r, *t),
        Command::Zonotope { n } => commands::zonotope(*n),
        Command::Coamoeba { theta } => commands::coamoeba(theta, tol),
        Command::Morse { n } => commands::morse(*n, tol),
        Command::PearlDegree { n, k0, inputs } => commands::pearl(*n, k0, inputs),
        Command::ValidateLabels { file } => commands::validate_labels(file),
        Command::Rnc { n, pphi } => commands::rnc(*n, pphi, tol),
        Command::Opposite { model } => commands::opposite_cmd(model),
        Command::Smash { model, group } => commands::smash_cmd(model, group),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let start = Instant::now();
    match run(&cli) {
        Ok(rep) => {
            let json = rep.to_json(start.elapsed());
            let text = serde_json::to_string_pretty(&json).expect("reports serialize");
            // a closed pipe downstream is not an error of ours
            let _ = writeln!(std::io::stdout().lock(), "{text}");
            eprintln!("{}", rep.summary());
            if rep.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
