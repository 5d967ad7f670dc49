use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use ncentered::cli::{cmd_classify, cmd_counterexample, cmd_mp, cmd_polar, cmd_verify_theorems, RunReport, DEFAULT_MAX_N};
use ncentered::suites::TrialConfig;
use ncentered::ToleranceConfig;

/// Polar decompositions and n-centered classification of complex matrices.
///
/// Every command prints a JSON-lines report and exits 0 when all checks
/// pass, 1 when some check fails and 2 on invalid input.
#[derive(Debug, Parser)]
#[command(name = "ncentered", version)]
struct Cli {
    #[command(flatten)]
    tolerances: Tolerances,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Tolerances {
    /// Relative singular-value cutoff for numerical rank.
    #[arg(long, global = true, default_value_t = ToleranceConfig::default().rank_rel_tol)]
    rank_tol: f64,

    /// Relative bound for vanishing commutators.
    #[arg(long, global = true, default_value_t = ToleranceConfig::default().zero_rel_tol)]
    zero_tol: f64,

    /// Relative bound for operator equalities.
    #[arg(long, global = true, default_value_t = ToleranceConfig::default().equality_rel_tol)]
    eq_tol: f64,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Polar decomposition T = U|T|; writes <prefix>_u.json and <prefix>_p.json.
    Polar {
        input: PathBuf,
        /// Output prefix (default: the input path without extension).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Moore-Penrose inverse; writes the inverse and checks the Penrose equations.
    Mp {
        input: PathBuf,
        /// Output file (default: <input stem>_mp.json).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Binormality and centered order of a square matrix.
    Classify {
        input: PathBuf,
        #[arg(long, default_value_t = DEFAULT_MAX_N)]
        max_n: usize,
    },
    /// Generate the block weighted shift that is n-centered but not (n+1)-centered.
    Counterexample {
        #[arg(long)]
        n: usize,
        /// Number of 3x3 diagonal blocks (default n + 3).
        #[arg(long)]
        blocks: Option<usize>,
        /// Output file (default: counterexample_n<N>_m<M>.json).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run property suites over seeded random operators and structured fixtures.
    VerifyTheorems {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Largest dimension; each trial draws its dimension from 2..=DIM.
        #[arg(long, default_value_t = 6)]
        dim: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        /// polar, centered-criterion, product-polar, polar-transfer, aluthge,
        /// moore-penrose, counterexample, power-entries, commutation or all.
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

fn run(cli: Cli) -> ncentered::Result<RunReport> {
    let t = &cli.tolerances;
    let cfg = ToleranceConfig::new(t.rank_tol, t.zero_tol, t.eq_tol)?;
    match cli.command {
        Command::Polar { input, out } => cmd_polar(&input, out.as_deref(), &cfg),
        Command::Mp { input, out } => cmd_mp(&input, out.as_deref(), &cfg),
        Command::Classify { input, max_n } => cmd_classify(&input, max_n, &cfg),
        Command::Counterexample { n, blocks, out } => cmd_counterexample(n, blocks, out.as_deref(), &cfg),
        Command::VerifyTheorems { seed, dim, trials, suite } => {
            cmd_verify_theorems(&suite, &TrialConfig::new(seed, dim, trials)?, &cfg)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(report) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(report.to_json_lines().as_bytes()).is_err() {
                return ExitCode::from(2);
            }
            if report.verdict() {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(err) => {
            eprintln!("ncentered: {err}");
            ExitCode::from(2)
        }
    }
}
