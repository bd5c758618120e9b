use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use mubcoh::states::XVariant;
use mubcoh::surface::{FIG1_DEFAULT_GRID, FIG2_DEFAULT_GRID, FIG2_DEFAULT_LEVELS};
use mubcoh::verify::{DEFAULT_GRID_POINTS, DEFAULT_SAMPLES, DEFAULT_SEED, DEFAULT_TOLERANCE};

mod commands;

/// Coherence of quantum states in mutually unbiased bases.
#[derive(Debug, Parser)]
#[command(name = "mubcoh", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate or check bases.
    #[command(subcommand)]
    Basis(BasisCommand),
    /// Construct a state and write it as a matrix file.
    #[command(subcommand)]
    State(StateCommand),
    /// l1-norm and relative-entropy coherence of a state.
    Coherence(CoherenceArgs),
    /// Run a verification claim (or `all`).
    Verify(VerifyArgs),
    /// Level-surface data files.
    #[command(subcommand)]
    Surface(SurfaceCommand),
}

#[derive(Debug, Subcommand)]
enum BasisCommand {
    /// Write a built-in basis set (`pauli`, `dim3` or `amub`).
    Gen {
        set: String,
        /// 1-based index of a single basis; without it the whole set is
        /// written as a JSON array.
        #[arg(long)]
        index: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check that two basis files are mutually unbiased.
    Check {
        first: PathBuf,
        second: PathBuf,
        /// Check the absolute-overlap condition `|<ij|mn>| = 1/D` for bases
        /// of dimension `D^2`.
        #[arg(long, value_name = "D")]
        amub: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tol: f64,
        #[arg(long)]
        renormalize: bool,
    },
}

#[derive(Debug, Subcommand)]
enum StateCommand {
    /// Qubit state `(I + x X + y Y + z Z) / 2`.
    Bloch {
        #[arg(long, allow_negative_numbers = true)]
        x: f64,
        #[arg(long, allow_negative_numbers = true)]
        y: f64,
        #[arg(long, allow_negative_numbers = true)]
        z: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Three-level X-type state.
    X3 {
        #[arg(long, default_value = "x")]
        variant: XVariant,
        #[arg(long, allow_negative_numbers = true)]
        x: f64,
        #[arg(long, allow_negative_numbers = true)]
        y: f64,
        #[arg(long, allow_negative_numbers = true)]
        z: f64,
        #[arg(long)]
        require_physical: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Bell-diagonal two-qubit state with correlations `(c1, c2, c3)`.
    Bell {
        #[arg(long, allow_negative_numbers = true)]
        c1: f64,
        #[arg(long, allow_negative_numbers = true)]
        c2: f64,
        #[arg(long, allow_negative_numbers = true)]
        c3: f64,
        #[arg(long)]
        require_physical: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Werner state with all correlations equal to `4p/3 - 1`.
    Werner {
        #[arg(long)]
        p: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Isotropic state with fidelity `f`.
    Iso {
        #[arg(long)]
        f: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
struct CoherenceArgs {
    /// Matrix file holding the state.
    #[arg(long)]
    state: PathBuf,
    /// Basis file; may be repeated.
    #[arg(long = "basis")]
    bases: Vec<PathBuf>,
    /// Also evaluate every basis of a built-in set.
    #[arg(long)]
    set: Option<String>,
    #[arg(long)]
    renormalize: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Claim id, or `all`.
    claim: String,
    #[arg(long, default_value_t = DEFAULT_SAMPLES)]
    samples: usize,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
    tol: f64,
    /// Grid points for grid-based claims.
    #[arg(long, default_value_t = DEFAULT_GRID_POINTS)]
    grid: usize,
    /// Perturb one closed form and expect every run to fail.
    #[arg(long)]
    self_test: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum SurfaceCommand {
    /// gamma1 coherence over the (c1, c2) square, as CSV.
    Fig1 {
        #[arg(long, default_value_t = FIG1_DEFAULT_GRID)]
        grid: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Level surfaces of the summed coherence, one OBJ file per level.
    Fig2 {
        #[arg(long, default_value_t = FIG2_DEFAULT_GRID)]
        grid: usize,
        #[arg(long, value_delimiter = ',', default_values_t = FIG2_DEFAULT_LEVELS)]
        levels: Vec<f64>,
        /// Restrict to correlation triples that give a valid state.
        #[arg(long)]
        physical: bool,
        /// Also write the sampled field as `field.csv`.
        #[arg(long)]
        field_csv: bool,
        /// Output directory, created if missing.
        #[arg(long)]
        out: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(commands::Status::Success) => ExitCode::SUCCESS,
        Ok(commands::Status::CheckFailed) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
