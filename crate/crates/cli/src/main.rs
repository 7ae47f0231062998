//! Command-line front-end for the unidirectional quantum walk numerics.
//!
//! Subcommands emit CSV data (probability distributions, envelope curves,
//! exit-time distributions) or short reports (route comparison, tail fits).
//! Exit codes: 0 success, 2 configuration error, 3 incompatible options,
//! 4 tolerance breach in `compare`.

mod commands;
mod config;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug)]
pub enum CliError {
    /// Invalid or missing configuration; exit code 2.
    Config(String),
    /// Options that cannot be combined; exit code 3.
    Incompatible(String),
    /// A cross-validation tolerance was breached; exit code 4.
    Tolerance(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Config(_) => 2,
            CliError::Incompatible(_) => 3,
            CliError::Tolerance(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Config(m) | CliError::Incompatible(m) | CliError::Tolerance(m) => m,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Iterate the coin-and-shift recurrence.
    Direct,
    /// Explicit closed-form cosine sums with N = t + 1.
    Dft,
    /// Frequency-domain solution inverted on N = 2^k via the fast transform.
    Fft,
    /// Stationary-phase approximation with envelope columns.
    Approx,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CoinKind {
    Hadamard,
    General,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FitKind {
    /// Fit the oscillation floor (local minima).
    Envelope,
    /// Fit every recorded point.
    Raw,
}

/// Initial coin state; defaults to the symmetric superposition
/// (1/sqrt2, i/sqrt2).
#[derive(Debug, Args)]
pub struct StateArgs {
    /// Real part of the stay amplitude a.
    #[arg(long)]
    a_re: Option<f64>,
    /// Imaginary part of a.
    #[arg(long)]
    a_im: Option<f64>,
    /// Real part of the move amplitude b.
    #[arg(long)]
    b_re: Option<f64>,
    /// Imaginary part of b.
    #[arg(long)]
    b_im: Option<f64>,
    /// Rescale (a, b) to unit norm instead of rejecting it.
    #[arg(long)]
    normalize: bool,
    /// Replace the state with a reproducible pseudo-random one.
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Debug, Args)]
pub struct CoinArgs {
    /// Coin operator; the general coin takes --alpha/--beta/--phi.
    #[arg(long, value_enum)]
    coin: Option<CoinKind>,
    /// Phase alpha of the general coin, radians.
    #[arg(long)]
    alpha: Option<f64>,
    /// Phase beta of the general coin, radians.
    #[arg(long)]
    beta: Option<f64>,
    /// Mixing angle phi of the general coin, radians.
    #[arg(long)]
    phi: Option<f64>,
}

#[derive(Debug, Args)]
pub struct PmfArgs {
    /// Number of time steps.
    #[arg(long)]
    t: Option<usize>,
    /// Evaluation route.
    #[arg(long, value_enum)]
    method: Option<Method>,
    #[command(flatten)]
    state: StateArgs,
    #[command(flatten)]
    coin: CoinArgs,
    /// Write CSV here instead of stdout.
    #[arg(long, short = 'o')]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ExitArgs {
    /// Absorbing threshold site.
    #[arg(long)]
    n0: Option<usize>,
    /// Horizon (largest exit time recorded).
    #[arg(long)]
    tmax: Option<usize>,
    /// Backend for the quantum route: direct, dft or fft.
    #[arg(long, value_enum)]
    method: Option<Method>,
    #[command(flatten)]
    state: StateArgs,
    #[command(flatten)]
    coin: CoinArgs,
    #[arg(long, short = 'o')]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    /// Time step the envelopes are evaluated at.
    #[arg(long)]
    t: Option<usize>,
    /// Number of grid points across the validity interval.
    #[arg(long)]
    points: Option<usize>,
    #[command(flatten)]
    coin: CoinArgs,
    #[arg(long, short = 'o')]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    /// Number of time steps.
    #[arg(long)]
    t: Option<usize>,
    #[command(flatten)]
    state: StateArgs,
    #[command(flatten)]
    coin: CoinArgs,
}

#[derive(Debug, Args)]
pub struct FitexitArgs {
    /// Absorbing threshold site.
    #[arg(long)]
    n0: Option<usize>,
    /// Horizon for the exit distribution.
    #[arg(long)]
    tmax: Option<usize>,
    /// Lower end of the fit window; defaults to 2.2 n0.
    #[arg(long)]
    t_lo: Option<usize>,
    /// Upper end of the fit window; defaults to 6.5 n0 capped at tmax.
    #[arg(long)]
    t_hi: Option<usize>,
    /// Which points enter the fit.
    #[arg(long, value_enum)]
    fit: Option<FitKind>,
    #[command(flatten)]
    state: StateArgs,
    #[command(flatten)]
    coin: CoinArgs,
    #[arg(long, short = 'o')]
    output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Position distribution rho(n, t) with the wave-function components.
    Pmf(PmfArgs),
    /// Exit-time distribution from [0, n0) with classical and asymptotic columns.
    Exit(ExitArgs),
    /// Quasi-uniform envelope curves on a smooth nu grid.
    Bounds(BoundsArgs),
    /// Cross-validate the direct, dft and fft routes; nonzero exit on mismatch.
    Compare(CompareArgs),
    /// Power-law fit of the exit-time decay envelope.
    Fitexit(FitexitArgs),
}

#[derive(Debug, Parser)]
#[command(name = "uniwalk", version, about = "Unidirectional quantum walk numerics")]
struct Cli {
    /// Flat key=value file supplying defaults for any option.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let file = match config::FileConfig::load(cli.config.as_deref()) {
        Ok(f) => f,
        Err(e) => {
            eprintln!("error: {}", e.message());
            return ExitCode::from(e.code());
        }
    };
    let result = match cli.command {
        Command::Pmf(args) => commands::pmf(&args, &file),
        Command::Exit(args) => commands::exit(&args, &file),
        Command::Bounds(args) => commands::bounds(&args, &file),
        Command::Compare(args) => commands::compare(&args, &file),
        Command::Fitexit(args) => commands::fitexit(&args, &file),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}
