//! `blochgeo`: plan, trace, and cross-check time-optimal single-qubit
//! evolutions on the Bloch sphere.
//!
//! Three subcommands:
//!
//! * `plan` — construct the time-optimal stationary Hamiltonian between two
//!   states by either construction (maximal energy uncertainty at fixed E,
//!   or minimal arrival time at fixed gap ω) and emit a JSON document with
//!   the matrix, its Pauli components, the rotation axis, and τ_min.
//! * `trace` — integrate the planned evolution with the RK4 oracle, export
//!   trajectory samples as CSV, and report measured geometry (path length,
//!   geodesic efficiency, great-circle residual, first arrival).
//! * `compare` — sweep both constructions over a (|b|, ω) grid and report
//!   the equivalence residuals against their contract thresholds.
//!
//! Exit codes: 0 success, 1 usage error, 2 domain error (machine-readable
//! JSON on stderr with a stable `code` field), 3 I/O error.

#![forbid(unsafe_code)]

mod commands;
mod document;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "blochgeo",
    version,
    about = "Plan, trace, and cross-check time-optimal single-qubit evolutions",
    propagate_version = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct the time-optimal stationary Hamiltonian between two states.
    Plan(PlanArgs),
    /// Integrate the planned evolution and export trajectory samples as CSV.
    Trace(TraceArgs),
    /// Sweep the constructions' equivalence residuals over a (|b|, omega) grid.
    Compare(CompareArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Maximal energy uncertainty at fixed E; traceless generator.
    Mostafazadeh,
    /// Minimal arrival time at fixed eigenvalue gap omega, from |0>.
    Bender,
    /// Run both and report equivalence residuals (budget read as omega).
    Both,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Mostafazadeh => "mostafazadeh",
            Method::Bender => "bender",
            Method::Both => "both",
        }
    }
}

#[derive(clap::Args)]
pub struct PlanArgs {
    /// Initial state as polar angles "theta,phi" (radians unless --degrees).
    #[arg(
        long,
        value_name = "THETA,PHI",
        allow_hyphen_values = true,
        conflicts_with = "from_amplitudes",
        required_unless_present = "from_amplitudes"
    )]
    pub from: Option<String>,
    /// Initial state as amplitudes "re0,im0,re1,im1" (representative kept).
    #[arg(long, value_name = "RE,IM,RE,IM", allow_hyphen_values = true)]
    pub from_amplitudes: Option<String>,
    /// Final state as polar angles "theta,phi" (radians unless --degrees).
    #[arg(
        long,
        value_name = "THETA,PHI",
        allow_hyphen_values = true,
        conflicts_with = "to_amplitudes",
        required_unless_present = "to_amplitudes"
    )]
    pub to: Option<String>,
    /// Final state as amplitudes "re0,im0,re1,im1" (representative kept).
    #[arg(long, value_name = "RE,IM,RE,IM", allow_hyphen_values = true)]
    pub to_amplitudes: Option<String>,
    /// Energy budget: E for mostafazadeh; the gap omega for bender and both.
    #[arg(long, allow_negative_numbers = true)]
    pub energy: f64,
    /// Which construction to run.
    #[arg(long, value_enum, default_value_t = Method::Mostafazadeh)]
    pub method: Method,
    /// Interpret input angles as degrees.
    #[arg(long)]
    pub degrees: bool,
    /// Output time scale: reported times are multiplied by this hbar.
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub hbar: f64,
    /// Conjugate the fixed-gap construction onto an initial state away from |0>.
    #[arg(long)]
    pub rotate_frame: bool,
}

#[derive(clap::Args)]
pub struct TraceArgs {
    /// Initial state as polar angles "theta,phi" (radians unless --degrees).
    #[arg(
        long,
        value_name = "THETA,PHI",
        allow_hyphen_values = true,
        conflicts_with = "from_amplitudes",
        required_unless_present = "from_amplitudes"
    )]
    pub from: Option<String>,
    /// Initial state as amplitudes "re0,im0,re1,im1" (representative kept).
    #[arg(long, value_name = "RE,IM,RE,IM", allow_hyphen_values = true)]
    pub from_amplitudes: Option<String>,
    /// Final state as polar angles "theta,phi" (radians unless --degrees).
    #[arg(
        long,
        value_name = "THETA,PHI",
        allow_hyphen_values = true,
        conflicts_with = "to_amplitudes",
        required_unless_present = "to_amplitudes"
    )]
    pub to: Option<String>,
    /// Final state as amplitudes "re0,im0,re1,im1" (representative kept).
    #[arg(long, value_name = "RE,IM,RE,IM", allow_hyphen_values = true)]
    pub to_amplitudes: Option<String>,
    /// Energy budget: E for mostafazadeh; the gap omega for bender.
    #[arg(long, allow_negative_numbers = true)]
    pub energy: f64,
    /// Which construction supplies the Hamiltonian (one of the two).
    #[arg(long, value_enum, default_value_t = Method::Mostafazadeh)]
    pub method: Method,
    /// Interpret input angles as degrees.
    #[arg(long)]
    pub degrees: bool,
    /// Output time scale: reported times are multiplied by this hbar.
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub hbar: f64,
    /// Conjugate the fixed-gap construction onto an initial state away from |0>.
    #[arg(long)]
    pub rotate_frame: bool,
    /// Number of CSV rows, evenly spaced over [0, tau_min].
    #[arg(long, default_value_t = 101, value_parser = clap::value_parser!(u32).range(2..))]
    pub samples: u32,
    /// RK4 integration steps over [0, tau_min].
    #[arg(
        long,
        default_value_t = 10_000,
        value_parser = clap::value_parser!(u32).range(10..=1_000_000)
    )]
    pub steps: u32,
    /// Write the CSV here (summary JSON then goes to stdout); default is
    /// CSV on stdout with the summary on stderr.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(clap::Args)]
pub struct CompareArgs {
    /// Grid over the target amplitude modulus |b|, as "lo,hi,n".
    #[arg(long, value_name = "LO,HI,N", allow_hyphen_values = true, default_value = "0.1,0.9,9")]
    pub b_grid: String,
    /// Grid over the eigenvalue gap omega, as "lo,hi,n".
    #[arg(long, value_name = "LO,HI,N", allow_hyphen_values = true, default_value = "0.1,10,9")]
    pub omega_grid: String,
}

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // --help and --version land here too; only genuine usage
            // problems exit nonzero.
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp
                | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return code;
        }
    };
    match &cli.command {
        Command::Plan(args) => commands::run_plan(args),
        Command::Trace(args) => commands::run_trace(args),
        Command::Compare(args) => commands::run_compare(args),
    }
}
