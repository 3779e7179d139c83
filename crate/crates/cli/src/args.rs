//! Command line definitions.

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

#[derive(Parser, Debug)]
#[command(
    name = "phonon-casimir",
    version,
    about = "Phonon-mediated Casimir energies between planar elastic substrates",
    after_help = "Exit codes: 0 success, 1 numerical failure, 2 usage/validation error."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List, inspect or validate material records
    Materials(MaterialsArgs),
    /// Evaluate every energy and closed form at one (d, T)
    Point(PointArgs),
    /// Sweep separations (and optionally temperatures), emitting a table
    Sweep(SweepArgs),
}

#[derive(Args, Debug)]
pub struct MaterialsArgs {
    #[command(subcommand)]
    pub action: MaterialsAction,
}

#[derive(Subcommand, Debug)]
pub enum MaterialsAction {
    /// Print the material database with derived sound speeds
    List {
        #[arg(long)]
        materials_file: Option<PathBuf>,
    },
    /// Print one material record in full
    Show {
        name: String,
        #[arg(long)]
        materials_file: Option<PathBuf>,
    },
    /// Check a materials file against the schema and physical invariants
    Validate { file: PathBuf },
}

#[derive(Clone, Copy, Debug, ValueEnum, PartialEq, Eq)]
pub enum SpeedsArg {
    /// c_l = sqrt((lambda + 2 mu)/rho)
    Lame,
    /// c_l = sqrt(C11/rho)
    C11,
}

impl From<SpeedsArg> for phonon_casimir::materials::SpeedConvention {
    fn from(v: SpeedsArg) -> Self {
        match v {
            SpeedsArg::Lame => phonon_casimir::materials::SpeedConvention::Lame,
            SpeedsArg::C11 => phonon_casimir::materials::SpeedConvention::C11,
        }
    }
}

#[derive(Args, Debug)]
pub struct CommonStack {
    /// Plate material name (both substrates)
    #[arg(long)]
    pub plate: String,
    /// Gap material name
    #[arg(long)]
    pub gap: String,
    /// Temperature, K
    #[arg(long, default_value_t = 300.0)]
    pub temp: f64,
    /// Longitudinal speed convention
    #[arg(long, value_enum, default_value_t = SpeedsArg::C11)]
    pub speeds: SpeedsArg,
    /// Extra material records merged over the built-in table
    #[arg(long)]
    pub materials_file: Option<PathBuf>,
    /// Output destination ("-" for stdout)
    #[arg(long, default_value = "-")]
    pub output: String,
}

#[derive(Args, Debug)]
pub struct PointArgs {
    #[command(flatten)]
    pub stack: CommonStack,
    /// Separation, m
    #[arg(long)]
    pub d: f64,
    /// Cross-validate numeric energies against the closed forms and report
    /// relative deviations
    #[arg(long)]
    pub check: bool,
}

#[derive(Args, Debug)]
pub struct SweepArgs {
    #[command(flatten)]
    pub stack: CommonStack,
    /// Single separation, m (alternative to --d-min/--d-max)
    #[arg(long, conflicts_with_all = ["d_min", "d_max", "points"])]
    pub d: Option<f64>,
    /// Smallest separation, m
    #[arg(long, requires = "d_max", requires = "points")]
    pub d_min: Option<f64>,
    /// Largest separation, m
    #[arg(long, requires = "d_min")]
    pub d_max: Option<f64>,
    /// Number of separation grid points
    #[arg(long)]
    pub points: Option<u32>,
    /// Logarithmic separation grid
    #[arg(long)]
    pub log: bool,
    /// Optional temperature range upper end, K (grid over [temp, temp-max])
    #[arg(long)]
    pub temp_max: Option<f64>,
    /// Number of temperature grid points when --temp-max is given
    #[arg(long, default_value_t = 2)]
    pub temp_points: u32,
    /// Comma-separated quantities to emit, in column order
    #[arg(long, default_value = "e_m,e_ln,e_total")]
    pub quantities: String,
    /// Worker threads for row evaluation
    #[arg(long, default_value_t = 1)]
    pub jobs: u32,
    /// Bulk Young's modulus for the `young` column, Pa
    /// (default: the gap material's isotropic value)
    #[arg(long)]
    pub young_bulk: Option<f64>,
}
