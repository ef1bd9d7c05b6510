use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

const FORMATTING: &str = "\
Output formatting is fixed so that identical inputs give byte-identical output:
lamination parameters and Poisson's ratios are printed with 4 decimals, angles
in degrees with 1 decimal (finer when a theta grid step is below 0.1°).

Exit status: 0 success, 2 data error (database, non-physical material),
3 usage or domain error (bad arguments, unknown material, point outside Ω).";

#[derive(Debug, Parser)]
#[command(name = "lamina", version, about = "Auxetic design of orthotropic angle-ply laminates", after_help = FORMATTING)]
pub struct Cli {
    /// Material database (CSV or JSON); the bundled catalogue when omitted.
    #[arg(long, global = true, env = "LAMINA_DB")]
    pub db: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,

    /// Override a validation tolerance, e.g. `modulus=0.02` or `ratio=0.002`.
    #[arg(long = "tolerance", global = true, value_name = "KEY=VALUE")]
    pub tolerances: Vec<String>,

    /// Derive the design material from E1, E2, G12, ν12 even when reference
    /// polar moduli are present.
    #[arg(long, global = true)]
    pub from_constants: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Inspect and validate the material database.
    Materials {
        #[command(subcommand)]
        action: MaterialsAction,
    },
    /// Poisson's ratio ν12(θ) over θ ∈ [0°, 90°] at one lamination point.
    Nu12(Nu12Args),
    /// Lamination point with the most negative Poisson's ratio.
    MinNu(Selection),
    /// Angle-ply with the widest auxetic zone.
    MaxZone(Selection),
    /// Boundary of the auxetic region Ξ and its η-minimizing point.
    XiDomain(XiDomainArgs),
    /// Render a CSV produced by `nu12` or `xi-domain` as SVG.
    Plot(PlotArgs),
}

#[derive(Debug, Subcommand)]
pub enum MaterialsAction {
    List,
    Show {
        /// Material id (1-based) or name.
        material: String,
    },
    /// Recompute polar moduli and compare with the reference fields.
    Validate,
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("laminate").required(true).args(["point", "angle_ply"]))]
pub struct Nu12Args {
    /// Material id (1-based) or name.
    pub material: String,

    /// Lamination point.
    #[arg(long, num_args = 2, value_names = ["XI3", "XI1"], allow_negative_numbers = true)]
    pub point: Option<Vec<f64>>,

    /// Angle-ply ±δ, δ in degrees.
    #[arg(long, value_name = "DEG", allow_negative_numbers = true)]
    pub angle_ply: Option<f64>,

    /// Number of θ intervals over [0°, 90°].
    #[arg(long, default_value_t = 180, value_parser = clap::value_parser!(u32).range(1..=1_000_000))]
    pub theta_grid: u32,
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("which").required(true).args(["material", "all"]))]
pub struct Selection {
    /// Material id (1-based) or name.
    pub material: Option<String>,

    /// Every material, in database order.
    #[arg(long)]
    pub all: bool,
}

#[derive(Debug, Args)]
pub struct XiDomainArgs {
    pub material: String,

    /// Lattice nodes per axis for the contour.
    #[arg(long, default_value_t = 201, value_parser = clap::value_parser!(u32).range(3..=20_001))]
    pub resolution: u32,

    /// Also emit the ν12-minimizing and zone-maximizing points.
    #[arg(long)]
    pub markers: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PlotKind {
    PolarNu12,
    DomainMap,
}

#[derive(Debug, Args)]
pub struct PlotArgs {
    /// CSV file written by `nu12` (polar-nu12) or `xi-domain` (domain-map).
    pub input: PathBuf,

    #[arg(long, value_enum)]
    pub kind: PlotKind,

    /// SVG output path; standard output when omitted.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}
