use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use esfi_core::{Method, MotiveKind, UnitSystem};

#[derive(Debug, Parser)]
#[command(
    name = "esfi",
    version,
    about = "Field ionization rate constants for hydrogenic atoms"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the constants registry.
    Constants(ConstantsArgs),
    /// Evaluate one rate constant.
    Rate(RateArgs),
    /// Evaluate rate constants over a range of fields and write CSV.
    Sweep(SweepArgs),
    /// Find the field that produces a given rate constant.
    Invert(InvertArgs),
    /// Turning points and barrier strength of one motive model.
    Barrier(BarrierArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Units {
    Si,
    Evnm,
    Au,
}

impl From<Units> for UnitSystem {
    fn from(u: Units) -> Self {
        match u {
            Units::Si => UnitSystem::Si,
            Units::Evnm => UnitSystem::Evnm,
            Units::Au => UnitSystem::Au,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Ll,
    ZForm,
    Gaussian,
    JwkbParabolic,
    JwkbCartesian,
    JwkbNaive,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Ll => Method::Ll,
            MethodArg::ZForm => Method::ZForm,
            MethodArg::Gaussian => Method::Gaussian,
            MethodArg::JwkbParabolic => Method::JwkbParabolic,
            MethodArg::JwkbCartesian => Method::JwkbCartesian,
            MethodArg::JwkbNaive => Method::JwkbNaive,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SweepMethod {
    Ll,
    JwkbParabolic,
    JwkbCartesian,
    JwkbNaive,
}

impl From<SweepMethod> for Method {
    fn from(m: SweepMethod) -> Self {
        match m {
            SweepMethod::Ll => Method::Ll,
            SweepMethod::JwkbParabolic => Method::JwkbParabolic,
            SweepMethod::JwkbCartesian => Method::JwkbCartesian,
            SweepMethod::JwkbNaive => Method::JwkbNaive,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModelArg {
    JwkbParabolic,
    JwkbCartesian,
    JwkbNaive,
}

impl From<ModelArg> for MotiveKind {
    fn from(m: ModelArg) -> Self {
        match m {
            ModelArg::JwkbParabolic => MotiveKind::TransformedParabolic,
            ModelArg::JwkbCartesian => MotiveKind::TransformedCartesian,
            ModelArg::JwkbNaive => MotiveKind::Naive1D,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Spacing {
    Linear,
    Log,
}

#[derive(Debug, Clone, Args)]
pub struct AtomArgs {
    /// Nuclear charge number.
    #[arg(
        long = "Z",
        visible_alias = "z",
        default_value_t = 1.0,
        allow_negative_numbers = true
    )]
    pub z: f64,

    /// Ionization energy in eV, replacing Z²·I_H.
    #[arg(long, allow_negative_numbers = true)]
    pub ionization_energy: Option<f64>,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Write to this file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct ConstantsArgs {
    #[arg(long, value_enum, default_value_t = Units::Evnm)]
    pub units: Units,

    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct RateArgs {
    #[command(flatten)]
    pub atom: AtomArgs,

    /// Field strength in the units selected by --units (V/nm, V/m or atomic units).
    #[arg(long, allow_negative_numbers = true)]
    pub field: f64,

    #[arg(long, value_enum, default_value_t = Units::Evnm)]
    pub units: Units,

    #[arg(long, visible_alias = "model", value_enum, default_value_t = MethodArg::Ll)]
    pub method: MethodArg,

    /// Evaluate at or above the deep-tunnelling guard (also ESFI_GUARD_OVERRIDE=1).
    #[arg(long)]
    pub extrapolate: bool,

    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub atom: AtomArgs,

    #[arg(long, allow_negative_numbers = true)]
    pub f_min: f64,

    #[arg(long, allow_negative_numbers = true)]
    pub f_max: f64,

    #[arg(long, default_value_t = 50, allow_negative_numbers = true)]
    pub points: i64,

    #[arg(long, value_enum, default_value_t = Spacing::Log)]
    pub spacing: Spacing,

    #[arg(long, value_enum, value_delimiter = ',', default_value = "ll")]
    pub methods: Vec<SweepMethod>,

    #[arg(long, value_enum, default_value_t = Units::Evnm)]
    pub units: Units,

    #[arg(long)]
    pub extrapolate: bool,

    /// Output CSV file (standard output if omitted).
    #[arg(long, visible_alias = "out")]
    pub csv: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct InvertArgs {
    #[command(flatten)]
    pub atom: AtomArgs,

    /// Target rate constant, in inverse time of --units (s⁻¹ unless au).
    #[arg(long, allow_negative_numbers = true)]
    pub target: f64,

    #[arg(long, visible_alias = "model", value_enum, default_value_t = MethodArg::Ll)]
    pub method: MethodArg,

    /// Lower end of the field bracket.
    #[arg(long, allow_negative_numbers = true)]
    pub f_lo: Option<f64>,

    /// Upper end of the field bracket.
    #[arg(long, allow_negative_numbers = true)]
    pub f_hi: Option<f64>,

    #[arg(long, value_enum, default_value_t = Units::Evnm)]
    pub units: Units,

    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct BarrierArgs {
    #[command(flatten)]
    pub atom: AtomArgs,

    #[arg(long, allow_negative_numbers = true)]
    pub field: f64,

    #[arg(long, visible_alias = "method", value_enum, default_value_t = ModelArg::JwkbParabolic)]
    pub model: ModelArg,

    #[arg(long, value_enum, default_value_t = Units::Evnm)]
    pub units: Units,

    /// Use P_t = 1 instead of the effective pre-factor.
    #[arg(long)]
    pub simple: bool,

    #[command(flatten)]
    pub output: OutputArgs,
}
