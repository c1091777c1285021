use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::figure::FigureId;
use crate::table::Format;

/// Mellin transforms, zeta wavefunctions and hyperbolic Wigner functions on
/// the half-line.
#[derive(Debug, Parser)]
#[command(name = "hyperzeta", version)]
pub struct Cli {
    /// Absolute tolerance for accelerated series and quadrature.
    #[arg(long, global = true, env = "HYPERZETA_TOL", default_value_t = 1e-10)]
    pub tol: f64,

    /// Seed for randomized sweeps.
    #[arg(long, global = true, default_value_t = 42)]
    pub seed: u64,

    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,

    /// Output file; standard output when absent.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Also write a gnuplot script next to the output file.
    #[arg(long, global = true)]
    pub plot: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Hyperbolic-momentum profile <p_eta|psi> of a state.
    Transform(TransformArgs),
    /// Position-space wavefunction samples.
    Wavefn(WavefnArgs),
    /// Potential for which a Lerch state is bound.
    Potential(PotentialArgs),
    /// Zeros of a momentum profile along t = -p_eta.
    Zeros(ZerosArgs),
    /// Wigner function on (eta, p_eta), long form.
    Wigner(WignerArgs),
    /// Semiclassical parametric-oscillator trajectory.
    Dpo(DpoArgs),
    /// Lerch transcendent at one point.
    Lerch(LerchArgs),
    /// Gnuplot script for one of the figures.
    Figure(FigureArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TransformInput {
    /// e^{-x}
    Exp,
    PsiZeta,
    Lerch,
    Sigma,
    /// zeta(1/2 - i p_eta) itself.
    Zeta,
    /// Xi(1/2 - i p_eta, phi).
    Xi,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Fft,
    Closed,
}

#[derive(Debug, Args)]
pub struct LerchParamsArgs {
    #[arg(long, default_value_t = 0.5, allow_hyphen_values = true)]
    pub z: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub z_im: f64,
    #[arg(long, default_value_t = 2.0)]
    pub u: f64,
}

#[derive(Debug, Args)]
pub struct TransformArgs {
    #[arg(long, value_enum)]
    pub input: TransformInput,
    #[arg(long, value_enum, default_value_t = Method::Fft)]
    pub method: Method,
    #[arg(long, default_value_t = 30.0)]
    pub p_max: f64,
    #[arg(long, default_value_t = -40.0, allow_hyphen_values = true)]
    pub eta_min: f64,
    #[arg(long, default_value_t = 40.0, allow_hyphen_values = true)]
    pub eta_max: f64,
    /// Grid size, a power of two.
    #[arg(long, default_value_t = 1 << 16)]
    pub n: usize,
    /// One value, or a comma-separated sweep that adds a leading `phi` column.
    #[arg(long, value_delimiter = ',', default_value = "3")]
    pub phi: Vec<f64>,
    #[command(flatten)]
    pub lerch: LerchParamsArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum WaveState {
    PsiZeta,
    Lerch,
    Sigma,
}

#[derive(Debug, Args)]
pub struct XGridArgs {
    #[arg(long, default_value_t = 0.0)]
    pub x_min: f64,
    #[arg(long, default_value_t = 10.0)]
    pub x_max: f64,
    #[arg(long, default_value_t = 1001)]
    pub n: usize,
}

#[derive(Debug, Args)]
pub struct WavefnArgs {
    #[arg(long, value_enum)]
    pub state: WaveState,
    #[command(flatten)]
    pub grid: XGridArgs,
    /// One value, or a comma-separated sweep that adds a leading `phi` column.
    #[arg(long, value_delimiter = ',', default_value = "3")]
    pub phi: Vec<f64>,
    #[command(flatten)]
    pub lerch: LerchParamsArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PotentialChoice {
    /// The z = -1, u = 1 potential.
    Zeta,
    /// General real z with |z| < 1.
    Vbar,
}

#[derive(Debug, Args)]
pub struct PotentialArgs {
    #[arg(long, value_enum, default_value_t = PotentialChoice::Zeta)]
    pub kind: PotentialChoice,
    #[command(flatten)]
    pub grid: XGridArgs,
    #[command(flatten)]
    pub lerch: LerchParamsArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ZeroState {
    PsiZeta,
    Sigma,
    Zeta,
}

#[derive(Debug, Args)]
pub struct ZerosArgs {
    #[arg(long, value_enum, default_value_t = ZeroState::PsiZeta)]
    pub state: ZeroState,
    #[arg(long, num_args = 2, value_names = ["A", "B"], default_values_t = [10.0, 42.0])]
    pub range: Vec<f64>,
    #[arg(long, default_value_t = 0.02)]
    pub step: f64,
    #[arg(long, default_value_t = 3.0)]
    pub phi: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum WignerState {
    PsiZeta,
    Sigma,
}

#[derive(Debug, Args)]
pub struct WignerArgs {
    #[arg(long, value_enum, default_value_t = WignerState::PsiZeta)]
    pub state: WignerState,
    #[arg(long, default_value_t = 3.0)]
    pub phi: f64,
    #[arg(long, num_args = 2, value_names = ["MIN", "MAX"], allow_hyphen_values = true,
          default_values_t = [-12.0, 8.0])]
    pub eta: Vec<f64>,
    #[arg(long, num_args = 2, value_names = ["MIN", "MAX"], allow_hyphen_values = true,
          default_values_t = [-45.0, 45.0])]
    pub p: Vec<f64>,
    /// Rows and columns of the output grid; a power of two.
    #[arg(long, default_value_t = 1024)]
    pub n: usize,
    /// Write every k-th row and column only.
    #[arg(long, default_value_t = 1)]
    pub every: usize,
}

#[derive(Debug, Args)]
pub struct DpoArgs {
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub xs: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub ps: f64,
    #[arg(long, default_value_t = 5.0)]
    pub tend: f64,
    #[arg(long, default_value_t = 1e-4)]
    pub dt: f64,
    /// Write every k-th sample only.
    #[arg(long, default_value_t = 1)]
    pub stride: usize,
    /// Instead of one trajectory, integrate this many random initial states
    /// in [-2, 2]^2 and report one summary row each.
    #[arg(long)]
    pub random: Option<usize>,
}

#[derive(Debug, Args)]
pub struct LerchArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub z: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub z_im: f64,
    #[arg(long)]
    pub s: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub s_im: f64,
    #[arg(long)]
    pub u: f64,
    /// Compare with the Mellin-integral representation.
    #[arg(long)]
    pub check: bool,
}

#[derive(Debug, Args)]
pub struct FigureArgs {
    #[arg(long, value_enum, ignore_case = true)]
    pub id: FigureId,
    /// Data file written by the matching command.
    #[arg(long)]
    pub data: PathBuf,
    /// Reference curve, a `transform --input zeta` output.
    #[arg(long)]
    pub overlay: Option<PathBuf>,
}
