use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "dprt", version, about = "Exact discrete periodic Radon transform toolkit")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Transform a PGM image into a sinogram file.
    Forward(ForwardArgs),
    /// Reconstruct a PGM image from a sinogram file.
    Inverse(InverseArgs),
    /// Run a cycle-accurate architecture model and report its timing.
    Simulate(SimulateArgs),
    /// Print the analytic cycle and resource model of one architecture.
    Cost(CostArgs),
    /// Export the strip-height Pareto front with baseline rows.
    Pareto(ParetoArgs),
    /// Cross-check library, strip engine, simulator and cost model.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SimMethod {
    Sfdprt,
    Fdprt,
    Isfdprt,
    Ifdprt,
}

#[derive(Debug, Args)]
pub struct ForwardArgs {
    #[arg(long = "in", value_name = "PGM")]
    pub input: PathBuf,
    #[arg(long, value_name = "SINOGRAM")]
    pub out: PathBuf,
    /// Bits per pixel; defaults to the narrowest width holding maxval.
    #[arg(long)]
    pub bits: Option<u32>,
    /// Write the binary sinogram form.
    #[arg(long)]
    pub binary: bool,
}

#[derive(Debug, Args)]
pub struct InverseArgs {
    #[arg(long = "in", value_name = "SINOGRAM")]
    pub input: PathBuf,
    #[arg(long, value_name = "PGM")]
    pub out: PathBuf,
    /// Write plain (P2) instead of raw (P5) PGM.
    #[arg(long)]
    pub plain: bool,
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    #[arg(long, value_enum)]
    pub method: SimMethod,
    /// PGM image for forward methods, sinogram for inverse ones.
    #[arg(long = "in", value_name = "PATH")]
    pub input: PathBuf,
    /// Strip height for the scalable methods.
    #[arg(short = 'H', long = "height")]
    pub h: Option<usize>,
    #[arg(long)]
    pub use_mem_in: bool,
    #[arg(long)]
    pub bits: Option<u32>,
    /// Where to write the transform result.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Where to write the report; stdout when omitted.
    #[arg(long)]
    pub report: Option<PathBuf>,
    /// Where to write the per-cycle trace.
    #[arg(long)]
    pub trace: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct CostArgs {
    /// serial, systolic, sfdprt, fdprt, isfdprt or ifdprt.
    #[arg(long)]
    pub method: dprt_cost::Method,
    #[arg(long = "n")]
    pub n: usize,
    #[arg(long, default_value_t = 8)]
    pub bits: u32,
    #[arg(short = 'H', long = "height")]
    pub h: Option<usize>,
    #[arg(long)]
    pub use_mem_in: bool,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ParetoArgs {
    #[arg(long = "n")]
    pub n: usize,
    #[arg(long, default_value_t = 8)]
    pub bits: u32,
    /// Cost the front for the scalable inverse instead of the forward.
    #[arg(long)]
    pub inverse: bool,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum HeightPolicy {
    /// Every height from 2 to N.
    All,
    /// Pareto-front heights plus 2 and N.
    Front,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Comma-separated prime sides.
    #[arg(long = "n", value_delimiter = ',', required = true)]
    pub n: Vec<usize>,
    #[arg(long, default_value_t = 8)]
    pub bits: u32,
    #[arg(long, value_enum, default_value = "front")]
    pub heights: HeightPolicy,
    /// Random images per side.
    #[arg(long, default_value_t = 4)]
    pub images: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Corrupts one simulated coefficient; negative control for tests.
    #[arg(long, hide = true)]
    pub inject_fault: bool,
}
