use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;

use crate::model::Sign;

#[derive(Debug, Parser)]
#[command(
    name = "wolfes4",
    version,
    about = "Closed-form spectra and eigenfunctions of the four-body Wolfes-type model",
    after_help = "Defaults for the model flags can be put in a TOML file named by WOLFES4_CONFIG.\n\
                  Exit codes: 0 ok, 1 verification failure, 2 invalid domain or arguments."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Energy levels with multiplicities and quantum numbers.
    Spectrum(ModelArgs),
    /// Wavefunction, factors and separation constants at one point.
    Eval(EvalArgs),
    /// Domain report for the couplings and branch.
    Validate(ModelArgs),
    /// Finite-difference and quadrature checks of the closed forms.
    Verify(VerifyArgs),
    /// Unnormalized hyperspherical harmonic in D dimensions.
    Harmonic(HarmonicArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BranchArg {
    Regular,
    Irregular,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Angle {
    Alpha,
    Theta,
    /// The `2 phi` parity of the innermost factor.
    Phi,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    #[default]
    Table,
}

fn parse_sign(s: &str) -> Result<Sign, String> {
    match s {
        "+" | "+1" | "1" | "plus" => Ok(Sign::Plus),
        "-" | "-1" | "minus" => Ok(Sign::Minus),
        _ => Err(format!("expected +1 or -1, got {s:?}")),
    }
}

/// Flags shared by every model-based subcommand.
#[derive(Debug, Clone, Default, Args)]
pub struct ModelArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub mu: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub beta: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub omega: Option<f64>,
    /// Starting sign pattern; irregular flips `a`.
    #[arg(long, value_enum)]
    pub branch: Option<BranchArg>,
    #[arg(long, value_parser = parse_sign, allow_hyphen_values = true)]
    pub a_sign: Option<Sign>,
    #[arg(long, value_parser = parse_sign, allow_hyphen_values = true)]
    pub c_sign: Option<Sign>,
    #[arg(long, value_parser = parse_sign, allow_hyphen_values = true)]
    pub d_sign: Option<Sign>,
    /// Symmetric continuation for an angle (repeatable).
    #[arg(long, value_enum)]
    pub sym: Vec<Angle>,
    /// Antisymmetric continuation for an angle (repeatable).
    #[arg(long, value_enum)]
    pub antisym: Vec<Angle>,
    /// Switch to the D-dimensional model.
    #[arg(long)]
    pub dim: Option<u32>,
    /// Channel momenta lR,ls,lt,lu (D-dimensional model only).
    #[arg(long, value_delimiter = ',')]
    pub channels: Option<Vec<u32>>,
    /// Largest l + m + n listed by `spectrum`.
    #[arg(long)]
    pub max_sum: Option<u32>,
    /// Largest radial quantum number listed by `spectrum`.
    #[arg(long)]
    pub max_k: Option<u32>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Level-merging tolerance for `spectrum`; every check tolerance for `verify`.
    #[arg(long)]
    pub tol: Option<f64>,
    /// Gauss rule order for normalization integrals.
    #[arg(long)]
    pub quad_order: Option<usize>,
}

#[derive(Debug, Clone, Args)]
#[command(group = clap::ArgGroup::new("where").required(true).args(["point", "hyper"]))]
pub struct EvalArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    /// Cartesian positions x1,x2,x3,x4.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub point: Option<Vec<f64>>,
    /// Hyperspherical point r,alpha,theta,phi.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub hyper: Option<Vec<f64>>,
    /// Quantum numbers k,l,m,n.
    #[arg(
        long,
        value_delimiter = ',',
        allow_hyphen_values = true,
        default_value = "0,0,0,0"
    )]
    pub qn: Vec<u32>,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    /// Largest value of each quantum number covered by the checks.
    #[arg(long, default_value_t = 2)]
    pub max_qn: u32,
    /// Coarse finite-difference grid (the fine one is twice as large).
    #[arg(long, default_value_t = 2000)]
    pub grid: usize,
}

#[derive(Debug, Clone, Args)]
pub struct HarmonicArgs {
    #[arg(long)]
    pub dim: u32,
    /// Total angular momentum.
    #[arg(long)]
    pub l: u32,
    /// Multi-index m_1 >= ... >= m_{D-2}.
    #[arg(long, value_delimiter = ',')]
    pub m: Vec<u32>,
    /// Polar angles theta_1..theta_{D-2}.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub thetas: Vec<f64>,
    #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
    pub phi: f64,
    /// Use exp(-i m phi).
    #[arg(long)]
    pub conjugate: bool,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn command_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn negative_values_parse() {
        let cli = Cli::try_parse_from(["wolfes4", "spectrum", "--beta", "-44", "--a-sign", "-1"])
            .unwrap();
        let Command::Spectrum(m) = cli.command else {
            panic!()
        };
        assert_eq!(m.beta, Some(-44.0));
        assert_eq!(m.a_sign, Some(Sign::Minus));
    }

    #[test]
    fn negative_quantum_number_is_rejected() {
        let r = Cli::try_parse_from(["wolfes4", "eval", "--hyper", "1,0,0,0", "--qn", "0,-1,0,0"]);
        assert!(r.is_err());
    }
}
