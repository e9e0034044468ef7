use serde::{Deserialize, Serialize};
use std::path::Path;

use super::args::{Angle, BranchArg, Format, ModelArgs};
use super::CliError;
use crate::model::{Branch, Channels, Couplings, Model, Parity, Sign};
use crate::quadrature::{DEFAULT_ANGULAR_ORDER, MAX_ORDER};

/// Environment variable naming a TOML file with default flag values.
pub const CONFIG_ENV: &str = "WOLFES4_CONFIG";

pub const DEFAULT_MAX_SUM: u32 = 2;
pub const DEFAULT_MAX_K: u32 = 1;

/// Contents of the defaults file. Keys mirror the long flags with `_`
/// instead of `-`; parities use `s_alpha`, `s_theta`, `s_2phi`.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct FileConfig {
    pub lambda: Option<f64>,
    pub mu: Option<f64>,
    pub beta: Option<f64>,
    pub omega: Option<f64>,
    pub branch: Option<BranchArg>,
    pub a_sign: Option<Sign>,
    pub c_sign: Option<Sign>,
    pub d_sign: Option<Sign>,
    pub s_alpha: Option<Parity>,
    pub s_theta: Option<Parity>,
    pub s_2phi: Option<Parity>,
    pub dim: Option<u32>,
    pub channels: Option<[u32; 4]>,
    pub max_sum: Option<u32>,
    pub max_k: Option<u32>,
    pub format: Option<Format>,
    pub tol: Option<f64>,
    pub quad_order: Option<usize>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?;
        toml::from_str(&text).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "mode", rename_all = "lowercase")]
pub enum Mode {
    Line,
    Ddim { dim: u32, channels: [u32; 4] },
}

/// Fully resolved settings: command-line flag, then defaults file, then
/// built-in default.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub couplings: Couplings,
    pub branch: Branch,
    pub mode: Mode,
    pub max_sum: u32,
    pub max_k: u32,
    pub format: Format,
    pub tol: Option<f64>,
    pub quad_order: usize,
}

impl RunConfig {
    pub fn resolve(args: &ModelArgs, file: &FileConfig) -> Result<Self, CliError> {
        let d = Couplings::default();
        let couplings = Couplings::new(
            args.lambda.or(file.lambda).unwrap_or(d.lambda),
            args.mu.or(file.mu).unwrap_or(d.mu),
            args.beta.or(file.beta).unwrap_or(d.beta),
            args.omega.or(file.omega).unwrap_or(d.omega),
        );

        let mut branch = match args.branch.or(file.branch).unwrap_or(BranchArg::Regular) {
            BranchArg::Regular => Branch::regular(),
            BranchArg::Irregular => Branch::irregular(),
        };
        branch.a_sign = args.a_sign.or(file.a_sign).unwrap_or(branch.a_sign);
        branch.c_sign = args.c_sign.or(file.c_sign).unwrap_or(branch.c_sign);
        branch.d_sign = args.d_sign.or(file.d_sign).unwrap_or(branch.d_sign);
        branch.s_alpha = file.s_alpha.unwrap_or_default();
        branch.s_theta = file.s_theta.unwrap_or_default();
        branch.s_2phi = file.s_2phi.unwrap_or_default();
        for angle in &args.sym {
            if args.antisym.contains(angle) {
                return Err(CliError::Usage(format!(
                    "{angle:?} given both --sym and --antisym"
                )));
            }
        }
        let flags = [
            (&args.sym, Parity::Symmetric),
            (&args.antisym, Parity::Antisymmetric),
        ];
        for (angles, parity) in flags {
            for angle in angles {
                match angle {
                    Angle::Alpha => branch.s_alpha = parity,
                    Angle::Theta => branch.s_theta = parity,
                    Angle::Phi => branch.s_2phi = parity,
                }
            }
        }

        let channels = match (&args.channels, file.channels) {
            (Some(v), _) => Some(<[u32; 4]>::try_from(v.as_slice()).map_err(|_| {
                CliError::Usage(format!("--channels needs 4 values, got {}", v.len()))
            })?),
            (None, c) => c,
        };
        let mode = match (args.dim.or(file.dim), channels) {
            (Some(dim), ch) => {
                if !branch.is_regular() {
                    return Err(CliError::Usage(
                        "sign flips are only available for the line model".into(),
                    ));
                }
                Mode::Ddim {
                    dim,
                    channels: ch.unwrap_or_default(),
                }
            }
            (None, Some(_)) => return Err(CliError::Usage("--channels requires --dim".into())),
            (None, None) => Mode::Line,
        };

        let quad_order = args
            .quad_order
            .or(file.quad_order)
            .unwrap_or(DEFAULT_ANGULAR_ORDER);
        if !(2..=MAX_ORDER).contains(&quad_order) {
            return Err(CliError::Usage(format!(
                "--quad-order must lie in 2..={MAX_ORDER}, got {quad_order}"
            )));
        }
        let tol = args.tol.or(file.tol);
        if let Some(t) = tol {
            if !(t > 0.0 && t.is_finite()) {
                return Err(CliError::Usage(format!("--tol must be positive, got {t}")));
            }
        }

        Ok(Self {
            couplings,
            branch,
            mode,
            max_sum: args.max_sum.or(file.max_sum).unwrap_or(DEFAULT_MAX_SUM),
            max_k: args.max_k.or(file.max_k).unwrap_or(DEFAULT_MAX_K),
            format: args.format.or(file.format).unwrap_or_default(),
            tol,
            quad_order,
        })
    }

    /// Validates the parameters and builds the model.
    pub fn model(&self) -> crate::Result<Model> {
        match self.mode {
            Mode::Line => Model::line(self.couplings, self.branch),
            Mode::Ddim {
                dim,
                channels: [r, s, t, u],
            } => Model::ddim(self.couplings, dim, Channels::new(r, s, t, u)),
        }
    }

    pub fn params(&self) -> Params {
        Params {
            lambda: self.couplings.lambda,
            mu: self.couplings.mu,
            beta: self.couplings.beta,
            omega: self.couplings.omega,
            mode: self.mode,
            branch: self.branch,
        }
    }
}

/// Echo of the model parameters in every JSON output.
#[derive(Debug, Clone, Serialize)]
pub struct Params {
    pub lambda: f64,
    pub mu: f64,
    pub beta: f64,
    pub omega: f64,
    #[serde(flatten)]
    pub mode: Mode,
    pub branch: Branch,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flags_override_file_over_defaults() {
        let file: FileConfig = toml::from_str("lambda = 3.0\nmu = 1.0\nformat = \"json\"").unwrap();
        let args = ModelArgs {
            mu: Some(0.25),
            ..Default::default()
        };
        let cfg = RunConfig::resolve(&args, &file).unwrap();
        assert_eq!(cfg.couplings, Couplings::new(3.0, 0.25, 0.0, 1.0));
        assert_eq!(cfg.format, Format::Json);
        assert_eq!(cfg.max_sum, DEFAULT_MAX_SUM);
    }

    #[test]
    fn unknown_keys_are_rejected() {
        assert!(toml::from_str::<FileConfig>("lamda = 3.0").is_err());
    }

    #[test]
    fn parity_flags_and_conflicts() {
        let args = ModelArgs {
            antisym: vec![Angle::Phi],
            ..Default::default()
        };
        let cfg = RunConfig::resolve(&args, &FileConfig::default()).unwrap();
        assert_eq!(cfg.branch.s_2phi, Parity::Antisymmetric);
        assert_eq!(cfg.branch.s_alpha, Parity::Symmetric);

        let args = ModelArgs {
            sym: vec![Angle::Theta],
            antisym: vec![Angle::Theta],
            ..Default::default()
        };
        assert!(RunConfig::resolve(&args, &FileConfig::default()).is_err());
    }

    #[test]
    fn irregular_branch_then_sign_override() {
        let args = ModelArgs {
            branch: Some(BranchArg::Irregular),
            d_sign: Some(Sign::Minus),
            ..Default::default()
        };
        let cfg = RunConfig::resolve(&args, &FileConfig::default()).unwrap();
        assert_eq!(
            (cfg.branch.a_sign, cfg.branch.c_sign, cfg.branch.d_sign),
            (Sign::Minus, Sign::Plus, Sign::Minus)
        );
    }

    #[test]
    fn ddim_mode_needs_dim() {
        let args = ModelArgs {
            channels: Some(vec![0, 1, 1, 1]),
            ..Default::default()
        };
        assert!(RunConfig::resolve(&args, &FileConfig::default()).is_err());
        let args = ModelArgs {
            dim: Some(2),
            channels: Some(vec![0, 1, 1, 1]),
            ..Default::default()
        };
        let cfg = RunConfig::resolve(&args, &FileConfig::default()).unwrap();
        assert_eq!(
            cfg.mode,
            Mode::Ddim {
                dim: 2,
                channels: [0, 1, 1, 1]
            }
        );
    }
}
