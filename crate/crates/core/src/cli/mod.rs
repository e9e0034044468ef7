//! Command-line front end.
//!
//! [`run`] parses arguments, resolves defaults (flag, then the TOML file
//! named by [`CONFIG_ENV`], then built-in values), validates the model and
//! only then computes, so a rejected input produces no partial output.
//!
//! JSON field order follows the output structs: `spectrum` prints
//! `levels[{energy, kappa, multiplicity, qn}]` then `params`.

mod args;
mod commands;
mod config;
pub mod output;

pub use args::{
    Angle, BranchArg, Cli, Command, EvalArgs, Format, HarmonicArgs, ModelArgs, VerifyArgs,
};
pub use config::{FileConfig, Mode, Params, RunConfig, CONFIG_ENV, DEFAULT_MAX_K, DEFAULT_MAX_SUM};

use clap::error::ErrorKind;
use clap::Parser;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("config: {0}")]
    Config(String),
    #[error(transparent)]
    Model(#[from] crate::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Model(crate::Error::Accuracy { .. }) => EXIT_FAILURE,
            _ => EXIT_INVALID,
        }
    }
}

/// Text for the output stream plus the exit code.
#[derive(Debug)]
pub struct Outcome {
    pub text: String,
    pub code: i32,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Self {
            text,
            code: EXIT_OK,
        }
    }
}

fn execute(cli: &Cli, config: Option<PathBuf>) -> Result<Outcome, CliError> {
    let file = match config {
        Some(p) => FileConfig::load(&p)?,
        None => FileConfig::default(),
    };
    match &cli.command {
        Command::Spectrum(m) => commands::spectrum(&RunConfig::resolve(m, &file)?),
        Command::Eval(a) => commands::eval(&RunConfig::resolve(&a.model, &file)?, a),
        Command::Validate(m) => commands::validate(&RunConfig::resolve(m, &file)?),
        Command::Verify(a) => commands::verify(&RunConfig::resolve(&a.model, &file)?, a),
        Command::Harmonic(a) => commands::harmonic(a),
    }
}

/// Runs one invocation with an explicit defaults file.
pub fn run_with_config<I, T>(
    args: I,
    config: Option<PathBuf>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    EXIT_INVALID
                }
            };
        }
    };
    match execute(&cli, config) {
        Ok(o) => match out.write_all(o.text.as_bytes()) {
            Ok(()) => o.code,
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                EXIT_FAILURE
            }
        },
        Err(e) => {
            match &e {
                CliError::Model(crate::Error::Rejected(rep)) => {
                    let _ = writeln!(err, "error: parameters rejected");
                    for v in &rep.violations {
                        let _ = writeln!(err, "  violation {v}");
                    }
                }
                _ => {
                    let _ = writeln!(err, "error: {e}");
                }
            }
            e.exit_code()
        }
    }
}

/// Runs one invocation, reading the defaults file from [`CONFIG_ENV`].
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = std::env::var_os(CONFIG_ENV)
        .filter(|p| !p.is_empty())
        .map(PathBuf::from);
    run_with_config(args, config, out, err)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("wolfes4").chain(args.iter().copied());
        let code = run_with_config(argv, None, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn spectrum_first_row_at_zero_beta() {
        let (code, out, _) = call(&[
            "spectrum",
            "--max-sum",
            "1",
            "--max-k",
            "0",
            "--format",
            "csv",
        ]);
        assert_eq!(code, 0);
        assert!(
            out.lines().nth(1).unwrap().starts_with("22,10,1,0,0,0,0"),
            "{out}"
        );
    }

    #[test]
    fn rejected_domain_exits_2_without_output() {
        let (code, out, err) = call(&["spectrum", "--lambda", "0.8", "--branch", "irregular"]);
        assert_eq!(code, 2);
        assert!(out.is_empty());
        assert!(err.contains("LambdaOutsideIrregularWindow"), "{err}");
    }

    #[test]
    fn bad_flag_exits_2() {
        assert_eq!(call(&["spectrum", "--bogus"]).0, 2);
        assert_eq!(call(&["eval", "--point", "1,2,3"]).0, 2);
    }

    #[test]
    fn help_exits_0() {
        let (code, out, _) = call(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("spectrum"));
    }

    #[test]
    fn missing_config_file_exits_2() {
        let mut sink = Vec::new();
        let code = run_with_config(
            ["wolfes4", "spectrum"],
            Some(PathBuf::from("/nonexistent/wolfes4.toml")),
            &mut sink,
            &mut Vec::new(),
        );
        assert_eq!(code, 2);
    }
}
