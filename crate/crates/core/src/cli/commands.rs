use serde::Serialize;

use super::args::{EvalArgs, Format, HarmonicArgs, VerifyArgs};
use super::config::{Params, RunConfig};
use super::output::{csv, json, num, table};
use super::{CliError, Outcome};
use crate::coordinates::{
    to_collective, to_hyperspherical, AngleRange, CartesianPoint, HyperPoint,
};
use crate::model::{Finding, Model};
use crate::oracle::{verify_model, VerifyOptions};
use crate::spectrum::{
    enumerate_levels_with_tolerance, QuantumNumbers, SpectralChain, LEVEL_TOLERANCE,
};
use crate::wavefunction::{
    hyperspherical_harmonic, psi_cartesian, psi_hyperspherical, EigenState, Factor,
    QuadratureOrders,
};

#[derive(Serialize)]
struct LevelOut {
    energy: f64,
    kappa: f64,
    multiplicity: usize,
    qn: Vec<[u32; 4]>,
}

#[derive(Serialize)]
struct SpectrumOut {
    levels: Vec<LevelOut>,
    params: SpectrumParams,
}

#[derive(Serialize)]
struct SpectrumParams {
    #[serde(flatten)]
    model: Params,
    max_sum: u32,
    max_k: u32,
}

pub fn spectrum(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let model = cfg.model()?;
    let tol = cfg.tol.unwrap_or(LEVEL_TOLERANCE);
    let table_ = enumerate_levels_with_tolerance(
        &model.couplings,
        &model.exponents,
        cfg.max_sum,
        cfg.max_k,
        tol,
    )?;
    let levels: Vec<LevelOut> = table_
        .levels
        .into_iter()
        .map(|lv| LevelOut {
            energy: lv.energy,
            kappa: lv.kappa,
            multiplicity: lv.multiplicity,
            qn: lv.qn.iter().map(QuantumNumbers::as_array).collect(),
        })
        .collect();
    let text = match cfg.format {
        Format::Json => json(&SpectrumOut {
            levels,
            params: SpectrumParams {
                model: cfg.params(),
                max_sum: cfg.max_sum,
                max_k: cfg.max_k,
            },
        }),
        Format::Csv => {
            let rows: Vec<Vec<String>> = levels
                .iter()
                .flat_map(|lv| {
                    lv.qn.iter().map(move |q| {
                        let mut row =
                            vec![num(lv.energy), num(lv.kappa), lv.multiplicity.to_string()];
                        row.extend(q.iter().map(u32::to_string));
                        row
                    })
                })
                .collect();
            csv(
                &["energy", "kappa", "multiplicity", "k", "l", "m", "n"],
                &rows,
            )
        }
        Format::Table => {
            let rows: Vec<Vec<String>> = levels
                .iter()
                .map(|lv| {
                    let qn: Vec<String> = lv
                        .qn
                        .iter()
                        .map(|q| format!("({},{},{},{})", q[0], q[1], q[2], q[3]))
                        .collect();
                    vec![
                        num(lv.energy),
                        num(lv.kappa),
                        lv.multiplicity.to_string(),
                        qn.join(" "),
                    ]
                })
                .collect();
            table(&["energy", "kappa", "mult", "k,l,m,n"], &rows)
        }
    };
    Ok(Outcome::ok(text))
}

#[derive(Serialize)]
struct FactorValues {
    radial: f64,
    alpha: f64,
    theta: f64,
    phi: f64,
}

#[derive(Serialize)]
struct EvalOut {
    qn: [u32; 4],
    #[serde(skip_serializing_if = "Option::is_none")]
    cartesian: Option<[f64; 4]>,
    point: HyperPoint,
    psi: f64,
    /// The Cartesian closed form, when it applies to the state.
    #[serde(skip_serializing_if = "Option::is_none")]
    psi_cartesian: Option<f64>,
    singular: bool,
    zero_factors: Vec<Factor>,
    factors: FactorValues,
    polynomials: FactorValues,
    chain: SpectralChain,
    params: Params,
}

fn four(v: &[f64], flag: &str) -> Result<[f64; 4], CliError> {
    let a = <[f64; 4]>::try_from(v)
        .map_err(|_| CliError::Usage(format!("--{flag} needs 4 values, got {}", v.len())))?;
    if a.iter().any(|x| !x.is_finite()) {
        return Err(CliError::Usage(format!("--{flag} values must be finite")));
    }
    Ok(a)
}

pub fn eval(cfg: &RunConfig, args: &EvalArgs) -> Result<Outcome, CliError> {
    let [k, l, m, n] = <[u32; 4]>::try_from(args.qn.as_slice())
        .map_err(|_| CliError::Usage(format!("--qn needs 4 values, got {}", args.qn.len())))?;
    let model: Model = cfg.model()?;
    let state = EigenState::new(&model, QuantumNumbers::new(k, l, m, n))?;

    let (cartesian, point) = match (&args.point, &args.hyper) {
        (Some(p), _) => {
            if !model.is_line() {
                return Err(CliError::Usage(
                    "--point takes line positions; use --hyper in D dimensions".into(),
                ));
            }
            let x = four(p, "point")?;
            let h = to_hyperspherical(&to_collective(&CartesianPoint(x)), AngleRange::Full);
            (Some(x), h)
        }
        (None, Some(h)) => {
            let [r, alpha, theta, phi] = four(h, "hyper")?;
            (None, HyperPoint::new(r, alpha, theta, phi))
        }
        (None, None) => {
            return Err(CliError::Usage(
                "one of --point or --hyper is required".into(),
            ))
        }
    };

    let v = psi_hyperspherical(&state, &point);
    let psi_cart = cartesian.and_then(|x| psi_cartesian(&state, &CartesianPoint(x)).ok());
    let out = EvalOut {
        qn: [k, l, m, n],
        cartesian,
        point,
        psi: v.psi,
        psi_cartesian: psi_cart,
        singular: v.singular,
        zero_factors: v.zero_factors.clone(),
        factors: FactorValues {
            radial: v.radial,
            alpha: v.alpha,
            theta: v.theta,
            phi: v.phi,
        },
        polynomials: FactorValues {
            radial: v.polynomials[0],
            alpha: v.polynomials[1],
            theta: v.polynomials[2],
            phi: v.polynomials[3],
        },
        chain: state.chain,
        params: cfg.params(),
    };
    let zeros: Vec<String> = out
        .zero_factors
        .iter()
        .map(|f| format!("{f:?}").to_lowercase())
        .collect();
    let mut rows = vec![
        ("psi", num(out.psi)),
        ("singular", out.singular.to_string()),
        ("zero_factors", zeros.join(" ")),
        ("radial", num(v.radial)),
        ("alpha", num(v.alpha)),
        ("theta", num(v.theta)),
        ("phi", num(v.phi)),
        ("b_n", num(state.chain.b_n)),
        ("c_mn", num(state.chain.c_mn)),
        ("d_lmn", num(state.chain.d_lmn)),
        ("kappa", num(state.chain.kappa)),
        ("energy", num(state.chain.energy)),
    ];
    if let Some(pc) = psi_cart {
        rows.insert(1, ("psi_cartesian", num(pc)));
    }
    let rows: Vec<Vec<String>> = rows
        .into_iter()
        .map(|(k, v)| vec![k.to_string(), v])
        .collect();
    let text = match cfg.format {
        Format::Json => json(&out),
        Format::Csv => csv(&["field", "value"], &rows),
        Format::Table => table(&["field", "value"], &rows),
    };
    Ok(Outcome::ok(text))
}

#[derive(Serialize)]
struct ValidateOut {
    ok: bool,
    violations: Vec<Finding>,
    warnings: Vec<Finding>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
    params: Params,
}

/// Exit 0 when the parameters are admissible and 2 otherwise; the report
/// goes to the output stream in both cases.
pub fn validate(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let out = match cfg.model() {
        Ok(m) => ValidateOut {
            ok: true,
            violations: vec![],
            warnings: m.report.warnings,
            error: None,
            params: cfg.params(),
        },
        Err(crate::Error::Rejected(rep)) => ValidateOut {
            ok: false,
            violations: rep.violations,
            warnings: rep.warnings,
            error: None,
            params: cfg.params(),
        },
        Err(e) => ValidateOut {
            ok: false,
            violations: vec![],
            warnings: vec![],
            error: Some(e.to_string()),
            params: cfg.params(),
        },
    };
    let mut rows: Vec<Vec<String>> = Vec::new();
    for f in &out.violations {
        rows.push(vec![
            "violation".into(),
            format!("{:?}", f.code),
            f.message.clone(),
        ]);
    }
    for f in &out.warnings {
        rows.push(vec![
            "warning".into(),
            format!("{:?}", f.code),
            f.message.clone(),
        ]);
    }
    if let Some(e) = &out.error {
        rows.push(vec!["violation".into(), "Domain".into(), e.clone()]);
    }
    let text = match cfg.format {
        Format::Json => json(&out),
        // messages may contain commas
        Format::Csv => {
            let quoted: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    vec![
                        r[0].clone(),
                        r[1].clone(),
                        format!("\"{}\"", r[2].replace('"', "\"\"")),
                    ]
                })
                .collect();
            csv(&["kind", "code", "message"], &quoted)
        }
        Format::Table => {
            let mut t = format!("{}\n", if out.ok { "ok" } else { "rejected" });
            if !rows.is_empty() {
                t.push_str(&table(&["kind", "code", "message"], &rows));
            }
            t
        }
    };
    Ok(Outcome {
        text,
        code: if out.ok {
            super::EXIT_OK
        } else {
            super::EXIT_INVALID
        },
    })
}

pub fn verify(cfg: &RunConfig, args: &VerifyArgs) -> Result<Outcome, CliError> {
    let model = cfg.model()?;
    let mut opts = VerifyOptions {
        max_qn: args.max_qn,
        grid: args.grid,
        orders: QuadratureOrders::uniform(cfg.quad_order),
        ..VerifyOptions::default()
    };
    if let Some(t) = cfg.tol {
        opts = opts.with_tolerance(t);
    }
    let report = verify_model(&model, &opts);
    let rows: Vec<Vec<String>> = report
        .checks
        .iter()
        .map(|c| {
            let grids = c.grids.map(|[a, b]| format!("{a}/{b}")).unwrap_or_default();
            vec![
                if c.passed { "PASS" } else { "FAIL" }.to_string(),
                format!("{:?}", c.kind).to_lowercase(),
                c.name.replace(',', ";"),
                num(c.observed),
                c.expected.map(num).unwrap_or_default(),
                num(c.error),
                num(c.tolerance),
                c.ratio.map(num).unwrap_or_default(),
                grids,
            ]
        })
        .collect();
    let header = [
        "status",
        "kind",
        "name",
        "observed",
        "expected",
        "error",
        "tolerance",
        "ratio",
        "grids",
    ];
    let text = match cfg.format {
        Format::Json => json(&report),
        Format::Csv => csv(&header, &rows),
        Format::Table => {
            let mut t = table(&header, &rows);
            t.push_str(&format!(
                "{} checks, {} failed\n",
                report.checks.len(),
                report.failures
            ));
            t
        }
    };
    Ok(Outcome {
        text,
        code: if report.passed {
            super::EXIT_OK
        } else {
            super::EXIT_FAILURE
        },
    })
}

#[derive(Serialize)]
struct HarmonicOut {
    dim: u32,
    l: u32,
    m: Vec<u32>,
    thetas: Vec<f64>,
    phi: f64,
    conjugate: bool,
    re: f64,
    im: f64,
    abs: f64,
}

pub fn harmonic(args: &HarmonicArgs) -> Result<Outcome, CliError> {
    let y = hyperspherical_harmonic(
        args.dim,
        args.l,
        &args.m,
        &args.thetas,
        args.phi,
        args.conjugate,
    )?;
    let out = HarmonicOut {
        dim: args.dim,
        l: args.l,
        m: args.m.clone(),
        thetas: args.thetas.clone(),
        phi: args.phi,
        conjugate: args.conjugate,
        re: y.re,
        im: y.im,
        abs: y.norm(),
    };
    let row = vec![vec![num(out.re), num(out.im), num(out.abs)]];
    let text = match args.format.unwrap_or_default() {
        Format::Json => json(&out),
        Format::Csv => csv(&["re", "im", "abs"], &row),
        Format::Table => table(&["re", "im", "abs"], &row),
    };
    Ok(Outcome::ok(text))
}
