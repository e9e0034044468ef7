use serde::Serialize;

use super::{residual_with_margin, sl_eigenvalues, GridSolve, OdeSpec, WallRoot};
use crate::error::{Error, Result};
use crate::model::{Branch, Couplings, ExponentMode, Exponents, Model};
use crate::spectrum::{chain, QuantumNumbers, SpectralChain};
use crate::wavefunction::{
    alpha_factor, gram_matrix, norm_constants, phi_factor, radial_factor, theta_factor, EigenState,
    QuadratureOrders, NORM_CONVERGENCE,
};

/// Accepted range of `(E_N - exact) / (E_2N - exact)` for a second-order scheme.
pub const RATIO_WINDOW: (f64, f64) = (3.5, 4.5);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckKind {
    Eigenvalue,
    Convergence,
    Residual,
    Norm,
    Orthogonality,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub kind: CheckKind,
    pub name: String,
    pub observed: f64,
    pub expected: Option<f64>,
    /// Relative error for eigenvalues, normalized residual, or the quantity
    /// compared against `tolerance`.
    pub error: f64,
    pub tolerance: f64,
    pub grids: Option<[usize; 2]>,
    pub ratio: Option<f64>,
    pub passed: bool,
    pub note: Option<String>,
}

impl Check {
    fn failed(kind: CheckKind, name: String, tolerance: f64, note: String) -> Self {
        Self {
            kind,
            name,
            observed: f64::NAN,
            expected: None,
            error: f64::INFINITY,
            tolerance,
            grids: None,
            ratio: None,
            passed: false,
            note: Some(note),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyOptions {
    /// Largest value of each quantum number covered.
    pub max_qn: u32,
    /// Eigenvalues compared per equation.
    pub count: usize,
    /// Coarse FD grid; the fine grid is twice as large.
    pub grid: usize,
    pub residual_grid: usize,
    /// Fraction of the interval skipped at each end of a residual check.
    /// Near a wall `x^nu` the stencil error only falls like `h^(nu-2)`
    /// unless `nu` is an integer, so a fixed node count is not enough.
    pub residual_margin: f64,
    pub eigen_tol: f64,
    /// Eigenvalue tolerance for equations with an irregular wall.
    pub shifted_eigen_tol: f64,
    pub residual_tol: f64,
    pub gram_tol: f64,
    pub norm_tol: f64,
    pub ratio_window: (f64, f64),
    /// Convergence ratios are only checked when the coarse-grid relative
    /// error exceeds this floor; below it the ratio is rounding noise.
    pub ratio_floor: f64,
    pub orders: QuadratureOrders,
    pub gram: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            max_qn: 2,
            count: 3,
            grid: 2000,
            residual_grid: 4000,
            residual_margin: 0.05,
            eigen_tol: 1e-4,
            shifted_eigen_tol: 1e-2,
            residual_tol: 1e-6,
            gram_tol: 1e-8,
            norm_tol: NORM_CONVERGENCE,
            ratio_window: RATIO_WINDOW,
            ratio_floor: 1e-9,
            orders: QuadratureOrders::default(),
            gram: true,
        }
    }
}

impl VerifyOptions {
    /// Replaces every tolerance by `tol`.
    pub fn with_tolerance(mut self, tol: f64) -> Self {
        self.eigen_tol = tol;
        self.shifted_eigen_tol = tol;
        self.residual_tol = tol;
        self.gram_tol = tol;
        self.norm_tol = tol;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub couplings: Couplings,
    pub branch: Branch,
    pub exponents: Exponents,
    pub options: VerifyOptions,
    pub checks: Vec<Check>,
    pub failures: usize,
    pub passed: bool,
}

fn root(exponent: f64) -> WallRoot {
    if exponent > 0.0 {
        WallRoot::Regular
    } else {
        WallRoot::Irregular
    }
}

/// Coefficients of the separated equations for one model.
struct Equations {
    model: Model,
    dim: u32,
    l_r: u32,
    l_s: u32,
}

impl Equations {
    fn new(model: &Model) -> Self {
        let (dim, l_r, l_s) = match model.exponents.mode {
            ExponentMode::Line => (3, 0, 0),
            ExponentMode::Ddim { dim, channels } => (dim, channels.l_r, channels.l_s),
        };
        Self {
            model: model.clone(),
            dim,
            l_r,
            l_s,
        }
    }

    fn chain(&self, qn: QuantumNumbers) -> Result<SpectralChain> {
        chain(&self.model.couplings, &self.model.exponents, qn)
    }

    fn state(&self, qn: QuantumNumbers) -> Result<EigenState> {
        EigenState::new(&self.model, qn)
    }

    fn phi(&self) -> OdeSpec {
        let c = &self.model.couplings;
        let e = &self.model.exponents;
        match e.mode {
            ExponentMode::Line => OdeSpec::phi(c.lambda),
            ExponentMode::Ddim { dim, channels } => {
                OdeSpec::phi_ddim(c.lambda, dim, channels.l_t, channels.l_u)
            }
        }
        .with_walls([root(e.a), root(e.b)])
    }

    fn theta(&self, ch: &SpectralChain) -> OdeSpec {
        let lambda = OdeSpec::channel_coefficient(self.model.couplings.lambda, self.dim, self.l_s);
        OdeSpec::theta(ch.big_b(), lambda).with_walls([root(ch.b_n), root(self.model.exponents.c)])
    }

    fn alpha(&self, ch: &SpectralChain) -> OdeSpec {
        let mu = OdeSpec::channel_coefficient(self.model.couplings.mu, self.dim, self.l_r);
        OdeSpec::alpha(ch.big_c(), mu).with_walls([root(ch.c_mn), root(self.model.exponents.d)])
    }

    fn radial(&self, ch: &SpectralChain) -> OdeSpec {
        OdeSpec::radial(
            self.model.couplings.beta + ch.d_lmn,
            self.model.couplings.omega,
        )
    }
}

struct Runner<'a> {
    opts: &'a VerifyOptions,
    checks: Vec<Check>,
}

impl Runner<'_> {
    fn fail(&mut self, label: &str, e: Error) {
        self.checks.push(Check::failed(
            CheckKind::Eigenvalue,
            format!("eigenvalues {label}"),
            self.opts.eigen_tol,
            e.to_string(),
        ));
    }

    fn eigen(&mut self, label: &str, spec: &OdeSpec, expected: Result<Vec<f64>>) {
        let opts = self.opts;
        let expected = match expected {
            Ok(v) => v,
            Err(e) => return self.fail(label, e),
        };
        let solve: GridSolve = match sl_eigenvalues(spec, expected.len(), opts.grid) {
            Ok(s) => s,
            Err(e) => return self.fail(label, e),
        };
        let tolerance = if spec.is_irregular() {
            opts.shifted_eigen_tol
        } else {
            opts.eigen_tol
        };
        for (i, &exact) in expected.iter().enumerate() {
            let found = solve.values[i];
            let error = ((found - exact) / exact).abs();
            let coarse_err = solve.coarse[i] - exact;
            let fine_err = solve.fine[i] - exact;
            let ratio = coarse_err / fine_err;
            self.checks.push(Check {
                kind: CheckKind::Eigenvalue,
                name: format!("eigenvalue {label} #{i}"),
                observed: found,
                expected: Some(exact),
                error,
                tolerance,
                grids: Some(solve.grids),
                ratio: Some(ratio),
                passed: error <= tolerance,
                note: Some(format!("{:?}", solve.scheme).to_lowercase()),
            });
            if (coarse_err / exact).abs() > opts.ratio_floor {
                let (lo, hi) = opts.ratio_window;
                self.checks.push(Check {
                    kind: CheckKind::Convergence,
                    name: format!("convergence {label} #{i}"),
                    observed: ratio,
                    expected: Some(4.0),
                    error: (ratio - 4.0).abs(),
                    tolerance: (hi - lo) / 2.0,
                    grids: Some(solve.grids),
                    ratio: Some(ratio),
                    passed: (lo..=hi).contains(&ratio),
                    note: None,
                });
            }
        }
    }

    fn residual(&mut self, label: &str, spec: &OdeSpec, f: &dyn Fn(f64) -> f64, value: f64) {
        let opts = self.opts;
        let grid = opts.residual_grid;
        let margin = (opts.residual_margin * grid as f64).ceil() as usize;
        let error = residual_with_margin(spec, f, value, grid, margin);
        self.checks.push(Check {
            kind: CheckKind::Residual,
            name: format!("residual {label}"),
            observed: error,
            expected: Some(0.0),
            error,
            tolerance: opts.residual_tol,
            grids: Some([grid, grid]),
            ratio: None,
            passed: error <= opts.residual_tol,
            note: Some(format!("margin {margin} nodes")),
        });
    }
}

fn qn(k: u32, l: u32, m: u32, n: u32) -> QuantumNumbers {
    QuantumNumbers::new(k, l, m, n)
}

/// Runs the FD eigenvalue, residual, norm and orthogonality checks for a
/// validated model.
pub fn verify_model(model: &Model, opts: &VerifyOptions) -> VerifyReport {
    let eq = Equations::new(model);
    let mut run = Runner {
        opts,
        checks: Vec::new(),
    };
    let top = opts.max_qn;
    let count = opts.count.max(1) as u32;
    let collect =
        |f: &dyn Fn(u32) -> Result<f64>| -> Result<Vec<f64>> { (0..count).map(f).collect() };

    // phi equation: B_n for n < count
    let phi_spec = eq.phi();
    run.eigen(
        "phi",
        &phi_spec,
        collect(&|n| eq.chain(qn(0, 0, 0, n)).map(|c| c.big_b())),
    );
    for n in 0..=top {
        let ch_n = match eq.chain(qn(0, 0, 0, n)) {
            Ok(c) => c,
            Err(e) => {
                run.fail(&format!("theta n={n}"), e);
                continue;
            }
        };
        run.eigen(
            &format!("theta n={n}"),
            &eq.theta(&ch_n),
            collect(&|m| eq.chain(qn(0, 0, m, n)).map(|c| c.big_c())),
        );
        for m in 0..=top {
            match eq.chain(qn(0, 0, m, n)) {
                Ok(ch_mn) => run.eigen(
                    &format!("alpha m={m} n={n}"),
                    &eq.alpha(&ch_mn),
                    collect(&|l| eq.chain(qn(0, l, m, n)).map(|c| c.d_lmn)),
                ),
                Err(e) => run.fail(&format!("alpha m={m} n={n}"), e),
            }
            for l in 0..=top {
                match eq.chain(qn(0, l, m, n)) {
                    Ok(ch) => run.eigen(
                        &format!("radial l={l} m={m} n={n}"),
                        &eq.radial(&ch),
                        collect(&|k| eq.chain(qn(k, l, m, n)).map(|c| c.energy)),
                    ),
                    Err(e) => run.fail(&format!("radial l={l} m={m} n={n}"), e),
                }
            }
        }
    }

    // pointwise residuals of the closed-form factors
    let mut states = Vec::new();
    for n in 0..=top {
        for m in 0..=top {
            for l in 0..=top {
                for k in 0..=top {
                    match eq.state(qn(k, l, m, n)) {
                        Ok(s) => states.push(s),
                        Err(e) => run.checks.push(Check::failed(
                            CheckKind::Residual,
                            format!("residual k={k} l={l} m={m} n={n}"),
                            opts.residual_tol,
                            e.to_string(),
                        )),
                    }
                }
            }
        }
    }
    for s in &states {
        let QuantumNumbers { k, l, m, n } = s.qn;
        let ch = s.chain;
        if (k, l, m) == (0, 0, 0) {
            run.residual(
                &format!("phi n={n}"),
                &phi_spec,
                &|x| phi_factor(s, x),
                ch.big_b(),
            );
        }
        if (k, l) == (0, 0) {
            run.residual(
                &format!("theta m={m} n={n}"),
                &eq.theta(&eq.chain(qn(0, 0, 0, n)).expect("chain checked")),
                &|x| theta_factor(s, x),
                ch.big_c(),
            );
        }
        if k == 0 {
            run.residual(
                &format!("alpha l={l} m={m} n={n}"),
                &eq.alpha(&eq.chain(qn(0, 0, m, n)).expect("chain checked")),
                &|x| alpha_factor(s, x),
                ch.d_lmn,
            );
        }
        run.residual(
            &format!("radial k={k} l={l} m={m} n={n}"),
            &eq.radial(&ch),
            &|x| radial_factor(s, x),
            ch.energy,
        );
    }

    if opts.gram && !states.is_empty() {
        run.checks.push(match norm_constants(&states, opts.orders) {
            Err(e) => Check::failed(
                CheckKind::Norm,
                "norm constants".into(),
                opts.norm_tol,
                e.to_string(),
            ),
            Ok(ncs) => {
                let worst_change = ncs
                    .iter()
                    .map(|nc| nc.refinement_change)
                    .fold(0.0, f64::max);
                Check {
                    kind: CheckKind::Norm,
                    name: format!("norm constants ({} states)", states.len()),
                    observed: worst_change,
                    expected: Some(0.0),
                    error: worst_change,
                    tolerance: opts.norm_tol,
                    grids: Some([opts.orders.angular, opts.orders.radial]),
                    ratio: None,
                    passed: worst_change <= opts.norm_tol,
                    note: Some("relative change under order doubling".into()),
                }
            }
        });
        run.checks.push(match gram_matrix(&states, opts.orders) {
            Ok(g) => {
                let worst = off_diagonal_ratio(&g);
                Check {
                    kind: CheckKind::Orthogonality,
                    name: format!("gram matrix ({} states)", states.len()),
                    observed: worst,
                    expected: Some(0.0),
                    error: worst,
                    tolerance: opts.gram_tol,
                    grids: Some([opts.orders.angular, opts.orders.radial]),
                    ratio: None,
                    passed: worst <= opts.gram_tol,
                    note: None,
                }
            }
            Err(e) => Check::failed(
                CheckKind::Orthogonality,
                "gram matrix".into(),
                opts.gram_tol,
                e.to_string(),
            ),
        });
    }

    let failures = run.checks.iter().filter(|c| !c.passed).count();
    VerifyReport {
        couplings: model.couplings,
        branch: model.branch,
        exponents: model.exponents,
        options: opts.clone(),
        checks: run.checks,
        failures,
        passed: failures == 0,
    }
}

/// `max_{i != j} |G_ij| / sqrt(G_ii G_jj)`.
pub(crate) fn off_diagonal_ratio(g: &[Vec<f64>]) -> f64 {
    let mut worst: f64 = 0.0;
    for i in 0..g.len() {
        for j in 0..g.len() {
            if i != j {
                worst = worst.max(g[i][j].abs() / (g[i][i] * g[j][j]).sqrt());
            }
        }
    }
    worst
}

/// [`verify_model`] for a line model with default options and the given
/// quantum-number bound.
pub fn verify_all(c: Couplings, br: Branch, max_qn: u32) -> Result<VerifyReport> {
    let model = Model::line(c, br)?;
    let opts = VerifyOptions {
        max_qn,
        ..VerifyOptions::default()
    };
    Ok(verify_model(&model, &opts))
}
