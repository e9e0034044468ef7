//! Couplings, branch selection, derived exponents and domain validation.

use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::{Error, Result};

/// The four model parameters (units `hbar = 2m = 1`).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Couplings {
    /// Wolfes four-body strength.
    pub lambda: f64,
    /// Centre-of-mass inverse-square strength.
    pub mu: f64,
    /// Hyperradial inverse-square strength.
    pub beta: f64,
    /// Trap frequency.
    pub omega: f64,
}

impl Couplings {
    pub fn new(lambda: f64, mu: f64, beta: f64, omega: f64) -> Self {
        Self {
            lambda,
            mu,
            beta,
            omega,
        }
    }
}

impl Default for Couplings {
    fn default() -> Self {
        Self::new(2.0, 6.0, 0.0, 1.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    #[default]
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }

    pub fn of(x: f64) -> Sign {
        if x < 0.0 {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }
}

/// How an angular factor is continued from its fundamental interval to the
/// mirrored one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    #[default]
    Symmetric,
    Antisymmetric,
}

impl Parity {
    /// The `s` flag: 0 for symmetric, 1 for antisymmetric.
    pub fn flag(self) -> u8 {
        match self {
            Parity::Symmetric => 0,
            Parity::Antisymmetric => 1,
        }
    }
}

/// Regular/irregular sign choices, parity flags and the interval selectors
/// used when integrating over one fundamental cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct Branch {
    pub a_sign: Sign,
    pub c_sign: Sign,
    pub d_sign: Sign,
    pub s_alpha: Parity,
    pub s_theta: Parity,
    pub s_2phi: Parity,
    pub eps1: Sign,
    pub eps2: Sign,
    pub eps3: Sign,
}

impl Branch {
    pub fn regular() -> Self {
        Self::default()
    }

    /// `a -> -a`, everything else regular.
    pub fn irregular() -> Self {
        Self {
            a_sign: Sign::Minus,
            ..Self::default()
        }
    }

    pub fn is_regular(&self) -> bool {
        self.a_sign == Sign::Plus && self.c_sign == Sign::Plus && self.d_sign == Sign::Plus
    }

    pub fn with_signs(mut self, a: Sign, c: Sign, d: Sign) -> Self {
        self.a_sign = a;
        self.c_sign = c;
        self.d_sign = d;
        self
    }

    pub fn with_parities(mut self, alpha: Parity, theta: Parity, two_phi: Parity) -> Self {
        self.s_alpha = alpha;
        self.s_theta = theta;
        self.s_2phi = two_phi;
        self
    }

    pub fn is_symmetric(&self) -> bool {
        self.s_alpha == Parity::Symmetric
            && self.s_theta == Parity::Symmetric
            && self.s_2phi == Parity::Symmetric
    }
}

/// Orbital quantum numbers of the four D-dimensional collective vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct Channels {
    pub l_r: u32,
    pub l_s: u32,
    pub l_t: u32,
    pub l_u: u32,
}

impl Channels {
    pub fn new(l_r: u32, l_s: u32, l_t: u32, l_u: u32) -> Self {
        Self { l_r, l_s, l_t, l_u }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "lowercase")]
pub enum ExponentMode {
    Line,
    Ddim { dim: u32, channels: Channels },
}

/// Exponents of the local power laws at the singular walls.
///
/// On the line the two `phi` walls share one exponent, so `b == a` there;
/// this makes `b_n = 1 + a + b + 2n` valid in both modes.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Exponents {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
    pub mode: ExponentMode,
}

impl Exponents {
    pub fn is_line(&self) -> bool {
        matches!(self.mode, ExponentMode::Line)
    }

    /// `md = (D - 3) / 2` in D-dimensional mode.
    pub fn md(&self) -> Option<f64> {
        match self.mode {
            ExponentMode::Line => None,
            ExponentMode::Ddim { dim, .. } => Some((f64::from(dim) - 3.0) / 2.0),
        }
    }

    /// `a + b + c + d + 3`: the value of `sqrt(D_lmn)` at `l = m = n = 0`.
    pub fn base(&self) -> f64 {
        self.a + self.b + self.c + self.d + 3.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FindingCode {
    NonFinite,
    OmegaNotPositive,
    LambdaBelowFloor,
    MuBelowFloor,
    LambdaOutsideIrregularWindow,
    MuOutsideIrregularWindow,
    AlphaOperatorNotSelfAdjoint,
    RadialBaseNotPositive,
    /// `beta + D_lmn <= 0`; handled only through self-adjoint extensions,
    /// which this crate does not model.
    CentrifugalBarrierSelfAdjointExtension,
    DeltaPathologyPhi,
    DeltaPathologyTheta,
    DeltaPathologyAlpha,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Finding {
    pub code: FindingCode,
    pub message: String,
}

impl fmt::Display for Finding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}: {}", self.code, self.message)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize, Default)]
pub struct ValidationReport {
    pub ok: bool,
    pub violations: Vec<Finding>,
    pub warnings: Vec<Finding>,
}

impl ValidationReport {
    fn violation(&mut self, code: FindingCode, message: impl Into<String>) {
        self.violations.push(Finding {
            code,
            message: message.into(),
        });
    }

    fn warning(&mut self, code: FindingCode, message: impl Into<String>) {
        self.warnings.push(Finding {
            code,
            message: message.into(),
        });
    }

    pub fn has_violation(&self, code: FindingCode) -> bool {
        self.violations.iter().any(|f| f.code == code)
    }

    pub fn has_warning(&self, code: FindingCode) -> bool {
        self.warnings.iter().any(|f| f.code == code)
    }

    pub fn summary(&self) -> String {
        if self.ok {
            return "ok".to_string();
        }
        self.violations
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join("; ")
    }
}

fn in_open_window(x: f64) -> bool {
    x > -0.25 && x < 0.75 && x != 0.0
}

/// Validate a line-mode parameter set.
///
/// Checks run in this order: parameter floors, irregular windows, the
/// mixed-sign condition of the `alpha` operator, the hyperradial barrier,
/// then δ-pathology warnings. Warnings never affect `ok`.
pub fn validate_domain(c: &Couplings, br: &Branch) -> ValidationReport {
    let mut rep = ValidationReport::default();
    let all = [c.lambda, c.mu, c.beta, c.omega];
    if all.iter().any(|v| !v.is_finite()) {
        rep.violation(FindingCode::NonFinite, "couplings must be finite");
        return rep;
    }
    if c.omega <= 0.0 {
        rep.violation(
            FindingCode::OmegaNotPositive,
            format!("omega must be positive, got {}", c.omega),
        );
    }
    let mut floors_ok = true;
    if c.lambda <= -0.25 {
        floors_ok = false;
        rep.violation(
            FindingCode::LambdaBelowFloor,
            format!("lambda must exceed -1/4, got {}", c.lambda),
        );
    }
    if c.mu <= -0.25 {
        floors_ok = false;
        rep.violation(
            FindingCode::MuBelowFloor,
            format!("mu must exceed -1/4, got {}", c.mu),
        );
    }
    if !floors_ok {
        return rep;
    }

    let flipped_ac = br.a_sign == Sign::Minus || br.c_sign == Sign::Minus;
    if flipped_ac && !in_open_window(c.lambda) {
        rep.violation(
            FindingCode::LambdaOutsideIrregularWindow,
            format!(
                "lambda outside irregular window (-1/4,0)U(0,3/4), got {}",
                c.lambda
            ),
        );
    }
    if br.d_sign == Sign::Minus && !in_open_window(c.mu) {
        rep.violation(
            FindingCode::MuOutsideIrregularWindow,
            format!("mu outside irregular window (-1/4,0)U(0,3/4), got {}", c.mu),
        );
    }

    let e = signed_line_exponents(c, br);
    // c_00 = 2 + 2a + c: 2 - a > 0 always in the window, 2 - 3a > 0 iff lambda < 7/36
    let c00 = 2.0 + 2.0 * e.a + e.c;
    if flipped_ac && c00 <= 0.0 {
        rep.violation(
            FindingCode::AlphaOperatorNotSelfAdjoint,
            format!(
                "c_00 = 2 - 2|a| + c = {c00} must be positive (requires lambda < 7/36 when a and c are both flipped)"
            ),
        );
    }

    let base = e.base();
    if base <= 0.0 {
        rep.violation(
            FindingCode::RadialBaseNotPositive,
            format!("2a + c + d + 3 = {base} must be positive"),
        );
    } else if c.beta + base * base <= 0.0 {
        rep.violation(
            FindingCode::CentrifugalBarrierSelfAdjointExtension,
            format!(
                "beta + D_000 = {} <= 0: only self-adjoint extensions exist, not modelled",
                c.beta + base * base
            ),
        );
    }

    if c.lambda == 0.0 && br.s_2phi == Parity::Symmetric {
        rep.warning(
            FindingCode::DeltaPathologyPhi,
            "a = 1/2 (lambda = 0): delta-pathology at phi = pi/2 for the symmetric extension",
        );
    }
    if c.lambda == 0.0 && br.s_theta == Parity::Symmetric {
        rep.warning(
            FindingCode::DeltaPathologyTheta,
            "c = 1/2 (lambda = 0): delta-pathology at theta = pi/2 for the symmetric extension",
        );
    }
    if c.mu == 0.0 && br.s_alpha == Parity::Symmetric {
        rep.warning(
            FindingCode::DeltaPathologyAlpha,
            "d = 1/2 (mu = 0): delta-pathology at alpha = pi/2 for the symmetric extension",
        );
    }

    rep.ok = rep.violations.is_empty();
    rep
}

fn signed_line_exponents(c: &Couplings, br: &Branch) -> Exponents {
    let half_root = |x: f64| 0.5 * (1.0 + 4.0 * x).sqrt();
    let a = br.a_sign.value() * half_root(c.lambda);
    Exponents {
        a,
        b: a,
        c: br.c_sign.value() * half_root(c.lambda),
        d: br.d_sign.value() * half_root(c.mu),
        mode: ExponentMode::Line,
    }
}

/// Line-mode exponents `a = c = ±sqrt(1 + 4 lambda)/2`, `d = ±sqrt(1 + 4 mu)/2`.
pub fn exponents_line(c: &Couplings, br: &Branch) -> Result<Exponents> {
    let rep = validate_domain(c, br);
    if !rep.ok {
        return Err(Error::Rejected(rep));
    }
    Ok(signed_line_exponents(c, br))
}

/// D-dimensional exponents for the given channel momenta.
///
/// Each squared exponent `lambda + (l + md + 1/2)^2` (with `mu` for the
/// `R` channel) must be positive for the channel actually requested.
pub fn exponents_ddim(c: &Couplings, dim: u32, ch: Channels) -> Result<Exponents> {
    if dim < 2 {
        return Err(Error::Domain(format!("dimension must be >= 2, got {dim}")));
    }
    if ![c.lambda, c.mu, c.beta, c.omega]
        .iter()
        .all(|v| v.is_finite())
    {
        return Err(Error::Domain("couplings must be finite".into()));
    }
    if c.omega <= 0.0 {
        return Err(Error::Domain(format!(
            "omega must be positive, got {}",
            c.omega
        )));
    }
    let md = (f64::from(dim) - 3.0) / 2.0;
    let root = |strength: f64, l: u32, name: &str| -> Result<f64> {
        let shifted = f64::from(l) + md + 0.5;
        let sq = strength + shifted * shifted;
        if sq > 0.0 {
            Ok(sq.sqrt())
        } else {
            Err(Error::Domain(format!(
                "{name} channel not self-adjoint: coupling + (l + md + 1/2)^2 = {sq} <= 0"
            )))
        }
    };
    Ok(Exponents {
        a: root(c.lambda, ch.l_t, "t")?,
        b: root(c.lambda, ch.l_u, "u")?,
        c: root(c.lambda, ch.l_s, "s")?,
        d: root(c.mu, ch.l_r, "R")?,
        mode: ExponentMode::Ddim { dim, channels: ch },
    })
}

/// A validated parameter set together with its exponents.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Model {
    pub couplings: Couplings,
    pub branch: Branch,
    pub exponents: Exponents,
    pub report: ValidationReport,
}

impl Model {
    pub fn line(couplings: Couplings, branch: Branch) -> Result<Self> {
        let report = validate_domain(&couplings, &branch);
        if !report.ok {
            return Err(Error::Rejected(report));
        }
        Ok(Self {
            couplings,
            branch,
            exponents: signed_line_exponents(&couplings, &branch),
            report,
        })
    }

    pub fn ddim(couplings: Couplings, dim: u32, channels: Channels) -> Result<Self> {
        let exponents = exponents_ddim(&couplings, dim, channels)?;
        let base = exponents.base();
        let gap = couplings.beta + base * base;
        if gap <= 0.0 {
            return Err(Error::CentrifugalCollapse {
                value: gap,
                l: 0,
                m: 0,
                n: 0,
            });
        }
        Ok(Self {
            couplings,
            branch: Branch::regular(),
            exponents,
            report: ValidationReport {
                ok: true,
                ..Default::default()
            },
        })
    }

    pub fn is_line(&self) -> bool {
        self.exponents.is_line()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() < 1e-15
    }

    #[test]
    fn line_exponent_examples() {
        let e = exponents_line(&Couplings::new(2.0, 6.0, 0.0, 1.0), &Branch::regular()).unwrap();
        assert!(close(e.a, 1.5) && close(e.c, 1.5) && close(e.d, 2.5));

        let rep = validate_domain(&Couplings::new(0.0, 0.0, 0.0, 1.0), &Branch::regular());
        assert!(rep.ok);
        assert!(rep.has_warning(FindingCode::DeltaPathologyPhi));
        assert!(rep.has_warning(FindingCode::DeltaPathologyAlpha));
        let e = exponents_line(&Couplings::new(0.0, 0.0, 0.0, 1.0), &Branch::regular()).unwrap();
        assert!(close(e.a, 0.5) && close(e.c, 0.5) && close(e.d, 0.5));

        let e = exponents_line(&Couplings::new(0.5, 1.0, 0.0, 1.0), &Branch::irregular()).unwrap();
        assert!((e.a + 0.5 * 3f64.sqrt()).abs() < 1e-15);
        assert!((e.a + 0.8660254037844386).abs() < 1e-12);
    }

    #[test]
    fn ddim_exponent_examples() {
        let c = Couplings::new(2.0, 6.0, 0.0, 1.0);
        let e = exponents_ddim(&c, 3, Channels::default()).unwrap();
        assert!(close(e.a, 1.5) && close(e.b, 1.5) && close(e.c, 1.5) && close(e.d, 2.5));

        let e = exponents_ddim(
            &Couplings::new(0.0, 1.0, 0.0, 1.0),
            2,
            Channels::new(0, 1, 1, 1),
        )
        .unwrap();
        assert!(close(e.a, 1.0));
        // the l_u = 0 channel sits exactly on the excluded critical coupling
        assert!(exponents_ddim(
            &Couplings::new(0.0, 1.0, 0.0, 1.0),
            2,
            Channels::new(0, 1, 1, 0)
        )
        .is_err());

        let e =
            exponents_ddim(&Couplings::new(0.0, 0.0, 0.0, 1.0), 5, Channels::default()).unwrap();
        for v in [e.a, e.b, e.c, e.d] {
            assert!(close(v, 1.5));
        }
        assert_eq!(e.md(), Some(1.0));
    }

    #[test]
    fn ddim_rejects_non_self_adjoint_channel() {
        // D = 2, l = 0: lambda + 0 must be positive
        assert!(
            exponents_ddim(&Couplings::new(0.0, 1.0, 0.0, 1.0), 2, Channels::default()).is_err()
        );
        assert!(
            exponents_ddim(&Couplings::new(1.0, -0.1, 0.0, 1.0), 2, Channels::default()).is_err()
        );
        assert!(
            exponents_ddim(&Couplings::new(1.0, 1.0, 0.0, 1.0), 1, Channels::default()).is_err()
        );
    }

    #[test]
    fn validation_examples() {
        let irr = Branch::irregular();
        let rep = validate_domain(&Couplings::new(0.5, 0.0, 0.0, 1.0), &irr);
        assert!(rep.ok, "{}", rep.summary());

        let rep = validate_domain(&Couplings::new(0.8, 0.0, 0.0, 1.0), &irr);
        assert!(!rep.ok);
        assert!(rep.has_violation(FindingCode::LambdaOutsideIrregularWindow));

        let both = irr.with_signs(Sign::Minus, Sign::Minus, Sign::Plus);
        let rep = validate_domain(&Couplings::new(0.25, 0.0, 0.0, 1.0), &both);
        assert!(!rep.ok);
        assert!(rep.has_violation(FindingCode::AlphaOperatorNotSelfAdjoint));
        // just under 7/36 passes
        let rep = validate_domain(&Couplings::new(0.19, 0.0, 0.0, 1.0), &both);
        assert!(rep.ok, "{}", rep.summary());
    }

    #[test]
    fn floors_and_barrier() {
        let reg = Branch::regular();
        assert!(validate_domain(&Couplings::new(-0.25, 0.0, 0.0, 1.0), &reg)
            .has_violation(FindingCode::LambdaBelowFloor));
        assert!(validate_domain(&Couplings::new(1.0, -0.3, 0.0, 1.0), &reg)
            .has_violation(FindingCode::MuBelowFloor));
        assert!(validate_domain(&Couplings::new(1.0, 1.0, 0.0, 0.0), &reg)
            .has_violation(FindingCode::OmegaNotPositive));
        // lambda = mu = 0 regular: base = 5, so beta > -25 is required
        let rep = validate_domain(&Couplings::new(0.0, 0.0, -25.0, 1.0), &reg);
        assert!(rep.has_violation(FindingCode::CentrifugalBarrierSelfAdjointExtension));
        assert!(validate_domain(&Couplings::new(0.0, 0.0, -24.9, 1.0), &reg).ok);
    }

    #[test]
    fn irregular_d_requires_mu_window() {
        let br = Branch::regular().with_signs(Sign::Plus, Sign::Plus, Sign::Minus);
        assert!(validate_domain(&Couplings::new(1.0, 0.5, 0.0, 1.0), &br).ok);
        assert!(validate_domain(&Couplings::new(1.0, 0.9, 0.0, 1.0), &br)
            .has_violation(FindingCode::MuOutsideIrregularWindow));
    }

    #[test]
    fn irregular_beta_condition() {
        // a = -sqrt(3)/2, c = +sqrt(3)/2, d = 1/2 => base = 3 - sqrt(3)/2 + 1/2
        let br = Branch::irregular();
        let base = 3.5 - 0.5 * 3f64.sqrt();
        let rep = validate_domain(&Couplings::new(0.5, 0.0, -(base * base) + 1e-9, 1.0), &br);
        assert!(rep.ok);
        let rep = validate_domain(&Couplings::new(0.5, 0.0, -(base * base) - 1e-9, 1.0), &br);
        assert!(!rep.ok);
    }

    #[test]
    fn antisymmetric_flags_silence_warnings() {
        let br = Branch::regular().with_parities(
            Parity::Antisymmetric,
            Parity::Antisymmetric,
            Parity::Antisymmetric,
        );
        let rep = validate_domain(&Couplings::new(0.0, 0.0, 0.0, 1.0), &br);
        assert!(rep.ok && rep.warnings.is_empty());
    }

    #[test]
    fn model_rejection_carries_report() {
        match Model::line(Couplings::new(0.8, 0.0, 0.0, 1.0), Branch::irregular()) {
            Err(Error::Rejected(rep)) => assert!(!rep.ok),
            other => panic!("unexpected {other:?}"),
        }
    }
}
