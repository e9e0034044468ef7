use serde::Serialize;
use std::f64::consts::{FRAC_PI_2, PI};

use super::{pow0, EigenState};
use crate::coordinates::HyperPoint;
use crate::model::Parity;
use crate::polynomials::{gegenbauer_unchecked, jacobi_unchecked, laguerre_unchecked};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Factor {
    Radial,
    Alpha,
    Theta,
    Phi,
}

impl Factor {
    pub const ALL: [Factor; 4] = [Factor::Radial, Factor::Alpha, Factor::Theta, Factor::Phi];
}

/// Value of `Psi` at a point, with the individual factors.
///
/// `singular` marks points where a factor with a negative wall exponent is
/// evaluated on its wall; `psi` is `+inf` there.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PsiValue {
    pub psi: f64,
    pub radial: f64,
    pub alpha: f64,
    pub theta: f64,
    pub phi: f64,
    /// Polynomial parts `L_k`, `P_l`, `P_m`, `C_n` (or `P_n` in D dimensions).
    pub polynomials: [f64; 4],
    pub singular: bool,
    pub zero_factors: Vec<Factor>,
}

/// Rounds trig values at multiples of `pi/2` to exact zeros so nodes and
/// walls are hit exactly.
fn snap(v: f64) -> f64 {
    if v.abs() < 1e-15 {
        0.0
    } else {
        v
    }
}

fn parity_sign(p: Parity, x: f64) -> f64 {
    match p {
        Parity::Antisymmetric if x < 0.0 => -1.0,
        _ => 1.0,
    }
}

/// Exponents of the local power laws of one factor at its two walls:
/// `(at angle 0, at angle pi/2)` for the angular factors.
pub(crate) fn wall_exponents(s: &EigenState, which: Factor) -> (f64, f64) {
    let e = &s.exponents;
    match which {
        Factor::Phi => (0.5 + e.a, 0.5 + e.b),
        Factor::Theta => (s.chain.b_n + 0.5, e.c + 0.5),
        Factor::Alpha => (s.chain.c_mn + 0.5, e.d + 0.5),
        Factor::Radial => (s.chain.kappa + 0.5, f64::NAN),
    }
}

pub(crate) fn phi_poly(s: &EigenState, varphi: f64) -> f64 {
    let e = &s.exponents;
    let x = (2.0 * varphi).cos();
    if e.is_line() {
        gegenbauer_unchecked(s.qn.n, 0.5 + e.a, x)
    } else {
        jacobi_unchecked(s.qn.n, e.a, e.b, x)
    }
}

/// `Phi_n(phi)`.
///
/// Line mode: `sgn(sin 2phi)^{s_2phi} (eps1 sin 2phi)^{1/2+a} C_n^{(1/2+a)}(cos 2phi)`
/// after reducing `phi` modulo `pi`; `eps1 = +1` on `[0, pi/2]`, `-1` on
/// `(pi/2, pi)`.
/// D-dimensional mode: `(sin phi)^{1/2+a} (cos phi)^{1/2+b} P_n^{(a,b)}(cos 2phi)`
/// with `phi` in `[0, pi/2]`.
pub fn phi_factor(s: &EigenState, varphi: f64) -> f64 {
    let e = &s.exponents;
    if e.is_line() {
        let reduced = varphi.rem_euclid(PI);
        let s2 = snap((2.0 * reduced).sin());
        let eps1 = if reduced <= FRAC_PI_2 { 1.0 } else { -1.0 };
        parity_sign(s.branch.s_2phi, s2)
            * pow0((eps1 * s2).max(0.0).max(s2.abs()), 0.5 + e.a)
            * phi_poly(s, reduced)
    } else {
        pow0(snap(varphi.sin()), 0.5 + e.a)
            * pow0(snap(varphi.cos()), 0.5 + e.b)
            * phi_poly(s, varphi)
    }
}

pub(crate) fn theta_poly(s: &EigenState, theta: f64) -> f64 {
    jacobi_unchecked(s.qn.m, s.chain.b_n, s.exponents.c, (2.0 * theta).cos())
}

pub(crate) fn theta_shifted(s: &EigenState, theta: f64, shift: f64) -> f64 {
    let (sin_exp, cos_exp) = wall_exponents(s, Factor::Theta);
    let ct = snap(theta.cos());
    let sign = if s.is_line() {
        parity_sign(s.branch.s_theta, ct)
    } else {
        1.0
    };
    sign * pow0(snap(theta.sin()), sin_exp - shift) * pow0(ct, cos_exp) * theta_poly(s, theta)
}

/// `Theta_mn(theta) = sgn(cos)^{s_theta} sin^{b_n+1/2} (eps2 cos)^{c+1/2} P_m^{(b_n,c)}(cos 2theta)`.
pub fn theta_factor(s: &EigenState, theta: f64) -> f64 {
    theta_shifted(s, theta, 0.0)
}

pub(crate) fn alpha_poly(s: &EigenState, alpha: f64) -> f64 {
    jacobi_unchecked(s.qn.l, s.chain.c_mn, s.exponents.d, (2.0 * alpha).cos())
}

pub(crate) fn alpha_shifted(s: &EigenState, alpha: f64, shift: f64) -> f64 {
    let (sin_exp, cos_exp) = wall_exponents(s, Factor::Alpha);
    let ca = snap(alpha.cos());
    let sign = if s.is_line() {
        parity_sign(s.branch.s_alpha, ca)
    } else {
        1.0
    };
    sign * pow0(snap(alpha.sin()), sin_exp - shift) * pow0(ca, cos_exp) * alpha_poly(s, alpha)
}

/// `G_lmn(alpha) = sgn(cos)^{s_alpha} sin^{c_mn+1/2} (eps3 cos)^{d+1/2} P_l^{(c_mn,d)}(cos 2alpha)`.
pub fn alpha_factor(s: &EigenState, alpha: f64) -> f64 {
    alpha_shifted(s, alpha, 0.0)
}

pub(crate) fn radial_poly(s: &EigenState, r: f64) -> f64 {
    let w = s.couplings.omega;
    laguerre_unchecked(s.qn.k, s.chain.kappa, w * r * r)
}

pub(crate) fn radial_shifted(s: &EigenState, r: f64, shift: f64) -> f64 {
    let w = s.couplings.omega;
    pow0(r, s.chain.kappa + 0.5 - shift) * (-0.5 * w * r * r).exp() * radial_poly(s, r)
}

/// `F(r) = r^{kappa+1/2} exp(-omega r^2 / 2) L_k^{(kappa)}(omega r^2)`.
pub fn radial_factor(s: &EigenState, r: f64) -> f64 {
    radial_shifted(s, r.abs(), 0.0)
}

/// `Psi = F/(r sqrt r) * G/sin(alpha) * Theta/sqrt(sin theta) * Phi`.
///
/// The divisions are carried out on the exponents, so poles of the chart
/// give the limiting value (0 when the reduced power is positive).
pub fn psi_hyperspherical(s: &EigenState, h: &HyperPoint) -> PsiValue {
    let radial = radial_factor(s, h.r);
    let alpha = alpha_factor(s, h.alpha);
    let theta = theta_factor(s, h.theta);
    let phi = phi_factor(s, h.phi);
    let reduced = [
        radial_shifted(s, h.r.abs(), 1.5),
        alpha_shifted(s, h.alpha, 1.0),
        theta_shifted(s, h.theta, 0.5),
        phi,
    ];
    let singular = reduced.iter().any(|v| v.is_infinite());
    let psi = if singular {
        f64::INFINITY
    } else {
        reduced.iter().product()
    };
    let zero_factors = Factor::ALL
        .iter()
        .zip(reduced)
        .filter(|(_, v)| *v == 0.0)
        .map(|(f, _)| *f)
        .collect();
    PsiValue {
        psi,
        radial,
        alpha,
        theta,
        phi,
        polynomials: [
            radial_poly(s, h.r.abs()),
            alpha_poly(s, h.alpha),
            theta_poly(s, h.theta),
            phi_poly(s, h.phi.rem_euclid(PI)),
        ],
        singular,
        zero_factors,
    }
}
