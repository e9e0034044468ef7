use serde::Serialize;

use super::factors::psi_hyperspherical;
use super::{pow0, EigenState};
use crate::coordinates::{to_collective, to_hyperspherical, AngleRange, CartesianPoint};
use crate::error::{Error, Result};
use crate::polynomials::{gegenbauer_unchecked, jacobi_unchecked, laguerre_unchecked};

/// Relative size below which an S4 sum counts as cancelled.
pub const CANCELLATION_THRESHOLD: f64 = 1e-12;

/// `Psi` written directly in the particle positions (symmetric regular line
/// states only).
///
/// With the pair-sum differences `w1 = x1+x4-x2-x3`, `w2 = x1+x3-x2-x4`,
/// `w3 = x1+x2-x3-x4`, `S = sum x` and `rho2 = sum x^2`:
///
/// ```text
/// |w1 w2|^{a+1/2} (w1^2+w2^2)^n C_n^{(a+1/2)}((w1^2-w2^2)/(w1^2+w2^2))
/// * |w3|^{c+1/2} (w1^2+w2^2+w3^2)^m P_m^{(b_n,c)}((w3^2-w1^2-w2^2)/(w1^2+w2^2+w3^2))
/// * |S|^{d+1/2} P_l^{(c_mn,d)}(S^2/(2 rho2) - 1)
/// * rho2^q exp(-omega rho2/2) L_k^{(kappa)}(omega rho2)
/// ```
///
/// with `q = (kappa - 2m - 2n - 2a - c - d - 3)/2`. This equals the
/// hyperspherical `Psi` up to a constant factor.
pub fn psi_cartesian(s: &EigenState, p: &CartesianPoint) -> Result<f64> {
    if !s.is_line() || !s.branch.is_regular() || !s.branch.is_symmetric() {
        return Err(Error::Unsupported(
            "Cartesian form is available for symmetric regular line states only".into(),
        ));
    }
    let [x1, x2, x3, x4] = p.0;
    let w1 = x1 + x4 - x2 - x3;
    let w2 = x1 + x3 - x2 - x4;
    let w3 = x1 + x2 - x3 - x4;
    let sum = x1 + x2 + x3 + x4;
    let rho2 = p.norm_sq();
    let e = &s.exponents;
    let ch = &s.chain;
    let (k, l, m, n) = (s.qn.k, s.qn.l, s.qn.m, s.qn.n);

    let wall = pow0(w1 * w2, e.a + 0.5) * pow0(w3, e.c + 0.5) * pow0(sum, e.d + 0.5);
    if wall == 0.0 || rho2 == 0.0 {
        return Ok(0.0);
    }
    let pair = w1 * w1 + w2 * w2;
    let triple = pair + w3 * w3;
    let phi_part =
        pair.powi(n as i32) * gegenbauer_unchecked(n, e.a + 0.5, (w1 * w1 - w2 * w2) / pair);
    let theta_part =
        triple.powi(m as i32) * jacobi_unchecked(m, ch.b_n, e.c, (w3 * w3 - pair) / triple);
    let alpha_part = jacobi_unchecked(l, ch.c_mn, e.d, sum * sum / (2.0 * rho2) - 1.0);
    let q = 0.5 * (ch.kappa - (2 * m + 2 * n) as f64 - 2.0 * e.a - e.c - e.d - 3.0);
    let w = s.couplings.omega;
    let radial = rho2.powf(q) * (-0.5 * w * rho2).exp() * laguerre_unchecked(k, ch.kappa, w * rho2);
    Ok(wall * phi_part * theta_part * alpha_part * radial)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Symmetrized {
    pub value: f64,
    /// Sum of the absolute values of the 24 terms.
    pub abs_sum: f64,
    /// `|value| <= CANCELLATION_THRESHOLD * abs_sum` with a nonzero `abs_sum`.
    pub cancelled: bool,
}

fn permutations() -> Vec<[usize; 4]> {
    let mut out = Vec::with_capacity(24);
    for a in 0..4 {
        for b in (0..4).filter(|&b| b != a) {
            for c in (0..4).filter(|&c| c != a && c != b) {
                out.push([a, b, c, 6 - a - b - c]);
            }
        }
    }
    out
}

/// Sum of `Psi` over the 24 permutations of the particle labels.
pub fn symmetrize(s: &EigenState, p: &CartesianPoint) -> Result<Symmetrized> {
    if !s.is_line() {
        return Err(Error::Unsupported(
            "S4 symmetrization applies to line states".into(),
        ));
    }
    let (mut value, mut abs_sum) = (0.0, 0.0);
    for perm in permutations() {
        let moved = CartesianPoint(perm.map(|i| p.0[i]));
        let h = to_hyperspherical(&to_collective(&moved), AngleRange::Full);
        let v = psi_hyperspherical(s, &h).psi;
        value += v;
        abs_sum += v.abs();
    }
    Ok(Symmetrized {
        value,
        abs_sum,
        cancelled: abs_sum > 0.0 && value.abs() <= CANCELLATION_THRESHOLD * abs_sum,
    })
}
