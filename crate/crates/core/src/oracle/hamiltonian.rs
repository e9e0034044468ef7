//! The four-body Hamiltonian applied to a wavefunction in Cartesian
//! coordinates, with the Laplacian taken by central differences.
//!
//! This check does not use the separation of variables at all: it only
//! needs pointwise values of `Psi`.

use crate::coordinates::{to_collective, to_hyperspherical, AngleRange, CartesianPoint};
use crate::error::{Error, Result};
use crate::model::Couplings;
use crate::wavefunction::{psi_cartesian, psi_hyperspherical, EigenState};

/// Default finite-difference step for [`local_energy`].
pub const LAPLACIAN_STEP: f64 = 1e-2;

/// `4 lambda sum 1/w_i^2 + 4 mu / S^2 + beta / |x|^2 + omega^2 |x|^2` with
/// `w_1 = x1+x4-x2-x3`, `w_2 = x1+x3-x2-x4`, `w_3 = x1+x2-x3-x4`, `S = sum x`.
pub fn potential(c: &Couplings, p: &CartesianPoint) -> f64 {
    let [x1, x2, x3, x4] = p.0;
    let w = [x1 + x4 - x2 - x3, x1 + x3 - x2 - x4, x1 + x2 - x3 - x4];
    let sum = x1 + x2 + x3 + x4;
    let r2 = p.norm_sq();
    4.0 * c.lambda * w.iter().map(|wi| 1.0 / (wi * wi)).sum::<f64>()
        + 4.0 * c.mu / (sum * sum)
        + c.beta / r2
        + c.omega * c.omega * r2
}

fn laplacian_at(f: &dyn Fn(&CartesianPoint) -> f64, p: &CartesianPoint, h: f64) -> f64 {
    let centre = f(p);
    (0..4)
        .map(|i| {
            let mut plus = *p;
            let mut minus = *p;
            plus.0[i] += h;
            minus.0[i] -= h;
            (f(&plus) - 2.0 * centre + f(&minus)) / (h * h)
        })
        .sum()
}

/// Laplacian of `f` from steps `h` and `h/2` plus one Richardson step.
pub fn laplacian(f: &dyn Fn(&CartesianPoint) -> f64, p: &CartesianPoint, h: f64) -> f64 {
    let coarse = laplacian_at(f, p, h);
    let fine = laplacian_at(f, p, h / 2.0);
    (4.0 * fine - coarse) / 3.0
}

/// `(H f)(p) / f(p)` for the couplings `c`.
pub fn local_energy_of(
    c: &Couplings,
    f: &dyn Fn(&CartesianPoint) -> f64,
    p: &CartesianPoint,
    h: f64,
) -> Result<f64> {
    let value = f(p);
    if !(value.is_finite() && value != 0.0) {
        return Err(Error::Domain(format!(
            "wavefunction value {value} at {:?} admits no local energy",
            p.0
        )));
    }
    Ok((-laplacian(f, p, h) + potential(c, p) * value) / value)
}

/// Pointwise value of a line state: the Cartesian closed form when it
/// applies, the hyperspherical product otherwise.
pub fn psi_at(s: &EigenState, p: &CartesianPoint) -> f64 {
    psi_cartesian(s, p).unwrap_or_else(|_| {
        psi_hyperspherical(s, &to_hyperspherical(&to_collective(p), AngleRange::Full)).psi
    })
}

/// `(H Psi)(p) / Psi(p)` for a line state; equals the energy at every point
/// off the singular hyperplanes.
pub fn local_energy(s: &EigenState, p: &CartesianPoint, h: f64) -> Result<f64> {
    if !s.is_line() {
        return Err(Error::Unsupported(
            "the Cartesian Hamiltonian acts on line states".into(),
        ));
    }
    local_energy_of(&s.couplings, &|q| psi_at(s, q), p, h)
}
