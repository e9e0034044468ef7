//! Eigenfunctions: separated factors, the assembled hyperspherical and
//! Cartesian forms, S4 symmetrization, normalization and hyperspherical
//! harmonics.
//!
//! Wavefunctions are returned unnormalized; [`norm_constant`] gives the
//! diagonal of the overlap integral separately.

mod cartesian;
mod factors;
mod harmonic;
mod norm;

pub use cartesian::{psi_cartesian, symmetrize, Symmetrized, CANCELLATION_THRESHOLD};
pub use factors::{
    alpha_factor, phi_factor, psi_hyperspherical, radial_factor, theta_factor, Factor, PsiValue,
};
pub use harmonic::hyperspherical_harmonic;
pub use norm::{
    factor_overlap, gram_matrix, norm_constant, norm_constants, overlap,
    phi_norm_legendre_sequence, NormConstant, QuadratureOrders, NORM_CONVERGENCE,
};

use serde::Serialize;

use crate::error::Result;
use crate::model::{Branch, Couplings, Exponents, Model};
use crate::spectrum::{chain, QuantumNumbers, SpectralChain};

/// One eigenstate: validated parameters, quantum numbers and the spectral
/// chain they induce.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EigenState {
    pub couplings: Couplings,
    pub branch: Branch,
    pub exponents: Exponents,
    pub qn: QuantumNumbers,
    pub chain: SpectralChain,
}

impl EigenState {
    pub fn new(model: &Model, qn: QuantumNumbers) -> Result<Self> {
        Self::from_parts(model.couplings, model.branch, model.exponents, qn)
    }

    pub fn from_parts(
        couplings: Couplings,
        branch: Branch,
        exponents: Exponents,
        qn: QuantumNumbers,
    ) -> Result<Self> {
        let chain = chain(&couplings, &exponents, qn)?;
        Ok(Self {
            couplings,
            branch,
            exponents,
            qn,
            chain,
        })
    }

    pub fn energy(&self) -> f64 {
        self.chain.energy
    }

    pub fn is_line(&self) -> bool {
        self.exponents.is_line()
    }
}

/// `base^exp` for `base >= 0`, with `0^exp` taken as `0`, `1` or `+inf`
/// according to the sign of `exp`.
pub(crate) fn pow0(base: f64, exp: f64) -> f64 {
    let base = base.abs();
    if base == 0.0 {
        if exp > 0.0 {
            0.0
        } else if exp == 0.0 {
            1.0
        } else {
            f64::INFINITY
        }
    } else {
        base.powf(exp)
    }
}
