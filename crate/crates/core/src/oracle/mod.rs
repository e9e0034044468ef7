//! Independent numerical checks of the closed forms.
//!
//! Every separated equation has the form `-f'' + V f = E f` on an interval.
//! [`sl_eigenvalues`] discretizes it by finite differences and extracts the
//! lowest eigenvalues from the resulting symmetric tridiagonal matrix;
//! [`residual`] measures how well a given function satisfies it pointwise.
//! [`verify_model`] runs both against the closed-form spectrum.
//! [`local_energy`] applies the full Cartesian Hamiltonian to a state.

mod fd;
mod hamiltonian;
mod verify;

pub use fd::{
    residual, residual_with_margin, sl_eigenvalues, sl_eigenvalues_with, GridSolve, Scheme,
};
pub use hamiltonian::{
    laplacian, local_energy, local_energy_of, potential, psi_at, LAPLACIAN_STEP,
};
pub use verify::{
    verify_all, verify_model, Check, CheckKind, VerifyOptions, VerifyReport, RATIO_WINDOW,
};

use serde::Serialize;
use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};

/// Relative change between the fine-grid and extrapolated eigenvalues above
/// which a solve counts as unconverged.
pub const EXTRAPOLATION_LIMIT: f64 = 1e-3;
/// Smallest grid accepted by [`sl_eigenvalues`].
pub const MIN_GRID: usize = 200;
/// Inner cut-off of the radial interval.
pub const RADIAL_R_MIN: f64 = 1e-6;
/// Outer cut-off of the radial interval, in units of `1/sqrt(omega)`.
pub const RADIAL_EXTENT: f64 = 12.0;
/// Below this local exponent `x^nu` a wall is rough: node-based differences
/// lose second order there (the error goes like `h^(2 nu - 1)`), so the
/// angular solver factors the wall behaviour out and the residual check
/// keeps away from the wall.
pub const ROUGH_WALL_EXPONENT: f64 = 2.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum OdeKind {
    /// `-f'' + 4 lambda / sin^2(2 phi) f` on `[0, pi/2]`.
    PhiEq,
    /// `-f'' + (A_t/sin^2 phi + A_u/cos^2 phi) f` on `[0, pi/2]`.
    PhiEqDdim,
    /// `-f'' + ((B - 1/4)/sin^2 theta + A_s/cos^2 theta) f` on `[0, pi/2]`.
    ThetaEq,
    /// `-f'' + ((C - 1/4)/sin^2 alpha + A_R/cos^2 alpha) f` on `[0, pi/2]`.
    AlphaEq,
    /// `-f'' + (omega^2 r^2 + (beta + D - 1/4)/r^2) f` on `(r_min, 12/sqrt(omega))`.
    RadialEq,
}

/// Which local solution `x^{1/2 +- sqrt(1/4 + A)}` the eigenfunctions follow
/// at a singular wall.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum WallRoot {
    Regular,
    Irregular,
}

/// One separated equation with its coefficients and interval.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OdeSpec {
    pub kind: OdeKind,
    /// Coefficient of the inverse-square term at the left wall.
    pub left: f64,
    /// Coefficient of the inverse-square term at the right wall (unused for
    /// `RadialEq`).
    pub right: f64,
    pub omega: f64,
    pub lo: f64,
    pub hi: f64,
    pub walls: [WallRoot; 2],
}

fn centrifugal(l: u32, md: f64) -> f64 {
    let j = f64::from(l) + md;
    j * (j + 1.0)
}

impl OdeSpec {
    fn angular(kind: OdeKind, left: f64, right: f64) -> Self {
        Self {
            kind,
            left,
            right,
            omega: 0.0,
            lo: 0.0,
            hi: FRAC_PI_2,
            walls: [WallRoot::Regular; 2],
        }
    }

    pub fn phi(lambda: f64) -> Self {
        Self::angular(OdeKind::PhiEq, lambda, lambda)
    }

    /// `A_t = lambda + (l_t + md)(l_t + md + 1)`, likewise `A_u`.
    pub fn phi_ddim(lambda: f64, dim: u32, l_t: u32, l_u: u32) -> Self {
        let md = (f64::from(dim) - 3.0) / 2.0;
        Self::angular(
            OdeKind::PhiEqDdim,
            lambda + centrifugal(l_t, md),
            lambda + centrifugal(l_u, md),
        )
    }

    /// `big_b` is the separation constant `B_n` of the `phi` equation;
    /// `cos_coeff` is `lambda` on the line.
    pub fn theta(big_b: f64, cos_coeff: f64) -> Self {
        Self::angular(OdeKind::ThetaEq, big_b - 0.25, cos_coeff)
    }

    /// `cos_coeff` is `mu` on the line.
    pub fn alpha(big_c: f64, cos_coeff: f64) -> Self {
        Self::angular(OdeKind::AlphaEq, big_c - 0.25, cos_coeff)
    }

    /// `barrier` is `beta + D_lmn`.
    pub fn radial(barrier: f64, omega: f64) -> Self {
        Self {
            kind: OdeKind::RadialEq,
            left: barrier - 0.25,
            right: 0.0,
            omega,
            lo: RADIAL_R_MIN,
            hi: RADIAL_EXTENT / omega.sqrt(),
            walls: [WallRoot::Regular; 2],
        }
    }

    /// Centre-of-mass channel coefficient `mu + (l_R + md)(l_R + md + 1)`
    /// and the analogous `lambda` one; identity on the line (`dim = 3`, `l = 0`).
    pub fn channel_coefficient(coupling: f64, dim: u32, l: u32) -> f64 {
        coupling + centrifugal(l, (f64::from(dim) - 3.0) / 2.0)
    }

    pub fn with_walls(mut self, walls: [WallRoot; 2]) -> Self {
        self.walls = walls;
        self
    }

    pub fn potential(&self, x: f64) -> f64 {
        match self.kind {
            OdeKind::PhiEq => 4.0 * self.left / (2.0 * x).sin().powi(2),
            OdeKind::RadialEq => self.omega * self.omega * x * x + self.left / (x * x),
            _ => self.left / x.sin().powi(2) + self.right / x.cos().powi(2),
        }
    }

    /// Local exponent `1/2 +- sqrt(1/4 + A)` at wall `side` (0 left, 1 right).
    pub fn wall_exponent(&self, side: usize) -> f64 {
        let a = if side == 0 { self.left } else { self.right };
        let root = (0.25 + a).sqrt();
        match self.walls[side] {
            WallRoot::Regular => 0.5 + root,
            WallRoot::Irregular => 0.5 - root,
        }
    }

    /// Smallest local exponent over the singular walls.
    pub fn min_wall_exponent(&self) -> f64 {
        let left = self.wall_exponent(0);
        if self.kind == OdeKind::RadialEq {
            left
        } else {
            left.min(self.wall_exponent(1))
        }
    }

    pub fn is_irregular(&self) -> bool {
        self.walls.contains(&WallRoot::Irregular)
    }

    /// Irregular walls always need the factored scheme; rough regular walls
    /// of angular equations use it to keep the second-order rate.
    pub fn needs_shifted_grid(&self) -> bool {
        self.is_irregular()
            || (self.kind != OdeKind::RadialEq && self.min_wall_exponent() < ROUGH_WALL_EXPONENT)
    }

    pub(crate) fn check(&self) -> Result<()> {
        if !(self.lo < self.hi) {
            return Err(Error::Domain(format!(
                "empty interval ({}, {})",
                self.lo, self.hi
            )));
        }
        let finite = [self.left, self.right, self.omega]
            .iter()
            .all(|v| v.is_finite());
        if !finite {
            return Err(Error::Domain("non-finite equation coefficient".into()));
        }
        for side in 0..2 {
            if self.kind == OdeKind::RadialEq && side == 1 {
                continue;
            }
            let a = if side == 0 { self.left } else { self.right };
            if a < -0.25 {
                return Err(Error::Domain(format!(
                    "inverse-square coefficient {a} below -1/4 at wall {side}"
                )));
            }
        }
        if self.kind == OdeKind::RadialEq {
            if self.is_irregular() {
                return Err(Error::Unsupported(
                    "irregular radial walls are not supported".into(),
                ));
            }
            if !(self.omega > 0.0) {
                return Err(Error::Domain("omega must be positive".into()));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_phi_potential_splits() {
        let s = OdeSpec::phi(2.0);
        for x in [0.1f64, 0.5, 1.2] {
            let split = 2.0 / x.sin().powi(2) + 2.0 / x.cos().powi(2);
            assert!((s.potential(x) - split).abs() < 1e-12 * split);
        }
    }

    #[test]
    fn wall_exponents_follow_the_root_choice() {
        let s = OdeSpec::phi(2.0);
        assert!((s.wall_exponent(0) - 2.0).abs() < 1e-15);
        let s = s.with_walls([WallRoot::Irregular, WallRoot::Irregular]);
        assert!((s.wall_exponent(1) + 1.0).abs() < 1e-15);
    }

    #[test]
    fn ddim_coefficients_reduce_to_line() {
        let s = OdeSpec::phi_ddim(2.0, 3, 0, 0);
        assert_eq!((s.left, s.right), (2.0, 2.0));
        assert_eq!(OdeSpec::channel_coefficient(6.0, 3, 0), 6.0);
        // md = 1: (1)(2) = 2
        assert_eq!(OdeSpec::channel_coefficient(0.0, 5, 0), 2.0);
    }
}
