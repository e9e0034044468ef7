//! Overlap integrals under the measure `r^3 sin^2(alpha) sin(theta) dr dalpha dtheta dphi`.
//!
//! With that measure the product `Psi Psi'` reduces to the product of the
//! four separated factors, so every overlap is a product of 1-D integrals.
//! Angular integrals are taken on one cell of length `pi/2` (chosen by the
//! branch interval flags) after the substitution `x = cos(2 angle)`; the
//! wall powers then become a Gauss-Jacobi weight and the remaining integrand
//! is the polynomial product. The radial integral uses `u = omega r^2` and
//! Gauss-Laguerre.

use serde::Serialize;
use std::collections::hash_map::Entry;
use std::collections::HashMap;
use std::f64::consts::FRAC_PI_2;

use super::factors::{phi_factor, wall_exponents, Factor};
use super::EigenState;
use crate::error::{Error, Result};
use crate::model::{Parity, Sign};
use crate::polynomials::{gegenbauer_unchecked, jacobi_unchecked, laguerre_unchecked};
use crate::quadrature::{GaussRule, DEFAULT_ANGULAR_ORDER, DEFAULT_RADIAL_ORDER, MAX_ORDER};

/// Relative change allowed when the quadrature orders are doubled.
pub const NORM_CONVERGENCE: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct QuadratureOrders {
    pub angular: usize,
    pub radial: usize,
}

impl Default for QuadratureOrders {
    fn default() -> Self {
        Self {
            angular: DEFAULT_ANGULAR_ORDER,
            radial: DEFAULT_RADIAL_ORDER,
        }
    }
}

impl QuadratureOrders {
    pub fn uniform(order: usize) -> Self {
        Self {
            angular: order,
            radial: order,
        }
    }

    fn doubled(self) -> Self {
        Self {
            angular: (2 * self.angular).min(MAX_ORDER),
            radial: (2 * self.radial).min(MAX_ORDER),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct NormConstant {
    pub value: f64,
    pub orders: QuadratureOrders,
    /// Relative change observed against the doubled orders.
    pub refinement_change: f64,
}

fn polynomial_in_x(s: &EigenState, which: Factor, x: f64) -> f64 {
    let e = &s.exponents;
    match which {
        Factor::Phi if e.is_line() => gegenbauer_unchecked(s.qn.n, 0.5 + e.a, x),
        Factor::Phi => jacobi_unchecked(s.qn.n, e.a, e.b, x),
        Factor::Theta => jacobi_unchecked(s.qn.m, s.chain.b_n, e.c, x),
        Factor::Alpha => jacobi_unchecked(s.qn.l, s.chain.c_mn, e.d, x),
        Factor::Radial => laguerre_unchecked(s.qn.k, s.chain.kappa, x),
    }
}

/// Sign picked up by a factor on the mirrored cell `(pi/2, pi)`.
fn mirror_sign(s: &EigenState, which: Factor) -> f64 {
    if !s.is_line() {
        return 1.0;
    }
    let (parity, eps) = match which {
        Factor::Phi => (s.branch.s_2phi, s.branch.eps1),
        Factor::Theta => (s.branch.s_theta, s.branch.eps2),
        Factor::Alpha => (s.branch.s_alpha, s.branch.eps3),
        Factor::Radial => return 1.0,
    };
    match (parity, eps) {
        (Parity::Antisymmetric, Sign::Minus) => -1.0,
        _ => 1.0,
    }
}

/// Gauss rules keyed by kind, order and exponent bits. Overlaps of many
/// states reuse a small set of weights.
#[derive(Default)]
struct RuleCache {
    rules: HashMap<(bool, usize, u64, u64), GaussRule>,
}

impl RuleCache {
    fn get(&mut self, laguerre: bool, order: usize, a: f64, b: f64) -> Result<&GaussRule> {
        let key = (laguerre, order, a.to_bits(), b.to_bits());
        match self.rules.entry(key) {
            Entry::Occupied(e) => Ok(e.into_mut()),
            Entry::Vacant(v) => Ok(v.insert(if laguerre {
                GaussRule::laguerre(order, a)?
            } else {
                GaussRule::jacobi(order, a, b)?
            })),
        }
    }
}

/// Everything one separated factor depends on, as exact bit patterns.
type FactorKey = (Factor, u32, u64, u64, u64, bool, i8);

fn factor_key(s: &EigenState, which: Factor) -> FactorKey {
    let e = &s.exponents;
    let (deg, p, q) = match which {
        Factor::Phi => (s.qn.n, e.a, e.b),
        Factor::Theta => (s.qn.m, s.chain.b_n, e.c),
        Factor::Alpha => (s.qn.l, s.chain.c_mn, e.d),
        Factor::Radial => (s.qn.k, s.chain.kappa, 0.0),
    };
    (
        which,
        deg,
        p.to_bits(),
        q.to_bits(),
        s.couplings.omega.to_bits(),
        s.is_line(),
        mirror_sign(s, which) as i8,
    )
}

/// 1-D overlap of one separated factor of two states.
pub fn factor_overlap(
    s1: &EigenState,
    s2: &EigenState,
    which: Factor,
    order: usize,
) -> Result<f64> {
    factor_overlap_cached(&mut RuleCache::default(), s1, s2, which, order)
}

fn factor_overlap_cached(
    cache: &mut RuleCache,
    s1: &EigenState,
    s2: &EigenState,
    which: Factor,
    order: usize,
) -> Result<f64> {
    if s1.is_line() != s2.is_line() {
        return Err(Error::Domain(
            "overlap between line and D-dimensional states".into(),
        ));
    }
    if which == Factor::Radial {
        let w = s1.couplings.omega;
        let q = 0.5 * (s1.chain.kappa + s2.chain.kappa);
        let rule = cache.get(true, order, q, 0.0)?;
        let integral =
            rule.integrate(|u| polynomial_in_x(s1, which, u) * polynomial_in_x(s2, which, u));
        return Ok(integral * 0.5 * w.powf(-q - 1.0));
    }
    let (s_1, c_1) = wall_exponents(s1, which);
    let (s_2, c_2) = wall_exponents(s2, which);
    let (e_sin, e_cos) = (s_1 + s_2, c_1 + c_2);
    if !(e_sin > -1.0 && e_cos > -1.0) {
        return Err(Error::Domain(format!(
            "{which:?} factor is not square integrable (wall exponents {e_sin}, {e_cos})"
        )));
    }
    let rule = cache.get(false, order, 0.5 * e_sin - 0.5, 0.5 * e_cos - 0.5)?;
    let integral =
        rule.integrate(|x| polynomial_in_x(s1, which, x) * polynomial_in_x(s2, which, x));
    let mut scale = 2f64.powf(-0.5 * (e_sin + e_cos) - 1.0);
    if which == Factor::Phi && s1.is_line() {
        // (sin 2phi)^e = 2^e sin^e cos^e
        scale *= 2f64.powf(e_sin);
    }
    Ok(integral * scale * mirror_sign(s1, which) * mirror_sign(s2, which))
}

/// Factor overlaps memoized on [`factor_key`] pairs.
#[derive(Default)]
struct Overlaps {
    rules: RuleCache,
    memo: HashMap<(FactorKey, FactorKey, usize), f64>,
}

impl Overlaps {
    fn factor(
        &mut self,
        s1: &EigenState,
        s2: &EigenState,
        which: Factor,
        order: usize,
    ) -> Result<f64> {
        let key = (factor_key(s1, which), factor_key(s2, which), order);
        if let Some(&v) = self.memo.get(&key) {
            return Ok(v);
        }
        let v = factor_overlap_cached(&mut self.rules, s1, s2, which, order)?;
        self.memo.insert(key, v);
        Ok(v)
    }

    fn full(&mut self, s1: &EigenState, s2: &EigenState, orders: QuadratureOrders) -> Result<f64> {
        let mut total = self.factor(s1, s2, Factor::Radial, orders.radial)?;
        for which in [Factor::Alpha, Factor::Theta, Factor::Phi] {
            total *= self.factor(s1, s2, which, orders.angular)?;
        }
        Ok(total)
    }

    fn norm(&mut self, s: &EigenState, orders: QuadratureOrders) -> Result<NormConstant> {
        let value = self.full(s, s, orders)?;
        let refined = self.full(s, s, orders.doubled())?;
        let change = ((refined - value) / refined).abs();
        if !(change <= NORM_CONVERGENCE) {
            return Err(Error::Accuracy {
                what: "norm quadrature".into(),
                change,
                limit: NORM_CONVERGENCE,
            });
        }
        if !(value > 0.0 && value.is_finite()) {
            return Err(Error::Accuracy {
                what: format!("norm value {value}"),
                change,
                limit: NORM_CONVERGENCE,
            });
        }
        Ok(NormConstant {
            value,
            orders,
            refinement_change: change,
        })
    }
}

/// `<Psi_1 | Psi_2>` on the normalization cell selected by the branch flags.
pub fn overlap(s1: &EigenState, s2: &EigenState, orders: QuadratureOrders) -> Result<f64> {
    Overlaps::default().full(s1, s2, orders)
}

/// Diagonal overlap, checked against the doubled quadrature orders.
pub fn norm_constant(s: &EigenState, orders: QuadratureOrders) -> Result<NormConstant> {
    Overlaps::default().norm(s, orders)
}

/// [`norm_constant`] for many states, sharing quadrature rules.
pub fn norm_constants(
    states: &[EigenState],
    orders: QuadratureOrders,
) -> Result<Vec<NormConstant>> {
    let mut ov = Overlaps::default();
    states.iter().map(|s| ov.norm(s, orders)).collect()
}

/// Overlap matrix of a list of states.
pub fn gram_matrix(states: &[EigenState], orders: QuadratureOrders) -> Result<Vec<Vec<f64>>> {
    let n = states.len();
    let mut ov = Overlaps::default();
    let mut g = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in i..n {
            let v = ov.full(&states[i], &states[j], orders)?;
            g[i][j] = v;
            g[j][i] = v;
        }
    }
    Ok(g)
}

/// `int_0^{pi/2} Phi^2 dphi` by plain Gauss-Legendre at each given order.
///
/// Used to exhibit loss of square integrability: for a wall exponent of
/// `Phi^2` at or below `-1` the sequence grows without bound.
pub fn phi_norm_legendre_sequence(s: &EigenState, orders: &[usize]) -> Result<Vec<f64>> {
    orders
        .iter()
        .map(|&order| {
            let rule = GaussRule::legendre(order)?;
            Ok(rule.integrate_interval(0.0, FRAC_PI_2, |p| phi_factor(s, p).powi(2)))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{Branch, Couplings, Model};
    use crate::spectrum::QuantumNumbers;
    use crate::wavefunction::{alpha_factor, radial_factor, theta_factor};

    fn model(lambda: f64, br: Branch) -> Model {
        Model::line(Couplings::new(lambda, 6.0, 0.0, 1.0), br).unwrap()
    }

    fn brute(f: impl Fn(f64) -> f64, lo: f64, hi: f64) -> f64 {
        // composite Simpson
        let n = 20000;
        let h = (hi - lo) / n as f64;
        let mut acc = f(lo) + f(hi);
        for i in 1..n {
            let w = if i % 2 == 1 { 4.0 } else { 2.0 };
            acc += w * f(lo + i as f64 * h);
        }
        acc * h / 3.0
    }

    #[test]
    fn factor_overlaps_match_direct_integration() {
        let m = model(2.0, Branch::regular());
        let s = EigenState::new(&m, QuantumNumbers::new(1, 1, 2, 1)).unwrap();
        let cases: [(Factor, Box<dyn Fn(f64) -> f64>, f64); 4] = [
            (
                Factor::Phi,
                Box::new(|p| phi_factor(&s, p).powi(2)),
                FRAC_PI_2,
            ),
            (
                Factor::Theta,
                Box::new(|t| theta_factor(&s, t).powi(2)),
                FRAC_PI_2,
            ),
            (
                Factor::Alpha,
                Box::new(|a| alpha_factor(&s, a).powi(2)),
                FRAC_PI_2,
            ),
            (
                Factor::Radial,
                Box::new(|r| radial_factor(&s, r).powi(2)),
                14.0,
            ),
        ];
        for (which, f, hi) in cases {
            let q = factor_overlap(&s, &s, which, 64).unwrap();
            let b = brute(f, 0.0, hi);
            assert!((q - b).abs() < 1e-9 * b, "{which:?}: {q} vs {b}");
        }
    }

    #[test]
    fn ground_state_norm_is_positive() {
        let m = model(2.0, Branch::regular());
        let s = EigenState::new(&m, QuantumNumbers::GROUND).unwrap();
        let n = norm_constant(&s, QuadratureOrders::default()).unwrap();
        assert!(n.value > 0.0 && n.value.is_finite());
    }

    #[test]
    fn states_differing_in_n_are_orthogonal() {
        let m = model(2.0, Branch::regular());
        let a = EigenState::new(&m, QuantumNumbers::new(0, 0, 1, 0)).unwrap();
        let b = EigenState::new(&m, QuantumNumbers::new(0, 0, 1, 2)).unwrap();
        let o = QuadratureOrders::default();
        let cross = overlap(&a, &b, o).unwrap();
        let na = norm_constant(&a, o).unwrap().value;
        let nb = norm_constant(&b, o).unwrap().value;
        assert!(cross.abs() < 1e-8 * (na * nb).sqrt());
    }

    #[test]
    fn irregular_phi_norm_is_finite_and_converges() {
        let m = model(0.5, Branch::irregular());
        let s = EigenState::new(&m, QuantumNumbers::GROUND).unwrap();
        let n = norm_constant(&s, QuadratureOrders::default()).unwrap();
        assert!(n.value.is_finite() && n.value > 0.0);
        let phi = factor_overlap(&s, &s, Factor::Phi, 64).unwrap();
        let phi2 = factor_overlap(&s, &s, Factor::Phi, 128).unwrap();
        assert!(((phi - phi2) / phi).abs() < 1e-12);
    }

    #[test]
    fn legendre_sequence_grows_near_integrability_edge() {
        let m = model(0.74, Branch::irregular());
        let s = EigenState::new(&m, QuantumNumbers::GROUND).unwrap();
        let seq = phi_norm_legendre_sequence(&s, &[8, 16, 32, 64, 128]).unwrap();
        assert!(seq.windows(2).all(|w| w[1] > w[0]), "{seq:?}");
    }

    #[test]
    fn mirrored_cell_keeps_norm() {
        let br = Branch::regular();
        let mut mirrored = br;
        mirrored.eps1 = Sign::Minus;
        mirrored.eps2 = Sign::Minus;
        let s1 = EigenState::new(&model(2.0, br), QuantumNumbers::new(0, 1, 1, 1)).unwrap();
        let s2 = EigenState::new(&model(2.0, mirrored), QuantumNumbers::new(0, 1, 1, 1)).unwrap();
        let o = QuadratureOrders::default();
        let n1 = norm_constant(&s1, o).unwrap().value;
        let n2 = norm_constant(&s2, o).unwrap().value;
        assert!((n1 - n2).abs() < 1e-14 * n1);
    }
}
