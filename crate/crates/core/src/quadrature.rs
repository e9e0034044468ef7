//! Gauss quadrature rules (Legendre, Jacobi, generalized Laguerre).
//!
//! Nodes are the eigenvalues of the Jacobi matrix of the weight's three-term
//! recurrence, polished by Newton steps on the orthonormal polynomial of
//! degree `order`. Weights are the Christoffel numbers
//! `1 / sum_j p_j(x_i)^2` of the orthonormal system.

use statrs::function::gamma::ln_gamma;

use crate::error::{Error, Result};
use crate::linalg::SymTridiagonal;

/// Default order for compact-interval rules.
pub const DEFAULT_ANGULAR_ORDER: usize = 64;
/// Default order for the half-line rule.
pub const DEFAULT_RADIAL_ORDER: usize = 64;
/// Largest supported order.
pub const MAX_ORDER: usize = 400;

#[derive(Debug, Clone)]
pub struct GaussRule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

/// Monic recurrence `p_{j+1} = (x - alpha_j) p_j - beta_j p_{j-1}` plus the
/// total mass `mu0` of the weight.
struct Recurrence {
    alpha: Vec<f64>,
    /// `sqrt(beta_j)` for `j = 1..order`; index 0 unused.
    sqrt_beta: Vec<f64>,
    ln_mu0: f64,
}

impl GaussRule {
    /// Gauss-Legendre on `[-1, 1]`.
    pub fn legendre(order: usize) -> Result<Self> {
        Self::jacobi(order, 0.0, 0.0)
    }

    /// Gauss-Jacobi for the weight `(1 - x)^a (1 + x)^b` on `[-1, 1]`.
    pub fn jacobi(order: usize, a: f64, b: f64) -> Result<Self> {
        check_order(order)?;
        if !(a > -1.0 && b > -1.0) {
            return Err(Error::Domain(format!(
                "Gauss-Jacobi exponents must exceed -1, got ({a}, {b})"
            )));
        }
        let ab = a + b;
        let mut alpha = Vec::with_capacity(order + 1);
        let mut sqrt_beta = vec![0.0; order + 1];
        for j in 0..=order {
            let jf = j as f64;
            alpha.push(if j == 0 {
                (b - a) / (ab + 2.0)
            } else {
                (b * b - a * a) / ((2.0 * jf + ab) * (2.0 * jf + ab + 2.0))
            });
            if j == 1 {
                sqrt_beta[1] =
                    (4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab).powi(2) * (3.0 + ab))).sqrt();
            } else if j > 1 {
                let s = 2.0 * jf + ab;
                sqrt_beta[j] = (4.0 * jf * (jf + a) * (jf + b) * (jf + ab)
                    / (s * s * (s + 1.0) * (s - 1.0)))
                    .sqrt();
            }
        }
        let ln_mu0 = (ab + 1.0) * std::f64::consts::LN_2 + ln_gamma(a + 1.0) + ln_gamma(b + 1.0)
            - ln_gamma(ab + 2.0);
        Ok(Self::from_recurrence(
            order,
            &Recurrence {
                alpha,
                sqrt_beta,
                ln_mu0,
            },
        ))
    }

    /// Generalized Gauss-Laguerre for the weight `x^q e^{-x}` on `[0, inf)`.
    pub fn laguerre(order: usize, q: f64) -> Result<Self> {
        check_order(order)?;
        if !(q > -1.0) {
            return Err(Error::Domain(format!(
                "Gauss-Laguerre exponent must exceed -1, got {q}"
            )));
        }
        let alpha = (0..=order).map(|j| 2.0 * j as f64 + q + 1.0).collect();
        let sqrt_beta = (0..=order)
            .map(|j| {
                let jf = j as f64;
                if j == 0 {
                    0.0
                } else {
                    (jf * (jf + q)).sqrt()
                }
            })
            .collect();
        Ok(Self::from_recurrence(
            order,
            &Recurrence {
                alpha,
                sqrt_beta,
                ln_mu0: ln_gamma(q + 1.0),
            },
        ))
    }

    fn from_recurrence(order: usize, rec: &Recurrence) -> Self {
        let diag = rec.alpha[..order].to_vec();
        let off = rec.sqrt_beta[1..order].to_vec();
        let jacobi = SymTridiagonal::new(diag, off);
        let mut nodes = jacobi.eigenvalues();
        let mut weights = Vec::with_capacity(order);
        for x in nodes.iter_mut() {
            for _ in 0..3 {
                let (p, dp, _) = orthonormal_eval(rec, order, *x);
                if dp == 0.0 || !dp.is_finite() {
                    break;
                }
                let step = p / dp;
                if !step.is_finite() || step.abs() > 1e-6 * (1.0 + x.abs()) {
                    break;
                }
                *x -= step;
            }
            let (_, _, ln_sum) = orthonormal_eval(rec, order, *x);
            weights.push((rec.ln_mu0 - ln_sum).exp());
        }
        Self { nodes, weights }
    }

    pub fn order(&self) -> usize {
        self.nodes.len()
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// `sum_i w_i f(x_i)`.
    pub fn integrate<F: FnMut(f64) -> f64>(&self, mut f: F) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }

    /// For a Legendre rule: integrate `f` over `[lo, hi]`.
    pub fn integrate_interval<F: FnMut(f64) -> f64>(&self, lo: f64, hi: f64, mut f: F) -> f64 {
        let half = 0.5 * (hi - lo);
        let mid = 0.5 * (hi + lo);
        half * self.integrate(|t| f(mid + half * t))
    }
}

fn check_order(order: usize) -> Result<()> {
    if order == 0 || order > MAX_ORDER {
        Err(Error::Domain(format!(
            "quadrature order must lie in 1..={MAX_ORDER}, got {order}"
        )))
    } else {
        Ok(())
    }
}

/// Orthonormal polynomial of degree `order` and its derivative at `x` (both
/// scaled by a common positive factor), together with
/// `ln sum_{j<order} phat_j(x)^2` for the probability-normalized weight.
fn orthonormal_eval(rec: &Recurrence, order: usize, x: f64) -> (f64, f64, f64) {
    const BIG: f64 = 1e100;
    let mut p_prev = 0.0;
    let mut p = 1.0;
    let mut d_prev = 0.0;
    let mut d = 0.0;
    let mut sum = 0.0;
    let mut ln_scale = 0.0;
    for j in 0..order {
        sum += p * p;
        let sb_next = rec.sqrt_beta[j + 1];
        let sb = rec.sqrt_beta[j];
        let p_next = ((x - rec.alpha[j]) * p - sb * p_prev) / sb_next;
        let d_next = (p + (x - rec.alpha[j]) * d - sb * d_prev) / sb_next;
        p_prev = p;
        p = p_next;
        d_prev = d;
        d = d_next;
        if p.abs() > BIG || d.abs() > BIG {
            p /= BIG;
            p_prev /= BIG;
            d /= BIG;
            d_prev /= BIG;
            sum /= BIG * BIG;
            ln_scale += BIG.ln();
        }
    }
    (p, d, sum.ln() + 2.0 * ln_scale)
}
