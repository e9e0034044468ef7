use serde::Serialize;

use super::{OdeSpec, EXTRAPOLATION_LIMIT, MIN_GRID};
use crate::error::{Error, Result};
use crate::linalg::SymTridiagonal;
use crate::quadrature::GaussRule;

const CELL_RULE_ORDER: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Scheme {
    /// Three-point Laplacian on the nodes, `f = 0` at both ends.
    Dirichlet,
    /// Cell-centred scheme for `g = f / (sin^nu0 cos^nu1)` with the weight
    /// `(sin^nu0 cos^nu1)^2`; used when a wall follows the irregular root.
    Shifted,
}

/// Eigenvalues from two grids and their Richardson extrapolation.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GridSolve {
    pub scheme: Scheme,
    pub grids: [usize; 2],
    pub steps: [f64; 2],
    pub coarse: Vec<f64>,
    pub fine: Vec<f64>,
    /// `(4 fine - coarse) / 3`, ascending.
    pub values: Vec<f64>,
}

fn dirichlet_matrix(spec: &OdeSpec, n: usize) -> SymTridiagonal {
    let h = (spec.hi - spec.lo) / n as f64;
    let inv_h2 = 1.0 / (h * h);
    let diag = (1..n)
        .map(|i| 2.0 * inv_h2 + spec.potential(spec.lo + i as f64 * h))
        .collect();
    SymTridiagonal::new(diag, vec![-inv_h2; n - 2])
}

fn shifted_matrix(spec: &OdeSpec, n: usize) -> Result<SymTridiagonal> {
    let (nu0, nu1) = (spec.wall_exponent(0), spec.wall_exponent(1));
    if !(nu0 > -0.5 && nu1 > -0.5) {
        return Err(Error::Domain(format!(
            "wall exponents ({nu0}, {nu1}) are not square integrable"
        )));
    }
    let (lo, hi) = (spec.lo, spec.hi);
    let h = (hi - lo) / n as f64;
    let weight = |x: f64| x.sin().powf(2.0 * nu0) * x.cos().powf(2.0 * nu1);
    let v_eff = |x: f64| {
        let (s, c) = x.sin_cos();
        let log_deriv = nu0 * c / s - nu1 * s / c;
        let d_log_deriv = -nu0 / (s * s) - nu1 / (c * c);
        spec.potential(x) - (d_log_deriv + log_deriv * log_deriv)
    };

    let interior = GaussRule::legendre(CELL_RULE_ORDER)?;
    let left_rule = GaussRule::jacobi(CELL_RULE_ORDER, 0.0, 2.0 * nu0)?;
    let right_rule = GaussRule::jacobi(CELL_RULE_ORDER, 2.0 * nu1, 0.0)?;
    let half = 0.5 * h;
    let mass: Vec<f64> = (0..n)
        .map(|i| {
            let a = lo + i as f64 * h;
            if i == 0 {
                // x^{2 nu0} pulled into the rule's weight
                half.powf(1.0 + 2.0 * nu0)
                    * left_rule.integrate(|t| {
                        let x = a + half * (1.0 + t);
                        (x.sin() / x).powf(2.0 * nu0) * x.cos().powf(2.0 * nu1)
                    })
            } else if i == n - 1 {
                half.powf(1.0 + 2.0 * nu1)
                    * right_rule.integrate(|t| {
                        let x = a + half * (1.0 + t);
                        let y = hi - x;
                        x.sin().powf(2.0 * nu0) * (y.sin() / y).powf(2.0 * nu1)
                    })
            } else {
                interior.integrate_interval(a, a + h, weight)
            }
        })
        .collect();
    let face: Vec<f64> = (1..n).map(|j| weight(lo + j as f64 * h)).collect();

    let diag = (0..n)
        .map(|i| {
            let left = if i > 0 { face[i - 1] } else { 0.0 };
            let right = if i + 1 < n { face[i] } else { 0.0 };
            let centre = lo + (i as f64 + 0.5) * h;
            ((left + right) / h) / mass[i] + v_eff(centre)
        })
        .collect();
    let off = (0..n - 1)
        .map(|i| -(face[i] / h) / (mass[i].sqrt() * mass[i + 1].sqrt()))
        .collect();
    Ok(SymTridiagonal::new(diag, off))
}

fn solve_on(spec: &OdeSpec, scheme: Scheme, count: usize, n: usize) -> Result<Vec<f64>> {
    let matrix = match scheme {
        Scheme::Shifted => shifted_matrix(spec, n)?,
        Scheme::Dirichlet => dirichlet_matrix(spec, n),
    };
    Ok(matrix.lowest(count))
}

/// Lowest `count` eigenvalues of `-f'' + V f` on the spec's interval from
/// grids of `grid` and `2 grid` intervals plus one Richardson step.
///
/// Uses [`Scheme::Shifted`] when a wall follows the irregular root or is
/// rough (see [`OdeSpec::needs_shifted_grid`]) and [`Scheme::Dirichlet`]
/// otherwise.
pub fn sl_eigenvalues(spec: &OdeSpec, count: usize, grid: usize) -> Result<GridSolve> {
    let scheme = if spec.needs_shifted_grid() {
        Scheme::Shifted
    } else {
        Scheme::Dirichlet
    };
    sl_eigenvalues_with(spec, scheme, count, grid)
}

/// [`sl_eigenvalues`] with an explicit scheme. The shifted scheme needs an
/// angular equation on `[0, pi/2]`.
pub fn sl_eigenvalues_with(
    spec: &OdeSpec,
    scheme: Scheme,
    count: usize,
    grid: usize,
) -> Result<GridSolve> {
    spec.check()?;
    if scheme == Scheme::Shifted && spec.kind == super::OdeKind::RadialEq {
        return Err(Error::Unsupported(
            "the shifted scheme applies to angular equations".into(),
        ));
    }
    if scheme == Scheme::Dirichlet && spec.is_irregular() {
        return Err(Error::Unsupported(
            "Dirichlet walls cannot represent the irregular root".into(),
        ));
    }
    if count == 0 {
        return Err(Error::Domain("count must be at least 1".into()));
    }
    if grid < MIN_GRID {
        return Err(Error::Domain(format!(
            "grid must be at least {MIN_GRID}, got {grid}"
        )));
    }
    let grids = [grid, 2 * grid];
    let coarse = solve_on(spec, scheme, count, grids[0])?;
    let fine = solve_on(spec, scheme, count, grids[1])?;
    let values: Vec<f64> = coarse
        .iter()
        .zip(&fine)
        .map(|(c, f)| (4.0 * f - c) / 3.0)
        .collect();
    for (v, f) in values.iter().zip(&fine) {
        let change = ((v - f) / v).abs();
        if !(change <= EXTRAPOLATION_LIMIT) {
            return Err(Error::Accuracy {
                what: format!("{:?} eigenvalue extrapolation", spec.kind),
                change,
                limit: EXTRAPOLATION_LIMIT,
            });
        }
    }
    let width = spec.hi - spec.lo;
    Ok(GridSolve {
        scheme,
        grids,
        steps: grids.map(|g| width / g as f64),
        coarse,
        fine,
        values,
    })
}

/// `max |-f'' + V f - value f| / max |f|` over the nodes of a uniform grid
/// with `grid` intervals, skipping 5 nodes at each end.
pub fn residual(spec: &OdeSpec, f: &dyn Fn(f64) -> f64, value: f64, grid: usize) -> f64 {
    residual_with_margin(spec, f, value, grid, 5)
}

/// As [`residual`], skipping `margin` nodes at each end. `f''` uses the
/// five-point central stencil.
pub fn residual_with_margin(
    spec: &OdeSpec,
    f: &dyn Fn(f64) -> f64,
    value: f64,
    grid: usize,
    margin: usize,
) -> f64 {
    let margin = margin.max(2);
    let h = (spec.hi - spec.lo) / grid as f64;
    let samples: Vec<f64> = (0..=grid).map(|j| f(spec.lo + j as f64 * h)).collect();
    let nodes = margin..=grid.saturating_sub(margin);
    let scale = nodes.clone().map(|j| samples[j].abs()).fold(0.0, f64::max);
    if scale == 0.0 {
        return 0.0;
    }
    let worst = nodes
        .map(|j| {
            let x = spec.lo + j as f64 * h;
            let second = (-samples[j + 2] + 16.0 * samples[j + 1] - 30.0 * samples[j]
                + 16.0 * samples[j - 1]
                - samples[j - 2])
                / (12.0 * h * h);
            (-second + (spec.potential(x) - value) * samples[j]).abs()
        })
        .fold(0.0, f64::max);
    worst / scale
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::WallRoot;

    #[test]
    fn phi_equation_lowest_values() {
        // a = 1.5: B_n = 4(1/2 + a + n)^2
        let s = sl_eigenvalues(&OdeSpec::phi(2.0), 2, 2000).unwrap();
        assert!((s.values[0] - 16.0).abs() < 1e-4 * 16.0);
        assert!((s.values[1] - 36.0).abs() < 1e-4 * 36.0);
        let ratio = (s.coarse[0] - 16.0) / (s.fine[0] - 16.0);
        assert!((3.5..=4.5).contains(&ratio), "{ratio}");
    }

    #[test]
    fn radial_equation_lowest_value() {
        // beta + D = 100: kappa = 10, E = 2(1 + 10)
        let s = sl_eigenvalues(&OdeSpec::radial(100.0, 1.0), 2, 2000).unwrap();
        assert!((s.values[0] - 22.0).abs() < 1e-4 * 22.0);
        assert!((s.values[1] - 26.0).abs() < 1e-4 * 26.0);
    }

    #[test]
    fn harmonic_free_radial() {
        // A = 3/4 -> kappa = 1, lowest E = 4 omega
        let s = sl_eigenvalues(&OdeSpec::radial(1.0, 2.0), 1, 1000).unwrap();
        assert!((s.values[0] - 8.0).abs() < 1e-6 * 8.0);
    }

    #[test]
    fn shifted_grid_finds_irregular_values() {
        // lambda = 0.5 with the irregular root at both walls:
        // a = -sqrt(3)/2, b_0 = 1 + 2a
        let a = -0.75f64.sqrt();
        let spec = OdeSpec::phi(0.5).with_walls([WallRoot::Irregular; 2]);
        let s = sl_eigenvalues(&spec, 3, 2000).unwrap();
        assert_eq!(s.scheme, Scheme::Shifted);
        for n in 0..3 {
            let exact = (1.0 + 2.0 * a + 2.0 * n as f64).powi(2);
            assert!(
                (s.values[n] - exact).abs() < 1e-2 * exact.max(1.0),
                "{n}: {}",
                s.values[n]
            );
        }
    }

    #[test]
    fn both_schemes_agree_on_regular_walls() {
        // C_m0 = (2m + b_0 + c + 1)^2 with b_0 = 4, c = 1.5
        let spec = OdeSpec::theta(16.0, 2.0);
        let d = sl_eigenvalues_with(&spec, Scheme::Dirichlet, 2, 1000).unwrap();
        let s = sl_eigenvalues_with(&spec, Scheme::Shifted, 2, 1000).unwrap();
        for (m, exact) in [42.25, 72.25].into_iter().enumerate() {
            assert!((d.values[m] - exact).abs() < 1e-4 * exact);
            assert!(
                (s.values[m] - exact).abs() < 1e-4 * exact,
                "{}",
                s.values[m]
            );
        }
    }

    #[test]
    fn bad_inputs() {
        assert!(sl_eigenvalues(&OdeSpec::phi(2.0), 0, 2000).is_err());
        assert!(sl_eigenvalues(&OdeSpec::phi(2.0), 1, 100).is_err());
        assert!(sl_eigenvalues(&OdeSpec::phi(-0.3), 1, 400).is_err());
    }

    #[test]
    fn residual_examples() {
        let spec = OdeSpec::phi(2.0);
        let f = |x: f64| (2.0 * x).sin().powi(2);
        assert!(residual(&spec, &f, 16.0, 2000) < 1e-6);
        assert!(residual(&spec, &f, 17.0, 2000) > 0.5);
    }
}
