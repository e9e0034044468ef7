//! Cartesian, collective and hyperspherical coordinates of the four-body system.
//!
//! The collective map is one half of the 4x4 Hadamard matrix: orthogonal and
//! its own inverse. The hyperspherical map follows
//! `R = r cos(alpha)`, `s = r sin(alpha) cos(theta)`,
//! `t = r sin(alpha) sin(theta) sin(phi)`, `u = r sin(alpha) sin(theta) cos(phi)`.

use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// Positions of the four particles on the line.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CartesianPoint(pub [f64; 4]);

/// Half-sum / half-difference coordinates `(R, s, t, u)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CollectivePoint {
    pub big_r: f64,
    pub s: f64,
    pub t: f64,
    pub u: f64,
}

/// Which angular ranges the hyperspherical chart uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
pub enum AngleRange {
    /// Line case: `alpha, theta in [0, pi]`, `phi in [0, 2 pi)`.
    #[default]
    Full,
    /// D-dimensional case, where `R, s, t, u` are vector norms:
    /// every angle in `[0, pi/2]`.
    Octant,
}

/// Hyperspherical point. `degenerate` is set when at least one angle was
/// assigned by convention (set to 0) because the chart is singular there.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HyperPoint {
    pub r: f64,
    pub alpha: f64,
    pub theta: f64,
    pub phi: f64,
    pub degenerate: bool,
}

impl HyperPoint {
    pub fn new(r: f64, alpha: f64, theta: f64, phi: f64) -> Self {
        let degenerate = r == 0.0 || alpha.sin() == 0.0 || theta.sin() == 0.0;
        Self {
            r,
            alpha,
            theta,
            phi,
            degenerate,
        }
    }
}

impl CollectivePoint {
    pub fn new(big_r: f64, s: f64, t: f64, u: f64) -> Self {
        Self { big_r, s, t, u }
    }

    pub fn as_array(&self) -> [f64; 4] {
        [self.big_r, self.s, self.t, self.u]
    }

    pub fn norm_sq(&self) -> f64 {
        self.as_array().iter().map(|v| v * v).sum()
    }
}

impl CartesianPoint {
    pub fn norm_sq(&self) -> f64 {
        self.0.iter().map(|v| v * v).sum()
    }
}

fn hadamard_half(x: [f64; 4]) -> [f64; 4] {
    let [x1, x2, x3, x4] = x;
    [
        0.5 * (x1 + x2 + x3 + x4),
        0.5 * (x1 + x2 - x3 - x4),
        0.5 * (x1 + x3 - x2 - x4),
        0.5 * (x1 + x4 - x2 - x3),
    ]
}

pub fn to_collective(p: &CartesianPoint) -> CollectivePoint {
    let [big_r, s, t, u] = hadamard_half(p.0);
    CollectivePoint { big_r, s, t, u }
}

/// Inverse of [`to_collective`]; the map is an involution.
pub fn from_collective(q: &CollectivePoint) -> CartesianPoint {
    CartesianPoint(hadamard_half(q.as_array()))
}

/// Componentwise collective map for particles in `D` dimensions.
pub fn to_collective_vectors<const D: usize>(x: &[[f64; D]; 4]) -> [[f64; D]; 4] {
    let mut out = [[0.0; D]; 4];
    for k in 0..D {
        let col = hadamard_half([x[0][k], x[1][k], x[2][k], x[3][k]]);
        for (i, v) in col.into_iter().enumerate() {
            out[i][k] = v;
        }
    }
    out
}

/// Collective to hyperspherical coordinates.
///
/// In [`AngleRange::Octant`] mode the absolute values of `R, s, t, u` are
/// used, since they play the role of vector lengths.
pub fn to_hyperspherical(q: &CollectivePoint, range: AngleRange) -> HyperPoint {
    let (big_r, s, t, u) = match range {
        AngleRange::Full => (q.big_r, q.s, q.t, q.u),
        AngleRange::Octant => (q.big_r.abs(), q.s.abs(), q.t.abs(), q.u.abs()),
    };
    let rho = t.hypot(u);
    let sigma = s.hypot(rho);
    let r = big_r.hypot(sigma);
    let mut degenerate = false;

    if r == 0.0 {
        return HyperPoint {
            r,
            alpha: 0.0,
            theta: 0.0,
            phi: 0.0,
            degenerate: true,
        };
    }
    let alpha = sigma.atan2(big_r);
    let (theta, phi) = if sigma == 0.0 {
        degenerate = true;
        (0.0, 0.0)
    } else if rho == 0.0 {
        degenerate = true;
        (rho.atan2(s), 0.0)
    } else {
        let mut phi = t.atan2(u);
        if phi < 0.0 {
            phi += 2.0 * PI;
        }
        if phi >= 2.0 * PI {
            phi = 0.0;
        }
        (rho.atan2(s), phi)
    };
    HyperPoint {
        r,
        alpha,
        theta,
        phi,
        degenerate,
    }
}

pub fn from_hyperspherical(h: &HyperPoint) -> CollectivePoint {
    let (sa, ca) = h.alpha.sin_cos();
    let (st, ct) = h.theta.sin_cos();
    let (sp, cp) = h.phi.sin_cos();
    CollectivePoint {
        big_r: h.r * ca,
        s: h.r * sa * ct,
        t: h.r * sa * st * sp,
        u: h.r * sa * st * cp,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;
    use std::f64::consts::FRAC_PI_4;

    #[test]
    fn collective_examples() {
        let q = to_collective(&CartesianPoint([1.0, 1.0, 1.0, 1.0]));
        assert_eq!(q, CollectivePoint::new(2.0, 0.0, 0.0, 0.0));
        let q = to_collective(&CartesianPoint([1.0, 2.0, 3.0, 4.0]));
        assert_eq!(q, CollectivePoint::new(5.0, -2.0, -1.0, 0.0));
        assert_eq!(from_collective(&q), CartesianPoint([1.0, 2.0, 3.0, 4.0]));
        assert_eq!(
            from_collective(&CollectivePoint::new(2.0, 0.0, 0.0, 0.0)),
            CartesianPoint([1.0; 4])
        );
    }

    #[test]
    fn hyperspherical_examples() {
        let h = to_hyperspherical(&CollectivePoint::new(2.0, 0.0, 0.0, 0.0), AngleRange::Full);
        assert_eq!(
            (h.r, h.alpha, h.theta, h.phi, h.degenerate),
            (2.0, 0.0, 0.0, 0.0, true)
        );

        let h = to_hyperspherical(&CollectivePoint::new(0.0, 0.0, 1.0, 1.0), AngleRange::Full);
        assert!((h.r - 2f64.sqrt()).abs() < 1e-15);
        assert!((h.alpha - FRAC_PI_2).abs() < 1e-15);
        assert!((h.theta - FRAC_PI_2).abs() < 1e-15);
        assert!((h.phi - FRAC_PI_4).abs() < 1e-15);
        assert!(!h.degenerate);

        let q = from_hyperspherical(&HyperPoint::new(1.0, FRAC_PI_2, FRAC_PI_2, FRAC_PI_2));
        assert!(q.big_r.abs() < 1e-15 && q.s.abs() < 1e-15);
        assert!((q.t - 1.0).abs() < 1e-15 && q.u.abs() < 1e-15);

        let q = from_hyperspherical(&HyperPoint::new(1.0, 0.0, 1.234, 5.0));
        assert_eq!(q, CollectivePoint::new(1.0, 0.0, 0.0, 0.0));

        let q = from_hyperspherical(&HyperPoint::new(
            2f64.sqrt(),
            FRAC_PI_2,
            FRAC_PI_2,
            FRAC_PI_4,
        ));
        assert!(q.big_r.abs() < 1e-15 && q.s.abs() < 1e-15);
        assert!((q.t - 1.0).abs() < 1e-15 && (q.u - 1.0).abs() < 1e-15);
    }

    #[test]
    fn negative_components_give_full_range_angles() {
        let h = to_hyperspherical(
            &CollectivePoint::new(-1.0, -0.5, -0.3, -0.2),
            AngleRange::Full,
        );
        assert!(h.alpha > FRAC_PI_2 && h.theta > FRAC_PI_2 && h.phi > PI);
        let o = to_hyperspherical(
            &CollectivePoint::new(-1.0, -0.5, -0.3, -0.2),
            AngleRange::Octant,
        );
        for a in [o.alpha, o.theta, o.phi] {
            assert!((0.0..=FRAC_PI_2).contains(&a));
        }
    }

    #[test]
    fn theta_pole_flagged() {
        let h = to_hyperspherical(&CollectivePoint::new(1.0, 1.0, 0.0, 0.0), AngleRange::Full);
        assert!(h.degenerate);
        assert_eq!(h.phi, 0.0);
        assert!((h.theta).abs() < 1e-15);
    }

    #[test]
    fn vector_map_is_componentwise() {
        let x = [[1.0, 0.5], [2.0, -1.0], [3.0, 0.0], [4.0, 2.0]];
        let y = to_collective_vectors(&x);
        assert_eq!(y[0][0], 5.0);
        assert_eq!(y[1][0], -2.0);
        let back = to_collective_vectors(&y);
        assert_eq!(back, x);
    }
}
