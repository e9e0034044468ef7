//! Gegenbauer, Jacobi and generalized Laguerre polynomials.
//!
//! Values are produced by the ascending three-term recurrence in the degree.
//! The degrees reached by the eigenfunctions of this crate stay small, and the
//! forward recurrence is accurate to a few ulps per step for degrees up to
//! [`DEGREE_CEILING`] on the orthogonality interval. No backward stabilization
//! is attempted beyond that.
//!
//! [`series`] holds an independent explicit finite-sum evaluation used as a
//! test oracle.

use crate::error::{Error, Result};

/// Largest degree for which the recurrences are exercised and tested.
pub const DEGREE_CEILING: u32 = 30;

/// One member of a classical orthogonal polynomial family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PolyFamily {
    /// `C_n^{(alpha)}`, `alpha > -1/2`.
    Gegenbauer { degree: u32, alpha: f64 },
    /// `P_n^{(a, b)}`, `a, b > -1`.
    Jacobi { degree: u32, a: f64, b: f64 },
    /// `L_k^{(q)}`, `q > -1`.
    Laguerre { degree: u32, q: f64 },
}

impl PolyFamily {
    pub fn gegenbauer(degree: u32, alpha: f64) -> Result<Self> {
        check_gegenbauer(alpha)?;
        Ok(PolyFamily::Gegenbauer { degree, alpha })
    }

    pub fn jacobi(degree: u32, a: f64, b: f64) -> Result<Self> {
        check_jacobi(a, b)?;
        Ok(PolyFamily::Jacobi { degree, a, b })
    }

    pub fn laguerre(degree: u32, q: f64) -> Result<Self> {
        check_laguerre(q)?;
        Ok(PolyFamily::Laguerre { degree, q })
    }

    pub fn degree(&self) -> u32 {
        match *self {
            PolyFamily::Gegenbauer { degree, .. }
            | PolyFamily::Jacobi { degree, .. }
            | PolyFamily::Laguerre { degree, .. } => degree,
        }
    }

    /// Evaluate by recurrence.
    pub fn eval(&self, x: f64) -> Result<f64> {
        match *self {
            PolyFamily::Gegenbauer { degree, alpha } => gegenbauer(degree, alpha, x),
            PolyFamily::Jacobi { degree, a, b } => jacobi(degree, a, b, x),
            PolyFamily::Laguerre { degree, q } => laguerre(degree, q, x),
        }
    }
}

fn check_gegenbauer(alpha: f64) -> Result<()> {
    if alpha.is_finite() && alpha > -0.5 {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "Gegenbauer parameter must exceed -1/2, got {alpha}"
        )))
    }
}

fn check_jacobi(a: f64, b: f64) -> Result<()> {
    if a.is_finite() && b.is_finite() && a > -1.0 && b > -1.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "Jacobi parameters must exceed -1, got ({a}, {b})"
        )))
    }
}

fn check_laguerre(q: f64) -> Result<()> {
    if q.is_finite() && q > -1.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "Laguerre parameter must exceed -1, got {q}"
        )))
    }
}

/// Gegenbauer polynomial `C_n^{(alpha)}(x)`.
pub fn gegenbauer(n: u32, alpha: f64, x: f64) -> Result<f64> {
    check_gegenbauer(alpha)?;
    Ok(gegenbauer_unchecked(n, alpha, x))
}

/// Jacobi polynomial `P_n^{(a, b)}(x)`.
pub fn jacobi(n: u32, a: f64, b: f64, x: f64) -> Result<f64> {
    check_jacobi(a, b)?;
    Ok(jacobi_unchecked(n, a, b, x))
}

/// Generalized Laguerre polynomial `L_k^{(q)}(x)` for `x >= 0`.
pub fn laguerre(k: u32, q: f64, x: f64) -> Result<f64> {
    check_laguerre(q)?;
    if !(x >= 0.0) {
        return Err(Error::Domain(format!(
            "Laguerre argument must be non-negative, got {x}"
        )));
    }
    Ok(laguerre_unchecked(k, q, x))
}

pub(crate) fn gegenbauer_unchecked(n: u32, alpha: f64, x: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut cur = 2.0 * alpha * x;
    for k in 2..=n {
        let k = f64::from(k);
        let next = (2.0 * x * (k + alpha - 1.0) * cur - (k + 2.0 * alpha - 2.0) * prev) / k;
        prev = cur;
        cur = next;
    }
    cur
}

pub(crate) fn jacobi_unchecked(n: u32, a: f64, b: f64, x: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut cur = (a + 1.0) + 0.5 * (a + b + 2.0) * (x - 1.0);
    for k in 2..=n {
        let k = f64::from(k);
        let s = 2.0 * k + a + b;
        let c1 = 2.0 * k * (k + a + b) * (s - 2.0);
        let c2 = (s - 1.0) * (s * (s - 2.0) * x + a * a - b * b);
        let c3 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * s;
        let next = (c2 * cur - c3 * prev) / c1;
        prev = cur;
        cur = next;
    }
    cur
}

pub(crate) fn laguerre_unchecked(k: u32, q: f64, x: f64) -> f64 {
    if k == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut cur = 1.0 + q - x;
    for j in 2..=k {
        let j = f64::from(j);
        let next = ((2.0 * j - 1.0 + q - x) * cur - (j - 1.0 + q) * prev) / j;
        prev = cur;
        cur = next;
    }
    cur
}

pub mod series {
    //! Explicit finite sums evaluated in exact rational arithmetic. Every
    //! `f64` input is a dyadic rational, so the only rounding is the final
    //! conversion; cancellation between terms costs nothing.

    use num_bigint::BigInt;
    use num_rational::BigRational;
    use num_traits::{One, Signed, ToPrimitive, Zero};

    use super::{check_gegenbauer, check_jacobi, check_laguerre, PolyFamily};
    use crate::error::{Error, Result};

    fn exact(v: f64) -> Result<BigRational> {
        BigRational::from_float(v)
            .ok_or_else(|| Error::Domain(format!("{v} has no exact rational value")))
    }

    fn int(k: u32) -> BigRational {
        BigRational::from_integer(BigInt::from(k))
    }

    /// Generalized binomial coefficient `binom(top, k)` for real `top`.
    fn binom(top: &BigRational, k: u32) -> BigRational {
        (0..k).fold(BigRational::one(), |acc, i| {
            acc * (top - int(i)) / int(i + 1)
        })
    }

    /// Rising factorial `(x)_k`.
    fn pochhammer(x: &BigRational, k: u32) -> BigRational {
        (0..k).fold(BigRational::one(), |acc, i| acc * (x + int(i)))
    }

    fn factorial(k: u32) -> BigRational {
        (1..=k).fold(BigRational::one(), |acc, i| acc * int(i))
    }

    fn signed(k: u32, v: BigRational) -> BigRational {
        if k.is_multiple_of(2) {
            v
        } else {
            -v
        }
    }

    /// Evaluate `family` at `x` through its explicit finite sum.
    pub fn series_oracle(family: &PolyFamily, x: f64) -> Result<f64> {
        let xr = exact(x)?;
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let total = match *family {
            PolyFamily::Gegenbauer { degree: n, alpha } => {
                check_gegenbauer(alpha)?;
                // C_n(x) = sum_k (-1)^k (alpha)_{n-k} / (k! (n-2k)!) (2x)^{n-2k}
                let alpha = exact(alpha)?;
                let two_x = &xr + &xr;
                (0..=n / 2)
                    .map(|k| {
                        let coef =
                            pochhammer(&alpha, n - k) / (factorial(k) * factorial(n - 2 * k));
                        signed(
                            k,
                            coef * num_traits::pow(two_x.clone(), (n - 2 * k) as usize),
                        )
                    })
                    .fold(BigRational::zero(), |a, t| a + t)
            }
            PolyFamily::Jacobi { degree: n, a, b } => {
                check_jacobi(a, b)?;
                // P_n(x) = sum_s binom(n+a, n-s) binom(n+b, s) ((x-1)/2)^s ((x+1)/2)^{n-s}
                let lo = (&xr - BigRational::one()) * &half;
                let hi = (&xr + BigRational::one()) * &half;
                let top_a = int(n) + exact(a)?;
                let top_b = int(n) + exact(b)?;
                (0..=n)
                    .map(|s| {
                        binom(&top_a, n - s)
                            * binom(&top_b, s)
                            * num_traits::pow(lo.clone(), s as usize)
                            * num_traits::pow(hi.clone(), (n - s) as usize)
                    })
                    .fold(BigRational::zero(), |a, t| a + t)
            }
            PolyFamily::Laguerre { degree: k, q } => {
                check_laguerre(q)?;
                if !(x >= 0.0) {
                    return Err(Error::Domain(format!(
                        "Laguerre argument must be non-negative, got {x}"
                    )));
                }
                // L_k(x) = sum_i (-1)^i binom(k+q, k-i) x^i / i!
                let top = int(k) + exact(q)?;
                (0..=k)
                    .map(|i| {
                        signed(
                            i,
                            binom(&top, k - i) * num_traits::pow(xr.clone(), i as usize)
                                / factorial(i),
                        )
                    })
                    .fold(BigRational::zero(), |a, t| a + t)
            }
        };
        Ok(to_f64(&total))
    }

    /// Correctly rounded up to the last bit of the quotient.
    fn to_f64(v: &BigRational) -> f64 {
        if v.is_zero() {
            return 0.0;
        }
        // scale so the integer quotient carries 64 significant bits
        let (num, den) = (v.numer().abs(), v.denom().clone());
        let shift = num.bits() as i64 - den.bits() as i64 - 64;
        let q = if shift >= 0 {
            num / (den << shift as usize)
        } else {
            (num << (-shift) as usize) / den
        };
        let mag = q.to_f64().unwrap_or(f64::INFINITY) * 2f64.powi(shift as i32);
        if v.is_negative() {
            -mag
        } else {
            mag
        }
    }
}

#[cfg(test)]
mod tests {
    use super::series::series_oracle;
    use super::*;

    #[test]
    fn gegenbauer_examples() {
        assert_eq!(gegenbauer(0, 1.0, 0.3).unwrap(), 1.0);
        assert_eq!(gegenbauer(1, 1.0, 0.5).unwrap(), 1.0);
        assert!(gegenbauer(2, 1.0, 0.5).unwrap().abs() < 1e-15);
        // oracle agrees on the derived value 4x^2 - 1
        let f = PolyFamily::gegenbauer(2, 1.0).unwrap();
        assert!(series_oracle(&f, 0.5).unwrap().abs() < 1e-15);
    }

    #[test]
    fn jacobi_examples() {
        assert_eq!(jacobi(0, 2.0, 1.0, -0.7).unwrap(), 1.0);
        assert_eq!(jacobi(1, 2.0, 1.0, 1.0).unwrap(), 3.0);
        assert!((jacobi(1, 2.0, 1.0, 0.0).unwrap() - 0.5).abs() < 1e-15);
        let f = PolyFamily::jacobi(1, 2.0, 1.0).unwrap();
        assert!((series_oracle(&f, 0.0).unwrap() - 0.5).abs() < 1e-15);
    }

    #[test]
    fn laguerre_examples() {
        assert_eq!(laguerre(0, 3.2, 5.0).unwrap(), 1.0);
        assert_eq!(laguerre(1, 2.0, 0.0).unwrap(), 3.0);
        assert_eq!(laguerre(1, 2.0, 1.0).unwrap(), 2.0);
        let f = PolyFamily::laguerre(2, 0.0).unwrap();
        assert!((series_oracle(&f, 1.0).unwrap() + 0.5).abs() < 1e-15);
        assert!((laguerre(2, 0.0, 1.0).unwrap() + 0.5).abs() < 1e-15);
    }

    #[test]
    fn series_trivial() {
        let f = PolyFamily::gegenbauer(0, 0.9).unwrap();
        assert_eq!(series_oracle(&f, 0.1).unwrap(), 1.0);
    }

    #[test]
    fn domain_errors() {
        assert!(gegenbauer(3, -0.5, 0.2).is_err());
        assert!(jacobi(3, -1.0, 0.0, 0.2).is_err());
        assert!(jacobi(3, 0.0, -1.5, 0.2).is_err());
        assert!(laguerre(3, -1.0, 0.2).is_err());
        assert!(laguerre(3, 0.5, -0.2).is_err());
        assert!(PolyFamily::laguerre(1, f64::NAN).is_err());
        let f = PolyFamily::Laguerre { degree: 1, q: 0.0 };
        assert!(series_oracle(&f, -1.0).is_err());
    }

    #[test]
    fn gegenbauer_parity() {
        for n in 0..12 {
            for &x in &[0.1, 0.37, 0.8, 0.99] {
                let p = gegenbauer(n, 1.3, x).unwrap();
                let m = gegenbauer(n, 1.3, -x).unwrap();
                let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
                assert!((m - sign * p).abs() <= 1e-12 * p.abs().max(1.0));
            }
        }
    }

    #[test]
    fn gegenbauer_half_is_legendre() {
        // C_n^{(1/2)} = P_n^{(0,0)}
        for n in 0..10 {
            for &x in &[-0.9, -0.2, 0.4, 0.75] {
                let c = gegenbauer(n, 0.5, x).unwrap();
                let p = jacobi(n, 0.0, 0.0, x).unwrap();
                assert!((c - p).abs() < 1e-13);
            }
        }
    }
}
