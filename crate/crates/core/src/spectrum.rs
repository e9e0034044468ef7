//! Separation constants, eigenenergies and level tables.
//!
//! The cascade runs `b_n -> c_mn -> D_lmn -> kappa -> E` with
//!
//! ```text
//! b_n   = 1 + a + b + 2n              (line: b = a)
//! c_mn  = 2m + b_n + c + 1
//! D_lmn = (2l + c_mn + d + 1)^2
//! kappa = sqrt(beta + D_lmn)
//! E     = 2 omega (2k + 1 + kappa)
//! ```

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{Couplings, Exponents};

/// Relative tolerance used to merge numerically equal levels.
pub const LEVEL_TOLERANCE: f64 = 1e-12;

#[derive(
    Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, Default,
)]
pub struct QuantumNumbers {
    /// radial
    pub k: u32,
    /// alpha
    pub l: u32,
    /// theta
    pub m: u32,
    /// phi
    pub n: u32,
}

impl QuantumNumbers {
    pub const GROUND: QuantumNumbers = QuantumNumbers {
        k: 0,
        l: 0,
        m: 0,
        n: 0,
    };

    pub fn new(k: u32, l: u32, m: u32, n: u32) -> Self {
        Self { k, l, m, n }
    }

    /// `N = l + m + n`.
    pub fn angular_sum(&self) -> u32 {
        self.l + self.m + self.n
    }

    pub fn as_array(&self) -> [u32; 4] {
        [self.k, self.l, self.m, self.n]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpectralChain {
    pub b_n: f64,
    pub c_mn: f64,
    pub d_lmn: f64,
    pub kappa: f64,
    pub energy: f64,
}

impl SpectralChain {
    /// `B_n = b_n^2`.
    pub fn big_b(&self) -> f64 {
        self.b_n * self.b_n
    }

    /// `C_mn = c_mn^2`.
    pub fn big_c(&self) -> f64 {
        self.c_mn * self.c_mn
    }
}

/// Positive roots only; a branch that would make `b_n` vanish or push
/// `b_n + 1`, `c_mn` non-positive is a domain error.
pub fn chain(c: &Couplings, e: &Exponents, qn: QuantumNumbers) -> Result<SpectralChain> {
    if e.is_line() && e.a > 0.0 && e.c > 0.0 {
        debug_assert!((e.a - e.c).abs() <= 1e-14 * e.a.max(1.0));
    }
    let b_n = 1.0 + e.a + e.b + 2.0 * f64::from(qn.n);
    if b_n == 0.0 || b_n + 1.0 <= 0.0 {
        return Err(Error::Domain(format!(
            "b_{} = {b_n}: B_n must be non-zero with b_n + 1 > 0",
            qn.n
        )));
    }
    let c_mn = 2.0 * f64::from(qn.m) + b_n + e.c + 1.0;
    if c_mn <= 0.0 {
        return Err(Error::Domain(format!(
            "c_({},{}) = {c_mn} must be positive",
            qn.m, qn.n
        )));
    }
    let root_d = 2.0 * f64::from(qn.l) + c_mn + e.d + 1.0;
    let d_lmn = root_d * root_d;
    let gap = c.beta + d_lmn;
    if gap <= 0.0 {
        return Err(Error::CentrifugalCollapse {
            value: gap,
            l: qn.l,
            m: qn.m,
            n: qn.n,
        });
    }
    let kappa = gap.sqrt();
    let energy = 2.0 * c.omega * (2.0 * f64::from(qn.k) + 1.0 + kappa);
    Ok(SpectralChain {
        b_n,
        c_mn,
        d_lmn,
        kappa,
        energy,
    })
}

/// One-line closed form `2w(2k + 1 + sqrt(beta + (2(l+m+n) + a + b + c + d + 3)^2))`.
pub fn closed_form_energy(c: &Couplings, e: &Exponents, qn: QuantumNumbers) -> Result<f64> {
    let root = 2.0 * f64::from(qn.angular_sum()) + e.base();
    let gap = c.beta + root * root;
    if gap <= 0.0 {
        return Err(Error::CentrifugalCollapse {
            value: gap,
            l: qn.l,
            m: qn.m,
            n: qn.n,
        });
    }
    Ok(2.0 * c.omega * (2.0 * f64::from(qn.k) + 1.0 + gap.sqrt()))
}

/// Energy of an irregular (sign-flipped) line-mode state,
/// `2w(2k + 1 + sqrt(beta + (2l + 2m + 2n ± c + d - 2|a| + 3)^2))`.
pub fn energy_irregular(c: &Couplings, e: &Exponents, qn: QuantumNumbers) -> Result<f64> {
    if !e.is_line() {
        return Err(Error::Unsupported(
            "irregular energies are defined for the line mode only".into(),
        ));
    }
    if e.a >= 0.0 && e.c >= 0.0 && e.d >= 0.0 {
        return Err(Error::Unsupported(
            "energy_irregular needs at least one flipped exponent".into(),
        ));
    }
    let root = 2.0 * f64::from(qn.angular_sum()) + e.c + e.d + 2.0 * e.a + 3.0;
    let gap = c.beta + root * root;
    if gap <= 0.0 || root <= 0.0 {
        return Err(Error::CentrifugalCollapse {
            value: gap,
            l: qn.l,
            m: qn.m,
            n: qn.n,
        });
    }
    Ok(2.0 * c.omega * (2.0 * f64::from(qn.k) + 1.0 + gap.sqrt()))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Level {
    pub energy: f64,
    pub kappa: f64,
    pub multiplicity: usize,
    pub qn: Vec<QuantumNumbers>,
}

/// Levels sorted by ascending energy.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize, Default)]
pub struct LevelTable {
    pub levels: Vec<Level>,
}

/// All states with `l + m + n <= max_sum` and `k <= max_k`, merged into rows
/// of equal energy and equal `kappa` (relative tolerance [`LEVEL_TOLERANCE`]).
pub fn enumerate_levels(
    c: &Couplings,
    e: &Exponents,
    max_sum: u32,
    max_k: u32,
) -> Result<LevelTable> {
    enumerate_levels_with_tolerance(c, e, max_sum, max_k, LEVEL_TOLERANCE)
}

pub fn enumerate_levels_with_tolerance(
    c: &Couplings,
    e: &Exponents,
    max_sum: u32,
    max_k: u32,
    tol: f64,
) -> Result<LevelTable> {
    let mut levels: Vec<Level> = Vec::new();
    for k in 0..=max_k {
        for total in 0..=max_sum {
            for l in 0..=total {
                for m in 0..=total - l {
                    let qn = QuantumNumbers::new(k, l, m, total - l - m);
                    let ch = chain(c, e, qn)?;
                    let close = |x: f64, y: f64| (x - y).abs() <= tol * x.abs().max(y.abs());
                    match levels
                        .iter_mut()
                        .find(|lv| close(lv.energy, ch.energy) && close(lv.kappa, ch.kappa))
                    {
                        Some(lv) => {
                            lv.multiplicity += 1;
                            lv.qn.push(qn);
                        }
                        None => levels.push(Level {
                            energy: ch.energy,
                            kappa: ch.kappa,
                            multiplicity: 1,
                            qn: vec![qn],
                        }),
                    }
                }
            }
        }
    }
    levels.sort_by(|x, y| {
        x.energy
            .total_cmp(&y.energy)
            .then(x.kappa.total_cmp(&y.kappa))
    });
    Ok(LevelTable { levels })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{exponents_line, Branch, Sign};

    fn line(lambda: f64, mu: f64, beta: f64) -> (Couplings, Exponents) {
        let c = Couplings::new(lambda, mu, beta, 1.0);
        (c, exponents_line(&c, &Branch::regular()).unwrap())
    }

    #[test]
    fn reference_chain() {
        let (c, e) = line(2.0, 6.0, -44.0);
        let ch = chain(&c, &e, QuantumNumbers::GROUND).unwrap();
        assert!((ch.b_n - 4.0).abs() < 1e-14);
        assert!((ch.c_mn - 6.5).abs() < 1e-14);
        assert!((ch.d_lmn - 100.0).abs() < 1e-12);
        assert!((ch.kappa - 56f64.sqrt()).abs() < 1e-13);
        assert!((ch.energy - 2.0 * (1.0 + 56f64.sqrt())).abs() < 1e-12);

        let (c, e) = line(2.0, 6.0, 0.0);
        let ch = chain(&c, &e, QuantumNumbers::GROUND).unwrap();
        assert!((ch.kappa - 10.0).abs() < 1e-13);
        assert!((ch.energy - 22.0).abs() < 1e-12);
        // c_10 = 2 + b_0 + c + 1
        let ch = chain(&c, &e, QuantumNumbers::new(0, 0, 1, 0)).unwrap();
        assert!((ch.c_mn - 8.5).abs() < 1e-14);
    }

    #[test]
    fn zero_couplings_ground_state() {
        let (c, e) = line(0.0, 0.0, 0.0);
        let ch = chain(&c, &e, QuantumNumbers::GROUND).unwrap();
        assert!((ch.energy - 12.0).abs() < 1e-13);
    }

    #[test]
    fn energy_grows_with_n() {
        let (c, e) = line(2.0, 6.0, 0.0);
        let e0 = chain(&c, &e, QuantumNumbers::GROUND).unwrap();
        let e1 = chain(&c, &e, QuantumNumbers::new(0, 0, 0, 1)).unwrap();
        assert!((e1.b_n - 6.0).abs() < 1e-14);
        assert!(e1.energy > e0.energy);
    }

    #[test]
    fn collapse_is_an_error() {
        let c = Couplings::new(2.0, 6.0, -144.0, 1.0);
        let e = exponents_line(&Couplings::new(2.0, 6.0, 0.0, 1.0), &Branch::regular()).unwrap();
        assert!(matches!(
            chain(&c, &e, QuantumNumbers::GROUND),
            Err(Error::CentrifugalCollapse { .. })
        ));
    }

    #[test]
    fn irregular_examples() {
        let c = Couplings::new(0.5, 0.0, 0.0, 1.0);
        let e_irr = exponents_line(&c, &Branch::irregular()).unwrap();
        let low = energy_irregular(&c, &e_irr, QuantumNumbers::GROUND).unwrap();
        // 2 (1 + (-2 a + a + 1/2 + 3)), a = sqrt(3)/2
        let a = 0.5 * 3f64.sqrt();
        assert!((low - 2.0 * (1.0 + (3.5 - a))).abs() < 1e-13);
        assert!((low - 7.2679).abs() < 1e-4);
        let via_chain = chain(&c, &e_irr, QuantumNumbers::GROUND).unwrap().energy;
        assert!((low - via_chain).abs() < 1e-13);

        let e_reg = exponents_line(&c, &Branch::regular()).unwrap();
        let high = chain(&c, &e_reg, QuantumNumbers::GROUND).unwrap().energy;
        assert!((high - 2.0 * (1.0 + 3.0 * a + 3.5)).abs() < 1e-13);
        assert!((high - 14.196).abs() < 1e-3);
        assert!(low < high);

        assert!(energy_irregular(&c, &e_reg, QuantumNumbers::GROUND).is_err());
    }

    #[test]
    fn irregular_chain_allows_negative_b() {
        let c = Couplings::new(0.5, 0.0, 0.0, 1.0);
        let br = Branch::irregular().with_signs(Sign::Minus, Sign::Plus, Sign::Plus);
        let e = exponents_line(&c, &br).unwrap();
        let ch = chain(&c, &e, QuantumNumbers::GROUND).unwrap();
        assert!(ch.b_n < 0.0 && ch.b_n > -1.0);
    }

    #[test]
    fn level_table_multiplicities() {
        let (c, e) = line(2.0, 6.0, 0.0);
        let t = enumerate_levels(&c, &e, 1, 0).unwrap();
        assert_eq!(t.levels.len(), 2);
        assert_eq!(t.levels[0].multiplicity, 1);
        assert_eq!(t.levels[1].multiplicity, 3);

        let t = enumerate_levels(&c, &e, 2, 0).unwrap();
        assert_eq!(t.levels[2].multiplicity, 6);
        for w in t.levels.windows(2) {
            assert!(w[0].energy < w[1].energy);
        }
    }

    #[test]
    fn reference_table_first_row() {
        let (c, e) = line(2.0, 6.0, 0.0);
        let t = enumerate_levels(&c, &e, 1, 0).unwrap();
        assert!((t.levels[0].energy - 22.0).abs() < 1e-12);
        let (c, e) = line(2.0, 6.0, -44.0);
        let t = enumerate_levels(&c, &e, 1, 0).unwrap();
        assert!((t.levels[0].energy - 16.966629547095765).abs() < 1e-12);
    }
}
