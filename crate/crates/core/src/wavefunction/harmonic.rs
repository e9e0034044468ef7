use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::polynomials::gegenbauer_unchecked;

/// Unnormalized hyperspherical harmonic on the sphere in `dim` dimensions.
///
/// `m` holds `m_1 >= ... >= m_p` with `p = dim - 2` and `l >= m_1`;
/// `thetas` holds the polar angles `theta_1..theta_p`. The value is
///
/// ```text
/// exp(+- i m_p phi) * prod_k sin(theta_k)^{m_k}
///     * prod_{k=0}^{p-1} C_{m_k - m_{k+1}}^{(m_{k+1} + p/2 - k/2)}(cos theta_{k+1})
/// ```
///
/// with `m_0 = l`; `conjugate` selects the minus sign. In two dimensions it
/// reduces to `exp(+- i l phi)`.
pub fn hyperspherical_harmonic(
    dim: u32,
    l: u32,
    m: &[u32],
    thetas: &[f64],
    phi: f64,
    conjugate: bool,
) -> Result<Complex64> {
    if dim < 2 {
        return Err(Error::Domain(format!(
            "dimension must be at least 2, got {dim}"
        )));
    }
    let p = (dim - 2) as usize;
    if m.len() != p || thetas.len() != p {
        return Err(Error::Domain(format!(
            "dimension {dim} needs {p} indices and {p} polar angles, got {} and {}",
            m.len(),
            thetas.len()
        )));
    }
    let chain: Vec<u32> = std::iter::once(l).chain(m.iter().copied()).collect();
    if chain.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Domain(format!(
            "multi-index must be non-increasing, got {chain:?}"
        )));
    }
    let half_p = p as f64 / 2.0;
    let real: f64 = (0..p)
        .map(|k| {
            let (upper, lower) = (chain[k], chain[k + 1]);
            let index = lower as f64 + half_p - k as f64 / 2.0;
            let (st, ct) = thetas[k].sin_cos();
            st.powi(lower as i32) * gegenbauer_unchecked(upper - lower, index, ct)
        })
        .product();
    let last = *chain.last().unwrap_or(&l) as f64;
    let sign = if conjugate { -1.0 } else { 1.0 };
    Ok(Complex64::from_polar(real, sign * last * phi))
}
