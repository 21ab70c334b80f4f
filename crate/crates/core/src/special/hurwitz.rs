use num_complex::Complex64;

use super::{PrecisionConfig, BERNOULLI_EVEN};
use crate::combinatorics::factorial;
use crate::error::{Error, Result};
use crate::summation::ComplexSum;

/// `ζ(j, q) = Σ_{m>=0} (m+q)^(-j)` for integer `j >= 2` and `Re q > 0`.
///
/// Direct sum up to `M`, then the Euler–Maclaurin tail at `w = M + q`:
/// `w^(1-j)/(j-1) + w^(-j)/2 + Σ_k B_{2k}/(2k)! (j)_{2k-1} w^(-j-2k+1)`.
pub fn hurwitz_zeta(j: u32, q: Complex64, cfg: &PrecisionConfig) -> Result<Complex64> {
    if j < 2 {
        return Err(Error::Domain(format!(
            "Hurwitz zeta is implemented for integer order j >= 2, got {j}"
        )));
    }
    if !(q.re > 0.0) {
        return Err(Error::Domain(format!("Hurwitz zeta requires Re q > 0, got q = {q}")));
    }
    cfg.validate()?;
    let big_m = cfg.em_length(q.im).max(j as usize + 10);
    let j_i = j as i32;

    let mut acc = ComplexSum::new();
    for m in 0..big_m {
        acc.add((q + m as f64).inv().powi(j_i));
    }
    let w = q + big_m as f64;
    let inv_w = w.inv();
    let inv_w_j = inv_w.powi(j_i);
    acc.add(inv_w_j * w / (j - 1) as f64);
    acc.add(inv_w_j * 0.5);

    let inv_w2 = inv_w * inv_w;
    // (j)_{2k-1} w^(-j-2k+1), advanced by two rising-factorial factors per k
    let mut rising = j as f64;
    let mut power = inv_w_j * inv_w;
    for (k, b) in BERNOULLI_EVEN.iter().enumerate().take(cfg.bernoulli_order) {
        let k = k + 1;
        if k > 1 {
            let base = (j as usize + 2 * k - 3) as f64;
            rising *= base * (base + 1.0);
            power *= inv_w2;
        }
        acc.add(power * (b / factorial(2 * k as u32) * rising));
    }
    Ok(acc.value())
}
