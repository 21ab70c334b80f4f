use num_complex::Complex64;

use super::{PrecisionConfig, BERNOULLI_EVEN};
use crate::error::{Error, Result};
use crate::summation::ComplexSum;

/// Real part the argument is lifted to before the asymptotic series is used.
const LIFT: f64 = 15.0;

fn check_right_half_plane(z: Complex64, what: &str) -> Result<()> {
    if !(z.re > 0.0) || !z.is_finite() {
        return Err(Error::Domain(format!("{what} requires Re z > 0, got z = {z}")));
    }
    Ok(())
}

/// ψ(z) for `Re z > 0`: recurrence `ψ(z) = ψ(z+1) - 1/z` up to `Re z >= 15`,
/// then `ln w - 1/(2w) - Σ_k B_{2k} / (2k w^{2k})`.
pub fn digamma(z: Complex64, cfg: &PrecisionConfig) -> Result<Complex64> {
    check_right_half_plane(z, "digamma")?;
    cfg.validate()?;
    let mut acc = ComplexSum::new();
    let mut w = z;
    while w.re < LIFT {
        acc.add(-w.inv());
        w += 1.0;
    }
    let inv_w = w.inv();
    let inv_w2 = inv_w * inv_w;
    acc.add(w.ln());
    acc.add(-inv_w * 0.5);
    let mut power = inv_w2;
    for (k, b) in BERNOULLI_EVEN.iter().enumerate().take(cfg.bernoulli_order) {
        let k = (k + 1) as f64;
        acc.add(-power * (b / (2.0 * k)));
        power *= inv_w2;
    }
    Ok(acc.value())
}

/// ln Γ(z) for `Re z > 0`, on the branch continuous in the right half-plane
/// and real on the positive axis.
///
/// Stirling series `(w - 1/2) ln w - w + ln(2π)/2 + Σ_k B_{2k}/(2k(2k-1) w^{2k-1})`
/// after lifting with `ln Γ(z) = ln Γ(z+1) - ln z`.
pub fn log_gamma(z: Complex64, cfg: &PrecisionConfig) -> Result<Complex64> {
    check_right_half_plane(z, "log_gamma")?;
    cfg.validate()?;
    let mut acc = ComplexSum::new();
    let mut w = z;
    while w.re < LIFT {
        acc.add(-w.ln());
        w += 1.0;
    }
    let inv_w = w.inv();
    let inv_w2 = inv_w * inv_w;
    acc.add((w - 0.5) * w.ln());
    acc.add(-w);
    acc.add(Complex64::new(0.5 * (2.0 * std::f64::consts::PI).ln(), 0.0));
    let mut power = inv_w;
    for (k, b) in BERNOULLI_EVEN.iter().enumerate().take(cfg.bernoulli_order) {
        let k = (k + 1) as f64;
        acc.add(power * (b / (2.0 * k * (2.0 * k - 1.0))));
        power *= inv_w2;
    }
    Ok(acc.value())
}
