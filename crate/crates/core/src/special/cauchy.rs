use std::f64::consts::PI;

use num_complex::Complex64;

use super::PrecisionConfig;
use crate::combinatorics::factorial;
use crate::error::{Error, Result};
use crate::summation::ComplexSum;

/// Allowed change of the derivative when the node count is doubled,
/// relative to `max(1, |f⁽ⁿ⁾|)`.
const DOUBLING_TOL: f64 = 1e-9;

fn samples<F>(f: &F, center: Complex64, radius: f64, points: usize) -> Result<Vec<Complex64>>
where
    F: Fn(Complex64) -> Result<Complex64>,
{
    (0..points)
        .map(|k| {
            let theta = 2.0 * PI * k as f64 / points as f64;
            f(center + Complex64::from_polar(radius, theta))
        })
        .collect()
}

fn trapezoid(values: &[Complex64], stride: usize, n: usize, radius: f64) -> Complex64 {
    let points = values.len() / stride;
    let mut acc = ComplexSum::new();
    for (k, v) in values.iter().step_by(stride).enumerate() {
        let theta = 2.0 * PI * k as f64 / points as f64;
        acc.add(v * Complex64::from_polar(1.0, -(n as f64) * theta));
    }
    acc.value() * (factorial(n as u32) / (points as f64 * radius.powi(n as i32)))
}

fn converged(values: &[Complex64], n: usize, radius: f64) -> Result<Complex64> {
    let coarse = trapezoid(values, 2, n, radius);
    let fine = trapezoid(values, 1, n, radius);
    let change = (fine - coarse).norm();
    if !fine.is_finite() || change > DOUBLING_TOL * fine.norm().max(1.0) {
        return Err(Error::NonConvergence(format!(
            "Cauchy derivative of order {n} changed by {change:.3e} when doubling to {} nodes \
             (radius {radius}); the disk may enclose a singularity",
            values.len()
        )));
    }
    Ok(fine)
}

/// `f⁽ⁿ⁾(center)` from the trapezoidal rule on the circle of radius
/// `cfg.cauchy_radius`: `n!/(P rⁿ) Σ_k f(c + r e^(iθ_k)) e^(-inθ_k)`.
///
/// Evaluated with `P` and `2P` nodes; a change above `1e-9` (relative to
/// `max(1, |result|)`) is reported as non-convergence.
pub fn cauchy_derivative<F>(f: F, center: Complex64, n: usize, cfg: &PrecisionConfig) -> Result<Complex64>
where
    F: Fn(Complex64) -> Result<Complex64>,
{
    cfg.validate()?;
    let radius = cfg.cauchy_radius;
    let values = samples(&f, center, radius, 2 * cfg.cauchy_points)?;
    converged(&values, n, radius)
}

/// `n`-th derivative of `ln f` at `center`, `n >= 1`.
///
/// Samples `ln(f(z)/f(center))` on the principal branch; the ratio must stay
/// in the right half-plane on the circle. The additive constant relative to
/// any other branch of `ln f` does not affect derivatives.
pub fn cauchy_log_derivative<F>(f: F, center: Complex64, n: usize, cfg: &PrecisionConfig) -> Result<Complex64>
where
    F: Fn(Complex64) -> Result<Complex64>,
{
    if n == 0 {
        return Err(Error::Domain("logarithmic derivative order must be >= 1".into()));
    }
    cfg.validate()?;
    let f0 = f(center)?;
    if f0 == Complex64::new(0.0, 0.0) || !f0.is_finite() {
        return Err(Error::NearZero(format!("function vanishes at the center {center}")));
    }
    let radius = cfg.cauchy_radius;
    let ratios = samples(&f, center, radius, 2 * cfg.cauchy_points)?;
    let mut logs = Vec::with_capacity(ratios.len());
    for r in &ratios {
        let q = r / f0;
        if q.re <= 0.0 {
            return Err(Error::NonConvergence(format!(
                "f(z)/f(center) leaves the right half-plane on the circle of radius {radius} \
                 around {center}"
            )));
        }
        logs.push(q.ln());
    }
    converged(&logs, n, radius)
}
