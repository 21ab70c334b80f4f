use num_complex::Complex64;

use super::{PrecisionConfig, BERNOULLI_EVEN};
use crate::combinatorics::{binomial, factorial};
use crate::error::{Error, Result};
use crate::summation::ComplexSum;

/// Highest derivative order offered by the ζ evaluators.
pub const MAX_DERIVATIVE_ORDER: usize = 8;

/// Smallest `|ζ(s)|` accepted before taking logarithmic derivatives.
const NEAR_ZERO: f64 = 1e-12;

/// `[ζ(s), ζ'(s), …, ζ⁽ⁿ⁾(s)]` from the Euler–Maclaurin formula
///
/// `ζ(s) = Σ_{m<M} m^(-s) + M^(1-s)/(s-1) + M^(-s)/2
///         + Σ_{k=1}^{K} B_{2k}/(2k)! (s)_{2k-1} M^(-s-2k+1)`
///
/// differentiated term by term in `s`.
pub fn zeta_with_derivatives(s: Complex64, n: usize, cfg: &PrecisionConfig) -> Result<Vec<Complex64>> {
    if s == Complex64::new(1.0, 0.0) {
        return Err(Error::Pole("ζ has a pole at s = 1".into()));
    }
    if n > MAX_DERIVATIVE_ORDER {
        return Err(Error::UnsupportedOrder {
            requested: n,
            max: MAX_DERIVATIVE_ORDER,
        });
    }
    cfg.validate()?;
    let big_m = cfg.em_length(s.im);
    let mut acc = vec![ComplexSum::new(); n + 1];

    for m in 1..big_m {
        let ln_m = (m as f64).ln();
        let mut term = (-s * ln_m).exp();
        for slot in acc.iter_mut() {
            slot.add(term);
            term *= -ln_m;
        }
    }

    let ln_big_m = (big_m as f64).ln();
    let neg_l = -ln_big_m;
    let neg_l_pow: Vec<f64> = (0..=n).map(|r| neg_l.powi(r as i32)).collect();

    // M^(1-s)/(s-1) = e^(-uL)/u with u = s - 1
    let u = s - 1.0;
    let e_u = (-u * ln_big_m).exp();
    let inv_u = u.inv();
    let mut inv_u_pow = Vec::with_capacity(n + 1);
    let mut p = inv_u;
    for _ in 0..=n {
        inv_u_pow.push(p);
        p *= inv_u;
    }
    for (r, slot) in acc.iter_mut().enumerate() {
        let mut d = Complex64::new(0.0, 0.0);
        for i in 0..=r {
            let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
            d += inv_u_pow[i] * (binomial(r as u32, i as u32) * neg_l_pow[r - i] * sign * factorial(i as u32));
        }
        slot.add(d * e_u);
    }

    let half = (-s * ln_big_m).exp() * 0.5;
    for (r, slot) in acc.iter_mut().enumerate() {
        slot.add(half * neg_l_pow[r]);
    }

    // Taylor coefficients in h of Π_{i=0}^{2k-2} (s + i + h), truncated at order n
    let mut poly = vec![Complex64::new(0.0, 0.0); n + 1];
    poly[0] = s;
    if n >= 1 {
        poly[1] = Complex64::new(1.0, 0.0);
    }
    let mut next_factor = 1.0;
    for (k, b) in BERNOULLI_EVEN.iter().enumerate().take(cfg.bernoulli_order) {
        let k = k + 1;
        if k > 1 {
            for _ in 0..2 {
                multiply_linear(&mut poly, s + next_factor);
                next_factor += 1.0;
            }
        }
        let coefficient = b / factorial(2 * k as u32);
        let e_k = (-(s + (2 * k - 1) as f64) * ln_big_m).exp() * coefficient;
        for (r, slot) in acc.iter_mut().enumerate() {
            let mut d = Complex64::new(0.0, 0.0);
            for i in 0..=r {
                d += poly[i] * (binomial(r as u32, i as u32) * factorial(i as u32) * neg_l_pow[r - i]);
            }
            slot.add(d * e_k);
        }
    }

    Ok(acc.iter().map(ComplexSum::value).collect())
}

fn multiply_linear(series: &mut [Complex64], constant: Complex64) {
    // series · (constant + h), dropping orders beyond the slice
    for i in (0..series.len()).rev() {
        let lower = if i > 0 { series[i - 1] } else { Complex64::new(0.0, 0.0) };
        series[i] = series[i] * constant + lower;
    }
}

pub fn zeta(s: Complex64, cfg: &PrecisionConfig) -> Result<Complex64> {
    Ok(zeta_with_derivatives(s, 0, cfg)?[0])
}

/// Derivatives of `g = ln f` from `[f, f', …, f⁽ⁿ⁾]`.
///
/// Solves `f⁽ᵏ⁾ = Σ_{j=0}^{k-1} C(k-1, j) g⁽ᵏ⁻ʲ⁾ f⁽ʲ⁾` for `g⁽ᵏ⁾`, returning
/// `[g', …, g⁽ⁿ⁾]`.
pub fn log_derivatives_from(f: &[Complex64]) -> Result<Vec<Complex64>> {
    let Some(&f0) = f.first() else {
        return Ok(Vec::new());
    };
    if f0 == Complex64::new(0.0, 0.0) {
        return Err(Error::NearZero("logarithmic derivative of a vanishing function".into()));
    }
    let inv_f0 = f0.inv();
    let n = f.len() - 1;
    // g[k] holds g^(k); g[0] unused
    let mut g = vec![Complex64::new(0.0, 0.0); n + 1];
    for k in 1..=n {
        let mut rest = f[k];
        for j in 1..k {
            rest -= g[k - j] * f[j] * binomial((k - 1) as u32, j as u32);
        }
        g[k] = rest * inv_f0;
    }
    g.remove(0);
    Ok(g)
}

/// `[(ln ζ)'(s), …, (ln ζ)⁽ⁿ⁾(s)]`.
pub fn log_zeta_derivatives(s: Complex64, n: usize, cfg: &PrecisionConfig) -> Result<Vec<Complex64>> {
    let f = zeta_with_derivatives(s, n, cfg)?;
    if f[0].norm() < NEAR_ZERO {
        return Err(Error::NearZero(format!(
            "|ζ(s)| = {:.3e} at s = {s} is too close to a zero",
            f[0].norm()
        )));
    }
    log_derivatives_from(&f)
}

/// Principal logarithm of ζ(s).
pub fn log_zeta(s: Complex64, cfg: &PrecisionConfig) -> Result<Complex64> {
    let z = zeta(s, cfg)?;
    if z.norm() < NEAR_ZERO {
        return Err(Error::NearZero(format!("|ζ(s)| = {:.3e} at s = {s}", z.norm())));
    }
    Ok(z.ln())
}
