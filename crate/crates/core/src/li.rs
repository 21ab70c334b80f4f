//! Generalized Li sums `k_{n,a} = Σ_ρ (1 - ((ρ+a-1)/(ρ-a))ⁿ)`, reached only
//! through closed-form identities: the arithmetic side (truncated von
//! Mangoldt sums), the derivative side (derivatives of `ln ζ` at `a`), and
//! the factorized route through `ln ξ` whose gamma-factor and pole pieces
//! are differentiated numerically.
//!
//! Also the Mellin kernel `k_{n,a}(s)` and its inverse transform `P_{n,a}`.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::arithmetic::{compensating_integral, lambda_weighted_sum, MangoldtTable};
use crate::combinatorics::{binomial, factorial, MAX_EXACT};
use crate::error::{Error, Result};
use crate::extended::{Dd, DdComplex};
use crate::logderiv::{regime, Regime};
use crate::special::quadrature::integrate_to_infinity;
use crate::special::{
    cauchy_derivative, digamma, hurwitz_zeta, log_gamma, log_zeta_derivatives, zeta, PrecisionConfig,
};
use crate::summation::ComplexSum;

fn one() -> Complex64 {
    Complex64::new(1.0, 0.0)
}

fn check_index(n: u32) -> Result<()> {
    if n == 0 || n > MAX_EXACT {
        return Err(Error::Domain(format!(
            "Li index n must lie in 1..={MAX_EXACT}, got {n}"
        )));
    }
    Ok(())
}

fn check_base_point(a: Complex64) -> Result<()> {
    if a == one() || a == Complex64::new(0.0, 0.0) {
        return Err(Error::Pole(format!("base point a = {a} hits a pole")));
    }
    if a == Complex64::new(0.5, 0.0) {
        return Err(Error::Domain("a = 1/2 makes 2a - 1 vanish".into()));
    }
    Ok(())
}

/// Li index, base point and truncation of the arithmetic side.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LiParameters {
    pub n: u32,
    pub a: Complex64,
    pub cutoff: usize,
}

impl LiParameters {
    pub fn new(n: u32, a: Complex64, cutoff: usize) -> Result<Self> {
        check_index(n)?;
        check_base_point(a)?;
        if !(a.re > 0.5) {
            return Err(Error::Domain(format!("Re a must exceed 1/2, got a = {a}")));
        }
        if cutoff == 0 {
            return Err(Error::Domain("cutoff N must be >= 1".into()));
        }
        Ok(Self { n, a, cutoff })
    }
}

/// `k_{n,a}(s) = 1 - (1 - (2a-1)/(s+a-1))ⁿ`.
pub fn mellin_kernel(n: u32, a: Complex64, s: Complex64) -> Result<Complex64> {
    check_index(n)?;
    let denom = s + a - 1.0;
    if denom == Complex64::new(0.0, 0.0) {
        return Err(Error::Pole(format!("kernel has a pole at s = 1 - a = {s}")));
    }
    Ok(one() - (one() - (a * 2.0 - 1.0) / denom).powi(n as i32))
}

/// `Σ_{j=1}^{n} C(n,j) c^j (±ln x)^(j-1)/(j-1)!` with `c = 2a - 1`, in
/// double-double so that cancellation near a root keeps full f64 accuracy.
fn p_sum(n: u32, a: Complex64, ln_x: f64, alternate: bool) -> Complex64 {
    let c = a * 2.0 - 1.0;
    let c_dd = DdComplex::new(c);
    let y = Dd::new(if alternate { -ln_x } else { ln_x });
    let mut acc = DdComplex::ZERO;
    let mut c_pow = c_dd;
    let mut y_pow = Dd::new(1.0);
    for j in 1..=n {
        let weight = Dd::new(binomial(n, j)).div_f64(factorial(j - 1)).mul(y_pow);
        acc = acc.add(c_pow.scale(weight));
        c_pow = c_pow.mul(c_dd);
        y_pow = y_pow.mul(y);
    }
    acc.value()
}

fn check_positive(x: f64) -> Result<f64> {
    if !(x > 0.0 && x.is_finite()) {
        return Err(Error::Domain(format!("x must be positive, got {x}")));
    }
    Ok(x.ln())
}

/// `P_{n,a}(x) = x^(a-1) Σ_{j=1}^{n} C(n,j) (2a-1)^j ln^(j-1)x / (j-1)!`,
/// the inverse Mellin transform of the kernel on `0 < x < 1`.
pub fn p_polynomial(n: u32, a: Complex64, x: f64) -> Result<Complex64> {
    check_index(n)?;
    let ln_x = check_positive(x)?;
    Ok(((a - 1.0) * ln_x).exp() * p_sum(n, a, ln_x, false))
}

/// `P̃_{n,a}(x) = P_{n,a}(1/x)/x
///  = x^(-a) Σ_{j=1}^{n} C(n,j) (-1)^(j-1) (2a-1)^j ln^(j-1)x / (j-1)!`.
pub fn p_tilde(n: u32, a: Complex64, x: f64) -> Result<Complex64> {
    check_index(n)?;
    let ln_x = check_positive(x)?;
    Ok((-a * ln_x).exp() * p_sum(n, a, ln_x, true))
}

fn laguerre_dd(k: u32, alpha: f64, x: DdComplex) -> DdComplex {
    let one = DdComplex::real(Dd::new(1.0));
    let mut prev = one;
    if k == 0 {
        return prev;
    }
    let mut curr = DdComplex::real(Dd::new(1.0 + alpha)).sub(x);
    for i in 1..k {
        let i = i as f64;
        let lead = DdComplex::real(Dd::new(2.0 * i + 1.0 + alpha)).sub(x).mul(curr);
        let next = lead.sub(prev.scale(Dd::new(i + alpha))).div_f64(i + 1.0);
        prev = curr;
        curr = next;
    }
    curr
}

/// Generalized Laguerre polynomial `L^α_k(x)` by the three-term recurrence
/// `(k+1) L_{k+1} = (2k+1+α-x) L_k - (k+α) L_{k-1}`.
pub fn generalized_laguerre(k: u32, alpha: f64, x: Complex64) -> Complex64 {
    laguerre_dd(k, alpha, DdComplex::new(x)).value()
}

/// `x^(a-1) (2a-1) L¹_{n-1}(-(2a-1) ln x)`.
pub fn p_polynomial_laguerre(n: u32, a: Complex64, x: f64) -> Result<Complex64> {
    check_index(n)?;
    let ln_x = check_positive(x)?;
    let c = a * 2.0 - 1.0;
    let arg = DdComplex::scaled_exact(c, ln_x).neg();
    Ok(((a - 1.0) * ln_x).exp() * c * laguerre_dd(n - 1, 1.0, arg).value())
}

/// `x^(-a) (2a-1) L¹_{n-1}((2a-1) ln x)`.
pub fn p_tilde_laguerre(n: u32, a: Complex64, x: f64) -> Result<Complex64> {
    check_index(n)?;
    let ln_x = check_positive(x)?;
    let c = a * 2.0 - 1.0;
    let arg = DdComplex::scaled_exact(c, ln_x);
    Ok((-a * ln_x).exp() * c * laguerre_dd(n - 1, 1.0, arg).value())
}

/// The kernel `k_{n,a}(s)` and the quadrature of `∫₀¹ P_{n,a}(x) x^(s-1) dx`,
/// taken as `∫₀^∞ e^(-(s+a-1)u) Σ_j … (-u)^(j-1) du` after `x = e^(-u)`.
pub fn mellin_consistency(n: u32, a: Complex64, s: Complex64, cfg: &PrecisionConfig) -> Result<(Complex64, Complex64)> {
    check_index(n)?;
    cfg.validate()?;
    let rate = s + a - 1.0;
    if !(rate.re > 0.0) {
        return Err(Error::Domain(format!(
            "Mellin integral diverges for Re(s + a) <= 1 (s + a = {})",
            s + a
        )));
    }
    let kernel = mellin_kernel(n, a, s)?;
    let integral = integrate_to_infinity(
        |u| {
            let decay = (-rate * u).exp();
            if decay == Complex64::new(0.0, 0.0) {
                decay
            } else {
                decay * p_sum(n, a, -u, false)
            }
        },
        0.0,
        cfg.quad_rel_tol,
        1e-300,
    )?;
    Ok((kernel, integral.value))
}

fn oracle_radius(cfg: &PrecisionConfig, distance: f64) -> PrecisionConfig {
    cfg.with_radius(cfg.cauchy_radius.min(0.5 * distance))
}

/// `(1/(n-1)!) dⁿ/dzⁿ [(z+a-1)ⁿ⁻¹ ln(z Γ(z/2))]` at `z = a`, by Cauchy
/// differentiation on a disk inside the right half-plane.
pub fn gamma_term_value(n: u32, a: Complex64, cfg: &PrecisionConfig) -> Result<Complex64> {
    check_index(n)?;
    if !(a.re > 0.0) {
        return Err(Error::Domain(format!("gamma term needs Re a > 0, got a = {a}")));
    }
    let local = oracle_radius(cfg, a.re);
    let shift = a - 1.0;
    let d = cauchy_derivative(
        |z| Ok((z + shift).powi(n as i32 - 1) * (z.ln() + log_gamma(z * 0.5, cfg)?)),
        a,
        n as usize,
        &local,
    )?;
    Ok(d / factorial(n - 1))
}

/// Closed form of [`gamma_term_value`] from the Leibniz expansion:
///
/// `(1 - (-1+1/a)ⁿ + Σ_{l=2}^{n} C(n,l) (-1)^l 2^(-l) (2a-1)^l ζ(l, a/2)) / (2a-1)
///  + (n/2) ψ(a/2)`.
pub fn gamma_term_closed_form(n: u32, a: Complex64, cfg: &PrecisionConfig) -> Result<Complex64> {
    check_index(n)?;
    check_base_point(a)?;
    let c = a * 2.0 - 1.0;
    let half_a = a * 0.5;
    let mut acc = ComplexSum::new();
    acc.add(one() - (a.inv() - 1.0).powi(n as i32));
    for l in 2..=n {
        let sign = if l % 2 == 0 { 1.0 } else { -1.0 };
        let weight = binomial(n, l) * sign * 0.5f64.powi(l as i32);
        acc.add(c.powi(l as i32) * hurwitz_zeta(l, half_a, cfg)? * weight);
    }
    Ok(acc.value() / c + digamma(half_a, cfg)? * (n as f64 * 0.5))
}

/// `(1/(n-1)!) dⁿ/dzⁿ [(z+a-1)ⁿ⁻¹ ln(z-1)]` at `z = a`
/// `= (1 - (a/(1-a))ⁿ) / (2a-1)`.
pub fn pole_term_value(n: u32, a: Complex64) -> Result<Complex64> {
    check_index(n)?;
    check_base_point(a)?;
    let ratio = a / (one() - a);
    Ok((one() - ratio.powi(n as i32)) / (a * 2.0 - 1.0))
}

/// Cauchy-differentiated counterpart of [`pole_term_value`].
///
/// Uses `ln((z-1)/(a-1))`, analytic on the disk of radius `|a-1|/2`, which
/// differs from `ln(z-1)` by a constant.
pub fn pole_term_oracle(n: u32, a: Complex64, cfg: &PrecisionConfig) -> Result<Complex64> {
    check_index(n)?;
    check_base_point(a)?;
    let local = oracle_radius(cfg, (a - 1.0).norm());
    let shift = a - 1.0;
    let d = cauchy_derivative(
        |z| Ok((z + shift).powi(n as i32 - 1) * ((z - 1.0) / shift).ln()),
        a,
        n as usize,
        &local,
    )?;
    Ok(d / factorial(n - 1))
}

/// The terms shared by both sides: `2 - (-1+1/a)ⁿ - (-1+1/(1-a))ⁿ
/// + (n/2)(2a-1)(ψ(a/2) - ln π) + Σ_{j=2}^{n} C(n,j)(-1)^j 2^(-j)(2a-1)^j ζ(j, a/2)`.
fn common_terms(n: u32, a: Complex64, cfg: &PrecisionConfig) -> Result<ComplexSum> {
    let c = a * 2.0 - 1.0;
    let half_a = a * 0.5;
    let mut acc = ComplexSum::new();
    acc.add(Complex64::new(2.0, 0.0));
    acc.add(-(a.inv() - 1.0).powi(n as i32));
    acc.add(-((one() - a).inv() - 1.0).powi(n as i32));
    acc.add(c * (digamma(half_a, cfg)? - PI.ln()) * (n as f64 * 0.5));
    for j in 2..=n {
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        let weight = binomial(n, j) * sign * 0.5f64.powi(j as i32);
        acc.add(c.powi(j as i32) * hurwitz_zeta(j, half_a, cfg)? * weight);
    }
    Ok(acc)
}

fn check_derivative_side_point(n: u32, a: Complex64) -> Result<()> {
    check_index(n)?;
    check_base_point(a)?;
    if !(a.re > 0.0) {
        return Err(Error::Domain(format!(
            "the derivative side needs Re a > 0 for ψ(a/2) and ζ(j, a/2), got a = {a}"
        )));
    }
    Ok(())
}

/// `k_{n,a}` from the derivatives of `ln ζ` at `a`:
/// the common terms plus `Σ_{j=1}^{n} C(n,j)(2a-1)^j (ln ζ)⁽ʲ⁾(a)/(j-1)!`.
pub fn li_sum_derivative_side(n: u32, a: Complex64, cfg: &PrecisionConfig) -> Result<Complex64> {
    check_derivative_side_point(n, a)?;
    let derivs = log_zeta_derivatives(a, n as usize, cfg)?;
    let c = a * 2.0 - 1.0;
    let mut acc = common_terms(n, a, cfg)?;
    for j in 1..=n {
        let weight = binomial(n, j) / factorial(j - 1);
        acc.add(c.powi(j as i32) * derivs[j as usize - 1] * weight);
    }
    Ok(acc.value())
}

/// `k_{n,a}` from truncated von Mangoldt sums: the common terms plus
/// `Σ_{j=1}^{n} C(n,j)(2a-1)^j (-1)^j T_j/(j-1)!` with
/// `T_j = Σ_{m<=N} Λ(m) ln^(j-1)m / m^a - ∫₀^N x^(-a) ln^(j-1)x dx` in the
/// strip and the bare sum for `Re a > 1`.
pub fn li_sum_arithmetic_side(
    table: &MangoldtTable,
    n: u32,
    a: Complex64,
    cutoff: usize,
    cfg: &PrecisionConfig,
) -> Result<Complex64> {
    let params = LiParameters::new(n, a, cutoff)?;
    let regime = regime(a)?;
    if cutoff > table.limit() {
        return Err(Error::OutOfRange(format!(
            "cutoff {cutoff} exceeds table limit {}",
            table.limit()
        )));
    }
    let c = a * 2.0 - 1.0;
    let mut acc = common_terms(params.n, a, cfg)?;
    for j in 1..=n {
        let mut t = lambda_weighted_sum(table, a, j, cutoff)?;
        if regime == Regime::Strip {
            t -= compensating_integral(a, j, cutoff as f64)?;
        }
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        let weight = binomial(n, j) * sign / factorial(j - 1);
        acc.add(c.powi(j as i32) * t * weight);
    }
    Ok(acc.value())
}

/// `k_{n,a}` through `ln ξ(z) = ln(1/2) + ln(z-1) - (z/2) ln π + ln(z Γ(z/2)) + ln ζ(z)`:
///
/// `(2a-1)/(n-1)! · dⁿ/dzⁿ [(z+a-1)ⁿ⁻¹ ln ξ(z)]` at `z = a`, with the pole,
/// gamma and ζ pieces each differentiated on a Cauchy circle.
pub fn li_sum_factorized(n: u32, a: Complex64, cfg: &PrecisionConfig) -> Result<Complex64> {
    check_derivative_side_point(n, a)?;
    let shift = a - 1.0;
    let zeta_a = zeta(a, cfg)?;
    if zeta_a.norm() < 1e-12 {
        return Err(Error::NearZero(format!("ζ(a) vanishes at a = {a}")));
    }
    let local = oracle_radius(cfg, (a - 1.0).norm());
    let zeta_piece = cauchy_derivative(
        |z| Ok((z + shift).powi(n as i32 - 1) * (zeta(z, cfg)? / zeta_a).ln()),
        a,
        n as usize,
        &local,
    )? / factorial(n - 1);
    let pi_piece = -(n as f64) * 0.5 * PI.ln();
    let total = pole_term_oracle(n, a, cfg)? + gamma_term_value(n, a, cfg)? + pi_piece + zeta_piece;
    Ok(total * (a * 2.0 - 1.0))
}
