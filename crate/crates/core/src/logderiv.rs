//! Conditional approximation of `dⁿ/dsⁿ ln ζ(s)`:
//!
//! * strip regime `1/2 < Re a < 1`:
//!   `(-1)ⁿ [Σ_{m<=N} Λ(m) lnⁿ⁻¹m / m^a - ∫₀^N x^(-a) lnⁿ⁻¹x dx]`, with
//!   error `O(N^(1/2+Δ-Re a) lnⁿ⁻¹N)` when ζ has no zeros right of `1/2 + Δ`;
//! * convergent regime `Re a > 1`: `(-1)ⁿ Σ_{m<=N} Λ(m) lnⁿ⁻¹m / m^a`.
//!
//! Also the finite-`N` Taylor data of `ln((s-1)ζ(s))` at `s = 1` and the
//! `Re s = 1` oscillation term.

use num_complex::Complex64;

use crate::arithmetic::{
    compensating_integral, lambda_weighted_sum, BoundParameters, MangoldtTable, WeightedSumCursor,
};
use crate::error::{Error, Result};
use crate::special::{log_zeta_derivatives, PrecisionConfig};
use crate::summation::CompensatedSum;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    /// `1/2 < Re a < 1`
    Strip,
    /// `Re a > 1`
    Convergent,
}

pub fn regime(a: Complex64) -> Result<Regime> {
    if a == Complex64::new(1.0, 0.0) {
        return Err(Error::Pole("ln ζ has a pole at a = 1".into()));
    }
    if !a.is_finite() {
        return Err(Error::Domain(format!("non-finite point a = {a}")));
    }
    if a.re <= 0.5 {
        return Err(Error::Domain(format!(
            "Re a must exceed 1/2 for the conditional approximation, got a = {a}"
        )));
    }
    if a.re == 1.0 {
        return Err(Error::Domain(format!(
            "Re a = 1 belongs to neither regime (a = {a}); use the line-one oscillation instead"
        )));
    }
    Ok(if a.re < 1.0 { Regime::Strip } else { Regime::Convergent })
}

fn sign(n: u32) -> f64 {
    if n.is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

fn check_order(n: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::Domain("derivative order n must be >= 1".into()));
    }
    Ok(())
}

fn check_cutoff(table: &MangoldtTable, cutoff: usize) -> Result<()> {
    if cutoff == 0 {
        return Err(Error::Domain("cutoff N must be >= 1".into()));
    }
    if cutoff > table.limit() {
        return Err(Error::OutOfRange(format!(
            "cutoff {cutoff} exceeds table limit {}",
            table.limit()
        )));
    }
    Ok(())
}

fn combine(n: u32, a: Complex64, cutoff: usize, sum: Complex64, regime: Regime) -> Result<Complex64> {
    let core = match regime {
        Regime::Strip => sum - compensating_integral(a, n, cutoff as f64)?,
        Regime::Convergent => sum,
    };
    Ok(core * sign(n))
}

/// Truncated approximation of `(ln ζ)⁽ⁿ⁾(a)` with cutoff `N`.
pub fn approx_log_derivative(table: &MangoldtTable, n: u32, a: Complex64, cutoff: usize) -> Result<Complex64> {
    check_order(n)?;
    let regime = regime(a)?;
    check_cutoff(table, cutoff)?;
    let sum = lambda_weighted_sum(table, a, n, cutoff)?;
    combine(n, a, cutoff, sum, regime)
}

/// One approximation experiment.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ApproxReport {
    pub order: u32,
    pub point: Complex64,
    pub cutoff: usize,
    pub approximation: Complex64,
    pub reference: Complex64,
    pub residual_abs: f64,
    pub bound: f64,
    pub ratio: f64,
}

impl ApproxReport {
    fn new(
        order: u32,
        point: Complex64,
        cutoff: usize,
        approximation: Complex64,
        reference: Complex64,
        bound: f64,
    ) -> Self {
        let residual_abs = (approximation - reference).norm();
        Self {
            order,
            point,
            cutoff,
            approximation,
            reference,
            residual_abs,
            bound,
            ratio: residual_abs / bound,
        }
    }
}

fn reference_value(n: u32, a: Complex64, cfg: &PrecisionConfig) -> Result<Complex64> {
    Ok(log_zeta_derivatives(a, n as usize, cfg)?[n as usize - 1])
}

fn checked_bound(bp: &BoundParameters, n: u32, a: Complex64, cutoff: usize) -> Result<f64> {
    let bound = bp.bound(n, a, cutoff);
    if !(bound > 0.0 && bound.is_finite()) {
        return Err(Error::Domain(format!(
            "error bound vanishes at N = {cutoff} for order n = {n}; use N >= 2"
        )));
    }
    Ok(bound)
}

fn check_hypothesis(bp: &BoundParameters, a: Complex64) -> Result<()> {
    if a.re < 1.0 && a.re < bp.min_real_part() {
        return Err(Error::Domain(format!(
            "Re a = {} lies below 1/2 + Δ + δ₀ = {}",
            a.re,
            bp.min_real_part()
        )));
    }
    Ok(())
}

/// Approximation, Euler–Maclaurin reference, residual and bound at one point.
pub fn residual_report(
    table: &MangoldtTable,
    n: u32,
    a: Complex64,
    cutoff: usize,
    bp: &BoundParameters,
    cfg: &PrecisionConfig,
) -> Result<ApproxReport> {
    check_order(n)?;
    regime(a)?;
    check_hypothesis(bp, a)?;
    let bound = checked_bound(bp, n, a, cutoff)?;
    let approximation = approx_log_derivative(table, n, a, cutoff)?;
    let reference = reference_value(n, a, cfg)?;
    Ok(ApproxReport::new(n, a, cutoff, approximation, reference, bound))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScanAxis {
    GridInA,
    GridInN,
}

/// Reports along one scan axis, in axis order.
#[derive(Debug, Clone, PartialEq)]
pub struct ScanSeries {
    pub axis: ScanAxis,
    pub entries: Vec<ApproxReport>,
}

impl ScanSeries {
    /// The coordinate of `report` along this series' axis.
    pub fn x_axis(&self, report: &ApproxReport) -> f64 {
        match self.axis {
            ScanAxis::GridInA => report.point.re,
            ScanAxis::GridInN => report.cutoff as f64,
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Residual reports over real points of the strip at a fixed cutoff.
pub fn scan_over_a(
    table: &MangoldtTable,
    n: u32,
    a_grid: &[f64],
    cutoff: usize,
    bp: &BoundParameters,
    cfg: &PrecisionConfig,
) -> Result<ScanSeries> {
    validate_a_grid(n, a_grid, bp)?;
    if !a_grid.is_empty() {
        check_cutoff(table, cutoff)?;
        checked_bound(bp, n, Complex64::new(a_grid[0], 0.0), cutoff)?;
    }
    let entries = a_grid
        .iter()
        .map(|&a| residual_report(table, n, Complex64::new(a, 0.0), cutoff, bp, cfg))
        .collect::<Result<Vec<_>>>()?;
    Ok(ScanSeries {
        axis: ScanAxis::GridInA,
        entries,
    })
}

/// Checks an a-grid for [`scan_over_a`] without touching any table.
pub fn validate_a_grid(n: u32, a_grid: &[f64], bp: &BoundParameters) -> Result<()> {
    check_order(n)?;
    for (i, &a) in a_grid.iter().enumerate() {
        if !(a > 0.5 && a < 1.0) {
            return Err(Error::Domain(format!(
                "grid point a = {a} lies outside the strip (1/2, 1)"
            )));
        }
        check_hypothesis(bp, Complex64::new(a, 0.0))?;
        if i > 0 && a <= a_grid[i - 1] {
            return Err(Error::Domain("a-grid must be strictly increasing".into()));
        }
    }
    Ok(())
}

/// Residual reports at one point over an increasing sequence of cutoffs.
///
/// The reference is computed once and the truncated sum is advanced
/// incrementally.
pub fn scan_over_n_cut(
    table: &MangoldtTable,
    n: u32,
    a: Complex64,
    n_grid: &[usize],
    bp: &BoundParameters,
    cfg: &PrecisionConfig,
) -> Result<ScanSeries> {
    check_order(n)?;
    let regime = regime(a)?;
    check_hypothesis(bp, a)?;
    for (i, &cutoff) in n_grid.iter().enumerate() {
        check_cutoff(table, cutoff)?;
        checked_bound(bp, n, a, cutoff)?;
        if i > 0 && cutoff <= n_grid[i - 1] {
            return Err(Error::Domain("N-grid must be strictly increasing".into()));
        }
    }
    if n_grid.is_empty() {
        return Ok(ScanSeries {
            axis: ScanAxis::GridInN,
            entries: Vec::new(),
        });
    }
    let reference = reference_value(n, a, cfg)?;
    let mut cursor = WeightedSumCursor::new(table, a, n)?;
    let mut entries = Vec::with_capacity(n_grid.len());
    for &cutoff in n_grid {
        let sum = cursor.advance_to(cutoff)?;
        let approximation = combine(n, a, cutoff, sum, regime)?;
        let bound = bp.bound(n, a, cutoff);
        entries.push(ApproxReport::new(n, a, cutoff, approximation, reference, bound));
    }
    Ok(ScanSeries {
        axis: ScanAxis::GridInN,
        entries,
    })
}

/// `(-1)ⁿ [Σ_{m<=N} Λ(m) lnⁿ⁻¹m / m - lnⁿN / n]`, whose limit is
/// `dⁿ/dsⁿ ln((s-1)ζ(s))` at `s = 1`.
pub fn eta_coefficient(table: &MangoldtTable, n: u32, cutoff: usize) -> Result<f64> {
    check_order(n)?;
    check_cutoff(table, cutoff)?;
    let mut acc = CompensatedSum::new();
    for (m, lambda) in table.prime_powers(cutoff) {
        let ln_m = (m as f64).ln();
        acc.add(lambda * ln_m.powi(n as i32 - 1) / m as f64);
    }
    let ln_n = (cutoff as f64).ln();
    Ok(sign(n) * (acc.value() - ln_n.powi(n as i32) / n as f64))
}

/// `Σ_{m<=N} Λ(m)/m^(1+it) + ζ'/ζ(1+it) - i N^(-it)/t`, which is `o(1)` as
/// `N → ∞`.
pub fn line_one_oscillation(table: &MangoldtTable, t: f64, cutoff: usize, cfg: &PrecisionConfig) -> Result<Complex64> {
    if t == 0.0 || !t.is_finite() {
        return Err(Error::Domain(format!("height t must be finite and nonzero, got {t}")));
    }
    check_cutoff(table, cutoff)?;
    let s = Complex64::new(1.0, t);
    let sum = lambda_weighted_sum(table, s, 1, cutoff)?;
    let log_deriv = log_zeta_derivatives(s, 1, cfg)?[0];
    let phase = Complex64::new(0.0, -t * (cutoff as f64).ln()).exp();
    Ok(sum + log_deriv - Complex64::i() * phase / t)
}
