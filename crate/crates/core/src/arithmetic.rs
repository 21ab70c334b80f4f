//! The von Mangoldt table and the two arithmetic ingredients of every
//! truncated formula: weighted prime-power sums and the compensating
//! integral of `x^(-a) ln^(j-1) x` over `[0, N]`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::summation::ComplexSum;

/// Largest table accepted by [`build_mangoldt`].
pub const DEFAULT_TABLE_CEILING: usize = 100_000_000;

/// `Λ(m)` for `1 <= m <= limit`.
///
/// Entry `m` holds `ln p` when `m = p^k`, and `0` otherwise. The same stored
/// value is shared by every power of a given prime.
#[derive(Debug, Clone, PartialEq)]
pub struct MangoldtTable {
    // index 0 is unused and always zero
    values: Vec<f64>,
}

impl MangoldtTable {
    pub fn limit(&self) -> usize {
        self.values.len() - 1
    }

    /// `Λ(m)`; `None` outside `1..=limit`.
    pub fn get(&self, m: usize) -> Option<f64> {
        if m == 0 {
            return None;
        }
        self.values.get(m).copied()
    }

    /// The values for `m = 1..=limit`.
    pub fn values(&self) -> &[f64] {
        &self.values[1..]
    }

    /// Chebyshev `ψ(N) = Σ_{m<=N} Λ(m)`.
    pub fn chebyshev_psi(&self, n_cut: usize) -> Result<f64> {
        self.check_cut(n_cut)?;
        Ok(crate::summation::compensated_sum(
            self.values[1..=n_cut].iter().copied(),
        ))
    }

    /// Indices `m <= n_cut` with `Λ(m) > 0`, in ascending order.
    pub fn prime_powers(&self, n_cut: usize) -> impl Iterator<Item = (usize, f64)> + '_ {
        let end = n_cut.min(self.limit());
        self.values[..=end]
            .iter()
            .enumerate()
            .filter(|(_, v)| **v > 0.0)
            .map(|(m, v)| (m, *v))
    }

    fn check_cut(&self, n_cut: usize) -> Result<()> {
        if n_cut > self.limit() {
            return Err(Error::OutOfRange(format!(
                "cutoff {n_cut} exceeds table limit {}",
                self.limit()
            )));
        }
        Ok(())
    }
}

pub fn build_mangoldt(n_max: usize) -> Result<MangoldtTable> {
    build_mangoldt_with_ceiling(n_max, DEFAULT_TABLE_CEILING)
}

/// Sieve of Eratosthenes followed by marking of prime powers.
pub fn build_mangoldt_with_ceiling(n_max: usize, ceiling: usize) -> Result<MangoldtTable> {
    if n_max == 0 {
        return Err(Error::Capacity("table limit must be at least 1".into()));
    }
    if n_max > ceiling {
        return Err(Error::Capacity(format!(
            "table limit {n_max} exceeds the configured ceiling {ceiling}"
        )));
    }
    let mut composite = vec![false; n_max + 1];
    let mut values = vec![0.0; n_max + 1];
    for p in 2..=n_max {
        if composite[p] {
            continue;
        }
        if let Some(start) = p.checked_mul(p) {
            for q in (start..=n_max).step_by(p) {
                composite[q] = true;
            }
        }
        let ln_p = (p as f64).ln();
        let mut power = p;
        loop {
            values[power] = ln_p;
            match power.checked_mul(p) {
                Some(next) if next <= n_max => power = next,
                _ => break,
            }
        }
    }
    Ok(MangoldtTable { values })
}

#[inline]
fn weighted_term(lambda: f64, m: usize, a: Complex64, j: u32) -> Complex64 {
    let ln_m = (m as f64).ln();
    let weight = lambda * ln_m.powi(j as i32 - 1);
    (-a * ln_m).exp() * weight
}

/// Incremental evaluator of `Σ_{m<=n} Λ(m) (ln m)^(j-1) m^(-a)` for an
/// ascending sequence of cutoffs.
///
/// Advancing from `N₁` to `N₂` performs exactly the additions a fresh sum up
/// to `N₂` would, so the values are bit-identical to [`lambda_weighted_sum`].
#[derive(Debug, Clone)]
pub struct WeightedSumCursor<'t> {
    table: &'t MangoldtTable,
    a: Complex64,
    j: u32,
    position: usize,
    acc: ComplexSum,
}

impl<'t> WeightedSumCursor<'t> {
    pub fn new(table: &'t MangoldtTable, a: Complex64, j: u32) -> Result<Self> {
        if j == 0 {
            return Err(Error::Domain("weight exponent j must be >= 1".into()));
        }
        Ok(Self {
            table,
            a,
            j,
            position: 0,
            acc: ComplexSum::new(),
        })
    }

    pub fn position(&self) -> usize {
        self.position
    }

    pub fn advance_to(&mut self, n_cut: usize) -> Result<Complex64> {
        self.table.check_cut(n_cut)?;
        if n_cut < self.position {
            return Err(Error::OutOfRange(format!(
                "cursor at {} cannot move back to {n_cut}",
                self.position
            )));
        }
        for m in self.position + 1..=n_cut {
            let lambda = self.table.values[m];
            if lambda > 0.0 {
                self.acc.add(weighted_term(lambda, m, self.a, self.j));
            }
        }
        self.position = n_cut;
        Ok(self.acc.value())
    }
}

/// `Σ_{m<=n_cut} Λ(m) (ln m)^(j-1) / m^a`, summed in ascending `m` with
/// compensation.
pub fn lambda_weighted_sum(table: &MangoldtTable, a: Complex64, j: u32, n_cut: usize) -> Result<Complex64> {
    WeightedSumCursor::new(table, a, j)?.advance_to(n_cut)
}

/// Closed form of `∫₀^N x^(-a) ln^(j-1) x dx` for `Re a < 1`:
///
/// `N^(1-a) Σ_{l=1}^{j} (-1)^(l-1) (j-1)!/(j-l)! (ln N)^(j-l) / (1-a)^l`.
///
/// The alternating factor is `(-1)^(l-1)`; the variant with `(-1)^(l+j)`
/// gives the wrong sign for every even `j`.
pub fn compensating_integral(a: Complex64, j: u32, big_n: f64) -> Result<Complex64> {
    if a == Complex64::new(1.0, 0.0) {
        return Err(Error::Pole("compensating integral has a pole at a = 1".into()));
    }
    if a.re >= 1.0 {
        return Err(Error::Domain(format!(
            "compensating integral diverges at 0 for Re a >= 1 (a = {a})"
        )));
    }
    if j == 0 {
        return Err(Error::Domain("weight exponent j must be >= 1".into()));
    }
    if !(big_n > 0.0 && big_n.is_finite()) {
        return Err(Error::Domain(format!("upper limit must be positive, got {big_n}")));
    }
    let w = Complex64::new(1.0, 0.0) - a;
    let ln_n = big_n.ln();
    let inv_w = w.inv();
    let mut acc = ComplexSum::new();
    // falling factorial (j-1)!/(j-l)! and (1-a)^(-l), built up across l
    let mut falling = 1.0;
    let mut inv_w_pow = inv_w;
    for l in 1..=j {
        let sign = if l % 2 == 1 { 1.0 } else { -1.0 };
        acc.add(inv_w_pow * (sign * falling * ln_n.powi((j - l) as i32)));
        falling *= (j - l) as f64;
        inv_w_pow *= inv_w;
    }
    Ok((w * ln_n).exp() * acc.value())
}

/// The zero-free strip width `Δ`, the margin `δ₀` and the constant `C` of
/// the error model `C · N^(1/2+Δ-Re a) · ln^(n-1) N`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundParameters {
    delta: f64,
    delta0: f64,
    constant_c: f64,
}

impl Default for BoundParameters {
    fn default() -> Self {
        Self {
            delta: 0.0,
            delta0: 1e-4,
            constant_c: 1.0,
        }
    }
}

impl BoundParameters {
    pub fn new(delta: f64, delta0: f64, constant_c: f64) -> Result<Self> {
        if !(0.0..0.5).contains(&delta) {
            return Err(Error::Domain(format!("delta must lie in [0, 1/2), got {delta}")));
        }
        if !(delta0 > 0.0) {
            return Err(Error::Domain(format!("delta0 must be positive, got {delta0}")));
        }
        if delta + delta0 >= 0.5 {
            return Err(Error::Domain(format!(
                "delta + delta0 must be below 1/2, got {}",
                delta + delta0
            )));
        }
        if !(constant_c > 0.0 && constant_c.is_finite()) {
            return Err(Error::Domain(format!("constant C must be positive, got {constant_c}")));
        }
        Ok(Self {
            delta,
            delta0,
            constant_c,
        })
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    pub fn delta0(&self) -> f64 {
        self.delta0
    }

    pub fn constant_c(&self) -> f64 {
        self.constant_c
    }

    /// Smallest `Re a` covered by the conditional statement.
    pub fn min_real_part(&self) -> f64 {
        0.5 + self.delta + self.delta0
    }

    pub fn bound(&self, n: u32, a: Complex64, big_n: usize) -> f64 {
        let x = big_n as f64;
        self.constant_c * x.powf(0.5 + self.delta - a.re) * x.ln().powi(n as i32 - 1)
    }
}
