//! Globally adaptive Gauss–Kronrod (7, 15) quadrature for complex-valued
//! integrands of a real variable.

#![allow(clippy::excessive_precision)]

use num_complex::Complex64;

use crate::error::{Error, Result};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_5,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_48,
    0.0,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_224,
    0.063_092_092_629_978_56,
    0.104_790_010_322_250_19,
    0.140_653_259_715_525_92,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_42,
    0.204_432_940_075_298_89,
    0.209_482_141_084_727_82,
];

// Gauss weights at XGK[1], XGK[3], XGK[5], XGK[7]
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_64,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

const MAX_INTERVALS: usize = 4000;

#[derive(Debug, Clone, Copy)]
pub struct Estimate {
    pub value: Complex64,
    pub error: f64,
    pub intervals: usize,
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    lo: f64,
    hi: f64,
    value: Complex64,
    error: f64,
}

fn gauss_kronrod<F: Fn(f64) -> Complex64>(f: &F, lo: f64, hi: f64) -> Panel {
    let center = 0.5 * (lo + hi);
    let half = 0.5 * (hi - lo);
    let fc = f(center);
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for (i, (&x, &w)) in XGK.iter().zip(WGK.iter()).take(7).enumerate() {
        let dx = half * x;
        let pair = f(center - dx) + f(center + dx);
        kronrod += pair * w;
        if i % 2 == 1 {
            gauss += pair * WG[i / 2];
        }
    }
    Panel {
        lo,
        hi,
        value: kronrod * half,
        error: ((kronrod - gauss) * half).norm(),
    }
}

/// `∫_lo^hi f(x) dx` to `max(abs_tol, rel_tol·|I|)`, bisecting the panel
/// with the largest error estimate.
pub fn integrate<F: Fn(f64) -> Complex64>(f: F, lo: f64, hi: f64, rel_tol: f64, abs_tol: f64) -> Result<Estimate> {
    if !(lo.is_finite() && hi.is_finite()) {
        return Err(Error::Domain("integration limits must be finite".into()));
    }
    if lo == hi {
        return Ok(Estimate {
            value: Complex64::new(0.0, 0.0),
            error: 0.0,
            intervals: 0,
        });
    }
    let mut panels = vec![gauss_kronrod(&f, lo, hi)];
    loop {
        let value: Complex64 = panels.iter().map(|p| p.value).sum();
        let error: f64 = panels.iter().map(|p| p.error).sum();
        if !value.is_finite() {
            return Err(Error::NonConvergence("integrand produced a non-finite value".into()));
        }
        // floor at the rounding level of the accumulated panels
        let rounding = 50.0 * f64::EPSILON * panels.iter().map(|p| p.value.norm()).sum::<f64>();
        if error <= abs_tol.max(rel_tol * value.norm()).max(rounding) {
            return Ok(Estimate {
                value,
                error,
                intervals: panels.len(),
            });
        }
        if panels.len() >= MAX_INTERVALS {
            return Err(Error::NonConvergence(format!(
                "quadrature error {error:.3e} above tolerance after {MAX_INTERVALS} panels"
            )));
        }
        let (worst, _) = panels
            .iter()
            .enumerate()
            .max_by(|x, y| x.1.error.total_cmp(&y.1.error))
            .expect("non-empty panel list");
        let p = panels.swap_remove(worst);
        let mid = 0.5 * (p.lo + p.hi);
        panels.push(gauss_kronrod(&f, p.lo, mid));
        panels.push(gauss_kronrod(&f, mid, p.hi));
    }
}

/// `∫_lo^∞ f(u) du` through the map `u = lo + t/(1-t)`, `t ∈ [0, 1)`.
pub fn integrate_to_infinity<F: Fn(f64) -> Complex64>(f: F, lo: f64, rel_tol: f64, abs_tol: f64) -> Result<Estimate> {
    integrate(
        |t| {
            let s = 1.0 - t;
            let u = lo + t / s;
            // nodes rounded onto t = 1; the integrand is taken to vanish at infinity
            if !u.is_finite() {
                return Complex64::new(0.0, 0.0);
            }
            let jac = 1.0 / (s * s);
            let value = f(u);
            if value == Complex64::new(0.0, 0.0) {
                value
            } else {
                value * jac
            }
        },
        0.0,
        1.0,
        rel_tol,
        abs_tol,
    )
}
