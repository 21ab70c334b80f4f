//! Reference evaluators independent of the von Mangoldt machinery: ζ and its
//! derivatives, Hurwitz ζ at integer order, digamma, log-gamma, a
//! Cauchy-integral differentiator and adaptive quadrature.

mod cauchy;
mod gamma;
mod hurwitz;
pub mod quadrature;
mod zeta;

pub use cauchy::{cauchy_derivative, cauchy_log_derivative};
pub use gamma::{digamma, log_gamma};
pub use hurwitz::hurwitz_zeta;
pub use zeta::{
    log_derivatives_from, log_zeta, log_zeta_derivatives, zeta, zeta_with_derivatives, MAX_DERIVATIVE_ORDER,
};

use crate::error::{Error, Result};

/// `B_2, B_4, …, B_30`.
pub(crate) const BERNOULLI_EVEN: [f64; 15] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
];

/// Tuning knobs for the Euler–Maclaurin evaluators, the Cauchy
/// differentiator and the adaptive quadrature.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PrecisionConfig {
    /// Minimum Euler–Maclaurin main-sum length `M`; raised to
    /// `ceil(2|Im s|) + 20` at larger heights.
    pub em_cutoff: usize,
    /// Number `K` of `B_{2k}` correction terms.
    pub bernoulli_order: usize,
    /// Trapezoid nodes on the Cauchy circle (doubled once for the
    /// convergence check).
    pub cauchy_points: usize,
    pub cauchy_radius: f64,
    pub quad_rel_tol: f64,
}

impl Default for PrecisionConfig {
    fn default() -> Self {
        Self {
            em_cutoff: 20,
            bernoulli_order: 10,
            cauchy_points: 64,
            cauchy_radius: 0.25,
            quad_rel_tol: 1e-13,
        }
    }
}

impl PrecisionConfig {
    pub fn validate(&self) -> Result<()> {
        if self.em_cutoff < 10 {
            return Err(Error::Domain(format!(
                "em_cutoff must be >= 10, got {}",
                self.em_cutoff
            )));
        }
        if !(1..=BERNOULLI_EVEN.len()).contains(&self.bernoulli_order) {
            return Err(Error::Domain(format!(
                "bernoulli_order must lie in 1..=15, got {}",
                self.bernoulli_order
            )));
        }
        if self.cauchy_points < 8 {
            return Err(Error::Domain(format!(
                "cauchy_points must be >= 8, got {}",
                self.cauchy_points
            )));
        }
        if !(self.cauchy_radius > 0.0 && self.cauchy_radius.is_finite()) {
            return Err(Error::Domain(format!(
                "cauchy_radius must be positive, got {}",
                self.cauchy_radius
            )));
        }
        if !(self.quad_rel_tol > 0.0 && self.quad_rel_tol < 1.0) {
            return Err(Error::Domain(format!(
                "quad_rel_tol must lie in (0, 1), got {}",
                self.quad_rel_tol
            )));
        }
        Ok(())
    }

    /// Copy with a different Cauchy radius.
    pub fn with_radius(&self, radius: f64) -> Self {
        Self {
            cauchy_radius: radius,
            ..*self
        }
    }

    pub(crate) fn em_length(&self, imag: f64) -> usize {
        self.em_cutoff.max((2.0 * imag.abs()).ceil() as usize + 20)
    }
}
