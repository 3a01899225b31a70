//! Quadrature infrastructure: Gauss rules (Legendre and Jacobi) built by
//! Golub–Welsch, a tanh-sinh (double-exponential) integrator for
//! endpoint-singular integrands, and the shared [`QuadConfig`].

mod gauss;
mod tanh_sinh;

pub use gauss::{gauss_jacobi_unit, gauss_legendre, GaussRule};
pub use tanh_sinh::tanh_sinh;

use crate::error::{Error, Result};

/// Tolerances, node counts and budgets shared by all quadrature in the
/// crate.
///
/// * `abs_tol`, `rel_tol` — target absolute/relative errors for outer
///   integrals; the achieved estimate is reported alongside each result.
/// * `jacobi_nodes` — base Gauss–Jacobi node count for the inner `g₁`, `g₂`
///   integrals; doubled up to 4× on validation failure.
/// * `max_half_periods` — hard budget of half-period panels for the outer
///   Fourier sums.
/// * `accel_depth` — maximum depth of the iterated-averaging (Euler)
///   acceleration applied to the alternating half-period sums.
/// * `outer_cutoff` — truncation point for absolutely convergent tails,
///   expressed as the decay exponent `a·t^α` beyond which the envelope
///   `e^{-a·t^α}` is below every achievable tolerance (`e^{-42} ≈ 6e-19`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadConfig {
    /// Absolute tolerance for outer integrals.
    pub abs_tol: f64,
    /// Relative tolerance for outer integrals and inner-kernel validation.
    pub rel_tol: f64,
    /// Base Gauss–Jacobi node count (≥ 8).
    pub jacobi_nodes: usize,
    /// Budget of half-period panels per outer integral (≥ accel_depth).
    pub max_half_periods: usize,
    /// Euler-acceleration depth (≥ 2).
    pub accel_depth: usize,
    /// Decay-exponent cutoff for absolutely convergent tails.
    pub outer_cutoff: f64,
}

impl Default for QuadConfig {
    fn default() -> Self {
        QuadConfig {
            abs_tol: 1e-15,
            rel_tol: 1e-10,
            jacobi_nodes: 32,
            max_half_periods: 20_000,
            accel_depth: 12,
            outer_cutoff: 42.0,
        }
    }
}

impl QuadConfig {
    /// Validate the invariants; every public operation taking a config
    /// calls this first.
    pub fn validate(&self) -> Result<()> {
        if !(self.abs_tol > 0.0) || !(self.rel_tol > 0.0) {
            return Err(Error::domain(
                "QuadConfig",
                format!(
                    "tolerances must be positive, got abs_tol={}, rel_tol={}",
                    self.abs_tol, self.rel_tol
                ),
            ));
        }
        if self.jacobi_nodes < 8 {
            return Err(Error::domain(
                "QuadConfig",
                format!("jacobi_nodes must be >= 8, got {}", self.jacobi_nodes),
            ));
        }
        if self.accel_depth < 2 || self.max_half_periods < self.accel_depth {
            return Err(Error::domain(
                "QuadConfig",
                format!(
                    "need max_half_periods >= accel_depth >= 2, got {} and {}",
                    self.max_half_periods, self.accel_depth
                ),
            ));
        }
        if !(self.outer_cutoff > 0.0) {
            return Err(Error::domain(
                "QuadConfig",
                format!("outer_cutoff must be positive, got {}", self.outer_cutoff),
            ));
        }
        Ok(())
    }
}
