//! Process parameterization: validate `(α, c)` and reduce a general Lévy
//! constant `c` to the canonical normalization `c₀ = 1/Γ(-α)` by spatial
//! scaling.
//!
//! If `S₁` has the canonical density `s`, the process with Lévy constant
//! `c` has supremum density `s_c(x) = γ⁻¹·s(x/γ)` where
//! `γ = (c·Γ(-α))^{1/α}`; every downstream evaluation for non-canonical
//! `c` is obtained through this transfer.

use crate::error::{Error, Result};
use crate::special::{check_alpha, recip_gamma};

/// Validated process parameters with the derived spatial scale.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StableSpec {
    /// Stability index, strictly inside `(1, 2)`.
    pub alpha: f64,
    /// Lévy density constant, `> 0`.
    pub c: f64,
    /// Spatial scale `γ = (c·Γ(-α))^{1/α} > 0`; equals 1 exactly when
    /// `c = 1/Γ(-α)`.
    pub gamma_scale: f64,
}

/// Validate `(alpha, c)` and compute the scale factor.
///
/// # Errors
/// [`Error::Domain`] naming the offending field when `alpha ∉ (1, 2)`
/// (boundaries rejected, every formula degenerates there) or `c ≤ 0`.
pub fn make_spec(alpha: f64, c: f64) -> Result<StableSpec> {
    check_alpha("make_spec(alpha)", alpha)?;
    if !(c > 0.0) {
        return Err(Error::domain(
            "make_spec(c)",
            format!("c must be > 0, got {c}"),
        ));
    }
    // γ = (c/c₀)^{1/α} with c₀ = 1/Γ(-α); Γ(-α) enters via the reflection
    // formula inside recip_gamma, never a pole-adjacent direct evaluation.
    let c_canonical = recip_gamma(-alpha);
    let gamma_scale = (c / c_canonical).powf(1.0 / alpha);
    if !(gamma_scale > 0.0) || !gamma_scale.is_finite() {
        return Err(Error::domain(
            "make_spec(c)",
            format!("derived gamma_scale {gamma_scale} is not a positive real; c={c} out of representable range"),
        ));
    }
    Ok(StableSpec {
        alpha,
        c,
        gamma_scale,
    })
}

impl StableSpec {
    /// Convenience: the canonical spec for this α (`γ = 1`).
    pub fn canonical(alpha: f64) -> Result<StableSpec> {
        check_alpha("StableSpec::canonical", alpha)?;
        Ok(StableSpec {
            alpha,
            c: recip_gamma(-alpha),
            gamma_scale: 1.0,
        })
    }
}

/// Transfer a canonical-density evaluation to Lévy constant `c`:
/// returns `γ⁻¹ · s_canonical(x/γ)`.
///
/// The same transfer applies to any canonical *density*; CDF and Laplace
/// transforms scale as `F_c(x) = F(x/γ)` and `L_c(λ) = L(γλ)` and are
/// handled by the callers directly.
///
/// # Errors
/// [`Error::Domain`] if `x ≤ 0`; whatever the evaluator itself returns.
pub fn canonical_density_transfer(
    spec: &StableSpec,
    x: f64,
    s_canonical: &dyn Fn(f64) -> Result<f64>,
) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::domain(
            "canonical_density_transfer",
            format!("x must be > 0, got {x}"),
        ));
    }
    Ok(s_canonical(x / spec.gamma_scale)? / spec.gamma_scale)
}
