//! Special functions and the α-dependent closed-form constants consumed by
//! every other module: gamma, reciprocal gamma, lower incomplete gamma, and
//! the constants `a`, `b`, `β`, `k₁`, `k₂`, `l₁`, `l₂`, `1/Γ(-α)`.
//!
//! Gamma is evaluated with the Lanczos approximation (Godfrey's `g = 10.9005`
//! coefficient set, accurate to ~1e-14 relative over the real line after
//! reflection).  The reciprocal gamma is a *total* function: it returns exact
//! zero at the poles of Γ and is the only route used for series coefficients,
//! so coefficient evaluation never faults when an argument walks down the
//! negative axis.

use crate::error::{Error, Result};
use std::f64::consts::{E, PI};

/// Lanczos shift parameter `g` (Godfrey's choice).
const GAMMA_R: f64 = 10.900511;

/// Lanczos partial-fraction coefficients `d_k` for `g = 10.900511`.
const GAMMA_DK: [f64; 11] = [
    2.48574089138753565546e-5,
    1.05142378581721974210,
    -3.45687097222016235469,
    4.51227709466894823700,
    -2.98285225323576655721,
    1.05639711577126713077,
    -1.95428773191645869583e-1,
    1.70970543404441224307e-2,
    -5.71926117404305781283e-4,
    4.63399473359905636708e-6,
    -2.71994908488607703910e-9,
];

/// `2·sqrt(e/π)`, the Lanczos front factor.
const TWO_SQRT_E_OVER_PI: f64 = 1.860_382_734_205_265_7;

/// `ln(2·sqrt(e/π))`.
const LN_2_SQRT_E_OVER_PI: f64 = 0.620_782_237_635_245_2;

/// Largest finite argument of Γ in `f64` (Γ overflows above ≈171.62).
pub const GAMMA_OVERFLOW_ARG: f64 = 171.61447887182298;

/// Lanczos partial-fraction sum `d₀ + Σ d_k/(x+k-1)`; valid for `x ≥ 0.5`.
fn lanczos_sum(x: f64) -> f64 {
    let mut s = GAMMA_DK[0];
    for (k, dk) in GAMMA_DK.iter().enumerate().skip(1) {
        s += dk / (x + k as f64 - 1.0);
    }
    s
}

/// Γ(x) for `x ≥ 0.5` only (no reflection, no pole handling).
///
/// The Lanczos power is applied as a square of the half power so the
/// intermediate stays finite all the way up to the true overflow point
/// of Γ (`x ≈ 171.62`); a single `powf(x - 0.5)` already overflows near
/// `x ≈ 169.6` while Γ(x) itself is still representable, which would
/// silently zero `recip_gamma` two units early.
fn gamma_half_up(x: f64) -> f64 {
    debug_assert!(x >= 0.5);
    let half = ((x - 0.5 + GAMMA_R) / E).powf(0.5 * (x - 0.5));
    lanczos_sum(x) * TWO_SQRT_E_OVER_PI * half * half
}

/// ln Γ(x) for `x ≥ 0.5` only.
fn ln_gamma_half_up(x: f64) -> f64 {
    debug_assert!(x >= 0.5);
    lanczos_sum(x).ln() + LN_2_SQRT_E_OVER_PI + (x - 0.5) * ((x - 0.5 + GAMMA_R) / E).ln()
}

/// `sin(πx)` with exact argument reduction.
///
/// The reduction `r = x - round(x)` is exact in floating point, so the result
/// keeps full relative accuracy even for large `|x|`, and is *exactly* zero
/// at integers.  For `|x| ≥ 2^53` every representable value is an even
/// integer and the result is exactly 0.
pub fn sin_pi(x: f64) -> f64 {
    if !x.is_finite() {
        return f64::NAN;
    }
    if x.abs() >= 9.007199254740992e15 {
        // 2^53: beyond this every f64 is an even integer.
        return 0.0;
    }
    let n = x.round();
    let r = x - n; // exact; |r| ≤ 0.5
    let s = (PI * r).sin();
    if (n as i64) & 1 == 0 {
        s
    } else {
        -s
    }
}

/// Γ(z) for real `z` that is not a non-positive integer.
///
/// Relative error ≲ 1e-14 for `|z| ≤ 50`.  Poles are rejected as domain
/// errors; use [`recip_gamma`] when a total function is required.
///
/// # Errors
/// [`Error::Domain`] if `z` is NaN or a non-positive integer (a pole of Γ).
pub fn gamma_fn(z: f64) -> Result<f64> {
    if z.is_nan() {
        return Err(Error::domain("gamma_fn", "argument is NaN"));
    }
    if z <= 0.0 && z == z.floor() {
        return Err(Error::domain(
            "gamma_fn",
            format!("argument {z} is a non-positive integer (pole of gamma)"),
        ));
    }
    if z < 0.5 {
        // Reflection: Γ(z) = π / (sin(πz) · Γ(1-z)).
        Ok(PI / (sin_pi(z) * gamma_half_up(1.0 - z)))
    } else {
        Ok(gamma_half_up(z))
    }
}

/// 1/Γ(z), entire in `z`; total over all real inputs.
///
/// Returns exact 0 at the poles of Γ (non-positive integers) and at inputs
/// so large in magnitude that Γ overflows; computed via the reflection
/// `1/Γ(z) = Γ(1-z)·sin(πz)/π` for `z < 0.5`.  For very negative
/// non-integer `z`, `Γ(1-z)` overflows and the result is `±inf`; callers
/// that walk far down the negative axis must switch to
/// [`ln_abs_recip_gamma_sign`].
pub fn recip_gamma(z: f64) -> f64 {
    if z.is_nan() {
        return f64::NAN;
    }
    if z >= 0.5 {
        // Γ(z) ≥ Γ(1.4616..) > 0 here; overflow of Γ gives +inf → 1/inf = 0,
        // which is the correct limit of the entire function.
        1.0 / gamma_half_up(z)
    } else {
        let s = sin_pi(z);
        if s == 0.0 {
            // Pole of Γ, including every |z| ≥ 2^53: 1/Γ is exactly 0.
            return 0.0;
        }
        s * gamma_half_up(1.0 - z) / PI
    }
}

/// `(ln|Γ(z)|, sign(Γ(z)))`; at a pole returns `(inf, 0.0)`.
///
/// The log-space companion of [`gamma_fn`] for arguments where Γ itself
/// overflows `f64` (|z| beyond ~171).  `sign` is `±1.0`, or `0.0` at poles
/// so that products with the sign naturally annihilate the term.
pub fn ln_abs_gamma_sign(z: f64) -> (f64, f64) {
    if z.is_nan() {
        return (f64::NAN, f64::NAN);
    }
    if z >= 0.5 {
        return (ln_gamma_half_up(z), 1.0);
    }
    let s = sin_pi(z);
    if s == 0.0 {
        return (f64::INFINITY, 0.0);
    }
    // |Γ(z)| = π / (|sin πz| · Γ(1-z))
    let ln_abs = PI.ln() - s.abs().ln() - ln_gamma_half_up(1.0 - z);
    (ln_abs, s.signum())
}

/// `(ln|1/Γ(z)|, sign(1/Γ(z)))`; at a pole returns `(-inf, 0.0)`.
pub fn ln_abs_recip_gamma_sign(z: f64) -> (f64, f64) {
    let (l, s) = ln_abs_gamma_sign(z);
    (-l, s)
}

/// Smallest positive normal used to guard the Lentz continued fraction.
const LENTZ_TINY: f64 = 1e-300;

/// Scaled upper incomplete gamma continued fraction:
/// returns `h` such that `Γ(eta, u) = e^{-u} · u^{eta} · h`.
///
/// Converges for `u ≥ eta + 1` (modified Lentz algorithm).  Exposed within
/// the crate so the Laplace module can form `e^{u}·Γ(eta,u) = u^{eta}·h`
/// without ever calling `exp` on a large argument.
pub(crate) fn upper_gamma_cf_scaled(eta: f64, u: f64) -> Result<f64> {
    let eps = 1e-16;
    let mut b = u + 1.0 - eta;
    let mut c = 1.0 / LENTZ_TINY;
    let mut d = 1.0 / b;
    let mut h = d;
    for i in 1..=500 {
        let an = -(i as f64) * (i as f64 - eta);
        b += 2.0;
        d = an * d + b;
        if d.abs() < LENTZ_TINY {
            d = LENTZ_TINY;
        }
        c = b + an / c;
        if c.abs() < LENTZ_TINY {
            c = LENTZ_TINY;
        }
        d = 1.0 / d;
        let del = d * c;
        h *= del;
        if (del - 1.0).abs() < eps {
            return Ok(h);
        }
    }
    Err(Error::quadrature(
        "upper_gamma_cf_scaled",
        format!("continued fraction did not converge at eta={eta}, u={u}"),
    ))
}

/// Lower incomplete gamma γ(eta, u) = ∫₀ᵘ y^{eta-1} e^{-y} dy.
///
/// Monotone nondecreasing in `u`, tends to `Γ(eta)` as `u → ∞`; relative
/// error ≤ 1e-12.  Uses the ascending series for `u < eta + 1` and the
/// Lentz continued fraction for the complementary function otherwise.
///
/// # Errors
/// [`Error::Domain`] if `eta ≤ 0` or `u < 0` (or either is NaN).
pub fn lower_inc_gamma(eta: f64, u: f64) -> Result<f64> {
    if !(eta > 0.0) {
        return Err(Error::domain(
            "lower_inc_gamma",
            format!("eta must be > 0, got {eta}"),
        ));
    }
    if !(u >= 0.0) {
        return Err(Error::domain(
            "lower_inc_gamma",
            format!("u must be >= 0, got {u}"),
        ));
    }
    if u == 0.0 {
        return Ok(0.0);
    }
    let ln_gamma_eta = ln_gamma_half_up_or_reflect(eta);
    if u < eta + 1.0 {
        // Ascending series: γ(eta,u) = e^{-u} u^{eta} Σ_{n≥0} u^n / (eta)_{n+1}.
        let mut ap = eta;
        let mut del = 1.0 / eta;
        let mut sum = del;
        for _ in 0..500 {
            ap += 1.0;
            del *= u / ap;
            sum += del;
            if del.abs() < sum.abs() * 1e-16 {
                let ln_pref = -u + eta * u.ln();
                return Ok(sum * ln_pref.exp());
            }
        }
        Err(Error::quadrature(
            "lower_inc_gamma",
            format!("series did not converge at eta={eta}, u={u}"),
        ))
    } else {
        // γ = Γ(eta) - Γ(eta,u); the complement is small here so the
        // subtraction is benign.
        let h = upper_gamma_cf_scaled(eta, u)?;
        let ln_upper = -u + eta * u.ln();
        let upper = if ln_upper < -700.0 {
            0.0
        } else {
            ln_upper.exp() * h
        };
        Ok(ln_gamma_eta.exp() - upper)
    }
}

/// ln Γ(eta) for eta > 0 (reflection never needed; helper for clarity).
fn ln_gamma_half_up_or_reflect(eta: f64) -> f64 {
    if eta >= 0.5 {
        ln_gamma_half_up(eta)
    } else {
        // 0 < eta < 0.5: Γ(eta) = π / (sin(π eta) Γ(1-eta)), all positive.
        PI.ln() - sin_pi(eta).ln() - ln_gamma_half_up(1.0 - eta)
    }
}

/// The trigonometric constants of the integral representation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrigConstants {
    /// `a = -cos(απ/2) > 0` for α ∈ (1,2).
    pub a: f64,
    /// `b = sin(απ/2) > 0` for α ∈ (1,2).
    pub b: f64,
    /// `β = 1 - 1/α ∈ (0, 1/2)`.
    pub beta: f64,
}

/// The tail-asymptote constants: `k₁`, `k₂` from the kernel third
/// derivatives, `l₁`, `l₂` from the Fourier-tail theorem, and the canonical
/// Lévy constant `c = 1/Γ(-α)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AsymptoteConstants {
    /// `k₁ = a·α(α-1)(2-α)`.
    pub k1: f64,
    /// `k₂ = b·α(α-1)(2-α)`.
    pub k2: f64,
    /// `l₁ = -π / (2Γ(3-α) cos(απ/2)) = π / (2Γ(3-α)·a)`.
    pub l1: f64,
    /// `l₂ = π / (2Γ(3-α) sin(απ/2)) = π / (2Γ(3-α)·b)`.
    pub l2: f64,
    /// `c = 1/Γ(-α) > 0`, the canonical Lévy density constant.
    pub c_canonical: f64,
}

/// Validate `alpha ∈ (1, 2)` strictly, naming `op` in the error.
pub(crate) fn check_alpha(op: &'static str, alpha: f64) -> Result<()> {
    if alpha > 1.0 && alpha < 2.0 {
        Ok(())
    } else {
        Err(Error::domain(
            op,
            format!("alpha must lie strictly in (1, 2), got {alpha}"),
        ))
    }
}

/// Compute `a = -cos(απ/2)`, `b = sin(απ/2)`, `β = 1 - 1/α`.
///
/// Both trig values are formed through [`sin_pi`] with exactly reduced
/// arguments, so `a² + b² = 1` holds to 1e-15 and rational α values give
/// values exact to one ulp (e.g. α = 3/2 ⇒ a = b = √2/2).
///
/// # Errors
/// [`Error::Domain`] if `alpha ∉ (1, 2)`.
pub fn trig_constants(alpha: f64) -> Result<TrigConstants> {
    check_alpha("trig_constants", alpha)?;
    let half = 0.5 * alpha; // ∈ (1/2, 1)
    // cos(πy) = sin(π(1/2 - y)); both via sin_pi for exact reduction.
    let a = -sin_pi(0.5 - half);
    let b = sin_pi(half);
    Ok(TrigConstants {
        a,
        b,
        beta: 1.0 - 1.0 / alpha,
    })
}

/// Compute `k₁`, `k₂`, `l₁`, `l₂` and `c = 1/Γ(-α)`.
///
/// All five are strictly positive on α ∈ (1,2) and satisfy the constant
/// identity `(k₁l₁ + k₂l₂)/π = 1/Γ(-α)` to ~1e-15: both sides reduce
/// algebraically to `-α·sin(απ)Γ(α)/π`, so the identity is exact and any
/// residual is pure rounding.
///
/// # Errors
/// [`Error::Domain`] if `alpha ∉ (1, 2)`.
pub fn asymptote_constants(alpha: f64) -> Result<AsymptoteConstants> {
    let t = trig_constants(alpha)?;
    let pref = alpha * (alpha - 1.0) * (2.0 - alpha);
    let g3 = gamma_half_up(3.0 - alpha); // 3-α ∈ (1,2): pole-free
    Ok(AsymptoteConstants {
        k1: t.a * pref,
        k2: t.b * pref,
        l1: PI / (2.0 * g3 * t.a),
        l2: PI / (2.0 * g3 * t.b),
        c_canonical: recip_gamma(-alpha),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamma_classical_values() {
        assert!((gamma_fn(1.0).unwrap() - 1.0).abs() < 1e-14);
        let g_half = gamma_fn(0.5).unwrap();
        assert!((g_half - PI.sqrt()).abs() < 1e-14 * PI.sqrt());
        // Γ(-3/2) = 4√π/3 via recurrence.
        let g = gamma_fn(-1.5).unwrap();
        let expect = 4.0 * PI.sqrt() / 3.0;
        assert!((g - expect).abs() < 1e-13 * expect);
    }

    #[test]
    fn gamma_rejects_poles() {
        for z in [0.0, -1.0, -2.0, -100.0] {
            assert!(matches!(gamma_fn(z), Err(Error::Domain { .. })));
        }
    }

    #[test]
    fn recip_gamma_total() {
        assert_eq!(recip_gamma(0.0), 0.0);
        assert_eq!(recip_gamma(-7.0), 0.0);
        assert!((recip_gamma(2.0) - 1.0).abs() < 1e-14);
        // 1/Γ(-1/3) = sin(-π/3)Γ(4/3)/π
        let v = recip_gamma(-1.0 / 3.0);
        assert!((v - (-0.24616270387388277)).abs() < 1e-14, "{v}");
    }

    #[test]
    fn gamma_stays_finite_to_true_overflow_edge() {
        // Γ(x) is representable up to x ≈ 171.62; a naive single-powf
        // Lanczos overflows near 169.6 and poisons the series direct
        // branch with exact-zero reciprocals.  Regression for that.
        let g170 = gamma_fn(170.0).unwrap();
        assert!(g170.is_finite());
        assert!((g170 - 4.2690680090047053e304).abs() < 1e-12 * g170);
        let r170 = recip_gamma(170.0);
        assert!(
            (r170 - 2.34243164524601e-305).abs() < 1e-12 * r170,
            "recip_gamma(170) = {r170:e}"
        );
        let r171 = recip_gamma(171.0);
        assert!((r171 - 1.3779009677917706e-307).abs() < 1e-11 * r171);
        // Past the edge the entire function underflows to 0 honestly.
        assert_eq!(recip_gamma(200.0), 0.0);
    }

    #[test]
    fn sin_pi_integers_exact() {
        for n in -6i32..=6 {
            assert_eq!(sin_pi(n as f64), 0.0);
        }
        assert!((sin_pi(0.5) - 1.0).abs() < 1e-15);
        assert!((sin_pi(2.5) - 1.0).abs() < 1e-15);
        assert!((sin_pi(1.5) + 1.0).abs() < 1e-15);
    }

    #[test]
    fn lentz_cf_matches_series_at_crossover() {
        // γ from the series just below the crossover must agree with
        // Γ(eta) - Γ(eta,u) from the CF just above it.
        let eta = 0.7;
        for u in [eta + 0.9, eta + 1.1] {
            let v = lower_inc_gamma(eta, u).unwrap();
            assert!(v > 0.0 && v < gamma_fn(eta).unwrap());
        }
        let lo = lower_inc_gamma(eta, eta + 0.999).unwrap();
        let hi = lower_inc_gamma(eta, eta + 1.001).unwrap();
        assert!(hi > lo && (hi - lo) / lo < 1e-3);
    }
}
