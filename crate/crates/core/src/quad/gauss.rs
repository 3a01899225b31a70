//! Gauss quadrature rules via Golub–Welsch: nodes are the eigenvalues of
//! the symmetric tridiagonal Jacobi matrix of the weight's orthogonal
//! polynomials; weights are `μ₀` times the squared first components of the
//! normalized eigenvectors.
//!
//! One unified three-term recurrence covers both rules used in the crate:
//! Gauss–Legendre (Jacobi exponents `A = B = 0`) for smooth panels, and
//! Gauss–Jacobi with weight `(1-x)^A`, `A = -β ∈ (-1/2, 0)`, `B = 0`, which
//! absorbs the `(1-z)^{-β}` endpoint singularity of the inner kernels.
//!
//! Rules are cached: the eigen-decomposition runs once per distinct
//! `(weight, n)` pair for the lifetime of the process.

use nalgebra::{DMatrix, SymmetricEigen};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::special::gamma_fn;

/// A quadrature rule: `∫ f(x) w(x) dx ≈ Σ weights[i]·f(nodes[i])`.
///
/// For [`gauss_legendre`] the interval is `[-1, 1]` with `w ≡ 1`; for
/// [`gauss_jacobi_unit`] the interval is `[0, 1]` with `w(z) = (1-z)^{-β}`
/// already folded into the weights.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussRule {
    /// Quadrature abscissae, ascending.
    pub nodes: Vec<f64>,
    /// Positive weights, same length as `nodes`.
    pub weights: Vec<f64>,
}

/// Cache key: distinguishes the weight family and bit-exact parameters.
#[derive(Hash, PartialEq, Eq, Clone, Copy)]
enum RuleKey {
    Legendre(usize),
    JacobiUnit { beta_bits: u64, n: usize },
}

fn cache() -> &'static Mutex<HashMap<RuleKey, Arc<GaussRule>>> {
    static CACHE: OnceLock<Mutex<HashMap<RuleKey, Arc<GaussRule>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Golub–Welsch for the Jacobi weight `(1-x)^A (1+x)^B` on `[-1, 1]`.
fn golub_welsch(a: f64, b: f64, n: usize) -> GaussRule {
    assert!(n >= 1 && a > -1.0 && b > -1.0);
    // Three-term recurrence coefficients of the monic Jacobi polynomials.
    let mut diag = vec![0.0f64; n];
    let mut off = vec![0.0f64; n.saturating_sub(1)];
    let apb = a + b;
    diag[0] = (b - a) / (apb + 2.0);
    for (k, d) in diag.iter_mut().enumerate().skip(1) {
        let kf = k as f64;
        let denom = (2.0 * kf + apb) * (2.0 * kf + apb + 2.0);
        *d = (b * b - a * a) / denom;
    }
    if n > 1 {
        off[0] = (4.0 * (a + 1.0) * (b + 1.0) / ((apb + 2.0).powi(2) * (apb + 3.0))).sqrt();
    }
    for (k, o) in off.iter_mut().enumerate().skip(1) {
        let kf = (k + 1) as f64; // β_{k+1} couples rows k and k+1
        let num = 4.0 * kf * (kf + a) * (kf + b) * (kf + apb);
        let den =
            (2.0 * kf + apb).powi(2) * (2.0 * kf + apb + 1.0) * (2.0 * kf + apb - 1.0);
        *o = (num / den).sqrt();
    }
    // μ₀ = ∫ (1-x)^A (1+x)^B dx over [-1,1].
    let mu0 = 2f64.powf(apb + 1.0) * gamma_fn(a + 1.0).unwrap() * gamma_fn(b + 1.0).unwrap()
        / gamma_fn(apb + 2.0).unwrap();

    let mut m = DMatrix::<f64>::zeros(n, n);
    for i in 0..n {
        m[(i, i)] = diag[i];
        if i + 1 < n {
            m[(i, i + 1)] = off[i];
            m[(i + 1, i)] = off[i];
        }
    }
    let eig = SymmetricEigen::new(m);
    let mut pairs: Vec<(f64, f64)> = (0..n)
        .map(|j| {
            let node = eig.eigenvalues[j];
            let v0 = eig.eigenvectors[(0, j)];
            (node, mu0 * v0 * v0)
        })
        .collect();
    pairs.sort_by(|p, q| p.0.total_cmp(&q.0));
    GaussRule {
        nodes: pairs.iter().map(|p| p.0).collect(),
        weights: pairs.iter().map(|p| p.1).collect(),
    }
}

/// `n`-point Gauss–Legendre rule on `[-1, 1]`, cached.
pub fn gauss_legendre(n: usize) -> Arc<GaussRule> {
    let key = RuleKey::Legendre(n);
    let mut guard = cache().lock().unwrap();
    if let Some(rule) = guard.get(&key) {
        return Arc::clone(rule);
    }
    let rule = Arc::new(golub_welsch(0.0, 0.0, n));
    guard.insert(key, Arc::clone(&rule));
    rule
}

/// `n`-point Gauss–Jacobi rule for `∫₀¹ f(z)·(1-z)^{-β} dz ≈ Σ wᵢ f(zᵢ)`,
/// cached per `(β, n)`.
///
/// Nodes live in `(0, 1)`; the weights absorb both the singular factor and
/// the affine map from `[-1, 1]`, so `Σ wᵢ = 1/(1-β)` exactly (the moment
/// of the weight).  Valid for `β < 1` (we only use `β ∈ (0, 1/2)`).
pub fn gauss_jacobi_unit(beta: f64, n: usize) -> Arc<GaussRule> {
    let key = RuleKey::JacobiUnit {
        beta_bits: beta.to_bits(),
        n,
    };
    let mut guard = cache().lock().unwrap();
    if let Some(rule) = guard.get(&key) {
        return Arc::clone(rule);
    }
    let base = golub_welsch(-beta, 0.0, n);
    // z = (1+x)/2 maps [-1,1] → [0,1] with (1-z)^{-β} = 2^β (1-x)^{-β} and
    // dz = dx/2: weights pick up the factor 2^{β-1}.
    let scale = 2f64.powf(beta - 1.0);
    let rule = Arc::new(GaussRule {
        nodes: base.nodes.iter().map(|x| 0.5 * (1.0 + x)).collect(),
        weights: base.weights.iter().map(|w| scale * w).collect(),
    });
    guard.insert(key, Arc::clone(&rule));
    rule
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn legendre_integrates_polynomials_exactly() {
        let rule = gauss_legendre(8);
        // degree ≤ 15 is exact; check x^14 over [-1,1] = 2/15.
        let v: f64 = rule
            .nodes
            .iter()
            .zip(&rule.weights)
            .map(|(x, w)| w * x.powi(14))
            .sum();
        assert!((v - 2.0 / 15.0).abs() < 1e-14);
        let total: f64 = rule.weights.iter().sum();
        assert!((total - 2.0).abs() < 1e-14);
    }

    #[test]
    fn jacobi_unit_moments() {
        let beta = 1.0 / 3.0; // α = 1.5
        let rule = gauss_jacobi_unit(beta, 16);
        // ∫₀¹ (1-z)^{-β} dz = 1/(1-β)
        let m0: f64 = rule.weights.iter().sum();
        assert!((m0 - 1.0 / (1.0 - beta)).abs() < 1e-13);
        // ∫₀¹ z (1-z)^{-β} dz = B(2, 1-β) = 1/((1-β)(2-β)) · (1-β)... direct:
        // = Γ(2)Γ(1-β)/Γ(3-β) = 1/((1-β)(2-β)).
        let m1: f64 = rule
            .nodes
            .iter()
            .zip(&rule.weights)
            .map(|(z, w)| w * z)
            .sum();
        assert!((m1 - 1.0 / ((1.0 - beta) * (2.0 - beta))).abs() < 1e-13);
        assert!(rule.nodes.iter().all(|z| *z > 0.0 && *z < 1.0));
    }

    #[test]
    fn jacobi_handles_analytic_factor_spectrally() {
        // ∫₀¹ e^z (1-z)^{-1/4} dz against a node-doubled evaluation.
        let beta = 0.25;
        let eval = |n: usize| -> f64 {
            let rule = gauss_jacobi_unit(beta, n);
            rule.nodes
                .iter()
                .zip(&rule.weights)
                .map(|(z, w)| w * z.exp())
                .sum()
        };
        let v32 = eval(32);
        let v64 = eval(64);
        assert!((v32 - v64).abs() < 1e-14 * v64.abs());
    }
}
