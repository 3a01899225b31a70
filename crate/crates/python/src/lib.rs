//! Python bindings for `stablesup_core`.
//!
//! The module mirrors the CLI surface: every evaluation function takes the
//! stability index `alpha` and an optional Lévy constant `c`.  Omitting `c`
//! selects the canonical normalization `c = 1/Γ(-α)` (spatial scale
//! `γ = 1`); passing `c` re-scales space through `γ = (c·Γ(-α))^{1/α}`, so
//! densities become `γ⁻¹·s(x/γ)`, probabilities evaluate at `x/γ`, and the
//! Laplace transform evaluates at `γλ`.
//!
//! Core errors map onto Python exceptions by kind: domain violations raise
//! `ValueError`, representable-range violations raise `OverflowError`,
//! precision loss raises `ArithmeticError`, and quadrature or fit failures
//! raise `RuntimeError`.

use std::collections::BTreeMap;

use pyo3::exceptions::{PyArithmeticError, PyOverflowError, PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use stablesup_core::quad::QuadConfig;
use stablesup_core::{asymptotics, laplace, montecarlo, oscint, params, series, special};
use stablesup_core::{Error as CoreError, StableSpec};

fn to_py(err: CoreError) -> PyErr {
    let msg = err.to_string();
    match err {
        CoreError::Domain { .. } => PyValueError::new_err(msg),
        CoreError::Range { .. } => PyOverflowError::new_err(msg),
        CoreError::PrecisionLoss { .. } => PyArithmeticError::new_err(msg),
        CoreError::QuadratureFailure { .. } | CoreError::FitFailure { .. } => {
            PyRuntimeError::new_err(msg)
        }
    }
}

fn spec_for(alpha: f64, c: Option<f64>) -> PyResult<StableSpec> {
    match c {
        Some(c) => params::make_spec(alpha, c),
        None => StableSpec::canonical(alpha),
    }
    .map_err(to_py)
}

fn cfg_for(tol: f64) -> PyResult<QuadConfig> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(PyValueError::new_err(format!(
            "tol must be a positive finite number, got {tol}"
        )));
    }
    let mut cfg = QuadConfig::default();
    cfg.rel_tol = tol.min(1e-8);
    Ok(cfg)
}

fn run_for(paths: usize, steps: usize, seed: u64) -> montecarlo::McRun {
    montecarlo::McRun {
        n_paths: paths,
        n_steps: steps,
        seed,
        ..montecarlo::McRun::default()
    }
}

/// Parameter bundle: stability index `alpha`, Lévy constant `c`, and the
/// induced spatial scale `gamma_scale = (c·Γ(-α))^{1/α}`.
#[pyclass(frozen, get_all, skip_from_py_object)]
#[derive(Clone, Copy)]
struct Spec {
    alpha: f64,
    c: f64,
    gamma_scale: f64,
}

#[pymethods]
impl Spec {
    /// Validate `(alpha, c)`; omitting `c` selects `c = 1/Γ(-α)`, γ = 1.
    #[new]
    #[pyo3(signature = (alpha, c=None))]
    fn new(alpha: f64, c: Option<f64>) -> PyResult<Self> {
        let s = spec_for(alpha, c)?;
        Ok(Spec {
            alpha: s.alpha,
            c: s.c,
            gamma_scale: s.gamma_scale,
        })
    }

    fn __repr__(&self) -> String {
        format!(
            "Spec(alpha={}, c={}, gamma_scale={})",
            self.alpha, self.c, self.gamma_scale
        )
    }
}

/// Density `s(x)` of the supremum at time one.
///
/// `method` is `'auto'` (series inside its trust region, oscillatory
/// integral beyond), `'series'`, or `'integral'`.  Forcing the series
/// beyond its trust point raises `ArithmeticError` rather than returning
/// a cancellation-poisoned value.
#[pyfunction]
#[pyo3(signature = (alpha, x, c=None, method="auto", tol=1e-10))]
fn density(alpha: f64, x: f64, c: Option<f64>, method: &str, tol: f64) -> PyResult<f64> {
    let spec = spec_for(alpha, c)?;
    let xc = x / spec.gamma_scale;
    let xt = oscint::x_trust(alpha).map_err(to_py)?;
    let use_series = match method {
        "auto" => xc <= xt,
        "series" => true,
        "integral" => false,
        other => {
            return Err(PyValueError::new_err(format!(
                "method must be 'auto', 'series' or 'integral', got {other:?}"
            )))
        }
    };
    if use_series {
        if method == "series" && xc > xt {
            return Err(PyArithmeticError::new_err(format!(
                "density: series method forced at x={xc:.6} beyond the trust point {xt} \
                 (use method='auto' or 'integral')"
            )));
        }
        let (v, _) = series::density_series(alpha, xc, tol).map_err(to_py)?;
        Ok(v / spec.gamma_scale)
    } else {
        let r = oscint::density_integral(alpha, xc, &cfg_for(tol)?).map_err(to_py)?;
        Ok(r.value / spec.gamma_scale)
    }
}

/// Distribution function `F(x) = P(S₁ ≤ x)`.
///
/// Uses the power series inside its trust region and the tail law
/// `1 - (c/α)·x^{-α}` beyond it.
#[pyfunction]
#[pyo3(signature = (alpha, x, c=None, tol=1e-10))]
fn cdf(alpha: f64, x: f64, c: Option<f64>, tol: f64) -> PyResult<f64> {
    let spec = spec_for(alpha, c)?;
    let xc = x / spec.gamma_scale;
    let xt = oscint::x_trust(alpha).map_err(to_py)?;
    if xc <= xt {
        let (v, _) = series::cdf_series(alpha, xc, tol).map_err(to_py)?;
        Ok(v)
    } else {
        Ok(1.0 - asymptotics::tail_prob_law(alpha, xc).map_err(to_py)?)
    }
}

/// Tail probability `P(S₁ > x)`.
///
/// `method` is `'auto'` (series complement inside its trust region, tail
/// law beyond), `'series'`, or `'law'`.
#[pyfunction]
#[pyo3(signature = (alpha, x, c=None, method="auto", tol=1e-10))]
fn tail_prob(alpha: f64, x: f64, c: Option<f64>, method: &str, tol: f64) -> PyResult<f64> {
    let spec = spec_for(alpha, c)?;
    let xc = x / spec.gamma_scale;
    let xt = oscint::x_trust(alpha).map_err(to_py)?;
    let use_series = match method {
        "auto" => xc <= xt,
        "series" => true,
        "law" => false,
        other => {
            return Err(PyValueError::new_err(format!(
                "method must be 'auto', 'series' or 'law', got {other:?}"
            )))
        }
    };
    if use_series {
        if method == "series" && xc > xt {
            return Err(PyArithmeticError::new_err(format!(
                "tail_prob: series method forced at x={xc:.6} beyond the trust point {xt} \
                 (use method='auto' or 'law')"
            )));
        }
        let (v, _) = series::cdf_series(alpha, xc, tol).map_err(to_py)?;
        Ok(1.0 - v)
    } else {
        asymptotics::tail_prob_law(alpha, xc).map_err(to_py)
    }
}

/// Closed-form Laplace transform `E exp(-λS₁) = e^u·Γ(1/α, u)/Γ(1/α)`
/// with `u = λ^α` (λ in the spec's scale: the canonical transform is
/// evaluated at `γλ`).
#[pyfunction]
#[pyo3(signature = (alpha, lam, c=None))]
fn laplace_exact(alpha: f64, lam: f64, c: Option<f64>) -> PyResult<f64> {
    let spec = spec_for(alpha, c)?;
    laplace::laplace_exact(alpha, lam * spec.gamma_scale).map_err(to_py)
}

/// Laplace transform reconstructed by integrating the density — a route
/// independent of the closed form, used to cross-validate it.
#[pyfunction]
#[pyo3(signature = (alpha, lam, c=None, tol=1e-10))]
fn laplace_from_density(alpha: f64, lam: f64, c: Option<f64>, tol: f64) -> PyResult<f64> {
    let spec = spec_for(alpha, c)?;
    laplace::laplace_from_density(alpha, lam * spec.gamma_scale, &cfg_for(tol)?).map_err(to_py)
}

/// Two-term small-λ expansion `1 - (α/Γ(1/α))·λ + O(λ^α)`, valid for
/// `0 ≤ γλ ≤ 1/2`.
#[pyfunction]
#[pyo3(signature = (alpha, lam, c=None))]
fn small_lambda_expansion(alpha: f64, lam: f64, c: Option<f64>) -> PyResult<f64> {
    let spec = spec_for(alpha, c)?;
    laplace::small_lambda_expansion(alpha, lam * spec.gamma_scale).map_err(to_py)
}

/// Mean of the supremum, `E S₁ = γ·α/Γ(1/α)`.
#[pyfunction]
#[pyo3(signature = (alpha, c=None))]
fn mean_supremum(alpha: f64, c: Option<f64>) -> PyResult<f64> {
    let spec = spec_for(alpha, c)?;
    Ok(spec.gamma_scale * laplace::mean_supremum(alpha).map_err(to_py)?)
}

/// Monte Carlo estimate of `P(S₁ > x)` from `paths` simulated grid
/// suprema on `steps` time steps.  Returns `(p_hat, standard_error)`.
/// Fixed `(paths, steps, seed)` give bit-identical results regardless of
/// thread count.
#[pyfunction]
#[pyo3(signature = (alpha, x, c=None, paths=10_000, steps=1_000, seed=42))]
fn mc_tail(
    alpha: f64,
    x: f64,
    c: Option<f64>,
    paths: usize,
    steps: usize,
    seed: u64,
) -> PyResult<(f64, f64)> {
    let spec = spec_for(alpha, c)?;
    let sample = montecarlo::simulate_supremum(alpha, &run_for(paths, steps, seed)).map_err(to_py)?;
    Ok(montecarlo::empirical_tail(&sample, x / spec.gamma_scale))
}

/// Simulate `paths` grid suprema of the process on `steps` time steps and
/// return them sorted ascending (scaled by γ when `c` is given).  The
/// grid supremum underestimates the continuous one; the defect vanishes
/// as `steps → ∞`.
#[pyfunction]
#[pyo3(signature = (alpha, paths=10_000, steps=1_000, seed=42, c=None))]
fn simulate_supremum(
    alpha: f64,
    paths: usize,
    steps: usize,
    seed: u64,
    c: Option<f64>,
) -> PyResult<Vec<f64>> {
    let spec = spec_for(alpha, c)?;
    let sample = montecarlo::simulate_supremum(alpha, &run_for(paths, steps, seed)).map_err(to_py)?;
    Ok(sample
        .values
        .iter()
        .map(|v| v * spec.gamma_scale)
        .collect())
}

/// Residual of the constant identity `(k₁l₁ + k₂l₂)/π - 1/Γ(-α)`; stays
/// below 1e-12 across α ∈ (1, 2).
#[pyfunction]
fn certify_identity(alpha: f64) -> PyResult<f64> {
    asymptotics::certify_identity(alpha).map_err(to_py)
}

/// All tail-asymptote constants for `alpha` as a dict: the kernel trig
/// constants `a`, `b`, `beta = 1 - 1/α`, `eta = 1/α`, the third-derivative
/// constants `k1`, `k2`, the Fourier-tail constants `l1`, `l2`, the
/// canonical Lévy constant `c_canonical = 1/Γ(-α)`, and the float residual
/// of the identity tying them together.
#[pyfunction]
fn asymptote_constants(alpha: f64) -> PyResult<BTreeMap<&'static str, f64>> {
    let t = special::trig_constants(alpha).map_err(to_py)?;
    let ac = special::asymptote_constants(alpha).map_err(to_py)?;
    let resid = asymptotics::certify_identity(alpha).map_err(to_py)?;
    let mut m = BTreeMap::new();
    m.insert("a", t.a);
    m.insert("b", t.b);
    m.insert("beta", t.beta);
    m.insert("eta", 1.0 / alpha);
    m.insert("k1", ac.k1);
    m.insert("k2", ac.k2);
    m.insert("l1", ac.l1);
    m.insert("l2", ac.l2);
    m.insert("c_canonical", ac.c_canonical);
    m.insert("identity_residual", resid);
    Ok(m)
}

/// Largest canonical `x` where the power series still converges cleanly
/// and agrees with the oscillatory integral; `density`/`cdf`/`tail_prob`
/// switch representation there.
#[pyfunction]
fn x_trust(alpha: f64) -> PyResult<f64> {
    oscint::x_trust(alpha).map_err(to_py)
}

#[pymodule]
fn stablesup(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_class::<Spec>()?;
    m.add_function(wrap_pyfunction!(density, m)?)?;
    m.add_function(wrap_pyfunction!(cdf, m)?)?;
    m.add_function(wrap_pyfunction!(tail_prob, m)?)?;
    m.add_function(wrap_pyfunction!(laplace_exact, m)?)?;
    m.add_function(wrap_pyfunction!(laplace_from_density, m)?)?;
    m.add_function(wrap_pyfunction!(small_lambda_expansion, m)?)?;
    m.add_function(wrap_pyfunction!(mean_supremum, m)?)?;
    m.add_function(wrap_pyfunction!(mc_tail, m)?)?;
    m.add_function(wrap_pyfunction!(simulate_supremum, m)?)?;
    m.add_function(wrap_pyfunction!(certify_identity, m)?)?;
    m.add_function(wrap_pyfunction!(asymptote_constants, m)?)?;
    m.add_function(wrap_pyfunction!(x_trust, m)?)?;
    Ok(())
}
