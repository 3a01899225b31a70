//! Shared helpers for the integration suites.
//!
//! Each integration target compiles this module independently, so not
//! every helper is used by every target.
#![allow(dead_code)]

pub mod reference;

use std::fmt::Display;

/// Assert `|actual - expected| <= rel * |expected|`.
#[track_caller]
pub fn assert_rel(actual: f64, expected: f64, rel: f64, ctx: impl Display) {
    let tol = rel * expected.abs();
    let diff = (actual - expected).abs();
    assert!(
        diff <= tol,
        "{ctx}: actual {actual:e} vs expected {expected:e} \
         (|diff| {diff:e} > rel {rel:e} => tol {tol:e})"
    );
}

/// Assert `|actual - expected| <= abs_tol`.
#[track_caller]
pub fn assert_abs(actual: f64, expected: f64, abs_tol: f64, ctx: impl Display) {
    let diff = (actual - expected).abs();
    assert!(
        diff <= abs_tol,
        "{ctx}: actual {actual:e} vs expected {expected:e} (|diff| {diff:e} > {abs_tol:e})"
    );
}

/// Composite Simpson rule with `n` (even) panels — an oracle integrator
/// deliberately unrelated to the library's quadrature stack.
pub fn simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64, n: usize) -> f64 {
    assert!(n >= 2 && n % 2 == 0, "n must be even and >= 2");
    let h = (b - a) / n as f64;
    let mut acc = f(a) + f(b);
    for k in 1..n {
        let w = if k % 2 == 1 { 4.0 } else { 2.0 };
        acc += w * f(a + k as f64 * h);
    }
    acc * h / 3.0
}

/// Least squares on raw `(x, y)` pairs; returns `(slope, intercept)`.
/// Kept separate from the library's fitter so fit checks are independent.
pub fn ls_fit(xs: &[f64], ys: &[f64]) -> (f64, f64) {
    assert!(xs.len() == ys.len() && xs.len() >= 2);
    let n = xs.len() as f64;
    let xb = xs.iter().sum::<f64>() / n;
    let yb = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - xb) * (y - yb)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - xb) * (x - xb)).sum();
    let slope = sxy / sxx;
    (slope, yb - slope * xb)
}

/// Two-sample Kolmogorov–Smirnov statistic; both inputs must be sorted
/// ascending.
pub fn ks_two_sample(a: &[f64], b: &[f64]) -> f64 {
    assert!(!a.is_empty() && !b.is_empty());
    let (na, nb) = (a.len() as f64, b.len() as f64);
    let (mut i, mut j) = (0usize, 0usize);
    let mut d: f64 = 0.0;
    while i < a.len() && j < b.len() {
        if a[i] <= b[j] {
            i += 1;
        } else {
            j += 1;
        }
        d = d.max((i as f64 / na - j as f64 / nb).abs());
    }
    d
}

/// `n` log-spaced points over `[lo, hi]` inclusive.
pub fn log_spaced(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    assert!(n >= 2 && lo > 0.0 && hi > lo);
    let (a, b) = (lo.ln(), hi.ln());
    (0..n)
        .map(|k| (a + (b - a) * k as f64 / (n - 1) as f64).exp())
        .collect()
}
