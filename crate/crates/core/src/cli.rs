//! Command-line front end: argument parsing, row-oriented output
//! (CSV/JSON), the verification battery, and exit-code policy.
//!
//! Exit codes: `0` success, `1` usage error, `2` evaluation error (at
//! least one requested value could not be computed — the failing rows
//! carry the reason in `diagnostics`), `3` verification failure
//! (`verify` ran to completion and at least one gate did not pass).
//!
//! `STABLESUP_THREADS=<n>` pins the rayon worker count before anything
//! runs; all simulation output is byte-identical across thread counts.
//!
//! Scale handling: `--c` sets the Lévy constant; evaluations happen in
//! canonical coordinates (`x/γ`, `γλ`) and are transferred back, so
//! every method stays a single well-tested code path.  Summary rows
//! that do not belong to one grid point carry `x_or_lambda = NaN`
//! (serialized as `NaN` in CSV and `null` in JSON).

use crate::asymptotics::{
    certify_identity, density_tail_ratio, fourier_tail_estimate, remainder_order_fit,
    tail_prob_law,
};
use crate::error::{Error, Result};
use crate::laplace::{laplace_eval, laplace_exact, small_lambda_expansion};
use crate::montecarlo::{empirical_tail, sampler_laplace_check, simulate_supremum, McRun};
use crate::oscint::{self, x_trust, Trig};
use crate::params::{make_spec, StableSpec};
use crate::quad::QuadConfig;
use crate::series::{cdf_series, density_series};
use crate::special::{asymptote_constants, trig_constants};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::io::Write as _;
use std::path::PathBuf;

/// One output record; the same shape for every subcommand.
#[derive(Debug, Clone, Serialize)]
pub struct OutputRow {
    /// Stability index the row was computed for.
    pub alpha: f64,
    /// Grid abscissa (`x` or `λ`); `NaN` on summary rows.
    pub x_or_lambda: f64,
    /// Resolved method tag (`series`, `integral`, `law`, `laplace-exact`,
    /// `verify:identity`, …).
    pub method: String,
    /// Computed value; `None` when evaluation failed.
    pub value: Option<f64>,
    /// Error estimate where the method provides one.
    pub error_estimate: Option<f64>,
    /// `;`-separated details (never contains commas).
    pub diagnostics: String,
}

/// Output serialization format.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Comma-separated values with a header row.
    Csv,
    /// Pretty-printed JSON array.
    Json,
}

/// Evaluation method selector for grid commands.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Series below the trust point, integral (density) or tail law
    /// (tail probability) above.
    Auto,
    /// Power series only; errors beyond the trust region.
    Series,
    /// Oscillatory-integral evaluation (density only).
    Integral,
    /// Asymptotic tail law (tail probability only).
    Law,
}

#[derive(Debug, Parser)]
#[command(
    name = "stablesup",
    version,
    about = "Supremum distribution of a spectrally positive stable process",
    propagate_version = true
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct CommonArgs {
    /// Stability index α, strictly inside (1, 2).
    #[arg(long)]
    alpha: f64,
    /// Lévy density constant c (default: canonical 1/Γ(-α)).
    #[arg(long)]
    c: Option<f64>,
}

impl CommonArgs {
    fn spec(&self) -> Result<StableSpec> {
        match self.c {
            Some(c) => make_spec(self.alpha, c),
            None => StableSpec::canonical(self.alpha),
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Supremum density s(x) on a grid.
    Density {
        #[command(flatten)]
        common: CommonArgs,
        /// Evaluation points, comma separated.
        #[arg(long = "x-grid", value_delimiter = ',', default_value = "0.5,1,2,5")]
        x_grid: Vec<f64>,
        /// Method selection.
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
        /// Relative tolerance target.
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// Tail probability P(S₁ > x) on a grid.
    Tail {
        #[command(flatten)]
        common: CommonArgs,
        /// Evaluation points, comma separated.
        #[arg(long = "x-grid", value_delimiter = ',', default_value = "0.5,1,2,5")]
        x_grid: Vec<f64>,
        /// Method selection (integral is not available for tails).
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
        /// Relative tolerance target.
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// Laplace transform E exp(-λS₁): closed form and density quadrature.
    Laplace {
        #[command(flatten)]
        common: CommonArgs,
        /// Transform arguments λ ≥ 0, comma separated.
        #[arg(long = "lambda-grid", value_delimiter = ',', default_value = "0.1,0.5,1,2")]
        lambda_grid: Vec<f64>,
        /// Relative tolerance target for the quadrature route.
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// Tail-asymptote harness: Fourier-transform decay fits and the
    /// density/law ratio on a geometric grid.
    Asymptote {
        #[command(flatten)]
        common: CommonArgs,
        /// Geometric grid (strictly increasing, ≥ 4 points).
        #[arg(long = "x-grid", value_delimiter = ',', default_value = "8,16,32,64")]
        x_grid: Vec<f64>,
        /// Relative tolerance target.
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// Monte Carlo grid-supremum tail estimates against the analytic law.
    Mc {
        #[command(flatten)]
        common: CommonArgs,
        /// Probe points for P(sup > x), comma separated.
        #[arg(long = "x-grid", value_delimiter = ',', default_value = "1,2,5")]
        x_grid: Vec<f64>,
        /// Number of simulated paths.
        #[arg(long, default_value_t = 10_000)]
        paths: usize,
        /// Grid steps per path.
        #[arg(long, default_value_t = 1_000)]
        steps: usize,
        /// RNG seed.
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// Run the cross-method verification battery; exits 3 on any failed gate.
    Verify {
        #[command(flatten)]
        common: CommonArgs,
    },
}

/// Outcome of a command run, before exit-code mapping.
#[derive(Default)]
struct Outcome {
    eval_error: bool,
    verify_fail: bool,
}

fn nice(v: f64) -> String {
    format!("{v:.6e}")
}

/// Diagnostics strings must stay comma-free for the CSV writer.
fn sanitize(s: &str) -> String {
    s.replace([',', '\n'], ";")
}

fn err_row(alpha: f64, x: f64, method: &str, e: &Error) -> OutputRow {
    OutputRow {
        alpha,
        x_or_lambda: x,
        method: method.to_string(),
        value: None,
        error_estimate: None,
        diagnostics: sanitize(&e.to_string()),
    }
}

/// Canonical-coordinate density with a resolved method tag.
fn density_row(
    spec: &StableSpec,
    x: f64,
    method: Method,
    tol: f64,
    cfg: &QuadConfig,
    xt: f64,
    out: &mut Vec<OutputRow>,
    outcome: &mut Outcome,
) {
    let alpha = spec.alpha;
    let xc = x / spec.gamma_scale;
    if !(x > 0.0) {
        out.push(err_row(
            alpha,
            x,
            "density",
            &Error::domain("density", format!("x must be > 0, got {x}")),
        ));
        outcome.eval_error = true;
        return;
    }
    let use_series = match method {
        Method::Auto => xc <= xt,
        Method::Series => true,
        Method::Integral => false,
        Method::Law => unreachable!("rejected in run_command"),
    };
    if use_series {
        if method == Method::Series && xc > xt {
            let e = Error::precision(
                "density",
                format!(
                    "series method forced at x={xc:.6} beyond the trust point {xt} (use --method auto or integral)"
                ),
            );
            out.push(err_row(alpha, x, "series", &e));
            outcome.eval_error = true;
            return;
        }
        match density_series(alpha, xc, tol) {
            Ok((v, diag)) => out.push(OutputRow {
                alpha,
                x_or_lambda: x,
                method: "series".into(),
                value: Some(v / spec.gamma_scale),
                error_estimate: Some(tol * v.abs() / spec.gamma_scale),
                diagnostics: format!(
                    "n_terms={};cancellation_digits={:.2}",
                    diag.n_terms, diag.cancellation_digits
                ),
            }),
            Err(e) => {
                out.push(err_row(alpha, x, "series", &e));
                outcome.eval_error = true;
            }
        }
    } else {
        match oscint::density_integral(alpha, xc, cfg) {
            Ok(r) => out.push(OutputRow {
                alpha,
                x_or_lambda: x,
                method: "integral".into(),
                value: Some(r.value / spec.gamma_scale),
                error_estimate: Some(r.abs_err / spec.gamma_scale),
                diagnostics: format!(
                    "head_panels={};half_periods={}",
                    r.diag.head_panels, r.diag.half_periods
                ),
            }),
            Err(e) => {
                out.push(err_row(alpha, x, "integral", &e));
                outcome.eval_error = true;
            }
        }
    }
}

fn tail_row(
    spec: &StableSpec,
    x: f64,
    method: Method,
    tol: f64,
    xt: f64,
    out: &mut Vec<OutputRow>,
    outcome: &mut Outcome,
) {
    let alpha = spec.alpha;
    let xc = x / spec.gamma_scale;
    if !(x > 0.0) {
        out.push(err_row(
            alpha,
            x,
            "tail",
            &Error::domain("tail", format!("x must be > 0, got {x}")),
        ));
        outcome.eval_error = true;
        return;
    }
    let use_series = match method {
        Method::Auto => xc <= xt,
        Method::Series => true,
        Method::Law => false,
        Method::Integral => unreachable!("rejected in run_command"),
    };
    if use_series {
        if method == Method::Series && xc > xt {
            let e = Error::precision(
                "tail",
                format!(
                    "series method forced at x={xc:.6} beyond the trust point {xt} (use --method auto or law)"
                ),
            );
            out.push(err_row(alpha, x, "series", &e));
            outcome.eval_error = true;
            return;
        }
        match cdf_series(alpha, xc, tol) {
            Ok((f, diag)) => out.push(OutputRow {
                alpha,
                x_or_lambda: x,
                method: "series".into(),
                value: Some(1.0 - f),
                error_estimate: Some(tol * f.abs()),
                diagnostics: format!(
                    "n_terms={};cancellation_digits={:.2}",
                    diag.n_terms, diag.cancellation_digits
                ),
            }),
            Err(e) => {
                out.push(err_row(alpha, x, "series", &e));
                outcome.eval_error = true;
            }
        }
    } else {
        match tail_prob_law(alpha, xc) {
            Ok(p) => out.push(OutputRow {
                alpha,
                x_or_lambda: x,
                method: "law".into(),
                value: Some(p),
                error_estimate: None,
                diagnostics: "asymptotic tail law (c/alpha)*x^-alpha".into(),
            }),
            Err(e) => {
                out.push(err_row(alpha, x, "law", &e));
                outcome.eval_error = true;
            }
        }
    }
}

fn run_density(
    common: &CommonArgs,
    x_grid: &[f64],
    method: Method,
    tol: f64,
) -> Result<(Vec<OutputRow>, Outcome)> {
    let spec = common.spec()?;
    let cfg = QuadConfig {
        rel_tol: tol.min(1e-8),
        ..QuadConfig::default()
    };
    let xt = x_trust(spec.alpha)?;
    let mut rows = Vec::new();
    let mut outcome = Outcome::default();
    for &x in x_grid {
        density_row(&spec, x, method, tol, &cfg, xt, &mut rows, &mut outcome);
    }
    Ok((rows, outcome))
}

fn run_tail(
    common: &CommonArgs,
    x_grid: &[f64],
    method: Method,
    tol: f64,
) -> Result<(Vec<OutputRow>, Outcome)> {
    let spec = common.spec()?;
    let xt = x_trust(spec.alpha)?;
    let mut rows = Vec::new();
    let mut outcome = Outcome::default();
    for &x in x_grid {
        tail_row(&spec, x, method, tol, xt, &mut rows, &mut outcome);
    }
    Ok((rows, outcome))
}

fn run_laplace(
    common: &CommonArgs,
    lambda_grid: &[f64],
    tol: f64,
) -> Result<(Vec<OutputRow>, Outcome)> {
    let spec = common.spec()?;
    let alpha = spec.alpha;
    let cfg = QuadConfig {
        rel_tol: tol.min(1e-8),
        ..QuadConfig::default()
    };
    let mut rows = Vec::new();
    let mut outcome = Outcome::default();
    for &lam in lambda_grid {
        let lc = lam * spec.gamma_scale;
        if !(lam >= 0.0) {
            rows.push(err_row(
                alpha,
                lam,
                "laplace-exact",
                &Error::domain("laplace", format!("lambda must be >= 0, got {lam}")),
            ));
            outcome.eval_error = true;
            continue;
        }
        match laplace_eval(alpha, lc, &cfg) {
            Ok(ev) => {
                rows.push(OutputRow {
                    alpha,
                    x_or_lambda: lam,
                    method: "laplace-exact".into(),
                    value: Some(ev.exact),
                    error_estimate: None,
                    diagnostics: "incomplete-gamma closed form".into(),
                });
                let mut diag = format!("abs_gap_vs_exact={}", nice(ev.abs_gap));
                if let Some(exp) = ev.expansion {
                    diag.push_str(&format!(";small_lambda_expansion={}", nice(exp)));
                }
                rows.push(OutputRow {
                    alpha,
                    x_or_lambda: lam,
                    method: "laplace-numeric".into(),
                    value: Some(ev.from_density),
                    error_estimate: Some(ev.abs_gap),
                    diagnostics: diag,
                });
            }
            Err(e) => {
                rows.push(err_row(alpha, lam, "laplace-exact", &e));
                outcome.eval_error = true;
            }
        }
    }
    Ok((rows, outcome))
}

fn run_asymptote(
    common: &CommonArgs,
    x_grid: &[f64],
    tol: f64,
) -> Result<(Vec<OutputRow>, Outcome)> {
    let spec = common.spec()?;
    let alpha = spec.alpha;
    let cfg = QuadConfig {
        rel_tol: tol.min(1e-8),
        ..QuadConfig::default()
    };
    let grid: Vec<f64> = x_grid.iter().map(|x| x / spec.gamma_scale).collect();
    let tc = trig_constants(alpha)?;
    let ac = asymptote_constants(alpha)?;
    let mut rows = Vec::new();
    let mut outcome = Outcome::default();

    let h_cos = move |t: f64| -> Result<f64> {
        let big_t = t.powf(alpha);
        Ok((-tc.a * big_t).exp() * (tc.b * big_t).cos() / ac.k1)
    };
    let h_sin = move |t: f64| -> Result<f64> {
        let big_t = t.powf(alpha);
        Ok((-tc.a * big_t).exp() * (tc.b * big_t).sin() / ac.k2)
    };

    for (tag, fit_tag, trig, target_const) in [
        ("harness-cos", "fit-cos", Trig::Cos, ac.l1),
        ("harness-sin", "fit-sin", Trig::Sin, ac.l2),
    ] {
        let h: &dyn Fn(f64) -> Result<f64> = if trig == Trig::Cos { &h_cos } else { &h_sin };
        match fourier_tail_estimate(h, trig, alpha, &grid, &cfg) {
            Ok(fit) => {
                for (x, r) in x_grid.iter().zip(&fit.residuals) {
                    rows.push(OutputRow {
                        alpha,
                        x_or_lambda: *x,
                        method: tag.into(),
                        value: Some(
                            (1.0 + r) * fit.constant_hat
                                * (x / spec.gamma_scale).powf(fit.exponent_hat),
                        ),
                        error_estimate: None,
                        diagnostics: format!("fit_residual={}", nice(*r)),
                    });
                }
                rows.push(OutputRow {
                    alpha,
                    x_or_lambda: f64::NAN,
                    method: fit_tag.into(),
                    value: Some(fit.exponent_hat),
                    error_estimate: Some((fit.exponent_hat + alpha + 1.0).abs()),
                    diagnostics: format!(
                        "constant_hat={};target_exponent={};target_constant={}",
                        nice(fit.constant_hat),
                        nice(-(alpha + 1.0)),
                        nice(target_const)
                    ),
                });
            }
            Err(e) => {
                rows.push(err_row(alpha, f64::NAN, fit_tag, &e));
                outcome.eval_error = true;
            }
        }
    }

    match density_tail_ratio(alpha, &grid, &cfg) {
        Ok(fit) => {
            for (x, r) in x_grid.iter().zip(&fit.residuals) {
                rows.push(OutputRow {
                    alpha,
                    x_or_lambda: *x,
                    method: "tail-ratio".into(),
                    value: Some(1.0 + r),
                    error_estimate: None,
                    diagnostics: format!("ratio_minus_one={}", nice(*r)),
                });
            }
            rows.push(OutputRow {
                alpha,
                x_or_lambda: f64::NAN,
                method: "fit-ratio".into(),
                value: Some(fit.exponent_hat),
                error_estimate: None,
                diagnostics: format!(
                    "convergence_rate_of=|ratio-1|;constant_hat={}",
                    nice(fit.constant_hat)
                ),
            });
        }
        Err(e) => {
            rows.push(err_row(alpha, f64::NAN, "fit-ratio", &e));
            outcome.eval_error = true;
        }
    }

    let ident = certify_identity(alpha)?;
    rows.push(OutputRow {
        alpha,
        x_or_lambda: f64::NAN,
        method: "identity".into(),
        value: Some(ident),
        error_estimate: Some(1e-12),
        diagnostics: "(k1*l1+k2*l2)/pi - 1/Gamma(-alpha)".into(),
    });
    Ok((rows, outcome))
}

fn run_mc(
    common: &CommonArgs,
    x_grid: &[f64],
    paths: usize,
    steps: usize,
    seed: u64,
) -> Result<(Vec<OutputRow>, Outcome)> {
    let spec = common.spec()?;
    let alpha = spec.alpha;
    let run = McRun {
        n_paths: paths,
        n_steps: steps,
        seed,
        chunk_size: McRun::default().chunk_size,
    };
    let sample = simulate_supremum(alpha, &run)?;
    let xt = x_trust(alpha)?;
    let mut rows = Vec::new();
    let mut outcome = Outcome::default();
    for &x in x_grid {
        if !(x > 0.0) {
            rows.push(err_row(
                alpha,
                x,
                "mc",
                &Error::domain("mc", format!("x must be > 0, got {x}")),
            ));
            outcome.eval_error = true;
            continue;
        }
        let xc = x / spec.gamma_scale;
        let (p, se) = empirical_tail(&sample, xc);
        rows.push(OutputRow {
            alpha,
            x_or_lambda: x,
            method: "mc".into(),
            value: Some(p),
            error_estimate: Some(se),
            diagnostics: format!("paths={paths};steps={steps};seed={seed}"),
        });
        // Analytic companion: series CDF inside the trust region, tail
        // law outside.
        let analytic = if xc <= xt {
            cdf_series(alpha, xc, 1e-12)
                .map(|(f, _)| (1.0 - f, "series"))
        } else {
            tail_prob_law(alpha, xc).map(|p| (p, "law"))
        };
        match analytic {
            Ok((pa, tag)) => rows.push(OutputRow {
                alpha,
                x_or_lambda: x,
                method: "analytic".into(),
                value: Some(pa),
                error_estimate: None,
                diagnostics: format!("route={tag}"),
            }),
            Err(e) => {
                rows.push(err_row(alpha, x, "analytic", &e));
                outcome.eval_error = true;
            }
        }
    }
    Ok((rows, outcome))
}

struct Gate {
    method: &'static str,
    value: f64,
    threshold: f64,
    pass: bool,
    detail: String,
}

impl Gate {
    fn to_row(&self, alpha: f64) -> OutputRow {
        OutputRow {
            alpha,
            x_or_lambda: f64::NAN,
            method: format!("verify:{}", self.method),
            value: Some(self.value),
            error_estimate: Some(self.threshold),
            diagnostics: format!(
                "{};{}",
                if self.pass { "pass" } else { "FAIL" },
                sanitize(&self.detail)
            ),
        }
    }
}

fn run_verify(common: &CommonArgs) -> Result<(Vec<OutputRow>, Outcome)> {
    let spec = common.spec()?;
    let alpha = spec.alpha;
    let cfg = QuadConfig::default();
    let mut gates: Vec<Gate> = Vec::new();

    // 1. Exact constant identity.
    let ident = certify_identity(alpha)?;
    gates.push(Gate {
        method: "identity",
        value: ident,
        threshold: 1e-12,
        pass: ident.abs() < 1e-12,
        detail: "(k1*l1+k2*l2)/pi - 1/Gamma(-alpha)".into(),
    });

    // 2. Series and integral agree through the trust region.
    let xt = x_trust(alpha)?;
    let mut worst = 0.0f64;
    let mut worst_x = 0.0f64;
    for k in 1..=5 {
        let x = xt * k as f64 / 5.0;
        let s = density_series(alpha, x, 1e-12)?.0;
        let i = oscint::density_integral(alpha, x, &cfg)?.value;
        let rel = ((i - s) / s).abs();
        if rel > worst {
            worst = rel;
            worst_x = x;
        }
    }
    gates.push(Gate {
        method: "series-vs-integral",
        value: worst,
        threshold: 1e-6,
        pass: worst < 1e-6,
        detail: format!("worst relative gap at x={worst_x:.3} (trust point {xt})"),
    });

    // 3. Fourier-transform harness on the pinned geometric grid.
    let tc = trig_constants(alpha)?;
    let ac = asymptote_constants(alpha)?;
    let grid = [8.0, 16.0, 32.0, 64.0];
    let h_cos = move |t: f64| -> Result<f64> {
        let big_t = t.powf(alpha);
        Ok((-tc.a * big_t).exp() * (tc.b * big_t).cos() / ac.k1)
    };
    let h_sin = move |t: f64| -> Result<f64> {
        let big_t = t.powf(alpha);
        Ok((-tc.a * big_t).exp() * (tc.b * big_t).sin() / ac.k2)
    };
    for (name, trig, target_const) in [
        ("harness-cos", Trig::Cos, ac.l1),
        ("harness-sin", Trig::Sin, ac.l2),
    ] {
        let h: &dyn Fn(f64) -> Result<f64> = if trig == Trig::Cos { &h_cos } else { &h_sin };
        let fit = fourier_tail_estimate(h, trig, alpha, &grid, &cfg)?;
        let exp_dev = (fit.exponent_hat + alpha + 1.0).abs();
        let const_dev = (fit.constant_hat / target_const - 1.0).abs();
        let pass = exp_dev <= 0.02 && const_dev <= 0.01;
        gates.push(Gate {
            method: name,
            value: fit.exponent_hat,
            threshold: 0.02,
            pass,
            detail: format!(
                "exponent_dev={};constant_hat={};constant_dev={};grid=8..64",
                nice(exp_dev),
                nice(fit.constant_hat),
                nice(const_dev)
            ),
        });
    }

    // 4. Density/tail-law ratio: |ratio-1| decreasing and < 2% at x=200.
    let ratio_fit = density_tail_ratio(alpha, &[25.0, 50.0, 100.0, 200.0], &cfg)?;
    let resid: Vec<f64> = ratio_fit.residuals.iter().map(|r| r.abs()).collect();
    let monotone = resid.windows(2).all(|w| w[1] < w[0]);
    let last_ok = resid[resid.len() - 1] < 0.02;
    gates.push(Gate {
        method: "tail-ratio",
        value: resid[resid.len() - 1],
        threshold: 0.02,
        pass: monotone && last_ok,
        detail: format!(
            "|ratio-1| on x=25..200: {};monotone={monotone}",
            resid.iter().map(|r| nice(*r)).collect::<Vec<_>>().join(";")
        ),
    });

    // 5. Laplace reconciliation and remainder order.
    let mut worst_gap = 0.0f64;
    for lam in [0.5, 1.0, 2.0] {
        let ev = laplace_eval(alpha, lam, &cfg)?;
        worst_gap = worst_gap.max(ev.abs_gap / ev.exact);
    }
    gates.push(Gate {
        method: "laplace-reconcile",
        value: worst_gap,
        threshold: 1e-4,
        pass: worst_gap < 1e-4,
        detail: "max relative |closed form - quadrature| over lambda in {0.5,1,2}".into(),
    });
    let lams = [0.2, 0.1, 0.05, 0.025];
    let mut rema = Vec::with_capacity(lams.len());
    for &lam in &lams {
        rema.push(laplace_exact(alpha, lam)? - small_lambda_expansion(alpha, lam)?);
    }
    let order = remainder_order_fit(&lams, &rema)?;
    let order_dev = (order - (1.0 + alpha)).abs();
    gates.push(Gate {
        method: "laplace-order",
        value: order,
        threshold: 0.1,
        pass: order_dev <= 0.1,
        detail: format!("target={};deviation={}", 1.0 + alpha, nice(order_dev)),
    });

    // 6. Sampler against the exact transform of one increment.
    let (mean, se) = sampler_laplace_check(alpha, 1.0, 200_000, 42)?;
    let exact = 1.0f64.exp();
    gates.push(Gate {
        method: "mc-sampler",
        value: mean,
        threshold: 4.0 * se,
        pass: (mean - exact).abs() < 4.0 * se,
        detail: format!("target=e^(1)={exact:.6};se={}", nice(se)),
    });

    let mut outcome = Outcome::default();
    let rows: Vec<OutputRow> = gates
        .iter()
        .map(|g| {
            if !g.pass {
                outcome.verify_fail = true;
            }
            g.to_row(alpha)
        })
        .collect();
    Ok((rows, outcome))
}

fn run_command(cmd: &Command) -> Result<(Vec<OutputRow>, Outcome)> {
    match cmd {
        Command::Density {
            common,
            x_grid,
            method,
            tol,
        } => {
            if *method == Method::Law {
                return Err(Error::domain(
                    "density",
                    "--method law applies to tail probabilities only".to_string(),
                ));
            }
            run_density(common, x_grid, *method, *tol)
        }
        Command::Tail {
            common,
            x_grid,
            method,
            tol,
        } => {
            if *method == Method::Integral {
                return Err(Error::domain(
                    "tail",
                    "--method integral applies to densities only (use auto, series, or law)"
                        .to_string(),
                ));
            }
            run_tail(common, x_grid, *method, *tol)
        }
        Command::Laplace {
            common,
            lambda_grid,
            tol,
        } => run_laplace(common, lambda_grid, *tol),
        Command::Asymptote {
            common,
            x_grid,
            tol,
        } => run_asymptote(common, x_grid, *tol),
        Command::Mc {
            common,
            x_grid,
            paths,
            steps,
            seed,
        } => run_mc(common, x_grid, *paths, *steps, *seed),
        Command::Verify { common } => run_verify(common),
    }
}

/// Render rows as CSV with a fixed header; floats use `{:.16e}` so a
/// round-trip through the text form is exact.
pub fn rows_to_csv(rows: &[OutputRow]) -> String {
    let mut s = String::from("alpha,x_or_lambda,method,value,error_estimate,diagnostics\n");
    let fmt_opt = |v: &Option<f64>| v.map(|v| format!("{v:.16e}")).unwrap_or_default();
    for r in rows {
        s.push_str(&format!(
            "{:.16e},{:.16e},{},{},{},{}\n",
            r.alpha,
            r.x_or_lambda,
            sanitize(&r.method),
            fmt_opt(&r.value),
            fmt_opt(&r.error_estimate),
            sanitize(&r.diagnostics)
        ));
    }
    s
}

/// Render rows as a pretty-printed JSON array (`NaN` becomes `null`).
pub fn rows_to_json(rows: &[OutputRow]) -> String {
    serde_json::to_string_pretty(rows).expect("row serialization cannot fail")
}

fn emit(rows: &[OutputRow], format: Format, out: Option<&PathBuf>) -> std::io::Result<()> {
    let body = match format {
        Format::Csv => rows_to_csv(rows),
        Format::Json => {
            let mut j = rows_to_json(rows);
            j.push('\n');
            j
        }
    };
    match out {
        Some(path) => std::fs::write(path, body),
        None => std::io::stdout().write_all(body.as_bytes()),
    }
}

/// Configure the global rayon pool from `STABLESUP_THREADS`, if set.
fn configure_threads() -> std::result::Result<(), String> {
    match std::env::var("STABLESUP_THREADS") {
        Err(_) => Ok(()),
        Ok(raw) => {
            let n: usize = raw
                .trim()
                .parse()
                .map_err(|_| format!("STABLESUP_THREADS must be a positive integer, got {raw:?}"))?;
            if n == 0 {
                return Err("STABLESUP_THREADS must be >= 1".to_string());
            }
            // A second initialization in the same process is harmless: the
            // pool is already sized, and results never depend on it anyway.
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            Ok(())
        }
    }
}

/// Full CLI entry point; returns the process exit code.
pub fn main_entry() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return code;
        }
    };
    if let Err(msg) = configure_threads() {
        eprintln!("stablesup: {msg}");
        return 1;
    }
    match run_command(&cli.command) {
        Ok((rows, outcome)) => {
            if let Err(e) = emit(&rows, cli.format, cli.out.as_ref()) {
                eprintln!("stablesup: failed to write output: {e}");
                return 2;
            }
            if outcome.verify_fail {
                3
            } else if outcome.eval_error {
                2
            } else {
                0
            }
        }
        Err(e) => {
            eprintln!("stablesup: {e}");
            2
        }
    }
}
