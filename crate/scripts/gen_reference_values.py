#!/usr/bin/env python3
"""Generate frozen high-precision reference values for the Rust test suite.

Every numerical contract in the crate's tests that is not an exact identity
traces back to a value computed here with mpmath at 22-200 significant digits
and frozen into crates/core/tests/common/reference.rs. Independent formulas
are cross-checked against each other before anything is emitted:

  * the power-series density and the oscillatory-integral density must agree
    to ~18 digits at interior points (they are mathematically identical);
  * the inner kernel F(T) is computed via mpmath's incomplete gamma, via a
    large-T asymptotic expansion, and via direct tanh-sinh quadrature, and
    the three must agree on overlap regions;
  * the Laplace transform is computed by direct quadrature, by the
    incomplete-gamma closed form, and by a rapidly convergent reciprocal-
    gamma series, all of which must agree to ~20 digits.

The script is deterministic. Results are cached in /tmp so re-runs are
cheap; delete the cache file to force recomputation.

Usage:
  python3 scripts/gen_reference_values.py                # all sections + emit
  python3 scripts/gen_reference_values.py --only gfun    # one section
  python3 scripts/gen_reference_values.py --checks       # feasibility report
"""

import argparse
import json
import math
import os
import sys

from mpmath import (
    mp, mpf, mpc, workdps, cos, sin, exp, sqrt, log, pi, inf,
    gamma, rgamma, quad, quadosc, gammainc, hyp1f1, im, re, fabs,
    mpmathify, rf, factorial,
)

CACHE_PATH = "/tmp/stablesup_refcache.json"
OUT_PATH = os.path.join(os.path.dirname(__file__), "..",
                        "crates", "core", "tests", "common", "reference.rs")

# ---------------------------------------------------------------- cache ----

def _cache_load():
    if os.path.exists(CACHE_PATH):
        with open(CACHE_PATH) as fh:
            return json.load(fh)
    return {}

_CACHE = _cache_load()

def _cache_save():
    tmp = CACHE_PATH + ".tmp"
    with open(tmp, "w") as fh:
        json.dump(_CACHE, fh)
    os.replace(tmp, CACHE_PATH)

def cached(key, fn):
    """Memoize an mpf-valued computation as a string at the current dps."""
    full = f"{key}@dps{mp.dps}"
    if full in _CACHE:
        return mpf(_CACHE[full])
    val = fn()
    _CACHE[full] = mp.nstr(val, mp.dps, strip_zeros=False)
    _cache_save()
    return val

# ------------------------------------------------------------- constants ---

def consts(alpha):
    """Derived constants for index alpha (exact f64 input)."""
    a = -cos(pi * alpha / 2)
    b = sin(pi * alpha / 2)
    beta = 1 - 1 / alpha
    k1 = a * alpha * (alpha - 1) * (2 - alpha)
    k2 = b * alpha * (alpha - 1) * (2 - alpha)
    l1 = pi / (2 * gamma(3 - alpha) * a)
    l2 = pi / (2 * gamma(3 - alpha) * b)
    c_can = 1 / gamma(-alpha)
    return a, b, beta, k1, k2, l1, l2, c_can

# ------------------------------------------------------- inner kernel F ----
# F(T) = int_0^1 e^{sigma T z} (1-z)^{-beta} dz  with sigma = -a + ib.
# g1(t) = t * Im F(t^alpha),  g2(t) = t * Re F(t^alpha).

def F_gammainc(alpha, T):
    a, b, beta = consts(alpha)[:3]
    w = mpc(-a, b) * T
    if T == 0:
        return mpc(1, 0) / (1 - beta)
    return exp(w) * w ** (beta - 1) * gammainc(1 - beta, 0, w)

def F_hyp(alpha, T):
    """F via Kummer's function: F(T) = M(1, 2-beta, sigma T)/(1-beta).

    Fastest and most robust of the closed forms (mpmath's hyp1f1 manages its
    own asymptotic switchover); cross-checked against the incomplete-gamma
    form and direct quadrature in check_F_forms().
    """
    a, b, beta = consts(alpha)[:3]
    w = mpc(-a, b) * T
    return hyp1f1(1, 2 - beta, w) / (1 - beta)

def F_asym(alpha, T):
    """Large-T expansion: F = Gamma(1-b) w^(b-1) e^w - (1/w) sum (-1)^k (b)_k / w^k."""
    a, b, beta = consts(alpha)[:3]
    w = mpc(-a, b) * T
    s = mpc(1, 0)
    term = mpc(1, 0)
    k = 0
    floor = mpf(10) ** (-(mp.dps + 5))
    while True:
        k += 1
        nxt = term * (-(beta + k - 1)) / w
        if abs(nxt) >= abs(term) or k > 4 * int(T) + 40:
            break
        term = nxt
        s += term
        if abs(term) < floor * abs(s):
            break
    return gamma(1 - beta) * w ** (beta - 1) * exp(w) - s / w

def F_quad(alpha, T):
    """Direct quadrature of the defining integral (slow, exact)."""
    a, b, beta = consts(alpha)[:3]
    sig = mpc(-a, b)
    # split so the endpoint singularity at z=1 terminates a subinterval and
    # no piece spans more than ~1.5 radians of internal oscillation
    npieces = max(4, int(b * T / mpf("1.5")) + 2)
    pts = [mpf(j) / npieces for j in range(npieces + 1)]
    return quad(lambda z: exp(sig * T * z) * (1 - z) ** (-beta), pts)

_F_MEMO = {}
_F_MEMO_PATH = "/tmp/stablesup_fmemo.json"
_F_MEMO_DIRTY = 0

def _fmemo_load():
    global _F_MEMO
    if os.path.exists(_F_MEMO_PATH):
        with open(_F_MEMO_PATH) as fh:
            raw = json.load(fh)
        _F_MEMO = {tuple(k.split("§")): mpc(mpf(v[0]), mpf(v[1]))
                   for k, v in raw.items()}

def _fmemo_save():
    raw = {"§".join(k): [mp.nstr(v.real, 30), mp.nstr(v.imag, 30)]
           for k, v in _F_MEMO.items()}
    tmp = _F_MEMO_PATH + ".tmp"
    with open(tmp, "w") as fh:
        json.dump(raw, fh)
    os.replace(tmp, _F_MEMO_PATH)

_fmemo_load()

def F_T(alpha, T):
    """Dispatching F evaluation, pinned to dps 25 regardless of ambient
    precision (mpmath's quadrature transiently raises mp.dps, which pushes
    gammainc's internal 2F0 asymptotics past their attainable accuracy and
    triggers NoConvergence). 25 digits is plenty for every consumer here.
    Memoized to disk: the sine- and cosine-weighted outer integrals visit
    identical quadrature nodes, so the second integral is nearly free.
    """
    global _F_MEMO_DIRTY
    key = (repr(float(alpha)), mp.nstr(T, 30))
    if key in _F_MEMO:
        return _F_MEMO[key]
    with workdps(25):
        if T > 60:
            val = F_asym(alpha, T)
        else:
            try:
                val = F_hyp(alpha, T)
            except Exception:
                val = F_quad(alpha, T)
    _F_MEMO[key] = val
    _F_MEMO_DIRTY += 1
    if _F_MEMO_DIRTY >= 4000:
        _fmemo_save()
        _F_MEMO_DIRTY = 0
    return val

def g_pair(alpha, t):
    Fv = F_T(alpha, t ** alpha)
    return t * im(Fv), t * re(Fv)

def check_F_forms():
    """Cross-validate the three F computations on overlap regions."""
    with workdps(25):
        for alpha in [1.2, 1.5, 1.8]:
            alpha = mpf(alpha)
            for T in [mpf(5), mpf(20), mpf(34), mpf(50), mpf(79)]:
                f_g = F_gammainc(alpha, T)
                f_q = F_quad(alpha, T)
                f_h = F_hyp(alpha, T)
                rel = abs(f_g - f_q) / abs(f_q)
                assert rel < mpf(10) ** -18, (alpha, T, "gammainc vs quad", rel)
                rel = abs(f_h - f_g) / abs(f_g)
                assert rel < mpf(10) ** -20, (alpha, T, "hyp1f1 vs gammainc", rel)
            for T in [mpf(50), mpf(79), mpf(200), mpf(1000)]:
                f_g = F_gammainc(alpha, T)
                f_a = F_asym(alpha, T)
                # the asymptotic series floor is ~e^{-T} relative
                floor = exp(-T) * 100 + mpf(10) ** -20
                rel = abs(f_g - f_a) / abs(f_g)
                assert rel < floor, (alpha, T, "gammainc vs asym", rel)
    print("F-form cross-checks passed (gammainc / quadrature / asymptotic).")

# ------------------------------------------------------------- series ------

def series_pair_mp(alpha, x):
    """(density, cdf) of the supremum via the power series, arbitrary precision.

    Chooses working precision from a float-level scan of term magnitudes so
    that catastrophic cancellation is fully absorbed.
    """
    lax = math.log(float(x))
    af = float(alpha)
    lnmax, n, argmax = -1e308, 1, 1
    while True:
        u = af * n - 1
        v = 1 / af + 1 - n
        try:
            lg2 = math.lgamma(v)
        except ValueError:
            lg2 = 1e308  # exact pole: term is zero
        lt = (u - 1) * lax - math.lgamma(u) - lg2
        if lt > lnmax:
            lnmax, argmax = lt, n
        if n > argmax + 8 and lt < lnmax - 60:
            break
        n += 1
        if n > 200000:
            raise RuntimeError("series term scan failed to roll over")
    digits = max(0.0, lnmax / math.log(10.0))
    dps = int(digits) + 50
    with workdps(dps):
        xm = mpf(x)
        eta = 1 / mpf(alpha)
        dens = mpf(0)
        cdf = mpf(0)
        maxt = mpf(0)
        n = 1
        stop = mpf(10) ** (-35)
        while True:
            u = mpf(alpha) * n - 1
            an = rgamma(u) * rgamma(eta + 1 - n)
            t_dens = an * xm ** (u - 1)
            dens += t_dens
            cdf += t_dens * xm / u
            maxt = max(maxt, abs(t_dens))
            if n > argmax + 8 and abs(t_dens) < stop * maxt * mpf(10) ** (-digits):
                break
            n += 1
            if n > 500000:
                raise RuntimeError("series did not converge")
        return +dens, +cdf

# ----------------------------------------------- oscillatory integrals -----

def I1_mp(alpha, x):
    """I1(x) = int g1(t) cos(tx) dt + int g2(t) sin(tx) dt."""
    p1 = quadosc(lambda t: g_pair(alpha, t)[0] * cos(t * x),
                 [0, inf], period=2 * pi / x)
    p2 = quadosc(lambda t: g_pair(alpha, t)[1] * sin(t * x),
                 [0, inf], period=2 * pi / x)
    _fmemo_save()
    return p1 + p2

def I2_mp(alpha, x):
    a, b = consts(alpha)[:2]
    f = lambda t: exp(-a * t ** alpha) * cos(b * t ** alpha + t * x)
    return quadosc(f, [0, inf], period=2 * pi / x)

def density_integral_mp(alpha, x):
    eta = 1 / alpha
    return I1_mp(alpha, x) / (pi * gamma(eta)) + I2_mp(alpha, x) / pi

def s_asym_mp(alpha, x, m_max=4, n_max=3):
    """Exact large-x density expansion, with a Watson-style error proxy.

    Derived from the Laplace transform's convergent small-lambda form
        L(lam) = sum_{m>=0} lam^{alpha m}/m!
                 - (1/Gamma(eta)) sum_{n>=0} lam^{1+alpha n}/(eta)_{n+1},
    eta = 1/alpha: every non-integer power A*lam^rho corresponds to a density
    tail term (A/Gamma(-rho))*x^{-rho-1}.  Returns (value, err_proxy) where
    err_proxy = magnitude of the last included term of each family.
    """
    eta = 1 / alpha
    s = mpf(0)
    last_m = mpf(0)
    for m in range(1, m_max + 1):
        rho = alpha * m
        last_m = x ** (-rho - 1) * rgamma(-rho) / factorial(m)
        s += last_m
    last_n = mpf(0)
    for n in range(1, n_max + 1):
        rho = 1 + alpha * n
        last_n = -(x ** (-rho - 1)) * rgamma(-rho) / (gamma(eta) * rf(eta, n + 1))
        s += last_n
    return +s, abs(last_m) + abs(last_n)

# ------------------------------------------------------------- laplace -----

def laplace_closed(alpha, lam):
    """E e^{-lam S} = e^u * Gamma_upper(1/alpha, u) / Gamma(1/alpha), u = lam^alpha."""
    eta = 1 / alpha
    u = lam ** alpha
    return exp(u) * gammainc(eta, u, inf) / gamma(eta)

def laplace_quad(alpha, lam):
    eta = 1 / alpha
    u = lam ** alpha
    upper = (u + 60) ** eta
    val = quad(lambda y: exp(-(y ** alpha)), [lam, lam + 1, upper])
    return (alpha / gamma(eta)) * exp(u) * val

def laplace_rgamma_series(alpha, lam):
    """Large-lam asymptotic series sum_{n>=1} lam^{1-alpha n} / Gamma(1/alpha + 1 - n).

    Divergent (the reciprocal gamma grows factorially for n beyond 1/alpha + 1);
    truncated at the smallest term, which for lam^alpha >> 1 is far below any
    tolerance used here.
    """
    eta = 1 / alpha
    s = mpf(0)
    prev = mpf("1e400")
    for n in range(1, 2000):
        term = lam ** (1 - alpha * n) * rgamma(eta + 1 - n)
        if abs(term) >= prev:
            break
        s += term
        prev = abs(term)
        if abs(term) < mpf(10) ** (-(mp.dps + 10)) * abs(s):
            break
    return s

def laplace_entire_series(alpha, lam, terms=80):
    """Convergent double-series form (see s_asym_mp docstring), small lam only:
    cancellation grows like e^{lam^alpha}, so use well below lam^alpha ~ 5."""
    eta = 1 / alpha
    u = lam ** alpha
    s = mpf(0)
    for m in range(terms):
        s += u ** m / factorial(m)
    t = mpf(0)
    for n in range(terms):
        t += lam ** (1 + alpha * n) / rf(eta, n + 1)
    return s - t / gamma(eta)

def check_laplace_forms():
    with workdps(30):
        for alpha in [1.2, 1.5, 1.8]:
            alpha = mpf(alpha)
            for lam in [mpf("0.5"), mpf(1), mpf(2)]:
                c = laplace_closed(alpha, lam)
                q = laplace_quad(alpha, lam)
                assert abs(c - q) / c < mpf(10) ** -24, (alpha, lam, "closed vs quad")
                e = laplace_entire_series(alpha, lam)
                assert abs(c - e) / c < mpf(10) ** -22, (alpha, lam, "closed vs entire series")
            lam = mpf(20)
            c = laplace_closed(alpha, lam)
            w = laplace_rgamma_series(alpha, lam)
            floor = 100 * exp(-(lam ** alpha)) + mpf(10) ** -25
            assert abs(c - w) / c < floor, (alpha, lam, "closed vs asym series")
    print("Laplace cross-checks passed (closed form / quadrature / entire "
          "series / asymptotic series).")

# ------------------------------------------------------------ fitting ------

def ls_fit_loglog(xs, ts):
    """Plain least squares of ln|T| against ln x; returns (slope, exp(intercept))."""
    us = [log(x) for x in xs]
    ys = [log(fabs(t)) for t in ts]
    n = len(us)
    ub = sum(us) / n
    yb = sum(ys) / n
    sxx = sum((u - ub) ** 2 for u in us)
    sxy = sum((u - ub) * (y - yb) for u, y in zip(us, ys))
    p = sxy / sxx
    return p, exp(yb - p * ub)

def fit_last_half(xs, ts):
    k = (len(xs) + 1) // 2
    return ls_fit_loglog(xs[-k:], ts[-k:])

def T_harness(alpha, x, kind):
    a, b, beta, k1, k2 = consts(alpha)[:5]
    if kind == "cos":
        f = lambda t: exp(-a * t ** alpha) * cos(b * t ** alpha) / k1 * cos(t * x)
    else:
        f = lambda t: -exp(-a * t ** alpha) * sin(b * t ** alpha) / k2 * sin(t * x)
    return quadosc(f, [0, inf], period=2 * pi / x)

# --------------------------------------------------------------- emit ------

def fmt(v):
    """Shortest round-trip f64 literal."""
    f = float(v)
    r = repr(f)
    if "e" not in r and "." not in r and "inf" not in r and "nan" not in r:
        r += ".0"
    return r

class Emitter:
    def __init__(self):
        self.rows = {}

    def add(self, table, row):
        self.rows.setdefault(table, []).append(row)

    def write(self, path):
        lines = [
            "// GENERATED by scripts/gen_reference_values.py -- do not edit by hand.",
            "//",
            "// High-precision reference values (mpmath, 22-200 significant digits),",
            "// frozen to shortest round-trip f64 literals. Independent formulas were",
            "// cross-checked against each other before emission; see the generator",
            "// script for the exact provenance of every table.",
            "",
            "/// Per-alpha derived constants.",
            "pub struct AlphaRef {",
            "    pub alpha: f64,",
            "    pub a: f64,",
            "    pub b: f64,",
            "    pub beta: f64,",
            "    pub k1: f64,",
            "    pub k2: f64,",
            "    pub l1: f64,",
            "    pub l2: f64,",
            "    pub c_canonical: f64,",
            "    pub mean_sup: f64,",
            "}",
            "",
        ]
        order = [
            ("GAMMA_REF", "&[(f64, f64)]", "(z, Gamma(z))"),
            ("LOWER_INC_GAMMA_REF", "&[(f64, f64, f64)]",
             "(eta, u, lower incomplete gamma(eta, u))"),
            ("ALPHA_REF", "&[AlphaRef]", "derived constants per alpha"),
            ("DENSITY_REF", "&[(f64, f64, f64)]",
             "(alpha, x, supremum density s(x)) -- power series, series region"),
            ("CDF_REF", "&[(f64, f64, f64)]", "(alpha, x, P(S <= x))"),
            ("G_REF", "&[(f64, f64, f64, f64)]", "(alpha, t, g1(t), g2(t))"),
            ("I1_REF", "&[(f64, f64, f64)]", "(alpha, x, I1(x))"),
            ("I2_REF", "&[(f64, f64, f64)]", "(alpha, x, I2(x))"),
            ("DENSITY_LARGE_X_REF", "&[(f64, f64, f64)]",
             "(alpha, x, s(x)) -- oscillatory-integral form, beyond series trust"),
            ("X3_I1_REF", "&[(f64, f64)]", "(x, x^3 * I1(x)) at alpha = 1.5"),
            ("TAIL_PROB_REF", "&[(f64, f64, f64)]", "(alpha, x, P(S > x))"),
            ("LAPLACE_REF", "&[(f64, f64, f64)]", "(alpha, lambda, E exp(-lambda S))"),
            ("HARNESS_T_REF", "&[(f64, u8, f64, f64)]",
             "(alpha, kind 0=cos 1=sin, x, T(x)) -- normalized transform values"),
            ("HARNESS_FIT_REF", "&[(f64, u8, f64, f64)]",
             "(alpha, kind, exponent_hat, constant_hat) -- LS fit, last 2 of {8,16,32,64}"),
        ]
        for name, ty, doc in order:
            if name not in self.rows:
                continue
            lines.append(f"/// {doc}")
            lines.append(f"pub const {name}: {ty} = &[")
            for row in self.rows[name]:
                lines.append(f"    {row},")
            lines.append("];")
            lines.append("")
        os.makedirs(os.path.dirname(path), exist_ok=True)
        with open(path, "w") as fh:
            fh.write("\n".join(lines))
        print(f"wrote {os.path.relpath(path)} "
              f"({sum(len(v) for v in self.rows.values())} rows)")

EM = Emitter()

# ------------------------------------------------------------ sections -----

ALPHAS = [1.05, 1.2, 1.5, 1.8, 1.95]
ALPHAS_MAIN = [1.2, 1.5, 1.8]

def section_gamma():
    zs = [-49.5, -33.3, -20.8, -10.2, -5.5, -2.5, -1.99, -1.8, -1.5, -1.2,
          -1.05, -1.01, -0.5, 0.05, 2.0 / 3.0, 0.1, 0.5, 1.5, 2.5, 3.7,
          10.5, 20.25, 33.33, 49.5]
    with workdps(40):
        for z in zs:
            v = cached(f"gamma|{z!r}", lambda z=z: gamma(mpf(z)))
            EM.add("GAMMA_REF", f"({fmt(z)}, {fmt(v)})")
    print(f"gamma: {len(zs)} values")

def section_incgamma():
    cases = [(2.0 / 3.0, 1.0), (2.0 / 3.0, 0.02), (2.0 / 3.0, 100.0),
             (0.9, 5.0), (5.5, 2.0), (0.51, 25.0), (0.5555555555555556, 12.0),
             (0.8333333333333334, 0.5)]
    with workdps(40):
        for eta, u in cases:
            v = cached(f"incgamma|{eta!r}|{u!r}",
                       lambda eta=eta, u=u: gammainc(mpf(eta), 0, mpf(u)))
            EM.add("LOWER_INC_GAMMA_REF", f"({fmt(eta)}, {fmt(u)}, {fmt(v)})")
    print(f"incgamma: {len(cases)} values")

def section_alphaconsts():
    with workdps(40):
        for alpha in ALPHAS:
            al = mpf(alpha)
            a, b, beta, k1, k2, l1, l2, c_can = consts(al)
            mean = al / gamma(1 / al)
            EM.add("ALPHA_REF",
                   "AlphaRef { alpha: %s, a: %s, b: %s, beta: %s, k1: %s, "
                   "k2: %s, l1: %s, l2: %s, c_canonical: %s, mean_sup: %s }"
                   % (fmt(al), fmt(a), fmt(b), fmt(beta), fmt(k1),
                      fmt(k2), fmt(l1), fmt(l2), fmt(c_can), fmt(mean)))
    print(f"alphaconsts: {len(ALPHAS)} rows")

SERIES_GRID = {
    1.2: [0.01, 0.1, 0.25, 0.5, 1.0, 1.5, 2.0, 2.4, 3.0],
    1.5: [0.01, 0.1, 0.25, 0.5, 1.0, 2.0, 3.0, 4.0, 4.5, 6.0],
    1.8: [0.01, 0.1, 0.5, 1.0, 2.0, 4.0, 6.0, 8.0],
}

def section_series():
    for alpha, xs in SERIES_GRID.items():
        for x in xs:
            key = f"series|{alpha!r}|{x!r}"
            if f"{key}|d@dps40" in _CACHE:
                d = mpf(_CACHE[f"{key}|d@dps40"])
                c = mpf(_CACHE[f"{key}|c@dps40"])
            else:
                d, c = series_pair_mp(alpha, x)
                with workdps(40):
                    _CACHE[f"{key}|d@dps40"] = mp.nstr(+d, 40, strip_zeros=False)
                    _CACHE[f"{key}|c@dps40"] = mp.nstr(+c, 40, strip_zeros=False)
                _cache_save()
            EM.add("DENSITY_REF", f"({fmt(alpha)}, {fmt(x)}, {fmt(d)})")
            EM.add("CDF_REF", f"({fmt(alpha)}, {fmt(x)}, {fmt(c)})")
    # tail probabilities used by the Monte Carlo gates
    with workdps(40):
        for x in [1.0, 2.0, 5.0]:
            key = f"series|1.5|{x!r}"
            c = mpf(_CACHE[f"{key}|c@dps40"]) if f"{key}|c@dps40" in _CACHE \
                else series_pair_mp(1.5, x)[1]
            EM.add("TAIL_PROB_REF", f"(1.5, {fmt(x)}, {fmt(1 - c)})")
    print("series: density/cdf grids done")

G_GRID = [0.3, 1.0, 2.5, 6.0, 12.0, 35.0]

def section_gfun():
    with workdps(25):
        for alpha in ALPHAS_MAIN:
            al = mpf(alpha)
            for t in G_GRID:
                g1 = cached(f"g1|{alpha!r}|{t!r}",
                            lambda al=al, t=t: g_pair(al, mpf(t))[0])
                g2 = cached(f"g2|{alpha!r}|{t!r}",
                            lambda al=al, t=t: g_pair(al, mpf(t))[1])
                EM.add("G_REF", f"({fmt(alpha)}, {fmt(t)}, {fmt(g1)}, {fmt(g2)})")
    print("gfun: done")

LARGE_X = [25.0, 50.0, 100.0, 200.0]

def section_ifun():
    with workdps(22):
        for alpha in ALPHAS_MAIN:
            al = mpf(alpha)
            # Direct oscillatory quadrature of the conditionally convergent
            # I1 tops out at ~1e-11 relative for alpha = 1.2 (the integrand
            # decays only like t^{-0.2}); the value frozen as reference is the
            # far more accurate consistency route I1 = pi*Gamma(eta)*(s - I2/pi)
            # with s from the entire series and I2 absolutely convergent.
            # The direct quadrature stands as an independent cross-check.
            i1_osc = cached(f"I1|{alpha!r}|1.0", lambda al=al: I1_mp(al, mpf(1)))
            i2 = cached(f"I2|{alpha!r}|1.0", lambda al=al: I2_mp(al, mpf(1)))
            d_ser, _ = series_pair_mp(alpha, 1.0)
            i1 = (d_ser - i2 / pi) * pi * gamma(1 / al)
            rel = abs(i1_osc - i1) / abs(i1)
            print(f"  I1 quadosc vs series+I2 consistency @ alpha={alpha}: "
                  f"rel dev {mp.nstr(rel, 3)}")
            assert rel < mpf("2e-9"), (alpha, "I1 quadosc vs consistency", rel)
            EM.add("I1_REF", f"({fmt(alpha)}, 1.0, {fmt(i1)})")
            EM.add("I2_REF", f"({fmt(alpha)}, 1.0, {fmt(i2)})")
        print("  series == integral at x=1 cross-checks passed.")
        # large-x density via the integral form (series is uncomputable
        # there); cross-checked against the exact tail expansion, whose
        # error proxy is the magnitude of its last included terms.
        for alpha in ALPHAS_MAIN:
            al = mpf(alpha)
            c_can = 1 / gamma(-al)
            for x in LARGE_X:
                i1 = cached(f"I1|{alpha!r}|{x!r}", lambda al=al, x=x: I1_mp(al, mpf(x)))
                i2 = cached(f"I2|{alpha!r}|{x!r}", lambda al=al, x=x: I2_mp(al, mpf(x)))
                s = i1 / (pi * gamma(1 / al)) + i2 / pi
                sa, err = s_asym_mp(al, mpf(x))
                rel = abs(s - sa) / s
                tol = 30 * err / s + mpf("1e-10")
                ratio = s / (c_can * mpf(x) ** (-al - 1))
                print(f"  s({alpha},{x}): int vs asym rel {mp.nstr(rel, 3)} "
                      f"(tol {mp.nstr(tol, 3)}); tail ratio-1 = "
                      f"{mp.nstr(ratio - 1, 4)}")
                assert rel < tol, (alpha, x, "integral vs asymptotic", rel, tol)
                EM.add("DENSITY_LARGE_X_REF", f"({fmt(alpha)}, {fmt(x)}, {fmt(s)})")
        # Lemma-type boundedness data: x^3 * I1 at alpha = 1.5
        for x in [10.0, 20.0, 40.0, 80.0]:
            i1 = cached(f"I1|1.5|{x!r}", lambda x=x: I1_mp(mpf("1.5"), mpf(x)))
            EM.add("X3_I1_REF", f"({fmt(x)}, {fmt(mpf(x) ** 3 * i1)})")
    print("ifun: done")

def section_laplace():
    check_laplace_forms()
    lams = [0.025, 0.05, 0.1, 0.2, 0.5, 1.0, 2.0, 5.0, 20.0]
    with workdps(40):
        for alpha in ALPHAS_MAIN:
            al = mpf(alpha)
            for lam in lams:
                v = cached(f"laplace|{alpha!r}|{lam!r}",
                           lambda al=al, lam=lam: laplace_closed(al, mpf(lam)))
                EM.add("LAPLACE_REF", f"({fmt(alpha)}, {fmt(lam)}, {fmt(v)})")
    print("laplace: done")

PINNED_GRID = [8.0, 16.0, 32.0, 64.0]
BIG_GRID = [128.0, 256.0, 512.0, 1024.0]

def section_harness():
    with workdps(20):
        for alpha in ALPHAS_MAIN:
            al = mpf(alpha)
            for kind, code in [("cos", 0), ("sin", 1)]:
                ts = []
                for x in PINNED_GRID:
                    t = cached(f"harness|{alpha!r}|{kind}|{x!r}",
                               lambda al=al, x=x, kind=kind: T_harness(al, mpf(x), kind))
                    ts.append(t)
                    EM.add("HARNESS_T_REF",
                           f"({fmt(alpha)}, {code}, {fmt(x)}, {fmt(t)})")
                p, c = fit_last_half([mpf(x) for x in PINNED_GRID], ts)
                EM.add("HARNESS_FIT_REF",
                       f"({fmt(alpha)}, {code}, {fmt(p)}, {fmt(c)})")
    print("harness: pinned-grid transform values done")

def section_biggrid():
    # anchors deep in the asymptotic regime, where constant recovery to <1%
    # is actually attainable (see --checks report)
    with workdps(20):
        for alpha, kind, code in [(1.2, "cos", 0), (1.8, "sin", 1)]:
            al = mpf(alpha)
            for x in BIG_GRID:
                t = cached(f"harness|{alpha!r}|{kind}|{x!r}",
                           lambda al=al, x=x, kind=kind: T_harness(al, mpf(x), kind))
                EM.add("HARNESS_T_REF", f"({fmt(alpha)}, {code}, {fmt(x)}, {fmt(t)})")
    print("biggrid: done")

# -------------------------------------------------------------- checks -----

def neumaier_series_f64(alpha, x):
    """Faithful f64 simulation of the production series sum.

    Returns (value, cancellation_digits, n_terms). Mirrors the Rust
    implementation: reciprocal-gamma products in log space with sign
    tracking for large n, Neumaier compensated summation.
    """
    af, xf = float(alpha), float(x)
    lax = math.log(xf)
    s = 0.0
    comp = 0.0
    maxt = 0.0
    n = 1
    decreasing = 0
    prev = float("inf")
    while True:
        u = af * n - 1
        v = 1 / af + 1 - n
        # ln |term| and sign
        try:
            lgv = math.lgamma(v)
            sgn = 1.0
            if v < 0 and math.floor(v) % 2 == 1:
                sgn = -1.0
        except ValueError:
            lgv, sgn = float("inf"), 1.0
        lt = (u - 1) * lax - math.lgamma(u) - lgv
        term = sgn * math.exp(lt) if lt > -745 else 0.0
        if lt > 690:
            return float("nan"), float("inf"), n  # overflow guard tripped
        t = s + term
        if abs(s) >= abs(term):
            comp += (s - t) + term
        else:
            comp += (term - t) + s
        s = t
        maxt = max(maxt, abs(term))
        at = abs(term)
        if at < prev:
            decreasing += 1
        else:
            decreasing = 0
        prev = at
        tot = s + comp
        if decreasing >= 3 and at < 1e-16 * max(abs(tot), 1e-300) * 10:
            break
        n += 1
        if n > 2000:
            break
    tot = s + comp
    canc = math.log10(max(maxt, 1e-300) / max(abs(tot), 1e-300))
    return tot, max(canc, 0.0), n

def checks():
    print("=" * 72)
    print("FEASIBILITY REPORT")
    print("=" * 72)

    check_F_forms()
    check_laplace_forms()

    print("\n--- acceptance 3: harness fit at pinned grid {8,16,32,64} ---")
    with workdps(20):
        for alpha in ALPHAS_MAIN:
            al = mpf(alpha)
            tgt = consts(al)[5]
            ts = [cached(f"harness|{alpha!r}|cos|{x!r}",
                         lambda al=al, x=x: T_harness(al, mpf(x), "cos"))
                  for x in PINNED_GRID]
            p, c = fit_last_half([mpf(x) for x in PINNED_GRID], ts)
            print(f"  alpha={alpha} cos: exp_hat={mp.nstr(p,8)} "
                  f"(dev {mp.nstr(p+al+1,3)}), const rel err "
                  f"{mp.nstr(c/tgt-1,3)}")
        for alpha, kind in [(1.2, "cos"), (1.8, "sin")]:
            al = mpf(alpha)
            tgt = consts(al)[5 if kind == "cos" else 6]
            ts = [cached(f"harness|{alpha!r}|{kind}|{x!r}",
                         lambda al=al, x=x, kind=kind: T_harness(al, mpf(x), kind))
                  for x in BIG_GRID]
            p, c = fit_last_half([mpf(x) for x in BIG_GRID], ts)
            print(f"  alpha={alpha} {kind} big grid {BIG_GRID}: "
                  f"exp dev {mp.nstr(p+al+1,3)}, const rel {mp.nstr(c/tgt-1,3)}")

    print("\n--- acceptance 5: density/tail-law ratio at {25,50,100,200} ---")
    with workdps(22):
        for alpha in ALPHAS_MAIN:
            al = mpf(alpha)
            c_can = consts(al)[7]
            devs = []
            for x in LARGE_X:
                i1 = cached(f"I1|{alpha!r}|{x!r}", lambda al=al, x=x: I1_mp(al, mpf(x)))
                i2 = cached(f"I2|{alpha!r}|{x!r}", lambda al=al, x=x: I2_mp(al, mpf(x)))
                s = i1 / (pi * gamma(1 / al)) + i2 / pi
                ratio = s / (c_can * mpf(x) ** (-al - 1))
                devs.append(abs(ratio - 1))
            mono = all(devs[i] > devs[i + 1] for i in range(len(devs) - 1))
            print(f"  alpha={alpha}: |ratio-1| = "
                  f"{[mp.nstr(d, 4) for d in devs]} monotone={mono}")

    print("\n--- acceptance 7: remainder slope on {0.2,0.1,0.05,0.025} ---")
    with workdps(40):
        for alpha in ALPHAS_MAIN:
            al = mpf(alpha)
            eta = 1 / al
            lams = [mpf(l) for l in [0.2, 0.1, 0.05, 0.025]]
            rs = []
            for lam in lams:
                L = cached(f"laplace|{alpha!r}|{float(lam)!r}",
                           lambda al=al, lam=lam: laplace_closed(al, lam))
                R = fabs(L - (1 - al / gamma(eta) * lam + lam ** al))
                rs.append(R)
            p_all, _ = ls_fit_loglog(lams, rs)
            p_2, _ = ls_fit_loglog(lams[:2], rs[:2])
            print(f"  alpha={alpha}: slope(all4)={mp.nstr(p_all,6)} "
                  f"slope(largest2)={mp.nstr(p_2,6)} target={float(1+al)}")

    print("\n--- series trust region (f64 simulation vs mp truth) ---")
    for alpha in ALPHAS_MAIN:
        x = 0.5
        xt_est = xt_true = 0.0
        true_unbroken = True
        worst_in_est = 0.0
        while x < 12.0:
            v, canc, _ = neumaier_series_f64(alpha, x)
            est_ok = (15.95 - canc) >= 9.0
            d_mp, _ = series_pair_mp(alpha, x)
            true_rel = abs(v - float(d_mp)) / float(d_mp) if d_mp != 0 else 0
            if math.isnan(v):
                true_rel = 1.0
            if est_ok:
                xt_est = x
                worst_in_est = max(worst_in_est, true_rel)
            if true_rel < 1e-9 and true_unbroken:
                xt_true = x
            else:
                true_unbroken = False
            if not est_ok:
                break
            x += 0.125
        print(f"  alpha={alpha}: x_trust(est gate)~{xt_est:.3f} "
              f"largest consecutive true-1e-9 x~{xt_true:.3f} "
              f"worst true rel err inside gate={worst_in_est:.2e}")

    print("\n--- MC gate bands (alpha=1.5, 1e5 paths) ---")
    with workdps(40):
        for x in [1.0, 2.0, 5.0]:
            _, c = series_pair_mp(1.5, x)
            p = float(1 - c)
            se = math.sqrt(p * (1 - p) / 1e5)
            print(f"  x={x}: P={p:.6f} band=[{p*0.9:.6f}, {p+3*se:.6f}] "
                  f"(3SE={3*se:.6f})")

# ---------------------------------------------------------------- main -----

SECTIONS = {
    "gamma": section_gamma,
    "incgamma": section_incgamma,
    "alphaconsts": section_alphaconsts,
    "series": section_series,
    "gfun": section_gfun,
    "ifun": section_ifun,
    "laplace": section_laplace,
    "harness": section_harness,
    "biggrid": section_biggrid,
}

def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--only", help="comma-separated section names")
    ap.add_argument("--checks", action="store_true",
                    help="run feasibility diagnostics instead of emitting")
    ap.add_argument("--no-emit", action="store_true")
    args = ap.parse_args()

    if args.checks:
        checks()
        return

    names = args.only.split(",") if args.only else list(SECTIONS)
    for name in names:
        SECTIONS[name]()
    if not args.no_emit and not args.only:
        EM.write(os.path.abspath(OUT_PATH))

if __name__ == "__main__":
    main()
