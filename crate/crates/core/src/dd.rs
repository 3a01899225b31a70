//! Double-double arithmetic: an internal high-precision mode (~31
//! significant digits) used **solely as a test oracle** to extend the
//! trusted region of the power series and cross-validate `f64` results.
//! It is not part of the crate's stability promise and deliberately
//! implements only the operations the oracle needs.
//!
//! Representation: an unevaluated sum `hi + lo` with `|lo| ≤ ulp(hi)/2`
//! (Dekker/Knuth error-free transformations; products use FMA).

use std::f64::consts::PI;

/// A double-double value `hi + lo`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Dd {
    /// Leading component.
    pub hi: f64,
    /// Trailing correction, `|lo| ≤ ulp(hi)/2` after normalization.
    pub lo: f64,
}

/// Error-free sum: `a + b = s + e` exactly (Knuth).
#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let e = (a - (s - bb)) + (b - bb);
    (s, e)
}

/// Error-free sum assuming `|a| ≥ |b|` (Dekker).
#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let e = b - (s - a);
    (s, e)
}

/// Error-free product via FMA: `a·b = p + e` exactly.
#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let e = a.mul_add(b, -p);
    (p, e)
}

impl Dd {
    /// Zero.
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    /// One.
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };
    /// π to double-double precision.
    pub const PI: Dd = Dd {
        hi: PI,
        lo: 1.224_646_799_147_353_2e-16,
    };
    /// ln 2 to double-double precision.
    pub const LN2: Dd = Dd {
        hi: 0.693_147_180_559_945_3,
        lo: 2.319_046_813_846_299_6e-17,
    };

    /// Lift an `f64`.
    #[inline]
    pub fn from_f64(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    /// Normalized construction from an unevaluated pair.
    #[inline]
    pub fn new(hi: f64, lo: f64) -> Dd {
        let (s, e) = quick_two_sum(hi, lo);
        Dd { hi: s, lo: e }
    }

    /// Round to nearest `f64`.
    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    /// Self + other.
    pub fn add(self, other: Dd) -> Dd {
        let (s, se) = two_sum(self.hi, other.hi);
        let (t, te) = two_sum(self.lo, other.lo);
        let (s2, e2) = quick_two_sum(s, se + t);
        let (hi, lo) = quick_two_sum(s2, e2 + te);
        Dd { hi, lo }
    }

    /// Self − other.
    #[inline]
    pub fn sub(self, other: Dd) -> Dd {
        self.add(other.neg())
    }

    /// −self.
    #[inline]
    pub fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }

    /// Self × other.
    pub fn mul(self, other: Dd) -> Dd {
        let (p, pe) = two_prod(self.hi, other.hi);
        let e = pe + (self.hi * other.lo + self.lo * other.hi);
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }

    /// Self × scalar.
    #[inline]
    pub fn mul_f64(self, k: f64) -> Dd {
        self.mul(Dd::from_f64(k))
    }

    /// Self ÷ other (three-step Newton-style long division).
    pub fn div(self, other: Dd) -> Dd {
        let q1 = self.hi / other.hi;
        let r = self.sub(other.mul_f64(q1));
        let q2 = r.hi / other.hi;
        let r2 = r.sub(other.mul_f64(q2));
        let q3 = r2.hi / other.hi;
        Dd::new(q1, q2).add(Dd::from_f64(q3))
    }

    /// Absolute value.
    #[inline]
    pub fn abs(self) -> Dd {
        if self.hi < 0.0 {
            self.neg()
        } else {
            self
        }
    }

    /// e^self, by range reduction `self = m·ln2 + r`, scaling `r/2⁹`,
    /// Taylor series, and 9 squarings.
    pub fn exp(self) -> Dd {
        if self.hi < -745.0 {
            return Dd::ZERO;
        }
        if self.hi > 709.0 {
            return Dd::from_f64(f64::INFINITY);
        }
        let m = (self.hi / Dd::LN2.hi).round();
        let r = self.sub(Dd::LN2.mul_f64(m));
        // Scale down by 2^9 = 512 so the Taylor series converges fast.
        let rs = r.mul_f64(1.0 / 512.0);
        // exp(rs) − 1 by Taylor (|rs| ≤ ln2/1024 ≈ 6.8e-4): 8 terms reach
        // ~1e-26 each-term; accumulate in Horner order.  Divide by the exact
        // integer k in double-double — an f64 literal 1/k (k = 3, 5, …)
        // carries ~5e-17 relative error, which would cap the whole function
        // near 1e-24 instead of ~1e-31.
        let mut term = rs;
        let mut sum = rs;
        for k in 2..=10 {
            term = term.mul(rs).div(Dd::from_f64(k as f64));
            sum = sum.add(term);
        }
        // Undo scaling: (1+s)^512 via repeated squaring of (1+s), tracking
        // s' = 2s + s² to stay accurate near 0.
        let mut s = sum;
        for _ in 0..9 {
            s = s.mul_f64(2.0).add(s.mul(s));
        }
        let e = Dd::ONE.add(s);
        // Multiply by 2^m exactly.
        let p = 2f64.powi(m as i32);
        Dd {
            hi: e.hi * p,
            lo: e.lo * p,
        }
    }

    /// ln(self) for positive self: seed from `f64::ln`, one Newton step in
    /// double-double (`y ← y + x·e^{-y} − 1` has quadratic convergence).
    pub fn ln(self) -> Dd {
        assert!(self.hi > 0.0);
        let y0 = Dd::from_f64(self.hi.ln());
        let e = y0.neg().exp();
        let y1 = y0.add(self.mul(e).sub(Dd::ONE));
        // One more step buys the full 31 digits.
        let e2 = y1.neg().exp();
        y1.add(self.mul(e2).sub(Dd::ONE))
    }

    /// self^p for positive self.
    pub fn powf(self, p: Dd) -> Dd {
        self.ln().mul(p).exp()
    }

    /// sin(π·self) with exact reduction by the nearest integer.
    pub fn sin_pi(self) -> Dd {
        let n = self.hi.round();
        let r = self.sub(Dd::from_f64(n)); // |r| ≤ 0.5 + tiny
        let theta = Dd::PI.mul(r);
        // Taylor: sin θ = Σ (-1)^k θ^{2k+1}/(2k+1)!, |θ| ≤ π/2.
        let t2 = theta.mul(theta).neg();
        let mut term = theta;
        let mut sum = theta;
        for k in 1..=19 {
            // Exact-integer division; a rounded 1/denom literal would leave a
            // ~1e-18 absolute floor in the result (see exp).
            let denom = ((2 * k) * (2 * k + 1)) as f64;
            term = term.mul(t2).div(Dd::from_f64(denom));
            sum = sum.add(term);
        }
        if (n as i64) & 1 == 0 {
            sum
        } else {
            sum.neg()
        }
    }
}

/// Bernoulli quotients `B_{2n}/(2n(2n-1))` for the Stirling series,
/// n = 1..=12, as exact integer ratios (both parts are exactly
/// representable; the quotient is formed in double-double at use).
const STIRLING_COEF: [(f64, f64); 12] = [
    (1.0, 12.0),
    (-1.0, 360.0),
    (1.0, 1260.0),
    (-1.0, 1680.0),
    (1.0, 1188.0),
    (-691.0, 360360.0),
    (1.0, 156.0),
    (-3617.0, 122400.0),
    (43867.0, 244188.0),
    (-174611.0, 125400.0),
    (77683.0, 5796.0),
    (-236364091.0, 1506960.0),
];

/// ln(2π)/2 in double-double.
const HALF_LN_2PI: Dd = Dd {
    hi: 0.918_938_533_204_672_7,
    lo: 7.223_936_088_184_324e-17,
};

/// ln Γ(z) for z > 0 in double-double: Stirling with Bernoulli correction
/// for `z ≥ 26`, upward recurrence below.
pub fn dd_lgamma(z: Dd) -> Dd {
    assert!(z.hi > 0.0);
    let mut shift = Dd::ZERO;
    let mut zz = z;
    while zz.hi < 26.0 {
        shift = shift.add(zz.ln());
        zz = zz.add(Dd::ONE);
    }
    // Stirling: (z-1/2)ln z - z + ln(2π)/2 + Σ c_n / z^{2n-1}.
    let lnz = zz.ln();
    let mut acc = zz
        .sub(Dd::new(0.5, 0.0))
        .mul(lnz)
        .sub(zz)
        .add(HALF_LN_2PI);
    let z2 = Dd::ONE.div(zz.mul(zz));
    let mut pw = Dd::ONE.div(zz);
    for (num, den) in STIRLING_COEF {
        acc = acc.add(pw.mul(Dd::from_f64(num).div(Dd::from_f64(den))));
        pw = pw.mul(z2);
    }
    acc.sub(shift)
}

/// `(ln|1/Γ(z)|, sign)` in double-double, total over the real line;
/// at poles returns `(-inf, 0.0)`.
pub fn dd_ln_abs_recip_gamma_sign(z: Dd) -> (Dd, f64) {
    if z.hi >= 0.5 {
        return (dd_lgamma(z).neg(), 1.0);
    }
    let s = z.sin_pi();
    if s.hi == 0.0 {
        return (Dd::from_f64(f64::NEG_INFINITY), 0.0);
    }
    // 1/Γ(z) = sin(πz)·Γ(1-z)/π
    let ln_abs = s
        .abs()
        .ln()
        .add(dd_lgamma(Dd::ONE.sub(z)))
        .sub(Dd::PI.ln());
    (ln_abs, s.hi.signum())
}
