//! The Lobachevsky function `Λ(x) = -∫_0^x log|2 sin t| dt`.
//!
//! `Λ` is odd and π-periodic, and `Λ(x) = Cl2(2x) / 2` where `Cl2` is the
//! Clausen function. After reducing `x` into `[-π/2, π/2]` the argument
//! `θ = 2x` lies in `[-π, π]`, where
//!
//! ```text
//! Cl2(θ) = θ - θ log|θ| + Σ_{k≥1} ζ(2k) / (k (2k+1)) · θ^(2k+1) / (2π)^(2k)
//! ```
//!
//! converges at least like `4^-k`.
//!
//! [`lob_quadrature_oracle`] evaluates the defining integral directly and is
//! kept independent of the series path so it can serve as a test oracle.

use std::f64::consts::{FRAC_PI_2, PI};
use std::sync::OnceLock;

use crate::error::{Error, Result};

const MAX_TERMS: usize = 64;
const TERM_CUTOFF: f64 = 1e-16;
const SMALL_STREAK: usize = 3;

/// `ζ(2k) / (2π)^(2k)` for `k = 1..=MAX_TERMS` (index `k - 1`).
///
/// Built from Euler's convolution `(n + 1/2) ζ(2n) = Σ_{k=1}^{n-1} ζ(2k) ζ(2n-2k)`,
/// which rescales to the same recurrence on these coefficients and only adds
/// positive terms.
fn zeta_coefficients() -> &'static [f64; MAX_TERMS] {
    static TABLE: OnceLock<[f64; MAX_TERMS]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut c = [0.0; MAX_TERMS];
        // ζ(2) / (2π)^2 = 1/24
        c[0] = 1.0 / 24.0;
        for n in 2..=MAX_TERMS {
            let s: f64 = (1..n).map(|k| c[k - 1] * c[n - k - 1]).sum();
            c[n - 1] = s / (n as f64 + 0.5);
        }
        c
    })
}

/// Clausen function on `[-π, π]`.
fn clausen_reduced(theta: f64) -> f64 {
    if theta == 0.0 {
        return 0.0;
    }
    let coeffs = zeta_coefficients();
    let t2 = theta * theta;
    let mut power = theta;
    let mut sum = 0.0;
    let mut streak = 0;
    for (i, &c) in coeffs.iter().enumerate() {
        let k = (i + 1) as f64;
        power *= t2;
        let term = c * power / (k * (2.0 * k + 1.0));
        sum += term;
        if term.abs() < TERM_CUTOFF {
            streak += 1;
            if streak == SMALL_STREAK {
                break;
            }
        } else {
            streak = 0;
        }
    }
    theta - theta * theta.abs().ln() + sum
}

/// Lobachevsky function `Λ(x)`.
pub fn lob(x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::InvalidInput(format!(
            "Lobachevsky function needs a finite argument, got {x}"
        )));
    }
    Ok(lob_unchecked(x))
}

/// [`lob`] without the finiteness check, for internal callers that already
/// validated their angles.
pub(crate) fn lob_unchecked(x: f64) -> f64 {
    // odd symmetry is applied exactly, periodicity via the nearest multiple of π
    let sign = if x < 0.0 { -1.0 } else { 1.0 };
    let a = x.abs();
    let r = a - PI * (a / PI).round();
    sign * 0.5 * clausen_reduced(2.0 * r)
}

// Gauss-Kronrod 7/15 nodes and weights on [-1, 1].
const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_18,
    0.140_653_259_715_525_92,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_83,
];
// Gauss weights for the nodes XGK[1], XGK[3], XGK[5], XGK[7].
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

const MAX_DEPTH: u32 = 48;
const DYADIC_LEVELS: usize = 64;

fn gauss_kronrod(f: &impl Fn(f64) -> f64, a: f64, b: f64) -> (f64, f64) {
    let centre = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut kronrod = WGK[7] * f(centre);
    let mut gauss = WG[3] * f(centre);
    for (i, (&x, &w)) in XGK.iter().zip(WGK.iter()).take(7).enumerate() {
        let pair = f(centre - half * x) + f(centre + half * x);
        kronrod += w * pair;
        if i % 2 == 1 {
            gauss += WG[i / 2] * pair;
        }
    }
    (kronrod * half, ((kronrod - gauss) * half).abs())
}

fn adaptive(f: &impl Fn(f64) -> f64, a: f64, b: f64, tol: f64, depth: u32) -> f64 {
    let (value, err) = gauss_kronrod(f, a, b);
    if err <= tol || depth >= MAX_DEPTH {
        return value;
    }
    let mid = 0.5 * (a + b);
    adaptive(f, a, mid, 0.5 * tol, depth + 1) + adaptive(f, mid, b, 0.5 * tol, depth + 1)
}

/// `-∫_0^y log(2 sin t) dt` for `0 <= y <= π/2`, splitting `[0, y]` into
/// dyadic pieces that shrink towards the logarithmic singularity at 0.
fn integral_from_zero(y: f64, tol: f64) -> f64 {
    if y == 0.0 {
        return 0.0;
    }
    let f = |t: f64| -(2.0 * t.sin()).ln();
    let piece_tol = tol / (DYADIC_LEVELS + 1) as f64;
    let mut total = 0.0;
    let mut hi = y;
    for _ in 0..DYADIC_LEVELS {
        let lo = 0.5 * hi;
        total += adaptive(&f, lo, hi, piece_tol, 0);
        hi = lo;
    }
    // innermost piece [0, y / 2^64]; Gauss nodes never touch t = 0
    total + adaptive(&f, 0.0, hi, piece_tol, 0)
}

/// `Λ(x)` on `[0, π]` by adaptive Gauss-Kronrod quadrature of the defining
/// integral, accurate to `abs_tol`.
///
/// The singularities at `t = 0` and `t = π` are both isolated by dyadic
/// splitting; the upper half of the interval is folded onto the lower one
/// through `log|2 sin(π - t)| = log|2 sin t|`.
pub fn lob_quadrature_oracle(x: f64, abs_tol: f64) -> Result<f64> {
    if !(abs_tol > 0.0) {
        return Err(Error::InvalidInput(format!(
            "quadrature tolerance must be positive, got {abs_tol}"
        )));
    }
    if !(0.0..=PI).contains(&x) {
        return Err(Error::Domain(format!(
            "quadrature oracle is defined on [0, π], got {x}"
        )));
    }
    let tol = 0.25 * abs_tol;
    if x <= FRAC_PI_2 {
        Ok(integral_from_zero(x, tol))
    } else {
        // ∫_{π/2}^x = ∫_{π-x}^{π/2}
        let half = integral_from_zero(FRAC_PI_2, tol);
        Ok(2.0 * half - integral_from_zero(PI - x, tol))
    }
}
