//! Normal windows `I[a, b] = ∫_{a√2}^{b√2} φ` and the function
//! `f(α) = I[−α/4, 1/α]` with its critical points.

use serde::{Deserialize, Serialize};
use libm::{erf, erfc};

use crate::error::{precondition, Error, Result};

/// `I[a, b]`. Since `Φ(x√2) = (1 + erf x)/2`, this is `(erf b − erf a)/2`;
/// one-signed windows use `erfc` to avoid cancellation in the tails.
pub fn normal_i(a: f64, b: f64) -> Result<f64> {
    if a.is_nan() || b.is_nan() || a > b {
        return precondition(format!("need a <= b, got [{a}, {b}]"));
    }
    Ok(window(a, b))
}

fn window(a: f64, b: f64) -> f64 {
    if a >= 0.0 {
        0.5 * (erfc_ext(a) - erfc_ext(b))
    } else if b <= 0.0 {
        window(-b, -a)
    } else {
        0.5 * (erf_ext(b) + erf_ext(-a))
    }
}

fn erf_ext(x: f64) -> f64 {
    if x.is_infinite() {
        x.signum()
    } else {
        erf(x)
    }
}

fn erfc_ext(x: f64) -> f64 {
    if x == f64::INFINITY {
        0.0
    } else {
        erfc(x)
    }
}

/// `f(α) = I[−α/4, 1/α]`.
pub fn f_alpha(alpha: f64) -> Result<f64> {
    if !(alpha > 0.0) {
        return precondition("alpha must be positive");
    }
    Ok(window(-alpha / 4.0, 1.0 / alpha))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WindowCase {
    /// `β ≤ 8/(5α)`: the left end is `α − 2/β`.
    SmallBeta,
    /// `8/(5α) < β < 4/α`: the window is exactly `f(α)`.
    Middle,
    /// `β ≥ 4/α`: the right end is `β/4`.
    LargeBeta,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WindowReport {
    pub m1: f64,
    pub m2: f64,
    pub value: f64,
    pub f_alpha: f64,
    pub case: WindowCase,
    /// `value ≥ f(α)` up to `1e-12`, with equality in the middle case.
    pub holds: bool,
}

/// `m₁ = max{α/4, 2/β − α}`, `m₂ = max{β/4, 1/α}` and `I[−m₁, m₂]`.
pub fn window_m1_m2(alpha: f64, beta: f64) -> Result<WindowReport> {
    if !(alpha > 0.0 && beta > 0.0) {
        return precondition("alpha and beta must be positive");
    }
    let m1 = (alpha / 4.0).max(2.0 / beta - alpha);
    let m2 = (beta / 4.0).max(1.0 / alpha);
    let value = window(-m1, m2);
    let f = f_alpha(alpha)?;
    let case = if beta <= 8.0 / (5.0 * alpha) {
        WindowCase::SmallBeta
    } else if beta < 4.0 / alpha {
        WindowCase::Middle
    } else {
        WindowCase::LargeBeta
    };
    let holds = match case {
        WindowCase::Middle => value == f,
        _ => value >= f - 1e-12,
    };
    Ok(WindowReport {
        m1,
        m2,
        value,
        f_alpha: f,
        case,
        holds,
    })
}

/// `g(x) = −x/16 + 1/x + ln(x/4)`, which has the sign of `f′(√x)`.
pub fn g(x: f64) -> f64 {
    -x / 16.0 + 1.0 / x + (x / 4.0).ln()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GRoots {
    pub r1: f64,
    pub r2: f64,
    pub r3: f64,
    pub g_r1: f64,
    pub g_r3: f64,
    pub width1: f64,
    pub width3: f64,
    /// `g > 0` on `(0, r1)`, `< 0` on `(r1, 4)`, `> 0` on `(4, r3)`, `< 0`
    /// beyond, checked on a log grid.
    pub sign_pattern_ok: bool,
}

/// Bisects a sign change of `g` in `[lo, hi]` down to adjacent floats and
/// returns the end with the smaller `|g|` and the final width.
fn bisect(mut lo: f64, mut hi: f64) -> Result<(f64, f64)> {
    let (glo, ghi) = (g(lo), g(hi));
    if glo.signum() == ghi.signum() {
        return Err(Error::Construction(format!("no sign change of g on [{lo}, {hi}]")));
    }
    let lo_positive = glo > 0.0;
    loop {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if (g(mid) > 0.0) == lo_positive {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let r = if g(lo).abs() <= g(hi).abs() { lo } else { hi };
    Ok((r, hi - lo))
}

pub fn g_roots() -> Result<GRoots> {
    let s = 4.0 * 3f64.sqrt();
    let (r1, width1) = bisect(1e-6, 8.0 - s)?;
    let (r3, width3) = bisect(8.0 + s, 1e3)?;
    let r2 = 4.0;
    let sign_pattern_ok = (0..=1000).all(|i| {
        let x = 10f64.powf(-3.0 + 6.0 * i as f64 / 1000.0);
        if [r1, r2, r3].iter().any(|r| (x - r).abs() < 1e-9 * r) {
            return true;
        }
        let expect_positive = x < r1 || (x > r2 && x < r3);
        (g(x) > 0.0) == expect_positive
    });
    Ok(GRoots {
        r1,
        r2,
        r3,
        g_r1: g(r1),
        g_r3: g(r3),
        width1,
        width3,
        sign_pattern_ok,
    })
}
