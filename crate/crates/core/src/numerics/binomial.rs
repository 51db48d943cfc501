//! Tails of `B(2n, 1/2)`: `f_n(t) = P(B(2n, 1/2) ≥ n + t)`.
//!
//! The exact backend sums binomial coefficients as big integers. The float
//! backend evaluates each pmf term with Loader's saddle-point form (Stirling
//! remainders plus a deviance term), which keeps full relative precision far
//! into the tail, and adds the terms with compensated summation.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{precondition, Result};

/// Largest `n` for the exact backend.
pub const EXACT_TAIL_MAX_N: usize = 2000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TailMode {
    Exact,
    Float,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BinomTail {
    pub n: usize,
    pub t: i64,
    pub value: f64,
    /// The exact rational, when computed.
    pub exact: Option<String>,
}

/// `log(n!) − log(√(2πn)(n/e)ⁿ)`.
fn stirlerr(n: f64) -> f64 {
    const TABLE: [f64; 16] = [
        0.0,
        0.08106146679532725821967,
        0.04134069595540929409382,
        0.02767792568499833914879,
        0.02079067210376509311152,
        0.01664469118982119216319,
        0.01387612882307074799875,
        0.01189670994589177009506,
        0.01041126526197209649748,
        0.009255462182712732917729,
        0.008330563433362871256469,
        0.007573675487951840794972,
        0.006942840107209529865664,
        0.00640899418800420706844,
        0.005951370112758847735624,
        0.005554733551962801371039,
    ];
    const S0: f64 = 1.0 / 12.0;
    const S1: f64 = 1.0 / 360.0;
    const S2: f64 = 1.0 / 1260.0;
    const S3: f64 = 1.0 / 1680.0;
    const S4: f64 = 1.0 / 1188.0;
    if n <= 15.0 {
        return TABLE[n as usize];
    }
    let nn = n * n;
    if n > 500.0 {
        (S0 - S1 / nn) / n
    } else if n > 80.0 {
        (S0 - (S1 - S2 / nn) / nn) / n
    } else if n > 35.0 {
        (S0 - (S1 - (S2 - S3 / nn) / nn) / nn) / n
    } else {
        (S0 - (S1 - (S2 - (S3 - S4 / nn) / nn) / nn) / nn) / n
    }
}

/// Deviance term `x·ln(x/np) + np − x`, by series near `x = np`.
fn bd0(x: f64, np: f64) -> f64 {
    if (x - np).abs() < 0.1 * (x + np) {
        let v = (x - np) / (x + np);
        let mut s = (x - np) * v;
        let mut ej = 2.0 * x * v;
        let v2 = v * v;
        for j in 1..1000 {
            ej *= v2;
            let s1 = s + ej / (2 * j + 1) as f64;
            if s1 == s {
                return s1;
            }
            s = s1;
        }
        s
    } else {
        x * (x / np).ln() + np - x
    }
}

/// `P(B(size, 1/2) = x)`.
pub fn binom_pmf_half(x: u64, size: u64) -> f64 {
    if x > size {
        return 0.0;
    }
    if x == 0 || x == size {
        return (-(size as f64) * std::f64::consts::LN_2).exp();
    }
    let (xf, nf) = (x as f64, size as f64);
    let half = nf / 2.0;
    let lc = stirlerr(nf) - stirlerr(xf) - stirlerr(nf - xf) - bd0(xf, half) - bd0(nf - xf, half);
    let f = std::f64::consts::TAU * xf * (nf - xf) / nf;
    lc.exp() / f.sqrt()
}

/// Neumaier's compensated sum.
#[derive(Default)]
struct Compensated {
    sum: f64,
    c: f64,
}

impl Compensated {
    fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.c += (self.sum - t) + x;
        } else {
            self.c += (x - t) + self.sum;
        }
        self.sum = t;
    }

    fn value(&self) -> f64 {
        self.sum + self.c
    }
}

fn check_range(n: usize, t: i64) -> Result<()> {
    if t.unsigned_abs() as usize > n {
        return precondition(format!("|t| = {} exceeds n = {n}", t.unsigned_abs()));
    }
    Ok(())
}

/// `f_n(t)` in floating point, relative error around `1e-14`.
pub fn binom_tail_float(n: usize, t: i64) -> Result<f64> {
    check_range(n, t)?;
    if t <= 0 {
        // f_n(t) + f_n(1 − t) = 1, and the right tail is the accurate one.
        return Ok(if t == -(n as i64) { 1.0 } else { 1.0 - upper_tail(n, 1 - t) });
    }
    Ok(upper_tail(n, t))
}

fn upper_tail(n: usize, t: i64) -> f64 {
    let size = 2 * n as u64;
    let start = n as u64 + t as u64;
    if start > size {
        return 0.0;
    }
    let mut acc = Compensated::default();
    for j in start..=size {
        let term = binom_pmf_half(j, size);
        acc.add(term);
        if term < acc.value() * 1e-18 {
            break;
        }
    }
    acc.value()
}

/// `f_n(t)` as an exact rational.
pub fn binom_tail_exact(n: usize, t: i64) -> Result<BigRational> {
    check_range(n, t)?;
    if n > EXACT_TAIL_MAX_N {
        return precondition(format!("exact tails are limited to n <= {EXACT_TAIL_MAX_N}"));
    }
    let size = 2 * n;
    let start = (n as i64 + t) as usize;
    let mut c = BigUint::one();
    let mut sum = BigUint::zero();
    for j in 0..=size {
        if j >= start {
            sum += &c;
        }
        c = c * BigUint::from(size - j) / BigUint::from(j + 1);
    }
    Ok(BigRational::new(BigInt::from(sum), BigInt::from(BigUint::one() << size)))
}

pub fn binom_tail(n: usize, t: i64, mode: TailMode) -> Result<BinomTail> {
    match mode {
        TailMode::Exact => {
            let r = binom_tail_exact(n, t)?;
            Ok(BinomTail {
                n,
                t,
                value: r.to_f64().unwrap_or(f64::NAN),
                exact: Some(r.to_string()),
            })
        }
        TailMode::Float => Ok(BinomTail {
            n,
            t,
            value: binom_tail_float(n, t)?,
            exact: None,
        }),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ChernoffReport {
    pub n: usize,
    pub t_max: usize,
    pub holds: bool,
    /// Largest `f_n(t) / e^{−t²/(3n+t)}` seen, and where.
    pub worst_ratio: f64,
    pub worst_t: usize,
}

/// Checks `f_n(t) ≤ e^{−t²/(3n+t)}` for `1 ≤ t ≤ t_max`. Exact tails are
/// used where available.
pub fn chernoff_check(n: usize, t_max: usize) -> Result<ChernoffReport> {
    if t_max == 0 || t_max > n {
        return precondition("need 1 <= t_max <= n");
    }
    let mut report = ChernoffReport {
        n,
        t_max,
        holds: true,
        worst_ratio: 0.0,
        worst_t: 1,
    };
    for t in 1..=t_max {
        let tail = if n <= EXACT_TAIL_MAX_N {
            binom_tail_exact(n, t as i64)?.to_f64().unwrap_or(f64::NAN)
        } else {
            binom_tail_float(n, t as i64)?
        };
        let tf = t as f64;
        let log_bound = -tf * tf / (3.0 * n as f64 + tf);
        // Compare in log space: the bound underflows for large t.
        let ratio = if tail == 0.0 { 0.0 } else { (tail.ln() - log_bound).exp() };
        if ratio > report.worst_ratio {
            report.worst_ratio = ratio;
            report.worst_t = t;
        }
        if tail.ln() > log_bound {
            report.holds = false;
        }
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SecondEstimateRow {
    pub t: i64,
    pub tail: f64,
    pub approx: f64,
    pub residual: f64,
    pub bound: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SecondEstimateReport {
    pub n: usize,
    pub t_limit: i64,
    pub max_ratio: f64,
    pub holds: bool,
    pub rows: Vec<SecondEstimateRow>,
}

/// Checks `|f_n(t) − (1/2 − (t − 1/2)/√(nπ))| ≤ (2|t|³ + 1)/n^{3/2}` for
/// every integer `|t| ≤ √n/100`.
pub fn fn_second_estimate_check(n: usize) -> Result<SecondEstimateReport> {
    if n < 10_000 {
        return precondition("need n >= 10^4 for a non-trivial range of t");
    }
    let nf = n as f64;
    let t_limit = (nf.sqrt() / 100.0).floor() as i64;
    let scale = (nf * std::f64::consts::PI).sqrt();
    let mut rows = Vec::new();
    let mut max_ratio: f64 = 0.0;
    for t in -t_limit..=t_limit {
        let tail = binom_tail_float(n, t)?;
        let approx = 0.5 - (t as f64 - 0.5) / scale;
        let residual = (tail - approx).abs();
        let ta = t.unsigned_abs() as f64;
        let bound = (2.0 * ta.powi(3) + 1.0) / nf.powf(1.5);
        max_ratio = max_ratio.max(residual / bound);
        rows.push(SecondEstimateRow {
            t,
            tail,
            approx,
            residual,
            bound,
        });
    }
    Ok(SecondEstimateReport {
        n,
        t_limit,
        max_ratio,
        holds: max_ratio <= 1.0,
        rows,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BindiffReport {
    pub n: usize,
    pub m: usize,
    pub equal: bool,
    /// Support points where the two laws differ (empty when `equal`).
    pub mismatches: Vec<usize>,
}

/// Pmf of `B(k, 1/2)` scaled by `2^k`, i.e. a row of Pascal's triangle.
fn pascal(k: usize) -> Vec<BigUint> {
    let mut row = vec![BigUint::one()];
    for j in 0..k {
        let next = &row[j] * BigUint::from(k - j) / BigUint::from(j + 1);
        row.push(next);
    }
    row
}

/// Compares the law of `X + m − Y` (independent `X ~ B(n, 1/2)`,
/// `Y ~ B(m, 1/2)`) with `B(n + m, 1/2)` exactly.
pub fn bindiff_check(n: usize, m: usize) -> Result<BindiffReport> {
    if n + m > 512 {
        return precondition("need n + m <= 512");
    }
    let (px, py) = (pascal(n), pascal(m));
    // Both sides are scaled by 2^(n+m).
    let mut conv = vec![BigUint::zero(); n + m + 1];
    for (x, cx) in px.iter().enumerate() {
        for (y, cy) in py.iter().enumerate() {
            conv[x + m - y] += cx * cy;
        }
    }
    let target = pascal(n + m);
    let mismatches: Vec<usize> = (0..=n + m).filter(|&k| conv[k] != target[k]).collect();
    Ok(BindiffReport {
        n,
        m,
        equal: mismatches.is_empty(),
        mismatches,
    })
}
