//! Binomial tails, normal windows and the expansion of `p_n`.

mod binomial;
mod curve;
mod normal;

pub use binomial::{
    binom_pmf_half, binom_tail, binom_tail_exact, binom_tail_float, bindiff_check, chernoff_check,
    fn_second_estimate_check, BindiffReport, BinomTail, ChernoffReport, SecondEstimateReport, SecondEstimateRow,
    TailMode, EXACT_TAIL_MAX_N,
};
pub use curve::{emit_f_alpha_curve, CurveRow, CurveTable, Extremum};
pub use normal::{f_alpha, g, g_roots, normal_i, window_m1_m2, GRoots, WindowCase, WindowReport};

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::counting::{p_exact_extremal, P_EXACT_MAX_N};
use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PnSource {
    /// `p(G)` of the member whose 2-factor is one Hamilton cycle.
    Exact,
    /// `P(B(2n, 1/2) ≥ n − 1)`, equal to `p_n` up to `e^{−Θ(n)}`.
    Surrogate,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PnRow {
    pub n: usize,
    pub source: PnSource,
    pub p: f64,
    pub approx: f64,
    /// `n^{3/2}·|p − 1/2 − (3/2)/√(nπ)|`.
    pub scaled_residual: f64,
}

/// `1/2 + (3/2)/√(nπ)`.
pub fn pn_approx(n: usize) -> f64 {
    0.5 + 1.5 / (n as f64 * std::f64::consts::PI).sqrt()
}

/// Scaled residuals of the two-term expansion of `p_n`, from the exact
/// extremal evaluator when `exact` and `n ≤ 1000`, else from the binomial
/// surrogate.
pub fn pn_expansion_check(ns: &[usize], exact: bool) -> Result<Vec<PnRow>> {
    ns.iter()
        .map(|&n| {
            let (p, source) = if exact && n <= P_EXACT_MAX_N {
                let p = p_exact_extremal(n, &[n + 1])?;
                (p.to_f64().unwrap_or(f64::NAN), PnSource::Exact)
            } else {
                (binom_tail_float(n, -1)?, PnSource::Surrogate)
            };
            let approx = pn_approx(n);
            Ok(PnRow {
                n,
                source,
                p,
                approx,
                scaled_residual: (n as f64).powf(1.5) * (p - approx).abs(),
            })
        })
        .collect()
}
