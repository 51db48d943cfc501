//! Seeded Monte Carlo over random induced subgraphs `G[p]`.
//!
//! Samples are grouped in blocks of [`BLOCK_SAMPLES`]; block `i` draws from
//! a ChaCha stream keyed by `(seed, i)`. Blocks only return integer tallies,
//! so the report does not depend on how blocks are spread over workers.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::constructions::ExtremalGraph;
use crate::error::{precondition, Result};
use crate::graph::forest::{is_k_good_cut, EXACT_FOREST_LIMIT};
use crate::graph::{Cut, Graph, VertexSet};
use crate::hamiltonicity::{default_budget, find_ham_cycle_rotation, gn_criterion, is_hamiltonian_exact, EXACT_LIMIT};
use crate::par;

pub const BLOCK_SAMPLES: u64 = 1024;
/// Two-sided 99% normal quantile.
pub const WILSON_Z99: f64 = 2.5758293035489;

/// How sampled subgraphs are decided.
#[derive(Clone, Copy, Debug)]
pub enum Decider<'a> {
    /// Exact DP up to [`EXACT_LIMIT`] vertices, rotation search above.
    Auto,
    /// The closed-form criterion for a labelled extremal graph.
    Gn(&'a ExtremalGraph),
    /// Exact DP only; larger subgraphs stay undecided.
    Exact,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EstimateReport {
    pub p_hat: f64,
    pub ci_low: f64,
    pub ci_high: f64,
    pub std_error: f64,
    pub hits: u64,
    pub samples: u64,
    pub seed: u64,
    pub p_retention: f64,
    pub undecided: u64,
    pub undecided_fraction: f64,
}

impl EstimateReport {
    fn from_tally(hits: u64, undecided: u64, samples: u64, seed: u64, p_retention: f64) -> Self {
        let p_hat = hits as f64 / samples as f64;
        let (ci_low, ci_high) = wilson_interval(hits, samples, WILSON_Z99);
        EstimateReport {
            p_hat,
            ci_low,
            ci_high,
            std_error: (p_hat * (1.0 - p_hat) / samples as f64).sqrt(),
            hits,
            samples,
            seed,
            p_retention,
            undecided,
            undecided_fraction: undecided as f64 / samples as f64,
        }
    }
}

/// Wilson score interval for `hits` successes in `n` trials.
pub fn wilson_interval(hits: u64, n: u64, z: f64) -> (f64, f64) {
    if n == 0 {
        return (0.0, 1.0);
    }
    let nf = n as f64;
    let p = hits as f64 / nf;
    let z2 = z * z;
    let denom = 1.0 + z2 / nf;
    let centre = (p + z2 / (2.0 * nf)) / denom;
    let half = z / denom * (p * (1.0 - p) / nf + z2 / (4.0 * nf * nf)).sqrt();
    ((centre - half).max(0.0).min(p), (centre + half).min(1.0).max(p))
}

fn block_rng(seed: u64, block: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(block);
    rng
}

fn draw(rng: &mut ChaCha8Rng, m: usize, p: f64) -> VertexSet {
    VertexSet::from_iter(m, (0..m).filter(|_| rng.random_bool(p)))
}

/// Runs `samples` draws of `G[p]` in blocks and sums `(hits, undecided)`.
fn tally<F>(m: usize, p: f64, samples: u64, seed: u64, workers: usize, judge: F) -> (u64, u64)
where
    F: Fn(&VertexSet, u64) -> (bool, bool) + Sync + Send,
{
    let blocks = samples.div_ceil(BLOCK_SAMPLES);
    let parts = par::map_indexed(blocks as usize, workers, |b| {
        let b = b as u64;
        let mut rng = block_rng(seed, b);
        let count = BLOCK_SAMPLES.min(samples - b * BLOCK_SAMPLES);
        let (mut hits, mut undecided) = (0u64, 0u64);
        for j in 0..count {
            let s = draw(&mut rng, m, p);
            let (hit, unknown) = judge(&s, b * BLOCK_SAMPLES + j);
            hits += u64::from(hit);
            undecided += u64::from(unknown);
        }
        (hits, undecided)
    });
    parts.into_iter().fold((0, 0), |(h, u), (a, b)| (h + a, u + b))
}

fn check_p(p: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&p) {
        return precondition("retention probability must lie in [0, 1]");
    }
    Ok(())
}

/// Estimates `h(G, p)`, the probability that `G[p]` is Hamiltonian.
/// Undecided samples count as failures and are reported separately.
pub fn estimate_h(
    g: &Graph,
    p_retention: f64,
    samples: u64,
    seed: u64,
    decider: Decider<'_>,
    workers: usize,
) -> Result<EstimateReport> {
    check_p(p_retention)?;
    if samples == 0 {
        return precondition("need at least one sample");
    }
    if let Decider::Gn(eg) = decider {
        if eg.graph.vertex_count() != g.vertex_count() {
            return precondition("extremal labelling does not match the graph");
        }
    }
    let (hits, undecided) = tally(g.vertex_count(), p_retention, samples, seed, workers, |s, idx| {
        match decider {
            Decider::Gn(eg) => (gn_criterion(eg, s), false),
            _ if s.len() <= EXACT_LIMIT => match is_hamiltonian_exact(g, s) {
                Ok(d) => (d.is_hamiltonian(), false),
                Err(_) => (false, true),
            },
            Decider::Exact => (false, true),
            Decider::Auto => {
                let d = find_ham_cycle_rotation(g, s, default_budget(s.len()), seed ^ idx.wrapping_mul(0x9E37_79B9_7F4A_7C15));
                (d.is_hamiltonian(), d.is_unknown())
            }
        }
    });
    Ok(EstimateReport::from_tally(hits, undecided, samples, seed, p_retention))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EdgeConcentration {
    pub edges: usize,
    pub expected: f64,
    pub mean: f64,
    pub variance: f64,
    /// `Var e(G[½]) = 3e/16 + Σ d(v)(d(v) − 1)/16`.
    pub exact_variance: f64,
    pub std_error: f64,
    pub within_3se: bool,
    /// Fraction of samples with `|e(G[½]) − e/4| > e/10`.
    pub deviation_fraction: f64,
    /// Vertex-exposure martingale bound `2·exp(−(e/10)²/(2Σd²))` on that
    /// fraction's expectation.
    pub azuma_bound: f64,
    pub samples: u64,
    pub seed: u64,
}

/// Samples `e(G[½])` and compares it with `e(G)/4`.
pub fn edge_concentration_experiment(g: &Graph, samples: u64, seed: u64, workers: usize) -> Result<EdgeConcentration> {
    let e = g.edge_count();
    if e == 0 {
        return precondition("graph has no edges");
    }
    if samples < 2 {
        return precondition("need at least two samples");
    }
    let m = g.vertex_count();
    let expected = e as f64 / 4.0;
    let tol = e as f64 / 10.0;
    let blocks = samples.div_ceil(BLOCK_SAMPLES);
    let parts = par::map_indexed(blocks as usize, workers, |b| {
        let b = b as u64;
        let mut rng = block_rng(seed, b);
        let (mut sum, mut sq, mut dev) = (0u64, 0u128, 0u64);
        for _ in 0..BLOCK_SAMPLES.min(samples - b * BLOCK_SAMPLES) {
            let x = g.edges_within(&draw(&mut rng, m, 0.5)) as u64;
            sum += x;
            sq += u128::from(x) * u128::from(x);
            dev += u64::from((x as f64 - expected).abs() > tol);
        }
        (sum, sq, dev)
    });
    let (sum, sq, dev) = parts
        .into_iter()
        .fold((0u64, 0u128, 0u64), |a, b| (a.0 + b.0, a.1 + b.1, a.2 + b.2));
    let nf = samples as f64;
    let mean = sum as f64 / nf;
    let variance = ((sq as f64) - nf * mean * mean) / (nf - 1.0);
    let std_error = (variance.max(0.0) / nf).sqrt();
    let degrees = g.degree_sequence();
    let pairs: usize = degrees.iter().map(|&d| d * d.saturating_sub(1)).sum();
    let squares: usize = degrees.iter().map(|&d| d * d).sum();
    Ok(EdgeConcentration {
        edges: e,
        expected,
        mean,
        variance,
        exact_variance: (3 * e + pairs) as f64 / 16.0,
        std_error,
        within_3se: (mean - expected).abs() <= 3.0 * std_error.max(f64::MIN_POSITIVE),
        deviation_fraction: dev as f64 / nf,
        azuma_bound: (2.0 * (-(tol * tol) / (2.0 * squares as f64)).exp()).min(1.0),
        samples,
        seed,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GoodCutReport {
    #[serde(flatten)]
    pub estimate: EstimateReport,
    pub k: usize,
    /// True when some sample fell back to the linear-forest lower bound, so
    /// the estimate only bounds the probability from below.
    pub lower_bound: bool,
}

/// Estimates the probability over `S ~ G[½]` that `(X ∩ S, Y ∩ S)` is a
/// k-good cut of `G[S]`.
pub fn good_cut_probability(
    g: &Graph,
    cut: &Cut,
    k: usize,
    samples: u64,
    seed: u64,
    workers: usize,
) -> Result<GoodCutReport> {
    if samples == 0 {
        return precondition("need at least one sample");
    }
    if cut.x.universe() != g.vertex_count() {
        return precondition("cut does not match the graph");
    }
    let (hits, undecided) = tally(g.vertex_count(), 0.5, samples, seed, workers, |s, _| {
        let (x, y) = cut.restrict(s);
        let exact = x.len().max(y.len()) <= EXACT_FOREST_LIMIT;
        match is_k_good_cut(g, &Cut { x, y }, k, exact) {
            Ok(r) => (r.holds, !r.definite),
            Err(_) => (false, true),
        }
    });
    Ok(GoodCutReport {
        estimate: EstimateReport::from_tally(hits, undecided, samples, seed, 0.5),
        k,
        lower_bound: undecided > 0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build_competitor, build_extremal, build_knn};
    use crate::counting::p_exact_extremal;
    use num_traits::ToPrimitive;

    #[test]
    fn wilson_contains_estimate() {
        for (h, n) in [(0, 10), (10, 10), (3, 7), (500, 1000)] {
            let (lo, hi) = wilson_interval(h, n, WILSON_Z99);
            let p = h as f64 / n as f64;
            assert!(lo <= p && p <= hi && lo >= 0.0 && hi <= 1.0);
        }
        // Reference value for 5/20 at z = 1.96.
        let (lo, hi) = wilson_interval(5, 20, 1.959964);
        assert!((lo - 0.1118).abs() < 1e-4 && (hi - 0.4687).abs() < 1e-4);
    }

    #[test]
    fn degenerate_retention() {
        let g = Graph::cycle(5);
        let r = estimate_h(&g, 0.0, 100, 1, Decider::Auto, 1).unwrap();
        assert_eq!(r.hits, 0);
        let r = estimate_h(&g, 1.0, 100, 1, Decider::Auto, 1).unwrap();
        assert_eq!(r.p_hat, 1.0);
        assert!(estimate_h(&g, 1.5, 100, 1, Decider::Auto, 1).is_err());
    }

    #[test]
    fn octahedron_calibration() {
        let eg = build_extremal(3, &[4]).unwrap();
        let r = estimate_h(&eg.graph, 0.5, 20_000, 42, Decider::Auto, 2).unwrap();
        let truth = 15.0 / 32.0;
        assert!((r.p_hat - truth).abs() <= 4.0 * r.std_error);
        assert_eq!(r.undecided, 0);
        let again = estimate_h(&eg.graph, 0.5, 20_000, 42, Decider::Auto, 1).unwrap();
        assert_eq!(r, again);
    }

    #[test]
    fn gn_and_exact_agree() {
        let eg = build_extremal(4, &[5]).unwrap();
        let gn = estimate_h(&eg.graph, 0.5, 30_000, 5, Decider::Gn(&eg), 0).unwrap();
        let ex = estimate_h(&eg.graph, 0.5, 30_000, 5, Decider::Exact, 0).unwrap();
        // Same seed, same subsets: the deciders must agree sample by sample.
        assert_eq!(gn.hits, ex.hits);
        let truth = p_exact_extremal(4, &[5]).unwrap().to_f64().unwrap();
        assert!((gn.p_hat - truth).abs() <= 4.0 * gn.std_error);
    }

    #[test]
    fn single_edge_distribution() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let r = edge_concentration_experiment(&g, 40_000, 3, 1).unwrap();
        assert!(r.within_3se);
        assert!((r.variance - 3.0 / 16.0).abs() < 0.01);
        assert_eq!(r.exact_variance, 3.0 / 16.0);
        assert!(edge_concentration_experiment(&Graph::new(3), 10, 1, 1).is_err());
    }

    #[test]
    fn competitor_concentration() {
        let c = build_competitor(5).unwrap();
        let r = edge_concentration_experiment(&c.graph, 10_000, 1, 0).unwrap();
        assert!(r.within_3se);
        assert!((r.variance / r.exact_variance - 1.0).abs() < 0.1);
        assert!(r.deviation_fraction <= r.azuma_bound);
    }

    #[test]
    fn good_cut_on_knn() {
        let n = 8;
        let g = build_knn(n).unwrap();
        let cut = Cut::from_side(VertexSet::range(2 * n, 0..n));
        let r = good_cut_probability(&g, &cut, 0, 20_000, 7, 0).unwrap();
        // Only balanced samples are good: C(16, 8)/4^8.
        let truth = 12870.0 / 65536.0;
        assert!((r.estimate.p_hat - truth).abs() <= 4.0 * r.estimate.std_error);
        assert!(!r.lower_bound);
        let none = good_cut_probability(&g, &cut, 2 * n, 500, 7, 0).unwrap();
        assert_eq!(none.estimate.hits, 0);
    }

    #[test]
    fn good_cut_on_competitor() {
        let c = build_competitor(4).unwrap();
        let cut = Cut::from_side(c.part_left.clone());
        let r = good_cut_probability(&c.graph, &cut, 0, 10_000, 1, 0).unwrap();
        assert!(r.estimate.ci_high >= 0.5);
    }
}
