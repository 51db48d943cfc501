//! Structural analysis of dense graphs: the bi-dense / two-cliques /
//! near-bipartite trichotomy, cover products across balanced cuts and
//! crossing matchings.

mod bidense;
mod random;

pub use bidense::{check_bidense, BidenseMode, BidenseReport, BIDENSE_EXACT_LIMIT};
pub use random::random_regular_graph;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{precondition, Error, Result};
use crate::graph::cover::min_vertex_cover_exact;
use crate::graph::matching::konig_min_cover;
use crate::graph::{Cut, Graph, Matching, VertexSet};

/// Threshold constants for the trichotomy. Only `eps` and `gamma` enter the
/// classification; the rest are carried for experiments.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnalysisParams {
    pub eps: f64,
    pub gamma: f64,
    pub delta: f64,
    pub eta: f64,
    pub theta: f64,
    pub lambda: f64,
}

impl Default for AnalysisParams {
    fn default() -> Self {
        AnalysisParams {
            eps: 1.0 / 320.0,
            gamma: 0.1,
            delta: 1e-3,
            eta: 1e-2,
            theta: 0.05,
            lambda: 1e-3,
        }
    }
}

impl AnalysisParams {
    pub fn validate(&self) -> Result<()> {
        // 1e-12 absorbs the rounding in 32·(1/320).
        if !(self.eps > 0.0 && self.eps <= 1.0 / 320.0) {
            return precondition("eps must lie in (0, 1/320]");
        }
        if self.gamma > 0.1 || self.gamma < 32.0 * self.eps - 1e-12 {
            return precondition("gamma must satisfy 32·eps <= gamma <= 1/10");
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Confidence {
    Exact,
    Sampled,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "case")]
pub enum Case {
    BiDense {
        worst_a: VertexSet,
        worst_b: VertexSet,
        edges: usize,
        threshold: f64,
        holds: bool,
    },
    TwoCliques {
        a: VertexSet,
        crossing_edges: usize,
        min_degree_a: usize,
        min_degree_rest: usize,
    },
    NearBipartite {
        a: VertexSet,
        crossing_edges: usize,
        crossing_min_degree: usize,
        max_degree_inside: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Classification {
    #[serde(flatten)]
    pub case: Case,
    pub confidence: Confidence,
}

/// Sample budget for the bi-dense fallback of [`classify`].
pub const CLASSIFY_SAMPLES: usize = 512;

fn size_ok(m: usize, a: usize, eps: f64) -> bool {
    2 * a >= m && a as f64 <= (0.5 + 16.0 * eps) * m as f64 + 1e-9
}

/// The two-cliques inequalities for the candidate `a`.
pub fn two_cliques_witness(g: &Graph, a: &VertexSet, params: &AnalysisParams) -> Option<Case> {
    let m = g.vertex_count();
    let mf = m as f64;
    if !size_ok(m, a.len(), params.eps) {
        return None;
    }
    let rest = a.complement();
    let crossing = g.edges_between(a, &rest);
    let (da, dr) = (g.min_degree_in(a), g.min_degree_in(&rest));
    let ok = crossing as f64 <= 6.0 * params.eps * mf * mf && 5 * da >= m && 5 * dr >= m;
    ok.then(|| Case::TwoCliques {
        a: a.clone(),
        crossing_edges: crossing,
        min_degree_a: da,
        min_degree_rest: dr,
    })
}

/// The near-bipartite inequalities for the candidate `a`.
pub fn near_bipartite_witness(g: &Graph, a: &VertexSet, params: &AnalysisParams) -> Option<Case> {
    let m = g.vertex_count();
    let mf = m as f64;
    if !size_ok(m, a.len(), params.eps) {
        return None;
    }
    let rest = a.complement();
    let crossing = g.edges_between(a, &rest);
    let cross_min = (0..m)
        .map(|v| if a.contains(v) { g.degree_in(v, &rest) } else { g.degree_in(v, a) })
        .min()
        .unwrap_or(0);
    let inside = g.max_degree_in(a);
    let ok = crossing as f64 >= (0.25 - 14.0 * params.eps) * mf * mf
        && cross_min as f64 >= params.gamma * mf / 2.0
        && (a.len() == m.div_ceil(2) || inside as f64 <= params.gamma * mf);
    ok.then(|| Case::NearBipartite {
        a: a.clone(),
        crossing_edges: crossing,
        crossing_min_degree: cross_min,
        max_degree_inside: inside,
    })
}

/// Grows a set of size `target` from `seed`, each time adding the outside
/// vertex with the most (`dense`) or fewest neighbours inside.
fn grow(g: &Graph, seed: usize, target: usize, dense: bool) -> VertexSet {
    let m = g.vertex_count();
    let mut a = VertexSet::empty(m);
    let mut cnt = vec![0usize; m];
    let add = |a: &mut VertexSet, cnt: &mut Vec<usize>, v: usize| {
        a.insert(v);
        for w in g.neighbors(v) {
            cnt[w] += 1;
        }
    };
    add(&mut a, &mut cnt, seed);
    while a.len() < target {
        let pick = (0..m)
            .filter(|&v| !a.contains(v))
            .min_by_key(|&v| if dense { (m - cnt[v], v) } else { (cnt[v], v) })
            .unwrap();
        add(&mut a, &mut cnt, pick);
    }
    a
}

/// Pair swaps that lower (`dense`) or raise the number of crossing edges.
fn improve(g: &Graph, a: &mut VertexSet, dense: bool, rounds: usize) {
    let m = g.vertex_count();
    let mut din: Vec<i64> = (0..m).map(|v| g.degree_in(v, a) as i64).collect();
    for _ in 0..rounds {
        let mut best: Option<(i64, usize, usize)> = None;
        for u in a.iter() {
            // Crossing change from moving u out: d(u,A) - d(u,Ā).
            let du = 2 * din[u] - g.degree(u) as i64;
            for w in (0..m).filter(|&w| !a.contains(w)) {
                let dw = g.degree(w) as i64 - 2 * din[w];
                let delta = du + dw + if g.has_edge(u, w) { 2 } else { 0 };
                let gain = if dense { -delta } else { delta };
                if gain > 0 && best.is_none_or(|b| gain > b.0) {
                    best = Some((gain, u, w));
                }
            }
        }
        let Some((_, u, w)) = best else { break };
        a.remove(u);
        a.insert(w);
        for x in g.neighbors(u) {
            din[x] -= 1;
        }
        for x in g.neighbors(w) {
            din[x] += 1;
        }
    }
}

fn candidates(g: &Graph, dense: bool, seed: u64) -> Vec<VertexSet> {
    let m = g.vertex_count();
    let target = m.div_ceil(2);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seeds = vec![0, m - 1];
    seeds.extend((0..4).map(|_| rng.random_range(0..m)));
    seeds
        .into_iter()
        .map(|s| {
            let mut a = grow(g, s, target, dense);
            improve(g, &mut a, dense, 20);
            // For odd m the complement is smaller, so only `a` is a candidate.
            a
        })
        .flat_map(|a| {
            let c = a.complement();
            if c.len() == a.len() {
                vec![a, c]
            } else {
                vec![a]
            }
        })
        .collect()
}

/// Places `g` in one of the three cases and returns a verified witness.
/// Exhaustive for `m ≤ 14`; above that the two structured cases are found
/// by greedy growth plus swap search, and bi-density by sampling.
pub fn classify(g: &Graph, params: &AnalysisParams) -> Result<Classification> {
    params.validate()?;
    let m = g.vertex_count();
    if m == 0 {
        return precondition("empty graph");
    }
    if 2 * g.min_degree() < m {
        return precondition(format!("minimum degree {} is below m/2", g.min_degree()));
    }
    let exact = m <= BIDENSE_EXACT_LIMIT;
    if exact {
        let sizes: Vec<usize> = (m.div_ceil(2)..=m).filter(|&s| size_ok(m, s, params.eps)).collect();
        let all = |f: &dyn Fn(&VertexSet) -> Option<Case>| {
            sizes.iter().find_map(|&s| {
                crate::hamiltonicity::subsets_of_size(m, s).find_map(|mask| f(&VertexSet::from_mask(m, mask as u64)))
            })
        };
        if let Some(case) = all(&|a| two_cliques_witness(g, a, params)).or_else(|| all(&|a| near_bipartite_witness(g, a, params))) {
            return Ok(Classification {
                case,
                confidence: Confidence::Exact,
            });
        }
    } else {
        for a in candidates(g, true, 0) {
            if let Some(case) = two_cliques_witness(g, &a, params) {
                return Ok(Classification {
                    case,
                    confidence: Confidence::Sampled,
                });
            }
        }
        for a in candidates(g, false, 1) {
            if let Some(case) = near_bipartite_witness(g, &a, params) {
                return Ok(Classification {
                    case,
                    confidence: Confidence::Sampled,
                });
            }
        }
    }
    let mode = if exact {
        BidenseMode::Exact
    } else {
        BidenseMode::Sampled {
            samples: CLASSIFY_SAMPLES,
            seed: 0,
            workers: 1,
        }
    };
    let r = check_bidense(g, params.eps, mode)?;
    Ok(Classification {
        case: Case::BiDense {
            worst_a: r.a,
            worst_b: r.b,
            edges: r.edges,
            threshold: r.threshold,
            holds: r.holds,
        },
        confidence: r.confidence,
    })
}

/// Minimum covers on both sides of a balanced cut of an `(n+1)`-regular
/// graph on `2n` vertices, and whether `(a + 1)(b + 1) ≥ n + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverProduct {
    pub a: usize,
    pub b: usize,
    pub product: usize,
    pub bound: usize,
    pub holds: bool,
}

fn regular_half(g: &Graph) -> Result<usize> {
    let m = g.vertex_count();
    if m < 2 || m % 2 == 1 || !g.is_regular(m / 2 + 1) {
        return precondition("graph must be (n+1)-regular on 2n vertices");
    }
    Ok(m / 2)
}

pub fn balanced_cut_cover_product(g: &Graph, cut: &Cut) -> Result<CoverProduct> {
    let n = regular_half(g)?;
    if cut.x.universe() != g.vertex_count() || !cut.is_balanced() {
        return precondition("cut must be balanced");
    }
    let a = min_vertex_cover_exact(g, &cut.x)?.len();
    let b = min_vertex_cover_exact(g, &cut.y)?.len();
    let product = (a + 1) * (b + 1);
    Ok(CoverProduct {
        a,
        b,
        product,
        bound: n + 1,
        holds: product > n,
    })
}

/// Maximum matching of the crossing graph, checked against `⌈√n/100⌉`.
pub fn cross_matching_floor(g: &Graph, cut: &Cut) -> Result<Matching> {
    let n = regular_half(g)?;
    let floor = (n as f64).sqrt() / 100.0;
    if cut.x.len() as f64 <= floor || cut.y.len() as f64 <= floor {
        return precondition("both sides must exceed √n/100 vertices");
    }
    let (mm, _) = konig_min_cover(&g.bipartite_restriction(&cut.x, &cut.y), &cut.x, &cut.y)?;
    let need = floor.ceil() as usize;
    if mm.len() < need {
        return Err(Error::Construction(format!(
            "crossing matching of size {} is below {need}",
            mm.len()
        )));
    }
    Ok(mm)
}
