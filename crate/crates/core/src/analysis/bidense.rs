//! Half-set density: the minimum of `e(A, B)` over half-sets `A`, `B`.
//!
//! `e(A, B)` only grows when either set grows, so the minimum is attained
//! with `|A| = |B| = ⌊m/2⌋`. For a fixed `A` the best `B` takes the `⌊m/2⌋`
//! vertices with the fewest neighbours in `A`, so only `A` is searched.

use rand::{seq::index::sample, Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::Confidence;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::hamiltonicity::subsets_of_size;
use crate::par;

/// Largest graph for exact half-set enumeration.
pub const BIDENSE_EXACT_LIMIT: usize = 14;

const BLOCK: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "mode")]
pub enum BidenseMode {
    Exact,
    Sampled { samples: usize, seed: u64, workers: usize },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BidenseReport {
    pub holds: bool,
    pub a: VertexSet,
    pub b: VertexSet,
    pub edges: usize,
    pub threshold: f64,
    pub confidence: Confidence,
}

/// `d(v, A)` for every vertex.
fn degrees_into(g: &Graph, a: &VertexSet) -> Vec<usize> {
    (0..g.vertex_count()).map(|v| g.degree_in(v, a)).collect()
}

/// Smallest `k` entries of `deg`, summed, with the vertices achieving it.
fn best_partner(deg: &[usize], k: usize) -> (usize, Vec<usize>) {
    let mut idx: Vec<usize> = (0..deg.len()).collect();
    idx.sort_by_key(|&v| (deg[v], v));
    idx.truncate(k);
    (idx.iter().map(|&v| deg[v]).sum(), idx)
}

fn best_partner_sum(deg: &[usize], k: usize, scratch: &mut Vec<usize>) -> usize {
    scratch.clear();
    scratch.extend_from_slice(deg);
    if k == 0 {
        return 0;
    }
    scratch.select_nth_unstable(k - 1);
    scratch[..k].iter().sum()
}

/// Random swaps that lower the objective, stopping after a round of `m`
/// proposals brings no improvement.
fn descend(g: &Graph, a: &mut VertexSet, k: usize, rng: &mut ChaCha8Rng) -> usize {
    let m = g.vertex_count();
    let mut deg = degrees_into(g, a);
    let mut scratch = Vec::with_capacity(m);
    let mut best = best_partner_sum(&deg, k, &mut scratch);
    if k == 0 || k == m {
        return best;
    }
    for _ in 0..50 {
        let mut improved = false;
        for _ in 0..m {
            let inside = a.to_vec();
            let outside = a.complement().to_vec();
            let u = inside[rng.random_range(0..inside.len())];
            let w = outside[rng.random_range(0..outside.len())];
            for x in g.neighbors(u) {
                deg[x] -= 1;
            }
            for x in g.neighbors(w) {
                deg[x] += 1;
            }
            let val = best_partner_sum(&deg, k, &mut scratch);
            if val < best {
                best = val;
                a.remove(u);
                a.insert(w);
                improved = true;
            } else {
                for x in g.neighbors(u) {
                    deg[x] += 1;
                }
                for x in g.neighbors(w) {
                    deg[x] -= 1;
                }
            }
        }
        if !improved {
            break;
        }
    }
    best
}

/// Checks `e(A, B) ≥ eps·m²` for all half-sets `A`, `B` and reports the
/// smallest pair found.
pub fn check_bidense(g: &Graph, eps: f64, mode: BidenseMode) -> Result<BidenseReport> {
    let m = g.vertex_count();
    let k = m / 2;
    let threshold = eps * (m * m) as f64;
    let (a, confidence) = match mode {
        BidenseMode::Exact => {
            if m > BIDENSE_EXACT_LIMIT {
                return Err(Error::Budget {
                    what: "exact half-set enumeration",
                    size: m,
                    limit: BIDENSE_EXACT_LIMIT,
                });
            }
            let mut scratch = Vec::new();
            let mut best = (usize::MAX, 0u32);
            for mask in subsets_of_size(m, k) {
                let a = VertexSet::from_mask(m, mask as u64);
                let v = best_partner_sum(&degrees_into(g, &a), k, &mut scratch);
                if v < best.0 {
                    best = (v, mask);
                }
            }
            (VertexSet::from_mask(m, best.1 as u64), Confidence::Exact)
        }
        BidenseMode::Sampled { samples, seed, workers } => {
            let blocks = samples.max(1).div_ceil(BLOCK);
            let per_block = par::map_indexed(blocks, workers, |bi| {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                rng.set_stream(bi as u64);
                let count = BLOCK.min(samples.max(1) - bi * BLOCK);
                let mut scratch = Vec::new();
                let mut best: Option<(usize, VertexSet)> = None;
                for _ in 0..count {
                    let a = VertexSet::from_iter(m, sample(&mut rng, m, k).into_iter());
                    let v = best_partner_sum(&degrees_into(g, &a), k, &mut scratch);
                    if best.as_ref().is_none_or(|b| v < b.0) {
                        best = Some((v, a));
                    }
                }
                best.unwrap()
            });
            let mut best = per_block
                .into_iter()
                .reduce(|x, y| if y.0 < x.0 { y } else { x })
                .unwrap()
                .1;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(u64::MAX);
            descend(g, &mut best, k, &mut rng);
            (best, Confidence::Sampled)
        }
    };
    let (edges, bv) = best_partner(&degrees_into(g, &a), k);
    let b = VertexSet::from_iter(m, bv);
    debug_assert_eq!(g.edges_between(&a, &b), edges);
    Ok(BidenseReport {
        holds: edges as f64 >= threshold,
        a,
        b,
        edges,
        threshold,
        confidence,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::RngCore;

    fn sampled(seed: u64) -> BidenseMode {
        BidenseMode::Sampled {
            samples: 256,
            seed,
            workers: 1,
        }
    }

    /// Minimum over all pairs of half-sets of both sizes.
    fn brute(g: &Graph) -> usize {
        let m = g.vertex_count();
        let mut best = usize::MAX;
        for ka in [m / 2, m.div_ceil(2)] {
            for kb in [m / 2, m.div_ceil(2)] {
                for a in subsets_of_size(m, ka) {
                    for b in subsets_of_size(m, kb) {
                        let (a, b) = (VertexSet::from_mask(m, a as u64), VertexSet::from_mask(m, b as u64));
                        best = best.min(g.edges_between(&a, &b));
                    }
                }
            }
        }
        best
    }

    #[test]
    fn examples() {
        let k8 = Graph::complete(8);
        let r = check_bidense(&k8, 0.1, BidenseMode::Exact).unwrap();
        assert!(r.holds);
        assert_eq!(r.edges, brute(&k8));

        let two = Graph::complete(4).disjoint_union(&Graph::complete(4));
        let r = check_bidense(&two, 0.001, BidenseMode::Exact).unwrap();
        assert!(!r.holds);
        assert_eq!(r.edges, 0);
        assert!(!check_bidense(&Graph::new(6), 0.01, sampled(1)).unwrap().holds);
        assert!(check_bidense(&Graph::complete(20), 1.0 / 320.0, sampled(1)).unwrap().holds);
        assert!(check_bidense(&Graph::complete(15), 0.1, BidenseMode::Exact).is_err());
    }

    #[test]
    fn exact_matches_pair_enumeration() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let m = 4 + (rng.next_u32() % 5) as usize;
            let mut g = Graph::new(m);
            for u in 0..m {
                for v in u + 1..m {
                    if rng.random_bool(0.5) {
                        g.add_edge(u, v);
                    }
                }
            }
            assert_eq!(check_bidense(&g, 0.0, BidenseMode::Exact).unwrap().edges, brute(&g));
        }
    }

    #[test]
    fn sampled_agrees_with_exact_on_small_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..30 {
            let m = 6 + (rng.next_u32() % 7) as usize;
            let mut g = Graph::new(m);
            for u in 0..m {
                for v in u + 1..m {
                    if rng.random_bool(0.6) {
                        g.add_edge(u, v);
                    }
                }
            }
            let eps = 0.05;
            let e = check_bidense(&g, eps, BidenseMode::Exact).unwrap();
            let s = check_bidense(&g, eps, sampled(rng.next_u64())).unwrap();
            assert_eq!(e.holds, s.holds);
            assert!(s.edges >= e.edges);
        }
    }

    #[test]
    fn sampled_is_worker_independent() {
        let g = crate::analysis::random_regular_graph(40, 21, 2).unwrap();
        let run = |w| {
            check_bidense(
                &g,
                0.01,
                BidenseMode::Sampled {
                    samples: 500,
                    seed: 9,
                    workers: w,
                },
            )
            .unwrap()
        };
        assert_eq!(run(1), run(4));
    }
}
