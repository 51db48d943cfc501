//! Exhaustive witnesses for the stability dichotomy of near-Dirac graphs:
//! a Hamilton cycle, a large independent set, or a sparse pair of large
//! disjoint sets.

use serde::{Deserialize, Serialize};

use super::{is_hamiltonian_exact, HamCycleCert};
use crate::error::{precondition, Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest graph accepted by [`dirac_stability_witness`].
pub const STABILITY_LIMIT: usize = 18;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum StabilityWitness {
    Hamiltonian { cert: HamCycleCert },
    IndependentSet { a: VertexSet },
    SparsePair { a: VertexSet, b: VertexSet, edges: usize },
}

/// `⌈(1/2 − ε)m⌉`, with a little slack against rounding in `ε`.
fn witness_size(m: usize, eps: f64) -> usize {
    ((0.5 - eps) * m as f64 - 1e-9).ceil().max(0.0) as usize
}

pub(crate) fn subsets_of_size(m: usize, s: usize) -> impl Iterator<Item = u32> {
    // Gosper's hack over m-bit masks.
    let mut cur = if s == 0 { 0u32 } else { (1u32 << s) - 1 };
    let limit = 1u32 << m;
    let mut done = s > m;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let out = cur;
        if cur == 0 {
            done = true;
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            cur = (((r ^ cur) >> 2) / c) | r;
            if cur >= limit {
                done = true;
            }
        }
        Some(out)
    })
}

pub fn dirac_stability_witness(g: &Graph, eps: f64) -> Result<StabilityWitness> {
    let m = g.vertex_count();
    if m > STABILITY_LIMIT {
        return Err(Error::Budget {
            what: "stability witness search",
            size: m,
            limit: STABILITY_LIMIT,
        });
    }
    if !(eps > 0.0 && eps < 0.5) {
        return precondition("epsilon must lie in (0, 1/2)");
    }
    let delta = g.min_degree();
    if (delta as f64) < (0.5 - eps) * m as f64 - 1e-9 {
        return precondition(format!("minimum degree {delta} is below (1/2 - eps)m"));
    }
    let all = g.all_vertices();
    if let Some(cert) = is_hamiltonian_exact(g, &all)?.cert() {
        return Ok(StabilityWitness::Hamiltonian { cert: cert.clone() });
    }
    let s = witness_size(m, eps);
    for mask in subsets_of_size(m, s) {
        let a = VertexSet::from_mask(m, mask as u64);
        if g.edges_within(&a) == 0 {
            return Ok(StabilityWitness::IndependentSet { a });
        }
    }
    if 2 * s <= m {
        for mask in subsets_of_size(m, s) {
            let a = VertexSet::from_mask(m, mask as u64);
            // For fixed A the best B takes the s outside vertices with the
            // fewest neighbours in A.
            let mut outside: Vec<(usize, usize)> = a.complement().iter().map(|v| (g.degree_in(v, &a), v)).collect();
            outside.sort_unstable();
            let edges: usize = outside[..s].iter().map(|&(d, _)| d).sum();
            if edges <= m {
                let b = VertexSet::from_iter(m, outside[..s].iter().map(|&(_, v)| v));
                return Ok(StabilityWitness::SparsePair { a, b, edges });
            }
        }
    }
    Err(Error::Construction(
        "no stability witness: the graph is outside the theorem's regime".into(),
    ))
}
