//! Cyclic-subset counting: exhaustive counts for small graphs, closed
//! forms for the extremal family and `K_{n,n}`, and Monte Carlo estimates
//! of the probability that a random induced subgraph is Hamiltonian.

mod extremal;
mod sampling;

pub use extremal::{cycle_run_profile, p_exact_extremal, p_exact_knn, P_EXACT_MAX_N};
pub use sampling::{
    edge_concentration_experiment, estimate_h, good_cut_probability, wilson_interval, Decider, EdgeConcentration,
    EstimateReport, GoodCutReport, BLOCK_SAMPLES, WILSON_Z99,
};

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hamiltonicity::cyclic_subsets_anchored;
use crate::par;

/// Default vertex limit for [`cyc_count_exact`].
pub const COUNT_LIMIT: usize = 20;
/// Largest graph [`cyc_count_with`] accepts even when asked to.
pub const COUNT_HARD_LIMIT: usize = 26;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CycReport {
    pub vertices: usize,
    pub total_subsets: u64,
    pub cyclic_count: u64,
    /// `cyclic_count / total_subsets` in lowest terms.
    pub p_exact: String,
    pub p_float: f64,
    /// `per_size[s]` counts cyclic subsets with `s` vertices.
    pub per_size: Vec<u64>,
}

impl CycReport {
    pub fn p(&self) -> BigRational {
        BigRational::new(BigInt::from(self.cyclic_count), BigInt::from(self.total_subsets))
    }

    /// The histogram as `size,count` CSV lines with a header.
    pub fn histogram_csv(&self) -> String {
        let mut out = String::from("size,count\n");
        for (s, c) in self.per_size.iter().enumerate() {
            out.push_str(&format!("{s},{c}\n"));
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CountOptions {
    pub limit: usize,
    pub workers: usize,
}

impl Default for CountOptions {
    fn default() -> Self {
        CountOptions {
            limit: COUNT_LIMIT,
            workers: par::AUTO,
        }
    }
}

/// Exact number of vertex subsets inducing a Hamiltonian subgraph.
pub fn cyc_count_exact(g: &Graph) -> Result<CycReport> {
    cyc_count_with(g, CountOptions::default())
}

/// [`cyc_count_exact`] with an explicit size limit and worker count.
///
/// Every subset is assigned to its least vertex; one reachability table
/// per least vertex decides all of its subsets. Tables are independent, so
/// they are the parallel work units, and the histograms are summed.
pub fn cyc_count_with(g: &Graph, opts: CountOptions) -> Result<CycReport> {
    let m = g.vertex_count();
    let limit = opts.limit.min(COUNT_HARD_LIMIT);
    if m > limit {
        return Err(Error::Budget {
            what: "exact cyclic-subset count",
            size: m,
            limit,
        });
    }
    let map: Vec<usize> = (0..m).collect();
    let rows: Vec<u32> = g.local_rows(&map).into_iter().map(|r| r as u32).collect();
    let parts = par::map_indexed(m, opts.workers, |a| cyclic_subsets_anchored(&rows, a));
    let mut per_size = vec![0u64; m + 1];
    for h in parts {
        for (s, c) in h.into_iter().enumerate() {
            per_size[s] += c;
        }
    }
    let cyclic_count: u64 = per_size.iter().sum();
    let total_subsets = 1u64 << m;
    let p = BigRational::new(BigInt::from(cyclic_count), BigInt::from(total_subsets));
    Ok(CycReport {
        vertices: m,
        total_subsets,
        cyclic_count,
        p_exact: p.to_string(),
        p_float: cyclic_count as f64 / total_subsets as f64,
        per_size,
    })
}
