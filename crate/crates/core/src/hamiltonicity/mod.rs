//! Hamiltonicity: exact decision, a rotation–extension search, constructive
//! path and cycle builders with certificates, and the closed-form criterion
//! for the extremal family.

mod builders;
mod exact;
mod extremal;
mod paths;
mod rotation;
mod stability;

pub use builders::{ham_cycle_near_bipartite, ham_cycle_two_cliques, NearBipartiteParams, TwoCliquesParams};
pub use exact::{is_hamiltonian_exact, EXACT_LIMIT};
pub(crate) use exact::cyclic_subsets_anchored;
pub use extremal::gn_criterion;
pub use paths::{ham_path_bipartite, ham_path_dirac, ham_path_dirac_in};
pub use rotation::{decide, default_budget, find_ham_cycle_rotation, DEFAULT_RESTARTS};
pub(crate) use stability::subsets_of_size;
pub use stability::{dirac_stability_witness, StabilityWitness, STABILITY_LIMIT};

use serde::{Deserialize, Serialize};

use crate::error::{precondition, Result};
use crate::graph::{Graph, VertexSet};

/// A cyclic vertex order; consecutive vertices (and last, first) are
/// adjacent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HamCycleCert {
    pub order: Vec<usize>,
}

impl HamCycleCert {
    /// Checks that `order` is a Hamilton cycle of `g[scope]`.
    pub fn validate(&self, g: &Graph, scope: &VertexSet) -> Result<()> {
        let k = self.order.len();
        if k < 3 {
            return precondition("a cycle needs at least 3 vertices");
        }
        check_order(g, scope, &self.order)?;
        let (first, last) = (self.order[0], self.order[k - 1]);
        if !g.has_edge(last, first) {
            return precondition(format!("closing pair ({last},{first}) is not an edge"));
        }
        Ok(())
    }
}

/// A Hamilton path listed from one end to the other.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HamPathCert {
    pub order: Vec<usize>,
}

impl HamPathCert {
    /// Checks that `order` is a Hamilton path of `g[scope]` from `a` to `b`.
    pub fn validate(&self, g: &Graph, scope: &VertexSet, a: usize, b: usize) -> Result<()> {
        if self.order.first() != Some(&a) || self.order.last() != Some(&b) {
            return precondition(format!("path does not run from {a} to {b}"));
        }
        check_order(g, scope, &self.order)
    }
}

fn check_order(g: &Graph, scope: &VertexSet, order: &[usize]) -> Result<()> {
    let mut seen = VertexSet::empty(g.vertex_count());
    for &v in order {
        if v >= g.vertex_count() || !scope.contains(v) || seen.contains(v) {
            return precondition(format!("vertex {v} repeated or outside the scope"));
        }
        seen.insert(v);
    }
    if seen.len() != scope.len() {
        return precondition(format!("order covers {} of {} vertices", seen.len(), scope.len()));
    }
    for w in order.windows(2) {
        if !g.has_edge(w[0], w[1]) {
            return precondition(format!("consecutive pair ({},{}) is not an edge", w[0], w[1]));
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "status")]
pub enum HamStatus {
    Hamiltonian { cert: HamCycleCert },
    NotHamiltonian,
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    ExactDp,
    Rotation,
    Trivial,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HamDecision {
    pub status: HamStatus,
    pub method: Method,
    /// DP states visited or rotation steps taken.
    pub work: u64,
}

impl HamDecision {
    pub fn is_hamiltonian(&self) -> bool {
        matches!(self.status, HamStatus::Hamiltonian { .. })
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self.status, HamStatus::Unknown)
    }

    pub fn cert(&self) -> Option<&HamCycleCert> {
        match &self.status {
            HamStatus::Hamiltonian { cert } => Some(cert),
            _ => None,
        }
    }
}
