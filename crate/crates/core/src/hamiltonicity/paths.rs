//! Hamilton paths between prescribed ends in dense graphs and in dense
//! balanced bipartite graphs.

use super::{find_ham_cycle_rotation, is_hamiltonian_exact, rotation::default_budget, HamPathCert, EXACT_LIMIT};
use crate::error::{precondition, Error, Result};
use crate::graph::{Graph, VertexSet};

/// Hamilton cycle of `g[scope]`: rotation search first, exact DP as the
/// fallback on small scopes.
fn cycle_of(g: &Graph, scope: &VertexSet, seed: u64) -> Result<Vec<usize>> {
    let d = find_ham_cycle_rotation(g, scope, default_budget(scope.len()), seed);
    if let Some(c) = d.cert() {
        return Ok(c.order.clone());
    }
    if scope.len() <= EXACT_LIMIT {
        if let Some(c) = is_hamiltonian_exact(g, scope)?.cert() {
            return Ok(c.order.clone());
        }
    }
    Err(Error::Construction(format!(
        "no Hamilton cycle found on a remainder of {} vertices",
        scope.len()
    )))
}

/// Hamilton path from `a` to `b` in a graph with `δ ≥ m/2 + 1`.
pub fn ham_path_dirac(g: &Graph, a: usize, b: usize) -> Result<HamPathCert> {
    ham_path_dirac_in(g, &g.all_vertices(), a, b)
}

/// [`ham_path_dirac`] on the induced subgraph `g[scope]`.
///
/// Deletes `a` and `b`, takes a Hamilton cycle `c` of the rest and finds
/// `i` with `a ~ c[i]` and `b ~ c[i+1]`; the path is
/// `a, c[i], c[i-1], ..., c[i+1], b`.
pub fn ham_path_dirac_in(g: &Graph, scope: &VertexSet, a: usize, b: usize) -> Result<HamPathCert> {
    if a == b {
        return precondition("path ends must differ");
    }
    if !scope.contains(a) || !scope.contains(b) {
        return precondition("path ends must lie in the scope");
    }
    let m = scope.len();
    let delta = g.min_degree_in(scope);
    if 2 * delta < m + 2 {
        return precondition(format!("minimum degree {delta} is below m/2 + 1 = {}", m as f64 / 2.0 + 1.0));
    }
    let mut rest = scope.clone();
    rest.remove(a);
    rest.remove(b);
    let order = match rest.len() {
        0 => vec![a, b],
        1 => vec![a, rest.first().unwrap(), b],
        2 => {
            let (c, d) = (rest.first().unwrap(), rest.iter().nth(1).unwrap());
            if g.has_edge(a, c) && g.has_edge(d, b) {
                vec![a, c, d, b]
            } else {
                vec![a, d, c, b]
            }
        }
        r => {
            let c = cycle_of(g, &rest, (a * 31 + b) as u64)?;
            let i = (0..r)
                .find(|&i| g.has_edge(a, c[i]) && g.has_edge(b, c[(i + 1) % r]))
                .ok_or_else(|| Error::Construction("no cycle edge joins N(a) to N(b)".into()))?;
            let mut order = vec![a];
            order.extend((0..r).map(|s| c[(i + r - s) % r]));
            order.push(b);
            order
        }
    };
    let cert = HamPathCert { order };
    cert.validate(g, scope, a, b)
        .map_err(|e| Error::Construction(format!("path certificate rejected: {e}")))?;
    Ok(cert)
}

/// Hamilton path from `a ∈ left` to `b ∈ right` using only edges between
/// the sides. Requires `|left| = |right|` and every vertex to have more
/// than `m/4` neighbours on the other side.
///
/// Deletes `a` and `b`, takes a Hamilton cycle `c` of the balanced rest and
/// finds `v ∈ N(a)` whose successor `v⁺` lies in `N(b)`; the path is `a`,
/// then `v` and backwards around `c` to `v⁺`, then `b`.
pub fn ham_path_bipartite(
    g: &Graph,
    left: &VertexSet,
    right: &VertexSet,
    a: usize,
    b: usize,
) -> Result<HamPathCert> {
    if !left.is_disjoint(right) {
        return precondition("sides overlap");
    }
    if left.contains(b) || right.contains(a) || !left.contains(a) || !right.contains(b) {
        return precondition("a must lie in the left side and b in the right side");
    }
    if left.len() != right.len() {
        return precondition("sides have different sizes");
    }
    let h = left.len();
    let m = 2 * h;
    let bip = g.bipartite_restriction(left, right);
    let scope = left.union(right);
    let delta = bip.min_degree_in(&scope);
    if h >= 3 && 4 * delta < m + 4 {
        return precondition(format!("bipartite minimum degree {delta} is below m/4 + 1"));
    }
    let mut rest = scope.clone();
    rest.remove(a);
    rest.remove(b);
    let order = match h {
        1 => vec![a, b],
        2 => {
            let c = left.iter().find(|&v| v != a).unwrap();
            let d = right.iter().find(|&v| v != b).unwrap();
            vec![a, d, c, b]
        }
        _ => {
            let c = cycle_of(&bip, &rest, (a * 31 + b) as u64)?;
            let r = c.len();
            let i = (0..r)
                .find(|&i| bip.has_edge(a, c[i]) && bip.has_edge(b, c[(i + 1) % r]))
                .ok_or_else(|| Error::Construction("successor sets of N(a) and N(b) are disjoint".into()))?;
            let mut order = vec![a];
            order.extend((0..r).map(|s| c[(i + r - s) % r]));
            order.push(b);
            order
        }
    };
    let cert = HamPathCert { order };
    cert.validate(&bip, &scope, a, b)
        .map_err(|e| Error::Construction(format!("path certificate rejected: {e}")))?;
    Ok(cert)
}
