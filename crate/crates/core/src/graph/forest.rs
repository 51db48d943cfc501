//! Linear forests: exact maximum for small scopes, a decomposition-based
//! lower bound for large ones, k-good cuts, and degree pruning.

use super::{Cut, Graph, LinearForest, VertexSet};
use crate::error::{Error, Result};

/// Largest scope accepted by [`max_linear_forest_exact`].
pub const EXACT_FOREST_LIMIT: usize = 20;

/// Default slack in the arboricity bound.
pub const DEFAULT_EPS0: f64 = 0.25;

const INF: u8 = u8::MAX;

/// Maximum linear forest of `g[scope]`, computed as a minimum path cover
/// by a DP over `(subset, last endpoint)`.
pub fn max_linear_forest_exact(g: &Graph, scope: &VertexSet) -> Result<LinearForest> {
    let k = scope.len();
    if k > EXACT_FOREST_LIMIT {
        return Err(Error::Budget {
            what: "exact linear forest",
            size: k,
            limit: EXACT_FOREST_LIMIT,
        });
    }
    if k == 0 {
        return Ok(LinearForest::default());
    }
    let map: Vec<usize> = scope.iter().collect();
    let adj: Vec<u32> = g.local_rows(&map).into_iter().map(|r| r as u32).collect();
    let full = (1usize << k) - 1;

    // dp[mask * k + v]: fewest paths covering `mask` where the path
    // written last ends at `v`.
    let mut dp = vec![INF; (full + 1) * k];
    let mut best = vec![INF; full + 1];
    best[0] = 0;
    for mask in 1..=full {
        let mut bm = INF;
        let mut bits = mask;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let prev = mask & !(1 << v);
            let mut val = best[prev].saturating_add(1);
            let mut cand = prev & adj[v] as usize;
            while cand != 0 {
                let u = cand.trailing_zeros() as usize;
                cand &= cand - 1;
                val = val.min(dp[prev * k + u]);
            }
            dp[mask * k + v] = val;
            bm = bm.min(val);
        }
        best[mask] = bm;
    }

    // Walk back from the full mask.
    let mut edges = Vec::with_capacity(k);
    let mut mask = full;
    let mut end = (0..k).find(|&v| dp[full * k + v] == best[full]).unwrap();
    while mask != 0 {
        let cur = dp[mask * k + end];
        let prev = mask & !(1 << end);
        if prev == 0 {
            break;
        }
        let step = (0..k).find(|&u| prev >> u & 1 == 1 && adj[end] >> u & 1 == 1 && dp[prev * k + u] == cur);
        match step {
            Some(u) => {
                edges.push((map[u], map[end]));
                end = u;
            }
            None => {
                debug_assert_eq!(best[prev] + 1, cur);
                end = (0..k).find(|&u| prev >> u & 1 == 1 && dp[prev * k + u] == best[prev]).unwrap();
            }
        }
        mask = prev;
    }
    debug_assert_eq!(edges.len(), k - best[full] as usize);
    Ok(LinearForest::new(edges))
}

/// `⌊e / ⌈(1+ε₀)Δ/2⌉⌋`, the guaranteed size of [`linear_forest_lower_bound`].
pub fn forest_bound(edges: usize, max_degree: usize, eps0: f64) -> usize {
    if max_degree == 0 {
        return 0;
    }
    let classes = ((1.0 + eps0) * max_degree as f64 / 2.0).ceil().max(1.0) as usize;
    edges / classes
}

struct Builder {
    deg: Vec<u8>,
    parent: Vec<usize>,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    fn new(m: usize) -> Self {
        Builder {
            deg: vec![0; m],
            parent: (0..m).collect(),
            edges: Vec::new(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Adds `uv` if the result is still a linear forest.
    fn try_add(&mut self, u: usize, v: usize) -> bool {
        if self.deg[u] >= 2 || self.deg[v] >= 2 {
            return false;
        }
        let (ru, rv) = (self.find(u), self.find(v));
        if ru == rv {
            return false;
        }
        self.parent[ru] = rv;
        self.deg[u] += 1;
        self.deg[v] += 1;
        self.edges.push((u, v));
        true
    }

    fn augment(mut self, all: &[(usize, usize)]) -> Vec<(usize, usize)> {
        for &(u, v) in all {
            self.try_add(u, v);
        }
        self.edges
    }
}

/// Greedy proper edge colouring; edges are coloured in the given order
/// with the smallest colour free at both endpoints.
fn greedy_edge_colouring(m: usize, edges: &[(usize, usize)]) -> Vec<Vec<(usize, usize)>> {
    let mut used: Vec<Vec<bool>> = vec![Vec::new(); m];
    let mut classes: Vec<Vec<(usize, usize)>> = Vec::new();
    for &(u, v) in edges {
        let c = (0..)
            .find(|&c| !used[u].get(c).copied().unwrap_or(false) && !used[v].get(c).copied().unwrap_or(false))
            .unwrap();
        for w in [u, v] {
            if used[w].len() <= c {
                used[w].resize(c + 1, false);
            }
            used[w][c] = true;
        }
        if classes.len() <= c {
            classes.resize(c + 1, Vec::new());
        }
        classes[c].push((u, v));
    }
    classes
}

fn from_colouring(m: usize, edges: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let classes = greedy_edge_colouring(m, edges);
    let mut best: Vec<(usize, usize)> = Vec::new();
    for pair in classes.chunks(2) {
        // Two matchings span paths and even cycles; the union-find skips one
        // edge per cycle.
        let mut b = Builder::new(m);
        for &(u, v) in pair.iter().flatten() {
            b.try_add(u, v);
        }
        if b.edges.len() > best.len() {
            best = b.edges;
        }
    }
    let mut b = Builder::new(m);
    for &(u, v) in &best {
        b.try_add(u, v);
    }
    b.augment(edges)
}

/// Path growing: start at a vertex of least remaining degree and keep
/// stepping to the unvisited neighbour of least remaining degree, at both
/// ends.
fn from_path_growing(g: &Graph, scope: &VertexSet, edges: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let m = g.vertex_count();
    let mut free = scope.clone();
    let mut b = Builder::new(m);
    let pick = |free: &VertexSet, cands: Vec<usize>| {
        cands.into_iter().map(|v| (g.degree_in(v, free), v)).min().map(|(_, v)| v)
    };
    while let Some(start) = pick(&free, free.to_vec()) {
        free.remove(start);
        // Once per end of the new path.
        for _ in 0..2 {
            let mut cur = start;
            while let Some(nx) = pick(&free, g.neighbors(cur).filter(|&w| free.contains(w)).collect()) {
                free.remove(nx);
                b.try_add(cur, nx);
                cur = nx;
            }
        }
    }
    b.augment(edges)
}

/// A linear forest in `g[scope]` with at least [`forest_bound`] edges
/// (slack `ε₀ = 0.25`).
pub fn linear_forest_lower_bound(g: &Graph, scope: &VertexSet) -> LinearForest {
    let edges: Vec<(usize, usize)> = g
        .edges()
        .filter(|&(u, v)| scope.contains(u) && scope.contains(v))
        .collect();
    if edges.is_empty() {
        return LinearForest::default();
    }
    let a = from_colouring(g.vertex_count(), &edges);
    let b = from_path_growing(g, scope, &edges);
    LinearForest::new(if b.len() > a.len() { b } else { a })
}

/// Outcome of a k-good test. `definite` is false only when the lower-bound
/// heuristic fell short, in which case `holds = false` means "unknown".
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KGood {
    pub holds: bool,
    pub definite: bool,
    /// A forest on the larger side with exactly the required edge count.
    pub witness: Option<LinearForest>,
}

/// Tests whether `cut` is k-good: the larger side carries a linear forest
/// with at least `k + ||X| − |Y||` edges. With `exact` the side must have at
/// most 20 vertices.
pub fn is_k_good_cut(g: &Graph, cut: &Cut, k: usize, exact: bool) -> Result<KGood> {
    let (nx, ny) = (cut.x.len(), cut.y.len());
    let mut sides = Vec::new();
    if nx >= ny {
        sides.push((&cut.x, k + nx - ny));
    }
    if ny >= nx {
        sides.push((&cut.y, k + ny - nx));
    }
    let mut definite = true;
    for (side, need) in sides {
        if need == 0 {
            return Ok(KGood {
                holds: true,
                definite: true,
                witness: Some(LinearForest::default()),
            });
        }
        // A forest on s vertices has at most s - 1 edges.
        if need >= side.len().max(1) || need > g.edges_within(side) {
            continue;
        }
        let forest = if exact {
            max_linear_forest_exact(g, side)?
        } else {
            linear_forest_lower_bound(g, side)
        };
        if forest.len() >= need {
            return Ok(KGood {
                holds: true,
                definite: true,
                witness: Some(forest.truncated(need)),
            });
        }
        if !exact {
            definite = false;
        }
    }
    Ok(KGood {
        holds: false,
        definite,
        witness: None,
    })
}

/// Keeps the edges of `g` between `left` and `right`, then scans vertices
/// in index order and deletes edges at any vertex of degree above `cap`,
/// largest-index neighbour first. Returns the pruned graph (same vertex
/// set) and the number of deleted crossing edges.
pub fn prune_to_max_degree(g: &Graph, left: &VertexSet, right: &VertexSet, cap: usize) -> (Graph, usize) {
    let mut h = g.bipartite_restriction(left, right);
    let mut deleted = 0;
    for v in 0..h.vertex_count() {
        let excess = h.degree(v).saturating_sub(cap);
        if excess == 0 {
            continue;
        }
        let mut nb: Vec<usize> = h.neighbors(v).collect();
        nb.reverse();
        for &u in nb.iter().take(excess) {
            h.remove_edge(v, u);
            deleted += 1;
        }
    }
    (h, deleted)
}
