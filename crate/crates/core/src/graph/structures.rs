use serde::{Deserialize, Serialize};

use super::{Graph, VertexSet};
use crate::error::{precondition, Result};

/// An ordered partition `(x, y)` of the vertex set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cut {
    pub x: VertexSet,
    pub y: VertexSet,
}

impl Cut {
    pub fn new(x: VertexSet, y: VertexSet) -> Result<Self> {
        if x.universe() != y.universe() {
            return precondition("cut sides live in different universes");
        }
        if !x.is_disjoint(&y) || x.len() + y.len() != x.universe() {
            return precondition("cut sides must partition the vertex set");
        }
        Ok(Cut { x, y })
    }

    /// The cut `(x, V ∖ x)`.
    pub fn from_side(x: VertexSet) -> Self {
        let y = x.complement();
        Cut { x, y }
    }

    pub fn is_balanced(&self) -> bool {
        self.x.len() == self.y.len()
    }

    /// Cut induced on a vertex subset: `(x ∩ s, y ∩ s)`.
    pub fn restrict(&self, s: &VertexSet) -> (VertexSet, VertexSet) {
        (self.x.intersection(s), self.y.intersection(s))
    }
}

fn normalize(edges: &mut [(usize, usize)]) {
    for e in edges.iter_mut() {
        if e.0 > e.1 {
            *e = (e.1, e.0);
        }
    }
}

/// A set of vertex-disjoint edges.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Matching {
    pub edges: Vec<(usize, usize)>,
}

impl Matching {
    pub fn new(mut edges: Vec<(usize, usize)>) -> Self {
        normalize(&mut edges);
        Matching { edges }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn vertices(&self, m: usize) -> VertexSet {
        VertexSet::from_iter(m, self.edges.iter().flat_map(|&(u, v)| [u, v]))
    }

    /// Checks that every pair is an edge of `g[scope]` and that no vertex
    /// is used twice.
    pub fn validate(&self, g: &Graph, scope: &VertexSet) -> Result<()> {
        let mut used = VertexSet::empty(g.vertex_count());
        for &(u, v) in &self.edges {
            if !scope.contains(u) || !scope.contains(v) || !g.has_edge(u, v) {
                return precondition(format!("({u},{v}) is not an edge of the scoped graph"));
            }
            if used.contains(u) || used.contains(v) {
                return precondition(format!("matching reuses a vertex of ({u},{v})"));
            }
            used.insert(u);
            used.insert(v);
        }
        Ok(())
    }
}

/// A vertex set meeting every edge of `g[scope]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexCover {
    pub vertices: VertexSet,
    pub scope: Option<VertexSet>,
}

impl VertexCover {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Cover size expressed as `α` in `|C| = α·√n`.
    pub fn alpha(&self, n: usize) -> f64 {
        self.len() as f64 / (n as f64).sqrt()
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        let scope = self.scope.clone().unwrap_or_else(|| g.all_vertices());
        if !self.vertices.is_subset(&scope) {
            return precondition("cover leaves the scope");
        }
        for (u, v) in g.edges() {
            if scope.contains(u) && scope.contains(v) && !self.vertices.contains(u) && !self.vertices.contains(v) {
                return precondition(format!("edge ({u},{v}) is uncovered"));
            }
        }
        Ok(())
    }
}

/// A vertex-disjoint union of paths, given by its edges.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearForest {
    pub edges: Vec<(usize, usize)>,
}

impl LinearForest {
    pub fn new(mut edges: Vec<(usize, usize)>) -> Self {
        normalize(&mut edges);
        edges.sort_unstable();
        LinearForest { edges }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn vertices(&self, m: usize) -> VertexSet {
        VertexSet::from_iter(m, self.edges.iter().flat_map(|&(u, v)| [u, v]))
    }

    /// Keeps only the first `k` edges (still a linear forest).
    pub fn truncated(&self, k: usize) -> LinearForest {
        LinearForest {
            edges: self.edges.iter().take(k).copied().collect(),
        }
    }

    /// Splits the forest into its paths, each listed end to end.
    pub fn paths(&self, m: usize) -> Vec<Vec<usize>> {
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); m];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut seen = vec![false; m];
        let mut out = Vec::new();
        let mut starts: Vec<usize> = (0..m).filter(|&v| adj[v].len() == 1).collect();
        starts.sort_unstable();
        for s in starts {
            if seen[s] {
                continue;
            }
            let mut path = vec![s];
            seen[s] = true;
            let mut cur = s;
            while let Some(&nx) = adj[cur].iter().find(|&&w| !seen[w]) {
                seen[nx] = true;
                path.push(nx);
                cur = nx;
            }
            out.push(path);
        }
        out
    }

    /// Checks `edges ⊆ E(g[scope])`, maximum degree ≤ 2 and acyclicity.
    pub fn validate(&self, g: &Graph, scope: &VertexSet) -> Result<()> {
        let m = g.vertex_count();
        let mut deg = vec![0u8; m];
        let mut parent: Vec<usize> = (0..m).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut seen = std::collections::HashSet::new();
        for &(u, v) in &self.edges {
            if u == v || !scope.contains(u) || !scope.contains(v) || !g.has_edge(u, v) {
                return precondition(format!("({u},{v}) is not an edge of the scoped graph"));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return precondition(format!("edge ({u},{v}) repeated"));
            }
            deg[u] += 1;
            deg[v] += 1;
            if deg[u] > 2 || deg[v] > 2 {
                return precondition("linear forest has a vertex of degree 3");
            }
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru == rv {
                return precondition("linear forest contains a cycle");
            }
            parent[ru] = rv;
        }
        Ok(())
    }
}
