//! Exact minimum vertex cover by branch and bound.
//!
//! Reductions: isolated vertices are dropped, a degree-1 vertex forces its
//! neighbour, and a degree-2 vertex whose neighbours are adjacent forces
//! both neighbours. Branching is on a maximum-degree vertex (take it, or
//! take its whole neighbourhood); a greedy maximal matching bounds the
//! remaining cost from below.

use super::{matching::greedy_maximal_matching, Graph, VertexCover, VertexSet};
use crate::error::{Error, Result};

pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

#[derive(Clone, Copy, Debug)]
pub struct CoverConfig {
    pub node_budget: u64,
}

impl Default for CoverConfig {
    fn default() -> Self {
        CoverConfig {
            node_budget: DEFAULT_NODE_BUDGET,
        }
    }
}

struct Search<'a> {
    g: &'a Graph,
    nodes: u64,
    budget: u64,
    best: Vec<usize>,
    chosen: Vec<usize>,
    exhausted: bool,
}

impl Search<'_> {
    fn degree(&self, v: usize, alive: &VertexSet) -> usize {
        self.g.degree_in(v, alive)
    }

    fn take(&mut self, v: usize, alive: &mut VertexSet) {
        self.chosen.push(v);
        alive.remove(v);
    }

    fn reduce(&mut self, alive: &mut VertexSet) {
        loop {
            let mut changed = false;
            let verts: Vec<usize> = alive.iter().collect();
            for v in verts {
                if !alive.contains(v) {
                    continue;
                }
                match self.degree(v, alive) {
                    0 => {
                        alive.remove(v);
                        changed = true;
                    }
                    1 => {
                        let u = self.g.neighbors(v).find(|&u| alive.contains(u)).unwrap();
                        self.take(u, alive);
                        alive.remove(v);
                        changed = true;
                    }
                    2 => {
                        let mut nb = self.g.neighbors(v).filter(|&u| alive.contains(u));
                        let (a, b) = (nb.next().unwrap(), nb.next().unwrap());
                        if self.g.has_edge(a, b) {
                            self.take(a, alive);
                            self.take(b, alive);
                            alive.remove(v);
                            changed = true;
                        }
                    }
                    _ => {}
                }
            }
            if !changed {
                break;
            }
        }
    }

    fn solve(&mut self, mut alive: VertexSet) {
        if self.exhausted {
            return;
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            self.exhausted = true;
            return;
        }
        let mark = self.chosen.len();
        self.reduce(&mut alive);
        if self.chosen.len() >= self.best.len() {
            self.chosen.truncate(mark);
            return;
        }
        let pivot = alive
            .iter()
            .map(|v| (self.degree(v, &alive), v))
            .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
        match pivot {
            None => {
                self.best = self.chosen.clone();
            }
            Some((_, v)) => {
                let lb = greedy_maximal_matching(self.g, &alive).len();
                if self.chosen.len() + lb < self.best.len() {
                    // Branch 1: v in the cover.
                    let mut a1 = alive.clone();
                    let m1 = self.chosen.len();
                    self.take(v, &mut a1);
                    self.solve(a1);
                    self.chosen.truncate(m1);
                    // Branch 2: all neighbours of v in the cover.
                    let mut a2 = alive.clone();
                    let nb: Vec<usize> = self.g.neighbors(v).filter(|&u| alive.contains(u)).collect();
                    for u in nb {
                        self.take(u, &mut a2);
                    }
                    a2.remove(v);
                    self.solve(a2);
                }
            }
        }
        self.chosen.truncate(mark);
    }
}

/// Greedy cover: repeatedly take a maximum-degree vertex.
fn greedy_cover(g: &Graph, scope: &VertexSet) -> Vec<usize> {
    let mut alive = scope.clone();
    let mut out = Vec::new();
    loop {
        let best = alive
            .iter()
            .map(|v| (g.degree_in(v, &alive), v))
            .filter(|&(d, _)| d > 0)
            .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
        match best {
            Some((_, v)) => {
                out.push(v);
                alive.remove(v);
            }
            None => return out,
        }
    }
}

/// Minimum vertex cover of `g[scope]`.
pub fn min_vertex_cover_exact(g: &Graph, scope: &VertexSet) -> Result<VertexCover> {
    min_vertex_cover_with(g, scope, CoverConfig::default())
}

pub fn min_vertex_cover_with(g: &Graph, scope: &VertexSet, cfg: CoverConfig) -> Result<VertexCover> {
    let upper = greedy_cover(g, scope);
    let lower = greedy_maximal_matching(g, scope).len();
    let mut search = Search {
        g,
        nodes: 0,
        budget: cfg.node_budget,
        best: upper,
        chosen: Vec::new(),
        exhausted: false,
    };
    if search.best.len() > lower {
        search.solve(scope.clone());
    }
    if search.exhausted {
        return Err(Error::SearchExhausted {
            nodes: search.nodes,
            lower,
            upper: search.best.len(),
        });
    }
    Ok(VertexCover {
        vertices: VertexSet::from_iter(g.vertex_count(), search.best),
        scope: Some(scope.clone()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::matching::greedy_maximal_matching;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn brute_force_cover(g: &Graph) -> usize {
        let m = g.vertex_count();
        let edges: Vec<_> = g.edges().collect();
        (0u32..1 << m)
            .filter(|mask| edges.iter().all(|&(u, v)| mask >> u & 1 == 1 || mask >> v & 1 == 1))
            .map(|mask| mask.count_ones() as usize)
            .min()
            .unwrap()
    }

    #[test]
    fn examples() {
        let c5 = Graph::cycle(5);
        assert_eq!(min_vertex_cover_exact(&c5, &c5.all_vertices()).unwrap().len(), 3);
        let k4 = Graph::complete(4);
        assert_eq!(min_vertex_cover_exact(&k4, &k4.all_vertices()).unwrap().len(), 3);
        let pm = Graph::from_edges(8, &[(0, 1), (2, 3), (4, 5), (6, 7)]).unwrap();
        assert_eq!(min_vertex_cover_exact(&pm, &pm.all_vertices()).unwrap().len(), 4);
    }

    #[test]
    fn matches_brute_force_on_random_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let m = rng.random_range(1..=12);
            let p = rng.random_range(0.1..0.8);
            let mut g = Graph::new(m);
            for u in 0..m {
                for v in u + 1..m {
                    if rng.random_bool(p) {
                        g.add_edge(u, v);
                    }
                }
            }
            let all = g.all_vertices();
            let c = min_vertex_cover_exact(&g, &all).unwrap();
            c.validate(&g).unwrap();
            assert_eq!(c.len(), brute_force_cover(&g));
            let mm = greedy_maximal_matching(&g, &all).len();
            assert!(mm <= c.len() && c.len() <= 2 * mm);
        }
    }

    #[test]
    fn scoped_cover_ignores_outside_edges() {
        let g = Graph::complete(6);
        let scope = VertexSet::from_iter(6, [0, 1, 2]);
        let c = min_vertex_cover_exact(&g, &scope).unwrap();
        assert_eq!(c.len(), 2);
        assert!(c.vertices.is_subset(&scope));
        c.validate(&g).unwrap();
    }

    #[test]
    fn budget_error_reports_bounds() {
        let g = Graph::complete(30);
        let err = min_vertex_cover_with(&g, &g.all_vertices(), CoverConfig { node_budget: 1 }).unwrap_err();
        match err {
            Error::SearchExhausted { lower, upper, .. } => assert!(lower <= 29 && upper >= 29),
            e => panic!("unexpected {e:?}"),
        }
    }

    #[test]
    fn long_cycle_is_solved_by_reductions() {
        let g = Graph::cycle(101);
        let c = min_vertex_cover_exact(&g, &g.all_vertices()).unwrap();
        assert_eq!(c.len(), 51);
    }
}
