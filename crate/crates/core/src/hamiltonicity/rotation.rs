//! Rotation–extension search (Pósa). Sound but incomplete: it either
//! returns a checked cycle or gives up with `Unknown`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{is_hamiltonian_exact, HamCycleCert, HamDecision, HamStatus, Method, EXACT_LIMIT};
use crate::graph::{Graph, VertexSet};

pub const DEFAULT_RESTARTS: u64 = 32;

/// Rotation budget per restart used by [`decide`].
pub fn default_budget(k: usize) -> u64 {
    20 * k as u64 + 2000
}

const NONE: usize = usize::MAX;

struct Walk<'a> {
    h: &'a Graph,
    path: Vec<usize>,
    pos: Vec<usize>,
    free: VertexSet,
}

impl<'a> Walk<'a> {
    fn new(h: &'a Graph, start: usize) -> Self {
        let k = h.vertex_count();
        let mut free = VertexSet::full(k);
        free.remove(start);
        let mut pos = vec![NONE; k];
        pos[start] = 0;
        Walk {
            h,
            path: vec![start],
            pos,
            free,
        }
    }

    fn set_path(&mut self, path: Vec<usize>) {
        for (i, &v) in path.iter().enumerate() {
            self.pos[v] = i;
        }
        self.path = path;
    }

    fn push(&mut self, w: usize) {
        self.free.remove(w);
        self.pos[w] = self.path.len();
        self.path.push(w);
    }

    fn reverse_from(&mut self, i: usize) {
        self.path[i..].reverse();
        for j in i..self.path.len() {
            self.pos[self.path[j]] = j;
        }
    }

    /// Free neighbour of `v` with the fewest free neighbours itself.
    fn best_free_neighbour(&self, v: usize) -> Option<usize> {
        self.h
            .neighbors(v)
            .filter(|&w| self.free.contains(w))
            .map(|w| (self.h.degree_in(w, &self.free), w))
            .min()
            .map(|(_, w)| w)
    }

    /// Turns the current path into a cycle on the same vertices, if an
    /// end-to-end edge or a crossing pair `p0 ~ p[i+1]`, `pk ~ p[i]` exists.
    fn close(&self) -> Option<Vec<usize>> {
        let p = &self.path;
        let k = p.len();
        if k < 3 {
            return None;
        }
        let (first, last) = (p[0], p[k - 1]);
        if self.h.has_edge(first, last) {
            return Some(p.clone());
        }
        (0..k - 2)
            .find(|&i| self.h.has_edge(first, p[i + 1]) && self.h.has_edge(last, p[i]))
            .map(|i| {
                let mut c = p[..=i].to_vec();
                c.extend(p[i + 1..].iter().rev());
                c
            })
    }
}

/// Searches for a Hamilton cycle of `g[scope]` with up to 32 seeded
/// restarts of at most `budget` rotations each.
pub fn find_ham_cycle_rotation(g: &Graph, scope: &VertexSet, budget: u64, seed: u64) -> HamDecision {
    let (h, map) = g.induced(scope);
    let k = h.vertex_count();
    let mut work = 0u64;
    let unknown = |work| HamDecision {
        status: HamStatus::Unknown,
        method: Method::Rotation,
        work,
    };
    if k < 3 || h.min_degree() < 2 {
        return unknown(work);
    }
    for restart in 0..DEFAULT_RESTARTS {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(restart);
        let mut walk = Walk::new(&h, rng.random_range(0..k));
        let mut rotations = 0u64;
        while rotations <= budget {
            work += 1;
            let end = *walk.path.last().unwrap();
            if let Some(w) = walk.best_free_neighbour(end) {
                walk.push(w);
                continue;
            }
            if let Some(w) = walk.best_free_neighbour(walk.path[0]) {
                walk.reverse_from(0);
                walk.push(w);
                continue;
            }
            if let Some(cycle) = walk.close() {
                if cycle.len() == k {
                    let order = cycle.into_iter().map(|v| map[v]).collect();
                    return HamDecision {
                        status: HamStatus::Hamiltonian {
                            cert: HamCycleCert { order },
                        },
                        method: Method::Rotation,
                        work,
                    };
                }
                // Open the cycle at a vertex with a neighbour off the cycle.
                let exit = cycle
                    .iter()
                    .enumerate()
                    .find_map(|(j, &c)| walk.h.neighbors(c).find(|&w| walk.free.contains(w)).map(|w| (j, w)));
                let Some((j, w)) = exit else {
                    // The scope is disconnected.
                    return unknown(work);
                };
                let len = cycle.len();
                let path: Vec<usize> = (1..=len).map(|s| cycle[(j + s) % len]).collect();
                walk.set_path(path);
                walk.push(w);
                continue;
            }
            // Rotate at the end, or at the front if the end has no pivot.
            rotations += 1;
            let len = walk.path.len();
            let pivots = |walk: &Walk, end: usize| -> Vec<usize> {
                walk.h
                    .neighbors(end)
                    .map(|v| walk.pos[v])
                    .filter(|&i| i != NONE && i + 2 < len)
                    .collect()
            };
            let mut piv = pivots(&walk, end);
            if piv.is_empty() {
                walk.reverse_from(0);
                piv = pivots(&walk, *walk.path.last().unwrap());
                if piv.is_empty() {
                    break;
                }
            }
            let i = piv[rng.random_range(0..piv.len())];
            walk.reverse_from(i + 1);
        }
    }
    unknown(work)
}

/// Exact decision for scopes of at most 24 vertices, rotation search above.
pub fn decide(g: &Graph, scope: &VertexSet, seed: u64) -> HamDecision {
    if scope.len() <= EXACT_LIMIT {
        is_hamiltonian_exact(g, scope).expect("scope within the exact limit")
    } else {
        find_ham_cycle_rotation(g, scope, default_budget(scope.len()), seed)
    }
}
