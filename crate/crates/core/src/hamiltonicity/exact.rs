use super::{HamCycleCert, HamDecision, HamStatus, Method};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest scope accepted by [`is_hamiltonian_exact`].
pub const EXACT_LIMIT: usize = 24;

/// Held–Karp reachability anchored at local vertex 0.
///
/// Entry `t` describes the vertex set `{0} ∪ {i + 1 : bit i of t}` and holds
/// the endpoints `v` (as bit `v`) of paths that start at 0 and visit exactly
/// that set. Entry 0 is the one-vertex path.
pub(crate) fn reach_table(adj: &[u32]) -> Vec<u32> {
    let k = adj.len();
    debug_assert!((1..=32).contains(&k));
    let size = 1usize << (k - 1);
    let mut reach = vec![0u32; size];
    reach[0] = 1;
    for t in 1..size {
        let mut bits = t;
        let mut r = 0u32;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            if adj[i + 1] & reach[t & !(1 << i)] != 0 {
                r |= 1 << (i + 1);
            }
        }
        reach[t] = r;
    }
    reach
}

/// Walks back through a reach table from endpoint `end` of the set `t` and
/// returns the path from 0 to `end` in local numbering.
fn backtrack(adj: &[u32], reach: &[u32], mut t: usize, end: usize) -> Vec<usize> {
    let mut order = vec![end];
    let mut cur = end;
    while t != 0 {
        let prev = t & !(1 << (cur - 1));
        let cand = reach[prev] & adj[cur];
        debug_assert!(cand != 0);
        let u = cand.trailing_zeros() as usize;
        order.push(u);
        cur = u;
        t = prev;
    }
    debug_assert_eq!(cur, 0);
    order.reverse();
    order
}

/// Counts, by size, the cyclic subsets whose least vertex is `anchor`.
/// `rows[v]` is the neighbourhood of `v` as a bitmask over all vertices.
pub(crate) fn cyclic_subsets_anchored(rows: &[u32], anchor: usize) -> Vec<u64> {
    let m = rows.len();
    let mut hist = vec![0u64; m + 1];
    let k = m - anchor;
    if k < 3 {
        return hist;
    }
    let adj: Vec<u32> = rows[anchor..].iter().map(|&r| r >> anchor).collect();
    let reach = reach_table(&adj);
    let close = adj[0];
    for (t, &r) in reach.iter().enumerate() {
        if r & close != 0 && t.count_ones() >= 2 {
            hist[t.count_ones() as usize + 1] += 1;
        }
    }
    hist
}

/// Exact Hamiltonicity of `g[scope]` for scopes of at most 24 vertices.
pub fn is_hamiltonian_exact(g: &Graph, scope: &VertexSet) -> Result<HamDecision> {
    let k = scope.len();
    if k > EXACT_LIMIT {
        return Err(Error::Budget {
            what: "exact Hamiltonicity",
            size: k,
            limit: EXACT_LIMIT,
        });
    }
    if k < 3 {
        return Ok(HamDecision {
            status: HamStatus::NotHamiltonian,
            method: Method::Trivial,
            work: 0,
        });
    }
    let map: Vec<usize> = scope.iter().collect();
    let adj: Vec<u32> = g.local_rows(&map).into_iter().map(|r| r as u32).collect();
    let reach = reach_table(&adj);
    let full = reach.len() - 1;
    let work = reach.len() as u64;
    let ends = reach[full] & adj[0];
    if ends == 0 {
        return Ok(HamDecision {
            status: HamStatus::NotHamiltonian,
            method: Method::ExactDp,
            work,
        });
    }
    let order = backtrack(&adj, &reach, full, ends.trailing_zeros() as usize);
    Ok(HamDecision {
        status: HamStatus::Hamiltonian {
            cert: HamCycleCert {
                order: order.into_iter().map(|v| map[v]).collect(),
            },
        },
        method: Method::ExactDp,
        work,
    })
}


#[cfg(test)]
mod tests {
    use super::*;
    use rand::{seq::SliceRandom, Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    use super::tests_support::petersen;

    /// Tries every cyclic order with vertex `order[0]` fixed.
    fn naive(g: &Graph, scope: &VertexSet) -> bool {
        let v: Vec<usize> = scope.iter().collect();
        if v.len() < 3 {
            return false;
        }
        fn rec(g: &Graph, path: &mut Vec<usize>, rest: &mut Vec<usize>) -> bool {
            if rest.is_empty() {
                return g.has_edge(path[0], *path.last().unwrap());
            }
            for i in 0..rest.len() {
                let u = rest[i];
                if g.has_edge(*path.last().unwrap(), u) {
                    rest.swap_remove(i);
                    path.push(u);
                    if rec(g, path, rest) {
                        return true;
                    }
                    path.pop();
                    rest.push(u);
                    let last = rest.len() - 1;
                    rest.swap(i, last);
                }
            }
            false
        }
        rec(g, &mut vec![v[0]], &mut v[1..].to_vec())
    }

    #[test]
    fn examples() {
        let c5 = Graph::cycle(5);
        let d = is_hamiltonian_exact(&c5, &c5.all_vertices()).unwrap();
        d.cert().unwrap().validate(&c5, &c5.all_vertices()).unwrap();
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(is_hamiltonian_exact(&star, &star.all_vertices()).unwrap().status, HamStatus::NotHamiltonian);
        let p = petersen();
        assert_eq!(is_hamiltonian_exact(&p, &p.all_vertices()).unwrap().status, HamStatus::NotHamiltonian);
        assert!(!naive(&p, &p.all_vertices()));
        let big = Graph::complete(25);
        assert!(is_hamiltonian_exact(&big, &big.all_vertices()).is_err());
        let k2 = Graph::complete(2);
        assert_eq!(is_hamiltonian_exact(&k2, &k2.all_vertices()).unwrap().method, Method::Trivial);
    }

    #[test]
    fn agrees_with_naive_search() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..600 {
            let m = rng.random_range(1..=8);
            let p = rng.random_range(0.2..0.9);
            let mut g = Graph::new(m);
            for u in 0..m {
                for v in u + 1..m {
                    if rng.random_bool(p) {
                        g.add_edge(u, v);
                    }
                }
            }
            let mut all: Vec<usize> = (0..m).collect();
            all.shuffle(&mut rng);
            let scope = VertexSet::from_iter(m, all.into_iter().take(rng.random_range(0..=m)));
            let d = is_hamiltonian_exact(&g, &scope).unwrap();
            assert_eq!(d.is_hamiltonian(), naive(&g, &scope));
            if let Some(c) = d.cert() {
                c.validate(&g, &scope).unwrap();
            }
        }
    }

    #[test]
    fn anchored_counts_match_per_subset_decisions() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..20 {
            let m = rng.random_range(3..=9);
            let mut g = Graph::new(m);
            for u in 0..m {
                for v in u + 1..m {
                    if rng.random_bool(0.6) {
                        g.add_edge(u, v);
                    }
                }
            }
            let rows: Vec<u32> = g.local_rows(&(0..m).collect::<Vec<_>>()).into_iter().map(|r| r as u32).collect();
            let mut hist = vec![0u64; m + 1];
            for a in 0..m {
                for (h, c) in hist.iter_mut().zip(cyclic_subsets_anchored(&rows, a)) {
                    *h += c;
                }
            }
            let mut expect = vec![0u64; m + 1];
            for mask in 0u64..1 << m {
                let s = VertexSet::from_mask(m, mask);
                if is_hamiltonian_exact(&g, &s).unwrap().is_hamiltonian() {
                    expect[s.len()] += 1;
                }
            }
            assert_eq!(hist, expect);
        }
    }
}
