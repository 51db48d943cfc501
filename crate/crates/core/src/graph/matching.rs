use std::collections::VecDeque;

use super::{Graph, Matching, VertexCover, VertexSet};
use crate::error::{precondition, Result};

/// Maximal (not maximum) matching of `g[scope]`: vertices are scanned in
/// index order and each unmatched vertex takes its lowest-index unmatched
/// neighbour.
pub fn greedy_maximal_matching(g: &Graph, scope: &VertexSet) -> Matching {
    let mut free = scope.clone();
    let mut edges = Vec::new();
    for u in scope.iter() {
        if !free.contains(u) {
            continue;
        }
        if let Some(v) = g.neighbors(u).find(|&v| free.contains(v)) {
            free.remove(u);
            free.remove(v);
            edges.push((u, v));
        }
    }
    Matching::new(edges)
}

const NIL: usize = usize::MAX;

/// Maximum matching of the bipartite graph `g[left, right]` (Hopcroft–Karp)
/// together with a minimum vertex cover obtained from König's construction.
///
/// Edges inside `left` or inside `right` are rejected.
pub fn konig_min_cover(g: &Graph, left: &VertexSet, right: &VertexSet) -> Result<(Matching, VertexCover)> {
    if !left.is_disjoint(right) {
        return precondition("bipartition sides overlap");
    }
    for side in [left, right] {
        if let Some(u) = side.iter().find(|&u| g.degree_in(u, side) > 0) {
            let v = g.neighbors(u).find(|&v| side.contains(v)).unwrap();
            return precondition(format!("edge ({u},{v}) lies inside one side of the bipartition"));
        }
    }
    let ls: Vec<usize> = left.iter().collect();
    let rs: Vec<usize> = right.iter().collect();
    let mut rindex = vec![NIL; g.vertex_count()];
    for (j, &v) in rs.iter().enumerate() {
        rindex[v] = j;
    }
    let adj: Vec<Vec<usize>> = ls
        .iter()
        .map(|&u| g.neighbors(u).filter(|&v| right.contains(v)).map(|v| rindex[v]).collect())
        .collect();

    let (mate_l, mate_r) = hopcroft_karp(&adj, rs.len());

    // König: Z = vertices reachable from free left vertices by alternating paths.
    let mut zl = vec![false; ls.len()];
    let mut zr = vec![false; rs.len()];
    let mut queue: VecDeque<usize> = (0..ls.len()).filter(|&i| mate_l[i] == NIL).collect();
    for &i in &queue {
        zl[i] = true;
    }
    while let Some(i) = queue.pop_front() {
        for &j in &adj[i] {
            if !zr[j] && mate_l[i] != j {
                zr[j] = true;
                let k = mate_r[j];
                if k != NIL && !zl[k] {
                    zl[k] = true;
                    queue.push_back(k);
                }
            }
        }
    }
    let m = g.vertex_count();
    let mut cover = VertexSet::empty(m);
    for (i, &u) in ls.iter().enumerate() {
        if !zl[i] {
            cover.insert(u);
        }
    }
    for (j, &v) in rs.iter().enumerate() {
        if zr[j] {
            cover.insert(v);
        }
    }
    let matching = Matching::new(
        (0..ls.len())
            .filter(|&i| mate_l[i] != NIL)
            .map(|i| (ls[i], rs[mate_l[i]]))
            .collect(),
    );
    debug_assert_eq!(matching.len(), cover.len());
    Ok((
        matching,
        VertexCover {
            vertices: cover,
            scope: Some(left.union(right)),
        },
    ))
}

/// Returns `(mate_left, mate_right)` with `NIL` for unmatched vertices.
fn hopcroft_karp(adj: &[Vec<usize>], nr: usize) -> (Vec<usize>, Vec<usize>) {
    let nl = adj.len();
    let mut mate_l = vec![NIL; nl];
    let mut mate_r = vec![NIL; nr];
    let mut dist = vec![0usize; nl];
    loop {
        // BFS layering from free left vertices.
        let mut queue = VecDeque::new();
        for i in 0..nl {
            if mate_l[i] == NIL {
                dist[i] = 0;
                queue.push_back(i);
            } else {
                dist[i] = NIL;
            }
        }
        let mut found = false;
        while let Some(i) = queue.pop_front() {
            for &j in &adj[i] {
                let k = mate_r[j];
                if k == NIL {
                    found = true;
                } else if dist[k] == NIL {
                    dist[k] = dist[i] + 1;
                    queue.push_back(k);
                }
            }
        }
        if !found {
            break;
        }
        let mut it = vec![0usize; nl];
        for i in 0..nl {
            if mate_l[i] == NIL {
                augment(i, adj, &mut mate_l, &mut mate_r, &mut dist, &mut it);
            }
        }
    }
    (mate_l, mate_r)
}

fn augment(
    i: usize,
    adj: &[Vec<usize>],
    mate_l: &mut [usize],
    mate_r: &mut [usize],
    dist: &mut [usize],
    it: &mut [usize],
) -> bool {
    while it[i] < adj[i].len() {
        let j = adj[i][it[i]];
        it[i] += 1;
        let k = mate_r[j];
        if k == NIL || (dist[k] == dist[i] + 1 && augment(k, adj, mate_l, mate_r, dist, it)) {
            mate_l[i] = j;
            mate_r[j] = i;
            return true;
        }
    }
    dist[i] = NIL;
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sides(m: usize, left: impl IntoIterator<Item = usize>) -> (VertexSet, VertexSet) {
        let l = VertexSet::from_iter(m, left);
        let r = l.complement();
        (l, r)
    }

    #[test]
    fn greedy_examples() {
        let c5 = Graph::cycle(5);
        assert_eq!(greedy_maximal_matching(&c5, &c5.all_vertices()).len(), 2);
        let e6 = Graph::new(6);
        assert_eq!(greedy_maximal_matching(&e6, &e6.all_vertices()).len(), 0);
        let k4 = Graph::complete(4);
        assert_eq!(greedy_maximal_matching(&k4, &k4.all_vertices()).len(), 2);
    }

    #[test]
    fn greedy_is_maximal_in_scope() {
        let g = Graph::cycle(8);
        let scope = VertexSet::from_iter(8, [0, 1, 2, 3, 5, 6]);
        let mm = greedy_maximal_matching(&g, &scope);
        mm.validate(&g, &scope).unwrap();
        let used = mm.vertices(8);
        for (u, v) in g.edges() {
            if scope.contains(u) && scope.contains(v) {
                assert!(used.contains(u) || used.contains(v));
            }
        }
    }

    #[test]
    fn konig_examples() {
        let c6 = Graph::cycle(6);
        let (l, r) = sides(6, [0, 2, 4]);
        let (mm, cover) = konig_min_cover(&c6, &l, &r).unwrap();
        assert_eq!((mm.len(), cover.len()), (3, 3));

        let mut k33 = Graph::new(6);
        for u in 0..3 {
            for v in 3..6 {
                k33.add_edge(u, v);
            }
        }
        let (l, r) = sides(6, 0..3);
        let (mm, cover) = konig_min_cover(&k33, &l, &r).unwrap();
        assert_eq!((mm.len(), cover.len()), (3, 3));

        let star = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let (l, r) = sides(5, [0]);
        let (mm, cover) = konig_min_cover(&star, &l, &r).unwrap();
        assert_eq!((mm.len(), cover.len()), (1, 1));
        cover.validate(&star).unwrap();
    }

    #[test]
    fn konig_rejects_intra_side_edges() {
        let c5 = Graph::cycle(5);
        let (l, r) = sides(5, [0, 2, 4]);
        assert!(konig_min_cover(&c5, &l, &r).is_err());
    }
}
