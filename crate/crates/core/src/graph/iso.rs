//! Isomorphism testing for small graphs.
//!
//! Graphs are first compared by cheap invariants; survivors go to the VF2
//! matcher from `petgraph`.

use petgraph::graph::UnGraph;

use super::Graph;

/// Invariant fingerprint: order, size, sorted degree sequence, sorted
/// per-vertex triangle counts and sorted neighbour-degree multisets.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fingerprint {
    order: usize,
    size: usize,
    degrees: Vec<usize>,
    triangles: Vec<usize>,
    neighbour_degrees: Vec<Vec<usize>>,
}

pub fn fingerprint(g: &Graph) -> Fingerprint {
    let m = g.vertex_count();
    let deg = g.degree_sequence();
    let mut degrees = deg.clone();
    degrees.sort_unstable();
    let mut triangles: Vec<usize> = (0..m)
        .map(|v| {
            let nb = g.neighbor_set(v);
            g.edges_within(&nb)
        })
        .collect();
    triangles.sort_unstable();
    let mut neighbour_degrees: Vec<Vec<usize>> = (0..m)
        .map(|v| {
            let mut d: Vec<usize> = g.neighbors(v).map(|u| deg[u]).collect();
            d.sort_unstable();
            d.insert(0, deg[v]);
            d
        })
        .collect();
    neighbour_degrees.sort_unstable();
    Fingerprint {
        order: m,
        size: g.edge_count(),
        degrees,
        triangles,
        neighbour_degrees,
    }
}

fn to_petgraph(g: &Graph) -> UnGraph<(), ()> {
    let mut h = UnGraph::with_capacity(g.vertex_count(), g.edge_count());
    for _ in 0..g.vertex_count() {
        h.add_node(());
    }
    for (u, v) in g.edges() {
        h.add_edge((u as u32).into(), (v as u32).into(), ());
    }
    h
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    if fingerprint(a) != fingerprint(b) {
        return false;
    }
    petgraph::algo::is_isomorphic(&to_petgraph(a), &to_petgraph(b))
}

/// Keeps one representative per isomorphism class, preserving first
/// occurrence order.
pub fn dedup_isomorphic(graphs: impl IntoIterator<Item = Graph>) -> Vec<Graph> {
    let mut buckets: std::collections::HashMap<Fingerprint, Vec<usize>> = Default::default();
    let mut reps: Vec<Graph> = Vec::new();
    for g in graphs {
        let fp = fingerprint(&g);
        let bucket = buckets.entry(fp).or_default();
        if bucket.iter().any(|&i| petgraph::algo::is_isomorphic(&to_petgraph(&reps[i]), &to_petgraph(&g))) {
            continue;
        }
        bucket.push(reps.len());
        reps.push(g);
    }
    reps
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabelled_graphs_are_isomorphic() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)]).unwrap();
        let h = g.permuted(&[3, 1, 4, 0, 2]);
        assert!(is_isomorphic(&g, &h));
    }

    #[test]
    fn distinguishes_c6_from_two_triangles() {
        let c6 = Graph::cycle(6);
        let tt = Graph::cycle(3).disjoint_union(&Graph::cycle(3));
        assert!(!is_isomorphic(&c6, &tt));
        assert_eq!(dedup_isomorphic([c6.clone(), tt, c6.permuted(&[1, 0, 2, 3, 4, 5])]).len(), 2);
    }
}
