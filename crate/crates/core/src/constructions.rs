//! Builders for the graph families studied here, each with a validator for
//! the degree and structure claims it is meant to satisfy.

use serde::{Deserialize, Serialize};

use crate::error::{precondition, Error, Result};
use crate::graph::{iso, Graph, VertexSet};

/// `K_{n-1,n+1}` plus a 2-factor on the side of size `n + 1`.
///
/// Labels: part A is `0..=n`, part B is `n+1..2n`, and the cycles occupy
/// consecutive runs of part A in the order given.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalGraph {
    pub n: usize,
    pub graph: Graph,
    pub part_a: VertexSet,
    pub part_b: VertexSet,
    pub cycles: Vec<Vec<usize>>,
}

impl ExtremalGraph {
    pub fn cycle_lengths(&self) -> Vec<usize> {
        self.cycles.iter().map(Vec::len).collect()
    }

    pub fn validate(&self) -> Result<()> {
        let g = &self.graph;
        let n = self.n;
        if g.vertex_count() != 2 * n || !g.is_regular(n + 1) {
            return Err(Error::Construction(format!("graph is not {}-regular on {} vertices", n + 1, 2 * n)));
        }
        if self.part_a.len() != n + 1 || self.part_b.len() != n - 1 || !self.part_a.is_disjoint(&self.part_b) {
            return Err(Error::Construction("parts have the wrong sizes".into()));
        }
        if g.edges_within(&self.part_b) != 0 {
            return Err(Error::Construction("part B is not independent".into()));
        }
        for a in self.part_a.iter() {
            if g.degree_in(a, &self.part_b) != n - 1 {
                return Err(Error::Construction(format!("vertex {a} misses part B")));
            }
        }
        let mut cyc = Graph::new(2 * n);
        let mut covered = VertexSet::empty(2 * n);
        for c in &self.cycles {
            if c.len() < 3 {
                return Err(Error::Construction("cycle shorter than 3".into()));
            }
            for (i, &v) in c.iter().enumerate() {
                if covered.contains(v) {
                    return Err(Error::Construction(format!("vertex {v} on two cycles")));
                }
                covered.insert(v);
                cyc.add_edge(v, c[(i + 1) % c.len()]);
            }
        }
        if covered != self.part_a {
            return Err(Error::Construction("cycles do not span part A".into()));
        }
        for (u, v) in g.edges() {
            if self.part_a.contains(u) && self.part_a.contains(v) && !cyc.has_edge(u, v) {
                return Err(Error::Construction(format!("edge ({u},{v}) inside part A is not a cycle edge")));
            }
        }
        Ok(())
    }
}

/// Checks that `cycle_lengths` is a cycle type of the extremal family at
/// scale `n`.
pub fn validate_cycle_type(n: usize, cycle_lengths: &[usize]) -> Result<()> {
    if n < 2 {
        return precondition("extremal family needs n >= 2");
    }
    if let Some(&l) = cycle_lengths.iter().find(|&&l| l < 3) {
        return precondition(format!("cycle length {l} is below 3"));
    }
    let total: usize = cycle_lengths.iter().sum();
    if total != n + 1 {
        return precondition(format!("cycle lengths sum to {total}, expected {}", n + 1));
    }
    Ok(())
}

pub fn build_extremal(n: usize, cycle_lengths: &[usize]) -> Result<ExtremalGraph> {
    validate_cycle_type(n, cycle_lengths)?;
    let m = 2 * n;
    let mut g = Graph::new(m);
    for a in 0..=n {
        for b in n + 1..m {
            g.add_edge(a, b);
        }
    }
    let mut cycles = Vec::with_capacity(cycle_lengths.len());
    let mut start = 0;
    for &l in cycle_lengths {
        let c: Vec<usize> = (start..start + l).collect();
        for i in 0..l {
            g.add_edge(c[i], c[(i + 1) % l]);
        }
        cycles.push(c);
        start += l;
    }
    let eg = ExtremalGraph {
        n,
        graph: g,
        part_a: VertexSet::range(m, 0..n + 1),
        part_b: VertexSet::range(m, n + 1..m),
        cycles,
    };
    eg.validate()?;
    Ok(eg)
}

/// All multisets of cycle lengths (each at least 3, non-increasing) summing
/// to `n + 1`: the cycle types of the extremal family at scale `n`.
pub fn cycle_types(n: usize) -> Vec<Vec<usize>> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for l in (3..=max.min(rest)).rev() {
            cur.push(l);
            rec(rest - l, l, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n + 1, n + 1, &mut Vec::new(), &mut out);
    out
}

/// `K_{n,n}` with parts `0..n` and `n..2n`.
pub fn build_knn(n: usize) -> Result<Graph> {
    if n < 1 {
        return precondition("K_{n,n} needs n >= 1");
    }
    let mut g = Graph::new(2 * n);
    for a in 0..n {
        for b in n..2 * n {
            g.add_edge(a, b);
        }
    }
    Ok(g)
}

/// `K_{n,n}` with two spanning stars added in each part. The centres of a
/// part (vertices `0, 1` and `n, n+1`) are adjacent to each other and to the
/// rest of their part, so leaves have degree `n + 2` and centres `2n - 1`.
pub fn build_star_augmented(n: usize) -> Result<Graph> {
    if n < 3 {
        return precondition("star-augmented graph needs n >= 3");
    }
    let mut g = build_knn(n)?;
    for base in [0, n] {
        for c in base..base + 2 {
            for v in base..base + n {
                g.add_edge(c, v);
            }
        }
    }
    Ok(g)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompetitorGraph {
    pub k: usize,
    pub n: usize,
    pub graph: Graph,
    pub part_left: VertexSet,
    pub part_right: VertexSet,
    pub centers_left: VertexSet,
    pub centers_right: VertexSet,
}

impl CompetitorGraph {
    pub fn validate(&self) -> Result<()> {
        if !self.graph.is_regular(self.n + 1) {
            return Err(Error::Construction(format!("competitor graph is not {}-regular", self.n + 1)));
        }
        for part in [&self.part_left, &self.part_right] {
            let stars = self.graph.edges_within(part);
            if stars != self.k * (self.k - 1) {
                return Err(Error::Construction(format!("part spans {stars} star edges")));
            }
        }
        Ok(())
    }
}

/// `K_{n,n}` with `n = k²`, plus `k` vertex-disjoint `k`-vertex stars in each
/// part. Star `j` has centre `j·k` and leaves `j·k+1 .. j·k+k-1` (offset by
/// `n` on the right). Left centre `i` loses its edges to right centres
/// `i+1, ..., i+k-2 (mod k)`, which makes every degree exactly `n + 1`.
pub fn build_competitor(k: usize) -> Result<CompetitorGraph> {
    if k < 3 {
        return precondition("competitor graph needs k >= 3");
    }
    let n = k * k;
    let mut g = build_knn(n)?;
    for side in [0, n] {
        for j in 0..k {
            let c = side + j * k;
            for l in 1..k {
                g.add_edge(c, c + l);
            }
        }
    }
    for i in 0..k {
        for s in 1..=k - 2 {
            let j = (i + s) % k;
            g.remove_edge(i * k, n + j * k);
        }
    }
    let cg = CompetitorGraph {
        k,
        n,
        graph: g,
        part_left: VertexSet::range(2 * n, 0..n),
        part_right: VertexSet::range(2 * n, n..2 * n),
        centers_left: VertexSet::from_iter(2 * n, (0..k).map(|j| j * k)),
        centers_right: VertexSet::from_iter(2 * n, (0..k).map(|j| n + j * k)),
    };
    cg.validate()?;
    Ok(cg)
}

/// Degree summary recorded next to constructed graphs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeCheck {
    pub min_degree: usize,
    pub max_degree: usize,
    pub regular: bool,
    pub degree_sequence: Vec<usize>,
}

pub fn degree_check(g: &Graph) -> DegreeCheck {
    let seq = g.degree_sequence();
    let min_degree = seq.iter().copied().min().unwrap_or(0);
    let max_degree = seq.iter().copied().max().unwrap_or(0);
    DegreeCheck {
        min_degree,
        max_degree,
        regular: min_degree == max_degree,
        degree_sequence: seq,
    }
}

/// All `d`-regular graphs on `m` vertices, one per isomorphism class.
///
/// Backtracking always completes the lowest-index vertex with a deficit.
/// Vertices that have no edges yet are interchangeable, so only the first
/// of them is ever tried as a new neighbour.
pub fn enumerate_regular(m: usize, d: usize) -> Vec<Graph> {
    fn rec(g: &mut Graph, d: usize, out: &mut Vec<Graph>) {
        let m = g.vertex_count();
        let Some(v) = (0..m).find(|&v| g.degree(v) < d) else {
            out.push(g.clone());
            return;
        };
        let last = g.neighbors(v).max();
        let mut fresh_tried = false;
        for u in v + 1..m {
            // Neighbours are added in increasing order to avoid repeats.
            if last.is_some_and(|l| u <= l) || g.degree(u) >= d {
                continue;
            }
            if g.degree(u) == 0 {
                if fresh_tried {
                    continue;
                }
                fresh_tried = true;
            }
            g.add_edge(v, u);
            // The remaining deficit of v must fit in the vertices after u.
            let need = d - g.degree(v);
            if (u + 1..m).filter(|&w| g.degree(w) < d).count() >= need {
                rec(g, d, out);
            }
            g.remove_edge(v, u);
        }
    }
    if d >= m.max(1) || m * d % 2 == 1 {
        return Vec::new();
    }
    let mut labelled = Vec::new();
    rec(&mut Graph::new(m), d, &mut labelled);
    iso::dedup_isomorphic(labelled)
}

/// Largest `n` accepted by [`enumerate_regular_complements`].
pub const MAX_COMPLEMENT_N: usize = 5;

/// All `(n+1)`-regular graphs on `2n` vertices up to isomorphism, as
/// complements of the `(n-2)`-regular graphs on `2n` vertices.
pub fn enumerate_regular_complements(n: usize) -> Result<Vec<Graph>> {
    if !(2..=MAX_COMPLEMENT_N).contains(&n) {
        return precondition(format!("n = {n} outside the supported range 2..={MAX_COMPLEMENT_N}"));
    }
    Ok(enumerate_regular(2 * n, n - 2).iter().map(Graph::complement).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn octahedron() -> Graph {
        Graph::from_edges(6, &[(0, 1), (2, 3), (4, 5)]).unwrap().complement()
    }

    #[test]
    fn extremal_small_cases() {
        let k4 = build_extremal(2, &[3]).unwrap();
        assert_eq!(k4.graph, Graph::complete(4));
        let oct = build_extremal(3, &[4]).unwrap();
        assert!(iso::is_isomorphic(&oct.graph, &octahedron()));
        assert!(build_extremal(4, &[3, 2]).is_err());
        assert!(build_extremal(4, &[3, 3]).is_err());
        assert!(build_extremal(1, &[]).is_err());
    }

    #[test]
    fn extremal_cycle_order_irrelevant() {
        let a = build_extremal(10, &[3, 5, 3]).unwrap();
        let b = build_extremal(10, &[5, 3, 3]).unwrap();
        assert!(iso::is_isomorphic(&a.graph, &b.graph));
        assert_eq!(a.cycles[1], vec![3, 4, 5, 6, 7]);
    }

    #[test]
    fn cycle_type_counts() {
        assert_eq!(cycle_types(2), vec![vec![3]]);
        assert_eq!(cycle_types(7), vec![vec![8], vec![5, 3], vec![4, 4]]);
        // Partitions of 11 into parts >= 3.
        assert_eq!(cycle_types(10).len(), 6);
    }

    #[test]
    fn knn_and_star_augmented() {
        assert_eq!(build_knn(1).unwrap().edge_count(), 1);
        let k33 = build_knn(3).unwrap();
        assert!(k33.is_regular(3) && k33.edge_count() == 9);
        assert!(build_knn(0).is_err());
        for n in 3..9 {
            let g = build_star_augmented(n).unwrap();
            let dc = degree_check(&g);
            assert!(dc.min_degree >= n + 1);
            assert_eq!(dc.min_degree, n + 2);
            assert_eq!(dc.regular, n == 3);
            assert!(g.is_connected());
        }
        assert!(build_star_augmented(2).is_err());
    }

    #[test]
    fn competitor_is_regular() {
        for k in 3..=12 {
            let c = build_competitor(k).unwrap();
            assert_eq!(c.graph.vertex_count(), 2 * k * k);
            assert!(c.graph.is_regular(k * k + 1));
        }
        assert!(build_competitor(2).is_err());
    }

    #[test]
    fn complement_enumeration_small() {
        let counts: Vec<usize> = (2..=4).map(|n| enumerate_regular_complements(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 3]);
        assert_eq!(enumerate_regular_complements(2).unwrap(), vec![Graph::complete(4)]);
        assert!(iso::is_isomorphic(&enumerate_regular_complements(3).unwrap()[0], &octahedron()));
        for g in enumerate_regular_complements(4).unwrap() {
            assert!(g.is_regular(5));
        }
        assert!(enumerate_regular_complements(1).is_err());
        assert!(enumerate_regular_complements(6).is_err());
    }

    #[test]
    fn cubic_graphs_on_ten_vertices() {
        // 19 connected cubic graphs on 10 vertices plus K4 + K33 and K4 + prism.
        assert_eq!(enumerate_regular(10, 3).len(), 21);
        assert_eq!(enumerate_regular(8, 3).len(), 6);
    }
}
