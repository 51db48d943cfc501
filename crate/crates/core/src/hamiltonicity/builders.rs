//! Constructive Hamilton cycles for the two extremal shapes of dense
//! graphs: two near-cliques joined by a couple of edges, and a near-balanced
//! dense bipartite graph with a small forest making up the imbalance.
//!
//! Both builders first cover the low-degree vertices with short paths,
//! merge those into one or two paths whose ends have high degree, and then
//! close the remaining dense part with a Hamilton-connectivity step.

use super::{ham_path_bipartite, ham_path_dirac_in, HamCycleCert};
use crate::error::{precondition, Error, Result};
use crate::graph::{matching::konig_min_cover, Cut, Graph, LinearForest, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TwoCliquesParams {
    /// Each side holds at least this fraction of the vertices.
    pub min_side: f64,
    /// Minimum degree inside each side, as a fraction of `m`.
    pub min_degree: f64,
    /// Non-edges allowed inside each side, as a fraction of `m²`.
    pub max_non_edges: f64,
    /// Vertices with at most `low·m` neighbours on their own side are low.
    pub low: f64,
}

impl Default for TwoCliquesParams {
    fn default() -> Self {
        TwoCliquesParams {
            min_side: 0.49,
            min_degree: 0.01,
            max_non_edges: 1e-4,
            low: 0.3,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NearBipartiteParams {
    /// Allowed imbalance `|X| - |Y| ≤ eps·m` and crossing-edge deficit.
    pub eps: f64,
    /// Crossing minimum degree is at least `gamma·m/3`.
    pub gamma: f64,
    /// Vertices with at most `low·m` neighbours across the cut are low.
    pub low: f64,
}

impl Default for NearBipartiteParams {
    fn default() -> Self {
        NearBipartiteParams {
            eps: 0.01,
            gamma: 0.3,
            low: 0.3,
        }
    }
}

fn stuck(msg: String) -> Error {
    Error::Construction(msg)
}

/// Hamilton cycle of `g` from a cut into two dense sides joined by at least
/// two disjoint edges.
pub fn ham_cycle_two_cliques(g: &Graph, cut: &Cut, params: TwoCliquesParams) -> Result<HamCycleCert> {
    let m = g.vertex_count();
    let mf = m as f64;
    if cut.x.universe() != m {
        return precondition("cut does not match the graph");
    }
    for (name, side) in [("X", &cut.x), ("Y", &cut.y)] {
        if (side.len() as f64) < params.min_side * mf {
            return precondition(format!("side {name} has {} < {}·m vertices", side.len(), params.min_side));
        }
        let delta = g.min_degree_in(side);
        if (delta as f64) < params.min_degree * mf {
            return precondition(format!("G[{name}] has minimum degree {delta} < {}·m", params.min_degree));
        }
        let s = side.len();
        let non_edges = s * (s - 1) / 2 - g.edges_within(side);
        if non_edges as f64 > params.max_non_edges * mf * mf {
            return precondition(format!("G[{name}] has {non_edges} non-edges > {}·m²", params.max_non_edges));
        }
    }
    let crossing = g.bipartite_restriction(&cut.x, &cut.y);
    let (mm, _) = konig_min_cover(&crossing, &cut.x, &cut.y)?;
    if mm.len() < 2 {
        return precondition("G[X,Y] does not contain two disjoint edges");
    }
    let orient = |(u, v): (usize, usize)| if cut.x.contains(u) { (u, v) } else { (v, u) };
    let (a1, b1) = orient(mm.edges[0]);
    let (a2, b2) = orient(mm.edges[1]);

    let pa = path_in_near_clique(g, &cut.x, a1, a2, params.low)?;
    let pb = path_in_near_clique(g, &cut.y, b1, b2, params.low)?;
    let mut order = pa;
    order.extend(pb.into_iter().rev());
    let cert = HamCycleCert { order };
    cert.validate(g, &g.all_vertices())
        .map_err(|e| stuck(format!("cycle certificate rejected: {e}")))?;
    Ok(cert)
}

/// Hamilton path of `g[side]` from `s1` to `s2`.
fn path_in_near_clique(g: &Graph, side: &VertexSet, s1: usize, s2: usize, low: f64) -> Result<Vec<usize>> {
    let threshold = low * g.vertex_count() as f64;
    let is_low = |v: usize| g.degree_in(v, side) as f64 <= threshold;
    let mut used = VertexSet::empty(g.vertex_count());
    used.insert(s1);
    used.insert(s2);
    let fresh = |used: &VertexSet, v: usize| {
        g.neighbors(v)
            .find(|&w| side.contains(w) && !used.contains(w) && !is_low(w))
    };

    let mut p1 = vec![s1];
    let mut p2 = vec![s2];
    for p in [&mut p1, &mut p2] {
        if is_low(p[0]) {
            let w = fresh(&used, p[0]).ok_or_else(|| stuck(format!("no high neighbour for end {}", p[0])))?;
            used.insert(w);
            p.push(w);
        }
    }
    // Cherry matching: a length-2 path centred at each other low vertex.
    let mut cherries = Vec::new();
    for x in side.iter().filter(|&x| x != s1 && x != s2 && is_low(x)) {
        let y = fresh(&used, x).ok_or_else(|| stuck(format!("no cherry leaves for {x}")))?;
        used.insert(y);
        let z = fresh(&used, x).ok_or_else(|| stuck(format!("no second cherry leaf for {x}")))?;
        used.insert(z);
        used.insert(x);
        cherries.push([y, x, z]);
    }
    // Thread every cherry onto p1 through common high neighbours.
    for ch in cherries {
        let end = *p1.last().unwrap();
        let c = g
            .neighbors(end)
            .find(|&w| side.contains(w) && !used.contains(w) && !is_low(w) && g.has_edge(w, ch[0]))
            .ok_or_else(|| stuck(format!("no common neighbour joins {end} and {}", ch[0])))?;
        used.insert(c);
        p1.push(c);
        p1.extend(ch);
    }
    let (e1, e2) = (*p1.last().unwrap(), *p2.last().unwrap());
    let mut rest = side.difference(&used);
    rest.insert(e1);
    rest.insert(e2);
    let mid = ham_path_dirac_in(g, &rest, e1, e2)?;
    let mut order = p1;
    order.extend(&mid.order[1..mid.order.len() - 1]);
    order.extend(p2.into_iter().rev());
    Ok(order)
}

/// Hamilton cycle of `g` from a cut `(X, Y)` with `|Y| ≤ |X|` whose crossing
/// graph is dense, given a linear forest in `g[X]` with exactly `|X| - |Y|`
/// edges.
pub fn ham_cycle_near_bipartite(
    g: &Graph,
    cut: &Cut,
    witness: &LinearForest,
    params: NearBipartiteParams,
) -> Result<HamCycleCert> {
    let m = g.vertex_count();
    let mf = m as f64;
    let (a_side, b_side) = (&cut.x, &cut.y);
    let (na, nb) = (a_side.len(), b_side.len());
    if nb > na || (na - nb) as f64 > params.eps * mf {
        return precondition(format!("need |Y| <= |X| <= |Y| + eps·m, got |X| = {na}, |Y| = {nb}"));
    }
    if witness.len() != na - nb {
        return precondition(format!("witness has {} edges, expected |X| - |Y| = {}", witness.len(), na - nb));
    }
    witness.validate(g, a_side)?;
    let bip = g.bipartite_restriction(a_side, b_side);
    let crossing = bip.edge_count();
    if (crossing as f64) < (0.25 - params.eps) * mf * mf {
        return precondition(format!("G[X,Y] has {crossing} edges < (1/4 - eps)m²"));
    }
    let delta = bip.min_degree();
    if (delta as f64) < params.gamma * mf / 3.0 {
        return precondition(format!("G[X,Y] has minimum degree {delta} < gamma·m/3"));
    }

    let threshold = params.low * mf;
    let low: Vec<bool> = (0..m).map(|v| bip.degree(v) as f64 <= threshold).collect();
    let mut used = witness.vertices(m);
    let fresh = |used: &VertexSet, v: usize| bip.neighbors(v).find(|&w| !used.contains(w) && !low[w]);

    let mut pieces: Vec<Vec<usize>> = witness.paths(m);
    // Low path ends get one extra crossing edge.
    for p in pieces.iter_mut() {
        for _ in 0..2 {
            let end = *p.last().unwrap();
            if low[end] {
                let w = fresh(&used, end).ok_or_else(|| stuck(format!("no extension edge at low end {end}")))?;
                used.insert(w);
                p.push(w);
            }
            p.reverse();
        }
    }
    // Cherries for low vertices not on the forest.
    let forest_vertices = witness.vertices(m);
    for x in (0..m).filter(|&x| low[x] && !forest_vertices.contains(x)) {
        used.insert(x);
        let y = fresh(&used, x).ok_or_else(|| stuck(format!("no cherry leaves for {x}")))?;
        used.insert(y);
        let z = fresh(&used, x).ok_or_else(|| stuck(format!("no second cherry leaf for {x}")))?;
        used.insert(z);
        pieces.push(vec![y, x, z]);
    }

    // Merge all pieces into one path with connectors of length 2 or 3.
    let mut path: Vec<usize> = Vec::new();
    for q in pieces {
        if path.is_empty() {
            path = q;
            continue;
        }
        let x = *path.last().unwrap();
        let y = q[0];
        let same_side = a_side.contains(x) == a_side.contains(y);
        let common = |used: &VertexSet, x: usize, y: usize| {
            bip.neighbors(x).find(|&w| !used.contains(w) && !low[w] && bip.has_edge(w, y))
        };
        if same_side {
            let c = common(&used, x, y).ok_or_else(|| stuck(format!("ends {x} and {y} have no free common neighbour")))?;
            used.insert(c);
            path.push(c);
        } else {
            // x to a new x' on y's side, then x' and y share a neighbour.
            let pair = bip
                .neighbors(x)
                .filter(|&w| !used.contains(w) && !low[w])
                .find_map(|w| {
                    bip.neighbors(w)
                        .find(|&c| c != x && !used.contains(c) && !low[c] && bip.has_edge(c, y))
                        .map(|c| (w, c))
                })
                .ok_or_else(|| stuck(format!("no length-3 connector between {x} and {y}")))?;
            used.insert(pair.0);
            used.insert(pair.1);
            path.push(pair.0);
            path.push(pair.1);
        }
        path.extend(q);
    }
    if path.is_empty() {
        let a = a_side.first().ok_or_else(|| stuck("empty side".into()))?;
        let b = fresh(&used, a).ok_or_else(|| stuck(format!("vertex {a} has no crossing neighbour")))?;
        path = vec![a, b];
        used.insert(a);
        used.insert(b);
    }
    // Make the ends lie on opposite sides, with the X end first.
    let (first, last) = (path[0], *path.last().unwrap());
    if a_side.contains(first) == a_side.contains(last) {
        let w = fresh(&used, last).ok_or_else(|| stuck(format!("cannot extend the path at {last}")))?;
        used.insert(w);
        path.push(w);
    }
    if !a_side.contains(path[0]) {
        path.reverse();
    }
    let (a_end, b_end) = (path[0], *path.last().unwrap());

    let mut rest = VertexSet::full(m).difference(&used);
    rest.insert(a_end);
    rest.insert(b_end);
    let (ra, rb) = (a_side.intersection(&rest), b_side.intersection(&rest));
    if ra.len() != rb.len() {
        return Err(stuck(format!("remainder is unbalanced: {} vs {}", ra.len(), rb.len())));
    }
    let closing = ham_path_bipartite(g, &ra, &rb, a_end, b_end)?;
    let mut order = path;
    order.extend(closing.order[1..closing.order.len() - 1].iter().rev());
    let cert = HamCycleCert { order };
    cert.validate(g, &g.all_vertices())
        .map_err(|e| stuck(format!("cycle certificate rejected: {e}")))?;
    Ok(cert)
}
