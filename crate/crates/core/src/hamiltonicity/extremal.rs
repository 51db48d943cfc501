use crate::constructions::ExtremalGraph;
use crate::graph::VertexSet;

/// Number of maximal runs of `s` along `cycle`, read cyclically. A fully
/// chosen cycle is a single run.
pub(crate) fn runs_on_cycle(cycle: &[usize], s: &VertexSet) -> (usize, usize) {
    let l = cycle.len();
    let chosen = cycle.iter().filter(|&&v| s.contains(v)).count();
    if chosen == l {
        return (chosen, 1);
    }
    let runs = (0..l)
        .filter(|&i| s.contains(cycle[i]) && !s.contains(cycle[(i + l - 1) % l]))
        .count();
    (chosen, runs)
}

/// Decides whether `eg.graph[s]` is Hamiltonian without search.
///
/// With `T = A ∩ s` and `b = |B ∩ s| ≥ 1`, part B is independent, so a
/// Hamilton cycle alternates between single B-vertices and `b` paths that
/// partition `T`. The fewest paths covering `T` is the number of runs `R` of
/// `T` along the 2-factor, hence the test is `R ≤ b ≤ |T|`. With `b = 0` the
/// cycle lives inside the 2-factor, so `T` must be one whole cycle.
pub fn gn_criterion(eg: &ExtremalGraph, s: &VertexSet) -> bool {
    if s.len() < 3 {
        return false;
    }
    let b = eg.part_b.intersection_len(s);
    if b == 0 {
        let mut hit = eg.cycles.iter().filter(|c| c.iter().any(|&v| s.contains(v)));
        return match (hit.next(), hit.next()) {
            (Some(c), None) => c.iter().all(|&v| s.contains(v)),
            _ => false,
        };
    }
    let (mut t, mut r) = (0, 0);
    for c in &eg.cycles {
        let (chosen, runs) = runs_on_cycle(c, s);
        t += chosen;
        r += runs;
    }
    t >= b && r <= b
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::build_extremal;

    #[test]
    fn octahedron_examples() {
        let eg = build_extremal(3, &[4]).unwrap();
        assert!(gn_criterion(&eg, &eg.graph.all_vertices()));
        assert!(gn_criterion(&eg, &eg.part_a));
        // Two opposite cycle vertices and one B vertex induce a path.
        let s = VertexSet::from_iter(6, [0, 2, 4]);
        assert!(!gn_criterion(&eg, &s));
        assert!(!gn_criterion(&eg, &VertexSet::from_iter(6, [0, 4])));
    }

    #[test]
    fn run_counting() {
        let c: Vec<usize> = (0..6).collect();
        assert_eq!(runs_on_cycle(&c, &VertexSet::from_iter(6, [0, 1, 5])), (3, 1));
        assert_eq!(runs_on_cycle(&c, &VertexSet::from_iter(6, [0, 2, 4])), (3, 3));
        assert_eq!(runs_on_cycle(&c, &VertexSet::full(6)), (6, 1));
        assert_eq!(runs_on_cycle(&c, &VertexSet::empty(6)), (0, 0));
    }
}
