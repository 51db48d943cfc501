use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cycsub::analysis::{classify, near_bipartite_witness, two_cliques_witness, AnalysisParams, Case};
use cycsub::Graph;

const M: usize = 40;

fn top_up(g: &mut Graph, rng: &mut ChaCha8Rng) {
    let m = g.vertex_count();
    for v in 0..m {
        while 2 * g.degree(v) < m {
            let u = rng.random_range(0..m);
            if u != v {
                g.add_edge(u, v);
            }
        }
    }
}

fn two_cliques_ish(rng: &mut ChaCha8Rng) -> Graph {
    let h = M / 2;
    let mut g = Graph::complete(h).disjoint_union(&Graph::complete(h));
    for _ in 0..rng.random_range(0..=2) {
        g.add_edge(rng.random_range(0..h), rng.random_range(h..M));
    }
    // Cliques of size 20 have degree 19 < m/2; one matching edge each fixes it.
    for i in 0..h {
        g.add_edge(i, h + (i + rng.random_range(0..h)) % h);
    }
    top_up(&mut g, rng);
    g
}

fn bipartite_ish(rng: &mut ChaCha8Rng) -> Graph {
    let h = M / 2;
    let mut g = Graph::new(M);
    for u in 0..h {
        for v in h..M {
            if rng.random_bool(0.97) {
                g.add_edge(u, v);
            }
        }
    }
    for _ in 0..rng.random_range(0..=3) {
        let (u, v) = (rng.random_range(0..h), rng.random_range(0..h));
        if u != v {
            g.add_edge(u, v);
        }
    }
    top_up(&mut g, rng);
    g
}

fn random_dense(rng: &mut ChaCha8Rng) -> Graph {
    let mut g = Graph::new(M);
    for u in 0..M {
        for v in u + 1..M {
            if rng.random_bool(0.65) {
                g.add_edge(u, v);
            }
        }
    }
    top_up(&mut g, rng);
    g
}

fn reverify(g: &Graph, case: &Case, params: &AnalysisParams) -> bool {
    match case {
        Case::TwoCliques { a, .. } => two_cliques_witness(g, a, params).is_some(),
        Case::NearBipartite { a, .. } => near_bipartite_witness(g, a, params).is_some(),
        Case::BiDense { .. } => true,
    }
}

#[test]
fn planted_cases_are_recovered() {
    let params = AnalysisParams::default();
    let mut hits = [0usize; 3];
    for seed in 0..100u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for (k, g) in [two_cliques_ish(&mut rng), bipartite_ish(&mut rng), random_dense(&mut rng)].iter().enumerate() {
            let c = classify(g, &params).unwrap();
            assert!(reverify(g, &c.case, &params), "seed {seed}: witness does not re-verify");
            let ok = match (k, &c.case) {
                (0, Case::TwoCliques { .. }) => true,
                (1, Case::NearBipartite { .. }) => true,
                (2, Case::BiDense { holds, .. }) => *holds,
                _ => false,
            };
            hits[k] += usize::from(ok);
        }
    }
    assert!(hits.iter().all(|&h| h >= 95), "recovered {hits:?} of 100");
}
