use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{precondition, Error, Result};
use crate::graph::Graph;

const MAX_RESTARTS: u64 = 200;

/// One run of the pairing model with sequential rejection: points are
/// paired at random, but a pair that would create a loop or a double edge
/// is redrawn instead of discarding the whole pairing. Returns `None` when
/// the remaining points admit no legal pair.
fn pairing_attempt(m: usize, d: usize, rng: &mut ChaCha8Rng) -> Option<Graph> {
    let mut points: Vec<usize> = (0..m).flat_map(|v| std::iter::repeat_n(v, d)).collect();
    let mut g = Graph::new(m);
    while !points.is_empty() {
        let mut picked = None;
        for _ in 0..64 {
            let i = rng.random_range(0..points.len());
            let j = rng.random_range(0..points.len());
            let (u, v) = (points[i], points[j]);
            if u != v && !g.has_edge(u, v) {
                picked = Some((i, j));
                break;
            }
        }
        let (i, j) = match picked {
            Some(p) => p,
            None => {
                let mut legal = Vec::new();
                for i in 0..points.len() {
                    for j in i + 1..points.len() {
                        if points[i] != points[j] && !g.has_edge(points[i], points[j]) {
                            legal.push((i, j));
                        }
                    }
                }
                if legal.is_empty() {
                    return None;
                }
                legal[rng.random_range(0..legal.len())]
            }
        };
        g.add_edge(points[i], points[j]);
        let (hi, lo) = if i > j { (i, j) } else { (j, i) };
        points.swap_remove(hi);
        points.swap_remove(lo);
    }
    Some(g)
}

/// Random `degree`-regular graph on `n_vertices` vertices, deterministic in
/// `seed`. Dense targets are sampled as complements of sparse ones.
pub fn random_regular_graph(n_vertices: usize, degree: usize, seed: u64) -> Result<Graph> {
    if degree >= n_vertices {
        return precondition(format!("degree {degree} must be below the vertex count {n_vertices}"));
    }
    if (degree * n_vertices) % 2 == 1 {
        return precondition(format!("degree·vertices = {} is odd", degree * n_vertices));
    }
    let flip = 2 * degree > n_vertices - 1;
    let d = if flip { n_vertices - 1 - degree } else { degree };
    for restart in 0..MAX_RESTARTS {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(restart);
        if let Some(g) = pairing_attempt(n_vertices, d, &mut rng) {
            return Ok(if flip { g.complement() } else { g });
        }
    }
    Err(Error::Construction(format!(
        "pairing model failed {MAX_RESTARTS} times for ({n_vertices}, {degree})"
    )))
}
