//! Named check suites with a pass/fail table, plus the seeded instance
//! generators the builder suite runs on.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::analysis::{balanced_cut_cover_product, random_regular_graph};
use crate::constructions::{build_extremal, cycle_types, enumerate_regular_complements};
use crate::counting::{cyc_count_exact, p_exact_extremal};
use crate::error::{precondition, Error, Result};
use crate::graph::forest::linear_forest_lower_bound;
use crate::graph::{Cut, Graph, LinearForest, VertexSet};
use crate::hamiltonicity::{
    gn_criterion, ham_cycle_near_bipartite, ham_cycle_two_cliques, ham_path_bipartite, ham_path_dirac,
    is_hamiltonian_exact, NearBipartiteParams, TwoCliquesParams,
};
use crate::numerics::{
    bindiff_check, binom_tail_exact, chernoff_check, emit_f_alpha_curve, f_alpha, fn_second_estimate_check, g,
    g_roots, pn_expansion_check, window_m1_m2,
};
use crate::par;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    BalancedCut,
    Chernoff,
    Bindiff,
    Pn,
    FnSecond,
    Calculus,
    GnCriterion,
    Builders,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::BalancedCut,
        Suite::Chernoff,
        Suite::Bindiff,
        Suite::Pn,
        Suite::FnSecond,
        Suite::Calculus,
        Suite::GnCriterion,
        Suite::Builders,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::BalancedCut => "balancedcut",
            Suite::Chernoff => "chernoff",
            Suite::Bindiff => "bindiff",
            Suite::Pn => "pn",
            Suite::FnSecond => "fnsecond",
            Suite::Calculus => "calculus",
            Suite::GnCriterion => "gncriterion",
            Suite::Builders => "builders",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown suite '{s}'")))
    }
}

/// Scale knobs shared by the suites. `None` means the suite default.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyOptions {
    /// Restricts size-indexed suites to one `n`.
    pub n: Option<usize>,
    /// Number of random instances.
    pub instances: Option<usize>,
    /// Vertex count of builder instances.
    pub m: Option<usize>,
    pub seed: u64,
    pub workers: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            n: None,
            instances: None,
            m: None,
            seed: 1,
            workers: par::AUTO,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub passed: bool,
    pub checks: Vec<Check>,
}

fn check(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Check {
    Check {
        name: name.into(),
        passed,
        detail: detail.into(),
    }
}

pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> Result<SuiteReport> {
    let checks = match suite {
        Suite::BalancedCut => balancedcut(opts)?,
        Suite::Chernoff => chernoff(opts)?,
        Suite::Bindiff => bindiff()?,
        Suite::Pn => pn(opts)?,
        Suite::FnSecond => fnsecond(opts)?,
        Suite::Calculus => calculus()?,
        Suite::GnCriterion => gncriterion(opts)?,
        Suite::Builders => builders(opts)?,
    };
    Ok(SuiteReport {
        suite,
        passed: checks.iter().all(|c| c.passed),
        checks,
    })
}

fn calculus() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    out.push(check("g(4) = 0", g(4.0) == 0.0, format!("g(4) = {:e}", g(4.0))));
    let r = g_roots()?;
    let s = 4.0 * 3f64.sqrt();
    out.push(check(
        "r1 in (0, 8 - 4√3)",
        r.r1 > 0.0 && r.r1 < 8.0 - s && r.g_r1.abs() <= 1e-12,
        format!("r1 = {:.15}, g(r1) = {:e}", r.r1, r.g_r1),
    ));
    out.push(check(
        "r3 in (8 + 4√3, ∞)",
        r.r3 > 8.0 + s && r.g_r3.abs() <= 1e-12,
        format!("r3 = {:.15}, g(r3) = {:e}", r.r3, r.g_r3),
    ));
    out.push(check("sign pattern of g", r.sign_pattern_ok, "+ - + - on a log grid"));
    let f2 = f_alpha(2.0)?;
    out.push(check(
        "f(2) = 0.52050 ± 1e-4 and > 1/2",
        (f2 - 0.52050).abs() <= 1e-4 && f2 > 0.5,
        format!("f(2) = {f2:.15}"),
    ));
    let curve = emit_f_alpha_curve(0.2, 20.0, 400)?;
    out.push(check(
        "grid minimum is f(2)",
        (curve.min_value - f2).abs() <= 1e-3,
        format!("min {:.15} at alpha {}", curve.min_value, curve.argmin),
    ));
    out.push(check("grid values > 1/2", curve.above_half, format!("{} rows", curve.rows.len())));
    out.push(check(
        "increase, decrease, increase, decrease",
        curve.pattern_ok,
        curve.pattern.join(", "),
    ));
    let f1 = f_alpha(1.0)?;
    out.push(check("f(1) >= 0.52", f1 >= 0.52, format!("f(1) = {f1:.15}")));
    let mut bad = 0;
    for i in 0..100 {
        for j in 0..100 {
            let a = 0.1 + 9.9 * i as f64 / 99.0;
            let b = 0.1 + 9.9 * j as f64 / 99.0;
            if !window_m1_m2(a, b)?.holds {
                bad += 1;
            }
        }
    }
    out.push(check("I[-m1, m2] >= f(alpha)", bad == 0, format!("{bad} of 10000 grid points fail")));
    Ok(out)
}

fn chernoff(opts: &VerifyOptions) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let f41 = binom_tail_exact(4, 1)?;
    let want = BigRational::new(BigInt::from(93), BigInt::from(256));
    out.push(check("f_4(1) = 93/256", f41 == want, format!("f_4(1) = {f41}")));
    let top = opts.n.unwrap_or(200);
    let (lo, hi) = if opts.n.is_some() { (top, top) } else { (1, top) };
    let mut fails = Vec::new();
    let mut worst = 0f64;
    for n in lo..=hi {
        let r = chernoff_check(n, n)?;
        worst = worst.max(r.worst_ratio);
        if !r.holds {
            fails.push(n);
        }
    }
    out.push(check(
        format!("f_n(t) <= exp(-t²/(3n+t)), 1 <= t <= n, n in {lo}..={hi}"),
        fails.is_empty(),
        format!("worst ratio {worst:.6}, failing n {fails:?}"),
    ));
    Ok(out)
}

fn fnsecond(opts: &VerifyOptions) -> Result<Vec<Check>> {
    let ns = match opts.n {
        Some(n) => vec![n],
        None => vec![10_000, 250_000],
    };
    ns.into_iter()
        .map(|n| {
            let r = fn_second_estimate_check(n)?;
            Ok(check(
                format!("second estimate, n = {n}"),
                r.holds && r.max_ratio <= 1.0,
                format!("{} values of t, max bound ratio {:.6}", r.rows.len(), r.max_ratio),
            ))
        })
        .collect()
}

fn bindiff() -> Result<Vec<Check>> {
    [(1, 1), (3, 5), (8, 8)]
        .into_iter()
        .map(|(n, m)| {
            let r = bindiff_check(n, m)?;
            Ok(check(
                format!("X + m - Y ~ B(n + m, 1/2), (n, m) = ({n}, {m})"),
                r.equal,
                format!("{} mismatching values", r.mismatches.len()),
            ))
        })
        .collect()
}

fn pn(opts: &VerifyOptions) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let small: Vec<usize> = match opts.n {
        Some(n) if n <= 5 => vec![n],
        Some(_) => Vec::new(),
        None => (2..=5).collect(),
    };
    for n in small {
        let mut bad = Vec::new();
        let types = cycle_types(n);
        for t in &types {
            let eg = build_extremal(n, t)?;
            if cyc_count_exact(&eg.graph)?.p() != p_exact_extremal(n, t)? {
                bad.push(t.clone());
            }
        }
        out.push(check(
            format!("closed form equals enumeration, n = {n}"),
            bad.is_empty(),
            format!("{} cycle types, mismatches {bad:?}", types.len()),
        ));
    }
    let large: Vec<usize> = match opts.n {
        Some(n) if n > 5 => vec![n],
        Some(_) => Vec::new(),
        None => vec![64, 128, 256, 512],
    };
    for row in pn_expansion_check(&large, true)? {
        out.push(check(
            format!("n^1.5 |p_n - 1/2 - 1.5/sqrt(n pi)| <= 2, n = {}", row.n),
            row.scaled_residual <= 2.0,
            format!("p_n = {:.15}, scaled residual {:.6}", row.p, row.scaled_residual),
        ));
    }
    Ok(out)
}

fn gncriterion(opts: &VerifyOptions) -> Result<Vec<Check>> {
    let ns: Vec<usize> = match opts.n {
        Some(n) => vec![n],
        None => (2..=5).collect(),
    };
    let mut out = Vec::new();
    for n in ns {
        if !(2..=10).contains(&n) {
            return precondition("gncriterion supports 2 <= n <= 10");
        }
        let types = cycle_types(n);
        let per_type = par::map_indexed(types.len(), opts.workers, |i| -> Result<(u64, u64)> {
            let eg = build_extremal(n, &types[i])?;
            let m = 2 * n;
            let (mut agree, mut total) = (0u64, 0u64);
            for mask in 0u64..1 << m {
                let s = VertexSet::from_mask(m, mask);
                let dp = is_hamiltonian_exact(&eg.graph, &s)?.is_hamiltonian();
                total += 1;
                agree += u64::from(dp == gn_criterion(&eg, &s));
            }
            Ok((agree, total))
        });
        let (mut agree, mut total) = (0, 0);
        for r in per_type {
            let (a, t) = r?;
            agree += a;
            total += t;
        }
        out.push(check(
            format!("criterion agrees with the exact decision, n = {n}"),
            agree == total,
            format!("{agree} of {total} subsets over {} cycle types", types.len()),
        ));
    }
    Ok(out)
}

fn all_balanced_cuts(m: usize) -> impl Iterator<Item = Cut> {
    // Cuts are unordered, so vertex 0 always goes on the first side.
    let h = m / 2;
    (0u64..1 << m)
        .filter(move |mask| mask & 1 == 1 && mask.count_ones() as usize == h)
        .map(move |mask| Cut::from_side(VertexSet::from_mask(m, mask)))
}

fn balancedcut(opts: &VerifyOptions) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let ns: Vec<usize> = match opts.n {
        Some(n) => vec![n],
        None => vec![2, 3, 4],
    };
    for n in ns.iter().copied().filter(|&n| n <= 4) {
        let graphs = enumerate_regular_complements(n)?;
        let (mut cuts, mut bad) = (0, 0);
        for g in &graphs {
            for cut in all_balanced_cuts(2 * n) {
                cuts += 1;
                if !balanced_cut_cover_product(g, &cut)?.holds {
                    bad += 1;
                }
            }
        }
        out.push(check(
            format!("(a+1)(b+1) >= n+1 on every balanced cut, n = {n}"),
            bad == 0,
            format!("{} graphs, {cuts} cuts, {bad} violations", graphs.len()),
        ));
    }
    let instances = opts.instances.unwrap_or(200);
    let n_max = opts.n.unwrap_or(10).clamp(2, 10);
    let seed = opts.seed;
    let results = par::map_indexed(instances, opts.workers, |i| -> Result<(usize, usize)> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(i as u64);
        let n = rng.random_range(2..=n_max);
        let g = random_regular_graph(2 * n, n + 1, rng.random())?;
        let mut verts: Vec<usize> = (0..2 * n).collect();
        let mut bad = 0;
        for _ in 0..100 {
            verts.shuffle(&mut rng);
            let cut = Cut::from_side(VertexSet::from_iter(2 * n, verts[..n].iter().copied()));
            if !balanced_cut_cover_product(&g, &cut)?.holds {
                bad += 1;
            }
        }
        Ok((100, bad))
    });
    let (mut cuts, mut bad) = (0, 0);
    for r in results {
        let (c, b) = r?;
        cuts += c;
        bad += b;
    }
    out.push(check(
        format!("random regular instances, n <= {n_max}"),
        bad == 0,
        format!("{instances} graphs, {cuts} cuts, {bad} violations"),
    ));
    Ok(out)
}

/// Two near-cliques of about `m/2` vertices, each missing at most
/// `m²/10⁴` edges, joined by a handful of random crossing edges.
pub fn two_cliques_instance(m: usize, seed: u64) -> (Graph, Cut) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let spread = m / 100;
    let s = m / 2 - spread + rng.random_range(0..=2 * spread);
    let mut g = Graph::complete(s).disjoint_union(&Graph::complete(m - s));
    for (lo, hi) in [(0, s), (s, m)] {
        for _ in 0..rng.random_range(0..=m * m / 10_000) {
            let u = rng.random_range(lo..hi);
            let v = rng.random_range(lo..hi);
            if u != v {
                g.remove_edge(u, v);
            }
        }
    }
    // Two disjoint crossing edges are always present.
    g.add_edge(0, s);
    g.add_edge(1, s + 1);
    for _ in 0..rng.random_range(0..=20) {
        g.add_edge(rng.random_range(0..s), rng.random_range(s..m));
    }
    (g, Cut::from_side(VertexSet::range(m, 0..s)))
}

/// A random induced subgraph of an extremal graph on `2n` vertices whose
/// cut is nearly balanced with the 2-factor side the larger one, and a
/// linear forest making up the difference.
pub fn near_bipartite_instance(n: usize, eps: f64, seed: u64) -> Result<(Graph, Cut, LinearForest)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = rng.random_range(1..=4usize).min((n + 1) / 3);
    let mut lengths = Vec::with_capacity(k);
    let mut left = n + 1;
    for i in 0..k - 1 {
        let l = rng.random_range(3..=left - 3 * (k - 1 - i));
        lengths.push(l);
        left -= l;
    }
    lengths.push(left);
    let eg = build_extremal(n, &lengths)?;
    for _ in 0..10_000 {
        let s = VertexSet::from_iter(2 * n, (0..2 * n).filter(|_| rng.random_bool(0.5)));
        let (na, nb) = (eg.part_a.intersection_len(&s), eg.part_b.intersection_len(&s));
        if na < nb || (na - nb) as f64 > eps * s.len() as f64 {
            continue;
        }
        let (h, map) = eg.graph.induced(&s);
        let x = VertexSet::from_iter(h.vertex_count(), (0..map.len()).filter(|&i| eg.part_a.contains(map[i])));
        let forest = linear_forest_lower_bound(&h, &x);
        if forest.len() < na - nb {
            continue;
        }
        let cut = Cut::from_side(x);
        return Ok((h, cut, forest.truncated(na - nb)));
    }
    Err(Error::Construction("no admissible subset in 10000 draws".into()))
}

/// Random graph on `m` vertices topped up to minimum degree `m/2 + 1`.
pub fn dirac_instance(m: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new(m);
    for u in 0..m {
        for v in u + 1..m {
            if rng.random_bool(0.5) {
                g.add_edge(u, v);
            }
        }
    }
    let need = m / 2 + 1;
    for v in 0..m {
        while g.degree(v) < need {
            let u = rng.random_range(0..m);
            if u != v {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Random balanced bipartite graph on `2h` vertices, sides `0..h` and
/// `h..2h`, topped up to crossing minimum degree `⌈(h + 2)/2⌉`.
pub fn bipartite_instance(h: usize, seed: u64) -> (Graph, VertexSet, VertexSet) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = 2 * h;
    let mut g = Graph::new(m);
    for u in 0..h {
        for v in h..m {
            if rng.random_bool(0.5) {
                g.add_edge(u, v);
            }
        }
    }
    let need = (h + 2).div_ceil(2);
    for v in 0..m {
        let other = if v < h { h..m } else { 0..h };
        while g.degree(v) < need {
            g.add_edge(v, rng.random_range(other.clone()));
        }
    }
    (g, VertexSet::range(m, 0..h), VertexSet::range(m, h..m))
}

fn tally(name: String, results: Vec<Result<()>>) -> Check {
    let total = results.len();
    let failures: Vec<String> = results
        .into_iter()
        .enumerate()
        .filter_map(|(i, r)| r.err().map(|e| format!("#{i}: {e}")))
        .collect();
    let detail = match failures.first() {
        None => format!("{total}/{total} certificates validated"),
        Some(first) => format!("{}/{total} certificates validated; first failure {first}", total - failures.len()),
    };
    check(name, failures.is_empty(), detail)
}

fn builders(opts: &VerifyOptions) -> Result<Vec<Check>> {
    let cycles = opts.instances.unwrap_or(50);
    let paths = opts.instances.map_or(100, |k| 2 * k);
    let m = opts.m.unwrap_or(600);
    let mp = (m / 3).max(8) & !1;
    let seed = opts.seed;
    let w = opts.workers;
    let sub = |i: usize, salt: u64| seed.wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ (salt << 32) ^ i as u64;

    let two = par::map_indexed(cycles, w, |i| {
        let (g, cut) = two_cliques_instance(m, sub(i, 1));
        ham_cycle_two_cliques(&g, &cut, TwoCliquesParams::default())?.validate(&g, &g.all_vertices())
    });
    let params = NearBipartiteParams::default();
    let near = par::map_indexed(cycles, w, |i| {
        let (g, cut, forest) = near_bipartite_instance(m, params.eps, sub(i, 2))?;
        ham_cycle_near_bipartite(&g, &cut, &forest, params)?.validate(&g, &g.all_vertices())
    });
    let dirac = par::map_indexed(paths, w, |i| {
        let g = dirac_instance(mp, sub(i, 3));
        let (a, b) = (i % mp, (i * 7 + 1) % mp);
        let b = if a == b { (b + 1) % mp } else { b };
        ham_path_dirac(&g, a, b)?.validate(&g, &g.all_vertices(), a, b)
    });
    let bip = par::map_indexed(paths, w, |i| {
        let h = mp / 2;
        let (g, l, r) = bipartite_instance(h, sub(i, 4));
        let (a, b) = (i % h, h + (i * 7) % h);
        ham_path_bipartite(&g, &l, &r, a, b)?.validate(&g, &l.union(&r), a, b)
    });
    Ok(vec![
        tally(format!("two near-cliques, m = {m}"), two),
        tally(format!("near-bipartite, about {m} vertices"), near),
        tally(format!("Dirac Hamilton paths, m = {mp}"), dirac),
        tally(format!("bipartite Hamilton paths, m = {mp}"), bip),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
            assert_eq!(serde_json::to_string(&s).unwrap(), format!("\"{}\"", s.name()));
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn fast_suites_pass() {
        let opts = VerifyOptions::default();
        for s in [Suite::Calculus, Suite::Bindiff] {
            let r = run_suite(s, &opts).unwrap();
            assert!(r.passed, "{r:?}");
        }
        let small = VerifyOptions {
            n: Some(3),
            instances: Some(5),
            ..Default::default()
        };
        for s in [Suite::GnCriterion, Suite::BalancedCut, Suite::Pn, Suite::Chernoff] {
            let r = run_suite(s, &small).unwrap();
            assert!(r.passed, "{r:?}");
        }
    }

    #[test]
    fn gn_check_counts_subsets() {
        let opts = VerifyOptions {
            n: Some(4),
            ..Default::default()
        };
        let r = run_suite(Suite::GnCriterion, &opts).unwrap();
        let types = cycle_types(4).len();
        assert!(r.checks[0].detail.starts_with(&format!("{0} of {0} subsets", 256 * types)));
    }

    #[test]
    fn small_builder_instances() {
        let opts = VerifyOptions {
            instances: Some(3),
            m: Some(200),
            ..Default::default()
        };
        let r = run_suite(Suite::Builders, &opts).unwrap();
        assert!(r.passed, "{r:?}");
    }

    #[test]
    fn generators_meet_their_promises() {
        let g = dirac_instance(60, 4);
        assert!(g.min_degree() >= 31);
        let (g, l, r) = bipartite_instance(30, 4);
        assert!(g.bipartite_restriction(&l, &r).min_degree() >= 16);
        assert_eq!(g.edges_within(&l) + g.edges_within(&r), 0);
        let (g, cut, f) = near_bipartite_instance(100, 0.05, 2).unwrap();
        assert_eq!(f.len(), cut.x.len() - cut.y.len());
        f.validate(&g, &cut.x).unwrap();
    }
}
