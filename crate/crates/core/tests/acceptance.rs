//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;

use cycsub::constructions::{build_extremal, build_knn};
use cycsub::counting::{cyc_count_exact, estimate_h, p_exact_knn, Decider};
use cycsub::graph::iso::is_isomorphic;
use cycsub::numerics::{emit_f_alpha_curve, g_roots};
use cycsub::verify::{run_suite, Suite, SuiteReport, VerifyOptions};
use cycsub::Graph;

type Outcome = Result<String, String>;

fn suites(list: &[Suite]) -> Outcome {
    let opts = VerifyOptions::default();
    let mut lines = Vec::new();
    let mut ok = true;
    for &s in list {
        let r: SuiteReport = run_suite(s, &opts).map_err(|e| format!("{s}: {e}"))?;
        for c in &r.checks {
            lines.push(format!("    [{}] {}: {}", if c.passed { "ok" } else { "FAIL" }, c.name, c.detail));
        }
        ok &= r.passed;
    }
    let text = lines.join("\n");
    if ok {
        Ok(text)
    } else {
        Err(text)
    }
}

fn binom(n: u64, k: u64) -> BigInt {
    (0..k).fold(BigInt::from(1), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}

fn exact_counts() -> Outcome {
    let mut notes = Vec::new();
    let k4 = cyc_count_exact(&Graph::complete(4)).map_err(|e| e.to_string())?;
    let c5 = cyc_count_exact(&Graph::cycle(5)).map_err(|e| e.to_string())?;
    let oct = cyc_count_exact(&build_extremal(3, &[4]).unwrap().graph).map_err(|e| e.to_string())?;
    if k4.cyclic_count != 5 || c5.cyclic_count != 1 || oct.cyclic_count != 30 || oct.p_exact != "15/32" {
        return Err(format!(
            "K4 {}, C5 {}, octahedron {} ({})",
            k4.cyclic_count, c5.cyclic_count, oct.cyclic_count, oct.p_exact
        ));
    }
    notes.push("    Cyc(K4) = 5, Cyc(C5) = 1, Cyc(octahedron) = 30, p = 15/32".to_string());
    for n in 1..=6u64 {
        let formula = BigRational::new(
            binom(2 * n, n) - BigInt::from(1) - BigInt::from(n * n),
            BigInt::from(1) << (2 * n),
        );
        let counted = cyc_count_exact(&build_knn(n as usize).unwrap()).map_err(|e| e.to_string())?.p();
        let closed = p_exact_knn(n as usize);
        if counted != formula || closed != formula {
            return Err(format!("K_{{{n},{n}}}: counted {counted}, formula {formula}, closed form {closed}"));
        }
        notes.push(format!("    p(K_{{{n},{n}}}) = {formula}"));
    }
    Ok(notes.join("\n"))
}

fn monte_carlo() -> Outcome {
    let eg = build_extremal(3, &[4]).unwrap();
    let run = |workers| {
        estimate_h(&eg.graph, 0.5, 100_000, 2024, Decider::Auto, workers)
            .map(|r| serde_json::to_string(&r).unwrap())
            .map_err(|e| e.to_string())
    };
    let (a, b, c) = (run(1)?, run(1)?, run(8)?);
    if a != b || a != c {
        return Err("reports differ between runs or worker counts".into());
    }
    let r = estimate_h(&eg.graph, 0.5, 100_000, 2024, Decider::Auto, 8).map_err(|e| e.to_string())?;
    let dev = (r.p_hat - 15.0 / 32.0).abs();
    let line = format!(
        "    p_hat = {:.6}, SE = {:.6}, |p_hat - 15/32| = {:.2} SE, undecided = {}",
        r.p_hat,
        r.std_error,
        dev / r.std_error,
        r.undecided_fraction
    );
    if dev <= 4.0 * r.std_error && r.undecided_fraction == 0.0 {
        Ok(line)
    } else {
        Err(line)
    }
}

fn five_regular_on_eight() -> Outcome {
    let family = build_extremal(4, &[5]).unwrap().graph;
    let graphs = [
        ("complement of C8", Graph::cycle(8).complement()),
        (
            "complement of C5 + C3",
            Graph::cycle(5).disjoint_union(&Graph::cycle(3)).complement(),
        ),
        (
            "complement of C4 + C4",
            Graph::cycle(4).disjoint_union(&Graph::cycle(4)).complement(),
        ),
    ];
    let mut lines = vec![format!("    {:<24} {:>6} {:>10} {:>10}  family member", "graph", "Cyc", "p", "p (float)")];
    let mut members = 0;
    for (name, g) in &graphs {
        if !g.is_regular(5) {
            return Err(format!("{name} is not 5-regular"));
        }
        let r = cyc_count_exact(g).map_err(|e| e.to_string())?;
        let member = is_isomorphic(g, &family);
        members += usize::from(member);
        lines.push(format!(
            "    {:<24} {:>6} {:>10} {:>10.6}  {}",
            name,
            r.cyclic_count,
            r.p_exact,
            r.p_float,
            if member { "yes" } else { "no" }
        ));
    }
    if members == 1 {
        Ok(lines.join("\n"))
    } else {
        Err(format!("{members} family members identified\n{}", lines.join("\n")))
    }
}

fn figure() -> Outcome {
    let t = emit_f_alpha_curve(0.2, 20.0, 400).map_err(|e| e.to_string())?;
    let roots = g_roots().map_err(|e| e.to_string())?;
    let dir = std::path::Path::new(env!("CARGO_TARGET_TMPDIR"));
    let (csv, svg) = (dir.join("f_alpha.csv"), dir.join("f_alpha.svg"));
    std::fs::write(&csv, t.to_csv()).map_err(|e| e.to_string())?;
    std::fs::write(&svg, t.to_svg()).map_err(|e| e.to_string())?;
    let marks: Vec<f64> = t.rows.iter().filter(|r| r.is_extremum).map(|r| r.alpha).collect();
    let want = [roots.r1.sqrt(), 2.0, roots.r3.sqrt()];
    let line = format!(
        "    markers at {marks:?}, pattern {}, rows {}, written to {}",
        t.pattern.join("/"),
        t.rows.len(),
        dir.display()
    );
    let svg_text = std::fs::read_to_string(&svg).map_err(|e| e.to_string())?;
    if marks == want && t.pattern_ok && t.above_half && svg_text.matches("<circle").count() == 3 {
        Ok(line)
    } else {
        Err(line)
    }
}

fn main() -> ExitCode {
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome>)> = vec![
        ("1 exact counts", Box::new(exact_counts)),
        ("2 criterion vs exact decision", Box::new(|| suites(&[Suite::GnCriterion]))),
        ("3 closed-form p and its expansion", Box::new(|| suites(&[Suite::Pn]))),
        ("4 calculus", Box::new(|| suites(&[Suite::Calculus]))),
        (
            "5 binomial estimates",
            Box::new(|| suites(&[Suite::Chernoff, Suite::FnSecond, Suite::Bindiff])),
        ),
        ("6 cover products on balanced cuts", Box::new(|| suites(&[Suite::BalancedCut]))),
        ("7 constructive builders", Box::new(|| suites(&[Suite::Builders]))),
        ("8 Monte Carlo calibration", Box::new(monte_carlo)),
        ("9 5-regular graphs on 8 vertices", Box::new(five_regular_on_eight)),
        ("10 curve artifact", Box::new(figure)),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        let start = Instant::now();
        let out = f();
        let secs = start.elapsed().as_secs_f64();
        match out {
            Ok(detail) => println!("PASS criterion {name} ({secs:.1}s)\n{detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {name} ({secs:.1}s)\n{detail}");
            }
        }
    }
    if failed == 0 {
        println!("all criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
