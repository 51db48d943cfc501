use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use cycsub::graph::{graph6, iso::is_isomorphic};
use cycsub::Graph;
use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_cycsub"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn cycsub")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn json(o: &Output) -> Value {
    assert_eq!(code(o), 0, "stderr: {}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).expect("json output")
}

/// The result payload with the wall time blanked out.
fn without_time(mut v: Value) -> Value {
    v["manifest"]["wall_time_ms"] = Value::Null;
    v
}

fn write_graph(dir: &Path, name: &str, g: &Graph) -> String {
    let p = dir.join(name);
    std::fs::write(&p, graph6::encode(g) + "\n").unwrap();
    p.to_str().unwrap().to_string()
}

fn read_graph(p: &Path) -> Graph {
    graph6::decode(&std::fs::read_to_string(p).unwrap()).unwrap()
}

#[test]
fn construct_octahedron() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("oct.g6");
    let o = run(&["construct", "extremal", "--n", "3", "--cycles", "4", "--out", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let g = read_graph(&out);
    assert!(is_isomorphic(&g, &graph6::decode("E}lw").unwrap()));
    let side: Value = serde_json::from_str(&std::fs::read_to_string(dir.path().join("oct.g6.json")).unwrap()).unwrap();
    assert_eq!(side["result"]["family"], "extremal");
    assert_eq!(side["result"]["n"], 3);
    assert_eq!(side["result"]["degree_check"]["regular"], true);
    assert_eq!(side["manifest"]["subcommand"], "construct");
}

#[test]
fn construct_knn_to_stdout() {
    let o = run(&["construct", "knn", "--n", "2"]);
    assert_eq!(code(&o), 0);
    let g = graph6::decode(std::str::from_utf8(&o.stdout).unwrap()).unwrap();
    assert!(is_isomorphic(&g, &Graph::cycle(4)));
}

#[test]
fn construct_rejects_bad_parameters() {
    assert_eq!(code(&run(&["construct", "extremal", "--n", "4", "--cycles", "3,2"])), 2);
    assert_eq!(code(&run(&["construct", "competitor", "--k", "2"])), 2);
    assert_eq!(code(&run(&["construct", "knn"])), 2);
    assert_eq!(code(&run(&["construct", "nonsense", "--n", "3"])), 2);
}

#[test]
fn round_trip_all_families() {
    let dir = tempfile::tempdir().unwrap();
    let mut cases: Vec<(Vec<String>, usize)> = Vec::new();
    for n in 2..=6 {
        cases.push((vec!["knn".into(), "--n".into(), n.to_string()], 2 * n));
        if n >= 3 {
            cases.push((vec!["star".into(), "--n".into(), n.to_string()], 2 * n));
        }
        cases.push((
            vec!["extremal".into(), "--n".into(), n.to_string(), "--cycles".into(), (n + 1).to_string()],
            2 * n,
        ));
    }
    cases.push((vec!["extremal".into(), "--n".into(), "5".into(), "--cycles".into(), "3,3".into()], 10));
    cases.push((vec!["competitor".into(), "--k".into(), "3".into()], 18));
    for (i, (params, m)) in cases.into_iter().enumerate() {
        let out = dir.path().join(format!("g{i}.g6"));
        let mut args = vec!["construct".to_string()];
        args.extend(params.clone());
        args.extend(["--out".to_string(), out.to_str().unwrap().to_string()]);
        let o = bin().args(&args).output().unwrap();
        assert_eq!(code(&o), 0, "{params:?}: {}", String::from_utf8_lossy(&o.stderr));
        let g = read_graph(&out);
        assert_eq!(g.vertex_count(), m);
        let side: Value = serde_json::from_str(&std::fs::read_to_string(format!("{}.json", out.display())).unwrap()).unwrap();
        let again = graph6::decode(side["result"]["graph6"].as_str().unwrap()).unwrap();
        assert!(is_isomorphic(&g, &again));
        if m <= 12 {
            let c = json(&run(&["count", out.to_str().unwrap()]));
            let direct = cycsub::counting::cyc_count_exact(&g).unwrap();
            assert_eq!(c["result"]["cyclic_count"], direct.cyclic_count);
        }
    }
}

#[test]
fn count_examples_and_errors() {
    let dir = tempfile::tempdir().unwrap();
    let k4 = write_graph(dir.path(), "k4.g6", &Graph::complete(4));
    let hist = dir.path().join("h.csv");
    let v = json(&run(&["count", &k4, "--histogram", hist.to_str().unwrap()]));
    assert_eq!(v["result"]["cyclic_count"], 5);
    assert_eq!(v["result"]["p_exact"], "5/16");
    assert_eq!(std::fs::read_to_string(&hist).unwrap(), "size,count\n0,0\n1,0\n2,0\n3,4\n4,1\n");
    let digest = v["manifest"]["inputs"][0]["sha256"].as_str().unwrap();
    assert_eq!(digest.len(), 64);

    let big = write_graph(dir.path(), "big.g6", &Graph::cycle(21));
    assert_eq!(code(&run(&["count", &big])), 3);
    let empty = dir.path().join("empty.g6");
    std::fs::write(&empty, "").unwrap();
    assert_eq!(code(&run(&["count", empty.to_str().unwrap()])), 2);
    let junk = dir.path().join("junk.g6");
    std::fs::write(&junk, "C~~\n").unwrap();
    assert_eq!(code(&run(&["count", junk.to_str().unwrap()])), 2);
    assert_eq!(code(&run(&["count", "/nonexistent/file.g6"])), 2);
}

#[test]
fn count_reads_stdin() {
    let mut child = bin()
        .args(["count", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b">>graph6<<C~\n").unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(json(&o)["result"]["cyclic_count"], 5);
}

#[test]
fn count_workers_do_not_change_results() {
    let dir = tempfile::tempdir().unwrap();
    let g = cycsub::constructions::build_extremal(5, &[3, 3]).unwrap().graph;
    let f = write_graph(dir.path(), "g.g6", &g);
    let a = json(&run(&["count", &f, "--workers", "1"]));
    let b = json(&run(&["count", &f, "--workers", "4"]));
    assert_eq!(a["result"], b["result"]);
}

#[test]
fn estimate_octahedron() {
    let dir = tempfile::tempdir().unwrap();
    let oct = cycsub::constructions::build_extremal(3, &[4]).unwrap().graph;
    let f = write_graph(dir.path(), "oct.g6", &oct);
    let args = ["estimate", &f, "--p", "0.5", "--samples", "100000", "--seed", "7", "--workers", "1"];
    let a = json(&run(&args));
    let r = &a["result"];
    let (p, se) = (r["p_hat"].as_f64().unwrap(), r["std_error"].as_f64().unwrap());
    assert!((p - 15.0 / 32.0).abs() <= 4.0 * se, "p_hat {p} se {se}");
    assert_eq!(r["undecided"], 0);
    let b = json(&run(&args));
    assert_eq!(without_time(a.clone()), without_time(b));
    let c = json(&run(&["estimate", &f, "--p", "0.5", "--samples", "100000", "--seed", "7", "--workers", "8"]));
    assert_eq!(a["result"], c["result"]);
    let gn = json(&run(&[
        "estimate", &f, "--p", "0.5", "--samples", "100000", "--seed", "7", "--decider", "gn", "--cycles", "4",
    ]));
    assert_eq!(gn["result"], a["result"]);
}

#[test]
fn estimate_edge_cases() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = write_graph(dir.path(), "c5.g6", &Graph::cycle(5));
    let v = json(&run(&["estimate", &c5, "--p", "1", "--samples", "100"]));
    assert_eq!(v["result"]["p_hat"], 1.0);
    assert_eq!(code(&run(&["estimate", &c5, "--p", "1.5"])), 2);
    assert_eq!(code(&run(&["estimate", &c5, "--p", "0.5", "--decider", "gn", "--cycles", "3"])), 2);
}

#[test]
fn analyze_knn() {
    let dir = tempfile::tempdir().unwrap();
    let g = cycsub::constructions::build_knn(10).unwrap();
    let f = write_graph(dir.path(), "knn.g6", &g);
    let v = json(&run(&["analyze", &f]));
    assert_eq!(v["result"]["case"], "near_bipartite");
    assert_eq!(v["result"]["confidence"], "sampled");
    let small = write_graph(dir.path(), "knn5.g6", &cycsub::constructions::build_knn(5).unwrap());
    let v = json(&run(&["analyze", &small]));
    assert_eq!(v["result"]["case"], "near_bipartite");
    assert_eq!(v["result"]["confidence"], "exact");
    assert_eq!(code(&run(&["analyze", &f, "--eps", "0.5"])), 2);
}

#[test]
fn verify_suites() {
    let v = json(&run(&["verify", "calculus"]));
    assert_eq!(v["result"]["passed"], true);
    assert_eq!(v["result"]["suite"], "calculus");
    let v = json(&run(&["verify", "bindiff"]));
    assert_eq!(v["result"]["passed"], true);
    let v = json(&run(&["verify", "gncriterion", "--n", "4"]));
    let types = cycsub::constructions::cycle_types(4).len();
    let detail = v["result"]["checks"][0]["detail"].as_str().unwrap();
    assert!(detail.starts_with(&format!("{0} of {0} subsets", 256 * types)), "{detail}");
    assert_eq!(code(&run(&["verify", "nonsense"])), 2);
}

#[test]
fn curve_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("f.svg");
    let o = run(&["curve", "--points", "400", "--svg", svg.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let csv = String::from_utf8(o.stdout).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "alpha,f_alpha,is_extremum");
    assert_eq!(lines.len() - 1, 400 + 3);
    let marked: Vec<f64> = lines[1..]
        .iter()
        .filter(|l| l.ends_with("true"))
        .map(|l| l.split(',').next().unwrap().parse().unwrap())
        .collect();
    assert_eq!(marked.len(), 3);
    assert_eq!(marked[1], 2.0);
    let min = lines[1..]
        .iter()
        .map(|l| {
            let mut it = l.split(',');
            let a: f64 = it.next().unwrap().parse().unwrap();
            let f: f64 = it.next().unwrap().parse().unwrap();
            (a, f)
        })
        .min_by(|x, y| x.1.total_cmp(&y.1))
        .unwrap();
    assert!((min.0 - 2.0).abs() < 0.03);
    let s = std::fs::read_to_string(&svg).unwrap();
    assert!(s.starts_with("<svg") && s.trim_end().ends_with("</svg>"));
    assert_eq!(s.matches("<polyline").count(), 1);
    assert_eq!(s.matches("<circle").count(), 3);
    assert_eq!(code(&run(&["curve", "--alpha-min", "5", "--alpha-max", "1"])), 2);
}
