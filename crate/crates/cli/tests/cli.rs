use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

const PATH3: &str = "p edge 3 2\ne 1 2\ne 2 3\n";
const TINY_ILP: &str = "ilp 1 2\n1 1 1\n1 1\n";
const PATH_SQUBO: &str = "qubo 3 4\n1 1 -1\n2 2 -1\n3 3 -1\n1 3 1\n";

struct Sandbox {
    dir: TempDir,
}

impl Sandbox {
    fn new() -> Self {
        Sandbox {
            dir: TempDir::new().unwrap(),
        }
    }

    fn file(&self, name: &str, body: &str) -> PathBuf {
        let p = self.dir.path().join(name);
        fs::write(&p, body).unwrap();
        p
    }

    fn path(&self, name: &str) -> PathBuf {
        self.dir.path().join(name)
    }
}

fn qubo(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qubo")).args(args).output().unwrap()
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn solve_graph_with_argmin() {
    let sb = Sandbox::new();
    let g = sb.file("path3.col", PATH3);
    let o = qubo(&["solve", "--format", "graph", "--input", s(&g), "--extract-argmin"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.starts_with("{\"n\":3,\"min_value\":\"-2\",\"argmin\":[0,1,1],"), "{out}");
    assert!(String::from_utf8_lossy(&o.stderr).contains("graph"));
}

#[test]
fn solve_ilp_reports_the_optimum() {
    let sb = Sandbox::new();
    let f = sb.file("tiny.ilp", TINY_ILP);
    let o = qubo(&["solve", "--format", "ilp", "--input", s(&f)]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("\"min_value\":\"-1\""), "{out}");
    assert!(out.ends_with(",\"ilp_optimum\":\"1\"}\n"), "{out}");
}

#[test]
fn solve_zero_matrix() {
    let sb = Sandbox::new();
    let f = sb.file("zero.qubo", "qubo 3 0\n");
    let o = qubo(&["solve", "--input", s(&f)]);
    assert_eq!(code(&o), 0);
    assert_eq!(
        stdout(&o),
        "{\"n\":3,\"min_value\":\"0\",\"oracle_queries\":0,\"search_lo\":\"0\",\"offset_applied\":\"0\"}\n"
    );
}

#[test]
fn solve_knapsack_and_rational() {
    let sb = Sandbox::new();
    let k = sb.file("k.kp", "knapsack 3 6\n2 3 4\n");
    let out = stdout(&qubo(&["solve", "--format", "knapsack", "--input", s(&k)]));
    assert!(out.contains("\"ilp_optimum\":\"5\""), "{out}");

    let r = sb.file("r.rq", "rqubo 2 2\n1 1 -1 2\n1 2 1 3\n");
    let out = stdout(&qubo(&["solve", "--format", "rqubo", "--input", s(&r)]));
    assert!(out.contains("\"min_value\":\"-3\""), "{out}");
    assert!(out.contains("\"rational_min\":\"-1/2\""), "{out}");
}

#[test]
fn solve_modes() {
    let sb = Sandbox::new();
    let f = sb.file("q.qubo", "qubo 2 3\n1 1 -10\n2 2 -10\n1 2 1\n");
    for args in [
        vec!["--mode", "general"],
        vec!["--upper-bound", "2"],
        vec!["--mode", "uqubo", "--upper-bound", "2"],
        vec!["--lower-bound", "-11"],
    ] {
        let mut full = vec!["solve", "--input", s(&f)];
        full.extend(args.iter().copied());
        let o = qubo(&full);
        assert_eq!(code(&o), 0, "{args:?}");
        assert!(stdout(&o).contains("\"min_value\":\"-19\""), "{args:?}");
    }
    let out = stdout(&qubo(&["solve", "--input", s(&f), "--upper-bound", "2"]));
    assert!(!out.contains("\"offset_applied\":\"0\""), "{out}");
}

#[test]
fn reduce_graph_matches_clique_reduction() {
    let sb = Sandbox::new();
    let g = sb.file("path3.col", PATH3);
    let out = sb.path("path3.qubo");
    let o = qubo(&["reduce", "--format", "graph", "--input", s(&g), "--output", s(&out)]);
    assert_eq!(code(&o), 0);
    let written = fs::read_to_string(&out).unwrap();
    let expected = qubo_core::io::parse_qubo(PATH_SQUBO).unwrap();
    assert_eq!(qubo_core::io::parse_qubo(&written).unwrap(), expected);
    assert_eq!(written, qubo_core::io::write_qubo(&expected));
    let side = fs::read_to_string(sb.path("path3.qubo.map.json")).unwrap();
    assert_eq!(side, "{\"source\":\"graph\",\"n_vertices\":3}\n");
}

#[test]
fn reduce_knapsack_and_rational() {
    let sb = Sandbox::new();
    let k = sb.file("k.kp", "knapsack 3 6\n2 3 4\n");
    let o = qubo(&["reduce", "--format", "knapsack", "--input", s(&k)]);
    assert_eq!(stdout(&o), "ilp 1 3\n2 3 4 5\n2 3 4\n");
    assert!(String::from_utf8_lossy(&o.stderr).contains("\"bound\":\"5\""));

    let r = sb.file("r.rq", "rqubo 1 1\n1 1 1 2\n");
    let out = sb.path("r.qubo");
    assert_eq!(code(&qubo(&["reduce", "--format", "rqubo", "--input", s(&r), "--output", s(&out)])), 0);
    assert_eq!(fs::read_to_string(&out).unwrap(), "qubo 1 1\n1 1 1\n");
    assert_eq!(
        fs::read_to_string(sb.path("r.qubo.map.json")).unwrap(),
        "{\"source\":\"rqubo\",\"scale\":\"2\"}\n"
    );
}

#[test]
fn reduce_ilp_sidecar_carries_the_constant() {
    let sb = Sandbox::new();
    let f = sb.file("tiny.ilp", TINY_ILP);
    let out = sb.path("tiny.qubo");
    assert_eq!(code(&qubo(&["reduce", "--format", "ilp", "--input", s(&f), "--output", s(&out)])), 0);
    let side = fs::read_to_string(sb.path("tiny.qubo.map.json")).unwrap();
    let parsed = qubo_core::io::ReductionSidecar::from_json(&side).unwrap();
    match parsed {
        qubo_core::io::ReductionSidecar::Ilp { h, k, constant, .. } => {
            assert_eq!((h.as_str(), k, constant.as_str()), ("3", 1, "3"));
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn decide_examples() {
    let sb = Sandbox::new();
    let p = sb.file("p.qubo", PATH_SQUBO);
    let z = sb.file("z.qubo", "qubo 2 0\n");
    for (file, value, answer) in [(&p, "-2", "true\n"), (&p, "-3", "false\n"), (&z, "0", "true\n"), (&p, "-1", "false\n")] {
        let o = qubo(&["decide", "--input", s(file), "--value", value]);
        assert_eq!(code(&o), 0);
        assert_eq!(stdout(&o), answer, "{value}");
    }
}

#[test]
fn repair_examples() {
    let sb = Sandbox::new();
    let cases = [
        (PATH3, "0 1 1\n", "2 3\n"),
        ("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n", "1 1 1\n", "1 2 3\n"),
        ("p edge 1 0\n", "1\n", "1\n"),
    ];
    for (graph, assignment, expected) in cases {
        let g = sb.file("g.col", graph);
        let a = sb.file("a.txt", assignment);
        let o = qubo(&["repair", "--input", s(&g), "--assignment", s(&a)]);
        assert_eq!(code(&o), 0);
        assert_eq!(stdout(&o), expected);
    }
}

#[test]
fn repair_rejects_a_non_optimal_assignment() {
    let sb = Sandbox::new();
    let g = sb.file("g.col", PATH3);
    let a = sb.file("a.txt", "0 1 0\n");
    let o = qubo(&["repair", "--input", s(&g), "--assignment", s(&a)]);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stderr).contains("minimum"));
}

#[test]
fn bench_csv_is_seeded() {
    let run = || stdout(&qubo(&["bench", "--family", "squbo-random", "--sizes", "4..10", "--trials", "2", "--seed", "9"]));
    let first = run();
    assert_eq!(first, run());
    let mut lines = first.lines();
    assert_eq!(lines.next(), Some("# generator=chacha8 seed=9 family=squbo-random density=0.5"));
    assert_eq!(lines.next(), Some("family,n_or_bits,trial,queries,min_value"));
    assert_eq!(lines.count(), 14);

    let other = stdout(&qubo(&["bench", "--family", "squbo-random", "--sizes", "4..10", "--trials", "2", "--seed", "10"]));
    assert_ne!(first, other);
}

#[test]
fn bench_with_zero_trials_is_header_only() {
    let out = stdout(&qubo(&["bench", "--family", "single-bigcoeff", "--sizes", "4..8", "--trials", "0"]));
    assert_eq!(out.lines().count(), 2);
}

#[test]
fn exit_code_parse_errors() {
    let sb = Sandbox::new();
    let lower = sb.file("bad.qubo", "qubo 2 1\n2 1 5\n");
    let o = qubo(&["solve", "--input", s(&lower)]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("2:1"));

    let loop_graph = sb.file("loop.col", "p edge 2 1\ne 1 1\n");
    assert_eq!(code(&qubo(&["solve", "--format", "graph", "--input", s(&loop_graph)])), 2);
    let neg_b = sb.file("neg.ilp", "ilp 1 1\n1 -1\n1\n");
    assert_eq!(code(&qubo(&["solve", "--format", "ilp", "--input", s(&neg_b)])), 2);
    let zero_den = sb.file("z.rq", "rqubo 1 1\n1 1 1 0\n");
    assert_eq!(code(&qubo(&["reduce", "--format", "rqubo", "--input", s(&zero_den)])), 2);
}

#[test]
fn exit_code_usage_errors() {
    let sb = Sandbox::new();
    let f = sb.file("p.qubo", PATH_SQUBO);
    assert_eq!(code(&qubo(&["solve", "--input", s(&f), "--bogus"])), 2);
    assert_eq!(code(&qubo(&["solve", "--input", s(&f), "--mode", "fast"])), 2);
    assert_eq!(code(&qubo(&["solve", "--input", s(&f), "--mode", "lqubo"])), 2);
    assert_eq!(code(&qubo(&["decide", "--input", s(&f)])), 2);
    assert_eq!(code(&qubo(&["bench", "--family", "nope", "--sizes", "4..5"])), 2);
    assert_eq!(code(&qubo(&["bench", "--family", "squbo-random", "--sizes", "4-5"])), 2);
    assert_eq!(code(&qubo(&["frobnicate"])), 2);
    assert_eq!(code(&qubo(&["--help"])), 0);
}

#[test]
fn exit_code_subclass_violation() {
    let sb = Sandbox::new();
    let f = sb.file("p.qubo", PATH_SQUBO);
    assert_eq!(code(&qubo(&["solve", "--input", s(&f), "--upper-bound", "1"])), 3);
    assert_eq!(code(&qubo(&["solve", "--input", s(&f), "--lower-bound", "-1"])), 3);
}

#[test]
fn exit_code_capacity() {
    let sb = Sandbox::new();
    let f = sb.file("big.qubo", "qubo 31 1\n1 1 -1\n");
    assert_eq!(code(&qubo(&["solve", "--input", s(&f)])), 4);
    let o = qubo(&["bench", "--family", "squbo-random", "--sizes", "30..31"]);
    assert_eq!(code(&o), 4);
    assert!(o.stdout.is_empty());
}

#[test]
fn exit_code_internal() {
    let sb = Sandbox::new();
    assert_eq!(code(&qubo(&["solve", "--input", s(&sb.path("missing.qubo"))])), 1);
    let f = sb.file("p.qubo", PATH_SQUBO);
    assert_eq!(code(&qubo(&["reduce", "--input", s(&f)])), 1);
    let g = sb.file("g.col", PATH3);
    assert_eq!(code(&qubo(&["decide", "--format", "graph", "--input", s(&g), "--value", "0"])), 1);
}

#[test]
fn repeated_runs_are_byte_identical() {
    let sb = Sandbox::new();
    let f = sb.file("k.kp", "knapsack 4 11\n2 3 4 7\n");
    let args = ["solve", "--format", "knapsack", "--input", s(&f), "--extract-argmin"];
    let first = qubo(&args);
    let second = qubo(&args);
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(first.stderr, second.stderr);
}
