//! End-to-end tests of the command surface: output formats, the exit-code
//! contract, and structured-record round trips.

use std::io::Write;
use std::process::{Command, Stdio};

use zforce::{parse_record, Record, Route, Stat, VertexSet};

struct Output {
    code: i32,
    stdout: String,
    stderr: String,
}

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_zforce"));
    cmd.args(args)
        .stdin(if stdin.is_some() {
            Stdio::piped()
        } else {
            Stdio::null()
        })
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    let mut child = cmd.spawn().expect("binary spawns");
    if let Some(text) = stdin {
        child
            .stdin
            .as_mut()
            .unwrap()
            .write_all(text.as_bytes())
            .unwrap();
    }
    let out = child.wait_with_output().expect("binary exits");
    Output {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn gen(expr: &str) -> String {
    let out = run(&["gen", expr], None);
    assert_eq!(out.code, 0, "gen {expr}: {}", out.stderr);
    out.stdout
}

#[test]
fn gen_emits_edge_lists() {
    assert_eq!(gen("path:3"), "3 2\n0 1\n1 2\n");
    assert_eq!(gen("complete:1"), "1 0\n");
    assert_eq!(gen("cycle:3"), "3 3\n0 1\n0 2\n1 2\n");

    let grid = gen("path:4 box path:3");
    assert!(grid.starts_with("12 17\n"));
    assert!(grid.contains("L 0 v_{0,0}"));

    let pet = gen("petersen");
    assert!(pet.starts_with("10 15\n"));

    let labeled = run(&["gen", "path:2", "--seed-labels"], None);
    assert!(labeled.stdout.contains("L 0 v_0"));
    assert!(labeled.stdout.contains("L 1 v_1"));
}

#[test]
fn gen_rejects_bad_expressions() {
    let out = run(&["gen", "path:4 box"], None);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("position"));

    let out = run(&["gen", "cycle:2"], None);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("requires n >= 3"));

    // products past the vertex capacity are refused
    let out = run(&["gen", "path:12 box path:12"], None);
    assert_eq!(out.code, 3);
}

#[test]
fn simulate_reports_chain_and_verdict() {
    let p5 = gen("path:5");
    let out = run(&["simulate", "-", "--blue", "0"], Some(&p5));
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("0 -> 1\n1 -> 2\n2 -> 3\n3 -> 4"));
    assert!(out.stdout.contains("forces: 4"));
    assert!(out.stdout.contains("verdict: ZERO FORCING"));

    let c4 = gen("cycle:4");
    let out = run(&["simulate", "-", "--blue", "0"], Some(&c4));
    assert!(out.stdout.contains("forces: 0"));
    assert!(out.stdout.contains("verdict: FAILED"));
    assert!(out.stdout.contains("white: 1,2,3"));

    let k3 = gen("complete:3");
    let out = run(&["simulate", "-", "--blue", "0,1"], Some(&k3));
    assert!(out.stdout.contains("forces: 1"));
    assert!(out.stdout.contains("verdict: ZERO FORCING"));

    // sets outside the graph are usage errors
    let out = run(&["simulate", "-", "--blue", "9"], Some(&c4));
    assert_eq!(out.code, 2);
}

#[test]
fn exact_prints_certificates() {
    let pet = gen("petersen");
    let out = run(&["exact", "-", "--stat", "F"], Some(&pet));
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("target: F"));
    assert!(out.stdout.contains("value: 6"));
    assert!(out.stdout.contains("route: exhaustive"));

    let c5 = gen("cycle:5");
    let out = run(&["exact", "-", "--stat", "Z"], Some(&c5));
    assert!(out.stdout.contains("value: 2"));

    let k1 = gen("complete:1");
    let out = run(&["exact", "-", "--stat", "F"], Some(&k1));
    assert!(out.stdout.contains("value: 0"));
    assert!(out.stdout.contains("witness: -"));
}

#[test]
fn exact_capacity_contract() {
    let p23 = gen("path:23");
    let out = run(&["exact", "-", "--stat", "Z"], Some(&p23));
    assert_eq!(out.code, 3);
    assert!(out.stderr.contains("--cap 23"));

    let out = run(&["exact", "-", "--stat", "Z", "--cap", "23"], Some(&p23));
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("value: 1"));
}

#[test]
fn exact_structured_output_round_trips() {
    let pet = gen("petersen");
    let out = run(
        &["exact", "-", "--stat", "F", "--format", "structured"],
        Some(&pet),
    );
    assert_eq!(out.code, 0);
    let record = parse_record(&out.stdout).expect("record parses");
    match record {
        Record::Certificate(cert) => {
            assert_eq!(cert.target, Stat::F);
            assert_eq!(cert.value, 6);
            assert_eq!(cert.route, Route::Exhaustive);
            assert_eq!(cert.witness.len(), 6);
        }
        other => panic!("expected a certificate, got {other:?}"),
    }
}

#[test]
fn construct_verifies_claims_live() {
    let out = run(&["construct", "grid", "5", "3"], None);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("predicted_size: 10"));
    assert!(out.stdout.contains("claim failed: PASS"));
    assert!(out.stdout.contains("claim maximal: PASS"));

    let out = run(&["construct", "prism", "4"], None);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("predicted_size: 5"));
    assert!(out.stdout.contains("claim stalled: PASS"));

    let out = run(&["construct", "corona", "complete:2", "empty:2"], None);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("predicted_size: 4"));
    assert!(out.stdout.contains("claim exact_F: PASS"));

    let out = run(&["construct", "lex", "path:10", "path:4"], None);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("predicted_size: 37"));

    let out = run(&["construct", "strong-grid", "4", "3"], None);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("predicted_size: 9"));
    assert!(out.stdout.contains("claim maximal: PASS"));

    let out = run(&["construct", "strong-torus", "3", "4"], None);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("predicted_size: 6"));
    assert!(out.stdout.contains("claim stalled: PASS"));

    let out = run(&["construct", "grid", "3", "5"], None);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("n >= m >= 2"));

    let out = run(&["construct", "spiral", "3"], None);
    assert_eq!(out.code, 2);
}

#[test]
fn construct_structured_round_trips() {
    let out = run(
        &["construct", "torus", "4", "4", "--format", "structured"],
        None,
    );
    assert_eq!(out.code, 0);
    let first_record = out.stdout.split("\n\n").next().unwrap();
    match parse_record(first_record).expect("record parses") {
        Record::Construction(result) => {
            assert_eq!(result.source, "torus");
            assert_eq!(result.predicted_size, 8);
            assert_eq!(result.set.len(), 8);
        }
        other => panic!("expected a construction, got {other:?}"),
    }
    assert!(out.stdout.contains("record: verification"));
    assert!(out.stdout.contains("stalled: PASS"));
}

#[test]
fn verify_exit_codes_and_reasons() {
    let c4 = gen("cycle:4");
    let out = run(&["verify", "-", "0,2", "--check", "maximal"], Some(&c4));
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("verified"));

    let p4 = gen("path:4");
    let out = run(&["verify", "-", "0", "--check", "failed"], Some(&p4));
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains("0 -> 1"), "shows the completing chain");

    let c6 = gen("cycle:6");
    let out = run(&["verify", "-", "0,2,4", "--check", "stalled"], Some(&c6));
    assert_eq!(out.code, 0);

    let p3 = gen("path:3");
    let out = run(&["verify", "-", "0", "--check", "stalled"], Some(&p3));
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains("0 -> 1"));

    let k4 = gen("complete:4");
    let out = run(&["verify", "-", "0", "--check", "maximal"], Some(&k4));
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains("adding vertex"));

    // ranges in set syntax
    let p6 = gen("path:6");
    let out = run(&["verify", "-", "0-5", "--check", "zfs"], Some(&p6));
    assert_eq!(out.code, 0);
}

#[test]
fn bound_reports_basis() {
    let prism = gen("path:2 box cycle:4");
    let out = run(&["bound", "-"], Some(&prism));
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("bound: 5"));
    assert!(out.stdout.contains("basis: connected-no-module-of-order-2"));

    let e3 = gen("empty:3");
    let out = run(&["bound", "-"], Some(&e3));
    assert!(out.stdout.contains("bound: 2"));
    assert!(out.stdout.contains("basis: isolated-vertex"));
}

#[test]
fn io_and_parse_errors_exit_distinctly() {
    let out = run(&["exact", "/definitely/not/here", "--stat", "F"], None);
    assert_eq!(out.code, 4);

    let out = run(&["exact", "-", "--stat", "F"], Some("3 2\n0 1\n1 1\n"));
    assert_eq!(out.code, 4);
    assert!(out.stderr.contains("line 3"));

    let out = run(&["exact", "-"], Some("1 0\n"));
    assert_eq!(out.code, 2, "missing --stat is a usage error");
}

#[test]
fn gen_output_feeds_back_into_every_command() {
    let sets: &[(&str, &str)] = &[
        ("petersen", "0,1,2"),
        ("(complete:4 box complete:2)", "0-3"),
        ("(path:3 lex (path:2 strong path:2))", "1,3,5"),
    ];
    for (expr, blue) in sets {
        let text = gen(expr);
        let out = run(&["simulate", "-", "--blue", blue], Some(&text));
        assert_eq!(out.code, 0, "simulate {expr}");
        let out = run(&["bound", "-"], Some(&text));
        assert_eq!(out.code, 0, "bound {expr}");
    }
    // round trip: parse(serialize) = identity means re-generating is stable
    let once = gen("path:4 box path:3");
    let out = run(&["exact", "-", "--stat", "F"], Some(&once));
    assert!(out.stdout.contains("value: 7"));
    let parsed = zforce::parse_graph(&once).unwrap();
    assert_eq!(zforce::serialize_graph(&parsed), once);
    let _ = VertexSet::empty();
}
