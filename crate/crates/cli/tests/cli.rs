use std::io::Write;
use std::process::{Command, Output, Stdio};

use parikh::graph::GraphJson;
use serde_json::Value;

fn parikh(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_parikh"))
        .args(args)
        .env_remove("PARIKH_MAX_VERTICES")
        .env_remove("PARIKH_JOBS")
        .output()
        .expect("binary runs")
}

fn with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_parikh"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("json output")
}

fn text(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

const C6: &str = r#"{"x":["x1","x2","x3"],"y":["y1","y2","y3"],
  "edges":[["x1","y1"],["x1","y2"],["x2","y2"],["x2","y3"],["x3","y3"],["x3","y1"]]}"#;

#[test]
fn build_emits_the_graph() {
    let g = json(&parikh(&["build", "bbccabdc", "--format", "json"]));
    assert_eq!(g["x"].as_array().unwrap().len() + g["y"].as_array().unwrap().len(), 8);
    assert_eq!(g["edges"].as_array().unwrap().len(), 10);
    let dot = text(&parikh(&["build", "abab", "--format", "dot"]));
    assert!(dot.starts_with("graph G {") && dot.contains("\"a:1\" -- \"b:2\""));
}

#[test]
fn graph_json_is_stable_under_reserialization() {
    let out = text(&parikh(&["build", "cabbacb"]));
    let parsed: GraphJson = serde_json::from_str(&out).unwrap();
    assert_eq!(serde_json::to_string(&parsed).unwrap(), out.trim_end());
}

#[test]
fn slender_count() {
    assert_eq!(text(&parikh(&["slender", "--size", "4", "--count"])).trim(), "5");
    let report = json(&parikh(&["slender", "--size", "3"]));
    assert_eq!(report["classes"], 3);
    assert_eq!(report["words"][0]["word"], "abc");
}

#[test]
fn recognize_rejects_c6() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(C6.as_bytes()).unwrap();
    let report = json(&parikh(&["recognize", "--input", file.path().to_str().unwrap()]));
    assert_eq!(report["representable"], false);
    assert_eq!(report["arity"], Value::Null);
    assert_eq!(report["strong_ordering"], Value::Null);
}

#[test]
fn recognize_reports_the_smallest_arity() {
    let p5 = text(&parikh(&["build", "babcb"]));
    let report = json(&with_stdin(&["recognize"], &p5));
    assert_eq!(report["arity"], 3);
    let binary = json(&with_stdin(&["recognize", "--arity", "2"], &p5));
    assert_eq!(binary["representable"], false);
    let k22 = text(&parikh(&["build", "aabb"]));
    let report = json(&with_stdin(&["recognize", "--arity", "any"], &k22));
    assert_eq!(
        (report["arity"].clone(), report["word"].clone()),
        (2.into(), "aabb".into())
    );
}

#[test]
fn built_graphs_are_recognized() {
    for s in 1..=3usize {
        for len in 1..=4u32 {
            for code in 0..s.pow(len) {
                let word: String = (0..len).map(|i| (b'a' + (code / s.pow(i) % s) as u8) as char).collect();
                let size = s.to_string();
                let graph = text(&parikh(&["build", &word, "--alphabet-size", &size]));
                let report = json(&with_stdin(&["recognize", "--input", "-"], &graph));
                assert_eq!(report["representable"], true, "{word} over {s}");
            }
        }
    }
}

#[test]
fn synthesize_with_trace() {
    let graph = text(&parikh(&["build", "abab"]));
    let report = json(&with_stdin(&["synthesize", "--trace"], &graph));
    assert_eq!(report["word"], "abab");
    assert_eq!(report["trace"]["steps"][0]["word"], "aab");
    assert_eq!(report["embedding"].as_object().unwrap().len(), 4);
    let out = with_stdin(&["synthesize"], C6);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not a bipartite permutation graph"));
}

#[test]
fn analysis_verbs() {
    let d = json(&parikh(&["diameter", "bcabcab"]));
    assert_eq!(
        (d["diameter"].clone(), d["applicable_bound"].clone()),
        (6.into(), 6.into())
    );
    let h = json(&parikh(&["hamiltonian", "abbc", "--alphabet-size", "3"]));
    assert_eq!(h["criterion"], "ternary");
    assert_eq!(
        (h["criterion_holds"].clone(), h["hamiltonian"].clone()),
        (true.into(), true.into())
    );
    let p = json(&parikh(&["longest-path", "--arity", "4"]));
    assert_eq!(
        (p["word"].clone(), p["path_length"].clone()),
        ("cdbcdabcab".into(), 9.into())
    );
    let c = json(&parikh(&["compose", "ab", "ab"]));
    assert_eq!((c["word"].clone(), c["components"].clone()), ("cdab".into(), 2.into()));
    let core = json(&parikh(&["core", "bacbbabcccbac", "ab"]));
    assert_eq!(core["core"], "abbabb");
}

#[test]
fn verify_exit_codes() {
    let out = parikh(&[
        "verify",
        "--suite",
        "edge-count",
        "--alphabet-size",
        "3",
        "--max-len",
        "5",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let summary: Value = serde_json::from_str(text(&out).lines().last().unwrap()).unwrap();
    assert_eq!(summary["passed"], true);
    assert_eq!(parikh(&["verify", "--suite", "missing"]).status.code(), Some(2));
    assert_eq!(
        parikh(&["verify", "--suite", "round-trip", "--max-vertices", "11"])
            .status
            .code(),
        Some(2)
    );
    let listed = text(&parikh(&["verify", "--list"]));
    assert!(listed.lines().count() >= 18);
}

#[test]
fn flags_override_environment() {
    let run = |args: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_parikh"))
            .args(args)
            .env("PARIKH_MAX_VERTICES", "11")
            .env("PARIKH_JOBS", "2")
            .output()
            .unwrap()
    };
    assert_eq!(run(&["verify", "--suite", "round-trip"]).status.code(), Some(2));
    assert_eq!(
        run(&["verify", "--suite", "round-trip", "--max-vertices", "5"])
            .status
            .code(),
        Some(0)
    );
}

#[test]
fn bad_input_is_a_diagnostic() {
    for args in [
        &["build", "ab1"][..],
        &["build", "abc", "--alphabet-size", "2"],
        &["slender", "--size", "0"],
        &[],
    ] {
        let out = parikh(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
    let out = with_stdin(&["recognize"], "{not json");
    assert_eq!(out.status.code(), Some(2));
}
