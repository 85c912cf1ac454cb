use parikh::oracle::{run_suite, EnumerationSpec, SUITES};

fn passes(name: &str, spec: &EnumerationSpec) {
    let outcome = run_suite(name, spec).unwrap_or_else(|e| panic!("{name}: {e}"));
    assert!(outcome.checked > 0, "{name} checked nothing");
    assert!(
        outcome.passed(),
        "{name}: {}",
        serde_json::to_string_pretty(&outcome.counterexamples[0]).unwrap()
    );
}

#[test]
fn every_suite_passes_at_its_defaults() {
    for suite in SUITES {
        passes(suite.name, &suite.default_spec());
    }
}

#[test]
fn edge_count_up_to_length_ten() {
    passes("edge-count", &EnumerationSpec::words(1..=4, 1..=10));
}

#[test]
fn diameter_and_triples_per_alphabet() {
    for (s, len) in [(2, 10), (3, 9), (4, 8)] {
        let spec = EnumerationSpec::words(s..=s, 1..=len);
        passes("diameter", &spec);
        passes("triple-subwords", &spec);
    }
}

#[test]
fn ternary_recognition_on_eight_vertices() {
    passes("ternary-recognition", &EnumerationSpec::graphs(8));
}

#[test]
fn identical_specs_give_identical_outcomes() {
    let spec = EnumerationSpec::graphs(7);
    let first = run_suite("round-trip", &spec).unwrap();
    let second = run_suite("round-trip", &spec.clone().with_jobs(2)).unwrap();
    assert_eq!(first, second);
}
