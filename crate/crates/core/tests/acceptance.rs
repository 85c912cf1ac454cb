//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

use std::process::ExitCode;
use std::time::Instant;

use parikh::analysis::{
    count_slender_classes, diameter_report, longest_path_word, slender_word_for_partition, ternary_hamiltonian,
};
use parikh::graph::{are_isomorphic, has_hamiltonian_cycle};
use parikh::oracle::{partitions, run_suite, EnumerationSpec};
use parikh::{parikh_graph, Limits, Word};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn w(text: &str) -> Word {
    Word::parse(text, None).expect("valid word")
}

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn suite(name: &str, spec: EnumerationSpec) -> Outcome {
    let outcome = run_suite(name, &spec).map_err(|e| format!("{name}: {e}"))?;
    match outcome.counterexamples.first() {
        None if outcome.checked > 0 => Ok(()),
        None => Err(format!("{name}: nothing was checked")),
        Some(first) => Err(format!(
            "{name}: {} counterexamples, first {}",
            outcome.counterexamples.len(),
            serde_json::to_string(first).unwrap_or_default()
        )),
    }
}

fn path_lengths(words: &[&str]) -> Result<Vec<usize>, String> {
    words
        .iter()
        .map(|t| {
            let g = parikh_graph(&w(t)).map_err(|e| e.to_string())?.into_graph();
            if g.is_path() {
                Ok(g.edge_count())
            } else {
                Err(format!("G({t}) is not a path"))
            }
        })
        .collect()
}

fn worked_examples() -> Outcome {
    let pos = (w("abbaba").position_of(2, 2), w("caabcaba").position_of(1, 3));
    ensure(matches!(pos, (Ok(3), Ok(6))), || format!("positions {pos:?}"))?;

    let text = w("bacbbabcccbac");
    for (pattern, core) in [
        ("b", "bbbbb"),
        ("ab", "abbabb"),
        ("bc", "bcbbbcccbc"),
        ("abc", "abbabcccbc"),
        ("cab", "cabb"),
        ("cca", "cccca"),
    ] {
        let got = text
            .core(&Word::parse(pattern, Some(3)).unwrap())
            .map_err(|e| e.to_string())?;
        ensure(got.to_string() == core, || {
            format!("core of {pattern} is {got}, expected {core}")
        })?;
    }

    let g = parikh_graph(&w("bbccabdc")).unwrap().labeled();
    let mut edges: Vec<String> = g
        .edges()
        .map(|(x, y)| format!("{}-{}", g.label(x), g.label(y)))
        .collect();
    edges.sort();
    let mut expected: Vec<String> = [
        ("d:1", "c:1"),
        ("d:1", "c:2"),
        ("b:1", "c:1"),
        ("b:1", "c:2"),
        ("b:1", "c:3"),
        ("b:2", "c:1"),
        ("b:2", "c:2"),
        ("b:2", "c:3"),
        ("b:3", "c:3"),
        ("b:3", "a:1"),
    ]
    .iter()
    .map(|(y, x)| format!("{x}-{y}"))
    .collect();
    expected.sort();
    ensure(g.len() == 8 && edges == expected, || {
        format!("G(bbccabdc) edges {edges:?}")
    })?;

    let limits = Limits::default();
    let abb = parikh_graph(&Word::parse("abb", Some(3)).unwrap()).unwrap();
    let abc = parikh_graph(&w("abc")).unwrap();
    ensure(are_isomorphic(abb.graph(), abc.graph(), &limits).unwrap(), || {
        "G(abb) and G(abc) differ".into()
    })?;

    let slender = ["abcd", "bcda", "cdab", "cdba", "dcba"];
    let graphs: Vec<_> = slender
        .iter()
        .map(|t| parikh_graph(&w(t)).unwrap().into_graph())
        .collect();
    for (i, a) in graphs.iter().enumerate() {
        for (j, b) in graphs.iter().enumerate().skip(i + 1) {
            ensure(!are_isomorphic(a, b, &limits).unwrap(), || {
                format!("G({}) and G({}) are isomorphic", slender[i], slender[j])
            })?;
        }
    }
    for (parts, text) in partitions(4).iter().zip(slender) {
        let built = parikh_graph(&slender_word_for_partition(parts).unwrap())
            .unwrap()
            .into_graph();
        let idx = slender.iter().position(|t| *t == text).unwrap();
        ensure(are_isomorphic(&built, &graphs[idx], &limits).unwrap(), || {
            format!("partition {parts:?} does not match G({text})")
        })?;
    }
    let count = count_slender_classes(4, &limits).map_err(|e| e.to_string())?;
    ensure(count == 5, || format!("{count} slender classes for four letters"))?;

    let lengths = path_lengths(&["abab", "bcabcab", "cdabcdab", "deabcdeab"])?;
    ensure(lengths == [3, 6, 7, 8], || format!("path lengths {lengths:?}"))?;
    let lengths = path_lengths(&["abab", "bcabcab", "cdbcdabcab", "decdebcdabcab"])?;
    ensure(lengths == [3, 6, 9, 12], || format!("path lengths {lengths:?}"))?;
    let generated: Vec<String> = (2..=5).map(|s| longest_path_word(s).unwrap().to_string()).collect();
    ensure(generated == ["abab", "bcabcab", "cdbcdabcab", "decdebcdabcab"], || {
        format!("longest path words {generated:?}")
    })
}

fn diameter_bounds() -> Outcome {
    suite("diameter", EnumerationSpec::words(1..=4, 1..=8))?;
    for (text, s) in [("bcabcab", 3), ("cdabcdab", 4), ("deabcdeab", 5)] {
        let r = diameter_report(&w(text)).map_err(|e| e.to_string())?;
        ensure(r.diameter == Some(s + 3) && r.applicable_bound == s + 3, || {
            format!("{text}: diameter {:?}, bound {}", r.diameter, r.applicable_bound)
        })?;
    }
    Ok(())
}

fn hamiltonicity() -> Outcome {
    suite("hamiltonian-binary", EnumerationSpec::words(2..=2, 1..=10))?;
    suite("hamiltonian-ternary", EnumerationSpec::words(3..=3, 1..=9))?;
    suite("hamiltonian-strong-ordering", EnumerationSpec::graphs(10))?;
    let abbc = Word::parse("abbc", Some(3)).unwrap();
    let criterion = ternary_hamiltonian(&abbc).map_err(|e| e.to_string())?;
    let oracle = has_hamiltonian_cycle(parikh_graph(&abbc).unwrap().graph(), &Limits::default()).unwrap();
    ensure(criterion && oracle, || {
        format!("abbc: criterion {criterion}, search {oracle}")
    })
}

fn slender_counts() -> Outcome {
    suite("slender", EnumerationSpec::words(2..=8, 1..=1))?;
    let counts: Vec<usize> = (2..=8)
        .map(|s| count_slender_classes(s, &Limits::default()).unwrap())
        .collect();
    ensure(counts == [2, 3, 5, 7, 11, 15, 22], || format!("counts {counts:?}"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("worked examples", worked_examples),
        ("edge count identity, s <= 4, length <= 8", || {
            suite("edge-count", EnumerationSpec::words(1..=4, 1..=8))
        }),
        ("canonical ordering is strong, s <= 4, length <= 8", || {
            suite(
                "canonical-ordering",
                EnumerationSpec::words(1..=4, 1..=8).with_full_support(true),
            )
        }),
        ("binary inversion equals adjacency, length <= 10", || {
            suite("binary-permutation", EnumerationSpec::words(2..=2, 1..=10))
        }),
        ("synthesis round trip on <= 8 vertices, completeness on <= 6", || {
            suite("round-trip", EnumerationSpec::graphs(8))?;
            suite("completeness", EnumerationSpec::graphs(6))
        }),
        ("diameter bounds and tight witnesses", diameter_bounds),
        ("arity hierarchy is strict for paths", || {
            suite("hierarchy", EnumerationSpec::words(2..=3, 1..=1))
        }),
        ("binary recognition methods agree on <= 8 vertices", || {
            suite("binary-recognition", EnumerationSpec::graphs(8))
        }),
        ("Hamiltonicity criteria match cycle search", hamiltonicity),
        ("slender class counts, 2 <= s <= 8", slender_counts),
    ];
    let mut failed = 0;
    for (i, (title, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(()) => println!("PASS [{}] {title} ({secs:.2}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL [{}] {title} ({secs:.2}s): {why}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
