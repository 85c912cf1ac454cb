//! `parikh`: build, recognize and analyze Parikh graphs from the command line.

use std::fs;
use std::io::{self, Read};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use parikh::analysis::{
    binary_hamiltonian, count_slender_classes, diameter_report, hamiltonian_via_strong_ordering, longest_path_word,
    slender_word_for_partition, ternary_hamiltonian,
};
use parikh::graph::has_hamiltonian_cycle;
use parikh::oracle::{find_suite, partitions, run_suite, SUITES};
use parikh::recognition::{
    compose_components, find_strong_ordering_any, recognize_binary, recognize_ternary, synthesize_any, synthesize_word,
};
use parikh::{parikh_graph, BipartiteGraph, Error, Limits, Word};

#[derive(Parser)]
#[command(
    name = "parikh",
    version,
    about = "Parikh graphs of words and the bipartite graphs they represent"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Arity {
    #[value(name = "2")]
    Two,
    #[value(name = "3")]
    Three,
    Any,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Parikh graph of a word.
    Build {
        word: String,
        #[arg(long)]
        alphabet_size: Option<usize>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Find a word whose Parikh graph is the input graph.
    Synthesize {
        /// Graph JSON file, or `-` for standard input.
        #[arg(long, default_value = "-")]
        input: String,
        /// Include the decomposition and every intermediate word.
        #[arg(long)]
        trace: bool,
        #[arg(long, env = "PARIKH_MAX_VERTICES")]
        max_vertices: Option<usize>,
    },
    /// Decide whether the input graph is the Parikh graph of some word.
    Recognize {
        #[arg(long, default_value = "-")]
        input: String,
        #[arg(long, value_enum, default_value = "any")]
        arity: Arity,
        #[arg(long, env = "PARIKH_MAX_VERTICES")]
        max_vertices: Option<usize>,
    },
    /// Diameter of the Parikh graph against its bound.
    Diameter {
        word: String,
        #[arg(long)]
        alphabet_size: Option<usize>,
    },
    /// Hamiltonicity of the Parikh graph by criterion and by search.
    Hamiltonian {
        word: String,
        #[arg(long)]
        alphabet_size: Option<usize>,
    },
    /// Slender words over `size` letters, one per isomorphism class.
    Slender {
        #[arg(long)]
        size: usize,
        /// Print only the number of classes.
        #[arg(long)]
        count: bool,
    },
    /// The word whose Parikh graph is the longest path over `arity` letters.
    LongestPath {
        #[arg(long)]
        arity: usize,
    },
    /// A word whose Parikh graph is the disjoint union of the words' graphs.
    Compose {
        #[arg(required = true)]
        words: Vec<String>,
    },
    /// The positions of a word that take part in occurrences of a pattern.
    Core {
        word: String,
        pattern: String,
        #[arg(long)]
        alphabet_size: Option<usize>,
    },
    /// Run an exhaustive check suite. Exit 0: pass, 1: counterexample,
    /// 2: configuration or capacity error.
    Verify {
        #[arg(long, required_unless_present = "list")]
        suite: Option<String>,
        /// List the suites and their default bounds.
        #[arg(long)]
        list: bool,
        /// Largest alphabet size.
        #[arg(long)]
        alphabet_size: Option<usize>,
        #[arg(long)]
        min_alphabet_size: Option<usize>,
        #[arg(long)]
        max_len: Option<usize>,
        #[arg(long)]
        min_len: Option<usize>,
        /// Only words using every letter of their alphabet.
        #[arg(long)]
        full_support: bool,
        #[arg(long, env = "PARIKH_MAX_VERTICES")]
        max_vertices: Option<usize>,
        #[arg(long, env = "PARIKH_JOBS")]
        jobs: Option<usize>,
    },
}

fn read_input(source: &str) -> Result<String> {
    if source == "-" {
        let mut text = String::new();
        io::stdin()
            .read_to_string(&mut text)
            .context("reading standard input")?;
        Ok(text)
    } else {
        fs::read_to_string(source).with_context(|| format!("reading {source}"))
    }
}

fn read_graph(source: &str) -> Result<BipartiteGraph> {
    let graph = BipartiteGraph::from_json(&read_input(source)?)?;
    if graph.is_empty() {
        return Err(Error::EmptyGraph.into());
    }
    Ok(graph)
}

fn limits(max_vertices: Option<usize>) -> Limits {
    max_vertices.map_or_else(Limits::default, Limits::uniform)
}

fn parse_word(text: &str, alphabet: Option<usize>) -> Result<Word> {
    Ok(Word::parse(text, alphabet)?)
}

fn print(value: &Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("json values serialize")
    );
}

fn build(word: &str, alphabet: Option<usize>, format: Format) -> Result<()> {
    let pg = parikh_graph(&parse_word(word, alphabet)?)?;
    let g = pg.labeled();
    match format {
        Format::Json => println!("{}", g.to_json()),
        Format::Dot => print!("{}", g.to_dot()),
    }
    Ok(())
}

fn synthesize(input: &str, trace: bool, max_vertices: Option<usize>) -> Result<()> {
    let g = read_graph(input)?;
    let limits = limits(max_vertices);
    if !g.is_connected() {
        let word = synthesize_any(&g, &limits)?.ok_or(Error::NotRepresentable)?;
        if trace {
            bail!("--trace needs a connected graph; disconnected graphs are composed from their components");
        }
        print(&json!({ "word": word, "alphabet_size": word.alphabet_size() }));
        return Ok(());
    }
    let synthesis = synthesize_word(&g, &limits)?;
    let s = synthesis.word.alphabet_size();
    let embedding: serde_json::Map<String, Value> = synthesis
        .embedding
        .iter()
        .enumerate()
        .map(|(v, pv)| (g.label(v).clone(), Value::String(pv.render(s))))
        .collect();
    let mut report = json!({
        "word": synthesis.word,
        "alphabet_size": s,
        "embedding": embedding,
    });
    if trace {
        report["vertices"] = json!(g.labels());
        report["trace"] = serde_json::to_value(&synthesis.trace)?;
    }
    print(&report);
    Ok(())
}

fn recognize(input: &str, arity: Arity, max_vertices: Option<usize>) -> Result<()> {
    let g = read_graph(input)?;
    let limits = limits(max_vertices);
    let ordering = find_strong_ordering_any(&g, &limits)?.map(|so| so.labeled(&g));
    let word = match arity {
        Arity::Two => recognize_binary(&g)?,
        Arity::Three => recognize_ternary(&g, &limits)?.map(|t| t.word),
        Arity::Any => None,
    };
    let mut report = match arity {
        Arity::Any => {
            let synthesized = synthesize_any(&g, &limits)?;
            // prefer the smallest alphabet found by the exact tests
            let smallest = if g.is_connected() && synthesized.is_some() {
                match recognize_binary(&g)? {
                    Some(w) => Some(w),
                    None => recognize_ternary(&g, &limits)?.map(|t| t.word),
                }
            } else {
                None
            };
            let best = smallest.or_else(|| synthesized.clone());
            json!({
                "representable": best.is_some(),
                "arity": best.as_ref().map(Word::alphabet_size),
                "word": best,
                "synthesized_arity": synthesized.as_ref().map(Word::alphabet_size),
            })
        }
        _ => json!({
            "representable": word.is_some(),
            "arity": word.as_ref().map(Word::alphabet_size),
            "word": word,
        }),
    };
    report["strong_ordering"] = serde_json::to_value(ordering)?;
    print(&report);
    Ok(())
}

fn hamiltonian(word: &str, alphabet: Option<usize>) -> Result<()> {
    let w = parse_word(word, alphabet)?;
    let pg = parikh_graph(&w)?;
    let g = pg.graph();
    let (criterion, holds) = match w.alphabet_size() {
        2 => (Some("binary"), Some(binary_hamiltonian(&w)?)),
        3 => match ternary_hamiltonian(&w) {
            Ok(h) => (Some("ternary"), Some(h)),
            Err(Error::Precondition(_)) => (None, None),
            Err(e) => return Err(e.into()),
        },
        _ => (None, None),
    };
    let by_ordering = if g.x_len() == g.y_len() && g.is_connected() {
        Some(hamiltonian_via_strong_ordering(g, &pg.canonical_strong_ordering())?)
    } else {
        None
    };
    let cycle = parikh::graph::hamiltonian_cycle(g, &Limits::default())?;
    print(&json!({
        "word": w,
        "alphabet_size": w.alphabet_size(),
        "criterion": criterion,
        "criterion_holds": holds,
        "strong_ordering_criterion": by_ordering,
        "hamiltonian": has_hamiltonian_cycle(g, &Limits::default())?,
        "cycle": cycle.map(|c| c.iter().map(|&v| g.label(v).render(w.alphabet_size())).collect::<Vec<_>>()),
    }));
    Ok(())
}

fn slender(size: usize, count: bool) -> Result<()> {
    let classes = count_slender_classes(size, &Limits::default())?;
    if count {
        println!("{classes}");
        return Ok(());
    }
    let words: Vec<Value> = partitions(size)
        .into_iter()
        .map(|parts| -> Result<Value> {
            let word = slender_word_for_partition(&parts)?;
            Ok(json!({ "partition": parts, "word": word }))
        })
        .collect::<Result<_>>()?;
    print(&json!({ "size": size, "classes": classes, "words": words }));
    Ok(())
}

fn longest_path(arity: usize) -> Result<()> {
    let word = longest_path_word(arity)?;
    let g = parikh_graph(&word)?.into_graph();
    print(&json!({
        "arity": arity,
        "word": word,
        "vertices": g.len(),
        "path_length": g.edge_count(),
        "is_path": g.is_path(),
    }));
    Ok(())
}

fn compose(words: &[String]) -> Result<()> {
    let parsed = words.iter().map(|w| parse_word(w, None)).collect::<Result<Vec<_>>>()?;
    let word = compose_components(&parsed)?;
    let components = parikh_graph(&word)?.graph().component_ids().len();
    print(&json!({ "word": word, "alphabet_size": word.alphabet_size(), "components": components }));
    Ok(())
}

fn core(word: &str, pattern: &str, alphabet: Option<usize>) -> Result<()> {
    let w = parse_word(word, alphabet)?;
    let p = parse_word(pattern, Some(w.alphabet_size()))?;
    print(&json!({
        "word": w,
        "pattern": p,
        "occurrences": w.subword_count(&p).to_string(),
        "positions": w.core_positions(&p)?,
        "core": w.core(&p)?,
    }));
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn verify(
    suite: Option<String>,
    list: bool,
    alphabet_size: Option<usize>,
    min_alphabet_size: Option<usize>,
    max_len: Option<usize>,
    min_len: Option<usize>,
    full_support: bool,
    max_vertices: Option<usize>,
    jobs: Option<usize>,
) -> Result<ExitCode> {
    if list {
        for s in SUITES {
            let d = s.default_spec();
            let bounds = match s.kind {
                parikh::oracle::InputKind::Words => json!({
                    "alphabet_size": [d.min_alphabet, d.max_alphabet],
                    "len": [d.min_len, d.max_len],
                }),
                parikh::oracle::InputKind::Graphs => json!({ "max_vertices": d.max_vertices }),
                parikh::oracle::InputKind::Sizes => json!({ "alphabet_size": [d.min_alphabet, d.max_alphabet] }),
            };
            println!(
                "{}",
                json!({ "suite": s.name, "kind": s.kind, "defaults": bounds, "description": s.description })
            );
        }
        return Ok(ExitCode::SUCCESS);
    }
    let name = suite.expect("clap requires --suite without --list");
    let mut spec = find_suite(&name)?.default_spec();
    if let Some(s) = alphabet_size {
        spec.max_alphabet = s;
        spec.min_alphabet = spec.min_alphabet.min(s);
    }
    if let Some(s) = min_alphabet_size {
        spec.min_alphabet = s;
    }
    if let Some(n) = max_len {
        spec.max_len = n;
        spec.min_len = spec.min_len.min(n);
    }
    if let Some(n) = min_len {
        spec.min_len = n;
    }
    spec.full_support |= full_support;
    if let Some(v) = max_vertices {
        spec.max_vertices = v;
    }
    if let Some(k) = jobs {
        spec.jobs = k;
    }
    let outcome = run_suite(&name, &spec)?;
    for report in &outcome.counterexamples {
        println!("{}", serde_json::to_string(report)?);
    }
    println!(
        "{}",
        json!({
            "suite": outcome.suite,
            "checked": outcome.checked,
            "counterexamples": outcome.counterexamples.len(),
            "passed": outcome.passed(),
        })
    );
    Ok(if outcome.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Build {
            word,
            alphabet_size,
            format,
        } => build(&word, alphabet_size, format)?,
        Command::Synthesize {
            input,
            trace,
            max_vertices,
        } => synthesize(&input, trace, max_vertices)?,
        Command::Recognize {
            input,
            arity,
            max_vertices,
        } => recognize(&input, arity, max_vertices)?,
        Command::Diameter { word, alphabet_size } => print(&serde_json::to_value(diameter_report(&parse_word(
            &word,
            alphabet_size,
        )?)?)?),
        Command::Hamiltonian { word, alphabet_size } => hamiltonian(&word, alphabet_size)?,
        Command::Slender { size, count } => slender(size, count)?,
        Command::LongestPath { arity } => longest_path(arity)?,
        Command::Compose { words } => compose(&words)?,
        Command::Core {
            word,
            pattern,
            alphabet_size,
        } => core(&word, &pattern, alphabet_size)?,
        Command::Verify {
            suite,
            list,
            alphabet_size,
            min_alphabet_size,
            max_len,
            min_len,
            full_support,
            max_vertices,
            jobs,
        } => {
            return verify(
                suite,
                list,
                alphabet_size,
                min_alphabet_size,
                max_len,
                min_len,
                full_support,
                max_vertices,
                jobs,
            )
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
