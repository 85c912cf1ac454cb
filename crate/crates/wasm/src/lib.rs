//! Browser bindings: three operations returning JSON with an SVG drawing.
//!
//! The `*_json` functions hold the logic and run natively; the exported
//! wrappers only adapt their errors for JavaScript.

use std::fmt::Write as _;

use serde_json::json;
use wasm_bindgen::prelude::*;

use parikh::analysis::{diameter_report, longest_path_word};
use parikh::graph::has_hamiltonian_cycle;
use parikh::recognition::{recognize_binary, recognize_ternary, synthesize_any};
use parikh::{parikh_graph, BipartiteGraph, Limits, Word};

/// Largest graph the page accepts; keeps the exact searches interactive.
const MAX_VERTICES: usize = 16;

/// Draws `G(word)` with part X on the top row and part Y on the bottom
/// row, each listed in the canonical ordering.
pub fn draw(word: &Word) -> Result<String, String> {
    let pg = parikh_graph(word).map_err(|e| e.to_string())?;
    let g = pg.graph();
    let order = pg.canonical_strong_ordering();
    let s = word.alphabet_size();
    let columns = order.x.len().max(order.y.len()).max(1);
    let (step, pad, top, bottom) = (56.0, 32.0, 36.0, 164.0);
    let width = pad * 2.0 + step * (columns - 1) as f64;
    let mut at = vec![(0.0, 0.0); g.len()];
    for (row, y) in [(&order.x, top), (&order.y, bottom)] {
        let offset = pad + step * (columns - row.len()) as f64 / 2.0;
        for (i, &v) in row.iter().enumerate() {
            at[v] = (offset + step * i as f64, y);
        }
    }
    let mut svg = format!(
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {width} 200" width="{width}" height="200" font-family="sans-serif" font-size="11">"#
    );
    for (u, v) in g.edges() {
        let ((x1, y1), (x2, y2)) = (at[u], at[v]);
        let _ = write!(
            svg,
            r##"<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="#5b6b7f"/>"##
        );
    }
    for (v, &(x, y)) in at.iter().enumerate() {
        let fill = if v < g.x_len() { "#e8f0ff" } else { "#fff2e0" };
        let label = g.label(v).render(s);
        let _ = write!(
            svg,
            r##"<circle cx="{x}" cy="{y}" r="17" fill="{fill}" stroke="#22303f"/><text x="{x}" y="{}" text-anchor="middle">{label}</text>"##,
            y + 4.0
        );
    }
    svg.push_str("</svg>");
    Ok(svg)
}

fn parse(text: &str, alphabet: Option<usize>) -> Result<Word, String> {
    let word = Word::parse(text.trim(), alphabet).map_err(|e| e.to_string())?;
    if word.len() > MAX_VERTICES {
        return Err(format!("words are limited to {MAX_VERTICES} letters here"));
    }
    Ok(word)
}

/// The Parikh graph of a word with its diameter report and Hamiltonicity.
/// `alphabet_size` 0 infers the alphabet from the word.
pub fn build_json(text: &str, alphabet_size: usize) -> Result<String, String> {
    let word = parse(text, (alphabet_size > 0).then_some(alphabet_size))?;
    let pg = parikh_graph(&word).map_err(|e| e.to_string())?;
    let report = diameter_report(&word).map_err(|e| e.to_string())?;
    let hamiltonian = has_hamiltonian_cycle(pg.graph(), &Limits::default()).map_err(|e| e.to_string())?;
    Ok(json!({
        "word": word,
        "graph": pg.labeled().to_graph_json(),
        "edges": pg.graph().edge_count(),
        "components": pg.graph().component_ids().len(),
        "diameter": report,
        "hamiltonian": hamiltonian,
        "svg": draw(&word)?,
    })
    .to_string())
}

/// A word for a graph given as graph JSON, preferring two or three letters
/// when the graph allows it.
pub fn synthesize_json(graph: &str) -> Result<String, String> {
    let g = BipartiteGraph::from_json(graph).map_err(|e| e.to_string())?;
    if g.is_empty() {
        return Err("the graph has no vertices".into());
    }
    if g.len() > MAX_VERTICES {
        return Err(format!("graphs are limited to {MAX_VERTICES} vertices here"));
    }
    let limits = Limits::default();
    let word = synthesize_any(&g, &limits).map_err(|e| e.to_string())?;
    let word = match word {
        Some(w) if g.is_connected() => {
            let small = match recognize_binary(&g).map_err(|e| e.to_string())? {
                Some(b) => Some(b),
                None => recognize_ternary(&g, &limits)
                    .map_err(|e| e.to_string())?
                    .map(|t| t.word),
            };
            Some(small.unwrap_or(w))
        }
        other => other,
    };
    Ok(match word {
        Some(w) => json!({
            "representable": true,
            "word": w,
            "arity": w.alphabet_size(),
            "svg": draw(&w)?,
        }),
        None => json!({ "representable": false, "word": null, "arity": null, "svg": null }),
    }
    .to_string())
}

/// The longest-path word over `arity` letters.
pub fn longest_path_json(arity: usize) -> Result<String, String> {
    if !(2..=5).contains(&arity) {
        return Err("choose between 2 and 5 letters".into());
    }
    let word = longest_path_word(arity).map_err(|e| e.to_string())?;
    let g = parikh_graph(&word).map_err(|e| e.to_string())?.into_graph();
    Ok(json!({
        "word": word,
        "vertices": g.len(),
        "path_length": g.edge_count(),
        "svg": draw(&word)?,
    })
    .to_string())
}

#[wasm_bindgen]
pub fn build(text: &str, alphabet_size: usize) -> Result<String, JsValue> {
    build_json(text, alphabet_size).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn synthesize(graph: &str) -> Result<String, JsValue> {
    synthesize_json(graph).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn longest_path(arity: usize) -> Result<String, JsValue> {
    longest_path_json(arity).map_err(|e| JsValue::from_str(&e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    fn parse_json(s: &str) -> Value {
        serde_json::from_str(s).unwrap()
    }

    #[test]
    fn build_reports_the_graph() {
        let v = parse_json(&build_json("bbccabdc", 0).unwrap());
        assert_eq!(v["edges"], 10);
        assert_eq!(v["diameter"]["diameter"], 5);
        assert!(v["svg"].as_str().unwrap().starts_with("<svg"));
        assert_eq!(v["svg"].as_str().unwrap().matches("<line").count(), 10);
        assert!(build_json("", 0).is_err());
        assert!(build_json("abcdefghabcdefghab", 0).is_err());
    }

    #[test]
    fn synthesize_prefers_small_alphabets() {
        let p5 = parikh_graph(&Word::parse("babcb", None).unwrap())
            .unwrap()
            .labeled()
            .to_json();
        let v = parse_json(&synthesize_json(&p5).unwrap());
        assert_eq!(
            (v["representable"].clone(), v["arity"].clone()),
            (true.into(), 3.into())
        );
        let c6 = r#"{"x":["1","2","3"],"y":["4","5","6"],"edges":[["1","4"],["1","5"],["2","5"],["2","6"],["3","6"],["3","4"]]}"#;
        assert_eq!(parse_json(&synthesize_json(c6).unwrap())["representable"], false);
        assert!(synthesize_json("{").is_err());
    }

    #[test]
    fn longest_paths() {
        let v = parse_json(&longest_path_json(4).unwrap());
        assert_eq!(
            (v["word"].clone(), v["path_length"].clone()),
            ("cdbcdabcab".into(), 9.into())
        );
        assert!(longest_path_json(1).is_err());
    }
}
