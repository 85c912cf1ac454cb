//! Graph JSON and DOT formats.
//!
//! JSON: `{"x": [...], "y": [...], "edges": [["<x label>", "<y label>"], ...]}`.
//! Emitted edges are sorted by the position of their endpoints in `x`, then
//! `y`, so re-serializing a parsed document is stable.

use std::fmt::{Display, Write as _};

use serde::{Deserialize, Serialize};

use super::{BipartiteGraph, Label};
use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphJson {
    pub x: Vec<String>,
    pub y: Vec<String>,
    pub edges: Vec<[String; 2]>,
}

impl GraphJson {
    pub fn into_graph(self) -> Result<BipartiteGraph> {
        BipartiteGraph::new(self.x, self.y, self.edges.into_iter().map(|[a, b]| (a, b)))
    }
}

impl BipartiteGraph<String> {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str::<GraphJson>(text)?.into_graph()
    }
}

impl<L: Label + Display> BipartiteGraph<L> {
    pub fn to_graph_json(&self) -> GraphJson {
        let name = |v: usize| self.label(v).to_string();
        GraphJson {
            x: self.x_ids().map(name).collect(),
            y: self.y_ids().map(name).collect(),
            edges: self.edges().map(|(u, v)| [name(u), name(v)]).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_graph_json()).expect("string maps serialize")
    }

    /// DOT with part X on one rank and part Y on the other.
    pub fn to_dot(&self) -> String {
        let quote = |v: usize| format!("{:?}", self.label(v).to_string());
        let mut out = String::from("graph G {\n  rankdir=TB;\n  node [shape=circle];\n");
        for (part, ids) in [("x", self.x_ids()), ("y", self.y_ids())] {
            let names: Vec<String> = ids.map(quote).collect();
            let _ = writeln!(out, "  subgraph part_{part} {{ rank=same; {} }}", names.join("; "));
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  {} -- {};", quote(u), quote(v));
        }
        out.push_str("}\n");
        out
    }
}
