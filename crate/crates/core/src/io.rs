//! Text formats: edge lists, partition JSON and Graphviz DOT.
//!
//! Edge list: a header line `n m`, then `m` lines `u v`. Blank lines and
//! everything after `#` are ignored.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{DiGraph, Edge};
use crate::partition::PathPartition;

pub fn parse_edge_list(text: &str) -> Result<DiGraph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last_line = line;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let nums: Vec<usize> = body
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| Error::Parse { line, msg: format!("{t:?} is not a non-negative integer") }))
            .collect::<Result<_>>()?;
        if nums.len() != 2 {
            return Err(Error::Parse { line, msg: format!("expected two integers, found {}", nums.len()) });
        }
        match header {
            None => header = Some((nums[0], nums[1])),
            Some((n, _)) => {
                let (u, v) = (nums[0], nums[1]);
                if u >= n || v >= n {
                    return Err(Error::Parse { line, msg: format!("edge ({u}, {v}) out of range for n = {n}") });
                }
                edges.push(((u, v), line));
            }
        }
    }
    let Some((n, m)) = header else {
        return Err(Error::Parse { line: last_line.max(1), msg: "missing `n m` header".into() });
    };
    if edges.len() != m {
        return Err(Error::Parse { line: last_line, msg: format!("header announces {m} edges, found {}", edges.len()) });
    }
    let mut seen = BTreeSet::new();
    for &((u, v), line) in &edges {
        if u == v {
            return Err(Error::Parse { line, msg: format!("self-loop at {u}") });
        }
        if !seen.insert((u, v)) {
            return Err(Error::Parse { line, msg: format!("duplicate edge ({u}, {v})") });
        }
    }
    DiGraph::new(n, edges.into_iter().map(|(e, _)| e))
}

/// Canonical form: header, then edges in lexicographic order.
pub fn write_edge_list(g: &DiGraph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

#[derive(Serialize, Deserialize)]
struct PartitionFile {
    k: usize,
    paths: Vec<Vec<usize>>,
}

pub fn partition_to_json(p: &PathPartition) -> String {
    let c = p.canonical();
    let file = PartitionFile { k: c.k, paths: c.paths };
    serde_json::to_string_pretty(&file).expect("plain data serializes") + "\n"
}

pub fn partition_from_json(text: &str) -> Result<PathPartition> {
    let f: PartitionFile = serde_json::from_str(text)?;
    Ok(PathPartition::new(f.k, f.paths))
}

/// Partition edges in bold blue, other graph edges dashed grey.
pub fn to_dot(g: &DiGraph, p: Option<&PathPartition>) -> String {
    let chosen: BTreeSet<Edge> = p.map(|p| p.edges().into_iter().collect()).unwrap_or_default();
    let mut out = String::from("digraph G {\n  node [shape=circle];\n");
    for v in 0..g.n() {
        let _ = writeln!(out, "  {v};");
    }
    for &(u, v) in g.edges() {
        if chosen.contains(&(u, v)) {
            let _ = writeln!(out, "  {u} -> {v} [color=blue, penwidth=2];");
        } else {
            let _ = writeln!(out, "  {u} -> {v} [color=gray, style=dashed];");
        }
    }
    out.push_str("}\n");
    out
}

/// A DOT rendering of an arbitrary edge subset, highlighted against `g`.
pub fn edges_to_dot(g: &DiGraph, highlight: &[Edge], label: &str) -> String {
    let chosen: BTreeSet<Edge> = highlight.iter().copied().collect();
    let mut out = format!("digraph G {{\n  label={label:?};\n  node [shape=circle];\n");
    for v in 0..g.n() {
        let _ = writeln!(out, "  {v};");
    }
    for &(u, v) in g.edges() {
        let style = if chosen.contains(&(u, v)) { "color=red, penwidth=2" } else { "color=gray, style=dashed" };
        let _ = writeln!(out, "  {u} -> {v} [{style}];");
    }
    out.push_str("}\n");
    out
}
