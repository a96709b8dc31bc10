//! k-path partitions and their validation.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::{DiGraph, Edge, Vertex};

/// Vertex-disjoint directed paths of order at most `k` covering the graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PathPartition {
    pub k: usize,
    pub paths: Vec<Vec<Vertex>>,
}

impl PathPartition {
    pub fn new(k: usize, paths: Vec<Vec<Vertex>>) -> Self {
        Self { k, paths }
    }

    /// The partition of `n` singletons.
    pub fn singletons(k: usize, n: usize) -> Self {
        Self::new(k, (0..n).map(|v| vec![v]).collect())
    }

    pub fn path_count(&self) -> usize {
        self.paths.len()
    }

    pub fn edge_count(&self) -> usize {
        self.paths.iter().map(|p| p.len().saturating_sub(1)).sum()
    }

    pub fn num_singletons(&self) -> usize {
        self.paths.iter().filter(|p| p.len() == 1).count()
    }

    pub fn vertex_count(&self) -> usize {
        self.paths.iter().map(Vec::len).sum()
    }

    /// Number of paths of each order; index `i` holds the count of `i`-paths.
    pub fn order_counts(&self) -> Vec<usize> {
        let max = self.paths.iter().map(Vec::len).max().unwrap_or(0).max(self.k);
        let mut counts = vec![0; max + 1];
        for p in &self.paths {
            counts[p.len()] += 1;
        }
        counts
    }

    pub fn edges(&self) -> Vec<Edge> {
        let mut out: Vec<Edge> = self
            .paths
            .iter()
            .flat_map(|p| p.windows(2).map(|w| (w[0], w[1])))
            .collect();
        out.sort_unstable();
        out
    }

    /// Paths sorted by their first vertex; the form every writer emits.
    pub fn canonical(&self) -> Self {
        let mut paths = self.paths.clone();
        paths.sort();
        Self { k: self.k, paths }
    }

    /// `(path index, position)` for every vertex of an `n`-vertex graph.
    /// Assumes the partition is valid.
    pub fn locate(&self, n: usize) -> Vec<(usize, usize)> {
        let mut loc = vec![(usize::MAX, usize::MAX); n];
        for (i, p) in self.paths.iter().enumerate() {
            for (j, &v) in p.iter().enumerate() {
                loc[v] = (i, j);
            }
        }
        loc
    }
}

/// Vertices on 1-paths, in increasing order.
pub fn singletons_of(p: &PathPartition) -> Vec<Vertex> {
    let mut out: Vec<Vertex> = p.paths.iter().filter(|q| q.len() == 1).map(|q| q[0]).collect();
    out.sort_unstable();
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    BadK(usize),
    EmptyPath(usize),
    TooLong { path: usize, order: usize, k: usize },
    OutOfRange(Vertex),
    Uncovered(Vertex),
    Repeated { vertex: Vertex, times: usize },
    MissingEdge(Vertex, Vertex),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::BadK(k) => write!(f, "k must be at least 1, got {k}"),
            Violation::EmptyPath(i) => write!(f, "path {i} is empty"),
            Violation::TooLong { path, order, k } => {
                write!(f, "path {path} has order {order} > k={k}")
            }
            Violation::OutOfRange(v) => write!(f, "vertex {v} out of range"),
            Violation::Uncovered(v) => write!(f, "vertex {v} not covered"),
            Violation::Repeated { vertex, times } => {
                write!(f, "vertex {vertex} covered {times} times")
            }
            Violation::MissingEdge(u, v) => write!(f, "missing edge ({u},{v})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn messages(&self) -> Vec<String> {
        self.violations.iter().map(ToString::to_string).collect()
    }
}

/// Checks every partition invariant against `g`, collecting all violations.
pub fn validate_partition(g: &DiGraph, p: &PathPartition) -> ValidationReport {
    let mut violations = Vec::new();
    if p.k < 1 {
        violations.push(Violation::BadK(p.k));
    }
    let mut cover = vec![0usize; g.n()];
    for (i, path) in p.paths.iter().enumerate() {
        if path.is_empty() {
            violations.push(Violation::EmptyPath(i));
        }
        if path.len() > p.k {
            violations.push(Violation::TooLong { path: i, order: path.len(), k: p.k });
        }
        for &v in path {
            if v >= g.n() {
                violations.push(Violation::OutOfRange(v));
            } else {
                cover[v] += 1;
            }
        }
        for w in path.windows(2) {
            if !g.has_edge(w[0], w[1]) {
                violations.push(Violation::MissingEdge(w[0], w[1]));
            }
        }
    }
    for (v, &times) in cover.iter().enumerate() {
        match times {
            0 => violations.push(Violation::Uncovered(v)),
            1 => {}
            _ => violations.push(Violation::Repeated { vertex: v, times }),
        }
    }
    ValidationReport { ok: violations.is_empty(), violations }
}
