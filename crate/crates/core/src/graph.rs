//! Simple directed graphs and path-cycle covers.

use std::collections::BTreeSet;
use serde::Serialize;

use crate::error::{Error, Result};

pub type Vertex = usize;
pub type Edge = (Vertex, Vertex);

/// A simple directed graph on vertices `0..n`.
///
/// Edges are kept sorted lexicographically and the adjacency lists are
/// sorted by neighbor id, so every scan over the graph is deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiGraph {
    n: usize,
    edges: Vec<Edge>,
    out_adj: Vec<Vec<Vertex>>,
    in_adj: Vec<Vec<Vertex>>,
}

impl DiGraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if !set.insert((u, v)) {
                return Err(Error::DuplicateEdge(u, v));
            }
        }
        let edges: Vec<Edge> = set.into_iter().collect();
        let mut out_adj = vec![Vec::new(); n];
        let mut in_adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            out_adj[u].push(v);
            in_adj[v].push(u);
        }
        for list in in_adj.iter_mut() {
            list.sort_unstable();
        }
        Ok(Self { n, edges, out_adj, in_adj })
    }

    pub fn empty(n: usize) -> Self {
        Self::new(n, []).expect("edgeless graph is always valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// All edges in lexicographic order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn out_neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.out_adj[v]
    }

    pub fn in_neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.in_adj[v]
    }

    pub fn out_degree(&self, v: Vertex) -> usize {
        self.out_adj[v].len()
    }

    pub fn in_degree(&self, v: Vertex) -> usize {
        self.in_adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && self.out_adj[u].binary_search(&v).is_ok()
    }

    /// Edges incident at `v` in either direction, in lexicographic order.
    pub fn incident_edges(&self, v: Vertex) -> Vec<Edge> {
        let mut out: Vec<Edge> = self.in_adj[v].iter().map(|&u| (u, v)).collect();
        out.extend(self.out_adj[v].iter().map(|&w| (v, w)));
        out.sort_unstable();
        out
    }

    /// Whether the vertex sequence is a directed path of distinct vertices.
    pub fn is_path(&self, seq: &[Vertex]) -> bool {
        let mut seen = BTreeSet::new();
        seq.iter().all(|&v| v < self.n && seen.insert(v))
            && seq.windows(2).all(|w| self.has_edge(w[0], w[1]))
    }
}

/// A connected component of a path-cycle cover.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(tag = "kind", content = "vertices", rename_all = "snake_case")]
pub enum Component {
    /// Vertices in path order, head first. May be a single vertex.
    Path(Vec<Vertex>),
    /// Vertices in cycle order starting at the smallest vertex.
    Cycle(Vec<Vertex>),
}

impl Component {
    pub fn vertices(&self) -> &[Vertex] {
        match self {
            Component::Path(v) | Component::Cycle(v) => v,
        }
    }

    pub fn is_cycle(&self) -> bool {
        matches!(self, Component::Cycle(_))
    }

    pub fn is_two_cycle(&self) -> bool {
        matches!(self, Component::Cycle(v) if v.len() == 2)
    }

    pub fn edges(&self) -> Vec<Edge> {
        let vs = self.vertices();
        let mut out: Vec<Edge> = vs.windows(2).map(|w| (w[0], w[1])).collect();
        if self.is_cycle() {
            out.push((vs[vs.len() - 1], vs[0]));
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        match self {
            Component::Path(v) => v.len() - 1,
            Component::Cycle(v) => v.len(),
        }
    }
}

/// An edge subset with in- and out-degree at most one at every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathCycleCover {
    n: usize,
    edges: Vec<Edge>,
    succ: Vec<Option<Vertex>>,
    pred: Vec<Option<Vertex>>,
}

impl PathCycleCover {
    /// Builds a cover over `g`, rejecting non-edges and degree violations.
    pub fn new(g: &DiGraph, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let cover = Self::unchecked(g.n(), edges)?;
        for &(u, v) in &cover.edges {
            if !g.has_edge(u, v) {
                return Err(Error::MissingEdge(u, v));
            }
        }
        Ok(cover)
    }

    /// Builds a cover on `n` vertices without checking membership in a graph.
    pub fn unchecked(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let mut succ = vec![None; n];
        let mut pred = vec![None; n];
        let mut list = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange { vertex: u.max(v), n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if succ[u].is_some() {
                return Err(Error::NotACover(format!("two cover edges leave vertex {u}")));
            }
            if pred[v].is_some() {
                return Err(Error::NotACover(format!("two cover edges enter vertex {v}")));
            }
            succ[u] = Some(v);
            pred[v] = Some(u);
            list.push((u, v));
        }
        list.sort_unstable();
        Ok(Self { n, edges: list, succ, pred })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn succ(&self, v: Vertex) -> Option<Vertex> {
        self.succ[v]
    }

    pub fn pred(&self, v: Vertex) -> Option<Vertex> {
        self.pred[v]
    }

    pub fn contains(&self, (u, v): Edge) -> bool {
        self.succ[u] == Some(v)
    }

    /// Maximal components ordered by their smallest vertex.
    pub fn components(&self) -> Vec<Component> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        // paths first from their heads, then whatever is left lies on cycles
        for v in 0..self.n {
            if self.pred[v].is_none() {
                let mut seq = vec![v];
                seen[v] = true;
                let mut cur = v;
                while let Some(next) = self.succ[cur] {
                    seen[next] = true;
                    seq.push(next);
                    cur = next;
                }
                comps.push(Component::Path(seq));
            }
        }
        for v in 0..self.n {
            if !seen[v] {
                let mut seq = vec![v];
                seen[v] = true;
                let mut cur = self.succ[v].expect("vertex on a cycle has a successor");
                while cur != v {
                    seen[cur] = true;
                    seq.push(cur);
                    cur = self.succ[cur].expect("vertex on a cycle has a successor");
                }
                comps.push(Component::Cycle(seq));
            }
        }
        comps.sort_by_key(|c| *c.vertices().iter().min().expect("components are non-empty"));
        comps
    }
}

/// Decomposes a cover edge set of `g` into its path and cycle components.
pub fn cover_components(g: &DiGraph, edges: &[Edge]) -> Result<Vec<Component>> {
    Ok(PathCycleCover::new(g, edges.iter().copied())?.components())
}

/// For each vertex, the index of the component containing it.
pub fn component_index(n: usize, comps: &[Component]) -> Vec<usize> {
    let mut idx = vec![usize::MAX; n];
    for (i, c) in comps.iter().enumerate() {
        for &v in c.vertices() {
            idx[v] = i;
        }
    }
    idx
}
