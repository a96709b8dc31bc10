//! Approx1: repeatedly find a singleton-augmenting alternating path and
//! apply it, until no singleton can be absorbed.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{DiGraph, Edge, Vertex};
use crate::partition::{singletons_of, validate_partition, PathPartition};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeClass {
    Matched,
    Free,
    Irrelevant,
}

/// Class of every edge of `g`, in the order of `g.edges()`.
pub fn classify_edges(g: &DiGraph, p: &PathPartition) -> Vec<EdgeClass> {
    let loc = p.locate(g.n());
    let end = |v: Vertex| {
        let (pi, j) = loc[v];
        j == 0 || j + 1 == p.paths[pi].len()
    };
    g.edges()
        .iter()
        .map(|&e| {
            if is_matched(p, &loc, e) {
                EdgeClass::Matched
            } else if end(e.0) || end(e.1) {
                EdgeClass::Free
            } else {
                EdgeClass::Irrelevant
            }
        })
        .collect()
}

/// Whether `(u, v)` is the first or last edge of a path of `p`.
fn is_matched(p: &PathPartition, loc: &[(usize, usize)], (u, v): Edge) -> bool {
    let (pu, ju) = loc[u];
    let (pv, jv) = loc[v];
    if pu != pv || jv != ju + 1 {
        return false;
    }
    let len = p.paths[pu].len();
    ju == 0 || jv == len - 1
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WalkStep {
    Free(Edge),
    Matched(Edge),
}

/// Free and matched edges alternating from a singleton, ending with a free
/// edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AugmentingWalk {
    pub start: Vertex,
    pub steps: Vec<WalkStep>,
}

/// Working copy of a partition with vertex positions.
#[derive(Clone)]
struct Work {
    paths: Vec<Vec<Vertex>>,
    loc: Vec<(usize, usize)>,
}

impl Work {
    fn new(p: &PathPartition, n: usize) -> Self {
        Self { paths: p.paths.clone(), loc: p.locate(n) }
    }

    fn relocate(&mut self, pi: usize) {
        for (j, &v) in self.paths[pi].iter().enumerate() {
            self.loc[v] = (pi, j);
        }
    }

    fn set(&mut self, pi: usize, path: Vec<Vertex>) {
        self.paths[pi] = path;
        self.relocate(pi);
    }

    fn push(&mut self, path: Vec<Vertex>) {
        self.paths.push(path);
        let pi = self.paths.len() - 1;
        self.relocate(pi);
    }

    fn finish(self, k: usize) -> PathPartition {
        PathPartition::new(k, self.paths.into_iter().filter(|q| !q.is_empty()).collect())
    }

    fn is_singleton(&self, v: Vertex) -> bool {
        self.paths[self.loc[v].0].len() == 1
    }

    /// The matched edge that must follow the free edge `e` at the singleton
    /// `c`, and the vertex it cuts loose: the head when `e` enters a second
    /// vertex, the tail when `e` leaves a second-last vertex. With `k = 2`
    /// a free edge into either end of a 2-path also continues.
    fn continuation(&self, k: usize, c: Vertex, e: Edge) -> Option<(Edge, Vertex)> {
        let other = if e.0 == c { e.1 } else { e.0 };
        let (pi, j) = self.loc[other];
        let path = &self.paths[pi];
        let len = path.len();
        if len < 2 {
            return None;
        }
        if e.0 == c {
            if j == 1 {
                return Some(((path[0], other), path[0]));
            }
            if k == 2 && len == 2 && j == 0 {
                return Some(((other, path[1]), path[1]));
            }
        } else {
            if j == len - 2 {
                return Some(((other, path[len - 1]), path[len - 1]));
            }
            if k == 2 && len == 2 && j == 1 {
                return Some(((path[0], other), path[0]));
            }
        }
        None
    }

    /// Drops the end vertex `next` from its path and attaches `c` to the
    /// path through the free edge `e`; `next` becomes the singleton.
    fn hand_over(&mut self, c: Vertex, e: Edge, next: Vertex) {
        let (cp, _) = self.loc[c];
        let (pi, _) = self.loc[next];
        let mut path: Vec<Vertex> = self.paths[pi].iter().copied().filter(|&v| v != next).collect();
        if e.0 == c {
            path.insert(0, c);
        } else {
            path.push(c);
        }
        self.set(pi, path);
        self.set(cp, vec![next]);
    }

    /// Lemma 9's update for a final free edge at the singleton `c`.
    fn absorb(&mut self, (a, b): Edge, c: Vertex) {
        let (cp, _) = self.loc[c];
        self.paths[cp].clear();
        if a == c {
            let (pi, j) = self.loc[b];
            let path = self.paths[pi].clone();
            let len = path.len();
            if len <= 2 && j == 0 {
                let mut merged = vec![c];
                merged.extend(path);
                self.set(pi, merged);
            } else if j == 0 {
                self.set(pi, path[1..].to_vec());
                self.push(vec![c, path[0]]);
            } else {
                let mut right = vec![c];
                right.extend_from_slice(&path[j..]);
                self.set(pi, path[..j].to_vec());
                self.push(right);
            }
        } else {
            let (pi, j) = self.loc[a];
            let path = self.paths[pi].clone();
            let len = path.len();
            if len <= 2 && j == len - 1 {
                let mut merged = path;
                merged.push(c);
                self.set(pi, merged);
            } else if j == len - 1 {
                self.set(pi, path[..j].to_vec());
                self.push(vec![path[j], c]);
            } else {
                let mut left = path[..=j].to_vec();
                left.push(c);
                self.set(pi, path[j + 1..].to_vec());
                self.push(left);
            }
        }
    }
}

/// Replays a walk step by step, checking each step against the partition as
/// modified so far. Returns the modified partition and, when the walk ends
/// on a matched edge, the current singleton.
fn replay(g: &DiGraph, p: &PathPartition, walk: &AugmentingWalk) -> Result<(Work, Option<Vertex>)> {
    let stale = |msg: String| Error::StaleWalk(msg);
    let orig_loc = p.locate(g.n());
    let mut w = Work::new(p, g.n());
    if !w.is_singleton(walk.start) {
        return Err(Error::NotASingleton(walk.start));
    }
    let mut cur = Some(walk.start);
    let mut i = 0;
    while i < walk.steps.len() {
        let c = cur.ok_or_else(|| stale("steps after the final free edge".into()))?;
        let WalkStep::Free((a, b)) = walk.steps[i] else {
            return Err(stale(format!("step {i} should be a free edge")));
        };
        if !g.has_edge(a, b) || (a != c && b != c) || a == b {
            return Err(stale(format!("free edge ({a},{b}) does not leave the singleton {c}")));
        }
        match walk.steps.get(i + 1) {
            Some(&WalkStep::Matched(m)) => {
                match w.continuation(p.k, c, (a, b)) {
                    Some((expect, next)) if expect == m && is_matched(p, &orig_loc, m) => {
                        w.hand_over(c, (a, b), next);
                        cur = Some(next);
                    }
                    _ => {
                        return Err(stale(format!("matched edge {m:?} does not follow ({a},{b})")));
                    }
                }
                i += 2;
            }
            Some(_) => return Err(stale(format!("step {} should be a matched edge", i + 1))),
            None => {
                w.absorb((a, b), c);
                cur = None;
                i += 1;
            }
        }
    }
    Ok((w, cur))
}

/// Breadth-first search for an augmenting walk from the singleton `s`.
///
/// States are the singletons created along the walk; a vertex is entered at
/// most once. Free edges at a state are tried in lexicographic order.
pub fn find_singleton_augmenting(g: &DiGraph, p: &PathPartition, s: Vertex) -> Result<Option<AugmentingWalk>> {
    if s >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: s, n: g.n() });
    }
    let loc = p.locate(g.n());
    if p.paths[loc[s].0].len() != 1 {
        return Err(Error::NotASingleton(s));
    }
    let before = p.num_singletons();
    let mut seen = vec![false; g.n()];
    seen[s] = true;
    let mut queue = VecDeque::from([AugmentingWalk { start: s, steps: Vec::new() }]);
    while let Some(walk) = queue.pop_front() {
        let (work, cur) = replay(g, p, &walk)?;
        let c = cur.expect("queued walks end at a singleton");
        for e in g.incident_edges(c) {
            if let Some((m, next)) = work.continuation(p.k, c, e) {
                if is_matched(p, &loc, m) && !seen[next] {
                    seen[next] = true;
                    let mut steps = walk.steps.clone();
                    steps.push(WalkStep::Free(e));
                    steps.push(WalkStep::Matched(m));
                    queue.push_back(AugmentingWalk { start: s, steps });
                }
                continue;
            }
            let mut steps = walk.steps.clone();
            steps.push(WalkStep::Free(e));
            let cand = AugmentingWalk { start: s, steps };
            let mut trial = work.clone();
            trial.absorb(e, c);
            let q = trial.finish(p.k);
            if q.num_singletons() < before && validate_partition(g, &q).ok {
                return Ok(Some(cand));
            }
        }
    }
    Ok(None)
}

/// Applies a walk found against `p`.
pub fn apply_singleton_augmenting(g: &DiGraph, p: &PathPartition, walk: &AugmentingWalk) -> Result<PathPartition> {
    let (work, cur) = replay(g, p, walk)?;
    if cur.is_some() {
        return Err(Error::StaleWalk("walk does not end with a free edge".into()));
    }
    let q = work.finish(p.k);
    let report = validate_partition(g, &q);
    if !report.ok {
        return Err(Error::StaleWalk(report.messages().join("; ")));
    }
    if q.num_singletons() >= p.num_singletons() {
        return Err(Error::StaleWalk("walk does not reduce the singleton count".into()));
    }
    Ok(q)
}

/// k-path partition with the minimum number of singletons.
pub fn approx1(g: &DiGraph, k: usize) -> Result<PathPartition> {
    if k < 2 {
        return Err(Error::InvalidK { k, min: 2, hint: "" });
    }
    let mut q = PathPartition::singletons(k, g.n());
    'restart: loop {
        for s in singletons_of(&q) {
            if let Some(walk) = find_singleton_augmenting(g, &q, s)? {
                q = apply_singleton_augmenting(g, &q, &walk)?;
                continue 'restart;
            }
        }
        return Ok(q.canonical());
    }
}
