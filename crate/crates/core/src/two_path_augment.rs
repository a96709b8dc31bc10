//! Approx3 for k = 3: starting from approx1, repeatedly turn three 2-paths
//! into two 3-paths along an alternating walk of matched (2-path) edges and
//! free edges.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{DiGraph, Edge, PathCycleCover, Vertex};
use crate::partition::{validate_partition, PathPartition};
use crate::singleton_augment::approx1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TwoPathEdgeClass {
    /// On a 2-path.
    Matched,
    /// Outside the partition.
    Free,
    /// On a 3-path.
    Irrelevant,
}

/// Class of every edge of `g`, in the order of `g.edges()`.
pub fn classify_two_path_edges(g: &DiGraph, p: &PathPartition) -> Vec<TwoPathEdgeClass> {
    let on_two: BTreeSet<Edge> = p.paths.iter().filter(|q| q.len() == 2).map(|q| (q[0], q[1])).collect();
    let used: BTreeSet<Edge> = p.edges().into_iter().collect();
    g.edges()
        .iter()
        .map(|e| {
            if on_two.contains(e) {
                TwoPathEdgeClass::Matched
            } else if used.contains(e) {
                TwoPathEdgeClass::Irrelevant
            } else {
                TwoPathEdgeClass::Free
            }
        })
        .collect()
}

/// An alternating walk: the `i`-th matched occurrence is traversed from
/// `verts[2i]` to `verts[2i + 1]` (regardless of its direction), and
/// `free[i]` joins `verts[2i + 1]` to `verts[2i + 2]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AugmentingWalk3 {
    pub verts: Vec<Vertex>,
    /// Matched occurrences as directed in the partition.
    pub matched: Vec<Edge>,
    pub free: Vec<Edge>,
}

impl AugmentingWalk3 {
    /// Number of matched-edge occurrences.
    pub fn ell(&self) -> usize {
        self.matched.len()
    }

    pub fn first_repeats(&self) -> usize {
        self.matched.iter().filter(|&&e| e == self.matched[0]).count()
    }

    pub fn last_repeats(&self) -> usize {
        let last = self.matched[self.matched.len() - 1];
        self.matched.iter().filter(|&&e| e == last).count()
    }
}

fn same_ends(e: Edge, a: Vertex, b: Vertex) -> bool {
    e == (a, b) || e == (b, a)
}

/// Two directed edges meeting at one vertex and forming a directed 3-path.
fn composes(a: Edge, b: Edge) -> bool {
    let chain = |(x, y): Edge, (y2, z): Edge| y == y2 && x != z;
    chain(a, b) || chain(b, a)
}

/// Checks constraints #1-#6 plus the structural well-formedness of `w`
/// against `p`, returning every violation found.
pub fn check_two_path_walk(g: &DiGraph, p: &PathPartition, w: &AugmentingWalk3) -> Vec<String> {
    let mut errs = Vec::new();
    let l = w.matched.len();
    if l == 0 || w.verts.len() != 2 * l || w.free.len() + 1 != l {
        return vec![format!("malformed walk: {} vertices, {} matched, {} free", w.verts.len(), l, w.free.len())];
    }
    let two_path_edges: BTreeSet<Edge> = p.paths.iter().filter(|q| q.len() == 2).map(|q| (q[0], q[1])).collect();
    let used: BTreeSet<Edge> = p.edges().into_iter().collect();
    for (i, &e) in w.matched.iter().enumerate() {
        if !two_path_edges.contains(&e) || !same_ends(e, w.verts[2 * i], w.verts[2 * i + 1]) {
            errs.push(format!("occurrence {i}: {e:?} is not the 2-path edge between its walk vertices"));
        }
    }
    for (i, &f) in w.free.iter().enumerate() {
        if !g.has_edge(f.0, f.1) || used.contains(&f) || !same_ends(f, w.verts[2 * i + 1], w.verts[2 * i + 2]) {
            errs.push(format!("free step {i}: {f:?} is not a free edge between its walk vertices"));
        }
    }
    let distinct_free: BTreeSet<Edge> = w.free.iter().copied().collect();
    if distinct_free.len() != w.free.len() {
        errs.push("a free edge repeats".into());
    }
    if !errs.is_empty() {
        return errs;
    }
    let distinct: BTreeSet<Edge> = w.matched.iter().copied().collect();
    if distinct.len() < 3 {
        errs.push("#1: fewer than three distinct matched edges".into());
    }
    let (first, last) = (w.matched[0], w.matched[l - 1]);
    for &e in &distinct {
        let c = w.matched.iter().filter(|&&x| x == e).count();
        let ok = if first == last && e == first {
            c == 3
        } else if e == first || e == last {
            c <= 2
        } else {
            c == 1
        };
        if !ok {
            errs.push(format!("#2: {e:?} appears {c} times"));
        }
    }
    if !composes(first, w.free[0]) {
        errs.push("#3: first matched and first free edge do not form a 3-path".into());
    }
    // the single other free edge at vertex `x`, if exactly one exists
    let partner = |x: Vertex, f: Edge| {
        let others: Vec<Edge> = w.free.iter().copied().filter(|&o| o != f && (o.0 == x || o.1 == x)).collect();
        (others.len() == 1).then(|| others[0])
    };
    let f_first = w.free[0];
    if w.first_repeats() >= 2 && !partner(w.verts[1], f_first).is_some_and(|o| composes(f_first, o)) {
        errs.push("#4: the first free edge has no composable partner".into());
    }
    let f_last = w.free[l - 2];
    if w.last_repeats() == 1 {
        if !composes(last, f_last) {
            errs.push("#5: last matched and last free edge do not form a 3-path".into());
        }
    } else if !partner(w.verts[2 * l - 2], f_last).is_some_and(|o| composes(f_last, o)) {
        errs.push("#6: the last free edge has no composable partner".into());
    }
    errs
}

/// Symmetric difference of `p` and the walk: free edges are added, matched
/// edges with an internal occurrence are removed. The result must trade
/// three 2-paths for two 3-paths.
pub fn apply_two_path_augmenting(g: &DiGraph, p: &PathPartition, w: &AugmentingWalk3) -> Result<PathPartition> {
    let errs = check_two_path_walk(g, p, w);
    if !errs.is_empty() {
        return Err(Error::StaleWalk(errs.join("; ")));
    }
    let l = w.matched.len();
    let mut removed: BTreeSet<Edge> = w.matched[1..l - 1].iter().copied().collect();
    if w.matched[0] == w.matched[l - 1] {
        removed.insert(w.matched[0]);
    }
    let edges = p.edges().into_iter().filter(|e| !removed.contains(e)).chain(w.free.iter().copied());
    let cover = PathCycleCover::unchecked(g.n(), edges).map_err(|e| Error::StaleWalk(e.to_string()))?;
    let mut paths = Vec::new();
    for c in cover.components() {
        if c.is_cycle() {
            return Err(Error::StaleWalk("symmetric difference closes a cycle".into()));
        }
        paths.push(c.vertices().to_vec());
    }
    let q = PathPartition::new(3, paths).canonical();
    let report = validate_partition(g, &q);
    if !report.ok {
        return Err(Error::StaleWalk(report.messages().join("; ")));
    }
    let (before, after) = (p.order_counts(), q.order_counts());
    let delta = |i: usize| after[i] as i64 - before[i] as i64;
    if (delta(1), delta(2), delta(3)) != (0, -3, 2) {
        return Err(Error::StaleWalk(format!(
            "order counts changed by ({}, {}, {})",
            delta(1),
            delta(2),
            delta(3)
        )));
    }
    Ok(q)
}

struct Search<'a> {
    g: &'a DiGraph,
    p: &'a PathPartition,
    /// The 2-path edge at each vertex on a 2-path.
    medge: Vec<Option<Edge>>,
    /// Free edges at each vertex whose other end lies on a 2-path.
    free_at: Vec<Vec<Edge>>,
    verts: Vec<Vertex>,
    matched: Vec<Edge>,
    free: Vec<Edge>,
}

impl Search<'_> {
    fn walk(&self) -> AugmentingWalk3 {
        AugmentingWalk3 { verts: self.verts.clone(), matched: self.matched.clone(), free: self.free.clone() }
    }

    fn accept(&self) -> Option<AugmentingWalk3> {
        let w = self.walk();
        apply_two_path_augmenting(self.g, self.p, &w).ok().map(|_| w)
    }

    /// Depth-first over free continuations; the acceptance test runs on
    /// each matched arrival (Cases 1.1, 2.2 and 3.1).
    fn extend(&mut self) -> Option<AugmentingWalk3> {
        let x = *self.verts.last().expect("walk is never empty");
        let first = self.matched[0];
        for f in self.free_at[x].clone() {
            if self.free.contains(&f) {
                continue;
            }
            let y = if f.0 == x { f.1 } else { f.0 };
            let e = self.medge[y].expect("free_at only lists 2-path neighbours");
            let seen = self.matched.iter().filter(|&&m| m == e).count();
            self.free.push(f);
            self.matched.push(e);
            self.verts.push(y);
            self.verts.push(if e.0 == y { e.1 } else { e.0 });
            let found = match (seen, e == first) {
                (0, _) => self.accept().or_else(|| self.extend()),
                (1, true) if self.first_partner_ok() => self.extend(),
                (1, true) => None,
                _ => self.accept(),
            };
            if found.is_some() {
                return found;
            }
            self.verts.truncate(self.verts.len() - 2);
            self.matched.pop();
            self.free.pop();
        }
        None
    }

    /// Prunes Case 2.1 once the second free edge at the first matched
    /// edge's exit vertex is known and does not compose (#4).
    fn first_partner_ok(&self) -> bool {
        let v1 = self.verts[1];
        let at: Vec<Edge> = self.free.iter().copied().filter(|f| f.0 == v1 || f.1 == v1).collect();
        match at.len() {
            1 => true,
            2 => composes(at[0], at[1]),
            _ => false,
        }
    }
}

/// Exhaustive depth-first search from every matched edge (lexicographic
/// order, both traversal directions).
pub fn find_two_path_augmenting(g: &DiGraph, p: &PathPartition) -> Result<Option<AugmentingWalk3>> {
    if p.k != 3 {
        return Err(Error::InvalidK { k: p.k, min: 3, hint: "; the 2-path scheme is defined for k = 3 only" });
    }
    let report = validate_partition(g, p);
    if !report.ok {
        return Err(Error::InvalidPartition(report.messages().join("; ")));
    }
    let n = g.n();
    let mut medge = vec![None; n];
    let mut starts = Vec::new();
    for q in p.paths.iter().filter(|q| q.len() == 2) {
        let e = (q[0], q[1]);
        medge[q[0]] = Some(e);
        medge[q[1]] = Some(e);
        starts.push(e);
    }
    if starts.len() < 3 {
        return Ok(None);
    }
    starts.sort_unstable();
    let used: BTreeSet<Edge> = p.edges().into_iter().collect();
    let mut free_at = vec![Vec::new(); n];
    for &(a, b) in g.edges() {
        if !used.contains(&(a, b)) && medge[a].is_some() && medge[b].is_some() {
            free_at[a].push((a, b));
            free_at[b].push((a, b));
        }
    }
    let mut s = Search { g, p, medge, free_at, verts: Vec::new(), matched: Vec::new(), free: Vec::new() };
    for &e in &starts {
        for (a, b) in [e, (e.1, e.0)] {
            s.verts = vec![a, b];
            s.matched = vec![e];
            s.free.clear();
            if let Some(w) = s.extend() {
                return Ok(Some(w));
            }
        }
    }
    Ok(None)
}

/// Every step of one approx3 run.
#[derive(Debug, Clone, Serialize)]
pub struct Approx3Trace {
    pub seed: PathPartition,
    pub walks: Vec<AugmentingWalk3>,
    pub partition: PathPartition,
}

pub fn approx3(g: &DiGraph) -> Result<PathPartition> {
    approx3_traced(g).map(|t| t.partition)
}

pub fn approx3_traced(g: &DiGraph) -> Result<Approx3Trace> {
    let seed = approx1(g, 3)?;
    improve_from(g, seed)
}

/// Approx3 started from `init` instead of the approx1 output. `init` must
/// be a valid 3-path partition with the minimum number of singletons,
/// which is checked against approx1.
pub fn approx3_from(g: &DiGraph, init: &PathPartition) -> Result<Approx3Trace> {
    if init.k != 3 {
        return Err(Error::InvalidK { k: init.k, min: 3, hint: "; approx3 needs a 3-path partition" });
    }
    let report = validate_partition(g, init);
    if !report.ok {
        return Err(Error::InvalidPartition(report.messages().join("; ")));
    }
    let best = approx1(g, 3)?.num_singletons();
    if init.num_singletons() != best {
        return Err(Error::InvalidPartition(format!(
            "initial partition has {} singletons, the minimum is {best}",
            init.num_singletons()
        )));
    }
    improve_from(g, init.canonical())
}

fn improve_from(g: &DiGraph, seed: PathPartition) -> Result<Approx3Trace> {
    let mut cur = seed.clone();
    let mut walks = Vec::new();
    while let Some(w) = find_two_path_augmenting(g, &cur)? {
        cur = apply_two_path_augmenting(g, &cur, &w)?;
        walks.push(w);
    }
    Ok(Approx3Trace { seed, walks, partition: cur.canonical() })
}
