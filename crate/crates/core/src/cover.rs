//! Maximum path-cycle covers and the 2-cycle saturating cover of G1
//! (Lemma 1's [f,g]-factor gadget).

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{component_index, Component, DiGraph, Edge, PathCycleCover, Vertex};
use crate::matching::{max_bipartite_matching, max_weight_matching};

/// A path-cycle cover of `g` with the maximum number of edges.
pub fn max_path_cycle_cover(g: &DiGraph) -> PathCycleCover {
    let adj: Vec<Vec<Vertex>> = (0..g.n()).map(|u| g.out_neighbors(u).to_vec()).collect();
    let mate = max_bipartite_matching(g.n(), &adj);
    let edges = mate.iter().enumerate().filter_map(|(u, m)| m.map(|v| (u, v)));
    PathCycleCover::new(g, edges).expect("a bipartite matching is a path-cycle cover")
}

/// G1 together with the cover it was derived from.
#[derive(Debug, Clone)]
pub struct SaturationInstance {
    pub base: DiGraph,
    pub cover: PathCycleCover,
    /// Components of `cover`, ordered by smallest vertex.
    pub components: Vec<Component>,
    /// Component id of every vertex.
    pub comp_of: Vec<usize>,
    /// E1 in lexicographic order.
    pub e1: Vec<Edge>,
    /// Component ids of the 2-cycles, ascending.
    pub two_cycles: Vec<usize>,
    /// Index into `two_cycles` for vertices lying on a 2-cycle.
    pub two_cycle_of: Vec<Option<usize>>,
}

impl SaturationInstance {
    /// Builds G1: edges of `g` outside the cover whose endpoints lie in
    /// different components, at least one of them a 2-cycle.
    pub fn new(g: &DiGraph, cover: &PathCycleCover) -> Self {
        let components = cover.components();
        let comp_of = component_index(g.n(), &components);
        let two_cycles: Vec<usize> =
            (0..components.len()).filter(|&c| components[c].is_two_cycle()).collect();
        let mut two_cycle_of = vec![None; g.n()];
        for (i, &c) in two_cycles.iter().enumerate() {
            for &v in components[c].vertices() {
                two_cycle_of[v] = Some(i);
            }
        }
        let e1 = g
            .edges()
            .iter()
            .copied()
            .filter(|&(u, v)| {
                !cover.contains((u, v))
                    && comp_of[u] != comp_of[v]
                    && (two_cycle_of[u].is_some() || two_cycle_of[v].is_some())
            })
            .collect();
        Self {
            base: g.clone(),
            cover: cover.clone(),
            components,
            comp_of,
            e1,
            two_cycles,
            two_cycle_of,
        }
    }

    pub fn n(&self) -> usize {
        self.base.n()
    }

    /// Number of 2-cycles, `r`.
    pub fn r(&self) -> usize {
        self.two_cycles.len()
    }

    pub fn in_e1(&self, e: Edge) -> bool {
        self.e1.binary_search(&e).is_ok()
    }

    /// Vertices of the `i`-th 2-cycle, smaller first.
    pub fn two_cycle_vertices(&self, i: usize) -> [Vertex; 2] {
        let vs = self.components[self.two_cycles[i]].vertices();
        [vs[0], vs[1]]
    }

    /// Which 2-cycles an edge set saturates.
    pub fn saturated(&self, m: &[Edge]) -> Vec<bool> {
        let mut sat = vec![false; self.r()];
        for &(u, v) in m {
            for w in [u, v] {
                if let Some(i) = self.two_cycle_of[w] {
                    sat[i] = true;
                }
            }
        }
        sat
    }
}

/// Number of 2-cycles of the cover touched by `m`.
pub fn weight_of(m: &[Edge], inst: &SaturationInstance) -> Result<usize> {
    if let Some(&(u, v)) = m.iter().find(|&&e| !inst.in_e1(e)) {
        return Err(Error::EdgeOutsideE1(u, v));
    }
    Ok(inst.saturated(m).iter().filter(|&&s| s).count())
}

fn check_degrees(n: usize, m: &[Edge]) -> Result<()> {
    PathCycleCover::unchecked(n, m.iter().copied()).map(|_| ())
}

/// Edge groups of the Lemma 1 gadget.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GadgetEdgeKind {
    F1,
    F2,
    F3,
}

/// The undirected auxiliary graph of Lemma 1 with degree bounds.
///
/// Node layout: `v+` is `v`, `v-` is `n + v`, `x_i` is `2n + 2i`,
/// `y_i` is `2n + 2i + 1`.
#[derive(Debug, Clone)]
pub struct FactorGadget {
    pub n: usize,
    pub r: usize,
    /// `(a, b, kind)` with weight 1 for F3 and 0 otherwise.
    pub edges: Vec<(usize, usize, GadgetEdgeKind)>,
    pub lower: Vec<usize>,
    pub upper: Vec<usize>,
}

impl FactorGadget {
    pub fn node_count(&self) -> usize {
        2 * self.n + 2 * self.r
    }

    pub fn plus(&self, v: Vertex) -> usize {
        v
    }

    pub fn minus(&self, v: Vertex) -> usize {
        self.n + v
    }

    pub fn x(&self, i: usize) -> usize {
        2 * self.n + 2 * i
    }

    pub fn y(&self, i: usize) -> usize {
        2 * self.n + 2 * i + 1
    }

    pub fn weight(kind: GadgetEdgeKind) -> i64 {
        match kind {
            GadgetEdgeKind::F3 => 1,
            _ => 0,
        }
    }

    pub fn node_name(&self, a: usize) -> String {
        let n = self.n;
        if a < n {
            format!("{a}+")
        } else if a < 2 * n {
            format!("{}-", a - n)
        } else if (a - 2 * n).is_multiple_of(2) {
            format!("x_{}", (a - 2 * n) / 2)
        } else {
            format!("y_{}", (a - 2 * n) / 2)
        }
    }

    /// Graphviz rendering; edges in `chosen` (indices into `edges`) are bold.
    pub fn to_dot(&self, chosen: &[usize]) -> String {
        let mut s = String::from("graph gadget {\n");
        for a in 0..self.node_count() {
            let _ = writeln!(
                s,
                "  \"{}\" [label=\"{} [{},{}]\"];",
                self.node_name(a),
                self.node_name(a),
                self.lower[a],
                self.upper[a]
            );
        }
        for (i, &(a, b, kind)) in self.edges.iter().enumerate() {
            let style = if chosen.contains(&i) { ", style=bold" } else { "" };
            let _ = writeln!(
                s,
                "  \"{}\" -- \"{}\" [label=\"{:?}\"{}];",
                self.node_name(a),
                self.node_name(b),
                kind,
                style
            );
        }
        s.push_str("}\n");
        s
    }

    /// Whether the edge subset (indices into `edges`) meets every degree bound.
    pub fn is_factor(&self, chosen: &[usize]) -> bool {
        let mut deg = vec![0usize; self.node_count()];
        for &i in chosen {
            let (a, b, _) = self.edges[i];
            deg[a] += 1;
            deg[b] += 1;
        }
        (0..self.node_count()).all(|a| self.lower[a] <= deg[a] && deg[a] <= self.upper[a])
    }

    pub fn factor_weight(&self, chosen: &[usize]) -> i64 {
        chosen.iter().map(|&i| Self::weight(self.edges[i].2)).sum()
    }
}

pub fn build_gadget(inst: &SaturationInstance) -> FactorGadget {
    let n = inst.n();
    let r = inst.r();
    let mut gad = FactorGadget {
        n,
        r,
        edges: Vec::with_capacity(inst.e1.len() + 5 * r),
        lower: vec![0; 2 * n + 2 * r],
        upper: vec![1; 2 * n + 2 * r],
    };
    for &(u, v) in &inst.e1 {
        let e = (gad.plus(u), gad.minus(v), GadgetEdgeKind::F1);
        gad.edges.push(e);
    }
    for i in 0..r {
        let x = gad.x(i);
        for v in inst.two_cycle_vertices(i) {
            let (p, m) = (gad.plus(v), gad.minus(v));
            gad.lower[p] = 1;
            gad.lower[m] = 1;
            gad.edges.push((x, p, GadgetEdgeKind::F2));
            gad.edges.push((x, m, GadgetEdgeKind::F2));
        }
    }
    for i in 0..r {
        let (x, y) = (gad.x(i), gad.y(i));
        gad.edges.push((x, y, GadgetEdgeKind::F3));
        gad.upper[x] = 4;
    }
    gad
}

/// Maximum-weight [f,g]-factor via the vertex-copy / edge-split expansion
/// to general weighted matching. Returns indices into `gad.edges`, or
/// `None` when no factor exists.
pub fn max_weight_factor(gad: &FactorGadget) -> Option<Vec<usize>> {
    let nodes = gad.node_count();
    let total_w: i64 = gad.edges.iter().map(|e| FactorGadget::weight(e.2).abs()).sum::<i64>() + 1;
    let bonus = 4 * total_w;
    let forced_total: i64 = gad.lower.iter().map(|&f| f as i64).sum();
    let big = bonus * (forced_total + 1) + 4 * total_w;

    // copies[a] lists matching nodes standing for node a; the first lower[a]
    // are forced
    let mut next = 0usize;
    let copies: Vec<Vec<usize>> = (0..nodes)
        .map(|a| {
            let c: Vec<usize> = (next..next + gad.upper[a]).collect();
            next += gad.upper[a];
            c
        })
        .collect();
    let mut medges = Vec::new();
    let mut split = Vec::with_capacity(gad.edges.len());
    for &(a, b, kind) in &gad.edges {
        let (ea, eb) = (next, next + 1);
        next += 2;
        split.push(ea);
        let w = FactorGadget::weight(kind);
        medges.push((ea, eb, 2 * big));
        for (end, node) in [(ea, a), (eb, b)] {
            for (j, &c) in copies[node].iter().enumerate() {
                let forced = if j < gad.lower[node] { bonus } else { 0 };
                medges.push((c, end, big + w + forced));
            }
        }
    }
    let mate = max_weight_matching(next, &medges, false);
    let chosen: Vec<usize> = split
        .iter()
        .enumerate()
        .filter(|&(_, &ea)| mate[ea].is_some_and(|m| m != ea + 1))
        .map(|(i, _)| i)
        .collect();
    gad.is_factor(&chosen).then_some(chosen)
}

/// M = {(u,v) : {u+, v-} in N}.
pub fn factor_to_cover(gad: &FactorGadget, inst: &SaturationInstance, chosen: &[usize]) -> Vec<Edge> {
    let mut m: Vec<Edge> = chosen
        .iter()
        .filter(|&&i| gad.edges[i].2 == GadgetEdgeKind::F1)
        .map(|&i| inst.e1[i])
        .collect();
    m.sort_unstable();
    m
}

/// The factor of Lemma 1 steps 1-4 for a path-cycle cover `m` of G1.
pub fn cover_to_factor(gad: &FactorGadget, inst: &SaturationInstance, m: &[Edge]) -> Result<Vec<usize>> {
    check_degrees(inst.n(), m)?;
    let mut chosen = Vec::new();
    let mut covered = vec![false; 2 * inst.n()];
    for &e in m {
        let i = inst.e1.binary_search(&e).map_err(|_| Error::EdgeOutsideE1(e.0, e.1))?;
        chosen.push(i);
        covered[gad.plus(e.0)] = true;
        covered[gad.minus(e.1)] = true;
    }
    let sat = inst.saturated(m);
    for (i, &(a, b, kind)) in gad.edges.iter().enumerate() {
        match kind {
            GadgetEdgeKind::F1 => {}
            GadgetEdgeKind::F2 => {
                if !covered[b] {
                    chosen.push(i);
                }
            }
            GadgetEdgeKind::F3 => {
                if sat[(a - 2 * gad.n) / 2] {
                    chosen.push(i);
                }
            }
        }
    }
    chosen.sort_unstable();
    Ok(chosen)
}

/// Exact search over subsets of E1 with the bound "current weight plus
/// unsaturated 2-cycles still reachable by undecided edges".
pub fn branch_and_bound_cover(inst: &SaturationInstance) -> Vec<Edge> {
    struct Search<'a> {
        inst: &'a SaturationInstance,
        // 2-cycles each remaining suffix of E1 can touch
        touch_from: Vec<Vec<bool>>,
        out_used: Vec<bool>,
        in_used: Vec<bool>,
        sat: Vec<usize>,
        cur: Vec<Edge>,
        best: Vec<Edge>,
        best_w: usize,
    }
    impl Search<'_> {
        fn weight(&self) -> usize {
            self.sat.iter().filter(|&&c| c > 0).count()
        }
        fn bound(&self, idx: usize) -> usize {
            let extra = (0..self.sat.len())
                .filter(|&i| self.sat[i] == 0 && self.touch_from[idx][i])
                .count();
            self.weight() + extra
        }
        fn touched(&self, e: Edge) -> Vec<usize> {
            let mut t: Vec<usize> = [e.0, e.1].iter().filter_map(|&w| self.inst.two_cycle_of[w]).collect();
            t.dedup();
            t
        }
        fn go(&mut self, idx: usize) {
            let w = self.weight();
            if w > self.best_w {
                self.best_w = w;
                self.best = self.cur.clone();
            }
            if idx == self.inst.e1.len() || self.bound(idx) <= self.best_w {
                return;
            }
            let (u, v) = self.inst.e1[idx];
            if !self.out_used[u] && !self.in_used[v] {
                let t = self.touched((u, v));
                if t.iter().any(|&i| self.sat[i] == 0) {
                    self.out_used[u] = true;
                    self.in_used[v] = true;
                    t.iter().for_each(|&i| self.sat[i] += 1);
                    self.cur.push((u, v));
                    self.go(idx + 1);
                    self.cur.pop();
                    t.iter().for_each(|&i| self.sat[i] -= 1);
                    self.out_used[u] = false;
                    self.in_used[v] = false;
                }
            }
            self.go(idx + 1);
        }
    }
    let len = inst.e1.len();
    let mut touch_from = vec![vec![false; inst.r()]; len + 1];
    for idx in (0..len).rev() {
        touch_from[idx] = touch_from[idx + 1].clone();
        let (u, v) = inst.e1[idx];
        for w in [u, v] {
            if let Some(i) = inst.two_cycle_of[w] {
                touch_from[idx][i] = true;
            }
        }
    }
    let mut s = Search {
        inst,
        touch_from,
        out_used: vec![false; inst.n()],
        in_used: vec![false; inst.n()],
        sat: vec![0; inst.r()],
        cur: Vec::new(),
        best: Vec::new(),
        best_w: 0,
    };
    s.go(0);
    s.best
}

/// Largest E1 for which the exact fallback also runs.
pub const FALLBACK_MAX_E1: usize = 20;

/// A path-cycle cover M of G1 saturating the maximum number of 2-cycles.
pub fn max_weight_saturating_cover(inst: &SaturationInstance) -> Result<Vec<Edge>> {
    if inst.e1.is_empty() {
        return Ok(Vec::new());
    }
    let gad = build_gadget(inst);
    let chosen = max_weight_factor(&gad)
        .ok_or_else(|| Error::Invariant("the gadget always admits a factor".into()))?;
    let m = factor_to_cover(&gad, inst, &chosen);
    check_degrees(inst.n(), &m)?;
    let w = weight_of(&m, inst)?;
    if w as i64 != gad.factor_weight(&chosen) {
        return Err(Error::Invariant(format!(
            "factor weight {} differs from cover weight {w}",
            gad.factor_weight(&chosen)
        )));
    }
    if inst.e1.len() <= FALLBACK_MAX_E1 {
        let exact = weight_of(&branch_and_bound_cover(inst), inst)?;
        if exact != w {
            return Err(Error::Invariant(format!(
                "gadget solver weight {w} disagrees with exact weight {exact}"
            )));
        }
    }
    Ok(m)
}

/// Repeatedly drops the lexicographically first edge whose removal keeps
/// the weight.
pub fn prune_to_minimal(m: &[Edge], inst: &SaturationInstance) -> Result<Vec<Edge>> {
    let mut cur: Vec<Edge> = m.to_vec();
    cur.sort_unstable();
    let target = weight_of(&cur, inst)?;
    'restart: loop {
        for i in 0..cur.len() {
            let mut trial = cur.clone();
            trial.remove(i);
            if weight_of(&trial, inst)? == target {
                cur = trial;
                continue 'restart;
            }
        }
        return Ok(cur);
    }
}
