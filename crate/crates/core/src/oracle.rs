//! Exact exponential solvers used as ground truth at desk scale. None of
//! them shares search code with the approximation algorithms.

use std::time::{Duration, Instant};

use crate::cover::SaturationInstance;
use crate::error::{Error, Result};
use crate::graph::{DiGraph, Edge};
use crate::partition::PathPartition;
use crate::two_path_augment::{apply_two_path_augmenting, AugmentingWalk3};

/// Size limits for the exact solvers; larger inputs are refused.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_n_partition: usize,
    pub max_m_subsets: usize,
    pub time_cap: Option<Duration>,
}

impl Default for OracleBudget {
    fn default() -> Self {
        Self { max_n_partition: 15, max_m_subsets: 20, time_cap: None }
    }
}

struct Clock {
    start: Instant,
    cap: Option<Duration>,
    ticks: u32,
}

impl Clock {
    fn new(b: &OracleBudget) -> Self {
        Self { start: Instant::now(), cap: b.time_cap, ticks: 0 }
    }

    fn check(&mut self) -> Result<()> {
        self.ticks = self.ticks.wrapping_add(1);
        if self.ticks.is_multiple_of(4096) {
            if let Some(cap) = self.cap {
                if self.start.elapsed() > cap {
                    return Err(Error::OverBudget(format!("time cap of {cap:?} exceeded")));
                }
            }
        }
        Ok(())
    }
}

// bitmask tables are indexed by u32 subsets
const MASK_LIMIT: usize = 24;

/// Vertex subsets of size at most `k` that induce a traceable subgraph;
/// `start[mask]` has bit `v` set when some Hamiltonian path of `mask`
/// starts at `v`.
struct Traceable {
    start: Vec<u32>,
}

impl Traceable {
    fn new(g: &DiGraph, k: usize, clock: &mut Clock) -> Result<Self> {
        let n = g.n();
        let out: Vec<u32> = (0..n).map(|v| g.out_neighbors(v).iter().fold(0, |a, &w| a | 1 << w)).collect();
        let mut start = vec![0u32; 1 << n];
        for mask in 1u32..(1 << n) {
            clock.check()?;
            let size = mask.count_ones() as usize;
            if size > k {
                continue;
            }
            if size == 1 {
                start[mask as usize] = mask;
                continue;
            }
            let mut bits = mask;
            while bits != 0 {
                let v = bits.trailing_zeros();
                bits &= bits - 1;
                let rest = mask & !(1 << v);
                if out[v as usize] & start[rest as usize] != 0 {
                    start[mask as usize] |= 1 << v;
                }
            }
        }
        Ok(Self { start })
    }

    fn ok(&self, mask: u32) -> bool {
        self.start[mask as usize] != 0
    }

    /// The lexicographically smallest Hamiltonian path of `mask`.
    fn path(&self, g: &DiGraph, mask: u32) -> Vec<usize> {
        let mut seq = Vec::new();
        let mut rest = mask;
        let mut allowed = self.start[mask as usize];
        while rest != 0 {
            let v = allowed.trailing_zeros() as usize;
            seq.push(v);
            rest &= !(1 << v);
            if rest == 0 {
                break;
            }
            let out = g.out_neighbors(v).iter().fold(0u32, |a, &w| a | 1 << w);
            allowed = out & self.start[rest as usize];
        }
        seq
    }
}

/// Set-partition DP: minimum total cost of covering all vertices with
/// traceable blocks, where `cost(size)` prices a block.
fn partition_dp(
    g: &DiGraph,
    k: usize,
    budget: &OracleBudget,
    cost: impl Fn(u32) -> u32,
) -> Result<(u32, PathPartition)> {
    let n = g.n();
    if n > budget.max_n_partition.min(MASK_LIMIT) {
        return Err(Error::OverBudget(format!(
            "n = {n} exceeds the partition oracle limit {}",
            budget.max_n_partition.min(MASK_LIMIT)
        )));
    }
    if k < 1 {
        return Err(Error::InvalidK { k, min: 1, hint: "" });
    }
    let mut clock = Clock::new(budget);
    let tr = Traceable::new(g, k, &mut clock)?;
    let full: u32 = if n == 0 { 0 } else { (1u32 << n) - 1 };
    let mut best = vec![u32::MAX; 1 << n];
    let mut choice = vec![0u32; 1 << n];
    best[0] = 0;
    for s in 1..=full {
        let low = s & s.wrapping_neg();
        let rest = s & !low;
        let mut sub = rest;
        loop {
            clock.check()?;
            let t = sub | low;
            if t.count_ones() as usize <= k && tr.ok(t) {
                let prev = best[(s & !t) as usize];
                let c = prev + cost(t.count_ones());
                if c < best[s as usize] {
                    best[s as usize] = c;
                    choice[s as usize] = t;
                }
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
    }
    let mut paths = Vec::new();
    let mut s = full;
    while s != 0 {
        let t = choice[s as usize];
        paths.push(tr.path(g, t));
        s &= !t;
    }
    Ok((best[full as usize], PathPartition::new(k, paths).canonical()))
}

/// A k-path partition with the fewest paths.
pub fn exact_kpp(g: &DiGraph, k: usize, budget: &OracleBudget) -> Result<PathPartition> {
    partition_dp(g, k, budget, |_| 1).map(|(_, p)| p)
}

/// The fewest singletons any k-path partition can have.
pub fn exact_min_singletons(g: &DiGraph, k: usize, budget: &OracleBudget) -> Result<usize> {
    partition_dp(g, k, budget, |size| u32::from(size == 1)).map(|(c, _)| c as usize)
}

fn check_edges(count: usize, budget: &OracleBudget) -> Result<()> {
    if count > budget.max_m_subsets {
        return Err(Error::OverBudget(format!(
            "{count} edges exceed the subset oracle limit {}",
            budget.max_m_subsets
        )));
    }
    Ok(())
}

/// Visits every degree-feasible subset of `edges` (in-degree and
/// out-degree at most one) and reports the best `score`.
fn best_feasible_subset(
    n: usize,
    edges: &[Edge],
    budget: &OracleBudget,
    score: &dyn Fn(&[Edge]) -> usize,
) -> Result<usize> {
    fn go(
        i: usize,
        edges: &[Edge],
        used_out: &mut [bool],
        used_in: &mut [bool],
        cur: &mut Vec<Edge>,
        score: &dyn Fn(&[Edge]) -> usize,
        clock: &mut Clock,
    ) -> Result<usize> {
        clock.check()?;
        if i == edges.len() {
            return Ok(score(cur));
        }
        let mut best = go(i + 1, edges, used_out, used_in, cur, score, clock)?;
        let (u, v) = edges[i];
        if !used_out[u] && !used_in[v] {
            used_out[u] = true;
            used_in[v] = true;
            cur.push((u, v));
            best = best.max(go(i + 1, edges, used_out, used_in, cur, score, clock)?);
            cur.pop();
            used_out[u] = false;
            used_in[v] = false;
        }
        Ok(best)
    }
    check_edges(edges.len(), budget)?;
    let mut clock = Clock::new(budget);
    go(0, edges, &mut vec![false; n], &mut vec![false; n], &mut Vec::new(), score, &mut clock)
}

/// Maximum number of 2-cycles a path-cycle cover inside E1 can touch.
pub fn exact_max_cover_weight(inst: &SaturationInstance, budget: &OracleBudget) -> Result<usize> {
    let n = inst.base.n();
    let mut on_cycle = vec![None; n];
    for (i, c) in inst.components.iter().filter(|c| c.is_two_cycle()).enumerate() {
        for &v in c.vertices() {
            on_cycle[v] = Some(i);
        }
    }
    let r = inst.components.iter().filter(|c| c.is_two_cycle()).count();
    let score = move |m: &[Edge]| {
        let mut hit = vec![false; r];
        for &(u, v) in m {
            for w in [u, v] {
                if let Some(i) = on_cycle[w] {
                    hit[i] = true;
                }
            }
        }
        hit.iter().filter(|&&h| h).count()
    };
    best_feasible_subset(n, &inst.e1, budget, &score)
}

/// Maximum size of a path-cycle cover of `g`.
pub fn exact_max_path_cycle_cover_size(g: &DiGraph, budget: &OracleBudget) -> Result<usize> {
    best_feasible_subset(g.n(), g.edges(), budget, &|m: &[Edge]| m.len())
}

/// Whether any 2-path augmenting walk exists, by plain enumeration of every
/// alternating walk with at most two extra matched occurrences and no
/// pruning beyond the occurrence caps. Each walk ending on a matched edge is
/// tested by applying it.
pub fn exists_two_path_augmenting_exhaustive(g: &DiGraph, p: &PathPartition, budget: &OracleBudget) -> Result<bool> {
    if g.n() > budget.max_n_partition {
        return Err(Error::OverBudget(format!("n = {} exceeds the walk oracle limit {}", g.n(), budget.max_n_partition)));
    }
    let two: Vec<Edge> = p.paths.iter().filter(|q| q.len() == 2).map(|q| (q[0], q[1])).collect();
    let mate_edge = |v: usize| two.iter().copied().find(|&(a, b)| a == v || b == v);
    let in_p: Vec<Edge> = p.edges();
    let max_occ = two.len() + 2;
    let mut clock = Clock::new(budget);

    fn go(
        w: &mut AugmentingWalk3,
        g: &DiGraph,
        p: &PathPartition,
        in_p: &[Edge],
        mate_edge: &dyn Fn(usize) -> Option<Edge>,
        max_occ: usize,
        clock: &mut Clock,
    ) -> Result<bool> {
        clock.check()?;
        if w.matched.len() >= 3 && apply_two_path_augmenting(g, p, w).is_ok() {
            return Ok(true);
        }
        if w.matched.len() == max_occ {
            return Ok(false);
        }
        let x = w.verts[w.verts.len() - 1];
        for &f in g.edges() {
            if in_p.contains(&f) || w.free.contains(&f) || (f.0 != x && f.1 != x) {
                continue;
            }
            let y = if f.0 == x { f.1 } else { f.0 };
            let Some(e) = mate_edge(y) else { continue };
            if w.matched.iter().filter(|&&m| m == e).count() >= 3 {
                continue;
            }
            w.free.push(f);
            w.matched.push(e);
            w.verts.push(y);
            w.verts.push(if e.0 == y { e.1 } else { e.0 });
            let found = go(w, g, p, in_p, mate_edge, max_occ, clock)?;
            w.verts.truncate(w.verts.len() - 2);
            w.matched.pop();
            w.free.pop();
            if found {
                return Ok(true);
            }
        }
        Ok(false)
    }

    for &e in &two {
        for (a, b) in [e, (e.1, e.0)] {
            let mut w = AugmentingWalk3 { verts: vec![a, b], matched: vec![e], free: Vec::new() };
            if go(&mut w, g, p, &in_p, &mate_edge, max_occ, &mut clock)? {
                return Ok(true);
            }
        }
    }
    Ok(false)
}
