//! Approx2 for k >= 7: a maximum path-cycle cover whose cycles are broken
//! with the help of a 2-cycle saturating cover, star by star.

use serde::Serialize;

use crate::cover::{max_path_cycle_cover, max_weight_saturating_cover, prune_to_minimal, weight_of, SaturationInstance};
use crate::error::{Error, Result};
use crate::graph::{Component, DiGraph, Edge, PathCycleCover, Vertex};
use crate::partition::{validate_partition, PathPartition};

/// Smallest k the 2/3 retention argument supports.
pub const MIN_K: usize = 7;

/// Step 2: while some non-cover edge `(u, v)` leaves a vertex without an
/// outgoing cover edge and enters a cycle (or the mirror case), swap it in
/// for the cycle edge it conflicts with. Candidates are scanned in
/// lexicographic order with a restart after every swap.
pub fn improve_cover(g: &DiGraph, cover: &PathCycleCover) -> Result<PathCycleCover> {
    let mut cur = cover.clone();
    'restart: loop {
        let comps = cur.components();
        let mut on_cycle = vec![false; g.n()];
        for c in comps.iter().filter(|c| c.is_cycle()) {
            for &v in c.vertices() {
                on_cycle[v] = true;
            }
        }
        for &(u, v) in g.edges() {
            if cur.contains((u, v)) {
                continue;
            }
            let swap = if cur.succ(u).is_none() && on_cycle[v] {
                Some((cur.pred(v).expect("cycle vertex has a predecessor"), v))
            } else if cur.pred(v).is_none() && on_cycle[u] {
                Some((u, cur.succ(u).expect("cycle vertex has a successor")))
            } else {
                None
            };
            if let Some(old) = swap {
                let edges = cur.edges().iter().copied().filter(|&e| e != old).chain([(u, v)]);
                cur = PathCycleCover::new(g, edges)?;
                continue 'restart;
            }
        }
        return Ok(cur);
    }
}

/// Step 3.
pub fn build_saturation_instance(g: &DiGraph, cover: &PathCycleCover) -> SaturationInstance {
    SaturationInstance::new(g, cover)
}

/// Direction of the connecting edge relative to the center.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Attach {
    /// `e = (u, v)` enters the center vertex `v`.
    In,
    /// `e = (v, u)` leaves the center vertex `v`.
    Out,
}

/// A 2-cycle `{u, u2}` hanging off the center vertex `v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Satellite {
    pub comp: usize,
    pub u: Vertex,
    pub u2: Vertex,
    pub v: Vertex,
    pub dir: Attach,
}

impl Satellite {
    pub fn edge(&self) -> Edge {
        match self.dir {
            Attach::In => (self.u, self.v),
            Attach::Out => (self.v, self.u),
        }
    }

    /// `u2 -> u`, to be followed by `v`.
    fn in_piece(&self) -> [Vertex; 2] {
        [self.u2, self.u]
    }

    /// `u -> u2`, preceded by `v`.
    fn out_piece(&self) -> [Vertex; 2] {
        [self.u, self.u2]
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct StarComponent {
    pub center: usize,
    pub center_shape: Component,
    pub satellites: Vec<Satellite>,
    pub connecting_edges: Vec<Edge>,
    /// U: all vertices of the star's components.
    pub u: Vec<Vertex>,
    /// F: all cover edges of the star's components.
    pub f_edges: Vec<Edge>,
}

#[derive(Debug, Clone, Serialize)]
pub struct StarForest {
    pub stars: Vec<StarComponent>,
    /// Component ids isolated in G3, ascending.
    pub isolated: Vec<usize>,
    /// The isolated components that are 2-cycles.
    pub isolated_two_cycles: Vec<usize>,
    /// Component pairs adjacent in G3.
    pub g3_edges: Vec<(usize, usize)>,
}

/// Steps 6-7 plus the structural checks that minimality of `m` implies:
/// every edge of `m` has an endpoint on a 2-cycle met by no other edge of
/// `m`, so every G3 component is a star or an isolated vertex.
pub fn build_star_forest(inst: &SaturationInstance, m: &[Edge]) -> Result<StarForest> {
    let comps = &inst.components;
    let nc = comps.len();
    let comp_of = &inst.comp_of;
    let mut hits = vec![0usize; nc];
    for &(a, b) in m {
        hits[comp_of[a]] += 1;
        hits[comp_of[b]] += 1;
    }
    let private = |c: usize| comps[c].is_two_cycle() && hits[c] == 1;
    let mut adj: Vec<Vec<(usize, Edge)>> = vec![Vec::new(); nc];
    let mut g3_edges = Vec::new();
    for &(a, b) in m {
        let (ca, cb) = (comp_of[a], comp_of[b]);
        if ca == cb {
            return Err(Error::Invariant(format!("M edge ({a},{b}) inside one component")));
        }
        if !private(ca) && !private(cb) {
            return Err(Error::Invariant(format!("M edge ({a},{b}) has no private 2-cycle")));
        }
        if adj[ca].iter().any(|&(c, _)| c == cb) {
            return Err(Error::Invariant(format!("components {ca} and {cb} joined twice in G2")));
        }
        adj[ca].push((cb, (a, b)));
        adj[cb].push((ca, (a, b)));
        g3_edges.push((ca.min(cb), ca.max(cb)));
    }
    g3_edges.sort_unstable();

    let mut isolated = Vec::new();
    let mut stars = Vec::new();
    let mut done = vec![false; nc];
    for c in 0..nc {
        if done[c] {
            continue;
        }
        if adj[c].is_empty() {
            done[c] = true;
            isolated.push(c);
            continue;
        }
        let center = if adj[c].len() >= 2 {
            c
        } else {
            let other = adj[c][0].0;
            if adj[other].len() >= 2 {
                other
            } else if !comps[c].is_two_cycle() {
                c
            } else if !comps[other].is_two_cycle() {
                other
            } else {
                c.min(other)
            }
        };
        let mut star_comps = vec![center];
        let mut satellites = Vec::new();
        for &(s, (a, b)) in &adj[center] {
            if adj[s].len() != 1 || !comps[s].is_two_cycle() {
                return Err(Error::Invariant(format!("G3 component around {center} is not a star")));
            }
            let (u, v, dir) = if comp_of[a] == s { (a, b, Attach::In) } else { (b, a, Attach::Out) };
            let vs = comps[s].vertices();
            let u2 = if vs[0] == u { vs[1] } else { vs[0] };
            satellites.push(Satellite { comp: s, u, u2, v, dir });
            star_comps.push(s);
        }
        for &sc in &star_comps {
            done[sc] = true;
        }
        let mut u: Vec<Vertex> = star_comps.iter().flat_map(|&sc| comps[sc].vertices().to_vec()).collect();
        u.sort_unstable();
        let mut f_edges: Vec<Edge> = star_comps.iter().flat_map(|&sc| comps[sc].edges()).collect();
        f_edges.sort_unstable();
        let connecting_edges = satellites.iter().map(Satellite::edge).collect();
        stars.push(StarComponent {
            center,
            center_shape: comps[center].clone(),
            satellites,
            connecting_edges,
            u,
            f_edges,
        });
    }
    for star in &stars {
        let vs = star.center_shape.vertices();
        for &v in vs {
            let ins = star.satellites.iter().filter(|s| s.v == v && s.dir == Attach::In).count();
            let outs = star.satellites.iter().filter(|s| s.v == v && s.dir == Attach::Out).count();
            if ins > 1 || outs > 1 {
                return Err(Error::Invariant(format!("center vertex {v} has two satellites on one side")));
            }
        }
    }
    let isolated_two_cycles = isolated.iter().copied().filter(|&c| comps[c].is_two_cycle()).collect();
    Ok(StarForest { stars, isolated, isolated_two_cycles, g3_edges })
}

/// Cuts a directed path into consecutive pieces of at most `k` vertices.
fn chop(seq: &[Vertex], k: usize, out: &mut Vec<Vec<Vertex>>) {
    out.extend(seq.chunks(k).map(<[Vertex]>::to_vec));
}

/// Lemma 3 (and Step 8 for 2-cycles): a path is cut every k-th edge; a
/// cycle first loses the edge closing it back to its smallest vertex.
pub fn partition_isolated_component(comp: &Component, k: usize) -> Vec<Vec<Vertex>> {
    let mut out = Vec::new();
    chop(comp.vertices(), k, &mut out);
    out
}

#[derive(Debug, Clone, Copy)]
struct Placed {
    pos: usize,
    sat: Satellite,
}

fn check_len(q: &[Vertex], k: usize, what: &str) -> Result<()> {
    if q.len() > k {
        return Err(Error::Invariant(format!("{what} built a path of order {} > k = {k}", q.len())));
    }
    Ok(())
}

fn concat(parts: &[&[Vertex]]) -> Vec<Vertex> {
    parts.iter().flat_map(|p| p.iter().copied()).collect()
}

/// Sub-problem on `seg[lo..hi]` keeping the satellites placed there.
fn sub(seg: &[Vertex], sats: &[Placed], lo: usize, hi: usize) -> (Vec<Vertex>, Vec<Placed>) {
    let part = seg[lo..hi].to_vec();
    let placed = sats
        .iter()
        .filter(|p| p.pos >= lo && p.pos < hi)
        .map(|p| Placed { pos: p.pos - lo, sat: p.sat })
        .collect();
    (part, placed)
}

/// Lemma 4 on a directed path segment with satellites attached at
/// positions; cases are tried in the order 1, 2, 3, 4.
fn transform_path(seg: &[Vertex], sats: &[Placed], k: usize, out: &mut Vec<Vec<Vertex>>) -> Result<()> {
    if seg.is_empty() {
        if sats.is_empty() {
            return Ok(());
        }
        return Err(Error::Invariant("satellites left on an empty segment".into()));
    }
    if sats.is_empty() {
        chop(seg, k, out);
        return Ok(());
    }
    let mut sats = sats.to_vec();
    sats.sort_by_key(|p| (p.pos, p.sat.dir));
    let at = |pos: usize, dir: Attach| sats.iter().find(|p| p.pos == pos && p.sat.dir == dir).map(|p| p.sat);
    let free = |pos: usize| sats.iter().all(|p| p.pos != pos);
    let len = seg.len();

    // base case and Case 1: both sides of one vertex carry a satellite
    for pos in 0..len {
        let (a, b) = (at(pos, Attach::In), at(pos, Attach::Out));
        if len == 1 || (a.is_some() && b.is_some()) {
            let pre = a.map(|s| s.in_piece().to_vec()).unwrap_or_default();
            let post = b.map(|s| s.out_piece().to_vec()).unwrap_or_default();
            let q = concat(&[&pre, &[seg[pos]], &post]);
            check_len(&q, k, "Lemma 4 case 1")?;
            out.push(q);
            return split_recurse(seg, &sats, pos, pos + 1, k, out);
        }
    }
    // Case 2: x-y-z with two free vertices next to a satellite pointing away
    for p in 0..len.saturating_sub(2) {
        let (x, y, z) = (p, p + 1, p + 2);
        if free(x) && free(y) {
            if let Some(s) = at(z, Attach::Out) {
                let q = concat(&[&seg[x..=z], &s.out_piece()]);
                check_len(&q, k, "Lemma 4 case 2")?;
                out.push(q);
                return split_recurse(seg, &sats, x, z + 1, k, out);
            }
        }
        if free(y) && free(z) {
            if let Some(s) = at(x, Attach::In) {
                let q = concat(&[&s.in_piece(), &seg[x..=z]]);
                check_len(&q, k, "Lemma 4 case 2")?;
                out.push(q);
                return split_recurse(seg, &sats, x, z + 1, k, out);
            }
        }
    }
    // Case 3: consecutive satellites facing each other
    for w in sats.windows(2) {
        if w[0].sat.dir == Attach::In && w[1].sat.dir == Attach::Out && w[0].pos < w[1].pos {
            let q = concat(&[&w[0].sat.in_piece(), &seg[w[0].pos..=w[1].pos], &w[1].sat.out_piece()]);
            check_len(&q, k, "Lemma 4 case 3")?;
            out.push(q);
            return split_recurse(seg, &sats, w[0].pos, w[1].pos + 1, k, out);
        }
    }
    // Case 4: a satellite at either end pointing outwards
    let first = sats[0];
    if first.sat.dir == Attach::Out {
        let q = concat(&[&seg[..=first.pos], &first.sat.out_piece()]);
        check_len(&q, k, "Lemma 4 case 4")?;
        out.push(q);
        return split_recurse(seg, &sats, 0, first.pos + 1, k, out);
    }
    let last = sats[sats.len() - 1];
    if last.sat.dir == Attach::In {
        let q = concat(&[&last.sat.in_piece(), &seg[last.pos..]]);
        check_len(&q, k, "Lemma 4 case 4")?;
        out.push(q);
        return split_recurse(seg, &sats, last.pos, len, k, out);
    }
    Err(Error::Invariant("no case of Lemma 4 applies".into()))
}

/// Recurses on the parts of `seg` left and right of `[lo, hi)`.
fn split_recurse(seg: &[Vertex], sats: &[Placed], lo: usize, hi: usize, k: usize, out: &mut Vec<Vec<Vertex>>) -> Result<()> {
    let (left, ls) = sub(seg, sats, 0, lo);
    transform_path(&left, &ls, k, out)?;
    let (right, rs) = sub(seg, sats, hi, seg.len());
    transform_path(&right, &rs, k, out)
}

fn placed_on(shape: &[Vertex], sats: &[Satellite]) -> Result<Vec<Placed>> {
    sats.iter()
        .map(|s| {
            shape
                .iter()
                .position(|&v| v == s.v)
                .map(|pos| Placed { pos, sat: *s })
                .ok_or_else(|| Error::Invariant(format!("satellite attached outside the center at {}", s.v)))
        })
        .collect()
}

fn retention_check(star: &StarComponent, paths: &[Vec<Vertex>]) -> Result<(usize, usize)> {
    let kept: usize = paths.iter().map(|p| p.len() - 1).sum();
    let f = star.f_edges.len();
    if 3 * kept < 2 * f {
        return Err(Error::Invariant(format!(
            "star at component {} kept {kept} of {f} edges, below 2/3",
            star.center
        )));
    }
    Ok((f, kept))
}

/// Lemma 4: a star whose center is a path component.
pub fn partition_star_path_center(star: &StarComponent, k: usize) -> Result<Vec<Vec<Vertex>>> {
    let Component::Path(seg) = &star.center_shape else {
        return Err(Error::Invariant("path-center transform given a cycle center".into()));
    };
    let sats = placed_on(seg, &star.satellites)?;
    let mut out = Vec::new();
    transform_path(seg, &sats, k, &mut out)?;
    retention_check(star, &out)?;
    Ok(out)
}

/// Lemma 5: a star whose center is a cycle component. Cases 1-3 are tried
/// with wrap-around, leaving a path for Lemma 4; otherwise all satellites
/// point the same way and the cycle splits into one piece per satellite.
pub fn partition_star_cycle_center(star: &StarComponent, k: usize) -> Result<Vec<Vec<Vertex>>> {
    let Component::Cycle(cyc) = &star.center_shape else {
        return Err(Error::Invariant("cycle-center transform given a path center".into()));
    };
    let len = cyc.len();
    let mut sats = placed_on(cyc, &star.satellites)?;
    sats.sort_by_key(|p| (p.pos, p.sat.dir));
    let at = |pos: usize, dir: Attach| sats.iter().find(|p| p.pos == pos % len && p.sat.dir == dir).map(|p| p.sat);
    let free = |pos: usize| sats.iter().all(|p| p.pos != pos % len);
    // the path of `cnt` cycle vertices starting at `start`, with satellites
    let arc = |start: usize, cnt: usize| {
        let seg: Vec<Vertex> = (0..cnt).map(|t| cyc[(start + t) % len]).collect();
        let placed: Vec<Placed> = sats
            .iter()
            .filter_map(|p| {
                let off = (p.pos + len - start % len) % len;
                (off < cnt).then_some(Placed { pos: off, sat: p.sat })
            })
            .collect();
        (seg, placed)
    };
    let mut out = Vec::new();
    let finish = |q: Vec<Vertex>, what: &str, start: usize, cnt: usize, out: &mut Vec<Vec<Vertex>>| -> Result<()> {
        check_len(&q, k, what)?;
        out.push(q);
        let (seg, placed) = arc(start, cnt);
        transform_path(&seg, &placed, k, out)
    };

    let mut handled = false;
    for (pos, &c) in cyc.iter().enumerate() {
        if let (Some(a), Some(b)) = (at(pos, Attach::In), at(pos, Attach::Out)) {
            let q = concat(&[&a.in_piece(), &[c], &b.out_piece()]);
            finish(q, "Lemma 5 case 1", pos + 1, len - 1, &mut out)?;
            handled = true;
            break;
        }
    }
    if !handled && len >= 3 {
        for p in 0..len {
            let (x, y, z) = (p, p + 1, p + 2);
            let tri = [cyc[x % len], cyc[y % len], cyc[z % len]];
            if free(x) && free(y) {
                if let Some(s) = at(z, Attach::Out) {
                    finish(concat(&[&tri, &s.out_piece()]), "Lemma 5 case 2", p + 3, len - 3, &mut out)?;
                    handled = true;
                    break;
                }
            }
            if free(y) && free(z) {
                if let Some(s) = at(x, Attach::In) {
                    finish(concat(&[&s.in_piece(), &tri]), "Lemma 5 case 2", p + 3, len - 3, &mut out)?;
                    handled = true;
                    break;
                }
            }
        }
    }
    if !handled && sats.len() >= 2 {
        for i in 0..sats.len() {
            let (a, b) = (sats[i], sats[(i + 1) % sats.len()]);
            if a.sat.dir == Attach::In && b.sat.dir == Attach::Out && a.pos != b.pos {
                let d = (b.pos + len - a.pos) % len;
                let mid: Vec<Vertex> = (0..=d).map(|t| cyc[(a.pos + t) % len]).collect();
                let q = concat(&[&a.sat.in_piece(), &mid, &b.sat.out_piece()]);
                finish(q, "Lemma 5 case 3", b.pos + 1, len - d - 1, &mut out)?;
                handled = true;
                break;
            }
        }
    }
    if !handled {
        let h = sats.len();
        if sats.iter().all(|p| p.sat.dir == Attach::Out) {
            for i in 0..h {
                let prev = sats[(i + h - 1) % h].pos;
                let cur = sats[i].pos;
                let cnt = if h == 1 { len } else { (cur + len - prev) % len };
                let start = (cur + len + 1 - cnt) % len;
                let body: Vec<Vertex> = (0..cnt).map(|t| cyc[(start + t) % len]).collect();
                let q = concat(&[&body, &sats[i].sat.out_piece()]);
                check_len(&q, k, "Lemma 5 case 4")?;
                out.push(q);
            }
        } else if sats.iter().all(|p| p.sat.dir == Attach::In) {
            for i in 0..h {
                let cur = sats[i].pos;
                let next = sats[(i + 1) % h].pos;
                let cnt = if h == 1 { len } else { (next + len - cur) % len };
                let body: Vec<Vertex> = (0..cnt).map(|t| cyc[(cur + t) % len]).collect();
                let q = concat(&[&sats[i].sat.in_piece(), &body]);
                check_len(&q, k, "Lemma 5 case 4")?;
                out.push(q);
            }
        } else {
            return Err(Error::Invariant("no case of Lemma 5 applies".into()));
        }
    }
    retention_check(star, &out)?;
    Ok(out)
}

/// Per-component record of the 2/3 retention check.
#[derive(Debug, Clone, Serialize)]
pub struct Fragment {
    /// `isolated_two_cycle`, `isolated`, `path_star` or `cycle_star`.
    pub kind: &'static str,
    pub component: usize,
    pub f_edges: usize,
    pub kept_edges: usize,
}

/// Every intermediate object of one approx2 run.
#[derive(Debug, Clone, Serialize)]
pub struct Approx2Trace {
    pub k: usize,
    pub initial_cover: Vec<Edge>,
    pub cover: Vec<Edge>,
    pub cover_components: Vec<Component>,
    pub e1: Vec<Edge>,
    pub m_max: Vec<Edge>,
    pub m: Vec<Edge>,
    pub weight: usize,
    pub r: usize,
    pub forest: StarForest,
    pub fragments: Vec<Fragment>,
    pub partition: PathPartition,
}

impl Approx2Trace {
    pub fn cover_edge_count(&self) -> usize {
        self.cover.len()
    }

    pub fn isolated_two_cycle_count(&self) -> usize {
        self.forest.isolated_two_cycles.len()
    }

    /// G2 = E(C) + E(M).
    pub fn g2_edges(&self) -> Vec<Edge> {
        let mut e: Vec<Edge> = self.cover.iter().chain(&self.m).copied().collect();
        e.sort_unstable();
        e
    }
}

pub fn approx2(g: &DiGraph, k: usize) -> Result<PathPartition> {
    approx2_traced(g, k).map(|t| t.partition)
}

/// Runs Steps 1-11, asserting every intermediate invariant.
pub fn approx2_traced(g: &DiGraph, k: usize) -> Result<Approx2Trace> {
    if k < MIN_K {
        return Err(Error::InvalidK { k, min: MIN_K, hint: "; use approx1 for smaller k" });
    }
    let initial = max_path_cycle_cover(g);
    let cover = improve_cover(g, &initial)?;
    if cover.len() != initial.len() {
        return Err(Error::Invariant("Step 2 changed the cover size".into()));
    }
    let inst = build_saturation_instance(g, &cover);
    let m_max = max_weight_saturating_cover(&inst)?;
    let m = prune_to_minimal(&m_max, &inst)?;
    let weight = weight_of(&m, &inst)?;
    if weight != weight_of(&m_max, &inst)? {
        return Err(Error::Invariant("pruning changed the weight".into()));
    }
    for i in 0..m.len() {
        let mut less = m.clone();
        less.remove(i);
        if weight_of(&less, &inst)? >= weight {
            return Err(Error::Invariant(format!("M is not minimal: {:?} is redundant", m[i])));
        }
    }
    let forest = build_star_forest(&inst, &m)?;
    if weight + forest.isolated_two_cycles.len() != inst.r() {
        return Err(Error::Invariant("weight of M differs from r - |I|".into()));
    }
    let g2 = {
        let mut d_in = vec![0usize; g.n()];
        let mut d_out = vec![0usize; g.n()];
        for &(a, b) in cover.edges().iter().chain(&m) {
            d_out[a] += 1;
            d_in[b] += 1;
        }
        (0..g.n()).all(|v| d_in[v] <= 2 && d_out[v] <= 2)
    };
    if !g2 {
        return Err(Error::Invariant("G2 has a vertex of in- or out-degree above 2".into()));
    }

    let mut paths = Vec::new();
    let mut fragments = Vec::new();
    for &c in &forest.isolated {
        let comp = &inst.components[c];
        let part = partition_isolated_component(comp, k);
        let kept: usize = part.iter().map(|p| p.len() - 1).sum();
        let f = comp.edge_count();
        let kind = if comp.is_two_cycle() { "isolated_two_cycle" } else { "isolated" };
        if !comp.is_two_cycle() && 3 * kept < 2 * f {
            return Err(Error::Invariant(format!("component {c} kept {kept} of {f} edges")));
        }
        fragments.push(Fragment { kind, component: c, f_edges: f, kept_edges: kept });
        paths.extend(part);
    }
    for star in &forest.stars {
        let (part, kind) = if star.center_shape.is_cycle() {
            (partition_star_cycle_center(star, k)?, "cycle_star")
        } else {
            (partition_star_path_center(star, k)?, "path_star")
        };
        let mut covered: Vec<Vertex> = part.iter().flatten().copied().collect();
        covered.sort_unstable();
        if covered != star.u {
            return Err(Error::Invariant(format!("star at component {} does not cover U", star.center)));
        }
        let kept = part.iter().map(|p| p.len() - 1).sum();
        fragments.push(Fragment { kind, component: star.center, f_edges: star.f_edges.len(), kept_edges: kept });
        paths.extend(part);
    }
    let partition = PathPartition::new(k, paths).canonical();
    let report = validate_partition(g, &partition);
    if !report.ok {
        return Err(Error::Invariant(format!("approx2 output invalid: {}", report.messages().join("; "))));
    }
    let iso = forest.isolated_two_cycles.len();
    // |E(Q)| >= |I| + (2/3)(|E(C)| - 2|I|)
    if 3 * partition.edge_count() + iso < 2 * cover.len() {
        return Err(Error::Invariant("Theorem 2 edge inequality fails".into()));
    }
    Ok(Approx2Trace {
        k,
        initial_cover: initial.edges().to_vec(),
        cover: cover.edges().to_vec(),
        cover_components: inst.components.clone(),
        e1: inst.e1.clone(),
        m_max,
        m,
        weight,
        r: inst.r(),
        forest,
        fragments,
        partition,
    })
}
