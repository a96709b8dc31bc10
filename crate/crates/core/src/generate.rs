//! Deterministic instance generators.
//!
//! Random families draw from ChaCha8 seeded with `seed_from_u64(seed)`:
//! `random` makes one Bernoulli draw per ordered pair `(u, v)`, `u != v`, in
//! lexicographic order; `bidirected_random` makes one draw per unordered
//! pair `u < v` and adds both directions on success.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{DiGraph, Edge};
use crate::partition::PathPartition;

/// Version tag of the random stream discipline above.
pub const STREAM_VERSION: &str = "gen-v1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Random,
    BidirectedRandom,
    DisjointTwoCycles,
    LongPath,
    LongCycle,
    Tight27,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Random,
        Family::BidirectedRandom,
        Family::DisjointTwoCycles,
        Family::LongPath,
        Family::LongCycle,
        Family::Tight27,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Random => "random",
            Family::BidirectedRandom => "bidirected_random",
            Family::DisjointTwoCycles => "disjoint_two_cycles",
            Family::LongPath => "long_path",
            Family::LongCycle => "long_cycle",
            Family::Tight27 => "tight27",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::InvalidSpec(format!("unknown family {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GenSpec {
    pub family: Family,
    pub n: usize,
    pub edge_prob: f64,
    pub seed: u64,
}

impl GenSpec {
    pub fn new(family: Family, n: usize, edge_prob: f64, seed: u64) -> Self {
        Self { family, n, edge_prob, seed }
    }

    pub fn random(n: usize, edge_prob: f64, seed: u64) -> Self {
        Self::new(Family::Random, n, edge_prob, seed)
    }
}

pub fn generate(spec: &GenSpec) -> Result<DiGraph> {
    let n = spec.n;
    let edges: Vec<Edge> = match spec.family {
        Family::Random | Family::BidirectedRandom => {
            if !(0.0..=1.0).contains(&spec.edge_prob) {
                return Err(Error::InvalidSpec(format!("edge_prob {} not in [0, 1]", spec.edge_prob)));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
            let mut out = Vec::new();
            for u in 0..n {
                for v in 0..n {
                    if spec.family == Family::Random {
                        if u != v && rng.gen_bool(spec.edge_prob) {
                            out.push((u, v));
                        }
                    } else if u < v && rng.gen_bool(spec.edge_prob) {
                        out.push((u, v));
                        out.push((v, u));
                    }
                }
            }
            out
        }
        Family::DisjointTwoCycles => {
            if !n.is_multiple_of(2) {
                return Err(Error::InvalidSpec(format!("disjoint_two_cycles needs even n, got {n}")));
            }
            (0..n / 2).flat_map(|i| [(2 * i, 2 * i + 1), (2 * i + 1, 2 * i)]).collect()
        }
        Family::LongPath => (1..n).map(|i| (i - 1, i)).collect(),
        Family::LongCycle => {
            if n < 2 {
                return Err(Error::InvalidSpec(format!("long_cycle needs n >= 2, got {n}")));
            }
            (0..n).map(|i| (i, (i + 1) % n)).collect()
        }
        Family::Tight27 => {
            if n != 27 && n != 0 {
                return Err(Error::InvalidSpec(format!("tight27 has 27 vertices, got n = {n}")));
            }
            return Ok(tight27());
        }
    };
    DiGraph::new(n, edges)
}

/// Row `x` in {0: u, 1: v, 2: w}, index `i` in 0..9.
pub fn tight27_vertex(row: usize, i: usize) -> usize {
    9 * row + i
}

/// Three directed 9-vertex rows u, v, w plus the column edges (u4,v4) and
/// (v4,w4).
pub fn tight27() -> DiGraph {
    let mut edges = Vec::new();
    for row in 0..3 {
        for i in 1..9 {
            edges.push((tight27_vertex(row, i - 1), tight27_vertex(row, i)));
        }
    }
    edges.push((tight27_vertex(0, 4), tight27_vertex(1, 4)));
    edges.push((tight27_vertex(1, 4), tight27_vertex(2, 4)));
    DiGraph::new(27, edges).expect("tight27 is simple")
}

/// `(q_alg, q_opt)`: twelve 2-paths plus the column 3-path u4-v4-w4, and
/// the nine row triples.
pub fn tight27_reference_partitions() -> (PathPartition, PathPartition) {
    let x = tight27_vertex;
    let mut alg = Vec::new();
    let mut opt = Vec::new();
    for row in 0..3 {
        for (a, b) in [(0, 1), (2, 3), (5, 6), (7, 8)] {
            alg.push(vec![x(row, a), x(row, b)]);
        }
        for t in 0..3 {
            opt.push((3 * t..3 * t + 3).map(|i| x(row, i)).collect());
        }
    }
    alg.push(vec![x(0, 4), x(1, 4), x(2, 4)]);
    (PathPartition::new(3, alg).canonical(), PathPartition::new(3, opt).canonical())
}
