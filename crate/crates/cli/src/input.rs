//! Graph and partition inputs: built-in names or files.

use std::fs;

use kpath::generate::{generate, tight27, tight27_reference_partitions, Family, GenSpec};
use kpath::io::{parse_edge_list, partition_from_json};
use kpath::{DiGraph, Error, PathPartition, Result};

/// Built-in graph names; anything else is read as an edge-list file.
pub const BUILTINS: &str = "tight27, pathN, cycleN, emptyN, twocyclesN";

pub fn builtin_graph(name: &str) -> Option<Result<DiGraph>> {
    if name == "tight27" {
        return Some(Ok(tight27()));
    }
    let fam = [
        ("path", Family::LongPath),
        ("cycle", Family::LongCycle),
        ("twocycles", Family::DisjointTwoCycles),
        ("empty", Family::Random),
    ];
    for (prefix, family) in fam {
        if let Some(n) = name.strip_prefix(prefix).and_then(|r| r.parse::<usize>().ok()) {
            // random with edge_prob 0 is the edgeless graph
            return Some(generate(&GenSpec::new(family, n, 0.0, 0)));
        }
    }
    None
}

pub fn load_graph(input: &str) -> Result<DiGraph> {
    if let Some(g) = builtin_graph(input) {
        return g;
    }
    let text = fs::read_to_string(input)
        .map_err(|e| std::io::Error::new(e.kind(), format!("{input}: not a file or built-in ({BUILTINS}): {e}")))?;
    parse_edge_list(&text)
}

/// `tight27-alg` and `tight27-opt` name the reference partitions.
pub fn load_partition(input: &str) -> Result<PathPartition> {
    match input {
        "tight27-alg" => Ok(tight27_reference_partitions().0),
        "tight27-opt" => Ok(tight27_reference_partitions().1),
        path => partition_from_json(&fs::read_to_string(path)?),
    }
}

/// A partition known to be optimal for a built-in graph too large for the
/// exact oracle, certified by meeting the ceil(n / k) lower bound.
pub fn certified_optimum(input: &str, g: &DiGraph, k: usize) -> Option<PathPartition> {
    if input != "tight27" || k != 3 {
        return None;
    }
    let opt = tight27_reference_partitions().1;
    let ok = kpath::validate_partition(g, &opt).ok && opt.path_count() == g.n().div_ceil(k);
    ok.then_some(opt)
}

pub fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidSpec(msg.into())
}
