//! k-path partition on directed graphs: three approximation algorithms,
//! exact oracles for small instances, and instance generators.

pub mod cover;
pub mod cycle_elim;
pub mod error;
pub mod generate;
pub mod graph;
pub mod io;
pub mod matching;
pub mod oracle;
pub mod partition;
pub mod singleton_augment;
pub mod two_path_augment;

pub use error::{Error, Result};
pub use graph::{Component, DiGraph, Edge, PathCycleCover, Vertex};
pub use partition::{validate_partition, PathPartition, ValidationReport, Violation};
