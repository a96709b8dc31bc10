//! JSON report shapes. Every document carries `"schema": 1`.

use num_rational::Ratio;
use serde::Serialize;

use kpath::PathPartition;

pub const SCHEMA: u32 = 1;

#[derive(Debug, Clone, Serialize)]
pub struct RatioJson {
    pub num: u64,
    pub den: u64,
    pub decimal: String,
}

impl From<Ratio<u64>> for RatioJson {
    fn from(r: Ratio<u64>) -> Self {
        Self { num: *r.numer(), den: *r.denom(), decimal: decimal(r) }
    }
}

/// Six decimals, rounded half up, computed in integers.
pub fn decimal(r: Ratio<u64>) -> String {
    let scaled = (u128::from(*r.numer()) * 2_000_000 / u128::from(*r.denom())).div_ceil(2);
    format!("{}.{:06}", scaled / 1_000_000, scaled % 1_000_000)
}

/// Parses `a/b` or `a`.
pub fn parse_ratio(s: &str) -> Option<Ratio<u64>> {
    let (a, b) = match s.split_once('/') {
        Some((a, b)) => (a.trim().parse().ok()?, b.trim().parse().ok()?),
        None => (s.trim().parse().ok()?, 1),
    };
    (b != 0).then(|| Ratio::new(a, b))
}

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub schema: u32,
    pub algorithm: String,
    pub input: String,
    pub k: usize,
    pub n: usize,
    pub m: usize,
    pub path_count: usize,
    pub num_singletons: usize,
    pub edge_count: usize,
    /// Entry `i` counts paths of order `i + 1`.
    pub order_counts: Vec<usize>,
    pub paths: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_path_count: Option<usize>,
    /// `exact` (DP oracle) or `certificate` (known partition meeting ceil(n/k)).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_method: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ratio: Option<RatioJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u128>,
}

pub fn order_counts(p: &PathPartition) -> Vec<usize> {
    p.order_counts().into_iter().skip(1).take(p.k).collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepRow {
    pub family: String,
    pub n: usize,
    pub edge_prob: f64,
    pub seed: u64,
    pub m: usize,
    pub path_count: usize,
    pub num_singletons: usize,
    pub oracle_path_count: usize,
    pub ratio: RatioJson,
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub problem: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub schema: u32,
    pub algorithm: String,
    pub k: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub assert_ratio: Option<RatioJson>,
    pub instances: usize,
    pub violations: usize,
    pub max_ratio: Option<RatioJson>,
    pub rows: Vec<SweepRow>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub schema: u32,
    pub ok: bool,
    pub k: usize,
    pub path_count: usize,
    pub num_singletons: usize,
    pub violations: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct OracleReport {
    pub schema: u32,
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub path_count: usize,
    pub min_singletons: usize,
    pub paths: Vec<Vec<usize>>,
}
