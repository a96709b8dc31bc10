//! `kpath`: run the k-path partition algorithms, check them against exact
//! oracles, verify partitions and generate instances.
//!
//! Exit codes: 0 ok, 1 validation failure or sweep violation, 2 bad input,
//! 3 algorithm incompatible with k, 4 oracle over budget.

mod input;
mod report;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::Ratio;

use kpath::cycle_elim::approx2_traced;
use kpath::generate::{generate, Family, GenSpec};
use kpath::io::{edges_to_dot, partition_to_json, to_dot, write_edge_list};
use kpath::oracle::{exact_kpp, exact_min_singletons, OracleBudget};
use kpath::singleton_augment::approx1;
use kpath::two_path_augment::{approx3_from, approx3_traced};
use kpath::{validate_partition, DiGraph, Error, PathPartition};

use input::{certified_optimum, invalid, load_graph, load_partition};
use report::{order_counts, parse_ratio, OracleReport, RatioJson, RunReport, SweepReport, SweepRow, VerifyReport, SCHEMA};

/// Milliseconds allowed per oracle call.
const TIME_CAP_ENV: &str = "KPATH_ORACLE_TIME_CAP_MS";

#[derive(Parser)]
#[command(name = "kpath", version, about = "k-path partition on directed graphs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Algo {
    Approx1,
    Approx2,
    Approx3,
}

impl Algo {
    fn name(self) -> &'static str {
        match self {
            Algo::Approx1 => "approx1",
            Algo::Approx2 => "approx2",
            Algo::Approx3 => "approx3",
        }
    }

    fn default_k(self) -> usize {
        if self == Algo::Approx2 {
            7
        } else {
            3
        }
    }

    /// The proven ratio: k/2, (k+2)/3 and 13/9.
    fn bound(self, k: usize) -> Ratio<u64> {
        let k = k as u64;
        match self {
            Algo::Approx1 => Ratio::new(k, 2),
            Algo::Approx2 => Ratio::new(k + 2, 3),
            Algo::Approx3 => Ratio::new(13, 9),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutFormat {
    /// The run report.
    Json,
    /// Graphviz, partition edges highlighted.
    Dot,
    /// Bare partition JSON, as read by `verify`.
    Partition,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run one algorithm on a graph.
    Run {
        /// Edge-list file or built-in name (tight27, pathN, cycleN, emptyN, twocyclesN).
        input: String,
        #[arg(long, value_enum)]
        algo: Algo,
        /// Path order bound; defaults to 3 (approx1, approx3) or 7 (approx2).
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_enum, default_value = "json")]
        out: OutFormat,
        /// Compare against the exact optimum.
        #[arg(long)]
        oracle: bool,
        /// Start approx3 from this partition (JSON file, tight27-alg or tight27-opt).
        #[arg(long)]
        init: Option<String>,
        /// Include wall-clock time in the report (breaks byte-identical output).
        #[arg(long)]
        timing: bool,
        /// Directory for intermediate artifacts (JSON and DOT).
        #[arg(long)]
        debug_dir: Option<PathBuf>,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Run an algorithm over generated instances and check its ratio.
    Sweep {
        #[arg(long, default_value = "random")]
        family: String,
        /// Inclusive range `a..b`, or a single `n`.
        #[arg(long, default_value = "1..10")]
        n_range: String,
        /// Half-open range `a..b`, or a count `c` meaning `0..c`.
        #[arg(long, default_value = "20")]
        seeds: String,
        /// Comma-separated edge probabilities.
        #[arg(long, default_value = "0.3")]
        edge_prob: String,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_enum)]
        algo: Algo,
        /// `auto` for the proven bound, or a rational `a/b`.
        #[arg(long)]
        assert_ratio: Option<String>,
        /// Emit the JSON report instead of a table.
        #[arg(long)]
        json: bool,
    },
    /// Validate a partition against a graph.
    Verify {
        input: String,
        /// Partition JSON file, tight27-alg or tight27-opt.
        partition: String,
        /// Overrides the k stored in the partition file.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Generate an instance as an edge list.
    Gen {
        #[arg(long)]
        family: String,
        #[arg(long, default_value_t = 0)]
        n: usize,
        #[arg(long, default_value_t = 0.3)]
        edge_prob: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Exact optimum for a small graph.
    Oracle {
        input: String,
        #[arg(long)]
        k: usize,
        /// Largest n the oracle accepts (at most 24).
        #[arg(long)]
        max_n: Option<usize>,
    },
}

/// A failure with its exit code.
struct Fail {
    code: u8,
    msg: String,
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } | Error::Io(_) | Error::Json(_) | Error::InvalidSpec(_) => 2,
            Error::InvalidK { .. } => 3,
            Error::OverBudget(_) => 4,
            _ => 1,
        };
        Fail { code, msg: e.to_string() }
    }
}

fn fail(code: u8, msg: impl Into<String>) -> Fail {
    Fail { code, msg: msg.into() }
}

type CliResult<T = ()> = std::result::Result<T, Fail>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let res = match cli.cmd {
        Cmd::Run { input, algo, k, out, oracle, init, timing, debug_dir, output } => {
            cmd_run(&input, algo, k, out, oracle, init.as_deref(), timing, debug_dir.as_deref(), output.as_deref())
        }
        Cmd::Sweep { family, n_range, seeds, edge_prob, k, algo, assert_ratio, json } => {
            cmd_sweep(&family, &n_range, &seeds, &edge_prob, k, algo, assert_ratio.as_deref(), json)
        }
        Cmd::Verify { input, partition, k } => cmd_verify(&input, &partition, k),
        Cmd::Gen { family, n, edge_prob, seed, output } => cmd_gen(&family, n, edge_prob, seed, output.as_deref()),
        Cmd::Oracle { input, k, max_n } => cmd_oracle(&input, k, max_n),
    };
    match res {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("kpath: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}

fn budget() -> CliResult<OracleBudget> {
    let mut b = OracleBudget::default();
    if let Ok(v) = std::env::var(TIME_CAP_ENV) {
        let ms: u64 = v.parse().map_err(|_| fail(2, format!("{TIME_CAP_ENV}={v:?} is not a number of milliseconds")))?;
        b.time_cap = Some(Duration::from_millis(ms));
    }
    Ok(b)
}

fn emit(text: &str, output: Option<&Path>) -> CliResult {
    match output {
        Some(path) => fs::write(path, text).map_err(|e| fail(2, format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("reports serialize") + "\n"
}

fn resolve_k(algo: Algo, k: Option<usize>) -> CliResult<usize> {
    let k = k.unwrap_or(algo.default_k());
    if algo == Algo::Approx3 && k != 3 {
        return Err(fail(3, format!("approx3 solves k = 3 only, got k = {k}")));
    }
    Ok(k)
}

/// Runs `algo`, writing its intermediate objects into `debug` if given.
fn solve(g: &DiGraph, algo: Algo, k: usize, init: Option<&PathPartition>, debug: Option<&Path>) -> CliResult<PathPartition> {
    if init.is_some() && algo != Algo::Approx3 {
        return Err(fail(2, "--init applies to approx3 only"));
    }
    let dump = |name: &str, text: String| -> CliResult {
        if let Some(dir) = debug {
            fs::create_dir_all(dir).map_err(|e| fail(2, format!("{}: {e}", dir.display())))?;
            let path = dir.join(name);
            fs::write(&path, text).map_err(|e| fail(2, format!("{}: {e}", path.display())))?;
        }
        Ok(())
    };
    let p = match algo {
        Algo::Approx1 => approx1(g, k)?,
        Algo::Approx2 => {
            let t = approx2_traced(g, k)?;
            if debug.is_some() {
                dump("approx2_trace.json", to_json(&t))?;
                dump("cover.dot", edges_to_dot(g, &t.cover, "C: path-cycle cover after Step 2"))?;
                dump("g1.dot", edges_to_dot(g, &t.e1, "G1: candidate edges E1"))?;
                dump("m.dot", edges_to_dot(g, &t.m, "M: minimal saturating cover"))?;
                dump("g2.dot", edges_to_dot(g, &t.g2_edges(), "G2 = C + M"))?;
                dump("g3.dot", component_graph_dot(t.cover_components.len(), &t.forest.g3_edges))?;
            }
            t.partition
        }
        Algo::Approx3 => {
            let t = match init {
                Some(p) => approx3_from(g, p)?,
                None => approx3_traced(g)?,
            };
            dump("approx3_trace.json", to_json(&t))?;
            t.partition
        }
    };
    let report = validate_partition(g, &p);
    if !report.ok {
        return Err(fail(1, format!("{} produced an invalid partition: {}", algo.name(), report.messages().join("; "))));
    }
    Ok(p)
}

fn component_graph_dot(nc: usize, edges: &[(usize, usize)]) -> String {
    let mut out = String::from("graph G3 {\n  node [shape=box];\n");
    for c in 0..nc {
        out.push_str(&format!("  c{c};\n"));
    }
    for (a, b) in edges {
        out.push_str(&format!("  c{a} -- c{b};\n"));
    }
    out.push_str("}\n");
    out
}

/// The optimum path count and how it was obtained.
fn optimum(input: &str, g: &DiGraph, k: usize, budget: &OracleBudget) -> CliResult<(usize, &'static str)> {
    match exact_kpp(g, k, budget) {
        Ok(p) => Ok((p.path_count(), "exact")),
        Err(Error::OverBudget(msg)) => match certified_optimum(input, g, k) {
            Some(p) => Ok((p.path_count(), "certificate")),
            None => Err(fail(4, format!("oracle budget exceeded: {msg}"))),
        },
        Err(e) => Err(e.into()),
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_run(
    input: &str,
    algo: Algo,
    k: Option<usize>,
    out: OutFormat,
    oracle: bool,
    init: Option<&str>,
    timing: bool,
    debug: Option<&Path>,
    output: Option<&Path>,
) -> CliResult {
    let g = load_graph(input)?;
    let k = resolve_k(algo, k)?;
    let init = init.map(load_partition).transpose()?;
    let start = Instant::now();
    let p = solve(&g, algo, k, init.as_ref(), debug)?;
    let elapsed = start.elapsed();
    match out {
        OutFormat::Dot => return emit(&to_dot(&g, Some(&p)), output),
        OutFormat::Partition => return emit(&partition_to_json(&p), output),
        OutFormat::Json => {}
    }
    let mut report = RunReport {
        schema: SCHEMA,
        algorithm: algo.name().into(),
        input: input.into(),
        k,
        n: g.n(),
        m: g.m(),
        path_count: p.path_count(),
        num_singletons: p.num_singletons(),
        edge_count: p.edge_count(),
        order_counts: order_counts(&p),
        paths: p.paths.clone(),
        oracle_path_count: None,
        oracle_method: None,
        ratio: None,
        elapsed_ms: timing.then_some(elapsed.as_millis()),
    };
    if oracle {
        let (opt, method) = optimum(input, &g, k, &budget()?)?;
        report.oracle_path_count = Some(opt);
        report.oracle_method = Some(method);
        if opt > 0 {
            report.ratio = Some(Ratio::new(p.path_count() as u64, opt as u64).into());
        }
    }
    emit(&to_json(&report), output)
}

fn parse_range(s: &str, inclusive: bool, what: &str) -> CliResult<Vec<u64>> {
    let bad = || fail(2, format!("bad {what} {s:?}"));
    match s.split_once("..") {
        Some((a, b)) => {
            let a: u64 = a.trim().parse().map_err(|_| bad())?;
            let b: u64 = b.trim().parse().map_err(|_| bad())?;
            Ok(if inclusive { (a..=b).collect() } else { (a..b).collect() })
        }
        None => {
            let v: u64 = s.trim().parse().map_err(|_| bad())?;
            Ok(if inclusive { vec![v] } else { (0..v).collect() })
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_sweep(
    family: &str,
    n_range: &str,
    seeds: &str,
    edge_prob: &str,
    k: Option<usize>,
    algo: Algo,
    assert_ratio: Option<&str>,
    json: bool,
) -> CliResult {
    let family: Family = family.parse()?;
    let k = resolve_k(algo, k)?;
    let ns = parse_range(n_range, true, "--n-range")?;
    let seeds = parse_range(seeds, false, "--seeds")?;
    let probs: Vec<f64> = edge_prob
        .split(',')
        .map(|t| t.trim().parse().map_err(|_| fail(2, format!("bad --edge-prob {t:?}"))))
        .collect::<CliResult<_>>()?;
    let limit = match assert_ratio {
        None => None,
        Some("auto") => Some(algo.bound(k)),
        Some(s) => Some(parse_ratio(s).ok_or_else(|| fail(2, format!("bad --assert-ratio {s:?}")))?),
    };
    let budget = budget()?;
    let mut rows = Vec::new();
    for &n in &ns {
        for &prob in &probs {
            for &seed in &seeds {
                let spec = GenSpec::new(family, n as usize, prob, seed);
                let g = generate(&spec)?;
                let p = solve(&g, algo, k, None, None)?;
                let opt = exact_kpp(&g, k, &budget)?.path_count();
                let ratio = Ratio::new(p.path_count() as u64, opt.max(1) as u64);
                let problem = match limit {
                    Some(r) if ratio > r => Some(format!("ratio {ratio} exceeds {r}")),
                    _ => None,
                };
                rows.push(SweepRow {
                    family: family.to_string(),
                    n: n as usize,
                    edge_prob: prob,
                    seed,
                    m: g.m(),
                    path_count: p.path_count(),
                    num_singletons: p.num_singletons(),
                    oracle_path_count: opt,
                    ratio: ratio.into(),
                    ok: problem.is_none(),
                    problem,
                });
            }
        }
    }
    let violations = rows.iter().filter(|r| !r.ok).count();
    let max_ratio = rows.iter().map(|r| Ratio::new(r.ratio.num, r.ratio.den)).max();
    let report = SweepReport {
        schema: SCHEMA,
        algorithm: algo.name().into(),
        k,
        assert_ratio: limit.map(RatioJson::from),
        instances: rows.len(),
        violations,
        max_ratio: max_ratio.map(RatioJson::from),
        rows,
    };
    if json {
        print!("{}", to_json(&report));
    } else {
        print_table(&report);
    }
    if violations > 0 {
        return Err(fail(1, format!("{violations} of {} instances violate the ratio", report.instances)));
    }
    Ok(())
}

fn print_table(r: &SweepReport) {
    println!("{:<20} {:>4} {:>6} {:>6} {:>5} {:>5} {:>4} {:>9}  status", "family", "n", "p", "seed", "m", "alg", "opt", "ratio");
    for row in &r.rows {
        let status = row.problem.as_deref().unwrap_or("ok");
        println!(
            "{:<20} {:>4} {:>6} {:>6} {:>5} {:>5} {:>4} {:>9}  {status}",
            row.family,
            row.n,
            row.edge_prob,
            row.seed,
            row.m,
            row.path_count,
            row.oracle_path_count,
            format!("{}/{}", row.ratio.num, row.ratio.den),
        );
    }
    let max = r.max_ratio.as_ref().map_or("-".to_string(), |m| format!("{}/{} ({})", m.num, m.den, m.decimal));
    let bound = r.assert_ratio.as_ref().map_or(String::new(), |b| format!(", bound {}/{}", b.num, b.den));
    println!("{} instances, {} violations, max ratio {max}{bound}", r.instances, r.violations);
}

fn cmd_verify(input: &str, partition: &str, k: Option<usize>) -> CliResult {
    let g = load_graph(input)?;
    let mut p = load_partition(partition)?;
    if let Some(k) = k {
        p.k = k;
    }
    let v = validate_partition(&g, &p);
    let report = VerifyReport {
        schema: SCHEMA,
        ok: v.ok,
        k: p.k,
        path_count: p.path_count(),
        num_singletons: p.num_singletons(),
        violations: v.messages(),
    };
    print!("{}", to_json(&report));
    if !v.ok {
        return Err(fail(1, format!("{} violations", report.violations.len())));
    }
    Ok(())
}

fn cmd_gen(family: &str, n: usize, edge_prob: f64, seed: u64, output: Option<&Path>) -> CliResult {
    let family: Family = family.parse()?;
    let g = generate(&GenSpec::new(family, n, edge_prob, seed))?;
    emit(&write_edge_list(&g), output)
}

fn cmd_oracle(input: &str, k: usize, max_n: Option<usize>) -> CliResult {
    let g = load_graph(input)?;
    let mut b = budget()?;
    if let Some(m) = max_n {
        b.max_n_partition = m;
    }
    if k == 0 {
        return Err(invalid("k must be positive").into());
    }
    let p = exact_kpp(&g, k, &b)?;
    let min_singletons = exact_min_singletons(&g, k, &b)?;
    let report = OracleReport {
        schema: SCHEMA,
        n: g.n(),
        m: g.m(),
        k,
        path_count: p.path_count(),
        min_singletons,
        paths: p.paths,
    };
    print!("{}", to_json(&report));
    Ok(())
}
