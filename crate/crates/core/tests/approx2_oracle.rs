use kpath::cover::SaturationInstance;
use kpath::cycle_elim::{approx2, approx2_traced};
use kpath::generate::{generate, Family, GenSpec};
use kpath::oracle::{exact_kpp, exact_max_cover_weight, OracleBudget};
use kpath::{validate_partition, DiGraph, PathCycleCover};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Disjoint 2-cycles on the even vertices plus sparse random extra edges,
/// so that G1 is rich in stars.
fn two_cycle_heavy(n: usize, extra: f64, seed: u64) -> DiGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<(usize, usize)> = (0..n / 2).flat_map(|i| [(2 * i, 2 * i + 1), (2 * i + 1, 2 * i)]).collect();
    for u in 0..n {
        for v in 0..n {
            if u != v && u / 2 != v / 2 && rng.gen_bool(extra) {
                edges.push((u, v));
            }
        }
    }
    DiGraph::new(n, edges).unwrap()
}

fn corpus() -> Vec<(String, DiGraph)> {
    let mut out = Vec::new();
    for seed in 0..150u64 {
        let n = 2 + (seed % 11) as usize;
        let prob = [0.1, 0.2, 0.35][(seed % 3) as usize];
        let fam = [Family::Random, Family::BidirectedRandom][(seed / 3 % 2) as usize];
        out.push((format!("{fam} n={n} p={prob} seed={seed}"), generate(&GenSpec::new(fam, n, prob, seed)).unwrap()));
        let n = 2 * (1 + (seed % 6) as usize);
        out.push((format!("two_cycle_heavy n={n} seed={seed}"), two_cycle_heavy(n, 0.12, seed)));
    }
    out
}

#[test]
fn approx2_ratio_against_exact() {
    let budget = OracleBudget::default();
    for (name, g) in corpus() {
        for k in [7, 8] {
            let q = approx2(&g, k).unwrap_or_else(|e| panic!("{name}: {e}"));
            assert!(validate_partition(&g, &q).ok, "{name}");
            let opt = exact_kpp(&g, k, &budget).unwrap();
            assert!(3 * q.path_count() <= (k + 2) * opt.path_count(), "{name}: {} vs {}", q.path_count(), opt.path_count());
        }
    }
}

#[test]
fn approx2_intermediate_invariants() {
    let budget = OracleBudget::default();
    for (name, g) in corpus() {
        let t = approx2_traced(&g, 7).unwrap();
        for f in &t.fragments {
            if f.kind != "isolated_two_cycle" {
                assert!(3 * f.kept_edges >= 2 * f.f_edges, "{name}: {f:?}");
            }
        }
        let iso = t.isolated_two_cycle_count();
        assert!(3 * t.partition.edge_count() + iso >= 2 * t.cover_edge_count(), "{name}");
        assert_eq!(t.weight + iso, t.r, "{name}");
        let cover = PathCycleCover::new(&g, t.cover.iter().copied()).unwrap();
        let inst = SaturationInstance::new(&g, &cover);
        if inst.e1.len() <= budget.max_m_subsets {
            assert_eq!(exact_max_cover_weight(&inst, &budget).unwrap(), t.weight, "{name}");
        }
        // Lemma 2: an optimal partition keeps at most |E(C)| - |I| edges
        let opt = exact_kpp(&g, 7, &budget).unwrap();
        assert!(opt.edge_count() + iso <= t.cover_edge_count(), "{name}");
    }
}

#[test]
fn approx2_rejects_small_k() {
    let g = generate(&GenSpec::new(Family::LongPath, 5, 0.0, 0)).unwrap();
    for k in 0..7 {
        assert!(approx2(&g, k).is_err());
    }
}
