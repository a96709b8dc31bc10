use kpath::generate::{generate, tight27, tight27_reference_partitions, Family, GenSpec};
use kpath::oracle::{exact_kpp, exact_min_singletons, exists_two_path_augmenting_exhaustive, OracleBudget};
use kpath::singleton_augment::approx1;
use kpath::two_path_augment::{apply_two_path_augmenting, approx3_traced, check_two_path_walk, find_two_path_augmenting};
use kpath::{validate_partition, DiGraph};

fn spec(seed: u64, max_n: u64) -> GenSpec {
    let n = 1 + (seed % max_n) as usize;
    let prob = [0.1, 0.2, 0.3, 0.5][(seed / max_n % 4) as usize];
    let fam = if seed % 5 == 4 { Family::BidirectedRandom } else { Family::Random };
    GenSpec::new(fam, n, prob, seed)
}

#[test]
fn approx3_ratio_and_singletons() {
    let budget = OracleBudget::default();
    for seed in 0..300u64 {
        let g = generate(&spec(seed, 10)).unwrap();
        let t = approx3_traced(&g).unwrap();
        let q = &t.partition;
        assert!(validate_partition(&g, q).ok);
        assert_eq!(q.num_singletons(), exact_min_singletons(&g, 3, &budget).unwrap(), "seed {seed}");
        let opt = exact_kpp(&g, 3, &budget).unwrap();
        assert!(9 * q.path_count() <= 13 * opt.path_count(), "seed {seed}: {} vs {}", q.path_count(), opt.path_count());
        assert_eq!(q.path_count() + t.walks.len(), t.seed.path_count());
        assert!(find_two_path_augmenting(&g, q).unwrap().is_none());
    }
}

#[test]
fn finder_agrees_with_exhaustive_oracle() {
    let budget = OracleBudget::default();
    let mut found = 0;
    for seed in 0..300u64 {
        let g = generate(&spec(seed, 12)).unwrap();
        let mut p = approx1(&g, 3).unwrap();
        loop {
            let w = find_two_path_augmenting(&g, &p).unwrap();
            let exists = exists_two_path_augmenting_exhaustive(&g, &p, &budget).unwrap();
            assert_eq!(w.is_some(), exists, "seed {seed}: {:?}", p.paths);
            let Some(w) = w else { break };
            found += 1;
            assert!(check_two_path_walk(&g, &p, &w).is_empty());
            let q = apply_two_path_augmenting(&g, &p, &w).unwrap();
            let (a, b) = (p.order_counts(), q.order_counts());
            assert_eq!((a[1], a[2] - 3, a[3] + 2), (b[1], b[2], b[3]));
            p = q;
        }
    }
    assert!(found > 20, "only {found} walks exercised");
}

#[test]
fn tight_instance_is_a_fixed_point() {
    let g = tight27();
    let (alg, _) = tight27_reference_partitions();
    assert!(find_two_path_augmenting(&g, &alg).unwrap().is_none());
    let chain = DiGraph::new(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]).unwrap();
    assert_eq!(approx3_traced(&chain).unwrap().partition.path_count(), 2);
}
