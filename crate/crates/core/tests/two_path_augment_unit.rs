use kpath::two_path_augment::*;
use kpath::*;

fn chain() -> (DiGraph, PathPartition) {
    let g = DiGraph::new(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]).unwrap();
    let p = PathPartition::new(3, vec![vec![0, 1], vec![2, 3], vec![4, 5]]);
    (g, p)
}

#[test]
fn chain_walk() {
    let (g, p) = chain();
    let w = find_two_path_augmenting(&g, &p).unwrap().unwrap();
    assert_eq!(w.verts, vec![0, 1, 2, 3, 4, 5]);
    assert_eq!(w.free, vec![(1, 2), (3, 4)]);
    assert!(check_two_path_walk(&g, &p, &w).is_empty());
    let q = apply_two_path_augmenting(&g, &p, &w).unwrap();
    assert_eq!(q.paths, vec![vec![0, 1, 2], vec![3, 4, 5]]);
    assert_eq!(approx3(&g).unwrap().path_count(), 2);
}

#[test]
fn too_few_two_paths() {
    let g = DiGraph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
    let p = PathPartition::new(3, vec![vec![0, 1], vec![2, 3]]);
    assert!(find_two_path_augmenting(&g, &p).unwrap().is_none());
    assert_eq!(approx3(&DiGraph::empty(3)).unwrap().path_count(), 3);
}

#[test]
fn checker_flags_constraints() {
    let (g, p) = chain();
    let bad = AugmentingWalk3 { verts: vec![1, 0, 2, 3, 4, 5], matched: vec![(0, 1), (2, 3), (4, 5)], free: vec![(0, 2), (3, 4)] };
    assert!(!check_two_path_walk(&g, &p, &bad).is_empty());
    let short = AugmentingWalk3 { verts: vec![0, 1, 2, 3], matched: vec![(0, 1), (2, 3)], free: vec![(1, 2)] };
    assert!(check_two_path_walk(&g, &p, &short).iter().any(|e| e.starts_with("#1")));
    assert!(apply_two_path_augmenting(&g, &p, &short).is_err());
}

#[test]
fn first_edge_doubled() {
    // 2-paths 0-1, 2-3, 4-5, 6-7; the walk re-enters 0-1 and leaves 1
    // again, so 5-1-2 becomes a 3-path and 0-1 is dropped.
    let g = DiGraph::new(8, [(0, 1), (2, 3), (4, 5), (6, 7), (1, 2), (3, 0), (5, 1), (4, 6)]).unwrap();
    let p = PathPartition::new(3, vec![vec![0, 1], vec![2, 3], vec![4, 5], vec![6, 7]]);
    let w = AugmentingWalk3 {
        verts: vec![0, 1, 2, 3, 0, 1, 5, 4, 6, 7],
        matched: vec![(0, 1), (2, 3), (0, 1), (4, 5), (6, 7)],
        free: vec![(1, 2), (3, 0), (5, 1), (4, 6)],
    };
    assert!(check_two_path_walk(&g, &p, &w).is_empty());
    let q = apply_two_path_augmenting(&g, &p, &w).unwrap();
    assert_eq!(q.paths, vec![vec![3, 0], vec![4, 6, 7], vec![5, 1, 2]]);
    assert!(find_two_path_augmenting(&g, &p).unwrap().is_some());

    // #1-#6 hold, but 1's partner edge also closes the walk: 4-5-1-2
    let w = AugmentingWalk3 {
        verts: vec![0, 1, 2, 3, 0, 1, 5, 4],
        matched: vec![(0, 1), (2, 3), (0, 1), (4, 5)],
        free: vec![(1, 2), (3, 0), (5, 1)],
    };
    assert!(check_two_path_walk(&g, &p, &w).is_empty());
    assert!(apply_two_path_augmenting(&g, &p, &w).is_err());
}

#[test]
fn tight27_from_reference() {
    let g = crate::generate::tight27();
    let (alg, _) = crate::generate::tight27_reference_partitions();
    let t = approx3_from(&g, &alg).unwrap();
    assert!(t.walks.is_empty());
    assert_eq!(t.partition.path_count(), 13);
    assert!(approx3_from(&g, &PathPartition::singletons(3, 27)).is_err());
}

#[test]
fn rejects_other_k() {
    let (g, _) = chain();
    let p = PathPartition::new(4, vec![vec![0, 1], vec![2, 3], vec![4, 5]]);
    assert!(matches!(find_two_path_augmenting(&g, &p), Err(Error::InvalidK { .. })));
}

#[test]
fn classes() {
    let g = DiGraph::new(5, [(0, 1), (1, 2), (3, 4), (2, 3)]).unwrap();
    let p = PathPartition::new(3, vec![vec![0, 1, 2], vec![3, 4]]);
    use TwoPathEdgeClass::*;
    assert_eq!(classify_two_path_edges(&g, &p), vec![Irrelevant, Irrelevant, Free, Matched]);
}
