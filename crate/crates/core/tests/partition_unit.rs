use kpath::partition::*;
use kpath::*;

fn path3() -> DiGraph {
    DiGraph::new(3, [(0, 1), (1, 2)]).unwrap()
}

#[test]
fn single_path_is_valid() {
    let r = validate_partition(&path3(), &PathPartition::new(3, vec![vec![0, 1, 2]]));
    assert!(r.ok, "{:?}", r.messages());
}

#[test]
fn non_edge_reported() {
    let r = validate_partition(&path3(), &PathPartition::new(3, vec![vec![0, 2], vec![1]]));
    assert!(!r.ok);
    assert_eq!(r.messages(), vec!["missing edge (0,2)"]);
}

#[test]
fn all_violations_listed() {
    let p = PathPartition::new(2, vec![vec![0, 1, 2], vec![0], vec![]]);
    let r = validate_partition(&DiGraph::new(4, [(0, 1), (1, 2)]).unwrap(), &p);
    assert_eq!(
        r.violations,
        vec![
            Violation::TooLong { path: 0, order: 3, k: 2 },
            Violation::EmptyPath(2),
            Violation::Repeated { vertex: 0, times: 2 },
            Violation::Uncovered(3),
        ]
    );
}

#[test]
fn singletons_listed() {
    assert!(singletons_of(&PathPartition::new(3, vec![vec![0, 1, 2]])).is_empty());
    assert_eq!(singletons_of(&PathPartition::singletons(3, 3)), vec![0, 1, 2]);
    assert_eq!(singletons_of(&PathPartition::new(3, vec![vec![0, 1], vec![2]])), vec![2]);
}

#[test]
fn counting_identities() {
    let p = PathPartition::new(4, vec![vec![3], vec![0, 1, 2], vec![4, 5]]);
    assert_eq!(p.edge_count() + p.path_count(), 6);
    let weighted: usize = p.order_counts().iter().enumerate().map(|(i, c)| i * c).sum();
    assert_eq!(weighted, 6);
    assert_eq!(p.canonical().paths, vec![vec![0, 1, 2], vec![3], vec![4, 5]]);
}
