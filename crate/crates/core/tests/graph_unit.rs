use kpath::graph::*;
use kpath::*;

fn path_graph(n: usize) -> DiGraph {
    DiGraph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
}

#[test]
fn rejects_loops_and_duplicates() {
    assert!(matches!(DiGraph::new(2, [(0, 0)]), Err(Error::SelfLoop(0))));
    assert!(matches!(DiGraph::new(2, [(0, 1), (0, 1)]), Err(Error::DuplicateEdge(0, 1))));
    assert!(matches!(DiGraph::new(2, [(0, 2)]), Err(Error::VertexOutOfRange { vertex: 2, n: 2 })));
}

#[test]
fn adjacency_mirrors_edges() {
    let g = DiGraph::new(4, [(2, 1), (0, 1), (1, 3), (3, 0)]).unwrap();
    assert_eq!(g.edges(), &[(0, 1), (1, 3), (2, 1), (3, 0)]);
    assert_eq!(g.in_neighbors(1), &[0, 2]);
    assert_eq!(g.out_neighbors(3), &[0]);
    assert_eq!(g.incident_edges(1), vec![(0, 1), (1, 3), (2, 1)]);
    let total_in: usize = (0..4).map(|v| g.in_degree(v)).sum();
    assert_eq!(total_in, g.m());
}

#[test]
fn two_cycle_component() {
    let g = DiGraph::new(2, [(0, 1), (1, 0)]).unwrap();
    let comps = cover_components(&g, &[(0, 1), (1, 0)]).unwrap();
    assert_eq!(comps, vec![Component::Cycle(vec![0, 1])]);
    assert!(comps[0].is_two_cycle());
}

#[test]
fn path_plus_isolated_vertex() {
    let g = path_graph(4);
    let comps = cover_components(&g, &[(0, 1), (1, 2)]).unwrap();
    assert_eq!(comps, vec![Component::Path(vec![0, 1, 2]), Component::Path(vec![3])]);
}

#[test]
fn three_cycle_component() {
    let g = DiGraph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
    let comps = cover_components(&g, &[(1, 2), (2, 0), (0, 1)]).unwrap();
    assert_eq!(comps, vec![Component::Cycle(vec![0, 1, 2])]);
    assert_eq!(comps[0].edge_count(), 3);
}

#[test]
fn degree_violation_is_rejected() {
    let g = DiGraph::new(3, [(0, 1), (0, 2)]).unwrap();
    assert!(matches!(cover_components(&g, &[(0, 1), (0, 2)]), Err(Error::NotACover(_))));
    assert!(matches!(cover_components(&g, &[(1, 0)]), Err(Error::MissingEdge(1, 0))));
}
