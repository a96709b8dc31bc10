use kpath::cycle_elim::*;
use kpath::cover::SaturationInstance;
use kpath::*;

fn graph(n: usize, edges: &[Edge]) -> DiGraph {
    DiGraph::new(n, edges.iter().copied()).unwrap()
}

fn sat(comp: usize, u: Vertex, u2: Vertex, v: Vertex, dir: Attach) -> Satellite {
    Satellite { comp, u, u2, v, dir }
}

fn star(center: Component, sats: Vec<Satellite>) -> StarComponent {
    let mut u: Vec<Vertex> = center.vertices().to_vec();
    let mut f = center.edges();
    for s in &sats {
        u.extend([s.u, s.u2]);
        f.extend([(s.u, s.u2), (s.u2, s.u)]);
    }
    u.sort_unstable();
    f.sort_unstable();
    StarComponent {
        center: 0,
        center_shape: center,
        connecting_edges: sats.iter().map(Satellite::edge).collect(),
        satellites: sats,
        u,
        f_edges: f,
    }
}

#[test]
fn step2_opens_cycles() {
    let g = graph(3, &[(0, 1), (1, 0), (2, 0)]);
    let c = PathCycleCover::new(&g, [(0, 1), (1, 0)]).unwrap();
    assert_eq!(improve_cover(&g, &c).unwrap().edges(), &[(0, 1), (2, 0)]);
    let g = graph(4, &[(0, 1), (1, 2), (2, 0), (1, 3)]);
    let c = PathCycleCover::new(&g, [(0, 1), (1, 2), (2, 0)]).unwrap();
    assert_eq!(improve_cover(&g, &c).unwrap().edges(), &[(0, 1), (1, 3), (2, 0)]);
    let g = graph(3, &[(0, 1), (1, 2)]);
    let c = PathCycleCover::new(&g, [(0, 1), (1, 2)]).unwrap();
    assert_eq!(improve_cover(&g, &c).unwrap(), c);
}

#[test]
fn saturation_instance_examples() {
    let g = graph(6, &[(0, 1), (1, 0), (2, 3), (3, 2), (1, 2), (4, 5), (5, 4), (0, 4)]);
    let c = PathCycleCover::new(&g, [(0, 1), (1, 0), (2, 3), (3, 2)]).unwrap();
    let inst = build_saturation_instance(&g, &c);
    assert_eq!(inst.e1, vec![(0, 4), (1, 2)]);
    let g = graph(6, &[(0, 1), (1, 2), (3, 4), (4, 5), (2, 3), (0, 2)]);
    let c = PathCycleCover::new(&g, [(0, 1), (1, 2), (3, 4), (4, 5)]).unwrap();
    assert!(build_saturation_instance(&g, &c).e1.is_empty());
}

#[test]
fn forest_examples() {
    let g = graph(4, &[(0, 1), (1, 0), (2, 3), (3, 2), (1, 2)]);
    let c = PathCycleCover::new(&g, [(0, 1), (1, 0), (2, 3), (3, 2)]).unwrap();
    let inst = SaturationInstance::new(&g, &c);
    let f = build_star_forest(&inst, &[]).unwrap();
    assert_eq!(f.isolated_two_cycles, vec![0, 1]);
    let f = build_star_forest(&inst, &[(1, 2)]).unwrap();
    assert_eq!(f.stars.len(), 1);
    assert_eq!(f.stars[0].center, 0);
    assert_eq!(f.stars[0].satellites[0].comp, 1);

    // path 0-1-2 with 2-cycles {3,4}, {5,6} hanging off 0 and 2
    let g = graph(7, &[(0, 1), (1, 2), (3, 4), (4, 3), (5, 6), (6, 5), (3, 0), (2, 5)]);
    let c = PathCycleCover::new(&g, [(0, 1), (1, 2), (3, 4), (4, 3), (5, 6), (6, 5)]).unwrap();
    let inst = SaturationInstance::new(&g, &c);
    let f = build_star_forest(&inst, &[(2, 5), (3, 0)]).unwrap();
    assert_eq!(f.stars.len(), 1);
    assert!(!f.stars[0].center_shape.is_cycle());
    assert_eq!(f.stars[0].satellites.len(), 2);
}

#[test]
fn isolated_components() {
    assert_eq!(partition_isolated_component(&Component::Cycle(vec![0, 1]), 7), vec![vec![0, 1]]);
    let p = partition_isolated_component(&Component::Path((0..10).collect()), 7);
    assert_eq!(p.iter().map(Vec::len).collect::<Vec<_>>(), vec![7, 3]);
    let p = partition_isolated_component(&Component::Cycle(vec![0, 1, 2]), 7);
    assert_eq!(p, vec![vec![0, 1, 2]]);
}

#[test]
fn path_center_cases() {
    // single vertex center with one satellite
    let s = star(Component::Path(vec![0]), vec![sat(1, 1, 2, 0, Attach::In)]);
    assert_eq!(partition_star_path_center(&s, 7).unwrap(), vec![vec![2, 1, 0]]);

    // Case 1 at the middle vertex
    let s = star(
        Component::Path(vec![0, 1, 2]),
        vec![sat(1, 3, 4, 1, Attach::In), sat(2, 5, 6, 1, Attach::Out)],
    );
    let p = partition_star_path_center(&s, 7).unwrap();
    assert_eq!(p[0], vec![4, 3, 1, 5, 6]);
    assert_eq!(p.len(), 3);

    // Case 4 at the start
    let s = star(Component::Path(vec![0, 1, 2, 3]), vec![sat(1, 4, 5, 1, Attach::Out)]);
    let p = partition_star_path_center(&s, 7).unwrap();
    assert_eq!(p[0], vec![0, 1, 4, 5]);
    assert_eq!(p[1], vec![2, 3]);

    // Case 3
    let s = star(
        Component::Path(vec![0, 1, 2]),
        vec![sat(1, 3, 4, 0, Attach::In), sat(2, 5, 6, 2, Attach::Out)],
    );
    assert_eq!(partition_star_path_center(&s, 7).unwrap(), vec![vec![4, 3, 0, 1, 2, 5, 6]]);
}

#[test]
fn cycle_center_cases() {
    // uniform orientation: h pieces
    let cyc = Component::Cycle(vec![0, 1, 2, 3]);
    let s = star(
        cyc,
        vec![sat(1, 4, 5, 0, Attach::Out), sat(2, 6, 7, 2, Attach::Out)],
    );
    let p = partition_star_cycle_center(&s, 7).unwrap();
    assert_eq!(p, vec![vec![3, 0, 4, 5], vec![1, 2, 6, 7]]);
    let kept: usize = p.iter().map(|q| q.len() - 1).sum();
    assert_eq!(kept, 4 + 2);

    // 2-cycle center with one 2-cycle satellite
    let s = star(Component::Cycle(vec![0, 1]), vec![sat(1, 2, 3, 0, Attach::Out)]);
    assert_eq!(partition_star_cycle_center(&s, 7).unwrap(), vec![vec![1, 0, 2, 3]]);

    // one satellite on a long cycle goes through Case 2 and Lemma 4
    let s = star(Component::Cycle((0..6).collect()), vec![sat(1, 6, 7, 3, Attach::In)]);
    let p = partition_star_cycle_center(&s, 7).unwrap();
    assert_eq!(p[0], vec![7, 6, 3, 4, 5]);
    assert_eq!(p[1], vec![0, 1, 2]);
}

#[test]
fn approx2_examples() {
    let path = DiGraph::new(20, (1..20).map(|i| (i - 1, i))).unwrap();
    assert_eq!(approx2(&path, 7).unwrap().path_count(), 3);
    let cycles = DiGraph::new(6, [(0, 1), (1, 0), (2, 3), (3, 2), (4, 5), (5, 4)]).unwrap();
    let t = approx2_traced(&cycles, 7).unwrap();
    assert_eq!(t.partition.path_count(), 3);
    assert_eq!(t.isolated_two_cycle_count(), 3);
    assert!(matches!(approx2(&path, 6), Err(Error::InvalidK { k: 6, min: 7, .. })));
}
