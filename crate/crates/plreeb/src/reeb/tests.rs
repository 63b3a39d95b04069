use super::*;
use crate::complex::build_from_facets;
use crate::num::Q;
use crate::plmaps::canonical::{canonical_map, CanonicalKind, SummandKind};
use crate::plmaps::{ensure_generic, fiber, fixtures, PLMap};
use std::collections::BTreeSet;

fn height2() -> PLMap {
    canonical_map(&CanonicalKind::HeightDisk(2)).unwrap()
}

fn product8() -> PLMap {
    canonical_map(&CanonicalKind::ProductSolidTorus { res: 8 }).unwrap()
}

#[test]
fn disk_height_reeb_is_a_path() {
    let g = reeb_graph(&height2()).unwrap();
    assert!(g.is_path(), "{g:?}");
    assert!(g
        .nodes
        .iter()
        .all(|n| matches!(n.kind, NodeKind::BoundaryEndpoint)));
    assert_eq!(g.first_betti(), 0);
}

#[test]
fn octahedron_height_reeb_is_a_path() {
    // closed S^2: two interior extremes
    let oct = build_from_facets(&[
        vec![0, 2, 3],
        vec![0, 3, 4],
        vec![0, 4, 5],
        vec![0, 2, 5],
        vec![1, 2, 3],
        vec![1, 3, 4],
        vec![1, 4, 5],
        vec![1, 2, 5],
    ])
    .unwrap();
    use crate::num::{q, qr};
    let values = vec![
        vec![q(2)],
        vec![q(-2)],
        vec![q(0)],
        vec![qr(1, 3)],
        vec![qr(-1, 3)],
        vec![qr(2, 3)],
    ];
    let f = PLMap::new(oct, 1, values).unwrap();
    let g = reeb_graph(&f).unwrap();
    assert!(g.is_path());
    let kinds: Vec<NodeKind> = g.nodes.iter().map(|n| n.kind).collect();
    assert!(kinds.contains(&NodeKind::Min));
    assert!(kinds.contains(&NodeKind::Max));
}

#[test]
fn torus_height_reeb_has_first_betti_one() {
    // x-coordinate of the frame projection, restricted to the boundary torus
    let f = crate::plmaps::restrict_to_boundary(&product8()).unwrap();
    let h = ensure_generic(&f.coordinate_map(0), 7).unwrap();
    let g = reeb_graph(&h).unwrap();
    assert_eq!(g.first_betti(), 1, "{:?}", g.nodes);
    assert!(!g.is_path());
}

#[test]
fn quotient_consistency() {
    // points over a regular value match the fiber component count
    let f = height2();
    let g = reeb_graph(&f).unwrap();
    for t in [crate::num::qr(-1, 3), crate::num::qr(1, 5)] {
        let comps = fiber(&f, &[t.clone()]).unwrap();
        assert_eq!(g.points_over(&t), comps.len());
    }
    let b = crate::plmaps::restrict_to_boundary(&product8()).unwrap();
    let h = ensure_generic(&b.coordinate_map(0), 7).unwrap();
    let g = reeb_graph(&h).unwrap();
    for t in [crate::num::qr(-9, 2), crate::num::q(0), crate::num::qr(7, 2)] {
        let t = crate::plmaps::slice::regular_scalar_value(&h, &t).unwrap();
        let comps = fiber(&h, &[t.clone()]).unwrap();
        assert_eq!(g.points_over(&t), comps.len(), "at {t}");
    }
}

#[test]
fn degree_one_nodes_match_definite_folds() {
    let f = height2();
    let g = reeb_graph(&f).unwrap();
    let cls = crate::plmaps::classify_boundary_vertices(&f).unwrap();
    let folds = cls.definite_fold_vertices();
    let endpoint_values: BTreeSet<Q> = g
        .nodes
        .iter()
        .enumerate()
        .filter(|(i, _)| g.degree(*i) == 1)
        .map(|(_, n)| n.value.clone())
        .collect();
    let fold_values: BTreeSet<Q> = folds.iter().map(|&v| f.scalar(v).clone()).collect();
    assert_eq!(endpoint_values, fold_values);
}

#[test]
fn nerve_of_product_map_is_an_annulus() {
    let f = product8();
    let nerve = reeb_nerve(&f, 8, &qr_third()).unwrap();
    assert!(nerve.vertices.len() >= 1);
    assert_eq!(trimmed(&nerve.betti.betti), vec![1, 1]);
    assert!(nerve.betti.torsion.iter().all(|t| t.is_empty()));
}

#[test]
fn nerve_of_twisted_map_is_an_annulus() {
    let f = canonical_map(&CanonicalKind::TwistedMap { res: 8 }).unwrap();
    let nerve = reeb_nerve(&f, 8, &qr_third()).unwrap();
    assert_eq!(trimmed(&nerve.betti.betti), vec![1, 1]);
}

#[test]
fn nerve_of_two_torus_sum() {
    let f = canonical_map(&CanonicalKind::SumMap {
        summands: vec![SummandKind::Orientable, SummandKind::Orientable],
        res: 8,
    })
    .unwrap();
    let nerve = reeb_nerve(&f, 12, &qr_third()).unwrap();
    assert_eq!(trimmed(&nerve.betti.betti), vec![1, 2]);
}

fn qr_third() -> Q {
    crate::num::qr(1, 3)
}

fn trimmed(betti: &[usize]) -> Vec<usize> {
    let mut v = betti.to_vec();
    while v.len() > 1 && v.last() == Some(&0) {
        v.pop();
    }
    v
}

#[test]
fn decompose_disk_heights() {
    for (kind, n) in [(CanonicalKind::HeightDisk(2), 2), (CanonicalKind::HeightDisk(3), 3)] {
        let f = canonical_map(&kind).unwrap();
        let d = decompose(&f, 1).unwrap();
        assert_eq!(d.collar_cells.len(), 2, "two boundary endpoints");
        assert!(d.all_pass(), "{d:?}");
        for (_, s) in &d.core_fibers {
            assert_eq!(s.dimension, n - 1);
        }
        for (_, s) in &d.collar_fibers {
            assert_eq!(s.dimension, n);
        }
        // partition covers every cell: two endpoint nodes plus one edge
        assert_eq!(d.core_cells, vec![CellRef::GraphEdge(0)]);
    }
}

#[test]
fn decompose_product_map() {
    let f = product8();
    let d = decompose(&f, 1).unwrap();
    assert!(!d.collar_cells.is_empty());
    assert!(!d.core_cells.is_empty());
    assert!(d.all_pass(), "{d:?}");
    for (_, s) in &d.core_fibers {
        assert_eq!(s.dimension, 1, "core fibers are arcs");
    }
    for (_, s) in &d.collar_fibers {
        assert_eq!(s.dimension, 2, "collar fibers are disks");
    }
}

#[test]
fn decompose_rejects_saddle() {
    let f = fixtures::boundary_saddle_map();
    assert!(matches!(
        decompose(&f, 1),
        Err(ReebError::NotBoundarySpecialGeneric)
    ));
}

#[test]
fn dot_export_mentions_every_node() {
    let g = reeb_graph(&height2()).unwrap();
    let dot = g.to_dot();
    assert!(dot.contains("n0") && dot.contains("n1"));
    assert!(dot.contains("boundary_endpoint"));
}
