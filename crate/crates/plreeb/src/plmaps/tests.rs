use super::*;
use crate::complex::{barycentric_subdivision, generate, GeneratorKind};
use crate::num::{q, qr};
use canonical::{canonical_map, CanonicalKind, SummandKind};

fn height2() -> PLMap {
    canonical_map(&CanonicalKind::HeightDisk(2)).unwrap()
}

fn height3() -> PLMap {
    canonical_map(&CanonicalKind::HeightDisk(3)).unwrap()
}

fn product(res: usize) -> PLMap {
    canonical_map(&CanonicalKind::ProductSolidTorus { res }).unwrap()
}

fn twisted(res: usize) -> PLMap {
    canonical_map(&CanonicalKind::TwistedMap { res }).unwrap()
}

#[test]
fn height_disk2_has_two_definite_folds() {
    let f = height2();
    assert!(f.is_generic_scalar());
    let cls = classify_boundary_vertices(&f).unwrap();
    assert_eq!(cls.singular_vertices().len(), 2);
    assert_eq!(cls.non_definite_vertices().len(), 0);
    assert_eq!(cls.definite_fold_vertices().len(), 2);
}

#[test]
fn height_disks_are_boundary_special_generic() {
    for f in [height2(), height3()] {
        let rep = is_boundary_special_generic(&f).unwrap();
        assert!(rep.pass, "witnesses: {:?}", rep.witnesses);
    }
}

#[test]
fn product_folds_are_two_vertex_circles() {
    let res = 8;
    let f = product(res);
    let cls = classify_boundary_vertices(&f).unwrap();
    let singular = cls.singular_vertices();
    assert_eq!(singular.len(), 2 * res, "singular: {singular:?}");
    assert!(cls.non_definite_vertices().is_empty());
    // the outer fold is the rim-1 column, the inner fold the rim-4 column
    for l in 0..res {
        assert!(singular.contains(&(l * 7 + 1)));
        assert!(singular.contains(&(l * 7 + 4)));
    }
    let rep = is_boundary_special_generic(&f).unwrap();
    assert!(rep.pass, "witnesses: {:?}", rep.witnesses);
}

#[test]
fn twisted_map_is_boundary_special_generic() {
    let f = twisted(8);
    let rep = is_boundary_special_generic(&f).unwrap();
    assert!(rep.pass, "witnesses: {:?}", rep.witnesses);
    // folds form two circles (outer and inner), each winding once
    let cls = rep.classification;
    assert!(cls.non_definite_vertices().is_empty());
    assert!(!cls.definite_fold_vertices().is_empty());
}

#[test]
fn saddle_map_detected() {
    let f = fixtures::boundary_saddle_map();
    let cls = classify_boundary_vertices(&f).unwrap();
    assert_eq!(cls.non_definite_vertices(), vec![fixtures::saddle_vertex()]);
    match &cls.evidence[&fixtures::saddle_vertex()] {
        Evidence::LowerLink { reduced_betti, .. } => {
            assert_eq!(reduced_betti[0], 1, "two lower-link components");
        }
        other => panic!("unexpected evidence {other:?}"),
    }
    let rep = is_boundary_special_generic(&f).unwrap();
    assert!(!rep.pass);
    assert!(rep
        .witnesses
        .iter()
        .any(|w| matches!(w, BsgWitness::NonDefiniteVertex(v) if *v == fixtures::saddle_vertex())));
}

#[test]
fn scalar_extremes_are_definite() {
    // global min and max boundary vertices of any generic scalar map fold
    for f in [height2(), height3(), fixtures::boundary_saddle_map()] {
        let boundary = crate::complex::boundary_subcomplex(f.domain()).unwrap();
        let support = boundary.support();
        let min = support.iter().min_by_key(|&&v| f.scalar(v)).unwrap();
        let max = support.iter().max_by_key(|&&v| f.scalar(v)).unwrap();
        let cls = classify_boundary_vertices(&f).unwrap();
        assert_eq!(cls.labels[min], VertexLabel::DefiniteFold);
        assert_eq!(cls.labels[max], VertexLabel::DefiniteFold);
    }
}

#[test]
fn ensure_generic_idempotent_and_order_preserving() {
    let f = height2();
    let g = ensure_generic(&f, 17).unwrap();
    assert_eq!(f, g, "already-generic map returned unchanged");

    // two equal values get separated, all other comparisons preserved
    let cx = generate(GeneratorKind::Disk(2)).unwrap();
    let values = vec![vec![q(0)], vec![q(0)], vec![q(1)], vec![qr(1, 2)]];
    let f = PLMap::new(cx, 1, values).unwrap();
    let g = ensure_generic(&f, 3).unwrap();
    assert!(g.is_generic_scalar());
    assert!(g.scalar(0) != g.scalar(1));
    assert!(g.scalar(2) > g.scalar(3));
    assert!(g.scalar(3) > g.scalar(0).min(g.scalar(1)));
}

#[test]
fn ensure_generic_fixes_collinear_triangles() {
    let cx = crate::complex::build_from_facets(&[vec![0, 1, 2], vec![1, 2, 3]]).unwrap();
    let values = vec![
        vec![q(0), q(0)],
        vec![q(1), q(0)],
        vec![q(2), q(0)], // collinear with 0,1
        vec![q(1), q(1)],
    ];
    let f = PLMap::new(cx, 2, values).unwrap();
    assert!(!f.is_generic_planar_full());
    let g = ensure_generic(&f, 5).unwrap();
    assert!(g.is_generic_planar_full());
    // triangle 1,2,3 was non-degenerate; its orientation must survive
    let before = crate::num::orient_sign(&f.point(1), &f.point(2), &f.point(3));
    let after = crate::num::orient_sign(&g.point(1), &g.point(2), &g.point(3));
    assert_eq!(before, after);
}

#[test]
fn classification_stable_under_ensure_generic() {
    let f = product(8);
    let g = ensure_generic(&f.coordinate_map(0), 11).unwrap();
    let before = classify_boundary_vertices(&g).unwrap();
    let again = ensure_generic(&g, 11).unwrap();
    assert_eq!(g, again);
    let after = classify_boundary_vertices(&again).unwrap();
    assert_eq!(before.labels, after.labels);
}

#[test]
fn restriction_to_boundary() {
    let f = height2();
    let b = restrict_to_boundary(&f).unwrap();
    assert_eq!(b.domain().dimension(), 1);
    assert_eq!(b.domain().facets().len(), 3);

    let oct = crate::complex::build_from_facets(&[vec![0, 1, 2, 3]]).unwrap();
    let closed = crate::complex::boundary_subcomplex(&oct).unwrap();
    let vals = (0..closed.vertex_count()).map(|i| vec![q(i as i64)]).collect();
    let g = PLMap::new(closed, 1, vals).unwrap();
    assert!(matches!(
        restrict_to_boundary(&g).unwrap_err(),
        MapError::ClosedDomain
    ));
}

#[test]
fn fiber_of_disk_height_is_an_arc() {
    let f = height2();
    let comps = fiber(&f, &[q(0)]).unwrap();
    assert_eq!(comps.len(), 1);
    assert_eq!(comps[0].dimension, 1);
    assert!(comps[0].is_acyclic());
    // outside the image
    let comps = fiber(&f, &[q(10)]).unwrap();
    assert!(comps.is_empty());
}

#[test]
fn fiber_of_product_map_is_an_arc() {
    let f = product(8);
    // inside the east wall of the frame
    let comps = fiber(&f, &[qr(9, 2), qr(1, 3)]).unwrap();
    assert_eq!(comps.len(), 1);
    assert_eq!(comps[0].dimension, 1);
    assert!(comps[0].is_acyclic());
    // the hole of the frame
    let comps = fiber(&f, &[qr(1, 17), qr(1, 19)]).unwrap();
    assert!(comps.is_empty());
}

#[test]
fn max_fiber_counts() {
    // circle height: two points per regular level
    let f = restrict_to_boundary(&height2()).unwrap();
    let (count, witness) = max_fiber_count(&f, 8).unwrap();
    assert_eq!(count, 2);
    assert!(witness.is_some());
    // boundary torus of the product map: two points per regular image point
    let f = restrict_to_boundary(&product(8)).unwrap();
    let (count, _) = max_fiber_count(&f, 8).unwrap();
    assert_eq!(count, 2);
}

#[test]
fn fiber_count_invariant_under_subdivision() {
    let f = height2();
    let (sub, faces) = barycentric_subdivision(f.domain());
    let values: Vec<Vec<Q>> = faces
        .iter()
        .map(|face| {
            let mut sum = q(0);
            for &v in face {
                sum = sum + f.scalar(v);
            }
            vec![sum / q(face.len() as i64)]
        })
        .collect();
    let g = PLMap::new(sub, 1, values).unwrap();
    for t in [qr(1, 5), qr(-2, 7), qr(3, 11)] {
        let a = fiber(&f, &[t.clone()]).unwrap();
        let b = fiber(&g, &[t.clone()]).unwrap();
        assert_eq!(a.len(), b.len(), "at {t}");
    }
}

#[test]
fn sum_map_of_two_solid_tori() {
    let f = canonical_map(&CanonicalKind::SumMap {
        summands: vec![SummandKind::Orientable, SummandKind::Orientable],
        res: 8,
    })
    .unwrap();
    let rep = crate::complex::validate_manifold(f.domain());
    assert!(rep.is_manifold_with_boundary, "failing: {:?}", rep.failing_faces);
    assert!(rep.connected);
    let bsg = is_boundary_special_generic(&f).unwrap();
    assert!(bsg.pass, "witnesses: {:?}", bsg.witnesses);
}

#[test]
fn sum_map_with_twisted_summand() {
    let f = canonical_map(&CanonicalKind::SumMap {
        summands: vec![SummandKind::Orientable, SummandKind::Twisted],
        res: 8,
    })
    .unwrap();
    let rep = crate::complex::validate_manifold(f.domain());
    assert!(rep.is_manifold_with_boundary, "failing: {:?}", rep.failing_faces);
    let bsg = is_boundary_special_generic(&f).unwrap();
    assert!(bsg.pass, "witnesses: {:?}", bsg.witnesses);
}
