//! Boundary connected sum and barycentric subdivision.

use super::{build_from_facets, ComplexError, SimplicialComplex};
use std::collections::BTreeMap;

/// Glues `a` and `b` along one boundary facet of each (the lexicographically
/// smallest), identifying vertices in sorted order. The summands are
/// disjoint, so no star collision can occur and no subdivision is needed;
/// the glued facet becomes an interior face.
pub fn boundary_connected_sum(
    a: &SimplicialComplex,
    b: &SimplicialComplex,
) -> Result<SimplicialComplex, ComplexError> {
    if a.dimension() != b.dimension() {
        return Err(ComplexError::DimensionMismatch(a.dimension(), b.dimension()));
    }
    let bd_a = a.boundary_data();
    let bd_b = b.boundary_data();
    if bd_a.is_closed || bd_b.is_closed {
        return Err(ComplexError::ClosedSummand);
    }
    let glue_a = bd_a.boundary_facets.iter().next().unwrap().clone();
    let glue_b = bd_b.boundary_facets.iter().next().unwrap().clone();

    let mut remap: BTreeMap<usize, usize> = BTreeMap::new();
    for (va, vb) in glue_a.iter().zip(glue_b.iter()) {
        remap.insert(*vb, *va);
    }
    let mut next = a.vertex_count();
    for v in 0..b.vertex_count() {
        remap.entry(v).or_insert_with(|| {
            let id = next;
            next += 1;
            id
        });
    }

    let mut facets: Vec<Vec<usize>> = a.facets().to_vec();
    for f in b.facets() {
        let mut g: Vec<usize> = f.iter().map(|v| remap[v]).collect();
        g.sort_unstable();
        facets.push(g);
    }
    let mut out = build_from_facets(&facets)?;
    let mut labels = a.labels().clone();
    for (v, s) in b.labels() {
        labels.entry(remap[v]).or_insert_with(|| s.clone());
    }
    out.set_labels(labels);
    Ok(out)
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// Barycentric subdivision. Returns the subdivided complex together with,
/// per new vertex, the original face it is the barycenter of; PL map values
/// re-induce affinely as the mean of the face's vertex values.
pub fn barycentric_subdivision(
    k: &SimplicialComplex,
) -> (SimplicialComplex, Vec<Vec<usize>>) {
    let mut face_ids: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    let mut faces: Vec<Vec<usize>> = Vec::new();
    for dim_faces in k.all_faces() {
        for f in dim_faces {
            face_ids.insert(f.clone(), faces.len());
            faces.push(f);
        }
    }
    let mut new_facets = Vec::new();
    for facet in k.facets() {
        for perm in permutations(facet) {
            let mut chain = Vec::with_capacity(perm.len());
            for len in 1..=perm.len() {
                let mut prefix: Vec<usize> = perm[..len].to_vec();
                prefix.sort_unstable();
                chain.push(face_ids[&prefix]);
            }
            chain.sort_unstable();
            new_facets.push(chain);
        }
    }
    let sub = build_from_facets(&new_facets).expect("subdivision of a valid complex");
    (sub, faces)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{
        boundary_subcomplex, generate, validate_manifold, GeneratorKind,
    };

    #[test]
    fn disk_sum_disk_is_disk_like() {
        let d = generate(GeneratorKind::Disk(2)).unwrap();
        let s = boundary_connected_sum(&d, &d).unwrap();
        assert_eq!(s.euler_characteristic(), 1);
        let rep = validate_manifold(&s);
        assert!(rep.is_manifold_with_boundary);
        assert!(rep.connected);
    }

    #[test]
    fn chi_additivity_for_triangle_gluing() {
        let st = generate(GeneratorKind::SolidTorus(4)).unwrap();
        let s = boundary_connected_sum(&st, &st).unwrap();
        assert_eq!(
            s.euler_characteristic(),
            st.euler_characteristic() * 2 - 1
        );
        assert!(validate_manifold(&s).is_manifold_with_boundary);
        // boundary is a genus-2 surface
        let b = boundary_subcomplex(&s).unwrap();
        assert_eq!(b.euler_characteristic(), -2);
        assert_eq!(validate_manifold(&b).orientable, Some(true));
    }

    #[test]
    fn sum_with_twisted_has_nonorientable_boundary() {
        let st = generate(GeneratorKind::SolidTorus(4)).unwrap();
        let tst = generate(GeneratorKind::TwistedSolidTorus(4)).unwrap();
        let s = boundary_connected_sum(&st, &tst).unwrap();
        assert!(validate_manifold(&s).is_manifold_with_boundary);
        let b = boundary_subcomplex(&s).unwrap();
        assert_eq!(b.euler_characteristic(), -2);
        assert_eq!(validate_manifold(&b).orientable, Some(false));
    }

    #[test]
    fn closed_summand_rejected() {
        let s2 = generate(GeneratorKind::Sphere(2)).unwrap();
        let d = generate(GeneratorKind::Disk(2)).unwrap();
        assert_eq!(
            boundary_connected_sum(&s2, &d).unwrap_err(),
            ComplexError::ClosedSummand
        );
    }

    #[test]
    fn dimension_mismatch_rejected() {
        let d2 = generate(GeneratorKind::Disk(2)).unwrap();
        let d3 = generate(GeneratorKind::Disk(3)).unwrap();
        assert!(matches!(
            boundary_connected_sum(&d2, &d3).unwrap_err(),
            ComplexError::DimensionMismatch(2, 3)
        ));
    }

    #[test]
    fn subdivision_preserves_chi_and_manifoldness() {
        let d = generate(GeneratorKind::Disk(2)).unwrap();
        let (sub, faces) = barycentric_subdivision(&d);
        assert_eq!(sub.euler_characteristic(), 1);
        assert_eq!(faces.len(), sub.vertex_count());
        assert!(validate_manifold(&sub).is_manifold_with_boundary);

        let t = generate(GeneratorKind::SolidTorus(3)).unwrap();
        let (sub, _) = barycentric_subdivision(&t);
        assert_eq!(sub.euler_characteristic(), 0);
        assert_eq!(sub.facets().len(), t.facets().len() * 24);
    }
}
