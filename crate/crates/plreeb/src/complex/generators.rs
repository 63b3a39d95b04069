//! Triangulated generators: disks, spheres, solid tori and twisted solid
//! tori (solid Klein bottles).
//!
//! The solid-torus family is a hexagonal disk crossed with a closed station
//! loop; the twisted variant re-identifies the final layer through the
//! y-reflection of the disk, which is simplicial because the hexagon is
//! chosen symmetric under y -> -y.

use super::{build_from_facets, ComplexError, SimplicialComplex};
use crate::num::{q, qr, P2};

/// Generator selector. Resolutions count circle-direction segments.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeneratorKind {
    Disk(usize),
    Sphere(usize),
    SolidTorus(usize),
    TwistedSolidTorus(usize),
}

/// Cross-section disk of the solid-torus generators: a hexagon fan.
///
/// Rim vertices 0..6 counterclockwise starting near angle 30 degrees is the
/// smooth picture; here the rim is the rational hexagon
/// `(a,b), (0,1), (-a,b), (-a,-b), (0,-1), (a,-b)` with center vertex 6.
pub(crate) struct DiskLayout {
    pub rim: Vec<P2>,
    pub center: usize,
    pub reflection: Vec<usize>,
    pub triangles: Vec<Vec<usize>>,
}

pub(crate) fn disk_layout() -> DiskLayout {
    let a = qr(13, 15);
    let b = qr(1, 2);
    let rim = vec![
        P2::new(a.clone(), b.clone()),
        P2::new(q(0), q(1)),
        P2::new(-a.clone(), b.clone()),
        P2::new(-a.clone(), -b.clone()),
        P2::new(q(0), q(-1)),
        P2::new(a, -b),
    ];
    let mut triangles = Vec::new();
    for k in 0..6usize {
        let mut t = vec![k, (k + 1) % 6, 6];
        t.sort_unstable();
        triangles.push(t);
    }
    DiskLayout {
        rim,
        center: 6,
        reflection: vec![5, 4, 3, 2, 1, 0, 6],
        triangles,
    }
}

impl DiskLayout {
    pub fn position(&self, v: usize) -> P2 {
        if v == self.center {
            P2::zero()
        } else {
            self.rim[v].clone()
        }
    }
}

/// One station of the square image loop: a point on the middle square and
/// the outward offset direction there (axis normal on sides, diagonal at
/// corners).
#[derive(Clone, Debug)]
pub(crate) struct Station {
    pub point: P2,
    pub normal: P2,
}

/// `res` stations evenly spaced by perimeter along the square of half-side
/// `m`, starting at the east edge center and walking counterclockwise.
pub(crate) fn loop_stations(res: usize, m: i64) -> Vec<Station> {
    let mq = q(m);
    let perimeter = q(8 * m);
    (0..res)
        .map(|l| {
            let d = &perimeter * qr(l as i64, res as i64);
            let (point, normal) = if d < mq {
                (P2::new(mq.clone(), d.clone()), P2::from_i64(1, 0))
            } else if d == mq {
                (P2::new(mq.clone(), mq.clone()), P2::from_i64(1, 1))
            } else if d < q(3 * m) {
                (P2::new(&mq - (&d - &mq), mq.clone()), P2::from_i64(0, 1))
            } else if d == q(3 * m) {
                (P2::new(-mq.clone(), mq.clone()), P2::from_i64(-1, 1))
            } else if d < q(5 * m) {
                (P2::new(-mq.clone(), &mq - (&d - q(3 * m))), P2::from_i64(-1, 0))
            } else if d == q(5 * m) {
                (P2::new(-mq.clone(), -mq.clone()), P2::from_i64(-1, -1))
            } else if d < q(7 * m) {
                (P2::new(-&mq + (&d - q(5 * m)), -mq.clone()), P2::from_i64(0, -1))
            } else if d == q(7 * m) {
                (P2::new(mq.clone(), -mq.clone()), P2::from_i64(1, -1))
            } else {
                (P2::new(mq.clone(), -&mq + (&d - q(7 * m))), P2::from_i64(1, 0))
            };
            Station { point, normal }
        })
        .collect()
}

/// Number of tube layers used by boundary-sum constructions; odd so no tube
/// cross-section sits exactly at the midpoint of a corner track crossing.
pub(crate) fn tube_layers() -> usize {
    3
}

pub(crate) fn product_vertex(disk_vertex: usize, layer: usize) -> usize {
    layer * 7 + disk_vertex
}

fn product_complex(res: usize, twisted: bool) -> Result<SimplicialComplex, ComplexError> {
    if res < 3 {
        return Err(ComplexError::ResolutionTooSmall(res, 3));
    }
    let disk = disk_layout();
    let mut tets: Vec<Vec<usize>> = Vec::with_capacity(18 * res);
    for ring in 0..res {
        let seam = ring + 1 == res;
        let lower = |v: usize| product_vertex(v, ring);
        let upper = |v: usize| {
            if !seam {
                product_vertex(v, ring + 1)
            } else if twisted {
                product_vertex(disk.reflection[v], 0)
            } else {
                product_vertex(v, 0)
            }
        };
        // staircase order per ring; the twisted seam ring orders by the
        // reflected index so the gluing is chirality-compatible with the
        // interior rings on both sides
        let key = |v: usize| -> usize {
            if seam && twisted {
                disk.reflection[v]
            } else {
                v
            }
        };
        for t in &disk.triangles {
            let mut s = t.clone();
            s.sort_by_key(|&v| key(v));
            let (a, b, c) = (s[0], s[1], s[2]);
            tets.push(vec![lower(a), lower(b), lower(c), upper(c)]);
            tets.push(vec![lower(a), lower(b), upper(b), upper(c)]);
            tets.push(vec![lower(a), upper(a), upper(b), upper(c)]);
        }
    }
    build_from_facets(&tets)
}

fn disk_complex(n: usize) -> Result<SimplicialComplex, ComplexError> {
    // cone over the boundary of the n-simplex; apex gets index n+1
    if n == 0 || n > 3 {
        return Err(ComplexError::UnsupportedDimension(n));
    }
    let apex = n + 1;
    let mut facets = Vec::new();
    for omit in 0..=n {
        let mut f: Vec<usize> = (0..=n).filter(|&v| v != omit).collect();
        f.push(apex);
        facets.push(f);
    }
    build_from_facets(&facets)
}

fn sphere_complex(n: usize) -> Result<SimplicialComplex, ComplexError> {
    if n == 0 || n > 3 {
        return Err(ComplexError::UnsupportedDimension(n));
    }
    let mut facets = Vec::new();
    for omit in 0..=(n + 1) {
        facets.push((0..=(n + 1)).filter(|&v| v != omit).collect::<Vec<_>>());
    }
    build_from_facets(&facets)
}

/// Deterministic generator dispatch; identical inputs produce identical
/// facet sets.
pub fn generate(kind: GeneratorKind) -> Result<SimplicialComplex, ComplexError> {
    match kind {
        GeneratorKind::Disk(n) => disk_complex(n),
        GeneratorKind::Sphere(n) => sphere_complex(n),
        GeneratorKind::SolidTorus(res) => product_complex(res, false),
        GeneratorKind::TwistedSolidTorus(res) => product_complex(res, true),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{boundary_subcomplex, validate_manifold};

    #[test]
    fn disk2_counts() {
        let k = generate(GeneratorKind::Disk(2)).unwrap();
        assert_eq!(k.vertex_count(), 4);
        assert_eq!(k.euler_characteristic(), 1);
        let b = boundary_subcomplex(&k).unwrap();
        // boundary is the original triangle circle
        assert_eq!(b.facets().len(), 3);
        assert_eq!(b.euler_characteristic(), 0);
    }

    #[test]
    fn disk3_counts() {
        let k = generate(GeneratorKind::Disk(3)).unwrap();
        assert_eq!(k.vertex_count(), 5);
        assert_eq!(k.euler_characteristic(), 1);
        let b = boundary_subcomplex(&k).unwrap();
        assert_eq!(b.euler_characteristic(), 2);
    }

    #[test]
    fn spheres() {
        for n in 1..=3usize {
            let k = generate(GeneratorKind::Sphere(n)).unwrap();
            assert!(k.boundary_data().is_closed);
            let expect = if n % 2 == 0 { 2 } else { 0 };
            assert_eq!(k.euler_characteristic(), expect, "sphere({n})");
        }
        assert!(generate(GeneratorKind::Sphere(4)).is_err());
    }

    #[test]
    fn solid_torus_counts() {
        // V = 7r, E = 31r, F = 42r, T = 18r, chi = 0
        let res = 8;
        let k = generate(GeneratorKind::SolidTorus(res)).unwrap();
        assert_eq!(k.vertex_count(), 7 * res);
        assert_eq!(k.facets().len(), 18 * res);
        assert_eq!(k.faces(1).len(), 31 * res);
        assert_eq!(k.faces(2).len(), 42 * res);
        assert_eq!(k.euler_characteristic(), 0);
        // boundary torus: V = 6r, E = 18r, F = 12r
        let b = boundary_subcomplex(&k).unwrap();
        assert_eq!(b.facets().len(), 12 * res);
        assert_eq!(b.faces(1).len(), 18 * res);
        assert_eq!(b.euler_characteristic(), 0);
        assert!(validate_manifold(&b).orientable.unwrap());
    }

    #[test]
    fn generators_are_manifolds_res_3_to_12() {
        for res in 3..=12usize {
            for kind in [
                GeneratorKind::SolidTorus(res),
                GeneratorKind::TwistedSolidTorus(res),
            ] {
                let k = generate(kind).unwrap();
                let rep = validate_manifold(&k);
                assert!(rep.is_manifold_with_boundary, "{kind:?}");
                assert!(rep.connected, "{kind:?}");
            }
        }
        for n in 1..=3usize {
            let k = generate(GeneratorKind::Disk(n)).unwrap();
            assert!(validate_manifold(&k).is_manifold_with_boundary);
        }
    }

    #[test]
    fn twisted_is_nonorientable_solid_torus_is_orientable() {
        let st = generate(GeneratorKind::SolidTorus(6)).unwrap();
        assert_eq!(validate_manifold(&st).orientable, Some(true));
        let tst = generate(GeneratorKind::TwistedSolidTorus(6)).unwrap();
        assert_eq!(validate_manifold(&tst).orientable, Some(false));
        // boundary of the twisted generator is a Klein bottle
        let b = boundary_subcomplex(&tst).unwrap();
        assert_eq!(b.euler_characteristic(), 0);
        assert_eq!(validate_manifold(&b).orientable, Some(false));
    }

    #[test]
    fn generate_deterministic() {
        let a = generate(GeneratorKind::TwistedSolidTorus(7)).unwrap();
        let b = generate(GeneratorKind::TwistedSolidTorus(7)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn resolution_too_small() {
        assert_eq!(
            generate(GeneratorKind::SolidTorus(2)).unwrap_err(),
            ComplexError::ResolutionTooSmall(2, 3)
        );
    }

    #[test]
    fn stations_close_up() {
        for res in [4usize, 6, 8, 12, 16] {
            let st = loop_stations(res, 4);
            assert_eq!(st.len(), res);
            assert_eq!(st[0].point, P2::from_i64(4, 0));
            assert_eq!(st[0].normal, P2::from_i64(1, 0));
            if res % 2 == 0 {
                assert_eq!(st[res / 2].point, P2::from_i64(-4, 0));
                assert_eq!(st[res / 2].normal, P2::from_i64(-1, 0));
            }
        }
    }
}
