//! Exact affine slicing: point fibers, sublevel chunk models, and rectangle
//! preimage components.
//!
//! All computations are combinatorial over rational coordinates. Level sets
//! of scalar maps are built as explicit slice complexes (one vertex per
//! crossing edge, cells from face and facet slices); chunky preimages are
//! reported through their full-subcomplex deformation retracts.

use super::{FiberComponent, MapError, PLMap};
use crate::algebra::{homology_of, ChainData, Ring, Variant};
use crate::complex::SimplicialComplex;
use crate::num::{convex_hull, orient_sign, q, qr, P2, Q};
use num_traits::{Signed, Zero};
use std::collections::{BTreeMap, BTreeSet};

/// Returns a value near `t0` that is not a vertex value of `f`.
pub(crate) fn regular_scalar_value(f: &PLMap, t0: &Q) -> Result<Q, MapError> {
    let mut vals: Vec<Q> = f
        .domain()
        .support()
        .iter()
        .map(|&v| f.scalar(v).clone())
        .collect();
    vals.sort();
    vals.dedup();
    match vals.binary_search(t0) {
        Err(_) => Ok(t0.clone()),
        Ok(i) => {
            if i + 1 < vals.len() {
                Ok((&vals[i] + &vals[i + 1]) / q(2))
            } else if i > 0 {
                Ok((&vals[i - 1] + &vals[i]) / q(2))
            } else {
                Ok(t0 + q(1))
            }
        }
    }
}

fn on_segment(p: &P2, a: &P2, b: &P2) -> bool {
    if a == b {
        return p == a;
    }
    let ab = b.sub(a);
    let ap = p.sub(a);
    if !ab.cross(&ap).is_zero() {
        return false;
    }
    let t = ab.dot(&ap);
    !t.is_negative() && t <= ab.dot(&ab)
}

/// Returns a point near `p0` avoiding the image of the 1-skeleton (which
/// also covers the image segments of degenerate 2-faces).
pub(crate) fn regular_planar_point(f: &PLMap, p0: &P2) -> Result<P2, MapError> {
    let edges: Vec<(P2, P2)> = f
        .domain()
        .faces(1)
        .iter()
        .map(|e| (f.point(e[0]), f.point(e[1])))
        .collect();
    let bad = |p: &P2| edges.iter().any(|(a, b)| on_segment(p, a, b));
    if !bad(p0) {
        return Ok(p0.clone());
    }
    let (lo, hi) = f.bbox().ok_or(MapError::DegenerateQueryPoint)?;
    let delta = (&hi[0] - &lo[0] + &hi[1] - &lo[1] + q(1)) / q(1 << 18);
    // rational directions with pairwise distinct slopes
    for dir in 0..16i64 {
        let d = P2::new(q(16), q(2 * dir + 1));
        for k in 1..=32i64 {
            let cand = p0.add(&d.scale(&(&delta * qr(k, 16))));
            if !bad(&cand) {
                return Ok(cand);
            }
        }
    }
    Err(MapError::DegenerateQueryPoint)
}

/// A vertex of a slice complex: the crossing point on a domain edge.
#[derive(Clone, Debug)]
pub(crate) struct SliceVertex {
    pub edge: (usize, usize),
    /// parameter along the edge from `edge.0` to `edge.1`
    pub t: Q,
}

#[derive(Clone, Debug)]
pub(crate) struct SliceCell {
    pub verts: Vec<usize>,
    pub dim: usize,
    pub facet: usize,
}

/// Exact level set of a scalar function given by per-vertex values.
#[derive(Clone, Debug, Default)]
pub(crate) struct SliceComplex {
    pub verts: Vec<SliceVertex>,
    pub cells: Vec<SliceCell>,
    /// component id per slice vertex
    pub comp: Vec<usize>,
    pub comp_count: usize,
}

impl SliceComplex {
    /// Affinely interpolates per-domain-vertex values to the slice vertices.
    pub fn carried_values(&self, values: &[Q]) -> Vec<Q> {
        self.verts
            .iter()
            .map(|sv| {
                let (a, b) = sv.edge;
                &values[a] + (&values[b] - &values[a]) * &sv.t
            })
            .collect()
    }
}

/// Builds the level set of `values` at the regular level `level` (no vertex
/// value may equal it).
pub(crate) fn scalar_slice(
    domain: &SimplicialComplex,
    values: &[Q],
    level: &Q,
) -> Result<SliceComplex, MapError> {
    let mut s = SliceComplex::default();
    let mut ids: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut uf_parent: Vec<usize> = Vec::new();

    fn find(p: &mut Vec<usize>, mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }

    for (fi, facet) in domain.facets().iter().enumerate() {
        if facet.iter().any(|&v| values[v] == *level) {
            return Err(MapError::DegenerateQueryPoint);
        }
        let below: Vec<usize> = facet.iter().copied().filter(|&v| values[v] < *level).collect();
        let above: Vec<usize> = facet.iter().copied().filter(|&v| values[v] > *level).collect();
        if below.is_empty() || above.is_empty() {
            continue;
        }
        let mut local: Vec<usize> = Vec::new();
        let mut vertex_id = |a: usize, b: usize, s: &mut SliceComplex,
                             parents: &mut Vec<usize>|
         -> usize {
            let key = (a.min(b), a.max(b));
            *ids.entry(key).or_insert_with(|| {
                let (lo_v, hi_v) = key;
                let t = (level - &values[lo_v]) / (&values[hi_v] - &values[lo_v]);
                s.verts.push(SliceVertex { edge: key, t });
                parents.push(s.verts.len() - 1);
                s.verts.len() - 1
            })
        };
        for &a in &below {
            for &b in &above {
                local.push(vertex_id(a, b, &mut s, &mut uf_parent));
            }
        }
        // cells by facet dimension
        match facet.len() {
            2 => {
                s.cells.push(SliceCell {
                    verts: vec![local[0]],
                    dim: 0,
                    facet: fi,
                });
            }
            3 => {
                debug_assert_eq!(local.len(), 2);
                s.cells.push(SliceCell {
                    verts: local.clone(),
                    dim: 1,
                    facet: fi,
                });
            }
            4 => {
                if below.len() == 2 {
                    // quad slice: cyclic order (a,c),(a,d),(b,d),(b,c)
                    let (a, b) = (below[0], below[1]);
                    let (c, d) = (above[0], above[1]);
                    let e_ac = vertex_id(a, c, &mut s, &mut uf_parent);
                    let e_ad = vertex_id(a, d, &mut s, &mut uf_parent);
                    let e_bd = vertex_id(b, d, &mut s, &mut uf_parent);
                    let e_bc = vertex_id(b, c, &mut s, &mut uf_parent);
                    s.cells.push(SliceCell {
                        verts: vec![e_ac, e_ad, e_bd],
                        dim: 2,
                        facet: fi,
                    });
                    s.cells.push(SliceCell {
                        verts: vec![e_ac, e_bd, e_bc],
                        dim: 2,
                        facet: fi,
                    });
                } else {
                    debug_assert_eq!(local.len(), 3);
                    s.cells.push(SliceCell {
                        verts: local.clone(),
                        dim: 2,
                        facet: fi,
                    });
                }
            }
            _ => {
                return Err(MapError::DimensionUnsupported(format!(
                    "slicing facets of arity {}",
                    facet.len()
                )))
            }
        }
        // the facet's slice piece is convex: join everything inside it
        for w in local.windows(2) {
            let (ra, rb) = (find(&mut uf_parent, w[0]), find(&mut uf_parent, w[1]));
            if ra != rb {
                uf_parent[ra] = rb;
            }
        }
    }
    // label components
    let mut comp_ids: BTreeMap<usize, usize> = BTreeMap::new();
    s.comp = (0..s.verts.len())
        .map(|v| {
            let root = find(&mut uf_parent, v);
            let next = comp_ids.len();
            *comp_ids.entry(root).or_insert(next)
        })
        .collect();
    s.comp_count = comp_ids.len();
    Ok(s)
}

fn component_fibers(s: &SliceComplex, ring: Ring) -> Vec<FiberComponent> {
    let mut gens: Vec<Vec<Vec<usize>>> = vec![Vec::new(); s.comp_count];
    let mut dims = vec![0usize; s.comp_count];
    let mut cell_counts = vec![0usize; s.comp_count];
    let mut facets: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); s.comp_count];
    for v in 0..s.verts.len() {
        gens[s.comp[v]].push(vec![v]);
    }
    for cell in &s.cells {
        let c = s.comp[cell.verts[0]];
        debug_assert!(cell.verts.iter().all(|&v| s.comp[v] == c));
        gens[c].push(cell.verts.clone());
        dims[c] = dims[c].max(cell.dim);
        cell_counts[c] += 1;
        facets[c].insert(cell.facet);
    }
    (0..s.comp_count)
        .map(|c| FiberComponent {
            dimension: dims[c],
            betti: homology_of(
                &ChainData::from_simplices(gens[c].iter().cloned()),
                ring,
                Variant::Homology,
            ),
            cell_count: cell_counts[c],
            facets: facets[c].clone(),
        })
        .collect()
}

/// Fiber of a scalar map at a point, regularized if necessary.
pub(crate) fn scalar_fiber(f: &PLMap, t0: &Q) -> Result<Vec<FiberComponent>, MapError> {
    let t = regular_scalar_value(f, t0)?;
    let values: Vec<Q> = f.values().iter().map(|v| v[0].clone()).collect();
    let s = scalar_slice(f.domain(), &values, &t)?;
    Ok(component_fibers(&s, Ring::Z))
}

fn point_in_triangle_strict(p: &P2, a: &P2, b: &P2, c: &P2) -> bool {
    let s1 = orient_sign(a, b, p);
    let s2 = orient_sign(b, c, p);
    let s3 = orient_sign(c, a, p);
    s1 != 0 && s1 == s2 && s2 == s3
}

/// Fiber of a planar map at a point, regularized if necessary.
///
/// For 3-dimensional domains the fiber is a graph: one vertex per 2-face
/// whose image triangle strictly contains the point, one edge per facet
/// crossed by the preimage line. For surface domains it is a finite point
/// set, one per crossing facet.
pub(crate) fn planar_fiber(f: &PLMap, p0: &P2) -> Result<Vec<FiberComponent>, MapError> {
    let p = regular_planar_point(f, p0)?;
    let n = f.domain().dimension();
    match n {
        2 => {
            let mut out = Vec::new();
            for (fi, facet) in f.domain().facets().iter().enumerate() {
                if point_in_triangle_strict(
                    &p,
                    &f.point(facet[0]),
                    &f.point(facet[1]),
                    &f.point(facet[2]),
                ) {
                    out.push(FiberComponent {
                        dimension: 0,
                        betti: homology_of(
                            &ChainData::from_simplices([vec![0usize]]),
                            Ring::Z,
                            Variant::Homology,
                        ),
                        cell_count: 1,
                        facets: BTreeSet::from([fi]),
                    });
                }
            }
            Ok(out)
        }
        3 => {
            let mut face_ids: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
            let mut crossing = |tri: &[usize]| -> Option<usize> {
                if point_in_triangle_strict(
                    &p,
                    &f.point(tri[0]),
                    &f.point(tri[1]),
                    &f.point(tri[2]),
                ) {
                    let next = face_ids.len();
                    Some(*face_ids.entry(tri.to_vec()).or_insert(next))
                } else {
                    None
                }
            };
            let mut edges: Vec<(usize, usize, usize)> = Vec::new(); // (face, face, facet)
            for (fi, facet) in f.domain().facets().iter().enumerate() {
                let mut hits = Vec::new();
                for omit in 0..4 {
                    let tri: Vec<usize> = facet
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| *i != omit)
                        .map(|(_, &v)| v)
                        .collect();
                    if let Some(id) = crossing(&tri) {
                        hits.push(id);
                    }
                }
                match hits.len() {
                    0 => {}
                    2 => edges.push((hits[0], hits[1], fi)),
                    _ => return Err(MapError::DegenerateQueryPoint),
                }
            }
            let n_faces = face_ids.len();
            let mut parent: Vec<usize> = (0..n_faces).collect();
            fn find(p: &mut Vec<usize>, mut x: usize) -> usize {
                while p[x] != x {
                    p[x] = p[p[x]];
                    x = p[x];
                }
                x
            }
            for &(a, b, _) in &edges {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                if ra != rb {
                    parent[ra] = rb;
                }
            }
            let mut comp_ids: BTreeMap<usize, usize> = BTreeMap::new();
            let comp: Vec<usize> = (0..n_faces)
                .map(|v| {
                    let root = find(&mut parent, v);
                    let next = comp_ids.len();
                    *comp_ids.entry(root).or_insert(next)
                })
                .collect();
            let count = comp_ids.len();
            let mut gens: Vec<Vec<Vec<usize>>> = vec![Vec::new(); count];
            let mut dims = vec![0usize; count];
            let mut cells = vec![0usize; count];
            let mut facets: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); count];
            for v in 0..n_faces {
                gens[comp[v]].push(vec![v]);
            }
            for &(a, b, fi) in &edges {
                let c = comp[a];
                gens[c].push(vec![a, b]);
                dims[c] = 1;
                cells[c] += 1;
                facets[c].insert(fi);
            }
            Ok((0..count)
                .map(|c| FiberComponent {
                    dimension: dims[c],
                    betti: homology_of(
                        &ChainData::from_simplices(gens[c].iter().cloned()),
                        Ring::Z,
                        Variant::Homology,
                    ),
                    cell_count: cells[c].max(1),
                    facets: facets[c].clone(),
                })
                .collect())
        }
        d => Err(MapError::DimensionUnsupported(format!(
            "planar fibers on domains of dimension {d}"
        ))),
    }
}

/// Closed axis-aligned rectangle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rect {
    pub lo: P2,
    pub hi: P2,
}

impl Rect {
    pub fn intersect(&self, other: &Rect) -> Option<Rect> {
        let lo = P2::new(
            self.lo.x.clone().max(other.lo.x.clone()),
            self.lo.y.clone().max(other.lo.y.clone()),
        );
        let hi = P2::new(
            self.hi.x.clone().min(other.hi.x.clone()),
            self.hi.y.clone().min(other.hi.y.clone()),
        );
        if lo.x <= hi.x && lo.y <= hi.y {
            Some(Rect { lo, hi })
        } else {
            None
        }
    }

    fn corners(&self) -> [P2; 4] {
        [
            self.lo.clone(),
            P2::new(self.hi.x.clone(), self.lo.y.clone()),
            self.hi.clone(),
            P2::new(self.lo.x.clone(), self.hi.y.clone()),
        ]
    }
}

/// Separating-axis test between the convex hull of `points` and a closed
/// rectangle (touching counts as intersecting).
pub(crate) fn hull_meets_rect(points: &[P2], rect: &Rect) -> bool {
    if points.is_empty() {
        return false;
    }
    // rectangle normals = coordinate axes
    let (mut min_x, mut max_x) = (points[0].x.clone(), points[0].x.clone());
    let (mut min_y, mut max_y) = (points[0].y.clone(), points[0].y.clone());
    for p in points {
        if p.x < min_x {
            min_x = p.x.clone();
        }
        if p.x > max_x {
            max_x = p.x.clone();
        }
        if p.y < min_y {
            min_y = p.y.clone();
        }
        if p.y > max_y {
            max_y = p.y.clone();
        }
    }
    if max_x < rect.lo.x || min_x > rect.hi.x || max_y < rect.lo.y || min_y > rect.hi.y {
        return false;
    }
    let hull = convex_hull(points);
    if hull.len() <= 1 {
        return true; // a point inside the rectangle box test above
    }
    let corners = rect.corners();
    let m = hull.len();
    for i in 0..m {
        let a = &hull[i];
        let b = &hull[(i + 1) % m];
        let normal = b.sub(a).perp();
        // hull lies on the non-negative side of each of its edges (CCW);
        // for a segment test both sides
        let sides: &[i64] = if m == 2 { &[1, -1] } else { &[1] };
        for &side in sides {
            let n = normal.scale(&q(side));
            let hull_max_nonneg = hull.iter().any(|p| !n.dot(&p.sub(a)).is_negative());
            let rect_all_neg = corners.iter().all(|c| n.dot(&c.sub(a)).is_negative());
            if hull_max_nonneg && rect_all_neg {
                return false;
            }
        }
    }
    true
}

/// Connected components of the preimage of a rectangle, as facet sets.
///
/// Per-facet pieces are convex; two pieces meet exactly when the piece of
/// the facets' common face is non-empty, so a union-find over facets with
/// exact hull/rectangle tests computes components of the preimage.
pub(crate) fn rect_components(f: &PLMap, rect: &Rect) -> Vec<BTreeSet<usize>> {
    let facets = f.domain().facets();
    let mut candidate: Vec<bool> = vec![false; facets.len()];
    let mut images: Vec<Vec<P2>> = Vec::with_capacity(facets.len());
    for (i, facet) in facets.iter().enumerate() {
        let pts: Vec<P2> = facet.iter().map(|&v| f.point(v)).collect();
        candidate[i] = hull_meets_rect(&pts, rect);
        images.push(pts);
    }
    let mut parent: Vec<usize> = (0..facets.len()).collect();
    fn find(p: &mut Vec<usize>, mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut by_vertex: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, facet) in facets.iter().enumerate() {
        if candidate[i] {
            for &v in facet {
                by_vertex.entry(v).or_default().push(i);
            }
        }
    }
    let mut tested: BTreeMap<Vec<usize>, bool> = BTreeMap::new();
    for (_, fs) in by_vertex {
        for ai in 0..fs.len() {
            for bi in ai + 1..fs.len() {
                let (a, b) = (fs[ai], fs[bi]);
                if find(&mut parent, a) == find(&mut parent, b) {
                    continue;
                }
                let common: Vec<usize> = facets[a]
                    .iter()
                    .copied()
                    .filter(|v| facets[b].binary_search(v).is_ok())
                    .collect();
                if common.is_empty() {
                    continue;
                }
                let hit = *tested.entry(common.clone()).or_insert_with(|| {
                    let pts: Vec<P2> = common.iter().map(|&v| f.point(v)).collect();
                    hull_meets_rect(&pts, rect)
                });
                if hit {
                    let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                    parent[ra] = rb;
                }
            }
        }
    }
    let mut comps: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
    for i in 0..facets.len() {
        if candidate[i] {
            let root = find(&mut parent, i);
            comps.entry(root).or_default().insert(i);
        }
    }
    comps.into_values().collect()
}

/// A connected component of a chunky preimage, reported through its
/// full-subcomplex homotopy model.
#[derive(Clone, Debug)]
pub(crate) struct ChunkComponent {
    pub betti: crate::algebra::BettiProfile,
    pub dimension: usize,
    pub domain_vertices: BTreeSet<usize>,
    pub facets: BTreeSet<usize>,
}

/// Components of the sublevel chunk `{F <= t}` (or superlevel with
/// `upper = true`) of a scalar map, each modelled by the full subcomplex it
/// deformation retracts to. `t` must be regular. The reported dimension is
/// that of the chunk itself (full facet dimension wherever a facet has a
/// strictly inner vertex).
pub(crate) fn scalar_chunk(
    f: &PLMap,
    t: &Q,
    upper: bool,
) -> Result<Vec<ChunkComponent>, MapError> {
    let keep: BTreeSet<usize> = f
        .domain()
        .support()
        .into_iter()
        .filter(|&v| {
            if upper {
                f.scalar(v) > t
            } else {
                f.scalar(v) < t
            }
        })
        .collect();
    if f.domain().support().iter().any(|&v| f.scalar(v) == t) {
        return Err(MapError::DegenerateQueryPoint);
    }
    let mut parent: Vec<usize> = (0..f.domain().vertex_count()).collect();
    fn find(p: &mut Vec<usize>, mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut gens_by_facet: Vec<Vec<usize>> = Vec::new();
    for facet in f.domain().facets() {
        let kept: Vec<usize> = facet.iter().copied().filter(|v| keep.contains(v)).collect();
        if kept.is_empty() {
            gens_by_facet.push(Vec::new());
            continue;
        }
        for w in kept.windows(2) {
            let (ra, rb) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
            if ra != rb {
                parent[ra] = rb;
            }
        }
        gens_by_facet.push(kept);
    }
    let mut comps: BTreeMap<usize, (Vec<Vec<usize>>, BTreeSet<usize>, BTreeSet<usize>, usize)> =
        BTreeMap::new();
    for (fi, kept) in gens_by_facet.iter().enumerate() {
        if kept.is_empty() {
            continue;
        }
        let root = find(&mut parent, kept[0]);
        let entry = comps
            .entry(root)
            .or_insert_with(|| (Vec::new(), BTreeSet::new(), BTreeSet::new(), 0));
        entry.0.push(kept.clone());
        entry.1.extend(kept.iter().copied());
        entry.2.insert(fi);
        // chunk piece has full facet dimension as soon as one vertex is in
        entry.3 = entry.3.max(f.domain().facets()[fi].len() - 1);
    }
    Ok(comps
        .into_values()
        .map(|(gens, verts, facets, dim)| ChunkComponent {
            betti: homology_of(
                &ChainData::from_simplices(gens),
                Ring::Z,
                Variant::Homology,
            ),
            dimension: dim,
            domain_vertices: verts,
            facets,
        })
        .collect())
}

/// Transversal collar fiber of a planar map at a boundary fold vertex: the
/// preimage of a short segment crossing the fold image, computed as a
/// superlevel full subcomplex of an exact line slice. Returns the component
/// hanging off the anchor vertex.
pub(crate) fn collar_fiber_planar(
    f: &PLMap,
    anchor: usize,
) -> Result<ChunkComponent, MapError> {
    let w = f.point(anchor);
    // inward point: mean image of the anchor's neighbors
    let mut nbrs: BTreeSet<usize> = BTreeSet::new();
    for e in f.domain().faces(1) {
        if e[0] == anchor {
            nbrs.insert(e[1]);
        } else if e[1] == anchor {
            nbrs.insert(e[0]);
        }
    }
    if nbrs.is_empty() {
        return Err(MapError::DegenerateQueryPoint);
    }
    let mut sum = P2::zero();
    for &v in &nbrs {
        sum = sum.add(&f.point(v));
    }
    let inward = sum.scale(&qr(1, nbrs.len() as i64));
    let d = w.sub(&inward); // points outward, across the fold
    if d.is_zero() {
        return Err(MapError::DegenerateQueryPoint);
    }
    let n = d.perp();
    // slice level: just off the anchor's own level, avoiding all vertices
    let g_values: Vec<Q> = (0..f.domain().vertex_count())
        .map(|v| {
            if v < f.values().len() {
                n.dot(&f.point(v))
            } else {
                Q::zero()
            }
        })
        .collect();
    let c0 = n.dot(&w);
    let mut distinct: Vec<Q> = f
        .domain()
        .support()
        .iter()
        .map(|&v| g_values[v].clone())
        .collect();
    distinct.sort();
    distinct.dedup();
    let pos = distinct.binary_search(&c0).unwrap_or_else(|e| e);
    let c = if pos + 1 < distinct.len() {
        (&distinct[pos] + &distinct[pos + 1]) / q(2)
    } else if pos > 0 {
        (&distinct[pos - 1] + &distinct[pos]) / q(2)
    } else {
        return Err(MapError::DegenerateQueryPoint);
    };
    let s = scalar_slice(f.domain(), &g_values, &c)?;
    if s.verts.is_empty() {
        return Err(MapError::DegenerateQueryPoint);
    }
    // carried transversal parameter: large near/behind the fold
    let u_values: Vec<Q> = (0..f.domain().vertex_count())
        .map(|v| d.dot(&f.point(v)))
        .collect();
    let carried = s.carried_values(&u_values);
    let u_w = d.dot(&w);
    let u_q = d.dot(&inward);
    // the cut must sit strictly below every anchored slice vertex so the
    // transversal piece hangs off the anchor; step toward the domain side
    // until the threshold avoids all carried values
    let min_anchored = (0..s.verts.len())
        .filter(|&v| s.verts[v].edge.0 == anchor || s.verts[v].edge.1 == anchor)
        .map(|v| carried[v].clone())
        .min()
        .ok_or(MapError::DegenerateQueryPoint)?;
    let step = (&u_w - &u_q) / q(4);
    let mut s0 = &min_anchored - &step;
    let sorted: BTreeSet<Q> = carried.iter().cloned().collect();
    let mut tries = 0;
    while sorted.contains(&s0) {
        s0 = &s0 - &step / q(1 << tries.min(20));
        tries += 1;
        if tries > 24 {
            return Err(MapError::DegenerateQueryPoint);
        }
    }
    // full subcomplex on slice vertices with u > s0
    let keep: Vec<bool> = carried.iter().map(|u| *u > s0).collect();
    let mut parent: Vec<usize> = (0..s.verts.len()).collect();
    fn find(p: &mut Vec<usize>, mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut gens: Vec<Vec<usize>> = Vec::new();
    let mut cell_dim_any: Vec<(Vec<usize>, usize, usize)> = Vec::new(); // (kept verts, dim, facet)
    for cell in &s.cells {
        let kept: Vec<usize> = cell.verts.iter().copied().filter(|&v| keep[v]).collect();
        if kept.is_empty() {
            continue;
        }
        cell_dim_any.push((kept.clone(), cell.dim, cell.facet));
        // the induced face on the kept vertices belongs to the full
        // subcomplex (slice cells are simplices)
        gens.push(kept.clone());
        for w2 in kept.windows(2) {
            let (ra, rb) = (find(&mut parent, w2[0]), find(&mut parent, w2[1]));
            if ra != rb {
                parent[ra] = rb;
            }
        }
    }
    for v in 0..s.verts.len() {
        if keep[v] {
            gens.push(vec![v]);
        }
    }
    // pick the component whose slice vertices sit on edges at the anchor
    let anchored_root: Vec<usize> = (0..s.verts.len())
        .filter(|&v| keep[v] && (s.verts[v].edge.0 == anchor || s.verts[v].edge.1 == anchor))
        .map(|v| find(&mut parent, v))
        .collect();
    let root = match anchored_root.first() {
        Some(&r) => r,
        None => return Err(MapError::DegenerateQueryPoint),
    };
    if anchored_root.iter().any(|&r| r != root) {
        return Err(MapError::DegenerateQueryPoint);
    }
    let comp_gens: Vec<Vec<usize>> = gens
        .into_iter()
        .filter(|g| find(&mut parent, g[0]) == root)
        .collect();
    let mut dim = 0usize;
    let mut facets = BTreeSet::new();
    for (kept, d2, fi) in &cell_dim_any {
        if find(&mut parent, kept[0]) == root {
            dim = dim.max(*d2);
            facets.insert(*fi);
        }
    }
    let mut domain_vertices = BTreeSet::new();
    for g in &comp_gens {
        for &v in g {
            domain_vertices.insert(s.verts[v].edge.0);
            domain_vertices.insert(s.verts[v].edge.1);
        }
    }
    Ok(ChunkComponent {
        betti: homology_of(
            &ChainData::from_simplices(comp_gens),
            Ring::Z,
            Variant::Homology,
        ),
        dimension: dim,
        domain_vertices,
        facets,
    })
}

/// Clips the convex hull of `points` by a rectangle (Sutherland-Hodgman)
/// and returns an interior point of the clipped region when it has
/// positive area.
pub(crate) fn clip_interior_point(points: &[P2], rect: &Rect) -> Option<P2> {
    let mut poly = convex_hull(points);
    if poly.len() < 3 {
        return None;
    }
    // half-planes of the rectangle: x >= lo.x, x <= hi.x, y >= lo.y, y <= hi.y
    for side in 0..4 {
        let inside = |p: &P2| -> bool {
            match side {
                0 => p.x >= rect.lo.x,
                1 => p.x <= rect.hi.x,
                2 => p.y >= rect.lo.y,
                _ => p.y <= rect.hi.y,
            }
        };
        let cross_at = |a: &P2, b: &P2| -> P2 {
            // intersection with the side line
            let (axis_x, value) = match side {
                0 => (true, rect.lo.x.clone()),
                1 => (true, rect.hi.x.clone()),
                2 => (false, rect.lo.y.clone()),
                _ => (false, rect.hi.y.clone()),
            };
            let t = if axis_x {
                (&value - &a.x) / (&b.x - &a.x)
            } else {
                (&value - &a.y) / (&b.y - &a.y)
            };
            a.lerp(b, &t)
        };
        let mut out: Vec<P2> = Vec::new();
        for i in 0..poly.len() {
            let cur = &poly[i];
            let next = &poly[(i + 1) % poly.len()];
            match (inside(cur), inside(next)) {
                (true, true) => out.push(next.clone()),
                (true, false) => out.push(cross_at(cur, next)),
                (false, true) => {
                    out.push(cross_at(cur, next));
                    out.push(next.clone());
                }
                (false, false) => {}
            }
        }
        poly = out;
        poly.dedup();
        if poly.len() < 3 {
            return None;
        }
    }
    // positive area check
    let area_twice: Q = (1..poly.len() - 1)
        .map(|i| poly[i].sub(&poly[0]).cross(&poly[i + 1].sub(&poly[0])))
        .sum();
    if area_twice.is_zero() {
        return None;
    }
    let n = q(poly.len() as i64);
    let mut c = P2::zero();
    for p in &poly {
        c = c.add(p);
    }
    Some(P2::new(c.x / &n, c.y / n))
}
