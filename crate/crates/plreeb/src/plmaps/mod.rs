//! PL maps to R and R^2: genericity enforcement, boundary fold-point
//! classification, fibers, and the canonical map constructions.

pub mod canonical;
pub mod fixtures;
pub(crate) mod slice;

pub use canonical::{canonical_map, CanonicalKind, SummandKind};

use crate::complex::{boundary_subcomplex, SimplicialComplex};
use crate::num::{q, qr, P2, Q};
use num_traits::{Signed, Zero};
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum MapError {
    #[error("map kind does not match the supplied complex")]
    KindMismatch,
    #[error("perturbation failed to reach a generic map")]
    PerturbationFailed,
    #[error("domain is closed (empty boundary)")]
    ClosedDomain,
    #[error("map is not generic: {0}")]
    NotGeneric(String),
    #[error("unsupported dimensions: {0}")]
    DimensionUnsupported(String),
    #[error("query point is degenerate and could not be regularized")]
    DegenerateQueryPoint,
    #[error("resolution unsupported: {0}")]
    Resolution(String),
    #[error("values malformed: {0}")]
    BadValues(String),
    #[error(transparent)]
    Complex(#[from] crate::complex::ComplexError),
}

/// A map determined by rational vertex values, extended affinely over
/// simplices. Target dimension 1 or 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PLMap {
    domain: SimplicialComplex,
    target_dim: usize,
    values: Vec<Vec<Q>>,
}

impl PLMap {
    pub fn new(
        domain: SimplicialComplex,
        target_dim: usize,
        values: Vec<Vec<Q>>,
    ) -> Result<PLMap, MapError> {
        if target_dim != 1 && target_dim != 2 {
            return Err(MapError::DimensionUnsupported(format!(
                "target dimension {target_dim}"
            )));
        }
        if values.len() != domain.vertex_count() {
            return Err(MapError::BadValues(format!(
                "{} value rows for {} vertices",
                values.len(),
                domain.vertex_count()
            )));
        }
        if values.iter().any(|v| v.len() != target_dim) {
            return Err(MapError::BadValues("value arity mismatch".into()));
        }
        Ok(PLMap {
            domain,
            target_dim,
            values,
        })
    }

    pub fn domain(&self) -> &SimplicialComplex {
        &self.domain
    }

    pub fn target_dim(&self) -> usize {
        self.target_dim
    }

    pub fn values(&self) -> &[Vec<Q>] {
        &self.values
    }

    pub fn scalar(&self, v: usize) -> &Q {
        &self.values[v][0]
    }

    pub fn point(&self, v: usize) -> P2 {
        P2::new(self.values[v][0].clone(), self.values[v][1].clone())
    }

    /// Bounding box of the vertex images over the support.
    pub fn bbox(&self) -> Option<(Vec<Q>, Vec<Q>)> {
        let support = self.domain.support();
        let mut iter = support.iter();
        let first = *iter.next()?;
        let mut lo = self.values[first].clone();
        let mut hi = lo.clone();
        for &v in iter {
            for c in 0..self.target_dim {
                if self.values[v][c] < lo[c] {
                    lo[c] = self.values[v][c].clone();
                }
                if self.values[v][c] > hi[c] {
                    hi[c] = self.values[v][c].clone();
                }
            }
        }
        Some((lo, hi))
    }

    /// Scalar genericity: pairwise distinct values over the support.
    pub fn is_generic_scalar(&self) -> bool {
        assert_eq!(self.target_dim, 1);
        let mut seen = BTreeSet::new();
        self.domain
            .support()
            .iter()
            .all(|&v| seen.insert(self.values[v][0].clone()))
    }

    /// Planar genericity as used by the fold classifier: adjacent vertices
    /// have distinct images and no 2-face of the boundary has a collinear
    /// image. Interior 2-faces may degenerate (the canonical product maps
    /// collapse their cross-section triangles radially); fibers avoid those
    /// segments through regular query points.
    pub fn is_generic_planar_boundary(&self) -> bool {
        assert_eq!(self.target_dim, 2);
        for e in self.domain.faces(1) {
            if self.values[e[0]] == self.values[e[1]] {
                return false;
            }
        }
        if let Ok(b) = boundary_subcomplex(&self.domain) {
            for t in b.faces(2) {
                if crate::num::orient_sign(&self.point(t[0]), &self.point(t[1]), &self.point(t[2]))
                    == 0
                {
                    return false;
                }
            }
        }
        true
    }

    /// Full planar genericity (every 2-face non-collinear), the
    /// post-condition of [`ensure_generic`].
    pub fn is_generic_planar_full(&self) -> bool {
        assert_eq!(self.target_dim, 2);
        for e in self.domain.faces(1) {
            if self.values[e[0]] == self.values[e[1]] {
                return false;
            }
        }
        for t in self.domain.faces(2) {
            if crate::num::orient_sign(&self.point(t[0]), &self.point(t[1]), &self.point(t[2])) == 0
            {
                return false;
            }
        }
        true
    }

    pub fn is_generic(&self) -> bool {
        match self.target_dim {
            1 => self.is_generic_scalar(),
            _ => self.is_generic_planar_full(),
        }
    }

    /// The scalar map given by one coordinate of this map.
    pub fn coordinate_map(&self, c: usize) -> PLMap {
        assert!(c < self.target_dim);
        PLMap {
            domain: self.domain.clone(),
            target_dim: 1,
            values: self.values.iter().map(|v| vec![v[c].clone()]).collect(),
        }
    }
}

/// Restricts a map to the boundary subcomplex (same vertex indexing).
pub fn restrict_to_boundary(f: &PLMap) -> Result<PLMap, MapError> {
    let b = boundary_subcomplex(f.domain())?;
    if b.is_empty() {
        return Err(MapError::ClosedDomain);
    }
    Ok(PLMap {
        domain: b,
        target_dim: f.target_dim,
        values: f.values.clone(),
    })
}

/// Vertices taking part in some genericity violation.
fn violating_vertices(f: &PLMap) -> BTreeSet<usize> {
    let mut bad = BTreeSet::new();
    match f.target_dim {
        1 => {
            let mut by_value: BTreeMap<Q, Vec<usize>> = BTreeMap::new();
            for &v in &f.domain.support() {
                by_value.entry(f.values[v][0].clone()).or_default().push(v);
            }
            for (_, vs) in by_value {
                if vs.len() > 1 {
                    bad.extend(vs);
                }
            }
        }
        _ => {
            for e in f.domain.faces(1) {
                if f.values[e[0]] == f.values[e[1]] {
                    bad.extend(e);
                }
            }
            for t in f.domain.faces(2) {
                if crate::num::orient_sign(&f.point(t[0]), &f.point(t[1]), &f.point(t[2])) == 0 {
                    bad.extend(t);
                }
            }
        }
    }
    bad
}

/// Minimal positive gap between distinct coordinate values; 1 when all
/// values coincide.
fn min_positive_gap(f: &PLMap) -> Q {
    let mut gap: Option<Q> = None;
    for c in 0..f.target_dim {
        let mut vals: Vec<Q> = f
            .domain
            .support()
            .iter()
            .map(|&v| f.values[v][c].clone())
            .collect();
        vals.sort();
        for w in vals.windows(2) {
            let d = &w[1] - &w[0];
            if d.is_positive() && gap.as_ref().map_or(true, |g| d < *g) {
                gap = Some(d);
            }
        }
    }
    gap.unwrap_or_else(|| q(1))
}

/// Deterministic seeded perturbation after which the genericity invariants
/// hold; idempotent on already-generic maps. Only vertices involved in a
/// violation move, with simulation-of-simplicity style epsilons ranked by
/// violation order, shrinking across retries. Orientations of previously
/// non-degenerate 2-faces and the order of previously distinct scalar pairs
/// are preserved (checked, with a retry at smaller magnitude otherwise).
pub fn ensure_generic(f: &PLMap, seed: u64) -> Result<PLMap, MapError> {
    if f.is_generic() {
        return Ok(f.clone());
    }
    let orig = f.clone();
    let gap0 = min_positive_gap(f);
    let seed_mix = q(1 + (seed % 3) as i64);
    for attempt in 0..12u32 {
        let mut out = f.clone();
        // the violating set comes from the original map so retries stay
        // deterministic in the seed and attempt alone
        let bad = violating_vertices(&orig);
        let scale = &gap0 * &seed_mix / q(3) / q(4i64.pow(attempt.min(15)));
        for (rank, &v) in bad.iter().enumerate() {
            for c in 0..out.target_dim {
                let prime = if c == 0 { 4u32 } else { 5 };
                let denom = num_bigint::BigInt::from(prime).pow(rank as u32 + 1);
                let eps = &scale * Q::new(num_bigint::BigInt::from(1), denom) / q((c as i64) + 1);
                out.values[v][c] = &out.values[v][c] + eps;
            }
        }
        if !out.is_generic() {
            continue;
        }
        // preservation checks against the original
        let ok = match f.target_dim {
            1 => {
                let support = f.domain.support();
                support.iter().all(|&a| {
                    support.iter().all(|&b| {
                        let before = orig.values[a][0].cmp(&orig.values[b][0]);
                        before == std::cmp::Ordering::Equal
                            || out.values[a][0].cmp(&out.values[b][0]) == before
                    })
                })
            }
            _ => f.domain.faces(2).iter().all(|t| {
                let before = crate::num::orient_sign(
                    &orig.point(t[0]),
                    &orig.point(t[1]),
                    &orig.point(t[2]),
                );
                before == 0
                    || crate::num::orient_sign(
                        &out.point(t[0]),
                        &out.point(t[1]),
                        &out.point(t[2]),
                    ) == before
            }),
        };
        if ok {
            return Ok(out);
        }
    }
    Err(MapError::PerturbationFailed)
}

/// Per-boundary-vertex fold label.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VertexLabel {
    Regular,
    DefiniteFold,
    NonDefiniteSingular,
}

/// Classification evidence: reduced Betti numbers of the lower link for
/// scalar targets, winding/turning data for planar ones. In both cases
/// `interior_on_image_side` records whether the interior of the domain
/// attaches on the image side of the boundary fold, the discrete shadow of
/// the normal form `(x_1, .., x_{m-1}, sum x_i^2 + x_n)` where the interior
/// half-space `x_n > 0` maps into the fold's image side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Evidence {
    LowerLink {
        reduced_betti: Vec<i64>,
        interior_on_image_side: bool,
    },
    LinkImage {
        winding: i64,
        turning_flips: usize,
        interior_on_image_side: bool,
    },
}

#[derive(Clone, Debug)]
pub struct VertexClassification {
    pub labels: BTreeMap<usize, VertexLabel>,
    pub evidence: BTreeMap<usize, Evidence>,
}

impl VertexClassification {
    pub fn singular_vertices(&self) -> Vec<usize> {
        self.labels
            .iter()
            .filter(|(_, l)| !matches!(l, VertexLabel::Regular))
            .map(|(&v, _)| v)
            .collect()
    }

    pub fn non_definite_vertices(&self) -> Vec<usize> {
        self.labels
            .iter()
            .filter(|(_, l)| matches!(l, VertexLabel::NonDefiniteSingular))
            .map(|(&v, _)| v)
            .collect()
    }

    pub fn definite_fold_vertices(&self) -> Vec<usize> {
        self.labels
            .iter()
            .filter(|(_, l)| matches!(l, VertexLabel::DefiniteFold))
            .map(|(&v, _)| v)
            .collect()
    }
}

/// Orders the link cycle of a vertex from its link edges; `None` when the
/// link is not a single cycle.
fn order_cycle(edges: &[(usize, usize)]) -> Option<Vec<usize>> {
    let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &(a, b) in edges {
        adj.entry(a).or_default().push(b);
        adj.entry(b).or_default().push(a);
    }
    if adj.values().any(|n| n.len() != 2) {
        return None;
    }
    let start = *adj.keys().next()?;
    let mut cycle = vec![start];
    let mut prev = start;
    let mut cur = *adj[&start].iter().min()?;
    while cur != start {
        cycle.push(cur);
        let nbrs = &adj[&cur];
        let next = if nbrs[0] == prev { nbrs[1] } else { nbrs[0] };
        prev = cur;
        cur = next;
    }
    if cycle.len() == adj.len() {
        Some(cycle)
    } else {
        None
    }
}

/// Exact winding number of the closed polygonal loop through `dirs` around
/// the origin. No direction may vanish and no consecutive pair may be
/// collinear with the origin.
fn winding_number(dirs: &[P2]) -> i64 {
    // rotate until no direction lies on the x-axis
    let mut t = q(0);
    let mut k: i64 = 2;
    loop {
        let rot = |p: &P2| -> P2 {
            if t.is_zero() {
                p.clone()
            } else {
                let tt = &t * &t;
                let den = q(1) + &tt;
                P2::new(
                    (&p.x * (q(1) - &tt) - &p.y * q(2) * &t) / &den,
                    (&p.x * q(2) * &t + &p.y * (q(1) - tt)) / den,
                )
            }
        };
        if dirs.iter().all(|d| !rot(d).y.is_zero()) {
            let pts: Vec<P2> = dirs.iter().map(rot).collect();
            let mut w = 0i64;
            for i in 0..pts.len() {
                let p = &pts[i];
                let qq = &pts[(i + 1) % pts.len()];
                if p.y.is_negative() != qq.y.is_negative() {
                    let denom = &qq.y - &p.y;
                    let x_at = (&p.x * &qq.y - &qq.x * &p.y) / denom;
                    assert!(!x_at.is_zero(), "loop passes through the origin");
                    if x_at.is_positive() {
                        w += if qq.y.is_positive() { 1 } else { -1 };
                    }
                }
            }
            return w;
        }
        t = qr(1, 7 * k);
        k += 1;
    }
}

/// Whether `w` lies in the closed cone swept by the link image: the union
/// of the wedges spanned by consecutive link directions.
fn in_swept_cone(dirs: &[P2], w: &P2) -> bool {
    let n = dirs.len();
    (0..n).any(|i| {
        let a = &dirs[i];
        let b = &dirs[(i + 1) % n];
        let s = a.cross(b);
        if s.is_positive() {
            !a.cross(w).is_negative() && !w.cross(b).is_negative()
        } else if s.is_negative() {
            !a.cross(w).is_positive() && !w.cross(b).is_positive()
        } else {
            false
        }
    })
}

fn turning_flips(dirs: &[P2]) -> usize {
    let n = dirs.len();
    let signs: Vec<i32> = (0..n)
        .map(|i| {
            let c = dirs[i].cross(&dirs[(i + 1) % n]);
            if c.is_positive() {
                1
            } else if c.is_negative() {
                -1
            } else {
                0
            }
        })
        .collect();
    (0..n).filter(|&i| signs[i] != signs[(i + 1) % n]).count()
}

/// Classifies every boundary vertex of the domain as regular, definite fold
/// or non-definite singular.
///
/// Scalar targets use the reduced homology of the lower link in the
/// boundary; planar targets (boundary a surface) use the winding number of
/// the link image around the vertex image, with the definite-fold criterion
/// "image in a closed half-plane with exactly two turning edges".
pub fn classify_boundary_vertices(f: &PLMap) -> Result<VertexClassification, MapError> {
    let n = f.domain().dimension();
    if n <= f.target_dim() {
        return Err(MapError::DimensionUnsupported(format!(
            "domain dimension {n} must exceed target dimension {}",
            f.target_dim()
        )));
    }
    let boundary = boundary_subcomplex(f.domain())?;
    if boundary.is_empty() {
        return Err(MapError::ClosedDomain);
    }
    // full 1-skeleton adjacency, interior neighbors included
    let mut neighbors: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
    for e in f.domain().faces(1) {
        neighbors.entry(e[0]).or_default().insert(e[1]);
        neighbors.entry(e[1]).or_default().insert(e[0]);
    }
    let mut labels = BTreeMap::new();
    let mut evidence = BTreeMap::new();
    match f.target_dim() {
        1 => {
            if !f.is_generic_scalar() {
                return Err(MapError::NotGeneric("vertex values collide".into()));
            }
            for &v in &boundary.support() {
                let link = boundary.vertex_link(v);
                let link_vertices: BTreeSet<usize> = link.iter().flatten().copied().collect();
                let lower: BTreeSet<usize> = link_vertices
                    .iter()
                    .copied()
                    .filter(|&w| f.scalar(w) < f.scalar(v))
                    .collect();
                // full subcomplex of the link on the lower vertices
                let mut gens: Vec<Vec<usize>> = lower.iter().map(|&w| vec![w]).collect();
                for cell in &link {
                    let sub: Vec<usize> = cell
                        .iter()
                        .copied()
                        .filter(|w| lower.contains(w))
                        .collect();
                    if !sub.is_empty() {
                        gens.push(sub);
                    }
                }
                let reduced = if lower.is_empty() {
                    vec![-1, 0]
                } else {
                    let h = crate::algebra::homology_of(
                        &crate::algebra::ChainData::from_simplices(gens),
                        crate::algebra::Ring::Z,
                        crate::algebra::Variant::Homology,
                    );
                    reduced_betti(&h)
                };
                let label;
                let mut interior_ok = true;
                if lower.is_empty() {
                    // boundary minimum; definite iff it is a minimum of the
                    // whole manifold (interior attaches above)
                    interior_ok = neighbors[&v].iter().all(|&w| f.scalar(w) > f.scalar(v));
                    label = if interior_ok {
                        VertexLabel::DefiniteFold
                    } else {
                        VertexLabel::NonDefiniteSingular
                    };
                } else if lower.len() == link_vertices.len() {
                    interior_ok = neighbors[&v].iter().all(|&w| f.scalar(w) < f.scalar(v));
                    label = if interior_ok {
                        VertexLabel::DefiniteFold
                    } else {
                        VertexLabel::NonDefiniteSingular
                    };
                } else {
                    label = if reduced.iter().all(|&b| b == 0) {
                        VertexLabel::Regular
                    } else {
                        VertexLabel::NonDefiniteSingular
                    };
                }
                labels.insert(v, label);
                evidence.insert(
                    v,
                    Evidence::LowerLink {
                        reduced_betti: reduced,
                        interior_on_image_side: interior_ok,
                    },
                );
            }
        }
        2 => {
            if boundary.dimension() != 2 {
                return Err(MapError::DimensionUnsupported(format!(
                    "planar classification needs a surface boundary, got dimension {}",
                    boundary.dimension()
                )));
            }
            if !f.is_generic_planar_boundary() {
                return Err(MapError::NotGeneric(
                    "adjacent images collide or a boundary face is collinear".into(),
                ));
            }
            for &v in &boundary.support() {
                let link_edges: Vec<(usize, usize)> = boundary
                    .vertex_link(v)
                    .iter()
                    .map(|e| (e[0], e[1]))
                    .collect();
                let cycle = order_cycle(&link_edges).ok_or_else(|| {
                    MapError::DimensionUnsupported(format!(
                        "link of boundary vertex {v} is not a circle"
                    ))
                })?;
                let center = f.point(v);
                let dirs: Vec<P2> = cycle.iter().map(|&w| f.point(w).sub(&center)).collect();
                let w = winding_number(&dirs);
                let flips = turning_flips(&dirs);
                let mut interior_ok = true;
                let label = if w.abs() == 1 {
                    VertexLabel::Regular
                } else if w == 0 && flips == 2 {
                    // a fold of the boundary surface; definite iff every
                    // neighbor in the manifold maps into the cone the folded
                    // surface sweeps out
                    interior_ok = neighbors[&v].iter().all(|&u| {
                        let d = f.point(u).sub(&center);
                        in_swept_cone(&dirs, &d)
                    });
                    if interior_ok {
                        VertexLabel::DefiniteFold
                    } else {
                        VertexLabel::NonDefiniteSingular
                    }
                } else {
                    VertexLabel::NonDefiniteSingular
                };
                labels.insert(v, label);
                evidence.insert(
                    v,
                    Evidence::LinkImage {
                        winding: w,
                        turning_flips: flips,
                        interior_on_image_side: interior_ok,
                    },
                );
            }
        }
        _ => unreachable!(),
    }
    Ok(VertexClassification { labels, evidence })
}

fn reduced_betti(h: &crate::algebra::BettiProfile) -> Vec<i64> {
    let mut out: Vec<i64> = h.betti.iter().map(|&b| b as i64).collect();
    if out.is_empty() {
        out.push(-1);
    } else {
        out[0] -= 1;
    }
    while out.len() < 2 {
        out.push(0);
    }
    out
}

/// A witness against boundary-special-genericity.
#[derive(Clone, Debug)]
pub enum BsgWitness {
    NonDefiniteVertex(usize),
    BadFiberDimension {
        point: Vec<Q>,
        dimension: usize,
        expected: usize,
    },
}

#[derive(Clone, Debug)]
pub struct BsgReport {
    pub pass: bool,
    pub witnesses: Vec<BsgWitness>,
    pub classification: VertexClassification,
}

/// True iff no boundary vertex is non-definite singular and sampled fibers
/// all have the submersion dimension `dim - target_dim`.
pub fn is_boundary_special_generic(f: &PLMap) -> Result<BsgReport, MapError> {
    let classification = classify_boundary_vertices(f)?;
    let mut witnesses: Vec<BsgWitness> = classification
        .non_definite_vertices()
        .into_iter()
        .map(BsgWitness::NonDefiniteVertex)
        .collect();
    let expected = f.domain().dimension() - f.target_dim();
    for (point, components) in sample_fibers(f, 7)? {
        for comp in &components {
            if comp.dimension != expected {
                witnesses.push(BsgWitness::BadFiberDimension {
                    point: point.clone(),
                    dimension: comp.dimension,
                    expected,
                });
            }
        }
    }
    Ok(BsgReport {
        pass: witnesses.is_empty(),
        witnesses,
        classification,
    })
}

/// One connected component of a fiber: an exact polytopal complex reported
/// through its dimension and Betti profile.
#[derive(Clone, Debug)]
pub struct FiberComponent {
    pub dimension: usize,
    pub betti: crate::algebra::BettiProfile,
    pub cell_count: usize,
    /// Domain facets the component passes through.
    pub facets: BTreeSet<usize>,
}

impl FiberComponent {
    pub fn is_acyclic(&self) -> bool {
        self.betti.betti.first() == Some(&1)
            && self.betti.betti.iter().skip(1).all(|&b| b == 0)
            && self.betti.torsion.iter().all(|t| t.is_empty())
    }
}

/// Exact preimage of a regular target point, one entry per connected
/// component; empty when the point lies outside the image.
pub fn fiber(f: &PLMap, point: &[Q]) -> Result<Vec<FiberComponent>, MapError> {
    match f.target_dim() {
        1 => slice::scalar_fiber(f, &point[0]),
        2 => slice::planar_fiber(f, &P2::new(point[0].clone(), point[1].clone())),
        _ => unreachable!(),
    }
}

/// Deterministic regular sample points across the image bounding box with
/// their fibers; used by the submersion check and the fiber-structure
/// verifiers.
pub fn sample_fibers(
    f: &PLMap,
    per_axis: usize,
) -> Result<Vec<(Vec<Q>, Vec<FiberComponent>)>, MapError> {
    let (lo, hi) = match f.bbox() {
        Some(b) => b,
        None => return Ok(Vec::new()),
    };
    let mut out = Vec::new();
    match f.target_dim() {
        1 => {
            for i in 0..per_axis {
                let t0 =
                    &lo[0] + (&hi[0] - &lo[0]) * qr(2 * i as i64 + 1, 2 * per_axis as i64);
                let t = slice::regular_scalar_value(f, &t0)?;
                let comps = slice::scalar_fiber(f, &t)?;
                out.push((vec![t], comps));
            }
        }
        2 => {
            for i in 0..per_axis {
                for j in 0..per_axis {
                    let x =
                        &lo[0] + (&hi[0] - &lo[0]) * qr(2 * i as i64 + 1, 2 * per_axis as i64);
                    let y =
                        &lo[1] + (&hi[1] - &lo[1]) * qr(2 * j as i64 + 1, 2 * per_axis as i64);
                    let p = slice::regular_planar_point(f, &P2::new(x, y))?;
                    let comps = slice::planar_fiber(f, &p)?;
                    out.push((vec![p.x, p.y], comps));
                }
            }
        }
        _ => unreachable!(),
    }
    Ok(out)
}

/// Maximum number of fiber components over a deterministic grid of regular
/// query points, with an achieving point.
pub fn max_fiber_count(f: &PLMap, grid: usize) -> Result<(usize, Option<Vec<Q>>), MapError> {
    let samples = sample_fibers(f, grid.max(1))?;
    let mut best = 0usize;
    let mut witness = None;
    for (p, comps) in samples {
        if comps.len() > best {
            best = comps.len();
            witness = Some(p);
        }
    }
    Ok((best, witness))
}

#[cfg(test)]
mod tests;
