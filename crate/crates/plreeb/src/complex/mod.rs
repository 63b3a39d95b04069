//! Finite simplicial complexes representing compact manifolds with boundary.
//!
//! Complexes are stored by their facets only (faces are implicit); all
//! construction goes through [`build_from_facets`] or the generators in
//! [`generators`], both of which canonicalize and validate their input.

mod generators;
mod surgery;

pub use generators::{generate, GeneratorKind};
pub(crate) use generators::{
    disk_layout, loop_stations, product_vertex, tube_layers, DiskLayout, Station,
};
pub use surgery::{barycentric_subdivision, boundary_connected_sum};

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ComplexError {
    #[error("facet list is empty")]
    EmptyInput,
    #[error("facet {0:?} repeats a vertex")]
    DuplicateVertexInFacet(Vec<usize>),
    #[error("facets of mixed arity (found {0} and {1})")]
    NonPureComplex(usize, usize),
    #[error("complex is not a pseudo-manifold")]
    NotPseudoManifold,
    #[error("unsupported dimension {0}")]
    UnsupportedDimension(usize),
    #[error("resolution {0} too small (minimum {1})")]
    ResolutionTooSmall(usize, usize),
    #[error("summands have different dimensions ({0} and {1})")]
    DimensionMismatch(usize, usize),
    #[error("summand is closed (empty boundary)")]
    ClosedSummand,
}

/// A pure finite simplicial complex given by its facets.
///
/// Facets are sorted vertex tuples, stored lexicographically sorted and
/// deduplicated. Faces are enumerated on demand. A complex may reference
/// fewer vertices than `vertex_count`; subcomplexes keep the parent's
/// vertex indexing so PL map values restrict without translation.
#[derive(Clone, Debug)]
pub struct SimplicialComplex {
    vertex_count: usize,
    facets: Vec<Vec<usize>>,
    /// Parity of each input facet tuple relative to sorted order (+1/-1).
    orientations: Vec<i8>,
    dimension: usize,
    labels: BTreeMap<usize, String>,
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.vertex_count == other.vertex_count
            && self.facets == other.facets
            && self.labels == other.labels
    }
}

impl Eq for SimplicialComplex {}

fn permutation_parity(tuple: &[usize]) -> i8 {
    let mut idx: Vec<usize> = (0..tuple.len()).collect();
    idx.sort_by_key(|&i| tuple[i]);
    let mut seen = vec![false; idx.len()];
    let mut parity = 0usize;
    for start in 0..idx.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = idx[i];
            len += 1;
        }
        parity += len + 1;
    }
    if parity % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Builds a validated complex from raw facet tuples.
pub fn build_from_facets(facets: &[Vec<usize>]) -> Result<SimplicialComplex, ComplexError> {
    if facets.is_empty() {
        return Err(ComplexError::EmptyInput);
    }
    let arity = facets[0].len();
    let mut canon: BTreeMap<Vec<usize>, i8> = BTreeMap::new();
    for f in facets {
        if f.len() != arity {
            return Err(ComplexError::NonPureComplex(arity, f.len()));
        }
        let distinct: BTreeSet<usize> = f.iter().copied().collect();
        if distinct.len() != f.len() {
            return Err(ComplexError::DuplicateVertexInFacet(f.clone()));
        }
        let parity = permutation_parity(f);
        let mut sorted = f.clone();
        sorted.sort_unstable();
        canon.entry(sorted).or_insert(parity);
    }
    let vertex_count = canon.keys().flatten().copied().max().map_or(0, |m| m + 1);
    let (facets, orientations): (Vec<_>, Vec<_>) = canon.into_iter().unzip();
    Ok(SimplicialComplex {
        vertex_count,
        dimension: arity - 1,
        facets,
        orientations,
        labels: BTreeMap::new(),
    })
}

impl SimplicialComplex {
    /// A complex with no facets over a fixed vertex set (the boundary of a
    /// closed complex).
    pub fn empty(vertex_count: usize) -> Self {
        SimplicialComplex {
            vertex_count,
            facets: Vec::new(),
            orientations: Vec::new(),
            dimension: 0,
            labels: BTreeMap::new(),
        }
    }

    pub(crate) fn from_sorted_facets(vertex_count: usize, mut facets: Vec<Vec<usize>>) -> Self {
        facets.sort();
        facets.dedup();
        let dimension = facets.first().map_or(0, |f| f.len() - 1);
        let orientations = vec![1; facets.len()];
        SimplicialComplex {
            vertex_count,
            facets,
            orientations,
            dimension,
            labels: BTreeMap::new(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn input_orientations(&self) -> &[i8] {
        &self.orientations
    }

    pub fn labels(&self) -> &BTreeMap<usize, String> {
        &self.labels
    }

    pub fn set_label(&mut self, vertex: usize, label: impl Into<String>) {
        self.labels.insert(vertex, label.into());
    }

    pub(crate) fn set_labels(&mut self, labels: BTreeMap<usize, String>) {
        self.labels = labels;
    }

    /// All `k`-dimensional faces (as sorted tuples).
    pub fn faces(&self, k: usize) -> BTreeSet<Vec<usize>> {
        let mut out = BTreeSet::new();
        if self.facets.is_empty() || k > self.dimension {
            return out;
        }
        for f in &self.facets {
            subsets_into(f, k + 1, &mut out);
        }
        out
    }

    /// Faces of every dimension, index 0..=dim.
    pub fn all_faces(&self) -> Vec<BTreeSet<Vec<usize>>> {
        (0..=self.dimension).map(|k| self.faces(k)).collect()
    }

    /// Vertices actually referenced by some facet.
    pub fn support(&self) -> BTreeSet<usize> {
        self.facets.iter().flatten().copied().collect()
    }

    /// Euler characteristic (alternating face count).
    pub fn euler_characteristic(&self) -> i64 {
        let mut chi = 0i64;
        for (k, faces) in self.all_faces().iter().enumerate() {
            let c = faces.len() as i64;
            chi += if k % 2 == 0 { c } else { -c };
        }
        chi
    }

    /// Codimension-1 faces mapped to the facets containing them.
    pub fn ridge_incidence(&self) -> BTreeMap<Vec<usize>, Vec<usize>> {
        let mut map: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
        if self.dimension == 0 {
            return map;
        }
        for (i, f) in self.facets.iter().enumerate() {
            for j in 0..f.len() {
                let mut r = f.clone();
                r.remove(j);
                map.entry(r).or_default().push(i);
            }
        }
        map
    }

    pub fn boundary_data(&self) -> BoundaryData {
        let boundary_facets: BTreeSet<Vec<usize>> = self
            .ridge_incidence()
            .into_iter()
            .filter(|(_, fs)| fs.len() == 1)
            .map(|(r, _)| r)
            .collect();
        BoundaryData {
            is_closed: boundary_facets.is_empty(),
            boundary_facets,
        }
    }

    /// Whether the facet-adjacency-through-vertices graph is connected.
    pub fn is_connected(&self) -> bool {
        let support = self.support();
        if support.is_empty() {
            return true;
        }
        let mut uf = UnionFind::new(self.vertex_count);
        for f in &self.facets {
            for w in f.windows(2) {
                uf.union(w[0], w[1]);
            }
        }
        let mut roots: BTreeSet<usize> = BTreeSet::new();
        for &v in &support {
            roots.insert(uf.find(v));
        }
        roots.len() == 1
    }

    /// Link of a vertex: facets of the link, with original vertex ids.
    pub fn vertex_link(&self, v: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for f in &self.facets {
            if let Ok(pos) = f.binary_search(&v) {
                let mut g = f.clone();
                g.remove(pos);
                out.push(g);
            }
        }
        out
    }

    /// Link of an edge (sorted pair).
    pub fn edge_link(&self, e: &[usize; 2]) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for f in &self.facets {
            if f.binary_search(&e[0]).is_ok() && f.binary_search(&e[1]).is_ok() {
                let g: Vec<usize> = f.iter().copied().filter(|&x| x != e[0] && x != e[1]).collect();
                out.push(g);
            }
        }
        out
    }

    /// Decides orientability by coherent orientation propagation across
    /// codimension-1 faces. `None` when the complex branches (not a
    /// pseudo-manifold), in which case orientability is not meaningful.
    pub fn orientability(&self) -> Option<bool> {
        self.coherent_orientations().map(|o| o.is_some())
    }

    /// Coherent facet orientations (sign per facet relative to sorted order),
    /// `Some(None)` means non-orientable, outer `None` means branching.
    pub(crate) fn coherent_orientations(&self) -> Option<Option<Vec<i8>>> {
        if self.facets.is_empty() {
            return Some(Some(Vec::new()));
        }
        let ridges = self.ridge_incidence();
        if ridges.values().any(|fs| fs.len() > 2) {
            return None;
        }
        // adjacency with the ridge index removed in each facet
        let mut adj: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); self.facets.len()];
        for (r, fs) in &ridges {
            if fs.len() == 2 {
                let (a, b) = (fs[0], fs[1]);
                let ia = removed_index(&self.facets[a], r);
                let ib = removed_index(&self.facets[b], r);
                adj[a].push((b, ia, ib));
                adj[b].push((a, ib, ia));
            }
        }
        let mut sign = vec![0i8; self.facets.len()];
        for start in 0..self.facets.len() {
            if sign[start] != 0 {
                continue;
            }
            sign[start] = 1;
            let mut queue = VecDeque::from([start]);
            while let Some(i) = queue.pop_front() {
                for &(j, ii, ij) in &adj[i] {
                    // induced signs on the shared ridge must be opposite
                    let induced_i = sign[i] * if ii % 2 == 0 { 1 } else { -1 };
                    let needed_j = -induced_i;
                    let sign_j = needed_j * if ij % 2 == 0 { 1 } else { -1 };
                    if sign[j] == 0 {
                        sign[j] = sign_j;
                        queue.push_back(j);
                    } else if sign[j] != sign_j {
                        return Some(None);
                    }
                }
            }
        }
        Some(Some(sign))
    }
}

fn removed_index(facet: &[usize], ridge: &[usize]) -> usize {
    for (i, v) in facet.iter().enumerate() {
        if ridge.binary_search(v).is_err() {
            return i;
        }
    }
    unreachable!("ridge is not a subface of facet")
}

fn subsets_into(set: &[usize], size: usize, out: &mut BTreeSet<Vec<usize>>) {
    let n = set.len();
    if size > n {
        return;
    }
    let mut idx: Vec<usize> = (0..size).collect();
    loop {
        out.insert(idx.iter().map(|&i| set[i]).collect());
        // next combination
        let mut i = size;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] != i + n - size {
                break;
            }
            if i == 0 {
                return;
            }
        }
        idx[i] += 1;
        for j in i + 1..size {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// The boundary of a complex: codimension-1 faces lying in exactly one facet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryData {
    pub boundary_facets: BTreeSet<Vec<usize>>,
    pub is_closed: bool,
}

/// Returns the boundary subcomplex (same vertex indexing as the parent);
/// empty complex when `k` is closed.
pub fn boundary_subcomplex(k: &SimplicialComplex) -> Result<SimplicialComplex, ComplexError> {
    let report = validate_manifold(k);
    if !report.is_pseudo_manifold {
        return Err(ComplexError::NotPseudoManifold);
    }
    let bd = k.boundary_data();
    if bd.is_closed {
        return Ok(SimplicialComplex::empty(k.vertex_count));
    }
    let mut sub = SimplicialComplex::from_sorted_facets(
        k.vertex_count,
        bd.boundary_facets.into_iter().collect(),
    );
    let support = sub.support();
    sub.set_labels(
        k.labels
            .iter()
            .filter(|(v, _)| support.contains(v))
            .map(|(v, s)| (*v, s.clone()))
            .collect(),
    );
    Ok(sub)
}

/// Structured result of manifold validation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ManifoldReport {
    pub is_pseudo_manifold: bool,
    pub is_manifold_with_boundary: bool,
    pub failing_faces: Vec<Vec<usize>>,
    pub connected: bool,
    pub orientable: Option<bool>,
    /// True when only the pseudo-manifold check ran (dimension > 3).
    pub partial: bool,
}

enum LinkShape {
    Sphere,
    Disk,
    Bad,
}

fn classify_link(facets: &[Vec<usize>]) -> LinkShape {
    if facets.is_empty() {
        return LinkShape::Bad;
    }
    let arity = facets[0].len();
    if facets.iter().any(|f| f.len() != arity) {
        return LinkShape::Bad;
    }
    match arity {
        1 => match facets.len() {
            1 => LinkShape::Disk,
            2 => LinkShape::Sphere,
            _ => LinkShape::Bad,
        },
        2 => classify_graph_link(facets),
        3 => classify_surface_link(facets),
        _ => LinkShape::Bad,
    }
}

/// A 1-dimensional link must be a single arc or a single cycle.
fn classify_graph_link(edges: &[Vec<usize>]) -> LinkShape {
    let mut degree: HashMap<usize, usize> = HashMap::new();
    let mut seen = HashSet::new();
    for e in edges {
        if !seen.insert(e.clone()) {
            return LinkShape::Bad;
        }
        *degree.entry(e[0]).or_insert(0) += 1;
        *degree.entry(e[1]).or_insert(0) += 1;
    }
    if degree.values().any(|&d| d > 2) {
        return LinkShape::Bad;
    }
    // connectivity
    let verts: Vec<usize> = degree.keys().copied().collect();
    let index: HashMap<usize, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut uf = UnionFind::new(verts.len());
    for e in edges {
        uf.union(index[&e[0]], index[&e[1]]);
    }
    let roots: HashSet<usize> = (0..verts.len()).map(|i| uf.find(i)).collect();
    if roots.len() != 1 {
        return LinkShape::Bad;
    }
    let ends = degree.values().filter(|&&d| d == 1).count();
    match ends {
        0 => LinkShape::Sphere,
        2 => LinkShape::Disk,
        _ => LinkShape::Bad,
    }
}

/// A 2-dimensional link must be S^2 or D^2.
fn classify_surface_link(triangles: &[Vec<usize>]) -> LinkShape {
    let link = SimplicialComplex::from_sorted_facets(
        triangles.iter().flatten().copied().max().map_or(0, |m| m + 1),
        triangles.to_vec(),
    );
    let ridges = link.ridge_incidence();
    if ridges.values().any(|fs| fs.len() > 2) {
        return LinkShape::Bad;
    }
    if !link.is_connected() {
        return LinkShape::Bad;
    }
    // every vertex of the link must have an arc or cycle link itself
    for &v in &link.support() {
        match classify_link(&link.vertex_link(v)) {
            LinkShape::Bad => return LinkShape::Bad,
            _ => {}
        }
    }
    let boundary_edges: Vec<Vec<usize>> = ridges
        .into_iter()
        .filter(|(_, fs)| fs.len() == 1)
        .map(|(r, _)| r)
        .collect();
    let chi = link.euler_characteristic();
    if boundary_edges.is_empty() {
        if chi == 2 {
            return LinkShape::Sphere;
        }
    } else if chi == 1 {
        if let LinkShape::Sphere = classify_graph_link(&boundary_edges) {
            return LinkShape::Disk;
        }
    }
    LinkShape::Bad
}

/// Checks vertex and edge links against disk/sphere recognition (dim <= 3);
/// for higher dimensions only the pseudo-manifold test runs and the report
/// is flagged partial.
pub fn validate_manifold(k: &SimplicialComplex) -> ManifoldReport {
    let connected = k.is_connected();
    let mut failing: Vec<Vec<usize>> = Vec::new();

    let ridges = k.ridge_incidence();
    for (r, fs) in &ridges {
        if fs.len() > 2 {
            failing.push(r.clone());
        }
    }
    let is_pseudo = failing.is_empty() && !k.facets.is_empty();

    if k.dimension > 3 {
        return ManifoldReport {
            is_pseudo_manifold: is_pseudo,
            is_manifold_with_boundary: is_pseudo,
            failing_faces: failing,
            connected,
            orientable: k.orientability(),
            partial: true,
        };
    }

    if is_pseudo && k.dimension >= 1 {
        for &v in &k.support() {
            let link = k.vertex_link(v);
            if let LinkShape::Bad = classify_link(&link) {
                failing.push(vec![v]);
            }
        }
    }
    if is_pseudo && k.dimension == 3 {
        for e in k.faces(1) {
            let link = k.edge_link(&[e[0], e[1]]);
            if let LinkShape::Bad = classify_link(&link) {
                failing.push(e);
            }
        }
    }
    failing.sort();
    failing.dedup();

    let is_manifold = is_pseudo && failing.is_empty();
    ManifoldReport {
        is_pseudo_manifold: is_pseudo,
        is_manifold_with_boundary: is_manifold,
        failing_faces: failing,
        connected,
        orientable: k.orientability(),
        partial: false,
    }
}

/// Plain union-find over 0..n.
#[derive(Clone, Debug)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            rank: vec![0; n],
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        while self.parent[x] != root {
            let next = self.parent[x];
            self.parent[x] = root;
            x = next;
        }
        root
    }

    pub fn union(&mut self, a: usize, b: usize) -> usize {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return a;
        }
        if self.rank[a] < self.rank[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        if self.rank[a] == self.rank[b] {
            self.rank[a] += 1;
        }
        a
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn octahedron() -> SimplicialComplex {
        // vertices 0/1 poles, 2..5 equator
        build_from_facets(&[
            vec![0, 2, 3],
            vec![0, 3, 4],
            vec![0, 4, 5],
            vec![0, 2, 5],
            vec![1, 2, 3],
            vec![1, 3, 4],
            vec![1, 4, 5],
            vec![1, 2, 5],
        ])
        .unwrap()
    }

    #[test]
    fn single_triangle() {
        let k = build_from_facets(&[vec![0, 1, 2]]).unwrap();
        assert_eq!(k.vertex_count(), 3);
        assert_eq!(k.faces(1).len(), 3);
        assert_eq!(k.faces(0).len(), 3);
        assert_eq!(k.boundary_data().boundary_facets.len(), 3);
        let rep = validate_manifold(&k);
        assert!(rep.is_manifold_with_boundary);
        assert_eq!(rep.orientable, Some(true));
    }

    #[test]
    fn octahedron_is_closed_sphere() {
        let k = octahedron();
        assert_eq!(k.euler_characteristic(), 2);
        assert!(k.boundary_data().is_closed);
        let rep = validate_manifold(&k);
        assert!(rep.is_manifold_with_boundary);
        assert_eq!(rep.orientable, Some(true));
        assert!(boundary_subcomplex(&k).unwrap().is_empty());
    }

    #[test]
    fn mixed_arity_rejected() {
        let err = build_from_facets(&[vec![0, 1, 2], vec![3, 4]]).unwrap_err();
        assert_eq!(err, ComplexError::NonPureComplex(3, 2));
    }

    #[test]
    fn duplicate_vertex_rejected() {
        let err = build_from_facets(&[vec![0, 1, 1]]).unwrap_err();
        assert!(matches!(err, ComplexError::DuplicateVertexInFacet(_)));
    }

    #[test]
    fn empty_rejected() {
        assert_eq!(build_from_facets(&[]).unwrap_err(), ComplexError::EmptyInput);
    }

    #[test]
    fn tetrahedron_boundary_is_sphere() {
        let k = build_from_facets(&[vec![0, 1, 2, 3]]).unwrap();
        let b = boundary_subcomplex(&k).unwrap();
        assert_eq!(b.facets().len(), 4);
        assert_eq!(b.euler_characteristic(), 2);
        assert!(b.boundary_data().is_closed);
    }

    #[test]
    fn pinched_vertex_fails_manifold_check() {
        // two triangles sharing exactly one vertex
        let k = build_from_facets(&[vec![0, 1, 2], vec![2, 3, 4]]).unwrap();
        let rep = validate_manifold(&k);
        assert!(rep.is_pseudo_manifold);
        assert!(!rep.is_manifold_with_boundary);
        assert!(rep.failing_faces.contains(&vec![2]));
    }

    #[test]
    fn branching_ridge_detected() {
        let k = build_from_facets(&[vec![0, 1, 2], vec![0, 1, 3], vec![0, 1, 4]]).unwrap();
        let rep = validate_manifold(&k);
        assert!(!rep.is_pseudo_manifold);
        assert!(rep.failing_faces.contains(&vec![0, 1]));
    }

    #[test]
    fn moebius_strip_non_orientable() {
        // five-triangle Moebius band: single boundary circle
        let k = build_from_facets(&[
            vec![0, 1, 2],
            vec![1, 2, 3],
            vec![2, 3, 4],
            vec![0, 3, 4],
            vec![0, 1, 4],
        ])
        .unwrap();
        let rep = validate_manifold(&k);
        assert!(rep.is_manifold_with_boundary);
        assert_eq!(rep.orientable, Some(false));
        let b = boundary_subcomplex(&k).unwrap();
        assert_eq!(b.facets().len(), 5);
        assert!(b.is_connected());
    }

    #[test]
    fn input_orientation_parity_recorded() {
        let k = build_from_facets(&[vec![2, 0, 1], vec![0, 1, 3]]).unwrap();
        // (2,0,1) is an even permutation of (0,1,2)
        assert_eq!(k.input_orientations(), &[1, 1]);
        let k2 = build_from_facets(&[vec![1, 0, 2]]).unwrap();
        assert_eq!(k2.input_orientations(), &[-1]);
    }

    #[test]
    fn boundary_of_boundary_is_empty() {
        let k = build_from_facets(&[vec![0, 1, 2, 3], vec![1, 2, 3, 4]]).unwrap();
        let b = boundary_subcomplex(&k).unwrap();
        assert!(b.boundary_data().is_closed);
    }
}
