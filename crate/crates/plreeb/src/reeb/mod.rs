//! The Reeb space of a PL map: exact multigraph for scalar targets, a
//! cover-nerve 2-complex (Mapper construction) for planar targets, and the
//! collar/core decomposition of the source along it.

use crate::algebra::{homology_of, BettiProfile, ChainData, Ring, Variant};
use crate::num::{q, qr, P2, Q};
use crate::plmaps::slice::{self, Rect};
use crate::plmaps::{is_boundary_special_generic, MapError, PLMap, VertexLabel};
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ReebError {
    #[error("map is not generic: {0}")]
    NotGeneric(String),
    #[error("domain is disconnected")]
    Disconnected,
    #[error("resolution too small: {0}")]
    ResolutionTooSmall(String),
    #[error("map is not boundary special generic")]
    NotBoundarySpecialGeneric,
    #[error("nerve Betti profiles disagree between resolutions: {0}")]
    NerveUnstable(String),
    #[error(transparent)]
    Map(#[from] MapError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NodeKind {
    Min,
    Max,
    UpFork,
    DownFork,
    BoundaryEndpoint,
}

#[derive(Clone, Debug)]
pub struct ReebNode {
    pub value: Q,
    pub kind: NodeKind,
    /// deterministic id of the level-set component at the node
    pub component: usize,
    /// a domain vertex sitting at this node
    pub witness_vertex: usize,
}

#[derive(Clone, Debug)]
pub struct ReebEdge {
    /// lower and upper node ids
    pub ends: (usize, usize),
    pub interval: (Q, Q),
    /// a regular value inside the edge and a domain edge crossing it there,
    /// identifying the level-set component this Reeb edge tracks
    pub rep_value: Q,
    pub rep_crossing: (usize, usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphPoint {
    Node(usize),
    EdgeInterior(usize),
}

/// Exact Reeb graph of a generic scalar map on a connected complex.
#[derive(Clone, Debug)]
pub struct ReebGraph {
    pub nodes: Vec<ReebNode>,
    pub edges: Vec<ReebEdge>,
    pub vertex_map: BTreeMap<usize, GraphPoint>,
}

impl ReebGraph {
    pub fn degree(&self, node: usize) -> usize {
        self.edges
            .iter()
            .map(|e| {
                (e.ends.0 == node) as usize + (e.ends.1 == node) as usize
            })
            .sum()
    }

    pub fn first_betti(&self) -> usize {
        // connected by construction
        self.edges.len() + 1 - self.nodes.len()
    }

    /// Path recognition: exactly two degree-1 nodes joined by one edge chain
    /// (after smoothing, a path is two nodes and one edge).
    pub fn is_path(&self) -> bool {
        self.nodes.len() == 2
            && self.edges.len() == 1
            && self.degree(0) == 1
            && self.degree(1) == 1
    }

    pub fn chain_data(&self) -> ChainData {
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|e| e.ends).collect();
        ChainData::from_multigraph(self.nodes.len(), &edges)
    }

    /// Number of graph points over a regular value.
    pub fn points_over(&self, t: &Q) -> usize {
        self.edges
            .iter()
            .filter(|e| e.interval.0 < *t && *t < e.interval.1)
            .count()
            + self.nodes.iter().filter(|n| n.value == *t).count()
    }

    /// DOT export, deterministic node and edge order.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph reeb {\n");
        for (i, n) in self.nodes.iter().enumerate() {
            let kind = match n.kind {
                NodeKind::Min => "min",
                NodeKind::Max => "max",
                NodeKind::UpFork => "up_fork",
                NodeKind::DownFork => "down_fork",
                NodeKind::BoundaryEndpoint => "boundary_endpoint",
            };
            out.push_str(&format!(
                "  n{} [label=\"{} @ {}\"];\n",
                i,
                kind,
                crate::num::format_q(&n.value)
            ));
        }
        for e in &self.edges {
            out.push_str(&format!(
                "  n{} -- n{} [label=\"({}, {})\"];\n",
                e.ends.0,
                e.ends.1,
                crate::num::format_q(&e.interval.0),
                crate::num::format_q(&e.interval.1)
            ));
        }
        out.push_str("}\n");
        out
    }
}

/// Level-set components at a regular value: component id per crossing edge.
struct LevelSet {
    comp_of: BTreeMap<(usize, usize), usize>,
    comp_count: usize,
    /// canonical (minimal) crossing edge per component
    reps: Vec<(usize, usize)>,
}

fn level_components(f: &PLMap, t: &Q) -> LevelSet {
    let mut ids: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut parents: Vec<usize> = Vec::new();
    fn find(p: &mut Vec<usize>, mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for facet in f.domain().facets() {
        let mut local = Vec::new();
        for i in 0..facet.len() {
            for j in i + 1..facet.len() {
                let (a, b) = (facet[i], facet[j]);
                let (lo, hi) = if f.scalar(a) < f.scalar(b) { (a, b) } else { (b, a) };
                if f.scalar(lo) < t && t < f.scalar(hi) {
                    let next = ids.len();
                    let id = *ids.entry((a.min(b), a.max(b))).or_insert(next);
                    if id == parents.len() {
                        parents.push(id);
                    }
                    local.push(id);
                }
            }
        }
        for w in local.windows(2) {
            let (ra, rb) = (find(&mut parents, w[0]), find(&mut parents, w[1]));
            if ra != rb {
                parents[ra] = rb;
            }
        }
    }
    let mut comp_ids: BTreeMap<usize, usize> = BTreeMap::new();
    let mut comp_of = BTreeMap::new();
    let mut reps: Vec<(usize, usize)> = Vec::new();
    for (&edge, &id) in &ids {
        let root = find(&mut parents, id);
        let next = comp_ids.len();
        let c = *comp_ids.entry(root).or_insert(next);
        if c == reps.len() {
            reps.push(edge);
        }
        comp_of.insert(edge, c);
    }
    LevelSet {
        comp_of,
        comp_count: comp_ids.len(),
        reps,
    }
}

/// Exact Reeb graph via a value-ordered sweep with union-find over level-set
/// components.
pub fn reeb_graph(f: &PLMap) -> Result<ReebGraph, ReebError> {
    if f.target_dim() != 1 {
        return Err(ReebError::NotGeneric("target dimension must be 1".into()));
    }
    if !f.is_generic_scalar() {
        return Err(ReebError::NotGeneric("vertex values collide".into()));
    }
    if !f.domain().is_connected() {
        return Err(ReebError::Disconnected);
    }
    let mut verts: Vec<usize> = f.domain().support().into_iter().collect();
    verts.sort_by(|&a, &b| f.scalar(a).cmp(f.scalar(b)));
    let n = verts.len();
    if n == 0 {
        return Err(ReebError::NotGeneric("empty complex".into()));
    }
    // gap midpoints between consecutive vertex values
    let gaps: Vec<Q> = (0..n - 1)
        .map(|i| (f.scalar(verts[i]) + f.scalar(verts[i + 1])) / q(2))
        .collect();
    let levels: Vec<LevelSet> = gaps.iter().map(|t| level_components(f, t)).collect();

    let boundary = f.domain().boundary_data();
    let boundary_vertices: BTreeSet<usize> =
        boundary.boundary_facets.iter().flatten().copied().collect();

    // slab components around each vertex: tokens are level crossings below,
    // level crossings above, and the vertex itself
    #[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
    enum Token {
        Lower(usize),
        Upper(usize),
        Vertex,
    }
    struct Slab {
        // for level comps below/above: the slab component they belong to
        lower_comp: Vec<usize>,
        upper_comp: Vec<usize>,
        vertex_comp: usize,
        count: usize,
    }
    let mut slabs: Vec<Slab> = Vec::with_capacity(n);
    for (j, &w) in verts.iter().enumerate() {
        let lower = if j > 0 { Some(&levels[j - 1]) } else { None };
        let upper = if j < n - 1 { Some(&levels[j]) } else { None };
        let mut ids: BTreeMap<Token, usize> = BTreeMap::new();
        let lower_tokens = lower.map_or(0, |l| l.comp_count);
        let upper_tokens = upper.map_or(0, |l| l.comp_count);
        for c in 0..lower_tokens {
            ids.insert(Token::Lower(c), c);
        }
        for c in 0..upper_tokens {
            ids.insert(Token::Upper(c), lower_tokens + c);
        }
        ids.insert(Token::Vertex, lower_tokens + upper_tokens);
        let mut parents: Vec<usize> = (0..ids.len()).collect();
        fn find(p: &mut Vec<usize>, mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for facet in f.domain().facets() {
            let mut local: Vec<usize> = Vec::new();
            if facet.binary_search(&w).is_ok() {
                local.push(ids[&Token::Vertex]);
            }
            for i in 0..facet.len() {
                for k in i + 1..facet.len() {
                    let (a, b) = (facet[i], facet[k]);
                    let key = (a.min(b), a.max(b));
                    if let Some(level) = lower {
                        if let Some(&c) = level.comp_of.get(&key) {
                            local.push(ids[&Token::Lower(c)]);
                        }
                    }
                    if let Some(level) = upper {
                        if let Some(&c) = level.comp_of.get(&key) {
                            local.push(ids[&Token::Upper(c)]);
                        }
                    }
                }
            }
            local.sort_unstable();
            local.dedup();
            for pair in local.windows(2) {
                let (ra, rb) = (find(&mut parents, pair[0]), find(&mut parents, pair[1]));
                if ra != rb {
                    parents[ra] = rb;
                }
            }
        }
        let mut comp_ids: BTreeMap<usize, usize> = BTreeMap::new();
        let mut normalize = |tid: usize, parents: &mut Vec<usize>| -> usize {
            let root = find(parents, tid);
            let next = comp_ids.len();
            *comp_ids.entry(root).or_insert(next)
        };
        let lower_comp: Vec<usize> = (0..lower_tokens)
            .map(|c| normalize(c, &mut parents))
            .collect();
        let upper_comp: Vec<usize> = (0..upper_tokens)
            .map(|c| normalize(lower_tokens + c, &mut parents))
            .collect();
        let vertex_comp = normalize(lower_tokens + upper_tokens, &mut parents);
        slabs.push(Slab {
            lower_comp,
            upper_comp,
            vertex_comp,
            count: comp_ids.len(),
        });
    }

    // degrees of slab components
    struct SlabComp {
        dl: usize,
        du: usize,
        node_id: Option<usize>,
    }
    let mut slab_comps: Vec<Vec<SlabComp>> = slabs
        .iter()
        .map(|s| {
            (0..s.count)
                .map(|c| SlabComp {
                    dl: s.lower_comp.iter().filter(|&&x| x == c).count(),
                    du: s.upper_comp.iter().filter(|&&x| x == c).count(),
                    node_id: None,
                })
                .collect()
        })
        .collect();

    let mut nodes: Vec<ReebNode> = Vec::new();
    for j in 0..n {
        for c in 0..slabs[j].count {
            let (dl, du) = (slab_comps[j][c].dl, slab_comps[j][c].du);
            if (dl, du) == (1, 1) {
                continue;
            }
            let on_boundary = boundary_vertices.contains(&verts[j]);
            // the vertex token need not sit in this component; only the
            // component carrying the vertex can be an endpoint kind
            let carries_vertex = slabs[j].vertex_comp == c;
            let kind = match (dl, du) {
                (0, 0) | (0, 1) => {
                    if on_boundary && carries_vertex {
                        NodeKind::BoundaryEndpoint
                    } else {
                        NodeKind::Min
                    }
                }
                (1, 0) => {
                    if on_boundary && carries_vertex {
                        NodeKind::BoundaryEndpoint
                    } else {
                        NodeKind::Max
                    }
                }
                (d, _) if d >= 2 => NodeKind::DownFork,
                _ => NodeKind::UpFork,
            };
            slab_comps[j][c].node_id = Some(nodes.len());
            nodes.push(ReebNode {
                value: f.scalar(verts[j]).clone(),
                kind,
                component: c,
                witness_vertex: verts[j],
            });
        }
    }

    // walk edge chains upward from every node
    let mut edges: Vec<ReebEdge> = Vec::new();
    let mut regular_edge: BTreeMap<(usize, usize), usize> = BTreeMap::new(); // (slab j, comp) -> edge id
    for j in 0..n {
        for c in 0..slabs[j].count {
            let start_node = match slab_comps[j][c].node_id {
                Some(id) => id,
                None => continue,
            };
            // each upper level component leaving this slab component starts
            // one edge chain
            if j == n - 1 {
                continue;
            }
            for (lc, &sc) in slabs[j].upper_comp.iter().enumerate() {
                if sc != c {
                    continue;
                }
                // walk
                let mut chain: Vec<(usize, usize)> = Vec::new(); // (gap idx, level comp)
                let mut regulars: Vec<(usize, usize)> = Vec::new();
                let mut gap = j;
                let mut level_comp = lc;
                let end_node;
                loop {
                    chain.push((gap, level_comp));
                    // the slab above this gap
                    let nj = gap + 1;
                    let sc_up = slabs[nj].lower_comp[level_comp];
                    if let Some(id) = slab_comps[nj][sc_up].node_id {
                        end_node = id;
                        break;
                    }
                    regulars.push((nj, sc_up));
                    // regular: exactly one upper level comp continues
                    let next_lc = slabs[nj]
                        .upper_comp
                        .iter()
                        .position(|&x| x == sc_up)
                        .expect("regular slab component must continue upward");
                    gap = nj;
                    level_comp = next_lc;
                }
                let (mid_gap, mid_comp) = chain[chain.len() / 2];
                let edge_id = edges.len();
                edges.push(ReebEdge {
                    ends: (start_node, end_node),
                    interval: (
                        nodes[start_node].value.clone(),
                        nodes[end_node].value.clone(),
                    ),
                    rep_value: gaps[mid_gap].clone(),
                    rep_crossing: levels[mid_gap].reps[mid_comp],
                });
                for r in regulars {
                    regular_edge.insert(r, edge_id);
                }
            }
        }
    }

    // vertex -> graph point
    let mut vertex_map = BTreeMap::new();
    for (j, &w) in verts.iter().enumerate() {
        let c = slabs[j].vertex_comp;
        let point = match slab_comps[j][c].node_id {
            Some(id) => GraphPoint::Node(id),
            None => GraphPoint::EdgeInterior(regular_edge[&(j, c)]),
        };
        vertex_map.insert(w, point);
    }

    Ok(ReebGraph {
        nodes,
        edges,
        vertex_map,
    })
}

/// One vertex of the cover nerve: a connected preimage component of an
/// enlarged cover rectangle.
#[derive(Clone, Debug)]
pub struct NerveVertex {
    pub cell: (usize, usize),
    pub component: usize,
    pub facets: BTreeSet<usize>,
}

/// Mapper-style nerve of the preimage components of an overlapping
/// rectangle cover of the image.
#[derive(Clone, Debug)]
pub struct ReebNerve {
    pub grid: usize,
    pub overlap: Q,
    pub bbox: (P2, P2),
    pub vertices: Vec<NerveVertex>,
    /// simplices of dimension >= 1, as sorted vertex-id tuples (closure is
    /// implied); quadruple overlaps at interior grid corners contribute
    /// 3-simplices, which keep corner spheres filled
    pub simplices: BTreeSet<Vec<usize>>,
    pub betti: BettiProfile,
}

impl ReebNerve {
    pub fn chain_data(&self) -> ChainData {
        let mut gens: Vec<Vec<usize>> = (0..self.vertices.len()).map(|v| vec![v]).collect();
        gens.extend(self.simplices.iter().cloned());
        ChainData::from_simplices(gens)
    }

    /// Edges of the nerve (1-simplices plus closure edges of higher cells).
    pub fn skeleton(&self) -> (BTreeSet<usize>, BTreeSet<(usize, usize)>, Vec<(usize, usize, usize)>) {
        let mut verts: BTreeSet<usize> = (0..self.vertices.len()).collect();
        let mut edges = BTreeSet::new();
        let mut triangles = Vec::new();
        for s in &self.simplices {
            for i in 0..s.len() {
                verts.insert(s[i]);
                for j in i + 1..s.len() {
                    edges.insert((s[i], s[j]));
                    for k in j + 1..s.len() {
                        triangles.push((s[i], s[j], s[k]));
                    }
                }
            }
        }
        triangles.sort_unstable();
        triangles.dedup();
        (verts, edges, triangles)
    }
}

/// Cover rectangles of a `g x g` grid over the bounding box, each enlarged
/// by the overlap fraction per side.
fn cover_rect(lo: &[Q], hi: &[Q], g: usize, overlap: &Q, i: usize, j: usize) -> Rect {
    let dx = (&hi[0] - &lo[0]) / q(g as i64);
    let dy = (&hi[1] - &lo[1]) / q(g as i64);
    let ox = &dx * overlap;
    let oy = &dy * overlap;
    Rect {
        lo: P2::new(
            &lo[0] + &dx * q(i as i64) - &ox,
            &lo[1] + &dy * q(j as i64) - &oy,
        ),
        hi: P2::new(
            &lo[0] + &dx * q(i as i64 + 1) + &ox,
            &lo[1] + &dy * q(j as i64 + 1) + &oy,
        ),
    }
}

/// Builds the cover nerve of a generic planar map: exact preimage
/// components per rectangle, simplices for non-empty common intersections.
pub fn reeb_nerve(f: &PLMap, grid: usize, overlap: &Q) -> Result<ReebNerve, ReebError> {
    if f.target_dim() != 2 {
        return Err(ReebError::NotGeneric("target dimension must be 2".into()));
    }
    if grid < 4 {
        return Err(ReebError::ResolutionTooSmall(format!(
            "nerve grid {grid} < 4"
        )));
    }
    if !(overlap > &q(0) && overlap < &qr(1, 2)) {
        return Err(ReebError::ResolutionTooSmall(format!(
            "overlap {} outside (0, 1/2)",
            crate::num::format_q(overlap)
        )));
    }
    if !f.is_generic_planar_boundary() {
        return Err(ReebError::NotGeneric(
            "adjacent images collide or a boundary face degenerates".into(),
        ));
    }
    let (lo, hi) = f
        .bbox()
        .ok_or_else(|| ReebError::NotGeneric("empty support".into()))?;

    let mut vertices: Vec<NerveVertex> = Vec::new();
    // (cell i, cell j) -> facet -> local component; and local comp -> vertex id
    let mut comp_maps: BTreeMap<(usize, usize), (BTreeMap<usize, usize>, Vec<usize>)> =
        BTreeMap::new();
    for i in 0..grid {
        for j in 0..grid {
            let rect = cover_rect(&lo, &hi, grid, overlap, i, j);
            let comps = slice::rect_components(f, &rect);
            let mut facet_to_comp = BTreeMap::new();
            let mut vertex_ids = Vec::new();
            for (c, facets) in comps.into_iter().enumerate() {
                for &fi in &facets {
                    facet_to_comp.insert(fi, c);
                }
                vertex_ids.push(vertices.len());
                vertices.push(NerveVertex {
                    cell: (i, j),
                    component: c,
                    facets,
                });
            }
            comp_maps.insert((i, j), (facet_to_comp, vertex_ids));
        }
    }

    let locate = |cell: (usize, usize), facet: usize| -> Option<usize> {
        let (map, ids) = comp_maps.get(&cell)?;
        map.get(&facet).map(|&c| ids[c])
    };

    let mut simplices: BTreeSet<Vec<usize>> = BTreeSet::new();
    // pairwise overlaps: 8-neighborhood
    for i in 0..grid {
        for j in 0..grid {
            let here = cover_rect(&lo, &hi, grid, overlap, i, j);
            let neighbors: [(isize, isize); 4] = [(1, 0), (0, 1), (1, 1), (1, -1)];
            for (di, dj) in neighbors {
                let (ni, nj) = (i as isize + di, j as isize + dj);
                if ni < 0 || nj < 0 || ni >= grid as isize || nj >= grid as isize {
                    continue;
                }
                let other_cell = (ni as usize, nj as usize);
                let other = cover_rect(&lo, &hi, grid, overlap, other_cell.0, other_cell.1);
                let inter = match here.intersect(&other) {
                    Some(r) => r,
                    None => continue,
                };
                for comp in slice::rect_components(f, &inter) {
                    let rep = *comp.iter().next().unwrap();
                    let a = locate((i, j), rep);
                    let b = locate(other_cell, rep);
                    if let (Some(a), Some(b)) = (a, b) {
                        let mut s = vec![a, b];
                        s.sort_unstable();
                        simplices.insert(s);
                    }
                }
            }
        }
    }
    // quadruple overlaps at interior grid corners; all triples of the four
    // cells share the same corner square, so each corner component spans a
    // full 3-simplex (keeping the nerve free of spurious corner spheres)
    for i in 0..grid - 1 {
        for j in 0..grid - 1 {
            let cells = [(i, j), (i + 1, j), (i, j + 1), (i + 1, j + 1)];
            let mut inter = cover_rect(&lo, &hi, grid, overlap, i, j);
            let mut ok = true;
            for &(ci, cj) in &cells[1..] {
                match inter.intersect(&cover_rect(&lo, &hi, grid, overlap, ci, cj)) {
                    Some(r) => inter = r,
                    None => {
                        ok = false;
                        break;
                    }
                }
            }
            if !ok {
                continue;
            }
            for comp in slice::rect_components(f, &inter) {
                let rep = *comp.iter().next().unwrap();
                let ids: Vec<Option<usize>> =
                    cells.iter().map(|&c| locate(c, rep)).collect();
                if ids.iter().all(|x| x.is_some()) {
                    let mut s: Vec<usize> = ids.into_iter().map(|x| x.unwrap()).collect();
                    s.sort_unstable();
                    simplices.insert(s);
                }
            }
        }
    }

    let mut nerve = ReebNerve {
        grid,
        overlap: overlap.clone(),
        bbox: (
            P2::new(lo[0].clone(), lo[1].clone()),
            P2::new(hi[0].clone(), hi[1].clone()),
        ),
        vertices,
        simplices,
        betti: BettiProfile {
            ring: Ring::Z,
            variant: Variant::Homology,
            betti: Vec::new(),
            torsion: Vec::new(),
        },
    };
    nerve.betti = homology_of(&nerve.chain_data(), Ring::Z, Variant::Homology);
    Ok(nerve)
}

/// Fiber summary attached to a decomposition cell.
#[derive(Clone, Debug)]
pub struct FiberSummary {
    pub dimension: usize,
    pub expected_dimension: usize,
    pub acyclic: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum CellRef {
    GraphNode(usize),
    GraphEdge(usize),
    NerveVertex(usize),
}

/// Collar/core partition of the Reeb space cells with exact per-cell fiber
/// summaries.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub collar_cells: Vec<CellRef>,
    pub core_cells: Vec<CellRef>,
    pub collar_fibers: Vec<(CellRef, FiberSummary)>,
    pub core_fibers: Vec<(CellRef, FiberSummary)>,
}

impl Decomposition {
    pub fn all_pass(&self) -> bool {
        self.collar_fibers
            .iter()
            .chain(self.core_fibers.iter())
            .all(|(_, s)| s.acyclic && s.dimension == s.expected_dimension)
    }
}

fn chunk_summary(c: &slice::ChunkComponent, expected: usize) -> FiberSummary {
    FiberSummary {
        dimension: c.dimension,
        expected_dimension: expected,
        acyclic: c.betti.betti.first() == Some(&1)
            && c.betti.betti.iter().skip(1).all(|&b| b == 0)
            && c.betti.torsion.iter().all(|t| t.is_empty()),
    }
}

/// Partitions the Reeb cells into a collar around the boundary and a core,
/// sampling one exact fiber per cell: core fibers must be acyclic of
/// dimension `n - m`, collar fibers acyclic of dimension `n - m + 1`.
pub fn decompose(f: &PLMap, depth: usize) -> Result<Decomposition, ReebError> {
    decompose_with(f, depth, 8, &qr(1, 3))
}

pub fn decompose_with(
    f: &PLMap,
    depth: usize,
    grid: usize,
    overlap: &Q,
) -> Result<Decomposition, ReebError> {
    let bsg = is_boundary_special_generic(f)?;
    if !bsg.pass {
        return Err(ReebError::NotBoundarySpecialGeneric);
    }
    let n = f.domain().dimension();
    let m = f.target_dim();
    let core_dim = n - m;
    let collar_dim = n - m + 1;
    let mut out = Decomposition {
        collar_cells: Vec::new(),
        core_cells: Vec::new(),
        collar_fibers: Vec::new(),
        core_fibers: Vec::new(),
    };
    match m {
        1 => {
            let graph = reeb_graph(f)?;
            for (i, node) in graph.nodes.iter().enumerate() {
                if graph.degree(i) == 1 && matches!(node.kind, NodeKind::BoundaryEndpoint) {
                    out.collar_cells.push(CellRef::GraphNode(i));
                } else {
                    out.core_cells.push(CellRef::GraphNode(i));
                }
            }
            for e in 0..graph.edges.len() {
                out.core_cells.push(CellRef::GraphEdge(e));
            }
            let _ = depth;
            for cell in out.collar_cells.clone() {
                let CellRef::GraphNode(i) = cell else { unreachable!() };
                let node = &graph.nodes[i];
                let edge = graph
                    .edges
                    .iter()
                    .find(|e| e.ends.0 == i || e.ends.1 == i)
                    .expect("endpoint node has an incident edge");
                let other = if edge.ends.0 == i {
                    &graph.nodes[edge.ends.1]
                } else {
                    &graph.nodes[edge.ends.0]
                };
                let cut0 = &node.value + (&other.value - &node.value) / q(4);
                let cut = slice::regular_scalar_value(f, &cut0)?;
                let upper = node.value > other.value;
                let comps = slice::scalar_chunk(f, &cut, upper)?;
                let comp = comps
                    .iter()
                    .find(|c| c.domain_vertices.contains(&node.witness_vertex))
                    .ok_or(MapError::DegenerateQueryPoint)?;
                out.collar_fibers
                    .push((cell.clone(), chunk_summary(comp, collar_dim)));
            }
            for cell in out.core_cells.clone() {
                if let CellRef::GraphEdge(e) = cell {
                    let edge = &graph.edges[e];
                    let slice_cs = crate::plmaps::fiber(f, &[edge.rep_value.clone()])?;
                    let comp = slice_cs
                        .iter()
                        .find(|c| {
                            c.facets.iter().any(|&fi| {
                                let facet = &f.domain().facets()[fi];
                                facet.binary_search(&edge.rep_crossing.0).is_ok()
                                    && facet.binary_search(&edge.rep_crossing.1).is_ok()
                            })
                        })
                        .ok_or(MapError::DegenerateQueryPoint)?;
                    out.core_fibers.push((
                        cell.clone(),
                        FiberSummary {
                            dimension: comp.dimension,
                            expected_dimension: core_dim,
                            acyclic: comp.is_acyclic(),
                        },
                    ));
                }
            }
        }
        2 => {
            let nerve = reeb_nerve(f, grid, overlap)?;
            let folds: BTreeSet<usize> = bsg
                .classification
                .labels
                .iter()
                .filter(|(_, l)| matches!(l, VertexLabel::DefiniteFold))
                .map(|(&v, _)| v)
                .collect();
            let (lo, hi) = f.bbox().unwrap();
            // boundary cells: the component touches a fold vertex whose
            // image lies in the cell rectangle
            let mut is_collar: Vec<bool> = nerve
                .vertices
                .iter()
                .map(|nv| {
                    let rect = cover_rect(&lo, &hi, grid, overlap, nv.cell.0, nv.cell.1);
                    folds.iter().any(|&v| {
                        let p = f.point(v);
                        p.x >= rect.lo.x
                            && p.x <= rect.hi.x
                            && p.y >= rect.lo.y
                            && p.y <= rect.hi.y
                            && nv
                                .facets
                                .iter()
                                .any(|&fi| f.domain().facets()[fi].binary_search(&v).is_ok())
                    })
                })
                .collect();
            // widen by hops
            let (_, edges, _) = nerve.skeleton();
            for _ in 1..depth {
                let snapshot = is_collar.clone();
                for &(a, b) in &edges {
                    if snapshot[a] {
                        is_collar[b] = true;
                    }
                    if snapshot[b] {
                        is_collar[a] = true;
                    }
                }
            }
            for (i, nv) in nerve.vertices.iter().enumerate() {
                let cell = CellRef::NerveVertex(i);
                if is_collar[i] {
                    out.collar_cells.push(cell.clone());
                    let anchor = folds
                        .iter()
                        .copied()
                        .find(|&v| {
                            nv.facets
                                .iter()
                                .any(|&fi| f.domain().facets()[fi].binary_search(&v).is_ok())
                        })
                        .unwrap_or_else(|| *folds.iter().next().unwrap());
                    let comp = slice::collar_fiber_planar(f, anchor)?;
                    out.collar_fibers
                        .push((cell, chunk_summary(&comp, collar_dim)));
                } else {
                    out.core_cells.push(cell.clone());
                    // sample a regular point inside the exact image of the
                    // cell's component: centroid of a facet image clipped to
                    // the rectangle
                    let rect = cover_rect(&lo, &hi, grid, overlap, nv.cell.0, nv.cell.1);
                    let mut found = None;
                    'search: for &fi in &nv.facets {
                        let pts: Vec<P2> = f.domain().facets()[fi]
                            .iter()
                            .map(|&v| f.point(v))
                            .collect();
                        let centroid = match slice::clip_interior_point(&pts, &rect) {
                            Some(c) => c,
                            None => continue,
                        };
                        let p = slice::regular_planar_point(f, &centroid)?;
                        if p.x < rect.lo.x
                            || p.x > rect.hi.x
                            || p.y < rect.lo.y
                            || p.y > rect.hi.y
                        {
                            continue;
                        }
                        let comps = crate::plmaps::fiber(f, &[p.x.clone(), p.y.clone()])?;
                        for comp in comps {
                            if comp.facets.iter().any(|fj| nv.facets.contains(fj)) {
                                found = Some(comp);
                                break 'search;
                            }
                        }
                    }
                    let comp = found.ok_or(MapError::DegenerateQueryPoint)?;
                    out.core_fibers.push((
                        cell,
                        FiberSummary {
                            dimension: comp.dimension,
                            expected_dimension: core_dim,
                            acyclic: comp.is_acyclic(),
                        },
                    ));
                }
            }
        }
        _ => unreachable!(),
    }
    Ok(out)
}

#[cfg(test)]
mod tests;
