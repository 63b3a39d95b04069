//! The explicit map constructions: height functions on disks, annulus
//! projections of solid tori, the twisted projection of the solid Klein
//! bottle, and boundary-sum maps joined across connecting tubes.
//!
//! All image geometry is rectilinear and rational. A solid torus maps onto
//! a square frame: station `l` of a closed square loop carries the disk
//! cross-section offset along the outward normal, scaled by the disk height.
//! The twisted map rotates the height direction by a half-turn over one
//! loop (exact Pythagorean directions), which is precisely the
//! identification `((x,y),-1) ~ ((x,-y),1)` of the quotient.

use super::{ensure_generic, MapError, PLMap};
use crate::complex::{
    disk_layout, generate, loop_stations, tube_layers, DiskLayout, GeneratorKind, Station,
};
use crate::complex::{boundary_subcomplex, build_from_facets, SimplicialComplex};
use crate::num::{q, qr, P2, Q};
use num_traits::Signed;
use std::collections::BTreeMap;

/// Half-side of the middle square of the frame image.
const HALF_SIDE: i64 = 4;
/// Horizontal spacing between summand frame centers in boundary sums.
const SPACING: i64 = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SummandKind {
    /// `D^2 x S^1`, the orientable solid torus.
    Orientable,
    /// `D^2 x~ S^1`, the solid Klein bottle.
    Twisted,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CanonicalKind {
    /// Height function on the n-disk, n in 1..=3.
    HeightDisk(usize),
    /// Annulus projection of the solid torus.
    ProductSolidTorus { res: usize },
    /// Twisted annulus projection of the solid Klein bottle.
    TwistedMap { res: usize },
    /// Boundary connected sum of solid tori and solid Klein bottles with
    /// the joined map of the summand projections.
    SumMap {
        summands: Vec<SummandKind>,
        res: usize,
    },
}

fn height_disk(n: usize) -> Result<PLMap, MapError> {
    let cx = generate(GeneratorKind::Disk(n))?;
    let heights: Vec<Q> = match n {
        1 => vec![q(1), q(-1)],
        2 => vec![q(1), qr(-1, 2), qr(-1, 2)],
        3 => vec![q(1), qr(-1, 3), qr(-1, 3), qr(-1, 3)],
        d => return Err(MapError::DimensionUnsupported(format!("disk({d})"))),
    };
    let mut values: Vec<Vec<Q>> = heights.into_iter().map(|h| vec![h]).collect();
    values.push(vec![q(0)]); // apex at the barycentric height
    let f = PLMap::new(cx, 1, values)?;
    ensure_generic(&f, 0)
}

/// Per-station offset directions of one summand; unit rational vectors.
struct SummandGeometry {
    stations: Vec<Station>,
    u: Vec<P2>,
}

fn disk_edges(disk: &DiskLayout) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..6 {
        out.push((i, (i + 1) % 6));
        out.push((i, disk.center));
    }
    out
}

/// A direction is unusable when two disk-adjacent vertices have equal
/// offsets or the extreme offsets are not attained uniquely.
fn direction_ties(disk: &DiskLayout, u: &P2) -> bool {
    for (a, b) in disk_edges(disk) {
        if disk.position(a).dot(u) == disk.position(b).dot(u) {
            return true;
        }
    }
    let offsets: Vec<Q> = (0..7).map(|v| disk.position(v).dot(u)).collect();
    let max = offsets.iter().max().unwrap();
    let min = offsets.iter().min().unwrap();
    offsets.iter().filter(|o| *o == max).count() != 1
        || offsets.iter().filter(|o| *o == min).count() != 1
}

/// Exact rational rotation by the small angle with tan(theta/2) = 1/64.
fn rotate_small(u: &P2) -> P2 {
    let t = qr(1, 64);
    let tt = &t * &t;
    let den = q(1) + &tt;
    P2::new(
        (&u.x * (q(1) - &tt) - &u.y * q(2) * &t) / &den,
        (&u.x * q(2) * &t + &u.y * (q(1) - tt)) / den,
    )
}

fn summand_geometry(kind: SummandKind, res: usize) -> Result<SummandGeometry, MapError> {
    // stations must hit the frame corners; off-corner stations produce
    // boundary creases whose interior attaches on the wrong side
    if res < 4 || res % 4 != 0 {
        return Err(MapError::Resolution(format!(
            "canonical solid-torus maps need res in 4, 8, 12, .., got {res}"
        )));
    }
    let disk = disk_layout();
    let stations = loop_stations(res, HALF_SIDE);
    let u: Vec<P2> = match kind {
        SummandKind::Orientable => (0..res).map(|_| P2::from_i64(0, 1)).collect(),
        SummandKind::Twisted => {
            if res < 8 {
                return Err(MapError::Resolution(format!(
                    "the twisted map needs res >= 8 for the half-turn, got {res}"
                )));
            }
            // the half-turn happens strictly between the two port stations
            // (0 and res/2), so both port stars see exactly vertical offset
            // directions and glue like the orientable ports
            let h = (res / 2) as i64;
            (0..res)
                .map(|l| {
                    let l = l as i64;
                    if l <= 1 {
                        return P2::from_i64(0, 1);
                    }
                    if l >= h - 1 {
                        return P2::from_i64(0, -1);
                    }
                    // Pythagorean point at angle pi * (l-1)/(h-2) past (0,1)
                    let a = l - 1;
                    let b = (h - 2) - (l - 1);
                    let norm = q(a * a + b * b);
                    let mut dir = P2::new(q(-2 * a * b) / &norm, q(b * b - a * a) / norm);
                    let mut tries = 0;
                    while direction_ties(&disk, &dir) {
                        dir = rotate_small(&dir);
                        tries += 1;
                        assert!(tries < 16, "could not avoid offset ties at station {l}");
                    }
                    dir
                })
                .collect()
        }
    };
    // port stations must be exactly vertical for the quotient identification
    assert!(!direction_ties(&disk, &u[0]) && u[0] == P2::from_i64(0, 1));
    if res % 2 == 0 {
        assert!(!direction_ties(&disk, &u[res / 2]));
    }
    Ok(SummandGeometry { stations, u })
}

impl SummandGeometry {
    fn value(&self, disk: &DiskLayout, v: usize, l: usize, center: &P2) -> P2 {
        let offset = disk.position(v).dot(&self.u[l]);
        self.stations[l]
            .point
            .add(&self.stations[l].normal.scale(&offset))
            .add(center)
    }

    /// Disk vertex carrying the outermost fold at a station.
    fn apex(&self, disk: &DiskLayout, l: usize) -> usize {
        (0..7)
            .max_by(|&a, &b| {
                disk.position(a)
                    .dot(&self.u[l])
                    .cmp(&disk.position(b).dot(&self.u[l]))
            })
            .unwrap()
    }
}

fn solid_torus_map(kind: SummandKind, res: usize) -> Result<PLMap, MapError> {
    let generator = match kind {
        SummandKind::Orientable => GeneratorKind::SolidTorus(res),
        SummandKind::Twisted => GeneratorKind::TwistedSolidTorus(res),
    };
    let cx = generate(generator)?;
    let geom = summand_geometry(kind, res)?;
    let disk = disk_layout();
    if kind == SummandKind::Twisted {
        // seam agreement of the quotient: reflected offsets match negated u
        for v in 0..7 {
            let lhs = disk.position(disk.reflection[v]).dot(&geom.u[0]);
            let rhs = -disk.position(v).dot(&geom.u[0]);
            assert_eq!(lhs, rhs, "twisted seam values disagree");
        }
    }
    let origin = P2::zero();
    let mut values = vec![Vec::new(); cx.vertex_count()];
    for l in 0..res {
        for v in 0..7 {
            let p = geom.value(&disk, v, l, &origin);
            values[l * 7 + v] = vec![p.x, p.y];
        }
    }
    PLMap::new(cx, 2, values)
}

/// A glued junction between consecutive summands: a triangulated
/// `hexagon x interval` laid over the two port stars.
struct Tube {
    /// global ids per layer: rim 0..5 then center
    layers: Vec<Vec<usize>>,
    /// image per layer per local vertex
    points: Vec<Vec<P2>>,
}

fn cyclic_alignments(len: usize) -> Vec<(bool, usize)> {
    let mut out = Vec::new();
    for rev in [false, true] {
        for rot in 0..len {
            out.push((rev, rot));
        }
    }
    out
}

fn build_tube(
    a_cycle: &[usize],
    b_cycle: &[usize],
    pa: usize,
    pb: usize,
    point_of: &dyn Fn(usize) -> P2,
    fresh_base: usize,
) -> Result<Tube, MapError> {
    let n = a_cycle.len();
    assert_eq!(n, b_cycle.len());
    // choose an alignment that keeps every pair of corner tracks from
    // crossing: the vertical order of matched corners must agree on both
    // sides (ties allowed)
    let mut chosen: Option<Vec<usize>> = None;
    'outer: for (rev, rot) in cyclic_alignments(n) {
        let b_perm: Vec<usize> = (0..n)
            .map(|i| {
                let j = if rev { (n - i) % n } else { i };
                b_cycle[(j + rot) % n]
            })
            .collect();
        for i in 0..n {
            for j in i + 1..n {
                let ay = point_of(a_cycle[i]).y - point_of(a_cycle[j]).y;
                let by = point_of(b_perm[i]).y - point_of(b_perm[j]).y;
                if (ay.is_positive() && by.is_negative())
                    || (ay.is_negative() && by.is_positive())
                {
                    continue 'outer;
                }
            }
        }
        chosen = Some(b_perm);
        break;
    }
    let b_perm = chosen.ok_or(MapError::KindMismatch)?;
    let layers_n = tube_layers();
    let mut layers: Vec<Vec<usize>> = Vec::new();
    let mut points: Vec<Vec<P2>> = Vec::new();
    let mut next = fresh_base;
    for r in 0..=layers_n {
        let t = qr(r as i64, layers_n as i64);
        let ids: Vec<usize> = if r == 0 {
            let mut v = a_cycle.to_vec();
            v.push(pa);
            v
        } else if r == layers_n {
            let mut v = b_perm.clone();
            v.push(pb);
            v
        } else {
            let v: Vec<usize> = (0..=n).map(|i| next + i).collect();
            next += n + 1;
            v
        };
        let mut pts: Vec<P2> = (0..n)
            .map(|i| point_of(a_cycle[i]).lerp(&point_of(b_perm[i]), &t))
            .collect();
        pts.push(point_of(pa).lerp(&point_of(pb), &t));
        layers.push(ids);
        points.push(pts);
    }
    Ok(Tube { layers, points })
}

fn tube_facets(tube: &Tube) -> Vec<Vec<usize>> {
    let n = tube.layers[0].len() - 1; // rim length
    let center = n;
    let mut triangles: Vec<Vec<usize>> = Vec::new();
    for i in 0..n {
        let mut t = vec![i, (i + 1) % n, center];
        t.sort_unstable();
        triangles.push(t);
    }
    let mut out = Vec::new();
    for r in 0..tube.layers.len() - 1 {
        let lower = &tube.layers[r];
        let upper = &tube.layers[r + 1];
        for t in &triangles {
            let (a, b, c) = (t[0], t[1], t[2]);
            out.push(vec![lower[a], lower[b], lower[c], upper[c]]);
            out.push(vec![lower[a], lower[b], upper[b], upper[c]]);
            out.push(vec![lower[a], upper[a], upper[b], upper[c]]);
        }
    }
    out
}

fn sum_map(summands: &[SummandKind], res: usize) -> Result<PLMap, MapError> {
    if summands.is_empty() {
        return Err(MapError::KindMismatch);
    }
    if summands.len() == 1 {
        return solid_torus_map(summands[0], res);
    }
    if res % 2 != 0 {
        return Err(MapError::Resolution(format!(
            "boundary sums need an even res, got {res}"
        )));
    }
    let disk = disk_layout();
    let k = summands.len();
    let verts_per_summand = 7 * res;

    let mut complexes = Vec::new();
    let mut geoms = Vec::new();
    for (i, &kind) in summands.iter().enumerate() {
        let generator = match kind {
            SummandKind::Orientable => GeneratorKind::SolidTorus(res),
            SummandKind::Twisted => GeneratorKind::TwistedSolidTorus(res),
        };
        complexes.push(generate(generator)?);
        geoms.push((summand_geometry(kind, res)?, P2::from_i64(i as i64 * SPACING, 0)));
    }

    // global values for summand vertices
    let mut values: Vec<Vec<P2>> = Vec::new();
    for (i, (geom, center)) in geoms.iter().enumerate() {
        let _ = i;
        let mut local = Vec::with_capacity(verts_per_summand);
        for l in 0..res {
            for v in 0..7 {
                local.push(geom.value(&disk, v, l, center));
            }
        }
        values.push(local);
    }
    let global_point = |values: &Vec<Vec<P2>>, g: usize| -> P2 {
        values[g / verts_per_summand][g % verts_per_summand].clone()
    };

    // facets of all summands, with vertex offsets
    let mut facets: Vec<Vec<usize>> = Vec::new();
    for (i, cx) in complexes.iter().enumerate() {
        for f in cx.facets() {
            facets.push(f.iter().map(|v| i * verts_per_summand + v).collect());
        }
    }

    // junction tubes
    let mut tube_points: BTreeMap<usize, P2> = BTreeMap::new();
    let mut fresh = k * verts_per_summand;
    for j in 0..k - 1 {
        let east = &geoms[j].0;
        let west = &geoms[j + 1].0;
        let pa_local = crate::complex::product_vertex(east.apex(&disk, 0), 0);
        let pb_local = crate::complex::product_vertex(west.apex(&disk, res / 2), res / 2);
        let pa = j * verts_per_summand + pa_local;
        let pb = (j + 1) * verts_per_summand + pb_local;
        let boundary_a = boundary_subcomplex(&complexes[j])?;
        let boundary_b = boundary_subcomplex(&complexes[j + 1])?;
        let cycle_a = super::order_cycle(
            &boundary_a
                .vertex_link(pa_local)
                .iter()
                .map(|e| (e[0], e[1]))
                .collect::<Vec<_>>(),
        )
        .ok_or(MapError::KindMismatch)?;
        let cycle_b = super::order_cycle(
            &boundary_b
                .vertex_link(pb_local)
                .iter()
                .map(|e| (e[0], e[1]))
                .collect::<Vec<_>>(),
        )
        .ok_or(MapError::KindMismatch)?;
        let cycle_a: Vec<usize> = cycle_a
            .into_iter()
            .map(|v| j * verts_per_summand + v)
            .collect();
        let cycle_b: Vec<usize> = cycle_b
            .into_iter()
            .map(|v| (j + 1) * verts_per_summand + v)
            .collect();
        let values_ref = &values;
        let tube_points_ref = &tube_points;
        let point_of = move |g: usize| -> P2 {
            if g < k * verts_per_summand {
                global_point(values_ref, g)
            } else {
                tube_points_ref[&g].clone()
            }
        };
        let tube = build_tube(&cycle_a, &cycle_b, pa, pb, &point_of, fresh)?;
        for (ids, pts) in tube.layers.iter().zip(tube.points.iter()) {
            for (id, p) in ids.iter().zip(pts.iter()) {
                if *id >= k * verts_per_summand {
                    tube_points.insert(*id, p.clone());
                }
            }
        }
        fresh += (tube_layers() - 1) * (cycle_a.len() + 1);
        facets.extend(tube_facets(&tube));
    }

    let cx = build_from_facets(&facets)?;
    let mut all_values: Vec<Vec<Q>> = Vec::with_capacity(cx.vertex_count());
    for g in 0..cx.vertex_count() {
        let p = if g < k * verts_per_summand {
            global_point(&values, g)
        } else {
            tube_points
                .get(&g)
                .cloned()
                .ok_or_else(|| MapError::BadValues(format!("missing tube vertex {g}")))?
        };
        all_values.push(vec![p.x, p.y]);
    }
    PLMap::new(cx, 2, all_values)
}

/// Builds the canonical map of the given kind, together with its domain
/// complex (owned by the returned map).
pub fn canonical_map(kind: &CanonicalKind) -> Result<PLMap, MapError> {
    match kind {
        CanonicalKind::HeightDisk(n) => height_disk(*n),
        CanonicalKind::ProductSolidTorus { res } => {
            solid_torus_map(SummandKind::Orientable, *res)
        }
        CanonicalKind::TwistedMap { res } => solid_torus_map(SummandKind::Twisted, *res),
        CanonicalKind::SumMap { summands, res } => sum_map(summands, *res),
    }
}

/// Checks that a user-supplied complex matches the generator the kind
/// expects (used by the CLI).
pub fn matches_generator(kind: &CanonicalKind, cx: &SimplicialComplex) -> bool {
    let expected = match kind {
        CanonicalKind::HeightDisk(n) => generate(GeneratorKind::Disk(*n)),
        CanonicalKind::ProductSolidTorus { res } => generate(GeneratorKind::SolidTorus(*res)),
        CanonicalKind::TwistedMap { res } => generate(GeneratorKind::TwistedSolidTorus(*res)),
        CanonicalKind::SumMap { .. } => return true,
    };
    match expected {
        Ok(e) => e.facets() == cx.facets(),
        Err(_) => false,
    }
}
