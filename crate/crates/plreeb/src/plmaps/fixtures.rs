//! Crafted negative-control maps.

use super::PLMap;
use crate::complex::build_from_facets;
use crate::num::{q, qr, Q};

/// A scalar map on a 3-ball (cone over the octahedron) with a boundary
/// saddle: the lower link of vertex 2 in the boundary sphere is two
/// opposite points of its square link, so the map is singular but not a
/// definite fold there.
pub fn boundary_saddle_map() -> PLMap {
    // octahedron: poles 0,1; equator 2,3,4,5; cone apex 6
    let cx = build_from_facets(&[
        vec![0, 2, 3, 6],
        vec![0, 3, 4, 6],
        vec![0, 4, 5, 6],
        vec![0, 2, 5, 6],
        vec![1, 2, 3, 6],
        vec![1, 3, 4, 6],
        vec![1, 4, 5, 6],
        vec![1, 2, 5, 6],
    ])
    .unwrap();
    let heights: Vec<Q> = vec![q(1), q(2), q(0), q(-1), q(3), q(-2), qr(1, 2)];
    let values = heights.into_iter().map(|h| vec![h]).collect();
    PLMap::new(cx, 1, values).unwrap()
}

/// The saddle vertex of [`boundary_saddle_map`].
pub fn saddle_vertex() -> usize {
    2
}
