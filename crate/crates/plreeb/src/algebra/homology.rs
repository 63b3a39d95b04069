//! Simplicial chain complexes and Betti/torsion profiles over Z and Z/2.

use super::matrix::{rank_mod2, smith_normal_form, IntegerMatrix};
use crate::complex::SimplicialComplex;
use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Ring {
    #[serde(rename = "Z")]
    Z,
    #[serde(rename = "Z2")]
    Z2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Homology,
    Cohomology,
}

/// Ranked Betti numbers plus torsion invariant factors per degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiProfile {
    pub ring: Ring,
    pub variant: Variant,
    pub betti: Vec<usize>,
    pub torsion: Vec<Vec<BigInt>>,
}

impl BettiProfile {
    /// Alternating Betti sum; equals the Euler characteristic over any ring.
    pub fn euler(&self) -> i64 {
        self.betti
            .iter()
            .enumerate()
            .map(|(k, &b)| if k % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }

    /// Trims trailing zero degrees (no Betti, no torsion) down to `min_len`
    /// degrees, for comparing complexes of different top dimension.
    pub fn truncated(&self, min_len: usize) -> BettiProfile {
        let mut out = self.clone();
        while out.betti.len() > min_len
            && out.betti.last() == Some(&0)
            && out.torsion.last().map_or(true, |t| t.is_empty())
        {
            out.betti.pop();
            out.torsion.pop();
        }
        while out.betti.len() < min_len {
            out.betti.push(0);
            out.torsion.push(Vec::new());
        }
        out
    }

    /// Equality of ranks and torsion, padding trailing zeros.
    pub fn same_groups(&self, other: &BettiProfile) -> bool {
        let n = self.betti.len().max(other.betti.len());
        self.truncated(n).betti == other.truncated(n).betti
            && self.truncated(n).torsion == other.truncated(n).torsion
    }
}

/// Cell counts and integer boundary operators of a finite CW-ish complex.
#[derive(Clone, Debug)]
pub struct ChainData {
    pub counts: Vec<usize>,
    /// `boundaries[k]` is the operator from (k+1)-chains to k-chains.
    pub boundaries: Vec<IntegerMatrix>,
}

impl ChainData {
    pub fn dim(&self) -> usize {
        self.counts.len().saturating_sub(1)
    }

    /// Chain data of the closure of a set of generating simplices
    /// (arbitrary sorted vertex tuples; arities may be mixed).
    pub fn from_simplices<I, T>(generators: I) -> ChainData
    where
        I: IntoIterator<Item = T>,
        T: AsRef<[usize]>,
    {
        let mut by_dim: Vec<BTreeSet<Vec<usize>>> = Vec::new();
        for g in generators {
            let g = g.as_ref();
            let d = g.len().saturating_sub(1);
            if by_dim.len() <= d {
                by_dim.resize(d + 1, BTreeSet::new());
            }
            let mut sorted = g.to_vec();
            sorted.sort_unstable();
            by_dim[d].insert(sorted);
        }
        // close downward
        for d in (1..by_dim.len()).rev() {
            let lower: Vec<Vec<usize>> = by_dim[d]
                .iter()
                .flat_map(|f| {
                    (0..f.len()).map(move |i| {
                        let mut g = f.clone();
                        g.remove(i);
                        g
                    })
                })
                .collect();
            by_dim[d - 1].extend(lower);
        }
        if by_dim.is_empty() {
            return ChainData {
                counts: vec![0],
                boundaries: Vec::new(),
            };
        }
        let index: Vec<BTreeMap<&Vec<usize>, usize>> = by_dim
            .iter()
            .map(|faces| faces.iter().enumerate().map(|(i, f)| (f, i)).collect())
            .collect();
        let counts: Vec<usize> = by_dim.iter().map(|s| s.len()).collect();
        let mut boundaries = Vec::new();
        for d in 1..by_dim.len() {
            let mut m = IntegerMatrix::zero(counts[d - 1], counts[d]);
            for (j, f) in by_dim[d].iter().enumerate() {
                for i in 0..f.len() {
                    let mut g = f.clone();
                    g.remove(i);
                    let row = index[d - 1][&g];
                    let sign = if i % 2 == 0 { 1i64 } else { -1 };
                    m.add_to(row, j, &BigInt::from(sign));
                }
            }
            boundaries.push(m);
        }
        ChainData { counts, boundaries }
    }

    pub fn from_complex(k: &SimplicialComplex) -> ChainData {
        ChainData::from_simplices(k.facets().iter().cloned())
    }

    /// A multigraph (loops and parallel edges allowed) as a 1-complex.
    pub fn from_multigraph(vertices: usize, edges: &[(usize, usize)]) -> ChainData {
        let mut m = IntegerMatrix::zero(vertices, edges.len());
        for (j, &(u, v)) in edges.iter().enumerate() {
            if u != v {
                m.add_to(u, j, &BigInt::from(-1));
                m.add_to(v, j, &BigInt::one());
            }
        }
        ChainData {
            counts: vec![vertices, edges.len()],
            boundaries: vec![m],
        }
    }

    pub fn euler(&self) -> i64 {
        self.counts
            .iter()
            .enumerate()
            .map(|(k, &c)| if k % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }
}

/// Betti numbers and torsion of a chain complex over the requested ring;
/// cohomology over Z is derived by universal coefficients (ranks unchanged,
/// torsion shifted up one degree).
pub fn homology_of(chain: &ChainData, ring: Ring, variant: Variant) -> BettiProfile {
    let dim = chain.dim();
    let (ranks, torsions): (Vec<usize>, Vec<Vec<BigInt>>) = match ring {
        Ring::Z => {
            let snfs: Vec<Vec<BigInt>> = chain
                .boundaries
                .iter()
                .map(smith_normal_form)
                .collect();
            let rank_of = |k: usize| -> usize {
                if k == 0 || k > dim {
                    0
                } else {
                    snfs[k - 1].len()
                }
            };
            let betti: Vec<usize> = (0..=dim)
                .map(|k| chain.counts[k] - rank_of(k) - rank_of(k + 1))
                .collect();
            let torsion: Vec<Vec<BigInt>> = (0..=dim)
                .map(|k| {
                    if k < dim {
                        snfs[k]
                            .iter()
                            .filter(|f| !f.is_one())
                            .cloned()
                            .collect()
                    } else {
                        Vec::new()
                    }
                })
                .collect();
            (betti, torsion)
        }
        Ring::Z2 => {
            let ranks2: Vec<usize> = chain.boundaries.iter().map(rank_mod2).collect();
            let rank_of = |k: usize| -> usize {
                if k == 0 || k > dim {
                    0
                } else {
                    ranks2[k - 1]
                }
            };
            let betti: Vec<usize> = (0..=dim)
                .map(|k| chain.counts[k] - rank_of(k) - rank_of(k + 1))
                .collect();
            (betti, vec![Vec::new(); dim + 1])
        }
    };
    match (ring, variant) {
        (_, Variant::Homology) => BettiProfile {
            ring,
            variant,
            betti: ranks,
            torsion: torsions,
        },
        (Ring::Z2, Variant::Cohomology) => BettiProfile {
            ring,
            variant,
            betti: ranks,
            torsion: torsions,
        },
        (Ring::Z, Variant::Cohomology) => {
            // H^k = free(H_k) + torsion(H_{k-1})
            let mut torsion = vec![Vec::new()];
            for k in 1..=dim {
                torsion.push(torsions[k - 1].clone());
            }
            BettiProfile {
                ring,
                variant,
                betti: ranks,
                torsion,
            }
        }
    }
}

/// Betti + torsion of a simplicial complex.
pub fn homology_of_complex(k: &SimplicialComplex, ring: Ring, variant: Variant) -> BettiProfile {
    homology_of(&ChainData::from_complex(k), ring, variant)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{boundary_subcomplex, build_from_facets, generate, GeneratorKind};

    fn betti_z(k: &SimplicialComplex) -> Vec<usize> {
        homology_of_complex(k, Ring::Z, Variant::Homology).betti
    }

    #[test]
    fn boundary_of_boundary_vanishes() {
        for kind in [
            GeneratorKind::Disk(3),
            GeneratorKind::SolidTorus(4),
            GeneratorKind::TwistedSolidTorus(5),
        ] {
            let k = generate(kind).unwrap();
            let chain = ChainData::from_complex(&k);
            for w in chain.boundaries.windows(2) {
                assert!(w[0].multiply(&w[1]).is_zero(), "dd != 0 for {kind:?}");
            }
        }
    }

    #[test]
    fn sphere_homology() {
        let s2 = generate(GeneratorKind::Sphere(2)).unwrap();
        let h = homology_of_complex(&s2, Ring::Z, Variant::Homology);
        assert_eq!(h.betti, vec![1, 0, 1]);
        assert!(h.torsion.iter().all(|t| t.is_empty()));
        assert_eq!(h.euler(), 2);
    }

    #[test]
    fn solid_torus_homology() {
        let k = generate(GeneratorKind::SolidTorus(6)).unwrap();
        assert_eq!(betti_z(&k), vec![1, 1, 0, 0]);
        let h2 = homology_of_complex(&k, Ring::Z2, Variant::Homology);
        assert_eq!(h2.betti, vec![1, 1, 0, 0]);
    }

    #[test]
    fn klein_bottle_boundary_homology() {
        let tst = generate(GeneratorKind::TwistedSolidTorus(6)).unwrap();
        let kb = boundary_subcomplex(&tst).unwrap();
        let h = homology_of_complex(&kb, Ring::Z, Variant::Homology);
        assert_eq!(h.betti, vec![1, 1, 0]);
        assert_eq!(h.torsion[1], vec![BigInt::from(2)]);
        // universal coefficients: the Z/2 lands in H^2
        let hc = homology_of_complex(&kb, Ring::Z, Variant::Cohomology);
        assert_eq!(hc.betti, vec![1, 1, 0]);
        assert!(hc.torsion[1].is_empty());
        assert_eq!(hc.torsion[2], vec![BigInt::from(2)]);
        // over Z/2 the Klein bottle looks like the torus
        let h2 = homology_of_complex(&kb, Ring::Z2, Variant::Homology);
        assert_eq!(h2.betti, vec![1, 2, 1]);
    }

    #[test]
    fn euler_poincare_across_rings() {
        for kind in [
            GeneratorKind::Disk(2),
            GeneratorKind::Disk(3),
            GeneratorKind::SolidTorus(4),
            GeneratorKind::TwistedSolidTorus(4),
        ] {
            let k = generate(kind).unwrap();
            let chi = k.euler_characteristic();
            for ring in [Ring::Z, Ring::Z2] {
                let h = homology_of_complex(&k, ring, Variant::Homology);
                assert_eq!(h.euler(), chi, "{kind:?} over {ring:?}");
            }
        }
    }

    #[test]
    fn moebius_strip_homology() {
        let moebius = build_from_facets(&[
            vec![0, 1, 2],
            vec![1, 2, 3],
            vec![2, 3, 4],
            vec![0, 3, 4],
            vec![0, 1, 4],
        ])
        .unwrap();
        assert_eq!(betti_z(&moebius), vec![1, 1, 0]);
    }

    #[test]
    fn multigraph_homology() {
        // two vertices, three parallel edges: wedge of two circles
        let chain = ChainData::from_multigraph(2, &[(0, 1), (0, 1), (0, 1)]);
        let h = homology_of(&chain, Ring::Z, Variant::Homology);
        assert_eq!(h.betti, vec![1, 2]);
        // a loop contributes a free circle
        let chain = ChainData::from_multigraph(1, &[(0, 0)]);
        let h = homology_of(&chain, Ring::Z, Variant::Homology);
        assert_eq!(h.betti, vec![1, 1]);
    }
}
