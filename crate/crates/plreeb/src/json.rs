//! JSON formats for complexes, maps, nerves and verification reports.
//!
//! Serialization is deterministic: facets sorted lexicographically,
//! rationals as "p/q" strings, maps keyed by sorted indices.

use crate::algebra::BettiProfile;
use crate::complex::SimplicialComplex;
use crate::num::{format_q, parse_q, Q};
use crate::plmaps::{MapError, PLMap};
use crate::reeb::{ReebGraph, ReebNerve};
use crate::verify::VerificationReport;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Debug, thiserror::Error)]
pub enum JsonError {
    #[error("json: {0}")]
    Serde(#[from] serde_json::Error),
    #[error("bad rational literal {0:?}")]
    BadRational(String),
    #[error("bad complex: {0}")]
    BadComplex(#[from] crate::complex::ComplexError),
    #[error("bad map: {0}")]
    BadMap(#[from] MapError),
}

#[derive(Serialize, Deserialize)]
struct ComplexJson {
    dim: usize,
    vertex_count: usize,
    facets: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    labels: Option<BTreeMap<usize, String>>,
}

pub fn complex_to_json(k: &SimplicialComplex) -> String {
    let labels = if k.labels().is_empty() {
        None
    } else {
        Some(k.labels().clone())
    };
    let j = ComplexJson {
        dim: k.dimension(),
        vertex_count: k.vertex_count(),
        facets: k.facets().to_vec(),
        labels,
    };
    serde_json::to_string_pretty(&j).expect("complex serialization")
}

pub fn complex_from_json(s: &str) -> Result<SimplicialComplex, JsonError> {
    let j: ComplexJson = serde_json::from_str(s)?;
    let mut k = crate::complex::build_from_facets(&j.facets)?;
    if let Some(labels) = j.labels {
        for (v, l) in labels {
            k.set_label(v, l);
        }
    }
    Ok(k)
}

#[derive(Serialize, Deserialize)]
struct MapJson {
    complex: ComplexJson,
    target_dim: usize,
    values: Vec<Vec<String>>,
}

pub fn map_to_json(f: &PLMap) -> String {
    let complex: ComplexJson = serde_json::from_str(&complex_to_json(f.domain()))
        .expect("round trip of inline complex");
    let j = MapJson {
        complex,
        target_dim: f.target_dim(),
        values: f
            .values()
            .iter()
            .map(|row| row.iter().map(format_q).collect())
            .collect(),
    };
    serde_json::to_string_pretty(&j).expect("map serialization")
}

pub fn map_from_json(s: &str) -> Result<PLMap, JsonError> {
    let j: MapJson = serde_json::from_str(s)?;
    let complex = crate::complex::build_from_facets(&j.complex.facets)?;
    let mut values: Vec<Vec<Q>> = Vec::with_capacity(j.values.len());
    for row in &j.values {
        let mut out = Vec::with_capacity(row.len());
        for lit in row {
            out.push(parse_q(lit).ok_or_else(|| JsonError::BadRational(lit.clone()))?);
        }
        values.push(out);
    }
    Ok(PLMap::new(complex, j.target_dim, values)?)
}

#[derive(Serialize)]
struct BettiJson<'a> {
    ring: &'a str,
    variant: &'a str,
    betti: &'a [usize],
    torsion: Vec<Vec<String>>,
}

pub fn betti_to_value(b: &BettiProfile) -> serde_json::Value {
    let j = BettiJson {
        ring: match b.ring {
            crate::algebra::Ring::Z => "Z",
            crate::algebra::Ring::Z2 => "Z2",
        },
        variant: match b.variant {
            crate::algebra::Variant::Homology => "homology",
            crate::algebra::Variant::Cohomology => "cohomology",
        },
        betti: &b.betti,
        torsion: b
            .torsion
            .iter()
            .map(|t| t.iter().map(|f| f.to_string()).collect())
            .collect(),
    };
    serde_json::to_value(&j).expect("betti serialization")
}

pub fn nerve_to_json(n: &ReebNerve) -> String {
    let value = serde_json::json!({
        "cover": {
            "grid": n.grid,
            "overlap": format_q(&n.overlap),
            "bbox": [[format_q(&n.bbox.0.x), format_q(&n.bbox.0.y)],
                     [format_q(&n.bbox.1.x), format_q(&n.bbox.1.y)]],
        },
        "vertices": n.vertices.iter().map(|v| serde_json::json!({
            "cell": [v.cell.0, v.cell.1],
            "component": v.component,
            "facet_count": v.facets.len(),
        })).collect::<Vec<_>>(),
        "simplices": n.simplices.iter().cloned().collect::<Vec<_>>(),
        "betti": betti_to_value(&n.betti),
    });
    serde_json::to_string_pretty(&value).expect("nerve serialization")
}

pub fn graph_to_json(g: &ReebGraph) -> String {
    let value = serde_json::json!({
        "nodes": g.nodes.iter().map(|n| serde_json::json!({
            "value": format_q(&n.value),
            "kind": format!("{:?}", n.kind),
            "component": n.component,
        })).collect::<Vec<_>>(),
        "edges": g.edges.iter().map(|e| serde_json::json!({
            "ends": [e.ends.0, e.ends.1],
            "interval": [format_q(&e.interval.0), format_q(&e.interval.1)],
        })).collect::<Vec<_>>(),
    });
    serde_json::to_string_pretty(&value).expect("graph serialization")
}

pub fn report_to_json(r: &VerificationReport) -> String {
    let value = serde_json::json!({
        "statement": r.statement,
        "inputs": r.inputs,
        "pass": r.pass,
        "seed": r.seed,
        "details": r.details.iter().map(|c| serde_json::json!({
            "name": c.name,
            "lhs": c.lhs,
            "rhs": c.rhs,
            "pass": c.pass,
        })).collect::<Vec<_>>(),
        "unverified_notes": r.unverified_notes,
    });
    serde_json::to_string_pretty(&value).expect("report serialization")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{generate, GeneratorKind};
    use crate::plmaps::canonical::{canonical_map, CanonicalKind};

    #[test]
    fn complex_round_trip() {
        let mut k = generate(GeneratorKind::SolidTorus(5)).unwrap();
        k.set_label(3, "seam");
        let s = complex_to_json(&k);
        let back = complex_from_json(&s).unwrap();
        assert_eq!(k, back);
        // deterministic
        assert_eq!(s, complex_to_json(&back));
    }

    #[test]
    fn map_round_trip() {
        for kind in [
            CanonicalKind::HeightDisk(3),
            CanonicalKind::ProductSolidTorus { res: 4 },
        ] {
            let f = canonical_map(&kind).unwrap();
            let s = map_to_json(&f);
            let back = map_from_json(&s).unwrap();
            assert_eq!(f, back);
        }
    }

    #[test]
    fn bad_rational_rejected() {
        let f = canonical_map(&CanonicalKind::HeightDisk(2)).unwrap();
        let s = map_to_json(&f).replace("\"1\"", "\"1/0\"");
        assert!(map_from_json(&s).is_err());
    }
}
