//! Acceptance suite: one test per acceptance criterion, each printing a
//! pass/fail line. Tolerances are exact (integer/rational comparisons);
//! runtime bounds are asserted where stated.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use plreeb::algebra::{
    homology_of_complex, pi1_presentation_from_skeleton, smith_normal_form, IntegerMatrix, Ring,
    Variant,
};
use plreeb::complex::{generate, GeneratorKind, SimplicialComplex};
use plreeb::num::qr;
use plreeb::plmaps::canonical::{canonical_map, CanonicalKind, SummandKind};
use plreeb::plmaps::{
    classify_boundary_vertices, ensure_generic, fixtures, is_boundary_special_generic, BsgWitness,
};
use plreeb::reeb::{reeb_graph, reeb_nerve};
use plreeb::verify::{statement_report, verify_3manifold_theorem, verify_function_theorem};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::time::Instant;

const RES: usize = 8;
const GRID: usize = 8;
const SEED: u64 = 7;

fn criterion(n: usize, name: &str, pass: bool) {
    println!("criterion {n} ({name}): {}", if pass { "PASS" } else { "FAIL" });
    assert!(pass, "criterion {n} ({name}) failed");
}

#[test]
fn criterion_1_interval_theorem() {
    let mut pass = true;
    for n in [2usize, 3] {
        let start = Instant::now();
        let f = canonical_map(&CanonicalKind::HeightDisk(n)).unwrap();
        let report = verify_function_theorem(&f, &format!("disk({n})"), SEED).unwrap();
        let elapsed = start.elapsed();
        pass &= report.pass;
        pass &= elapsed.as_secs_f64() < 5.0;
        println!(
            "  thm2.10 disk({n}): pass={} in {:.3}s",
            report.pass,
            elapsed.as_secs_f64()
        );
    }
    criterion(1, "thm2.10 testable direction on disks", pass);
}

#[test]
fn criterion_2_cohomology_matrix() {
    let start = Instant::now();
    let report = statement_report("prop2.7", SEED, 0, 0, RES, GRID).unwrap();
    let elapsed = start.elapsed().as_secs_f64();
    println!("  prop2.7 matrix in {elapsed:.1}s: pass={}", report.pass);
    for check in report.details.iter().filter(|c| !c.pass) {
        println!("    FAIL {}: {} != {}", check.name, check.lhs, check.rhs);
    }
    criterion(
        2,
        "prop2.7 Betti+torsion equality over Z and Z/2",
        report.pass && elapsed < 60.0,
    );
}

#[test]
fn criterion_3_pi1_matrix() {
    let start = Instant::now();
    let report = statement_report("prop2.9", SEED, 0, 0, RES, GRID).unwrap();
    let elapsed = start.elapsed().as_secs_f64();
    println!("  prop2.9 matrix in {elapsed:.1}s: pass={}", report.pass);
    // free rank equals r + r' for the explicit sums
    let mut rank_ok = true;
    for total in 1..=3usize {
        for rp in 0..=total {
            let r = total - rp;
            let f = canonical_map(&CanonicalKind::SumMap {
                summands: summands(r, rp),
                res: RES,
            })
            .unwrap();
            let k = f.domain();
            let p = pi1_presentation_from_skeleton(
                &k.support(),
                &k.faces(1).iter().map(|e| (e[0], e[1])).collect(),
                &k.faces(2).iter().map(|t| (t[0], t[1], t[2])).collect::<Vec<_>>(),
                *k.support().iter().next().unwrap(),
            )
            .unwrap();
            let ab = p.abelianization();
            rank_ok &= ab.free_rank == total && ab.torsion.is_empty();
        }
    }
    criterion(
        3,
        "prop2.9 abelianization agreement",
        report.pass && rank_ok && elapsed < 30.0,
    );
}

fn summands(r: usize, rp: usize) -> Vec<SummandKind> {
    let mut s = vec![SummandKind::Orientable; r];
    s.extend(vec![SummandKind::Twisted; rp]);
    s
}

#[test]
fn criterion_4_fiber_checks() {
    let report = statement_report("lemma2.6", SEED, 0, 0, RES, GRID).unwrap();
    for check in report.details.iter().filter(|c| !c.pass) {
        println!("    FAIL {}: {} != {}", check.name, check.lhs, check.rhs);
    }
    criterion(4, "lemma2.6 collar/core fiber structure", report.pass);
}

#[test]
fn criterion_5_three_manifold_classification() {
    let mut pass = true;
    for total in 0..=3usize {
        for rp in 0..=total {
            let r = total - rp;
            let report = verify_3manifold_theorem(r, rp, RES, SEED, GRID).unwrap();
            println!("  thm3.1 (r={r}, r'={rp}): pass={}", report.pass);
            for check in report.details.iter().filter(|c| !c.pass) {
                println!("    FAIL {}: {} != {}", check.name, check.lhs, check.rhs);
            }
            pass &= report.pass;
        }
    }
    criterion(5, "thm3.1 / cor3.3 invariant consequences", pass);
}

#[test]
fn criterion_6_negative_controls() {
    // the crafted boundary saddle is rejected with the right witness
    let saddle = fixtures::boundary_saddle_map();
    let rep = is_boundary_special_generic(&saddle).unwrap();
    let witness_ok = !rep.pass
        && rep.witnesses.iter().any(
            |w| matches!(w, BsgWitness::NonDefiniteVertex(v) if *v == fixtures::saddle_vertex()),
        );
    // height on a closed torus: first Betti number 1, not a path
    let f = canonical_map(&CanonicalKind::ProductSolidTorus { res: RES }).unwrap();
    let torus = plreeb::plmaps::restrict_to_boundary(&f).unwrap();
    let height = ensure_generic(&torus.coordinate_map(0), SEED).unwrap();
    let graph = reeb_graph(&height).unwrap();
    let torus_ok = graph.first_betti() == 1 && !graph.is_path();
    println!("  saddle witness: {witness_ok}; torus reeb betti_1 = {}", graph.first_betti());
    criterion(6, "negative controls", witness_ok && torus_ok);
}

/// gcd of all k x k minors, brute force.
fn minor_gcd(entries: &[Vec<i64>], k: usize) -> BigInt {
    let rows = entries.len();
    let cols = entries[0].len();
    let mut g = BigInt::zero();
    let row_sets = combinations(rows, k);
    let col_sets = combinations(cols, k);
    for rs in &row_sets {
        for cs in &col_sets {
            let det = determinant(entries, rs, cs);
            g = g.gcd(&det);
        }
    }
    g
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

fn determinant(entries: &[Vec<i64>], rows: &[usize], cols: &[usize]) -> BigInt {
    if rows.len() == 1 {
        return BigInt::from(entries[rows[0]][cols[0]]);
    }
    let mut det = BigInt::zero();
    for (i, &r) in rows.iter().enumerate() {
        let sub_rows: Vec<usize> = rows
            .iter()
            .copied()
            .filter(|&x| x != r)
            .collect();
        let minor = determinant(entries, &sub_rows, &cols[1..]);
        let term = BigInt::from(entries[r][cols[0]]) * minor;
        if i % 2 == 0 {
            det += term;
        } else {
            det -= term;
        }
    }
    det
}

#[test]
fn criterion_7_algebra_oracles() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED);
    let mut pass = true;
    for case in 0..200 {
        let rows = rng.gen_range(1..=6);
        let cols = rng.gen_range(1..=6);
        let entries: Vec<Vec<i64>> = (0..rows)
            .map(|_| (0..cols).map(|_| rng.gen_range(-9..=9)).collect())
            .collect();
        let factors = smith_normal_form(&IntegerMatrix::from_dense(&entries));
        // oracle: d_k = gcd_k / gcd_{k-1}
        let mut expected = Vec::new();
        let mut prev = BigInt::from(1);
        for k in 1..=rows.min(cols) {
            let g = minor_gcd(&entries, k);
            if g.is_zero() {
                break;
            }
            expected.push(&g / &prev);
            prev = g;
        }
        if factors != expected {
            println!("  case {case}: snf {factors:?} != oracle {expected:?} for {entries:?}");
            pass = false;
        }
        // divisibility chain
        for w in factors.windows(2) {
            if !(w[1].clone() % &w[0]).is_zero() || !w[0].is_positive() {
                println!("  case {case}: chain violated: {factors:?}");
                pass = false;
            }
        }
    }

    // abelianized edge-path group equals H_1 on every generated complex
    let mut complexes: Vec<(String, SimplicialComplex)> = vec![
        ("disk(2)".into(), generate(GeneratorKind::Disk(2)).unwrap()),
        ("disk(3)".into(), generate(GeneratorKind::Disk(3)).unwrap()),
        ("sphere(2)".into(), generate(GeneratorKind::Sphere(2)).unwrap()),
        ("sphere(3)".into(), generate(GeneratorKind::Sphere(3)).unwrap()),
    ];
    for res in [4usize, 6, 8] {
        complexes.push((
            format!("solid_torus({res})"),
            generate(GeneratorKind::SolidTorus(res)).unwrap(),
        ));
        complexes.push((
            format!("twisted({res})"),
            generate(GeneratorKind::TwistedSolidTorus(res)).unwrap(),
        ));
    }
    for (label, k) in &complexes {
        let p = pi1_presentation_from_skeleton(
            &k.support(),
            &k.faces(1).iter().map(|e| (e[0], e[1])).collect(),
            &k.faces(2).iter().map(|t| (t[0], t[1], t[2])).collect::<Vec<_>>(),
            *k.support().iter().next().unwrap(),
        )
        .unwrap();
        let ab = p.abelianization();
        let h1 = homology_of_complex(k, Ring::Z, Variant::Homology);
        let rank_ok = ab.free_rank == h1.betti.get(1).copied().unwrap_or(0);
        let torsion_ok = ab.torsion == h1.torsion.get(1).cloned().unwrap_or_default();
        if !(rank_ok && torsion_ok) {
            println!("  {label}: abelianization {ab:?} != H1 {:?}/{:?}", h1.betti, h1.torsion);
            pass = false;
        }
    }
    criterion(7, "Smith normal form and Hurewicz oracles", pass);
}

#[test]
fn criterion_8_nerve_stability() {
    let mut maps: Vec<(String, CanonicalKind)> = vec![
        (
            "solid_torus".into(),
            CanonicalKind::ProductSolidTorus { res: RES },
        ),
        ("twisted".into(), CanonicalKind::TwistedMap { res: RES }),
    ];
    for total in 2..=3usize {
        for rp in 0..=total {
            let r = total - rp;
            maps.push((
                format!("sum(r={r},r'={rp})"),
                CanonicalKind::SumMap {
                    summands: summands(r, rp),
                    res: RES,
                },
            ));
        }
    }
    let mut pass = true;
    for (label, kind) in maps {
        let f = canonical_map(&kind).unwrap();
        let coarse = reeb_nerve(&f, 8, &qr(1, 3)).unwrap();
        let fine = reeb_nerve(&f, 16, &qr(1, 3)).unwrap();
        let stable = coarse.betti.same_groups(&fine.betti);
        println!(
            "  {label}: g=8 {:?} vs g=16 {:?} -> {}",
            coarse.betti.betti,
            fine.betti.betti,
            if stable { "stable" } else { "UNSTABLE" }
        );
        pass &= stable;
    }
    criterion(8, "nerve Betti stability under grid doubling", pass);
}

#[test]
fn saddle_is_rejected_by_every_verifier_precondition() {
    use plreeb::reeb::ReebError;
    let f = fixtures::boundary_saddle_map();
    assert!(matches!(
        plreeb::verify::verify_reeb_structure(&f, "saddle", SEED),
        Err(ReebError::NotBoundarySpecialGeneric)
    ));
    assert!(matches!(
        plreeb::verify::verify_decomposition(&f, "saddle", SEED),
        Err(ReebError::NotBoundarySpecialGeneric)
    ));
    assert!(matches!(
        plreeb::verify::verify_cohomology_iso(&f, "saddle", SEED, GRID),
        Err(ReebError::NotBoundarySpecialGeneric)
    ));
    assert!(matches!(
        plreeb::verify::verify_pi1(&f, "saddle", SEED, GRID),
        Err(ReebError::NotBoundarySpecialGeneric)
    ));
    // classification itself still works and identifies the saddle
    let cls = classify_boundary_vertices(&f).unwrap();
    assert_eq!(cls.non_definite_vertices(), vec![fixtures::saddle_vertex()]);
}

#[test]
fn prop2_5_structure_over_the_matrix() {
    let report = statement_report("prop2.5", SEED, 0, 0, RES, GRID).unwrap();
    for check in report.details.iter().filter(|c| !c.pass) {
        println!("    FAIL {}: {} != {}", check.name, check.lhs, check.rhs);
    }
    assert!(report.pass);
}
