//! Edge-path group presentations and Tietze simplification.

use super::matrix::{smith_normal_form, IntegerMatrix};
use super::AlgebraError;
use num_bigint::BigInt;
use num_traits::One;
use std::collections::{BTreeMap, BTreeSet, VecDeque};

/// A finite group presentation. Relator letters are signed 1-based
/// generator indices: `+k` is generator `k-1`, `-k` its inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupPresentation {
    pub generator_count: usize,
    pub relators: Vec<Vec<i64>>,
}

/// Invariant-factor decomposition of an abelian group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Abelianization {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl GroupPresentation {
    pub fn is_free(&self) -> bool {
        self.relators.is_empty()
    }

    /// Smith normal form of the relator exponent matrix.
    pub fn abelianization(&self) -> Abelianization {
        let mut m = IntegerMatrix::zero(self.relators.len(), self.generator_count);
        for (i, rel) in self.relators.iter().enumerate() {
            for &letter in rel {
                let g = letter.unsigned_abs() as usize - 1;
                let s = if letter > 0 { 1 } else { -1 };
                m.add_to(i, g, &BigInt::from(s));
            }
        }
        let factors = smith_normal_form(&m);
        Abelianization {
            free_rank: self.generator_count - factors.len(),
            torsion: factors.into_iter().filter(|f| !f.is_one()).collect(),
        }
    }
}

fn check_letters(p: &GroupPresentation) {
    for rel in &p.relators {
        for &l in rel {
            assert!(l != 0 && l.unsigned_abs() as usize <= p.generator_count);
        }
    }
}

/// Edge-path presentation of the fundamental group of a 2-skeleton:
/// generators are the edges outside a breadth-first spanning tree
/// (lexicographic neighbor order from the base vertex), one relator per
/// triangle.
pub fn pi1_presentation_from_skeleton(
    vertices: &BTreeSet<usize>,
    edges: &BTreeSet<(usize, usize)>,
    triangles: &[(usize, usize, usize)],
    base: usize,
) -> Result<GroupPresentation, AlgebraError> {
    if !vertices.contains(&base) {
        return Err(AlgebraError::BadBaseVertex(base));
    }
    let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &(u, v) in edges {
        adj.entry(u).or_default().push(v);
        adj.entry(v).or_default().push(u);
    }
    for nbrs in adj.values_mut() {
        nbrs.sort_unstable();
    }
    let mut tree: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut seen: BTreeSet<usize> = BTreeSet::new();
    seen.insert(base);
    let mut queue = VecDeque::from([base]);
    while let Some(u) = queue.pop_front() {
        if let Some(nbrs) = adj.get(&u) {
            for &v in nbrs {
                if seen.insert(v) {
                    tree.insert((u.min(v), u.max(v)));
                    queue.push_back(v);
                }
            }
        }
    }
    if seen.len() != vertices.len() {
        return Err(AlgebraError::Disconnected);
    }
    let mut gen_index: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for &e in edges {
        if !tree.contains(&e) {
            let id = gen_index.len();
            gen_index.insert(e, id);
        }
    }
    // letter for traversing u -> v, zero when the edge is in the tree
    let letter = |u: usize, v: usize| -> i64 {
        let key = (u.min(v), u.max(v));
        match gen_index.get(&key) {
            None => 0,
            Some(&g) => {
                let sign = if u < v { 1 } else { -1 };
                sign * (g as i64 + 1)
            }
        }
    };
    let mut relators = Vec::new();
    for &(a, b, c) in triangles {
        let word: Vec<i64> = [letter(a, b), letter(b, c), letter(c, a)]
            .into_iter()
            .filter(|&l| l != 0)
            .collect();
        relators.push(word);
    }
    let p = GroupPresentation {
        generator_count: gen_index.len(),
        relators,
    };
    check_letters(&p);
    Ok(p)
}

fn free_reduce(word: &[i64]) -> Vec<i64> {
    let mut out: Vec<i64> = Vec::with_capacity(word.len());
    for &l in word {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

fn cyclic_reduce(mut word: Vec<i64>) -> Vec<i64> {
    word = free_reduce(&word);
    while word.len() >= 2 && word[0] == -word[word.len() - 1] {
        word.remove(0);
        word.pop();
        word = free_reduce(&word);
    }
    word
}

fn invert(word: &[i64]) -> Vec<i64> {
    word.iter().rev().map(|&l| -l).collect()
}

/// Removes a generator from the numbering, shifting higher indices down.
fn renumber_without(relators: &mut Vec<Vec<i64>>, gen: usize, count: &mut usize) {
    let g = gen as i64 + 1;
    for rel in relators.iter_mut() {
        for l in rel.iter_mut() {
            debug_assert!(l.unsigned_abs() as i64 != g);
            if l.abs() > g {
                *l -= l.signum();
            }
        }
    }
    *count -= 1;
}

/// Applies length-reducing Tietze moves (drop trivial relators, eliminate
/// generators with cheap substitutions) until a fixpoint or the move budget
/// is exhausted. Presents the same group.
pub fn tietze_simplify(p: &GroupPresentation, budget: usize) -> GroupPresentation {
    check_letters(p);
    let mut gens = p.generator_count;
    let mut relators: Vec<Vec<i64>> = p.relators.clone();
    let mut moves = 0usize;
    'outer: while moves < budget {
        for rel in relators.iter_mut() {
            *rel = cyclic_reduce(std::mem::take(rel));
        }
        relators.retain(|r| !r.is_empty());
        relators.sort();
        relators.dedup();

        // length-1 relator: the generator is trivial
        if let Some(pos) = relators.iter().position(|r| r.len() == 1) {
            let g = relators[pos][0].unsigned_abs() as usize - 1;
            relators.remove(pos);
            for rel in relators.iter_mut() {
                rel.retain(|&l| l.unsigned_abs() as usize - 1 != g);
            }
            renumber_without(&mut relators, g, &mut gens);
            moves += 1;
            continue 'outer;
        }

        // candidate eliminations: generator occurring exactly once in some
        // relator; substitute when total length does not grow
        let mut occurrences: Vec<usize> = vec![0; gens];
        for rel in &relators {
            for &l in rel {
                occurrences[l.unsigned_abs() as usize - 1] += 1;
            }
        }
        let mut best: Option<(i64, usize, usize)> = None; // (growth, relator, letter pos)
        for (ri, rel) in relators.iter().enumerate() {
            for (li, &l) in rel.iter().enumerate() {
                let g = l.unsigned_abs() as usize - 1;
                let in_rel = rel
                    .iter()
                    .filter(|&&x| x.unsigned_abs() as usize - 1 == g)
                    .count();
                if in_rel != 1 {
                    continue;
                }
                let k = occurrences[g] - 1; // occurrences elsewhere
                let growth = k as i64 * (rel.len() as i64 - 2) - rel.len() as i64;
                if growth <= 0 && best.map_or(true, |(b, _, _)| growth < b) {
                    best = Some((growth, ri, li));
                }
            }
        }
        if let Some((_, ri, li)) = best {
            let rel = relators.remove(ri);
            let l = rel[li];
            let g = l.unsigned_abs() as usize - 1;
            // solve: rel = prefix . l . suffix = 1  =>  l = (suffix . prefix)^-1
            let mut rest: Vec<i64> = rel[li + 1..].to_vec();
            rest.extend_from_slice(&rel[..li]);
            let replacement = invert(&rest); // word equal to the letter l
            for other in relators.iter_mut() {
                let mut out: Vec<i64> = Vec::with_capacity(other.len());
                for &x in other.iter() {
                    if x == l {
                        out.extend_from_slice(&replacement);
                    } else if x == -l {
                        out.extend(invert(&replacement));
                    } else {
                        out.push(x);
                    }
                }
                *other = free_reduce(&out);
            }
            renumber_without(&mut relators, g, &mut gens);
            moves += 1;
            continue 'outer;
        }
        break;
    }
    let out = GroupPresentation {
        generator_count: gens,
        relators,
    };
    check_letters(&out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn pres(gens: usize, rels: &[&[i64]]) -> GroupPresentation {
        GroupPresentation {
            generator_count: gens,
            relators: rels.iter().map(|r| r.to_vec()).collect(),
        }
    }

    #[test]
    fn trivial_relator_kills_generator() {
        let p = tietze_simplify(&pres(1, &[&[1]]), 100);
        assert_eq!(p.generator_count, 0);
        assert!(p.relators.is_empty());
    }

    #[test]
    fn drop_generator_with_own_relator() {
        // <a, b | b> -> <a | >
        let p = tietze_simplify(&pres(2, &[&[2]]), 100);
        assert_eq!(p.generator_count, 1);
        assert!(p.is_free());
    }

    #[test]
    fn abelianization_of_torus_group() {
        // <a,b | aba^-1 b^-1>
        let ab = pres(2, &[&[1, 2, -1, -2]]).abelianization();
        assert_eq!(ab.free_rank, 2);
        assert!(ab.torsion.is_empty());
    }

    #[test]
    fn abelianization_of_klein_group() {
        // <a,b | abab^-1>
        let ab = pres(2, &[&[1, 2, 1, -2]]).abelianization();
        assert_eq!(ab.free_rank, 1);
        assert_eq!(ab.torsion, vec![BigInt::from(2)]);
    }

    #[test]
    fn abelianization_of_trivial_presentation() {
        let ab = pres(0, &[]).abelianization();
        assert_eq!(ab.free_rank, 0);
        assert!(ab.torsion.is_empty());
    }

    #[test]
    fn tietze_preserves_abelianization() {
        let p = pres(3, &[&[1, 2, -3], &[3, 3, -2], &[2, -1, -1]]);
        let q = tietze_simplify(&p, 1000);
        assert_eq!(p.abelianization(), q.abelianization());
    }

    #[test]
    fn seven_vertex_torus_presentation() {
        // Csaszar torus: vertices Z/7, triangles {i,i+1,i+3} and {i,i+2,i+3}
        let mut triangles = Vec::new();
        for i in 0..7usize {
            let mut a = [i, (i + 1) % 7, (i + 3) % 7];
            a.sort_unstable();
            triangles.push((a[0], a[1], a[2]));
            let mut b = [i, (i + 2) % 7, (i + 3) % 7];
            b.sort_unstable();
            triangles.push((b[0], b[1], b[2]));
        }
        let vertices: BTreeSet<usize> = (0..7).collect();
        let edges: BTreeSet<(usize, usize)> = (0..7)
            .flat_map(|u| ((u + 1)..7).map(move |v| (u, v)))
            .collect();
        let p = pi1_presentation_from_skeleton(&vertices, &edges, &triangles, 0).unwrap();
        assert_eq!(p.generator_count, 15); // 21 edges minus 6 tree edges
        assert_eq!(p.relators.len(), 14);
        let q = tietze_simplify(&p, 10_000);
        assert_eq!(q.generator_count, 2, "reduced torus presentation: {q:?}");
        assert_eq!(q.relators.len(), 1);
        let ab = q.abelianization();
        assert_eq!(ab.free_rank, 2);
        assert!(ab.torsion.is_empty());
    }

    #[test]
    fn free_reduction() {
        assert_eq!(free_reduce(&[1, -1, 2]), vec![2]);
        assert_eq!(cyclic_reduce(vec![1, 2, -1]), vec![2]);
    }
}
