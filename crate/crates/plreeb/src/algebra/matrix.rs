//! Sparse arbitrary-precision integer matrices and Smith normal form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use std::collections::{BTreeMap, BTreeSet};

/// Sparse integer matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BTreeMap<usize, BigInt>>,
}

impl IntegerMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntegerMatrix {
            rows,
            cols,
            data: vec![BTreeMap::new(); rows],
        }
    }

    pub fn from_dense(entries: &[Vec<i64>]) -> Self {
        let rows = entries.len();
        let cols = entries.first().map_or(0, |r| r.len());
        let mut m = IntegerMatrix::zero(rows, cols);
        for (i, row) in entries.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                if v != 0 {
                    m.set(i, j, BigInt::from(v));
                }
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        assert!(i < self.rows && j < self.cols);
        if v.is_zero() {
            self.data[i].remove(&j);
        } else {
            self.data[i].insert(j, v);
        }
    }

    pub fn get(&self, i: usize, j: usize) -> BigInt {
        self.data[i].get(&j).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add_to(&mut self, i: usize, j: usize, v: &BigInt) {
        if v.is_zero() {
            return;
        }
        let entry = self.data[i].entry(j).or_insert_with(BigInt::zero);
        *entry += v;
        if entry.is_zero() {
            self.data[i].remove(&j);
        }
    }

    pub fn row(&self, i: usize) -> &BTreeMap<usize, BigInt> {
        &self.data[i]
    }

    pub fn non_zero_count(&self) -> usize {
        self.data.iter().map(|r| r.len()).sum()
    }

    /// Matrix product, used by tests to assert that composed boundary
    /// operators vanish.
    pub fn multiply(&self, other: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = IntegerMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for (&k, v) in &self.data[i] {
                for (&j, w) in &other.data[k] {
                    out.add_to(i, j, &(v * w));
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.is_empty())
    }
}

struct SnfWork {
    rows: Vec<BTreeMap<usize, BigInt>>,
    /// column -> rows with a nonzero entry there
    col_index: Vec<BTreeSet<usize>>,
    row_active: Vec<bool>,
    col_active: Vec<bool>,
}

impl SnfWork {
    fn new(m: &IntegerMatrix) -> Self {
        let mut col_index = vec![BTreeSet::new(); m.cols];
        for (i, row) in m.data.iter().enumerate() {
            for &j in row.keys() {
                col_index[j].insert(i);
            }
        }
        SnfWork {
            rows: m.data.clone(),
            col_index,
            row_active: vec![true; m.rows],
            col_active: vec![true; m.cols],
        }
    }

    fn set(&mut self, i: usize, j: usize, v: BigInt) {
        if v.is_zero() {
            if self.rows[i].remove(&j).is_some() {
                self.col_index[j].remove(&i);
            }
        } else {
            if self.rows[i].insert(j, v).is_none() {
                self.col_index[j].insert(i);
            }
        }
    }

    fn get(&self, i: usize, j: usize) -> BigInt {
        self.rows[i].get(&j).cloned().unwrap_or_else(BigInt::zero)
    }

    /// row_i -= q * row_p
    fn row_sub(&mut self, i: usize, p: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        let updates: Vec<(usize, BigInt)> =
            self.rows[p].iter().map(|(&j, v)| (j, v * q)).collect();
        for (j, dv) in updates {
            let cur = self.get(i, j);
            self.set(i, j, cur - dv);
        }
    }

    /// col_j -= q * col_p
    fn col_sub(&mut self, j: usize, p: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        let rows: Vec<usize> = self.col_index[p].iter().copied().collect();
        for i in rows {
            let dv = self.rows[i][&p].clone() * q;
            let cur = self.get(i, j);
            self.set(i, j, cur - dv);
        }
    }

    fn min_abs_entry(&self) -> Option<(usize, usize)> {
        let mut best: Option<(BigInt, usize, usize)> = None;
        for (i, row) in self.rows.iter().enumerate() {
            if !self.row_active[i] {
                continue;
            }
            for (&j, v) in row {
                if !self.col_active[j] {
                    continue;
                }
                let a = v.abs();
                match &best {
                    Some((b, _, _)) if *b <= a => {}
                    _ => {
                        let unit = a == BigInt::from(1);
                        best = Some((a, i, j));
                        if unit {
                            return best.map(|(_, i, j)| (i, j));
                        }
                    }
                }
            }
        }
        best.map(|(_, i, j)| (i, j))
    }
}

/// Invariant factors d1 | d2 | ... | dr of an integer matrix, all positive.
/// `r` is the rank over the rationals; the product of the first k factors
/// equals the gcd of all k x k minors.
pub fn smith_normal_form(m: &IntegerMatrix) -> Vec<BigInt> {
    let mut w = SnfWork::new(m);
    let mut factors: Vec<BigInt> = Vec::new();
    while let Some((mut pr, mut pc)) = w.min_abs_entry() {
        'clean: loop {
            // clear the pivot column
            loop {
                let others: Vec<usize> = w.col_index[pc]
                    .iter()
                    .copied()
                    .filter(|&i| i != pr && w.row_active[i])
                    .collect();
                if others.is_empty() {
                    break;
                }
                let pivot = w.get(pr, pc);
                for i in others {
                    let v = w.get(i, pc);
                    if v.is_zero() {
                        continue;
                    }
                    let q = &v / &pivot;
                    w.row_sub(i, pr, &q);
                    if !w.get(i, pc).is_zero() {
                        // remainder is smaller than the pivot: switch to it
                        pr = i;
                        continue 'clean;
                    }
                }
            }
            // clear the pivot row
            loop {
                let others: Vec<usize> = w.rows[pr]
                    .keys()
                    .copied()
                    .filter(|&j| j != pc && w.col_active[j])
                    .collect();
                if others.is_empty() {
                    break;
                }
                let pivot = w.get(pr, pc);
                let mut switched = false;
                for j in others {
                    let v = w.get(pr, j);
                    if v.is_zero() {
                        continue;
                    }
                    let q = &v / &pivot;
                    w.col_sub(j, pc, &q);
                    if !w.get(pr, j).is_zero() {
                        pc = j;
                        switched = true;
                        break;
                    }
                }
                if switched {
                    continue 'clean;
                }
            }
            // row ops may have refilled the column
            let col_dirty = w.col_index[pc]
                .iter()
                .any(|&i| i != pr && w.row_active[i]);
            if col_dirty {
                continue 'clean;
            }
            // divisibility repair: pivot must divide every remaining entry
            let pivot = w.get(pr, pc);
            let mut offender: Option<usize> = None;
            'scan: for (i, row) in w.rows.iter().enumerate() {
                if !w.row_active[i] || i == pr {
                    continue;
                }
                for (&j, v) in row {
                    if w.col_active[j] && !(v % &pivot).is_zero() {
                        offender = Some(i);
                        break 'scan;
                    }
                }
            }
            match offender {
                Some(i) => {
                    // fold the offending row into the pivot row and restart
                    let one = BigInt::from(-1);
                    w.row_sub(pr, i, &one);
                    continue 'clean;
                }
                None => break 'clean,
            }
        }
        let pivot = w.get(pr, pc).abs();
        factors.push(pivot);
        w.row_active[pr] = false;
        w.col_active[pc] = false;
    }
    // the divisibility repair makes this a chain already; normalize defensively
    normalize_chain(&mut factors);
    factors
}

fn normalize_chain(factors: &mut [BigInt]) {
    let n = factors.len();
    loop {
        let mut changed = false;
        for i in 0..n {
            for j in i + 1..n {
                if !(factors[j].clone() % &factors[i]).is_zero() {
                    let g = factors[i].gcd(&factors[j]);
                    let l = &factors[i] / &g * &factors[j];
                    factors[i] = g;
                    factors[j] = l;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    factors.sort();
}

/// Rank of the matrix over the field with two elements.
pub fn rank_mod2(m: &IntegerMatrix) -> usize {
    // rows as sorted column sets, eliminated by symmetric difference
    let mut rows: Vec<BTreeSet<usize>> = m
        .data
        .iter()
        .map(|r| {
            r.iter()
                .filter(|(_, v)| v.is_odd())
                .map(|(&j, _)| j)
                .collect()
        })
        .collect();
    let mut pivots: BTreeMap<usize, usize> = BTreeMap::new(); // col -> row idx
    let mut rank = 0;
    for i in 0..rows.len() {
        loop {
            let lead = match rows[i].iter().next() {
                Some(&j) => j,
                None => break,
            };
            match pivots.get(&lead) {
                Some(&p) => {
                    let other = rows[p].clone();
                    rows[i] = rows[i].symmetric_difference(&other).copied().collect();
                }
                None => {
                    pivots.insert(lead, i);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    fn snf_i64(entries: &[Vec<i64>]) -> Vec<i64> {
        smith_normal_form(&IntegerMatrix::from_dense(entries))
            .iter()
            .map(|v| i64::try_from(v).unwrap())
            .collect()
    }

    #[test]
    fn identity_3x3() {
        assert_eq!(snf_i64(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]), [1, 1, 1]);
    }

    #[test]
    fn zero_matrix() {
        assert!(snf_i64(&[vec![0, 0], vec![0, 0]]).is_empty());
    }

    #[test]
    fn two_by_two() {
        // d1 = gcd of entries = 2, d1*d2 = |det| = |16 - 24| = 8
        assert_eq!(snf_i64(&[vec![2, 4], vec![6, 8]]), [2, 4]);
    }

    #[test]
    fn divisibility_chain() {
        let f = snf_i64(&[vec![2, 0, 0], vec![0, 3, 0], vec![0, 0, 4]]);
        assert_eq!(f, [1, 2, 12]);
    }

    #[test]
    fn rank2_simple() {
        let m = IntegerMatrix::from_dense(&[vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]]);
        // over GF(2) the three rows sum to zero
        assert_eq!(rank_mod2(&m), 2);
        assert_eq!(smith_normal_form(&m).len(), 3);
    }

    #[test]
    fn even_matrix_rank2() {
        let m = IntegerMatrix::from_dense(&[vec![2, 4], vec![6, 8]]);
        assert_eq!(rank_mod2(&m), 0);
    }
}
