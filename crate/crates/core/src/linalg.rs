//! Exact linear algebra over the supported fields, plus lattice spanning
//! checks over the integers.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::coeff::{Coeff, Domain};
use crate::error::Result;

/// Sparse vector keyed by coordinate index.
pub type SparseVec = BTreeMap<usize, Coeff>;

fn axpy(v: &mut SparseVec, c: &Coeff, row: &SparseVec) {
    for (&k, r) in row {
        let t = c.mul(r);
        match v.entry(k) {
            std::collections::btree_map::Entry::Vacant(e) => {
                if !t.is_zero() {
                    e.insert(t);
                }
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add(&t);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }
}

struct PivotRow {
    row: SparseVec,
    combo: SparseVec,
}

/// Incrementally built row echelon form over a field.
///
/// Every inserted vector is reduced against the stored pivots; pivot rows
/// have leading coefficient 1 at their smallest coordinate. Optionally
/// tracks how each pivot row is combined from the inserted vectors, which
/// [`Echelon::solve`] uses.
pub struct Echelon {
    domain: Domain,
    pivots: HashMap<usize, PivotRow>,
    inserted: usize,
}

impl Echelon {
    pub fn new(domain: Domain) -> Result<Echelon> {
        domain.require_field()?;
        Ok(Echelon {
            domain,
            pivots: HashMap::new(),
            inserted: 0,
        })
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    fn reduce_tracked(&self, mut v: SparseVec, mut combo: SparseVec) -> (SparseVec, SparseVec) {
        let mut cursor = 0usize;
        while let Some((&k, c)) = v.range(cursor..).next() {
            if let Some(p) = self.pivots.get(&k) {
                let c = c.neg();
                axpy(&mut v, &c, &p.row);
                axpy(&mut combo, &c, &p.combo);
            } else {
                cursor = k + 1;
            }
        }
        (v, combo)
    }

    /// Remainder of `v` modulo the current span.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        self.reduce_tracked(v.clone(), SparseVec::new()).0
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    /// Inserts `v`; returns whether it enlarged the span.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let mut combo = SparseVec::new();
        combo.insert(self.inserted, self.domain.one());
        self.inserted += 1;
        let (r, combo) = self.reduce_tracked(v.clone(), combo);
        match r.iter().next() {
            None => false,
            Some((&k, lead)) => {
                let inv = lead.inv().expect("field element is invertible");
                let row = r.iter().map(|(&i, c)| (i, c.mul(&inv))).collect();
                let combo = combo.iter().map(|(&i, c)| (i, c.mul(&inv))).collect();
                self.pivots.insert(k, PivotRow { row, combo });
                true
            }
        }
    }

    /// Expresses `target` as a combination of the inserted vectors (indexed
    /// by insertion order), if it lies in the span.
    pub fn solve(&self, target: &SparseVec) -> Option<SparseVec> {
        let (r, combo) = self.reduce_tracked(target.clone(), SparseVec::new());
        if !r.is_empty() {
            return None;
        }
        Some(combo.into_iter().map(|(k, c)| (k, c.neg())).filter(|(_, c)| !c.is_zero()).collect())
    }
}

/// Rank of a list of sparse vectors over a field.
pub fn rank(domain: Domain, rows: &[SparseVec]) -> Result<usize> {
    let mut e = Echelon::new(domain)?;
    for r in rows {
        e.insert(r);
    }
    Ok(e.rank())
}

/// Dense helper: converts a dense row into a sparse one.
pub fn sparse(row: &[Coeff]) -> SparseVec {
    row.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

/// Integer row reduction (Hermite-style, via repeated gcd steps).
///
/// Returns the absolute values of the pivots of an echelon form of the row
/// lattice. The rows span `Z^dim` exactly when there are `dim` pivots, all
/// equal to one.
pub fn integer_pivots(rows: &[Vec<BigInt>], dim: usize) -> Vec<BigInt> {
    let mut rows: Vec<Vec<BigInt>> = rows
        .iter()
        .filter(|r| r.iter().any(|c| !c.is_zero()))
        .cloned()
        .collect();
    let mut pivots = Vec::new();
    let mut top = 0usize;
    for col in 0..dim {
        loop {
            // smallest nonzero entry at or below `top` in this column
            let best = (top..rows.len())
                .filter(|&i| !rows[i][col].is_zero())
                .min_by(|&a, &b| rows[a][col].abs().cmp(&rows[b][col].abs()));
            let Some(b) = best else { break };
            rows.swap(top, b);
            let mut done = true;
            for i in top + 1..rows.len() {
                if rows[i][col].is_zero() {
                    continue;
                }
                let q = rows[i][col].div_floor(&rows[top][col]);
                let pivot_row = rows[top].clone();
                for (x, y) in rows[i].iter_mut().zip(pivot_row.iter()) {
                    *x -= &q * y;
                }
                if !rows[i][col].is_zero() {
                    done = false;
                }
            }
            if done {
                pivots.push(rows[top][col].abs());
                top += 1;
                break;
            }
        }
        if top == rows.len() {
            break;
        }
    }
    pivots
}

/// Whether the integer rows span all of `Z^dim`.
pub fn spans_integer_lattice(rows: &[Vec<BigInt>], dim: usize) -> bool {
    let p = integer_pivots(rows, dim);
    p.len() == dim && p.iter().all(|x| x.is_one())
}

/// Determinant of a square integer matrix via fraction-free elimination.
pub fn integer_determinant(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> Coeff {
        Coeff::from_i64(Domain::Rational, v)
    }

    fn z(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn rank_and_membership() {
        let rows = vec![sparse(&[q(1), q(2), q(0)]), sparse(&[q(2), q(4), q(0)]), sparse(&[q(0), q(1), q(1)])];
        assert_eq!(rank(Domain::Rational, &rows).unwrap(), 2);
        let mut e = Echelon::new(Domain::Rational).unwrap();
        for r in &rows {
            e.insert(r);
        }
        assert!(e.contains(&sparse(&[q(1), q(3), q(1)])));
        assert!(!e.contains(&sparse(&[q(0), q(0), q(1)])));
    }

    #[test]
    fn solve_returns_combination() {
        let mut e = Echelon::new(Domain::Rational).unwrap();
        e.insert(&sparse(&[q(1), q(1)]));
        e.insert(&sparse(&[q(1), q(-1)]));
        let sol = e.solve(&sparse(&[q(3), q(1)])).unwrap();
        assert_eq!(sol.get(&0), Some(&q(2)));
        assert_eq!(sol.get(&1), Some(&q(1)));
    }

    #[test]
    fn rank_depends_on_characteristic() {
        let d = Domain::Prime(2);
        let c = |v| Coeff::from_i64(d, v);
        let rows = vec![sparse(&[c(1), c(1)]), sparse(&[c(1), c(-1)])];
        assert_eq!(rank(d, &rows).unwrap(), 1);
    }

    #[test]
    fn integer_requires_field() {
        assert!(Echelon::new(Domain::Integer).is_err());
    }

    #[test]
    fn lattice_spanning() {
        assert!(spans_integer_lattice(&z(&[&[2, 3], &[1, 1]]), 2));
        assert!(!spans_integer_lattice(&z(&[&[2, 0], &[0, 1]]), 2));
        assert!(spans_integer_lattice(&z(&[&[2, 0], &[3, 0], &[0, 1]]), 2));
        assert!(!spans_integer_lattice(&z(&[&[1, 1]]), 2));
    }

    #[test]
    fn determinants() {
        assert_eq!(integer_determinant(&z(&[&[2, 3], &[1, 1]])), BigInt::from(-1));
        assert_eq!(integer_determinant(&z(&[&[0, 1, 2], &[1, 0, 3], &[4, -3, 8]])), BigInt::from(-2));
    }
}
