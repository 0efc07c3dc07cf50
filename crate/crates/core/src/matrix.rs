//! Square matrices of polynomials, mostly generic matrices whose entries
//! are independent variables.

use crate::coeff::Domain;
use crate::error::{Error, Result};
use crate::poly::Poly;

/// An `n × n` matrix with polynomial entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenericMatrix {
    size: usize,
    entries: Vec<Poly>,
}

impl GenericMatrix {
    /// The generic matrix whose `(a, b)` entry is the variable
    /// `offset + a·n + b`.
    pub fn generic(domain: Domain, size: usize, offset: u32) -> GenericMatrix {
        let entries = (0..size * size)
            .map(|k| Poly::var(domain, offset + k as u32))
            .collect();
        GenericMatrix { size, entries }
    }

    /// Generic matrices `Y(1), …, Y(count)` on disjoint variable blocks.
    pub fn generic_family(domain: Domain, size: usize, count: usize) -> Vec<GenericMatrix> {
        (0..count)
            .map(|k| GenericMatrix::generic(domain, size, (k * size * size) as u32))
            .collect()
    }

    pub fn from_entries(size: usize, entries: Vec<Poly>) -> Result<GenericMatrix> {
        if entries.len() != size * size {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {size}x{size} matrix",
                entries.len()
            )));
        }
        Ok(GenericMatrix { size, entries })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn entry(&self, a: usize, b: usize) -> &Poly {
        &self.entries[a * self.size + b]
    }

    pub fn mul(&self, other: &GenericMatrix) -> Result<GenericMatrix> {
        if self.size != other.size {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.size, self.size, other.size, other.size
            )));
        }
        let n = self.size;
        let domain = self.entries[0].domain();
        let mut entries = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let mut acc = Poly::zero(domain);
                for k in 0..n {
                    acc = &acc + &(self.entry(a, k) * other.entry(k, b));
                }
                entries.push(acc);
            }
        }
        Ok(GenericMatrix { size: n, entries })
    }

    pub fn trace(&self) -> Poly {
        let domain = self.entries[0].domain();
        (0..self.size).fold(Poly::zero(domain), |acc, a| &acc + self.entry(a, a))
    }
}

/// Trace of `mats[word[0]] · mats[word[1]] ⋯` (0-based matrix indices).
pub fn matrix_word_trace(word: &[usize], mats: &[GenericMatrix]) -> Result<Poly> {
    let first = *word
        .first()
        .ok_or_else(|| Error::InvalidArgument("empty matrix word".into()))?;
    let get = |i: usize| {
        mats.get(i)
            .ok_or_else(|| Error::InvalidArgument(format!("matrix index {i} out of range")))
    };
    let mut acc = get(first)?.clone();
    for &i in &word[1..] {
        acc = acc.mul(get(i)?)?;
    }
    Ok(acc.trace())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_by_one_product() {
        let mats = GenericMatrix::generic_family(Domain::Rational, 1, 2);
        let t = matrix_word_trace(&[0, 1], &mats).unwrap();
        assert_eq!(t, &Poly::var(Domain::Rational, 0) * &Poly::var(Domain::Rational, 1));
    }

    #[test]
    fn trace_is_cyclic() {
        let mats = GenericMatrix::generic_family(Domain::Rational, 2, 3);
        assert_eq!(
            matrix_word_trace(&[0, 1], &mats).unwrap(),
            matrix_word_trace(&[1, 0], &mats).unwrap()
        );
        assert_eq!(
            matrix_word_trace(&[0, 1, 2], &mats).unwrap(),
            matrix_word_trace(&[2, 0, 1], &mats).unwrap()
        );
    }

    #[test]
    fn single_trace() {
        let mats = GenericMatrix::generic_family(Domain::Rational, 2, 1);
        let expect = &Poly::var(Domain::Rational, 0) + &Poly::var(Domain::Rational, 3);
        assert_eq!(matrix_word_trace(&[0], &mats).unwrap(), expect);
    }

    #[test]
    fn size_mismatch() {
        let a = GenericMatrix::generic(Domain::Rational, 2, 0);
        let b = GenericMatrix::generic(Domain::Rational, 3, 4);
        assert!(matches!(a.mul(&b), Err(Error::DimensionMismatch(_))));
    }
}
