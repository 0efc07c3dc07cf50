//! Multigraded Hilbert series of the invariant rings: by counting basis
//! multisets and by Molien's formula, plus truncated series arithmetic.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::invariants::invariant_dimension;
use crate::partitions::{cycles, permutations};
use crate::word::multidegrees_up_to;

/// How a [`HilbertTable`] was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum HilbertMethod {
    Count,
    Molien,
}

impl fmt::Display for HilbertMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HilbertMethod::Count => write!(f, "count"),
            HilbertMethod::Molien => write!(f, "molien"),
        }
    }
}

/// Dimensions of the multihomogeneous components of degree at most
/// `truncation`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertTable {
    pub n: usize,
    pub q: u32,
    pub m: usize,
    pub truncation: u32,
    pub method: HilbertMethod,
    #[serde(serialize_with = "serialize_dims")]
    pub dims: BTreeMap<Vec<u32>, u64>,
}

fn serialize_dims<S: serde::Serializer>(
    dims: &BTreeMap<Vec<u32>, u64>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(dims.len()))?;
    for (a, d) in ordered(dims) {
        seq.serialize_element(&(a, d))?;
    }
    seq.end()
}

// graded order: total degree, then descending lexicographic
fn ordered(dims: &BTreeMap<Vec<u32>, u64>) -> Vec<(&Vec<u32>, &u64)> {
    let mut v: Vec<_> = dims.iter().collect();
    v.sort_by(|a, b| {
        let da: u32 = a.0.iter().sum();
        let db: u32 = b.0.iter().sum();
        da.cmp(&db).then_with(|| b.0.cmp(a.0))
    });
    v
}

impl HilbertTable {
    /// Dimension at `alpha`; `None` beyond the truncation.
    pub fn get(&self, alpha: &[u32]) -> Option<u64> {
        self.dims.get(alpha).copied()
    }

    /// Multidegrees in graded order with their dimensions.
    pub fn entries(&self) -> Vec<(Vec<u32>, u64)> {
        ordered(&self.dims).into_iter().map(|(a, d)| (a.clone(), *d)).collect()
    }

    /// Whether the two tables agree on every multidegree both contain.
    pub fn agrees_with(&self, other: &HilbertTable) -> bool {
        self.dims
            .iter()
            .all(|(a, d)| other.dims.get(a).is_none_or(|e| e == d))
    }

    pub fn series(&self) -> MultiSeries {
        MultiSeries {
            m: self.m,
            truncation: self.truncation,
            coeffs: self
                .dims
                .iter()
                .filter(|(_, d)| **d != 0)
                .map(|(a, d)| (a.clone(), BigInt::from(*d)))
                .collect(),
        }
    }

    /// Text table, one multidegree per line.
    pub fn to_text(&self) -> String {
        let mut s = format!(
            "hilbert n={} q={} m={} truncation={} method={}\n",
            self.n, self.q, self.m, self.truncation, self.method
        );
        for (a, d) in ordered(&self.dims) {
            let a: Vec<String> = a.iter().map(u32::to_string).collect();
            s.push_str(&format!("({}) {}\n", a.join(","), d));
        }
        s
    }
}

/// Component dimensions by counting multisets of words of height at most
/// `n` (a basis of each component).
pub fn hilbert_count(n: usize, q: u32, m: usize, truncation: u32) -> HilbertTable {
    let alphas = multidegrees_up_to(m, truncation);
    let dims = alphas
        .par_iter()
        .map(|a| (a.clone(), invariant_dimension(n, q, a) as u64))
        .collect();
    HilbertTable {
        n,
        q,
        m,
        truncation,
        method: HilbertMethod::Count,
        dims,
    }
}

/// Molien's formula: the average over the `n!·q^n` elements `g` of
/// `Π_i 1/det(I − t_i g)`, expanded to the truncation. Only `q ∈ {1, 2}`,
/// where all group entries are `±1`.
pub fn molien(n: usize, q: u32, m: usize, truncation: u32) -> Result<HilbertTable> {
    if q == 0 || q > 2 {
        return Err(Error::Unsupported(format!(
            "Molien series needs q in {{1, 2}}, got q = {q}"
        )));
    }
    if n == 0 || m == 0 {
        return Err(Error::InvalidArgument("n and m must be positive".into()));
    }
    let d = truncation as usize;
    let sign_vectors: Vec<Vec<bool>> = if q == 1 {
        vec![vec![false; n]]
    } else {
        (0..1u64 << n).map(|b| (0..n).map(|i| b >> i & 1 == 1).collect()).collect()
    };
    // univariate series of 1/det(I − t g) for each group element
    let mut per_element: Vec<Vec<BigInt>> = Vec::new();
    for perm in permutations(n) {
        let cyc = cycles(&perm);
        for signs in &sign_vectors {
            let mut f = vec![BigInt::zero(); d + 1];
            f[0] = BigInt::one();
            for c in &cyc {
                // a cycle with sign product ε contributes 1/(1 − ε t^len)
                let neg = c.iter().filter(|&&i| signs[i]).count() % 2 == 1;
                let len = c.len();
                let mut g = vec![BigInt::zero(); d + 1];
                for (k, e) in (0..=d).step_by(len).enumerate() {
                    g[e] = if neg && k % 2 == 1 { -BigInt::one() } else { BigInt::one() };
                }
                f = mul_univariate(&f, &g);
            }
            per_element.push(f);
        }
    }
    let order = BigInt::from(per_element.len());
    let alphas = multidegrees_up_to(m, truncation);
    let dims: Result<BTreeMap<Vec<u32>, u64>> = alphas
        .par_iter()
        .map(|a| {
            let mut total = BigInt::zero();
            for f in &per_element {
                let mut p = BigInt::one();
                for &e in a {
                    p *= &f[e as usize];
                }
                total += p;
            }
            let (quo, rem) = total.div_rem(&order);
            if !rem.is_zero() {
                return Err(Error::InvalidArgument(format!("group average not integral at {a:?}")));
            }
            let v = u64::try_from(quo).map_err(|_| Error::InvalidArgument("negative dimension".into()))?;
            Ok((a.clone(), v))
        })
        .collect();
    Ok(HilbertTable {
        n,
        q,
        m,
        truncation,
        method: HilbertMethod::Molien,
        dims: dims?,
    })
}

fn mul_univariate(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let d = a.len() - 1;
    let mut out = vec![BigInt::zero(); d + 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(d + 1 - i) {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

/// A power series in `t_1..t_m` with integer coefficients, truncated at
/// a total degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiSeries {
    pub m: usize,
    pub truncation: u32,
    coeffs: BTreeMap<Vec<u32>, BigInt>,
}

impl MultiSeries {
    pub fn zero(m: usize, truncation: u32) -> MultiSeries {
        MultiSeries {
            m,
            truncation,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(m: usize, truncation: u32) -> MultiSeries {
        MultiSeries::from_terms(m, truncation, [(vec![0; m], 1)])
    }

    /// Builds a polynomial from `(exponent vector, coefficient)` pairs,
    /// dropping terms beyond the truncation.
    pub fn from_terms<I: IntoIterator<Item = (Vec<u32>, i64)>>(m: usize, truncation: u32, terms: I) -> MultiSeries {
        let mut s = MultiSeries::zero(m, truncation);
        for (e, c) in terms {
            s.add_term(e, BigInt::from(c));
        }
        s
    }

    fn add_term(&mut self, e: Vec<u32>, c: BigInt) {
        assert_eq!(e.len(), self.m, "exponent vector length");
        if e.iter().sum::<u32>() > self.truncation || c.is_zero() {
            return;
        }
        let v = self.coeffs.entry(e.clone()).or_insert_with(BigInt::zero);
        *v += c;
        if v.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    pub fn coeff(&self, e: &[u32]) -> BigInt {
        self.coeffs.get(e).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn mul(&self, other: &MultiSeries) -> MultiSeries {
        let t = self.truncation.min(other.truncation);
        let mut out = MultiSeries::zero(self.m, t);
        for (a, x) in &self.coeffs {
            for (b, y) in &other.coeffs {
                let e: Vec<u32> = a.iter().zip(b).map(|(u, v)| u + v).collect();
                out.add_term(e, x * y);
            }
        }
        out
    }

    /// Multiplies by `1 − t^e`.
    pub fn mul_one_minus(&self, e: &[u32]) -> MultiSeries {
        let mut out = self.clone();
        for (a, x) in &self.coeffs {
            let s: Vec<u32> = a.iter().zip(e).map(|(u, v)| u + v).collect();
            out.add_term(s, -x.clone());
        }
        out
    }

    /// Divides by `1 − t^e`, `e ≠ 0`, through the geometric series.
    pub fn div_one_minus(&self, e: &[u32]) -> MultiSeries {
        assert!(e.iter().any(|&x| x > 0), "cannot divide by 1 - 1");
        let mut out = MultiSeries::zero(self.m, self.truncation);
        for (a, x) in &self.coeffs {
            let mut s = a.clone();
            while s.iter().sum::<u32>() <= self.truncation {
                out.add_term(s.clone(), x.clone());
                for (u, v) in s.iter_mut().zip(e) {
                    *u += v;
                }
            }
        }
        out
    }

    /// The series truncated further.
    pub fn truncate(&self, d: u32) -> MultiSeries {
        let mut out = MultiSeries::zero(self.m, d.min(self.truncation));
        for (a, x) in &self.coeffs {
            out.add_term(a.clone(), x.clone());
        }
        out
    }

    /// Coefficients inside the box `e_i ≤ bound_i`.
    pub fn restrict_box(&self, bound: &[u32]) -> BTreeMap<Vec<u32>, BigInt> {
        self.coeffs
            .iter()
            .filter(|(a, _)| a.iter().zip(bound).all(|(x, b)| x <= b))
            .map(|(a, x)| (a.clone(), x.clone()))
            .collect()
    }
}

/// `H · Π_p (1 − t^{mdeg p})`: the series that must equal the generating
/// function of the secondary generators when the ring is free over the
/// primary ones.
pub fn hironaka_numerator(table: &HilbertTable, primary_multidegrees: &[Vec<u32>]) -> MultiSeries {
    let mut s = table.series();
    for e in primary_multidegrees {
        s = s.mul_one_minus(e);
    }
    s
}

/// `Σ_s t^{mdeg s}` as a truncated series.
pub fn generating_function(m: usize, truncation: u32, multidegrees: &[Vec<u32>]) -> MultiSeries {
    MultiSeries::from_terms(m, truncation, multidegrees.iter().map(|e| (e.clone(), 1)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn count_examples() {
        let t = hilbert_count(2, 1, 2, 4);
        assert_eq!(t.get(&[1, 1]), Some(2));
        assert_eq!(t.get(&[0, 0]), Some(1));
        assert_eq!(hilbert_count(2, 2, 2, 3).get(&[1, 0]), Some(0));
        assert_eq!(t.dims.len(), 15);
    }

    #[test]
    fn trivial_group_series() {
        let t = molien(1, 1, 1, 6).unwrap();
        assert!(t.dims.values().all(|&d| d == 1));
        assert!(molien(2, 3, 1, 4).is_err());
    }

    #[test]
    fn methods_agree() {
        for n in 1..=3 {
            for q in 1..=2 {
                for m in 1..=3 {
                    let d = if m == 3 { 6 } else { 8 };
                    let a = hilbert_count(n, q, m, d);
                    let b = molien(n, q, m, d).unwrap();
                    assert_eq!(a.dims, b.dims, "n={n} q={q} m={m}");
                }
            }
        }
    }

    #[test]
    fn two_point_closed_form() {
        // (1 + t1 t2) / ((1−t1)(1−t1²)(1−t2)(1−t2²))
        let d = 6;
        let mut s = MultiSeries::from_terms(2, d, [(vec![0, 0], 1), (vec![1, 1], 1)]);
        for e in [[1, 0], [2, 0], [0, 1], [0, 2]] {
            s = s.div_one_minus(&e);
        }
        assert_eq!(s, molien(2, 1, 2, d).unwrap().series());
    }

    #[test]
    fn series_arithmetic() {
        let one = MultiSeries::one(1, 5);
        let g = one.div_one_minus(&[2]);
        assert_eq!(g.coeff(&[4]), BigInt::from(1));
        assert_eq!(g.coeff(&[3]), BigInt::from(0));
        assert_eq!(g.mul_one_minus(&[2]), one);
        let sq = g.mul(&g);
        assert_eq!(sq.coeff(&[4]), BigInt::from(3));
        assert_eq!(sq.truncate(2).coeff(&[4]), BigInt::from(0));
    }

    #[test]
    fn table_text_is_graded() {
        let t = hilbert_count(2, 1, 2, 1);
        assert_eq!(t.to_text(), "hilbert n=2 q=1 m=2 truncation=1 method=count\n(0,0) 1\n(1,0) 1\n(0,1) 1\n");
    }
}
