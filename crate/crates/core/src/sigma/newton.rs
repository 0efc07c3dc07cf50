//! Elementary symmetric functions of powers in terms of elementary
//! symmetric functions.

use std::collections::BTreeMap;

use crate::coeff::{Coeff, Domain};
use crate::error::{Error, Result};
use crate::linalg::{Echelon, SparseVec};
use crate::poly::{Monomial, Poly};
use crate::word::Word;

use super::esym::{ESymbol, ESymbolPoly};

/// `e_j(y_1, …, y_n)` for monomials `y_i`, in the variables `0..n`.
fn elementary_of(ys: &[Monomial], j: usize, domain: Domain) -> Poly {
    let mut e = vec![Poly::zero(domain); j + 1];
    e[0] = Poly::one(domain);
    for (i, y) in ys.iter().enumerate() {
        for k in (1..=j.min(i + 1)).rev() {
            let add = e[k - 1].mul_monomial(y);
            e[k] = &e[k] + &add;
        }
    }
    e.swap_remove(j)
}

/// Exponent vectors `(a_1..a_n)` with `Σ i·a_i = d`.
fn weighted_vectors(n: usize, d: u32) -> Vec<Vec<u32>> {
    fn rec(i: usize, n: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i > n {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for a in 0..=left / i as u32 {
            cur.push(a);
            rec(i + 1, n, left - a * i as u32, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, n, d, &mut Vec::new(), &mut out);
    out
}

/// The unique integer polynomial `f` in `e_1..e_n` (variable `i-1` stands
/// for `e_i`) with `e_j(x_1^k, …, x_n^k) = f(e_1(x), …, e_n(x))`.
///
/// Found by solving in the monomial symmetric coordinates over the
/// rationals; the solution is checked to be integral.
pub fn newton_polynomial(j: usize, k: u32, n: usize) -> Result<Poly> {
    if j == 0 || j > n {
        return Err(Error::InvalidArgument(format!("need 1 <= j <= n = {n}, got j = {j}")));
    }
    if k == 0 {
        return Err(Error::InvalidArgument("k must be positive".into()));
    }
    let q = Domain::Rational;
    let xs: Vec<Monomial> = (0..n as u32).map(Monomial::var).collect();
    let powers: Vec<Monomial> = xs.iter().map(|x| x.pow(k)).collect();
    let target = elementary_of(&powers, j, q);
    let elem: Vec<Poly> = (1..=n).map(|i| elementary_of(&xs, i, q)).collect();

    // coordinates: coefficients at monomials with nonincreasing exponents
    let mut index: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
    let mut coords = |p: &Poly| -> SparseVec {
        let mut v = SparseVec::new();
        for (m, c) in p.terms() {
            let exps: Vec<u32> = (0..n as u32).map(|i| m.exponent(i)).collect();
            if exps.windows(2).all(|w| w[0] >= w[1]) {
                let next = index.len();
                let i = *index.entry(exps).or_insert(next);
                v.insert(i, c.clone());
            }
        }
        v
    };
    let basis = weighted_vectors(n, j as u32 * k);
    let mut ech = Echelon::new(q)?;
    for a in &basis {
        let mut prod = Poly::one(q);
        for (i, &e) in a.iter().enumerate() {
            prod = &prod * &elem[i].pow(e);
        }
        ech.insert(&coords(&prod));
    }
    let sol = ech
        .solve(&coords(&target))
        .ok_or_else(|| Error::InvalidArgument("target is not symmetric".into()))?;
    let z = Domain::Integer;
    let mut out = Poly::zero(z);
    for (i, c) in sol {
        let c = c
            .to_bigint()
            .ok_or_else(|| Error::InvalidArgument(format!("non-integral coefficient {c}")))?;
        out.add_term(Monomial::from_exponents(&basis[i]), Coeff::from_bigint(z, &c));
    }
    Ok(out)
}

/// `e_j(w^k) − f(e_1(w), …, e_n(w))` with `f` from [`newton_polynomial`];
/// a kernel element over the integers.
pub fn newton_relation(j: usize, k: u32, w: &Word, n: usize) -> Result<ESymbolPoly> {
    let f = newton_polynomial(j, k, n)?;
    let z = Domain::Integer;
    let mut out = ESymbolPoly::symbol(n, j, &w.pow(k), z)?;
    for (m, c) in f.terms() {
        let mut mono = Vec::new();
        for &(v, e) in m.pairs() {
            for _ in 0..e {
                mono.push(ESymbol {
                    word: w.clone(),
                    r: v as usize + 1,
                });
            }
        }
        out.add_term(mono, c.neg())?;
    }
    Ok(out)
}
