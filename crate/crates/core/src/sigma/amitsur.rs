//! Amitsur's formula for the characteristic coefficients of a sum of
//! diagonal matrices, and the kernel elements it produces.

use num_bigint::BigInt;

use crate::coeff::{factorial, Coeff, Domain};
use crate::error::{Error, Result};
use crate::poly::{Poly, VarContext};
use crate::word::{enumerate_words, Word, WordBound};

use super::esym::{ESymbol, ESymbolPoly};
use super::necklace::ClassCounter;

/// The number of multisets of distinct primitive cyclic classes, the class
/// over `u_i` taken with multiplicity `r_i`, specialising to the given
/// `(r_i, u_i)` pairs.
pub fn amitsur_coefficient(pairs: &[(usize, Word)]) -> BigInt {
    amitsur_coefficient_with(pairs, &mut ClassCounter::new())
}

fn amitsur_coefficient_with(pairs: &[(usize, Word)], counter: &mut ClassCounter) -> BigInt {
    let mut sorted: Vec<&(usize, Word)> = pairs.iter().collect();
    sorted.sort_by(|a, b| a.1.cmp(&b.1).then(a.0.cmp(&b.0)));
    let mut total = BigInt::from(1);
    let mut i = 0;
    while i < sorted.len() {
        let u = &sorted[i].1;
        let mut j = i;
        let mut chosen = 0usize;
        let mut denom = BigInt::from(1);
        // runs of equal r within the same u
        while j < sorted.len() && &sorted[j].1 == u {
            let r = sorted[j].0;
            let mut k = j;
            while k < sorted.len() && &sorted[k].1 == u && sorted[k].0 == r {
                k += 1;
            }
            denom *= factorial((k - j) as u64);
            chosen += k - j;
            j = k;
        }
        let classes = counter.count(u.exponents());
        if chosen > classes {
            return BigInt::from(0);
        }
        total *= factorial(classes as u64) / (denom * factorial((classes - chosen) as u64));
        i = j;
    }
    total
}

/// Multisets of `(r, u)` pairs with `Σ r·mdeg(u) = alpha` and `r ≤ max_r`.
pub(crate) fn pair_multisets(alpha: &[u32], max_r: usize) -> Vec<Vec<(usize, Word)>> {
    let words = enumerate_words(alpha.len(), 1, &WordBound::Dividing(alpha.to_vec()));
    let mut cands: Vec<(usize, Word)> = Vec::new();
    for w in &words {
        for r in 1..=max_r {
            if w.exponents().iter().zip(alpha).all(|(e, a)| e * r as u32 <= *a) {
                cands.push((r, w.clone()));
            }
        }
    }
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(
        left: &mut Vec<u32>,
        start: usize,
        cands: &[(usize, Word)],
        cur: &mut Vec<(usize, Word)>,
        out: &mut Vec<Vec<(usize, Word)>>,
    ) {
        if left.iter().all(|&e| e == 0) {
            out.push(cur.clone());
            return;
        }
        for k in start..cands.len() {
            let (r, w) = &cands[k];
            let r = *r as u32;
            if !w.exponents().iter().zip(left.iter()).all(|(e, l)| e * r <= *l) {
                continue;
            }
            for (l, e) in left.iter_mut().zip(w.exponents()) {
                *l -= e * r;
            }
            cur.push(cands[k].clone());
            rec(left, k, cands, cur, out);
            cur.pop();
            for (l, e) in left.iter_mut().zip(w.exponents()) {
                *l += e * r;
            }
        }
    }
    rec(&mut alpha.to_vec(), 0, &cands, &mut cur, &mut out);
    out
}

/// The multidegree-`alpha` component of the `l`-th characteristic
/// coefficient of `x(1) + ⋯ + x(s)`, written through Amitsur's formula in
/// the symbols `e_r(u)` (over the integers; symbols with `r > n` vanish).
pub fn amitsur_component(l: usize, alpha: &[u32], n: usize) -> Result<ESymbolPoly> {
    let total: u32 = alpha.iter().sum();
    if alpha.is_empty() || total == 0 {
        return Err(Error::InvalidArgument("multidegree must be nonzero".into()));
    }
    if total as usize != l {
        return Err(Error::DimensionMismatch(format!(
            "l = {l} but the multidegree has total degree {total}"
        )));
    }
    let domain = Domain::Integer;
    let mut counter = ClassCounter::new();
    let mut out = ESymbolPoly::zero(n, alpha.len(), domain);
    for pm in pair_multisets(alpha, n) {
        let c = amitsur_coefficient_with(&pm, &mut counter);
        if c == BigInt::from(0) {
            continue;
        }
        let rsum: usize = pm.iter().map(|p| p.0).sum();
        let c = if (l + rsum) % 2 == 1 { -c } else { c };
        let mono = pm.into_iter().map(|(r, word)| ESymbol { word, r }).collect();
        out.add_term(mono, Coeff::from_bigint(domain, &c))?;
    }
    Ok(out)
}

/// The kernel element obtained from [`amitsur_component`] for `alpha`,
/// `Σ alpha > n`, by substituting the words `ws` for `x(1..s)`.
pub fn amitsur_relation(alpha: &[u32], ws: &[Word], n: usize) -> Result<ESymbolPoly> {
    if ws.len() != alpha.len() {
        return Err(Error::Arity {
            expected: alpha.len(),
            got: ws.len(),
        });
    }
    let l: u32 = alpha.iter().sum();
    if l as usize <= n {
        return Err(Error::InvalidArgument(format!(
            "the multidegree must have total degree > n = {n}, got {l}"
        )));
    }
    amitsur_component(l as usize, alpha, n)?.substitute_words(ws)
}

/// The multidegree-`alpha` component of `σ_l(x(1) + ⋯ + x(s))` for
/// diagonal `x(i)`, expanded directly in the slot variables over the
/// integers.
pub fn characteristic_component_direct(l: usize, alpha: &[u32], n: usize) -> Poly {
    let d = Domain::Integer;
    let s = alpha.len();
    let vars = VarContext::new(s, n);
    let z: Vec<Poly> = (1..=n)
        .map(|j| (1..=s).fold(Poly::zero(d), |acc, i| &acc + &vars.var(d, i as u32, j as u32)))
        .collect();
    let mut e = vec![Poly::zero(d); l + 1];
    e[0] = Poly::one(d);
    for zj in &z {
        for k in (1..=l).rev() {
            let add = &e[k - 1] * zj;
            e[k] = &e[k] + &add;
        }
    }
    vars.multihomogeneous_component(&e[l], alpha)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str, m: usize) -> Word {
        Word::parse(s, m).unwrap()
    }

    #[test]
    fn coefficient_examples() {
        assert_eq!(amitsur_coefficient(&[(1, w("x1^2*x2", 2))]), BigInt::from(1));
        assert_eq!(amitsur_coefficient(&[(1, w("x1*x2", 2))]), BigInt::from(1));
        assert_eq!(amitsur_coefficient(&[(2, w("x1*x2", 2))]), BigInt::from(1));
        // two distinct classes over x^2y^2? only one primitive class exists
        assert_eq!(amitsur_coefficient(&[(1, w("x1^2*x2^2", 2)), (1, w("x1^2*x2^2", 2))]), BigInt::from(0));
        // three classes over x^3y^3 (contents (3,3)); choose two of them
        let u = w("x1^3*x2^3", 2);
        assert_eq!(amitsur_coefficient(&[(1, u.clone()), (1, u.clone())]), BigInt::from(3));
        assert_eq!(amitsur_coefficient(&[(1, u.clone()), (2, u)]), BigInt::from(6));
    }

    #[test]
    fn component_two_letters() {
        let p = amitsur_component(2, &[1, 1], 2).unwrap();
        assert_eq!(p.to_string(), "e1(x1)*e1(x2) - e1(x1*x2)");
    }

    #[test]
    fn relation_single_slot() {
        let p = amitsur_relation(&[1, 1], &[w("x1", 2), w("x2", 2)], 1).unwrap();
        assert_eq!(p.to_string(), "e1(x1)*e1(x2) - e1(x1*x2)");
        assert!(p.evaluate().is_zero());
        assert!(amitsur_relation(&[1, 1], &[w("x1", 2)], 1).is_err());
        assert!(amitsur_relation(&[1, 1], &[w("x1", 2), w("x2", 2)], 2).is_err());
    }

    #[test]
    fn formula_matches_direct_expansion() {
        for n in 1..=3 {
            for s in 1..=2usize {
                for l in 1..=4u32 {
                    for a0 in 0..=l {
                        let alpha: Vec<u32> = if s == 1 {
                            if a0 != l {
                                continue;
                            }
                            vec![l]
                        } else {
                            vec![a0, l - a0]
                        };
                        let formula = amitsur_component(l as usize, &alpha, n).unwrap().evaluate();
                        assert_eq!(formula, characteristic_component_direct(l as usize, &alpha, n), "n={n} alpha={alpha:?}");
                    }
                }
            }
        }
        let formula = amitsur_component(3, &[2, 1], 3).unwrap().evaluate();
        assert_eq!(formula, characteristic_component_direct(3, &[2, 1], 3));
    }

    #[test]
    fn relations_vanish_when_total_exceeds_n() {
        for n in 1..=3usize {
            for a in 1..=3u32 {
                for b in 1..=3u32 {
                    if (a + b) as usize <= n {
                        continue;
                    }
                    let ws = [w("x1", 2), w("x1*x2", 2)];
                    let rel = amitsur_relation(&[a, b], &ws, n).unwrap();
                    assert!(rel.evaluate().is_zero(), "n={n} alpha=({a},{b})");
                }
            }
        }
    }
}
