//! A bounded generating set of the multisymmetric functions and the
//! uniform family of relations among the `σ_r(w)`.

use std::fmt;

use serde::Serialize;

use crate::coeff::Domain;
use crate::error::{Error, Result};
use crate::invariants::{invariant_dimension, to_orbit_basis, GroupContext};
use crate::linalg::{Echelon, SparseVec};
use crate::word::{enumerate_words, Word, WordBound};

use super::amitsur::{amitsur_relation, pair_multisets};
use super::esym::{mono_multidegree, EMonomial, ESymbol, ESymbolPoly};
use super::newton::newton_relation;

/// Generators `σ_r(w)` (as pairs `(r, w)`): every `σ_n(x(i))`, then every
/// `σ_r(x^α)` with `r·α_j < n` for all `j` and `gcd(α) = 1`.
pub fn bounded_generators(n: usize, m: usize) -> Vec<(usize, Word)> {
    let mut out: Vec<(usize, Word)> = (1..=m).map(|i| (n, Word::var(m, i))).collect();
    for r in 1..=n {
        // exponents strictly below n / r
        let cap = ((n - 1) / r) as u32;
        if cap == 0 {
            continue;
        }
        let words = enumerate_words(m, 1, &WordBound::Dividing(vec![cap; m]));
        out.extend(words.into_iter().filter(|w| w.content_gcd() == 1).map(|w| (r, w)));
    }
    out
}

/// Degree of the generator `σ_r(w)`.
pub fn generator_degree(g: &(usize, Word)) -> u32 {
    g.0 as u32 * g.1.degree()
}

/// Which construction produced a family member.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FamilyKind {
    /// Amitsur's formula for `alpha` with the words substituted.
    Amitsur { alpha: Vec<u32>, words: Vec<Word> },
    /// `e_r(w^k) − f(e_1(w), …, e_n(w))`.
    Newton { r: usize, k: u32, word: Word },
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyKind::Amitsur { alpha, words } => {
                let a: Vec<String> = alpha.iter().map(|x| x.to_string()).collect();
                let w: Vec<String> = words.iter().map(|x| x.to_string()).collect();
                write!(f, "S[{}]({})", a.join(","), w.join(", "))
            }
            FamilyKind::Newton { r, k, word } => write!(f, "Q[{r},{k}]({word})"),
        }
    }
}

/// One relation of the family with its provenance and degree.
#[derive(Clone, Debug)]
pub struct FamilyMember {
    pub kind: FamilyKind,
    pub degree: u32,
    pub multidegree: Vec<u32>,
    pub relation: ESymbolPoly,
}

/// All family members of evaluated degree at most `max_degree` over `m`
/// series: the Amitsur relations for `alpha` with at least two positive
/// parts, `Σ alpha > n` and `Σ_{i≠j} alpha_i ≤ n` for every `j`, and the
/// Newton relations `Q_{r,k}(w)` with `(k−1)·r < n`.
///
/// Amitsur members come first, ordered by `(alpha, words)` over sorted
/// `(alpha_i, w_i)` pairs; Newton members follow, ordered by `(r, k, w)`.
pub fn relation_family(n: usize, m: usize, max_degree: u32) -> Result<Vec<FamilyMember>> {
    if max_degree < n as u32 + 1 {
        return Err(Error::InvalidArgument(format!(
            "degree cap {max_degree} is below n + 1 = {}",
            n + 1
        )));
    }
    let words = enumerate_words(m, 1, &WordBound::MaxDegree(max_degree));
    let mut pairs: Vec<(u32, Word)> = Vec::new();
    for a in 1..=n as u32 {
        for w in &words {
            if a * w.degree() <= max_degree {
                pairs.push((a, w.clone()));
            }
        }
    }
    let mut tuples: Vec<Vec<(u32, Word)>> = Vec::new();
    fn rec(
        start: usize,
        pairs: &[(u32, Word)],
        cur: &mut Vec<(u32, Word)>,
        deg: u32,
        cap: u32,
        n: u32,
        out: &mut Vec<Vec<(u32, Word)>>,
    ) {
        let total: u32 = cur.iter().map(|p| p.0).sum();
        let smallest = cur.iter().map(|p| p.0).min().unwrap_or(0);
        if cur.len() >= 2 && total > n && total - smallest <= n {
            out.push(cur.clone());
        }
        if cur.len() > n as usize {
            return;
        }
        for k in start..pairs.len() {
            let (a, w) = &pairs[k];
            let d = deg + a * w.degree();
            // parts come in nondecreasing order, so the first is the
            // smallest and `Σ − smallest` only grows
            let first = cur.first().map_or(*a, |p| p.0);
            if d > cap || total + a - first > n {
                continue;
            }
            cur.push(pairs[k].clone());
            rec(k, pairs, cur, d, cap, n, out);
            cur.pop();
        }
    }
    rec(0, &pairs, &mut Vec::new(), 0, max_degree, n as u32, &mut tuples);
    let mut out = Vec::new();
    for t in tuples {
        let alpha: Vec<u32> = t.iter().map(|p| p.0).collect();
        let ws: Vec<Word> = t.iter().map(|p| p.1.clone()).collect();
        let relation = amitsur_relation(&alpha, &ws, n)?;
        if relation.is_zero() {
            continue;
        }
        let degree = t.iter().map(|(a, w)| a * w.degree()).sum();
        let multidegree = relation.multidegrees().pop().unwrap_or_default();
        out.push(FamilyMember {
            kind: FamilyKind::Amitsur { alpha, words: ws },
            degree,
            multidegree,
            relation,
        });
    }
    out.sort_by(|a, b| match (&a.kind, &b.kind) {
        (FamilyKind::Amitsur { alpha: x, words: u }, FamilyKind::Amitsur { alpha: y, words: v }) => {
            (x, u).cmp(&(y, v))
        }
        _ => std::cmp::Ordering::Equal,
    });
    for r in 1..=n {
        let mut k = 2u32;
        while (k as usize - 1) * r < n {
            for w in &words {
                let degree = r as u32 * k * w.degree();
                if degree > max_degree {
                    continue;
                }
                let relation = newton_relation(r, k, w, n)?;
                let multidegree = w.exponents().iter().map(|e| e * k * r as u32).collect();
                out.push(FamilyMember {
                    kind: FamilyKind::Newton { r, k, word: w.clone() },
                    degree,
                    multidegree,
                    relation,
                });
            }
            k += 1;
        }
    }
    Ok(out)
}

/// Result of [`kernel_generation_check`] for one multidegree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KernelGenerationReport {
    pub multidegree: Vec<u32>,
    /// Products of symbols `e_r(u)`, `r ≤ n`, of this multidegree.
    pub symbol_products: usize,
    pub invariant_dimension: usize,
    /// `symbol_products − invariant_dimension`, the kernel dimension.
    pub kernel_dimension: usize,
    /// Rank of all products (symbol product) × (family member) landing in
    /// this multidegree.
    pub family_rank: usize,
    pub generated: bool,
}

fn coords(p: &ESymbolPoly, index: &std::collections::BTreeMap<EMonomial, usize>) -> SparseVec {
    p.terms()
        .map(|(k, c)| (*index.get(k).expect("term of the right multidegree"), c.clone()))
        .collect()
}

/// Checks, by exact linear algebra over the field `domain`, that the
/// family members of multidegree at most `beta` generate the kernel of
/// `e_r(u) ↦ σ_r(u)` in multidegree `beta`.
///
/// The evaluation is onto (products `σ_{r1}(u1)⋯` of weight at most `n`
/// form a basis over every ring), so the kernel dimension is the number of
/// symbol products minus the invariant dimension; the family multiples
/// generate the kernel exactly when their rank attains it.
pub fn kernel_generation_check(
    n: usize,
    beta: &[u32],
    family: &[FamilyMember],
    domain: Domain,
) -> Result<KernelGenerationReport> {
    domain.require_field()?;
    let m = beta.len();
    let to_mono = |pm: Vec<(usize, Word)>| -> EMonomial {
        let mut v: EMonomial = pm.into_iter().map(|(r, word)| ESymbol { word, r }).collect();
        v.sort();
        v
    };
    let products: Vec<EMonomial> = pair_multisets(beta, n).into_iter().map(to_mono).collect();
    let index: std::collections::BTreeMap<EMonomial, usize> =
        products.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let dim = invariant_dimension(n, 1, beta);
    let kernel = products.len() - dim;
    let mut ech = Echelon::new(domain)?;
    for f in family {
        if f.multidegree.len() != m || f.multidegree.iter().zip(beta).any(|(a, b)| a > b) {
            continue;
        }
        let rel = f.relation.convert(domain)?;
        let rest: Vec<u32> = beta.iter().zip(&f.multidegree).map(|(b, a)| b - a).collect();
        let multipliers: Vec<EMonomial> = if rest.iter().all(|&e| e == 0) {
            vec![Vec::new()]
        } else {
            pair_multisets(&rest, n).into_iter().map(to_mono).collect()
        };
        for g in multipliers {
            let p = rel.mul_monomial(&g);
            debug_assert!(p.terms().all(|(k, _)| mono_multidegree(k, m) == beta));
            ech.insert(&coords(&p, &index));
            if ech.rank() == kernel {
                break;
            }
        }
        if ech.rank() == kernel {
            break;
        }
    }
    Ok(KernelGenerationReport {
        multidegree: beta.to_vec(),
        symbol_products: products.len(),
        invariant_dimension: dim,
        kernel_dimension: kernel,
        family_rank: ech.rank(),
        generated: ech.rank() == kernel,
    })
}

/// Whether products of the [`bounded_generators`] span the multidegree
/// `beta` component over `domain`.
pub fn generators_span(n: usize, beta: &[u32], domain: Domain) -> Result<bool> {
    domain.require_field()?;
    let m = beta.len();
    let gens = bounded_generators(n, m);
    let ctx = GroupContext::new(n, 1, m);
    let dim = invariant_dimension(n, 1, beta);
    let mds: Vec<Vec<u32>> = gens
        .iter()
        .map(|(r, w)| w.exponents().iter().map(|e| e * *r as u32).collect())
        .collect();
    let mut choices: Vec<Vec<usize>> = Vec::new();
    fn rec(
        start: usize,
        left: &mut Vec<u32>,
        mds: &[Vec<u32>],
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if left.iter().all(|&e| e == 0) {
            out.push(cur.clone());
            return;
        }
        for k in start..mds.len() {
            if mds[k].iter().zip(left.iter()).any(|(a, l)| a > l) {
                continue;
            }
            for (l, a) in left.iter_mut().zip(&mds[k]) {
                *l -= a;
            }
            cur.push(k);
            rec(k, left, mds, cur, out);
            cur.pop();
            for (l, a) in left.iter_mut().zip(&mds[k]) {
                *l += a;
            }
        }
    }
    rec(0, &mut beta.to_vec(), &mds, &mut Vec::new(), &mut choices);
    let mut index = std::collections::BTreeMap::new();
    let mut ech = Echelon::new(domain)?;
    for c in choices {
        let mut e = ESymbolPoly::one(n, m, domain);
        for k in c {
            let (r, w) = &gens[k];
            e = e.try_mul(&ESymbolPoly::symbol(n, *r, w, domain)?)?;
        }
        let f = to_orbit_basis(&e.evaluate(), ctx)?;
        let v: SparseVec = f
            .terms()
            .map(|(ms, c)| {
                let next = index.len();
                (*index.entry(ms.clone()).or_insert(next), c.clone())
            })
            .collect();
        ech.insert(&v);
        if ech.rank() == dim {
            break;
        }
    }
    Ok(ech.rank() == dim)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::multidegrees_up_to;

    fn names(gens: &[(usize, Word)]) -> Vec<String> {
        gens.iter().map(|(r, w)| format!("s{r}({w})")).collect()
    }

    #[test]
    fn generator_lists() {
        assert_eq!(names(&bounded_generators(2, 1)), ["s2(x1)", "s1(x1)"]);
        assert_eq!(
            names(&bounded_generators(2, 2)),
            ["s2(x1)", "s2(x2)", "s1(x1)", "s1(x2)", "s1(x1*x2)"]
        );
        let max = bounded_generators(3, 2).iter().map(generator_degree).max().unwrap();
        assert_eq!(max, 4);
        for n in 1..=4usize {
            for m in 1..=3usize {
                let bound = (m * (n - 1)).max(n) as u32;
                assert!(bounded_generators(n, m).iter().all(|g| generator_degree(g) <= bound));
            }
        }
    }

    #[test]
    fn generators_span_small_components() {
        for domain in [Domain::Rational, Domain::Prime(2), Domain::Prime(3)] {
            for n in 1..=3 {
                for beta in multidegrees_up_to(2, 5) {
                    if beta.iter().sum::<u32>() == 0 {
                        continue;
                    }
                    assert!(generators_span(n, &beta, domain).unwrap(), "n={n} beta={beta:?} {domain}");
                }
            }
        }
    }

    #[test]
    fn family_examples() {
        let fam = relation_family(1, 1, 2).unwrap();
        assert_eq!(fam.len(), 1);
        assert_eq!(fam[0].kind.to_string(), "S[1,1](x1, x1)");
        assert_eq!(fam[0].relation.to_string(), "e1(x1)^2 - e1(x1^2)");

        let fam = relation_family(2, 1, 4).unwrap();
        let kinds: Vec<String> = fam.iter().map(|f| f.kind.to_string()).collect();
        assert!(kinds.contains(&"Q[1,2](x1)".to_string()));
        assert!(!kinds.iter().any(|k| k.starts_with("Q[2,2]")));
    }

    #[test]
    fn family_members_vanish() {
        let fam = relation_family(2, 2, 6).unwrap();
        assert!(!fam.is_empty());
        for f in &fam {
            assert!(f.relation.evaluate().is_zero(), "{}", f.kind);
            assert!(f.degree <= 6);
        }
    }

    #[test]
    fn family_respects_shape_bounds() {
        for n in 1..=3 {
            for f in relation_family(n, 1, 2 * n as u32 + 2).unwrap() {
                if let FamilyKind::Amitsur { alpha, .. } = &f.kind {
                    assert!(alpha.len() <= n + 1);
                    assert!(alpha.iter().sum::<u32>() <= 2 * n as u32);
                }
            }
        }
    }

    #[test]
    fn family_generates_kernel_in_low_degree() {
        let mut nontrivial = 0;
        for n in 1..=2 {
            let fam = relation_family(n, 2, 6).unwrap();
            for domain in [Domain::Rational, Domain::Prime(2)] {
                for beta in multidegrees_up_to(2, 6) {
                    if beta.iter().sum::<u32>() == 0 {
                        continue;
                    }
                    let r = kernel_generation_check(n, &beta, &fam, domain).unwrap();
                    assert!(r.generated, "n={n} {domain} {r:?}");
                    nontrivial += r.kernel_dimension;
                }
            }
        }
        assert!(nontrivial > 100, "{nontrivial}");
    }
}
