//! The relations `Ψ(w1, …, w_{n+1})` among the power sums, the evaluation
//! map `t(w) ↦ [w]`, rewriting to normal form, and generator reduction.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use serde::Serialize;

use crate::coeff::{factorial, Coeff, Domain};
use crate::error::{Error, Result};
use crate::invariants::{bracket, product_expand, GroupContext, ProductMode};
use crate::linalg::{integer_determinant, rank, SparseVec};
use crate::matrix::{matrix_word_trace, GenericMatrix};
use crate::partitions::{cycles, permutations, set_partitions};
use crate::poly::Poly;
use crate::trace::TracePoly;
use crate::word::{multisets_with_product, Word, WordMultiset};

fn check_words(ws: &[Word], q: u32) -> Result<usize> {
    let m = ws[0].num_series();
    for w in ws {
        if w.num_series() != m {
            return Err(Error::DimensionMismatch(format!(
                "word {w} has {} series, expected {m}",
                w.num_series()
            )));
        }
        if !w.in_m(q) {
            return Err(Error::NotInM {
                word: w.to_string(),
                q,
            });
        }
    }
    Ok(m)
}

/// `Ψ(w1, …, w_{n+1}) = Σ_λ Π_i (−1)(|λ_i|−1)! t(Π_{s∈λ_i} w_s)`, the sum
/// running over the set partitions `λ` of `{1..n+1}`.
pub fn fundamental_relation(ws: &[Word], n: usize, q: u32, domain: Domain) -> Result<TracePoly> {
    if ws.len() != n + 1 {
        return Err(Error::Arity {
            expected: n + 1,
            got: ws.len(),
        });
    }
    let m = check_words(ws, q)?;
    let mut out = TracePoly::zero(q, m, domain);
    for lambda in set_partitions(n + 1) {
        let mut c = BigInt::from(1);
        let mut words = Vec::with_capacity(lambda.num_blocks());
        for block in lambda.blocks() {
            c = -c * factorial(block.len() as u64 - 1);
            let mut w = ws[block[0] - 1].clone();
            for &s in &block[1..] {
                w = w.mul(&ws[s - 1]);
            }
            words.push(w);
        }
        out.add_term(WordMultiset::new(words), Coeff::from_bigint(domain, &c))?;
    }
    Ok(out)
}

/// The evaluation `t(w) ↦ [w]` into the polynomial ring in `x(i)_j`,
/// `j = 1..n`.
pub fn evaluate(tp: &TracePoly, n: usize) -> Poly {
    let domain = tp.domain();
    let mut cache: HashMap<(Word, usize), Poly> = HashMap::new();
    let mut out = Poly::zero(domain);
    for (ms, c) in tp.terms() {
        let mut acc = Poly::constant(c.clone());
        for (w, r) in ms.distinct() {
            let f = cache
                .entry((w.clone(), r))
                .or_insert_with(|| bracket(&w, n, domain).pow(r as u32));
            acc = &acc * f;
        }
        out = &out + &acc;
    }
    out
}

/// One rewriting step: `coefficient · multiplier · Ψ(words)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertificateStep {
    pub multiplier: WordMultiset,
    pub words: Vec<Word>,
    pub coefficient: Coeff,
}

/// A record of Ψ-multiples; the represented element is
/// `Σ coefficient · multiplier · Ψ(words)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Certificate {
    pub steps: Vec<CertificateStep>,
}

impl Certificate {
    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    /// Recomputes the combination the certificate stands for.
    pub fn combination(&self, n: usize, q: u32, m: usize, domain: Domain) -> Result<TracePoly> {
        let mut out = TracePoly::zero(q, m, domain);
        for s in &self.steps {
            let p = fundamental_relation(&s.words, n, q, domain)?
                .mul_monomial(&s.multiplier)
                .scale(&s.coefficient);
            out = out.try_add(&p)?;
        }
        Ok(out)
    }
}

/// Which `n+1` words of a too-high t-monomial feed the Ψ used to
/// eliminate it.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum RewriteStrategy {
    /// The first `n+1` words in canonical order.
    #[default]
    FirstWords,
    /// The last `n+1` words in canonical order.
    LastWords,
}

/// Rewrites `tp` modulo the Ψ-ideal until only t-monomials of height at
/// most `n` remain, using [`RewriteStrategy::FirstWords`].
pub fn normal_form(tp: &TracePoly, n: usize) -> (TracePoly, Certificate) {
    normal_form_with(tp, n, RewriteStrategy::FirstWords)
}

/// Rewriting with an explicit strategy.
///
/// The highest term `c · t(w1)⋯t(wh)`, `h > n`, is removed by subtracting
/// `(−1)^{n+1} c · t(rest) · Ψ(chosen n+1 words)`; every other term of that
/// product has smaller height, so the process terminates.
pub fn normal_form_with(tp: &TracePoly, n: usize, strategy: RewriteStrategy) -> (TracePoly, Certificate) {
    let (q, m, domain) = (tp.q(), tp.num_series(), tp.domain());
    let sign = if (n + 1) % 2 == 0 { domain.one() } else { domain.one().neg() };
    // keyed by (height, multiset) so the last entry is the next to rewrite
    let mut work: BTreeMap<(usize, WordMultiset), Coeff> = BTreeMap::new();
    let add = |work: &mut BTreeMap<(usize, WordMultiset), Coeff>, ms: WordMultiset, c: Coeff| {
        let key = (ms.height(), ms);
        let v = match work.remove(&key) {
            Some(old) => old.add(&c),
            None => c,
        };
        if !v.is_zero() {
            work.insert(key, v);
        }
    };
    for (ms, c) in tp.terms() {
        add(&mut work, ms.clone(), c.clone());
    }
    let mut rel_cache: HashMap<Vec<Word>, TracePoly> = HashMap::new();
    let mut steps = Vec::new();
    let mut done = TracePoly::zero(q, m, domain);
    while let Some(((h, ms), c)) = work.pop_last() {
        if h <= n {
            done.add_term(ms, c).expect("words already validated");
            for ((_, ms), c) in std::mem::take(&mut work) {
                done.add_term(ms, c).expect("words already validated");
            }
            break;
        }
        let all = ms.words();
        let (chosen, rest) = match strategy {
            RewriteStrategy::FirstWords => (&all[..n + 1], &all[n + 1..]),
            RewriteStrategy::LastWords => (&all[h - n - 1..], &all[..h - n - 1]),
        };
        let multiplier = WordMultiset::new(rest.to_vec());
        let k = c.mul(&sign);
        let rel = rel_cache
            .entry(chosen.to_vec())
            .or_insert_with(|| fundamental_relation(chosen, n, q, domain).expect("words already validated"));
        for (t, d) in rel.terms() {
            let u = t.union(&multiplier);
            if u == ms {
                continue;
            }
            add(&mut work, u, d.mul(&k).neg());
        }
        steps.push(CertificateStep {
            multiplier,
            words: chosen.to_vec(),
            coefficient: k,
        });
    }
    (done, Certificate { steps })
}

/// Whether `tp` lies in the kernel of `t(w) ↦ [w]`, with a certificate
/// writing it as a combination of Ψ-multiples when it does.
///
/// Refused over `Z/p` with `p ≤ n`, where products of at most `n` power
/// sums are no longer independent and a nonzero normal form proves nothing.
pub fn kernel_membership(tp: &TracePoly, n: usize) -> Result<(bool, Certificate)> {
    if let Domain::Prime(p) = tp.domain() {
        if p as usize <= n {
            return Err(Error::UnsupportedCharacteristic(format!(
                "kernel membership needs characteristic 0 or p > n = {n}, got p = {p}"
            )));
        }
    }
    let (nf, cert) = normal_form(tp, n);
    Ok((nf.is_zero(), cert))
}

/// Splits `w` into `n` words of degree `q` (taking letters `x1` first) and
/// a final word holding the rest.
pub fn split_word(w: &Word, n: usize, q: u32) -> Vec<Word> {
    let m = w.num_series();
    let mut letters = Vec::new();
    for (i, &e) in w.exponents().iter().enumerate() {
        letters.extend(std::iter::repeat(i).take(e as usize));
    }
    let q = q as usize;
    let to_word = |chunk: &[usize]| {
        let mut exps = vec![0; m];
        for &i in chunk {
            exps[i] += 1;
        }
        Word::new(exps).expect("nonempty chunk")
    };
    let mut out: Vec<Word> = (0..n).map(|k| to_word(&letters[k * q..(k + 1) * q])).collect();
    out.push(to_word(&letters[n * q..]));
    out
}

/// Expresses `t(w)`, `deg(w) > nq`, through symbols of smaller degree:
/// returns `E` with `[w] = φ(E)`, obtained from `Ψ` of a factorization of
/// `w` into `n+1` members of `M(q)` by solving for its `t(w)` term.
pub fn reduce_generator(w: &Word, n: usize, q: u32, domain: Domain) -> Result<TracePoly> {
    check_words(std::slice::from_ref(w), q)?;
    let bound = n as u32 * q;
    if w.degree() <= bound {
        return Err(Error::NotReducible {
            word: w.to_string(),
            degree: w.degree(),
            bound,
        });
    }
    if !domain.inverts_up_to(n as u64) {
        return Err(Error::UnsupportedCharacteristic(format!(
            "reducing generators divides by {n}!, which is not invertible over {domain}"
        )));
    }
    let parts = split_word(w, n, q);
    let rel = fundamental_relation(&parts, n, q, domain)?;
    let top = WordMultiset::singleton(w.clone());
    let scale = Coeff::from_bigint(domain, &factorial(n as u64))
        .inv()
        .expect("n! invertible");
    Ok(rel.filter(|ms| ms != &top).scale(&scale))
}

/// Rewrites every symbol `t(w)` with `deg(w) > nq` through symbols of
/// degree at most `nq` by repeated [`reduce_generator`].
pub struct GeneratorReducer {
    n: usize,
    q: u32,
    domain: Domain,
    cache: HashMap<Word, TracePoly>,
}

impl GeneratorReducer {
    pub fn new(n: usize, q: u32, domain: Domain) -> Result<GeneratorReducer> {
        if !domain.inverts_up_to(n as u64) {
            return Err(Error::UnsupportedCharacteristic(format!(
                "reducing generators divides by {n}!, which is not invertible over {domain}"
            )));
        }
        Ok(GeneratorReducer {
            n,
            q,
            domain,
            cache: HashMap::new(),
        })
    }

    /// Expansion of `t(w)` in the symbols of degree at most `nq`.
    pub fn expand_word(&mut self, w: &Word) -> Result<TracePoly> {
        if w.degree() <= self.n as u32 * self.q {
            return TracePoly::t(self.q, w, self.domain);
        }
        if let Some(p) = self.cache.get(w) {
            return Ok(p.clone());
        }
        let e = reduce_generator(w, self.n, self.q, self.domain)?;
        let out = self.reduce(&e)?;
        self.cache.insert(w.clone(), out.clone());
        Ok(out)
    }

    pub fn reduce(&mut self, tp: &TracePoly) -> Result<TracePoly> {
        let bound = self.n as u32 * self.q;
        let mut err = None;
        let out = tp.substitute(&mut |u: &Word| {
            if u.degree() <= bound || err.is_some() {
                return None;
            }
            match self.expand_word(u) {
                Ok(p) => Some(p),
                Err(e) => {
                    err = Some(e);
                    None
                }
            }
        })?;
        match err {
            Some(e) => Err(e),
            None => Ok(out),
        }
    }
}

/// Outcome of [`multilinear_basis_check`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultilinearReport {
    pub n: usize,
    pub q: u32,
    pub m: usize,
    pub domain: String,
    /// Dimension of the multilinear invariant component.
    pub dimension: usize,
    /// Number of products `[w1]⋯[wr]`, `r ≤ n`, of distinct words.
    pub products: usize,
    /// Rank over a field, or the absolute determinant over the integers.
    pub rank: Option<usize>,
    pub determinant: Option<String>,
    /// Products of more than `n` brackets whose normal form was checked to
    /// have the same evaluation.
    pub rewrites_checked: usize,
    pub basis_confirmed: bool,
}

/// Checks that the products of at most `n` power sums of words with
/// multiplicity-free product `x1⋯xm` form a basis of the multilinear
/// component over `domain`.
pub fn multilinear_basis_check(n: usize, q: u32, m: usize, domain: Domain) -> Result<MultilinearReport> {
    let ctx = GroupContext::new(n, q, m);
    let ones = vec![1u32; m];
    let index_set = multisets_with_product(&ones, q, n);
    let index: BTreeMap<WordMultiset, usize> =
        index_set.iter().cloned().enumerate().map(|(i, ms)| (ms, i)).collect();
    let dim = index_set.len();
    let mut rows: Vec<SparseVec> = Vec::with_capacity(dim);
    for ms in &index_set {
        let f = product_expand(ms, ctx, ProductMode::Bracket, domain)?;
        let mut row = SparseVec::new();
        for (k, c) in f.terms() {
            let i = *index.get(k).ok_or_else(|| {
                Error::DimensionMismatch(format!("product has a term {k} outside the component"))
            })?;
            row.insert(i, c.clone());
        }
        rows.push(row);
    }
    let (rank_v, det, spans) = if domain.is_field() {
        let r = rank(domain, &rows)?;
        (Some(r), None, r == dim)
    } else {
        let dense: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|r| {
                (0..dim)
                    .map(|i| r.get(&i).and_then(Coeff::to_bigint).unwrap_or_default())
                    .collect()
            })
            .collect();
        let d = integer_determinant(&dense);
        let unit = d == BigInt::from(1) || d == BigInt::from(-1);
        (None, Some(d.magnitude().to_string()), unit)
    };
    // higher products: their normal forms must evaluate identically
    let mut rewrites = 0;
    let mut rewrites_ok = true;
    if m % q as usize == 0 {
        for high in multisets_with_product(&ones, q, m) {
            if high.height() <= n {
                continue;
            }
            let tp = TracePoly::monomial(q, m, high, domain.one());
            let (nf, _) = normal_form(&tp, n);
            rewrites += 1;
            if nf.max_height() > n || evaluate(&nf, n) != evaluate(&tp, n) {
                rewrites_ok = false;
            }
        }
    }
    Ok(MultilinearReport {
        n,
        q,
        m,
        domain: domain.to_string(),
        dimension: dim,
        products: rows.len(),
        rank: rank_v,
        determinant: det,
        rewrites_checked: rewrites,
        basis_confirmed: spans && rewrites_ok,
    })
}

/// Expands `Σ_{π ∈ S_{n+1}} sign(π) Tr^π` for generic `n × n` matrices,
/// where `Tr^π` multiplies the traces along the cycles of `π`; true when
/// the sum vanishes.
pub fn verify_trace_identity(n: usize) -> bool {
    trace_identity_sum(n).is_zero()
}

/// The expanded alternating sum itself.
pub fn trace_identity_sum(n: usize) -> Poly {
    let domain = Domain::Integer;
    let mats = GenericMatrix::generic_family(domain, n, n + 1);
    let mut cache: HashMap<Vec<usize>, Poly> = HashMap::new();
    let mut total = Poly::zero(domain);
    for perm in permutations(n + 1) {
        let cs = cycles(&perm);
        let odd = (n + 1 - cs.len()) % 2 == 1;
        let mut term = Poly::one(domain);
        for c in cs {
            let tr = cache
                .entry(c.clone())
                .or_insert_with(|| matrix_word_trace(&c, &mats).expect("valid indices"));
            term = &term * tr;
        }
        total = if odd { &total - &term } else { &total + &term };
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const Q: Domain = Domain::Rational;

    fn w(s: &str, m: usize) -> Word {
        Word::parse(s, m).unwrap()
    }

    fn tp(s: &str, q: u32, m: usize) -> TracePoly {
        TracePoly::parse(s, q, m, Q).unwrap()
    }

    #[test]
    fn relation_n1() {
        let p = fundamental_relation(&[w("x1", 2), w("x2", 2)], 1, 1, Q).unwrap();
        assert_eq!(p, tp("t(x1)*t(x2) - t(x1*x2)", 1, 2));
    }

    #[test]
    fn relation_n2_multilinear() {
        let ws = [w("x1", 3), w("x2", 3), w("x3", 3)];
        let p = fundamental_relation(&ws, 2, 1, Q).unwrap();
        let expect = tp(
            "-2*t(x1*x2*x3) + t(x1*x2)*t(x3) + t(x1*x3)*t(x2) + t(x2*x3)*t(x1) - t(x1)*t(x2)*t(x3)",
            1,
            3,
        );
        assert_eq!(p, expect);
    }

    #[test]
    fn relation_n3_has_fifteen_terms() {
        let ws: Vec<Word> = (1..=4).map(|i| Word::var(4, i)).collect();
        let p = fundamental_relation(&ws, 3, 1, Q).unwrap();
        assert_eq!(p.len(), 15);
        let top = WordMultiset::singleton(w("x1*x2*x3*x4", 4));
        assert_eq!(p.coeff(&top), Coeff::from_i64(Q, -6));
        assert_eq!(p.coeff(&WordMultiset::new(ws.clone())), Coeff::from_i64(Q, 1));
    }

    #[test]
    fn relation_errors() {
        assert!(matches!(
            fundamental_relation(&[w("x1", 1)], 1, 1, Q),
            Err(Error::Arity { expected: 2, got: 1 })
        ));
        assert!(matches!(
            fundamental_relation(&[w("x1", 1), w("x1^2", 1)], 1, 2, Q),
            Err(Error::NotInM { .. })
        ));
    }

    #[test]
    fn evaluate_examples() {
        let p = evaluate(&tp("t(x1)", 1, 1), 2);
        assert_eq!(p, &Poly::var(Q, 0) + &Poly::var(Q, 1));
        assert!(evaluate(&tp("t(x1)*t(x2) - t(x1*x2)", 1, 2), 1).is_zero());
    }

    #[test]
    fn relation_is_in_the_kernel() {
        for n in 1..=3 {
            let m = n + 1;
            let ws: Vec<Word> = (1..=m).map(|i| Word::var(m, i)).collect();
            assert!(evaluate(&fundamental_relation(&ws, n, 1, Q).unwrap(), n).is_zero(), "n = {n}");
        }
        let ws = [w("x1^2", 2), w("x1*x2", 2), w("x2^4", 2)];
        assert!(evaluate(&fundamental_relation(&ws, 2, 2, Q).unwrap(), 2).is_zero());
    }

    #[test]
    fn normal_form_of_triple_product() {
        let (nf, cert) = normal_form(&tp("t(x1)*t(x2)*t(x3)", 1, 3), 2);
        assert_eq!(
            nf,
            tp("t(x1*x2)*t(x3) + t(x1*x3)*t(x2) + t(x2*x3)*t(x1) - 2*t(x1*x2*x3)", 1, 3)
        );
        assert_eq!(cert.len(), 1);
    }

    #[test]
    fn normal_form_leaves_low_height_alone() {
        let p = tp("t(x1)*t(x2) + 3*t(x1^2)", 1, 2);
        let (nf, cert) = normal_form(&p, 2);
        assert_eq!(nf, p);
        assert!(cert.is_empty());
    }

    #[test]
    fn normal_form_of_product_with_relation() {
        let p = tp("t(x1)*t(x2)*t(x3)*t(x4) - t(x1*x2)*t(x3)*t(x4)", 1, 4);
        let (nf, cert) = normal_form(&p, 2);
        assert!(nf.max_height() <= 2);
        assert_eq!(evaluate(&nf, 2), evaluate(&p, 2));
        let back = p.try_sub(&nf).unwrap();
        assert_eq!(cert.combination(2, 1, 4, Q).unwrap(), back);
    }

    #[test]
    fn kernel_membership_examples() {
        let ws = [w("x1", 3), w("x2", 3), w("x3", 3)];
        let rel = fundamental_relation(&ws, 2, 1, Q).unwrap();
        assert!(kernel_membership(&rel, 2).unwrap().0);
        assert!(!kernel_membership(&tp("t(x1)", 1, 3), 2).unwrap().0);
        let f2 = rel.convert(Domain::Prime(2)).unwrap();
        assert!(matches!(
            kernel_membership(&f2, 2),
            Err(Error::UnsupportedCharacteristic(_))
        ));
        let z = rel.convert(Domain::Integer).unwrap();
        assert!(kernel_membership(&z, 2).unwrap().0);
    }

    #[test]
    fn reduce_generator_examples() {
        let e = reduce_generator(&w("x1^2", 1), 1, 1, Q).unwrap();
        assert_eq!(e, tp("t(x1)^2", 1, 1));
        let e = reduce_generator(&w("x1*x2*x3", 3), 2, 1, Q).unwrap();
        assert_eq!(
            e,
            tp("1/2*t(x1*x2)*t(x3) + 1/2*t(x1*x3)*t(x2) + 1/2*t(x2*x3)*t(x1) - 1/2*t(x1)*t(x2)*t(x3)", 1, 3)
        );
        let x4 = w("x1^4", 1);
        let e = reduce_generator(&x4, 2, 1, Q).unwrap();
        assert_eq!(evaluate(&e, 2), bracket(&x4, 2, Q));
        assert!(e.terms().all(|(ms, _)| ms.words().iter().all(|u| u.degree() < 4)));
    }

    #[test]
    fn reduce_generator_errors() {
        assert!(matches!(
            reduce_generator(&w("x1^2", 1), 2, 1, Q),
            Err(Error::NotReducible { .. })
        ));
        assert!(matches!(
            reduce_generator(&w("x1^3", 1), 2, 1, Domain::Prime(2)),
            Err(Error::UnsupportedCharacteristic(_))
        ));
    }

    #[test]
    fn full_reduction_to_generators() {
        let mut red = GeneratorReducer::new(2, 2, Q).unwrap();
        let target = w("x1^3*x2^5", 2);
        let e = red.expand_word(&target).unwrap();
        assert!(e.terms().all(|(ms, _)| ms.words().iter().all(|u| u.degree() <= 4)));
        assert_eq!(evaluate(&e, 2), bracket(&target, 2, Q));
    }

    #[test]
    fn multilinear_examples() {
        let r = multilinear_basis_check(2, 1, 3, Domain::Prime(2)).unwrap();
        assert!(r.basis_confirmed);
        assert_eq!(r.dimension, 4);
        let r = multilinear_basis_check(1, 1, 2, Q).unwrap();
        assert_eq!(r.dimension, 1);
        assert!(r.basis_confirmed);
        let r = multilinear_basis_check(2, 2, 2, Domain::Prime(3)).unwrap();
        assert_eq!(r.dimension, 1);
        assert!(r.basis_confirmed);
    }

    #[test]
    fn multilinear_theorem_small_cases() {
        for domain in [Domain::Prime(2), Domain::Prime(3), Domain::Integer] {
            for n in 1..=3 {
                for m in 1..=4 {
                    for q in 1..=2 {
                        let r = multilinear_basis_check(n, q, m, domain).unwrap();
                        assert!(r.basis_confirmed, "{n} {q} {m} {domain}");
                    }
                }
            }
        }
    }

    #[test]
    fn trace_identity() {
        assert!(verify_trace_identity(1));
        assert!(verify_trace_identity(2));
        assert!(verify_trace_identity(3));
    }

    #[test]
    fn certificate_serializes() {
        let (_, cert) = normal_form(&tp("t(x1)*t(x2)*t(x3)", 1, 3), 2);
        let v = serde_json::to_value(&cert).unwrap();
        assert_eq!(v[0]["words"], serde_json::json!(["x1", "x2", "x3"]));
        assert_eq!(v[0]["coefficient"], "-1");
        assert_eq!(v[0]["multiplier"], serde_json::json!([]));
    }

    fn word_strategy(m: usize, q: u32, max_deg: u32) -> impl Strategy<Value = Word> {
        proptest::collection::vec(0..=max_deg, m)
            .prop_filter("nonempty word in M(q)", move |e| {
                let d: u32 = e.iter().sum();
                d > 0 && d % q == 0 && d <= max_deg
            })
            .prop_map(|e| Word::new(e).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn relation_is_symmetric(ws in proptest::collection::vec(word_strategy(2, 1, 2), 3), seed in 0usize..6) {
            let perms = permutations(3);
            let shuffled: Vec<Word> = perms[seed].iter().map(|&i| ws[i].clone()).collect();
            prop_assert_eq!(fundamental_relation(&ws, 2, 1, Q).unwrap(), fundamental_relation(&shuffled, 2, 1, Q).unwrap());
        }

        #[test]
        fn relation_evaluates_to_zero(ws in proptest::collection::vec(word_strategy(2, 1, 2), 4)) {
            prop_assert!(evaluate(&fundamental_relation(&ws, 3, 1, Q).unwrap(), 3).is_zero());
        }

        #[test]
        fn rewriting_certificates_and_confluence(
            ws in proptest::collection::vec(word_strategy(2, 2, 4), 3..=5),
            c in -3i64..=3,
        ) {
            let n = 2;
            let p = TracePoly::monomial(2, 2, WordMultiset::new(ws.clone()), Coeff::from_i64(Q, c))
                .try_add(&TracePoly::monomial(2, 2, WordMultiset::new(ws[..2].to_vec()), Q.one()))
                .unwrap();
            let (a, ca) = normal_form_with(&p, n, RewriteStrategy::FirstWords);
            let (b, cb) = normal_form_with(&p, n, RewriteStrategy::LastWords);
            prop_assert!(a.max_height() <= n && b.max_height() <= n);
            prop_assert_eq!(&a, &b);
            prop_assert_eq!(ca.combination(n, 2, 2, Q).unwrap(), p.try_sub(&a).unwrap());
            prop_assert_eq!(cb.combination(n, 2, 2, Q).unwrap(), p.try_sub(&b).unwrap());
            let input = p.multidegrees();
            for s in &ca.steps {
                let md = WordMultiset::new(s.words.clone()).union(&s.multiplier).multidegree(2);
                prop_assert!(input.contains(&md));
            }
        }

        #[test]
        fn ideal_elements_are_recognised(
            rels in proptest::collection::vec(
                (proptest::collection::vec(word_strategy(2, 2, 4), 3), proptest::collection::vec(word_strategy(2, 2, 2), 0..=2), -2i64..=2),
                1..=3),
        ) {
            let mut f = TracePoly::zero(2, 2, Q);
            for (ws, mult, c) in &rels {
                let g = fundamental_relation(ws, 2, 2, Q).unwrap().mul_monomial(&WordMultiset::new(mult.clone()));
                f = f.try_add(&g.scale(&Coeff::from_i64(Q, *c))).unwrap();
            }
            let (member, cert) = kernel_membership(&f, 2).unwrap();
            prop_assert!(member);
            prop_assert_eq!(cert.combination(2, 2, 2, Q).unwrap(), f);
        }
    }
}
