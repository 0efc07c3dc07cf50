//! Hironaka data and finite presentations of the invariant rings in the
//! symbols `t(w)`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::coeff::Domain;
use crate::error::{Error, Result};
use crate::groebner::{buchberger, buchberger_with, GroebnerOptions, MonomialOrder};
use crate::hilbert::{generating_function, hilbert_count, hironaka_numerator};
use crate::invariants::{bracket, invariant_dimension};
use crate::linalg::{Echelon, SparseVec};
use crate::poly::{Monomial, Poly};
use crate::relations::{fundamental_relation, kernel_membership, Certificate, CertificateStep, GeneratorReducer};
use crate::trace::TracePoly;
use crate::word::{enumerate_words, multidegrees_up_to, multisets_with_product, Word, WordBound, WordMultiset};

/// `qn(n+1) − 2n + 2`: the degree bound for generators and relations of
/// the finite presentation.
pub fn presentation_degree(n: usize, q: u32) -> u32 {
    let n = n as u32;
    q * n * (n + 1) + 2 - 2 * n
}

/// The power sums `[x(i)^{qk}]`, `k = 1..n`, for each series.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimaryGenerators {
    pub words: Vec<Word>,
    /// Set for `q ≥ 2`, where this list extrapolates the `q = 1` system of
    /// parameters.
    pub extension: bool,
}

impl PrimaryGenerators {
    pub fn multidegrees(&self) -> Vec<Vec<u32>> {
        self.words.iter().map(Word::multidegree).collect()
    }
}

pub fn primary_generators(n: usize, q: u32, m: usize) -> PrimaryGenerators {
    let mut words = Vec::new();
    for i in 0..m {
        for k in 1..=n as u32 {
            let mut e = vec![0; m];
            e[i] = q * k;
            words.push(Word::new(e).expect("nonzero exponent"));
        }
    }
    PrimaryGenerators {
        words,
        extension: q >= 2,
    }
}

/// Where a secondary generator list came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SecondarySource {
    Table,
    Generic,
}

/// Products of power sums, each stored as the multiset of its words (the
/// empty multiset is `1`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SecondaryGenerators {
    pub products: Vec<WordMultiset>,
    pub source: SecondarySource,
}

impl SecondaryGenerators {
    pub fn multidegrees(&self, m: usize) -> Vec<Vec<u32>> {
        self.products.iter().map(|p| p.multidegree(m)).collect()
    }

    pub fn display(&self) -> Vec<String> {
        self.products.iter().map(bracket_product_string).collect()
    }
}

fn bracket_product_string(p: &WordMultiset) -> String {
    if p.is_empty() {
        return "1".into();
    }
    let parts: Vec<String> = p
        .distinct()
        .iter()
        .map(|(w, k)| if *k == 1 { format!("[{w}]") } else { format!("[{w}]^{k}") })
        .collect();
    parts.join("*")
}

fn word(m: usize, exps: &[(usize, u32)]) -> Word {
    let mut e = vec![0; m];
    for &(i, x) in exps {
        e[i] = x;
    }
    Word::new(e).expect("nonempty word")
}

/// Secondary generators: the known lists for `q = 1` with `n = 2` or
/// `(n, m) = (3, 2)`, otherwise [`secondary_generators_generic`].
pub fn secondary_generators(n: usize, q: u32, m: usize) -> Result<SecondaryGenerators> {
    if q == 1 && n == 2 {
        // [x(i1)x(i2)]⋯[x(i_{2k−1})x(i_{2k})] for i1 < ⋯ < i_{2k}
        let mut products = Vec::new();
        for size in (0..=m).step_by(2) {
            for subset in subsets(m, size) {
                let ws = subset.chunks(2).map(|c| word(m, &[(c[0], 1), (c[1], 1)])).collect();
                products.push(WordMultiset::new(ws));
            }
        }
        return Ok(SecondaryGenerators {
            products,
            source: SecondarySource::Table,
        });
    }
    if q == 1 && n == 3 && m == 2 {
        let xy = word(2, &[(0, 1), (1, 1)]);
        let x2y = word(2, &[(0, 2), (1, 1)]);
        let xy2 = word(2, &[(0, 1), (1, 2)]);
        let products = vec![
            WordMultiset::empty(),
            WordMultiset::singleton(xy.clone()),
            WordMultiset::singleton(x2y.clone()),
            WordMultiset::singleton(xy2.clone()),
            WordMultiset::new(vec![xy.clone(), xy]),
            WordMultiset::new(vec![x2y, xy2]),
        ];
        return Ok(SecondaryGenerators {
            products,
            source: SecondarySource::Table,
        });
    }
    secondary_generators_generic(n, q, m)
}

fn subsets(m: usize, size: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, m: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            cur.push(i);
            rec(i + 1, m, size, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, m, size, &mut Vec::new(), &mut out);
    out
}

/// A basis of the invariants modulo the ideal generated by the primary
/// generators, chosen greedily among products of power sums of degree at
/// most `nq`. The search covers each series degree up to `Σ_k (qk − 1)`,
/// the top degree of the quotient by the primary generators; the number
/// found must equal `(n!·q^n)^{m−1}`.
pub fn secondary_generators_generic(n: usize, q: u32, m: usize) -> Result<SecondaryGenerators> {
    let d = Domain::Rational;
    let prim = primary_generators(n, q, m);
    let gens: Vec<Poly> = prim.words.iter().map(|w| bracket(w, n, d)).collect();
    let gb = buchberger(&gens, &MonomialOrder::grevlex())?;
    let top: u32 = (1..=n as u32).map(|k| q * k - 1).sum();
    let bound = n as u32 * q;
    let mut products = Vec::new();
    for alpha in multidegrees_up_to(m, top * m as u32) {
        if alpha.iter().any(|&a| a > top) {
            continue;
        }
        let mut index: HashMap<Monomial, usize> = HashMap::new();
        let mut ech = Echelon::new(d)?;
        for ms in multisets_with_product(&alpha, q, usize::MAX) {
            if ms.words().iter().any(|w| w.degree() > bound) {
                continue;
            }
            let mut f = Poly::one(d);
            for w in ms.words() {
                f = &f * &bracket(w, n, d);
            }
            let r = gb.reduce(&f)?;
            let v: SparseVec = r
                .terms()
                .map(|(mono, c)| {
                    let k = index.len();
                    (*index.entry(mono.clone()).or_insert(k), c.clone())
                })
                .collect();
            if !v.is_empty() && ech.insert(&v) {
                products.push(ms);
            }
        }
    }
    let mut expected: u64 = 1;
    for k in 1..=n as u64 {
        expected *= k * q as u64;
    }
    let expected = expected.pow(m as u32 - 1);
    if products.len() as u64 != expected {
        return Err(Error::Inconclusive(format!(
            "found {} secondary generators, expected {expected}",
            products.len()
        )));
    }
    Ok(SecondaryGenerators {
        products,
        source: SecondarySource::Generic,
    })
}

/// Whether `H · Π_p (1 − t^{mdeg p}) = Σ_s t^{mdeg s}` through total
/// degree `truncation`.
pub fn hironaka_identity(
    n: usize,
    q: u32,
    m: usize,
    primary: &PrimaryGenerators,
    secondary: &SecondaryGenerators,
    truncation: u32,
) -> bool {
    let table = hilbert_count(n, q, m, truncation);
    hironaka_numerator(&table, &primary.multidegrees())
        == generating_function(m, truncation, &secondary.multidegrees(m))
}

/// A relation of a presentation; `tuple` records the words of the
/// relation `Ψ(w1, …, w_{n+1})` it was derived from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentationRelation {
    pub tuple: Option<Vec<Word>>,
    pub relation: TracePoly,
}

impl PresentationRelation {
    pub fn multidegree(&self, m: usize) -> Vec<u32> {
        self.relation
            .terms()
            .next()
            .map(|(ms, _)| ms.multidegree(m))
            .unwrap_or_else(|| vec![0; m])
    }

    pub fn degree(&self) -> u32 {
        self.relation.total_degree().unwrap_or(0)
    }
}

/// Generators `t(w)` and relations presenting the invariant ring over the
/// rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub n: usize,
    pub q: u32,
    pub m: usize,
    /// Largest generator degree allowed.
    pub degree_bound: u32,
    pub generators: Vec<Word>,
    pub relations: Vec<PresentationRelation>,
    pub minimal: bool,
    /// One certificate per relation, writing it through Ψ-multiples.
    pub certificates: Vec<Certificate>,
}

/// The presentation with generators `t(w)`, `deg(w) ≤ D`, and relations
/// `Ψ(w1, …, w_{n+1})` with `deg(w1⋯w_{n+1}) ≤ D`, for
/// `D = qn(n+1) − 2n + 2`.
pub fn finite_presentation(n: usize, q: u32, m: usize) -> Result<Presentation> {
    if n == 0 || q == 0 || m == 0 {
        return Err(Error::InvalidArgument("n, q, m must be positive".into()));
    }
    let d = Domain::Rational;
    let bound = presentation_degree(n, q);
    let generators = enumerate_words(m, q, &WordBound::MaxDegree(bound));
    let tuples = word_tuples(&generators, n + 1, bound, q);
    let relations: Result<Vec<PresentationRelation>> = tuples
        .par_iter()
        .map(|t| {
            Ok(PresentationRelation {
                tuple: Some(t.clone()),
                relation: fundamental_relation(t, n, q, d)?,
            })
        })
        .collect();
    let relations = relations?;
    let certificates = tuples
        .into_iter()
        .map(|t| Certificate {
            steps: vec![CertificateStep {
                multiplier: WordMultiset::empty(),
                words: t,
                coefficient: d.one(),
            }],
        })
        .collect();
    Ok(Presentation {
        n,
        q,
        m,
        degree_bound: bound,
        generators,
        relations,
        minimal: false,
        certificates,
    })
}

// Multisets of `k` words (nondecreasing in canonical order) with total
// degree at most `bound`.
fn word_tuples(words: &[Word], k: usize, bound: u32, q: u32) -> Vec<Vec<Word>> {
    fn rec(
        words: &[Word],
        start: usize,
        k: usize,
        left: u32,
        q: u32,
        cur: &mut Vec<Word>,
        out: &mut Vec<Vec<Word>>,
    ) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        let still = (k - cur.len() - 1) as u32 * q;
        for i in start..words.len() {
            let d = words[i].degree();
            if d + still > left {
                continue;
            }
            cur.push(words[i].clone());
            rec(words, i, k, left - d, q, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(words, 0, k, bound, q, &mut Vec::new(), &mut out);
    out
}

fn graded(a: &[u32], b: &[u32]) -> std::cmp::Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| b.cmp(a))
}

/// Minimal generators `t(w)`, `deg(w) ≤ nq`, and a minimal generating set
/// of the relation ideal.
///
/// Each relation of `p` is rewritten over the minimal generators with
/// [`GeneratorReducer`]. Multidegrees are visited in graded order; at each
/// one the span of all multiples of already selected relations is built,
/// and a rewritten relation is selected exactly when it lies outside that
/// span. A relation is thus dropped only when it is a consequence of
/// relations of lower multidegree or of those already chosen. The span is
/// also required to reach the whole kernel component, whose dimension is
/// the number of t-monomials minus the invariant dimension.
pub fn minimize_presentation(p: &Presentation) -> Result<Presentation> {
    let d = Domain::Rational;
    if p.relations.iter().any(|r| r.relation.domain() != d) {
        return Err(Error::InvalidArgument("minimization needs rational relations".into()));
    }
    let (n, q, m) = (p.n, p.q, p.m);
    let bound = n as u32 * q;
    let generators: Vec<Word> = p.generators.iter().filter(|w| w.degree() <= bound).cloned().collect();
    let mut reducer = GeneratorReducer::new(n, q, d)?;

    let mut by_degree: BTreeMap<Vec<u32>, Vec<&PresentationRelation>> = BTreeMap::new();
    for r in &p.relations {
        if !r.relation.is_zero() {
            by_degree.entry(r.multidegree(m)).or_default().push(r);
        }
    }
    let mut alphas: Vec<Vec<u32>> = by_degree.keys().cloned().collect();
    alphas.sort_by(|a, b| graded(a, b));
    let top = alphas.iter().map(|a| a.iter().sum::<u32>()).max().unwrap_or(0);

    let mut monomial_cache: HashMap<Vec<u32>, Vec<WordMultiset>> = HashMap::new();
    let mut monomials = |gamma: &[u32]| -> Vec<WordMultiset> {
        monomial_cache
            .entry(gamma.to_vec())
            .or_insert_with(|| {
                multisets_with_product(gamma, q, usize::MAX)
                    .into_iter()
                    .filter(|ms| ms.words().iter().all(|w| w.degree() <= bound))
                    .collect()
            })
            .clone()
    };

    let mut selected: Vec<(Vec<u32>, PresentationRelation)> = Vec::new();
    // every multidegree up to the top relation degree, so that components
    // without candidates are still checked
    let mut all_alphas: Vec<Vec<u32>> = multidegrees_up_to(m, top)
        .into_iter()
        .filter(|a| a.iter().sum::<u32>() % q == 0)
        .collect();
    all_alphas.sort_by(|a, b| graded(a, b));
    for alpha in all_alphas {
        let basis = monomials(&alpha);
        let kernel_dim = basis.len() - invariant_dimension(n, q, &alpha);
        if kernel_dim == 0 {
            continue;
        }
        let index: HashMap<&WordMultiset, usize> = basis.iter().enumerate().map(|(i, ms)| (ms, i)).collect();
        let coords = |tp: &TracePoly| -> SparseVec {
            tp.terms()
                .map(|(ms, c)| (*index.get(ms).expect("t-monomial of the component"), c.clone()))
                .collect()
        };
        let mut ech = Echelon::new(d)?;
        'lower: for (beta, r) in &selected {
            if !beta.iter().zip(&alpha).all(|(b, a)| b <= a) {
                continue;
            }
            let gamma: Vec<u32> = alpha.iter().zip(beta).map(|(a, b)| a - b).collect();
            for u in monomials(&gamma) {
                ech.insert(&coords(&r.relation.mul_monomial(&u)));
                if ech.rank() == kernel_dim {
                    break 'lower;
                }
            }
        }
        if ech.rank() < kernel_dim {
            for cand in by_degree.get(&alpha).map(Vec::as_slice).unwrap_or(&[]) {
                let rewritten = reducer.reduce(&cand.relation)?;
                if rewritten.is_zero() {
                    continue;
                }
                if ech.insert(&coords(&rewritten)) {
                    selected.push((
                        alpha.clone(),
                        PresentationRelation {
                            tuple: cand.tuple.clone(),
                            relation: rewritten,
                        },
                    ));
                }
                if ech.rank() == kernel_dim {
                    break;
                }
            }
        }
        if ech.rank() != kernel_dim {
            return Err(Error::Inconclusive(format!(
                "relations reach dimension {} of the {kernel_dim}-dimensional kernel at multidegree {alpha:?}",
                ech.rank()
            )));
        }
    }

    let relations: Vec<PresentationRelation> = selected.into_iter().map(|(_, r)| r).collect();
    let certificates: Result<Vec<Certificate>> = relations
        .par_iter()
        .map(|r| {
            let (inside, cert) = kernel_membership(&r.relation, n)?;
            if !inside {
                return Err(Error::Inconclusive("rewritten relation outside the kernel".into()));
            }
            Ok(cert)
        })
        .collect();
    Ok(Presentation {
        n,
        q,
        m,
        degree_bound: bound,
        generators,
        relations,
        minimal: true,
        certificates: certificates?,
    })
}

/// Dimension comparison at one multidegree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentCheck {
    pub multidegree: Vec<u32>,
    /// `hilbert_count` at this multidegree.
    pub expected: u64,
    /// Dimension of the quotient of the generator ring by the relations.
    pub quotient: u64,
}

/// Outcome of [`verify_presentation`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PresentationReport {
    pub truncation: u32,
    /// Every relation lies in the kernel of the evaluation map.
    pub sound: bool,
    pub unsound_relations: Vec<usize>,
    pub components: Vec<ComponentCheck>,
    pub mismatches: Vec<Vec<u32>>,
    pub groebner_size: usize,
    pub warnings: Vec<String>,
}

impl PresentationReport {
    pub fn passed(&self) -> bool {
        self.sound && self.mismatches.is_empty()
    }
}

/// Checks soundness of every relation and, up to the truncation, that the
/// quotient of the polynomial ring on the generators by the relations has
/// the dimensions of the invariant ring in each multidegree. The quotient
/// is computed with a Gröbner basis for the order weighted by word degree,
/// truncated at `truncation`.
pub fn verify_presentation(p: &Presentation, truncation: u32) -> Result<PresentationReport> {
    let d = Domain::Rational;
    if p.relations.iter().any(|r| r.relation.domain() != d) {
        return Err(Error::InvalidArgument("verification needs rational relations".into()));
    }
    let (n, q, m) = (p.n, p.q, p.m);
    let soundness: Result<Vec<bool>> = p
        .relations
        .par_iter()
        .map(|r| kernel_membership(&r.relation, n).map(|x| x.0))
        .collect();
    let unsound_relations: Vec<usize> = soundness?
        .iter()
        .enumerate()
        .filter(|(_, ok)| !**ok)
        .map(|(i, _)| i)
        .collect();

    let vars: Vec<&Word> = p.generators.iter().filter(|w| w.degree() <= truncation).collect();
    let var_index: HashMap<&Word, u32> = vars.iter().enumerate().map(|(i, w)| (*w, i as u32)).collect();
    let weights: Vec<u32> = vars.iter().map(|w| w.degree()).collect();
    let mut polys = Vec::new();
    for r in &p.relations {
        if r.degree() > truncation {
            continue;
        }
        let mut f = Poly::zero(d);
        for (ms, c) in r.relation.terms() {
            let mut mono = Monomial::one();
            for w in ms.words() {
                let v = var_index.get(w).ok_or_else(|| {
                    Error::InvalidArgument(format!("relation uses t({w}), which is not a generator"))
                })?;
                mono = mono.mul(&Monomial::var(*v));
            }
            f.add_term(mono, c.clone());
        }
        polys.push(f);
    }
    let order = MonomialOrder::grevlex().with_weights(weights);
    let opts = GroebnerOptions {
        degree_cap: Some(truncation as u64),
        num_vars: Some(vars.len()),
        verify: false,
    };
    let gb = buchberger_with(&polys, &order, &opts)?;
    let mut counts: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
    gb.for_each_standard(truncation as u64, &mut |mono, _| {
        let mut a = vec![0u32; m];
        for &(v, e) in mono.pairs() {
            for (x, y) in a.iter_mut().zip(vars[v as usize].exponents()) {
                *x += e * y;
            }
        }
        *counts.entry(a).or_insert(0) += 1;
    });
    let table = hilbert_count(n, q, m, truncation);
    let mut components = Vec::new();
    let mut mismatches = Vec::new();
    for (alpha, expected) in table.entries() {
        let quotient = counts.get(&alpha).copied().unwrap_or(0);
        if quotient != expected {
            mismatches.push(alpha.clone());
        }
        components.push(ComponentCheck {
            multidegree: alpha,
            expected,
            quotient,
        });
    }
    let mut warnings = Vec::new();
    let top = p.relations.iter().map(PresentationRelation::degree).max().unwrap_or(0);
    if truncation < top {
        warnings.push(format!(
            "truncation {truncation} is below the largest relation degree {top}; higher relations are not exercised"
        ));
    }
    Ok(PresentationReport {
        truncation,
        sound: unsound_relations.is_empty(),
        unsound_relations,
        components,
        mismatches,
        groebner_size: gb.len(),
        warnings,
    })
}

impl Presentation {
    /// The same presentation without relation `i`.
    pub fn without_relation(&self, i: usize) -> Presentation {
        let mut p = self.clone();
        p.relations.remove(i);
        if i < p.certificates.len() {
            p.certificates.remove(i);
        }
        p
    }

    /// Multidegrees of the relations, in order.
    pub fn relation_multidegrees(&self) -> Vec<Vec<u32>> {
        self.relations.iter().map(|r| r.multidegree(self.m)).collect()
    }

    /// The JSON document: context, generators, relations with their source
    /// tuples, and certificates.
    pub fn to_json(&self) -> Value {
        let generators: Vec<Value> = self
            .generators
            .iter()
            .map(|w| json!({"word": w, "degree": w.degree(), "multidegree": w.multidegree()}))
            .collect();
        let relations: Vec<Value> = self
            .relations
            .iter()
            .map(|r| json!({"tuple": r.tuple, "terms": r.relation}))
            .collect();
        json!({
            "context": {"n": self.n, "q": self.q, "m": self.m},
            "degree_bound": self.degree_bound,
            "minimal": self.minimal,
            "generators": generators,
            "relations": relations,
            "certificates": self.certificates,
        })
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "presentation n={} q={} m={} degree_bound={} minimal={}",
            self.n, self.q, self.m, self.degree_bound, self.minimal
        )?;
        let gens: Vec<String> = self.generators.iter().map(|w| format!("t({w})")).collect();
        writeln!(f, "generators ({}): {}", gens.len(), gens.join(", "))?;
        writeln!(f, "relations ({}):", self.relations.len())?;
        for r in &self.relations {
            let md: Vec<String> = r.multidegree(self.m).iter().map(u32::to_string).collect();
            write!(f, "  ({}) {}", md.join(","), r.relation)?;
            if let Some(t) = &r.tuple {
                let ws: Vec<String> = t.iter().map(Word::to_string).collect();
                write!(f, "  [from {}]", ws.join(", "))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_bound_is_twice_tau() {
        for n in 1..=10 {
            for q in 1..=10 {
                assert_eq!(presentation_degree(n, q), 2 * crate::groebner::tau_formula(n, q));
            }
        }
        assert_eq!(presentation_degree(2, 1), 4);
        assert_eq!(presentation_degree(3, 1), 8);
        assert_eq!(presentation_degree(2, 2), 10);
    }

    #[test]
    fn primary_lists() {
        let p = primary_generators(2, 1, 2);
        let s: Vec<String> = p.words.iter().map(Word::to_string).collect();
        assert_eq!(s, ["x1", "x1^2", "x2", "x2^2"]);
        assert!(!p.extension);
        assert_eq!(primary_generators(3, 1, 2).words.len(), 6);
        assert_eq!(primary_generators(1, 1, 1).words.len(), 1);
        assert!(primary_generators(2, 2, 1).extension);
    }

    #[test]
    fn secondary_tables() {
        let s = secondary_generators(2, 1, 2).unwrap();
        assert_eq!(s.display(), ["1", "[x1*x2]"]);
        let s = secondary_generators(2, 1, 3).unwrap();
        assert_eq!(s.display(), ["1", "[x1*x2]", "[x1*x3]", "[x2*x3]"]);
        let s = secondary_generators(3, 1, 2).unwrap();
        assert_eq!(
            s.multidegrees(2),
            vec![vec![0, 0], vec![1, 1], vec![2, 1], vec![1, 2], vec![2, 2], vec![3, 3]]
        );
    }

    #[test]
    fn generic_search_matches_tables() {
        for (n, m) in [(2, 2), (2, 3), (3, 2)] {
            let table = secondary_generators(n, 1, m).unwrap();
            let generic = secondary_generators_generic(n, 1, m).unwrap();
            let mut a = table.multidegrees(m);
            let mut b = generic.multidegrees(m);
            a.sort();
            b.sort();
            assert_eq!(a, b, "n={n} m={m}");
        }
        let s = secondary_generators_generic(1, 1, 2).unwrap();
        assert_eq!(s.display(), ["1"]);
    }

    #[test]
    fn hironaka_identities() {
        for (n, m, d) in [(2, 2, 8), (2, 3, 6), (3, 2, 8)] {
            let p = primary_generators(n, 1, m);
            let s = secondary_generators(n, 1, m).unwrap();
            assert!(hironaka_identity(n, 1, m, &p, &s, d));
        }
        // dropping a secondary generator breaks it
        let p = primary_generators(3, 1, 2);
        let mut s = secondary_generators(3, 1, 2).unwrap();
        s.products.pop();
        assert!(!hironaka_identity(3, 1, 2, &p, &s, 8));
    }

    #[test]
    fn generic_secondaries_for_signed_permutations() {
        let s = secondary_generators_generic(2, 2, 2).unwrap();
        let p = primary_generators(2, 2, 2);
        assert_eq!(s.products.len(), 8);
        assert!(hironaka_identity(2, 2, 2, &p, &s, 10));
    }

    #[test]
    fn presentation_shapes() {
        let p = finite_presentation(2, 1, 2).unwrap();
        assert_eq!(p.degree_bound, 4);
        assert_eq!(p.generators.len(), 14);
        assert!(p.relations.iter().all(|r| r.degree() <= 4));
        assert_eq!(p.relations.len(), p.certificates.len());
        for (r, c) in p.relations.iter().zip(&p.certificates) {
            assert_eq!(c.combination(2, 1, 2, Domain::Rational).unwrap(), r.relation);
        }
    }

    #[test]
    fn two_points_two_series() {
        let p = finite_presentation(2, 1, 2).unwrap();
        let report = verify_presentation(&p, 6).unwrap();
        assert!(report.passed(), "{:?}", report.mismatches);
        assert_eq!(report.components.len(), 28);
        let min = minimize_presentation(&p).unwrap();
        assert!(min.relations.iter().all(|r| r.degree() == 4));
        assert!(verify_presentation(&min, 6).unwrap().passed());
        for i in 0..min.relations.len() {
            let cut = min.without_relation(i);
            assert!(!verify_presentation(&cut, 6).unwrap().passed());
        }
    }

    #[test]
    fn veronese_case() {
        for (q, m) in [(1, 2), (2, 2), (3, 2), (2, 3)] {
            let p = finite_presentation(1, q, m).unwrap();
            let min = minimize_presentation(&p).unwrap();
            assert!(min.generators.iter().all(|w| w.degree() == q));
            // every relation is a binomial of two quadratic t-monomials
            for r in &min.relations {
                assert_eq!(r.relation.len(), 2);
                assert!(r.relation.terms().all(|(ms, _)| ms.height() == 2));
            }
            // count: pairs of generators minus the degree-2q words they reach
            let g = min.generators.len();
            let reached = enumerate_words(m, 1, &WordBound::MaxDegree(2 * q))
                .iter()
                .filter(|w| w.degree() == 2 * q)
                .count();
            assert_eq!(min.relations.len(), g * (g + 1) / 2 - reached, "q={q} m={m}");
            assert!(verify_presentation(&min, 4 * q).unwrap().passed());
        }
        let p = finite_presentation(1, 1, 2).unwrap();
        assert!(verify_presentation(&p, 4).unwrap().passed());
    }

    #[test]
    fn json_layout() {
        let p = finite_presentation(1, 1, 1).unwrap();
        let v = p.to_json();
        assert_eq!(v["context"]["n"], 1);
        assert_eq!(v["generators"][0]["word"], "x1");
        assert_eq!(v["relations"][0]["tuple"][0], "x1");
        let terms = v["relations"][0]["terms"].as_array().unwrap();
        assert_eq!(terms[0]["coeff"], "1");
        assert_eq!(terms[0]["monomial"][0][0], "x1");
        assert_eq!(terms[0]["monomial"][0][1], 2);
        assert_eq!(p.to_json().to_string(), v.to_string());
    }
}
