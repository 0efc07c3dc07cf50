//! Polarized power sums, characteristic coefficients, and the orbit-sum
//! basis of `K[V^m]^{G(n,q)}`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::coeff::{Coeff, Domain};
use crate::error::{Error, Result};
use crate::linalg::{Echelon, SparseVec};
use crate::poly::{Monomial, Poly, VarContext};
use crate::word::{multisets_with_product, Word, WordMultiset};

/// The parameters `(n, q, m)`: `G(n,q)` acting on `m` copies of `K^n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GroupContext {
    pub n: usize,
    pub q: u32,
    pub m: usize,
}

impl GroupContext {
    pub fn new(n: usize, q: u32, m: usize) -> GroupContext {
        assert!(n >= 1 && q >= 1 && m >= 1, "n, q, m must be positive");
        GroupContext { n, q, m }
    }

    pub fn vars(&self) -> VarContext {
        VarContext::new(self.m, self.n)
    }
}

/// `w_<j>`: the word `w` evaluated in slot `j` (1-based).
pub fn slot_monomial(w: &Word, slot: usize, n: usize) -> Monomial {
    Monomial::from_pairs(
        w.exponents()
            .iter()
            .enumerate()
            .map(|(i, &e)| ((i * n + slot - 1) as u32, e)),
    )
}

/// The polarized power sum `[w] = Σ_j w_<j>`.
pub fn bracket(w: &Word, n: usize, domain: Domain) -> Poly {
    Poly::from_terms(domain, (1..=n).map(|j| (slot_monomial(w, j, n), domain.one())))
}

/// `σ_l(w)`: the `l`-th elementary symmetric polynomial in
/// `w_<1>, …, w_<n>`; zero when `l > n`.
pub fn sigma(w: &Word, l: usize, n: usize, domain: Domain) -> Poly {
    if l > n {
        return Poly::zero(domain);
    }
    // e[k] after processing slots 1..=j
    let mut e: Vec<Poly> = vec![Poly::zero(domain); l + 1];
    e[0] = Poly::one(domain);
    for j in 1..=n {
        let s = slot_monomial(w, j, n);
        for k in (1..=l.min(j)).rev() {
            let add = e[k - 1].mul_monomial(&s);
            e[k] = &e[k] + &add;
        }
    }
    e.swap_remove(l)
}

fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Distinct arrangements of the multiset's words into `n` slots (empty
/// slots are `None`).
fn slot_arrangements(ms: &WordMultiset, n: usize) -> Vec<Vec<Option<Word>>> {
    let mut seq: Vec<Option<Word>> = vec![None; n - ms.height()];
    seq.extend(ms.words().iter().cloned().map(Some));
    seq.sort();
    let mut out = vec![seq.clone()];
    while next_permutation(&mut seq) {
        out.push(seq.clone());
    }
    out
}

fn arrangement_monomial(arr: &[Option<Word>], n: usize) -> Monomial {
    let mut m = Monomial::one();
    for (j, w) in arr.iter().enumerate() {
        if let Some(w) = w {
            m = m.mul(&slot_monomial(w, j + 1, n));
        }
    }
    m
}

/// The canonical orbit representative: the words of `ms` in ascending
/// order placed into slots `1..=r`.
pub fn orbit_representative(ms: &WordMultiset, n: usize) -> Monomial {
    let mut m = Monomial::one();
    for (j, w) in ms.words().iter().enumerate() {
        m = m.mul(&slot_monomial(w, j + 1, n));
    }
    m
}

/// The monomial multisymmetric function `O_ms`: the sum of the distinct
/// `S_n`-images of `w1_<1> ⋯ wr_<r>`, each with coefficient 1.
pub fn orbit_sum(ms: &WordMultiset, n: usize, domain: Domain) -> Result<Poly> {
    if ms.height() > n {
        return Err(Error::HeightOverflow {
            height: ms.height(),
            n,
        });
    }
    Ok(Poly::from_terms(
        domain,
        slot_arrangements(ms, n)
            .iter()
            .map(|a| (arrangement_monomial(a, n), domain.one())),
    ))
}

/// An invariant written in the orbit-sum basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MSymPoly {
    pub ctx: GroupContext,
    domain: Domain,
    terms: BTreeMap<WordMultiset, Coeff>,
}

impl MSymPoly {
    pub fn zero(ctx: GroupContext, domain: Domain) -> MSymPoly {
        MSymPoly {
            ctx,
            domain,
            terms: BTreeMap::new(),
        }
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn terms(&self) -> impl Iterator<Item = (&WordMultiset, &Coeff)> {
        self.terms.iter()
    }

    pub fn coeff(&self, ms: &WordMultiset) -> Coeff {
        self.terms.get(ms).cloned().unwrap_or_else(|| self.domain.zero())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `c·O_ms`; the multiset must have height at most `n` and words
    /// in `M(q)`.
    pub fn add_term(&mut self, ms: WordMultiset, c: Coeff) -> Result<()> {
        if ms.height() > self.ctx.n {
            return Err(Error::HeightOverflow {
                height: ms.height(),
                n: self.ctx.n,
            });
        }
        if let Some(w) = ms.words().iter().find(|w| !w.in_m(self.ctx.q)) {
            return Err(Error::NotInM {
                word: w.to_string(),
                q: self.ctx.q,
            });
        }
        if c.is_zero() {
            return Ok(());
        }
        let e = self.terms.entry(ms).or_insert_with(|| self.domain.zero());
        *e = e.add(&c);
        self.terms.retain(|_, c| !c.is_zero());
        Ok(())
    }
}

impl fmt::Display for MSymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(ms, c)| {
                if c.is_one() {
                    format!("O{ms}")
                } else {
                    format!("{c}*O{ms}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Splits a monomial of `K[V^m]` into its slot words (`None` for an empty slot).
fn slot_words(mono: &Monomial, ctx: &GroupContext) -> Vec<Option<Word>> {
    let mut exps = vec![vec![0u32; ctx.m]; ctx.n];
    for &(v, e) in mono.pairs() {
        let series = v as usize / ctx.n;
        let slot = v as usize % ctx.n;
        exps[slot][series] = e;
    }
    exps.into_iter().map(|e| Word::new(e).ok()).collect()
}

fn transpose_slots(p: &Poly, ctx: &GroupContext, a: usize, b: usize) -> Poly {
    let n = ctx.n as u32;
    p.rename(|v| {
        let slot = v % n;
        let base = v - slot;
        if slot as usize == a {
            base + b as u32
        } else if slot as usize == b {
            base + a as u32
        } else {
            v
        }
    })
}

/// Reads off the orbit-basis coordinates of an invariant polynomial.
pub fn to_orbit_basis(p: &Poly, ctx: GroupContext) -> Result<MSymPoly> {
    let mut out = MSymPoly::zero(ctx, p.domain());
    for (mono, c) in p.terms() {
        let slots = slot_words(mono, &ctx);
        for (j, w) in slots.iter().enumerate() {
            if let Some(w) = w {
                if !w.in_m(ctx.q) {
                    return Err(Error::NotDiagonalInvariant {
                        slot: j + 1,
                        degree: w.degree(),
                        q: ctx.q,
                    });
                }
            }
        }
        let ms = WordMultiset::new(slots.iter().flatten().cloned().collect());
        let is_rep = slots
            .iter()
            .enumerate()
            .all(|(j, w)| w.as_ref() == ms.words().get(j));
        if is_rep {
            out.add_term(ms, c.clone())?;
        }
    }
    if &from_orbit_basis(&out)? != p {
        for a in 0..ctx.n {
            for b in a + 1..ctx.n {
                if &transpose_slots(p, &ctx, a, b) != p {
                    return Err(Error::NotSymmetric(a + 1, b + 1));
                }
            }
        }
        unreachable!("a symmetric diagonal-invariant polynomial is a sum of orbit sums");
    }
    Ok(out)
}

/// Expands an orbit-basis expression back into a polynomial.
pub fn from_orbit_basis(f: &MSymPoly) -> Result<Poly> {
    let mut out = Poly::zero(f.domain);
    for (ms, c) in &f.terms {
        out = &out + &orbit_sum(ms, f.ctx.n, f.domain)?.scale(c);
    }
    Ok(out)
}

/// Whether products are of brackets `[w]` or of characteristic
/// coefficients `σ_r(w)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProductMode {
    Bracket,
    Sigma,
}

/// The product attached to `ms`: `[w1]^r1 ⋯ [wd]^rd` in bracket mode, or
/// `σ_r1(w1) ⋯ σ_rd(wd)` in sigma mode, as a polynomial.
pub fn product_poly(ms: &WordMultiset, n: usize, mode: ProductMode, domain: Domain) -> Poly {
    let mut acc = Poly::one(domain);
    for (w, r) in ms.distinct() {
        let f = match mode {
            ProductMode::Bracket => bracket(&w, n, domain).pow(r as u32),
            ProductMode::Sigma => sigma(&w, r, n, domain),
        };
        acc = &acc * &f;
    }
    acc
}

/// The product attached to `ms` expanded in the orbit basis.
pub fn product_expand(
    ms: &WordMultiset,
    ctx: GroupContext,
    mode: ProductMode,
    domain: Domain,
) -> Result<MSymPoly> {
    if ms.height() > ctx.n {
        return Err(Error::HeightOverflow {
            height: ms.height(),
            n: ctx.n,
        });
    }
    to_orbit_basis(&product_poly(ms, ctx.n, mode, domain), ctx)
}

/// Dimension of the multidegree-`alpha` component of the invariant ring:
/// the number of multisets of words in `M(q)` of height at most `n` whose
/// product has multidegree `alpha`.
pub fn invariant_dimension(n: usize, q: u32, alpha: &[u32]) -> usize {
    count_multisets(alpha, q, n)
}

fn count_multisets(alpha: &[u32], q: u32, max_height: usize) -> usize {
    // Counting recursion over a fixed candidate order, memoised on
    // (remaining exponents, first allowed candidate, slots left).
    let candidates =
        crate::word::enumerate_words(alpha.len(), q, &crate::word::WordBound::Dividing(alpha.to_vec()));
    let mut memo: HashMap<(Vec<u32>, usize, usize), usize> = HashMap::new();
    fn rec(
        left: &[u32],
        start: usize,
        slots: usize,
        cands: &[Word],
        memo: &mut HashMap<(Vec<u32>, usize, usize), usize>,
    ) -> usize {
        if left.iter().all(|&e| e == 0) {
            return 1;
        }
        if slots == 0 {
            return 0;
        }
        let key = (left.to_vec(), start, slots);
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        let mut total = 0;
        for k in start..cands.len() {
            let w = &cands[k];
            if !w.divides_exponents(left) {
                continue;
            }
            let rest: Vec<u32> = left.iter().zip(w.exponents()).map(|(a, b)| a - b).collect();
            total += rec(&rest, k, slots - 1, cands, memo);
        }
        memo.insert(key, total);
        total
    }
    rec(alpha, 0, max_height, &candidates, &mut memo)
}

/// Coordinates of an orbit-basis expression with respect to an index of
/// multisets.
fn coordinates(f: &MSymPoly, index: &BTreeMap<WordMultiset, usize>) -> SparseVec {
    f.terms()
        .map(|(ms, c)| (*index.get(ms).expect("multiset in the component index"), c.clone()))
        .collect()
}

/// Whether a homogeneous invariant lies in the square of the ideal of
/// positive-degree invariants (that is, is a polynomial in invariants of
/// strictly lower degree). Requires field coefficients.
///
/// Each multihomogeneous component is tested against the span of all
/// products `O_a · O_b` of orbit sums of complementary nonzero
/// multidegrees, which spans `A²` over every field.
pub fn is_decomposable(f: &Poly, ctx: GroupContext) -> Result<bool> {
    let domain = f.domain();
    domain.require_field()?;
    if !f.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    if f.total_degree().unwrap_or(0) == 0 {
        return Err(Error::InvalidArgument(
            "decomposability needs an invariant of positive degree".into(),
        ));
    }
    let vars = ctx.vars();
    for (alpha, part) in vars.components(f) {
        let target = to_orbit_basis(&part, ctx)?;
        let basis = multisets_with_product(&alpha, ctx.q, ctx.n);
        let index: BTreeMap<WordMultiset, usize> =
            basis.iter().cloned().enumerate().map(|(i, ms)| (ms, i)).collect();
        let mut span = Echelon::new(domain)?;
        let mut orbit_cache: HashMap<WordMultiset, Poly> = HashMap::new();
        let mut orbit = |ms: &WordMultiset| -> Result<Poly> {
            if let Some(p) = orbit_cache.get(ms) {
                return Ok(p.clone());
            }
            let p = orbit_sum(ms, ctx.n, domain)?;
            orbit_cache.insert(ms.clone(), p.clone());
            Ok(p)
        };
        for beta in crate::word::multidegrees_up_to(ctx.m, alpha.iter().sum()) {
            if beta.iter().all(|&e| e == 0) || beta.iter().zip(&alpha).any(|(b, a)| b > a) {
                continue;
            }
            let gamma: Vec<u32> = alpha.iter().zip(&beta).map(|(a, b)| a - b).collect();
            if gamma.iter().all(|&e| e == 0) || beta > gamma {
                continue;
            }
            let left = multisets_with_product(&beta, ctx.q, ctx.n);
            let right = multisets_with_product(&gamma, ctx.q, ctx.n);
            for a in &left {
                let pa = orbit(a)?;
                for b in &right {
                    let prod = &pa * &orbit(b)?;
                    span.insert(&coordinates(&to_orbit_basis(&prod, ctx)?, &index));
                }
            }
        }
        if !span.contains(&coordinates(&target, &index)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Shape of the matrix taking the products of one multidegree component
/// to the orbit basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitionReport {
    pub alpha: Vec<u32>,
    pub mode: ProductMode,
    /// Number of products of height at most `n`.
    pub size: usize,
    /// Value of [`invariant_dimension`].
    pub dimension: usize,
    /// Every off-diagonal entry sits at an orbit sum of strictly lower height.
    pub triangular: bool,
    /// Diagonal entries are `r1!⋯rd!` (bracket) or 1 (sigma).
    pub diagonal_ok: bool,
    pub determinant: num_bigint::BigInt,
}

impl TransitionReport {
    pub fn invertible_over_rationals(&self) -> bool {
        !num_traits::Zero::is_zero(&self.determinant)
    }

    pub fn unimodular(&self) -> bool {
        num_traits::Signed::abs(&self.determinant) == num_bigint::BigInt::from(1)
    }

    pub fn passed(&self) -> bool {
        let square = self.size == self.dimension;
        let det_ok = match self.mode {
            ProductMode::Bracket => self.invertible_over_rationals(),
            ProductMode::Sigma => self.unimodular(),
        };
        square && self.triangular && self.diagonal_ok && det_ok
    }
}

/// Builds the integer transition matrix from products to orbit sums in the
/// multidegree-`alpha` component and reports its shape and determinant.
pub fn basis_transition(n: usize, q: u32, alpha: &[u32], mode: ProductMode) -> Result<TransitionReport> {
    let z = Domain::Integer;
    let ctx = GroupContext::new(n, q, alpha.len());
    let products = multisets_with_product(alpha, q, n);
    let index: BTreeMap<&WordMultiset, usize> =
        products.iter().enumerate().map(|(i, ms)| (ms, i)).collect();
    let size = products.len();
    let mut matrix = vec![vec![num_bigint::BigInt::from(0); size]; size];
    let mut triangular = true;
    let mut diagonal_ok = true;
    for (i, ms) in products.iter().enumerate() {
        let row = product_expand(ms, ctx, mode, z)?;
        for (other, c) in row.terms() {
            let value = c.to_bigint().expect("integer coefficient");
            match index.get(other) {
                Some(&j) => matrix[i][j] = value,
                None => triangular = false,
            }
            if other != ms && other.height() >= ms.height() {
                triangular = false;
            }
        }
        let expect = match mode {
            ProductMode::Bracket => ms.multiplicity_factorial(),
            ProductMode::Sigma => num_bigint::BigInt::from(1),
        };
        if matrix[i][i] != expect {
            diagonal_ok = false;
        }
    }
    Ok(TransitionReport {
        alpha: alpha.to_vec(),
        mode,
        size,
        dimension: invariant_dimension(n, q, alpha),
        triangular,
        diagonal_ok,
        determinant: crate::linalg::integer_determinant(&matrix),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Domain = Domain::Rational;

    fn w(s: &str, m: usize) -> Word {
        Word::parse(s, m).unwrap()
    }

    fn ms(words: &[&str], m: usize) -> WordMultiset {
        WordMultiset::new(words.iter().map(|s| w(s, m)).collect())
    }

    #[test]
    fn bracket_examples() {
        let v = VarContext::new(1, 2);
        assert_eq!(bracket(&w("x1", 1), 2, Q), &v.var(Q, 1, 1) + &v.var(Q, 1, 2));
        let v = VarContext::new(2, 1);
        assert_eq!(bracket(&w("x1*x2", 2), 1, Q), &v.var(Q, 1, 1) * &v.var(Q, 2, 1));
        let v = VarContext::new(1, 2);
        let a = v.var(Q, 1, 1);
        let b = v.var(Q, 1, 2);
        assert_eq!(bracket(&w("x1^2", 1), 2, Q), &(&a * &a) + &(&b * &b));
    }

    #[test]
    fn sigma_examples() {
        let v = VarContext::new(1, 2);
        assert_eq!(sigma(&w("x1", 1), 2, 2, Q), &v.var(Q, 1, 1) * &v.var(Q, 1, 2));
        assert!(sigma(&w("x1", 1), 3, 2, Q).is_zero());
        // σ2(xy) with n = 3, expanded directly
        let v = VarContext::new(2, 3);
        let slot = |j| &v.var(Q, 1, j) * &v.var(Q, 2, j);
        let mut expect = Poly::zero(Q);
        for i in 1..=3 {
            for j in i + 1..=3 {
                expect = &expect + &(&slot(i) * &slot(j));
            }
        }
        assert_eq!(sigma(&w("x1*x2", 2), 2, 3, Q), expect);
        assert_eq!(sigma(&w("x1*x2", 2), 1, 3, Q), bracket(&w("x1*x2", 2), 3, Q));
    }

    #[test]
    fn orbit_sum_examples() {
        let v = VarContext::new(2, 2);
        let x = |j| v.var(Q, 1, j);
        let y = |j| v.var(Q, 2, j);
        assert_eq!(orbit_sum(&ms(&["x1"], 2), 2, Q).unwrap(), &x(1) + &x(2));
        assert_eq!(
            orbit_sum(&ms(&["x1", "x2"], 2), 2, Q).unwrap(),
            &(&x(1) * &y(2)) + &(&x(2) * &y(1))
        );
        assert_eq!(orbit_sum(&ms(&["x1", "x1"], 2), 2, Q).unwrap(), &x(1) * &x(2));
        assert!(matches!(
            orbit_sum(&ms(&["x1", "x1", "x2"], 2), 2, Q),
            Err(Error::HeightOverflow { height: 3, n: 2 })
        ));
    }

    #[test]
    fn orbit_basis_round_trip() {
        let ctx = GroupContext::new(2, 1, 2);
        let b = to_orbit_basis(&bracket(&w("x1*x2", 2), 2, Q), ctx).unwrap();
        assert_eq!(b.len(), 1);
        assert_eq!(b.coeff(&ms(&["x1*x2"], 2)), Q.one());

        let prod = &bracket(&w("x1", 2), 2, Q) * &bracket(&w("x2", 2), 2, Q);
        let e = to_orbit_basis(&prod, ctx).unwrap();
        assert_eq!(e.coeff(&ms(&["x1*x2"], 2)), Q.one());
        assert_eq!(e.coeff(&ms(&["x1", "x2"], 2)), Q.one());
        assert_eq!(e.len(), 2);
        assert_eq!(from_orbit_basis(&e).unwrap(), prod);
    }

    #[test]
    fn non_invariant_input_is_rejected() {
        let ctx = GroupContext::new(2, 1, 1);
        let v = ctx.vars();
        assert_eq!(to_orbit_basis(&v.var(Q, 1, 1), ctx), Err(Error::NotSymmetric(1, 2)));
        let ctx2 = GroupContext::new(2, 2, 1);
        assert!(matches!(
            to_orbit_basis(&bracket(&w("x1", 1), 2, Q), ctx2),
            Err(Error::NotDiagonalInvariant { .. })
        ));
    }

    #[test]
    fn product_expand_examples() {
        let ctx = GroupContext::new(2, 1, 2);
        let e = product_expand(&ms(&["x1", "x1"], 2), ctx, ProductMode::Bracket, Q).unwrap();
        assert_eq!(e.coeff(&ms(&["x1", "x1"], 2)), Coeff::from_i64(Q, 2));
        let e = product_expand(&ms(&["x1", "x2"], 2), ctx, ProductMode::Bracket, Q).unwrap();
        assert_eq!(e.to_string(), "O{x1, x2} + O{x1*x2}");
        let e = product_expand(&ms(&["x1", "x1"], 2), ctx, ProductMode::Sigma, Q).unwrap();
        assert_eq!(e.to_string(), "O{x1, x1}");
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(invariant_dimension(2, 1, &[1, 1]), 2);
        assert_eq!(invariant_dimension(2, 2, &[2, 2]), 3);
        assert_eq!(invariant_dimension(1, 2, &[3]), 0);
        assert_eq!(invariant_dimension(3, 1, &[0, 0]), 1);
    }

    #[test]
    fn decomposability_examples() {
        let ctx = GroupContext::new(2, 1, 2);
        assert!(!is_decomposable(&bracket(&w("x1*x2", 2), 2, Q), ctx).unwrap());
        assert!(is_decomposable(&bracket(&w("x1^2*x2^2", 2), 2, Q), ctx).unwrap());
        let f2 = Domain::Prime(2);
        assert!(!is_decomposable(&bracket(&w("x1*x2", 2), 2, f2), ctx).unwrap());
        // not homogeneous
        let p = &bracket(&w("x1", 2), 2, Q) + &bracket(&w("x1^2", 2), 2, Q);
        assert_eq!(is_decomposable(&p, ctx), Err(Error::NotHomogeneous));
    }

    #[test]
    fn lemma_intpart_instances() {
        let ctx = GroupContext::new(2, 1, 2);
        let x2y = w("x1^2*x2", 2);
        assert!(is_decomposable(&sigma(&x2y, 2, 2, Q), ctx).unwrap());
        assert!(is_decomposable(&sigma(&x2y, 1, 2, Q), ctx).unwrap());
    }

    #[test]
    fn transition_matrices_are_triangular() {
        for n in 1..=3 {
            for q in 1..=2 {
                for alpha in crate::word::multidegrees_up_to(2, 6) {
                    for mode in [ProductMode::Bracket, ProductMode::Sigma] {
                        let r = basis_transition(n, q, &alpha, mode).unwrap();
                        assert!(r.passed(), "n={n} q={q} alpha={alpha:?} {mode:?}: {r:?}");
                    }
                }
            }
        }
        // [x]^2 and [x^2] for n = 2: diagonal 2 and 1, determinant 2
        let r = basis_transition(2, 1, &[2], ProductMode::Bracket).unwrap();
        assert_eq!((r.size, r.determinant.clone()), (2, num_bigint::BigInt::from(2)));
        assert!(!r.unimodular());
    }

    #[test]
    fn bracket_at_equal_coordinates() {
        // x(i)_j := c_i gives n * prod c_i^alpha_i
        let word = w("x1^2*x2^3", 2);
        let n = 3;
        let cs = [Coeff::from_i64(Q, 2), Coeff::from_i64(Q, -3)];
        let point: Vec<Coeff> = (0..2 * n).map(|v| cs[v / n].clone()).collect();
        let val = bracket(&word, n, Q).evaluate(&point);
        assert_eq!(val, Coeff::from_i64(Q, 3 * 4 * -27));
    }
}
