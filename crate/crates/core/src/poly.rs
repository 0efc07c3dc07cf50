//! Sparse multivariate polynomials with exact coefficients.
//!
//! Variables are plain indices. The invariant-theory code works in the
//! context of a [`VarContext`], which maps `x(i)_j` (series `i`, slot `j`)
//! onto indices ordered by `i` first and then by `j`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::coeff::{Coeff, Domain};
use crate::error::{Error, Result};

/// A monomial stored sparsely as `(variable, exponent)` pairs sorted by
/// variable, with no zero exponents.
///
/// The `Ord` instance is graded reverse lexicographic with variable `0`
/// the largest; it is the canonical term order inside [`Poly`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(u32, u32)>);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial(Vec::new())
    }

    pub fn var(v: u32) -> Monomial {
        Monomial(vec![(v, 1)])
    }

    /// Builds a monomial from arbitrary `(var, exp)` pairs, merging repeats.
    pub fn from_pairs<I: IntoIterator<Item = (u32, u32)>>(pairs: I) -> Monomial {
        let mut map: BTreeMap<u32, u32> = BTreeMap::new();
        for (v, e) in pairs {
            if e > 0 {
                *map.entry(v).or_insert(0) += e;
            }
        }
        Monomial(map.into_iter().collect())
    }

    /// Dense exponent vector → monomial.
    pub fn from_exponents(exps: &[u32]) -> Monomial {
        Monomial(
            exps.iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(v, &e)| (v as u32, e))
                .collect(),
        )
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> u64 {
        self.0
            .iter()
            .map(|&(v, e)| weights[v as usize] as u64 * e as u64)
            .sum()
    }

    pub fn exponent(&self, v: u32) -> u32 {
        match self.0.binary_search_by_key(&v, |&(w, _)| w) {
            Ok(i) => self.0[i].1,
            Err(_) => 0,
        }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial(self.0.iter().map(|&(v, e)| (v, e * k)).filter(|p| p.1 > 0).collect())
    }

    /// Whether `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        let b = &other.0;
        let mut j = 0;
        for &(v, e) in &self.0 {
            while j < b.len() && b[j].0 < v {
                j += 1;
            }
            if j == b.len() || b[j].0 != v || b[j].1 < e {
                return false;
            }
        }
        true
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let mut out = Vec::with_capacity(other.0.len());
        for &(v, e) in &other.0 {
            let d = e - self.exponent(v);
            if d > 0 {
                out.push((v, d));
            }
        }
        Some(Monomial(out))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1.max(b[j].1)));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// True when the monomials share no variable.
    pub fn is_coprime(&self, other: &Monomial) -> bool {
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
                Ordering::Equal => return false,
            }
        }
        true
    }

    /// Applies a variable renaming.
    pub fn rename(&self, f: impl Fn(u32) -> u32) -> Monomial {
        Monomial::from_pairs(self.0.iter().map(|&(v, e)| (f(v), e)))
    }

    pub fn lex_cmp(&self, other: &Monomial) -> Ordering {
        let (a, b) = (&self.0, &other.0);
        let mut i = 0;
        loop {
            match (a.get(i), b.get(i)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&(va, ea)), Some(&(vb, eb))) => {
                    if va != vb {
                        // the one containing the smaller-index variable is larger
                        return if va < vb { Ordering::Greater } else { Ordering::Less };
                    }
                    if ea != eb {
                        return ea.cmp(&eb);
                    }
                }
            }
            i += 1;
        }
    }

    /// Reverse-lexicographic tie break used by grevlex: compares from the
    /// last variable, the smaller exponent there wins.
    pub fn revlex_cmp(&self, other: &Monomial) -> Ordering {
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (a.len(), b.len());
        loop {
            match (i > 0, j > 0) {
                (false, false) => return Ordering::Equal,
                (false, true) => return Ordering::Greater,
                (true, false) => return Ordering::Less,
                (true, true) => {
                    let (va, ea) = a[i - 1];
                    let (vb, eb) = b[j - 1];
                    if va > vb {
                        return Ordering::Less;
                    }
                    if vb > va {
                        return Ordering::Greater;
                    }
                    if ea != eb {
                        return eb.cmp(&ea);
                    }
                    i -= 1;
                    j -= 1;
                }
            }
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.revlex_cmp(other))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A sparse polynomial: no stored zero coefficients, terms kept in
/// ascending grevlex order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    domain: Domain,
    terms: BTreeMap<Monomial, Coeff>,
}

impl Poly {
    pub fn zero(domain: Domain) -> Poly {
        Poly {
            domain,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(domain: Domain) -> Poly {
        Poly::constant(domain.one())
    }

    pub fn constant(c: Coeff) -> Poly {
        Poly::term(Monomial::one(), c)
    }

    pub fn term(m: Monomial, c: Coeff) -> Poly {
        let mut p = Poly::zero(c.domain());
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn var(domain: Domain, v: u32) -> Poly {
        Poly::term(Monomial::var(v), domain.one())
    }

    /// Collects terms, summing repeated monomials and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, Coeff)>>(domain: Domain, it: I) -> Poly {
        let mut p = Poly::zero(domain);
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending grevlex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Coeff)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Coeff {
        self.terms.get(m).cloned().unwrap_or_else(|| self.domain.zero())
    }

    /// Largest term in grevlex.
    pub fn leading_term(&self) -> Option<(&Monomial, &Coeff)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Adds `c·m` in place.
    pub fn add_term(&mut self, m: Monomial, c: Coeff) {
        assert_eq!(c.domain(), self.domain, "coefficient domain mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    fn check(&self, other: &Poly) -> Result<()> {
        if self.domain == other.domain {
            Ok(())
        } else {
            Err(Error::DomainMismatch {
                left: self.domain,
                right: other.domain,
            })
        }
    }

    pub fn try_add(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.neg());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        let mut out = Poly::zero(self.domain);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca.mul(cb));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Coeff) -> Poly {
        assert_eq!(c.domain(), self.domain, "coefficient domain mismatch");
        if c.is_zero() {
            return Poly::zero(self.domain);
        }
        Poly {
            domain: self.domain,
            terms: self.terms.iter().map(|(m, d)| (m.clone(), d.mul(c))).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Poly {
        Poly {
            domain: self.domain,
            terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect(),
        }
    }

    pub fn neg(&self) -> Poly {
        Poly {
            domain: self.domain,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut acc = Poly::one(self.domain);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Re-expresses every coefficient in another domain.
    pub fn convert(&self, target: Domain) -> Result<Poly> {
        let mut out = Poly::zero(target);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.convert(target)?);
        }
        Ok(out)
    }

    /// Keeps the terms satisfying `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&Monomial) -> bool) -> Poly {
        Poly {
            domain: self.domain,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Applies a variable renaming to every monomial.
    pub fn rename(&self, f: impl Fn(u32) -> u32) -> Poly {
        Poly::from_terms(self.domain, self.terms.iter().map(|(m, c)| (m.rename(&f), c.clone())))
    }

    /// Evaluates at a point given as one coefficient per variable index.
    pub fn evaluate(&self, point: &[Coeff]) -> Coeff {
        let mut acc = self.domain.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(v, e) in m.pairs() {
                for _ in 0..e {
                    t = t.mul(&point[v as usize]);
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Substitutes `images[v]` for variable `v`.
    pub fn substitute(&self, images: &[Poly]) -> Poly {
        let mut out = Poly::zero(self.domain);
        for (m, c) in &self.terms {
            let mut t = Poly::constant(c.clone());
            for &(v, e) in m.pairs() {
                t = &t * &images[v as usize].pow(e);
            }
            out = &out + &t;
        }
        out
    }

    /// Renders with caller-provided variable names.
    pub fn display_with(&self, name: &dyn Fn(u32) -> String) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { c.neg() } else { c.clone() };
            if idx == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono: Vec<String> = m
                .pairs()
                .iter()
                .map(|&(v, e)| {
                    if e == 1 {
                        name(v)
                    } else {
                        format!("{}^{}", name(v), e)
                    }
                })
                .collect();
            if mono.is_empty() {
                s.push_str(&abs.to_string());
            } else if abs.is_one() {
                s.push_str(&mono.join("*"));
            } else {
                s.push_str(&format!("{}*{}", abs, mono.join("*")));
            }
        }
        s
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(&|v| format!("v{v}")))
    }
}

impl<'a> std::ops::Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &'a Poly) -> Poly {
        self.try_add(rhs).expect("coefficient domain mismatch")
    }
}

impl<'a> std::ops::Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &'a Poly) -> Poly {
        self.try_sub(rhs).expect("coefficient domain mismatch")
    }
}

impl<'a> std::ops::Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &'a Poly) -> Poly {
        self.try_mul(rhs).expect("coefficient domain mismatch")
    }
}

/// A variable `x(i)_j`: series `i` in `1..=m`, slot `j` in `1..=n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VarId {
    pub series: u32,
    pub slot: u32,
}

/// The ambient variable set `x(i)_j` of `K[V^m]` with `dim V = n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct VarContext {
    pub m: usize,
    pub n: usize,
}

impl VarContext {
    pub fn new(m: usize, n: usize) -> VarContext {
        VarContext { m, n }
    }

    pub fn num_vars(&self) -> usize {
        self.m * self.n
    }

    /// Index of `x(i)_j` (1-based `i`, `j`).
    pub fn index(&self, id: VarId) -> u32 {
        debug_assert!(id.series >= 1 && id.series as usize <= self.m);
        debug_assert!(id.slot >= 1 && id.slot as usize <= self.n);
        (id.series - 1) * self.n as u32 + (id.slot - 1)
    }

    pub fn var_id(&self, index: u32) -> VarId {
        VarId {
            series: index / self.n as u32 + 1,
            slot: index % self.n as u32 + 1,
        }
    }

    pub fn var(&self, domain: Domain, series: u32, slot: u32) -> Poly {
        Poly::var(domain, self.index(VarId { series, slot }))
    }

    /// Degree in each series.
    pub fn multidegree(&self, m: &Monomial) -> Vec<u32> {
        let mut out = vec![0; self.m];
        for &(v, e) in m.pairs() {
            out[(v / self.n as u32) as usize] += e;
        }
        out
    }

    pub fn name(&self, index: u32) -> String {
        let id = self.var_id(index);
        format!("x({})_{}", id.series, id.slot)
    }

    pub fn display(&self, p: &Poly) -> String {
        p.display_with(&|v| self.name(v))
    }

    /// The terms of `p` whose degree in series `i` is `alpha[i]` for all `i`.
    pub fn multihomogeneous_component(&self, p: &Poly, alpha: &[u32]) -> Poly {
        p.filter(|m| self.multidegree(m) == alpha)
    }

    /// All multihomogeneous components of `p`, keyed by multidegree.
    pub fn components(&self, p: &Poly) -> BTreeMap<Vec<u32>, Poly> {
        let mut out: BTreeMap<Vec<u32>, Poly> = BTreeMap::new();
        for (m, c) in p.terms() {
            out.entry(self.multidegree(m))
                .or_insert_with(|| Poly::zero(p.domain()))
                .add_term(m.clone(), c.clone());
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ctx() -> VarContext {
        VarContext::new(2, 2)
    }

    #[test]
    fn difference_of_squares() {
        let c = ctx();
        let d = Domain::Rational;
        let a = c.var(d, 1, 1);
        let b = c.var(d, 1, 2);
        let lhs = &(&a + &b) * &(&a - &b);
        let rhs = &(&a * &a) - &(&b * &b);
        assert_eq!(lhs, rhs);
        assert_eq!(&lhs + &Poly::zero(d), lhs);
    }

    #[test]
    fn frobenius_in_char_two() {
        let c = ctx();
        let d = Domain::Prime(2);
        let a = c.var(d, 1, 1);
        let b = c.var(d, 1, 2);
        let s = &a + &b;
        assert_eq!(&s * &s, &(&a * &a) + &(&b * &b));
    }

    #[test]
    fn mixed_domain_error() {
        let a = Poly::one(Domain::Rational);
        let b = Poly::one(Domain::Prime(3));
        assert!(matches!(a.try_add(&b), Err(Error::DomainMismatch { .. })));
    }

    #[test]
    fn component_filtering() {
        let c = ctx();
        let d = Domain::Rational;
        let x11 = c.var(d, 1, 1);
        let x21 = c.var(d, 2, 1);
        let p = &(&x11 * &x21) + &(&x11 * &x11);
        assert_eq!(c.multihomogeneous_component(&p, &[1, 1]), &x11 * &x21);
        assert!(c.multihomogeneous_component(&(&x11 * &x11), &[0, 1]).is_zero());
    }

    #[test]
    fn grevlex_basics() {
        // x0 > x1 > x2; degree first
        let x0 = Monomial::var(0);
        let x1 = Monomial::var(1);
        let x2 = Monomial::var(2);
        assert!(x0 > x1 && x1 > x2);
        assert!(x2.pow(2) > x0);
        // x0*x2 < x1^2 in grevlex
        assert!(x0.mul(&x2) < x1.pow(2));
    }

    #[test]
    fn varid_order_is_series_then_slot() {
        let c = VarContext::new(3, 2);
        let ids: Vec<VarId> = (0..6).map(|i| c.var_id(i)).collect();
        let mut sorted = ids.clone();
        sorted.sort();
        assert_eq!(ids, sorted);
        assert_eq!(c.index(VarId { series: 2, slot: 1 }), 2);
    }

    fn arb_poly(domain: Domain) -> impl Strategy<Value = Poly> {
        prop::collection::vec(
            (prop::collection::vec(0u32..3, 4), -5i64..6),
            0..20,
        )
        .prop_map(move |ts| {
            Poly::from_terms(
                domain,
                ts.into_iter()
                    .map(|(e, c)| (Monomial::from_exponents(&e), Coeff::from_i64(domain, c))),
            )
        })
    }

    fn domains() -> impl Strategy<Value = Domain> {
        prop_oneof![
            Just(Domain::Rational),
            Just(Domain::Integer),
            Just(Domain::Prime(2)),
            Just(Domain::Prime(7)),
        ]
    }

    proptest! {
        #[test]
        fn ring_axioms((a, b, c) in domains().prop_flat_map(|d| (arb_poly(d), arb_poly(d), arb_poly(d)))) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
        }

        #[test]
        fn canonical_form_is_idempotent(p in arb_poly(Domain::Rational)) {
            let again = Poly::from_terms(p.domain(), p.terms().map(|(m, c)| (m.clone(), c.clone())));
            prop_assert_eq!(&again, &p);
            prop_assert!(p.terms().all(|(_, c)| !c.is_zero()));
        }

        #[test]
        fn components_reconstruct_and_project(p in arb_poly(Domain::Rational)) {
            let c = ctx();
            let parts = c.components(&p);
            let mut sum = Poly::zero(Domain::Rational);
            for (alpha, part) in &parts {
                let again = c.multihomogeneous_component(part, alpha);
                prop_assert_eq!(&again, part);
                sum = &sum + part;
            }
            prop_assert_eq!(sum, p);
        }
    }
}
