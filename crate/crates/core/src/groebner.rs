//! Buchberger's algorithm over the rationals and prime fields, with
//! ideal membership, standard monomials and the Hilbert ideal.

use std::cmp::{Ordering, Reverse};
use std::collections::{BinaryHeap, HashSet};

use rayon::prelude::*;

use crate::coeff::{Coeff, Domain};
use crate::error::{Error, Result};
use crate::invariants::{bracket, GroupContext};
use crate::poly::{Monomial, Poly};
use crate::word::{enumerate_words, Word, WordBound};

/// The comparison used after the (weighted) degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    /// Graded reverse lexicographic.
    Grevlex,
    /// Graded lexicographic.
    Glex,
    /// Pure lexicographic.
    Lex,
}

/// A monomial order on variable indices, variable `0` largest.
///
/// With `weights`, the graded kinds compare the weighted degree first; for
/// `Lex` the weights are compared first as well, giving a weighted lex
/// order. Weights must be positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    pub kind: OrderKind,
    pub weights: Option<Vec<u32>>,
}

impl Default for MonomialOrder {
    fn default() -> Self {
        MonomialOrder::grevlex()
    }
}

impl MonomialOrder {
    pub fn grevlex() -> MonomialOrder {
        MonomialOrder {
            kind: OrderKind::Grevlex,
            weights: None,
        }
    }

    pub fn glex() -> MonomialOrder {
        MonomialOrder {
            kind: OrderKind::Glex,
            weights: None,
        }
    }

    pub fn lex() -> MonomialOrder {
        MonomialOrder {
            kind: OrderKind::Lex,
            weights: None,
        }
    }

    pub fn with_weights(mut self, weights: Vec<u32>) -> MonomialOrder {
        self.weights = Some(weights);
        self
    }

    fn weight(&self, v: usize) -> u64 {
        match &self.weights {
            Some(w) => w.get(v).copied().unwrap_or(1) as u64,
            None => 1,
        }
    }

    /// The grading of the order: weighted degree, or total degree.
    pub fn degree(&self, m: &Monomial) -> u64 {
        m.pairs().iter().map(|&(v, e)| self.weight(v as usize) * e as u64).sum()
    }

    fn dense_degree(&self, e: &[u32]) -> u64 {
        e.iter().enumerate().map(|(v, &x)| self.weight(v) * x as u64).sum()
    }

    fn is_graded(&self) -> bool {
        self.kind != OrderKind::Lex || self.weights.is_some()
    }

    fn cmp_dense(&self, a: &[u32], b: &[u32]) -> Ordering {
        if self.is_graded() {
            let c = self.dense_degree(a).cmp(&self.dense_degree(b));
            if c != Ordering::Equal {
                return c;
            }
        }
        match self.kind {
            OrderKind::Grevlex => {
                // total degree tie first when weighted
                let c = a.iter().sum::<u32>().cmp(&b.iter().sum::<u32>());
                if c != Ordering::Equal {
                    return c;
                }
                for (x, y) in a.iter().zip(b).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }
            OrderKind::Glex | OrderKind::Lex => {
                if self.kind == OrderKind::Glex {
                    let c = a.iter().sum::<u32>().cmp(&b.iter().sum::<u32>());
                    if c != Ordering::Equal {
                        return c;
                    }
                }
                for (x, y) in a.iter().zip(b) {
                    if x != y {
                        return x.cmp(y);
                    }
                }
                Ordering::Equal
            }
        }
    }

    /// Compares two monomials in this order.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let n = a
            .pairs()
            .iter()
            .chain(b.pairs())
            .map(|&(v, _)| v as usize + 1)
            .max()
            .unwrap_or(0);
        self.cmp_dense(&dense(a, n), &dense(b, n))
    }
}

fn dense(m: &Monomial, nvars: usize) -> Vec<u32> {
    let mut e = vec![0; nvars];
    for &(v, x) in m.pairs() {
        e[v as usize] = x;
    }
    e
}

fn sparse(e: &[u32]) -> Monomial {
    Monomial::from_exponents(e)
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn lcm(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

fn sub_exps(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

// Dense-exponent polynomial, terms strictly descending in the order.
#[derive(Clone, Debug)]
struct GPoly {
    terms: Vec<(Vec<u32>, Coeff)>,
}

impl GPoly {
    fn from_poly(p: &Poly, nvars: usize, ord: &MonomialOrder) -> GPoly {
        let mut terms: Vec<(Vec<u32>, Coeff)> =
            p.terms().map(|(m, c)| (dense(m, nvars), c.clone())).collect();
        terms.sort_by(|a, b| ord.cmp_dense(&b.0, &a.0));
        GPoly { terms }
    }

    fn to_poly(&self, domain: Domain) -> Poly {
        Poly::from_terms(domain, self.terms.iter().map(|(e, c)| (sparse(e), c.clone())))
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lead(&self) -> &[u32] {
        &self.terms[0].0
    }

    fn monic(mut self) -> GPoly {
        if let Some(inv) = self.terms.first().and_then(|t| t.1.inv()) {
            for t in &mut self.terms {
                t.1 = t.1.mul(&inv);
            }
        }
        self
    }

    // self − c · x^shift · g
    fn sub_scaled(&self, c: &Coeff, shift: &[u32], g: &GPoly, ord: &MonomialOrder) -> GPoly {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut i = 0;
        let mut gi = g.terms.iter().map(|(e, d)| {
            let e: Vec<u32> = e.iter().zip(shift).map(|(x, y)| x + y).collect();
            (e, d.mul(c).neg())
        });
        let mut next = gi.next();
        while i < self.terms.len() || next.is_some() {
            match (&self.terms.get(i), &next) {
                (Some(a), Some(b)) => match ord.cmp_dense(&a.0, &b.0) {
                    Ordering::Greater => {
                        out.push((*a).clone());
                        i += 1;
                    }
                    Ordering::Less => {
                        out.push(next.take().unwrap());
                        next = gi.next();
                    }
                    Ordering::Equal => {
                        let s = a.1.add(&b.1);
                        if !s.is_zero() {
                            out.push((a.0.clone(), s));
                        }
                        i += 1;
                        next = gi.next();
                    }
                },
                (Some(a), None) => {
                    out.push((*a).clone());
                    i += 1;
                }
                (None, Some(_)) => {
                    out.push(next.take().unwrap());
                    next = gi.next();
                }
                (None, None) => unreachable!(),
            }
        }
        GPoly { terms: out }
    }
}

// Full reduction of `f` by `basis`; optionally records quotients.
fn reduce_full(
    f: &GPoly,
    basis: &[GPoly],
    ord: &MonomialOrder,
    mut quotients: Option<&mut Vec<Vec<(Vec<u32>, Coeff)>>>,
) -> GPoly {
    let mut p = f.clone();
    let mut rem: Vec<(Vec<u32>, Coeff)> = Vec::new();
    while !p.is_zero() {
        let (lm, lc) = p.terms[0].clone();
        match basis.iter().position(|g| divides(g.lead(), &lm)) {
            Some(k) => {
                let g = &basis[k];
                let shift = sub_exps(&lm, g.lead());
                let c = lc.div(&g.terms[0].1).expect("field coefficients");
                if let Some(q) = quotients.as_deref_mut() {
                    q[k].push((shift.clone(), c.clone()));
                }
                p = p.sub_scaled(&c, &shift, g, ord);
            }
            None => {
                rem.push((lm, lc));
                p.terms.remove(0);
            }
        }
    }
    GPoly { terms: rem }
}

// Only the leading term is reduced.
fn reduce_top(f: &GPoly, basis: &[GPoly], ord: &MonomialOrder) -> GPoly {
    let mut p = f.clone();
    while !p.is_zero() {
        let lm = p.lead().to_vec();
        match basis.iter().find(|g| divides(g.lead(), &lm)) {
            Some(g) => {
                let shift = sub_exps(&lm, g.lead());
                let c = p.terms[0].1.div(&g.terms[0].1).expect("field coefficients");
                p = p.sub_scaled(&c, &shift, g, ord);
            }
            None => break,
        }
    }
    p
}

fn s_poly(f: &GPoly, g: &GPoly, ord: &MonomialOrder) -> GPoly {
    let l = lcm(f.lead(), g.lead());
    let sf = sub_exps(&l, f.lead());
    let sg = sub_exps(&l, g.lead());
    let a = GPoly { terms: Vec::new() }.sub_scaled(&f.terms[0].1.inv().unwrap().neg(), &sf, f, ord);
    a.sub_scaled(&g.terms[0].1.inv().unwrap(), &sg, g, ord)
}

/// Settings for [`buchberger_with`].
#[derive(Clone, Debug, Default)]
pub struct GroebnerOptions {
    /// Drop S-pairs whose lcm has degree above the cap. For generators
    /// homogeneous in the order's grading the result is a Gröbner basis in
    /// all degrees up to the cap.
    pub degree_cap: Option<u64>,
    /// Number of variables; defaults to one more than the largest index
    /// occurring in the generators.
    pub num_vars: Option<usize>,
    /// Recheck Buchberger's criterion on the output.
    pub verify: bool,
}

/// A reduced Gröbner basis together with the ideal generators it came from.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    domain: Domain,
    order: MonomialOrder,
    nvars: usize,
    degree_cap: Option<u64>,
    generators: Vec<Poly>,
    basis: Vec<GPoly>,
}

/// Quotients and remainder of division by a Gröbner basis:
/// `f = Σ quotients[i]·basis[i] + remainder`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Division {
    pub quotients: Vec<Poly>,
    pub remainder: Poly,
}

/// The reduced Gröbner basis of the ideal generated by `gens`.
pub fn buchberger(gens: &[Poly], order: &MonomialOrder) -> Result<GroebnerBasis> {
    buchberger_with(gens, order, &GroebnerOptions::default())
}

pub fn buchberger_with(gens: &[Poly], order: &MonomialOrder, opts: &GroebnerOptions) -> Result<GroebnerBasis> {
    let domain = gens.first().map(Poly::domain).unwrap_or(Domain::Rational);
    domain.require_field()?;
    if let Some(g) = gens.iter().find(|g| g.domain() != domain) {
        return Err(Error::DomainMismatch {
            left: domain,
            right: g.domain(),
        });
    }
    if let Some(w) = &order.weights {
        if w.contains(&0) {
            return Err(Error::InvalidArgument("order weights must be positive".into()));
        }
    }
    let used = gens
        .iter()
        .flat_map(|g| g.terms().flat_map(|(m, _)| m.pairs().iter().map(|&(v, _)| v as usize + 1)))
        .max()
        .unwrap_or(0);
    let nvars = opts.num_vars.unwrap_or(used).max(used);
    if opts.degree_cap.is_some() {
        for g in gens {
            let mut degs = g.terms().map(|(m, _)| order.degree(m));
            if let Some(d) = degs.next() {
                if degs.any(|e| e != d) {
                    return Err(Error::NotHomogeneous);
                }
            }
        }
    }
    let mut basis: Vec<GPoly> = Vec::new();
    for g in gens {
        let gp = GPoly::from_poly(g, nvars, order);
        if opts.degree_cap.is_some_and(|cap| !gp.is_zero() && order.dense_degree(gp.lead()) > cap) {
            continue;
        }
        let r = reduce_full(&gp, &basis, order, None);
        if !r.is_zero() {
            basis.push(r.monic());
        }
    }
    let mut gb = run_buchberger(basis, order, opts.degree_cap);
    gb = interreduce(gb, order);
    let out = GroebnerBasis {
        domain,
        order: order.clone(),
        nvars,
        degree_cap: opts.degree_cap,
        generators: gens.to_vec(),
        basis: gb,
    };
    if !out.generators_reduce_to_zero() {
        return Err(Error::Inconclusive("an input generator does not reduce to zero".into()));
    }
    if opts.verify && !out.is_groebner() {
        return Err(Error::Inconclusive("Buchberger criterion failed on the output".into()));
    }
    Ok(out)
}

fn run_buchberger(mut basis: Vec<GPoly>, ord: &MonomialOrder, cap: Option<u64>) -> Vec<GPoly> {
    let mut heap: BinaryHeap<Reverse<(u64, usize, usize)>> = BinaryHeap::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    let push = |i: usize,
                j: usize,
                basis: &[GPoly],
                heap: &mut BinaryHeap<Reverse<(u64, usize, usize)>>,
                pending: &mut HashSet<(usize, usize)>| {
        let d = ord.dense_degree(&lcm(basis[i].lead(), basis[j].lead()));
        if cap.is_some_and(|c| d > c) {
            return;
        }
        heap.push(Reverse((d, j, i)));
        pending.insert((i, j));
    };
    for j in 0..basis.len() {
        for i in 0..j {
            push(i, j, &basis, &mut heap, &mut pending);
        }
    }
    while let Some(Reverse((_, j, i))) = heap.pop() {
        pending.remove(&(i, j));
        let (fi, fj) = (&basis[i], &basis[j]);
        if coprime(fi.lead(), fj.lead()) {
            continue;
        }
        let l = lcm(fi.lead(), fj.lead());
        // chain criterion
        let key = |a: usize, b: usize| if a < b { (a, b) } else { (b, a) };
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && divides(basis[k].lead(), &l)
                && !pending.contains(&key(i, k))
                && !pending.contains(&key(j, k))
        });
        if chain {
            continue;
        }
        let s = s_poly(fi, fj, ord);
        let r = reduce_full(&s, &basis, ord, None);
        if r.is_zero() {
            continue;
        }
        basis.push(r.monic());
        let new = basis.len() - 1;
        for k in 0..new {
            push(k, new, &basis, &mut heap, &mut pending);
        }
    }
    basis
}

fn interreduce(basis: Vec<GPoly>, ord: &MonomialOrder) -> Vec<GPoly> {
    // keep elements whose leading monomial is minimal
    let mut keep: Vec<GPoly> = Vec::new();
    let mut sorted = basis;
    sorted.sort_by(|a, b| ord.cmp_dense(a.lead(), b.lead()));
    for g in sorted {
        if !keep.iter().any(|h| divides(h.lead(), g.lead())) {
            keep.push(g);
        }
    }
    let mut out = Vec::with_capacity(keep.len());
    for i in 0..keep.len() {
        let others: Vec<GPoly> =
            keep.iter().enumerate().filter(|(k, _)| *k != i).map(|(_, g)| g.clone()).collect();
        let g = &keep[i];
        let head = GPoly {
            terms: vec![g.terms[0].clone()],
        };
        let tail = GPoly {
            terms: g.terms[1..].to_vec(),
        };
        let mut r = reduce_full(&tail, &others, ord, None);
        r.terms.insert(0, head.terms[0].clone());
        out.push(r.monic());
    }
    out
}

impl GroebnerBasis {
    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn num_vars(&self) -> usize {
        self.nvars
    }

    pub fn degree_cap(&self) -> Option<u64> {
        self.degree_cap
    }

    /// The generators the basis was computed from.
    pub fn generators(&self) -> &[Poly] {
        &self.generators
    }

    /// The reduced basis, ascending by leading monomial.
    pub fn basis(&self) -> Vec<Poly> {
        self.basis.iter().map(|g| g.to_poly(self.domain)).collect()
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.basis.iter().map(|g| sparse(g.lead())).collect()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.basis.iter().any(|g| g.lead().iter().all(|&e| e == 0))
    }

    fn to_g(&self, f: &Poly) -> Result<GPoly> {
        if f.domain() != self.domain {
            return Err(Error::DomainMismatch {
                left: self.domain,
                right: f.domain(),
            });
        }
        if let Some(v) = f.terms().flat_map(|(m, _)| m.pairs().iter().map(|p| p.0)).max() {
            if v as usize >= self.nvars {
                return Err(Error::DimensionMismatch(format!(
                    "variable {v} outside the {} variables of the basis",
                    self.nvars
                )));
            }
        }
        Ok(GPoly::from_poly(f, self.nvars, &self.order))
    }

    /// The normal form of `f`.
    pub fn reduce(&self, f: &Poly) -> Result<Poly> {
        let g = self.to_g(f)?;
        Ok(reduce_full(&g, &self.basis, &self.order, None).to_poly(self.domain))
    }

    /// Division with quotients: `f = Σ q_i·basis[i] + remainder`.
    pub fn divide(&self, f: &Poly) -> Result<Division> {
        let g = self.to_g(f)?;
        let mut qs = vec![Vec::new(); self.basis.len()];
        let r = reduce_full(&g, &self.basis, &self.order, Some(&mut qs));
        let quotients = qs
            .into_iter()
            .map(|terms| Poly::from_terms(self.domain, terms.into_iter().map(|(e, c)| (sparse(&e), c))))
            .collect();
        Ok(Division {
            quotients,
            remainder: r.to_poly(self.domain),
        })
    }

    /// Whether `f` lies in the ideal. With a degree cap, only decisive for
    /// homogeneous `f` of degree at most the cap.
    pub fn contains(&self, f: &Poly) -> Result<bool> {
        Ok(self.reduce(f)?.is_zero())
    }

    /// Membership of many polynomials, tested in parallel.
    pub fn contains_all(&self, fs: &[Poly]) -> Result<Vec<bool>> {
        fs.par_iter().map(|f| self.contains(f)).collect()
    }

    fn within_cap(&self, e: &[u32]) -> bool {
        self.degree_cap.is_none_or(|c| self.order.dense_degree(e) <= c)
    }

    fn generators_reduce_to_zero(&self) -> bool {
        self.generators.iter().all(|g| {
            let gp = GPoly::from_poly(g, self.nvars, &self.order);
            gp.is_zero()
                || !self.within_cap(gp.lead())
                || reduce_top(&gp, &self.basis, &self.order).is_zero()
        })
    }

    /// Buchberger's criterion: every S-polynomial (within the degree cap)
    /// reduces to zero.
    pub fn is_groebner(&self) -> bool {
        let b = &self.basis;
        (0..b.len()).all(|j| {
            (0..j).all(|i| {
                let l = lcm(b[i].lead(), b[j].lead());
                !self.within_cap(&l)
                    || coprime(b[i].lead(), b[j].lead())
                    || reduce_full(&s_poly(&b[i], &b[j], &self.order), b, &self.order, None).is_zero()
            })
        })
    }

    /// Whether no leading monomial divides `m`.
    pub fn is_standard(&self, m: &Monomial) -> bool {
        let e = dense(m, self.nvars.max(m.pairs().last().map_or(0, |p| p.0 as usize + 1)));
        !self.basis.iter().any(|g| divides_padded(g.lead(), &e))
    }

    /// Visits every standard monomial of degree at most `cap` in the
    /// order's grading.
    pub fn for_each_standard(&self, cap: u64, visit: &mut dyn FnMut(&Monomial, u64)) {
        let leads: Vec<&[u32]> = self.basis.iter().map(|g| g.lead()).collect();
        let mut cur = vec![0u32; self.nvars];
        self.standard_rec(0, 0, cap, &leads, &mut cur, visit);
    }

    fn standard_rec(
        &self,
        v: usize,
        deg: u64,
        cap: u64,
        leads: &[&[u32]],
        cur: &mut Vec<u32>,
        visit: &mut dyn FnMut(&Monomial, u64),
    ) {
        if v == self.nvars {
            visit(&sparse(cur), deg);
            return;
        }
        let w = self.order.weight(v);
        let mut d = deg;
        loop {
            // a divisible partial monomial stays divisible when extended
            if leads.iter().any(|l| divides_prefix(l, cur, v)) {
                break;
            }
            self.standard_rec(v + 1, d, cap, leads, cur, visit);
            if d + w > cap {
                break;
            }
            cur[v] += 1;
            d += w;
        }
        cur[v] = 0;
    }
}

fn divides_padded(a: &[u32], e: &[u32]) -> bool {
    a.iter().enumerate().all(|(i, &x)| x <= e.get(i).copied().unwrap_or(0))
}

// Whether `lead` divides `cur`, where only variables `0..=v` are set.
fn divides_prefix(lead: &[u32], cur: &[u32], v: usize) -> bool {
    lead[v + 1..].iter().all(|&x| x == 0) && divides(&lead[..=v], &cur[..=v])
}

/// `(f ∈ I, normal form of f)`.
pub fn ideal_membership(f: &Poly, gb: &GroebnerBasis) -> Result<(bool, Poly)> {
    let r = gb.reduce(f)?;
    Ok((r.is_zero(), r))
}

/// Standard monomials of degree at most `cap`, grouped by degree: entry
/// `d` lists the standard monomials of degree `d`, ascending.
pub fn standard_monomials(gb: &GroebnerBasis, cap: u64) -> Vec<Vec<Monomial>> {
    let mut out = vec![Vec::new(); cap as usize + 1];
    if gb.is_unit_ideal() {
        return out;
    }
    gb.for_each_standard(cap, &mut |m, d| out[d as usize].push(m.clone()));
    for level in &mut out {
        level.sort_by(|a, b| gb.order.compare(a, b));
    }
    out
}

/// The ideal of `K[V^m]` generated by the brackets `[w]`, `w ∈ M(q)` with
/// `deg(w) ≤ nq`, which generate the positive-degree invariants.
#[derive(Clone, Debug)]
pub struct HilbertIdeal {
    ctx: GroupContext,
    words: Vec<Word>,
    generators: Vec<Poly>,
}

impl HilbertIdeal {
    pub fn new(n: usize, q: u32, m: usize) -> HilbertIdeal {
        let ctx = GroupContext::new(n, q, m);
        let words = enumerate_words(m, q, &WordBound::MaxDegree(n as u32 * q));
        let generators = words.iter().map(|w| bracket(w, n, Domain::Rational)).collect();
        HilbertIdeal { ctx, words, generators }
    }

    pub fn context(&self) -> GroupContext {
        self.ctx
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn generators(&self) -> &[Poly] {
        &self.generators
    }

    /// Grevlex basis truncated at `cap`.
    pub fn groebner_basis(&self, cap: u64) -> Result<GroebnerBasis> {
        let opts = GroebnerOptions {
            degree_cap: Some(cap),
            num_vars: Some(self.ctx.n * self.ctx.m),
            verify: false,
        };
        buchberger_with(&self.generators, &MonomialOrder::grevlex(), &opts)
    }
}

/// `1 + Σ_{j=1}^n (qj − 1)`.
pub fn tau_formula(n: usize, q: u32) -> u32 {
    1 + (1..=n as u32).map(|j| q * j - 1).sum::<u32>()
}

/// The least `d` such that every homogeneous polynomial of degree `≥ d`
/// lies in the Hilbert ideal, computed as one more than the top degree of
/// a standard monomial. Uses the default cap `2·tau_formula`.
pub fn tau(n: usize, q: u32, m: usize) -> Result<u32> {
    tau_with_cap(n, q, m, 2 * tau_formula(n, q) as u64)
}

/// [`tau`] with an explicit degree cap. Fails as inconclusive when the
/// quotient has not vanished by the cap.
pub fn tau_with_cap(n: usize, q: u32, m: usize, cap: u64) -> Result<u32> {
    let gb = HilbertIdeal::new(n, q, m).groebner_basis(cap)?;
    let std = standard_monomials(&gb, cap);
    // the quotient is generated in degree one, so it vanishes above the
    // first empty degree
    match std.iter().position(Vec::is_empty) {
        Some(d) => Ok(d as u32),
        None => Err(Error::Inconclusive(format!(
            "coinvariant quotient for (n,q,m)=({n},{q},{m}) still nonzero at degree cap {cap}"
        ))),
    }
}
