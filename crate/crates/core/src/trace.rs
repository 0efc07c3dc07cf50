//! Polynomials in the free symbols `t(w)`, `w ∈ M(q)`.

use std::collections::BTreeMap;
use std::fmt;

use crate::coeff::{Coeff, Domain};
use crate::error::{Error, Result};
use crate::word::{parse_word_at, Word, WordMultiset};

/// An element of the free polynomial ring `K[t(w) | w ∈ M(q)]`.
///
/// A t-monomial `t(w1)⋯t(wr)` is stored as the multiset `{w1, …, wr}`; the
/// empty multiset is the constant monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TracePoly {
    q: u32,
    m: usize,
    domain: Domain,
    terms: BTreeMap<WordMultiset, Coeff>,
}

impl TracePoly {
    pub fn zero(q: u32, m: usize, domain: Domain) -> TracePoly {
        TracePoly {
            q,
            m,
            domain,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(q: u32, m: usize, domain: Domain) -> TracePoly {
        TracePoly::monomial(q, m, WordMultiset::empty(), domain.one())
    }

    /// `c · t(w1)⋯t(wr)`. Panics if a word lies outside `M(q)`; use
    /// [`TracePoly::try_monomial`] for checked construction.
    pub fn monomial(q: u32, m: usize, ms: WordMultiset, c: Coeff) -> TracePoly {
        TracePoly::try_monomial(q, m, ms, c).expect("word outside M(q)")
    }

    pub fn try_monomial(q: u32, m: usize, ms: WordMultiset, c: Coeff) -> Result<TracePoly> {
        let mut p = TracePoly::zero(q, m, c.domain());
        p.add_term(ms, c)?;
        Ok(p)
    }

    /// The single symbol `t(w)`.
    pub fn t(q: u32, w: &Word, domain: Domain) -> Result<TracePoly> {
        TracePoly::try_monomial(q, w.num_series(), WordMultiset::singleton(w.clone()), domain.one())
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn num_series(&self) -> usize {
        self.m
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

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&WordMultiset, &Coeff)> {
        self.terms.iter()
    }

    pub fn coeff(&self, ms: &WordMultiset) -> Coeff {
        self.terms.get(ms).cloned().unwrap_or_else(|| self.domain.zero())
    }

    /// Largest height of a t-monomial in the support.
    pub fn max_height(&self) -> usize {
        self.terms.keys().map(|k| k.height()).max().unwrap_or(0)
    }

    /// Largest total degree of a t-monomial (t(w) has the degree of w).
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.degree()).max()
    }

    /// Multidegrees present in the support.
    pub fn multidegrees(&self) -> Vec<Vec<u32>> {
        let mut v: Vec<Vec<u32>> = self.terms.keys().map(|k| k.multidegree(self.m)).collect();
        v.sort();
        v.dedup();
        v
    }

    fn check_words(&self, ms: &WordMultiset) -> Result<()> {
        for w in ms.words() {
            if w.num_series() != self.m {
                return Err(Error::DimensionMismatch(format!(
                    "word {w} has {} series, expected {}",
                    w.num_series(),
                    self.m
                )));
            }
            if !w.in_m(self.q) {
                return Err(Error::NotInM {
                    word: w.to_string(),
                    q: self.q,
                });
            }
        }
        Ok(())
    }

    pub fn add_term(&mut self, ms: WordMultiset, c: Coeff) -> Result<()> {
        if c.domain() != self.domain {
            return Err(Error::DomainMismatch {
                left: self.domain,
                right: c.domain(),
            });
        }
        self.check_words(&ms)?;
        self.add_term_unchecked(ms, c);
        Ok(())
    }

    fn add_term_unchecked(&mut self, ms: WordMultiset, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(ms) {
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

    fn compatible(&self, other: &TracePoly) -> Result<()> {
        if self.domain != other.domain {
            return Err(Error::DomainMismatch {
                left: self.domain,
                right: other.domain,
            });
        }
        if self.q != other.q || self.m != other.m {
            return Err(Error::DimensionMismatch(format!(
                "trace polynomials over (q={}, m={}) and (q={}, m={})",
                self.q, self.m, other.q, other.m
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &TracePoly) -> Result<TracePoly> {
        self.compatible(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term_unchecked(k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &TracePoly) -> Result<TracePoly> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &TracePoly) -> Result<TracePoly> {
        self.compatible(other)?;
        let mut out = TracePoly::zero(self.q, self.m, self.domain);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term_unchecked(a.union(b), ca.mul(cb));
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> TracePoly {
        self.scale(&self.domain.one().neg())
    }

    pub fn scale(&self, c: &Coeff) -> TracePoly {
        let mut out = TracePoly::zero(self.q, self.m, self.domain);
        for (k, v) in &self.terms {
            out.add_term_unchecked(k.clone(), v.mul(c));
        }
        out
    }

    /// Multiplies by the t-monomial `ms`.
    pub fn mul_monomial(&self, ms: &WordMultiset) -> TracePoly {
        TracePoly {
            q: self.q,
            m: self.m,
            domain: self.domain,
            terms: self.terms.iter().map(|(k, c)| (k.union(ms), c.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> TracePoly {
        let mut acc = TracePoly::one(self.q, self.m, self.domain);
        for _ in 0..k {
            acc = acc.try_mul(self).expect("same context");
        }
        acc
    }

    pub fn convert(&self, target: Domain) -> Result<TracePoly> {
        let mut out = TracePoly::zero(self.q, self.m, target);
        for (k, c) in &self.terms {
            out.add_term_unchecked(k.clone(), c.convert(target)?);
        }
        Ok(out)
    }

    /// Keeps the terms selected by `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&WordMultiset) -> bool) -> TracePoly {
        TracePoly {
            q: self.q,
            m: self.m,
            domain: self.domain,
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| keep(k))
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    /// Replaces every symbol by a polynomial: `t(w) ↦ images(w)`. Symbols
    /// for which `images` returns `None` are kept.
    pub fn substitute(&self, images: &mut dyn FnMut(&Word) -> Option<TracePoly>) -> Result<TracePoly> {
        let mut cache: BTreeMap<Word, Option<TracePoly>> = BTreeMap::new();
        let mut out = TracePoly::zero(self.q, self.m, self.domain);
        for (ms, c) in &self.terms {
            let mut acc = TracePoly::monomial(self.q, self.m, WordMultiset::empty(), c.clone());
            let mut kept = Vec::new();
            for w in ms.words() {
                let img = cache.entry(w.clone()).or_insert_with(|| images(w));
                match img {
                    Some(p) => acc = acc.try_mul(p)?,
                    None => kept.push(w.clone()),
                }
            }
            out = out.try_add(&acc.mul_monomial(&WordMultiset::new(kept)))?;
        }
        Ok(out)
    }

    /// Parses text such as `2*t(x1)*t(x2) - 1/2*t(x1*x2)^2 + 3`.
    pub fn parse(text: &str, q: u32, m: usize, domain: Domain) -> Result<TracePoly> {
        Parser::new(text, q, m, domain).parse()
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, ms: &WordMultiset) -> fmt::Result {
    let mut first = true;
    for (w, r) in ms.distinct() {
        if !first {
            write!(f, "*")?;
        }
        first = false;
        write!(f, "t({w})")?;
        if r > 1 {
            write!(f, "^{r}")?;
        }
    }
    Ok(())
}

impl fmt::Display for TracePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // highest height first, then canonical multiset order
        let mut items: Vec<_> = self.terms.iter().collect();
        items.sort_by(|a, b| b.0.height().cmp(&a.0.height()).then_with(|| a.0.cmp(b.0)));
        for (i, (ms, c)) in items.into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { c.neg() } else { c.clone() };
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            if ms.is_empty() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                write_monomial(f, ms)?;
            }
        }
        Ok(())
    }
}

/// Serialized as a list of `{"coeff": "...", "monomial": [[word, k], …]}`
/// in display order.
impl serde::Serialize for TracePoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::{SerializeMap, SerializeSeq};
        struct Term<'a>(&'a WordMultiset, &'a Coeff);
        impl serde::Serialize for Term<'_> {
            fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut map = s.serialize_map(Some(2))?;
                map.serialize_entry("coeff", self.1)?;
                map.serialize_entry("monomial", self.0)?;
                map.end()
            }
        }
        let mut items: Vec<_> = self.terms.iter().collect();
        items.sort_by(|a, b| b.0.height().cmp(&a.0.height()).then_with(|| a.0.cmp(b.0)));
        let mut seq = s.serialize_seq(Some(items.len()))?;
        for (ms, c) in items {
            seq.serialize_element(&Term(ms, c))?;
        }
        seq.end()
    }
}

struct Parser<'a> {
    text: &'a str,
    chars: Vec<(usize, char)>,
    pos: usize,
    q: u32,
    m: usize,
    domain: Domain,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str, q: u32, m: usize, domain: Domain) -> Parser<'a> {
        Parser {
            text,
            chars: text.char_indices().filter(|(_, c)| !c.is_whitespace()).collect(),
            pos: 0,
            q,
            m,
            domain,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn err(&self, message: &str) -> Error {
        let (position, token) = match self.chars.get(self.pos) {
            Some(&(p, c)) => (p, c.to_string()),
            None => (self.text.len(), "<end>".to_string()),
        };
        Error::Parse {
            position,
            token,
            message: message.to_string(),
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected `{c}`")))
        }
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().map(|&(_, c)| c).collect())
    }

    fn parse(mut self) -> Result<TracePoly> {
        if self.chars.is_empty() {
            return Err(self.err("empty expression"));
        }
        let mut out = TracePoly::zero(self.q, self.m, self.domain);
        let mut first = true;
        loop {
            let mut sign = false;
            match self.peek() {
                Some('+') => self.pos += 1,
                Some('-') => {
                    self.pos += 1;
                    sign = true;
                }
                None => break,
                _ if first => {}
                _ => return Err(self.err("expected `+` or `-`")),
            }
            first = false;
            let (ms, c) = self.term()?;
            out.add_term(ms, if sign { c.neg() } else { c })?;
        }
        Ok(out)
    }

    fn term(&mut self) -> Result<(WordMultiset, Coeff)> {
        let mut coeff = self.domain.one();
        let mut words = Vec::new();
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let num = self.digits().unwrap();
                    let mut lit = num;
                    if self.peek() == Some('/') {
                        self.pos += 1;
                        let den = self.digits().ok_or_else(|| self.err("expected a denominator"))?;
                        lit = format!("{lit}/{den}");
                    }
                    let c = Coeff::parse(self.domain, &lit).map_err(|e| match e {
                        Error::Parse { .. } => self.err("bad coefficient"),
                        other => other,
                    })?;
                    coeff = coeff.mul(&c);
                }
                Some('t') => {
                    self.pos += 1;
                    self.expect('(')?;
                    let start = self.pos;
                    while !matches!(self.peek(), Some(')') | None) {
                        self.pos += 1;
                    }
                    if self.peek().is_none() {
                        return Err(self.err("unclosed `t(`"));
                    }
                    let begin = self.chars.get(start).map_or(self.text.len(), |&(p, _)| p);
                    let end = self.chars[self.pos].0;
                    let w = parse_word_at(&self.text[begin..end], self.m, begin)?;
                    self.pos += 1;
                    let mut k = 1usize;
                    if self.peek() == Some('^') {
                        self.pos += 1;
                        k = self
                            .digits()
                            .and_then(|d| d.parse().ok())
                            .filter(|&k: &usize| k >= 1)
                            .ok_or_else(|| self.err("expected a positive exponent"))?;
                    }
                    for _ in 0..k {
                        words.push(w.clone());
                    }
                }
                _ => return Err(self.err("expected a coefficient or `t(`")),
            }
            if self.peek() == Some('*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok((WordMultiset::new(words), coeff))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s, 3).unwrap()
    }

    #[test]
    fn parse_and_display_round_trip() {
        let d = Domain::Rational;
        let p = TracePoly::parse("2*t(x1)*t(x2) - t(x1*x2) + 1/2*t(x3)^2 - 3", 1, 3, d).unwrap();
        assert_eq!(p.len(), 4);
        assert_eq!(p.max_height(), 2);
        let again = TracePoly::parse(&p.to_string(), 1, 3, d).unwrap();
        assert_eq!(again, p);
        assert_eq!(p.coeff(&WordMultiset::new(vec![w("x3"), w("x3")])), Coeff::parse(d, "1/2").unwrap());
    }

    #[test]
    fn parse_rejects_words_outside_m() {
        let e = TracePoly::parse("t(x1)", 2, 2, Domain::Rational).unwrap_err();
        assert!(matches!(e, Error::NotInM { .. }));
    }

    #[test]
    fn parse_error_positions() {
        match TracePoly::parse("t(x1) + t(y)", 1, 2, Domain::Rational).unwrap_err() {
            Error::Parse { position, .. } => assert_eq!(position, 10),
            e => panic!("{e:?}"),
        }
        assert!(TracePoly::parse("t(x1) t(x2)", 1, 2, Domain::Rational).is_err());
        assert!(TracePoly::parse("", 1, 2, Domain::Rational).is_err());
    }

    #[test]
    fn multiplication_is_union() {
        let d = Domain::Integer;
        let a = TracePoly::parse("t(x1) + t(x2)", 1, 3, d).unwrap();
        let sq = a.try_mul(&a).unwrap();
        assert_eq!(sq, TracePoly::parse("t(x1)^2 + 2*t(x1)*t(x2) + t(x2)^2", 1, 3, d).unwrap());
        assert_eq!(a.pow(2), sq);
        assert!(a.try_sub(&a).unwrap().is_zero());
    }

    #[test]
    fn substitution() {
        let d = Domain::Rational;
        let p = TracePoly::parse("t(x1^2) * t(x2)", 1, 3, d).unwrap();
        let sub = p
            .substitute(&mut |u: &Word| (u.degree() == 2).then(|| TracePoly::parse("t(x1)^2", 1, 3, d).unwrap()))
            .unwrap();
        assert_eq!(sub, TracePoly::parse("t(x1)^2*t(x2)", 1, 3, d).unwrap());
    }

    #[test]
    fn mixed_domains_rejected() {
        let a = TracePoly::one(1, 2, Domain::Rational);
        let b = TracePoly::one(1, 2, Domain::Integer);
        assert!(matches!(a.try_add(&b), Err(Error::DomainMismatch { .. })));
    }
}
