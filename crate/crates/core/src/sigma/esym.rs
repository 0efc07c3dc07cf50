//! Polynomials in formal symbols `e_r(w)` standing for `σ_r(w)`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::coeff::{Coeff, Domain};
use crate::error::{Error, Result};
use crate::invariants::sigma;
use crate::poly::Poly;
use crate::word::Word;

/// The symbol `e_r(w)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ESymbol {
    pub word: Word,
    pub r: usize,
}

impl fmt::Display for ESymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}({})", self.r, self.word)
    }
}

/// A product of symbols, kept sorted.
pub type EMonomial = Vec<ESymbol>;

fn mono_mul(a: &EMonomial, b: &EMonomial) -> EMonomial {
    let mut v: EMonomial = a.iter().chain(b).cloned().collect();
    v.sort();
    v
}

/// Weight `Σ r` of a symbol product.
pub fn weight(mono: &EMonomial) -> usize {
    mono.iter().map(|s| s.r).sum()
}

/// Multidegree of the evaluation of a symbol product.
pub fn mono_multidegree(mono: &EMonomial, m: usize) -> Vec<u32> {
    let mut out = vec![0; m];
    for s in mono {
        for (o, e) in out.iter_mut().zip(s.word.exponents()) {
            *o += e * s.r as u32;
        }
    }
    out
}

/// A polynomial in the symbols `e_r(w)`, `1 ≤ r ≤ n`, over `m` series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ESymbolPoly {
    n: usize,
    m: usize,
    domain: Domain,
    terms: BTreeMap<EMonomial, Coeff>,
}

impl ESymbolPoly {
    pub fn zero(n: usize, m: usize, domain: Domain) -> ESymbolPoly {
        ESymbolPoly {
            n,
            m,
            domain,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize, m: usize, domain: Domain) -> ESymbolPoly {
        let mut p = ESymbolPoly::zero(n, m, domain);
        p.terms.insert(Vec::new(), domain.one());
        p
    }

    /// The single symbol `e_r(w)`; zero when `r > n`.
    pub fn symbol(n: usize, r: usize, w: &Word, domain: Domain) -> Result<ESymbolPoly> {
        let mut p = ESymbolPoly::zero(n, w.num_series(), domain);
        if r <= n {
            p.add_term(vec![ESymbol { word: w.clone(), r }], domain.one())?;
        }
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.n
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

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&EMonomial, &Coeff)> {
        self.terms.iter()
    }

    pub fn coeff(&self, mono: &EMonomial) -> Coeff {
        self.terms.get(mono).cloned().unwrap_or_else(|| self.domain.zero())
    }

    /// Adds `c · Π symbols`; fails on `r = 0`, `r > n`, or a word over the
    /// wrong number of series.
    pub fn add_term(&mut self, mut mono: EMonomial, c: Coeff) -> Result<()> {
        if c.domain() != self.domain {
            return Err(Error::DomainMismatch {
                left: self.domain,
                right: c.domain(),
            });
        }
        for s in &mono {
            if s.r == 0 || s.r > self.n {
                return Err(Error::InvalidArgument(format!(
                    "symbol e{}({}) needs 1 <= r <= n = {}",
                    s.r, s.word, self.n
                )));
            }
            if s.word.num_series() != self.m {
                return Err(Error::DimensionMismatch(format!(
                    "word {} has {} series, expected {}",
                    s.word,
                    s.word.num_series(),
                    self.m
                )));
            }
        }
        mono.sort();
        self.add_unchecked(mono, c);
        Ok(())
    }

    fn add_unchecked(&mut self, mono: EMonomial, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
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

    fn compatible(&self, other: &ESymbolPoly) -> Result<()> {
        if self.domain != other.domain {
            return Err(Error::DomainMismatch {
                left: self.domain,
                right: other.domain,
            });
        }
        if self.n != other.n || self.m != other.m {
            return Err(Error::DimensionMismatch(format!(
                "symbol polynomials over (n={}, m={}) and (n={}, m={})",
                self.n, self.m, other.n, other.m
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &ESymbolPoly) -> Result<ESymbolPoly> {
        self.compatible(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_unchecked(k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &ESymbolPoly) -> Result<ESymbolPoly> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &ESymbolPoly) -> Result<ESymbolPoly> {
        self.compatible(other)?;
        let mut out = ESymbolPoly::zero(self.n, self.m, self.domain);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_unchecked(mono_mul(a, b), ca.mul(cb));
            }
        }
        Ok(out)
    }

    /// Multiplies by a symbol product.
    pub fn mul_monomial(&self, mono: &EMonomial) -> ESymbolPoly {
        ESymbolPoly {
            n: self.n,
            m: self.m,
            domain: self.domain,
            terms: self.terms.iter().map(|(k, c)| (mono_mul(k, mono), c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Coeff) -> ESymbolPoly {
        let mut out = ESymbolPoly::zero(self.n, self.m, self.domain);
        for (k, v) in &self.terms {
            out.add_unchecked(k.clone(), v.mul(c));
        }
        out
    }

    pub fn neg(&self) -> ESymbolPoly {
        self.scale(&self.domain.one().neg())
    }

    pub fn convert(&self, target: Domain) -> Result<ESymbolPoly> {
        let mut out = ESymbolPoly::zero(self.n, self.m, target);
        for (k, c) in &self.terms {
            out.add_unchecked(k.clone(), c.convert(target)?);
        }
        Ok(out)
    }

    /// Multidegrees present in the support.
    pub fn multidegrees(&self) -> Vec<Vec<u32>> {
        let mut v: Vec<Vec<u32>> = self.terms.keys().map(|k| mono_multidegree(k, self.m)).collect();
        v.sort();
        v.dedup();
        v
    }

    /// Substitutes the words `ws` (over `m'` series) for the letters
    /// `x(1..s)`: `e_r(u) ↦ e_r(Π ws[i]^{u_i})`.
    pub fn substitute_words(&self, ws: &[Word]) -> Result<ESymbolPoly> {
        if ws.len() != self.m {
            return Err(Error::Arity {
                expected: self.m,
                got: ws.len(),
            });
        }
        let m2 = ws[0].num_series();
        let image = |u: &Word| -> Word {
            let mut exps = vec![0u32; m2];
            for (w, &e) in ws.iter().zip(u.exponents()) {
                for (o, x) in exps.iter_mut().zip(w.exponents()) {
                    *o += x * e;
                }
            }
            Word::new(exps).expect("nonempty image")
        };
        let mut out = ESymbolPoly::zero(self.n, m2, self.domain);
        for (k, c) in &self.terms {
            let mono: EMonomial = k
                .iter()
                .map(|s| ESymbol {
                    word: image(&s.word),
                    r: s.r,
                })
                .collect();
            out.add_term(mono, c.clone())?;
        }
        Ok(out)
    }

    /// The evaluation `e_r(w) ↦ σ_r(w)` in `n` slots.
    pub fn evaluate(&self) -> Poly {
        let mut cache: HashMap<(Word, usize), Poly> = HashMap::new();
        let mut out = Poly::zero(self.domain);
        for (mono, c) in &self.terms {
            let mut acc = Poly::constant(c.clone());
            for s in mono {
                let f = cache
                    .entry((s.word.clone(), s.r))
                    .or_insert_with(|| sigma(&s.word, s.r, self.n, self.domain));
                acc = &acc * f;
            }
            out = &out + &acc;
        }
        out
    }
}

impl fmt::Display for ESymbolPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // heaviest products first
        let mut items: Vec<_> = self.terms.iter().collect();
        items.sort_by(|a, b| weight(b.0).cmp(&weight(a.0)).then_with(|| a.0.cmp(b.0)));
        for (i, (mono, c)) in items.into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { c.neg() } else { c.clone() };
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            if mono.is_empty() {
                write!(f, "{abs}")?;
                continue;
            }
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            let mut j = 0;
            let mut first = true;
            while j < mono.len() {
                let mut k = j;
                while k < mono.len() && mono[k] == mono[j] {
                    k += 1;
                }
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                write!(f, "{}", mono[j])?;
                if k - j > 1 {
                    write!(f, "^{}", k - j)?;
                }
                j = k;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_and_evaluation() {
        let d = Domain::Integer;
        let x = Word::var(2, 1);
        let y = Word::var(2, 2);
        let xy = x.mul(&y);
        let p = ESymbolPoly::symbol(2, 1, &x, d)
            .unwrap()
            .try_mul(&ESymbolPoly::symbol(2, 1, &y, d).unwrap())
            .unwrap()
            .try_sub(&ESymbolPoly::symbol(2, 1, &xy, d).unwrap())
            .unwrap();
        assert_eq!(p.to_string(), "e1(x1)*e1(x2) - e1(x1*x2)");
        // equals σ2 evaluated on the (1,1) part: x1y2 + x2y1
        let e = p.evaluate();
        assert_eq!(e.len(), 2);
        assert!(ESymbolPoly::symbol(2, 3, &x, d).unwrap().is_zero());
    }

    #[test]
    fn substitution_of_words() {
        let d = Domain::Integer;
        let p = ESymbolPoly::symbol(2, 2, &Word::parse("x1*x2^2", 2).unwrap(), d).unwrap();
        let ws = [Word::parse("x1", 1).unwrap(), Word::parse("x1^3", 1).unwrap()];
        let s = p.substitute_words(&ws).unwrap();
        assert_eq!(s.to_string(), "e2(x1^7)");
    }

    #[test]
    fn rejects_bad_symbols() {
        let mut p = ESymbolPoly::zero(2, 1, Domain::Integer);
        let w = Word::var(1, 1);
        assert!(p.add_term(vec![ESymbol { word: w.clone(), r: 0 }], Domain::Integer.one()).is_err());
        assert!(p.add_term(vec![ESymbol { word: w, r: 3 }], Domain::Integer.one()).is_err());
    }
}
