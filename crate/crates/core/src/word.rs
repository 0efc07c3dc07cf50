//! Commuting words `x(1)^a1 ⋯ x(m)^am` and multisets of them.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A nonempty commuting monomial in the symbols `x(1..m)`, stored as its
/// exponent vector.
///
/// Words are ordered by total degree and then by exponent vector in
/// descending lexicographic order, so `x1 < x2 < x1^2 < x1*x2 < x2^2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word {
    exps: Vec<u32>,
}

impl Word {
    /// Fails on the empty word.
    pub fn new(exps: Vec<u32>) -> Result<Word> {
        if exps.iter().all(|&e| e == 0) {
            return Err(Error::InvalidArgument("the empty word is not allowed".into()));
        }
        Ok(Word { exps })
    }

    /// The symbol `x(i)` (1-based) among `m` series.
    pub fn var(m: usize, i: usize) -> Word {
        let mut exps = vec![0; m];
        exps[i - 1] = 1;
        Word { exps }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn num_series(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn multidegree(&self) -> Vec<u32> {
        self.exps.clone()
    }

    /// Membership in `M(q)`: total degree divisible by `q`.
    pub fn in_m(&self, q: u32) -> bool {
        self.degree() % q == 0
    }

    pub fn mul(&self, other: &Word) -> Word {
        assert_eq!(self.exps.len(), other.exps.len(), "words over different series");
        Word {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Word {
        assert!(k >= 1);
        Word {
            exps: self.exps.iter().map(|e| e * k).collect(),
        }
    }

    /// `gcd` of the exponents.
    pub fn content_gcd(&self) -> u32 {
        self.exps.iter().fold(0, |g, &e| num_integer::gcd(g, e))
    }

    /// Whether `self` divides the monomial with exponent vector `alpha`.
    pub fn divides_exponents(&self, alpha: &[u32]) -> bool {
        self.exps.iter().zip(alpha).all(|(a, b)| a <= b)
    }

    /// Parses `x1^2*x2` style text over `m` series.
    pub fn parse(text: &str, m: usize) -> Result<Word> {
        parse_word_at(text, m, 0)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

impl serde::Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn parse_err(position: usize, token: &str, message: &str) -> Error {
    Error::Parse {
        position,
        token: token.to_string(),
        message: message.to_string(),
    }
}

/// Parses a word; `base` is added to reported positions so callers parsing
/// lists can point into the full input.
pub(crate) fn parse_word_at(text: &str, m: usize, base: usize) -> Result<Word> {
    let chars: Vec<(usize, char)> = text
        .char_indices()
        .filter(|(_, c)| !c.is_whitespace())
        .collect();
    let end = text.len();
    let mut exps = vec![0u32; m];
    let mut i = 0;
    let token_at = |k: usize| -> (usize, String) {
        match chars.get(k) {
            Some(&(p, c)) => (base + p, c.to_string()),
            None => (base + end, "<end>".into()),
        }
    };
    let number = |k: &mut usize| -> Option<u64> {
        let start = *k;
        while *k < chars.len() && chars[*k].1.is_ascii_digit() {
            *k += 1;
        }
        if *k == start {
            return None;
        }
        chars[start..*k]
            .iter()
            .map(|&(_, c)| c)
            .collect::<String>()
            .parse()
            .ok()
    };
    if chars.is_empty() {
        let (p, t) = token_at(0);
        return Err(parse_err(p, &t, "expected a word such as x1^2*x2"));
    }
    loop {
        match chars.get(i) {
            Some(&(_, 'x')) => i += 1,
            _ => {
                let (p, t) = token_at(i);
                return Err(parse_err(p, &t, "expected `x`"));
            }
        }
        let idx_pos = i;
        let index = number(&mut i).ok_or_else(|| {
            let (p, t) = token_at(idx_pos);
            parse_err(p, &t, "expected a series index after `x`")
        })?;
        if index == 0 || index as usize > m {
            let (p, _) = token_at(idx_pos);
            return Err(parse_err(p, &index.to_string(), &format!("series index must be in 1..={m}")));
        }
        let mut exp = 1u64;
        if let Some(&(_, '^')) = chars.get(i) {
            i += 1;
            let exp_pos = i;
            exp = number(&mut i).ok_or_else(|| {
                let (p, t) = token_at(exp_pos);
                parse_err(p, &t, "expected an exponent after `^`")
            })?;
            if exp == 0 {
                let (p, _) = token_at(exp_pos);
                return Err(parse_err(p, "0", "exponent must be positive"));
            }
        }
        exps[index as usize - 1] += exp as u32;
        match chars.get(i) {
            None => break,
            Some(&(_, '*')) => i += 1,
            Some(_) => {
                let (p, t) = token_at(i);
                return Err(parse_err(p, &t, "expected `*` or end of word"));
            }
        }
    }
    Ok(Word { exps })
}

/// Parses a comma-separated list of words.
pub fn parse_word_list(text: &str, m: usize) -> Result<Vec<Word>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for piece in text.split(',') {
        out.push(parse_word_at(piece, m, offset)?);
        offset += piece.len() + 1;
    }
    Ok(out)
}

/// Smallest number of series that can hold every index used in `text`.
pub fn max_series_index(text: &str) -> usize {
    let mut best = 0;
    let bytes: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i] == 'x' {
            let mut j = i + 1;
            let mut v = 0usize;
            while j < bytes.len() && bytes[j].is_ascii_digit() {
                v = v * 10 + bytes[j].to_digit(10).unwrap() as usize;
                j += 1;
            }
            best = best.max(v);
            i = j;
        } else {
            i += 1;
        }
    }
    best
}

/// Which words [`enumerate_words`] should produce.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WordBound {
    /// All words of total degree at most `d`.
    MaxDegree(u32),
    /// The single word of this multidegree (if it lies in `M(q)`).
    Multidegree(Vec<u32>),
    /// All words dividing the monomial of this multidegree.
    Dividing(Vec<u32>),
}

fn exponent_vectors_of_degree(m: usize, d: u32, out: &mut Vec<Vec<u32>>) {
    fn rec(m: usize, i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == m - 1 {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for e in (0..=left).rev() {
            cur.push(e);
            rec(m, i + 1, left - e, cur, out);
            cur.pop();
        }
    }
    if m == 0 {
        return;
    }
    rec(m, 0, d, &mut Vec::new(), out);
}

/// The words of `M(q)` over `m` series satisfying `bound`, sorted in the
/// canonical word order.
pub fn enumerate_words(m: usize, q: u32, bound: &WordBound) -> Vec<Word> {
    let mut out: Vec<Word> = match bound {
        WordBound::MaxDegree(d) => {
            let mut v = Vec::new();
            for deg in (q..=*d).step_by(q as usize) {
                let mut vs = Vec::new();
                exponent_vectors_of_degree(m, deg, &mut vs);
                v.extend(vs.into_iter().map(|exps| Word { exps }));
            }
            v
        }
        WordBound::Multidegree(alpha) => Word::new(alpha.clone())
            .ok()
            .filter(|w| w.in_m(q))
            .into_iter()
            .collect(),
        WordBound::Dividing(alpha) => {
            let mut v = Vec::new();
            let mut cur = vec![0u32; alpha.len()];
            loop {
                if let Ok(w) = Word::new(cur.clone()) {
                    if w.in_m(q) {
                        v.push(w);
                    }
                }
                // odometer over the box 0..=alpha
                let mut k = 0;
                while k < alpha.len() && cur[k] == alpha[k] {
                    cur[k] = 0;
                    k += 1;
                }
                if k == alpha.len() {
                    break;
                }
                cur[k] += 1;
            }
            v
        }
    };
    out.sort();
    out
}

/// A finite multiset of words kept as a sorted vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct WordMultiset {
    words: Vec<Word>,
}

impl WordMultiset {
    pub fn empty() -> WordMultiset {
        WordMultiset { words: Vec::new() }
    }

    pub fn new(mut words: Vec<Word>) -> WordMultiset {
        words.sort();
        WordMultiset { words }
    }

    pub fn singleton(w: Word) -> WordMultiset {
        WordMultiset { words: vec![w] }
    }

    /// Words in canonical (ascending) order, repeated by multiplicity.
    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn height(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Distinct words with multiplicities.
    pub fn distinct(&self) -> Vec<(Word, usize)> {
        let mut out: Vec<(Word, usize)> = Vec::new();
        for w in &self.words {
            match out.last_mut() {
                Some((last, k)) if last == w => *k += 1,
                _ => out.push((w.clone(), 1)),
            }
        }
        out
    }

    /// Multiset union.
    pub fn union(&self, other: &WordMultiset) -> WordMultiset {
        let mut words = Vec::with_capacity(self.words.len() + other.words.len());
        let (a, b) = (&self.words, &other.words);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            if a[i] <= b[j] {
                words.push(a[i].clone());
                i += 1;
            } else {
                words.push(b[j].clone());
                j += 1;
            }
        }
        words.extend_from_slice(&a[i..]);
        words.extend_from_slice(&b[j..]);
        WordMultiset { words }
    }

    pub fn pow(&self, k: usize) -> WordMultiset {
        let mut words = Vec::with_capacity(self.words.len() * k);
        for w in &self.words {
            for _ in 0..k {
                words.push(w.clone());
            }
        }
        WordMultiset { words }
    }

    /// Total multidegree of the product of all member words.
    pub fn multidegree(&self, m: usize) -> Vec<u32> {
        let mut out = vec![0; m];
        for w in &self.words {
            for (o, e) in out.iter_mut().zip(w.exponents()) {
                *o += e;
            }
        }
        out
    }

    pub fn degree(&self) -> u32 {
        self.words.iter().map(Word::degree).sum()
    }

    /// `r1!⋯rd!` for the multiplicities `ri`.
    pub fn multiplicity_factorial(&self) -> num_bigint::BigInt {
        self.distinct()
            .iter()
            .map(|(_, k)| crate::coeff::factorial(*k as u64))
            .product()
    }
}

impl fmt::Display for WordMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.words.iter().map(|w| w.to_string()).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Serialized as `[[word, multiplicity], …]`.
impl serde::Serialize for WordMultiset {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let d = self.distinct();
        let mut seq = s.serialize_seq(Some(d.len()))?;
        for (w, k) in &d {
            seq.serialize_element(&(w.to_string(), k))?;
        }
        seq.end()
    }
}

/// All multisets of words from `M(q)` of height at most `max_height` whose
/// product has multidegree `alpha`, in canonical order.
pub fn multisets_with_product(alpha: &[u32], q: u32, max_height: usize) -> Vec<WordMultiset> {
    let candidates = enumerate_words(alpha.len(), q, &WordBound::Dividing(alpha.to_vec()));
    let mut out = Vec::new();
    let mut cur: Vec<Word> = Vec::new();
    fn rec(
        left: &mut Vec<u32>,
        start: usize,
        candidates: &[Word],
        max_height: usize,
        cur: &mut Vec<Word>,
        out: &mut Vec<WordMultiset>,
    ) {
        if left.iter().all(|&e| e == 0) {
            out.push(WordMultiset::new(cur.clone()));
            return;
        }
        if cur.len() == max_height {
            return;
        }
        for (k, w) in candidates.iter().enumerate().skip(start) {
            if !w.divides_exponents(left) {
                continue;
            }
            for (l, e) in left.iter_mut().zip(w.exponents()) {
                *l -= e;
            }
            cur.push(w.clone());
            rec(left, k, candidates, max_height, cur, out);
            cur.pop();
            for (l, e) in left.iter_mut().zip(w.exponents()) {
                *l += e;
            }
        }
    }
    if alpha.iter().all(|&e| e == 0) {
        return vec![WordMultiset::empty()];
    }
    rec(&mut alpha.to_vec(), 0, &candidates, max_height, &mut cur, &mut out);
    out.sort();
    out
}

/// All multidegrees over `m` series with total degree at most `d`, in
/// graded order.
pub fn multidegrees_up_to(m: usize, d: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for deg in 0..=d {
        exponent_vectors_of_degree(m, deg, &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str, m: usize) -> Word {
        Word::parse(s, m).unwrap()
    }

    #[test]
    fn enumerate_examples() {
        let ws = enumerate_words(2, 1, &WordBound::MaxDegree(2));
        let names: Vec<String> = ws.iter().map(|w| w.to_string()).collect();
        assert_eq!(names, ["x1", "x2", "x1^2", "x1*x2", "x2^2"]);
        let ws = enumerate_words(2, 2, &WordBound::MaxDegree(2));
        assert_eq!(ws.len(), 3);
        let ws = enumerate_words(1, 3, &WordBound::MaxDegree(7));
        let names: Vec<String> = ws.iter().map(|w| w.to_string()).collect();
        assert_eq!(names, ["x1^3", "x1^6"]);
    }

    #[test]
    fn parse_and_print() {
        assert_eq!(w(" x1 ^ 2 * x2 ", 2).exponents(), &[2, 1]);
        assert_eq!(w("x1*x1*x2", 2).to_string(), "x1^2*x2");
        assert_eq!(w("x2*x1^3", 3).to_string(), "x1^3*x2");
    }

    #[test]
    fn parse_errors_name_the_token() {
        match Word::parse("x1*y2", 2) {
            Err(Error::Parse { position, token, .. }) => {
                assert_eq!(position, 3);
                assert_eq!(token, "y");
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(Word::parse("x3", 2), Err(Error::Parse { .. })));
        assert!(matches!(Word::parse("x1^", 2), Err(Error::Parse { .. })));
        assert!(matches!(Word::parse("", 2), Err(Error::Parse { .. })));
        match parse_word_list("x1,x2,x1*z", 2) {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 9),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn multiset_basics() {
        let ms = WordMultiset::new(vec![w("x2", 2), w("x1", 2), w("x1", 2)]);
        assert_eq!(ms.to_string(), "{x1, x1, x2}");
        assert_eq!(ms.height(), 3);
        assert_eq!(ms.distinct(), vec![(w("x1", 2), 2), (w("x2", 2), 1)]);
        assert_eq!(ms.multiplicity_factorial(), num_bigint::BigInt::from(2));
    }

    #[test]
    fn multisets_counts() {
        // {xy}, {x,y}
        assert_eq!(multisets_with_product(&[1, 1], 1, 2).len(), 2);
        // {x2y2}, {x2, y2}, {xy, xy}
        assert_eq!(multisets_with_product(&[2, 2], 2, 2).len(), 3);
        assert!(multisets_with_product(&[3], 2, 1).is_empty());
    }
}
