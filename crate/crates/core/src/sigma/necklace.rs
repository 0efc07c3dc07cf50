//! Cyclic classes of primitive words in non-commuting letters.

use std::collections::HashMap;
use std::fmt;

/// A rotation class of primitive words, represented by its least rotation
/// (a Lyndon word). Letters are 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicClass {
    letters: Vec<usize>,
}

impl CyclicClass {
    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Occurrence counts of the `s` letters.
    pub fn content(&self, s: usize) -> Vec<u32> {
        let mut c = vec![0; s];
        for &l in &self.letters {
            c[l] += 1;
        }
        c
    }
}

impl fmt::Display for CyclicClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &l in &self.letters {
            write!(f, "Y{}", l + 1)?;
        }
        Ok(())
    }
}

/// Whether `w` is strictly smaller than each of its proper rotations,
/// which holds exactly for least representatives of primitive classes.
pub fn is_lyndon(w: &[usize]) -> bool {
    let n = w.len();
    (1..n).all(|k| {
        let rot = w[k..].iter().chain(&w[..k]);
        w.iter().lt(rot)
    })
}

/// The classes of primitive words with the given content, each once, in
/// ascending order of representative.
pub fn cyclic_classes(content: &[u32]) -> Vec<CyclicClass> {
    let total: u32 = content.iter().sum();
    if total == 0 {
        return Vec::new();
    }
    // a Lyndon word starts with its smallest letter; fix it and extend
    let first = content.iter().position(|&c| c > 0).unwrap();
    let mut left = content.to_vec();
    left[first] -= 1;
    let mut cur = vec![first];
    let mut out = Vec::new();
    extend(&mut cur, &mut left, total as usize, &mut out);
    out
}

fn extend(cur: &mut Vec<usize>, left: &mut [u32], total: usize, out: &mut Vec<CyclicClass>) {
    if cur.len() == total {
        if is_lyndon(cur) {
            out.push(CyclicClass { letters: cur.clone() });
        }
        return;
    }
    for l in cur[0]..left.len() {
        if left[l] == 0 {
            continue;
        }
        left[l] -= 1;
        cur.push(l);
        // prune: a Lyndon word's prefixes are prenecklaces
        if is_prenecklace(cur) {
            extend(cur, left, total, out);
        }
        cur.pop();
        left[l] += 1;
    }
}

// Duval-style test: `w` is a prefix of some necklace.
fn is_prenecklace(w: &[usize]) -> bool {
    let mut p = 1;
    for i in 1..w.len() {
        let a = w[i - p];
        if w[i] < a {
            return false;
        }
        if w[i] > a {
            p = i + 1;
        }
    }
    true
}

/// Memoised class counts keyed by content.
#[derive(Default)]
pub struct ClassCounter {
    memo: HashMap<Vec<u32>, usize>,
}

impl ClassCounter {
    pub fn new() -> ClassCounter {
        ClassCounter::default()
    }

    pub fn count(&mut self, content: &[u32]) -> usize {
        if let Some(&c) = self.memo.get(content) {
            return c;
        }
        let c = cyclic_classes(content).len();
        self.memo.insert(content.to_vec(), c);
        c
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    // Oracle: all words of the length, quotient by rotation, keep the
    // classes whose members are not proper powers.
    fn brute_force(content: &[u32]) -> BTreeSet<Vec<usize>> {
        let s = content.len();
        let len: u32 = content.iter().sum();
        let mut out = BTreeSet::new();
        let total = s.pow(len);
        for code in 0..total {
            let mut w = Vec::with_capacity(len as usize);
            let mut c = code;
            for _ in 0..len {
                w.push(c % s);
                c /= s;
            }
            let mut cnt = vec![0u32; s];
            for &l in &w {
                cnt[l] += 1;
            }
            if cnt != content {
                continue;
            }
            let l = w.len();
            let is_power = (1..l).any(|d| l % d == 0 && (0..l).all(|i| w[i] == w[i % d]));
            if is_power {
                continue;
            }
            let least = (0..l)
                .map(|k| w[k..].iter().chain(&w[..k]).copied().collect::<Vec<_>>())
                .min()
                .unwrap();
            out.insert(least);
        }
        out
    }

    #[test]
    fn examples() {
        assert_eq!(cyclic_classes(&[1, 1]).len(), 1);
        assert_eq!(cyclic_classes(&[2, 1]).len(), 1);
        let c = cyclic_classes(&[2, 2]);
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].to_string(), "Y1Y1Y2Y2");
        assert_eq!(cyclic_classes(&[2, 0]).len(), 0);
        assert_eq!(cyclic_classes(&[1, 0]).len(), 1);
    }

    #[test]
    fn agrees_with_brute_force() {
        for s in 1..=3usize {
            let mut contents = vec![vec![]];
            for _ in 0..s {
                contents = contents
                    .into_iter()
                    .flat_map(|c: Vec<u32>| {
                        (0..=8u32).map(move |e| {
                            let mut d = c.clone();
                            d.push(e);
                            d
                        })
                    })
                    .collect();
            }
            for beta in contents {
                let len: u32 = beta.iter().sum();
                if len == 0 || len > 8 {
                    continue;
                }
                let got: BTreeSet<Vec<usize>> =
                    cyclic_classes(&beta).into_iter().map(|c| c.letters).collect();
                assert_eq!(got, brute_force(&beta), "content {beta:?}");
            }
        }
    }

    #[test]
    fn counter_memoises() {
        let mut c = ClassCounter::new();
        assert_eq!(c.count(&[3, 3]), 3);
        assert_eq!(c.count(&[3, 3]), 3);
    }
}
