//! Set partitions of `{1..k}` enumerated by restricted growth strings.

/// A partition of `{1, …, k}` into nonempty blocks. Blocks are sorted by
/// their minimum and each block is ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SetPartition {
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    /// Builds the partition encoded by a restricted growth string
    /// (`rgs[i]` is the 0-based block of element `i + 1`).
    pub fn from_rgs(rgs: &[usize]) -> SetPartition {
        let h = rgs.iter().copied().max().map_or(0, |x| x + 1);
        let mut blocks = vec![Vec::new(); h];
        for (i, &b) in rgs.iter().enumerate() {
            blocks[b].push(i + 1);
        }
        SetPartition { blocks }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Number of blocks `h(λ)`.
    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }
}

/// Iterator over the set partitions of `{1..k}` in restricted growth
/// string order.
pub struct SetPartitions {
    rgs: Vec<usize>,
    // max of rgs[..i] for each i
    prefix_max: Vec<usize>,
    done: bool,
}

impl Iterator for SetPartitions {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        if self.done {
            return None;
        }
        let out = SetPartition::from_rgs(&self.rgs);
        // advance: rightmost position that can still be incremented
        let k = self.rgs.len();
        let mut i = k;
        loop {
            if i <= 1 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.rgs[i] <= self.prefix_max[i] {
                self.rgs[i] += 1;
                for j in i + 1..k {
                    self.rgs[j] = 0;
                    self.prefix_max[j] = self.prefix_max[j - 1].max(self.rgs[j - 1]);
                }
                break;
            }
        }
        Some(out)
    }
}

/// All partitions of `{1..k}`; there are Bell(`k`) of them.
pub fn set_partitions(k: usize) -> SetPartitions {
    assert!(k >= 1, "set partitions need k >= 1");
    SetPartitions {
        rgs: vec![0; k],
        prefix_max: vec![0; k],
        done: false,
    }
}

/// All permutations of `0..k` in lexicographic order, as image vectors.
pub fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut cur: Vec<usize> = (0..k).collect();
    let mut out = vec![cur.clone()];
    loop {
        let Some(i) = (1..k).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..k).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

/// Cycle decomposition of a permutation given as an image vector; each
/// cycle starts at its smallest element.
pub fn cycles(perm: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; perm.len()];
    let mut out = Vec::new();
    for s in 0..perm.len() {
        if seen[s] {
            continue;
        }
        let mut c = Vec::new();
        let mut i = s;
        while !seen[i] {
            seen[i] = true;
            c.push(i);
            i = perm[i];
        }
        out.push(c);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn bell_numbers() {
        let counts: Vec<usize> = (1..=7).map(|k| set_partitions(k).count()).collect();
        assert_eq!(counts, [1, 2, 5, 15, 52, 203, 877]);
    }

    #[test]
    fn partitions_are_distinct_and_valid() {
        let all: Vec<SetPartition> = set_partitions(5).collect();
        let uniq: HashSet<_> = all.iter().cloned().collect();
        assert_eq!(uniq.len(), all.len());
        for p in &all {
            let mut elems: Vec<usize> = p.blocks().iter().flatten().copied().collect();
            elems.sort();
            assert_eq!(elems, vec![1, 2, 3, 4, 5]);
            let mins: Vec<usize> = p.blocks().iter().map(|b| b[0]).collect();
            let mut sorted = mins.clone();
            sorted.sort();
            assert_eq!(mins, sorted);
        }
    }

    #[test]
    fn permutation_counts_and_cycles() {
        assert_eq!(permutations(4).len(), 24);
        assert_eq!(permutations(1), vec![vec![0]]);
        assert_eq!(cycles(&[1, 0, 2]), vec![vec![0, 1], vec![2]]);
        assert_eq!(cycles(&[1, 2, 0]), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn order_starts_with_single_block() {
        let all: Vec<SetPartition> = set_partitions(3).collect();
        assert_eq!(all[0].blocks(), &[vec![1, 2, 3]]);
        assert_eq!(all[4].blocks(), &[vec![1], vec![2], vec![3]]);
    }
}
