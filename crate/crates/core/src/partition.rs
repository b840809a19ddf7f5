//! Set partitions with a fixed number of blocks, as restricted growth strings.

/// Iterates the partitions of `{0..len-1}` into exactly `blocks` non-empty
/// blocks. Each item is a restricted growth string: `labels[0] == 0` and
/// `labels[i] <= 1 + max(labels[..i])`, with every label below `blocks`
/// appearing.
#[derive(Clone, Debug)]
pub struct FixedBlockPartitions {
    labels: Vec<usize>,
    // prefix_max[i] = max(labels[..=i])
    prefix_max: Vec<usize>,
    blocks: usize,
    started: bool,
    done: bool,
}

impl FixedBlockPartitions {
    pub fn new(len: usize, blocks: usize) -> Self {
        let done = blocks == 0 || blocks > len;
        let mut p = FixedBlockPartitions {
            labels: vec![0; len],
            prefix_max: vec![0; len],
            blocks,
            started: false,
            done,
        };
        if !done {
            p.fill_from(1);
        }
        p
    }

    /// Sets `labels[from..]` to the smallest valid completion.
    fn fill_from(&mut self, from: usize) {
        let len = self.labels.len();
        for i in from..len {
            let prev = self.prefix_max[i - 1];
            // reserve the tail for the labels still missing
            let missing = self.blocks - 1 - prev;
            let label = if len - i <= missing { prev + 1 } else { 0 };
            self.labels[i] = label;
            self.prefix_max[i] = prev.max(label);
        }
    }

    fn advance(&mut self) -> bool {
        let len = self.labels.len();
        for i in (1..len).rev() {
            let prev = self.prefix_max[i - 1];
            let cap = (prev + 1).min(self.blocks - 1);
            let next = self.labels[i] + 1;
            if next > cap {
                continue;
            }
            let new_max = prev.max(next);
            // the remaining positions must still be able to introduce the
            // labels above new_max
            if len - 1 - i < self.blocks - 1 - new_max {
                continue;
            }
            self.labels[i] = next;
            self.prefix_max[i] = new_max;
            self.fill_from(i + 1);
            return true;
        }
        false
    }
}

impl Iterator for FixedBlockPartitions {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        if self.started && !self.advance() {
            self.done = true;
            return None;
        }
        self.started = true;
        Some(self.labels.clone())
    }
}

/// Stirling number of the second kind `S(n, k)`.
pub fn stirling2(n: usize, k: usize) -> u64 {
    let mut row = vec![0u64; k + 1];
    row[0] = 1;
    for _ in 0..n {
        for j in (1..=k).rev() {
            row[j] = row[j - 1] + j as u64 * row[j];
        }
        row[0] = 0;
    }
    row[k]
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn brute(len: usize, blocks: usize) -> BTreeSet<Vec<usize>> {
        // all label vectors, canonicalised by first occurrence
        let mut out = BTreeSet::new();
        let total = blocks.pow(len as u32);
        for mut code in 0..total {
            let mut raw = Vec::new();
            for _ in 0..len {
                raw.push(code % blocks);
                code /= blocks;
            }
            let mut map = vec![usize::MAX; blocks];
            let mut next = 0;
            let canon: Vec<usize> = raw
                .iter()
                .map(|&x| {
                    if map[x] == usize::MAX {
                        map[x] = next;
                        next += 1;
                    }
                    map[x]
                })
                .collect();
            if next == blocks {
                out.insert(canon);
            }
        }
        out
    }

    #[test]
    fn matches_brute_force() {
        for len in 0..=8 {
            for blocks in 1..=4 {
                let got: Vec<_> = FixedBlockPartitions::new(len, blocks).collect();
                let set: BTreeSet<_> = got.iter().cloned().collect();
                assert_eq!(set.len(), got.len(), "duplicates at {len},{blocks}");
                assert_eq!(set, brute(len, blocks), "len={len} blocks={blocks}");
                assert_eq!(got.len() as u64, stirling2(len, blocks));
            }
        }
    }

    #[test]
    fn stirling_values() {
        assert_eq!(stirling2(12, 3), 86_526);
        assert_eq!(stirling2(6, 3), 90);
        assert_eq!(stirling2(0, 0), 1);
    }
}
