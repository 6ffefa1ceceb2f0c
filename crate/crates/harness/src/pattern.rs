//! Colexicographic enumeration of fixed-weight index sets.
//!
//! Campaign patterns (error positions, erasure positions) are w-subsets
//! of {0, .., n-1} visited in colex order: a subset precedes another iff
//! its largest differing element is smaller. Colex ranks give a stable
//! total order that workers can shard into contiguous ranges, so
//! exhaustive sweeps parallelize without changing the report.

/// Binomial coefficient as u128 (exact for every n used here).
pub fn binom(n: usize, w: usize) -> u128 {
    if w > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..w.min(n - w) {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Colex rank of a strictly increasing index set.
pub fn colex_rank(subset: &[u32]) -> u128 {
    subset
        .iter()
        .enumerate()
        .map(|(j, &c)| binom(c as usize, j + 1))
        .sum()
}

/// The rank-th w-subset of {0, .., n-1} in colex order (combinadic).
pub fn colex_unrank(n: usize, w: usize, mut rank: u128) -> Vec<u32> {
    debug_assert!(rank < binom(n, w));
    let mut out = vec![0u32; w];
    let mut hi = n;
    for j in (1..=w).rev() {
        // Largest c with binom(c, j) <= rank.
        let mut c = j - 1;
        let mut best = 0u128; // binom(j-1, j) = 0
        for cand in (j - 1)..hi {
            let b = binom(cand, j);
            if b <= rank {
                c = cand;
                best = b;
            } else {
                break;
            }
        }
        rank -= best;
        out[j - 1] = c as u32;
        hi = c;
    }
    out
}

/// Iterator over w-subsets of {0, .., n-1} in colex order, optionally
/// starting from a given rank.
pub struct ColexIter {
    n: usize,
    current: Option<Vec<u32>>,
}

impl ColexIter {
    pub fn new(n: usize, w: usize) -> Self {
        Self::from_rank(n, w, 0)
    }

    pub fn from_rank(n: usize, w: usize, rank: u128) -> Self {
        let current = if rank < binom(n, w) {
            Some(colex_unrank(n, w, rank))
        } else {
            None
        };
        Self { n, current }
    }
}

impl Iterator for ColexIter {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        let current = self.current.as_mut()?;
        let out = current.clone();
        // Colex successor: bump the lowest element that has room, reset
        // everything below it to {0, 1, ..}.
        let w = current.len();
        let mut advanced = false;
        for i in 0..w {
            let limit = if i + 1 < w {
                current[i + 1]
            } else {
                self.n as u32
            };
            if current[i] + 1 < limit {
                current[i] += 1;
                for (j, slot) in current.iter_mut().enumerate().take(i) {
                    *slot = j as u32;
                }
                advanced = true;
                break;
            }
        }
        if !advanced {
            self.current = None;
        }
        Some(out)
    }
}
