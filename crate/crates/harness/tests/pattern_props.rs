//! Property tests for the colex pattern enumeration.

use proptest::prelude::*;
use rmmld_harness::pattern::{binom, colex_rank, colex_unrank, ColexIter};

proptest! {
    #[test]
    fn unrank_then_rank_is_identity(n in 1usize..24, w in 0usize..6, seed in any::<u64>()) {
        let w = w.min(n);
        let total = binom(n, w);
        let rank = (seed as u128) % total;
        let subset = colex_unrank(n, w, rank);
        prop_assert_eq!(subset.len(), w);
        prop_assert!(subset.windows(2).all(|p| p[0] < p[1]));
        prop_assert!(subset.iter().all(|&c| (c as usize) < n));
        prop_assert_eq!(colex_rank(&subset), rank);
    }

    #[test]
    fn sharded_enumeration_matches_full_sweep(n in 4usize..16, w in 1usize..4, cut in any::<u64>()) {
        let w = w.min(n);
        let total = binom(n, w);
        let cut = (cut as u128) % total;
        let full: Vec<Vec<u32>> = ColexIter::new(n, w).collect();
        let mut sharded: Vec<Vec<u32>> =
            ColexIter::new(n, w).take(cut as usize).collect();
        sharded.extend(ColexIter::from_rank(n, w, cut));
        prop_assert_eq!(full, sharded);
    }
}
