//! Property tests: linearity, canonical forms, and decoding inside the
//! guaranteed radii under randomized inputs.

use proptest::prelude::*;
use rmmld_core::decode::{mld_decode_erasures, mld_decode_errors, reed_decode};
use rmmld_core::geom::Subspace;
use rmmld_core::{Bits, DecodeStatus, GeneratorMatrix, Guards, ReceivedWord, RecoveryFamilies};

fn bits_from(v: &[bool]) -> Bits {
    let mut b = Bits::zeros(v.len());
    for (i, &x) in v.iter().enumerate() {
        if x {
            b.set(i, true);
        }
    }
    b
}

fn code_cases() -> impl Strategy<Value = (usize, usize)> {
    prop_oneof![Just((1, 3)), Just((2, 4)), Just((1, 4)), Just((2, 5))]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn encoding_is_linear(a in prop::collection::vec(any::<bool>(), 11),
                          b in prop::collection::vec(any::<bool>(), 11)) {
        let g = GeneratorMatrix::new(2, 4, &Guards::default()).unwrap();
        let xa = g.encode(&bits_from(&a)).unwrap();
        let xb = g.encode(&bits_from(&b)).unwrap();
        let mut sum_msg = bits_from(&a);
        sum_msg.xor_assign(&bits_from(&b));
        let mut sum_words = xa.clone();
        sum_words.xor_assign(&xb);
        prop_assert_eq!(g.encode(&sum_msg).unwrap(), sum_words);
    }

    #[test]
    fn span_is_order_independent(vectors in prop::collection::vec(0u64..64, 0..6),
                                 seed in any::<u64>()) {
        // Any permutation (and duplication) of the generators yields the
        // identical canonical basis.
        let s1 = Subspace::span(6, &vectors);
        let mut shuffled = vectors.clone();
        if !shuffled.is_empty() {
            let pivot = (seed as usize) % shuffled.len();
            shuffled.rotate_left(pivot);
            shuffled.extend_from_slice(&vectors);
        }
        let s2 = Subspace::span(6, &shuffled);
        prop_assert_eq!(&s1, &s2);
        prop_assert_eq!(s1.basis(), s2.basis());
        for &v in &vectors {
            prop_assert!(s1.contains_vector(v));
        }
    }

    #[test]
    fn mld_corrects_inside_the_radius((r, m) in code_cases(),
                                      msg_seed in any::<u64>(),
                                      pat_seed in any::<u64>()) {
        let guards = Guards::default();
        let g = GeneratorMatrix::new(r, m, &guards).unwrap();
        let families = RecoveryFamilies::build(&g, &guards).unwrap();
        let params = *g.params();
        let radius = params.d / 4;

        let mut message = Bits::zeros(params.k);
        for i in 0..params.k {
            if (msg_seed >> (i % 64)) & 1 == 1 {
                message.set(i, true);
            }
        }
        let mut bits = g.encode(&message).unwrap();
        let weight = (pat_seed % (radius as u64 + 1)) as usize;
        let mut flipped = std::collections::BTreeSet::new();
        let mut state = pat_seed;
        while flipped.len() < weight {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            flipped.insert((state >> 33) as usize % params.n);
        }
        for &p in &flipped {
            bits.flip(p);
        }
        let report = mld_decode_errors(&ReceivedWord::from_bits(bits), &g, &families).unwrap();
        prop_assert_eq!(report.message, message);
        prop_assert_eq!(report.status, DecodeStatus::Ok);
    }

    #[test]
    fn erasure_decode_recovers_inside_d_minus_1((r, m) in code_cases(),
                                                msg_seed in any::<u64>(),
                                                pat_seed in any::<u64>()) {
        let guards = Guards::default();
        let g = GeneratorMatrix::new(r, m, &guards).unwrap();
        let families = RecoveryFamilies::build(&g, &guards).unwrap();
        let params = *g.params();

        let mut message = Bits::zeros(params.k);
        for i in 0..params.k {
            if (msg_seed >> (i % 64)) & 1 == 1 {
                message.set(i, true);
            }
        }
        let clean = g.encode(&message).unwrap();
        let weight = (pat_seed % params.d as u64) as usize; // 0..=d-1
        let mut erased = std::collections::BTreeSet::new();
        let mut state = pat_seed ^ 0x9e3779b97f4a7c15;
        while erased.len() < weight {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            erased.insert((state >> 33) as usize % params.n);
        }
        let mut bits = clean.clone();
        let mut mask = Bits::zeros(params.n);
        for &p in &erased {
            bits.flip(p);
            mask.set(p, true);
        }
        let word = ReceivedWord::new(bits, mask).unwrap();
        let report = mld_decode_erasures(&word, &g, &families).unwrap();
        prop_assert_eq!(report.status, DecodeStatus::Ok);
        prop_assert_eq!(report.message, message);
    }

    #[test]
    fn reed_corrects_its_classical_radius((r, m) in code_cases(),
                                          msg_seed in any::<u64>(),
                                          pat_seed in any::<u64>()) {
        let guards = Guards::default();
        let g = GeneratorMatrix::new(r, m, &guards).unwrap();
        let params = *g.params();
        let radius = params.d / 2 - 1;

        let mut message = Bits::zeros(params.k);
        for i in 0..params.k {
            if (msg_seed >> (i % 64)) & 1 == 1 {
                message.set(i, true);
            }
        }
        let mut bits = g.encode(&message).unwrap();
        let weight = (pat_seed % (radius as u64 + 1)) as usize;
        let mut flipped = std::collections::BTreeSet::new();
        let mut state = pat_seed ^ 0xd1b54a32d192ed03;
        while flipped.len() < weight {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            flipped.insert((state >> 33) as usize % params.n);
        }
        for &p in &flipped {
            bits.flip(p);
        }
        let decoded = reed_decode(&ReceivedWord::from_bits(bits), &g).unwrap();
        prop_assert_eq!(decoded, message);
    }

    #[test]
    fn bit_string_round_trip(v in prop::collection::vec(any::<bool>(), 0..200)) {
        let b = bits_from(&v);
        prop_assert_eq!(Bits::from_bit_string(&b.to_bit_string()).unwrap(), b);
    }
}
