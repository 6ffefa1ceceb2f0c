//! Decoders for RM(r, m): the one-step majority-logic decoder (errors and
//! erasures), Reed's sequential baseline, a nearest-codeword oracle, and
//! a rank oracle for erasure recoverability.
//!
//! The one-step decoder casts one vote per recovery set — the parity of
//! the received bits over the set, computed as popcount-of-AND on the
//! precomputed masks — and takes the majority per symbol, all symbols at
//! once. Ties break to 0 and raise a flag; inside the guaranteed radius
//! `2^(m-r-2)` a strict majority always exists, so a raised flag marks an
//! out-of-guarantee input. Erasure decoding instead scans the family in
//! order and reads the symbol off the first set free of erasures.

use crate::bits::Bits;
use crate::code::{GeneratorMatrix, Monomial};
use crate::recovery::RecoveryFamilies;
use crate::{Error, Guards, Result};

/// Channel output: received bits plus an erasure mask (1 = erased; the
/// bit value underneath an erasure is meaningless).
#[derive(Clone, Debug)]
pub struct ReceivedWord {
    bits: Bits,
    erasures: Bits,
}

impl ReceivedWord {
    pub fn new(bits: Bits, erasures: Bits) -> Result<Self> {
        if bits.len() != erasures.len() {
            return Err(Error::LengthMismatch {
                expected: bits.len(),
                got: erasures.len(),
            });
        }
        Ok(Self { bits, erasures })
    }

    /// A word with no erasures.
    pub fn from_bits(bits: Bits) -> Self {
        let erasures = Bits::zeros(bits.len());
        Self { bits, erasures }
    }

    pub fn bits(&self) -> &Bits {
        &self.bits
    }

    pub fn erasures(&self) -> &Bits {
        &self.erasures
    }

    pub fn has_erasures(&self) -> bool {
        !self.erasures.is_zero()
    }
}

/// Outcome of decoding one word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DecodeStatus {
    Ok,
    /// Some symbol tied; the tie was broken toward 0.
    TieBroken,
    /// Some symbol had every recovery set blocked by erasures.
    ErasureFailure,
}

/// Vote transcript for one message symbol.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolVote {
    pub sigma: Monomial,
    pub votes_for_0: u32,
    pub votes_for_1: u32,
    pub tie: bool,
    pub unrecoverable: bool,
}

/// Decoded message plus per-symbol transcript.
#[derive(Debug, Clone)]
pub struct DecodeReport {
    pub message: Bits,
    pub per_symbol: Vec<SymbolVote>,
    pub status: DecodeStatus,
}

impl DecodeReport {
    pub fn any_tie(&self) -> bool {
        self.per_symbol.iter().any(|s| s.tie)
    }

    pub fn unrecoverable_symbols(&self) -> usize {
        self.per_symbol.iter().filter(|s| s.unrecoverable).count()
    }
}

/// One-step majority-logic decoding against errors: every symbol is
/// decoded simultaneously by majority vote over its full recovery family.
/// Corrects any pattern of at most `2^(m-r-2)` errors.
pub fn mld_decode_errors(
    word: &ReceivedWord,
    g: &GeneratorMatrix,
    families: &RecoveryFamilies,
) -> Result<DecodeReport> {
    if word.has_erasures() {
        return Err(Error::ErasuresNotSupported);
    }
    expect_word_len(word, g)?;
    let k = g.params().k;
    let mut message = Bits::zeros(k);
    let mut per_symbol = Vec::with_capacity(k);
    let mut any_tie = false;
    for (i, family) in families.families().iter().enumerate() {
        let mut ones = 0u32;
        let mut zeros = 0u32;
        for set in family.all_sets() {
            if word.bits.and_parity(set.bits()) {
                ones += 1;
            } else {
                zeros += 1;
            }
        }
        let tie = ones == zeros;
        let value = ones > zeros; // ties break to 0
        any_tie |= tie;
        message.set(i, value);
        per_symbol.push(SymbolVote {
            sigma: family.sigma().clone(),
            votes_for_0: zeros,
            votes_for_1: ones,
            tie,
            unrecoverable: false,
        });
    }
    Ok(DecodeReport {
        message,
        per_symbol,
        status: if any_tie {
            DecodeStatus::TieBroken
        } else {
            DecodeStatus::Ok
        },
    })
}

/// One-step erasure decoding: for each symbol, the first recovery set
/// containing no erased coordinate supplies the value (non-erased bits
/// are error-free on an erasure channel, so one clean set suffices).
/// Recovers every symbol whenever at most `2^(m-r) - 1` coordinates are
/// erased; a fully blocked symbol is flagged instead of guessed.
pub fn mld_decode_erasures(
    word: &ReceivedWord,
    g: &GeneratorMatrix,
    families: &RecoveryFamilies,
) -> Result<DecodeReport> {
    expect_word_len(word, g)?;
    let k = g.params().k;
    let mut message = Bits::zeros(k);
    let mut per_symbol = Vec::with_capacity(k);
    let mut any_blocked = false;
    for (i, family) in families.families().iter().enumerate() {
        let mut decided = None;
        for set in family.all_sets() {
            if set.bits().is_disjoint(&word.erasures) {
                decided = Some(word.bits.and_parity(set.bits()));
                break;
            }
        }
        let unrecoverable = decided.is_none();
        any_blocked |= unrecoverable;
        let value = decided.unwrap_or(false);
        message.set(i, value);
        per_symbol.push(SymbolVote {
            sigma: family.sigma().clone(),
            votes_for_0: u32::from(decided == Some(false)),
            votes_for_1: u32::from(decided == Some(true)),
            tie: false,
            unrecoverable,
        });
    }
    Ok(DecodeReport {
        message,
        per_symbol,
        status: if any_blocked {
            DecodeStatus::ErasureFailure
        } else {
            DecodeStatus::Ok
        },
    })
}

/// Reed's sequential decoder: decode all degree-l symbols by majority
/// vote over the `2^(m-l)` disjoint coset recovery sets, subtract their
/// re-encoded contribution, and continue with degree l - 1. Ties break
/// toward 0. Corrects up to `2^(m-r-1) - 1` errors.
pub fn reed_decode(word: &ReceivedWord, g: &GeneratorMatrix) -> Result<Bits> {
    if word.has_erasures() {
        return Err(Error::ErasuresNotSupported);
    }
    expect_word_len(word, g)?;
    let params = *g.params();
    let (n, k, r) = (params.n, params.k, params.r);
    let mut working = word.bits.clone();
    let mut message = Bits::zeros(k);
    for degree in (0..=r).rev() {
        let mut stage = Bits::zeros(n);
        for (i, sigma) in g.monomials().iter().enumerate() {
            if sigma.degree() != degree {
                continue;
            }
            let mask = sigma.mask();
            let mut ones = 0usize;
            let mut zeros = 0usize;
            // Cosets of the axis subspace on sigma's variables partition
            // the coordinates; reps are the vectors clear on those axes.
            for rep in 0..n as u64 {
                if rep & mask != 0 {
                    continue;
                }
                let mut parity = false;
                let mut sub = 0u64;
                loop {
                    parity ^= working.get((rep | sub) as usize);
                    if sub == mask {
                        break;
                    }
                    sub = (sub.wrapping_sub(mask)) & mask; // next subset of mask
                }
                if parity {
                    ones += 1;
                } else {
                    zeros += 1;
                }
            }
            if ones > zeros {
                message.set(i, true);
                stage.xor_assign(g.row(i));
            }
        }
        working.xor_assign(&stage);
    }
    Ok(message)
}

/// Exhaustive nearest-codeword decoding. Scans all `2^k` codewords in
/// lexicographic message order and returns the closest codeword, ties
/// resolved to the lexicographically smallest message.
pub fn ml_decode_oracle(
    word: &ReceivedWord,
    g: &GeneratorMatrix,
    guards: &Guards,
) -> Result<Bits> {
    if word.has_erasures() {
        return Err(Error::ErasuresNotSupported);
    }
    expect_word_len(word, g)?;
    let k = g.params().k;
    let sweep = 1u128 << k;
    if sweep > guards.max_exhaustive_codewords {
        return Err(Error::SizeGuardExceeded {
            what: "exhaustive codewords (2^k)",
            requested: sweep,
            limit: guards.max_exhaustive_codewords,
        });
    }
    let mut best_message = Bits::zeros(k);
    let mut best_word = Bits::zeros(g.params().n);
    let mut best_distance = word.bits.distance(&best_word);
    let mut message = Bits::zeros(k);
    let mut candidate = Bits::zeros(g.params().n);
    // Gray-code sweep: step x flips message bit trailing_zeros(x).
    for x in 1u64..(1u64 << k) {
        let i = x.trailing_zeros() as usize;
        message.flip(i);
        candidate.xor_assign(g.row(i));
        let d = word.bits.distance(&candidate);
        if d < best_distance || (d == best_distance && bit_lex_less(&message, &best_message)) {
            best_distance = d;
            best_message = message.clone();
            best_word = candidate.clone();
        }
    }
    Ok(best_word)
}

/// Rank criterion for erasure recoverability: the pattern is uniquely
/// decodable iff the generator submatrix on the non-erased columns still
/// has rank k.
pub fn erasure_correctable_oracle(mask: &Bits, g: &GeneratorMatrix) -> Result<bool> {
    if mask.len() != g.params().n {
        return Err(Error::LengthMismatch {
            expected: g.params().n,
            got: mask.len(),
        });
    }
    let mut rows: Vec<Bits> = g
        .rows()
        .iter()
        .map(|row| {
            let mut masked = row.clone();
            for i in mask.ones_indices() {
                masked.set(i, false);
            }
            masked
        })
        .collect();
    let mut rank = 0usize;
    for col in 0..g.params().n {
        if let Some(p) = (rank..rows.len()).find(|&i| rows[i].get(col)) {
            rows.swap(rank, p);
            let pivot = rows[rank].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != rank && row.get(col) {
                    row.xor_assign(&pivot);
                }
            }
            rank += 1;
        }
    }
    Ok(rank == g.params().k)
}

/// Bit-lexicographic order with bit 0 most significant (message symbol
/// `a_0` compared first).
fn bit_lex_less(a: &Bits, b: &Bits) -> bool {
    debug_assert_eq!(a.len(), b.len());
    for i in 0..a.len() {
        match (a.get(i), b.get(i)) {
            (false, true) => return true,
            (true, false) => return false,
            _ => {}
        }
    }
    false
}

fn expect_word_len(word: &ReceivedWord, g: &GeneratorMatrix) -> Result<()> {
    if word.bits.len() != g.params().n {
        return Err(Error::LengthMismatch {
            expected: g.params().n,
            got: word.bits.len(),
        });
    }
    Ok(())
}
