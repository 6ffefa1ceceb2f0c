//! Verification campaigns: exhaustive or sampled sweeps over error and
//! erasure patterns, and the transversal-number comparison.
//!
//! Exhaustive sweeps shard the colex rank range of each weight class into
//! contiguous chunks handled by a rayon pool; totals add up and chunk
//! witnesses merge in rank order, so the report does not depend on the
//! worker count. Failures inside the guaranteed radius (`d/4` errors,
//! `d - 1` erasures) are counted separately as violations — a healthy
//! build reports zero.

use std::time::Instant;

use anyhow::{bail, ensure, Context, Result};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use rmmld_core::decode::{mld_decode_errors, mld_decode_erasures, erasure_correctable_oracle};
use rmmld_core::geom::{minimum_transversal, is_transversal, transversal_number_bruteforce, Subspace};
use rmmld_core::{Bits, GeneratorMatrix, Guards, ReceivedWord, RecoveryFamilies};

use crate::pattern::{binom, ColexIter};
use crate::report::{
    CampaignReport, RngInfo, SpecEcho, Timing, Totals, TransversalResult, Witness,
    SCHEMA_VERSION,
};

pub const DEFAULT_PATTERN_CAP: u64 = 10_000_000;
pub const DEFAULT_WITNESS_CAP: usize = 10;
const PATTERNS_PER_CHUNK: u128 = 4096;

/// Which messages get encoded and pushed through the channel.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MessagePolicy {
    Zero,
    AllOnes,
    /// `count` seeded random messages, plus the zero and all-ones
    /// messages.
    Random(usize),
    /// All `2^k` messages.
    Exhaustive,
}

impl MessagePolicy {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "zero" => Ok(Self::Zero),
            "all-ones" => Ok(Self::AllOnes),
            "exhaustive" => Ok(Self::Exhaustive),
            _ => {
                let count = s
                    .strip_prefix("random:")
                    .and_then(|c| c.parse().ok())
                    .with_context(|| {
                        format!("invalid message policy {s:?} (zero | all-ones | random:N | exhaustive)")
                    })?;
                Ok(Self::Random(count))
            }
        }
    }

    pub fn label(&self) -> String {
        match self {
            Self::Zero => "zero".into(),
            Self::AllOnes => "all-ones".into(),
            Self::Random(n) => format!("random:{n}"),
            Self::Exhaustive => "exhaustive".into(),
        }
    }

    fn build(&self, k: usize, seed: Option<u64>) -> Result<Vec<Bits>> {
        match self {
            Self::Zero => Ok(vec![Bits::zeros(k)]),
            Self::AllOnes => Ok(vec![Bits::ones(k)]),
            Self::Exhaustive => {
                ensure!(k <= 20, "exhaustive messages infeasible for k = {k}");
                Ok((0u64..(1 << k))
                    .map(|c| {
                        let mut b = Bits::zeros(k);
                        for i in 0..k {
                            if (c >> i) & 1 == 1 {
                                b.set(i, true);
                            }
                        }
                        b
                    })
                    .collect())
            }
            Self::Random(count) => {
                let seed = seed.context("message policy random:N requires --seed")?;
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                rng.set_stream(0);
                let mut out = Vec::with_capacity(count + 2);
                out.push(Bits::zeros(k));
                out.push(Bits::ones(k));
                for _ in 0..*count {
                    let mut b = Bits::zeros(k);
                    for i in 0..k {
                        if rand::Rng::random_bool(&mut rng, 0.5) {
                            b.set(i, true);
                        }
                    }
                    out.push(b);
                }
                Ok(out)
            }
        }
    }
}

/// Pattern source: every pattern of the weight class, or seeded uniform
/// draws of exact-weight patterns.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PatternMode {
    Exhaustive,
    Sampled { trials: u64 },
}

#[derive(Debug, Clone)]
pub struct ErrorCampaign {
    pub r: usize,
    pub m: usize,
    pub weight: usize,
    /// Sweep weights `0..=weight` instead of exactly `weight`.
    pub at_most: bool,
    pub mode: PatternMode,
    pub messages: MessagePolicy,
    pub seed: Option<u64>,
    pub workers: usize,
    pub pattern_cap: u64,
    pub witness_cap: usize,
}

#[derive(Debug, Clone)]
pub struct ErasureCampaign {
    pub r: usize,
    pub m: usize,
    pub weight: usize,
    pub at_most: bool,
    pub mode: PatternMode,
    pub messages: MessagePolicy,
    pub seed: Option<u64>,
    pub workers: usize,
    pub pattern_cap: u64,
    pub witness_cap: usize,
}

#[derive(Debug, Clone)]
pub struct TransversalCampaign {
    /// Runs every (m, subspace dim, flat dim) with m up to this bound.
    pub max_m: usize,
    pub workers: usize,
    pub witness_cap: usize,
}

#[derive(Default)]
struct ChunkOutcome {
    totals: Totals,
    witnesses: Vec<Witness>,
}

/// One contiguous colex rank range within a weight class.
struct Chunk {
    weight: usize,
    start: u128,
    len: u128,
}

fn build_chunks(n: usize, weights: &[usize], cap: u64) -> Result<(u64, Vec<Chunk>)> {
    let mut total: u128 = 0;
    let mut chunks = Vec::new();
    for &w in weights {
        ensure!(w <= n, "weight {w} exceeds code length {n}");
        let count = binom(n, w);
        total += count;
        let mut start = 0u128;
        while start < count {
            let len = PATTERNS_PER_CHUNK.min(count - start);
            chunks.push(Chunk {
                weight: w,
                start,
                len,
            });
            start += len;
        }
    }
    ensure!(
        total <= cap as u128,
        "exhaustive sweep of {total} patterns exceeds the cap of {cap} (raise --pattern-cap)"
    );
    Ok((total as u64, chunks))
}

fn make_pool(workers: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .context("building worker pool")
}

fn render_witness_word(bits: &Bits, erasures: &Bits) -> String {
    (0..bits.len())
        .map(|i| {
            if erasures.get(i) {
                '?'
            } else if bits.get(i) {
                '1'
            } else {
                '0'
            }
        })
        .collect()
}

fn merge_outcomes(outcomes: Vec<ChunkOutcome>, witness_cap: usize) -> (Totals, Vec<Witness>) {
    let mut totals = Totals::default();
    let mut witnesses = Vec::new();
    for outcome in outcomes {
        totals.merge(&outcome.totals);
        for w in outcome.witnesses {
            if witnesses.len() < witness_cap {
                witnesses.push(w);
            }
        }
    }
    (totals, witnesses)
}

/// Draws `trials` exact-weight patterns with a dedicated RNG stream.
fn sample_patterns(
    n: usize,
    weight: usize,
    trials: u64,
    seed: u64,
) -> Vec<Vec<u32>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(1);
    (0..trials)
        .map(|_| {
            let mut idx: Vec<u32> = rand::seq::index::sample(&mut rng, n, weight)
                .iter()
                .map(|i| i as u32)
                .collect();
            idx.sort_unstable();
            idx
        })
        .collect()
}

pub fn run_error_campaign(spec: &ErrorCampaign, guards: &Guards) -> Result<CampaignReport> {
    let start = Instant::now();
    let g = GeneratorMatrix::new(spec.r, spec.m, guards)?;
    let families = RecoveryFamilies::build(&g, guards)?;
    let params = *g.params();
    let radius = params.d / 4;
    let messages = encode_all(&spec.messages.build(params.k, spec.seed)?, &g)?;

    let weights: Vec<usize> = if spec.at_most {
        (0..=spec.weight).collect()
    } else {
        vec![spec.weight]
    };

    let decode_one = |pattern: &[u32], rank: u128, out: &mut ChunkOutcome| {
        for (msg, clean) in &messages {
            let mut bits = clean.clone();
            for &p in pattern {
                bits.flip(p as usize);
            }
            let word = ReceivedWord::from_bits(bits);
            let report = mld_decode_errors(&word, &g, &families).expect("mode checked");
            let mismatch = report.message != *msg;
            let tie = report.any_tie();
            let in_radius = pattern.len() <= radius;
            let violation = in_radius && (mismatch || tie);
            out.totals.decodes += 1;
            out.totals.failures += u64::from(mismatch);
            out.totals.ties += u64::from(tie);
            out.totals.violations += u64::from(violation);
            if (mismatch || violation) && out.witnesses.len() < spec.witness_cap {
                out.witnesses.push(Witness {
                    rank: rank as u64,
                    weight: pattern.len(),
                    pattern: pattern.iter().map(|&p| p as usize + 1).collect(),
                    message: msg.to_bit_string(),
                    received: word.bits().to_bit_string(),
                    decoded: report.message.to_bit_string(),
                    tied_symbols: report
                        .per_symbol
                        .iter()
                        .filter(|s| s.tie)
                        .map(|s| s.sigma.label())
                        .collect(),
                    blocked_symbols: vec![],
                    violation,
                    oracle_correctable: None,
                });
            }
        }
    };

    let (kind, totals, witnesses, rng_info) = match spec.mode {
        PatternMode::Exhaustive => {
            let (total, chunks) = build_chunks(params.n, &weights, spec.pattern_cap)?;
            let pool = make_pool(spec.workers)?;
            let outcomes: Vec<ChunkOutcome> = pool.install(|| {
                chunks
                    .par_iter()
                    .map(|chunk| {
                        let mut out = ChunkOutcome::default();
                        out.totals.patterns = chunk.len as u64;
                        let iter = ColexIter::from_rank(params.n, chunk.weight, chunk.start)
                            .take(chunk.len as usize);
                        for (offset, pattern) in iter.enumerate() {
                            decode_one(&pattern, chunk.start + offset as u128, &mut out);
                        }
                        out
                    })
                    .collect()
            });
            let (totals, witnesses) = merge_outcomes(outcomes, spec.witness_cap);
            debug_assert_eq!(totals.patterns, total);
            let rng = spec.seed.filter(|_| matches!(spec.messages, MessagePolicy::Random(_)));
            ("errors-exhaustive", totals, witnesses, rng.map(RngInfo::new))
        }
        PatternMode::Sampled { trials } => {
            ensure!(!spec.at_most, "sampled mode draws exact-weight patterns; drop --at-most");
            let seed = spec.seed.context("sampled mode requires --seed")?;
            ensure!(
                trials <= spec.pattern_cap,
                "trials exceed the pattern cap"
            );
            let patterns = sample_patterns(params.n, spec.weight, trials, seed);
            let pool = make_pool(spec.workers)?;
            let outcomes: Vec<ChunkOutcome> = pool.install(|| {
                patterns
                    .par_chunks(PATTERNS_PER_CHUNK as usize)
                    .enumerate()
                    .map(|(ci, block)| {
                        let mut out = ChunkOutcome::default();
                        out.totals.patterns = block.len() as u64;
                        for (i, pattern) in block.iter().enumerate() {
                            let trial = ci * PATTERNS_PER_CHUNK as usize + i;
                            decode_one(pattern, trial as u128, &mut out);
                        }
                        out
                    })
                    .collect()
            });
            let (totals, witnesses) = merge_outcomes(outcomes, spec.witness_cap);
            ("errors-sampled", totals, witnesses, Some(RngInfo::new(seed)))
        }
    };

    Ok(CampaignReport {
        schema_version: SCHEMA_VERSION,
        kind: kind.into(),
        spec: SpecEcho {
            weight: Some(spec.weight),
            at_most: Some(spec.at_most),
            exhaustive: Some(matches!(spec.mode, PatternMode::Exhaustive)),
            trials: match spec.mode {
                PatternMode::Sampled { trials } => Some(trials),
                PatternMode::Exhaustive => None,
            },
            messages: Some(spec.messages.label()),
            seed: spec.seed,
            ..SpecEcho::bare(spec.r, spec.m, spec.workers, spec.pattern_cap, spec.witness_cap)
        },
        totals,
        witnesses,
        rng: rng_info,
        estimates: None,
        transversal_results: None,
        timing: Timing {
            elapsed_ms: start.elapsed().as_millis() as u64,
        },
    })
}

pub fn run_erasure_campaign(spec: &ErasureCampaign, guards: &Guards) -> Result<CampaignReport> {
    let start = Instant::now();
    let g = GeneratorMatrix::new(spec.r, spec.m, guards)?;
    let families = RecoveryFamilies::build(&g, guards)?;
    let params = *g.params();
    let radius = params.d - 1;
    let messages = encode_all(&spec.messages.build(params.k, spec.seed)?, &g)?;

    let weights: Vec<usize> = if spec.at_most {
        (0..=spec.weight).collect()
    } else {
        vec![spec.weight]
    };

    let decode_one = |pattern: &[u32], rank: u128, out: &mut ChunkOutcome| {
        let mut erasures = Bits::zeros(params.n);
        for &p in pattern {
            erasures.set(p as usize, true);
        }
        for (msg, clean) in &messages {
            let mut bits = clean.clone();
            for &p in pattern {
                bits.flip(p as usize); // garbage under erasures
            }
            let word = ReceivedWord::new(bits, erasures.clone()).expect("lengths match");
            let report = mld_decode_erasures(&word, &g, &families).expect("lengths match");
            let blocked = report.unrecoverable_symbols() as u64;
            // On a clean run the output re-encodes to the codeword on
            // every non-erased coordinate.
            let mismatch = blocked == 0 && report.message != *msg;
            let consistent = blocked > 0 || {
                let reencoded = g.encode(&report.message).expect("length");
                (0..params.n)
                    .all(|i| erasures.get(i) || reencoded.get(i) == word.bits().get(i))
            };
            let failure = blocked > 0 || mismatch || !consistent;
            let in_radius = pattern.len() <= radius;
            let violation = in_radius && failure;
            out.totals.decodes += 1;
            out.totals.failures += u64::from(failure);
            out.totals.unrecoverable_symbols += blocked;
            out.totals.violations += u64::from(violation);
            if failure && out.witnesses.len() < spec.witness_cap {
                let oracle = erasure_correctable_oracle(&erasures, &g).expect("length");
                out.witnesses.push(Witness {
                    rank: rank as u64,
                    weight: pattern.len(),
                    pattern: pattern.iter().map(|&p| p as usize + 1).collect(),
                    message: msg.to_bit_string(),
                    received: render_witness_word(word.bits(), &erasures),
                    decoded: report.message.to_bit_string(),
                    tied_symbols: vec![],
                    blocked_symbols: report
                        .per_symbol
                        .iter()
                        .filter(|s| s.unrecoverable)
                        .map(|s| s.sigma.label())
                        .collect(),
                    violation,
                    oracle_correctable: Some(oracle),
                });
            }
        }
    };

    let (kind, totals, witnesses, rng_info) = match spec.mode {
        PatternMode::Exhaustive => {
            let (total, chunks) = build_chunks(params.n, &weights, spec.pattern_cap)?;
            let pool = make_pool(spec.workers)?;
            let outcomes: Vec<ChunkOutcome> = pool.install(|| {
                chunks
                    .par_iter()
                    .map(|chunk| {
                        let mut out = ChunkOutcome::default();
                        out.totals.patterns = chunk.len as u64;
                        let iter = ColexIter::from_rank(params.n, chunk.weight, chunk.start)
                            .take(chunk.len as usize);
                        for (offset, pattern) in iter.enumerate() {
                            decode_one(&pattern, chunk.start + offset as u128, &mut out);
                        }
                        out
                    })
                    .collect()
            });
            let (totals, witnesses) = merge_outcomes(outcomes, spec.witness_cap);
            debug_assert_eq!(totals.patterns, total);
            let rng = spec.seed.filter(|_| matches!(spec.messages, MessagePolicy::Random(_)));
            ("erasures-exhaustive", totals, witnesses, rng.map(RngInfo::new))
        }
        PatternMode::Sampled { trials } => {
            ensure!(!spec.at_most, "sampled mode draws exact-weight patterns; drop --at-most");
            let seed = spec.seed.context("sampled mode requires --seed")?;
            ensure!(trials <= spec.pattern_cap, "trials exceed the pattern cap");
            let patterns = sample_patterns(params.n, spec.weight, trials, seed);
            let pool = make_pool(spec.workers)?;
            let outcomes: Vec<ChunkOutcome> = pool.install(|| {
                patterns
                    .par_chunks(PATTERNS_PER_CHUNK as usize)
                    .enumerate()
                    .map(|(ci, block)| {
                        let mut out = ChunkOutcome::default();
                        out.totals.patterns = block.len() as u64;
                        for (i, pattern) in block.iter().enumerate() {
                            let trial = ci * PATTERNS_PER_CHUNK as usize + i;
                            decode_one(pattern, trial as u128, &mut out);
                        }
                        out
                    })
                    .collect()
            });
            let (totals, witnesses) = merge_outcomes(outcomes, spec.witness_cap);
            ("erasures-sampled", totals, witnesses, Some(RngInfo::new(seed)))
        }
    };

    Ok(CampaignReport {
        schema_version: SCHEMA_VERSION,
        kind: kind.into(),
        spec: SpecEcho {
            weight: Some(spec.weight),
            at_most: Some(spec.at_most),
            exhaustive: Some(matches!(spec.mode, PatternMode::Exhaustive)),
            trials: match spec.mode {
                PatternMode::Sampled { trials } => Some(trials),
                PatternMode::Exhaustive => None,
            },
            messages: Some(spec.messages.label()),
            seed: spec.seed,
            ..SpecEcho::bare(spec.r, spec.m, spec.workers, spec.pattern_cap, spec.witness_cap)
        },
        totals,
        witnesses,
        rng: rng_info,
        estimates: None,
        transversal_results: None,
        timing: Timing {
            elapsed_ms: start.elapsed().as_millis() as u64,
        },
    })
}

/// Compares, for every `(m <= max_m, subspace dim, flat dim)`, the
/// constructed transversal size against the brute-force minimum and the
/// closed formula `2^(m - flat_dim + 1) - 1`.
pub fn run_transversal_campaign(
    spec: &TransversalCampaign,
    guards: &Guards,
) -> Result<CampaignReport> {
    let start = Instant::now();
    if spec.max_m > 5 {
        bail!("transversal brute force is guarded to m <= 5");
    }
    let mut triples = Vec::new();
    for m in 1..=spec.max_m {
        for l in 0..m {
            for fd in l + 1..=m {
                triples.push((m, l, fd));
            }
        }
    }
    let pool = make_pool(spec.workers)?;
    let results: Vec<Result<TransversalResult>> = pool.install(|| {
        triples
            .par_iter()
            .map(|&(m, l, fd)| {
                let s = Subspace::axis(m, &(1..=l).collect::<Vec<_>>());
                let built = minimum_transversal(m, &s, fd)?;
                let brute = transversal_number_bruteforce(m, &s, fd, guards)?;
                let formula = (1usize << (m - fd + 1)) - 1;
                let hits = is_transversal(&built, m, &s, fd)?;
                Ok(TransversalResult {
                    m,
                    subspace_dim: l,
                    flat_dim: fd,
                    construction_size: built.card(),
                    bruteforce_size: brute,
                    formula_size: formula,
                    ok: hits && built.card() == formula && brute == formula,
                })
            })
            .collect()
    });
    let results: Vec<TransversalResult> = results.into_iter().collect::<Result<_>>()?;
    let failures = results.iter().filter(|r| !r.ok).count() as u64;
    let totals = Totals {
        patterns: results.len() as u64,
        decodes: 0,
        failures,
        violations: failures,
        ties: 0,
        unrecoverable_symbols: 0,
    };
    Ok(CampaignReport {
        schema_version: SCHEMA_VERSION,
        kind: "transversal".into(),
        spec: SpecEcho {
            r: None,
            m: None,
            max_m: Some(spec.max_m),
            ..SpecEcho::bare(0, 0, spec.workers, 0, spec.witness_cap)
        },
        totals,
        witnesses: vec![],
        rng: None,
        estimates: None,
        transversal_results: Some(results),
        timing: Timing {
            elapsed_ms: start.elapsed().as_millis() as u64,
        },
    })
}

fn encode_all(messages: &[Bits], g: &GeneratorMatrix) -> Result<Vec<(Bits, Bits)>> {
    messages
        .iter()
        .map(|m| Ok((m.clone(), g.encode(m)?)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn error_spec(r: usize, m: usize, weight: usize) -> ErrorCampaign {
        ErrorCampaign {
            r,
            m,
            weight,
            at_most: true,
            mode: PatternMode::Exhaustive,
            messages: MessagePolicy::Exhaustive,
            seed: None,
            workers: 2,
            pattern_cap: DEFAULT_PATTERN_CAP,
            witness_cap: DEFAULT_WITNESS_CAP,
        }
    }

    #[test]
    fn rm24_single_errors_all_messages_clean() {
        let report = run_error_campaign(&error_spec(2, 4, 1), &Guards::default()).unwrap();
        assert_eq!(report.totals.patterns, 17);
        assert_eq!(report.totals.decodes, 17 * 2048);
        assert_eq!(report.totals.failures, 0);
        assert_eq!(report.totals.ties, 0);
        assert_eq!(report.totals.violations, 0);
    }

    #[test]
    fn rm24_weight_two_fails_with_witnesses() {
        let mut spec = error_spec(2, 4, 2);
        spec.at_most = false;
        spec.messages = MessagePolicy::Random(8);
        spec.seed = Some(7);
        let report = run_error_campaign(&spec, &Guards::default()).unwrap();
        assert_eq!(report.totals.patterns, 120);
        assert!(report.totals.failures > 0);
        assert!(!report.witnesses.is_empty());
        // Weight 2 is beyond the radius: failures are not violations.
        assert_eq!(report.totals.violations, 0);
        for w in &report.witnesses {
            assert_eq!(w.weight, 2);
            assert!(!w.violation);
        }
    }

    #[test]
    fn erasures_within_d_minus_1_clean() {
        let spec = ErasureCampaign {
            r: 2,
            m: 4,
            weight: 3,
            at_most: true,
            mode: PatternMode::Exhaustive,
            messages: MessagePolicy::Random(2),
            seed: Some(11),
            workers: 2,
            pattern_cap: DEFAULT_PATTERN_CAP,
            witness_cap: DEFAULT_WITNESS_CAP,
        };
        let report = run_erasure_campaign(&spec, &Guards::default()).unwrap();
        assert_eq!(report.totals.patterns, 1 + 16 + 120 + 560);
        assert_eq!(report.totals.failures, 0);
        assert_eq!(report.totals.unrecoverable_symbols, 0);
        assert_eq!(report.totals.violations, 0);
    }

    #[test]
    fn erasures_at_weight_d_report_blocked_symbols() {
        let spec = ErasureCampaign {
            r: 2,
            m: 4,
            weight: 4,
            at_most: false,
            mode: PatternMode::Exhaustive,
            messages: MessagePolicy::Zero,
            seed: None,
            workers: 2,
            pattern_cap: DEFAULT_PATTERN_CAP,
            witness_cap: 5,
            };
        let report = run_erasure_campaign(&spec, &Guards::default()).unwrap();
        assert!(report.totals.failures > 0);
        assert_eq!(report.totals.violations, 0, "weight d failures are expected, not violations");
        // Every witness records the oracle's verdict.
        assert!(report
            .witnesses
            .iter()
            .all(|w| w.oracle_correctable.is_some()));
    }

    #[test]
    fn worker_count_does_not_change_results() {
        let mut one = error_spec(1, 4, 2);
        one.workers = 1;
        let mut four = error_spec(1, 4, 2);
        four.workers = 4;
        let a = run_error_campaign(&one, &Guards::default()).unwrap();
        let b = run_error_campaign(&four, &Guards::default()).unwrap();
        assert_eq!(a.totals, b.totals);
        assert_eq!(a.witnesses, b.witnesses);
    }

    #[test]
    fn sampled_mode_is_reproducible() {
        let spec = ErrorCampaign {
            r: 2,
            m: 5,
            weight: 2,
            at_most: false,
            mode: PatternMode::Sampled { trials: 500 },
            messages: MessagePolicy::Random(4),
            seed: Some(42),
            workers: 3,
            pattern_cap: DEFAULT_PATTERN_CAP,
            witness_cap: DEFAULT_WITNESS_CAP,
        };
        let a = run_error_campaign(&spec, &Guards::default()).unwrap();
        let b = run_error_campaign(&spec, &Guards::default()).unwrap();
        let mut ja = serde_json::to_value(&a).unwrap();
        let mut jb = serde_json::to_value(&b).unwrap();
        ja["timing"] = serde_json::json!(null);
        jb["timing"] = serde_json::json!(null);
        assert_eq!(ja, jb);
        assert_eq!(a.totals.failures, 0, "weight 2 is within the RM(2,5) radius");
        assert_eq!(a.rng.as_ref().unwrap().algorithm, "chacha8");
    }

    #[test]
    fn transversal_campaign_all_green() {
        let spec = TransversalCampaign {
            max_m: 4,
            workers: 2,
            witness_cap: DEFAULT_WITNESS_CAP,
        };
        let report = run_transversal_campaign(&spec, &Guards::default()).unwrap();
        assert_eq!(report.totals.patterns, 1 + 3 + 6 + 10);
        assert_eq!(report.totals.failures, 0);
        let results = report.transversal_results.as_ref().unwrap();
        assert!(results.iter().all(|t| t.ok));
    }

    #[test]
    fn pattern_cap_is_enforced() {
        let mut spec = error_spec(2, 4, 2);
        spec.pattern_cap = 10;
        assert!(run_error_campaign(&spec, &Guards::default()).is_err());
    }
}
