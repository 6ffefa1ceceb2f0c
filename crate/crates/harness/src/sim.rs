//! Seeded Monte-Carlo simulation over BSC(p) and BEC(epsilon).
//!
//! Each trial draws its own ChaCha8 stream from the campaign seed, so the
//! run is reproducible and independent of the worker count. The report
//! carries the analytic binomial tail beyond the guaranteed radius next
//! to the observed rates, which is the only baseline available for these
//! deterministic-by-construction decoders.

use std::time::Instant;

use anyhow::{bail, Context, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use rmmld_core::decode::{ml_decode_oracle, mld_decode_errors, mld_decode_erasures, reed_decode};
use rmmld_core::{Bits, GeneratorMatrix, Guards, ReceivedWord, RecoveryFamilies};

use crate::report::{
    CampaignReport, DecoderStats, RngInfo, SimEstimates, SpecEcho, Timing, Totals, Witness,
    SCHEMA_VERSION,
};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Channel {
    Bsc { p: f64 },
    Bec { epsilon: f64 },
}

impl Channel {
    fn probability(&self) -> f64 {
        match *self {
            Channel::Bsc { p } => p,
            Channel::Bec { epsilon } => epsilon,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            Channel::Bsc { .. } => "sim-bsc",
            Channel::Bec { .. } => "sim-bec",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecoderKind {
    Mld,
    Reed,
    MlOracle,
}

impl DecoderKind {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "mld" => Ok(Self::Mld),
            "reed" => Ok(Self::Reed),
            "ml" => Ok(Self::MlOracle),
            _ => bail!("unknown decoder {s:?} (mld | reed | ml)"),
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Self::Mld => "mld",
            Self::Reed => "reed",
            Self::MlOracle => "ml",
        }
    }
}

#[derive(Debug, Clone)]
pub struct SimCampaign {
    pub r: usize,
    pub m: usize,
    pub channel: Channel,
    pub trials: u64,
    pub seed: u64,
    pub decoders: Vec<DecoderKind>,
    pub workers: usize,
    pub witness_cap: usize,
}

/// Recovers the message of a codeword through a precomputed inverse of
/// the generator restricted to its pivot columns.
struct MessageRecovery {
    pivot_cols: Vec<usize>,
    /// Row j holds the GF(2) coefficients expressing message bit j from
    /// the codeword bits at the pivot columns.
    inverse_rows: Vec<u64>,
}

impl MessageRecovery {
    fn new(g: &GeneratorMatrix) -> Self {
        let k = g.params().k;
        // Augmented elimination: [G_P | I] -> [I | G_P^{-1}] over the
        // pivot columns discovered left to right.
        let mut rows: Vec<(Bits, u64)> = g
            .rows()
            .iter()
            .enumerate()
            .map(|(i, r)| (r.clone(), 1u64 << i))
            .collect();
        let mut pivot_cols = Vec::with_capacity(k);
        let mut rank = 0usize;
        for col in 0..g.params().n {
            if rank == k {
                break;
            }
            if let Some(p) = (rank..k).find(|&i| rows[i].0.get(col)) {
                rows.swap(rank, p);
                let (pivot_bits, pivot_aug) = rows[rank].clone();
                for (i, (bits, aug)) in rows.iter_mut().enumerate() {
                    if i != rank && bits.get(col) {
                        bits.xor_assign(&pivot_bits);
                        *aug ^= pivot_aug;
                    }
                }
                pivot_cols.push(col);
                rank += 1;
            }
        }
        assert_eq!(rank, k, "generator matrix must have full rank");
        // After full reduction, row i of the augment expresses message
        // combination aug[i] = codeword bit at pivot_cols[i]. Transpose to
        // read message bit j from codeword pivots.
        let mut inverse_rows = vec![0u64; k];
        for (i, &(_, aug)) in rows.iter().enumerate() {
            for (j, inv_row) in inverse_rows.iter_mut().enumerate() {
                if (aug >> j) & 1 == 1 {
                    *inv_row |= 1 << i;
                }
            }
        }
        Self {
            pivot_cols,
            inverse_rows,
        }
    }

    fn recover(&self, codeword: &Bits) -> Bits {
        let k = self.pivot_cols.len();
        let mut pivots = 0u64;
        for (i, &col) in self.pivot_cols.iter().enumerate() {
            if codeword.get(col) {
                pivots |= 1 << i;
            }
        }
        let mut message = Bits::zeros(k);
        for (j, &row) in self.inverse_rows.iter().enumerate() {
            if (row & pivots).count_ones() & 1 == 1 {
                message.set(j, true);
            }
        }
        message
    }
}

#[derive(Default, Clone)]
struct DecoderTally {
    frame_errors: u64,
    symbol_errors: u64,
}

#[derive(Default)]
struct SimChunk {
    tallies: Vec<DecoderTally>,
    unrecoverable: u64,
    witnesses: Vec<Witness>,
}

pub fn run_channel_sim(spec: &SimCampaign, guards: &Guards) -> Result<CampaignReport> {
    let start = Instant::now();
    let prob = spec.channel.probability();
    if !(0.0..=1.0).contains(&prob) {
        bail!("channel parameter {prob} outside [0, 1]");
    }
    if spec.decoders.is_empty() {
        bail!("no decoders requested");
    }
    if matches!(spec.channel, Channel::Bec { .. })
        && spec.decoders.iter().any(|d| *d != DecoderKind::Mld)
    {
        bail!("only the one-step decoder handles erasures; use --decoders mld on the BEC");
    }
    let g = GeneratorMatrix::new(spec.r, spec.m, guards)?;
    let families = RecoveryFamilies::build(&g, guards)?;
    let params = *g.params();
    let recovery = if spec.decoders.contains(&DecoderKind::MlOracle) {
        let sweep = 1u128 << params.k;
        if sweep > guards.max_exhaustive_codewords {
            bail!(
                "ML oracle sweep 2^{} exceeds the exhaustive guard; drop ml from --decoders",
                params.k
            );
        }
        Some(MessageRecovery::new(&g))
    } else {
        None
    };

    let chunk_size = 4096u64;
    let chunk_count = spec.trials.div_ceil(chunk_size);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(spec.workers)
        .build()
        .context("building worker pool")?;

    let run_trial = |trial: u64, chunk: &mut SimChunk| -> Result<()> {
        let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
        rng.set_stream(trial + 2); // streams 0..2 are reserved for campaigns
        let mut message = Bits::zeros(params.k);
        for i in 0..params.k {
            if rng.random_bool(0.5) {
                message.set(i, true);
            }
        }
        let clean = g.encode(&message)?;
        match spec.channel {
            Channel::Bsc { p } => {
                let mut bits = clean.clone();
                let mut flipped = Vec::new();
                for i in 0..params.n {
                    if rng.random_bool(p) {
                        bits.flip(i);
                        flipped.push(i + 1);
                    }
                }
                let word = ReceivedWord::from_bits(bits);
                for (d, decoder) in spec.decoders.iter().enumerate() {
                    let decoded = match decoder {
                        DecoderKind::Mld => mld_decode_errors(&word, &g, &families)?.message,
                        DecoderKind::Reed => reed_decode(&word, &g)?,
                        DecoderKind::MlOracle => recovery
                            .as_ref()
                            .expect("recovery built when ml requested")
                            .recover(&ml_decode_oracle(&word, &g, guards)?),
                    };
                    let errs = decoded.distance(&message) as u64;
                    chunk.tallies[d].symbol_errors += errs;
                    if errs > 0 {
                        chunk.tallies[d].frame_errors += 1;
                        if *decoder == DecoderKind::Mld && chunk.witnesses.len() < spec.witness_cap
                        {
                            chunk.witnesses.push(Witness {
                                rank: trial,
                                weight: flipped.len(),
                                pattern: flipped.clone(),
                                message: message.to_bit_string(),
                                received: word.bits().to_bit_string(),
                                decoded: decoded.to_bit_string(),
                                tied_symbols: vec![],
                                blocked_symbols: vec![],
                                violation: false,
                                oracle_correctable: None,
                            });
                        }
                    }
                }
            }
            Channel::Bec { epsilon } => {
                let mut erasures = Bits::zeros(params.n);
                let mut bits = clean.clone();
                let mut erased = Vec::new();
                for i in 0..params.n {
                    if rng.random_bool(epsilon) {
                        erasures.set(i, true);
                        bits.flip(i); // garbage under the erasure
                        erased.push(i + 1);
                    }
                }
                let word = ReceivedWord::new(bits, erasures)?;
                let report = mld_decode_erasures(&word, &g, &families)?;
                let blocked = report.unrecoverable_symbols() as u64;
                chunk.unrecoverable += blocked;
                let errs = if blocked > 0 {
                    blocked
                } else {
                    report.message.distance(&message) as u64
                };
                chunk.tallies[0].symbol_errors += errs;
                if errs > 0 {
                    chunk.tallies[0].frame_errors += 1;
                    if chunk.witnesses.len() < spec.witness_cap {
                        chunk.witnesses.push(Witness {
                            rank: trial,
                            weight: erased.len(),
                            pattern: erased.clone(),
                            message: message.to_bit_string(),
                            received: {
                                let mut s = String::new();
                                for i in 0..params.n {
                                    s.push(if word.erasures().get(i) {
                                        '?'
                                    } else if word.bits().get(i) {
                                        '1'
                                    } else {
                                        '0'
                                    });
                                }
                                s
                            },
                            decoded: report.message.to_bit_string(),
                            tied_symbols: vec![],
                            blocked_symbols: report
                                .per_symbol
                                .iter()
                                .filter(|s| s.unrecoverable)
                                .map(|s| s.sigma.label())
                                .collect(),
                            violation: false,
                            oracle_correctable: None,
                        });
                    }
                }
            }
        }
        Ok(())
    };

    let chunks: Vec<Result<SimChunk>> = pool.install(|| {
        (0..chunk_count)
            .into_par_iter()
            .map(|ci| {
                let lo = ci * chunk_size;
                let hi = ((ci + 1) * chunk_size).min(spec.trials);
                let mut chunk = SimChunk {
                    tallies: vec![DecoderTally::default(); spec.decoders.len()],
                    ..Default::default()
                };
                for trial in lo..hi {
                    run_trial(trial, &mut chunk)?;
                }
                Ok(chunk)
            })
            .collect()
    });

    let mut tallies = vec![DecoderTally::default(); spec.decoders.len()];
    let mut witnesses = Vec::new();
    let mut unrecoverable = 0u64;
    for chunk in chunks {
        let chunk = chunk?;
        for (acc, t) in tallies.iter_mut().zip(&chunk.tallies) {
            acc.frame_errors += t.frame_errors;
            acc.symbol_errors += t.symbol_errors;
        }
        unrecoverable += chunk.unrecoverable;
        for w in chunk.witnesses {
            if witnesses.len() < spec.witness_cap {
                witnesses.push(w);
            }
        }
    }

    let radius = match spec.channel {
        Channel::Bsc { .. } => params.d / 4,
        Channel::Bec { .. } => params.d - 1,
    };
    let tail = binomial_tail(params.n, prob, radius);
    let symbols_total = spec.trials * params.k as u64;
    let per_decoder: Vec<DecoderStats> = spec
        .decoders
        .iter()
        .zip(&tallies)
        .map(|(d, t)| DecoderStats {
            decoder: d.label().to_string(),
            frame_errors: t.frame_errors,
            fer: ratio(t.frame_errors, spec.trials),
            symbol_errors: t.symbol_errors,
            symbols_total,
            ser: ratio(t.symbol_errors, symbols_total),
        })
        .collect();

    let mld_failures = per_decoder
        .iter()
        .find(|d| d.decoder == "mld")
        .map_or(0, |d| d.frame_errors);

    Ok(CampaignReport {
        schema_version: SCHEMA_VERSION,
        kind: spec.channel.kind().into(),
        spec: SpecEcho {
            trials: Some(spec.trials),
            seed: Some(spec.seed),
            probability: Some(prob),
            decoders: Some(spec.decoders.iter().map(|d| d.label().to_string()).collect()),
            ..SpecEcho::bare(spec.r, spec.m, spec.workers, 0, spec.witness_cap)
        },
        totals: Totals {
            patterns: spec.trials,
            decodes: spec.trials * spec.decoders.len() as u64,
            failures: mld_failures,
            violations: 0,
            ties: 0,
            unrecoverable_symbols: unrecoverable,
        },
        witnesses,
        rng: Some(RngInfo::new(spec.seed)),
        estimates: Some(SimEstimates {
            trials: spec.trials,
            per_decoder,
            analytic_tail_beyond_radius: tail,
        }),
        transversal_results: None,
        timing: Timing {
            elapsed_ms: start.elapsed().as_millis() as u64,
        },
    })
}

fn ratio(num: u64, den: u64) -> f64 {
    if den == 0 {
        0.0
    } else {
        num as f64 / den as f64
    }
}

/// P[Binomial(n, p) > t], computed directly in f64.
pub fn binomial_tail(n: usize, p: f64, t: usize) -> f64 {
    let q = 1.0 - p;
    let mut tail = 0.0f64;
    for w in (t + 1)..=n {
        let mut term = 1.0f64;
        for i in 0..w {
            term *= (n - i) as f64 / (i + 1) as f64;
        }
        term *= p.powi(w as i32) * q.powi((n - w) as i32);
        tail += term;
    }
    tail.clamp(0.0, 1.0)
}
