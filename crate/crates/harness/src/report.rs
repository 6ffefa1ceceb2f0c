//! Machine-readable campaign reports.
//!
//! JSON is the primary format (schema_version at the top level); a CSV
//! summary row is available for spreadsheet diffing. Two runs with the
//! same spec (including seed and worker count) produce byte-identical
//! JSON except for the `timing` block.

use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;
pub const RNG_ALGORITHM: &str = "chacha8";

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct CampaignReport {
    pub schema_version: u32,
    /// Campaign flavor, e.g. "errors-exhaustive" or "sim-bec".
    pub kind: String,
    pub spec: SpecEcho,
    pub totals: Totals,
    /// Failure witnesses, lowest pattern rank first, capped.
    pub witnesses: Vec<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rng: Option<RngInfo>,
    /// Monte-Carlo estimates (simulation campaigns only).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub estimates: Option<SimEstimates>,
    /// Per-triple outcomes (transversal campaigns only).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub transversal_results: Option<Vec<TransversalResult>>,
    pub timing: Timing,
}

impl CampaignReport {
    /// True iff the run observed a theorem-violating witness.
    pub fn has_violations(&self) -> bool {
        self.totals.violations > 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub const CSV_HEADER: &'static str =
        "kind,r,m,weight,patterns,decodes,failures,violations,ties,unrecoverable_symbols,elapsed_ms";

    pub fn csv_row(&self) -> String {
        fn opt(v: Option<usize>) -> String {
            v.map_or_else(|| "-".to_string(), |w| w.to_string())
        }
        format!(
            "{},{},{},{},{},{},{},{},{},{},{}",
            self.kind,
            opt(self.spec.r),
            opt(self.spec.m),
            opt(self.spec.weight),
            self.totals.patterns,
            self.totals.decodes,
            self.totals.failures,
            self.totals.violations,
            self.totals.ties,
            self.totals.unrecoverable_symbols,
            self.timing.elapsed_ms
        )
    }
}

/// Echo of the campaign parameters, fixed before the run starts.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct SpecEcho {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weight: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub at_most: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exhaustive: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trials: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub messages: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub probability: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decoders: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_m: Option<usize>,
    pub workers: usize,
    pub pattern_cap: u64,
    pub witness_cap: usize,
}

impl SpecEcho {
    pub fn bare(r: usize, m: usize, workers: usize, pattern_cap: u64, witness_cap: usize) -> Self {
        Self {
            r: Some(r),
            m: Some(m),
            weight: None,
            at_most: None,
            exhaustive: None,
            trials: None,
            messages: None,
            seed: None,
            probability: None,
            decoders: None,
            max_m: None,
            workers,
            pattern_cap,
            witness_cap,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, Serialize, Deserialize, PartialEq, Eq)]
pub struct Totals {
    /// Distinct patterns (or trials, or parameter triples) examined.
    pub patterns: u64,
    /// Individual decode invocations.
    pub decodes: u64,
    /// Decodes whose output differed from the transmitted message, plus
    /// erasure decodes with blocked symbols.
    pub failures: u64,
    /// Failures (or ties) inside the guaranteed radius: theorem
    /// violations. Zero on a healthy build.
    pub violations: u64,
    /// Decodes in which some symbol vote tied.
    pub ties: u64,
    /// Blocked symbols summed over erasure decodes.
    pub unrecoverable_symbols: u64,
}

impl Totals {
    pub fn merge(&mut self, other: &Totals) {
        self.patterns += other.patterns;
        self.decodes += other.decodes;
        self.failures += other.failures;
        self.violations += other.violations;
        self.ties += other.ties;
        self.unrecoverable_symbols += other.unrecoverable_symbols;
    }
}

/// A replayable failure record.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct Witness {
    /// Colex rank of the pattern within its weight class.
    pub rank: u64,
    pub weight: usize,
    /// 1-based coordinate indices of the pattern.
    pub pattern: Vec<usize>,
    /// Transmitted message bits (row order).
    pub message: String,
    /// Received word; erased coordinates rendered as `?`.
    pub received: String,
    /// Decoder output message bits.
    pub decoded: String,
    /// Symbols that tied (error mode).
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub tied_symbols: Vec<String>,
    /// Symbols with every recovery set blocked (erasure mode).
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub blocked_symbols: Vec<String>,
    /// Whether this failure sits inside the guaranteed radius.
    pub violation: bool,
    /// Erasure campaigns: what the generator-rank oracle says about the
    /// pattern.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_correctable: Option<bool>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct RngInfo {
    pub algorithm: String,
    pub seed: u64,
}

impl RngInfo {
    pub fn new(seed: u64) -> Self {
        Self {
            algorithm: RNG_ALGORITHM.to_string(),
            seed,
        }
    }
}

/// Monte-Carlo estimates per decoder, with the analytic tail bound of the
/// guaranteed radius for context.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct SimEstimates {
    pub trials: u64,
    pub per_decoder: Vec<DecoderStats>,
    /// P[channel corrupts more than the guaranteed radius]: the binomial
    /// tail P[W > d/4] for the BSC, P[E > d-1] for the BEC.
    pub analytic_tail_beyond_radius: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct DecoderStats {
    pub decoder: String,
    pub frame_errors: u64,
    pub fer: f64,
    pub symbol_errors: u64,
    pub symbols_total: u64,
    pub ser: f64,
}

/// Outcome of one (m, subspace dim, flat dim) transversal comparison.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct TransversalResult {
    pub m: usize,
    pub subspace_dim: usize,
    pub flat_dim: usize,
    pub construction_size: usize,
    pub bruteforce_size: usize,
    pub formula_size: usize,
    pub ok: bool,
}

#[derive(Debug, Clone, Copy, Default, Serialize, Deserialize, PartialEq, Eq)]
pub struct Timing {
    pub elapsed_ms: u64,
}
