//! Binary Reed-Muller codes RM(r, m) with one-step majority-logic decoding.
//!
//! The crate is organized around the geometry of EG(m, 2):
//!
//! - [`geom`] — subspaces of F2^m in canonical form, Grassmannian
//!   enumeration, Gaussian binomials, and minimum transversals of
//!   truncated-flat families.
//! - [`code`] — monomial ordering, the RM(r, m) generator matrix, and
//!   encoding.
//! - [`recovery`] — per-symbol recovery-set families: the unique small set
//!   (an l-dimensional subspace through the origin) plus every complement
//!   of it inside an (r+1)-dimensional superspace.
//! - [`decode`] — the one-step majority-logic decoder for errors and for
//!   erasures, Reed's sequential decoder, and brute-force oracles.
//!
//! Everything is deterministic: subspace enumeration order is fixed by the
//! canonical reduced-echelon form, and decoders break ties toward 0.

pub mod bits;
pub mod code;
pub mod decode;
pub mod geom;
pub mod recovery;

pub use bits::Bits;
pub use code::{CodeParams, GeneratorMatrix, Monomial};
pub use decode::{DecodeReport, DecodeStatus, ReceivedWord, SymbolVote};
pub use geom::{PointSet, Subspace};
pub use recovery::{RecoveryFamilies, RecoveryFamily};

use thiserror::Error as ThisError;

/// Errors shared across the crate.
#[derive(Debug, ThisError, PartialEq, Eq)]
pub enum Error {
    #[error("dimension out of range: {what} = {got}, allowed {allowed}")]
    DimensionOutOfRange {
        what: &'static str,
        got: usize,
        allowed: String,
    },
    #[error("invalid code parameters r={r}, m={m}: require 0 <= r < m")]
    InvalidCodeParams { r: usize, m: usize },
    #[error("size guard exceeded: {what} = {requested} > limit {limit}")]
    SizeGuardExceeded {
        what: &'static str,
        requested: u128,
        limit: u128,
    },
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("subspace containment violated: the smaller space is not inside the larger one")]
    ContainmentViolated,
    #[error("ambient dimensions differ: {a} vs {b}")]
    AmbientMismatch { a: usize, b: usize },
    #[error("point index {index} out of range 1..={max}")]
    PointIndexOutOfRange { index: usize, max: usize },
    #[error("monomial {0:?} is not a row of this generator matrix")]
    UnknownMonomial(Vec<u8>),
    #[error("constructed recovery set failed the column-sum validity check for {label}")]
    RecoveryValidityFailed { label: String },
    #[error("erasure mask must be empty for this decoder")]
    ErasuresNotSupported,
    #[error("invalid bit character {offending:?} (expected '0' or '1')")]
    BitStringParse { offending: char },
    #[error("invalid monomial indices {indices:?} for m={m}: need strictly increasing values in 1..=m")]
    InvalidMonomial { indices: Vec<u8>, m: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

/// Size guards for operations whose cost is exponential in the parameters.
///
/// Every guard fails loudly with [`Error::SizeGuardExceeded`] instead of
/// silently truncating.
#[derive(Debug, Clone)]
pub struct Guards {
    /// Largest `m` accepted when building a generator matrix.
    pub max_encode_m: usize,
    /// Cap on `k * n` bits held by one generator matrix.
    pub max_generator_bits: u128,
    /// Cap on `2^k` for exhaustive codeword sweeps (ML oracle, minimum
    /// weight search).
    pub max_exhaustive_codewords: u128,
    /// Cap on `2^m` points for the brute-force transversal search.
    pub max_bruteforce_points: usize,
    /// Cap on the number of large recovery sets enumerated per symbol.
    pub max_family_sets: u128,
    /// Memory budget in bytes for the recovery families of one code.
    pub max_family_bytes: u128,
}

impl Default for Guards {
    fn default() -> Self {
        Self {
            max_encode_m: 20,
            max_generator_bits: 1 << 30,
            max_exhaustive_codewords: 1 << 20,
            max_bruteforce_points: 32,
            max_family_sets: 1 << 20,
            max_family_bytes: 1 << 30,
        }
    }
}
