//! Recovery-set families for message symbols.
//!
//! For a symbol `a_sigma` of order `l` in RM(r, m) the family consists of
//!
//! - the unique small set of size `2^l`: the points of the coordinate
//!   subspace spanned by the axes named in `sigma`, and
//! - one large set of size `2^(r+1) - 2^l` per `(r+1)`-dimensional
//!   superspace of that subspace (the complement of the subspace inside
//!   it); there are `[m - l; r + 1 - l]` of them.
//!
//! A set is a recovery set precisely when the generator columns it names
//! sum to the standard basis vector selecting the symbol. That column-sum
//! test is kept separate in [`verify_recovery_set`] and applied to every
//! constructed set, so a convention bug cannot slip through silently.

use serde::Serialize;

use crate::code::{CodeParams, GeneratorMatrix, Monomial};
use crate::geom::{self, PointSet, Subspace};
use crate::{Error, Guards, Result};

/// The recovery sets for one message symbol, in deterministic order: the
/// small set first, then large sets in superspace enumeration order.
#[derive(Clone)]
pub struct RecoveryFamily {
    sigma: Monomial,
    subspace: Subspace,
    small: PointSet,
    large: Vec<PointSet>,
}

impl RecoveryFamily {
    pub fn sigma(&self) -> &Monomial {
        &self.sigma
    }

    /// The l-dimensional subspace underlying the small set.
    pub fn subspace(&self) -> &Subspace {
        &self.subspace
    }

    pub fn small_set(&self) -> &PointSet {
        &self.small
    }

    pub fn large_sets(&self) -> &[PointSet] {
        &self.large
    }

    /// Small set followed by the large sets.
    pub fn all_sets(&self) -> impl Iterator<Item = &PointSet> {
        std::iter::once(&self.small).chain(self.large.iter())
    }

    pub fn total_sets(&self) -> usize {
        1 + self.large.len()
    }
}

/// True iff the generator columns indexed by `set` sum to the standard
/// basis vector of `sigma`'s row: the parity of every row over `set` must
/// be 0 except for `sigma`'s own row. Independent oracle for all
/// construction code.
pub fn verify_recovery_set(set: &PointSet, sigma: &Monomial, g: &GeneratorMatrix) -> bool {
    let Ok(target) = g.row_index(sigma) else {
        return false;
    };
    g.rows()
        .iter()
        .enumerate()
        .all(|(i, row)| row.and_parity(set.bits()) == (i == target))
}

/// The unique size-`2^l` recovery set for `a_sigma`: the points of the
/// axis subspace on the variables named by `sigma`. Validated against the
/// column-sum oracle before being returned.
pub fn small_recovery_set(
    sigma: &Monomial,
    g: &GeneratorMatrix,
) -> Result<(Subspace, PointSet)> {
    let m = g.params().m;
    let vars: Vec<usize> = sigma.vars().iter().map(|&v| v as usize).collect();
    let subspace = Subspace::axis(m, &vars);
    let points = subspace.points();
    if !verify_recovery_set(&points, sigma, g) {
        return Err(Error::RecoveryValidityFailed {
            label: sigma.label(),
        });
    }
    Ok((subspace, points))
}

/// All large recovery sets for `a_sigma`: complements of the axis
/// subspace inside each `(r+1)`-dimensional superspace, in enumeration
/// order. Each set is validated against the column-sum oracle.
pub fn large_recovery_sets(sigma: &Monomial, g: &GeneratorMatrix, guards: &Guards) -> Result<Vec<PointSet>> {
    let params = *g.params();
    let l = sigma.degree();
    let expected = geom::gaussian_binomial((params.m - l) as u64, (params.r + 1 - l) as u64);
    if expected > guards.max_family_sets.into() {
        return Err(Error::SizeGuardExceeded {
            what: "large recovery sets per symbol",
            requested: u128::try_from(expected.clone()).unwrap_or(u128::MAX),
            limit: guards.max_family_sets,
        });
    }
    let (subspace, s_points) = small_recovery_set(sigma, g)?;
    let mut out = Vec::new();
    for flat in geom::enumerate_superspaces(&subspace, params.r + 1)? {
        let complement = flat.points().difference(&s_points);
        if !verify_recovery_set(&complement, sigma, g) {
            return Err(Error::RecoveryValidityFailed {
                label: sigma.label(),
            });
        }
        out.push(complement);
    }
    debug_assert_eq!(num_bigint::BigUint::from(out.len()), expected);
    Ok(out)
}

/// Builds the family for one symbol.
pub fn build_family(sigma: &Monomial, g: &GeneratorMatrix, guards: &Guards) -> Result<RecoveryFamily> {
    let (subspace, small) = small_recovery_set(sigma, g)?;
    let large = large_recovery_sets(sigma, g, guards)?;
    Ok(RecoveryFamily {
        sigma: sigma.clone(),
        subspace,
        small,
        large,
    })
}

/// Per-coordinate membership count over the large sets. Returns the
/// expected common count `lambda = [m - l - 1; r - l]` and whether every
/// coordinate outside the small set attains exactly that count (the
/// 1-design property).
pub fn design_check(family: &RecoveryFamily, params: &CodeParams) -> (u64, bool) {
    let l = family.sigma.degree();
    let lambda =
        u64::try_from(geom::gaussian_binomial((params.m - l - 1) as u64, (params.r - l) as u64))
            .expect("lambda fits u64 at buildable sizes");
    let n = params.n;
    let mut counts = vec![0u64; n];
    for set in &family.large {
        for idx in set.bits().ones_indices() {
            counts[idx] += 1;
        }
    }
    let ok = (0..n).all(|coords| {
        if family.small.contains_index(coords + 1) {
            counts[coords] == 0
        } else {
            counts[coords] == lambda
        }
    });
    (lambda, ok)
}

/// Exhaustive minimality audit for tiny codes (n <= 16): enumerates every
/// coordinate subset whose column sum selects `a_sigma`, keeps the
/// minimal ones, and checks they are exactly the constructed family with
/// the sizes the structure theorems predict.
pub fn minimality_check(sigma: &Monomial, g: &GeneratorMatrix, guards: &Guards) -> Result<bool> {
    let params = *g.params();
    let (n, k, r) = (params.n, params.k, params.r);
    if n > 16 {
        return Err(Error::SizeGuardExceeded {
            what: "minimality check n",
            requested: n as u128,
            limit: 16,
        });
    }
    let target = g.row_index(sigma)?;
    let l = sigma.degree();

    // Row supports as u16-style masks for the subset sweep.
    let row_masks: Vec<u64> = g
        .rows()
        .iter()
        .map(|row| row.ones_indices().fold(0u64, |acc, i| acc | (1 << i)))
        .collect();

    let mut valid: Vec<u64> = Vec::new();
    for subset in 0u64..(1u64 << n) {
        let is_target = (0..k).all(|i| {
            let parity = (row_masks[i] & subset).count_ones() & 1 == 1;
            parity == (i == target)
        });
        if is_target {
            valid.push(subset);
        }
    }
    let minimal: Vec<u64> = valid
        .iter()
        .copied()
        .filter(|&s| {
            !valid
                .iter()
                .any(|&other| other != s && other & s == other)
        })
        .collect();

    let family = build_family(sigma, g, guards)?;
    let small_mask = family
        .small
        .bits()
        .ones_indices()
        .fold(0u64, |acc, i| acc | (1 << i));
    let large_masks: std::collections::BTreeSet<u64> = family
        .large
        .iter()
        .map(|set| set.bits().ones_indices().fold(0u64, |acc, i| acc | (1 << i)))
        .collect();

    let small_size = 1usize << l;
    let large_size = (1usize << (r + 1)) - (1usize << l);

    // The small set must be minimal, and for l < r the only minimal set
    // smaller than 2^r.
    if !minimal.contains(&small_mask) {
        return Ok(false);
    }
    for &s in &minimal {
        let size = s.count_ones() as usize;
        if s == small_mask {
            if size != small_size {
                return Ok(false);
            }
            continue;
        }
        if l < r && size < (1 << r) {
            return Ok(false);
        }
        if size < large_size {
            return Ok(false);
        }
    }
    // Exactly the constructed large sets attain the minimum large size.
    let at_large_size: std::collections::BTreeSet<u64> = minimal
        .iter()
        .copied()
        .filter(|&s| s != small_mask && s.count_ones() as usize == large_size)
        .collect();
    Ok(at_large_size == large_masks)
}

/// Precomputed families for every message symbol of a code, indexed by
/// generator row. Immutable and shareable across decoding workers.
pub struct RecoveryFamilies {
    families: Vec<RecoveryFamily>,
}

impl RecoveryFamilies {
    /// Builds all `k` families. The total memory footprint is estimated
    /// upfront from the Gaussian binomials and refused if it exceeds the
    /// configured budget.
    pub fn build(g: &GeneratorMatrix, guards: &Guards) -> Result<Self> {
        let params = *g.params();
        let estimate = Self::estimated_bytes(&params);
        if estimate > guards.max_family_bytes {
            return Err(Error::SizeGuardExceeded {
                what: "recovery family bytes",
                requested: estimate,
                limit: guards.max_family_bytes,
            });
        }
        let families = g
            .monomials()
            .iter()
            .map(|sigma| build_family(sigma, g, guards))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { families })
    }

    /// Upfront memory estimate: one n-bit mask per recovery set.
    pub fn estimated_bytes(params: &CodeParams) -> u128 {
        let bytes_per_set = (params.n as u128).div_ceil(8);
        let mut total = 0u128;
        for l in 0..=params.r {
            let per_symbol = geom::gaussian_binomial((params.m - l) as u64, (params.r + 1 - l) as u64);
            let per_symbol = u128::try_from(per_symbol).unwrap_or(u128::MAX);
            let symbols = crate::code::monomial_count(params.m, l);
            total = total.saturating_add(
                symbols as u128 * (1 + per_symbol).saturating_mul(bytes_per_set),
            );
        }
        total
    }

    pub fn family(&self, row: usize) -> &RecoveryFamily {
        &self.families[row]
    }

    pub fn families(&self) -> &[RecoveryFamily] {
        &self.families
    }

    pub fn len(&self) -> usize {
        self.families.len()
    }

    pub fn is_empty(&self) -> bool {
        self.families.is_empty()
    }
}

/// JSON-facing dump of one family, used by the CLI and golden tests.
#[derive(Serialize)]
pub struct FamilyDump {
    pub sigma: Vec<u8>,
    pub small: Vec<usize>,
    pub large: Vec<Vec<usize>>,
    pub lambda: u64,
}

impl FamilyDump {
    pub fn new(family: &RecoveryFamily, params: &CodeParams) -> Self {
        let (lambda, _) = design_check(family, params);
        Self {
            sigma: family.sigma.vars().to_vec(),
            small: family.small.indices(),
            large: family.large.iter().map(|s| s.indices()).collect(),
            lambda,
        }
    }
}
