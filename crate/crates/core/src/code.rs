//! RM(r, m) code construction: monomial ordering, generator matrix,
//! encoding, and code parameters.
//!
//! Row `sigma` of the generator matrix is the evaluation vector of the
//! monomial `prod v_{sigma_i}` over the points of EG(m, 2) in table
//! order: entry at column `j` is 1 iff every named variable is 1 at
//! point `P_j`. Rows are ordered by ascending degree and, within a
//! degree, by descending colexicographic order of the index tuples,
//! which reproduces the standard RM(2, 4) layout
//! (1, v4, v3, v2, v1, v3v4, v2v4, v1v4, v2v3, v1v3, v1v2).

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::bits::Bits;
use crate::{Error, Guards, Result};

/// Index tuple of a message symbol: strictly increasing 1-based variable
/// indices. The empty tuple is the constant term `a_0`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u8>);

impl Monomial {
    /// The constant-term monomial (degree 0, symbol `a_0`).
    pub fn constant() -> Self {
        Monomial(Vec::new())
    }

    pub fn new(indices: &[u8], m: usize) -> Result<Self> {
        let ok = indices.windows(2).all(|w| w[0] < w[1])
            && indices.iter().all(|&i| i >= 1 && i as usize <= m);
        if !ok {
            return Err(Error::InvalidMonomial {
                indices: indices.to_vec(),
                m,
            });
        }
        Ok(Monomial(indices.to_vec()))
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn vars(&self) -> &[u8] {
        &self.0
    }

    /// OR of `1 << (i - 1)` over the variable indices; the evaluation
    /// support test is `coords & mask == mask`.
    pub fn mask(&self) -> u64 {
        self.0.iter().fold(0u64, |acc, &i| acc | (1 << (i - 1)))
    }

    /// Symbol name: `a0` for the constant term, else `a` followed by the
    /// indices (`a1`, `a34`; underscore-separated above nine variables).
    pub fn label(&self) -> String {
        if self.0.is_empty() {
            return "a0".to_string();
        }
        let sep = if self.0.iter().any(|&i| i > 9) { "_" } else { "" };
        let body: Vec<String> = self.0.iter().map(|i| i.to_string()).collect();
        format!("a{}", body.join(sep))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// Descending colexicographic order on equal-length tuples: compare the
/// largest indices first, bigger values sort earlier.
fn colex_desc(a: &Monomial, b: &Monomial) -> Ordering {
    debug_assert_eq!(a.degree(), b.degree());
    for (x, y) in a.0.iter().rev().zip(b.0.iter().rev()) {
        match y.cmp(x) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

/// All monomials of degree at most `r` over `m` variables, in generator
/// row order.
pub fn monomial_order(r: usize, m: usize) -> Result<Vec<Monomial>> {
    if r >= m {
        return Err(Error::InvalidCodeParams { r, m });
    }
    let mut out = vec![Monomial::constant()];
    for degree in 1..=r {
        let mut combos: Vec<Monomial> = Vec::new();
        let mut current: Vec<u8> = (1..=degree as u8).collect();
        loop {
            combos.push(Monomial(current.clone()));
            // lexicographic successor of the combination
            let mut i = degree;
            let mut advanced = false;
            while i > 0 {
                i -= 1;
                if (current[i] as usize) < m - (degree - 1 - i) {
                    current[i] += 1;
                    for j in i + 1..degree {
                        current[j] = current[j - 1] + 1;
                    }
                    advanced = true;
                    break;
                }
            }
            if !advanced {
                break;
            }
        }
        combos.sort_by(colex_desc);
        out.extend(combos);
    }
    Ok(out)
}

/// Code parameters `[n, k, d] = [2^m, sum_{i<=r} C(m, i), 2^(m-r)]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CodeParams {
    pub r: usize,
    pub m: usize,
    pub n: usize,
    pub k: usize,
    pub d: usize,
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..k.min(n - k) {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Number of degree-`degree` message symbols over `m` variables.
pub fn monomial_count(m: usize, degree: usize) -> u128 {
    binomial(m, degree)
}

/// Validated parameters for RM(r, m); requires `0 <= r < m` so the dual
/// RM(m - r - 1, m) exists.
pub fn code_params(r: usize, m: usize) -> Result<CodeParams> {
    if r >= m || m > 62 {
        return Err(Error::InvalidCodeParams { r, m });
    }
    let k: u128 = (0..=r).map(|i| binomial(m, i)).sum();
    Ok(CodeParams {
        r,
        m,
        n: 1usize << m,
        k: k as usize,
        d: 1usize << (m - r),
    })
}

/// Generator matrix of RM(r, m): `k` evaluation rows of length `n = 2^m`
/// in the fixed monomial row order. Immutable after construction.
pub struct GeneratorMatrix {
    params: CodeParams,
    monomials: Vec<Monomial>,
    rows: Vec<Bits>,
    index_by_mask: HashMap<u64, usize>,
}

impl GeneratorMatrix {
    pub fn new(r: usize, m: usize, guards: &Guards) -> Result<Self> {
        let params = code_params(r, m)?;
        if m > guards.max_encode_m {
            return Err(Error::SizeGuardExceeded {
                what: "generator m",
                requested: m as u128,
                limit: guards.max_encode_m as u128,
            });
        }
        let bits = params.k as u128 * params.n as u128;
        if bits > guards.max_generator_bits {
            return Err(Error::SizeGuardExceeded {
                what: "generator bits (k * n)",
                requested: bits,
                limit: guards.max_generator_bits,
            });
        }
        let monomials = monomial_order(r, m)?;
        let mut rows = Vec::with_capacity(params.k);
        let mut index_by_mask = HashMap::with_capacity(params.k);
        for (i, mono) in monomials.iter().enumerate() {
            let mask = mono.mask();
            let mut row = Bits::zeros(params.n);
            for coords in 0..params.n as u64 {
                if coords & mask == mask {
                    row.set(coords as usize, true);
                }
            }
            rows.push(row);
            index_by_mask.insert(mask, i);
        }
        Ok(Self {
            params,
            monomials,
            rows,
            index_by_mask,
        })
    }

    pub fn params(&self) -> &CodeParams {
        &self.params
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn rows(&self) -> &[Bits] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &Bits {
        &self.rows[i]
    }

    /// Row position of a monomial's message symbol.
    pub fn row_index(&self, sigma: &Monomial) -> Result<usize> {
        self.index_by_mask
            .get(&sigma.mask())
            .copied()
            .ok_or_else(|| Error::UnknownMonomial(sigma.vars().to_vec()))
    }

    /// Codeword `x = a . G` over GF(2). `message` holds `k` bits in row
    /// order (`a_0` first).
    pub fn encode(&self, message: &Bits) -> Result<Bits> {
        if message.len() != self.params.k {
            return Err(Error::LengthMismatch {
                expected: self.params.k,
                got: message.len(),
            });
        }
        let mut word = Bits::zeros(self.params.n);
        for i in message.ones_indices() {
            word.xor_assign(&self.rows[i]);
        }
        Ok(word)
    }

    /// One row per line as bit-characters, `x_1` leftmost.
    pub fn to_text(&self) -> String {
        self.rows
            .iter()
            .map(|r| r.to_bit_string())
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// True iff every row of RM(r, m) is orthogonal over GF(2) to every row
/// of its dual RM(m - r - 1, m).
pub fn duality_holds(r: usize, m: usize, guards: &Guards) -> Result<bool> {
    let g = GeneratorMatrix::new(r, m, guards)?;
    let dual = GeneratorMatrix::new(m - r - 1, m, guards)?;
    Ok(g.rows()
        .iter()
        .all(|a| dual.rows().iter().all(|b| !a.and_parity(b))))
}

/// Checks that the minimum-weight codewords of RM(r, m), found by an
/// exhaustive sweep, are exactly the incidence vectors of the
/// `(m - r)`-flats of EG(m, 2) (every coset of every `(m - r)`-subspace).
pub fn min_weight_flats_check(r: usize, m: usize, guards: &Guards) -> Result<bool> {
    let g = GeneratorMatrix::new(r, m, guards)?;
    let k = g.params().k;
    let n = g.params().n;
    let sweep = 1u128 << k;
    if sweep > guards.max_exhaustive_codewords {
        return Err(Error::SizeGuardExceeded {
            what: "exhaustive codewords (2^k)",
            requested: sweep,
            limit: guards.max_exhaustive_codewords,
        });
    }

    // Gray-code sweep over all nonzero codewords.
    let mut word = Bits::zeros(n);
    let mut min_weight = usize::MAX;
    let mut minimal: std::collections::BTreeSet<Bits> = Default::default();
    for x in 1u64..(1u64 << k) {
        word.xor_assign(g.row(x.trailing_zeros() as usize));
        let w = word.count_ones();
        match w.cmp(&min_weight) {
            Ordering::Less => {
                min_weight = w;
                minimal.clear();
                minimal.insert(word.clone());
            }
            Ordering::Equal => {
                minimal.insert(word.clone());
            }
            Ordering::Greater => {}
        }
    }

    // Incidence vectors of all (m - r)-flats.
    let mut flats: std::collections::BTreeSet<Bits> = Default::default();
    for subspace in crate::geom::enumerate_subspaces(m, m - r)? {
        let base: Vec<usize> = subspace.points().bits().ones_indices().collect();
        for v in 0..n as u64 {
            if subspace.coset_rep(v) != v {
                continue; // one representative per coset
            }
            let mut incidence = Bits::zeros(n);
            for &coords in &base {
                incidence.set(coords ^ v as usize, true);
            }
            flats.insert(incidence);
        }
    }

    Ok(min_weight == 1usize << (m - r) && minimal == flats)
}
