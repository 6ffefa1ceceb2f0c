//! Linear algebra and enumerative geometry over F2.
//!
//! Vectors of F2^m are packed into `u64`: variable `v_i` is bit `i - 1`,
//! so `v_1` is the least-significant bit. Point `P_j` of EG(m, 2) has
//! coordinate vector `j - 1`; `P_1` is the origin. The text form of a
//! vector lists `v_m` first, matching the column convention of the point
//! table for EG(4, 2).

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::bits::Bits;
use crate::{Error, Guards, Result};

/// A point of EG(m, 2), stored as its coordinate vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Point(pub u64);

impl Point {
    /// Point from its 1-based index `j`; `P_1` is the origin.
    pub fn from_index(j: usize) -> Self {
        assert!(j >= 1, "point indices are 1-based");
        Point(j as u64 - 1)
    }

    /// 1-based index of the point.
    pub fn index(self) -> usize {
        self.0 as usize + 1
    }

    /// Value of variable `v_i` (1-based) at this point.
    pub fn var(self, i: usize) -> bool {
        assert!(i >= 1);
        (self.0 >> (i - 1)) & 1 == 1
    }
}

/// A set of codeword coordinate indices (1-based over `[2^m]`), stored as
/// a bit-mask with bit `j - 1` marking membership of index `j`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointSet {
    bits: Bits,
}

impl PointSet {
    pub fn empty(n_points: usize) -> Self {
        Self {
            bits: Bits::zeros(n_points),
        }
    }

    pub fn from_indices(n_points: usize, indices: &[usize]) -> Result<Self> {
        let mut set = Self::empty(n_points);
        for &j in indices {
            if j < 1 || j > n_points {
                return Err(Error::PointIndexOutOfRange {
                    index: j,
                    max: n_points,
                });
            }
            set.bits.set(j - 1, true);
        }
        Ok(set)
    }

    pub fn n_points(&self) -> usize {
        self.bits.len()
    }

    /// Number of member indices.
    pub fn card(&self) -> usize {
        self.bits.count_ones()
    }

    pub fn is_empty_set(&self) -> bool {
        self.bits.is_zero()
    }

    pub fn contains_index(&self, j: usize) -> bool {
        j >= 1 && j <= self.bits.len() && self.bits.get(j - 1)
    }

    pub fn insert_index(&mut self, j: usize) {
        assert!(j >= 1 && j <= self.bits.len());
        self.bits.set(j - 1, true);
    }

    /// Inserts the point with coordinate vector `coords`.
    pub fn insert_coords(&mut self, coords: u64) {
        self.bits.set(coords as usize, true);
    }

    /// Member indices, ascending.
    pub fn indices(&self) -> Vec<usize> {
        self.bits.ones_indices().map(|b| b + 1).collect()
    }

    pub fn bits(&self) -> &Bits {
        &self.bits
    }

    pub fn is_disjoint(&self, other: &PointSet) -> bool {
        self.bits.is_disjoint(&other.bits)
    }

    pub fn intersects(&self, other: &PointSet) -> bool {
        self.bits.intersects(&other.bits)
    }

    /// Set difference `self \ other`.
    pub fn difference(&self, other: &PointSet) -> PointSet {
        assert_eq!(self.n_points(), other.n_points());
        let mut out = self.clone();
        for i in other.bits.ones_indices() {
            out.bits.set(i, false);
        }
        out
    }

    pub fn union(&self, other: &PointSet) -> PointSet {
        assert_eq!(self.n_points(), other.n_points());
        let mut out = self.clone();
        for i in other.bits.ones_indices() {
            out.bits.set(i, true);
        }
        out
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, j) in self.indices().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{j}")?;
        }
        write!(f, "}}")
    }
}

/// Gaussian binomial coefficient: the number of `r`-dimensional subspaces
/// of F2^m. Exact integer arithmetic; `r > m` gives 0 and `r = 0` gives 1.
pub fn gaussian_binomial(m: u64, r: u64) -> BigUint {
    if r > m {
        return BigUint::zero();
    }
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..r {
        num *= (BigUint::one() << (m - i)) - 1u32;
        den *= (BigUint::one() << (i + 1)) - 1u32;
    }
    debug_assert!((num.clone() % den.clone()).is_zero());
    num / den
}

/// A linear subspace of F2^m in reduced row-echelon canonical form.
///
/// Basis rows have distinct leading (highest) bits, each leading bit is
/// cleared from every other row, and rows are ordered by descending
/// leading bit. Two equal subspaces always hold identical basis lists.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<u64>,
}

fn leading_bit(v: u64) -> u32 {
    debug_assert!(v != 0);
    63 - v.leading_zeros()
}

impl Subspace {
    /// The zero subspace of F2^m.
    pub fn zero(ambient: usize) -> Self {
        assert!(ambient <= 62, "ambient dimension too large for u64 vectors");
        Self {
            ambient,
            basis: Vec::new(),
        }
    }

    /// The full space F2^m.
    pub fn full(ambient: usize) -> Self {
        Self::span(ambient, &(0..ambient).map(|i| 1u64 << i).collect::<Vec<_>>())
    }

    /// Canonical subspace spanned by the given vectors (dependent vectors
    /// are absorbed).
    pub fn span(ambient: usize, vectors: &[u64]) -> Self {
        assert!(ambient <= 62, "ambient dimension too large for u64 vectors");
        let mut basis: Vec<u64> = Vec::new();
        for &vector in vectors {
            assert!(
                vector >> ambient == 0,
                "vector {vector:#b} does not fit in {ambient} bits"
            );
            let mut v = vector;
            for &row in &basis {
                if (v >> leading_bit(row)) & 1 == 1 {
                    v ^= row;
                }
            }
            if v == 0 {
                continue;
            }
            let p = leading_bit(v);
            for row in &mut basis {
                if (*row >> p) & 1 == 1 {
                    *row ^= v;
                }
            }
            let pos = basis.partition_point(|&row| leading_bit(row) > p);
            basis.insert(pos, v);
        }
        Self { ambient, basis }
    }

    /// Coordinate subspace spanned by the axes `e_{v}` for the given
    /// 1-based variable indices.
    pub fn axis(ambient: usize, vars: &[usize]) -> Self {
        let vectors: Vec<u64> = vars
            .iter()
            .map(|&v| {
                assert!(v >= 1 && v <= ambient, "variable index {v} out of range");
                1u64 << (v - 1)
            })
            .collect();
        Self::span(ambient, &vectors)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Canonical basis rows, ordered by descending leading bit.
    pub fn basis(&self) -> &[u64] {
        &self.basis
    }

    pub fn contains_vector(&self, vector: u64) -> bool {
        let mut v = vector;
        for &row in &self.basis {
            if v == 0 {
                break;
            }
            if (v >> leading_bit(row)) & 1 == 1 {
                v ^= row;
            }
        }
        v == 0
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && other.basis.iter().all(|&v| self.contains_vector(v))
    }

    /// Reduces `vector` modulo this subspace (clears the leading bit of
    /// every basis row), yielding the canonical coset representative.
    pub fn coset_rep(&self, vector: u64) -> u64 {
        let mut v = vector;
        for &row in &self.basis {
            if (v >> leading_bit(row)) & 1 == 1 {
                v ^= row;
            }
        }
        v
    }

    /// Point indices of every vector in the subspace; always contains the
    /// origin `P_1`.
    pub fn points(&self) -> PointSet {
        let n = 1usize << self.ambient;
        let mut set = PointSet::empty(n);
        let mut v = 0u64;
        set.insert_coords(0);
        // Gray-code walk over all basis combinations.
        for x in 1u64..(1u64 << self.dim()) {
            v ^= self.basis[x.trailing_zeros() as usize];
            set.insert_coords(v);
        }
        set
    }

    /// Parses one basis vector per line, `v_m` first (leftmost character).
    pub fn from_basis_strings(lines: &[&str]) -> Result<Self> {
        let m = lines.first().map_or(0, |l| l.len());
        let mut vectors = Vec::with_capacity(lines.len());
        for line in lines {
            if line.len() != m {
                return Err(Error::LengthMismatch {
                    expected: m,
                    got: line.len(),
                });
            }
            let mut v = 0u64;
            for (pos, c) in line.chars().enumerate() {
                match c {
                    '0' => {}
                    '1' => v |= 1 << (m - 1 - pos),
                    _ => return Err(Error::BitStringParse { offending: c }),
                }
            }
            vectors.push(v);
        }
        Ok(Self::span(m, &vectors))
    }
}

impl fmt::Display for Subspace {
    /// One basis vector per line as a length-m bit-string, `v_m` first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &row) in self.basis.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            for pos in (0..self.ambient).rev() {
                write!(f, "{}", (row >> pos) & 1)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Subspace(dim {} of F2^{}: [{}])",
            self.dim(),
            self.ambient,
            self.basis
                .iter()
                .map(|r| format!("{r:0width$b}", width = self.ambient))
                .collect::<Vec<_>>()
                .join(", ")
        )
    }
}

/// Streams every `dim`-dimensional subspace of F2^m exactly once, in a
/// deterministic order fixed by the reduced-echelon canonical form:
/// pivot-column sets ascend lexicographically (leftmost column = `v_m`),
/// then free entries count up row-major.
pub fn enumerate_subspaces(ambient_dim: usize, dim: usize) -> Result<SubspaceIter> {
    if dim > ambient_dim || ambient_dim > 62 {
        return Err(Error::DimensionOutOfRange {
            what: "subspace dimension",
            got: dim,
            allowed: format!("0..={ambient_dim}"),
        });
    }
    Ok(SubspaceIter::new(ambient_dim, dim))
}

pub struct SubspaceIter {
    m: usize,
    r: usize,
    /// Current pivot columns (string positions, ascending), or None when done.
    pivots: Option<Vec<usize>>,
    /// Free slots of the current pivot set, row-major.
    free_slots: Vec<(usize, usize)>,
    fill: u128,
}

impl SubspaceIter {
    fn new(m: usize, r: usize) -> Self {
        let pivots: Vec<usize> = (0..r).collect();
        let mut it = Self {
            m,
            r,
            pivots: Some(pivots),
            free_slots: Vec::new(),
            fill: 0,
        };
        it.reset_free_slots();
        it
    }

    fn reset_free_slots(&mut self) {
        self.free_slots.clear();
        self.fill = 0;
        if let Some(pivots) = &self.pivots {
            for (row, &c) in pivots.iter().enumerate() {
                for col in c + 1..self.m {
                    if !pivots.contains(&col) {
                        self.free_slots.push((row, col));
                    }
                }
            }
            assert!(
                self.free_slots.len() <= 127,
                "free-entry count exceeds enumeration counter width"
            );
        }
    }

    fn advance_pivots(&mut self) {
        let Some(pivots) = &mut self.pivots else {
            return;
        };
        let m = self.m;
        let r = self.r;
        // Lexicographic successor of the pivot-column combination.
        let mut i = r;
        loop {
            if i == 0 {
                self.pivots = None;
                return;
            }
            i -= 1;
            if pivots[i] < m - (r - i) {
                pivots[i] += 1;
                for j in i + 1..r {
                    pivots[j] = pivots[j - 1] + 1;
                }
                break;
            }
        }
        self.reset_free_slots();
    }

    fn build(&self) -> Subspace {
        let pivots = self.pivots.as_ref().expect("iterator not exhausted");
        let col_bit = |c: usize| 1u64 << (self.m - 1 - c);
        let mut basis: Vec<u64> = pivots.iter().map(|&c| col_bit(c)).collect();
        for (slot, &(row, col)) in self.free_slots.iter().enumerate() {
            if (self.fill >> slot) & 1 == 1 {
                basis[row] |= col_bit(col);
            }
        }
        // Rows already satisfy the canonical form: distinct pivots with all
        // other entries in pivot columns zero, ordered by descending bit.
        Subspace {
            ambient: self.m,
            basis,
        }
    }
}

impl Iterator for SubspaceIter {
    type Item = Subspace;

    fn next(&mut self) -> Option<Subspace> {
        self.pivots.as_ref()?;
        let out = self.build();
        self.fill += 1;
        if self.fill >= (1u128 << self.free_slots.len()) {
            self.advance_pivots();
        }
        Some(out)
    }
}

/// Streams every `dim`-dimensional subspace containing `s`, by enumerating
/// `(dim - s.dim())`-dimensional subspaces of the quotient F2^m / s and
/// lifting them back. Yields `[m - s.dim(); dim - s.dim()]` subspaces.
pub fn enumerate_superspaces(
    s: &Subspace,
    dim: usize,
) -> Result<impl Iterator<Item = Subspace> + use<>> {
    if dim < s.dim() || dim > s.ambient_dim() {
        return Err(Error::DimensionOutOfRange {
            what: "superspace dimension",
            got: dim,
            allowed: format!("{}..={}", s.dim(), s.ambient_dim()),
        });
    }
    let m = s.ambient_dim();
    let pivot_bits: Vec<u32> = s.basis().iter().map(|&r| leading_bit(r)).collect();
    // Quotient coordinates live on the non-pivot bit positions, ascending.
    let quotient_bits: Vec<u32> = (0..m as u32).filter(|b| !pivot_bits.contains(b)).collect();
    let s_owned = s.clone();
    let quotient_iter = enumerate_subspaces(m - s.dim(), dim - s.dim())?;
    Ok(quotient_iter.map(move |t| {
        let mut vectors: Vec<u64> = s_owned.basis().to_vec();
        for &w in t.basis() {
            let mut lifted = 0u64;
            for (j, &bit) in quotient_bits.iter().enumerate() {
                if (w >> j) & 1 == 1 {
                    lifted |= 1 << bit;
                }
            }
            vectors.push(lifted);
        }
        Subspace::span(m, &vectors)
    }))
}

/// Points of `flat \ s` for a subspace pair `s ⊆ flat`.
pub fn complement_points(flat: &Subspace, s: &Subspace) -> Result<PointSet> {
    if flat.ambient_dim() != s.ambient_dim() {
        return Err(Error::AmbientMismatch {
            a: flat.ambient_dim(),
            b: s.ambient_dim(),
        });
    }
    if !flat.contains(s) {
        return Err(Error::ContainmentViolated);
    }
    Ok(flat.points().difference(&s.points()))
}

fn check_transversal_dims(m: usize, s: &Subspace, flat_dim: usize) -> Result<()> {
    if s.ambient_dim() != m {
        return Err(Error::AmbientMismatch {
            a: s.ambient_dim(),
            b: m,
        });
    }
    if s.dim() >= flat_dim || flat_dim > m {
        return Err(Error::DimensionOutOfRange {
            what: "flat dimension",
            got: flat_dim,
            allowed: format!("{}..={m} (exclusive below)", s.dim() + 1),
        });
    }
    Ok(())
}

/// A minimum-size set of points meeting `f \ s` for every `flat_dim`-
/// dimensional superspace `f` of `s`.
///
/// Construction: the nonzero points of a subspace `u` with
/// `dim u = m - flat_dim + 1` and `u ∩ s = {0}`, chosen with the
/// lexicographically smallest basis so the output is deterministic.
/// The result has `2^(m - flat_dim + 1) - 1` points and avoids every
/// point of `s`.
pub fn minimum_transversal(m: usize, s: &Subspace, flat_dim: usize) -> Result<PointSet> {
    check_transversal_dims(m, s, flat_dim)?;
    let target = m - flat_dim + 1;
    let mut combined = s.clone();
    let mut u_basis: Vec<u64> = Vec::with_capacity(target);
    let mut v = 1u64;
    while u_basis.len() < target {
        debug_assert!(v < (1u64 << m), "complement basis search ran out of vectors");
        if !combined.contains_vector(v) {
            let mut extended: Vec<u64> = combined.basis().to_vec();
            extended.push(v);
            combined = Subspace::span(m, &extended);
            u_basis.push(v);
        }
        v += 1;
    }
    let u = Subspace::span(m, &u_basis);
    let mut points = u.points();
    points.bits.set(0, false); // drop the origin
    Ok(points)
}

/// True iff `b` intersects `f \ s` for every `flat_dim`-dimensional
/// superspace `f` of `s`.
pub fn is_transversal(b: &PointSet, m: usize, s: &Subspace, flat_dim: usize) -> Result<bool> {
    check_transversal_dims(m, s, flat_dim)?;
    let s_points = s.points();
    for flat in enumerate_superspaces(s, flat_dim)? {
        let complement = flat.points().difference(&s_points);
        if b.bits().is_disjoint(complement.bits()) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Exact transversal number of the truncated-flat family, found by an
/// increasing-cardinality search: for t = 1, 2, ... a depth-limited
/// branch-and-bound asks whether t points can hit every `f \ s`.
/// Independent of [`minimum_transversal`]; guarded to small `m`.
pub fn transversal_number_bruteforce(
    m: usize,
    s: &Subspace,
    flat_dim: usize,
    guards: &Guards,
) -> Result<usize> {
    check_transversal_dims(m, s, flat_dim)?;
    let n_points = 1usize << m;
    if n_points > guards.max_bruteforce_points || n_points > 64 {
        return Err(Error::SizeGuardExceeded {
            what: "transversal brute-force points",
            requested: n_points as u128,
            limit: guards.max_bruteforce_points.min(64) as u128,
        });
    }
    let s_points = s.points();
    let mut sets: Vec<u64> = Vec::new();
    for flat in enumerate_superspaces(s, flat_dim)? {
        let complement = flat.points().difference(&s_points);
        let mut mask = 0u64;
        for idx in complement.bits().ones_indices() {
            mask |= 1 << idx;
        }
        debug_assert!(mask != 0, "flat_dim > dim s makes every complement nonempty");
        sets.push(mask);
    }
    for budget in 1..=n_points {
        if hitting_set_exists(&sets, 0, budget) {
            return Ok(budget);
        }
    }
    unreachable!("the whole point set is always a transversal");
}

/// Depth-limited search: can `budget` more points hit every set not yet
/// hit by `chosen`? Branches over the elements of the first unhit set;
/// a greedy disjoint packing of unhit sets prunes hopeless branches.
fn hitting_set_exists(sets: &[u64], chosen: u64, budget: usize) -> bool {
    let mut first_unhit = 0u64;
    for &set in sets {
        if set & chosen == 0 {
            first_unhit = set;
            break;
        }
    }
    if first_unhit == 0 {
        return true;
    }
    if budget == 0 {
        return false;
    }
    let mut packed = 0u64;
    let mut need = 0usize;
    for &set in sets {
        if set & chosen == 0 && set & packed == 0 {
            need += 1;
            if need > budget {
                return false;
            }
            packed |= set;
        }
    }
    let mut rem = first_unhit;
    while rem != 0 {
        let elem = rem & rem.wrapping_neg();
        rem ^= elem;
        if hitting_set_exists(sets, chosen | elem, budget - 1) {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn gaussian_binomial_values() {
        assert_eq!(gaussian_binomial(3, 2), big(7));
        assert_eq!(gaussian_binomial(2, 1), big(3));
        assert_eq!(gaussian_binomial(5, 0), big(1));
        assert_eq!(gaussian_binomial(4, 1), big(15));
        assert_eq!(gaussian_binomial(2, 5), big(0));
        // [m;r] = [m;m-r] symmetry spot check
        assert_eq!(gaussian_binomial(6, 2), gaussian_binomial(6, 4));
    }

    #[test]
    fn point_table_for_m4() {
        // P_2 has v1 = 1 and all others 0; P_9 has v4 = 1 and all others 0.
        let p2 = Point::from_index(2);
        assert!(p2.var(1) && !p2.var(2) && !p2.var(3) && !p2.var(4));
        let p9 = Point::from_index(9);
        assert!(!p9.var(1) && !p9.var(2) && !p9.var(3) && p9.var(4));
        assert_eq!(Point::from_index(1).0, 0);
        assert_eq!(Point::from_index(16).index(), 16);
    }

    #[test]
    fn subspace_points_small_cases() {
        let zero = Subspace::zero(4);
        assert_eq!(zero.points().indices(), vec![1]);

        let s = Subspace::from_basis_strings(&["0001"]).unwrap();
        assert_eq!(s.points().indices(), vec![1, 2]);

        let f = Subspace::from_basis_strings(&["0001", "0010"]).unwrap();
        assert_eq!(f.points().indices(), vec![1, 2, 3, 4]);
    }

    #[test]
    fn span_is_canonical() {
        // Same subspace from different generating sets.
        let a = Subspace::span(4, &[0b0001, 0b0010]);
        let b = Subspace::span(4, &[0b0011, 0b0010, 0b0001]);
        assert_eq!(a, b);
        assert_eq!(a.basis(), b.basis());
        assert_eq!(a.dim(), 2);
        // Display lists v_m first, highest leading bit first.
        assert_eq!(a.to_string(), "0010\n0001");
    }

    #[test]
    fn enumerate_counts_match_gaussian_binomials() {
        for m in 0..=5usize {
            for r in 0..=m {
                let count = enumerate_subspaces(m, r).unwrap().count();
                assert_eq!(
                    BigUint::from(count),
                    gaussian_binomial(m as u64, r as u64),
                    "count mismatch at ({m}, {r})"
                );
            }
        }
    }

    #[test]
    fn enumerate_f2_squared_lines() {
        let subs: Vec<Subspace> = enumerate_subspaces(2, 1).unwrap().collect();
        assert_eq!(subs.len(), 3);
        let expected = [
            Subspace::from_basis_strings(&["01"]).unwrap(),
            Subspace::from_basis_strings(&["10"]).unwrap(),
            Subspace::from_basis_strings(&["11"]).unwrap(),
        ];
        for e in &expected {
            assert!(subs.contains(e));
        }
    }

    #[test]
    fn enumerate_is_deterministic_and_unique() {
        let first: Vec<Subspace> = enumerate_subspaces(4, 2).unwrap().collect();
        let second: Vec<Subspace> = enumerate_subspaces(4, 2).unwrap().collect();
        assert_eq!(first, second);
        let mut dedup = first.clone();
        dedup.sort_by(|a, b| a.basis().cmp(b.basis()));
        dedup.dedup();
        assert_eq!(dedup.len(), first.len());
    }

    #[test]
    fn full_space_is_the_single_top_subspace() {
        let subs: Vec<Subspace> = enumerate_subspaces(4, 4).unwrap().collect();
        assert_eq!(subs.len(), 1);
        assert_eq!(subs[0], Subspace::full(4));
    }

    #[test]
    fn superspace_enumeration_counts() {
        // Every superspace count equals [m - dim s; d - dim s].
        for m in 1..=5usize {
            for l in 0..m {
                let s: Vec<Subspace> = enumerate_subspaces(m, l).unwrap().collect();
                // One representative subspace per dimension is enough here;
                // the exhaustive cross-check below covers containment.
                let rep = &s[s.len() / 2];
                for d in l..=m {
                    let got = enumerate_superspaces(rep, d).unwrap().count();
                    let want = gaussian_binomial((m - l) as u64, (d - l) as u64);
                    assert_eq!(BigUint::from(got), want, "({m}, {l}, {d})");
                }
            }
        }
    }

    #[test]
    fn superspaces_match_filtered_enumeration() {
        let s = Subspace::span(4, &[0b0011, 0b0100]);
        let mut lifted: Vec<Subspace> = enumerate_superspaces(&s, 3).unwrap().collect();
        let mut filtered: Vec<Subspace> = enumerate_subspaces(4, 3)
            .unwrap()
            .filter(|f| f.contains(&s))
            .collect();
        assert_eq!(lifted.len(), 3);
        lifted.sort_by(|a, b| a.basis().cmp(b.basis()));
        filtered.sort_by(|a, b| a.basis().cmp(b.basis()));
        assert_eq!(lifted, filtered);
    }

    #[test]
    fn superspaces_of_a_line_in_f2_4() {
        let s = Subspace::from_basis_strings(&["0001"]).unwrap();
        let supers: Vec<Subspace> = enumerate_superspaces(&s, 3).unwrap().collect();
        assert_eq!(supers.len(), 7);
        for f in &supers {
            assert!(f.contains(&s));
            assert_eq!(f.dim(), 3);
        }
        let full = Subspace::full(4);
        let only: Vec<Subspace> = enumerate_superspaces(&full, 4).unwrap().collect();
        assert_eq!(only, vec![full]);
    }

    #[test]
    fn complement_points_examples() {
        let f = Subspace::from_basis_strings(&["0100", "0010", "0001"]).unwrap();
        let s = Subspace::from_basis_strings(&["0001"]).unwrap();
        assert_eq!(
            complement_points(&f, &s).unwrap().indices(),
            vec![3, 4, 5, 6, 7, 8]
        );
        assert!(complement_points(&f, &f).unwrap().is_empty_set());
        let g = Subspace::from_basis_strings(&["0010", "0001"]).unwrap();
        assert_eq!(
            complement_points(&g, &Subspace::zero(4)).unwrap().indices(),
            vec![2, 3, 4]
        );
        // Containment violation is an error.
        let other = Subspace::from_basis_strings(&["1000"]).unwrap();
        assert_eq!(
            complement_points(&other, &s).unwrap_err(),
            Error::ContainmentViolated
        );
    }

    #[test]
    fn minimum_transversal_size_and_property() {
        let s = Subspace::from_basis_strings(&["0001"]).unwrap();
        let t = minimum_transversal(4, &s, 3).unwrap();
        assert_eq!(t.card(), 3); // 2^(4-3+1) - 1
        assert!(t.is_disjoint(&s.points()));
        assert!(is_transversal(&t, 4, &s, 3).unwrap());

        let z3 = Subspace::zero(3);
        let t3 = minimum_transversal(3, &z3, 3).unwrap();
        assert_eq!(t3.card(), 1);
        assert!(is_transversal(&t3, 3, &z3, 3).unwrap());

        let z4 = Subspace::zero(4);
        let t4 = minimum_transversal(4, &z4, 2).unwrap();
        assert_eq!(t4.card(), 7);
        assert!(is_transversal(&t4, 4, &z4, 2).unwrap());
    }

    #[test]
    fn transversal_check_rejects_and_accepts() {
        let s = Subspace::from_basis_strings(&["0001"]).unwrap();
        let empty = PointSet::empty(16);
        assert!(!is_transversal(&empty, 4, &s, 3).unwrap());
        // The three points {3, 5, 7} block every size-6 complement.
        let b = PointSet::from_indices(16, &[3, 5, 7]).unwrap();
        assert!(is_transversal(&b, 4, &s, 3).unwrap());
    }

    #[test]
    fn bruteforce_transversal_numbers() {
        let guards = Guards::default();
        let s = Subspace::from_basis_strings(&["0001"]).unwrap();
        assert_eq!(transversal_number_bruteforce(4, &s, 3, &guards).unwrap(), 3);
        let z3 = Subspace::zero(3);
        assert_eq!(transversal_number_bruteforce(3, &z3, 3, &guards).unwrap(), 1);
        let z4 = Subspace::zero(4);
        assert_eq!(transversal_number_bruteforce(4, &z4, 4, &guards).unwrap(), 1);
    }

    #[test]
    fn bruteforce_guard_trips() {
        let guards = Guards {
            max_bruteforce_points: 8,
            ..Guards::default()
        };
        let z4 = Subspace::zero(4);
        assert!(matches!(
            transversal_number_bruteforce(4, &z4, 2, &guards),
            Err(Error::SizeGuardExceeded { .. })
        ));
    }
}
