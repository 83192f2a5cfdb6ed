//! Restricted Eulerian numbers `A(n, i, j)`: permutations of `1..=n` with first
//! letter `j` and `i` descents, their generating polynomials, the symmetric
//! families built from them, and the subdivision transfer of h-vectors.

use std::sync::{Arc, OnceLock, RwLock};

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::transforms::{gamma_from_symmetric, CountVector, IntPolynomial, Role};

/// Largest `n` for which [`table_by_enumeration`] walks `S_n` by default.
pub const ENUMERATION_CAP: usize = 10;

/// Tables up to this size are kept in the shared memo.
pub const MEMO_CAP: usize = 64;

/// A permutation of `1..=n` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &x in &word {
            if x == 0 || x > n || seen[x] {
                return Err(Error::InvalidPermutation { n, word });
            }
            seen[x] = true;
        }
        Ok(Self(word))
    }

    pub fn identity(n: usize) -> Self {
        Self((1..=n).collect())
    }

    pub fn word(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// 1-based positions `i` with `w(i) > w(i+1)`.
    pub fn descents(&self) -> Vec<usize> {
        descent_positions(&self.0)
    }

    pub fn descent_number(&self) -> usize {
        descent_count(&self.0)
    }
}

pub(crate) fn descent_positions(word: &[usize]) -> Vec<usize> {
    word.windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] > w[1])
        .map(|(i, _)| i + 1)
        .collect()
}

fn descent_count(word: &[usize]) -> usize {
    word.windows(2).filter(|w| w[0] > w[1]).count()
}

/// Number of descents of a one-line word; validates the word first.
pub fn descent_number(word: &[usize]) -> Result<usize> {
    Ok(Permutation::new(word.to_vec())?.descent_number())
}

/// `A(n, i, j)` for `0 <= i <= n-1`, `1 <= j <= n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictedEulerianTable {
    n: usize,
    // rows[i][j - 1]
    rows: Vec<Vec<BigInt>>,
}

impl RestrictedEulerianTable {
    pub fn n(&self) -> usize {
        self.n
    }

    /// `A(n, i, j)`; zero outside the index range.
    pub fn get(&self, i: usize, j: usize) -> BigInt {
        if j == 0 || j > self.n {
            return BigInt::zero();
        }
        self.rows
            .get(i)
            .map(|row| row[j - 1].clone())
            .unwrap_or_default()
    }

    /// `A_{n,j}(t) = sum_i A(n, i, j) t^i`.
    pub fn restricted_poly(&self, j: usize) -> IntPolynomial {
        IntPolynomial::new((0..self.n).map(|i| self.get(i, j)).collect())
    }

    pub fn total(&self) -> BigInt {
        self.rows.iter().flatten().sum()
    }

    /// `A(n, i, j) = A(n, n-1-i, n+1-j)` for every entry.
    pub fn has_involution_symmetry(&self) -> bool {
        let n = self.n;
        (0..n).all(|i| (1..=n).all(|j| self.get(i, j) == self.get(n - 1 - i, n + 1 - j)))
    }
}

fn base_table() -> RestrictedEulerianTable {
    RestrictedEulerianTable {
        n: 1,
        rows: vec![vec![BigInt::one()]],
    }
}

/// One step of `A(n,i,j) = sum_{k<j} A(n-1,i-1,k) + sum_{k>=j} A(n-1,i,k)`.
fn next_table(prev: &RestrictedEulerianTable) -> RestrictedEulerianTable {
    let n = prev.n + 1;
    // prefix[i][k] = sum_{k' <= k} A(n-1, i, k')
    let prefix: Vec<Vec<BigInt>> = prev
        .rows
        .iter()
        .map(|row| {
            let mut acc = BigInt::zero();
            let mut out = Vec::with_capacity(row.len() + 1);
            out.push(BigInt::zero());
            for x in row {
                acc += x;
                out.push(acc.clone());
            }
            out
        })
        .collect();
    let zero_row = vec![BigInt::zero(); n];
    let rows = (0..n)
        .map(|i| {
            let below = if i == 0 { &zero_row } else { &prefix[i - 1] };
            let same = prefix.get(i).unwrap_or(&zero_row);
            (1..=n)
                .map(|j| {
                    let lower = &below[j - 1];
                    let upper = &same[n - 1] - &same[j - 1];
                    lower + upper
                })
                .collect()
        })
        .collect();
    RestrictedEulerianTable { n, rows }
}

/// Builds the table for `n` from `A(1, 0, 1) = 1` by the first-letter recurrence.
pub fn table_by_recurrence(n: usize) -> RestrictedEulerianTable {
    assert!(n >= 1, "restricted Eulerian tables start at n = 1");
    (1..n).fold(base_table(), |t, _| next_table(&t))
}

/// Counts `S_n` exhaustively. Fails above [`ENUMERATION_CAP`].
pub fn table_by_enumeration(n: usize) -> Result<RestrictedEulerianTable> {
    table_by_enumeration_capped(n, ENUMERATION_CAP)
}

pub fn table_by_enumeration_capped(n: usize, cap: usize) -> Result<RestrictedEulerianTable> {
    if n > cap {
        return Err(Error::CapacityExceeded { what: "n", value: n, cap });
    }
    assert!(n >= 1, "restricted Eulerian tables start at n = 1");
    // one column per first letter, counted independently
    let columns: Vec<Vec<u64>> = (1..=n)
        .into_par_iter()
        .map(|j| {
            let mut counts = vec![0u64; n];
            let rest: Vec<usize> = (1..=n).filter(|&x| x != j).collect();
            for tail in rest.iter().copied().permutations(n - 1) {
                let mut d = usize::from(tail.first().is_some_and(|&x| x < j));
                d += descent_count(&tail);
                counts[d] += 1;
            }
            counts
        })
        .collect();
    let rows = (0..n)
        .map(|i| columns.iter().map(|col| BigInt::from(col[i])).collect())
        .collect();
    Ok(RestrictedEulerianTable { n, rows })
}

fn memo() -> &'static RwLock<Vec<Arc<RestrictedEulerianTable>>> {
    static MEMO: OnceLock<RwLock<Vec<Arc<RestrictedEulerianTable>>>> = OnceLock::new();
    MEMO.get_or_init(|| RwLock::new(vec![Arc::new(base_table())]))
}

/// Shared, memoized table for `n` (built by the recurrence).
pub fn table(n: usize) -> Arc<RestrictedEulerianTable> {
    assert!(n >= 1, "restricted Eulerian tables start at n = 1");
    if let Some(t) = memo().read().expect("memo lock").get(n - 1) {
        return Arc::clone(t);
    }
    let mut guard = memo().write().expect("memo lock");
    while guard.len() < n.min(MEMO_CAP) {
        let next = next_table(guard.last().expect("memo holds the base table"));
        guard.push(Arc::new(next));
    }
    if let Some(t) = guard.get(n - 1) {
        return Arc::clone(t);
    }
    let mut t = (*guard[MEMO_CAP - 1]).clone();
    drop(guard);
    while t.n < n {
        t = next_table(&t);
    }
    Arc::new(t)
}

/// `A_{n,j}(t)`.
pub fn restricted_poly(n: usize, j: usize) -> Result<IntPolynomial> {
    if n == 0 || j == 0 || j > n {
        return Err(Error::IndexOutOfRange { n, j });
    }
    Ok(table(n).restricted_poly(j))
}

/// The Eulerian polynomial `A_n(t)`, the sum of all restricted rows.
pub fn eulerian_poly(n: usize) -> IntPolynomial {
    let t = table(n);
    (1..=n).map(|j| t.restricted_poly(j)).sum()
}

/// `min(j, n + 1 - j)`, the representative of `j` under `j <-> n + 1 - j`.
pub fn canonical_j(n: usize, j: usize) -> Result<usize> {
    if n == 0 || j == 0 || j > n {
        return Err(Error::IndexOutOfRange { n, j });
    }
    Ok(j.min(n + 1 - j))
}

/// Descent polynomial of permutations starting with `j` or `n + 1 - j`.
/// Symmetric about `(n - 1) / 2`.
pub fn symmetric_restricted(n: usize, j: usize) -> Result<IntPolynomial> {
    let j = canonical_j(n, j)?;
    let t = table(n);
    let mirror = n + 1 - j;
    Ok(if mirror == j {
        t.restricted_poly(j)
    } else {
        &t.restricted_poly(j) + &t.restricted_poly(mirror)
    })
}

/// `t A_{n,j}(t) + A_{n,n+1-j}(t)` for `1 <= j < (n + 1) / 2`. Symmetric about `n / 2`.
pub fn primed_restricted(n: usize, j: usize) -> Result<IntPolynomial> {
    if j == 0 || 2 * j >= n + 1 {
        return Err(Error::IndexOutOfRange { n, j });
    }
    let t = table(n);
    Ok(&t.restricted_poly(j).shift(1) + &t.restricted_poly(n + 1 - j))
}

/// A gamma-vector `γ^{(n,j)}` (or its primed variant).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaFamily {
    pub n: usize,
    /// Canonical index (`j <= n + 1 - j` for the unprimed family).
    pub j: usize,
    pub primed: bool,
    /// Length `floor((n-1)/2) + 1` unprimed, `floor(n/2) + 1` primed.
    pub vector: CountVector,
}

/// Gamma-vector of the symmetric (degree `n-1`) or primed (degree `n`) family.
pub fn gamma_nj(n: usize, j: usize, primed: bool) -> Result<GammaFamily> {
    let (poly, degree, j) = if primed {
        (primed_restricted(n, j)?, n, j)
    } else {
        let j = canonical_j(n, j)?;
        (symmetric_restricted(n, j)?, n - 1, j)
    };
    let vector = gamma_from_symmetric(&poly, degree)?;
    Ok(GammaFamily { n, j, primed, vector })
}

/// `γ^{(n,j)}` as a vector.
pub fn gamma(n: usize, j: usize) -> Result<CountVector> {
    gamma_nj(n, j, false).map(|g| g.vector)
}

/// `γ'^{(n,j)}` as a vector.
pub fn gamma_primed(n: usize, j: usize) -> Result<CountVector> {
    gamma_nj(n, j, true).map(|g| g.vector)
}

/// The admissible `j` of the unprimed family: `1..=(n+1)/2`.
pub fn unprimed_range(n: usize) -> std::ops::RangeInclusive<usize> {
    1..=(n + 1) / 2
}

/// The admissible `j` of the primed family: `1 <= j < (n+1)/2`.
pub fn primed_range(n: usize) -> std::ops::RangeInclusive<usize> {
    1..=n / 2
}

/// One side-by-side comparison of a gamma recurrence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecurrenceCheck {
    /// 1: middle index, 2: unprimed, 3: primed.
    pub part: u8,
    pub j: usize,
    pub lhs: CountVector,
    pub rhs: CountVector,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecurrenceReport {
    pub n: usize,
    pub checks: Vec<RecurrenceCheck>,
}

impl RecurrenceReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

fn sum_vectors<I: IntoIterator<Item = CountVector>>(len: usize, it: I) -> CountVector {
    it.into_iter().fold(CountVector::zeros(Role::Gamma, len), |mut acc, v| {
        acc += &v;
        acc
    })
}

/// Checks the three gamma recurrences at `n` for every admissible `j`.
///
/// Left sides are expanded directly from the polynomials at `n`; right sides
/// are assembled from the order `n - 1` vectors:
/// 1. `γ^{(n,(n+1)/2)} = Σ_{k=1}^{(n-1)/2} γ'^{(n-1,k)}` (odd `n`);
/// 2. `γ^{(n,j)} = 2 Σ_{k<j} γ'^{(n-1,k)} + Σ_{k=j}^{⌊n/2⌋} γ^{(n-1,k)}`;
/// 3. `γ'^{(n,j)} = Σ_{k<j} γ'^{(n-1,k)} + 2 Σ_{k=j}^{⌊n/2⌋} (0, γ^{(n-1,k)})`.
pub fn verify_gamma_recurrences(n: usize) -> Result<RecurrenceReport> {
    let mut checks = Vec::new();
    if n < 2 {
        return Ok(RecurrenceReport { n, checks });
    }
    let two = BigInt::from(2);
    let len = (n - 1) / 2 + 1;
    let len_primed = n / 2 + 1;
    let mut push = |part, j, lhs: CountVector, rhs: CountVector| {
        let holds = lhs == rhs;
        checks.push(RecurrenceCheck { part, j, lhs, rhs, holds });
    };
    if n % 2 == 1 {
        let j = (n + 1) / 2;
        let lhs = gamma(n, j)?;
        let rhs = sum_vectors(len, (1..=(n - 1) / 2).map(|k| gamma_primed(n - 1, k)).collect::<Result<Vec<_>>>()?);
        push(1, j, lhs, rhs);
    }
    for j in (1..).take_while(|&j| 2 * j < n + 1) {
        let lhs = gamma(n, j)?;
        let primed_part: Vec<CountVector> = (1..j)
            .map(|k| gamma_primed(n - 1, k).map(|v| v.scale(&two)))
            .collect::<Result<_>>()?;
        let plain_part: Vec<CountVector> =
            (j..=n / 2).map(|k| gamma(n - 1, k)).collect::<Result<_>>()?;
        push(2, j, lhs, sum_vectors(len, primed_part.into_iter().chain(plain_part)));

        let lhs = gamma_primed(n, j)?;
        let primed_part: Vec<CountVector> =
            (1..j).map(|k| gamma_primed(n - 1, k)).collect::<Result<_>>()?;
        let shifted_part: Vec<CountVector> = (j..=n / 2)
            .map(|k| gamma(n - 1, k).map(|v| v.shifted().scale(&two)))
            .collect::<Result<_>>()?;
        push(3, j, lhs, sum_vectors(len_primed, primed_part.into_iter().chain(shifted_part)));
    }
    Ok(RecurrenceReport { n, checks })
}

/// `h_i(sd Δ) = Σ_{j=0}^{n} A(n+1, i, j+1) h_j(Δ)` for an h-vector of length `n + 1`.
pub fn h_sd_from_h(h: &CountVector) -> Result<CountVector> {
    if h.is_empty() {
        return Err(Error::InvalidVector("empty h-vector".into()));
    }
    let n = h.len() - 1;
    let t = table(n + 1);
    let out = (0..=n)
        .map(|i| (0..=n).map(|j| t.get(i, j + 1) * h.get(j)).sum())
        .collect();
    Ok(CountVector::new(Role::H, out))
}

/// `γ(sd Δ) = Σ_{i=0}^{⌊n/2⌋} h_i γ^{(n+1,i+1)}` for a symmetric, nonnegative h.
pub fn gamma_sd_from_h(h: &CountVector) -> Result<CountVector> {
    if h.is_empty() {
        return Err(Error::InvalidVector("empty h-vector".into()));
    }
    if let Some(i) = h.first_asymmetry() {
        return Err(Error::HypothesisViolation(format!(
            "h-vector {h} is not symmetric (h_{i} != h_{})",
            h.len() - 1 - i
        )));
    }
    if !h.is_nonnegative() {
        return Err(Error::HypothesisViolation(format!("h-vector {h} has a negative entry")));
    }
    let n = h.len() - 1;
    let mut out = CountVector::zeros(Role::Gamma, n / 2 + 1);
    for i in 0..=n / 2 {
        out += &gamma(n + 1, i + 1)?.scale(&h.get(i));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::transforms::gamma_from_symmetric;

    fn poly(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_ints(c.iter().copied())
    }

    fn gv(c: &[i64]) -> CountVector {
        CountVector::gamma(c.iter().copied())
    }

    #[test]
    fn descents() {
        assert_eq!(descent_number(&[1, 2, 3, 4, 5]).unwrap(), 0);
        assert_eq!(descent_number(&[3, 1, 4, 2]).unwrap(), 2);
        assert_eq!(Permutation::new(vec![3, 1, 4, 2]).unwrap().descents(), vec![1, 3]);
        assert_eq!(descent_number(&[6, 5, 4, 3, 2, 1]).unwrap(), 5);
        assert!(matches!(descent_number(&[1, 1, 2]), Err(Error::InvalidPermutation { .. })));
        assert!(descent_number(&[0, 1]).is_err());
        assert!(descent_number(&[1, 3]).is_err());
        assert_eq!(Permutation::identity(4).descent_number(), 0);
    }

    #[test]
    fn n4_rows_match_display() {
        let t = table_by_recurrence(4);
        assert_eq!(t.restricted_poly(1), poly(&[1, 4, 1]));
        assert_eq!(t.restricted_poly(2), poly(&[0, 4, 2]));
        assert_eq!(t.restricted_poly(3), poly(&[0, 2, 4]));
        assert_eq!(t.restricted_poly(4), poly(&[0, 1, 4, 1]));
        assert_eq!(table_by_enumeration(4).unwrap(), t);
    }

    #[test]
    fn enumeration_edge_cases() {
        let t = table_by_enumeration(1).unwrap();
        assert_eq!(t.get(0, 1), BigInt::one());
        assert_eq!(t.total(), BigInt::one());
        assert_eq!(
            table_by_enumeration(11).unwrap_err(),
            Error::CapacityExceeded { what: "n", value: 11, cap: 10 }
        );
        assert_eq!(table_by_enumeration(7).unwrap(), table_by_recurrence(7));
        assert_eq!(table_by_enumeration(8).unwrap(), table_by_recurrence(8));
    }

    #[test]
    fn table_invariants() {
        let mut factorial = BigInt::one();
        for n in 1..=12 {
            factorial *= n;
            let t = table(n);
            assert_eq!(t.total(), factorial);
            assert!(t.has_involution_symmetry());
            assert_eq!(t.get(0, 1), BigInt::one());
            if n > 1 {
                assert_eq!(t.restricted_poly(1), eulerian_poly(n - 1));
                assert_eq!(t.restricted_poly(n), eulerian_poly(n - 1).shift(1));
            }
        }
    }

    #[test]
    fn memo_matches_direct_recurrence_past_cap() {
        assert_eq!(*table(MEMO_CAP + 2), table_by_recurrence(MEMO_CAP + 2));
        assert_eq!(*table(5), table_by_recurrence(5));
    }

    #[test]
    fn eulerian_examples() {
        assert_eq!(eulerian_poly(1), poly(&[1]));
        assert_eq!(eulerian_poly(4), poly(&[1, 11, 11, 1]));
        // oracle: count descents over all of S_6
        let mut counts = [0i64; 6];
        for w in (1..=6usize).permutations(6) {
            counts[descent_count(&w)] += 1;
        }
        assert_eq!(counts, [1, 57, 302, 302, 57, 1]);
        assert_eq!(eulerian_poly(6), poly(&counts));
    }

    #[test]
    fn symmetric_family_examples() {
        assert_eq!(symmetric_restricted(4, 2).unwrap(), poly(&[0, 6, 6]));
        assert_eq!(symmetric_restricted(4, 3).unwrap(), symmetric_restricted(4, 2).unwrap());
        // S_3 starting with 2: 213, 231 -> one descent each
        assert_eq!(symmetric_restricted(3, 2).unwrap(), poly(&[0, 2]));
        assert_eq!(
            symmetric_restricted(5, 1).unwrap(),
            &eulerian_poly(4) * &poly(&[1, 1])
        );
        assert!(symmetric_restricted(4, 0).is_err());
        assert!(symmetric_restricted(4, 5).is_err());
        for n in 1..=10 {
            for j in unprimed_range(n) {
                assert!(symmetric_restricted(n, j).unwrap().is_symmetric(n - 1));
            }
        }
    }

    #[test]
    fn primed_family_examples() {
        assert_eq!(primed_restricted(4, 1).unwrap(), poly(&[0, 2, 8, 2]));
        assert_eq!(primed_restricted(2, 1).unwrap(), poly(&[0, 2]));
        assert_eq!(gamma_primed(5, 2).unwrap(), gv(&[0, 2, 16]));
        assert!(primed_restricted(5, 3).is_err());
        assert!(primed_restricted(4, 3).is_err());
        assert!(matches!(primed_restricted(1, 1), Err(Error::IndexOutOfRange { n: 1, j: 1 })));
        for n in 2..=10 {
            for j in primed_range(n) {
                assert!(primed_restricted(n, j).unwrap().is_symmetric(n));
            }
        }
    }

    #[test]
    fn gamma_family_values() {
        assert_eq!(gamma(6, 1).unwrap(), gv(&[1, 22, 16]));
        assert_eq!(gamma(6, 2).unwrap(), gv(&[0, 18, 48]));
        assert_eq!(gamma(6, 3).unwrap(), gv(&[0, 12, 72]));
        assert_eq!(gamma(5, 2).unwrap(), gv(&[0, 10, 8]));
        assert_eq!(gamma(6, 6).unwrap(), gamma(6, 1).unwrap());
        let fam = gamma_nj(6, 5, false).unwrap();
        assert_eq!(fam.j, 2);
        assert_eq!(fam.vector.len(), 3);
        assert_eq!(gamma_nj(1, 1, false).unwrap().vector, gv(&[1]));
        assert!(gamma_nj(1, 1, true).is_err());
    }

    #[test]
    fn base_tables() {
        let table: &[(usize, usize, bool, &[i64])] = &[
            (2, 1, false, &[1]),
            (2, 1, true, &[0, 2]),
            (3, 1, false, &[1]),
            (3, 1, true, &[0, 2]),
            (3, 2, false, &[0, 2]),
            (4, 1, false, &[1, 2]),
            (4, 1, true, &[0, 2, 4]),
            (4, 2, false, &[0, 6]),
            (4, 2, true, &[0, 2, 4]),
            (5, 1, false, &[1, 8]),
            (5, 1, true, &[0, 2, 16]),
            (5, 2, false, &[0, 10, 8]),
            (5, 2, true, &[0, 2, 16]),
            (5, 3, false, &[0, 4, 8]),
        ];
        for &(n, j, primed, expected) in table {
            assert_eq!(gamma_nj(n, j, primed).unwrap().vector, gv(expected), "n={n} j={j} primed={primed}");
        }
    }

    #[test]
    fn gamma_families_are_nonnegative() {
        for n in 1..=14 {
            for j in unprimed_range(n) {
                let g = gamma_nj(n, j, false).unwrap();
                assert_eq!(g.vector.len(), (n - 1) / 2 + 1);
                assert!(g.vector.is_nonnegative(), "γ^({n},{j}) = {}", g.vector);
            }
            for j in (1..).take_while(|&j| 2 * j < n + 1) {
                let g = gamma_nj(n, j, true).unwrap();
                assert_eq!(g.vector.len(), n / 2 + 1);
                assert!(g.vector.is_nonnegative(), "γ'^({n},{j}) = {}", g.vector);
            }
        }
    }

    #[test]
    fn recurrence_examples() {
        let r5 = verify_gamma_recurrences(5).unwrap();
        let part1 = r5.checks.iter().find(|c| c.part == 1).unwrap();
        assert_eq!(part1.j, 3);
        assert_eq!(part1.rhs, gv(&[0, 4, 8]));
        assert!(part1.holds);

        let r4 = verify_gamma_recurrences(4).unwrap();
        let part2 = r4.checks.iter().find(|c| c.part == 2 && c.j == 2).unwrap();
        assert_eq!(part2.lhs, gv(&[0, 6]));
        assert_eq!(part2.rhs, gv(&[0, 6]));

        for n in 2..=12 {
            let r = verify_gamma_recurrences(n).unwrap();
            assert!(r.all_hold(), "n = {n}: {:?}", r.checks.iter().filter(|c| !c.holds).collect::<Vec<_>>());
            assert_eq!(r.checks.len(), (n % 2) + 2 * (n / 2));
        }
        assert!(verify_gamma_recurrences(1).unwrap().checks.is_empty());
    }

    #[test]
    fn subdivision_transfer() {
        assert_eq!(h_sd_from_h(&CountVector::h([1])).unwrap(), CountVector::h([1]));
        assert_eq!(h_sd_from_h(&CountVector::h([1, 1, 1])).unwrap(), CountVector::h([1, 4, 1]));
        // symbolic columns for n = 5: unit vectors in h_0, h_1, h_2 (mirrored)
        let cols = [
            [1, 0, 0, 0, 0, 1],
            [0, 1, 0, 0, 1, 0],
            [0, 0, 1, 1, 0, 0],
        ];
        let expected = [[27, 92], [18, 102], [12, 108]];
        for (col, exp) in cols.iter().zip(expected) {
            let hs = h_sd_from_h(&CountVector::h(col.iter().copied())).unwrap();
            assert_eq!(hs.get(0), BigInt::from(col[0]));
            assert_eq!(hs.get(1), BigInt::from(exp[0]));
            assert_eq!(hs.get(2), BigInt::from(exp[1]));
        }
    }

    #[test]
    fn gamma_sd_examples() {
        assert_eq!(gamma_sd_from_h(&CountVector::h([1, 1, 1])).unwrap(), gv(&[1, 2]));
        assert_eq!(gamma_sd_from_h(&CountVector::h([1, 1, 1, 1, 1, 1])).unwrap(), gv(&[1, 52, 136]));
        assert_eq!(gamma_sd_from_h(&CountVector::h([1, 3, 3, 1])).unwrap(), gv(&[1, 20]));
        let h = CountVector::h([1, 5, 10, 10, 5, 1]);
        let combo = &(&gv(&[1, 22, 16]) + &gv(&[0, 18, 48]).scale(&5.into())) + &gv(&[0, 12, 72]).scale(&10.into());
        assert_eq!(combo, gv(&[1, 232, 976]));
        assert_eq!(gamma_sd_from_h(&h).unwrap(), combo);
        assert_eq!(
            gamma_from_symmetric(&h_sd_from_h(&h).unwrap().to_polynomial(), 5).unwrap(),
            combo
        );
    }

    #[test]
    fn gamma_sd_rejects_bad_h() {
        assert!(matches!(
            gamma_sd_from_h(&CountVector::h([1, 2, 1, 1])),
            Err(Error::HypothesisViolation(_))
        ));
        assert!(matches!(
            gamma_sd_from_h(&CountVector::h([1, -1, 1])),
            Err(Error::HypothesisViolation(_))
        ));
    }

    #[test]
    fn gamma_sd_agrees_with_expansion_on_random_h() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(0x5d);
        for _ in 0..200 {
            let len = rng.gen_range(1..=13);
            let mut h = vec![0i64; len];
            for i in 0..=(len - 1) / 2 {
                let v = if i == 0 { 1 } else { rng.gen_range(0..1000) };
                h[i] = v;
                h[len - 1 - i] = v;
            }
            let h = CountVector::h(h);
            let via_sd = gamma_from_symmetric(&h_sd_from_h(&h).unwrap().to_polynomial(), len - 1).unwrap();
            assert_eq!(gamma_sd_from_h(&h).unwrap(), via_sd, "h = {h}");
        }
    }
}
