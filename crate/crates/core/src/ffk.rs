//! Colored subsets of the positive integers in revlex order, the compressed
//! complexes `F_d(f)`, the order embedding `φ_d`, and FFK membership.
//!
//! Elements and ranks are `u64`; intermediate counts are `u128` and saturate,
//! which never affects a comparison against a `u64` rank.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::ControlFlow;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use crate::complex::{ColoredComplex, Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::transforms::{CountVector, Role};

/// Color of `s` modulo `d`, represented in `1..=d`.
#[inline]
pub fn color_of(s: u64, d: usize) -> usize {
    ((s - 1) % d as u64) as usize + 1
}

/// A finite set of positive integers, pairwise incongruent modulo `d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ColoredSubset {
    elements: Vec<u64>,
    modulus: usize,
}

impl ColoredSubset {
    /// Sorts `elements` and validates them against `modulus`.
    pub fn new(mut elements: Vec<u64>, modulus: usize) -> Result<Self> {
        elements.sort_unstable();
        let invalid = || Error::InvalidColoredSubset { elements: elements.clone(), modulus };
        if modulus == 0 || elements.first() == Some(&0) {
            return Err(invalid());
        }
        let mut seen = BTreeSet::new();
        if !elements.iter().all(|&s| seen.insert(color_of(s, modulus))) {
            return Err(invalid());
        }
        Ok(Self { elements, modulus })
    }

    pub(crate) fn from_sorted(elements: Vec<u64>, modulus: usize) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        Self { elements, modulus }
    }

    pub fn empty(modulus: usize) -> Self {
        Self { elements: Vec::new(), modulus }
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn max(&self) -> Option<u64> {
        self.elements.last().copied()
    }

    pub fn min(&self) -> Option<u64> {
        self.elements.first().copied()
    }

    /// `col_d(S)` with representatives in `1..=d`.
    pub fn colors(&self) -> BTreeSet<usize> {
        self.elements.iter().map(|&s| color_of(s, self.modulus)).collect()
    }

    /// `S \ {min S}`: the revlex-largest subset of size `|S| - 1`.
    pub fn without_min(&self) -> ColoredSubset {
        Self::from_sorted(self.elements.iter().skip(1).copied().collect(), self.modulus)
    }

    pub fn to_face(&self) -> Face {
        Face::new(self.elements.iter().map(|&s| s as usize)).expect("elements are distinct")
    }
}

impl fmt::Display for ColoredSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, s) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, "}}")
    }
}

fn revlex_cmp_slices(a: &[u64], b: &[u64]) -> Ordering {
    a.iter().rev().cmp(b.iter().rev())
}

/// Revlex comparison: the set holding the larger of the largest differing
/// elements is larger.
pub fn revlex_compare(s: &ColoredSubset, t: &ColoredSubset) -> Result<Ordering> {
    if s.len() != t.len() {
        return Err(Error::CardinalityMismatch { left: s.len(), right: t.len() });
    }
    Ok(revlex_cmp_slices(&s.elements, &t.elements))
}

/// Size of color class `c` within `1..=m`.
#[inline]
fn class_size(c: usize, m: u64, d: usize) -> u64 {
    let c = c as u64;
    if m >= c {
        (m - c) / d as u64 + 1
    } else {
        0
    }
}

/// Number of `d`-colored `k`-subsets of `1..=m` avoiding the colors in `forbidden`:
/// the elementary symmetric polynomial `e_k` of the allowed class sizes.
fn count_within(k: usize, m: u64, d: usize, forbidden: &[bool]) -> u128 {
    if k == 0 {
        return 1;
    }
    let mut e = vec![0u128; k + 1];
    e[0] = 1;
    for c in 1..=d {
        if forbidden[c - 1] {
            continue;
        }
        let size = class_size(c, m, d) as u128;
        if size == 0 {
            continue;
        }
        for t in (1..=k).rev() {
            e[t] = e[t].saturating_add(e[t - 1].saturating_mul(size));
        }
    }
    e[k]
}

/// Number of `d`-colored `k`-subsets of `1..=m`.
pub fn count_colored_subsets(d: usize, k: usize, m: u64) -> u128 {
    if k > d {
        return 0;
    }
    count_within(k, m, d, &vec![false; d])
}

/// `F_{d,k}(j)`: the `j`-th (1-based) `d`-colored `k`-subset in revlex order.
pub fn unrank(d: usize, k: usize, j: u64) -> Result<ColoredSubset> {
    if d == 0 || k > d {
        return Err(Error::NoColoredSubsets { modulus: d, size: k });
    }
    if j == 0 {
        return Err(Error::RankOutOfRange { rank: 0, reason: "ranks are 1-based" });
    }
    if k == 0 {
        return if j == 1 {
            Ok(ColoredSubset::empty(d))
        } else {
            Err(Error::RankOutOfRange { rank: j, reason: "there is a single 0-subset" })
        };
    }
    let mut forbidden = vec![false; d];
    let mut remaining = j as u128;
    let mut elements = Vec::with_capacity(k);
    let mut upper: Option<u64> = None;
    for i in (1..=k).rev() {
        let count = |m: u64| count_within(i, m, d, &forbidden);
        // smallest m with count(m) >= remaining; count(i - 1) == 0
        let mut lo = (i - 1) as u64;
        let mut hi = match upper {
            Some(u) => u,
            None => {
                let mut hi = (i as u64).max(1);
                while count(hi) < remaining {
                    lo = hi;
                    hi = hi.saturating_mul(2);
                }
                hi
            }
        };
        debug_assert!(count(hi) >= remaining);
        while hi - lo > 1 {
            let mid = lo + (hi - lo) / 2;
            if count(mid) >= remaining {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        remaining -= count(hi - 1);
        elements.push(hi);
        forbidden[color_of(hi, d) - 1] = true;
        upper = Some(hi - 1);
    }
    elements.reverse();
    Ok(ColoredSubset::from_sorted(elements, d))
}

/// 1-based revlex position of `s`; inverse of [`unrank`].
pub fn rank(s: &ColoredSubset) -> Result<u64> {
    let d = s.modulus;
    let mut forbidden = vec![false; d];
    let mut total: u128 = 1;
    for (i, &x) in s.elements.iter().enumerate().rev() {
        total = total.saturating_add(count_within(i + 1, x - 1, d, &forbidden));
        forbidden[color_of(x, d) - 1] = true;
    }
    u64::try_from(total).map_err(|_| Error::RankOutOfRange { rank: u64::MAX, reason: "rank exceeds 64 bits" })
}

/// Enumerates `d`-colored `k`-subsets in revlex order by increasing maximum
/// `m`, recursing into `1..m` with the color of `m` removed. Stops after `limit`.
pub fn generate_revlex(d: usize, k: usize, limit: usize) -> Result<Vec<ColoredSubset>> {
    if d == 0 || k > d {
        return Err(Error::NoColoredSubsets { modulus: d, size: k });
    }
    fn rec(
        k: usize,
        upper: u64,
        d: usize,
        forbidden: &mut [bool],
        suffix: &mut Vec<u64>,
        visit: &mut dyn FnMut(&[u64]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if k == 0 {
            return visit(suffix);
        }
        for m in k as u64..=upper {
            let c = color_of(m, d) - 1;
            if forbidden[c] {
                continue;
            }
            forbidden[c] = true;
            let flow = if count_within(k - 1, m - 1, d, forbidden) > 0 {
                suffix.push(m);
                let flow = rec(k - 1, m - 1, d, forbidden, suffix, visit);
                suffix.pop();
                flow
            } else {
                ControlFlow::Continue(())
            };
            forbidden[c] = false;
            flow?;
        }
        ControlFlow::Continue(())
    }

    let mut out = Vec::with_capacity(limit.min(1 << 16));
    if limit == 0 {
        return Ok(out);
    }
    let mut forbidden = vec![false; d];
    let mut suffix = Vec::with_capacity(k);
    let mut visit = |s: &[u64]| {
        out.push(ColoredSubset::from_sorted(s.iter().rev().copied().collect(), d));
        if out.len() >= limit {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    };
    // the top level is unbounded and only stops through `visit`
    let _ = rec(k, u64::MAX, d, &mut forbidden, &mut suffix, &mut visit);
    Ok(out)
}

/// The revlex successor of `s` among `d`-colored subsets of the same size.
pub fn revlex_successor(s: &ColoredSubset) -> ColoredSubset {
    let d = s.modulus;
    let k = s.len();
    let e = &s.elements;
    let mut forbidden = vec![false; d];
    for &x in e {
        forbidden[color_of(x, d) - 1] = true;
    }
    for i in 0..k {
        // positions below i are free; i is raised; above i are kept
        for &x in &e[..=i] {
            forbidden[color_of(x, d) - 1] = false;
        }
        let upper = e.get(i + 1).map(|&x| x - 1).unwrap_or(u64::MAX);
        let mut v = e[i] + 1;
        while v <= upper {
            let c = color_of(v, d) - 1;
            if !forbidden[c] {
                forbidden[c] = true;
                let feasible = count_within(i, v - 1, d, &forbidden) > 0;
                if feasible {
                    let mut prefix = Vec::with_capacity(k);
                    let mut x = 1u64;
                    while prefix.len() < i {
                        let cx = color_of(x, d) - 1;
                        if !forbidden[cx] {
                            forbidden[cx] = true;
                            prefix.push(x);
                        }
                        x += 1;
                    }
                    prefix.push(v);
                    prefix.extend_from_slice(&e[i + 1..]);
                    return ColoredSubset::from_sorted(prefix, d);
                }
                forbidden[c] = false;
            }
            v += 1;
        }
    }
    unreachable!("the top element can always be raised")
}

/// Infinite revlex iterator over `d`-colored `k`-subsets.
#[derive(Clone, Debug)]
pub struct RevlexIter {
    next: Option<ColoredSubset>,
}

impl RevlexIter {
    pub fn new(d: usize, k: usize) -> Result<Self> {
        Ok(Self { next: Some(unrank(d, k, 1)?) })
    }
}

impl Iterator for RevlexIter {
    type Item = ColoredSubset;

    fn next(&mut self) -> Option<ColoredSubset> {
        let current = self.next.take()?;
        // the single 0-subset has no successor
        if !current.is_empty() {
            self.next = Some(revlex_successor(&current));
        }
        Some(current)
    }
}

/// `φ_d(s) = s + ⌊(s - 1) / (d - 1)⌋`.
#[inline]
pub fn phi_element(s: u64, d: usize) -> u64 {
    s + (s - 1) / (d as u64 - 1)
}

/// Maps a `(d-1)`-colored subset to a `d`-colored one, where `d = modulus + 1`.
pub fn phi(s: &ColoredSubset) -> ColoredSubset {
    let d = s.modulus + 1;
    ColoredSubset::from_sorted(s.elements.iter().map(|&x| phi_element(x, d)).collect(), d)
}

/// `r_{d,k}(a)`: the rank of `φ_d(F_{d-1,k}(a))` in the modulus-`d` order.
pub fn r(d: usize, k: usize, a: u64) -> Result<u64> {
    if d < 2 || k >= d {
        return Err(Error::NoColoredSubsets { modulus: d.saturating_sub(1), size: k });
    }
    rank(&phi(&unrank(d - 1, k, a)?))
}

/// `F_d(f)` with all faces materialized and the residue coloring implied.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompressedComplex {
    d: usize,
    f: CountVector,
    // faces[k] lists the first f_k colored k-subsets
    faces: Vec<Vec<ColoredSubset>>,
}

impl CompressedComplex {
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn f(&self) -> &CountVector {
        &self.f
    }

    pub fn faces_of_size(&self, k: usize) -> &[ColoredSubset] {
        self.faces.get(k).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn faces(&self) -> impl Iterator<Item = &ColoredSubset> {
        self.faces.iter().flatten()
    }

    pub fn contains(&self, s: &ColoredSubset) -> bool {
        self.faces_of_size(s.len())
            .binary_search_by(|t| revlex_cmp_slices(&t.elements, &s.elements))
            .is_ok()
    }

    /// The underlying complex; fails if the family is not downward closed.
    pub fn to_simplicial_complex(&self) -> Result<SimplicialComplex> {
        SimplicialComplex::from_faces(self.faces().map(ColoredSubset::to_face))
    }

    /// Vertex `s` gets color `((s - 1) mod d) + 1`.
    pub fn to_colored_complex(&self) -> Result<ColoredComplex> {
        let complex = self.to_simplicial_complex()?;
        let coloring: BTreeMap<usize, usize> = self
            .faces_of_size(1)
            .iter()
            .map(|s| (s.elements[0] as usize, color_of(s.elements[0], self.d)))
            .collect();
        Ok(ColoredComplex::new(complex, coloring, self.d))
    }
}

/// Entries of `f` as `u64`, after checking `f_0 = 1`, nonnegativity and the
/// length bound `d + 1` (trailing zeros ignored).
pub fn check_ffk_input(f: &CountVector, d: usize) -> Result<Vec<u64>> {
    if f.get(0) != BigInt::from(1) {
        return Err(Error::InvalidVector(format!("{f}: the entry f_0 must be 1")));
    }
    if f.entries().iter().any(Signed::is_negative) {
        return Err(Error::InvalidVector(format!("{f} has a negative entry")));
    }
    let len = f.support_len();
    if len > d + 1 {
        return Err(Error::NoColoredSubsets { modulus: d, size: len - 1 });
    }
    f.entries()[..len]
        .iter()
        .map(|x| x.to_u64().ok_or_else(|| Error::InvalidVector(format!("entry {x} exceeds 64 bits"))))
        .collect()
}

/// Materializes `F_d(f)` without checking closure.
pub fn compressed_complex(f: &CountVector, d: usize) -> Result<CompressedComplex> {
    let entries = check_ffk_input(f, d)?;
    let faces = entries
        .iter()
        .enumerate()
        .map(|(k, &fk)| {
            if fk == 0 {
                return Ok(Vec::new());
            }
            let cap = usize::try_from(fk).map_err(|_| Error::CapacityExceeded {
                what: "face count",
                value: usize::MAX,
                cap: usize::MAX,
            })?;
            if k == 0 {
                return Ok(vec![ColoredSubset::empty(d.max(1))]);
            }
            Ok(RevlexIter::new(d, k)?.take(cap).collect())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CompressedComplex { d, f: f.trimmed().with_role(Role::F), faces })
}

/// First face of `F_d(f)` missing one of its codimension-one subsets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureViolation {
    pub face: ColoredSubset,
    pub missing: ColoredSubset,
}

/// Closure test without materializing faces.
///
/// `S \ min S` is the revlex-largest codimension-one subset of `S`, and it is
/// monotone along the revlex order, so level `k` is covered iff the last face
/// satisfies `rank(S \ min S) <= f_{k-1}`. The first offending face is found by
/// bisection.
pub fn ffk_closure(f: &CountVector, d: usize) -> Result<Option<ClosureViolation>> {
    let entries = check_ffk_input(f, d)?;
    for k in 2..entries.len() {
        let (below, fk) = (entries[k - 1], entries[k]);
        if fk == 0 {
            continue;
        }
        let bad = |j: u64| -> Result<bool> { Ok(rank(&unrank(d, k, j)?.without_min())? > below) };
        if !bad(fk)? {
            continue;
        }
        let (mut lo, mut hi) = (0u64, fk);
        while hi - lo > 1 {
            let mid = lo + (hi - lo) / 2;
            if bad(mid)? {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        let face = unrank(d, k, hi)?;
        let missing = face.without_min();
        return Ok(Some(ClosureViolation { face, missing }));
    }
    Ok(None)
}

/// Closure test by materializing `F_d(f)` and checking every boundary face.
pub fn ffk_closure_brute(f: &CountVector, d: usize) -> Result<Option<ClosureViolation>> {
    let cc = compressed_complex(f, d)?;
    for k in 1..cc.faces.len() {
        for face in &cc.faces[k] {
            for skip in (0..k).rev() {
                let sub: Vec<u64> = face
                    .elements
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .map(|(_, &x)| x)
                    .collect();
                let sub = ColoredSubset::from_sorted(sub, face.modulus);
                if !cc.contains(&sub) {
                    return Ok(Some(ClosureViolation { face: face.clone(), missing: sub }));
                }
            }
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FfkVerdict {
    Ffk(CompressedComplex),
    NotFfk(ClosureViolation),
}

impl FfkVerdict {
    pub fn is_ffk(&self) -> bool {
        matches!(self, FfkVerdict::Ffk(_))
    }
}

/// Decides whether `f` is a `d`-FFK-vector; on success returns `F_d(f)`.
pub fn is_ffk(f: &CountVector, d: usize) -> Result<FfkVerdict> {
    Ok(match ffk_closure(f, d)? {
        Some(v) => FfkVerdict::NotFfk(v),
        None => FfkVerdict::Ffk(compressed_complex(f, d)?),
    })
}

/// Closure-only membership test.
pub fn is_ffk_vector(f: &CountVector, d: usize) -> Result<bool> {
    Ok(ffk_closure(f, d)?.is_none())
}

/// `f_0 = f'_0 = 1` and `f_k >= f'_k` for every `k`, padding with zeros.
pub fn dominates(f: &CountVector, other: &CountVector) -> bool {
    let one = BigInt::from(1);
    if f.get(0) != one || other.get(0) != one {
        return false;
    }
    let len = f.len().max(other.len());
    (0..len).all(|k| f.get(k) >= other.get(k))
}

/// Largest `f_k` such that appending it to the `d`-FFK prefix `f_0..f_{k-1}`
/// keeps the family closed (`k = f.len()`).
pub fn max_next_entry(prefix: &CountVector, d: usize) -> Result<u64> {
    let entries = check_ffk_input(prefix, d)?;
    let k = prefix.len();
    if k > d || k == 0 {
        return Ok(0);
    }
    let below = entries.get(k - 1).copied().unwrap_or(0);
    if k == 1 {
        return Err(Error::InvalidVector("the number of vertices is unbounded".into()));
    }
    if below == 0 {
        return Ok(0);
    }
    let ok = |j: u64| -> Result<bool> { Ok(rank(&unrank(d, k, j)?.without_min())? <= below) };
    if !ok(1)? {
        return Ok(0);
    }
    let (mut lo, mut hi) = (1u64, 2u64);
    while ok(hi)? {
        lo = hi;
        hi = hi.checked_mul(2).ok_or(Error::RankOutOfRange { rank: hi, reason: "face count exceeds 64 bits" })?;
    }
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if ok(mid)? {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(lo)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::verify_coloring;
    use itertools::Itertools;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};

    fn cs(e: &[u64], d: usize) -> ColoredSubset {
        ColoredSubset::new(e.to_vec(), d).unwrap()
    }

    fn fv(e: &[i64]) -> CountVector {
        CountVector::f(e.iter().copied())
    }

    /// All `d`-colored `k`-subsets of `1..=m`, sorted revlex.
    fn brute_subsets(d: usize, k: usize, m: u64) -> Vec<Vec<u64>> {
        let mut out: Vec<Vec<u64>> = (1..=m)
            .combinations(k)
            .filter(|c| c.iter().map(|&s| color_of(s, d)).all_unique())
            .collect();
        out.sort_by(|a, b| revlex_cmp_slices(a, b));
        out
    }

    #[test]
    fn subset_validation() {
        assert!(ColoredSubset::new(vec![1, 5], 4).is_err());
        assert!(ColoredSubset::new(vec![0, 1], 4).is_err());
        assert!(ColoredSubset::new(vec![1, 1], 4).is_err());
        assert!(ColoredSubset::new(vec![], 0).is_err());
        let s = cs(&[8, 1, 4, 5], 5);
        assert_eq!(s.elements(), &[1, 4, 5, 8]);
        assert_eq!(s.colors(), BTreeSet::from([1, 3, 4, 5]));
        assert_eq!(s.to_string(), "{1, 4, 5, 8}");
        assert_eq!(cs(&[4], 4).colors(), BTreeSet::from([4]));
    }

    #[test]
    fn revlex_chain() {
        let chain = [[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4], [2, 3, 5], [2, 4, 5], [3, 4, 5]];
        for w in chain.windows(2) {
            assert_eq!(revlex_compare(&cs(&w[0], 4), &cs(&w[1], 4)).unwrap(), Ordering::Less);
        }
        for (i, s) in chain.iter().enumerate() {
            assert_eq!(unrank(4, 3, i as u64 + 1).unwrap(), cs(s, 4));
            assert_eq!(rank(&cs(s, 4)).unwrap(), i as u64 + 1);
        }
        let s = cs(&[1, 2, 4], 4);
        assert_eq!(revlex_compare(&s, &s).unwrap(), Ordering::Equal);
        assert_eq!(
            revlex_compare(&s, &cs(&[1, 2], 4)).unwrap_err(),
            Error::CardinalityMismatch { left: 3, right: 2 }
        );
    }

    #[test]
    fn unrank_edge_cases() {
        assert_eq!(unrank(4, 5, 1).unwrap_err(), Error::NoColoredSubsets { modulus: 4, size: 5 });
        assert!(matches!(unrank(4, 2, 0), Err(Error::RankOutOfRange { .. })));
        assert_eq!(unrank(3, 0, 1).unwrap(), ColoredSubset::empty(3));
        assert!(unrank(3, 0, 2).is_err());
        for d in 1..=5 {
            for j in 1..=40 {
                assert_eq!(unrank(d, 1, j).unwrap().elements(), &[j]);
            }
        }
        assert_eq!(rank(&cs(&[1], 7)).unwrap(), 1);
        assert_eq!(rank(&ColoredSubset::empty(2)).unwrap(), 1);
        // d = 1 allows only singletons
        assert_eq!(unrank(1, 1, 9).unwrap().elements(), &[9]);
    }

    #[test]
    fn ranks_match_exhaustive_generation() {
        for d in 1..=6 {
            for k in 1..=d.min(4) {
                let all = brute_subsets(d, k, 14);
                // only prefixes whose maxima are all below the cutoff are complete
                let complete = all.iter().take_while(|s| *s.last().unwrap() <= 14 - d as u64).count();
                for (i, s) in all.iter().take(complete).enumerate() {
                    let sub = ColoredSubset::from_sorted(s.clone(), d);
                    assert_eq!(rank(&sub).unwrap(), i as u64 + 1, "d={d} {sub}");
                    assert_eq!(unrank(d, k, i as u64 + 1).unwrap(), sub);
                }
            }
        }
    }

    #[test]
    fn generators_agree_with_unrank() {
        for d in 1..=6 {
            for k in 0..=d {
                let generated = generate_revlex(d, k, 300).unwrap();
                let iterated: Vec<_> = RevlexIter::new(d, k).unwrap().take(300).collect();
                assert_eq!(generated, iterated, "d={d} k={k}");
                if k == 0 {
                    assert_eq!(generated.len(), 1);
                    continue;
                }
                assert_eq!(generated.len(), 300);
                for (j, s) in generated.iter().enumerate() {
                    assert_eq!(*s, unrank(d, k, j as u64 + 1).unwrap());
                }
            }
        }
    }

    #[test]
    fn rank_unrank_round_trip() {
        for d in 1..=8 {
            for k in 0..=d {
                let top = if k == 0 { 1 } else { 500 };
                for j in 1..=top {
                    let s = unrank(d, k, j).unwrap();
                    assert_eq!(s.len(), k);
                    assert_eq!(s.colors().len(), k);
                    assert_eq!(rank(&s).unwrap(), j);
                }
            }
        }
    }

    #[test]
    fn count_matches_brute() {
        for d in 1..=5 {
            for k in 0..=d {
                for m in 0..=12 {
                    let brute = (1..=m).combinations(k).filter(|c| c.iter().map(|&s| color_of(s, d)).all_unique()).count();
                    assert_eq!(count_colored_subsets(d, k, m), brute as u128);
                }
            }
        }
        assert_eq!(count_colored_subsets(2, 3, 100), 0);
    }

    #[test]
    fn phi_examples() {
        // elementwise formula; {1,4,5,8} itself is not 4-colored
        let image: Vec<u64> = [1, 4, 5, 8].iter().map(|&s| phi_element(s, 5)).collect();
        assert_eq!(image, vec![1, 4, 6, 9]);
        assert_eq!(phi(&cs(&[1, 4, 7], 4)), cs(&[1, 4, 8], 5));
        assert_eq!(phi(&ColoredSubset::empty(3)), ColoredSubset::empty(4));
        for d in 2..=6 {
            for k in 0..d {
                let subs = generate_revlex(d - 1, k, 60).unwrap();
                for s in &subs {
                    assert_eq!(phi(s).colors(), s.colors());
                }
                for (a, b) in subs.iter().tuple_windows() {
                    assert_eq!(revlex_compare(&phi(a), &phi(b)).unwrap(), Ordering::Less);
                }
            }
        }
    }

    #[test]
    fn phi_preserves_order_on_small_pairs() {
        let subs: Vec<ColoredSubset> = (1..=12u64)
            .combinations(2)
            .filter(|c| color_of(c[0], 3) != color_of(c[1], 3))
            .map(|c| ColoredSubset::from_sorted(c, 3))
            .collect();
        for (a, b) in subs.iter().tuple_combinations() {
            assert_eq!(
                revlex_compare(a, b).unwrap(),
                revlex_compare(&phi(a), &phi(b)).unwrap()
            );
        }
    }

    #[test]
    fn r_examples() {
        for d in 2..=7 {
            for k in 0..d {
                assert_eq!(r(d, k, 1).unwrap(), 1);
            }
        }
        assert_eq!(r(3, 1, 3).unwrap(), 4);
        assert!(r(3, 3, 1).is_err());
        assert!(r(1, 0, 1).is_err());
        for d in 2..=6 {
            for k in 1..d {
                for a in 1..=50u64 {
                    assert!(r(d, k, a).unwrap() <= (k as u64 + 1) * a);
                }
            }
        }
    }

    #[test]
    fn compressed_examples() {
        let c = compressed_complex(&fv(&[1]), 0).unwrap();
        assert_eq!(c.to_simplicial_complex().unwrap().f_vector(), fv(&[1]));
        let c = compressed_complex(&fv(&[1, 3, 2]), 2).unwrap();
        let faces: Vec<Vec<u64>> = c.faces().map(|s| s.elements().to_vec()).collect();
        assert_eq!(faces, vec![vec![], vec![1], vec![2], vec![3], vec![1, 2], vec![2, 3]]);
        let c = compressed_complex(&fv(&[1, 2]), 1).unwrap();
        assert_eq!(c.faces_of_size(1).len(), 2);
        assert_eq!(
            compressed_complex(&fv(&[1, 3, 1]), 1).unwrap_err(),
            Error::NoColoredSubsets { modulus: 1, size: 2 }
        );
        assert!(compressed_complex(&fv(&[2, 3]), 2).is_err());
        assert!(compressed_complex(&fv(&[1, -3]), 2).is_err());
        // trailing zeros do not count against the length bound
        assert!(compressed_complex(&fv(&[1, 3, 0, 0]), 1).is_ok());
    }

    #[test]
    fn ffk_examples() {
        assert!(is_ffk(&fv(&[1, 3, 2]), 2).unwrap().is_ffk());
        match is_ffk(&fv(&[1, 3, 3]), 2).unwrap() {
            FfkVerdict::NotFfk(v) => {
                assert_eq!(v.face, cs(&[1, 4], 2));
                assert_eq!(v.missing, cs(&[4], 2));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(is_ffk(&fv(&[1, 22, 16]), 2).unwrap().is_ffk());
        assert!(!is_ffk_vector(&fv(&[1, 0, 1]), 2).unwrap());
        assert!(is_ffk_vector(&fv(&[1]), 0).unwrap());
        // simplex boundary and the full simplex at d = 3
        assert!(is_ffk_vector(&fv(&[1, 3, 3, 1]), 3).unwrap());
        assert!(is_ffk_vector(&fv(&[1, 3, 3]), 3).unwrap());
    }

    #[test]
    fn ffk_witness_is_properly_colored() {
        let FfkVerdict::Ffk(c) = is_ffk(&fv(&[1, 22, 16]), 2).unwrap() else { panic!() };
        let cc = c.to_colored_complex().unwrap();
        assert_eq!(cc.complex().f_vector(), fv(&[1, 22, 16]));
        let report = verify_coloring(&cc).unwrap();
        assert!(report.proper && report.balanced);
    }

    #[test]
    fn dominates_examples() {
        assert!(dominates(&fv(&[1, 22, 16]), &fv(&[1, 22, 16])));
        assert!(dominates(&fv(&[1, 5, 3]), &fv(&[1, 5, 2])));
        assert!(!dominates(&fv(&[1, 5, 2]), &fv(&[1, 5, 3])));
        assert!(dominates(&fv(&[1, 22, 16]), &fv(&[1, 8])));
        assert!(!dominates(&fv(&[1, 8]), &fv(&[1, 22, 16])));
        assert!(!dominates(&fv(&[0, 8]), &fv(&[0, 1])));
    }

    #[test]
    fn max_next_entry_examples() {
        assert_eq!(max_next_entry(&fv(&[1, 3]), 2).unwrap(), 2);
        assert_eq!(max_next_entry(&fv(&[1, 4]), 2).unwrap(), 4);
        assert_eq!(max_next_entry(&fv(&[1, 3]), 3).unwrap(), 3);
        assert_eq!(max_next_entry(&fv(&[1, 3, 3]), 3).unwrap(), 1);
        assert_eq!(max_next_entry(&fv(&[1, 3]), 1).unwrap(), 0);
        assert_eq!(max_next_entry(&fv(&[1, 0]), 2).unwrap(), 0);
        assert!(max_next_entry(&fv(&[1]), 2).is_err());
    }

    /// Draws a random `d`-FFK vector of full length `d + 1` (possibly with zeros).
    pub(crate) fn random_ffk(d: usize, vertices: u64, rng: &mut impl rand::Rng) -> CountVector {
        let mut f = vec![BigInt::from(1)];
        if d == 0 {
            return CountVector::new(Role::F, f);
        }
        f.push(BigInt::from(rng.gen_range(0..=vertices)));
        while f.len() <= d {
            let prefix = CountVector::new(Role::F, f.clone());
            let top = max_next_entry(&prefix, d).unwrap();
            f.push(BigInt::from(rng.gen_range(0..=top)));
        }
        CountVector::new(Role::F, f)
    }

    fn as_u64s(f: &CountVector) -> Vec<u64> {
        f.entries().iter().map(|x| x.to_u64().unwrap()).collect()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(96))]

        #[test]
        fn fast_closure_matches_brute(d in 1usize..=4, seed in any::<u64>(), raw in prop::collection::vec(0u64..40, 1..=4)) {

            let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
            // half random vectors, half near the boundary
            let f = if seed % 2 == 0 {
                let mut e = vec![1u64];
                e.extend(raw.iter().take(d).copied());
                CountVector::from_ints(Role::F, e)
            } else {
                let mut f = random_ffk(d, 12, &mut rng);
                let entries = as_u64s(&f);
                let k = rng.gen_range(1..entries.len().max(2)).min(entries.len() - 1);
                if k >= 1 {
                    let mut e = entries.clone();
                    e[k] += 1;
                    f = CountVector::from_ints(Role::F, e);
                }
                f
            };
            let fast = ffk_closure(&f, d).unwrap();
            let brute = ffk_closure_brute(&f, d).unwrap();
            prop_assert_eq!(fast.is_none(), brute.is_none(), "f = {}", f);
            if let (Some(a), Some(b)) = (&fast, &brute) {
                prop_assert_eq!(&a.face, &b.face);
            }
        }

        #[test]
        fn random_ffk_vectors_realize(d in 1usize..=4, seed in any::<u64>()) {

            let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
            let f = random_ffk(d, 15, &mut rng);
            let FfkVerdict::Ffk(c) = is_ffk(&f, d).unwrap() else {
                return Err(TestCaseError::fail(format!("{f} rejected")));
            };
            let cc = c.to_colored_complex().unwrap();
            prop_assert_eq!(cc.complex().f_vector(), f.trimmed());
            prop_assert!(verify_coloring(&cc).unwrap().proper);
        }

        #[test]
        fn cone_over_dominated_vectors(d in 1usize..=3, seed in any::<u64>(), parts in 1usize..=3) {

            let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
            let f = random_ffk(d, 10, &mut rng);
            // summands dominated by f: lower each entry then restore closure greedily
            let mut g = CountVector::zeros(Role::F, d + 1);
            for _ in 0..parts {
                let cap = as_u64s(&f);
                let mut e = vec![1u64];
                for k in 1..=d {
                    let top = if k == 1 {
                        cap[1]
                    } else {
                        max_next_entry(&CountVector::from_ints(Role::F, e.clone()), d).unwrap().min(cap[k])
                    };
                    e.push(rng.gen_range(0..=top));
                }
                let part = CountVector::from_ints(Role::F, e);
                prop_assert!(dominates(&f, &part));
                prop_assert!(is_ffk_vector(&part, d).unwrap());
                g += &part;
            }
            let composite = &f + &g.shifted();
            prop_assert!(is_ffk_vector(&composite, d + 1).unwrap(), "f = {}, g = {}", f, g);
        }

        #[test]
        fn cone_over_scaled_vectors(d in 2usize..=4, seed in any::<u64>(), parts in 1usize..=3) {

            let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
            let f = random_ffk(d, 24, &mut rng);
            let cap = as_u64s(&f);
            let mut g = CountVector::zeros(Role::F, d);
            for _ in 0..parts {
                let mut e = vec![1u64];
                for k in 1..d {
                    let bound = cap[k] / (k as u64 + 1);
                    let top = if k == 1 {
                        bound
                    } else {
                        max_next_entry(&CountVector::from_ints(Role::F, e.clone()), d - 1).unwrap().min(bound)
                    };
                    e.push(rng.gen_range(0..=top));
                }
                let part = CountVector::from_ints(Role::F, e);
                prop_assert!(is_ffk_vector(&part, d - 1).unwrap());
                g += &part;
            }
            let composite = &f + &g.shifted();
            prop_assert!(is_ffk_vector(&composite, d).unwrap(), "f = {}, g = {}", f, g);
        }

        #[test]
        fn phi_image_is_subcomplex(d in 2usize..=4, seed in any::<u64>()) {

            let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
            let f = random_ffk(d - 1, 8, &mut rng);
            let small = as_u64s(&f);
            // f' = (1, (k+1) f_k + slack) closed up greedily
            let mut e = vec![1u64];
            for k in 1..=d {
                let want = small.get(k).map(|&x| (k as u64 + 1) * x).unwrap_or(0);
                let top = if k == 1 {
                    want + rng.gen_range(0..3)
                } else {
                    max_next_entry(&CountVector::from_ints(Role::F, e.clone()), d).unwrap()
                };
                prop_assume!(top >= want);
                e.push(rng.gen_range(want..=top));
            }
            let big = CountVector::from_ints(Role::F, e);
            let c_small = compressed_complex(&f, d - 1).unwrap();
            let c_big = compressed_complex(&big, d).unwrap();
            for s in c_small.faces() {
                prop_assert!(c_big.contains(&phi(s)), "{} -> {}", s, phi(s));
            }
        }
    }
}
