//! Barred permutations and the complex `Γ(n)` whose faces are the permutations
//! of `1..=n` with no double descent and no final descent.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use rayon::prelude::*;

use crate::complex::{ColoredComplex, Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::eulerian::{descent_positions, gamma, ENUMERATION_CAP};
use crate::transforms::CountVector;

/// A permutation split into increasing blocks at its descents.
///
/// Every block after the first has at least two elements and
/// `max B_i > min B_{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BarredPermutation {
    blocks: Vec<Vec<usize>>,
}

fn in_hat_s(word: &[usize]) -> bool {
    let n = word.len();
    if n >= 2 && word[n - 2] > word[n - 1] {
        return false;
    }
    !word.windows(3).any(|w| w[0] > w[1] && w[1] > w[2])
}

impl BarredPermutation {
    pub fn new(blocks: Vec<Vec<usize>>) -> Result<Self> {
        let word: Vec<usize> = blocks.iter().flatten().copied().collect();
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &x in &word {
            if x == 0 || x > n || seen[x] {
                return Err(Error::InvalidPermutation { n, word });
            }
            seen[x] = true;
        }
        let violation = |why: &str| Error::HypothesisViolation(format!("blocks {blocks:?}: {why}"));
        if blocks.iter().any(|b| b.is_empty() || b.windows(2).any(|w| w[0] > w[1])) {
            return Err(violation("blocks must be nonempty and increasing"));
        }
        if blocks.iter().skip(1).any(|b| b.len() < 2) {
            return Err(violation("only the first block may be a singleton"));
        }
        if blocks.windows(2).any(|w| w[0].last() < w[1].first()) {
            return Err(violation("consecutive blocks need max B_i > min B_(i+1)"));
        }
        Ok(Self { blocks })
    }

    /// Splits `word` at its descents; fails outside `Ŝ_n`.
    pub fn from_word(word: &[usize]) -> Result<Self> {
        crate::eulerian::Permutation::new(word.to_vec())?;
        if !in_hat_s(word) {
            return Err(Error::HypothesisViolation(format!(
                "{word:?} has a double descent or a final descent"
            )));
        }
        Ok(Self::split_unchecked(word))
    }

    fn split_unchecked(word: &[usize]) -> Self {
        let mut blocks = vec![Vec::new()];
        for (i, &x) in word.iter().enumerate() {
            if i > 0 && word[i - 1] > x {
                blocks.push(Vec::new());
            }
            blocks.last_mut().expect("nonempty").push(x);
        }
        if word.is_empty() {
            blocks.clear();
        }
        Self { blocks }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn word(&self) -> Vec<usize> {
        self.blocks.iter().flatten().copied().collect()
    }

    pub fn n(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    /// Number of bars, which equals the number of descents.
    pub fn bars(&self) -> usize {
        self.blocks.len().saturating_sub(1)
    }

    /// 1-based descent positions (the bar positions).
    pub fn descent_positions(&self) -> Vec<usize> {
        self.blocks
            .iter()
            .scan(0, |acc, b| {
                *acc += b.len();
                Some(*acc)
            })
            .take(self.bars())
            .collect()
    }

    /// `{ ⌈i/2⌉ : i a descent }`.
    pub fn color_set(&self) -> Vec<usize> {
        self.descent_positions().into_iter().map(|i| i.div_ceil(2)).collect()
    }

    /// The one-bar element obtained by merging the blocks on each side of bar `t`
    /// (`1 <= t <= bars`).
    pub fn vertex_at_bar(&self, t: usize) -> BarredPermutation {
        assert!(t >= 1 && t <= self.bars(), "bar index out of range");
        let left: Vec<usize> = self.blocks[..t].iter().flatten().copied().sorted().collect();
        let right: Vec<usize> = self.blocks[t..].iter().flatten().copied().sorted().collect();
        BarredPermutation { blocks: vec![left, right] }
    }

    /// Inserts `n + 1` at the end of block `t` (0-based).
    pub fn insert_top(&self, t: usize) -> BarredPermutation {
        let top = self.n() + 1;
        let mut blocks = self.blocks.clone();
        if blocks.is_empty() {
            blocks.push(Vec::new());
        }
        blocks[t].push(top);
        BarredPermutation { blocks }
    }
}

impl fmt::Display for BarredPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.n() >= 10 { "," } else { "" };
        let s = self.blocks.iter().map(|b| b.iter().join(sep)).join("|");
        f.write_str(&s)
    }
}

/// All of `Ŝ_n`, sorted by word.
pub fn hat_s(n: usize) -> Result<Vec<BarredPermutation>> {
    if n > ENUMERATION_CAP {
        return Err(Error::CapacityExceeded { what: "n", value: n, cap: ENUMERATION_CAP });
    }
    if n == 0 {
        return Ok(vec![BarredPermutation { blocks: Vec::new() }]);
    }
    let mut out: Vec<BarredPermutation> = (1..=n)
        .into_par_iter()
        .flat_map_iter(|first| {
            let rest: Vec<usize> = (1..=n).filter(|&x| x != first).collect();
            rest.into_iter()
                .permutations(n - 1)
                .map(move |tail| {
                    let mut w = Vec::with_capacity(n);
                    w.push(first);
                    w.extend(tail);
                    w
                })
                .filter(|w| in_hat_s(w))
                .map(|w| BarredPermutation::split_unchecked(&w))
        })
        .collect();
    out.sort_by_key(BarredPermutation::word);
    Ok(out)
}

/// `Γ(n)` with its vertex labels and the face of each element of `Ŝ_n`.
#[derive(Clone, Debug)]
pub struct GammaHatComplex {
    pub n: usize,
    pub colored: ColoredComplex,
    /// `vertices[v]` is the one-bar element with id `v`.
    pub vertices: Vec<BarredPermutation>,
    pub faces: Vec<(BarredPermutation, Face)>,
}

impl GammaHatComplex {
    pub fn f_vector(&self) -> CountVector {
        self.colored.complex().f_vector()
    }
}

/// Builds `Γ(n)`: vertices are the one-bar elements, a face contains the vertex
/// obtained at each of its bars, and vertex `B_1 | B_2` has color `⌈|B_1|/2⌉`.
pub fn gamma_hat_complex(n: usize) -> Result<GammaHatComplex> {
    if n == 0 {
        return Err(Error::IndexOutOfRange { n, j: 0 });
    }
    let elements = hat_s(n)?;
    let vertices: Vec<BarredPermutation> = elements.iter().filter(|w| w.bars() == 1).cloned().collect();
    let ids: HashMap<&BarredPermutation, usize> = vertices.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let faces: Vec<(BarredPermutation, Face)> = elements
        .iter()
        .map(|w| {
            let face = Face::new((1..=w.bars()).map(|t| ids[&w.vertex_at_bar(t)])).expect("bars give distinct vertices");
            (w.clone(), face)
        })
        .collect();
    let complex = SimplicialComplex::from_faces(faces.iter().map(|(_, f)| f.clone()))?;
    if complex.f_vector().entries().iter().sum::<BigInt>() != BigInt::from(faces.len()) {
        return Err(Error::HypothesisViolation("two elements of Ŝ_n share a vertex set".into()));
    }
    let coloring: BTreeMap<usize, usize> = vertices
        .iter()
        .enumerate()
        .map(|(i, v)| (i, v.blocks[0].len().div_ceil(2)))
        .collect();
    let colored = ColoredComplex::new(complex, coloring, (n - 1) / 2);
    Ok(GammaHatComplex { n, colored, vertices, faces })
}

/// One instance of `(i+1) γ^{(n,1)}_i <= γ^{(n+1,1)}_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GineqRow {
    pub n: usize,
    pub i: usize,
    pub lhs: BigInt,
    pub rhs: BigInt,
    pub holds: bool,
}

/// Counts for the map inserting `n` at the end of a block of a face of `Γ(n-1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InsertionCheck {
    pub n: usize,
    pub i: usize,
    /// `(i+1) f_{i}(Γ(n-1))`.
    pub expected: usize,
    /// Distinct images that are faces of `Γ(n)` with `i` bars.
    pub images: usize,
    pub injective: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GineqReport {
    pub rows: Vec<GineqRow>,
    pub insertion: Vec<InsertionCheck>,
}

impl GineqReport {
    pub fn all_hold(&self) -> bool {
        self.rows.iter().all(|r| r.holds) && self.insertion.iter().all(|c| c.injective)
    }
}

/// Checks the inequality for `n <= n_max`, `1 <= i <= ⌊n/2⌋ - 1`. With
/// `insertion_cap = Some(c)` the insertion map is also counted for `n - 1 <= c`.
pub fn verify_gineq(n_max: usize, insertion_cap: Option<usize>) -> Result<GineqReport> {
    let mut report = GineqReport::default();
    for n in 1..=n_max {
        let small = gamma(n, 1)?;
        let big = gamma(n + 1, 1)?;
        for i in 1..(n / 2) {
            let lhs = BigInt::from(i + 1) * small.get(i);
            let rhs = big.get(i);
            let holds = lhs <= rhs;
            report.rows.push(GineqRow { n, i, lhs, rhs, holds });
        }
        if n >= 2 && insertion_cap.is_some_and(|c| n - 1 <= c.min(ENUMERATION_CAP)) {
            report.insertion.extend(insertion_counts(n)?);
        }
    }
    Ok(report)
}

fn insertion_counts(n: usize) -> Result<Vec<InsertionCheck>> {
    let faces = hat_s(n - 1)?;
    let by_bars = faces.iter().into_group_map_by(|w| w.bars());
    let mut out = Vec::new();
    for i in 1..(n / 2) {
        let group = by_bars.get(&i).map(Vec::as_slice).unwrap_or(&[]);
        let mut images = std::collections::HashSet::new();
        let mut valid = true;
        for w in group {
            for t in 0..=i {
                let v = w.insert_top(t);
                valid &= in_hat_s(&v.word()) && descent_positions(&v.word()).len() == i;
                images.insert(v);
            }
        }
        let expected = (i + 1) * group.len();
        out.push(InsertionCheck { n, i, expected, images: images.len(), injective: valid && images.len() == expected });
    }
    Ok(out)
}
