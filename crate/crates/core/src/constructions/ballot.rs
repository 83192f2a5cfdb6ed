//! Ballot paths and the ballot complex `𝔅(k)`, whose faces are the sets of
//! reversed north-step positions.

use std::fmt;

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Step {
    N,
    E,
}

/// A word over `{N, E}` in which every prefix has at least as many `E` as `N`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BallotPath(Vec<Step>);

impl BallotPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut height = 0i64;
        for (i, s) in steps.iter().enumerate() {
            height += if *s == Step::E { 1 } else { -1 };
            if height < 0 {
                return Err(Error::InvalidVector(format!("prefix of length {} has more N than E steps", i + 1)));
            }
        }
        Ok(Self(steps))
    }

    pub fn parse(word: &str) -> Result<Self> {
        let steps = word
            .chars()
            .map(|c| match c {
                'N' | 'n' => Ok(Step::N),
                'E' | 'e' => Ok(Step::E),
                other => Err(Error::InvalidVector(format!("unexpected step {other:?}"))),
            })
            .collect::<Result<_>>()?;
        Self::new(steps)
    }

    pub fn steps(&self) -> &[Step] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `S(p) = { k + 1 - i : p_i = N }` with 1-based `i`.
    pub fn north_set(&self) -> Face {
        let k = self.0.len();
        Face::new(
            self.0
                .iter()
                .enumerate()
                .filter(|(_, s)| **s == Step::N)
                .map(|(i, _)| k - i),
        )
        .expect("positions are distinct")
    }
}

impl fmt::Display for BallotPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            f.write_str(if *s == Step::N { "N" } else { "E" })?;
        }
        Ok(())
    }
}

/// All ballot paths of length `k`, in lexicographic order with `N < E`.
pub fn ballot_paths(k: usize) -> Vec<BallotPath> {
    fn rec(k: usize, height: usize, cur: &mut Vec<Step>, out: &mut Vec<BallotPath>) {
        if cur.len() == k {
            out.push(BallotPath(cur.clone()));
            return;
        }
        if height > 0 {
            cur.push(Step::N);
            rec(k, height - 1, cur, out);
            cur.pop();
        }
        cur.push(Step::E);
        rec(k, height + 1, cur, out);
        cur.pop();
    }
    let mut out = Vec::new();
    rec(k, 0, &mut Vec::with_capacity(k), &mut out);
    out
}

/// `𝔅(k)` on the vertex set `1..k`.
pub fn ballot_complex(k: usize) -> SimplicialComplex {
    SimplicialComplex::from_faces(ballot_paths(k).iter().map(BallotPath::north_set))
        .expect("north sets of ballot paths are closed under subsets")
}
