//! The balanced witness for `γ(sd Δ)`: the compressed complex `F_d(γ)` with
//! its residue coloring, where `d + 1` is the length of `γ`.

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::complex::{verify_coloring, ColoredComplex};
use crate::error::{Error, Result};
use crate::eulerian::gamma_sd_from_h;
use crate::ffk::{compressed_complex, ffk_closure, CompressedComplex};
use crate::transforms::{CountVector, Role};

#[derive(Clone, Debug)]
pub struct BaryWitness {
    pub h: CountVector,
    pub gamma: CountVector,
    /// Number of colors; `gamma.len() - 1`.
    pub d: usize,
    pub compressed: CompressedComplex,
    pub colored: ColoredComplex,
}

fn gamma_and_modulus(h: &CountVector) -> Result<(CountVector, usize)> {
    if h.get(0) != BigInt::from(1) {
        return Err(Error::HypothesisViolation(format!("{h}: the entry h_0 must be 1")));
    }
    let gamma = gamma_sd_from_h(h)?;
    let d = gamma.len() - 1;
    if let Some(v) = ffk_closure(&gamma, d)? {
        return Err(Error::TheoremRefuted {
            gamma: gamma.to_string(),
            face: v.face.elements().to_vec(),
            missing: v.missing.elements().to_vec(),
        });
    }
    Ok((gamma, d))
}

/// `γ(sd Δ)` for a symmetric, nonnegative `h` with `h_0 = 1`, after the closure
/// test; faces are not materialized.
pub fn theorem_bary_check(h: &CountVector) -> Result<CountVector> {
    gamma_and_modulus(h).map(|(g, _)| g)
}

/// Materializes and checks the witness: closure, coloring and f-vector.
pub fn theorem_bary_witness(h: &CountVector) -> Result<BaryWitness> {
    let (gamma, d) = gamma_and_modulus(h)?;
    let compressed = compressed_complex(&gamma, d)?;
    let colored = compressed.to_colored_complex()?;
    if !verify_coloring(&colored)?.proper {
        return Err(Error::HypothesisViolation("residue coloring is not proper".into()));
    }
    if colored.complex().f_vector() != gamma {
        return Err(Error::HypothesisViolation(format!(
            "witness has f-vector {}, expected {gamma}",
            colored.complex().f_vector()
        )));
    }
    Ok(BaryWitness { h: h.clone().with_role(Role::H), gamma, d, compressed, colored })
}

/// All symmetric `h` of length `len` with `h_0 = 1` and entries in `0..=max_entry`.
pub fn symmetric_h_vectors(len: usize, max_entry: u32) -> Vec<CountVector> {
    if len == 0 {
        return Vec::new();
    }
    let free = (len - 1) / 2;
    let base = max_entry as u64 + 1;
    let total = base.pow(free as u32);
    (0..total)
        .map(|mut code| {
            let mut h = vec![0u64; len];
            h[0] = 1;
            h[len - 1] = 1;
            for i in 1..=free {
                let v = code % base;
                code /= base;
                h[i] = v;
                h[len - 1 - i] = v;
            }
            CountVector::from_ints(Role::H, h)
        })
        .collect()
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SweepReport {
    pub checked: usize,
    /// `(h, error)` for every input that failed.
    pub failures: Vec<(CountVector, Error)>,
}

impl SweepReport {
    pub fn all_pass(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Runs the pipeline on every symmetric `h` of length `1..=max_len` with
/// entries up to `max_entry`; `materialize` builds and verifies each witness.
pub fn sweep_symmetric_h(max_len: usize, max_entry: u32, materialize: bool) -> SweepReport {
    let inputs: Vec<CountVector> = (1..=max_len).flat_map(|len| symmetric_h_vectors(len, max_entry)).collect();
    let mut failures: Vec<(CountVector, Error)> = inputs
        .par_iter()
        .filter_map(|h| {
            let r = if materialize { theorem_bary_witness(h).map(|_| ()) } else { theorem_bary_check(h).map(|_| ()) };
            r.err().map(|e| (h.clone(), e))
        })
        .collect();
    failures.sort_by(|a, b| a.0.entries().cmp(b.0.entries()));
    SweepReport { checked: inputs.len(), failures }
}
