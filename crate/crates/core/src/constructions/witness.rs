//! Complexes realizing the h- and g-vectors determined by a gamma-vector:
//! a compressed complex for `γ` joined, face by face, with a simplex or a
//! ballot complex whose size shrinks by two per vertex of the face.

use std::collections::BTreeMap;

use itertools::Itertools;

use crate::complex::{ColoredComplex, Face, SimplicialComplex};
use crate::constructions::ballot::ballot_complex;
use crate::error::{Error, Result};
use crate::ffk::{compressed_complex, ffk_closure, CompressedComplex};
use crate::transforms::CountVector;

/// `F_{⌊d/2⌋}(γ)` after checking that it is a complex.
pub fn gamma_compression(gamma: &CountVector, d: usize) -> Result<CompressedComplex> {
    let modulus = d / 2;
    let hypothesis = |e: Error| Error::HypothesisViolation(format!("{gamma} is not a {modulus}-FFK-vector: {e}"));
    match ffk_closure(gamma, modulus).map_err(hypothesis)? {
        Some(v) => Err(Error::HypothesisViolation(format!(
            "{gamma} is not a {modulus}-FFK-vector: face {} lacks {}",
            v.face, v.missing
        ))),
        None => compressed_complex(gamma, modulus),
    }
}

fn fresh_base(c: &CompressedComplex) -> usize {
    c.faces_of_size(1).last().map(|s| s.elements()[0] as usize).unwrap_or(0)
}

/// `{ F ∪ G : F ∈ F(γ), G ⊆ [d - 2|F|] }` with the simplex vertices numbered
/// after the largest vertex of `F(γ)`. Its f-vector is the h-vector of `γ`.
pub fn h_witness(gamma: &CountVector, d: usize) -> Result<SimplicialComplex> {
    let c = gamma_compression(gamma, d)?;
    let base = fresh_base(&c);
    let mut faces = Vec::new();
    for s in c.faces() {
        let free = d - 2 * s.len();
        let face = s.to_face();
        for g in (base + 1..=base + free).powerset() {
            faces.push(face.union_disjoint(&Face::from_sorted(g)));
        }
    }
    SimplicialComplex::from_faces(faces)
}

/// `{ F ∪ G : F ∈ F(γ), G ∈ 𝔅(d - 2|F|) }` with ballot vertices numbered after
/// the largest vertex of `F(γ)`. Its f-vector is the g-vector of `γ`.
pub fn g_witness(gamma: &CountVector, d: usize) -> Result<SimplicialComplex> {
    let c = gamma_compression(gamma, d)?;
    let base = fresh_base(&c);
    let ballots: Vec<Vec<Face>> = (0..=d).map(|k| ballot_complex(k).faces()).collect();
    let mut faces = Vec::new();
    for s in c.faces() {
        let face = s.to_face();
        for g in &ballots[d - 2 * s.len()] {
            let shifted = Face::from_sorted(g.vertices().iter().map(|v| v + base).collect());
            faces.push(face.union_disjoint(&shifted));
        }
    }
    SimplicialComplex::from_faces(faces)
}

/// `{ F ∪ G : F ∈ Δ, G ⊆ [d] \ (c(F) ∪ d(F)) }` where `d(F)` holds the first
/// `|F|` colors of `[d]` missing from `c(F)`, and vertex `i ∈ [d]` has color `i`.
///
/// Needs colors in `[d]`, `2|F| <= d` for every face, and no vertex of `cc`
/// in `1..=d`.
pub fn balanced_h_witness(cc: &ColoredComplex, d: usize) -> Result<ColoredComplex> {
    let report = cc.verify()?;
    if !report.proper {
        return Err(Error::HypothesisViolation("the input coloring is not proper".into()));
    }
    if let Some(&c) = cc.coloring().values().find(|&&c| c > d) {
        return Err(Error::ColorOutOfRange { color: c, colors: d });
    }
    if let Some(&v) = cc.complex().vertices().iter().find(|&&v| (1..=d).contains(&v)) {
        return Err(Error::RelabelRequired { vertex: v, reserved: d });
    }
    let mut faces = Vec::new();
    for face in cc.complex().faces() {
        if 2 * face.len() > d {
            return Err(Error::HypothesisViolation(format!(
                "face {:?} has more than d/2 = {} vertices",
                face.vertices(),
                d / 2
            )));
        }
        let used = cc.face_colors(&face)?;
        let mut blocked = vec![false; d + 1];
        for &c in &used {
            blocked[c] = true;
        }
        // d(F): the first |F| colors missing from c(F)
        for c in (1..=d).filter(|&c| !blocked[c]).take(face.len()).collect::<Vec<_>>() {
            blocked[c] = true;
        }
        let free: Vec<usize> = (1..=d).filter(|&c| !blocked[c]).collect();
        for g in free.into_iter().powerset() {
            faces.push(face.union_disjoint(&Face::from_sorted(g)));
        }
    }
    let complex = SimplicialComplex::from_faces(faces)?;
    let mut coloring: BTreeMap<usize, usize> = cc.coloring().clone();
    coloring.extend((1..=d).map(|i| (i, i)));
    coloring.retain(|v, _| complex.vertices().contains(v));
    let out = ColoredComplex::new(complex, coloring, d);
    out.verify()?;
    Ok(out)
}

/// [`balanced_h_witness`] applied to `F_{⌊d/2⌋}(γ)` shifted past `1..=d`.
pub fn balanced_h_witness_from_gamma(gamma: &CountVector, d: usize) -> Result<ColoredComplex> {
    let c = gamma_compression(gamma, d)?;
    let cc = c.to_colored_complex()?.shift_vertices(d);
    balanced_h_witness(&cc, d)
}
