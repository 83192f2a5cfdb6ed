//! The serialized balanced witness and its independent re-verification.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use sdgamma_core::complex::verify_coloring;
use sdgamma_core::constructions::BaryWitness;
use sdgamma_core::eulerian::gamma_sd_from_h;
use sdgamma_core::{ColoredComplex, CountVector, Role, SimplicialComplex};

use crate::input::{decimals, json_error, Decimal};
use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VertexColor {
    pub id: usize,
    pub color: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WitnessDocument {
    pub format: u32,
    pub command: String,
    pub h: Vec<Decimal>,
    pub gamma: Vec<Decimal>,
    /// Number of colors.
    pub colors: usize,
    pub closure: String,
    pub vertices: Vec<VertexColor>,
    pub facets: Vec<Vec<usize>>,
}

impl WitnessDocument {
    pub fn from_witness(w: &BaryWitness) -> Self {
        let complex = w.colored.complex();
        let vertices = w.colored.coloring().iter().map(|(&id, &color)| VertexColor { id, color }).collect();
        let facets = if complex.facets().iter().all(|f| f.is_empty()) {
            Vec::new()
        } else {
            complex.facets().iter().map(|f| f.vertices().to_vec()).collect()
        };
        WitnessDocument {
            format: 1,
            command: "witness".into(),
            h: decimals(&w.h),
            gamma: decimals(&w.gamma),
            colors: w.d,
            closure: "pass".into(),
            vertices,
            facets,
        }
    }
}

pub fn parse_witness(source: &str, text: &str) -> Result<WitnessDocument, CliError> {
    let doc: WitnessDocument = serde_json::from_str(text).map_err(|e| json_error(source, &e))?;
    if doc.format != 1 || doc.command != "witness" {
        return Err(CliError::Input(format!("{source}: not a format-1 witness document")));
    }
    Ok(doc)
}

/// Rebuilds the complex from its facets and checks, without trusting any
/// stored field, that it is properly colored and that its f-vector is
/// `γ(sd)` of the stored h-vector.
pub fn verify_witness(doc: &WitnessDocument) -> Result<Vec<String>, CliError> {
    let input = |e: sdgamma_core::Error| CliError::Input(e.to_string());
    let h = CountVector::new(Role::H, doc.h.iter().map(|d| d.0.clone()).collect());
    let stored = CountVector::new(Role::Gamma, doc.gamma.iter().map(|d| d.0.clone()).collect());
    let gamma = gamma_sd_from_h(&h).map_err(input)?;
    let mut failures = Vec::new();
    if gamma != stored {
        failures.push(format!("stored gamma {stored} differs from gamma(sd) = {gamma}"));
    }
    let complex = SimplicialComplex::from_facets(doc.facets.iter().cloned()).map_err(input)?;
    let coloring: BTreeMap<usize, usize> = doc.vertices.iter().map(|v| (v.id, v.color)).collect();
    if coloring.len() != doc.vertices.len() {
        failures.push("a vertex is listed twice".into());
    }
    if let Some(v) = coloring.keys().find(|v| !complex.vertices().contains(v)) {
        failures.push(format!("vertex {v} lies in no facet"));
    }
    let colored = ColoredComplex::new(complex, coloring, doc.colors);
    match verify_coloring(&colored) {
        Ok(r) if r.proper => {}
        Ok(r) => match r.violation {
            Some((face, c)) => failures.push(format!("facet {:?} repeats or misuses color {c}", face.vertices())),
            None => failures.push("coloring is not proper".into()),
        },
        Err(e) => failures.push(e.to_string()),
    }
    if let Some(c) = doc.vertices.iter().map(|v| v.color).find(|&c| c == 0 || c > doc.colors) {
        failures.push(format!("color {c} is outside 1..={}", doc.colors));
    }
    let f = colored.complex().f_vector();
    if f != gamma.clone().with_role(Role::F) {
        failures.push(format!("f-vector {f} differs from gamma(sd) = {gamma}"));
    }
    Ok(failures)
}
