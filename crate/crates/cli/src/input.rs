//! Input documents and inline arguments.
//!
//! A document is a JSON object holding exactly one of `"facets"` (lists of
//! vertex ids) or `"h"` (decimal strings, or plain integers when small).

use std::fmt;
use std::io::Read;
use std::path::Path;

use num_bigint::BigInt;
use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize, Serializer};

use sdgamma_core::{CountVector, Role, SimplicialComplex};

use crate::CliError;

/// An arbitrary-precision integer written as a decimal string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decimal(pub BigInt);

impl Serialize for Decimal {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for Decimal {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct DecimalVisitor;

        impl Visitor<'_> for DecimalVisitor {
            type Value = Decimal;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an integer or a decimal string")
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<Decimal, E> {
                parse_integer(v).map(Decimal).ok_or_else(|| E::custom(format!("invalid integer {v:?}")))
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Decimal, E> {
                Ok(Decimal(v.into()))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Decimal, E> {
                Ok(Decimal(v.into()))
            }
        }

        d.deserialize_any(DecimalVisitor)
    }
}

/// Decimal digits with an optional leading `-`; no `+`, no blanks.
fn parse_integer(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

pub fn decimals(v: &CountVector) -> Vec<Decimal> {
    v.entries().iter().cloned().map(Decimal).collect()
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct InputDocument {
    #[serde(default)]
    format: Option<u32>,
    #[serde(default)]
    facets: Option<Vec<Vec<usize>>>,
    #[serde(default)]
    h: Option<Vec<Decimal>>,
}

/// A parsed input: either a complex or a bare h-vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Input {
    Complex(SimplicialComplex),
    H(CountVector),
}

impl Input {
    /// The h-vector, computed from the complex when one was given.
    pub fn h_vector(&self) -> CountVector {
        match self {
            Input::Complex(c) => c.h_vector(),
            Input::H(h) => h.clone(),
        }
    }
}

pub(crate) fn json_error(source: &str, e: &serde_json::Error) -> CliError {
    let message = e.to_string();
    // serde_json appends " at line L column C"; it is carried separately
    let message = message.split(" at line ").next().unwrap_or(&message).to_string();
    CliError::Parse { origin: source.to_string(), line: e.line(), column: e.column(), message }
}

pub(crate) fn read_source(path: &str) -> Result<(String, String), CliError> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text).map_err(|e| CliError::Input(format!("<stdin>: {e}")))?;
        Ok(("<stdin>".to_string(), text))
    } else {
        let text = std::fs::read_to_string(Path::new(path)).map_err(|e| CliError::Input(format!("{path}: {e}")))?;
        Ok((path.to_string(), text))
    }
}

fn facets_to_complex(source: &str, facets: Vec<Vec<usize>>) -> Result<SimplicialComplex, CliError> {
    SimplicialComplex::from_facets(facets).map_err(|e| CliError::Input(format!("{source}: {e}")))
}

fn h_to_vector(source: &str, h: Vec<BigInt>) -> Result<CountVector, CliError> {
    if h.is_empty() {
        return Err(CliError::Input(format!("{source}: the h-vector is empty")));
    }
    Ok(CountVector::new(Role::H, h))
}

/// Parses a document; `source` names it in error messages.
pub fn parse_document(source: &str, text: &str) -> Result<Input, CliError> {
    let doc: InputDocument = serde_json::from_str(text).map_err(|e| json_error(source, &e))?;
    if let Some(v) = doc.format {
        if v != 1 {
            return Err(CliError::Input(format!("{source}: unsupported format {v}")));
        }
    }
    match (doc.facets, doc.h) {
        (Some(facets), None) => facets_to_complex(source, facets).map(Input::Complex),
        (None, Some(h)) => h_to_vector(source, h.into_iter().map(|d| d.0).collect()).map(Input::H),
        _ => Err(CliError::Input(format!("{source}: expected exactly one of \"facets\" or \"h\""))),
    }
}

/// Comma-separated integers, as in `--h 1,5,10,10,5,1`. Errors point at the
/// offending entry (line 1, 1-based column).
pub fn parse_inline_vector(source: &str, text: &str) -> Result<Vec<BigInt>, CliError> {
    let mut out = Vec::new();
    let mut offset = 0;
    for part in text.split(',') {
        let lead = part.len() - part.trim_start().len();
        let token = part.trim();
        match parse_integer(token) {
            Some(v) => out.push(v),
            None => {
                let column = text[..offset + lead].chars().count() + 1;
                let message = if token.is_empty() { "missing integer".into() } else { format!("invalid integer {token:?}") };
                return Err(CliError::Parse { origin: source.to_string(), line: 1, column, message });
            }
        }
        offset += part.len() + 1;
    }
    Ok(out)
}

pub fn parse_inline_h(text: &str) -> Result<Input, CliError> {
    h_to_vector("--h", parse_inline_vector("--h", text)?).map(Input::H)
}

/// A JSON list of facets, as in `--facets-inline "[[1,2],[2,3],[1,3]]"`.
pub fn parse_inline_facets(text: &str) -> Result<Input, CliError> {
    let facets: Vec<Vec<usize>> = serde_json::from_str(text).map_err(|e| json_error("--facets-inline", &e))?;
    facets_to_complex("--facets-inline", facets).map(Input::Complex)
}
