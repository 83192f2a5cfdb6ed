//! Exact combinatorics of simplicial complexes under barycentric subdivision.
//!
//! The crate computes f-, h-, g- and gamma-vectors with arbitrary-precision
//! integers, tabulates restricted Eulerian numbers, decides colored
//! (Frankl–Füredi–Kalai) realizability through colored revlex compression,
//! and builds explicit balanced complexes whose f-vector is the gamma-vector
//! of a barycentric subdivision.
//!
//! Modules:
//! - [`transforms`]: integer polynomials and the f/h/g/gamma transforms.
//! - [`complex`]: abstract simplicial complexes, subdivision, joins, colorings.
//! - [`eulerian`]: restricted Eulerian tables and their gamma families.
//! - [`ffk`]: colored subsets, revlex ranking and compressed complexes.
//! - [`constructions`]: witness complexes and goodness certificates.

pub mod complex;
pub mod constructions;
pub mod error;
pub mod eulerian;
pub mod ffk;
pub mod transforms;

pub use complex::{ColoredComplex, ColoringReport, Face, SimplicialComplex};
pub use error::{Error, Result};
pub use transforms::{CountVector, IntPolynomial, Role};
