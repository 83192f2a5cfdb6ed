//! Explicit complexes and proof objects: `Γ(n)`, the ballot complex, witnesses
//! for h- and g-vectors determined by a gamma-vector, goodness certificates,
//! and the balanced witness for `γ(sd Δ)`.

pub mod ballot;
pub mod barred;
pub mod goodness;
pub mod theorem;
pub mod witness;

pub use ballot::{ballot_complex, ballot_paths, BallotPath, Step};
pub use barred::{gamma_hat_complex, hat_s, verify_gineq, BarredPermutation, GammaHatComplex, GineqReport};
pub use goodness::{
    all_certificates, goodness_certificate, verify_certificate, CertificateReport, GoodKind, GoodnessCertificate,
    Leaf, LeafOrigin, LeafRule, ProofCase,
};
pub use theorem::{sweep_symmetric_h, symmetric_h_vectors, theorem_bary_check, theorem_bary_witness, BaryWitness};
pub use witness::{balanced_h_witness, balanced_h_witness_from_gamma, g_witness, h_witness};
