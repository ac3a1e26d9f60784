//! Distance Laplacian spectra of small connected graphs, and exhaustive
//! numerical checks that the kite `Ki_{n,3}` (a triangle with a pendant path)
//! uniquely maximizes the distance Laplacian spectral radius among unicyclic
//! graphs of a given order.
//!
//! Module map:
//! - [`graph`], [`graph6`], [`canon`]: simple graphs, interchange format,
//!   canonical certificates.
//! - [`families`]: paths, cycles, kites, `H_n`, 4-cycle spiders, pendant-path
//!   attachments.
//! - [`spectra`], [`jacobi`]: distances, `L(G) = Tr(G) - D(G)`, eigenpairs.
//! - [`enumeration`]: unicyclic graphs up to isomorphism.
//! - [`lemmas`]: pass/fail/inconclusive verdicts with margins.

use std::sync::OnceLock;

pub mod canon;
pub mod enumeration;
pub mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod jacobi;
pub mod lemmas;
pub mod report;
pub mod spectra;

pub use canon::{are_isomorphic, canonical_form, CanonicalForm};
pub use error::{Error, Result};
pub use families::{FamilySpec, VertexRoleMap};
pub use graph::{Graph, Vertex};
pub use graph6::{decode_graph6, encode_graph6};
pub use lemmas::{LemmaId, LemmaLab, LemmaVerdict, Status, Tolerances};
pub use spectra::{DistanceMatrix, Spectrum, SymmetricMatrix};

pub const DEFAULT_CEILING: usize = 12;
pub const CEILING_ENV: &str = "DLSPEC_CEILING";

/// Largest order accepted by canonicalization and enumeration: `DLSPEC_CEILING`
/// if set to a positive integer (read once per process), else 12.
pub fn ceiling() -> usize {
    static CEILING: OnceLock<usize> = OnceLock::new();
    *CEILING.get_or_init(|| {
        std::env::var(CEILING_ENV)
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .filter(|c| (1..=graph6::MAX_ORDER).contains(c))
            .unwrap_or(DEFAULT_CEILING)
    })
}
