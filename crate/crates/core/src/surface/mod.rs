//! Surface embeddings: face tracing, certificates, exact embedding search,
//! planarity, crosscap bounds and the crosscap number itself.

mod bounds;
mod cert;
mod crosscap;
mod planarity;
mod scheme;
mod search;

pub use bounds::{
    crosscap_lower_bound_edges, edge_bound, kmn_crosscap, kn_crosscap, min_degree_consistency, stahl_compose,
};
pub use cert::{
    bfs_forest, fingerprint, verify_certificate, CertificateMismatch, CertificateParseError, EmbeddingCertificate,
    Fingerprint,
};
pub use crosscap::{
    crosscap_exact, orientable_genus, ComponentCrosscap, CrosscapResult, GenusResult, LowerWitness, UpperWitness,
};
pub use planarity::{planarity, Planarity};
pub use scheme::{trace_faces, FaceTrace, SchemeError, SignedScheme};
pub use search::{search_embedding, EmbeddingOutcome, Orientability, SearchConfig, SearchReport};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SurfaceError {
    #[error("graph must be connected")]
    Disconnected,
    #[error("need at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("component values must be exact")]
    InexactInput,
    #[error("planarity deciders disagree: {0}")]
    InternalDisagreement(String),
    #[error("search budget exhausted")]
    BudgetExceeded,
    #[error("internal error: {0}")]
    Internal(String),
}
