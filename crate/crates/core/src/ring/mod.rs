//! Finite commutative rings: symbolic specs, compiled operation tables, and the
//! unit-group data the graph builders consume.

pub mod canon;
pub mod catalog;
pub mod finite;
pub mod mult;
mod poly;
pub mod spec;

pub use canon::{canonicalize, CanonicalForm};
pub use catalog::LocalRing;
pub use finite::{compile_ring, compile_ring_with_max, FiniteRing, DEFAULT_MAX_ORDER};
pub use mult::{inverse_closed_subsets, subgroup_closure, validate_s, MultiplicativeData};
pub use spec::{ParseError, Poly, RingSpec};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RingError {
    #[error("parse error {0}")]
    Parse(ParseError),
    #[error("polynomial {0} is reducible")]
    NonIrreduciblePoly(String),
    #[error("polynomial {0} is not monic")]
    NonMonicPoly(String),
    #[error("ring order {order} exceeds the maximum {max}")]
    OrderTooLarge { order: u64, max: u64 },
    #[error("GF({0}): characteristic is not prime")]
    NotPrimePower(u64),
    #[error("malformed ring: {0}")]
    Malformed(String),
    #[error("cannot read element {0:?}")]
    BadElement(String),
    #[error("element {0} is not a unit")]
    ElementNotUnit(usize),
    #[error("S is empty")]
    EmptyS,
    #[error("element {0} of S is not in G")]
    SNotInG(usize),
    #[error("S is not closed under inverses ({0} has its inverse missing)")]
    SNotInverseClosed(usize),
    #[error("G is not a subgroup of the unit group")]
    GNotSubgroup,
    #[error("local factor of order {0} does not match any catalog ring")]
    NotInCatalog(usize),
}
