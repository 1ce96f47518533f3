//! Unit graphs, unitary Cayley graphs, generalized `Γ(R,G,S)` graphs and co-maximal
//! graphs of finite commutative rings, with exact planarity and crosscap-number
//! computation backed by checkable embedding certificates.

pub mod classifier;
pub mod graph;
pub mod obstruction;
pub mod reproduce;
pub mod ring;
pub mod surface;
