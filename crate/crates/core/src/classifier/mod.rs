//! Planar and projective classification of ring graphs: closed-form rules,
//! the computed class with witnesses, and the sweep comparing the two.

mod audit;
mod theory;
mod universe;
mod validate;

pub use audit::{size_bound_audit, AuditRecord, AuditReport, SizeRule, Violation};
pub use theory::{
    local_factors, theory_comaximal, theory_gamma, theory_planar_gamma, theory_projective_gamma, theory_unit_unitary,
    GraphClass, TheoryError, TheoryVerdict, UnitUnitary,
};
pub use universe::{Family, RingUniverse, UniverseMember};
pub use validate::{
    classify_member, computed_class, cross_validate, member_graph, report_text, report_tsv, Agreement,
    ClassificationVerdict, ClassifyError, ComputedClass, ComputedWitness, REPORT_HEADER,
};
