//! Computed planar / projective / neither class with witnesses, and the
//! theory-versus-computation sweep over a ring universe.

use std::fmt::Write as _;

use rayon::prelude::*;

use super::theory::{theory_comaximal, theory_gamma, GraphClass, TheoryError, TheoryVerdict};
use super::universe::{Family, RingUniverse, UniverseMember};
use crate::graph::{build_comaximal, gamma_with_units, Graph, SubdivisionModel};
use crate::obstruction::{detect_obstruction, Detection, ObstructionName};
use crate::ring::{compile_ring, FiniteRing, RingError};
use crate::surface::{
    edge_bound, planarity, search_embedding, EmbeddingCertificate, EmbeddingOutcome, Orientability, Planarity,
    SearchConfig, SignedScheme, SurfaceError,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComputedWitness {
    /// Genus-0 embedding of the whole graph.
    PlanarEmbedding(EmbeddingCertificate),
    /// Euler-genus-1 nonorientable embedding plus a Kuratowski subdivision.
    ProjectiveEmbedding {
        certificate: EmbeddingCertificate,
        kuratowski: &'static str,
        model: SubdivisionModel,
    },
    /// Two or more non-planar components: Euler genus adds up to at least 2.
    NonplanarComponents(usize),
    /// Counting bound on the non-planar component.
    EdgeBound(usize),
    Obstruction {
        name: ObstructionName,
        model: SubdivisionModel,
    },
    /// Exhaustive search found no projective-plane embedding.
    Refuted,
    /// A search ran out of budget.
    Unknown,
}

impl ComputedWitness {
    pub fn summary(&self) -> String {
        match self {
            ComputedWitness::PlanarEmbedding(c) => format!("planar embedding, {} faces", c.faces()),
            ComputedWitness::ProjectiveEmbedding { certificate, kuratowski, .. } => {
                format!("projective embedding, {} faces; {kuratowski} subdivision", certificate.faces())
            }
            ComputedWitness::NonplanarComponents(n) => format!("{n} non-planar components"),
            ComputedWitness::EdgeBound(b) => format!("edge bound {b}"),
            ComputedWitness::Obstruction { name, .. } => format!("{name} subdivision"),
            ComputedWitness::Refuted => "no projective embedding (exhaustive)".into(),
            ComputedWitness::Unknown => "budget exhausted".into(),
        }
    }

    pub fn certificate(&self) -> Option<&EmbeddingCertificate> {
        match self {
            ComputedWitness::PlanarEmbedding(c) => Some(c),
            ComputedWitness::ProjectiveEmbedding { certificate, .. } => Some(certificate),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComputedClass {
    /// `None` when a search ran out of budget.
    pub class: Option<GraphClass>,
    pub witness: ComputedWitness,
}

/// Joins per-component schemes (indexed locally) into one scheme on `g`.
fn combine(g: &Graph, parts: &[(&[usize], &SignedScheme)]) -> Result<EmbeddingCertificate, SurfaceError> {
    let mut rotation = vec![Vec::new(); g.p()];
    let mut negative = Vec::new();
    for (comp, scheme) in parts {
        for (i, &v) in comp.iter().enumerate() {
            rotation[v] = scheme.rotation(i).iter().map(|&u| comp[u]).collect();
        }
        negative.extend(scheme.negative_edges().map(|(a, b)| (comp[a], comp[b])));
    }
    EmbeddingCertificate::from_scheme(g, SignedScheme::new(rotation, negative))
        .map_err(|e| SurfaceError::Internal(e.to_string()))
}

/// Planar, projective or neither, with a checkable witness.
pub fn computed_class(g: &Graph, config: SearchConfig) -> Result<ComputedClass, SurfaceError> {
    let g = g.simple();
    let unknown = ComputedClass { class: None, witness: ComputedWitness::Unknown };
    let (kuratowski, kmodel) = match planarity(&g, config) {
        Ok(Planarity::Planar(cert)) => {
            return Ok(ComputedClass {
                class: Some(GraphClass::Planar),
                witness: ComputedWitness::PlanarEmbedding(cert),
            })
        }
        Ok(Planarity::NonPlanar { pattern, model }) => (pattern, model),
        Err(SurfaceError::BudgetExceeded) => return Ok(unknown),
        Err(e) => return Err(e),
    };
    let neither = |witness| Ok(ComputedClass { class: Some(GraphClass::Neither), witness });

    let comps = g.components();
    let mut planar_parts = Vec::new();
    let mut nonplanar = Vec::new();
    for comp in &comps {
        let sub = g.induced(comp);
        match search_embedding(&sub, 0, Orientability::Orientable, config)?.outcome {
            EmbeddingOutcome::Found(cert) => planar_parts.push((comp.clone(), cert)),
            EmbeddingOutcome::ProvedNone => nonplanar.push(comp.clone()),
            EmbeddingOutcome::BudgetExceeded => return Ok(unknown),
        }
    }
    if nonplanar.len() >= 2 {
        return neither(ComputedWitness::NonplanarComponents(nonplanar.len()));
    }
    let Some(comp) = nonplanar.pop() else {
        return Err(SurfaceError::InternalDisagreement("non-planar graph with only planar components".into()));
    };
    let h = g.induced(&comp);
    let bound = edge_bound(&h)?;
    if bound >= 2 {
        return neither(ComputedWitness::EdgeBound(bound));
    }
    if let Detection::Found(name, model) = detect_obstruction(&h, &ObstructionName::NON_PROJECTIVE, config.budget) {
        return neither(ComputedWitness::Obstruction { name, model: model.relabel(&comp) });
    }
    match search_embedding(&h, 1, Orientability::Nonorientable, config)?.outcome {
        EmbeddingOutcome::Found(cert) => {
            let mut parts: Vec<(&[usize], &SignedScheme)> = vec![(&comp, cert.scheme())];
            parts.extend(planar_parts.iter().map(|(c, cert)| (c.as_slice(), cert.scheme())));
            let certificate = combine(&g, &parts)?;
            if certificate.euler_genus() != 1 || certificate.orientable() {
                return Err(SurfaceError::Internal("combined embedding is not projective".into()));
            }
            Ok(ComputedClass {
                class: Some(GraphClass::Projective),
                witness: ComputedWitness::ProjectiveEmbedding { certificate, kuratowski, model: kmodel },
            })
        }
        EmbeddingOutcome::ProvedNone => neither(ComputedWitness::Refuted),
        EmbeddingOutcome::BudgetExceeded => Ok(unknown),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ClassifyError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Theory(#[from] TheoryError),
    #[error(transparent)]
    Surface(#[from] SurfaceError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Agreement {
    Agree,
    Disagree,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationVerdict {
    pub member: UniverseMember,
    pub p: usize,
    pub q: usize,
    pub theory: TheoryVerdict,
    pub computed: ComputedClass,
}

impl ClassificationVerdict {
    pub fn agreement(&self) -> Agreement {
        match self.computed.class {
            None => Agreement::Unknown,
            Some(c) if c == self.theory.class => Agreement::Agree,
            Some(_) => Agreement::Disagree,
        }
    }

    pub fn agrees(&self) -> bool {
        self.agreement() == Agreement::Agree
    }

    pub fn computed_label(&self) -> &'static str {
        self.computed.class.map_or("unknown", GraphClass::as_str)
    }
}

/// The graph of a universe member on its compiled ring.
pub fn member_graph(member: &UniverseMember) -> Result<(FiniteRing, Graph), ClassifyError> {
    let r = compile_ring(&member.spec)?;
    let g = match member.family {
        Family::Gamma => gamma_with_units(&r, &member.s, false)?,
        Family::Comaximal => build_comaximal(&r),
    };
    Ok((r, g))
}

/// Theory and computed class of one member.
pub fn classify_member(member: &UniverseMember, config: SearchConfig) -> Result<ClassificationVerdict, ClassifyError> {
    let (_, g) = member_graph(member)?;
    let theory = match member.family {
        Family::Gamma => theory_gamma(&member.spec, &member.s)?,
        Family::Comaximal => theory_comaximal(&member.spec)?,
    };
    let computed = computed_class(&g, config)?;
    Ok(ClassificationVerdict { member: member.clone(), p: g.p(), q: g.q(), theory, computed })
}

/// Classifies every universe member by theory and by computation. The output
/// is sorted by spec string, family and connection set whatever the worker count.
pub fn cross_validate(
    universe: &RingUniverse,
    config: SearchConfig,
) -> Result<Vec<ClassificationVerdict>, ClassifyError> {
    let members = universe.members()?;
    let inner = SearchConfig { workers: 1, ..config };
    let run = || -> Result<Vec<ClassificationVerdict>, ClassifyError> {
        members.par_iter().map(|m| classify_member(m, inner)).collect()
    };
    let mut verdicts = if config.workers <= 1 {
        members.iter().map(|m| classify_member(m, inner)).collect::<Result<Vec<_>, _>>()?
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(config.workers)
            .build()
            .map_err(|e| SurfaceError::Internal(e.to_string()))?
            .install(run)?
    };
    verdicts.sort_by(|a, b| a.member.sort_key().cmp(&b.member.sort_key()));
    Ok(verdicts)
}

pub const REPORT_HEADER: &str = "spec\tfamily\tS\ttheory\tcomputed\twitness\tagreement";

/// One tab-separated row per verdict, with a header line.
pub fn report_tsv(verdicts: &[ClassificationVerdict]) -> String {
    let mut out = String::from(REPORT_HEADER);
    out.push('\n');
    for v in verdicts {
        let _ = writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}",
            v.member.spec_string(),
            v.member.family,
            v.member.s_label,
            v.theory.class,
            v.computed_label(),
            v.computed.witness.summary(),
            match v.agreement() {
                Agreement::Agree => "agree",
                Agreement::Disagree => "DISAGREE",
                Agreement::Unknown => "unknown",
            }
        );
    }
    out
}

/// Human-readable report with a summary line.
pub fn report_text(verdicts: &[ClassificationVerdict]) -> String {
    let mut out = String::new();
    for v in verdicts {
        let _ = writeln!(
            out,
            "{:<28} {:<9} {:<24} theory={:<10} computed={:<10} [{}]",
            v.member.spec_string(),
            v.member.family.to_string(),
            v.member.s_label,
            v.theory.class.as_str(),
            v.computed_label(),
            v.computed.witness.summary()
        );
    }
    let count = |a| verdicts.iter().filter(|v| v.agreement() == a).count();
    let _ = writeln!(
        out,
        "{} members: {} agree, {} disagree, {} unknown",
        verdicts.len(),
        count(Agreement::Agree),
        count(Agreement::Disagree),
        count(Agreement::Unknown)
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_bipartite, complete_graph, disjoint_copies};
    use crate::surface::verify_certificate;

    fn class(g: &Graph) -> ComputedClass {
        computed_class(g, SearchConfig::default()).unwrap()
    }

    #[test]
    fn basic_classes() {
        assert_eq!(class(&complete_graph(4)).class, Some(GraphClass::Planar));
        let k6 = complete_graph(6);
        let c = class(&k6);
        assert_eq!(c.class, Some(GraphClass::Projective));
        let t = verify_certificate(&k6, c.witness.certificate().unwrap()).unwrap();
        assert_eq!((t.euler_genus, t.orientable), (1, false));
        assert!(matches!(class(&complete_bipartite(4, 4)).witness, ComputedWitness::EdgeBound(2)));
        assert_eq!(class(&disjoint_copies(&complete_graph(5), 2)).witness, ComputedWitness::NonplanarComponents(2));
    }

    #[test]
    fn projective_component_beside_planar_ones() {
        let g = crate::graph::disjoint_union(&[&complete_graph(4), &complete_graph(5), &complete_graph(3)]);
        let c = class(&g);
        assert_eq!(c.class, Some(GraphClass::Projective));
        let t = verify_certificate(&g, c.witness.certificate().unwrap()).unwrap();
        assert_eq!(t.euler_genus, 1);
    }
}
