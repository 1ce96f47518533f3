//! Crosscap number and orientable genus, as certified brackets.
//!
//! Lower bounds come from counting, complete-graph formulas, forbidden
//! subdivisions and exhaustive refutation. Upper bounds come from embedding
//! certificates. A result is exact only when the two meet.

use super::bounds::{edge_bound, kmn_crosscap, kn_crosscap, min_degree_consistency, stahl_compose};
use super::cert::EmbeddingCertificate;
use super::search::{search_embedding, EmbeddingOutcome, Orientability, SearchConfig};
use super::SurfaceError;
use crate::graph::{Graph, SubdivisionModel};
use crate::obstruction::{detect_obstruction, Detection, ObstructionName};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LowerWitness {
    /// Nothing beyond `γ̃ ≥ 0`.
    Trivial,
    EdgeBound,
    MinDegree,
    /// `K_n` or `K_{m,n}` closed form.
    Formula,
    Obstruction {
        name: ObstructionName,
        model: SubdivisionModel,
    },
    /// Exhaustive search proved there is no embedding of Euler genus `lower - 1`.
    Exhaustive,
    /// Composition of exact component values.
    Composition,
    /// `max(1 - n + Σ lowerᵢ, max lowerᵢ)` over components.
    ComponentBracket,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UpperWitness {
    Certificate(EmbeddingCertificate),
    Formula,
    /// `γ̃ ≤ 2γ + 1` from an orientable embedding.
    TwiceGenusPlusOne(EmbeddingCertificate),
    Composition,
    /// `Σ upperᵢ` over components.
    ComponentBracket,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrosscapResult {
    pub lower: usize,
    pub lower_witness: LowerWitness,
    pub upper: Option<usize>,
    pub upper_witness: Option<UpperWitness>,
    /// Filled in for disconnected graphs only.
    pub components: Vec<ComponentCrosscap>,
}

impl CrosscapResult {
    pub fn exact(&self) -> Option<usize> {
        (self.upper == Some(self.lower)).then_some(self.lower)
    }

    pub fn is_exact(&self) -> bool {
        self.exact().is_some()
    }

    pub fn is_unknown(&self) -> bool {
        !self.is_exact()
    }

    /// The certificate behind the upper bound when it is an embedding of `g` itself.
    pub fn certificate(&self) -> Option<&EmbeddingCertificate> {
        match &self.upper_witness {
            Some(UpperWitness::Certificate(c)) => Some(c),
            _ => None,
        }
    }

    pub fn bracket(&self) -> String {
        match (self.exact(), self.upper) {
            (Some(v), _) => v.to_string(),
            (None, Some(u)) => format!("{}..{}", self.lower, u),
            (None, None) => format!(">={}", self.lower),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenusResult {
    pub lower: usize,
    pub upper: Option<usize>,
    pub certificate: Option<EmbeddingCertificate>,
}

impl GenusResult {
    pub fn exact(&self) -> Option<usize> {
        (self.upper == Some(self.lower)).then_some(self.lower)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentCrosscap {
    pub vertices: Vec<usize>,
    pub crosscap: CrosscapResult,
    pub genus: GenusResult,
}

/// Crosscap number of `g`, or the tightest certified bracket within the budget.
/// The budget applies to each search call separately.
pub fn crosscap_exact(g: &Graph, config: SearchConfig) -> Result<CrosscapResult, SurfaceError> {
    let g = g.simple();
    let comps = g.components();
    if comps.len() <= 1 {
        return connected_crosscap(&g, config);
    }
    let mut parts = Vec::with_capacity(comps.len());
    for comp in comps {
        let sub = g.induced(&comp);
        let crosscap = connected_crosscap(&sub, config)?;
        let genus = if crosscap.exact() == Some(0) {
            GenusResult { lower: 0, upper: Some(0), certificate: crosscap.certificate().cloned() }
        } else {
            orientable_genus(&sub, config)?
        };
        parts.push(ComponentCrosscap { vertices: comp, crosscap, genus });
    }
    let exact: Vec<(Option<usize>, Option<usize>)> =
        parts.iter().map(|c| (c.crosscap.exact(), c.genus.exact())).collect();
    if let Ok(v) = stahl_compose(&exact) {
        return Ok(CrosscapResult {
            lower: v,
            lower_witness: LowerWitness::Composition,
            upper: Some(v),
            upper_witness: Some(UpperWitness::Composition),
            components: parts,
        });
    }
    let n = parts.len();
    let sum_lower: usize = parts.iter().map(|c| c.crosscap.lower).sum();
    let max_lower = parts.iter().map(|c| c.crosscap.lower).max().unwrap_or(0);
    let lower = (sum_lower + 1).saturating_sub(n).max(max_lower);
    let upper: Option<usize> = parts.iter().map(|c| c.crosscap.upper).sum();
    Ok(CrosscapResult {
        lower,
        lower_witness: if lower == 0 { LowerWitness::Trivial } else { LowerWitness::ComponentBracket },
        upper_witness: upper.map(|_| UpperWitness::ComponentBracket),
        upper,
        components: parts,
    })
}

fn complete_formula(g: &Graph) -> Option<usize> {
    let (p, q) = (g.p(), g.q());
    if p >= 3 && q == p * (p - 1) / 2 {
        return kn_crosscap(p).ok();
    }
    let sides = g.two_coloring()?;
    let m = sides.iter().filter(|&&s| !s).count();
    let n = p - m;
    if m >= 2 && n >= 2 && q == m * n && g.is_connected() {
        return kmn_crosscap(m, n).ok();
    }
    None
}

fn connected_crosscap(g: &Graph, config: SearchConfig) -> Result<CrosscapResult, SurfaceError> {
    if g.p() == 0 {
        return Ok(CrosscapResult {
            lower: 0,
            lower_witness: LowerWitness::Trivial,
            upper: Some(0),
            upper_witness: None,
            components: Vec::new(),
        });
    }
    let mut lower = 0;
    let mut lower_witness = LowerWitness::Trivial;
    match search_embedding(g, 0, Orientability::Orientable, config)?.outcome {
        EmbeddingOutcome::Found(cert) => {
            return Ok(CrosscapResult {
                lower: 0,
                lower_witness,
                upper: Some(0),
                upper_witness: Some(UpperWitness::Certificate(cert)),
                components: Vec::new(),
            })
        }
        EmbeddingOutcome::ProvedNone => {
            lower = 1;
            lower_witness = LowerWitness::Exhaustive;
        }
        EmbeddingOutcome::BudgetExceeded => {}
    }
    let raise = |lower: &mut usize, lower_witness: &mut LowerWitness, value: usize, witness: LowerWitness| {
        if value > *lower {
            *lower = value;
            *lower_witness = witness;
        }
    };
    let formula = complete_formula(g);
    if let Some(f) = formula {
        raise(&mut lower, &mut lower_witness, f, LowerWitness::Formula);
    }
    if g.p() >= 3 {
        raise(&mut lower, &mut lower_witness, edge_bound(g)?, LowerWitness::EdgeBound);
        let mut k = 0;
        while !min_degree_consistency(g, k)? {
            k += 1;
        }
        raise(&mut lower, &mut lower_witness, k, LowerWitness::MinDegree);
    }
    if lower < 2 {
        if let Detection::Found(name, model) = detect_obstruction(g, &ObstructionName::NON_PROJECTIVE, config.budget) {
            raise(&mut lower, &mut lower_witness, 2, LowerWitness::Obstruction { name, model });
        }
    }

    let mut k = lower.max(1);
    loop {
        match search_embedding(g, k, Orientability::Nonorientable, config)?.outcome {
            EmbeddingOutcome::Found(cert) => {
                let upper = cert.euler_genus();
                if upper < lower {
                    return Err(SurfaceError::InternalDisagreement(format!(
                        "embedding of Euler genus {upper} below proven lower bound {lower}"
                    )));
                }
                return Ok(CrosscapResult {
                    lower,
                    lower_witness,
                    upper: Some(upper),
                    upper_witness: Some(UpperWitness::Certificate(cert)),
                    components: Vec::new(),
                });
            }
            EmbeddingOutcome::ProvedNone => {
                if formula.is_some_and(|f| f <= k) {
                    return Err(SurfaceError::InternalDisagreement(format!(
                        "search refuted Euler genus {k} against the closed form"
                    )));
                }
                lower = k + 1;
                lower_witness = LowerWitness::Exhaustive;
                k += 1;
            }
            EmbeddingOutcome::BudgetExceeded => break,
        }
    }

    if let Some(f) = formula {
        return Ok(CrosscapResult {
            lower,
            lower_witness,
            upper: Some(f),
            upper_witness: Some(UpperWitness::Formula),
            components: Vec::new(),
        });
    }
    let genus = orientable_genus(g, config)?;
    let (upper, upper_witness) = match genus.certificate {
        Some(cert) => {
            let u = cert.euler_genus() + 1;
            (Some(u), Some(UpperWitness::TwiceGenusPlusOne(cert)))
        }
        None => (None, None),
    };
    Ok(CrosscapResult { lower, lower_witness, upper, upper_witness, components: Vec::new() })
}

/// Orientable genus of a connected graph by iterative deepening from the Euler bound.
pub fn orientable_genus(g: &Graph, config: SearchConfig) -> Result<GenusResult, SurfaceError> {
    let g = g.simple();
    if !g.is_connected() {
        return Err(SurfaceError::Disconnected);
    }
    let (p, q) = (g.p() as i64, g.q() as i64);
    let lmin = match g.girth() {
        Some(girth) => girth as i64,
        None => q.max(1) * 2,
    };
    // F ≤ 2q/lmin, so 2γ ≥ 2 - p + q - 2q/lmin.
    let max_faces = if q == 0 { 1 } else { (2 * q / lmin).max(1) };
    let mut lower = ((2 - p + q - max_faces).max(0) as usize).div_ceil(2);
    loop {
        match search_embedding(&g, 2 * lower, Orientability::Orientable, config)?.outcome {
            EmbeddingOutcome::Found(cert) => {
                let upper = cert.euler_genus() / 2;
                return Ok(GenusResult { lower: lower.min(upper), upper: Some(upper), certificate: Some(cert) });
            }
            EmbeddingOutcome::ProvedNone => lower += 1,
            EmbeddingOutcome::BudgetExceeded => return Ok(GenusResult { lower, upper: None, certificate: None }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_bipartite, complete_graph, disjoint_copies, disjoint_union};
    use crate::surface::verify_certificate;

    fn cfg() -> SearchConfig {
        SearchConfig { budget: 2_000_000, workers: 1 }
    }

    #[test]
    fn small_complete_graphs() {
        for (n, want) in [(3, 0), (4, 0), (5, 1), (6, 1)] {
            let g = complete_graph(n);
            let r = crosscap_exact(&g, cfg()).unwrap();
            assert_eq!(r.exact(), Some(want), "K{n}");
            let cert = r.certificate().unwrap();
            assert_eq!(verify_certificate(&g, cert).unwrap().euler_genus, want);
        }
    }

    #[test]
    fn bipartite_k44() {
        let r = crosscap_exact(&complete_bipartite(4, 4), cfg()).unwrap();
        assert_eq!(r.exact(), Some(2));
    }

    #[test]
    fn genus_of_small_graphs() {
        assert_eq!(orientable_genus(&complete_graph(5), cfg()).unwrap().exact(), Some(1));
        assert_eq!(orientable_genus(&complete_bipartite(3, 3), cfg()).unwrap().exact(), Some(1));
        assert_eq!(orientable_genus(&complete_graph(4), cfg()).unwrap().exact(), Some(0));
    }

    #[test]
    fn disjoint_unions_compose() {
        let two_k5 = disjoint_copies(&complete_graph(5), 2);
        let r = crosscap_exact(&two_k5, cfg()).unwrap();
        assert_eq!(r.exact(), Some(2));
        assert_eq!(r.components.len(), 2);
        let mixed = disjoint_union(&[&complete_graph(4), &complete_bipartite(3, 3)]);
        assert_eq!(crosscap_exact(&mixed, cfg()).unwrap().exact(), Some(1));
    }

    #[test]
    fn tiny_budget_gives_a_bracket() {
        let r = crosscap_exact(&complete_graph(7), SearchConfig { budget: 5, workers: 1 }).unwrap();
        assert_eq!(r.lower, 3);
        assert_eq!(r.upper, Some(3));
        assert_eq!(r.upper_witness, Some(UpperWitness::Formula));
    }
}
