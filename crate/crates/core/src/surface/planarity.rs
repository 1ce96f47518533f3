//! Planarity decided twice: by exhaustive genus-0 embedding search and by a
//! Kuratowski subdivision search. The two must agree.

use super::cert::EmbeddingCertificate;
use super::scheme::SignedScheme;
use super::search::{search_embedding, EmbeddingOutcome, Orientability, SearchConfig};
use super::SurfaceError;
use crate::graph::{complete_bipartite, complete_graph, find_subdivision, Graph, SubdivisionModel, SubdivisionOutcome};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Planarity {
    Planar(EmbeddingCertificate),
    /// A subdivision of `K5` or `K33` (named by `pattern`).
    NonPlanar {
        pattern: &'static str,
        model: SubdivisionModel,
    },
}

pub fn planarity(g: &Graph, config: SearchConfig) -> Result<Planarity, SurfaceError> {
    let g = g.simple();
    let mut rotation: Vec<Vec<usize>> = vec![Vec::new(); g.p()];
    let mut search_planar = true;
    for comp in g.components() {
        let sub = g.induced(&comp);
        match search_embedding(&sub, 0, Orientability::Orientable, config)?.outcome {
            EmbeddingOutcome::Found(cert) => {
                for (i, &v) in comp.iter().enumerate() {
                    rotation[v] = cert.scheme().rotation(i).iter().map(|&u| comp[u]).collect();
                }
            }
            EmbeddingOutcome::ProvedNone => {
                search_planar = false;
                break;
            }
            EmbeddingOutcome::BudgetExceeded => return Err(SurfaceError::BudgetExceeded),
        }
    }
    let mut kuratowski = None;
    let mut exhausted = true;
    for (pattern, h) in [("K33", complete_bipartite(3, 3)), ("K5", complete_graph(5))] {
        match find_subdivision(&g, &h, config.budget) {
            SubdivisionOutcome::Found(model) => {
                kuratowski = Some((pattern, model));
                break;
            }
            SubdivisionOutcome::Absent => {}
            SubdivisionOutcome::BudgetExceeded => exhausted = false,
        }
    }
    match (search_planar, kuratowski) {
        (true, None) if exhausted => {
            let cert = EmbeddingCertificate::from_scheme(&g, SignedScheme::new(rotation, []))
                .map_err(|e| SurfaceError::Internal(e.to_string()))?;
            Ok(Planarity::Planar(cert))
        }
        (true, None) => Err(SurfaceError::BudgetExceeded),
        (false, Some((pattern, model))) => Ok(Planarity::NonPlanar { pattern, model }),
        (false, None) if !exhausted => Err(SurfaceError::BudgetExceeded),
        (true, Some((pattern, _))) => Err(SurfaceError::InternalDisagreement(format!(
            "planar embedding found, yet the graph contains a {pattern} subdivision"
        ))),
        (false, None) => Err(SurfaceError::InternalDisagreement(
            "genus-0 search refuted planarity but no Kuratowski subdivision exists".into(),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::disjoint_copies;
    use crate::surface::verify_certificate;

    #[test]
    fn decides_small_graphs() {
        let c = match planarity(&complete_graph(4), SearchConfig::default()).unwrap() {
            Planarity::Planar(c) => c,
            other => panic!("{other:?}"),
        };
        assert!(verify_certificate(&complete_graph(4), &c).is_ok());
        assert!(matches!(
            planarity(&complete_graph(5), SearchConfig::default()).unwrap(),
            Planarity::NonPlanar { pattern: "K5", .. }
        ));
        assert!(matches!(
            planarity(&complete_bipartite(3, 3), SearchConfig::default()).unwrap(),
            Planarity::NonPlanar { pattern: "K33", .. }
        ));
    }

    #[test]
    fn disconnected_planar_graph_gets_one_certificate() {
        let g = disjoint_copies(&complete_graph(4), 3);
        match planarity(&g, SearchConfig::default()).unwrap() {
            Planarity::Planar(c) => {
                let t = verify_certificate(&g, &c).unwrap();
                assert_eq!(t.euler_genus, 0);
            }
            other => panic!("{other:?}"),
        }
    }
}
