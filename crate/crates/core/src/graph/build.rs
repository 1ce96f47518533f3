use super::Graph;
use crate::ring::{FiniteRing, MultiplicativeData, RingError};

fn labeled(r: &FiniteRing, loops: bool) -> Graph {
    let mut g = if loops { Graph::with_loops(r.order()) } else { Graph::new(r.order()) };
    g.set_labels((0..r.order()).map(|x| r.format_element(x)).collect());
    g
}

/// `Γ(R,G,S)`: distinct `x, y` adjacent iff `x + sy ∈ G` for some `s ∈ S`.
/// With `include_loops` this is `Γ̄(R,G,S)`, which also has a loop at `x` when
/// `x + sx ∈ G` for some `s`.
pub fn build_gamma(r: &FiniteRing, data: &MultiplicativeData, include_loops: bool) -> Graph {
    let n = r.order();
    let mut in_g = vec![false; n];
    for &u in data.group() {
        in_g[u] = true;
    }
    let s = data.connection_set();
    let mut g = labeled(r, include_loops);
    for x in 0..n {
        let start = if include_loops { x } else { x + 1 };
        for y in start..n {
            if s.iter().any(|&si| in_g[r.add(x, r.mul(si, y))]) {
                g.add_edge(x, y);
            }
        }
    }
    g
}

/// `Γ(R, U(R), S)` after validating `S`.
pub fn gamma_with_units(r: &FiniteRing, s: &[usize], include_loops: bool) -> Result<Graph, RingError> {
    let data = MultiplicativeData::with_units(r, s)?;
    Ok(build_gamma(r, &data, include_loops))
}

/// Unit graph: `x + y ∈ U(R)`.
pub fn build_unit_graph(r: &FiniteRing) -> Graph {
    gamma_with_units(r, &[r.one()], false).expect("{1} is a valid connection set")
}

/// Unitary Cayley graph: `x - y ∈ U(R)`.
pub fn build_unitary_cayley(r: &FiniteRing) -> Graph {
    gamma_with_units(r, &[r.minus_one()], false).expect("{-1} is a valid connection set")
}

/// Co-maximal graph: `Rx + Ry = R`.
pub fn build_comaximal(r: &FiniteRing) -> Graph {
    let n = r.order();
    let ideals: Vec<Vec<bool>> = (0..n).map(|x| r.principal_ideal(x)).collect();
    let mut g = labeled(r, false);
    for x in 0..n {
        for y in x + 1..n {
            let comax = r.is_unit(x) || r.is_unit(y) || (0..n).any(|a| ideals[x][a] && ideals[y][r.sub(r.one(), a)]);
            if comax {
                g.add_edge(x, y);
            }
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, isomorphic};
    use crate::ring::{compile_ring, RingSpec};

    fn ring(s: &str) -> FiniteRing {
        compile_ring(&RingSpec::parse(s).unwrap()).unwrap()
    }

    #[test]
    fn z5_with_two_element_s_is_k5() {
        let g = gamma_with_units(&ring("Z5"), &[2, 3], false).unwrap();
        assert!(g.same_edges(&complete_graph(5)));
    }

    #[test]
    fn z7_unit_graph_counts() {
        let g = build_unit_graph(&ring("Z7"));
        assert_eq!(g.q(), 18);
        assert_eq!(g.degree_sequence(), vec![6, 5, 5, 5, 5, 5, 5]);
    }

    #[test]
    fn small_unit_and_cayley_graphs() {
        let z2 = build_unit_graph(&ring("Z2"));
        assert_eq!(z2.edges(), vec![(0, 1)]);
        let z4 = build_unit_graph(&ring("Z4"));
        assert_eq!(z4.edges(), vec![(0, 1), (0, 3), (1, 2), (2, 3)]);
        let c = build_unitary_cayley(&ring("Z3 x Z3"));
        assert_eq!(c.q(), 18);
        assert!(c.degree_sequence().iter().all(|&d| d == 4));
    }

    #[test]
    fn comaximal_examples() {
        assert!(build_comaximal(&ring("Z5")).same_edges(&complete_graph(5)));
        assert_eq!(build_comaximal(&ring("Z2 x Z2 x Z3")).q(), 35);
        let r = ring("Z2 x Z4");
        let g = build_comaximal(&r);
        assert_eq!(g.degree(r.parse_element("(1,1)").unwrap()), 7);
    }

    #[test]
    fn z2_x_z5_is_bipartite_with_20_edges() {
        let r = ring("Z2 x Z5");
        let g = gamma_with_units(&r, &[r.one()], false).unwrap();
        assert_eq!(g.q(), 20);
        assert!(g.is_bipartite());
    }

    #[test]
    fn loops_variant() {
        let r = ring("Z3");
        let g = gamma_with_units(&r, &[1], true).unwrap();
        // x + x in U(Z3) for x = 1, 2
        assert!(g.has_loop(1) && g.has_loop(2) && !g.has_loop(0));
        assert!(isomorphic(&g.simple(), &build_unit_graph(&r)).is_some());
    }
}
