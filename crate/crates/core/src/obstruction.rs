//! Named graphs used as evidence: the Kuratowski graphs, the bipartite graphs
//! `K44` and `K36`, and the projective-plane obstructions `A2`, `B3`, `E18`.

use std::fmt;
use std::str::FromStr;

use crate::graph::{
    build_unit_graph, complete_bipartite, complete_graph, gamma_with_units, Graph, SubdivisionModel, SubdivisionOutcome,
};
use crate::ring::{compile_ring, RingSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ObstructionName {
    K5,
    K33,
    K44,
    K36,
    A2,
    B3,
    E18,
}

impl ObstructionName {
    /// Detection order.
    pub const ALL: [ObstructionName; 7] = [
        ObstructionName::K5,
        ObstructionName::K33,
        ObstructionName::K44,
        ObstructionName::K36,
        ObstructionName::A2,
        ObstructionName::B3,
        ObstructionName::E18,
    ];

    /// Graphs that do not embed in the projective plane.
    pub const NON_PROJECTIVE: [ObstructionName; 5] =
        [ObstructionName::K44, ObstructionName::K36, ObstructionName::A2, ObstructionName::B3, ObstructionName::E18];

    pub fn as_str(self) -> &'static str {
        match self {
            ObstructionName::K5 => "K5",
            ObstructionName::K33 => "K33",
            ObstructionName::K44 => "K44",
            ObstructionName::K36 => "K36",
            ObstructionName::A2 => "A2",
            ObstructionName::B3 => "B3",
            ObstructionName::E18 => "E18",
        }
    }

    /// Crosscap number of every graph containing a subdivision of this one is at least this.
    pub fn crosscap_floor(self) -> usize {
        match self {
            ObstructionName::K5 | ObstructionName::K33 => 1,
            _ => 2,
        }
    }
}

impl fmt::Display for ObstructionName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown obstruction {0:?}")]
pub struct UnknownName(pub String);

impl FromStr for ObstructionName {
    type Err = UnknownName;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ObstructionName::ALL
            .into_iter()
            .find(|n| n.as_str().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| UnknownName(s.to_string()))
    }
}

#[derive(Clone, Debug)]
pub struct NamedGraph {
    pub name: ObstructionName,
    pub graph: Graph,
    pub provenance: &'static str,
}

/// Edges of `B3` on the elements of `Z3 x Z3`, transcribed from a drawing of a
/// subgraph of `Γ(Z3 x Z3, {(1,1),(1,2)})`: a rectangle on (1,0), (2,0), (2,1),
/// (1,1) with side midpoints (0,2), (0,1) and interior vertices (1,2), (2,2).
const B3_EDGES: [((usize, usize), (usize, usize)); 18] = [
    ((0, 2), (2, 1)),
    ((0, 2), (1, 1)),
    ((2, 0), (0, 1)),
    ((1, 0), (0, 1)),
    ((1, 0), (0, 2)),
    ((0, 2), (2, 0)),
    ((1, 1), (0, 1)),
    ((0, 1), (2, 1)),
    ((1, 0), (1, 1)),
    ((2, 0), (2, 1)),
    ((1, 1), (1, 2)),
    ((1, 0), (1, 2)),
    ((1, 2), (0, 2)),
    ((1, 2), (0, 1)),
    ((0, 1), (2, 2)),
    ((2, 2), (0, 2)),
    ((2, 2), (2, 0)),
    ((2, 2), (2, 1)),
];

/// Element order of the `B3` vertices.
const B3_VERTICES: [(usize, usize); 8] = [(1, 0), (2, 0), (2, 1), (1, 1), (0, 2), (0, 1), (1, 2), (2, 2)];

fn b3() -> Graph {
    let index = |x: (usize, usize)| B3_VERTICES.iter().position(|&v| v == x).expect("B3 vertex");
    let edges: Vec<(usize, usize)> = B3_EDGES.iter().map(|&(a, b)| (index(a), index(b))).collect();
    let mut g = Graph::from_edges(8, &edges);
    g.set_labels(B3_VERTICES.iter().map(|(a, b)| format!("({a},{b})")).collect());
    g
}

/// The ring-element codes of the `B3` vertices inside `Z3 x Z3` (code `3a + b`).
pub fn b3_embedding_in_z3xz3() -> Vec<usize> {
    B3_VERTICES.iter().map(|&(a, b)| 3 * a + b).collect()
}

fn ring_graph(spec: &str, s: &[&str]) -> Graph {
    let r = compile_ring(&RingSpec::parse(spec).expect("static spec")).expect("small ring");
    let s: Vec<usize> = s.iter().map(|x| r.parse_element(x).expect("static element")).collect();
    gamma_with_units(&r, &s, false).expect("valid connection set")
}

pub fn obstruction(name: ObstructionName) -> NamedGraph {
    let (graph, provenance) = match name {
        ObstructionName::K5 => (complete_graph(5), "complete graph"),
        ObstructionName::K33 => (complete_bipartite(3, 3), "complete bipartite graph"),
        ObstructionName::K44 => (complete_bipartite(4, 4), "complete bipartite graph"),
        ObstructionName::K36 => (complete_bipartite(3, 6), "complete bipartite graph"),
        ObstructionName::A2 => {
            let r = compile_ring(&RingSpec::ModularInt(7)).expect("Z7");
            (build_unit_graph(&r), "unit graph of Z7")
        }
        ObstructionName::B3 => (b3(), "figure transcription, subgraph of Γ(Z3 x Z3, {(1,1),(1,2)})"),
        ObstructionName::E18 => (ring_graph("Z2 x GF(4)", &["(1,2)", "(1,3)"]), "Γ(Z2 x F4, {1} x {a, a^2})"),
    };
    NamedGraph { name, graph, provenance }
}

pub fn obstruction_by_name(name: &str) -> Result<NamedGraph, UnknownName> {
    Ok(obstruction(name.parse()?))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Detection {
    Found(ObstructionName, SubdivisionModel),
    Absent,
    BudgetExceeded,
}

/// First of `names` (in [`ObstructionName::ALL`] order) with a subdivision in `g`.
/// The budget is shared across the names.
pub fn detect_obstruction(g: &Graph, names: &[ObstructionName], budget: u64) -> Detection {
    let mut remaining = budget;
    let mut exhausted = true;
    for name in ObstructionName::ALL.into_iter().filter(|n| names.contains(n)) {
        let h = obstruction(name).graph;
        let (outcome, spent) = crate::graph::subdivision::find_subdivision_counted(g, &h, remaining);
        match outcome {
            SubdivisionOutcome::Found(model) => return Detection::Found(name, model),
            SubdivisionOutcome::Absent => remaining = remaining.saturating_sub(spent),
            SubdivisionOutcome::BudgetExceeded => {
                exhausted = false;
                remaining = 0;
            }
        }
    }
    if exhausted {
        Detection::Absent
    } else {
        Detection::BudgetExceeded
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::isomorphic;

    #[test]
    fn sizes() {
        let counts: Vec<(usize, usize)> =
            ObstructionName::ALL.iter().map(|&n| (obstruction(n).graph.p(), obstruction(n).graph.q())).collect();
        assert_eq!(counts, vec![(5, 10), (6, 9), (8, 16), (9, 18), (7, 18), (8, 18), (8, 15)]);
    }

    #[test]
    fn e18_is_k44_minus_an_edge() {
        let mut k44 = complete_bipartite(4, 4);
        k44.remove_edge(0, 4);
        assert!(isomorphic(&obstruction(ObstructionName::E18).graph, &k44).is_some());
    }

    #[test]
    fn b3_sits_inside_its_ring_graph() {
        let host = ring_graph("Z3 x Z3", &["(1,1)", "(1,2)"]);
        let codes = b3_embedding_in_z3xz3();
        let b = obstruction(ObstructionName::B3).graph;
        for (u, v) in b.edges() {
            assert!(host.has_edge(codes[u], codes[v]));
        }
        assert_eq!(b.degree_sequence(), vec![6, 6, 4, 4, 4, 4, 4, 4]);
    }

    #[test]
    fn names_parse() {
        assert_eq!("k44".parse::<ObstructionName>().unwrap(), ObstructionName::K44);
        assert!("K9".parse::<ObstructionName>().is_err());
    }

    #[test]
    fn detection_order() {
        let r = compile_ring(&RingSpec::parse("Z5").unwrap()).unwrap();
        let k5 = gamma_with_units(&r, &[2, 3], false).unwrap();
        assert!(matches!(
            detect_obstruction(&k5, &ObstructionName::ALL, 100_000),
            Detection::Found(ObstructionName::K5, _)
        ));
        let planar = gamma_with_units(&r, &[1], false).unwrap();
        assert_eq!(
            detect_obstruction(&planar, &[ObstructionName::K5, ObstructionName::K33], 100_000),
            Detection::Absent
        );
    }
}
