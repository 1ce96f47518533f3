//! Finite graphs, the ring-graph builders, and structural queries.

mod build;
mod io;
mod iso;
mod ops;
pub mod subdivision;

use std::collections::VecDeque;

pub use build::{build_comaximal, build_gamma, build_unit_graph, build_unitary_cayley, gamma_with_units};
pub use io::{parse_edge_list, to_dot, to_edge_list, GraphParseError};
pub use iso::isomorphic;
pub use ops::{complete_bipartite, complete_graph, disjoint_copies, disjoint_union, tensor};
pub use subdivision::{find_subdivision, SubdivisionModel, SubdivisionOutcome};

/// Finite undirected graph on vertices `0..p`, optionally with loops.
///
/// Neighbor lists are sorted and never contain the vertex itself; loops are kept
/// in a separate flag so simple-graph queries can ignore them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    loops: Vec<bool>,
    loops_allowed: bool,
    labels: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureReport {
    pub p: usize,
    pub q: usize,
    /// Non-increasing.
    pub degrees: Vec<usize>,
    pub min_degree: usize,
    pub components: usize,
    pub bipartite: bool,
    pub triangle_free: bool,
}

impl Graph {
    pub fn new(p: usize) -> Self {
        Graph { adj: vec![Vec::new(); p], loops: vec![false; p], loops_allowed: false, labels: None }
    }

    pub fn with_loops(p: usize) -> Self {
        Graph { loops_allowed: true, ..Graph::new(p) }
    }

    pub fn from_edges(p: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::new(p);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Adds `uv`; returns false if it was already present.
    ///
    /// # Panics
    /// On out-of-range endpoints, or a loop in a graph without the loop flag.
    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        assert!(u < self.p() && v < self.p(), "edge {u}-{v} out of range");
        if u == v {
            assert!(self.loops_allowed, "loop at {u} in a simple graph");
            return !std::mem::replace(&mut self.loops[u], true);
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => false,
            Err(i) => {
                self.adj[u].insert(i, v);
                let j = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(j, u);
                true
            }
        }
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        if u == v {
            return std::mem::replace(&mut self.loops[u], false);
        }
        match self.adj[u].binary_search(&v) {
            Ok(i) => {
                self.adj[u].remove(i);
                let j = self.adj[v].binary_search(&u).unwrap();
                self.adj[v].remove(j);
                true
            }
            Err(_) => false,
        }
    }

    pub fn p(&self) -> usize {
        self.adj.len()
    }

    /// Number of non-loop edges.
    pub fn q(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn loop_count(&self) -> usize {
        self.loops.iter().filter(|&&l| l).count()
    }

    pub fn loops_allowed(&self) -> bool {
        self.loops_allowed
    }

    pub fn has_loop(&self, v: usize) -> bool {
        self.loops[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u == v {
            self.loops[u]
        } else {
            self.adj[u].binary_search(&v).is_ok()
        }
    }

    /// Sorted neighbors, excluding `v` itself.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Degree counting a loop as one extra neighbor.
    pub fn degree_with_loop(&self, v: usize) -> usize {
        self.adj[v].len() + usize::from(self.loops[v])
    }

    /// Non-loop edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.q());
        for (u, nb) in self.adj.iter().enumerate() {
            out.extend(nb.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Label of `v`, or its index.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn set_labels(&mut self, labels: Vec<String>) {
        assert_eq!(labels.len(), self.p());
        self.labels = Some(labels);
    }

    pub fn vertex_with_label(&self, label: &str) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    /// Same vertices and non-loop edges, loops dropped.
    pub fn simple(&self) -> Graph {
        Graph { adj: self.adj.clone(), loops: vec![false; self.p()], loops_allowed: false, labels: self.labels.clone() }
    }

    /// Equal vertex counts, non-loop edges and loops; labels ignored.
    pub fn same_edges(&self, other: &Graph) -> bool {
        self.adj == other.adj && self.loops == other.loops
    }

    /// Whether every non-loop edge of `self` is an edge of `other` (same vertex set).
    pub fn is_spanning_subgraph_of(&self, other: &Graph) -> bool {
        self.p() == other.p() && self.edges().iter().all(|&(u, v)| other.has_edge(u, v))
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Vertex sets of the connected components, each sorted, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.p()];
        let mut comps = Vec::new();
        for s in 0..self.p() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Subgraph induced by `vertices`; vertex `i` of the result is `vertices[i]`.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.p()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph { loops_allowed: self.loops_allowed, ..Graph::new(vertices.len()) };
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.adj[v] {
                if index[w] != usize::MAX && index[w] > i {
                    g.add_edge(i, index[w]);
                }
            }
            g.loops[i] = self.loops[v];
        }
        if let Some(l) = &self.labels {
            g.labels = Some(vertices.iter().map(|&v| l[v].clone()).collect());
        }
        g
    }

    /// Proper 2-coloring of the non-loop edges, if one exists.
    pub fn two_coloring(&self) -> Option<Vec<bool>> {
        let mut color: Vec<Option<bool>> = vec![None; self.p()];
        for s in 0..self.p() {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for &v in &self.adj[u] {
                    match color[v] {
                        None => {
                            color[v] = Some(!cu);
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(Option::unwrap).collect())
    }

    /// Bipartite as a graph: a loop is an odd cycle.
    pub fn is_bipartite(&self) -> bool {
        self.loop_count() == 0 && self.two_coloring().is_some()
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges().iter().all(|&(u, v)| {
            let (a, b) = (&self.adj[u], &self.adj[v]);
            let (mut i, mut j) = (0, 0);
            while i < a.len() && j < b.len() {
                match a[i].cmp(&b[j]) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => return false,
                }
            }
            true
        })
    }

    /// Length of a shortest cycle ignoring loops, or `None` for a forest.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for s in 0..self.p() {
            let mut dist = vec![usize::MAX; self.p()];
            let mut parent = vec![usize::MAX; self.p()];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if parent[u] != v {
                        let len = dist[u] + dist[v] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    pub fn structure_report(&self) -> StructureReport {
        StructureReport {
            p: self.p(),
            q: self.q(),
            degrees: self.degree_sequence(),
            min_degree: self.min_degree(),
            components: self.components().len(),
            bipartite: self.is_bipartite(),
            triangle_free: self.is_triangle_free(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_queries() {
        let k5 = complete_graph(5);
        let r = k5.structure_report();
        assert_eq!((r.p, r.q, r.bipartite, r.triangle_free), (5, 10, false, false));
        assert_eq!(k5.girth(), Some(3));
        let k33 = complete_bipartite(3, 3);
        assert_eq!(k33.q(), 9);
        assert!(k33.is_bipartite());
        assert_eq!(k33.girth(), Some(4));
        assert_eq!(Graph::from_edges(4, &[(0, 1), (1, 2)]).girth(), None);
    }

    #[test]
    fn components_and_induced() {
        let g = disjoint_copies(&complete_graph(5), 2);
        assert_eq!(g.components(), vec![vec![0, 1, 2, 3, 4], vec![5, 6, 7, 8, 9]]);
        let h = g.induced(&[5, 6, 7]);
        assert_eq!(h.q(), 3);
    }

    #[test]
    fn loops_are_separate() {
        let mut g = Graph::with_loops(3);
        g.add_edge(0, 0);
        g.add_edge(0, 1);
        assert_eq!(g.q(), 1);
        assert_eq!(g.degree(0), 1);
        assert_eq!(g.degree_with_loop(0), 2);
        assert!(!g.is_bipartite());
        assert!(g.simple().is_bipartite());
    }

    #[test]
    fn edge_removal() {
        let mut g = complete_graph(4);
        assert!(g.remove_edge(2, 1));
        assert!(!g.has_edge(1, 2));
        assert_eq!(g.q(), 5);
    }
}
