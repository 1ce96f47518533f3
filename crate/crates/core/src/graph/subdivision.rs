//! Search for a subdivision (topological minor) of a pattern graph `H` inside `G`.
//!
//! Branch vertices are placed one at a time, highest pattern degree first and
//! preferring vertices adjacent to those already placed. After each placement
//! the pattern edges back to placed vertices are routed as internally disjoint
//! paths, shortest first. Only induced paths are tried: a path with a chord can
//! always be shortcut, which keeps every other path valid. Interchangeable
//! pattern vertices (same neighborhood) take increasing images, and for a
//! balanced complete bipartite pattern the side holding the smallest image is
//! fixed. For a 2-connected pattern the search runs block by block.

use super::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubdivisionModel {
    /// Image of each pattern vertex.
    pub branch: Vec<usize>,
    /// For each pattern edge `(a, b)` with `a < b`, the path in `G` from
    /// `branch[a]` to `branch[b]`, endpoints included.
    pub paths: Vec<((usize, usize), Vec<usize>)>,
}

impl SubdivisionModel {
    /// Checks the model against `g` and `h` from scratch.
    pub fn verify(&self, g: &Graph, h: &Graph) -> bool {
        if self.branch.len() != h.p() || self.paths.len() != h.q() {
            return false;
        }
        let mut used = vec![false; g.p()];
        for &b in &self.branch {
            if b >= g.p() || std::mem::replace(&mut used[b], true) {
                return false;
            }
        }
        let mut edges: Vec<(usize, usize)> = self.paths.iter().map(|(e, _)| *e).collect();
        edges.sort_unstable();
        if edges != h.edges() {
            return false;
        }
        for ((a, b), path) in &self.paths {
            if path.len() < 2 || path[0] != self.branch[*a] || path[path.len() - 1] != self.branch[*b] {
                return false;
            }
            if path.windows(2).any(|w| !g.has_edge(w[0], w[1])) {
                return false;
            }
            for &x in &path[1..path.len() - 1] {
                if x >= g.p() || std::mem::replace(&mut used[x], true) {
                    return false;
                }
            }
        }
        true
    }

    /// The same model with every `G` vertex `x` renamed to `map[x]`.
    pub fn relabel(&self, map: &[usize]) -> SubdivisionModel {
        SubdivisionModel {
            branch: self.branch.iter().map(|&b| map[b]).collect(),
            paths: self.paths.iter().map(|(e, path)| (*e, path.iter().map(|&x| map[x]).collect())).collect(),
        }
    }

    /// Union of the model's paths as a graph on the vertices of `G`.
    pub fn as_subgraph(&self, p: usize) -> Graph {
        let mut s = Graph::new(p);
        for (_, path) in &self.paths {
            for w in path.windows(2) {
                s.add_edge(w[0], w[1]);
            }
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SubdivisionOutcome {
    Found(SubdivisionModel),
    /// Exhaustive search completed without a model.
    Absent,
    BudgetExceeded,
}

/// Looks for a subdivision of `h` in `g`, spending at most `budget` search nodes.
pub fn find_subdivision(g: &Graph, h: &Graph, budget: u64) -> SubdivisionOutcome {
    find_subdivision_counted(g, h, budget).0
}

/// As [`find_subdivision`], also returning the number of nodes spent.
pub fn find_subdivision_counted(g: &Graph, h: &Graph, budget: u64) -> (SubdivisionOutcome, u64) {
    let g = g.simple();
    if h.p() > g.p() || h.q() > g.q() {
        return (SubdivisionOutcome::Absent, 0);
    }
    if h.q() == 0 {
        let branch: Vec<usize> = (0..h.p()).collect();
        return (SubdivisionOutcome::Found(SubdivisionModel { branch, paths: Vec::new() }), 0);
    }
    let regions: Vec<Vec<usize>> = if is_biconnected(h) { blocks(&g) } else { vec![(0..g.p()).collect()] };
    let mut spent = 0u64;
    for region in regions {
        if region.len() < h.p() {
            continue;
        }
        let sub = g.induced(&region);
        if sub.q() < h.q() {
            continue;
        }
        let mut s = Searcher::new(&sub, h, budget - spent);
        let flow = s.place(0);
        spent += s.nodes;
        match flow {
            Flow::Found => {
                let lift = |v: usize| region[v];
                let model = SubdivisionModel {
                    branch: s.image.iter().map(|&v| lift(v)).collect(),
                    paths: {
                        let mut p: Vec<((usize, usize), Vec<usize>)> = s
                            .paths
                            .iter()
                            .map(|((a, b), path)| ((*a, *b), path.iter().map(|&v| lift(v)).collect()))
                            .collect();
                        p.sort();
                        p
                    },
                };
                return (SubdivisionOutcome::Found(model), spent);
            }
            Flow::Budget => return (SubdivisionOutcome::BudgetExceeded, budget),
            Flow::Continue => {}
        }
    }
    (SubdivisionOutcome::Absent, spent)
}

fn is_biconnected(h: &Graph) -> bool {
    if h.p() < 3 || !h.is_connected() {
        return false;
    }
    (0..h.p()).all(|v| {
        let rest: Vec<usize> = (0..h.p()).filter(|&w| w != v).collect();
        h.induced(&rest).is_connected()
    })
}

/// Vertex sets of the biconnected blocks with at least three vertices.
fn blocks(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.p();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut out = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        // iterative DFS: (vertex, parent, next neighbor index)
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        disc[root] = time;
        low[root] = time;
        time += 1;
        while let Some(&mut (u, parent, ref mut i)) = stack.last_mut() {
            if *i < g.degree(u) {
                let v = g.neighbors(u)[*i];
                *i += 1;
                if v == parent {
                    continue;
                }
                if disc[v] == usize::MAX {
                    edge_stack.push((u, v));
                    disc[v] = time;
                    low[v] = time;
                    time += 1;
                    stack.push((v, u, 0));
                } else if disc[v] < disc[u] {
                    edge_stack.push((u, v));
                    low[u] = low[u].min(disc[v]);
                }
            } else {
                stack.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[u]);
                    if low[u] >= disc[parent] {
                        let mut comp = Vec::new();
                        while let Some((a, b)) = edge_stack.pop() {
                            comp.push(a);
                            comp.push(b);
                            if (a, b) == (parent, u) {
                                break;
                            }
                        }
                        comp.sort_unstable();
                        comp.dedup();
                        if comp.len() >= 3 {
                            out.push(comp);
                        }
                    }
                }
            }
        }
    }
    out.sort();
    out
}

enum Flow {
    Found,
    Continue,
    Budget,
}

const FREE: usize = usize::MAX;
const INTERNAL: usize = usize::MAX - 1;

struct Searcher<'a> {
    g: &'a Graph,
    h: &'a Graph,
    order: Vec<usize>,
    /// For `order[i]`, its pattern neighbors placed earlier.
    back: Vec<Vec<usize>>,
    /// Previous member of the same twin class in placement order.
    twin_prev: Vec<Option<usize>>,
    /// `(a, b)`: the image of `b` must exceed the image of `a`.
    side_break: Option<(usize, usize)>,
    image: Vec<usize>,
    /// Per `G` vertex: `FREE`, `INTERNAL`, or the pattern vertex placed there.
    owner: Vec<usize>,
    routed: Vec<bool>,
    unrouted: Vec<usize>,
    paths: Vec<((usize, usize), Vec<usize>)>,
    nodes: u64,
    budget: u64,
}

impl<'a> Searcher<'a> {
    fn new(g: &'a Graph, h: &'a Graph, budget: u64) -> Self {
        let ph = h.p();
        let mut order: Vec<usize> = Vec::with_capacity(ph);
        let mut placed = vec![false; ph];
        while order.len() < ph {
            let next = (0..ph)
                .filter(|&v| !placed[v])
                .max_by_key(|&v| {
                    let links = h.neighbors(v).iter().filter(|&&w| placed[w]).count();
                    (links, h.degree(v), std::cmp::Reverse(v))
                })
                .unwrap();
            placed[next] = true;
            order.push(next);
        }
        let pos: Vec<usize> = {
            let mut pos = vec![0; ph];
            for (i, &v) in order.iter().enumerate() {
                pos[v] = i;
            }
            pos
        };
        let back = order
            .iter()
            .map(|&v| {
                let mut b: Vec<usize> = h.neighbors(v).iter().copied().filter(|&w| pos[w] < pos[v]).collect();
                b.sort_by_key(|&w| pos[w]);
                b
            })
            .collect();
        let twin = |a: usize, b: usize| {
            let strip =
                |x: usize, y: usize| -> Vec<usize> { h.neighbors(x).iter().copied().filter(|&w| w != y).collect() };
            strip(a, b) == strip(b, a)
        };
        let mut twin_prev = vec![None; ph];
        for i in 0..ph {
            let v = order[i];
            twin_prev[v] = (0..i).rev().map(|j| order[j]).find(|&u| twin(u, v));
        }
        let side_break = balanced_bipartite_sides(h).map(|(a, b)| {
            let first = |side: &[usize]| *side.iter().min_by_key(|&&v| pos[v]).unwrap();
            let (fa, fb) = (first(&a), first(&b));
            if pos[fa] < pos[fb] {
                (fa, fb)
            } else {
                (fb, fa)
            }
        });
        Searcher {
            g,
            h,
            order,
            back,
            twin_prev,
            side_break,
            image: vec![FREE; ph],
            owner: vec![FREE; g.p()],
            routed: vec![false; ph * ph],
            unrouted: (0..ph).map(|v| h.degree(v)).collect(),
            paths: Vec::new(),
            nodes: 0,
            budget,
        }
    }

    fn tick(&mut self) -> bool {
        self.nodes += 1;
        self.nodes <= self.budget
    }

    /// Every placed branch vertex still has room for its unrouted edges.
    fn feasible(&self) -> bool {
        let ph = self.h.p();
        (0..ph).all(|x| {
            let gx = self.image[x];
            if gx == FREE || self.unrouted[x] == 0 {
                return true;
            }
            let room = self
                .g
                .neighbors(gx)
                .iter()
                .filter(|&&w| match self.owner[w] {
                    FREE => true,
                    INTERNAL => false,
                    y => self.h.has_edge(x, y) && !self.routed[x * ph + y],
                })
                .count();
            room >= self.unrouted[x]
        })
    }

    fn place(&mut self, idx: usize) -> Flow {
        if idx == self.order.len() {
            return Flow::Found;
        }
        let hv = self.order[idx];
        let lower = self.twin_prev[hv].map(|t| self.image[t]);
        let side_lower = match self.side_break {
            Some((a, b)) if b == hv => Some(self.image[a]),
            _ => None,
        };
        for gv in 0..self.g.p() {
            if self.owner[gv] != FREE || self.g.degree(gv) < self.h.degree(hv) {
                continue;
            }
            if lower.is_some_and(|l| gv < l) || side_lower.is_some_and(|l| gv < l) {
                continue;
            }
            if !self.tick() {
                return Flow::Budget;
            }
            self.image[hv] = gv;
            self.owner[gv] = hv;
            if self.feasible() {
                match self.route(idx, 0) {
                    Flow::Continue => {}
                    other => return other,
                }
            }
            self.owner[gv] = FREE;
            self.image[hv] = FREE;
        }
        Flow::Continue
    }

    /// Routes the `k`-th back edge of `order[idx]`, then continues.
    fn route(&mut self, idx: usize, k: usize) -> Flow {
        let hv = self.order[idx];
        if k == self.back[idx].len() {
            return self.place(idx + 1);
        }
        let hu = self.back[idx][k];
        let (from, to) = (self.image[hu], self.image[hv]);
        let ph = self.h.p();
        for path in self.induced_paths(from, to) {
            if !self.tick() {
                return Flow::Budget;
            }
            for &x in &path[1..path.len() - 1] {
                self.owner[x] = INTERNAL;
            }
            self.routed[hu * ph + hv] = true;
            self.routed[hv * ph + hu] = true;
            self.unrouted[hu] -= 1;
            self.unrouted[hv] -= 1;
            let key = (hu.min(hv), hu.max(hv));
            let oriented = if hu < hv { path.clone() } else { path.iter().rev().copied().collect() };
            self.paths.push((key, oriented));
            if self.feasible() {
                match self.route(idx, k + 1) {
                    Flow::Continue => {}
                    other => return other,
                }
            }
            self.paths.pop();
            self.unrouted[hu] += 1;
            self.unrouted[hv] += 1;
            self.routed[hu * ph + hv] = false;
            self.routed[hv * ph + hu] = false;
            for &x in &path[1..path.len() - 1] {
                self.owner[x] = FREE;
            }
        }
        Flow::Continue
    }

    /// Induced paths from `a` to `b` through free vertices, shortest first.
    fn induced_paths(&self, a: usize, b: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut path = vec![a];
        let mut on_path = vec![false; self.g.p()];
        on_path[a] = true;
        self.extend(b, &mut path, &mut on_path, &mut out);
        out.sort_by_key(Vec::len);
        out
    }

    fn extend(&self, b: usize, path: &mut Vec<usize>, on_path: &mut [bool], out: &mut Vec<Vec<usize>>) {
        let end = *path.last().unwrap();
        if self.g.has_edge(end, b) {
            // any other continuation would have the chord end-b
            let mut p = path.clone();
            p.push(b);
            out.push(p);
            return;
        }
        for &w in self.g.neighbors(end) {
            if self.owner[w] != FREE || on_path[w] {
                continue;
            }
            // w may touch only `end` among the path vertices
            if path[..path.len() - 1].iter().any(|&x| self.g.has_edge(x, w)) {
                continue;
            }
            path.push(w);
            on_path[w] = true;
            self.extend(b, path, on_path, out);
            on_path[w] = false;
            path.pop();
        }
    }
}

/// The two sides of `h` when it is `K_{n,n}`.
fn balanced_bipartite_sides(h: &Graph) -> Option<(Vec<usize>, Vec<usize>)> {
    let color = h.two_coloring()?;
    let a: Vec<usize> = (0..h.p()).filter(|&v| !color[v]).collect();
    let b: Vec<usize> = (0..h.p()).filter(|&v| color[v]).collect();
    (a.len() == b.len() && h.q() == a.len() * b.len()).then_some((a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_bipartite, complete_graph, disjoint_copies};

    fn found(g: &Graph, h: &Graph) -> SubdivisionModel {
        match find_subdivision(g, h, 1_000_000) {
            SubdivisionOutcome::Found(m) => {
                assert!(m.verify(g, h));
                m
            }
            other => panic!("expected a model, got {other:?}"),
        }
    }

    #[test]
    fn identity_and_absence() {
        found(&complete_graph(5), &complete_graph(5));
        assert_eq!(find_subdivision(&complete_graph(4), &complete_graph(5), 1000), SubdivisionOutcome::Absent);
        assert_eq!(
            find_subdivision(&complete_graph(5), &complete_bipartite(3, 3), 1_000_000),
            SubdivisionOutcome::Absent
        );
    }

    #[test]
    fn subdivided_k33_in_petersen() {
        let petersen = Graph::from_edges(
            10,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (0, 4),
                (0, 5),
                (1, 6),
                (2, 7),
                (3, 8),
                (4, 9),
                (5, 7),
                (7, 9),
                (6, 9),
                (6, 8),
                (5, 8),
            ],
        );
        let m = found(&petersen, &complete_bipartite(3, 3));
        assert!(m.paths.iter().any(|(_, p)| p.len() > 2));
        assert_eq!(find_subdivision(&petersen, &complete_graph(5), 1_000_000), SubdivisionOutcome::Absent);
    }

    #[test]
    fn planar_graphs_have_no_kuratowski_subdivision() {
        // 3x3 grid plus a triangulated octahedron
        let grid = Graph::from_edges(
            9,
            &[(0, 1), (1, 2), (3, 4), (4, 5), (6, 7), (7, 8), (0, 3), (3, 6), (1, 4), (4, 7), (2, 5), (5, 8)],
        );
        let mut oct = complete_graph(6);
        for (u, v) in [(0, 1), (2, 3), (4, 5)] {
            oct.remove_edge(u, v);
        }
        for g in [grid, oct] {
            assert_eq!(find_subdivision(&g, &complete_graph(5), 1_000_000), SubdivisionOutcome::Absent);
            assert_eq!(find_subdivision(&g, &complete_bipartite(3, 3), 1_000_000), SubdivisionOutcome::Absent);
        }
    }

    #[test]
    fn budget_is_distinct_from_absence() {
        let g = complete_graph(9);
        assert_eq!(find_subdivision(&g, &complete_bipartite(4, 4), 3), SubdivisionOutcome::BudgetExceeded);
        // components too small for K44: nothing to search
        let small = disjoint_copies(&complete_graph(6), 2);
        assert_eq!(find_subdivision(&small, &complete_bipartite(4, 4), 3), SubdivisionOutcome::Absent);
    }

    #[test]
    fn blocks_of_a_bowtie() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]);
        assert_eq!(blocks(&g), vec![vec![0, 1, 2], vec![2, 3, 4]]);
    }
}
