use super::Graph;

pub fn complete_graph(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v);
        }
    }
    g
}

/// Parts `0..m` and `m..m+n`.
pub fn complete_bipartite(m: usize, n: usize) -> Graph {
    let mut g = Graph::new(m + n);
    for u in 0..m {
        for v in m..m + n {
            g.add_edge(u, v);
        }
    }
    g
}

/// Tensor product: distinct `(u1,u2)`, `(v1,v2)` adjacent iff `u1v1 ∈ E(G1)` and
/// `u2v2 ∈ E(G2)`, where a loop counts as the edge `uu`. Vertex `(a, b)` gets
/// index `a * p2 + b`, matching the product coding of rings. Always simple.
pub fn tensor(g1: &Graph, g2: &Graph) -> Graph {
    let p2 = g2.p();
    let mut g = Graph::new(g1.p() * p2);
    let closed = |g: &Graph, v: usize| -> Vec<usize> {
        let mut nb = g.neighbors(v).to_vec();
        if g.has_loop(v) {
            nb.push(v);
        }
        nb
    };
    for a1 in 0..g1.p() {
        let n1 = closed(g1, a1);
        for a2 in 0..p2 {
            let u = a1 * p2 + a2;
            let n2 = closed(g2, a2);
            for &b1 in &n1 {
                for &b2 in &n2 {
                    let v = b1 * p2 + b2;
                    if u < v {
                        g.add_edge(u, v);
                    }
                }
            }
        }
    }
    if let (Some(l1), Some(l2)) = (g1.labels(), g2.labels()) {
        let labels = (0..g.p())
            .map(|v| {
                let (a, b) = (&l1[v / p2], &l2[v % p2]);
                let strip = |s: &str| s.trim_start_matches('(').trim_end_matches(')').to_string();
                format!("({},{})", strip(a), strip(b))
            })
            .collect();
        g.set_labels(labels);
    }
    g
}

/// `k` vertex-disjoint copies; copy `i` occupies `i*p..(i+1)*p`.
pub fn disjoint_copies(g: &Graph, k: usize) -> Graph {
    assert!(k >= 1, "need at least one copy");
    disjoint_union(&vec![g; k])
}

pub fn disjoint_union(parts: &[&Graph]) -> Graph {
    let total = parts.iter().map(|g| g.p()).sum();
    let loops = parts.iter().any(|g| g.loops_allowed());
    let mut out = if loops { Graph::with_loops(total) } else { Graph::new(total) };
    let mut offset = 0;
    for g in parts {
        for (u, v) in g.edges() {
            out.add_edge(u + offset, v + offset);
        }
        for v in 0..g.p() {
            if g.has_loop(v) {
                out.add_edge(v + offset, v + offset);
            }
        }
        offset += g.p();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k2_tensor_k2_is_a_matching() {
        let g = tensor(&complete_graph(2), &complete_graph(2));
        assert_eq!(g.edges(), vec![(0, 3), (1, 2)]);
    }

    #[test]
    fn copies() {
        let g = disjoint_copies(&complete_graph(5), 2);
        assert_eq!((g.p(), g.q(), g.components().len()), (10, 20, 2));
        assert_eq!(disjoint_copies(&complete_graph(2), 3).q(), 3);
    }

    #[test]
    fn complete_counts() {
        assert_eq!(complete_graph(5).q(), 10);
        assert_eq!(complete_bipartite(3, 3).q(), 9);
    }
}
