//! Graph isomorphism by color refinement plus individualization.

use std::collections::BTreeMap;

use super::Graph;

type Coloring = Vec<usize>;

/// A bijection `phi` with `uv ∈ E(g) ⇔ phi(u)phi(v) ∈ E(h)` (loops included), if any.
pub fn isomorphic(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if g.p() != h.p() || g.q() != h.q() || g.loop_count() != h.loop_count() {
        return None;
    }
    if g.degree_sequence() != h.degree_sequence() {
        return None;
    }
    let init = |x: &Graph| -> Vec<(usize, bool)> { (0..x.p()).map(|v| (x.degree(v), x.has_loop(v))).collect() };
    let (cg, ch) = rank_jointly(&init(g), &init(h));
    let (cg, ch) = refine(g, h, cg, ch)?;
    search(g, h, cg, ch)
}

/// Replaces keys by their rank among the keys of both sides.
fn rank_jointly<K: Ord + Clone>(a: &[K], b: &[K]) -> (Coloring, Coloring) {
    let mut ranks: BTreeMap<K, usize> = BTreeMap::new();
    for k in a.iter().chain(b) {
        ranks.entry(k.clone()).or_insert(0);
    }
    for (i, v) in ranks.values_mut().enumerate() {
        *v = i;
    }
    (a.iter().map(|k| ranks[k]).collect(), b.iter().map(|k| ranks[k]).collect())
}

fn histogram(c: &Coloring) -> BTreeMap<usize, usize> {
    let mut h = BTreeMap::new();
    for &x in c {
        *h.entry(x).or_insert(0) += 1;
    }
    h
}

fn class_count(c: &Coloring) -> usize {
    histogram(c).len()
}

/// Iterates neighbor-color refinement on both graphs in lockstep; `None` once the
/// color histograms diverge.
fn refine(g: &Graph, h: &Graph, mut cg: Coloring, mut ch: Coloring) -> Option<(Coloring, Coloring)> {
    loop {
        if histogram(&cg) != histogram(&ch) {
            return None;
        }
        let before = class_count(&cg);
        let sig = |x: &Graph, c: &Coloring| -> Vec<(usize, Vec<usize>)> {
            (0..x.p())
                .map(|v| {
                    let mut nb: Vec<usize> = x.neighbors(v).iter().map(|&w| c[w]).collect();
                    nb.sort_unstable();
                    (c[v], nb)
                })
                .collect()
        };
        let (ng, nh) = rank_jointly(&sig(g, &cg), &sig(h, &ch));
        cg = ng;
        ch = nh;
        if class_count(&cg) == before {
            return (histogram(&cg) == histogram(&ch)).then_some((cg, ch));
        }
    }
}

fn search(g: &Graph, h: &Graph, cg: Coloring, ch: Coloring) -> Option<Vec<usize>> {
    let hist = histogram(&cg);
    let Some((&target, _)) = hist.iter().filter(|(_, &n)| n > 1).min_by_key(|(&c, &n)| (n, c)) else {
        let mut by_color = vec![0; h.p()];
        for (w, &c) in ch.iter().enumerate() {
            by_color[c] = w;
        }
        let phi: Vec<usize> = cg.iter().map(|&c| by_color[c]).collect();
        let ok = g.edges().iter().all(|&(u, v)| h.has_edge(phi[u], phi[v]))
            && (0..g.p()).all(|v| g.has_loop(v) == h.has_loop(phi[v]));
        return ok.then_some(phi);
    };
    let fresh = hist.len();
    let v = cg.iter().position(|&c| c == target).unwrap();
    for w in (0..h.p()).filter(|&w| ch[w] == target) {
        let mut cg2 = cg.clone();
        let mut ch2 = ch.clone();
        cg2[v] = fresh;
        ch2[w] = fresh;
        if let Some((a, b)) = refine(g, h, cg2, ch2) {
            if let Some(phi) = search(g, h, a, b) {
                return Some(phi);
            }
        }
    }
    None
}
