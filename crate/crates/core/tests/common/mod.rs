//! Strategies and property bodies shared by the property suites and the
//! acceptance target.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use crosscap::graph::{disjoint_copies, disjoint_union, gamma_with_units, isomorphic, tensor, Graph};
use crosscap::ring::{compile_ring, inverse_closed_subsets, FiniteRing, LocalRing, RingSpec};
use crosscap::surface::{
    bfs_forest, crosscap_exact, orientable_genus, search_embedding, stahl_compose, trace_faces, verify_certificate,
    EmbeddingCertificate, EmbeddingOutcome, Orientability, SearchConfig, SignedScheme,
};
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

pub const CASES: u32 = 200;

fn products(max_order: usize, max_factors: usize) -> Vec<Vec<LocalRing>> {
    let mut all = LocalRing::ALL.to_vec();
    all.sort();
    let mut out = Vec::new();
    fn rec(
        all: &[LocalRing],
        start: usize,
        order: usize,
        lim: (usize, usize),
        cur: &mut Vec<LocalRing>,
        out: &mut Vec<Vec<LocalRing>>,
    ) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        if cur.len() == lim.1 {
            return;
        }
        for (i, &l) in all.iter().enumerate().skip(start) {
            if order * l.order() <= lim.0 {
                cur.push(l);
                rec(all, i, order * l.order(), lim, cur, out);
                cur.pop();
            }
        }
    }
    rec(&all, 0, 1, (max_order, max_factors), &mut Vec::new(), &mut out);
    out
}

pub fn ring_of(factors: &[LocalRing]) -> FiniteRing {
    compile_ring(&RingSpec::product(factors.iter().map(|f| f.spec()))).unwrap()
}

/// A ring of order at most `max_order` together with a random inverse-closed `S`.
#[derive(Clone, Debug)]
pub struct RingCase {
    pub factors: Vec<LocalRing>,
    pub s_seed: usize,
}

impl RingCase {
    pub fn ring(&self) -> FiniteRing {
        ring_of(&self.factors)
    }

    pub fn s(&self, r: &FiniteRing) -> Vec<usize> {
        let all = inverse_closed_subsets(r);
        all[self.s_seed % all.len()].clone()
    }
}

pub fn ring_case(max_order: usize) -> impl Strategy<Value = RingCase> {
    let rings = products(max_order, 4);
    (proptest::sample::select(rings), any::<usize>()).prop_map(|(factors, s_seed)| RingCase { factors, s_seed })
}

fn adjacent_by_definition(r: &FiniteRing, s: &[usize], x: usize, y: usize) -> bool {
    s.iter().any(|&t| r.is_unit(r.add(x, r.mul(t, y))))
}

pub fn gamma_adjacency(case: &RingCase) -> Result<(), TestCaseError> {
    let r = case.ring();
    let s = case.s(&r);
    let g = gamma_with_units(&r, &s, true).unwrap();
    prop_assert_eq!(g.p(), r.order());
    for x in 0..r.order() {
        prop_assert_eq!(g.has_loop(x), adjacent_by_definition(&r, &s, x, x));
        for y in 0..r.order() {
            if x != y {
                prop_assert_eq!(g.has_edge(x, y), g.has_edge(y, x));
                prop_assert_eq!(g.has_edge(x, y), adjacent_by_definition(&r, &s, x, y), "x={} y={}", x, y);
            }
        }
    }
    Ok(())
}

pub fn degree_bounds(case: &RingCase) -> Result<(), TestCaseError> {
    let r = case.ring();
    let s = case.s(&r);
    let u = r.units().len();
    let simple = gamma_with_units(&r, &s, false).unwrap();
    let looped = gamma_with_units(&r, &s, true).unwrap();
    for x in 0..r.order() {
        let d = simple.degree(x);
        prop_assert!(u - 1 <= d && d <= u * s.len(), "deg {} outside [{}, {}]", d, u - 1, u * s.len());
        let closed = looped.degree_with_loop(x);
        prop_assert!(u <= closed && closed <= u * s.len());
    }
    Ok(())
}

pub fn coset_lifting(case: &RingCase) -> Result<(), TestCaseError> {
    let r = case.ring();
    let s = case.s(&r);
    let g = gamma_with_units(&r, &s, false).unwrap();
    let j = r.jacobson_radical();
    for (x, y) in g.edges() {
        for &a in j {
            for &b in j {
                let (u, v) = (r.add(x, a), r.add(y, b));
                if u != v {
                    prop_assert!(g.has_edge(u, v), "{}~{} but not {}~{}", x, y, u, v);
                }
            }
        }
    }
    Ok(())
}

pub fn index_two_bipartite(case: &RingCase) -> Result<(), TestCaseError> {
    let r = case.ring();
    let s = case.s(&r);
    let g = gamma_with_units(&r, &s, false).unwrap();
    let ideals = r.index2_maximal_ideals();
    if ideals.is_empty() {
        return Ok(());
    }
    prop_assert!(g.is_bipartite());
    if let Some(m) = r.local_maximal_ideal() {
        let inside: BTreeSet<usize> = m.iter().copied().collect();
        for x in 0..r.order() {
            for y in 0..r.order() {
                if x != y {
                    prop_assert_eq!(g.has_edge(x, y), inside.contains(&x) != inside.contains(&y));
                }
            }
        }
    }
    Ok(())
}

/// Two rings of order at most 9 with a connection set each.
pub fn ring_pair() -> impl Strategy<Value = (RingCase, RingCase)> {
    (ring_case(9), ring_case(9))
}

fn product_set(r2: &FiniteRing, s1: &[usize], s2: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = s1.iter().flat_map(|&a| s2.iter().map(move |&b| a * r2.order() + b)).collect();
    out.sort_unstable();
    out
}

pub fn tensor_isomorphism((c1, c2): &(RingCase, RingCase)) -> Result<(), TestCaseError> {
    let (r1, r2) = (c1.ring(), c2.ring());
    let (s1, s2) = (c1.s(&r1), c2.s(&r2));
    let mut factors = c1.factors.clone();
    factors.extend(&c2.factors);
    let r = compile_ring(&RingSpec::product(factors.iter().map(|f| f.spec()))).unwrap();
    let s = product_set(&r2, &s1, &s2);
    let whole = gamma_with_units(&r, &s, false).unwrap();
    let t = tensor(&gamma_with_units(&r1, &s1, true).unwrap(), &gamma_with_units(&r2, &s2, true).unwrap());
    prop_assert!(whole.same_edges(&t));
    prop_assert!(isomorphic(&whole, &t).is_some());
    Ok(())
}

/// Catalog rings of order at most 9 paired with a copy count.
pub fn copies_case() -> impl Strategy<Value = (RingCase, usize)> {
    let locals: Vec<Vec<LocalRing>> = LocalRing::ALL.iter().filter(|l| l.order() <= 9).map(|&l| vec![l]).collect();
    (proptest::sample::select(locals), any::<usize>(), 1usize..=2)
        .prop_map(|(factors, s_seed, l)| (RingCase { factors, s_seed }, l))
}

fn z2_power_times(t: &[LocalRing], l: usize) -> FiniteRing {
    let mut f = vec![LocalRing::Z2; l];
    f.extend_from_slice(t);
    ring_of(&f)
}

/// `{1} x ... x {1} x S'` inside `Z2^l x T`.
fn lift_set(t: &FiniteRing, s: &[usize], l: usize) -> Vec<usize> {
    let ones: usize = (0..l).map(|i| t.order() << i).sum();
    let mut out: Vec<usize> = s.iter().map(|&x| ones + x).collect();
    out.sort_unstable();
    out
}

pub fn disjoint_copy_isomorphism((case, l): &(RingCase, usize)) -> Result<(), TestCaseError> {
    let t = case.ring();
    let s = case.s(&t);
    let base_ring = z2_power_times(&case.factors, 1);
    let base_s = lift_set(&t, &s, 1);
    let base = gamma_with_units(&base_ring, &base_s, false).unwrap();
    prop_assert_eq!(gamma_with_units(&base_ring, &base_s, true).unwrap().loop_count(), 0);
    let big = gamma_with_units(&z2_power_times(&case.factors, *l), &lift_set(&t, &s, *l), false).unwrap();
    prop_assert!(isomorphic(&big, &disjoint_copies(&base, 1 << (l - 1))).is_some());

    // When Γ(T, S') is itself bipartite and loop-free, one Z2 factor doubles it.
    let inner = gamma_with_units(&t, &s, true).unwrap();
    if inner.loop_count() == 0 && inner.is_bipartite() {
        let copies = disjoint_copies(&inner.simple(), 1 << l);
        prop_assert!(isomorphic(&big, &copies).is_some());
    }
    Ok(())
}

/// Random connected simple graph on `p` vertices: a random tree plus extra edges.
pub fn connected_graph(max_p: usize, max_extra: usize) -> impl Strategy<Value = Graph> {
    (2..=max_p)
        .prop_flat_map(move |p| {
            let parents: Vec<BoxedStrategy<usize>> = (1..p).map(|v| (0..v).boxed()).collect();
            (Just(p), parents, proptest::collection::vec((0..p, 0..p), 0..=max_extra))
        })
        .prop_map(|(p, parents, extra)| {
            let mut g = Graph::new(p);
            for (i, &u) in parents.iter().enumerate() {
                g.add_edge(u, i + 1);
            }
            for (u, v) in extra {
                if u != v {
                    g.add_edge(u, v);
                }
            }
            g
        })
}

fn config() -> SearchConfig {
    SearchConfig { budget: 5_000_000, workers: 1 }
}

/// Joins two connected graphs by a single bridge between their first vertices.
fn bridge_join(a: &Graph, b: &Graph) -> Graph {
    let mut g = disjoint_union(&[a, b]);
    g.add_edge(0, a.p());
    g
}

pub fn stahl_vs_search((a, b, two): &(Graph, Graph, bool)) -> Result<(), TestCaseError> {
    let cfg = config();
    let parts: Vec<&Graph> = if *two { vec![a, b] } else { vec![a] };
    let mut pairs = Vec::new();
    for g in &parts {
        let c = crosscap_exact(g, cfg).unwrap().exact();
        let o = orientable_genus(g, cfg).unwrap().exact();
        prop_assert!(c.is_some() && o.is_some());
        pairs.push((c, o));
    }
    let composed = stahl_compose(&pairs).unwrap();
    let direct = if *two { bridge_join(a, b) } else { a.clone() };
    let searched = crosscap_exact(&direct, cfg).unwrap().exact();
    prop_assert_eq!(Some(composed), searched);
    let union = disjoint_union(&parts);
    prop_assert_eq!(crosscap_exact(&union, cfg).unwrap().exact(), Some(composed));
    Ok(())
}

/// A random signed scheme on `g`.
pub fn random_scheme(g: &Graph, seed: &[u64]) -> SignedScheme {
    let mut k = 0;
    let mut next = || {
        k += 1;
        seed[k % seed.len()].wrapping_mul(0x9e37_79b9_7f4a_7c15).wrapping_add(k as u64) >> 7
    };
    let rotation: Vec<Vec<usize>> = (0..g.p())
        .map(|v| {
            let mut nb = g.neighbors(v).to_vec();
            for i in (1..nb.len()).rev() {
                nb.swap(i, (next() % (i as u64 + 1)) as usize);
            }
            nb
        })
        .collect();
    let negative: Vec<(usize, usize)> = g.edges().into_iter().filter(|_| next() % 3 == 0).collect();
    SignedScheme::new(rotation, negative)
}

pub fn scheme_case() -> impl Strategy<Value = (Graph, Vec<u64>)> {
    (connected_graph(8, 10), proptest::collection::vec(any::<u64>(), 1..8))
}

pub fn certificate_round_trip((g, seed): &(Graph, Vec<u64>)) -> Result<(), TestCaseError> {
    let cert = EmbeddingCertificate::from_scheme(g, random_scheme(g, seed)).unwrap();
    let text = cert.to_text();
    let back = EmbeddingCertificate::parse(&text).unwrap();
    prop_assert_eq!(&back, &cert);
    prop_assert_eq!(back.to_text(), text);
    prop_assert!(verify_certificate(g, &back).is_ok());
    prop_assert!(verify_certificate(g, &back.clone().with_claimed_faces(back.faces() + 1)).is_err());
    Ok(())
}

pub fn dart_conservation((g, seed): &(Graph, Vec<u64>)) -> Result<(), TestCaseError> {
    let scheme = random_scheme(g, seed);
    let t = trace_faces(g, &scheme).unwrap();
    let mut edge_uses: HashMap<(usize, usize), usize> = HashMap::new();
    for face in &t.faces {
        for &(u, v) in face {
            *edge_uses.entry((u.min(v), u.max(v))).or_default() += 1;
        }
    }
    prop_assert_eq!(t.faces.iter().map(|f| f.len()).sum::<usize>(), 2 * g.q());
    prop_assert_eq!(edge_uses.len(), g.q());
    prop_assert!(edge_uses.values().all(|&n| n == 2));
    let euler = 2 * g.components().len() as i64 - g.p() as i64 + g.q() as i64 - t.face_count as i64;
    prop_assert_eq!(euler, t.euler_genus as i64);
    prop_assert_eq!(t.orientable, scheme.is_balanced(g));
    Ok(())
}

fn permutations_with_fixed_head(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 2 {
        return vec![items.to_vec()];
    }
    let (head, rest) = (items[0], &items[1..]);
    let mut out = Vec::new();
    fn perm(rest: &mut Vec<usize>, k: usize, head: usize, out: &mut Vec<Vec<usize>>) {
        if k == rest.len() {
            let mut v = vec![head];
            v.extend_from_slice(rest);
            out.push(v);
            return;
        }
        for i in k..rest.len() {
            rest.swap(k, i);
            perm(rest, k + 1, head, out);
            rest.swap(k, i);
        }
    }
    perm(&mut rest.to_vec(), 0, head, &mut out);
    out
}

/// Number of signed schemes the brute-force oracle would visit.
pub fn oracle_cost(g: &Graph) -> u64 {
    let rot: u64 = (0..g.p()).map(|v| (1..g.degree(v).max(1) as u64).product::<u64>()).product();
    rot << (g.q() + 1 - g.p())
}

/// Minimum orientable and nonorientable Euler genus over every rotation system
/// and every co-tree signature; `None` when no nonorientable embedding exists.
pub fn brute_force_genus(g: &Graph) -> (usize, Option<usize>) {
    let per_vertex: Vec<Vec<Vec<usize>>> = (0..g.p()).map(|v| permutations_with_fixed_head(g.neighbors(v))).collect();
    let tree = bfs_forest(g);
    let cotree: Vec<(usize, usize)> = g.edges().into_iter().filter(|e| !tree.contains(e)).collect();
    let (mut best_o, mut best_n) = (usize::MAX, None::<usize>);
    let mut idx = vec![0usize; g.p()];
    loop {
        let rotation: Vec<Vec<usize>> = idx.iter().enumerate().map(|(v, &i)| per_vertex[v][i].clone()).collect();
        for mask in 0u64..(1 << cotree.len()) {
            let neg = cotree.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
            let t = trace_faces(g, &SignedScheme::new(rotation.clone(), neg)).unwrap();
            if t.orientable {
                best_o = best_o.min(t.euler_genus);
            } else {
                best_n = Some(best_n.map_or(t.euler_genus, |b: usize| b.min(t.euler_genus)));
            }
        }
        let mut v = 0;
        while v < idx.len() {
            idx[v] += 1;
            if idx[v] < per_vertex[v].len() {
                break;
            }
            idx[v] = 0;
            v += 1;
        }
        if v == idx.len() {
            break;
        }
    }
    (best_o, best_n)
}

pub fn search_matches_brute_force(g: &Graph) -> Result<(), TestCaseError> {
    let (min_o, min_n) = brute_force_genus(g);
    let top = min_o.max(min_n.unwrap_or(0)) + 1;
    for k in 0..=top {
        for (mode, best) in [(Orientability::Orientable, Some(min_o)), (Orientability::Nonorientable, min_n)] {
            let report = search_embedding(g, k, mode, config()).unwrap();
            let expect = best.is_some_and(|b| b <= k);
            match report.outcome {
                EmbeddingOutcome::Found(cert) => {
                    prop_assert!(expect, "found {:?} at k={} but oracle says {:?}", mode, k, best);
                    prop_assert!(cert.euler_genus() <= k);
                    prop_assert_eq!(cert.orientable(), mode == Orientability::Orientable);
                    prop_assert!(verify_certificate(g, &cert).is_ok());
                }
                EmbeddingOutcome::ProvedNone => prop_assert!(!expect, "missed {:?} at k={}", mode, k),
                EmbeddingOutcome::BudgetExceeded => prop_assert!(false, "budget exceeded"),
            }
        }
    }
    Ok(())
}

pub fn small_graph_for_oracle() -> impl Strategy<Value = Graph> {
    connected_graph(7, 9).prop_filter("oracle too expensive", |g| oracle_cost(g) <= 300_000)
}

pub fn stahl_case() -> impl Strategy<Value = (Graph, Graph, bool)> {
    (connected_graph(6, 7), connected_graph(6, 7), any::<bool>())
}
