//! Exact branch-and-bound search for cellular embeddings of bounded Euler genus.
//!
//! Schemes are normalized: edges of the breadth-first spanning tree carry `+1`,
//! and the rotation at the root is taken up to reflection. Faces are traced one
//! at a time starting from the least unused walk state; whenever the walk needs
//! an undecided rotation link or co-tree signature the search branches on it.
//! A partial scheme is abandoned once the closed faces plus the most faces the
//! remaining darts could still form falls short of `2 - p + q - k`.
//!
//! For parallel runs the tree is cut at a fixed depth into subtrees that are
//! searched independently and merged in left-to-right order, charging each
//! subtree's node count against the budget in that order. The cut does not
//! depend on the worker count, so neither does the result.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use rayon::prelude::*;

use super::cert::{bfs_forest, EmbeddingCertificate};
use super::scheme::SignedScheme;
use super::SurfaceError;
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientability {
    Orientable,
    Nonorientable,
    Either,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EmbeddingOutcome {
    Found(EmbeddingCertificate),
    /// Exhaustive search found no embedding.
    ProvedNone,
    BudgetExceeded,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    /// Maximum number of search-tree nodes.
    pub budget: u64,
    pub workers: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { budget: 10_000_000, workers: 1 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchReport {
    pub outcome: EmbeddingOutcome,
    pub nodes: u64,
}

/// Searches for a cellular embedding of the connected graph `g` with Euler genus
/// at most `k` and the requested orientability.
pub fn search_embedding(
    g: &Graph,
    k: usize,
    mode: Orientability,
    config: SearchConfig,
) -> Result<SearchReport, SurfaceError> {
    let g = g.simple();
    if !g.is_connected() {
        return Err(SurfaceError::Disconnected);
    }
    if g.p() == 0 {
        return Err(SurfaceError::TooFewVertices(0));
    }
    let problem = Problem::new(&g, k, mode);
    let frontier = problem.frontier();
    let budget = config.budget;
    let results: Vec<SubResult> = if config.workers <= 1 {
        let mut out = Vec::new();
        let mut spent = 0u64;
        for prefix in &frontier {
            let r = problem.run_subtree(prefix, budget - spent.min(budget), &|_| false);
            let stop = !matches!(r, SubResult::Exhausted(_));
            if let SubResult::Exhausted(n) = r {
                spent += n;
            }
            out.push(r);
            if stop || spent > budget {
                break;
            }
        }
        out
    } else {
        let found_min = AtomicUsize::new(usize::MAX);
        let done: Mutex<Vec<Option<u64>>> = Mutex::new(vec![None; frontier.len()]);
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(config.workers)
            .build()
            .map_err(|e| SurfaceError::Internal(e.to_string()))?;
        pool.install(|| {
            frontier
                .par_iter()
                .enumerate()
                .map(|(j, prefix)| {
                    let cancel = |own: u64| {
                        if found_min.load(Ordering::Relaxed) < j {
                            return true;
                        }
                        let d = done.lock().unwrap();
                        let before: Option<u64> = d[..j].iter().copied().sum();
                        before.is_some_and(|b| b + own > budget)
                    };
                    let r = problem.run_subtree(prefix, budget, &cancel);
                    match r {
                        SubResult::Found(..) => {
                            found_min.fetch_min(j, Ordering::Relaxed);
                        }
                        SubResult::Exhausted(n) => done.lock().unwrap()[j] = Some(n),
                        _ => {}
                    }
                    r
                })
                .collect()
        })
    };
    let mut spent = 0u64;
    for r in results {
        match r {
            SubResult::Found(cert, n) => {
                if spent + n <= budget {
                    return Ok(SearchReport { outcome: EmbeddingOutcome::Found(cert), nodes: spent + n });
                }
                return Ok(SearchReport { outcome: EmbeddingOutcome::BudgetExceeded, nodes: budget });
            }
            SubResult::Exhausted(n) => {
                spent += n;
                if spent > budget {
                    return Ok(SearchReport { outcome: EmbeddingOutcome::BudgetExceeded, nodes: budget });
                }
            }
            SubResult::Budget | SubResult::Cancelled => {
                return Ok(SearchReport { outcome: EmbeddingOutcome::BudgetExceeded, nodes: budget });
            }
        }
    }
    Ok(SearchReport { outcome: EmbeddingOutcome::ProvedNone, nodes: spent })
}

enum SubResult {
    Found(EmbeddingCertificate, u64),
    Exhausted(u64),
    Budget,
    Cancelled,
}

const NONE: u32 = u32::MAX;
/// Target number of independent subtrees for parallel runs.
const SPLIT_TARGET: usize = 48;
const MAX_SPLIT_DEPTH: usize = 10;

struct Problem<'g> {
    g: &'g Graph,
    q: usize,
    ends: Vec<[u32; 2]>,
    /// Slot of edge `e` at end `i` is `eslot[2e + i]`; slots of vertex `v` are
    /// `off[v]..off[v] + deg(v)`.
    eslot: Vec<u32>,
    off: Vec<u32>,
    slot_vertex: Vec<u32>,
    slot_edge: Vec<u32>,
    tree: Vec<bool>,
    cotree: usize,
    target_faces: i64,
    lmin: usize,
    mode: Orientability,
}

impl<'g> Problem<'g> {
    fn new(g: &'g Graph, k: usize, mode: Orientability) -> Self {
        let edges = g.edges();
        let q = edges.len();
        let mut off = Vec::with_capacity(g.p() + 1);
        let mut acc = 0u32;
        for v in 0..g.p() {
            off.push(acc);
            acc += g.degree(v) as u32;
        }
        off.push(acc);
        let mut eslot = vec![0u32; 2 * q];
        let mut slot_vertex = vec![0u32; 2 * q];
        let mut slot_edge = vec![0u32; 2 * q];
        let index: std::collections::HashMap<(usize, usize), usize> =
            edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        for v in 0..g.p() {
            for (i, &w) in g.neighbors(v).iter().enumerate() {
                let e = index[&(v.min(w), v.max(w))];
                let slot = off[v] + i as u32;
                let end = usize::from(v != edges[e].0);
                eslot[2 * e + end] = slot;
                slot_vertex[slot as usize] = v as u32;
                slot_edge[slot as usize] = e as u32;
            }
        }
        let forest = bfs_forest(g);
        let tree: Vec<bool> = edges.iter().map(|e| forest.contains(e)).collect();
        let cotree = tree.iter().filter(|&&t| !t).count();
        let lmin = if q == 1 {
            2
        } else if g.min_degree() >= 2 {
            g.girth().unwrap_or(3)
        } else {
            3
        };
        Problem {
            g,
            q,
            ends: edges.iter().map(|&(a, b)| [a as u32, b as u32]).collect(),
            eslot,
            off,
            slot_vertex,
            slot_edge,
            tree,
            cotree,
            target_faces: 2 - g.p() as i64 + q as i64 - k as i64,
            lmin,
            mode,
        }
    }

    fn deg(&self, v: usize) -> usize {
        (self.off[v + 1] - self.off[v]) as usize
    }

    fn fresh(&self) -> Engine<'_, 'g> {
        let mut sign = vec![0i8; self.q];
        for (e, &t) in self.tree.iter().enumerate() {
            if t {
                sign[e] = 1;
            }
        }
        Engine {
            pb: self,
            succ: vec![NONE; 2 * self.q],
            pred: vec![NONE; 2 * self.q],
            sign,
            used: vec![false; 4 * self.q],
            states: Vec::new(),
            trail: Vec::new(),
            sc: Scalars {
                open: false,
                face_start: 0,
                cur: 0,
                cur_len: 0,
                face_begin: 0,
                closed: 0,
                closed_len: 0,
                unset_cotree: self.cotree,
                negatives: 0,
            },
            prefix: Vec::new(),
            path: Vec::new(),
            split_at: None,
            frontier: Vec::new(),
            nodes: 0,
            budget: u64::MAX,
        }
    }

    /// Subtree prefixes in search order, cut at the shallowest depth giving
    /// enough pieces.
    fn frontier(&self) -> Vec<Vec<u32>> {
        let mut best = vec![Vec::new()];
        for depth in 1..=MAX_SPLIT_DEPTH {
            let mut eng = self.fresh();
            eng.split_at = Some(depth);
            eng.dfs(&|_| false);
            let cut = std::mem::take(&mut eng.frontier);
            let reached = cut.iter().any(|p| p.len() == depth);
            if cut.is_empty() {
                return cut;
            }
            best = cut;
            if best.len() >= SPLIT_TARGET || !reached {
                break;
            }
        }
        best
    }

    fn run_subtree(&self, prefix: &[u32], budget: u64, cancel: &(dyn Fn(u64) -> bool + Sync)) -> SubResult {
        let mut eng = self.fresh();
        eng.prefix = prefix.to_vec();
        eng.budget = budget;
        match eng.dfs(cancel) {
            Flow::Found => SubResult::Found(eng.certificate(), eng.nodes),
            Flow::Continue => SubResult::Exhausted(eng.nodes),
            Flow::Budget => SubResult::Budget,
            Flow::Cancelled => SubResult::Cancelled,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Flow {
    Found,
    Continue,
    Budget,
    Cancelled,
}

#[derive(Clone, Copy)]
struct Scalars {
    open: bool,
    face_start: u32,
    cur: u32,
    cur_len: usize,
    face_begin: usize,
    closed: usize,
    closed_len: usize,
    unset_cotree: usize,
    negatives: usize,
}

enum Change {
    Link(u32, u32),
    Sign(u32),
    Used(u32),
}

enum Choice {
    Sign(u32, i8),
    Link(u32, u32),
}

struct Engine<'p, 'g> {
    pb: &'p Problem<'g>,
    succ: Vec<u32>,
    pred: Vec<u32>,
    sign: Vec<i8>,
    used: Vec<bool>,
    /// Walk states of all faces traced so far, in order.
    states: Vec<u32>,
    trail: Vec<Change>,
    sc: Scalars,
    prefix: Vec<u32>,
    path: Vec<u32>,
    split_at: Option<usize>,
    frontier: Vec<Vec<u32>>,
    nodes: u64,
    budget: u64,
}

impl Engine<'_, '_> {
    fn mirror(&self, s: u32) -> u32 {
        let e = s / 4;
        let end = (s / 2) % 2;
        let eps: i8 = if s % 2 == 0 { 1 } else { -1 };
        let back = -eps * self.sign[e as usize];
        e * 4 + (1 - end) * 2 + u32::from(back < 0)
    }

    fn mark_used(&mut self, s: u32) {
        if !self.used[s as usize] {
            self.used[s as usize] = true;
            self.trail.push(Change::Used(s));
        }
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            match self.trail.pop().unwrap() {
                Change::Link(from, to) => {
                    self.succ[from as usize] = NONE;
                    self.pred[to as usize] = NONE;
                }
                Change::Sign(e) => self.sign[e as usize] = 0,
                Change::Used(s) => self.used[s as usize] = false,
            }
        }
    }

    fn bound_ok(&self) -> bool {
        let pb = self.pb;
        let remaining = 2 * pb.q - self.sc.closed_len;
        let possible = if self.sc.open {
            let need = self.sc.cur_len.max(pb.lmin);
            if remaining < need {
                self.sc.closed + 1
            } else {
                self.sc.closed + 1 + (remaining - need) / pb.lmin
            }
        } else {
            self.sc.closed + remaining / pb.lmin
        };
        possible as i64 >= pb.target_faces
    }

    fn first_unused(&self) -> Option<u32> {
        self.used.iter().position(|&u| !u).map(|s| s as u32)
    }

    /// Whether `succ(from) = to` keeps the rotation at the vertex a union of
    /// chains or one full cycle.
    fn link_ok(&self, from: u32, to: u32) -> bool {
        if self.succ[from as usize] != NONE || self.pred[to as usize] != NONE {
            return false;
        }
        let v = self.pb.slot_vertex[from as usize] as usize;
        let deg = self.pb.deg(v);
        let mut x = to;
        let mut count = 1;
        loop {
            if x == from {
                return count == deg;
            }
            let nx = self.succ[x as usize];
            if nx == NONE {
                return true;
            }
            x = nx;
            count += 1;
        }
    }

    fn root_ok(&self) -> bool {
        if self.pb.deg(0) < 3 {
            return true;
        }
        let r = self.pb.off[0] as usize;
        let (s, p) = (self.succ[r], self.pred[r]);
        s == NONE || p == NONE || s < p
    }

    fn apply(&mut self, c: &Choice) -> bool {
        match *c {
            Choice::Sign(e, s) => {
                self.sign[e as usize] = s;
                self.trail.push(Change::Sign(e));
                self.sc.unset_cotree -= 1;
                if s < 0 {
                    self.sc.negatives += 1;
                }
                true
            }
            Choice::Link(from, to) => {
                self.succ[from as usize] = to;
                self.pred[to as usize] = from;
                self.trail.push(Change::Link(from, to));
                self.root_ok()
            }
        }
    }

    fn branch(&mut self, choices: Vec<Choice>, cancel: &(dyn Fn(u64) -> bool + Sync)) -> Flow {
        let depth = self.path.len();
        let forced = choices.len() == 1;
        if !forced && depth < self.prefix.len() {
            let i = self.prefix[depth] as usize;
            let Some(c) = choices.get(i) else { return Flow::Continue };
            let (mark, sc, len) = (self.trail.len(), self.sc, self.states.len());
            self.path.push(i as u32);
            let flow = if self.apply(c) { self.dfs(cancel) } else { Flow::Continue };
            self.path.pop();
            if flow == Flow::Found && self.split_at.is_none() {
                return flow;
            }
            self.undo_to(mark);
            self.sc = sc;
            self.states.truncate(len);
            return flow;
        }
        if !forced && self.split_at == Some(depth) {
            self.frontier.push(self.path.clone());
            return Flow::Continue;
        }
        for (i, c) in choices.iter().enumerate() {
            if !forced {
                self.nodes += 1;
                if self.nodes > self.budget {
                    return Flow::Budget;
                }
                if self.nodes % 1024 == 0 && cancel(self.nodes) {
                    return Flow::Cancelled;
                }
                self.path.push(i as u32);
            }
            let (mark, sc, len) = (self.trail.len(), self.sc, self.states.len());
            let flow = if self.apply(c) { self.dfs(cancel) } else { Flow::Continue };
            if !forced {
                self.path.pop();
            }
            if flow == Flow::Found && self.split_at.is_none() {
                return flow;
            }
            self.undo_to(mark);
            self.sc = sc;
            self.states.truncate(len);
            if flow == Flow::Budget || flow == Flow::Cancelled {
                return flow;
            }
        }
        Flow::Continue
    }

    fn dfs(&mut self, cancel: &(dyn Fn(u64) -> bool + Sync)) -> Flow {
        let pb = self.pb;
        loop {
            if !self.sc.open {
                let Some(s) = self.first_unused() else { return self.complete() };
                self.sc.open = true;
                self.sc.face_start = s;
                self.sc.cur = s;
                self.sc.cur_len = 1;
                self.sc.face_begin = self.states.len();
                self.mark_used(s);
                self.states.push(s);
                if !self.bound_ok() {
                    return Flow::Continue;
                }
            }
            let s = self.sc.cur;
            let e = (s / 4) as usize;
            let end = ((s / 2) % 2) as usize;
            let eps: i8 = if s % 2 == 0 { 1 } else { -1 };
            if self.sign[e] == 0 {
                let choices = match pb.mode {
                    Orientability::Orientable => vec![Choice::Sign(e as u32, 1)],
                    Orientability::Nonorientable if self.sc.unset_cotree == 1 && self.sc.negatives == 0 => {
                        vec![Choice::Sign(e as u32, -1)]
                    }
                    _ => vec![Choice::Sign(e as u32, 1), Choice::Sign(e as u32, -1)],
                };
                return self.branch(choices, cancel);
            }
            let eps2 = eps * self.sign[e];
            let arrive = pb.eslot[2 * e + 1 - end];
            let next = if eps2 > 0 { self.succ[arrive as usize] } else { self.pred[arrive as usize] };
            if next == NONE {
                let w = pb.slot_vertex[arrive as usize] as usize;
                let range = pb.off[w]..pb.off[w + 1];
                let choices: Vec<Choice> = if eps2 > 0 {
                    range.filter(|&x| self.link_ok(arrive, x)).map(|x| Choice::Link(arrive, x)).collect()
                } else {
                    range.filter(|&x| self.link_ok(x, arrive)).map(|x| Choice::Link(x, arrive)).collect()
                };
                if choices.is_empty() {
                    return Flow::Continue;
                }
                return self.branch(choices, cancel);
            }
            let e2 = pb.slot_edge[next as usize] as usize;
            let w = pb.slot_vertex[next as usize];
            let end2 = u32::from(pb.ends[e2][0] != w);
            let s2 = e2 as u32 * 4 + end2 * 2 + u32::from(eps2 < 0);
            if s2 == self.sc.face_start {
                self.sc.closed += 1;
                self.sc.closed_len += self.sc.cur_len;
                for i in self.sc.face_begin..self.states.len() {
                    let m = self.mirror(self.states[i]);
                    self.mark_used(m);
                }
                self.sc.open = false;
                if !self.bound_ok() {
                    return Flow::Continue;
                }
                continue;
            }
            if self.used[s2 as usize] {
                return Flow::Continue;
            }
            self.mark_used(s2);
            self.states.push(s2);
            self.sc.cur = s2;
            self.sc.cur_len += 1;
            if !self.bound_ok() {
                return Flow::Continue;
            }
        }
    }

    fn complete(&mut self) -> Flow {
        // an isolated vertex is one face
        let faces = self.sc.closed + usize::from(self.pb.q == 0);
        if (faces as i64) < self.pb.target_faces {
            return Flow::Continue;
        }
        if self.pb.mode == Orientability::Nonorientable && self.sc.negatives == 0 {
            return Flow::Continue;
        }
        if self.split_at.is_some() {
            self.frontier.push(self.path.clone());
            return Flow::Continue;
        }
        Flow::Found
    }

    fn certificate(&self) -> EmbeddingCertificate {
        let pb = self.pb;
        let g = pb.g;
        let rotation: Vec<Vec<usize>> = (0..g.p())
            .map(|v| {
                let deg = pb.deg(v);
                let mut rot = Vec::with_capacity(deg);
                if deg > 0 {
                    let first = pb.off[v];
                    let mut x = first;
                    loop {
                        rot.push(g.neighbors(v)[(x - first) as usize]);
                        x = self.succ[x as usize];
                        if x == first {
                            break;
                        }
                    }
                }
                rot
            })
            .collect();
        let negative = (0..pb.q).filter(|&e| self.sign[e] < 0).map(|e| {
            let [a, b] = pb.ends[e];
            (a as usize, b as usize)
        });
        EmbeddingCertificate::from_scheme(g, SignedScheme::new(rotation, negative))
            .expect("search builds valid schemes")
    }
}
