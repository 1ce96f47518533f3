//! Signed rotation systems and face tracing.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::graph::Graph;

/// A rotation (cyclic neighbor order) at every vertex plus the set of edges
/// with signature `-1`; every other edge has signature `+1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedScheme {
    rotation: Vec<Vec<usize>>,
    negative: BTreeSet<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SchemeError {
    #[error("scheme has {got} rotations for a graph on {want} vertices")]
    VertexCount { got: usize, want: usize },
    #[error("rotation at vertex {0} is not a cyclic order of its neighbors")]
    BadRotation(usize),
    #[error("signature given for non-edge {0}-{1}")]
    BadSignature(usize, usize),
}

/// Result of tracing every face of a signed scheme.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceTrace {
    /// Each face as its cyclic sequence of traversed darts `(from, to)`.
    pub faces: Vec<Vec<(usize, usize)>>,
    /// Number of faces, counting one face for every isolated vertex.
    pub face_count: usize,
    /// `2c - p + q - F` for `c` components.
    pub euler_genus: usize,
    pub orientable: bool,
}

fn key(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

impl SignedScheme {
    pub fn new(rotation: Vec<Vec<usize>>, negative: impl IntoIterator<Item = (usize, usize)>) -> Self {
        SignedScheme { rotation, negative: negative.into_iter().map(|(u, v)| key(u, v)).collect() }
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn rotations(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    pub fn sign(&self, u: usize, v: usize) -> i8 {
        if self.negative.contains(&key(u, v)) {
            -1
        } else {
            1
        }
    }

    /// Edges with signature `-1`, as `(u, v)` with `u < v`.
    pub fn negative_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.negative.iter().copied()
    }

    pub fn validate(&self, g: &Graph) -> Result<(), SchemeError> {
        if self.rotation.len() != g.p() {
            return Err(SchemeError::VertexCount { got: self.rotation.len(), want: g.p() });
        }
        for (v, rot) in self.rotation.iter().enumerate() {
            let mut sorted = rot.clone();
            sorted.sort_unstable();
            if sorted != g.neighbors(v) {
                return Err(SchemeError::BadRotation(v));
            }
        }
        if let Some(&(u, v)) = self.negative.iter().find(|&&(u, v)| u == v || v >= g.p() || !g.has_edge(u, v)) {
            return Err(SchemeError::BadSignature(u, v));
        }
        Ok(())
    }

    /// Whether some switching makes every signature `+1`, i.e. every cycle has
    /// positive signature product.
    pub fn is_balanced(&self, g: &Graph) -> bool {
        let mut side: Vec<Option<i8>> = vec![None; g.p()];
        for s in 0..g.p() {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(1);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let su = side[u].unwrap();
                for &w in g.neighbors(u) {
                    let want = su * self.sign(u, w);
                    match side[w] {
                        None => {
                            side[w] = Some(want);
                            queue.push_back(w);
                        }
                        Some(x) if x != want => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }
}

/// Traces the faces of `scheme` on `g` (loops of `g` are ignored).
///
/// A walk state is a vertex, an incident edge to leave by, and a local
/// orientation. Crossing an edge multiplies the orientation by its signature;
/// on arrival the walk continues with the rotation successor of the arrival
/// edge under orientation `+1` and with its predecessor under `-1`. Each face
/// is traced once; the reverse walk around it is marked as seen.
pub fn trace_faces(g: &Graph, scheme: &SignedScheme) -> Result<FaceTrace, SchemeError> {
    scheme.validate(g)?;
    let pos: Vec<HashMap<usize, usize>> =
        scheme.rotation.iter().map(|rot| rot.iter().enumerate().map(|(i, &u)| (u, i)).collect()).collect();
    let edges = g.edges();
    let index: HashMap<(usize, usize), usize> = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let encode = |from: usize, to: usize, eps: i8| -> usize {
        let e = index[&key(from, to)];
        let end = usize::from(from != edges[e].0);
        e * 4 + end * 2 + usize::from(eps < 0)
    };
    let decode = |s: usize| -> (usize, usize, i8) {
        let (a, b) = edges[s / 4];
        let (from, to) = if (s / 2) % 2 == 0 { (a, b) } else { (b, a) };
        (from, to, if s % 2 == 0 { 1 } else { -1 })
    };
    let step = |s: usize| -> usize {
        let (v, w, eps) = decode(s);
        let eps2 = eps * scheme.sign(v, w);
        let rot = &scheme.rotation[w];
        let d = rot.len();
        let i = pos[w][&v];
        let x = if eps2 > 0 { rot[(i + 1) % d] } else { rot[(i + d - 1) % d] };
        encode(w, x, eps2)
    };
    let mirror = |s: usize| -> usize {
        let (v, w, eps) = decode(s);
        encode(w, v, -eps * scheme.sign(v, w))
    };
    let mut seen = vec![false; edges.len() * 4];
    let mut faces = Vec::new();
    for start in 0..seen.len() {
        if seen[start] {
            continue;
        }
        let mut face = Vec::new();
        let mut s = start;
        loop {
            seen[s] = true;
            seen[mirror(s)] = true;
            let (v, w, _) = decode(s);
            face.push((v, w));
            s = step(s);
            if s == start {
                break;
            }
        }
        faces.push(face);
    }
    let isolated = (0..g.p()).filter(|&v| g.degree(v) == 0).count();
    let face_count = faces.len() + isolated;
    let c = g.components().len();
    let euler_genus = (2 * c + g.q()).checked_sub(g.p() + face_count).expect("Euler characteristic bound");
    Ok(FaceTrace { faces, face_count, euler_genus, orientable: scheme.is_balanced(g) })
}
