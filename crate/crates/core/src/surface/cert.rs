//! Embedding certificates: a signed scheme bundled with the graph it embeds and
//! the face data it claims, in a line-oriented text format.
//!
//! ```text
//! graph 3 3
//! e 0 1
//! e 0 2
//! e 1 2
//! rot 0: 1 2
//! rot 1: 0 2
//! rot 2: 0 1
//! sig 1 2 -
//! faces 1
//! euler-genus 1
//! orientable false
//! ```
//! `sig` lines cover the edges outside the breadth-first spanning forest (plus
//! any negative forest edge); edges without a line have signature `+`.

use std::collections::{BTreeSet, VecDeque};
use std::fmt::Write as _;

use sha2::{Digest, Sha256};

use super::scheme::{trace_faces, FaceTrace, SchemeError, SignedScheme};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingCertificate {
    p: usize,
    edges: Vec<(usize, usize)>,
    scheme: SignedScheme,
    faces: usize,
    euler_genus: usize,
    orientable: bool,
}

/// Identity of a graph: vertex and edge counts plus a SHA-256 of the sorted edge list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fingerprint {
    pub p: usize,
    pub q: usize,
    pub digest: String,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CertificateMismatch {
    #[error("certificate is for a different graph")]
    Fingerprint,
    #[error("malformed scheme: {0}")]
    Scheme(#[from] SchemeError),
    #[error("claims {claimed} faces, tracing gives {traced}")]
    FaceCount { claimed: usize, traced: usize },
    #[error("claims Euler genus {claimed}, tracing gives {traced}")]
    EulerGenus { claimed: usize, traced: usize },
    #[error("claims orientable={claimed}, signatures give {traced}")]
    Orientability { claimed: bool, traced: bool },
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("certificate line {line}: {msg}")]
pub struct CertificateParseError {
    pub line: usize,
    pub msg: String,
}

pub fn fingerprint(g: &Graph) -> Fingerprint {
    let edges = g.edges();
    let mut hasher = Sha256::new();
    hasher.update(format!("{} {}\n", g.p(), edges.len()));
    for (u, v) in &edges {
        hasher.update(format!("{u} {v}\n"));
    }
    let digest = hasher.finalize().iter().map(|b| format!("{b:02x}")).collect();
    Fingerprint { p: g.p(), q: edges.len(), digest }
}

/// Edges of the breadth-first spanning forest rooted at the least vertex of each
/// component, scanning neighbors in increasing order.
pub fn bfs_forest(g: &Graph) -> BTreeSet<(usize, usize)> {
    let mut seen = vec![false; g.p()];
    let mut tree = BTreeSet::new();
    for root in 0..g.p() {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    tree.insert((u.min(w), u.max(w)));
                    queue.push_back(w);
                }
            }
        }
    }
    tree
}

impl EmbeddingCertificate {
    /// Traces `scheme` on `g` and records the result.
    pub fn from_scheme(g: &Graph, scheme: SignedScheme) -> Result<Self, SchemeError> {
        let g = g.simple();
        let t = trace_faces(&g, &scheme)?;
        Ok(EmbeddingCertificate {
            p: g.p(),
            edges: g.edges(),
            scheme,
            faces: t.face_count,
            euler_genus: t.euler_genus,
            orientable: t.orientable,
        })
    }

    pub fn graph(&self) -> Graph {
        Graph::from_edges(self.p, &self.edges)
    }

    pub fn fingerprint(&self) -> Fingerprint {
        fingerprint(&self.graph())
    }

    pub fn scheme(&self) -> &SignedScheme {
        &self.scheme
    }

    pub fn faces(&self) -> usize {
        self.faces
    }

    pub fn euler_genus(&self) -> usize {
        self.euler_genus
    }

    pub fn orientable(&self) -> bool {
        self.orientable
    }

    /// Overrides the claimed face count (for building deliberately wrong certificates).
    pub fn with_claimed_faces(mut self, faces: usize) -> Self {
        self.faces = faces;
        self
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("graph {} {}\n", self.p, self.edges.len());
        for (u, v) in &self.edges {
            writeln!(out, "e {u} {v}").unwrap();
        }
        for v in 0..self.p {
            let rot: Vec<String> = self.scheme.rotation(v).iter().map(|u| u.to_string()).collect();
            if rot.is_empty() {
                writeln!(out, "rot {v}:").unwrap();
            } else {
                writeln!(out, "rot {v}: {}", rot.join(" ")).unwrap();
            }
        }
        let tree = bfs_forest(&self.graph());
        for &(u, v) in &self.edges {
            let s = self.scheme.sign(u, v);
            if !tree.contains(&(u, v)) || s < 0 {
                writeln!(out, "sig {u} {v} {}", if s < 0 { '-' } else { '+' }).unwrap();
            }
        }
        writeln!(out, "faces {}", self.faces).unwrap();
        writeln!(out, "euler-genus {}", self.euler_genus).unwrap();
        writeln!(out, "orientable {}", self.orientable).unwrap();
        out
    }

    pub fn parse(text: &str) -> Result<Self, CertificateParseError> {
        let err = |line: usize, msg: &str| CertificateParseError { line, msg: msg.to_string() };
        let num = |line: usize, s: &str| s.parse::<usize>().map_err(|_| err(line, &format!("bad number {s:?}")));
        let mut p = None;
        let mut q = 0;
        let mut edges = Vec::new();
        let mut rotation: Vec<Option<Vec<usize>>> = Vec::new();
        let mut negative = Vec::new();
        let (mut faces, mut genus, mut orientable) = (None, None, None);
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let l = raw.trim();
            if l.is_empty() {
                continue;
            }
            let (head, rest) = l.split_once(' ').unwrap_or((l, ""));
            match head {
                "graph" => {
                    let parts: Vec<&str> = rest.split_whitespace().collect();
                    if parts.len() != 2 || p.is_some() {
                        return Err(err(line, "expected one \"graph <p> <q>\" header"));
                    }
                    let n = num(line, parts[0])?;
                    p = Some(n);
                    q = num(line, parts[1])?;
                    rotation = vec![None; n];
                }
                "e" => {
                    let parts: Vec<&str> = rest.split_whitespace().collect();
                    if parts.len() != 2 {
                        return Err(err(line, "expected \"e <u> <v>\""));
                    }
                    edges.push((num(line, parts[0])?, num(line, parts[1])?));
                }
                "rot" => {
                    let (v, nb) = rest.split_once(':').ok_or_else(|| err(line, "expected \"rot <v>: ...\""))?;
                    let v = num(line, v.trim())?;
                    let nb = nb.split_whitespace().map(|s| num(line, s)).collect::<Result<Vec<_>, _>>()?;
                    let slot = rotation.get_mut(v).ok_or_else(|| err(line, "vertex out of range"))?;
                    *slot = Some(nb);
                }
                "sig" => {
                    let parts: Vec<&str> = rest.split_whitespace().collect();
                    match parts.as_slice() {
                        [u, v, "-"] => negative.push((num(line, u)?, num(line, v)?)),
                        [_, _, "+"] => {}
                        _ => return Err(err(line, "expected \"sig <u> <v> <+|->\"")),
                    }
                }
                "faces" => faces = Some(num(line, rest.trim())?),
                "euler-genus" => genus = Some(num(line, rest.trim())?),
                "orientable" => {
                    orientable = Some(match rest.trim() {
                        "true" => true,
                        "false" => false,
                        _ => return Err(err(line, "expected true or false")),
                    })
                }
                _ => return Err(err(line, &format!("unknown line {l:?}"))),
            }
        }
        let p = p.ok_or_else(|| err(1, "missing graph header"))?;
        if edges.len() != q {
            return Err(err(1, &format!("header declares {q} edges, found {}", edges.len())));
        }
        if edges.iter().any(|&(u, v)| u >= v || v >= p) {
            return Err(err(1, "edges must be \"e u v\" with u < v < p"));
        }
        let rotation = rotation
            .into_iter()
            .enumerate()
            .map(|(v, r)| r.ok_or_else(|| err(1, &format!("missing rotation for vertex {v}"))))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(EmbeddingCertificate {
            p,
            edges,
            scheme: SignedScheme::new(rotation, negative),
            faces: faces.ok_or_else(|| err(1, "missing faces line"))?,
            euler_genus: genus.ok_or_else(|| err(1, "missing euler-genus line"))?,
            orientable: orientable.ok_or_else(|| err(1, "missing orientable line"))?,
        })
    }
}

/// Re-traces the certificate against `g`; `Ok` carries the fresh trace.
pub fn verify_certificate(g: &Graph, cert: &EmbeddingCertificate) -> Result<FaceTrace, CertificateMismatch> {
    let g = g.simple();
    if fingerprint(&g) != cert.fingerprint() {
        return Err(CertificateMismatch::Fingerprint);
    }
    let t = trace_faces(&g, &cert.scheme)?;
    if t.face_count != cert.faces {
        return Err(CertificateMismatch::FaceCount { claimed: cert.faces, traced: t.face_count });
    }
    if t.euler_genus != cert.euler_genus {
        return Err(CertificateMismatch::EulerGenus { claimed: cert.euler_genus, traced: t.euler_genus });
    }
    if t.orientable != cert.orientable {
        return Err(CertificateMismatch::Orientability { claimed: cert.orientable, traced: t.orientable });
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete_graph;

    fn mobius_triangle() -> EmbeddingCertificate {
        let rot = vec![vec![1, 2], vec![0, 2], vec![0, 1]];
        EmbeddingCertificate::from_scheme(&complete_graph(3), SignedScheme::new(rot, [(1, 2)])).unwrap()
    }

    #[test]
    fn text_round_trip_is_exact() {
        let c = mobius_triangle();
        let text = c.to_text();
        assert!(text.contains("sig 1 2 -\n"));
        let back = EmbeddingCertificate::parse(&text).unwrap();
        assert_eq!(back, c);
        assert_eq!(back.to_text(), text);
    }

    #[test]
    fn verification_reasons() {
        let c = mobius_triangle();
        assert!(verify_certificate(&complete_graph(3), &c).is_ok());
        assert_eq!(verify_certificate(&complete_graph(4), &c), Err(CertificateMismatch::Fingerprint));
        let tampered = c.clone().with_claimed_faces(2);
        assert!(matches!(
            verify_certificate(&complete_graph(3), &tampered),
            Err(CertificateMismatch::FaceCount { claimed: 2, traced: 1 })
        ));
    }

    #[test]
    fn parse_errors_name_the_line() {
        assert_eq!(EmbeddingCertificate::parse("graph 1 0\nbogus\n").unwrap_err().line, 2);
        assert!(EmbeddingCertificate::parse("graph 2 1\ne 0 1\nrot 0: 1\n").is_err());
    }
}
