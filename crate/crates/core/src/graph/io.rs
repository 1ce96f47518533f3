//! Edge-list text format and DOT export.
//!
//! ```text
//! graph 3 2
//! e 0 1
//! e 1 2
//! l 0 (0,1)
//! ```
//! Edges are 0-based with `u < v`; `e v v` declares a loop. Label lines are optional.

use std::fmt::Write as _;

use super::Graph;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {msg}")]
pub struct GraphParseError {
    pub line: usize,
    pub msg: String,
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("graph {} {}\n", g.p(), g.q() + g.loop_count());
    let mut edges = g.edges();
    edges.extend((0..g.p()).filter(|&v| g.has_loop(v)).map(|v| (v, v)));
    edges.sort_unstable();
    for (u, v) in edges {
        writeln!(out, "e {u} {v}").unwrap();
    }
    if let Some(labels) = g.labels() {
        for (v, l) in labels.iter().enumerate() {
            writeln!(out, "l {v} {l}").unwrap();
        }
    }
    out
}

pub fn parse_edge_list(text: &str) -> Result<Graph, GraphParseError> {
    let err = |line: usize, msg: String| GraphParseError { line, msg };
    let mut lines =
        text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or_else(|| err(1, "empty input".into()))?;
    let parts: Vec<&str> = header.split_whitespace().collect();
    let (p, q) = match parts.as_slice() {
        ["graph", p, q] => (
            p.parse::<usize>().map_err(|_| err(hline, format!("bad vertex count {p:?}")))?,
            q.parse::<usize>().map_err(|_| err(hline, format!("bad edge count {q:?}")))?,
        ),
        _ => return Err(err(hline, "expected \"graph <p> <q>\"".into())),
    };
    let mut edges = Vec::new();
    let mut labels: Vec<Option<String>> = vec![None; p];
    let num = |line: usize, s: &str| -> Result<usize, GraphParseError> {
        let v = s.parse::<usize>().map_err(|_| err(line, format!("bad vertex {s:?}")))?;
        if v >= p {
            return Err(err(line, format!("vertex {v} out of range")));
        }
        Ok(v)
    };
    for (line, l) in lines {
        let mut it = l.splitn(3, ' ');
        match (it.next(), it.next(), it.next()) {
            (Some("e"), Some(u), Some(v)) => {
                let (u, v) = (num(line, u)?, num(line, v.trim())?);
                if u > v {
                    return Err(err(line, format!("edge endpoints must satisfy u <= v, got {u} {v}")));
                }
                edges.push((u, v));
            }
            (Some("l"), Some(v), Some(label)) => labels[num(line, v)?] = Some(label.trim().to_string()),
            _ => return Err(err(line, format!("unrecognized line {l:?}"))),
        }
    }
    if edges.len() != q {
        return Err(err(hline, format!("header declares {q} edges, found {}", edges.len())));
    }
    let loops = edges.iter().any(|(u, v)| u == v);
    let mut g = if loops { Graph::with_loops(p) } else { Graph::new(p) };
    for (u, v) in edges {
        if !g.add_edge(u, v) {
            return Err(err(hline, format!("duplicate edge {u} {v}")));
        }
    }
    if labels.iter().any(Option::is_some) {
        g.set_labels(labels.into_iter().enumerate().map(|(v, l)| l.unwrap_or_else(|| v.to_string())).collect());
    }
    Ok(g)
}

pub fn to_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.p() {
        writeln!(out, "  {v} [label=\"{}\"];", g.label(v).replace('"', "\\\"")).unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    for v in (0..g.p()).filter(|&v| g.has_loop(v)) {
        writeln!(out, "  {v} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete_graph;

    #[test]
    fn round_trip() {
        let mut g = complete_graph(4);
        g.set_labels(vec!["a".into(), "(0,1)".into(), "c".into(), "d".into()]);
        let text = to_edge_list(&g);
        let back = parse_edge_list(&text).unwrap();
        assert_eq!(back, g);
        assert_eq!(to_edge_list(&back), text);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse_edge_list("graph 2 1\ne 0 2\n").is_err());
        assert!(parse_edge_list("graph 2 2\ne 0 1\n").is_err());
        assert!(parse_edge_list("graph 2 1\ne 1 0\n").is_err());
        assert_eq!(parse_edge_list("grph 2 1").unwrap_err().line, 1);
    }

    #[test]
    fn dot_mentions_every_edge() {
        let d = to_dot(&complete_graph(3));
        assert_eq!(d.matches(" -- ").count(), 3);
    }
}
