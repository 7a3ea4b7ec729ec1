//! Line-oriented graph files.
//!
//! ```text
//! # comment
//! p 2 1 1          tripartite header: part sizes of A, B, C
//! e a0 b0          edge, tripartite vertices written a<i>, b<i>, c<i>
//! e c0 a1
//! ```
//!
//! General graphs use `g <n>`, integer vertices `e 0 3`, and optional part
//! labels `l <v> <label>`. Serialization writes edges in canonical order:
//! tripartite edges grouped AB, BC, CA in cyclic orientation and sorted by
//! index; general edges as sorted `u < v` pairs.

use std::collections::HashSet;
use std::fmt::Write as _;

use super::{GeneralGraph, Part, PartPair, TripartiteGraph};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphFile {
    General(GeneralGraph),
    Tripartite(TripartiteGraph),
}

impl GraphFile {
    pub fn graph(&self) -> &GeneralGraph {
        match self {
            GraphFile::General(g) => g,
            GraphFile::Tripartite(t) => t.graph(),
        }
    }

    /// The tripartite view, converting labelled general graphs when possible.
    pub fn into_tripartite(self) -> Result<TripartiteGraph> {
        match self {
            GraphFile::Tripartite(t) => Ok(t),
            GraphFile::General(g) => TripartiteGraph::from_general(&g),
        }
    }
}

enum Header {
    General(usize),
    Tripartite([usize; 3]),
}

fn parse_usize(tok: &str, line: usize, what: &str) -> Result<usize> {
    tok.parse()
        .map_err(|_| Error::parse(line, format!("expected {what}, found {tok:?}")))
}

fn parse_tripartite_vertex(tok: &str, sizes: [usize; 3], line: usize) -> Result<(Part, usize)> {
    let mut chars = tok.chars();
    let part = match chars.next() {
        Some('a') => Part::A,
        Some('b') => Part::B,
        Some('c') => Part::C,
        _ => return Err(Error::parse(line, format!("expected vertex like a0/b0/c0, found {tok:?}"))),
    };
    let index = parse_usize(chars.as_str(), line, "vertex index")?;
    if index >= sizes[part.index()] {
        return Err(Error::parse(
            line,
            format!("vertex {tok} out of range (part size {})", sizes[part.index()]),
        ));
    }
    Ok((part, index))
}

pub fn parse_graph(text: &str) -> Result<GraphFile> {
    let mut header: Option<Header> = None;
    let mut general_edges: Vec<(usize, usize)> = Vec::new();
    let mut labels: Vec<(usize, u8, usize)> = Vec::new();
    let mut lists: [Vec<(usize, usize)>; 3] = Default::default();
    let mut seen: HashSet<(usize, usize, usize)> = HashSet::new();

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let toks: Vec<&str> = content.split_whitespace().collect();
        match (toks[0], &header) {
            ("p", None) => {
                if toks.len() != 4 {
                    return Err(Error::parse(line, "header must be `p <nA> <nB> <nC>`"));
                }
                let s = [
                    parse_usize(toks[1], line, "part size")?,
                    parse_usize(toks[2], line, "part size")?,
                    parse_usize(toks[3], line, "part size")?,
                ];
                header = Some(Header::Tripartite(s));
            }
            ("g", None) => {
                if toks.len() != 2 {
                    return Err(Error::parse(line, "header must be `g <n>`"));
                }
                header = Some(Header::General(parse_usize(toks[1], line, "vertex count")?));
            }
            ("p" | "g", Some(_)) => return Err(Error::parse(line, "second header line")),
            (_, None) => return Err(Error::parse(line, "edge or label before header")),
            ("e", Some(h)) => {
                if toks.len() != 3 {
                    return Err(Error::parse(line, "edge must be `e <x> <y>`"));
                }
                match h {
                    Header::General(n) => {
                        let u = parse_usize(toks[1], line, "vertex")?;
                        let v = parse_usize(toks[2], line, "vertex")?;
                        if u >= *n || v >= *n {
                            return Err(Error::parse(line, format!("vertex out of range for n = {n}")));
                        }
                        if u == v {
                            return Err(Error::parse(line, "loop edge"));
                        }
                        if !seen.insert((0, u.min(v), u.max(v))) {
                            return Err(Error::parse(line, "duplicate edge"));
                        }
                        general_edges.push((u.min(v), u.max(v)));
                    }
                    Header::Tripartite(sizes) => {
                        let x = parse_tripartite_vertex(toks[1], *sizes, line)?;
                        let y = parse_tripartite_vertex(toks[2], *sizes, line)?;
                        let (pair, forward) = PartPair::between(x.0, y.0)
                            .ok_or_else(|| Error::parse(line, "edge inside a single part"))?;
                        let e = if forward { (x.1, y.1) } else { (y.1, x.1) };
                        if !seen.insert((pair.index(), e.0, e.1)) {
                            return Err(Error::parse(line, "duplicate edge"));
                        }
                        lists[pair.index()].push(e);
                    }
                }
            }
            ("l", Some(Header::General(n))) => {
                if toks.len() != 3 {
                    return Err(Error::parse(line, "label must be `l <v> <label>`"));
                }
                let v = parse_usize(toks[1], line, "vertex")?;
                if v >= *n {
                    return Err(Error::parse(line, format!("vertex out of range for n = {n}")));
                }
                let label: u8 = toks[2]
                    .parse()
                    .map_err(|_| Error::parse(line, format!("bad label {:?}", toks[2])))?;
                labels.push((v, label, line));
            }
            (other, Some(_)) => return Err(Error::parse(line, format!("unknown record {other:?}"))),
        }
    }

    match header {
        None => Err(Error::parse(0, "missing header")),
        Some(Header::Tripartite(sizes)) => {
            let [ab, bc, ca] = lists;
            TripartiteGraph::new(sizes, ab, bc, ca).map(GraphFile::Tripartite)
        }
        Some(Header::General(n)) => {
            let mut g = GeneralGraph::from_edges(n, general_edges)?;
            if !labels.is_empty() {
                let mut parts = vec![None; n];
                for (v, label, line) in labels {
                    if parts[v].replace(label).is_some() {
                        return Err(Error::parse(line, format!("vertex {v} labelled twice")));
                    }
                }
                let parts: Option<Vec<u8>> = parts.into_iter().collect();
                let parts = parts.ok_or_else(|| Error::parse(0, "labels must cover every vertex"))?;
                g = g.with_parts(parts)?;
            }
            Ok(GraphFile::General(g))
        }
    }
}

pub fn serialize_tripartite(g: &TripartiteGraph) -> String {
    let s = g.sizes();
    let mut out = format!("p {} {} {}\n", s[0], s[1], s[2]);
    for pair in PartPair::ALL {
        let (p, q) = pair.parts();
        for &(i, j) in g.pair_edges(pair) {
            let _ = writeln!(out, "e {}{} {}{}", p.letter(), i, q.letter(), j);
        }
    }
    out
}

pub fn serialize_general(g: &GeneralGraph) -> String {
    let mut out = format!("g {}\n", g.vertex_count());
    if let Some(parts) = g.parts() {
        for (v, p) in parts.iter().enumerate() {
            let _ = writeln!(out, "l {v} {p}");
        }
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {u} {v}");
    }
    out
}

pub fn serialize_graph(g: &GraphFile) -> String {
    match g {
        GraphFile::General(g) => serialize_general(g),
        GraphFile::Tripartite(t) => serialize_tripartite(t),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge() {
        let g = parse_graph("p 1 1 1\ne a0 b0\n").unwrap();
        let GraphFile::Tripartite(t) = &g else { panic!() };
        assert_eq!(t.edge_count(), 1);
        assert_eq!(serialize_graph(&g), "p 1 1 1\ne a0 b0\n");
    }

    #[test]
    fn empty_graph() {
        let g = parse_graph("# nothing\np 0 0 0\n").unwrap();
        assert_eq!(g.graph().vertex_count(), 0);
    }

    #[test]
    fn reversed_edges_are_canonicalised() {
        let g = parse_graph("p 2 2 2\ne b1 a0\ne a1 c0\ne c1 b0\n").unwrap();
        assert_eq!(serialize_graph(&g), "p 2 2 2\ne a0 b1\ne b0 c1\ne c0 a1\n");
    }

    #[test]
    fn errors_name_the_line() {
        let cases = [
            ("p 1 1 1\ne a0 b0\ne b0 a0\n", 3),
            ("p 1 1 1\n\ne a0 b1\n", 3),
            ("p 1 1 1\ne a0 a0\n", 2),
            ("g 3\ne 0 7\n", 2),
            ("g 3\ne 0 1\nx\n", 3),
            ("e 0 1\n", 1),
        ];
        for (text, line) in cases {
            match parse_graph(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
    }

    #[test]
    fn general_with_labels() {
        let text = "g 3\nl 0 0\nl 1 1\nl 2 2\ne 0 1\ne 1 2\n";
        let g = parse_graph(text).unwrap();
        assert_eq!(g.graph().parts(), Some(&[0u8, 1, 2][..]));
        assert_eq!(serialize_graph(&g), text);
    }
}
