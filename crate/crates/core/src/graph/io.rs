//! Text formats: DIMACS-like edge lists, a JSON object form, and DOT export.
//!
//! DIMACS files carry a `p edge <n> <m>` header followed by `m` lines
//! `e <u> <v>` with 1-based ids; lines starting with `c` are comments.
//! The JSON form is `{"num_vertices": n, "edges": [[u, v], ...], "labels": [...]}`
//! with 0-based ids and optional labels.

use super::Graph;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Dimacs,
    Json,
    Dot,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Format> {
        match s {
            "dimacs" => Ok(Format::Dimacs),
            "json" => Ok(Format::Json),
            "dot" => Ok(Format::Dot),
            other => Err(Error::Precondition(format!("unknown graph format `{other}`"))),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    num_vertices: usize,
    edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

pub fn to_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.order(), g.size());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let err = |msg: &str| Error::Parse {
            line: line_no,
            msg: msg.to_owned(),
        };
        let mut fields = line.split_whitespace();
        match fields.next() {
            Some("p") => {
                if header.is_some() {
                    return Err(err("duplicate `p` line"));
                }
                match fields.next() {
                    Some("edge") | Some("col") => {}
                    _ => return Err(err("expected `p edge <n> <m>`")),
                }
                let n = parse_field(fields.next(), line_no)?;
                let m = parse_field(fields.next(), line_no)?;
                header = Some((n, m));
            }
            Some("e") => {
                let (n, _) = header.ok_or_else(|| err("edge line before `p` header"))?;
                let u = parse_field(fields.next(), line_no)?;
                let v = parse_field(fields.next(), line_no)?;
                if u == 0 || v == 0 || u > n || v > n {
                    return Err(err(&format!("edge ({u}, {v}) outside 1..={n}")));
                }
                edges.push((u - 1, v - 1));
            }
            _ => return Err(err(&format!("unrecognised line `{line}`"))),
        }
        if fields.next().is_some() {
            return Err(err("trailing fields"));
        }
    }
    let (n, m) = header.ok_or(Error::Parse {
        line: 0,
        msg: "missing `p edge` header".into(),
    })?;
    if edges.len() != m {
        return Err(Error::Parse {
            line: 0,
            msg: format!("header announces {m} edges, found {}", edges.len()),
        });
    }
    Graph::from_edge_list(n, &edges)
}

fn parse_field(field: Option<&str>, line: usize) -> Result<usize> {
    let field = field.ok_or_else(|| Error::Parse {
        line,
        msg: "missing field".into(),
    })?;
    field.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("`{field}` is not a nonnegative integer"),
    })
}

pub fn to_json(g: &Graph) -> String {
    let doc = GraphJson {
        num_vertices: g.order(),
        edges: g.edges().iter().map(|&(u, v)| [u, v]).collect(),
        labels: g.labels().map(<[String]>::to_vec),
    };
    serde_json::to_string_pretty(&doc).expect("graph json is always serializable")
}

pub fn parse_json(text: &str) -> Result<Graph> {
    let doc: GraphJson = serde_json::from_str(text)?;
    let edges: Vec<_> = doc.edges.iter().map(|&[u, v]| (u, v)).collect();
    let g = Graph::from_edge_list(doc.num_vertices, &edges)?;
    match doc.labels {
        Some(labels) => g.with_labels(labels),
        None => Ok(g),
    }
}

/// DOT rendering for visualization; not read back.
pub fn to_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.order() {
        let label = g.display_name(v).replace('"', "\\\"");
        let _ = writeln!(out, "  {v} [label=\"{label}\"];");
    }
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

pub fn write(g: &Graph, format: Format) -> String {
    match format {
        Format::Dimacs => to_dimacs(g),
        Format::Json => to_json(g) + "\n",
        Format::Dot => to_dot(g),
    }
}

/// Parses JSON when the first non-blank character is `{`, DIMACS otherwise.
pub fn parse_auto(text: &str) -> Result<Graph> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_dimacs(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generator, Family};

    #[test]
    fn dimacs_path_header() {
        let p3 = generator(Family::Path, 3).unwrap();
        let text = to_dimacs(&p3);
        assert!(text.starts_with("p edge 3 2\n"));
        assert_eq!(parse_dimacs(&text).unwrap(), p3);
    }

    #[test]
    fn dimacs_comments_and_errors() {
        let g = parse_dimacs("c hello\np edge 3 1\ne 1 3\n").unwrap();
        assert_eq!(g.edges(), &[(0, 2)]);
        assert!(parse_dimacs("e 1 2\n").is_err());
        assert!(parse_dimacs("p edge 2 1\ne 1 3\n").is_err());
        assert!(parse_dimacs("p edge 2 1\ne 1 1\n").is_err());
        assert!(parse_dimacs("p edge 2 2\ne 1 2\n").is_err());
    }

    #[test]
    fn json_with_labels() {
        let g = generator(Family::Complete, 3)
            .unwrap()
            .with_labels(vec!["x".into(), "y".into(), "z".into()])
            .unwrap();
        let text = to_json(&g);
        assert_eq!(parse_json(&text).unwrap(), g);
        assert_eq!(parse_auto(&text).unwrap(), g);
        assert!(parse_json(r#"{"num_vertices": 2, "edges": [[0, 2]]}"#).is_err());
        assert!(parse_json(r#"{"num_vertices": 2, "edges": [], "labels": ["a"]}"#).is_err());
    }

    #[test]
    fn dot_lists_every_edge() {
        let dot = to_dot(&generator(Family::Cycle, 3).unwrap());
        assert_eq!(dot.matches(" -- ").count(), 3);
        assert!(dot.starts_with("graph G {"));
    }
}
