//! DIMACS and edge-list readers and writers.
//!
//! DIMACS files use 1-based vertex ids (`p edge <n> <m>`, `e <u> <v>`, `c`
//! comments). Edge lists hold one 0-based `<u> <v>` pair per line, with `#`
//! comments and blank lines ignored; a line with a single id declares a
//! vertex, and `n` is the largest id plus one.

use std::fmt::Write as _;
use std::io::{BufRead, BufReader, Read};
use std::str::FromStr;

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Dimacs,
    EdgeList,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "dimacs" | "col" => Ok(Format::Dimacs),
            "edgelist" | "edges" => Ok(Format::EdgeList),
            other => Err(format!("unknown graph format `{other}`")),
        }
    }
}

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: malformed header: {reason}")]
    Header { line: usize, reason: String },
    #[error("line {line}: malformed edge line `{text}`")]
    Edge { line: usize, text: String },
    #[error("line {line}: edge line before `p edge` header")]
    MissingHeader { line: usize },
    #[error("line {line}: vertex {vertex} out of range 1..={n}")]
    OutOfRange { line: usize, vertex: usize, n: usize },
    #[error("line {line}: self-loop on vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("no `p edge` header found")]
    NoHeader,
    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
}

pub fn parse_graph<R: Read>(input: R, format: Format) -> Result<Graph, ParseError> {
    match format {
        Format::Dimacs => parse_dimacs(input),
        Format::EdgeList => parse_edge_list(input),
    }
}

/// Guesses the format: anything with a `p` header line is DIMACS.
pub fn detect_format(text: &str) -> Format {
    let dimacs = text
        .lines()
        .map(str::trim_start)
        .any(|l| l.starts_with("p ") || l.starts_with("p\t"));
    if dimacs {
        Format::Dimacs
    } else {
        Format::EdgeList
    }
}

pub fn parse_dimacs<R: Read>(input: R) -> Result<Graph, ParseError> {
    let mut header: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, line) in BufReader::new(input).lines().enumerate() {
        let lineno = idx + 1;
        let line = line?;
        let mut tokens = line.split_whitespace();
        let Some(tag) = tokens.next() else { continue };
        match tag {
            "c" => {}
            "p" => {
                if header.is_some() {
                    return Err(ParseError::Header {
                        line: lineno,
                        reason: "duplicate header".into(),
                    });
                }
                let rest: Vec<&str> = tokens.collect();
                if rest.len() != 3 || !matches!(rest[0], "edge" | "col") {
                    return Err(ParseError::Header {
                        line: lineno,
                        reason: format!("expected `p edge <n> <m>`, got `{}`", line.trim()),
                    });
                }
                let n = rest[1].parse::<usize>().map_err(|_| ParseError::Header {
                    line: lineno,
                    reason: format!("bad vertex count `{}`", rest[1]),
                })?;
                rest[2].parse::<usize>().map_err(|_| ParseError::Header {
                    line: lineno,
                    reason: format!("bad edge count `{}`", rest[2]),
                })?;
                header = Some(n);
            }
            "e" => {
                let n = header.ok_or(ParseError::MissingHeader { line: lineno })?;
                let ends: Vec<&str> = tokens.collect();
                let parsed: Option<Vec<usize>> = if ends.len() == 2 {
                    ends.iter().map(|t| t.parse().ok()).collect()
                } else {
                    None
                };
                let Some(uv) = parsed else {
                    return Err(ParseError::Edge {
                        line: lineno,
                        text: line.trim().to_string(),
                    });
                };
                for &x in &uv {
                    if x == 0 || x > n {
                        return Err(ParseError::OutOfRange {
                            line: lineno,
                            vertex: x,
                            n,
                        });
                    }
                }
                if uv[0] == uv[1] {
                    return Err(ParseError::SelfLoop {
                        line: lineno,
                        vertex: uv[0],
                    });
                }
                edges.push((uv[0] - 1, uv[1] - 1));
            }
            _ => {
                return Err(ParseError::Edge {
                    line: lineno,
                    text: line.trim().to_string(),
                })
            }
        }
    }
    let n = header.ok_or(ParseError::NoHeader)?;
    Ok(Graph::from_edges(n, edges))
}

pub fn parse_edge_list<R: Read>(input: R) -> Result<Graph, ParseError> {
    let mut edges = Vec::new();
    let mut n = 0;
    for (idx, line) in BufReader::new(input).lines().enumerate() {
        let lineno = idx + 1;
        let line = line?;
        let body = line.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let ends: Vec<&str> = body.split_whitespace().collect();
        let parsed: Option<Vec<usize>> = if ends.len() <= 2 {
            ends.iter().map(|t| t.parse().ok()).collect()
        } else {
            None
        };
        if let Some([v]) = parsed.as_deref() {
            n = n.max(v + 1);
            continue;
        }
        let Some(uv) = parsed else {
            return Err(ParseError::Edge {
                line: lineno,
                text: line.trim().to_string(),
            });
        };
        if uv[0] == uv[1] {
            return Err(ParseError::SelfLoop {
                line: lineno,
                vertex: uv[0],
            });
        }
        n = n.max(uv[0] + 1).max(uv[1] + 1);
        edges.push((uv[0], uv[1]));
    }
    Ok(Graph::from_edges(n, edges))
}

pub fn to_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

/// Edge-list text; isolated vertices are written as single-id lines.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    for v in (0..g.n()).filter(|&v| g.degree(v) == 0) {
        let _ = writeln!(out, "{v}");
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}
