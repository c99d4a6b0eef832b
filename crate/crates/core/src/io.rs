//! Graph readers and writers: TreewidthLib-style DGF and DIMACS `.col`.
//!
//! DGF lines:
//!
//! ```text
//! c free-form comment
//! p edge 3 2        (optional header, ignored)
//! n a               (optional vertex declaration, keeps isolated vertices)
//! e a b             (edge between vertices named a and b)
//! ```
//!
//! Vertex indices follow the first appearance of each name.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Default)]
struct Names {
    index: HashMap<String, usize>,
    labels: Vec<String>,
}

impl Names {
    fn intern(&mut self, name: &str) -> usize {
        if let Some(&i) = self.index.get(name) {
            return i;
        }
        let i = self.labels.len();
        self.index.insert(name.to_owned(), i);
        self.labels.push(name.to_owned());
        i
    }
}

/// Parses a DGF graph. Duplicate edges and self-loops are dropped.
pub fn parse_dgf(text: &str) -> Result<Graph> {
    let mut names = Names::default();
    let mut edges = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let mut fields = line.split_whitespace();
        let Some(tag) = fields.next() else { continue };
        let rest: Vec<&str> = fields.collect();
        match tag {
            "c" => {}
            "p" => {}
            "n" => match rest.as_slice() {
                [name, ..] => {
                    names.intern(name);
                }
                [] => return Err(Error::parse(lineno + 1, "vertex line without a name")),
            },
            "e" => match rest.as_slice() {
                [a, b] => {
                    let u = names.intern(a);
                    let v = names.intern(b);
                    edges.push((u, v));
                }
                _ => {
                    return Err(Error::parse(
                        lineno + 1,
                        format!("edge line needs exactly 2 endpoints, found {}", rest.len()),
                    ))
                }
            },
            other => {
                return Err(Error::parse(lineno + 1, format!("unknown line tag {other:?}")));
            }
        }
    }
    Graph::with_labels(names.labels, edges)
}

/// Parses a DIMACS `.col` graph: a `p edge n m` header followed by `e u v`
/// lines with 1-based vertex numbers.
pub fn parse_col(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields.as_slice() {
            [] | ["c", ..] => {}
            ["p", _format, count, ..] => {
                let count = count
                    .parse()
                    .map_err(|_| Error::parse(lineno + 1, format!("bad vertex count {count:?}")))?;
                n = Some(count);
            }
            ["e", a, b] => {
                let n = n.ok_or_else(|| Error::parse(lineno + 1, "edge before `p` header"))?;
                let endpoint = |s: &str| -> Result<usize> {
                    match s.parse::<usize>() {
                        Ok(x) if (1..=n).contains(&x) => Ok(x - 1),
                        _ => Err(Error::parse(lineno + 1, format!("vertex {s:?} not in 1..={n}"))),
                    }
                };
                edges.push((endpoint(a)?, endpoint(b)?));
            }
            ["e", rest @ ..] => {
                return Err(Error::parse(
                    lineno + 1,
                    format!("edge line needs exactly 2 endpoints, found {}", rest.len()),
                ))
            }
            _ => return Err(Error::parse(lineno + 1, format!("unrecognised line {line:?}"))),
        }
    }
    let n = n.ok_or_else(|| Error::parse(0, "missing `p edge n m` header"))?;
    Graph::with_labels((1..=n).map(|i| i.to_string()).collect(), edges)
}

/// Reads a graph file, choosing the DIMACS reader for `.col` files and DGF otherwise.
pub fn read_graph(path: &Path) -> Result<Graph> {
    let text = std::fs::read_to_string(path)?;
    match path.extension().and_then(|e| e.to_str()) {
        Some("col") => parse_col(&text),
        _ => parse_dgf(&text),
    }
}

/// Canonical DGF: a header, one `n` line per vertex in index order, then the
/// sorted edge list, all using the original labels.
pub fn write_dgf(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "p edge {} {}", g.n(), g.edge_count()).unwrap();
    for label in g.labels() {
        writeln!(out, "n {label}").unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", g.label(u), g.label(v)).unwrap();
    }
    out
}
