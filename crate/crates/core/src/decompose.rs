//! Whole-graph decomposition drivers and the decomposition file format.

use std::fmt::Write as _;

use crate::cut::{width_of_ordering, OrderingWidth};
use crate::error::{Error, Result};
use crate::exact::{lbw_exact_with, ExactConfig};
use crate::generate::random_permutation;
use crate::graph::Graph;
use crate::heuristics::{multi_start, HeuristicConfig};

/// How to order the vertices of a graph.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Strategy {
    Heuristic(HeuristicConfig),
    Exact(ExactConfig),
    /// A uniformly random permutation of the whole graph.
    Random { seed: u64 },
}

impl Strategy {
    pub fn exact() -> Self {
        Strategy::Exact(ExactConfig::default())
    }
}

/// A vertex ordering together with its largest cut `|UN|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearDecomposition {
    pub order: Vec<usize>,
    pub max_un: u64,
}

impl LinearDecomposition {
    /// Measures `order` from scratch.
    pub fn measure(g: &Graph, order: Vec<usize>) -> Result<Self> {
        let max_un = width_of_ordering(g, &order)?.max_un;
        Ok(LinearDecomposition { order, max_un })
    }

    pub fn width(&self) -> f64 {
        (self.max_un as f64).log2()
    }

    pub fn cuts(&self, g: &Graph) -> Result<OrderingWidth> {
        width_of_ordering(g, &self.order)
    }
}

/// Orders each connected component separately and concatenates the results in
/// component order. Components share no edges, so the width is the largest
/// component width.
pub fn decompose(g: &Graph, strategy: &Strategy) -> Result<LinearDecomposition> {
    if let Strategy::Random { seed } = strategy {
        return LinearDecomposition::measure(g, random_permutation(g.n(), *seed));
    }
    let mut order = Vec::with_capacity(g.n());
    let mut max_un = 1;
    for component in g.connected_components() {
        let (sub, to_old) = g.induced(&component);
        let (sub_order, sub_un) = match strategy {
            Strategy::Heuristic(cfg) => {
                let run = multi_start(&sub, cfg);
                let un = match run.max_un {
                    Some(un) => un,
                    None => width_of_ordering(&sub, &run.order)?.max_un,
                };
                (run.order, un)
            }
            Strategy::Exact(config) => {
                let r = lbw_exact_with(&sub, *config)?;
                match (r.ordering, r.max_un) {
                    (Some(o), Some(un)) => (o, un),
                    _ => return Err(Error::contract("exact solver gave up below its cap")),
                }
            }
            Strategy::Random { .. } => unreachable!(),
        };
        order.extend(sub_order.into_iter().map(|v| to_old[v]));
        max_un = max_un.max(sub_un);
    }
    Ok(LinearDecomposition { order, max_un })
}

/// Contents of a decomposition file: `width <bits>` on the first line, the
/// vertex labels in order on the second, and optionally `un <count>`.
#[derive(Clone, Debug, PartialEq)]
pub struct DecompositionFile {
    pub width: f64,
    pub labels: Vec<String>,
    pub max_un: Option<u64>,
}

impl DecompositionFile {
    pub fn new(g: &Graph, d: &LinearDecomposition, raw: bool) -> Self {
        DecompositionFile {
            width: d.width(),
            labels: d.order.iter().map(|&v| g.label(v).to_owned()).collect(),
            max_un: raw.then_some(d.max_un),
        }
    }

    pub fn render(&self) -> String {
        let mut out = format!("width {:.2}\n{}\n", self.width, self.labels.join(" "));
        if let Some(un) = self.max_un {
            writeln!(out, "un {un}").expect("writing to a string");
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (_, first) = lines.next().ok_or_else(|| Error::parse(1, "empty decomposition file"))?;
        let width = match first.split_whitespace().collect::<Vec<_>>()[..] {
            ["width", w] => w
                .parse::<f64>()
                .map_err(|e| Error::parse(1, format!("bad width {w:?}: {e}")))?,
            _ => return Err(Error::parse(1, "expected `width <bits>`")),
        };
        let labels = match lines.next() {
            Some((_, l)) => l.split_whitespace().map(str::to_owned).collect(),
            None => Vec::new(),
        };
        let mut max_un = None;
        for (i, line) in lines {
            match line.split_whitespace().collect::<Vec<_>>()[..] {
                ["un", u] => {
                    max_un = Some(u.parse().map_err(|e| Error::parse(i + 1, format!("bad count {u:?}: {e}")))?)
                }
                _ => return Err(Error::parse(i + 1, format!("unexpected line {line:?}"))),
            }
        }
        Ok(DecompositionFile { width, labels, max_un })
    }

    /// Maps the labels onto vertices of `g`, rejecting unknown, repeated or
    /// missing vertices by name.
    pub fn ordering(&self, g: &Graph) -> Result<Vec<usize>> {
        let mut seen = vec![false; g.n()];
        let mut order = Vec::with_capacity(g.n());
        for label in &self.labels {
            let v = g
                .index_of(label)
                .ok_or_else(|| Error::contract(format!("unknown vertex {label:?} in ordering")))?;
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::contract(format!("vertex {label:?} appears twice in ordering")));
            }
            order.push(v);
        }
        let missing: Vec<&str> = (0..g.n()).filter(|&v| !seen[v]).map(|v| g.label(v)).collect();
        if !missing.is_empty() {
            return Err(Error::contract(format!("ordering is missing vertices {}", missing.join(", "))));
        }
        Ok(order)
    }
}

/// Per-cut CSV with columns `prefix,un,booldim`.
pub fn cuts_csv(width: &OrderingWidth) -> String {
    let mut out = String::from("prefix,un,booldim\n");
    for (i, c) in width.cuts.iter().enumerate() {
        writeln!(out, "{},{},{:.4}", i + 1, c.un_count, c.booldim()).expect("writing to a string");
    }
    out
}
