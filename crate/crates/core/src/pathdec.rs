//! Linear orderings built from path decompositions.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// A sequence of bags `X_1, …, X_r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathDecomposition {
    pub bags: Vec<VertexSet>,
}

impl PathDecomposition {
    pub fn new(bags: Vec<VertexSet>) -> Self {
        PathDecomposition { bags }
    }

    /// Builds bags from plain vertex lists over a graph with `n` vertices.
    pub fn from_lists(n: usize, bags: &[&[usize]]) -> Self {
        PathDecomposition {
            bags: bags.iter().map(|b| VertexSet::from_iter(n, b.iter().copied())).collect(),
        }
    }

    pub fn max_bag_size(&self) -> usize {
        self.bags.iter().map(VertexSet::len).max().unwrap_or(0)
    }

    /// Checks vertex coverage, edge coverage and contiguity against `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let n = g.n();
        if let Some(bad) = self.bags.iter().find(|b| b.capacity() != n) {
            return Err(Error::InvalidPathDecomposition(format!(
                "bag {bad:?} has capacity {} but the graph has {n} vertices",
                bad.capacity()
            )));
        }
        for v in 0..n {
            let holding: Vec<usize> = (0..self.bags.len()).filter(|&i| self.bags[i].contains(v)).collect();
            let Some((&first, &last)) = holding.first().zip(holding.last()) else {
                return Err(Error::InvalidPathDecomposition(format!(
                    "vertex coverage: vertex {} is in no bag",
                    g.label(v)
                )));
            };
            if last - first + 1 != holding.len() {
                return Err(Error::InvalidPathDecomposition(format!(
                    "contiguity: bags holding vertex {} are not consecutive",
                    g.label(v)
                )));
            }
        }
        for (u, v) in g.edges() {
            if !self.bags.iter().any(|b| b.contains(u) && b.contains(v)) {
                return Err(Error::InvalidPathDecomposition(format!(
                    "edge coverage: no bag holds edge {{{}, {}}}",
                    g.label(u),
                    g.label(v)
                )));
            }
        }
        Ok(())
    }
}

/// Emits every vertex at the first bag that holds it, bags left to right and
/// ascending index within a bag. The ordering has boolean-width at most the
/// largest bag size.
pub fn order_from_path_decomposition(g: &Graph, pd: &PathDecomposition) -> Result<Vec<usize>> {
    pd.validate(g)?;
    let mut placed = VertexSet::new(g.n());
    let mut order = Vec::with_capacity(g.n());
    for bag in &pd.bags {
        for v in bag {
            if placed.insert(v) {
                order.push(v);
            }
        }
    }
    Ok(order)
}
