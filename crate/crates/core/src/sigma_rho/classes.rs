use rayon::prelude::*;
use rustc_hash::FxHashMap;

use crate::cut::{check_permutation, width_of_ordering};
use crate::error::Result;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Capped neighbour counts of a set `X ⊆ A` on the opposite side `Ā`, stored
/// as `d` threshold planes: plane `j` holds the `u ∈ Ā` with
/// `|N(u) ∩ X| > j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DNeighborhood {
    planes: Vec<VertexSet>,
}

impl DNeighborhood {
    pub fn empty(n: usize, d: usize) -> Self {
        DNeighborhood {
            planes: vec![VertexSet::new(n); d],
        }
    }

    pub fn of(g: &Graph, x: &VertexSet, other: &VertexSet, d: usize) -> Self {
        let mut key = DNeighborhood::empty(g.n(), d);
        for v in x {
            key.add(g, v, other);
        }
        key
    }

    /// Accounts for one more vertex `v` of `X`.
    pub fn add(&mut self, g: &Graph, v: usize, other: &VertexSet) {
        for u in &g.neighbors(v).intersection(other) {
            if let Some(plane) = self.planes.iter_mut().find(|p| !p.contains(u)) {
                plane.insert(u);
            }
        }
    }

    /// `min(d, |N(u) ∩ X|)`.
    pub fn count(&self, u: usize) -> usize {
        self.planes.iter().take_while(|p| p.contains(u)).count()
    }

    pub fn d(&self) -> usize {
        self.planes.len()
    }
}

/// The classes of `≡_A^d`: subsets of `A` with equal capped counts on `Ā`.
#[derive(Clone, Debug)]
pub struct ClassFamily {
    side: VertexSet,
    other: VertexSet,
    d: usize,
    /// Smallest representative of each class (by size, then members), sorted.
    representatives: Vec<VertexSet>,
    index: FxHashMap<DNeighborhood, usize>,
}

impl ClassFamily {
    pub fn side(&self) -> &VertexSet {
        &self.side
    }

    pub fn other(&self) -> &VertexSet {
        &self.other
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }

    pub fn representative(&self, class: usize) -> &VertexSet {
        &self.representatives[class]
    }

    pub fn representatives(&self) -> &[VertexSet] {
        &self.representatives
    }

    /// Class id of a capped-count vector.
    pub fn class_of_key(&self, key: &DNeighborhood) -> Option<usize> {
        self.index.get(key).copied()
    }

    /// Class id of `x ⊆ A`.
    pub fn class_of(&self, g: &Graph, x: &VertexSet) -> usize {
        debug_assert!(x.is_subset(&self.side));
        let key = DNeighborhood::of(g, x, &self.other, self.d);
        self.index[&key]
    }
}

/// One representative per class of `≡_A^d`.
///
/// Classes are built by sweeping the vertices of `A` in order: every class of
/// subsets of `{a_1..a_j}` is a class of subsets of `{a_1..a_{j-1}}`, possibly
/// extended by `a_j`, because capped counts add up consistently.
pub fn enumerate_classes(g: &Graph, a: &VertexSet, d: usize) -> ClassFamily {
    let n = g.n();
    let other = a.complement();
    let mut found: FxHashMap<DNeighborhood, VertexSet> = FxHashMap::default();
    found.insert(DNeighborhood::empty(n, d), VertexSet::new(n));
    for v in a {
        let extended: Vec<(DNeighborhood, VertexSet)> = found
            .iter()
            .map(|(key, rep)| {
                let mut key = key.clone();
                key.add(g, v, &other);
                let mut rep = rep.clone();
                rep.insert(v);
                (key, rep)
            })
            .collect();
        for (key, rep) in extended {
            let slot = found.entry(key).or_insert_with(|| rep.clone());
            if rep.cmp_size_lex(slot).is_lt() {
                *slot = rep;
            }
        }
    }
    let mut classes: Vec<(DNeighborhood, VertexSet)> = found.into_iter().collect();
    classes.sort_by(|a, b| a.1.cmp_size_lex(&b.1));
    let index = classes.iter().enumerate().map(|(i, (k, _))| (k.clone(), i)).collect();
    ClassFamily {
        side: a.clone(),
        other,
        d,
        representatives: classes.into_iter().map(|(_, r)| r).collect(),
        index,
    }
}

/// Class counts of one prefix cut `(A, Ā)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CutNec {
    /// `nec(≡_A^d)`.
    pub inner: usize,
    /// `nec(≡_Ā^d)`.
    pub outer: usize,
}

impl CutNec {
    pub fn max(&self) -> usize {
        self.inner.max(self.outer)
    }
}

/// Class counts of every prefix cut `i = 1..n-1`.
pub fn nec_profile(g: &Graph, order: &[usize], d: usize) -> Result<Vec<CutNec>> {
    let n = g.n();
    check_permutation(n, order)?;
    let prefixes: Vec<VertexSet> = (1..n).map(|i| VertexSet::from_iter(n, order[..i].iter().copied())).collect();
    Ok(prefixes
        .par_iter()
        .map(|a| CutNec {
            inner: enumerate_classes(g, a, d).len(),
            outer: enumerate_classes(g, &a.complement(), d).len(),
        })
        .collect())
}

/// `max` over prefix cuts of `max(nec(≡_A^d), nec(≡_Ā^d))`; `1` without cuts.
pub fn nec_of_decomposition(g: &Graph, order: &[usize], d: usize) -> Result<usize> {
    Ok(nec_profile(g, order, d)?.iter().map(CutNec::max).max().unwrap_or(1))
}

/// Upper bounds on `log2 nec_d` of a linear decomposition.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Bounds {
    /// Boolean-width `k` of the ordering.
    pub width: f64,
    /// Largest `ntc(A)` over the prefixes (single vertices count as 1).
    pub ntc: usize,
    /// Largest `min(ntc(A), ntc(Ā))` over the prefixes (single vertices count as 1).
    pub min_ntc: usize,
    /// `d · k²`.
    pub ub1: f64,
    /// `min_ntc · log2(d + 1)`.
    pub ub2: f64,
    /// `d · k · log2(ntc)`.
    pub ub3: f64,
}

impl Bounds {
    pub fn min(&self) -> f64 {
        self.ub1.min(self.ub2).min(self.ub3)
    }
}

pub fn bounds(g: &Graph, order: &[usize], d: usize) -> Result<Bounds> {
    let measured = width_of_ordering(g, order)?;
    let leaf = usize::from(g.n() > 0);
    let ntc = measured.cuts.iter().map(|c| c.ntc_left).fold(leaf, usize::max);
    let min_ntc = measured.cuts.iter().map(|c| c.ntc_left.min(c.ntc_right)).fold(leaf, usize::max);
    let k = measured.width();
    let d_f = d as f64;
    let log_ntc = if ntc == 0 { 0.0 } else { (ntc as f64).log2() };
    Ok(Bounds {
        width: k,
        ntc,
        min_ntc,
        ub1: d_f * k * k,
        ub2: min_ntc as f64 * (d_f + 1.0).log2(),
        ub3: d_f * k * log_ntc,
    })
}
