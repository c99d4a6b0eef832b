//! Exact linear boolean-width.
//!
//! With `P(∅) = 0` and `P(A) = min_{v ∈ A} max(|UN(A)|, P(A ∖ {v}))`, the
//! linear boolean-width is `log2 P(V)`. Everything here works with the
//! integer `|UN|` values and converts to bits only when reporting.
//!
//! Subsets are keyed by their characteristic bitmask, so graphs are limited to
//! 64 vertices (and in practice to ~30 by the `2^n` tables).

use rustc_hash::{FxHashMap, FxHashSet};

use crate::cut::un_bruteforce;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Outcome of an exact run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactResult {
    /// `P(V)`, the smallest achievable largest `|UN|`; `None` when it exceeds
    /// the bound the run was given.
    pub max_un: Option<u64>,
    /// A witness ordering, present exactly when `max_un` is.
    pub ordering: Option<Vec<usize>>,
    /// Number of subsets whose `|UN|` was computed.
    pub explored: usize,
}

impl ExactResult {
    /// `log2 P(V)`, or `None` for the infinity marker.
    pub fn width(&self) -> Option<f64> {
        self.max_un.map(|p| (p as f64).log2())
    }

    pub fn is_finite(&self) -> bool {
        self.max_un.is_some()
    }
}

/// Largest graph accepted by [`lbw_dp_bruteforce`].
pub const DP_BRUTEFORCE_LIMIT: usize = 16;
/// Largest graph accepted by the pruned solver (subset masks are `u64`).
pub const MASK_LIMIT: usize = 63;
/// Graphs up to this size use flat `2^n` tables; larger ones use hash maps.
pub const DENSE_TABLE_LIMIT: usize = 22;
/// Default cap on the number of subsets the pruned solver may explore.
pub const DEFAULT_MEMORY_LIMIT: usize = 1 << 26;

const UNDEFINED: u32 = 0;
const OVER: u32 = u32::MAX;
const INFINITE: u32 = u32::MAX;
const NO_PRED: u8 = u8::MAX;

/// A map keyed by subset masks: a flat vector for small `n`, a hash map otherwise.
enum SubsetMap<V: Copy> {
    Dense(Vec<V>),
    Sparse(FxHashMap<u64, V>, V),
}

impl<V: Copy> SubsetMap<V> {
    fn new(n: usize, default: V) -> Self {
        if n <= DENSE_TABLE_LIMIT {
            SubsetMap::Dense(vec![default; 1 << n])
        } else {
            SubsetMap::Sparse(FxHashMap::default(), default)
        }
    }

    #[inline]
    fn get(&self, mask: u64) -> V {
        match self {
            SubsetMap::Dense(v) => v[mask as usize],
            SubsetMap::Sparse(m, default) => m.get(&mask).copied().unwrap_or(*default),
        }
    }

    #[inline]
    fn set(&mut self, mask: u64, value: V) {
        match self {
            SubsetMap::Dense(v) => v[mask as usize] = value,
            SubsetMap::Sparse(m, _) => {
                m.insert(mask, value);
            }
        }
    }
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (mask != 0).then(|| {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            v
        })
    })
}

/// The increment step on bitmask families. Returns `None` once the result
/// would hold more than `cap` members.
fn increment_masks(family: &[u64], universe: u64, adj_v: u64, v: usize, cap: usize) -> Option<Vec<u64>> {
    let bit = 1u64 << v;
    let added = adj_v & universe & !bit;
    let mut seen = FxHashSet::with_capacity_and_hasher((2 * family.len()).min(cap + 1), Default::default());
    let mut out = Vec::with_capacity(seen.capacity());
    for &s in family {
        let without = s & !bit;
        for t in [without, without | added] {
            if seen.insert(t) {
                out.push(t);
                if out.len() > cap {
                    return None;
                }
            }
        }
    }
    Some(out)
}

/// Solves the recurrence over every subset whose `|UN|` is known and at most
/// `k`, in ascending mask order. Ties go to the smallest vertex.
fn solve_recurrence(n: usize, un: &SubsetMap<u32>, masks: impl Iterator<Item = u64>, k: u32) -> (Option<u64>, Option<Vec<usize>>) {
    let full = full_mask(n);
    if n == 0 {
        return (Some(1), Some(Vec::new()));
    }
    let mut p = SubsetMap::new(n, INFINITE);
    let mut pred = SubsetMap::new(n, NO_PRED);
    p.set(0, 0);
    for y in masks {
        if y == 0 {
            continue;
        }
        let t = un.get(y);
        if t == UNDEFINED || t == OVER || t > k {
            continue;
        }
        let mut best = INFINITE;
        let mut arg = NO_PRED;
        for v in bits(y) {
            let prev = p.get(y & !(1u64 << v));
            if prev <= k && prev < best {
                best = prev;
                arg = v as u8;
            }
        }
        if arg != NO_PRED {
            p.set(y, t.max(best));
            pred.set(y, arg);
        }
    }
    let total = p.get(full);
    if total == INFINITE || total > k {
        return (None, None);
    }
    let mut order = Vec::with_capacity(n);
    let mut y = full;
    while y != 0 {
        let v = pred.get(y) as usize;
        order.push(v);
        y &= !(1u64 << v);
    }
    order.reverse();
    (Some(u64::from(total)), Some(order))
}

/// Baseline: `|UN(A)|` for every `A ⊆ V` by subset enumeration, then the
/// recurrence bottom-up. Limited to 16 vertices.
pub fn lbw_dp_bruteforce(g: &Graph) -> Result<ExactResult> {
    let n = g.n();
    if n > DP_BRUTEFORCE_LIMIT {
        return Err(Error::ScaleGuard {
            what: "lbw_dp_bruteforce",
            limit: DP_BRUTEFORCE_LIMIT,
            actual: n,
        });
    }
    let mut un = SubsetMap::new(n, UNDEFINED);
    for mask in 0..=full_mask(n) {
        let side = VertexSet::from_mask(n, mask);
        un.set(mask, un_bruteforce(g, &side)?.len() as u32);
    }
    let (max_un, ordering) = solve_recurrence(n, &un, 0..=full_mask(n), u32::MAX - 1);
    Ok(ExactResult {
        max_un,
        ordering,
        explored: 1 << n,
    })
}

struct Search<'a> {
    adj: &'a [u64],
    n: usize,
    cap: usize,
    un: SubsetMap<u32>,
    explored: usize,
    memory_limit: usize,
    touched: Vec<u64>,
}

impl Search<'_> {
    /// Fills `|UN(Y)|` for every `Y = X ∪ {v}` not seen yet, descending into
    /// those whose count stays within the cap.
    fn compute_count_un(&mut self, x: u64, un_x: &[u64]) -> Result<()> {
        let universe = full_mask(self.n) & !x;
        for v in bits(universe) {
            let y = x | (1u64 << v);
            if self.un.get(y) != UNDEFINED {
                continue;
            }
            self.explored += 1;
            if self.explored > self.memory_limit {
                return Err(Error::MemoryGuard {
                    explored: self.explored,
                    limit: self.memory_limit,
                });
            }
            if self.n > DENSE_TABLE_LIMIT {
                self.touched.push(y);
            }
            match increment_masks(un_x, universe, self.adj[v], v, self.cap) {
                Some(un_y) => {
                    self.un.set(y, un_y.len() as u32);
                    self.compute_count_un(y, &un_y)?;
                }
                None => self.un.set(y, OVER),
            }
        }
        Ok(())
    }
}

/// Options for the pruned solver.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExactConfig {
    /// Maximum number of subsets whose `|UN|` may be computed.
    pub memory_limit: usize,
}

impl Default for ExactConfig {
    fn default() -> Self {
        ExactConfig {
            memory_limit: DEFAULT_MEMORY_LIMIT,
        }
    }
}

/// Pruned exact solver: computes `P(V)` if it is at most `k`, otherwise
/// returns the infinity marker. Only subsets reachable through chains of cuts
/// with `|UN| ≤ k` are explored.
pub fn incremental_un_exact(g: &Graph, k: u64) -> Result<ExactResult> {
    incremental_un_exact_with(g, k, ExactConfig::default())
}

pub fn incremental_un_exact_with(g: &Graph, k: u64, config: ExactConfig) -> Result<ExactResult> {
    let n = g.n();
    if n > MASK_LIMIT {
        return Err(Error::ScaleGuard {
            what: "incremental_un_exact",
            limit: MASK_LIMIT,
            actual: n,
        });
    }
    if k == 0 {
        return Err(Error::contract("the bound K must be at least 1"));
    }
    let k = k.min(u64::from(u32::MAX - 1)) as u32;
    let adj = g.adjacency_masks();
    let mut search = Search {
        adj: &adj,
        n,
        cap: k as usize,
        un: SubsetMap::new(n, UNDEFINED),
        explored: 0,
        memory_limit: config.memory_limit,
        touched: Vec::new(),
    };
    search.un.set(0, 1);
    search.compute_count_un(0, &[0])?;
    let explored = search.explored;

    let (max_un, ordering) = if n <= DENSE_TABLE_LIMIT {
        solve_recurrence(n, &search.un, 0..=full_mask(n), k)
    } else {
        let mut masks = std::mem::take(&mut search.touched);
        masks.sort_unstable();
        solve_recurrence(n, &search.un, masks.into_iter(), k)
    };
    Ok(ExactResult {
        max_un,
        ordering,
        explored,
    })
}

/// Exact linear boolean-width by doubling `K` from 1 until the pruned solver
/// succeeds. `K` never exceeds `2^n`, where pruning is vacuous.
pub fn lbw_exact(g: &Graph) -> Result<ExactResult> {
    lbw_exact_with(g, ExactConfig::default())
}

pub fn lbw_exact_with(g: &Graph, config: ExactConfig) -> Result<ExactResult> {
    let cap = if g.n() >= 32 { u64::from(u32::MAX - 1) } else { 1u64 << g.n() };
    let mut k = 1u64;
    loop {
        let result = incremental_un_exact_with(g, k, config)?;
        if result.is_finite() || k >= cap {
            return Ok(result);
        }
        k = (k * 2).min(cap);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cut::width_of_ordering;

    fn check_witness(g: &Graph, r: &ExactResult) {
        let order = r.ordering.as_ref().expect("finite result has an ordering");
        assert_eq!(Some(width_of_ordering(g, order).unwrap().max_un), r.max_un);
    }

    #[test]
    fn bruteforce_examples() {
        let p5 = lbw_dp_bruteforce(&Graph::path(5)).unwrap();
        assert_eq!(p5.max_un, Some(2));
        check_witness(&Graph::path(5), &p5);
        assert_eq!(lbw_dp_bruteforce(&Graph::complete(4)).unwrap().width(), Some(1.0));
        assert_eq!(lbw_dp_bruteforce(&Graph::empty(4)).unwrap().width(), Some(0.0));
        assert!(lbw_dp_bruteforce(&Graph::empty(17)).is_err());
    }

    #[test]
    fn k_gate() {
        let p5 = Graph::path(5);
        let r1 = incremental_un_exact(&p5, 1).unwrap();
        assert_eq!(r1.max_un, None);
        assert_eq!(r1.ordering, None);
        let r2 = incremental_un_exact(&p5, 2).unwrap();
        assert_eq!(r2.width(), Some(1.0));
        check_witness(&p5, &r2);
        let big = incremental_un_exact(&p5, 1 << 5).unwrap();
        assert_eq!(big.max_un, lbw_dp_bruteforce(&p5).unwrap().max_un);
        assert!(r1.explored <= r2.explored && r2.explored <= big.explored);
        assert!(big.explored <= 1 << 5);
        assert!(incremental_un_exact(&p5, 0).is_err());
    }

    #[test]
    fn doubling() {
        let p8 = Graph::path(8);
        let r = lbw_exact(&p8).unwrap();
        assert_eq!(r.width(), Some(1.0));
        check_witness(&p8, &r);

        let c5 = Graph::cycle(5);
        assert_eq!(lbw_exact(&c5).unwrap().max_un, lbw_dp_bruteforce(&c5).unwrap().max_un);

        // K5 minus a matching.
        let k5 = Graph::from_edges(5, Graph::complete(5).edges().into_iter().filter(|&e| e != (0, 1) && e != (2, 3))).unwrap();
        let r = lbw_exact(&k5).unwrap();
        assert_eq!(r.max_un, lbw_dp_bruteforce(&k5).unwrap().max_un);
        check_witness(&k5, &r);
    }

    #[test]
    fn trivial_sizes() {
        assert_eq!(lbw_exact(&Graph::empty(0)).unwrap().width(), Some(0.0));
        assert_eq!(lbw_exact(&Graph::empty(1)).unwrap().ordering, Some(vec![0]));
    }

    #[test]
    fn sparse_tables_agree_with_dense() {
        // 24 vertices forces the hash-map tables.
        let g = crate::generate::erdos_renyi(24, 0.15, 11);
        let r = lbw_exact(&g).unwrap();
        check_witness(&g, &r);
        let heuristic = crate::heuristics::multi_start(&g, &crate::heuristics::HeuristicConfig::n_iun());
        assert!(r.max_un.unwrap() <= width_of_ordering(&g, &heuristic.order).unwrap().max_un);
    }

    #[test]
    fn memory_guard() {
        let g = Graph::cycle(12);
        let err = lbw_exact_with(&g, ExactConfig { memory_limit: 10 }).unwrap_err();
        assert!(matches!(err, Error::MemoryGuard { explored: 11, limit: 10 }));
    }
}
