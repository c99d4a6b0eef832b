//! Quantities of a single cut `(A, Ā)`: unions of neighbourhoods, boolean
//! dimension and twin classes, plus the brute-force oracles used to check them.

use rustc_hash::FxHashSet;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// `UN(A) = { N(X) ∩ Ā : X ⊆ A }`, stored as a deduplicated family of subsets
/// of the universe `Ā`.
#[derive(Clone, Debug)]
pub struct NeighborhoodFamily {
    universe: VertexSet,
    members: FxHashSet<VertexSet>,
}

impl NeighborhoodFamily {
    /// `UN(∅) = {∅}` over the universe `V`.
    pub fn empty_cut(n: usize) -> Self {
        let mut members = FxHashSet::default();
        members.insert(VertexSet::new(n));
        NeighborhoodFamily {
            universe: VertexSet::full(n),
            members,
        }
    }

    /// The side the neighbourhoods live in, `Ā`.
    pub fn universe(&self) -> &VertexSet {
        &self.universe
    }

    /// The side the neighbourhoods come from, `A`.
    pub fn side(&self) -> VertexSet {
        self.universe.complement()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, set: &VertexSet) -> bool {
        self.members.contains(set)
    }

    pub fn iter(&self) -> impl Iterator<Item = &VertexSet> {
        self.members.iter()
    }

    /// Members sorted by size then lexicographically, for stable comparisons.
    pub fn sorted_members(&self) -> Vec<VertexSet> {
        let mut out: Vec<VertexSet> = self.members.iter().cloned().collect();
        out.sort_by(VertexSet::cmp_size_lex);
        out
    }

    /// `UN(A ∪ {v})` from `UN(A)`: every member `S` yields `S ∖ {v}` and
    /// `(S ∖ {v}) ∪ (N(v) ∩ (Ā ∖ {v}))`.
    pub fn increment(&self, g: &Graph, v: usize) -> Result<Self> {
        self.increment_capped(g, v, usize::MAX)
            .map(|family| family.expect("uncapped increment always completes"))
    }

    /// Like [`increment`](Self::increment), but gives up with `Ok(None)` as
    /// soon as the result would hold more than `cap` members.
    pub fn increment_capped(&self, g: &Graph, v: usize, cap: usize) -> Result<Option<Self>> {
        if !self.universe.contains(v) {
            return Err(Error::contract(format!("vertex {v} is already on the left side of the cut")));
        }
        let mut universe = self.universe.clone();
        universe.remove(v);
        let added = g.neighbors(v).intersection(&universe);
        let mut members =
            FxHashSet::with_capacity_and_hasher((2 * self.members.len()).min(cap.saturating_add(1)), Default::default());
        for s in &self.members {
            let mut without = s.clone();
            without.remove(v);
            let mut with = without.clone();
            with.union_with(&added);
            members.insert(without);
            members.insert(with);
            if members.len() > cap {
                return Ok(None);
            }
        }
        Ok(Some(NeighborhoodFamily { universe, members }))
    }

    /// Folds [`increment`](Self::increment) over `order`, starting from `UN(∅)`.
    pub fn of_sequence(g: &Graph, order: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut family = Self::empty_cut(g.n());
        for v in order {
            family = family.increment(g, v)?;
        }
        Ok(family)
    }
}

/// Checked form of the increment step: `un_x` must be `UN(x)` and `v ∉ x`.
pub fn increment_un(g: &Graph, x: &VertexSet, un_x: &NeighborhoodFamily, v: usize) -> Result<NeighborhoodFamily> {
    if x.contains(v) {
        return Err(Error::contract(format!("vertex {v} already belongs to X")));
    }
    if un_x.universe != x.complement() {
        return Err(Error::contract("family universe is not the complement of X"));
    }
    un_x.increment(g, v)
}

/// `|UN(A)|` by folding the increment step over `A` in ascending order.
pub fn un_count(g: &Graph, side: &VertexSet) -> usize {
    NeighborhoodFamily::of_sequence(g, side.iter())
        .expect("ascending members are distinct")
        .len()
}

/// Largest side the enumeration oracle accepts.
pub const BRUTEFORCE_SIDE_LIMIT: usize = 20;

/// `UN(A)` by enumerating all `2^|A|` subsets of `A`.
pub fn un_bruteforce(g: &Graph, side: &VertexSet) -> Result<NeighborhoodFamily> {
    let members: Vec<usize> = side.iter().collect();
    if members.len() > BRUTEFORCE_SIDE_LIMIT {
        return Err(Error::ScaleGuard {
            what: "un_bruteforce",
            limit: BRUTEFORCE_SIDE_LIMIT,
            actual: members.len(),
        });
    }
    let universe = side.complement();

    fn walk(
        g: &Graph,
        members: &[usize],
        universe: &VertexSet,
        current: &VertexSet,
        out: &mut FxHashSet<VertexSet>,
    ) {
        match members.split_first() {
            None => {
                out.insert(current.intersection(universe));
            }
            Some((&v, rest)) => {
                walk(g, rest, universe, current, out);
                walk(g, rest, universe, &current.union(g.neighbors(v)), out);
            }
        }
    }

    let mut out = FxHashSet::default();
    walk(g, &members, &universe, &VertexSet::new(g.n()), &mut out);
    Ok(NeighborhoodFamily { universe, members: out })
}

/// Largest graph the maximal-independent-set counter accepts.
pub const MIS_VERTEX_LIMIT: usize = 32;

/// Number of maximal independent sets of the bipartite graph `G[A, Ā]`, which
/// keeps only the edges crossing the cut. Equals `|UN(A)|`.
pub fn count_mis_bipartite(g: &Graph, side: &VertexSet) -> Result<u64> {
    let n = g.n();
    if n > MIS_VERTEX_LIMIT {
        return Err(Error::ScaleGuard {
            what: "count_mis_bipartite",
            limit: MIS_VERTEX_LIMIT,
            actual: n,
        });
    }
    let other = side.complement();
    // Closed neighbourhoods in the cut graph.
    let closed: Vec<VertexSet> = (0..n)
        .map(|v| {
            let mut nb = if side.contains(v) {
                g.neighbors(v).intersection(&other)
            } else {
                g.neighbors(v).intersection(side)
            };
            nb.insert(v);
            nb
        })
        .collect();

    // Bron–Kerbosch on the complement: `candidates` may still join the set,
    // `excluded` were branched on already and must stay dominated.
    fn count(closed: &[VertexSet], mut candidates: VertexSet, mut excluded: VertexSet) -> u64 {
        if candidates.is_empty() {
            return u64::from(excluded.is_empty());
        }
        let pivot = candidates
            .iter()
            .chain(excluded.iter())
            .min_by_key(|&u| closed[u].intersection_len(&candidates))
            .expect("candidates are non-empty");
        let branch = candidates.intersection(&closed[pivot]);
        let mut total = 0;
        for v in &branch {
            total += count(closed, &candidates - &closed[v], &excluded - &closed[v]);
            candidates.remove(v);
            excluded.insert(v);
        }
        total
    }

    Ok(count(&closed, VertexSet::full(n), VertexSet::new(n)))
}

/// Number of distinct values of `N(x) ∩ Ā` over `x ∈ A`; `0` for `A = ∅`.
pub fn twin_class_count(g: &Graph, side: &VertexSet) -> usize {
    let other = side.complement();
    side.iter()
        .map(|x| g.neighbors(x).intersection(&other))
        .collect::<FxHashSet<_>>()
        .len()
}

/// Statistics of one prefix cut of an ordering.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CutStats {
    /// `|UN(A)|`.
    pub un_count: u64,
    /// `ntc(A)`.
    pub ntc_left: usize,
    /// `ntc(Ā)`.
    pub ntc_right: usize,
}

impl CutStats {
    /// `log2 |UN(A)|`.
    pub fn booldim(&self) -> f64 {
        (self.un_count as f64).log2()
    }
}

/// Result of measuring an ordering.
#[derive(Clone, Debug, PartialEq)]
pub struct OrderingWidth {
    /// Largest `|UN|` over the prefix cuts; `1` when there are none.
    pub max_un: u64,
    /// One entry per prefix `π_1..π_i`, `i = 1..n-1`.
    pub cuts: Vec<CutStats>,
}

impl OrderingWidth {
    pub fn width(&self) -> f64 {
        (self.max_un as f64).log2()
    }
}

pub(crate) fn check_permutation(n: usize, order: &[usize]) -> Result<()> {
    if order.len() != n {
        return Err(Error::contract(format!(
            "ordering has {} entries for {n} vertices",
            order.len()
        )));
    }
    let mut seen = VertexSet::new(n);
    for &v in order {
        if v >= n || !seen.insert(v) {
            return Err(Error::contract(format!("ordering repeats or overflows at vertex {v}")));
        }
    }
    Ok(())
}

/// Boolean-width of the linear decomposition given by `order`: the increment
/// step folded over the prefixes, taking the largest `|UN|`.
pub fn width_of_ordering(g: &Graph, order: &[usize]) -> Result<OrderingWidth> {
    let n = g.n();
    check_permutation(n, order)?;
    let mut family = NeighborhoodFamily::empty_cut(n);
    let mut prefix = VertexSet::new(n);
    let mut cuts = Vec::with_capacity(n.saturating_sub(1));
    for &v in order.iter().take(n.saturating_sub(1)) {
        family = family.increment(g, v)?;
        prefix.insert(v);
        cuts.push(CutStats {
            un_count: family.len() as u64,
            ntc_left: twin_class_count(g, &prefix),
            ntc_right: twin_class_count(g, &prefix.complement()),
        });
    }
    let max_un = cuts.iter().map(|c| c.un_count).max().unwrap_or(1);
    Ok(OrderingWidth { max_un, cuts })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::erdos_renyi;
    use proptest::prelude::*;

    fn set(n: usize, items: &[usize]) -> VertexSet {
        VertexSet::from_iter(n, items.iter().copied())
    }

    fn members(f: &NeighborhoodFamily) -> Vec<Vec<usize>> {
        f.sorted_members().iter().map(|s| s.iter().collect()).collect()
    }

    #[test]
    fn bruteforce_examples() {
        let p3 = Graph::path(3);
        assert_eq!(members(&un_bruteforce(&p3, &VertexSet::new(3)).unwrap()), vec![vec![]]);
        assert_eq!(members(&un_bruteforce(&p3, &set(3, &[0])).unwrap()), vec![vec![], vec![1]]);
        let c4 = Graph::cycle(4);
        assert_eq!(
            members(&un_bruteforce(&c4, &set(4, &[0, 1])).unwrap()),
            vec![vec![], vec![2], vec![3], vec![2, 3]]
        );
        let big = Graph::empty(25);
        assert!(matches!(
            un_bruteforce(&big, &VertexSet::full(25)),
            Err(Error::ScaleGuard { .. })
        ));
    }

    #[test]
    fn increment_examples() {
        let p3 = Graph::path(3);
        let x = set(3, &[0]);
        let un_x = un_bruteforce(&p3, &x).unwrap();
        let next = increment_un(&p3, &x, &un_x, 1).unwrap();
        assert_eq!(members(&next), vec![vec![], vec![2]]);

        let k3 = Graph::complete(3);
        let un_x = un_bruteforce(&k3, &x).unwrap();
        assert_eq!(members(&un_x), vec![vec![], vec![1, 2]]);
        assert_eq!(members(&increment_un(&k3, &x, &un_x, 1).unwrap()), vec![vec![], vec![2]]);

        // First step from the empty cut.
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        let start = NeighborhoodFamily::empty_cut(3);
        assert_eq!(start.increment(&g, 0).unwrap().len(), 2);
        assert_eq!(start.increment(&g, 2).unwrap().len(), 1);

        assert!(increment_un(&p3, &x, &un_bruteforce(&p3, &x).unwrap(), 0).is_err());
        assert!(increment_un(&p3, &VertexSet::new(3), &un_bruteforce(&p3, &x).unwrap(), 1).is_err());
    }

    #[test]
    fn capped_increment_gives_up() {
        let c4 = Graph::cycle(4);
        let f = NeighborhoodFamily::of_sequence(&c4, [0]).unwrap();
        assert!(f.increment_capped(&c4, 1, 3).unwrap().is_none());
        assert_eq!(f.increment_capped(&c4, 1, 4).unwrap().unwrap().len(), 4);
    }

    #[test]
    fn mis_examples() {
        assert_eq!(count_mis_bipartite(&Graph::empty(2), &set(2, &[0])).unwrap(), 1);
        let edge = Graph::from_edges(2, [(0, 1)]).unwrap();
        assert_eq!(count_mis_bipartite(&edge, &set(2, &[0])).unwrap(), 2);
        assert_eq!(count_mis_bipartite(&Graph::path(3), &set(3, &[1])).unwrap(), 2);
        assert_eq!(count_mis_bipartite(&Graph::cycle(4), &set(4, &[0, 1])).unwrap(), 4);
        assert!(count_mis_bipartite(&Graph::empty(33), &set(33, &[0])).is_err());
    }

    #[test]
    fn twin_classes() {
        assert_eq!(twin_class_count(&Graph::complete(4), &set(4, &[0, 1])), 1);
        assert_eq!(twin_class_count(&Graph::path(4), &set(4, &[0, 1])), 2);
        assert_eq!(twin_class_count(&Graph::path(4), &VertexSet::new(4)), 0);
    }

    #[test]
    fn ordering_widths() {
        let p5 = Graph::path(5);
        let w = width_of_ordering(&p5, &[0, 1, 2, 3, 4]).unwrap();
        assert_eq!(w.max_un, 2);
        assert_eq!(w.cuts.len(), 4);
        assert!(w.cuts.iter().all(|c| c.un_count == 2));

        let k5 = Graph::complete(5);
        assert_eq!(width_of_ordering(&k5, &[3, 1, 4, 0, 2]).unwrap().width(), 1.0);
        assert_eq!(width_of_ordering(&Graph::empty(4), &[2, 0, 1, 3]).unwrap().width(), 0.0);
        assert_eq!(width_of_ordering(&Graph::empty(1), &[0]).unwrap().width(), 0.0);

        assert!(width_of_ordering(&p5, &[0, 1, 2, 3]).is_err());
        assert!(width_of_ordering(&p5, &[0, 1, 2, 3, 3]).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn increment_step_matches_oracle(n in 1usize..9, p in 0.0f64..1.0, seed: u64, order_seed: u64) {
            let g = erdos_renyi(n, p, seed);
            let order = crate::generate::random_permutation(n, order_seed);
            let mut family = NeighborhoodFamily::empty_cut(n);
            let mut prefix = VertexSet::new(n);
            for &v in &order {
                let next = family.increment(&g, v).unwrap();
                prop_assert!(next.len() <= 2 * family.len());
                prefix.insert(v);
                let oracle = un_bruteforce(&g, &prefix).unwrap();
                prop_assert_eq!(next.sorted_members(), oracle.sorted_members());
                prop_assert_eq!(next.len() as u64, count_mis_bipartite(&g, &prefix).unwrap());
                prop_assert!(next.contains(&VertexSet::new(n)));
                let ntc = twin_class_count(&g, &prefix);
                prop_assert!(ntc <= n.min(next.len()));
                family = next;
            }
        }
    }
}
