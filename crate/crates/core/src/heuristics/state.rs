use rustc_hash::FxHashSet;

use super::{CandidateStrategy, CutCounter, RnVariant, TrivialFamily};
use crate::cut::{count_mis_bipartite, un_count, NeighborhoodFamily};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// The `Left`/`Right` split of a greedy run in progress.
#[derive(Clone, Debug)]
pub struct GreedyState<'g> {
    g: &'g Graph,
    left: VertexSet,
    right: VertexSet,
    order: Vec<usize>,
    /// `N(Left)`.
    left_neighborhood: VertexSet,
    /// `{ N(u) ∩ Right : u ∈ Left }`.
    left_right: FxHashSet<VertexSet>,
    /// `UN(Left)`, when the run maintains it.
    un_left: Option<NeighborhoodFamily>,
}

impl<'g> GreedyState<'g> {
    /// `Left = {init}`. With `track_un`, `UN(Left)` is maintained as well.
    pub fn new(g: &'g Graph, init: usize, track_un: bool) -> Self {
        let n = g.n();
        let mut state = GreedyState {
            g,
            left: VertexSet::new(n),
            right: VertexSet::full(n),
            order: Vec::with_capacity(n),
            left_neighborhood: VertexSet::new(n),
            left_right: FxHashSet::default(),
            un_left: track_un.then(|| NeighborhoodFamily::empty_cut(n)),
        };
        let un = state
            .un_left
            .as_ref()
            .map(|f| f.increment(g, init).expect("init is on the right"));
        state.advance(init, un);
        state
    }

    pub fn graph(&self) -> &'g Graph {
        self.g
    }

    pub fn left(&self) -> &VertexSet {
        &self.left
    }

    pub fn right(&self) -> &VertexSet {
        &self.right
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn into_order(self) -> Vec<usize> {
        self.order
    }

    pub fn un_left(&self) -> Option<&NeighborhoodFamily> {
        self.un_left.as_ref()
    }

    pub fn left_right_neighborhoods(&self) -> &FxHashSet<VertexSet> {
        &self.left_right
    }

    pub fn is_done(&self) -> bool {
        self.right.is_empty()
    }

    /// Moves `chosen` from `Right` to `Left`. `un_next` must be
    /// `UN(Left ∪ {chosen})` when the state tracks `UN`.
    pub fn advance(&mut self, chosen: usize, un_next: Option<NeighborhoodFamily>) {
        debug_assert!(self.right.contains(chosen));
        self.left.insert(chosen);
        self.right.remove(chosen);
        self.order.push(chosen);
        self.left_neighborhood.union_with(self.g.neighbors(chosen));
        let mut next: FxHashSet<VertexSet> = self
            .left_right
            .drain()
            .map(|mut s| {
                s.remove(chosen);
                s
            })
            .collect();
        next.insert(self.g.neighbors(chosen).intersection(&self.right));
        self.left_right = next;
        if self.un_left.is_some() {
            self.un_left = Some(un_next.expect("tracked state needs the next UN family"));
        }
    }

    /// Vertices eligible for the next step.
    pub fn candidates(&self, strategy: CandidateStrategy) -> VertexSet {
        match strategy {
            CandidateStrategy::Right => self.right.clone(),
            CandidateStrategy::TwoNeighborhood => {
                let reach = self.left.union(&self.left_neighborhood);
                let two = self.g.neighborhood_of(&reach).intersection(&self.right);
                if two.is_empty() {
                    self.right.clone()
                } else {
                    two
                }
            }
        }
    }

    /// Smallest candidate `v` with `N(v) ∩ Right'` equal to `N(X) ∩ Right'` for
    /// some `X` in the family, where `Right' = Right ∖ {v}`. Placing such a
    /// vertex never increases `|UN|`.
    pub fn trivial_case(&self, candidates: &VertexSet, family: TrivialFamily) -> Option<usize> {
        let computed;
        let un = match family {
            TrivialFamily::Singletons => None,
            TrivialFamily::AllSubsets => match &self.un_left {
                Some(un) => Some(un),
                None => {
                    computed = NeighborhoodFamily::of_sequence(self.g, self.order.iter().copied())
                        .expect("ordering is a sequence of distinct vertices");
                    Some(&computed)
                }
            },
        };
        candidates.iter().find(|&v| {
            let own = self.g.neighbors(v).intersection(&self.right);
            if own.is_empty() {
                return true;
            }
            let mut with_v = own.clone();
            with_v.insert(v);
            match un {
                None => self.left_right.contains(&own) || self.left_right.contains(&with_v),
                Some(un) => un.contains(&own) || un.contains(&with_v),
            }
        })
    }

    /// `(|Internal(v)|, |External(v)|)` with `Internal(v) = N(v) ∩ N(Left) ∩ Right`
    /// and `External(v) = (N(v) ∖ N(Left)) ∩ Right`.
    pub fn internal_external(&self, v: usize) -> (usize, usize) {
        let nv_right = self.g.neighbors(v).intersection(&self.right);
        let internal = nv_right.intersection_len(&self.left_neighborhood);
        (internal, nv_right.len() - internal)
    }

    /// Relative-neighbourhood score; smaller is better. Isolated vertices score 0.
    pub fn score_relative_neighborhood(&self, v: usize, variant: RnVariant) -> f64 {
        let degree = self.g.degree(v);
        if degree == 0 {
            return 0.0;
        }
        let (internal, external) = self.internal_external(v);
        match variant {
            RnVariant::Rn1 if internal + external == 0 => 0.0,
            RnVariant::Rn1 => external as f64 / (internal + external) as f64,
            RnVariant::Rn2 => external as f64 / degree as f64,
            RnVariant::Rn3 => 1.0 - internal as f64 / degree as f64,
        }
    }

    /// `|UN(Left ∪ {v})|`, computed without the maintained family.
    pub fn score_least_cut_value(&self, v: usize, counter: CutCounter) -> u64 {
        let mut side = self.left.clone();
        side.insert(v);
        match counter {
            CutCounter::Recount => un_count(self.g, &side) as u64,
            CutCounter::MaximalIndependentSets => {
                count_mis_bipartite(self.g, &side).expect("cut graph within the counter's limit")
            }
        }
    }
}
