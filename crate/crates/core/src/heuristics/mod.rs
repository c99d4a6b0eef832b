//! Greedy construction of linear orderings.
//!
//! Every heuristic grows an ordering from a start vertex. `Left` holds the
//! placed vertices and `Right` the rest; each step places a trivial-case
//! vertex when one exists and otherwise the candidate with the smallest score,
//! ties going to the smallest index.

mod greedy;
mod state;

pub use greedy::{generate_ordering, multi_start, multi_start_par, start_vertices, GreedyOutcome, GreedyRun, Incumbent};
pub use state::GreedyState;

/// Score used to choose the next vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Score {
    /// `|External| / (|Internal| + |External|)`.
    Rn1,
    /// `|External| / |N(v)|`.
    Rn2,
    /// `1 - |Internal| / |N(v)|`.
    Rn3,
    /// `|UN(Left ∪ {v})|`, recounted from scratch for every candidate.
    LeastCutValue,
    /// `|UN(Left ∪ {v})|`, obtained from the maintained `UN(Left)` by one
    /// increment step.
    Iun,
}

impl Score {
    /// Whether the score is a cut size (so runs know their width on return).
    pub fn tracks_cut_size(self) -> bool {
        matches!(self, Score::LeastCutValue | Score::Iun)
    }

    pub fn name(self) -> &'static str {
        match self {
            Score::Rn1 => "rn1",
            Score::Rn2 => "rn2",
            Score::Rn3 => "rn3",
            Score::LeastCutValue => "lcv",
            Score::Iun => "iun",
        }
    }
}

/// Relative-neighbourhood score variants.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RnVariant {
    Rn1,
    Rn2,
    Rn3,
}

/// Which vertices are considered at each step.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum CandidateStrategy {
    /// All of `Right`.
    #[default]
    Right,
    /// `N(Left ∪ N(Left)) ∩ Right`, or all of `Right` when that is empty.
    TwoNeighborhood,
}

/// Which start vertices a multi-start search tries, most promising first.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum StartStrategy {
    /// One run from the double-BFS vertex.
    #[default]
    DoubleBfs,
    /// The double-BFS vertex, then the single-BFS vertex.
    SingleAndDoubleBfs,
    /// Both BFS vertices first, then every other vertex ascending.
    AllVertices,
}

/// Subsets `X ⊆ Left` whose neighbourhoods qualify a vertex as a trivial case.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum TrivialFamily {
    /// `X = ∅` and `X = {u}` for `u ∈ Left`.
    #[default]
    Singletons,
    /// Every `X ⊆ Left`. Needs `UN(Left)`, which score functions other than
    /// IUN must recompute at each step.
    AllSubsets,
}

/// How the least-cut-value score counts `|UN(Left ∪ {v})|`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum CutCounter {
    /// Fold the increment step over `Left ∪ {v}` from the empty cut.
    #[default]
    Recount,
    /// Count maximal independent sets of the bipartite cut graph (≤ 32 vertices).
    MaximalIndependentSets,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HeuristicConfig {
    pub score: Score,
    pub candidates: CandidateStrategy,
    pub starts: StartStrategy,
    /// Abort any run whose cuts exceed this `|UN|`.
    pub prune_bound: Option<u64>,
    pub trivial: TrivialFamily,
    pub cut_counter: CutCounter,
}

impl HeuristicConfig {
    pub fn new(score: Score) -> Self {
        HeuristicConfig {
            score,
            candidates: CandidateStrategy::default(),
            starts: StartStrategy::default(),
            prune_bound: None,
            trivial: TrivialFamily::default(),
            cut_counter: CutCounter::default(),
        }
    }

    /// IUN from every start vertex.
    pub fn n_iun() -> Self {
        Self::new(Score::Iun).with_starts(StartStrategy::AllVertices)
    }

    pub fn with_candidates(mut self, candidates: CandidateStrategy) -> Self {
        self.candidates = candidates;
        self
    }

    pub fn with_starts(mut self, starts: StartStrategy) -> Self {
        self.starts = starts;
        self
    }

    pub fn with_prune_bound(mut self, bound: Option<u64>) -> Self {
        self.prune_bound = bound;
        self
    }

    pub fn with_trivial(mut self, trivial: TrivialFamily) -> Self {
        self.trivial = trivial;
        self
    }

    pub fn with_cut_counter(mut self, counter: CutCounter) -> Self {
        self.cut_counter = counter;
        self
    }
}
