use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;

use super::{GreedyState, HeuristicConfig, RnVariant, Score, StartStrategy};
use crate::graph::{bfs_start_vertex, Graph};

/// Best result so far, used to abandon hopeless runs.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Incumbent {
    /// Largest `|UN|` of the best ordering (cut-size scores).
    MaxUn(u64),
    /// Sum of scores of the best ordering (relative-neighbourhood scores).
    ScoreSum(f64),
}

/// A completed greedy run.
#[derive(Clone, Debug, PartialEq)]
pub struct GreedyRun {
    pub start: usize,
    pub order: Vec<usize>,
    /// Largest `|UN|` over the prefix cuts, known for cut-size scores.
    pub max_un: Option<u64>,
    /// Sum of the chosen vertices' scores over all steps after the start.
    pub score_sum: f64,
    /// Positions in `order` whose vertex was placed as a trivial case.
    pub trivial_steps: Vec<usize>,
}

impl GreedyRun {
    pub fn width(&self) -> Option<f64> {
        self.max_un.map(|u| (u as f64).log2())
    }

    fn beats(&self, other: &GreedyRun) -> bool {
        match (self.max_un, other.max_un) {
            (Some(a), Some(b)) => a < b,
            _ => self.score_sum < other.score_sum,
        }
    }

    fn incumbent(&self) -> Incumbent {
        match self.max_un {
            Some(u) => Incumbent::MaxUn(u),
            None => Incumbent::ScoreSum(self.score_sum),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum GreedyOutcome {
    Complete(GreedyRun),
    /// The run was abandoned once it could no longer beat the incumbent.
    Pruned { placed: usize },
}

impl GreedyOutcome {
    pub fn complete(self) -> Option<GreedyRun> {
        match self {
            GreedyOutcome::Complete(run) => Some(run),
            GreedyOutcome::Pruned { .. } => None,
        }
    }
}

fn rn_variant(score: Score) -> Option<RnVariant> {
    match score {
        Score::Rn1 => Some(RnVariant::Rn1),
        Score::Rn2 => Some(RnVariant::Rn2),
        Score::Rn3 => Some(RnVariant::Rn3),
        Score::LeastCutValue | Score::Iun => None,
    }
}

/// Greedily builds an ordering from `init`.
///
/// For cut-size scores the run aborts as soon as a cut exceeds
/// `cfg.prune_bound` or an incumbent [`Incumbent::MaxUn`]; for relative
/// neighbourhood scores it aborts once the running score sum exceeds an
/// incumbent [`Incumbent::ScoreSum`].
pub fn generate_ordering(g: &Graph, cfg: &HeuristicConfig, init: usize, best_so_far: Option<Incumbent>) -> GreedyOutcome {
    let un_bound = [cfg.prune_bound, best_so_far.and_then(|b| match b {
        Incumbent::MaxUn(u) => Some(u),
        Incumbent::ScoreSum(_) => None,
    })]
    .into_iter()
    .flatten()
    .min();
    let sum_bound = match best_so_far {
        Some(Incumbent::ScoreSum(s)) => Some(s),
        _ => None,
    };

    let n = g.n();
    let track = cfg.score == Score::Iun;
    let mut state = GreedyState::new(g, init, track);
    let mut trivial_steps = Vec::new();
    let mut score_sum = 0.0;
    let mut max_un: u64 = 1;

    if cfg.score.tracks_cut_size() && n > 1 {
        max_un = match state.un_left() {
            Some(un) => un.len() as u64,
            None => u64::from(!g.neighbors(init).is_empty()) + 1,
        };
        if un_bound.is_some_and(|b| max_un > b) {
            return GreedyOutcome::Pruned { placed: 1 };
        }
    }

    while !state.is_done() {
        let candidates = state.candidates(cfg.candidates);
        let last_step = state.right().len() == 1;
        let trivial = state.trivial_case(&candidates, cfg.trivial);
        if trivial.is_some() {
            trivial_steps.push(state.order().len());
        }

        let (chosen, cut_size, un_next) = match cfg.score {
            Score::Iun => {
                let un = state.un_left().expect("IUN tracks UN(Left)");
                match trivial {
                    Some(v) => {
                        let next = un.increment(g, v).expect("candidate is on the right");
                        (v, next.len() as u64, Some(next))
                    }
                    None => {
                        let mut best: Option<(usize, crate::cut::NeighborhoodFamily)> = None;
                        for v in &candidates {
                            // Only a strictly smaller family can replace the current best.
                            let mut cap = best.as_ref().map_or(usize::MAX, |(_, f)| f.len() - 1);
                            if let Some(b) = un_bound.filter(|_| !last_step) {
                                cap = cap.min(b as usize);
                            }
                            if let Some(next) = un.increment_capped(g, v, cap).expect("candidate is on the right") {
                                best = Some((v, next));
                            }
                        }
                        match best {
                            Some((v, next)) => (v, next.len() as u64, Some(next)),
                            None => return GreedyOutcome::Pruned { placed: state.order().len() },
                        }
                    }
                }
            }
            Score::LeastCutValue => match trivial {
                Some(v) => (v, state.score_least_cut_value(v, cfg.cut_counter), None),
                None => {
                    let (v, size) = candidates
                        .iter()
                        .map(|v| (v, state.score_least_cut_value(v, cfg.cut_counter)))
                        .min_by_key(|&(v, size)| (size, v))
                        .expect("candidates are non-empty");
                    (v, size, None)
                }
            },
            rn => {
                let variant = rn_variant(rn).expect("relative neighbourhood score");
                let (v, score) = match trivial {
                    Some(v) => (v, state.score_relative_neighborhood(v, variant)),
                    None => {
                        let mut best: Option<(usize, f64)> = None;
                        for v in &candidates {
                            let s = state.score_relative_neighborhood(v, variant);
                            if best.is_none_or(|(_, b)| s < b) {
                                best = Some((v, s));
                            }
                        }
                        best.expect("candidates are non-empty")
                    }
                };
                score_sum += score;
                if sum_bound.is_some_and(|b| score_sum > b) {
                    return GreedyOutcome::Pruned { placed: state.order().len() };
                }
                state.advance(v, None);
                continue;
            }
        };

        score_sum += cut_size as f64;
        if !last_step {
            max_un = max_un.max(cut_size);
            if un_bound.is_some_and(|b| cut_size > b) {
                return GreedyOutcome::Pruned { placed: state.order().len() };
            }
        }
        state.advance(chosen, un_next);
    }

    let tracks = cfg.score.tracks_cut_size();
    GreedyOutcome::Complete(GreedyRun {
        start: init,
        order: state.into_order(),
        max_un: tracks.then_some(max_un),
        score_sum,
        trivial_steps,
    })
}

/// Start vertices for a multi-start search, most promising first and without
/// repeats. BFS searches begin at vertex 0.
pub fn start_vertices(g: &Graph, strategy: StartStrategy) -> Vec<usize> {
    if g.n() == 0 {
        return Vec::new();
    }
    let double = bfs_start_vertex(g, 0, true);
    let mut starts = vec![double];
    let mut push = |v: usize| {
        if !starts.contains(&v) {
            starts.push(v);
        }
    };
    match strategy {
        StartStrategy::DoubleBfs => {}
        StartStrategy::SingleAndDoubleBfs => push(bfs_start_vertex(g, 0, false)),
        StartStrategy::AllVertices => {
            push(bfs_start_vertex(g, 0, false));
            (0..g.n()).for_each(push);
        }
    }
    starts
}

/// Runs [`generate_ordering`] from every start vertex of `cfg.starts`, passing
/// the best result so far as the pruning incumbent. Ties keep the earlier start.
pub fn multi_start(g: &Graph, cfg: &HeuristicConfig) -> GreedyRun {
    let mut best: Option<GreedyRun> = None;
    for start in start_vertices(g, cfg.starts) {
        let incumbent = best.as_ref().map(GreedyRun::incumbent);
        if let Some(run) = generate_ordering(g, cfg, start, incumbent).complete() {
            if best.as_ref().is_none_or(|b| run.beats(b)) {
                best = Some(run);
            }
        }
    }
    best.unwrap_or_else(|| GreedyRun {
        start: 0,
        order: Vec::new(),
        max_un: cfg.score.tracks_cut_size().then_some(1),
        score_sum: 0.0,
        trivial_steps: Vec::new(),
    })
}

/// Parallel [`multi_start`]. Runs share the incumbent through an atomic that
/// only ever decreases; the result is the same as the sequential search.
pub fn multi_start_par(g: &Graph, cfg: &HeuristicConfig) -> GreedyRun {
    let starts = start_vertices(g, cfg.starts);
    if starts.len() <= 1 {
        return multi_start(g, cfg);
    }
    let tracks = cfg.score.tracks_cut_size();
    // Non-negative f64 bit patterns order like the values they encode.
    let shared = AtomicU64::new(u64::MAX);
    let runs: Vec<(usize, GreedyRun)> = starts
        .par_iter()
        .enumerate()
        .filter_map(|(rank, &start)| {
            let current = shared.load(Ordering::Relaxed);
            let incumbent = (current != u64::MAX).then(|| {
                if tracks {
                    Incumbent::MaxUn(current)
                } else {
                    Incumbent::ScoreSum(f64::from_bits(current))
                }
            });
            let run = generate_ordering(g, cfg, start, incumbent).complete()?;
            let key = run.max_un.unwrap_or_else(|| run.score_sum.to_bits());
            shared.fetch_min(key, Ordering::Relaxed);
            Some((rank, run))
        })
        .collect();
    runs.into_iter()
        .min_by(|(ra, a), (rb, b)| {
            let key = |r: &GreedyRun| match r.max_un {
                Some(un) => (un, 0.0),
                None => (0, r.score_sum),
            };
            key(a).partial_cmp(&key(b)).expect("scores are finite").then(ra.cmp(rb))
        })
        .map(|(_, run)| run)
        .expect("the first run is never pruned by a stale incumbent")
}
