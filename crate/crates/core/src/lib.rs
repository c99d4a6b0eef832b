//! Linear boolean decompositions of graphs and (σ,ρ) vertex-subset problems
//! solved on top of them.
//!
//! A linear decomposition is a vertex ordering. Its width is the largest
//! boolean dimension `log2 |UN(A)|` over the prefix cuts `(A, Ā)`, where
//! `UN(A)` is the family of distinct sets `N(X) ∩ Ā` for `X ⊆ A`.

pub mod cut;
pub mod decompose;
pub mod error;
pub mod exact;
pub mod generate;
pub mod graph;
pub mod heuristics;
pub mod io;
pub mod pathdec;
pub mod sigma_rho;
pub mod vertex_set;

pub use cut::{
    count_mis_bipartite, increment_un, twin_class_count, un_bruteforce, un_count, width_of_ordering, CutStats,
    NeighborhoodFamily, OrderingWidth,
};
pub use decompose::{cuts_csv, decompose, DecompositionFile, LinearDecomposition, Strategy};
pub use error::{Error, Result};
pub use exact::{incremental_un_exact, lbw_dp_bruteforce, lbw_exact, ExactConfig, ExactResult};
pub use generate::{erdos_renyi, random_permutation};
pub use graph::{bfs_start_vertex, Graph};
pub use heuristics::{
    generate_ordering, multi_start, CandidateStrategy, GreedyOutcome, GreedyRun, HeuristicConfig, Score, StartStrategy,
};
pub use io::{parse_col, parse_dgf, read_graph, write_dgf};
pub use pathdec::{order_from_path_decomposition, PathDecomposition};
pub use sigma_rho::{
    bounds, brute_force_sigma_rho, enumerate_classes, nec_of_decomposition, solve_sigma_rho, MembershipSet, Objective,
    SigmaRhoSolution, SigmaRhoSpec,
};
pub use vertex_set::VertexSet;
