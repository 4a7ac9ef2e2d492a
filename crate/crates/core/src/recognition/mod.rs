//! Structural recognizers for the graph classes the classification needs.

mod homeomorph;
mod parallel_paths;
mod path_cover;
mod seac;

pub use homeomorph::{
    find_hk23, find_hk4, is_partial_two_tree, Hk4Labelling, HomeomorphKind, HomeomorphWitness,
};
pub use parallel_paths::{
    check_staircase, find_two_parallel_paths, induced_path_order, ParallelPathsCover,
    EXHAUSTIVE_COVER_CAP,
};
pub use path_cover::{tree_path_cover, PathCover};
pub use seac::{seac_decompose, ArticulationEdge, SeacDecomposition};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RecognitionError {
    #[error("graph has no vertices")]
    Empty,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has a vertex of degree less than two")]
    NotC2,
    #[error("graph contains a cycle")]
    HasCycle,
    #[error("invalid path pair: {0}")]
    InvalidCover(String),
}
