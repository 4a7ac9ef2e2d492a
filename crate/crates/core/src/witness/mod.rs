//! Checkable matrix certificates: structural rank lower bounds for graphs
//! of two parallel paths, exact rational matrices of corank three for
//! graphs containing a subdivided K4 or K2,3, and lifts of matrices through
//! pendant additions and edge subdivisions.

mod frame;
mod hk23;
mod hk4;
mod lift;
mod pattern;
mod rational;

pub use frame::SchurFrame;
pub use hk23::construct_corank3_hk23;
pub use hk4::{construct_corank3_hk4, construct_corank3_hk4_without};
pub use lift::{pendant_lift, pendant_reduce, subdivision_lift, subdivision_project, PendantLift, SubdivisionProjection};
pub use pattern::{
    find_triangular_certificate,    lower_bound_certificate, parallel_paths_pattern, verify_certificate, PatternEntry, PatternMatrix,
    TriangularCertificate,
};
pub use rational::{exact_rank, q, RationalMatrix, Q};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WitnessError {
    #[error("not a valid parallel-paths cover of the graph")]
    InvalidCover,
    #[error("invalid witness: {0}")]
    InvalidWitness(String),
    #[error("index {index} out of range for n = {n}")]
    OutOfRange { index: usize, n: usize },
    #[error("pattern mismatch: {0}")]
    PatternMismatch(String),
    #[error("scalar must be nonzero")]
    ZeroScalar,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("construction degenerate after retries: {0}")]
    Degenerate(String),
    #[error("matrix shape: {0}")]
    Shape(String),
    #[error("parse error: {0}")]
    Parse(String),
}
