//! Exact geometry of a family of self-similar metric trees.
//!
//! A weight vector `a(1), ..., a(m)` (nonincreasing, `a(1) = a(2) = 1/2`,
//! all values in `(0, 1/2]`) determines a geodesic tree obtained as the limit
//! of combinatorial level graphs on the words of length `k`. This crate
//! computes in that tree exactly (arbitrary-precision rationals) or with
//! explicit tolerances (planar and dimension routines):
//!
//! - exact distances between eventually periodic points, and the finite
//!   chain sums that converge to them ([`metric`]);
//! - the level graphs, their closed-form adjacency, and unique arcs
//!   ([`graphs`]);
//! - branch points, their heights, tile boundaries and neighbor ratios, with
//!   verifiable separation/growth/density constants ([`branching`]);
//! - Hausdorff dimensions via the Moran equation, including a tail bound for
//!   infinite alphabets ([`dimension`]);
//! - planar realizations: a one-parameter family of tree attractors and the
//!   Vicsek cross, with skeleton generation, SVG/CSV export, and sampled
//!   geometric checks ([`planar`]);
//! - geodesic gluing transforms that upgrade a finite metric tree to uniform
//!   `m`-branching, and property verification for the result ([`gluing`]);
//! - a thin command line in front of all of the above ([`cli`]).
//!
//! ## Examples directory
//!
//! Each capability has one runnable example:
//!
//! ```text
//! examples/
//! ├── distances.rs            # exact distances between symbolic points
//! ├── chain_convergence.rs    # finite chain sums approaching the distance
//! ├── graph_paths.rs          # level graphs, neighbors, unique arcs
//! ├── branch_points.rs        # branch points, heights, separation
//! ├── tiles.rs                # tile boundaries and neighbor ratios
//! ├── dimensions.rs           # Moran exponents and the tail certificate
//! ├── planar_family.rs        # planar tree attractors, geodesics, SVG
//! ├── vicsek.rs               # Vicsek cross skeleton and heights, CSV
//! ├── glue_pipeline.rs        # uniform-branching gluing transforms
//! └── embedding_nesting.rs    # branch-point nesting across alphabets
//! ```
//!
//! Run one with `cargo run --example distances`. The same functionality is
//! scriptable through the `qctree` binary; see the README for the subcommand
//! reference.

pub mod branching;
pub mod cli;
pub mod dimension;
pub mod gluing;
pub mod graphs;
pub mod metric;
pub mod planar;
pub mod words;

mod threads;

pub use words::{
    decimal_string, delta, parse_ratio, point_equals, ratio_string, Alphabet, Letter, PointCode,
    Weight, Word,
};

/// Errors reported by the library.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("letter {0} outside alphabet bound {1}")]
    LetterOutOfRange(words::Letter, words::Letter),
    #[error("words must have equal nonzero length")]
    LengthMismatch,
    #[error("point code {0} is not canonical")]
    NotCanonical(String),
    #[error("enumeration size {0} exceeds the guard {1}")]
    SizeGuard(u128, u128),
    #[error("invalid weight: {0}")]
    InvalidWeight(String),
    #[error("invalid word: {0}")]
    InvalidWord(String),
    #[error("invalid point code: {0}")]
    InvalidPointCode(String),
    #[error("invalid tree: {0}")]
    InvalidTree(String),
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("vertex {0:?} is not a double point")]
    NotDoublePoint(String),
    #[error("vertex {0:?} has fewer than three branches")]
    NotBranchPoint(String),
    #[error("valence {0} already exceeds the target {1}")]
    ValenceExceeded(usize, usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
