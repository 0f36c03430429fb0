//! b-chromatic numbers of small graphs and their vertex-deleted subgraphs.
//!
//! The crate provides an immutable bitset graph type, parsers for graph6 /
//! DIMACS / edge-list interchange formats, exact solvers for chromatic and
//! b-chromatic numbers, recognizers for chordal and quasi-line graphs,
//! constructive recoloring procedures certifying lower bounds on
//! `b(G - {x})`, instance generators, and a batch verification harness.

pub mod coloring;
pub mod generators;
pub mod graph;
pub mod harness;
pub mod io;
pub mod recognizers;
pub mod recolor;
pub mod solver;

pub use coloring::{Coloring, RecolorTrace, StepReason, TraceStep};
pub use graph::{Graph, VertexMap};
pub use io::ParseError;

use thiserror::Error;

/// Errors surfaced by the in-memory graph and coloring operations.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {0} out of range (graph has {1} vertices)")]
    VertexOutOfRange(usize, usize),
    #[error("operation requires a graph with at least {0} vertices")]
    GraphTooSmall(usize),
    #[error("coloring has {got} entries but graph has {want} vertices")]
    SizeMismatch { got: usize, want: usize },
    #[error("color {0} out of range (palette has {1} colors)")]
    ColorOutOfRange(usize, usize),
    #[error("coloring palette is not dense: color {0} is unused")]
    SparsePalette(usize),
    #[error("coloring is not proper: edge ({0},{1}) is monochromatic")]
    NotProper(usize, usize),
    #[error("coloring is not a b-coloring: color {0} has no dominating vertex")]
    NotBColoring(usize),
    #[error("vertex {0} of class {1} has no missing color")]
    NoMissingColor(usize, usize),
    #[error("graph is not quasi-line: neighborhood of {0} needs more than two cliques")]
    NotQuasiLine(usize),
    #[error("graph exceeds size limit: n = {0}, limit = {1}")]
    SizeLimit(usize, usize),
    #[error("invalid generator parameter: {0}")]
    BadParameter(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("bound violated: {0}")]
    BoundViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
