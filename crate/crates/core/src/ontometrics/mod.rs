//! Ontograph complexity (vertex count by branching, uniform trees, weighted
//! volume and density) and concept union by label.

mod graph;
mod metrics;

use thiserror::Error;

pub use graph::{EdgeKey, Ontograph, Vertex};
pub use metrics::{
    concept_union, uniform_complexity, uniform_tree, vertex_complexity, weighted_complexity,
    WeightedComplexity,
};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OntoError {
    #[error("line {line}: {reason}")]
    Format { line: usize, reason: String },
    #[error("vertex {0:?} is declared twice")]
    DuplicateVertex(String),
    #[error("edge refers to unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("edge {parent:?} → {child:?} goes from level {parent_level} to level {child_level}")]
    LevelConflict {
        parent: String,
        child: String,
        parent_level: u32,
        child_level: u32,
    },
    #[error("vertex {0:?} is neither a root nor reachable from a parent")]
    Disconnected(String),
    #[error("vertex {0:?} has no weight")]
    MissingVertexWeight(String),
    #[error("edge {parent:?} → {child:?} has no weight")]
    MissingEdgeWeight { parent: String, child: String },
    #[error("weights must be finite and ≥ 0 (at {0:?})")]
    BadWeight(String),
    #[error("weighted complexity is zero; density undefined")]
    ZeroWeight,
    #[error("parameters out of range: {0}")]
    Range(String),
}
