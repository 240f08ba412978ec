//! Cost calculus: description complexity, memory sizing, and Pareto
//! selection among realizations.

mod complexity;
mod memory;
mod pareto;

use thiserror::Error;

pub use complexity::{
    description_complexity, hierarchical_complexity, merge_operators, micro_complexity, ratio,
    relative_complexity, AlgorithmDescription, HierarchicalComplexity, Merge, MicroInstruction,
    OperatorSpec,
};
pub use memory::{bram_count, ideal_exponent, memory_cost, LevelCost, MemoryCostBreakdown};
pub use pareto::{
    functional, pareto_front, select_realization, RealizationPoint, Selection, WeightVector,
};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CostError {
    #[error("{0}")]
    Invalid(String),
    #[error("level {0} is not declared")]
    UnknownLevel(u32),
    #[error("denominator is zero")]
    DegenerateHierarchy,
    #[error("{points} points but {c} c-weights and {b} b-weights")]
    DimensionMismatch { points: usize, c: usize, b: usize },
    #[error("reference T0 and Q0 must be positive")]
    NonPositiveReference,
    #[error("mixed units: {0}")]
    UnitMismatch(String),
}
