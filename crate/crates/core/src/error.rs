use thiserror::Error;

use crate::shape::{CellRef, Period};

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong when building or transforming the objects
/// in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid period: d and L must both be positive (got d={d}, L={l})")]
    InvalidPeriod { d: usize, l: usize },

    #[error("window has {got} entries but the period needs {expected}")]
    WindowLength { expected: usize, got: usize },

    #[error("window constraint fails at index {index}: {detail}")]
    WindowConstraint { index: usize, detail: String },

    #[error("period mismatch: {0} vs {1}")]
    PeriodMismatch(Period, Period),

    #[error("shape {inner} is not contained in {outer}")]
    NotContained { inner: String, outer: String },

    #[error("row {row} is not addable in {shape}")]
    NotAddable { row: usize, shape: String },

    #[error("row {row} is not removable in {shape}")]
    NotRemovable { row: usize, shape: String },

    #[error("row index {row} outside 1..={d}")]
    RowOutOfRange { row: usize, d: usize },

    #[error("entries at {first} and {second} are out of order ({first_value} then {second_value})")]
    TableauOrder { first: CellRef, second: CellRef, first_value: usize, second_value: usize },

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("invalid oscillating tableau: {0}")]
    InvalidOscillating(String),

    #[error("invalid walk: {0}")]
    InvalidWalk(String),

    #[error("start vertex {got} does not map to the walk's start {expected}")]
    BasePoint { expected: String, got: String },

    #[error("not an insertion corner: row {row} of {shape}")]
    NotInsertionCorner { row: usize, shape: String },

    #[error("local rule precondition fails: {0}")]
    LocalRule(String),

    #[error("invalid growth diagram: {0}")]
    InvalidDiagram(String),

    #[error("type word mismatch: {0}")]
    TypeWord(String),

    #[error("numerical check failed: {0}")]
    Numerical(String),

    #[error("enumeration would exceed the state cap of {cap}")]
    ResourceCap { cap: u64 },

    #[error("integer overflow")]
    Overflow,

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Short machine-readable tag, used in structured error output.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidPeriod { .. } => "invalid_period",
            Error::WindowLength { .. } | Error::WindowConstraint { .. } => "invalid_shape",
            Error::PeriodMismatch(..) => "period_mismatch",
            Error::NotContained { .. } => "not_contained",
            Error::NotAddable { .. } | Error::NotRemovable { .. } | Error::RowOutOfRange { .. } => "invalid_row",
            Error::TableauOrder { .. } | Error::InvalidTableau(_) => "invalid_tableau",
            Error::InvalidOscillating(_) => "invalid_oscillating_tableau",
            Error::InvalidWalk(_) => "invalid_walk",
            Error::BasePoint { .. } => "base_point_mismatch",
            Error::NotInsertionCorner { .. } => "not_insertion_corner",
            Error::LocalRule(_) => "local_rule",
            Error::InvalidDiagram(_) => "invalid_diagram",
            Error::TypeWord(_) => "type_word",
            Error::Numerical(_) => "numerical",
            Error::ResourceCap { .. } => "resource_cap",
            Error::Overflow => "overflow",
            Error::Parse(_) => "parse",
        }
    }
}
