use thiserror::Error;

use crate::partition::Cell;

/// Errors produced by shape, filling, and enumeration operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts must be weakly decreasing (part {position} is {part}, previous is {previous})")]
    PartsNotWeaklyDecreasing {
        position: usize,
        part: usize,
        previous: usize,
    },
    #[error("parts must be positive (part {position} is zero)")]
    PartNotPositive { position: usize },
    #[error("cell {cell} lies outside the shape {shape}")]
    CellOutsideShape { cell: Cell, shape: String },
    #[error("row {row} out of range {min}..={max}")]
    RowOutOfRange { row: usize, min: usize, max: usize },
    #[error("filling has {got} entries but shape {shape} has {expected} cells")]
    EntryCountMismatch {
        shape: String,
        expected: usize,
        got: usize,
    },
    #[error("filling entries must be positive")]
    EntryNotPositive,
    #[error("entry {entry} exceeds alphabet size {alphabet}")]
    EntryExceedsAlphabet { entry: u32, alphabet: usize },
    #[error("rows do not form a partition shape: {reason}")]
    RowsNotAShape { reason: String },
    #[error("evaluation has size {evaluation_size} but shape {shape} has {cells} cells")]
    EvaluationSizeMismatch {
        shape: String,
        evaluation_size: usize,
        cells: usize,
    },
    #[error("alphabet size must be at least 1")]
    AlphabetTooSmall,
    #[error("budget exceeded: shape {shape} with alphabet {alphabet} needs {states} states (max {max_states})")]
    BudgetExceeded {
        shape: String,
        alphabet: usize,
        states: u128,
        max_states: u64,
    },
    #[error("expansions have different numbers of variables ({left} vs {right})")]
    VariableCountMismatch { left: usize, right: usize },
    #[error("expansions are specialized at different roots of unity ({left} vs {right})")]
    RootOrderMismatch { left: u32, right: u32 },
    #[error("expansion is not symmetric: compositions {first} and {second} have coefficients {first_coeff} and {second_coeff}")]
    NotSymmetric {
        first: String,
        second: String,
        first_coeff: String,
        second_coeff: String,
    },
    #[error("invalid tailed shape: {reason}")]
    InvalidTailShape { reason: String },
    #[error("filling shape {got} does not match expected shape {expected}")]
    ShapeMismatch { expected: String, got: String },
    #[error("root of unity order must be at least 1")]
    RootOrderTooSmall,
}

pub type Result<T> = std::result::Result<T, Error>;
