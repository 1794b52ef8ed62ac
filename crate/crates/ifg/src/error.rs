//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Formula or structure text failed to parse. `pos` is a byte offset
    /// into the input.
    #[error("syntax error at offset {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    /// A variable index is not below the ambient variable count.
    #[error("variable v{index} out of range: formula has {count} variables")]
    VariableOutOfRange { index: usize, count: usize },

    /// An enumeration would produce more items than the configured budget.
    #[error("enumeration budget exceeded while {what}: {needed} items, limit {limit}")]
    BudgetExceeded {
        what: &'static str,
        needed: u128,
        limit: u64,
    },

    /// The valuation space `|A|^N` is too large for exhaustive meaning
    /// computation.
    #[error("valuation space too large for meaning computation: |A|^N = {points}, limit {limit}")]
    SpaceTooLarge { points: u128, limit: u64 },

    #[error("unknown relation symbol `{0}`")]
    UnknownRelation(String),

    #[error("relation `{name}` has arity {expected}, got {actual} arguments")]
    ArityMismatch {
        name: String,
        expected: usize,
        actual: usize,
    },

    /// The classical Tarski evaluator only accepts perfect formulas.
    #[error("formula is not perfect (it has a nonempty slash set)")]
    NotPerfect,

    #[error("valuation has length {actual}, expected {expected}")]
    ValuationLength { expected: usize, actual: usize },

    #[error("element {element} not in universe of size {universe}")]
    ElementOutOfRange { element: usize, universe: usize },

    #[error("variation function is not total on the team")]
    PartialFunction,

    #[error("tree position {0:?} does not address a node of the formula")]
    InvalidPosition(Vec<u8>),

    /// Subalgebra closure grew past the configured element cap.
    #[error("closure exceeded the element cap of {cap}")]
    ClosureTooLarge { cap: usize },
}
