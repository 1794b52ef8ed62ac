//! Trump (team) semantics for IFG logic over finite first-order structures,
//! and the IFG-cylindric set algebra built on top of it.
//!
//! The crate is organized around five layers:
//!
//! - [`formula`]: the IFG-formula AST, a text parser/printer, subformula
//!   trees with polarity, and the perfection transform (emptying every
//!   slash set).
//! - [`model`]: finite first-order structures, valuations, atomic
//!   satisfaction, and a classical Tarski evaluator used as an independent
//!   oracle for perfect formulas.
//! - [`team`]: team-level combinatorics — the agreement relation `≈_J`,
//!   saturated covers, the partial union `∪_J`, variants/variations, and
//!   enumeration of J-independent functions.
//! - [`semantics`]: the compositional trump-semantics evaluator (`⊨⁺` and
//!   `⊨⁻` on teams) and full-meaning computation.
//! - [`algebra`]: IFG-cylindric power set algebra elements, suit and
//!   double-suit predicates, the ∅-reduct, subalgebra generation, and the
//!   isomorphism check against the ordinary cylindric set algebra.
//!
//! Everything is exact and finite: searches are exhaustive enumerations
//! guarded by explicit budgets, never approximations.

pub mod algebra;
pub mod error;
pub mod formula;
pub mod model;
pub mod semantics;
pub mod team;

pub use error::{Error, Result};

/// Budgets for the exhaustive enumerations underneath evaluation, meaning
/// computation, and subalgebra closure. Exceeding a budget is an explicit
/// error, never silent truncation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of items a single enumeration (covers, independent
    /// functions, valuations) may produce.
    pub enumeration: u64,
    /// Maximum size of the valuation space `|A|^N` for operations that
    /// enumerate all `2^(|A|^N)` teams (meaning computation and the algebra
    /// operations whose definitions quantify over all teams).
    pub meaning_space: u64,
    /// Maximum number of elements a subalgebra closure may reach.
    pub closure_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            enumeration: 1 << 20,
            meaning_space: 16,
            closure_cap: 10_000,
        }
    }
}
