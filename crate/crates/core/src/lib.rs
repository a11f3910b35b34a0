//! Regular languages under the scattered-subword order.
//!
//! The crate builds upward and downward closures and interiors of regular
//! languages, generates the standard witness families for their state
//! complexity, checks lower-bound certificates (fooling sets and fooling
//! matrix ranks) and decides closedness, closure inclusion and closure
//! universality with re-checkable certificates.

pub mod automata;
pub mod bounds;
pub mod closures;
pub mod decisions;
mod error;
pub mod experiments;
pub mod format;
pub mod interiors;
pub mod subwords;
pub mod witnesses;

pub use automata::{Alphabet, Automaton, Dfa, Machine, Nfa, StateId, StateSet, Symbol, Word};
pub use error::{Error, Result};
