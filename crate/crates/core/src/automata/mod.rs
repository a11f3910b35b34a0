//! Automaton types and the generic algorithms the rest of the crate builds on.
//!
//! [`Nfa`] is ε-free and may have several initial states. [`Dfa`] has a
//! single initial state and a partial transition function; missing
//! transitions go to an implicit rejecting sink. Every construction that
//! allocates fresh states numbers them by breadth-first discovery with
//! letters explored in index order, so outputs are reproducible.

mod alphabet;
mod ambiguity;
mod determinize;
mod dfa;
mod enumerate;
mod machine;
mod minimize;
mod nfa;
mod ops;
pub mod random;
mod simulation;
mod state_set;

use std::borrow::Cow;

pub use alphabet::{Alphabet, Symbol, Word};
pub use ambiguity::is_unambiguous;
pub use determinize::{determinize, determinize_with_budget, DEFAULT_SUBSET_BUDGET};
pub use dfa::Dfa;
pub use enumerate::{enumerate_upto, enumerate_upto_with_budget, DEFAULT_ENUMERATION_BUDGET};
pub use machine::Machine;
pub use minimize::minimize;
pub use nfa::Nfa;
pub use ops::{
    complement, equivalent, intersect, minimal_dfa, shortest_accepted, shortest_difference,
};
pub use simulation::{determinize_reduced, simulation_preorder};
pub use state_set::StateSet;

use crate::error::Result;

/// Index of a state.
pub type StateId = usize;

/// Behaviour shared by [`Nfa`] and [`Dfa`].
pub trait Automaton {
    fn alphabet(&self) -> &Alphabet;
    fn num_states(&self) -> usize;
    /// Membership test; errors if `w` uses a letter outside the alphabet.
    fn accepts(&self, w: &[Symbol]) -> Result<bool>;
    fn to_nfa(&self) -> Cow<'_, Nfa>;
}
