//! Upward and downward interiors, computed either through complement and
//! closure or through the antichain automaton of a substitution preimage.

mod antichain;
mod dedekind;

pub use antichain::{
    antichain_reduce, substitution_automaton, substitution_preimage,
    substitution_preimage_with_budget, AntichainFamily, SubstitutionSpec, DEFAULT_ANTICHAIN_BUDGET,
};
pub use dedekind::{dedekind_count, MAX_DEDEKIND_N};

use crate::automata::{complement, determinize, minimize, Automaton, Dfa, Nfa};
use crate::closures::{closure, Direction};
use crate::error::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Complement, close in the dual direction, complement again.
    Duality,
    /// Antichain automaton of the substitution preimage.
    Antichain,
}

impl std::str::FromStr for Method {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "duality" => Ok(Method::Duality),
            "antichain" => Ok(Method::Antichain),
            _ => crate::error::input(format!(
                "method must be `duality` or `antichain`, got {s:?}"
            )),
        }
    }
}

/// Minimal DFA of the largest upward-closed language included in `L(a)`.
pub fn up_interior(a: &Nfa, method: Method) -> Result<Dfa> {
    interior(a, Direction::Up, method)
}

/// Minimal DFA of the largest downward-closed language included in `L(a)`.
pub fn down_interior(a: &Nfa, method: Method) -> Result<Dfa> {
    interior(a, Direction::Down, method)
}

pub fn interior(a: &Nfa, direction: Direction, method: Method) -> Result<Dfa> {
    match method {
        Method::Duality => {
            let co = complement(&determinize(a)?);
            let closed = closure(&co.into_nfa(), direction.dual());
            Ok(minimize(&complement(&determinize(&closed)?)))
        }
        Method::Antichain => {
            let spec = match direction {
                Direction::Up => SubstitutionSpec::upward_interior(a.alphabet()),
                Direction::Down => SubstitutionSpec::downward_interior(a.alphabet()),
            };
            substitution_preimage(a, &spec)
        }
    }
}
