use std::borrow::Cow;

use super::{Alphabet, Automaton, Dfa, Nfa, Symbol};
use crate::error::Result;

/// Either kind of automaton, as produced by generators and the parser.
#[derive(Debug, Clone)]
pub enum Machine {
    Nfa(Nfa),
    Dfa(Dfa),
}

impl Machine {
    pub fn into_nfa(self) -> Nfa {
        match self {
            Machine::Nfa(a) => a,
            Machine::Dfa(d) => d.into_nfa(),
        }
    }

    pub fn as_dfa(&self) -> Option<&Dfa> {
        match self {
            Machine::Dfa(d) => Some(d),
            Machine::Nfa(_) => None,
        }
    }
}

impl From<Nfa> for Machine {
    fn from(a: Nfa) -> Self {
        Machine::Nfa(a)
    }
}

impl From<Dfa> for Machine {
    fn from(d: Dfa) -> Self {
        Machine::Dfa(d)
    }
}

impl Automaton for Machine {
    fn alphabet(&self) -> &Alphabet {
        match self {
            Machine::Nfa(a) => a.alphabet(),
            Machine::Dfa(d) => d.alphabet(),
        }
    }

    fn num_states(&self) -> usize {
        match self {
            Machine::Nfa(a) => a.num_states(),
            Machine::Dfa(d) => d.num_states(),
        }
    }

    fn accepts(&self, w: &[Symbol]) -> Result<bool> {
        match self {
            Machine::Nfa(a) => a.accepts(w),
            Machine::Dfa(d) => d.accepts(w),
        }
    }

    fn to_nfa(&self) -> Cow<'_, Nfa> {
        match self {
            Machine::Nfa(a) => Cow::Borrowed(a),
            Machine::Dfa(d) => Cow::Owned(d.into_nfa()),
        }
    }
}
