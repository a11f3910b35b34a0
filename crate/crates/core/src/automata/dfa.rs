use std::borrow::Cow;

use super::{Alphabet, Automaton, Nfa, StateId, Symbol};
use crate::error::{input, Error, Result};

/// A deterministic automaton with a partial transition function.
#[derive(Clone, PartialEq, Eq)]
pub struct Dfa {
    alphabet: Alphabet,
    n: usize,
    /// Indexed by `q * k + a`.
    delta: Vec<Option<StateId>>,
    initial: StateId,
    fin: Vec<bool>,
}

impl Dfa {
    pub fn new(
        alphabet: Alphabet,
        n: usize,
        transitions: impl IntoIterator<Item = (StateId, Symbol, StateId)>,
        initial: StateId,
        finals: impl IntoIterator<Item = StateId>,
    ) -> Result<Self> {
        if initial >= n {
            return input(format!("initial state {initial} >= {n}"));
        }
        let k = alphabet.len();
        let mut delta = vec![None; n * k];
        for (p, a, q) in transitions {
            if p >= n || q >= n || a >= k {
                return input(format!("transition ({p}, {a}, {q}) out of range"));
            }
            match delta[p * k + a] {
                Some(old) if old != q => {
                    return Err(Error::Determinism(format!(
                        "state {p} has two transitions on {} (to {old} and {q})",
                        alphabet.name(a)
                    )))
                }
                _ => delta[p * k + a] = Some(q),
            }
        }
        let mut fin = vec![false; n];
        for q in finals {
            if q >= n {
                return input(format!("final state {q} >= {n}"));
            }
            fin[q] = true;
        }
        Ok(Self {
            alphabet,
            n,
            delta,
            initial,
            fin,
        })
    }

    /// One non-accepting state without transitions.
    pub fn empty_language(alphabet: Alphabet) -> Self {
        Self::new(alphabet, 1, [], 0, []).unwrap()
    }

    /// One accepting state looping on every letter.
    pub fn universal(alphabet: Alphabet) -> Self {
        let loops: Vec<_> = alphabet.symbols().map(|a| (0, a, 0)).collect();
        Self::new(alphabet, 1, loops, 0, [0]).unwrap()
    }

    pub(crate) fn from_parts(
        alphabet: Alphabet,
        delta: Vec<Option<StateId>>,
        initial: StateId,
        fin: Vec<bool>,
    ) -> Self {
        let n = fin.len();
        debug_assert_eq!(delta.len(), n * alphabet.len());
        Self {
            alphabet,
            n,
            delta,
            initial,
            fin,
        }
    }

    pub fn initial(&self) -> StateId {
        self.initial
    }

    pub fn is_final(&self, q: StateId) -> bool {
        self.fin[q]
    }

    pub fn finals(&self) -> Vec<StateId> {
        (0..self.n).filter(|&q| self.fin[q]).collect()
    }

    pub fn next(&self, q: StateId, a: Symbol) -> Option<StateId> {
        self.delta[q * self.alphabet.len() + a]
    }

    /// The state reached from `q` on `w`, if the run is defined.
    pub fn run_from(&self, q: StateId, w: &[Symbol]) -> Option<StateId> {
        w.iter().try_fold(q, |p, &a| self.next(p, a))
    }

    pub fn run(&self, w: &[Symbol]) -> Option<StateId> {
        self.run_from(self.initial, w)
    }

    pub fn transitions(&self) -> impl Iterator<Item = (StateId, Symbol, StateId)> + '_ {
        let k = self.alphabet.len();
        (0..self.n)
            .flat_map(move |p| (0..k).filter_map(move |a| self.next(p, a).map(|q| (p, a, q))))
    }

    pub fn is_complete(&self) -> bool {
        self.delta.iter().all(Option::is_some)
    }

    /// Adds a rejecting sink (index `n`) if some transition is missing.
    pub fn complete(&self) -> Dfa {
        if self.is_complete() {
            return self.clone();
        }
        let k = self.alphabet.len();
        let sink = self.n;
        let mut delta: Vec<Option<StateId>> =
            self.delta.iter().map(|t| Some(t.unwrap_or(sink))).collect();
        delta.extend(std::iter::repeat_n(Some(sink), k));
        let mut fin = self.fin.clone();
        fin.push(false);
        Dfa::from_parts(self.alphabet.clone(), delta, self.initial, fin)
    }

    pub fn into_nfa(&self) -> Nfa {
        Nfa::new(
            self.alphabet.clone(),
            self.n,
            self.transitions(),
            [self.initial],
            self.finals(),
        )
        .expect("a valid DFA is a valid NFA")
    }
}

impl Automaton for Dfa {
    fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    fn num_states(&self) -> usize {
        self.n
    }

    fn accepts(&self, w: &[Symbol]) -> Result<bool> {
        self.alphabet.check_word(w)?;
        Ok(self.run(w).is_some_and(|q| self.fin[q]))
    }

    fn to_nfa(&self) -> Cow<'_, Nfa> {
        Cow::Owned(self.into_nfa())
    }
}

impl std::fmt::Debug for Dfa {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Dfa")
            .field("alphabet", &self.alphabet)
            .field("states", &self.n)
            .field("initial", &self.initial)
            .field("final", &self.finals())
            .field("transitions", &self.transitions().collect::<Vec<_>>())
            .finish()
    }
}
