use std::collections::VecDeque;

use super::{Alphabet, Automaton, Dfa, StateId, StateSet, Symbol};
use crate::error::{input, Error, Result};

/// An ε-free nondeterministic automaton with any number of initial states.
#[derive(Clone, PartialEq, Eq)]
pub struct Nfa {
    alphabet: Alphabet,
    n: usize,
    /// Successor lists indexed by `q * k + a`, sorted and deduplicated.
    succ: Vec<Vec<StateId>>,
    initial: Vec<StateId>,
    fin: Vec<bool>,
}

impl Nfa {
    pub fn new(
        alphabet: Alphabet,
        n: usize,
        transitions: impl IntoIterator<Item = (StateId, Symbol, StateId)>,
        initial: impl IntoIterator<Item = StateId>,
        finals: impl IntoIterator<Item = StateId>,
    ) -> Result<Self> {
        let k = alphabet.len();
        let mut succ = vec![Vec::new(); n * k];
        for (p, a, q) in transitions {
            if p >= n || q >= n {
                return input(format!("transition ({p}, {a}, {q}) names a state >= {n}"));
            }
            if a >= k {
                return input(format!("transition ({p}, {a}, {q}) uses a letter >= {k}"));
            }
            succ[p * k + a].push(q);
        }
        for list in &mut succ {
            list.sort_unstable();
            list.dedup();
        }
        let mut init: Vec<StateId> = initial.into_iter().collect();
        init.sort_unstable();
        init.dedup();
        if let Some(&q) = init.iter().find(|&&q| q >= n) {
            return input(format!("initial state {q} >= {n}"));
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
            succ,
            initial: init,
            fin,
        })
    }

    /// The 0-state automaton recognizing ∅.
    pub fn empty(alphabet: Alphabet) -> Self {
        Self {
            alphabet,
            n: 0,
            succ: Vec::new(),
            initial: Vec::new(),
            fin: Vec::new(),
        }
    }

    /// One accepting state looping on every letter.
    pub fn universal(alphabet: Alphabet) -> Self {
        let loops: Vec<_> = alphabet.symbols().map(|a| (0, a, 0)).collect();
        Self::new(alphabet, 1, loops, [0], [0]).unwrap()
    }

    pub fn initial(&self) -> &[StateId] {
        &self.initial
    }

    pub fn initial_set(&self) -> StateSet {
        StateSet::from_states(self.n, self.initial.iter().copied())
    }

    pub fn is_final(&self, q: StateId) -> bool {
        self.fin[q]
    }

    pub fn finals(&self) -> Vec<StateId> {
        (0..self.n).filter(|&q| self.fin[q]).collect()
    }

    pub fn final_set(&self) -> StateSet {
        StateSet::from_states(self.n, self.finals())
    }

    pub fn successors(&self, q: StateId, a: Symbol) -> &[StateId] {
        &self.succ[q * self.alphabet.len() + a]
    }

    /// All transitions sorted by (source, letter, target).
    pub fn transitions(&self) -> impl Iterator<Item = (StateId, Symbol, StateId)> + '_ {
        let k = self.alphabet.len();
        (0..self.n).flat_map(move |p| {
            (0..k).flat_map(move |a| self.successors(p, a).iter().map(move |&q| (p, a, q)))
        })
    }

    pub fn num_transitions(&self) -> usize {
        self.succ.iter().map(Vec::len).sum()
    }

    /// Powerset successor of `set` on letter `a`.
    pub fn step(&self, set: &StateSet, a: Symbol) -> StateSet {
        let mut out = StateSet::empty(self.n);
        for q in set.iter() {
            for &t in self.successors(q, a) {
                out.insert(t);
            }
        }
        out
    }

    pub fn accepts_from(&self, start: &StateSet, w: &[Symbol]) -> bool {
        let mut cur = start.clone();
        for &a in w {
            if cur.is_empty() {
                return false;
            }
            cur = self.step(&cur, a);
        }
        let hit = cur.iter().any(|q| self.fin[q]);
        hit
    }

    /// States reachable from `from` in the transition graph (reflexively).
    pub fn forward_closure(&self, from: impl IntoIterator<Item = StateId>) -> StateSet {
        let mut seen = StateSet::empty(self.n);
        let mut stack: Vec<StateId> = from.into_iter().filter(|&q| seen.insert(q)).collect();
        while let Some(p) = stack.pop() {
            for a in self.alphabet.symbols() {
                for &q in self.successors(p, a) {
                    if seen.insert(q) {
                        stack.push(q);
                    }
                }
            }
        }
        seen
    }

    /// States from which some state of `to` is reachable (reflexively).
    pub fn backward_closure(&self, to: impl IntoIterator<Item = StateId>) -> StateSet {
        let mut pred = vec![Vec::new(); self.n];
        for (p, _, q) in self.transitions() {
            pred[q].push(p);
        }
        let mut seen = StateSet::empty(self.n);
        let mut stack: Vec<StateId> = to.into_iter().filter(|&q| seen.insert(q)).collect();
        while let Some(q) = stack.pop() {
            for &p in &pred[q] {
                if seen.insert(p) {
                    stack.push(p);
                }
            }
        }
        seen
    }

    /// States both reachable from an initial state and co-reachable to a final state.
    pub fn useful_states(&self) -> StateSet {
        let fwd = self.forward_closure(self.initial.iter().copied());
        let bwd = self.backward_closure(self.finals());
        StateSet::from_states(self.n, fwd.iter().filter(|&q| bwd.contains(q)))
    }

    /// Restricts to useful states, renumbered by breadth-first discovery
    /// from the initial states (letters in index order, targets ascending).
    pub fn trim(&self) -> Nfa {
        let useful = self.useful_states();
        let mut rename = vec![usize::MAX; self.n];
        let mut order = Vec::new();
        let mut queue = VecDeque::new();
        for &q in &self.initial {
            if useful.contains(q) && rename[q] == usize::MAX {
                rename[q] = order.len();
                order.push(q);
                queue.push_back(q);
            }
        }
        while let Some(p) = queue.pop_front() {
            for a in self.alphabet.symbols() {
                for &q in self.successors(p, a) {
                    if useful.contains(q) && rename[q] == usize::MAX {
                        rename[q] = order.len();
                        order.push(q);
                        queue.push_back(q);
                    }
                }
            }
        }
        let transitions: Vec<_> = self
            .transitions()
            .filter(|&(p, _, q)| rename[p] != usize::MAX && rename[q] != usize::MAX)
            .map(|(p, a, q)| (rename[p], a, rename[q]))
            .collect();
        let initial: Vec<_> = self
            .initial
            .iter()
            .filter(|&&q| rename[q] != usize::MAX)
            .map(|&q| rename[q])
            .collect();
        let finals: Vec<_> = order
            .iter()
            .enumerate()
            .filter(|&(_, &q)| self.fin[q])
            .map(|(i, _)| i)
            .collect();
        Nfa::new(
            self.alphabet.clone(),
            order.len(),
            transitions,
            initial,
            finals,
        )
        .expect("renamed states are in range")
    }

    pub fn is_deterministic(&self) -> bool {
        self.initial.len() == 1 && self.succ.iter().all(|s| s.len() <= 1)
    }

    /// Reinterprets as a DFA; fails if there is not exactly one initial
    /// state or some (state, letter) has two targets.
    pub fn to_dfa(&self) -> Result<Dfa> {
        if self.initial.len() != 1 {
            return Err(Error::Determinism(format!(
                "{} initial states (expected exactly 1)",
                self.initial.len()
            )));
        }
        Dfa::new(
            self.alphabet.clone(),
            self.n,
            self.transitions(),
            self.initial[0],
            self.finals(),
        )
    }

    /// Same automaton over a larger alphabet; `map[a]` is the new index of letter `a`.
    pub fn relabel(&self, target: &Alphabet, map: &[Symbol]) -> Result<Nfa> {
        if map.len() != self.alphabet.len() {
            return input("letter map does not cover the alphabet");
        }
        Nfa::new(
            target.clone(),
            self.n,
            self.transitions().map(|(p, a, q)| (p, map[a], q)),
            self.initial.iter().copied(),
            self.finals(),
        )
    }

    /// Disjoint union (multi-initial NFA for `L(self) ∪ L(other)`).
    pub fn union(&self, other: &Nfa) -> Result<Nfa> {
        if self.alphabet != other.alphabet {
            return input("union of automata over different alphabets");
        }
        let off = self.n;
        let transitions = self
            .transitions()
            .chain(other.transitions().map(|(p, a, q)| (p + off, a, q + off)));
        let initial = self
            .initial
            .iter()
            .copied()
            .chain(other.initial.iter().map(|&q| q + off));
        let finals = self
            .finals()
            .into_iter()
            .chain(other.finals().into_iter().map(|q| q + off));
        Nfa::new(
            self.alphabet.clone(),
            off + other.n,
            transitions,
            initial,
            finals,
        )
    }
}

impl Automaton for Nfa {
    fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    fn num_states(&self) -> usize {
        self.n
    }

    fn accepts(&self, w: &[Symbol]) -> Result<bool> {
        self.alphabet.check_word(w)?;
        Ok(self.accepts_from(&self.initial_set(), w))
    }

    fn to_nfa(&self) -> std::borrow::Cow<'_, Nfa> {
        std::borrow::Cow::Borrowed(self)
    }
}

impl std::fmt::Debug for Nfa {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Nfa")
            .field("alphabet", &self.alphabet)
            .field("states", &self.n)
            .field("initial", &self.initial)
            .field("final", &self.finals())
            .field("transitions", &self.transitions().collect::<Vec<_>>())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sigma2() -> Alphabet {
        Alphabet::indexed(2)
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(Nfa::new(sigma2(), 2, [(0, 0, 2)], [0], [1]).is_err());
        assert!(Nfa::new(sigma2(), 2, [(0, 2, 1)], [0], [1]).is_err());
        assert!(Nfa::new(sigma2(), 2, [], [3], [1]).is_err());
    }

    #[test]
    fn trim_removes_unreachable_final() {
        // 0 -a1-> 1 (final); 2 is final but unreachable.
        let a = Nfa::new(sigma2(), 3, [(0, 0, 1), (2, 1, 1)], [0], [1, 2]).unwrap();
        let t = a.trim();
        assert_eq!(t.num_states(), 2);
        assert!(t.accepts(&[0]).unwrap());
        assert!(!t.accepts(&[1]).unwrap());
    }

    #[test]
    fn trim_without_finals_is_empty() {
        let a = Nfa::new(sigma2(), 3, [(0, 0, 1), (1, 1, 2)], [0], []).unwrap();
        assert_eq!(a.trim().num_states(), 0);
    }

    #[test]
    fn to_dfa_checks_determinism() {
        let a = Nfa::new(sigma2(), 2, [(0, 0, 0), (0, 0, 1)], [0], [1]).unwrap();
        assert!(matches!(a.to_dfa(), Err(Error::Determinism(_))));
        let b = Nfa::new(sigma2(), 2, [(0, 0, 1)], [0, 1], [1]).unwrap();
        assert!(matches!(b.to_dfa(), Err(Error::Determinism(_))));
    }

    #[test]
    fn accepts_rejects_bad_symbol() {
        let a = Nfa::universal(sigma2());
        assert!(a.accepts(&[0, 1, 1]).unwrap());
        assert!(a.accepts(&[2]).is_err());
    }
}
