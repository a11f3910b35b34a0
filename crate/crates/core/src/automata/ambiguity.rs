use std::collections::HashSet;

use super::{Automaton, Nfa, StateId};

/// Whether every accepted word has exactly one accepting run.
///
/// Works on the trimmed automaton: it is ambiguous iff some off-diagonal
/// pair of the self-product is reachable from `I × I` and co-reachable
/// to `F × F`.
pub fn is_unambiguous(a: &Nfa) -> bool {
    let t = a.trim();
    let n = t.num_states();
    let k = t.alphabet().len();

    let mut forward: HashSet<(StateId, StateId)> = HashSet::new();
    let mut stack = Vec::new();
    for &p in t.initial() {
        for &q in t.initial() {
            if forward.insert((p, q)) {
                stack.push((p, q));
            }
        }
    }
    while let Some((p, q)) = stack.pop() {
        for c in 0..k {
            for &p2 in t.successors(p, c) {
                for &q2 in t.successors(q, c) {
                    if forward.insert((p2, q2)) {
                        stack.push((p2, q2));
                    }
                }
            }
        }
    }

    // Reverse edges of the product, restricted to forward-reachable pairs.
    let mut pred = vec![vec![Vec::new(); k]; n];
    for (p, c, q) in t.transitions() {
        pred[q][c].push(p);
    }
    let mut backward: HashSet<(StateId, StateId)> = HashSet::new();
    let finals = t.finals();
    for &p in &finals {
        for &q in &finals {
            if forward.contains(&(p, q)) && backward.insert((p, q)) {
                stack.push((p, q));
            }
        }
    }
    while let Some((p, q)) = stack.pop() {
        if p != q {
            return false;
        }
        for (pc, qc) in pred[p].iter().zip(&pred[q]) {
            for &p0 in pc {
                for &q0 in qc {
                    if forward.contains(&(p0, q0)) && backward.insert((p0, q0)) {
                        stack.push((p0, q0));
                    }
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::Alphabet;

    #[test]
    fn two_initial_accepting_states_are_ambiguous() {
        let a = Nfa::new(Alphabet::indexed(1), 2, [], [0, 1], [0, 1]).unwrap();
        assert!(!is_unambiguous(&a));
    }

    #[test]
    fn guessing_the_last_letter_is_unambiguous() {
        // Σ* a1: the run is forced to jump at the last position.
        let a = Nfa::new(
            Alphabet::indexed(2),
            2,
            [(0, 0, 0), (0, 1, 0), (0, 0, 1)],
            [0],
            [1],
        )
        .unwrap();
        assert!(is_unambiguous(&a));
        // Σ* a1 Σ* is ambiguous (a1a1).
        let b = Nfa::new(
            Alphabet::indexed(2),
            2,
            [(0, 0, 0), (0, 1, 0), (0, 0, 1), (1, 0, 1), (1, 1, 1)],
            [0],
            [1],
        )
        .unwrap();
        assert!(!is_unambiguous(&b));
    }
}
