use std::collections::{HashMap, VecDeque};

use super::{determinize, minimize, Automaton, Dfa, StateId, Word};
use crate::error::{input, Result};

// Product state; `None` is the implicit sink.
type Pair = (Option<StateId>, Option<StateId>);

/// DFA for the complement over the automaton's own alphabet.
pub fn complement(dfa: &Dfa) -> Dfa {
    let full = dfa.complete();
    let n = full.num_states();
    let k = full.alphabet().len();
    let delta = (0..n)
        .flat_map(|q| (0..k).map(move |a| (q, a)))
        .map(|(q, a)| full.next(q, a))
        .collect();
    let fin = (0..n).map(|q| !full.is_final(q)).collect();
    Dfa::from_parts(full.alphabet().clone(), delta, full.initial(), fin)
}

/// Reachable product automaton for `L(a) ∩ L(b)`.
pub fn intersect(a: &Dfa, b: &Dfa) -> Result<Dfa> {
    if a.alphabet() != b.alphabet() {
        return input("intersection of automata over different alphabets");
    }
    let k = a.alphabet().len();
    let mut index: HashMap<(StateId, StateId), usize> = HashMap::new();
    let mut pairs = vec![(a.initial(), b.initial())];
    index.insert(pairs[0], 0);
    let mut queue = VecDeque::from([0usize]);
    let mut delta = Vec::new();
    while let Some(i) = queue.pop_front() {
        delta.resize((i + 1) * k, None);
        let (p, q) = pairs[i];
        for c in 0..k {
            let (Some(p2), Some(q2)) = (a.next(p, c), b.next(q, c)) else {
                continue;
            };
            let j = *index.entry((p2, q2)).or_insert_with(|| {
                pairs.push((p2, q2));
                queue.push_back(pairs.len() - 1);
                pairs.len() - 1
            });
            delta[i * k + c] = Some(j);
        }
    }
    delta.resize(pairs.len() * k, None);
    let fin = pairs
        .iter()
        .map(|&(p, q)| a.is_final(p) && b.is_final(q))
        .collect();
    Ok(Dfa::from_parts(a.alphabet().clone(), delta, 0, fin))
}

/// `minimize(determinize(a))`.
pub fn minimal_dfa(a: &impl Automaton) -> Result<Dfa> {
    Ok(minimize(&determinize(&a.to_nfa())?))
}

/// Language equality, decided by comparing canonical minimal DFAs.
pub fn equivalent(a: &impl Automaton, b: &impl Automaton) -> Result<bool> {
    if a.alphabet() != b.alphabet() {
        return input("comparing automata over different alphabets");
    }
    Ok(minimal_dfa(a)? == minimal_dfa(b)?)
}

/// The length-lexicographically least word accepted by exactly one of
/// `a` and `b`, or `None` when they are equivalent.
pub fn shortest_difference(a: &Dfa, b: &Dfa) -> Result<Option<Word>> {
    if a.alphabet() != b.alphabet() {
        return input("comparing automata over different alphabets");
    }
    let k = a.alphabet().len();
    let accept = |d: &Dfa, q: Option<StateId>| q.is_some_and(|q| d.is_final(q));
    let start = (Some(a.initial()), Some(b.initial()));
    let mut parent: HashMap<Pair, Option<(usize, usize)>> = HashMap::new();
    let mut nodes = vec![start];
    parent.insert(start, None);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        let (p, q) = nodes[i];
        if accept(a, p) != accept(b, q) {
            let mut word = Vec::new();
            let mut cur = i;
            while let Some((prev, c)) = parent[&nodes[cur]] {
                word.push(c);
                cur = prev;
            }
            word.reverse();
            return Ok(Some(Word(word)));
        }
        for c in 0..k {
            let p2 = p.and_then(|p| a.next(p, c));
            let q2 = q.and_then(|q| b.next(q, c));
            if p2.is_none() && q2.is_none() {
                continue;
            }
            if let std::collections::hash_map::Entry::Vacant(e) = parent.entry((p2, q2)) {
                e.insert(Some((i, c)));
                nodes.push((p2, q2));
                queue.push_back(nodes.len() - 1);
            }
        }
    }
    Ok(None)
}

/// Length-lexicographically least accepted word.
pub fn shortest_accepted(a: &impl Automaton) -> Result<Option<Word>> {
    let d = determinize(&a.to_nfa())?;
    shortest_difference(&d, &Dfa::empty_language(d.alphabet().clone()))
}
