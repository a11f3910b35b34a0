use std::collections::hash_map::Entry;
use std::collections::{HashMap, VecDeque};

use super::{Automaton, Dfa, Nfa, StateSet};
use crate::error::{Error, Result};

/// Default cap on the number of subset states a powerset construction may create.
pub const DEFAULT_SUBSET_BUDGET: usize = 1 << 20;

pub fn determinize(nfa: &Nfa) -> Result<Dfa> {
    determinize_with_budget(nfa, DEFAULT_SUBSET_BUDGET)
}

/// Reachable-subset construction. The empty subset is never created; its
/// transitions are left undefined. An NFA without initial states yields
/// the one-state empty DFA.
pub fn determinize_with_budget(nfa: &Nfa, budget: usize) -> Result<Dfa> {
    subset_construction(nfa, budget, |s| s)
}

/// Subset construction where every subset is first passed through
/// `normalize`, which must preserve the language accepted from the set
/// and never return the empty set for a non-empty one.
pub(crate) fn subset_construction(
    nfa: &Nfa,
    budget: usize,
    normalize: impl Fn(StateSet) -> StateSet,
) -> Result<Dfa> {
    let alphabet = nfa.alphabet().clone();
    let k = alphabet.len();
    let start = nfa.initial_set();
    if start.is_empty() {
        return Ok(Dfa::empty_language(alphabet));
    }
    let start = normalize(start);
    let finals = nfa.final_set();
    let mut index: HashMap<StateSet, usize> = HashMap::new();
    let mut sets = vec![start.clone()];
    let mut queue = VecDeque::from([0usize]);
    index.insert(start, 0);
    let mut delta = Vec::new();
    while let Some(i) = queue.pop_front() {
        delta.resize((i + 1) * k, None);
        for a in 0..k {
            let target = nfa.step(&sets[i], a);
            if target.is_empty() {
                continue;
            }
            let j = match index.entry(normalize(target)) {
                Entry::Occupied(e) => *e.get(),
                Entry::Vacant(e) => {
                    let j = sets.len();
                    if j >= budget {
                        return Err(Error::Resource {
                            budget: "subset states",
                            limit: budget,
                            reached: j + 1,
                        });
                    }
                    sets.push(e.key().clone());
                    e.insert(j);
                    queue.push_back(j);
                    j
                }
            };
            delta[i * k + a] = Some(j);
        }
    }
    delta.resize(sets.len() * k, None);
    let fin = sets.iter().map(|s| s.intersects(&finals)).collect();
    Ok(Dfa::from_parts(alphabet, delta, 0, fin))
}
