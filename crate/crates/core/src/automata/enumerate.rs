use super::{Automaton, StateSet, Word};
use crate::error::{Error, Result};

/// Default cap on the number of live prefixes kept while enumerating.
pub const DEFAULT_ENUMERATION_BUDGET: usize = 1 << 20;

pub fn enumerate_upto(a: &impl Automaton, maxlen: usize) -> Result<Vec<Word>> {
    enumerate_upto_with_budget(a, maxlen, DEFAULT_ENUMERATION_BUDGET)
}

/// All accepted words of length at most `maxlen`, in length-lexicographic order.
///
/// Only prefixes that still have a live run are extended; the budget
/// bounds how many of them may be alive at one length.
pub fn enumerate_upto_with_budget(
    a: &impl Automaton,
    maxlen: usize,
    budget: usize,
) -> Result<Vec<Word>> {
    let nfa = a.to_nfa();
    let k = nfa.alphabet().len();
    let finals = nfa.final_set();
    let mut out = Vec::new();
    let start = nfa.initial_set();
    if start.is_empty() {
        return Ok(out);
    }
    let mut level: Vec<(Vec<usize>, StateSet)> = vec![(Vec::new(), start)];
    for len in 0..=maxlen {
        for (w, s) in &level {
            if s.intersects(&finals) {
                out.push(Word(w.clone()));
            }
        }
        if len == maxlen {
            break;
        }
        let mut next = Vec::new();
        for (w, s) in &level {
            for c in 0..k {
                let t = nfa.step(s, c);
                if t.is_empty() {
                    continue;
                }
                if next.len() >= budget {
                    return Err(Error::Resource {
                        budget: "enumerated prefixes",
                        limit: budget,
                        reached: next.len() + 1,
                    });
                }
                let mut w2 = w.clone();
                w2.push(c);
                next.push((w2, t));
            }
        }
        level = next;
    }
    Ok(out)
}
