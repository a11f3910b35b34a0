use std::collections::{HashMap, VecDeque};

use super::{Automaton, Dfa};

/// Minimal partial DFA for `L(dfa)`.
///
/// The input is completed with a sink, states are merged by Moore-style
/// partition refinement, the class of dead states is dropped and the
/// result is renumbered breadth-first from the initial state. The empty
/// language gives a single non-accepting state. Two DFAs accept the same
/// language iff their minimizations are equal.
pub fn minimize(dfa: &Dfa) -> Dfa {
    let alphabet = dfa.alphabet().clone();
    let k = alphabet.len();
    let n = dfa.num_states();
    let sink = n;
    let total = n + 1;
    let next = |q: usize, a: usize| -> usize {
        if q == sink {
            sink
        } else {
            dfa.next(q, a).unwrap_or(sink)
        }
    };
    let accepting = |q: usize| q != sink && dfa.is_final(q);

    // The sink is rejecting, so class 0 is never empty.
    let mut class: Vec<usize> = (0..total).map(|q| usize::from(accepting(q))).collect();
    let mut count = 1 + usize::from(class.contains(&1));
    loop {
        let mut ids: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut refined = Vec::with_capacity(total);
        for q in 0..total {
            let mut sig = Vec::with_capacity(k + 1);
            sig.push(class[q]);
            sig.extend((0..k).map(|a| class[next(q, a)]));
            let fresh = ids.len();
            refined.push(*ids.entry(sig).or_insert(fresh));
        }
        let new_count = ids.len();
        class = refined;
        if new_count == count {
            break;
        }
        count = new_count;
    }

    let dead = class[sink];
    let start = class[dfa.initial()];
    if start == dead {
        return Dfa::empty_language(alphabet);
    }
    let mut representative = vec![usize::MAX; count];
    for q in (0..total).rev() {
        representative[class[q]] = q;
    }
    let mut rename = vec![usize::MAX; count];
    let mut order = vec![start];
    rename[start] = 0;
    let mut queue = VecDeque::from([start]);
    while let Some(c) = queue.pop_front() {
        let q = representative[c];
        for a in 0..k {
            let d = class[next(q, a)];
            if d != dead && rename[d] == usize::MAX {
                rename[d] = order.len();
                order.push(d);
                queue.push_back(d);
            }
        }
    }
    let mut delta = vec![None; order.len() * k];
    let mut fin = vec![false; order.len()];
    for (i, &c) in order.iter().enumerate() {
        let q = representative[c];
        fin[i] = accepting(q);
        for a in 0..k {
            let d = class[next(q, a)];
            if d != dead {
                delta[i * k + a] = Some(rename[d]);
            }
        }
    }
    Dfa::from_parts(alphabet, delta, 0, fin)
}
