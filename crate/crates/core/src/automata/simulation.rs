use super::determinize::subset_construction;
use super::{Automaton, Dfa, Nfa, StateSet};
use crate::error::Result;

/// Greatest simulation preorder: entry `q` holds the states `q'` that
/// simulate `q`, so that `L(q) ⊆ L(q')`.
pub fn simulation_preorder(a: &Nfa) -> Vec<StateSet> {
    let n = a.num_states();
    let k = a.alphabet().len();
    let finals = a.final_set();
    let mut sim: Vec<StateSet> = (0..n)
        .map(|q| {
            if a.is_final(q) {
                finals.clone()
            } else {
                StateSet::full(n)
            }
        })
        .collect();
    let mut changed = true;
    while changed {
        changed = false;
        for q in 0..n {
            let mut keep = StateSet::empty(n);
            for r in sim[q].iter() {
                let ok = (0..k).all(|c| {
                    a.successors(q, c)
                        .iter()
                        .all(|&p| a.successors(r, c).iter().any(|&p2| sim[p].contains(p2)))
                });
                if ok {
                    keep.insert(r);
                }
            }
            if keep != sim[q] {
                sim[q] = keep;
                changed = true;
            }
        }
    }
    sim
}

/// Drops from `set` every state simulated by another member, keeping the
/// least index among mutually simulating states.
fn reduce(set: StateSet, sim: &[StateSet]) -> StateSet {
    let members = set.to_vec();
    let kept = members.iter().copied().filter(|&q| {
        !members
            .iter()
            .any(|&r| r != q && sim[q].contains(r) && (!sim[r].contains(q) || r < q))
    });
    StateSet::from_states(set.universe(), kept)
}

/// A DFA for `L(a)` whose states are simulation-reduced subsets. Usually
/// much smaller than the plain subset construction; it is not minimal.
pub fn determinize_reduced(a: &Nfa, budget: usize) -> Result<Dfa> {
    let sim = simulation_preorder(a);
    subset_construction(a, budget, |s| reduce(s, &sim))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::{determinize, equivalent, Alphabet};

    #[test]
    fn path_states_are_ordered() {
        // a1 a1 a1, with self-loops added everywhere
        let s = Alphabet::indexed(1);
        let a = Nfa::new(
            s,
            4,
            [
                (0, 0, 1),
                (1, 0, 2),
                (2, 0, 3),
                (0, 0, 0),
                (1, 0, 1),
                (2, 0, 2),
                (3, 0, 3),
            ],
            [0],
            [3],
        )
        .unwrap();
        let sim = simulation_preorder(&a);
        assert!(sim[0].contains(1) && sim[1].contains(2) && sim[0].contains(3));
        assert!(!sim[3].contains(0));
        let d = determinize_reduced(&a, 100).unwrap();
        assert!(equivalent(&d, &determinize(&a).unwrap()).unwrap());
    }
}
