mod common;

use std::collections::HashSet;

use common::{
    in_down_closure, in_up_closure, is_subword, naive_accepts, nfa_from_seed, words_upto,
};
use proptest::prelude::*;
use sublang::automata::{complement, equivalent, minimal_dfa};
use sublang::closures::{closure, closure_dfa, up_closure_of_words, Direction};
use sublang::decisions::is_closed;
use sublang::interiors::{
    interior, substitution_automaton, Method, SubstitutionSpec, DEFAULT_ANTICHAIN_BUDGET,
};
use sublang::witnesses::{
    c_word, finite_language_dfa, max_prefix_power, min_cover_power, morphism_value, MorphismKind,
};
use sublang::{Alphabet, Automaton, Dfa, Word};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn closure_membership(seed in any::<u64>(), n in 1usize..=5, k in 1usize..=3) {
        let a = nfa_from_seed(seed, n, k, 0.3);
        let up = closure(&a, Direction::Up);
        let down = closure(&a, Direction::Down);
        prop_assert_eq!(up.num_states(), n);
        prop_assert_eq!(down.num_states(), n);
        for w in words_upto(k, 5) {
            prop_assert_eq!(up.accepts(&w).unwrap(), in_up_closure(&a, &w));
            prop_assert_eq!(down.accepts(&w).unwrap(), in_down_closure(&a, &w));
        }
    }

    #[test]
    fn closure_dfa_is_minimal_closure(seed in any::<u64>(), n in 1usize..=5, k in 1usize..=3) {
        let a = nfa_from_seed(seed, n, k, 0.3);
        for d in [Direction::Up, Direction::Down] {
            let m = closure_dfa(&a, d).unwrap();
            prop_assert_eq!(&m, &minimal_dfa(&closure(&a, d)).unwrap());
            prop_assert!(is_closed(&m.into_nfa(), d).unwrap().verdict);
        }
    }

    #[test]
    fn finite_upward_closures(
        words in prop::collection::vec(prop::collection::vec(0usize..3, 0..6), 0..5)
    ) {
        let s = Alphabet::indexed(3);
        let words: Vec<Word> = words.into_iter().map(Word).collect();
        let m = up_closure_of_words(&s, &words, 1 << 16).unwrap();
        let trie = finite_language_dfa(&s, &words).unwrap();
        prop_assert_eq!(&m, &minimal_dfa(&closure(&trie.into_nfa(), Direction::Up)).unwrap());
        for w in words_upto(3, 4) {
            let expected = words.iter().any(|x| is_subword(&x.0, &w));
            prop_assert_eq!(m.accepts(&w).unwrap(), expected);
        }
    }

    #[test]
    fn interior_laws(seed in any::<u64>(), n in 1usize..=4, k in 1usize..=2) {
        let a = nfa_from_seed(seed, n, k, 0.4);
        for d in [Direction::Up, Direction::Down] {
            let dual = interior(&a, d, Method::Duality).unwrap();
            let anti = interior(&a, d, Method::Antichain).unwrap();
            prop_assert_eq!(&dual, &anti);
            prop_assert!(is_closed(&dual.into_nfa(), d).unwrap().verdict);
            for w in words_upto(k, 5) {
                if dual.accepts(&w).unwrap() {
                    prop_assert!(naive_accepts(&a, &w));
                }
            }
            // The interior of a closed language is itself.
            let c = closure(&a, d);
            prop_assert!(equivalent(&interior(&c, d, Method::Antichain).unwrap(), &c).unwrap());
        }
    }

    #[test]
    fn upward_interior_is_largest(seed in any::<u64>(), n in 1usize..=4, k in 1usize..=2) {
        let a = nfa_from_seed(seed, n, k, 0.5);
        let int = interior(&a, Direction::Up, Method::Antichain).unwrap();
        let outside = complement(&minimal_dfa(&a).unwrap());
        for w in words_upto(k, 4) {
            prop_assert_eq!(int.accepts(&w).unwrap(), !escapes(&outside, &w));
        }
    }

    #[test]
    fn antichain_states_are_antichains(seed in any::<u64>(), n in 1usize..=4, k in 1usize..=2) {
        let a = nfa_from_seed(seed, n, k, 0.4);
        let s = a.alphabet().clone();
        for spec in [
            SubstitutionSpec::identity(&s),
            SubstitutionSpec::upward_interior(&s),
            SubstitutionSpec::downward_interior(&s),
        ] {
            let (dfa, labels) = substitution_automaton(&a, &spec, DEFAULT_ANTICHAIN_BUDGET).unwrap();
            prop_assert_eq!(labels.len(), dfa.num_states());
            for f in &labels {
                prop_assert!(f.is_valid());
            }
            prop_assert!(labels.iter().enumerate().all(|(i, f)| labels[..i].iter().all(|g| g != f)));
        }
    }
}

// Some superword of `w` is accepted by the complete DFA `d`: search over
// (state of d, length of the embedded prefix of w).
fn escapes(d: &Dfa, w: &[usize]) -> bool {
    let mut seen = HashSet::new();
    let mut stack = vec![(d.initial(), 0)];
    while let Some((q, i)) = stack.pop() {
        if !seen.insert((q, i)) {
            continue;
        }
        if i == w.len() && d.is_final(q) {
            return true;
        }
        for c in d.alphabet().symbols() {
            let r = d.next(q, c).expect("complete");
            let j = if i < w.len() && w[i] == c { i + 1 } else { i };
            stack.push((r, j));
        }
    }
    false
}

#[test]
fn identity_substitution_recovers_language() {
    for seed in 0..40 {
        let a = nfa_from_seed(seed, 4, 2, 0.35);
        let spec = SubstitutionSpec::identity(a.alphabet());
        let (dfa, _) = substitution_automaton(&a, &spec, DEFAULT_ANTICHAIN_BUDGET).unwrap();
        assert!(equivalent(&dfa, &a).unwrap(), "seed {seed}");
    }
}

fn c_by_hand(i: usize, n: usize) -> Vec<usize> {
    let mut w = vec![0; i];
    w.extend(std::iter::repeat_n(1, 3 * n - i));
    w
}

fn all_sequences(h: &[usize], len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    let mut layer = vec![vec![]];
    for _ in 0..len {
        layer = layer
            .iter()
            .flat_map(|s: &Vec<usize>| h.iter().map(move |&i| [s.clone(), vec![i]].concat()))
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

#[test]
fn cover_and_prefix_powers_match_morphisms() {
    for n in [2, 3, 4] {
        let h: Vec<usize> = (n..=2 * n).collect();
        for i in &h {
            assert_eq!(c_word(*i, n).unwrap().0, c_by_hand(*i, n));
        }
        for sigma in all_sequences(&h, 3) {
            let c_sigma: Vec<usize> = sigma.iter().flat_map(|&j| c_by_hand(j, n)).collect();
            let d_sigma: Vec<usize> = sigma
                .iter()
                .flat_map(|&j| c_by_hand(j, n).repeat(2))
                .collect();
            for &i in &h {
                let ci = c_by_hand(i, n);
                let cover = (0..)
                    .find(|&l| is_subword(&c_sigma, &ci.repeat(l)))
                    .unwrap();
                let prefix = (0..)
                    .find(|&l| !is_subword(&ci.repeat(l + 1), &d_sigma))
                    .unwrap();
                assert_eq!(
                    cover,
                    morphism_value(MorphismKind::Theta, i, &sigma),
                    "{sigma:?} {i}"
                );
                assert_eq!(
                    prefix,
                    morphism_value(MorphismKind::Eta, i, &sigma),
                    "{sigma:?} {i}"
                );
                assert_eq!(min_cover_power(&sigma, i, n).unwrap(), cover);
                assert_eq!(max_prefix_power(&sigma, i, n).unwrap(), prefix);
            }
        }
    }
}
