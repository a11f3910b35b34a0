mod common;

use std::collections::HashSet;

use common::{dfa_from_seed, naive_accepts, nfa_from_seed, run_count, words_upto};
use proptest::prelude::*;
use sublang::automata::{
    complement, determinize, equivalent, intersect, is_unambiguous, minimal_dfa, minimize,
    shortest_accepted, shortest_difference,
};
use sublang::{Automaton, Nfa};

// Myhill-Nerode classes of live residuals, using access words and
// suffixes of length at most `len`.
fn nerode_classes(a: &Nfa, len: usize) -> usize {
    let k = a.alphabet().len();
    let words = words_upto(k, len);
    let mut classes = HashSet::new();
    for u in &words {
        let sig: Vec<bool> = words
            .iter()
            .map(|v| naive_accepts(a, &[u.as_slice(), v.as_slice()].concat()))
            .collect();
        if sig.iter().any(|&b| b) {
            classes.insert(sig);
        }
    }
    classes.len().max(1)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn determinize_preserves_language(seed in any::<u64>(), n in 1usize..=5, k in 1usize..=3) {
        let a = nfa_from_seed(seed, n, k, 0.3);
        let d = determinize(&a).unwrap();
        for w in words_upto(k, 5) {
            prop_assert_eq!(d.accepts(&w).unwrap(), naive_accepts(&a, &w));
        }
    }

    #[test]
    fn minimize_counts_nerode_classes(seed in any::<u64>(), n in 1usize..=3) {
        let a = nfa_from_seed(seed, n, 2, 0.35);
        let m = minimal_dfa(&a).unwrap();
        prop_assert_eq!(m.num_states(), nerode_classes(&a, 7));
        prop_assert_eq!(minimize(&m), m);
    }

    #[test]
    fn minimal_dfas_decide_equivalence(seed in any::<u64>(), n in 1usize..=4) {
        let a = nfa_from_seed(seed, n, 2, 0.3);
        let b = nfa_from_seed(seed.wrapping_add(1), n, 2, 0.3);
        let same = words_upto(2, 8).iter().all(|w| naive_accepts(&a, w) == naive_accepts(&b, w));
        let eq = equivalent(&a, &b).unwrap();
        prop_assert_eq!(eq, minimal_dfa(&a).unwrap() == minimal_dfa(&b).unwrap());
        // Languages of NFAs with at most 4 states differ on a word of length < 8.
        prop_assert_eq!(eq, same);
    }

    #[test]
    fn complement_and_intersection(seed in any::<u64>(), n in 1usize..=5, k in 1usize..=3) {
        let d = dfa_from_seed(seed, n, k, 0.7);
        let e = dfa_from_seed(seed ^ 0x5555, n, k, 0.7);
        let c = complement(&d);
        let both = intersect(&d, &e).unwrap();
        for w in words_upto(k, 5) {
            prop_assert_eq!(c.accepts(&w).unwrap(), !d.accepts(&w).unwrap());
            prop_assert_eq!(
                both.accepts(&w).unwrap(),
                d.accepts(&w).unwrap() && e.accepts(&w).unwrap()
            );
        }
        prop_assert!(equivalent(&complement(&c), &d).unwrap());
    }

    #[test]
    fn shortest_difference_is_shortlex_least(seed in any::<u64>(), n in 1usize..=4) {
        let d = dfa_from_seed(seed, n, 2, 0.7);
        let e = dfa_from_seed(seed ^ 0xabc, n, 2, 0.7);
        let expected = words_upto(2, 8)
            .into_iter()
            .find(|w| d.accepts(w).unwrap() != e.accepts(w).unwrap());
        let got = shortest_difference(&d, &e).unwrap().map(|w| w.0);
        prop_assert_eq!(got, expected);
    }

    #[test]
    fn shortest_accepted_matches_enumeration(seed in any::<u64>(), n in 1usize..=4, k in 1usize..=2) {
        let a = nfa_from_seed(seed, n, k, 0.3);
        let expected = words_upto(k, 4).into_iter().find(|w| naive_accepts(&a, w));
        let got = shortest_accepted(&a).unwrap().map(|w| w.0);
        prop_assert_eq!(got, expected);
    }

    #[test]
    fn ambiguity_matches_run_counts(seed in any::<u64>(), n in 1usize..=3) {
        let a = nfa_from_seed(seed, n, 2, 0.4);
        let ambiguous_word = words_upto(2, 2 * n * n).into_iter().any(|w| run_count(&a, &w) > 1);
        prop_assert_eq!(is_unambiguous(&a), !ambiguous_word);
    }
}

#[test]
fn minimal_dfa_is_unambiguous() {
    for seed in 0..50 {
        let a = nfa_from_seed(seed, 4, 2, 0.4);
        assert!(is_unambiguous(&minimal_dfa(&a).unwrap().into_nfa()));
    }
}
