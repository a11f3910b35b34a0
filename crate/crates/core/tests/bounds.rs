mod common;

use common::nfa_from_seed;
use proptest::prelude::*;
use sublang::automata::{is_unambiguous, minimal_dfa};
use sublang::bounds::{
    canonical_subsets, fooling_matrix, mx_matrix, rational_rank, ufa_lower_bound, verify_fooling,
    FoolingMatrix, FoolingSet,
};
use sublang::interiors::dedekind_count;
use sublang::witnesses::{fooling_for, u_dfa, FoolingFamily};
use sublang::{Alphabet, Automaton, Error, Word};

fn antichain_count(n: usize) -> u64 {
    let subsets = 1usize << n;
    let mut count = 0;
    for family in 0u64..1 << subsets {
        let members: Vec<usize> = (0..subsets).filter(|&s| family >> s & 1 == 1).collect();
        let ok = members
            .iter()
            .all(|&a| members.iter().all(|&b| a == b || a & b != a));
        count += u64::from(ok);
    }
    count
}

#[test]
fn dedekind_matches_exhaustive_count() {
    for n in 0..=4 {
        assert_eq!(dedekind_count(n).unwrap(), antichain_count(n), "n = {n}");
    }
    assert_eq!(dedekind_count(5).unwrap(), 7581);
    assert!(dedekind_count(7).is_err());
}

fn float_rank(m: &FoolingMatrix) -> usize {
    let n = m.size();
    let mut a: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| f64::from(u8::from(m.get(i, j)))).collect())
        .collect();
    let mut rank = 0;
    for col in 0..n {
        let Some(p) = (rank..n).max_by(|&x, &y| a[x][col].abs().total_cmp(&a[y][col].abs())) else {
            break;
        };
        if a[p][col].abs() < 1e-9 {
            continue;
        }
        a.swap(rank, p);
        let pivot = a[rank].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != rank {
                let f = row[col] / pivot[col];
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x -= f * y;
                }
            }
        }
        rank += 1;
    }
    rank
}

proptest! {
    #[test]
    fn rank_matches_float_elimination(rows in prop::collection::vec(prop::collection::vec(any::<bool>(), 6), 6)) {
        let m = FoolingMatrix::from_rows(rows).unwrap();
        prop_assert_eq!(rational_rank(&m), float_rank(&m));
    }

    #[test]
    fn minimal_dfas_respect_fooling_bounds(seed in any::<u64>()) {
        // Any fooling set of a language bounds every automaton for it.
        let a = nfa_from_seed(seed, 4, 2, 0.4);
        let m = minimal_dfa(&a).unwrap();
        prop_assert!(is_unambiguous(&m.clone().into_nfa()));
        let words = common::words_upto(2, 2);
        let pairs: Vec<(Word, Word)> = words
            .iter()
            .flat_map(|x| words.iter().map(move |y| (Word(x.clone()), Word(y.clone()))))
            .filter(|(x, y)| a.accepts(&x.concat(y)).unwrap())
            .take(6)
            .collect();
        let s = FoolingSet::new(a.alphabet().clone(), pairs).unwrap();
        if let Ok(size) = verify_fooling(&a, &s) {
            prop_assert!(size <= a.num_states());
        }
        let rank = ufa_lower_bound(&m, &s, false).unwrap();
        prop_assert!(rank <= m.num_states());
    }
}

#[test]
fn canonical_subset_order() {
    assert_eq!(canonical_subsets(2), vec![0b00, 0b01, 0b10, 0b11]);
    assert_eq!(canonical_subsets(3), vec![0, 1, 2, 4, 3, 5, 6, 7]);
}

#[test]
fn mx_ranks() {
    for n in 1..=5 {
        let m = mx_matrix(n).unwrap();
        assert_eq!(m.size(), 1 << n);
        assert_eq!(rational_rank(&m), (1 << n) - 1);
        assert_eq!(float_rank(&m), (1 << n) - 1);
    }
}

#[test]
fn broken_fooling_sets_are_rejected() {
    let u2 = u_dfa(2).unwrap();
    let s = Alphabet::indexed(2);
    let not_member = FoolingSet::new(s.clone(), vec![(Word(vec![0]), Word(vec![0]))]).unwrap();
    match verify_fooling(&u2, &not_member) {
        Err(Error::Verification(msg)) => assert!(msg.starts_with("pair 1:")),
        other => panic!("{other:?}"),
    }
    // a1a2·ε and a2a1·ε are both in U_2.
    let crossed = FoolingSet::new(
        s.clone(),
        vec![
            (Word(vec![0, 1]), Word(vec![])),
            (Word(vec![1, 0]), Word(vec![])),
        ],
    )
    .unwrap();
    match verify_fooling(&u2, &crossed) {
        Err(Error::Verification(msg)) => assert!(msg.starts_with("pairs (1, 2):")),
        other => panic!("{other:?}"),
    }
    assert!(FoolingSet::new(s.clone(), vec![(Word(vec![2]), Word(vec![]))]).is_err());
    let dup = vec![(Word(vec![0]), Word(vec![1])); 2];
    assert!(FoolingSet::new(s, dup).is_err());
}

#[test]
fn family_fooling_sets() {
    for k in 1..=4 {
        for f in [FoolingFamily::U(k), FoolingFamily::V(k)] {
            let l = f.language().unwrap();
            assert_eq!(
                verify_fooling(&l, &fooling_for(f).unwrap()).unwrap(),
                1 << k
            );
        }
        let f = FoolingFamily::Uprime(k);
        assert_eq!(
            verify_fooling(&f.language().unwrap(), &fooling_for(f).unwrap()).unwrap(),
            (1 << k) + 1
        );
    }
    // D_{n-1} with n pairs.
    let f = FoolingFamily::D(3);
    assert_eq!(fooling_for(f).unwrap().len(), 3);
    assert_eq!(
        verify_fooling(&f.language().unwrap(), &fooling_for(f).unwrap()).unwrap(),
        3
    );
    let m = fooling_matrix(
        &u_dfa(2).unwrap(),
        &fooling_for(FoolingFamily::U(2)).unwrap(),
    )
    .unwrap();
    assert_eq!(m.to_string(), "1 0 0 0\n1 1 0 0\n1 0 1 0\n1 1 1 1\n");
}
