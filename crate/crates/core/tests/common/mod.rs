#![allow(dead_code)]

use std::collections::HashSet;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sublang::automata::random::{random_dfa, random_nfa, NfaShape};
use sublang::{Automaton, Dfa, Nfa};

pub fn nfa_from_seed(seed: u64, states: usize, letters: usize, density: f64) -> Nfa {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_nfa(
        &mut rng,
        NfaShape {
            states,
            letters,
            density,
            single_initial: false,
        },
    )
}

pub fn dfa_from_seed(seed: u64, states: usize, letters: usize, density: f64) -> Dfa {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_dfa(&mut rng, states, letters, density)
}

/// All words over `k` letters of length at most `len`, shortlex order.
pub fn words_upto(k: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    let mut layer = vec![vec![]];
    for _ in 0..len {
        let mut next = Vec::new();
        for w in &layer {
            for a in 0..k {
                let mut v: Vec<usize> = w.clone();
                v.push(a);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

fn edges(a: &Nfa) -> Vec<(usize, usize, usize)> {
    a.transitions().collect()
}

/// Number of accepting runs on `w`, counted over the raw transition list.
pub fn run_count(a: &Nfa, w: &[usize]) -> u64 {
    let e = edges(a);
    let mut cur = vec![0u64; a.num_states()];
    for &q in a.initial() {
        cur[q] += 1;
    }
    for &c in w {
        let mut next = vec![0u64; a.num_states()];
        for &(p, x, q) in &e {
            if x == c {
                next[q] += cur[p];
            }
        }
        cur = next;
    }
    a.finals().iter().map(|&q| cur[q]).sum()
}

pub fn naive_accepts(a: &Nfa, w: &[usize]) -> bool {
    run_count(a, w) > 0
}

/// Greedy scan: matching a letter at its first occurrence never hurts.
pub fn is_subword(x: &[usize], y: &[usize]) -> bool {
    let mut i = 0;
    for &c in y {
        if i < x.len() && x[i] == c {
            i += 1;
        }
    }
    i == x.len()
}

// Search over (state, position in w).
fn reach(a: &Nfa, w: &[usize], up: bool) -> bool {
    let e = edges(a);
    let mut seen = HashSet::new();
    let mut stack: Vec<(usize, usize)> = a.initial().iter().map(|&q| (q, 0)).collect();
    while let Some((q, i)) = stack.pop() {
        if !seen.insert((q, i)) {
            continue;
        }
        if i == w.len() && a.is_final(q) {
            return true;
        }
        if up && i < w.len() {
            stack.push((q, i + 1));
        }
        for &(p, c, r) in &e {
            if p != q {
                continue;
            }
            if i < w.len() && c == w[i] {
                stack.push((r, i + 1));
            }
            if !up {
                stack.push((r, i));
            }
        }
    }
    false
}

/// `w` has a subword in `L(a)`.
pub fn in_up_closure(a: &Nfa, w: &[usize]) -> bool {
    reach(a, w, true)
}

/// `w` is a subword of a word of `L(a)`.
pub fn in_down_closure(a: &Nfa, w: &[usize]) -> bool {
    reach(a, w, false)
}
