//! Seeded random automata for property checks and experiments.

use rand::Rng;

use super::{Alphabet, Dfa, Nfa};

/// Shape of a random NFA: every triple `(p, a, q)` is a transition with
/// probability `density`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NfaShape {
    pub states: usize,
    pub letters: usize,
    pub density: f64,
    /// Only state 0 is initial.
    pub single_initial: bool,
}

/// Draws an NFA of the given shape. At least one state is initial and at
/// least one is final; `shape.states` must be positive.
pub fn random_nfa<R: Rng + ?Sized>(rng: &mut R, shape: NfaShape) -> Nfa {
    let n = shape.states;
    assert!(n > 0, "random automata need at least one state");
    let alphabet = Alphabet::indexed(shape.letters);
    let mut transitions = Vec::new();
    for p in 0..n {
        for a in 0..shape.letters {
            for q in 0..n {
                if rng.gen_bool(shape.density) {
                    transitions.push((p, a, q));
                }
            }
        }
    }
    let initial = if shape.single_initial {
        vec![0]
    } else {
        pick_nonempty(rng, n, 0.3)
    };
    let finals = pick_nonempty(rng, n, 0.4);
    Nfa::new(alphabet, n, transitions, initial, finals).expect("generated indices are in range")
}

/// Draws a partial DFA: each `(p, a)` gets a uniformly random target with
/// probability `density`, state 0 is initial, at least one state is final.
pub fn random_dfa<R: Rng + ?Sized>(
    rng: &mut R,
    states: usize,
    letters: usize,
    density: f64,
) -> Dfa {
    assert!(states > 0, "random automata need at least one state");
    let alphabet = Alphabet::indexed(letters);
    let mut transitions = Vec::new();
    for p in 0..states {
        for a in 0..letters {
            if rng.gen_bool(density) {
                transitions.push((p, a, rng.gen_range(0..states)));
            }
        }
    }
    let finals = pick_nonempty(rng, states, 0.4);
    Dfa::new(alphabet, states, transitions, 0, finals).expect("generated indices are in range")
}

fn pick_nonempty<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Vec<usize> {
    let mut v: Vec<usize> = (0..n).filter(|_| rng.gen_bool(p)).collect();
    if v.is_empty() {
        v.push(rng.gen_range(0..n));
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::Automaton;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn seeded_draws_are_reproducible() {
        let shape = NfaShape {
            states: 4,
            letters: 2,
            density: 0.3,
            single_initial: false,
        };
        let a = random_nfa(&mut ChaCha8Rng::seed_from_u64(7), shape);
        let b = random_nfa(&mut ChaCha8Rng::seed_from_u64(7), shape);
        assert_eq!(a, b);
        assert!(!a.initial().is_empty());
        assert!(!a.finals().is_empty());
        let d = random_dfa(&mut ChaCha8Rng::seed_from_u64(3), 5, 3, 0.8);
        assert_eq!(d.num_states(), 5);
    }
}
