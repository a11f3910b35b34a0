//! Upward and downward closures. Both constructions keep the state set of
//! the input automaton and only add transitions (and, for the downward
//! closure, final states).

use std::collections::hash_map::Entry;
use std::collections::{HashMap, VecDeque};

use crate::automata::{
    determinize_reduced, minimize, Alphabet, Automaton, Dfa, Nfa, Symbol, Word,
    DEFAULT_SUBSET_BUDGET,
};
use crate::error::{Error, Result};
use crate::subwords::embeds;

/// Closure direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    /// Superwords.
    Up,
    /// Subwords.
    Down,
}

impl Direction {
    pub fn dual(self) -> Self {
        match self {
            Direction::Up => Direction::Down,
            Direction::Down => Direction::Up,
        }
    }
}

impl std::str::FromStr for Direction {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "up" => Ok(Direction::Up),
            "down" => Ok(Direction::Down),
            _ => crate::error::input(format!("direction must be `up` or `down`, got {s:?}")),
        }
    }
}

impl std::fmt::Display for Direction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Direction::Up => "up",
            Direction::Down => "down",
        })
    }
}

/// Adds a self-loop on every letter at every state.
pub fn up_closure(a: &Nfa) -> Nfa {
    let loops = (0..a.num_states()).flat_map(|q| a.alphabet().symbols().map(move |c| (q, c, q)));
    Nfa::new(
        a.alphabet().clone(),
        a.num_states(),
        a.transitions().chain(loops),
        a.initial().iter().copied(),
        a.finals(),
    )
    .expect("same state set")
}

/// ε-free downward closure: `p -a-> q` whenever some `p'` reachable from
/// `p` has `p' -a-> q`, and every state that can reach a final state
/// becomes final. Equivalent to silently skipping any original transition.
pub fn down_closure(a: &Nfa) -> Nfa {
    let n = a.num_states();
    let coreach = a.backward_closure(a.finals());
    let mut transitions = Vec::new();
    for p in 0..n {
        for p2 in a.forward_closure([p]).iter() {
            for c in a.alphabet().symbols() {
                transitions.extend(a.successors(p2, c).iter().map(|&q| (p, c, q)));
            }
        }
    }
    Nfa::new(
        a.alphabet().clone(),
        n,
        transitions,
        a.initial().iter().copied(),
        coreach.iter(),
    )
    .expect("same state set")
}

pub fn closure(a: &Nfa, direction: Direction) -> Nfa {
    match direction {
        Direction::Up => up_closure(a),
        Direction::Down => down_closure(a),
    }
}

/// Cap on states of the residual construction used for upward closures
/// of finite languages.
pub const DEFAULT_RESIDUAL_BUDGET: usize = 1 << 22;

const MAX_FINITE_PATHS: usize = 1 << 12;
const MAX_SUFFIXES: usize = 1 << 12;

/// Minimal DFA of the closure; its state count is the measured `n_D`.
///
/// Upward closures of small finite languages are built directly from
/// residuals (see [`up_closure_of_words`]) under
/// [`DEFAULT_RESIDUAL_BUDGET`]; everything else goes through the subset
/// construction under [`DEFAULT_SUBSET_BUDGET`].
pub fn closure_dfa(a: &impl Automaton, direction: Direction) -> Result<Dfa> {
    closure_dfa_inner(
        &a.to_nfa(),
        direction,
        DEFAULT_SUBSET_BUDGET,
        DEFAULT_RESIDUAL_BUDGET,
    )
}

/// As [`closure_dfa`], with `budget` bounding whichever construction runs.
pub fn closure_dfa_with_budget(
    a: &impl Automaton,
    direction: Direction,
    budget: usize,
) -> Result<Dfa> {
    closure_dfa_inner(&a.to_nfa(), direction, budget, budget)
}

fn closure_dfa_inner(
    a: &Nfa,
    direction: Direction,
    subsets: usize,
    residuals: usize,
) -> Result<Dfa> {
    if direction == Direction::Up {
        if let Some(words) = finite_words(a) {
            let suffixes: usize = words.iter().map(|w| w.0.len() + 1).sum();
            if suffixes <= MAX_SUFFIXES {
                return up_closure_of_words(a.alphabet(), &words, residuals);
            }
        }
    }
    let c = closure(a, direction);
    Ok(minimize(&determinize_reduced(&c, subsets)?))
}

// The language of `a` if it is finite and has few accepting paths.
fn finite_words(a: &Nfa) -> Option<Vec<Word>> {
    let t = a.trim();
    let n = t.num_states();
    let mut indegree = vec![0usize; n];
    for (_, _, q) in t.transitions() {
        indegree[q] += 1;
    }
    let mut order: Vec<usize> = (0..n).filter(|&q| indegree[q] == 0).collect();
    let mut i = 0;
    while i < order.len() {
        let p = order[i];
        i += 1;
        for c in t.alphabet().symbols() {
            for &q in t.successors(p, c) {
                indegree[q] -= 1;
                if indegree[q] == 0 {
                    order.push(q);
                }
            }
        }
    }
    if order.len() < n {
        return None;
    }
    let mut paths = vec![0usize; n];
    for &p in order.iter().rev() {
        let mut total = usize::from(t.is_final(p));
        for c in t.alphabet().symbols() {
            for &q in t.successors(p, c) {
                total = total.saturating_add(paths[q]);
            }
        }
        paths[p] = total.min(MAX_FINITE_PATHS + 1);
    }
    let all: usize = t.initial().iter().map(|&q| paths[q]).sum();
    if all > MAX_FINITE_PATHS {
        return None;
    }
    let mut words = Vec::new();
    let mut stack: Vec<(usize, Vec<Symbol>)> =
        t.initial().iter().map(|&q| (q, Vec::new())).collect();
    while let Some((p, w)) = stack.pop() {
        if t.is_final(p) {
            words.push(Word(w.clone()));
        }
        for c in t.alphabet().symbols() {
            for &q in t.successors(p, c) {
                let mut next = w.clone();
                next.push(c);
                stack.push((q, next));
            }
        }
    }
    words.sort();
    words.dedup();
    Some(words)
}

/// Minimal DFA of the upward closure of a finite set of words.
///
/// After reading `u`, the residual of `↑F` is the upward closure of the
/// suffixes left over by leftmost embeddings of `u` into the words of `F`.
/// A state is the antichain of subword-minimal such suffixes, and distinct
/// antichains have distinct upward closures, so the result is minimal.
/// States are numbered breadth-first as by [`minimize`].
pub fn up_closure_of_words(alphabet: &Alphabet, words: &[Word], budget: usize) -> Result<Dfa> {
    let k = alphabet.len();
    if words.is_empty() {
        return Ok(Dfa::empty_language(alphabet.clone()));
    }
    let mut ids: HashMap<&[Symbol], usize> = HashMap::new();
    let mut suffixes: Vec<&[Symbol]> = Vec::new();
    for Word(w) in words {
        for i in 0..=w.len() {
            ids.entry(&w[i..]).or_insert_with(|| {
                suffixes.push(&w[i..]);
                suffixes.len() - 1
            });
        }
    }
    let m = suffixes.len();
    let step: Vec<usize> = (0..m * k)
        .map(|x| {
            let s = suffixes[x / k];
            match s.first() {
                Some(&c) if c == x % k => ids[&s[1..]],
                _ => x / k,
            }
        })
        .collect();
    let below: Vec<Vec<bool>> = (0..m)
        .map(|x| {
            (0..m)
                .map(|y| x != y && embeds(suffixes[y], suffixes[x]))
                .collect()
        })
        .collect();
    let reduce = |mut set: Vec<usize>| {
        set.sort_unstable();
        set.dedup();
        let keep: Vec<usize> = set
            .iter()
            .copied()
            .filter(|&x| !set.iter().any(|&y| below[x][y]))
            .collect();
        keep
    };
    let empty = ids[&[][..]];

    let start = reduce(words.iter().map(|w| ids[&w.0[..]]).collect());
    let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut states = vec![start.clone()];
    index.insert(start, 0);
    let mut queue = VecDeque::from([0usize]);
    let mut delta = Vec::new();
    while let Some(i) = queue.pop_front() {
        delta.resize((i + 1) * k, None);
        for a in 0..k {
            let target = reduce(states[i].iter().map(|&x| step[x * k + a]).collect());
            let j = match index.entry(target) {
                Entry::Occupied(e) => *e.get(),
                Entry::Vacant(e) => {
                    let j = states.len();
                    if j >= budget {
                        return Err(Error::Resource {
                            budget: "residual states",
                            limit: budget,
                            reached: j + 1,
                        });
                    }
                    states.push(e.key().clone());
                    e.insert(j);
                    queue.push_back(j);
                    j
                }
            };
            delta[i * k + a] = Some(j);
        }
    }
    delta.resize(states.len() * k, None);
    let fin = states.iter().map(|s| s.contains(&empty)).collect();
    Ok(Dfa::from_parts(alphabet.clone(), delta, 0, fin))
}
