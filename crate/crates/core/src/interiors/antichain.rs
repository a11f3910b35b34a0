use std::collections::hash_map::Entry;
use std::collections::{HashMap, HashSet, VecDeque};

use crate::automata::{minimize, Alphabet, Automaton, Dfa, Nfa, StateSet};
use crate::error::{input, Error, Result};

/// Default cap on the number of antichain states built by [`substitution_preimage`].
pub const DEFAULT_ANTICHAIN_BUDGET: usize = 1 << 16;

/// A family of state sets, no member included in another, kept in
/// canonical order (by size, then lexicographically).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AntichainFamily {
    universe: usize,
    members: Vec<StateSet>,
}

impl AntichainFamily {
    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn members(&self) -> &[StateSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Checks the invariants: pairwise incomparable, in canonical order,
    /// members over the recorded universe.
    pub fn is_valid(&self) -> bool {
        self.members.windows(2).all(|w| w[0] < w[1])
            && self.members.iter().all(|s| s.universe() == self.universe)
            && self.members.iter().enumerate().all(|(i, s)| {
                self.members
                    .iter()
                    .enumerate()
                    .all(|(j, t)| i == j || !s.is_subset(t))
            })
    }
}

impl std::fmt::Debug for AntichainFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.members.iter()).finish()
    }
}

/// Keeps the inclusion-minimal members of `family`.
pub fn antichain_reduce(
    universe: usize,
    family: impl IntoIterator<Item = StateSet>,
) -> AntichainFamily {
    let mut sets: Vec<StateSet> = family.into_iter().collect();
    debug_assert!(sets.iter().all(|s| s.universe() == universe));
    sets.sort();
    sets.dedup();
    let mut members: Vec<StateSet> = Vec::with_capacity(sets.len());
    for s in sets {
        // Members seen so far are no larger than `s`.
        if !members.iter().any(|m| m.is_subset(&s)) {
            members.push(s);
        }
    }
    AntichainFamily { universe, members }
}

/// A substitution `σ(ε) = K₀`, `σ(w bᵢ) = σ(w)·Kᵢ` from words over a target
/// alphabet `Γ = {b₁, …, b_p}` to languages over a source alphabet.
#[derive(Debug, Clone)]
pub struct SubstitutionSpec {
    target: Alphabet,
    initial_language: Nfa,
    letter_languages: Vec<Nfa>,
}

impl SubstitutionSpec {
    pub fn new(
        target: Alphabet,
        initial_language: Nfa,
        letter_languages: Vec<Nfa>,
    ) -> Result<Self> {
        if letter_languages.len() != target.len() {
            return input(format!(
                "{} letter languages for a {}-letter target alphabet",
                letter_languages.len(),
                target.len()
            ));
        }
        let source = initial_language.alphabet();
        if letter_languages.iter().any(|k| k.alphabet() != source) {
            return input("substitution languages use different source alphabets");
        }
        Ok(Self {
            target,
            initial_language,
            letter_languages,
        })
    }

    /// `σ(x) = {x}` (`Γ = Σ`).
    pub fn identity(sigma: &Alphabet) -> Self {
        let ks = sigma.symbols().map(|b| letter(sigma, b, false)).collect();
        Self::new(sigma.clone(), epsilon(sigma), ks).unwrap()
    }

    /// `σ(x) = ↑x`: `K₀ = Σ*`, `Kᵢ = Σ* bᵢ Σ*`. Its preimage is the upward interior.
    pub fn upward_interior(sigma: &Alphabet) -> Self {
        let ks = sigma.symbols().map(|b| padded_letter(sigma, b)).collect();
        Self::new(sigma.clone(), Nfa::universal(sigma.clone()), ks).unwrap()
    }

    /// `σ(x) = ↓x`: `K₀ = {ε}`, `Kᵢ = {bᵢ, ε}`. Its preimage is the downward interior.
    pub fn downward_interior(sigma: &Alphabet) -> Self {
        let ks = sigma.symbols().map(|b| letter(sigma, b, true)).collect();
        Self::new(sigma.clone(), epsilon(sigma), ks).unwrap()
    }

    pub fn target(&self) -> &Alphabet {
        &self.target
    }

    pub fn source(&self) -> &Alphabet {
        self.initial_language.alphabet()
    }
}

fn epsilon(sigma: &Alphabet) -> Nfa {
    Nfa::new(sigma.clone(), 1, [], [0], [0]).unwrap()
}

fn letter(sigma: &Alphabet, b: usize, with_epsilon: bool) -> Nfa {
    let finals: &[usize] = if with_epsilon { &[0, 1] } else { &[1] };
    Nfa::new(sigma.clone(), 2, [(0, b, 1)], [0], finals.iter().copied()).unwrap()
}

fn padded_letter(sigma: &Alphabet, b: usize) -> Nfa {
    let mut t = vec![(0, b, 1)];
    for c in sigma.symbols() {
        t.push((0, c, 0));
        t.push((1, c, 1));
    }
    Nfa::new(sigma.clone(), 2, t, [0], [1]).unwrap()
}

/// Computes `{δ(S, z) | z ∈ L(K)}` for the powerset transition function δ
/// of a fixed NFA, memoized per `(S, K)`.
struct ReachSets<'a> {
    nfa: &'a Nfa,
    memo: HashMap<(StateSet, usize), Vec<StateSet>>,
}

impl<'a> ReachSets<'a> {
    fn new(nfa: &'a Nfa) -> Self {
        Self {
            nfa,
            memo: HashMap::new(),
        }
    }

    fn get(&mut self, start: &StateSet, id: usize, k: &Nfa) -> &[StateSet] {
        let key = (start.clone(), id);
        if !self.memo.contains_key(&key) {
            let sets = self.explore(start, k);
            self.memo.insert(key.clone(), sets);
        }
        &self.memo[&key]
    }

    // Product of the powerset DFA with K: collect powerset states paired
    // with an accepting state of K.
    fn explore(&self, start: &StateSet, k: &Nfa) -> Vec<StateSet> {
        let mut seen: HashSet<(StateSet, usize)> = HashSet::new();
        let mut stack = Vec::new();
        for &q in k.initial() {
            if seen.insert((start.clone(), q)) {
                stack.push((start.clone(), q));
            }
        }
        let mut out = Vec::new();
        while let Some((s, q)) = stack.pop() {
            if k.is_final(q) {
                out.push(s.clone());
            }
            for c in k.alphabet().symbols() {
                let succ = k.successors(q, c);
                if succ.is_empty() {
                    continue;
                }
                let s2 = self.nfa.step(&s, c);
                for &q2 in succ {
                    if !seen.contains(&(s2.clone(), q2)) {
                        seen.insert((s2.clone(), q2));
                        stack.push((s2.clone(), q2));
                    }
                }
            }
        }
        out.sort();
        out.dedup();
        out
    }
}

/// The antichain automaton for `W = {x ∈ Γ* | σ(x) ⊆ L(a)}` before
/// minimization, together with the antichain labelling each state.
pub fn substitution_automaton(
    a: &Nfa,
    spec: &SubstitutionSpec,
    budget: usize,
) -> Result<(Dfa, Vec<AntichainFamily>)> {
    if a.alphabet() != spec.source() {
        return input("automaton alphabet differs from the substitution's source alphabet");
    }
    let n = a.num_states();
    let finals = a.final_set();
    let p = spec.target.len();
    let mut reach = ReachSets::new(a);

    let start = antichain_reduce(
        n,
        reach
            .get(&a.initial_set(), p, &spec.initial_language)
            .to_vec(),
    );
    let mut index: HashMap<AntichainFamily, usize> = HashMap::new();
    let mut states = vec![start.clone()];
    index.insert(start, 0);
    let mut queue = VecDeque::from([0usize]);
    let mut delta = Vec::new();
    while let Some(i) = queue.pop_front() {
        delta.resize((i + 1) * p, None);
        for (j, kj) in spec.letter_languages.iter().enumerate() {
            let mut image = Vec::new();
            for s in states[i].members().to_vec() {
                image.extend_from_slice(reach.get(&s, j, kj));
            }
            let target = antichain_reduce(n, image);
            let id = match index.entry(target) {
                Entry::Occupied(e) => *e.get(),
                Entry::Vacant(e) => {
                    let id = states.len();
                    if id >= budget {
                        return Err(Error::Resource {
                            budget: "antichain states",
                            limit: budget,
                            reached: id + 1,
                        });
                    }
                    states.push(e.key().clone());
                    e.insert(id);
                    queue.push_back(id);
                    id
                }
            };
            delta[i * p + j] = Some(id);
        }
    }
    delta.resize(states.len() * p, None);
    let fin = states
        .iter()
        .map(|u| u.members().iter().all(|s| s.intersects(&finals)))
        .collect();
    Ok((Dfa::from_parts(spec.target.clone(), delta, 0, fin), states))
}

/// Minimal DFA over `Γ` for `{x | σ(x) ⊆ L(a)}`.
pub fn substitution_preimage(a: &Nfa, spec: &SubstitutionSpec) -> Result<Dfa> {
    substitution_preimage_with_budget(a, spec, DEFAULT_ANTICHAIN_BUDGET)
}

pub fn substitution_preimage_with_budget(
    a: &Nfa,
    spec: &SubstitutionSpec,
    budget: usize,
) -> Result<Dfa> {
    let (dfa, _) = substitution_automaton(a, spec, budget)?;
    Ok(minimize(&dfa))
}
