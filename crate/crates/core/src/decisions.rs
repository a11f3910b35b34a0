//! Decision procedures on closures, each returning a certificate that can
//! be re-checked by membership tests.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use crate::automata::{
    complement, determinize, minimize, shortest_accepted, shortest_difference, Alphabet, Automaton,
    Dfa, Nfa, StateId, StateSet, Symbol, Word,
};
use crate::closures::{closure, closure_dfa, down_closure, Direction};
use crate::error::{input, Error, Result};

/// Evidence against a property.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Word(Word),
    /// A letter insertion `u·v ↦ u·a·v` that crosses the language boundary.
    Triple {
        u: Word,
        a: Symbol,
        v: Word,
    },
}

/// A verdict, with a witness exactly when the verdict is negative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub verdict: bool,
    pub witness: Option<Witness>,
}

impl Certificate {
    fn holds() -> Self {
        Self {
            verdict: true,
            witness: None,
        }
    }

    fn refuted(w: Witness) -> Self {
        Self {
            verdict: false,
            witness: Some(w),
        }
    }

    pub fn word(&self) -> Option<&Word> {
        match &self.witness {
            Some(Witness::Word(w)) => Some(w),
            _ => None,
        }
    }

    pub fn triple(&self) -> Option<(&Word, Symbol, &Word)> {
        match &self.witness {
            Some(Witness::Triple { u, a, v }) => Some((u, *a, v)),
            _ => None,
        }
    }

    /// Human-readable form, words spelled over `alphabet`.
    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> impl fmt::Display + 'a {
        CertificateDisplay {
            cert: self,
            alphabet,
        }
    }
}

struct CertificateDisplay<'a> {
    cert: &'a Certificate,
    alphabet: &'a Alphabet,
}

impl fmt::Display for CertificateDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", if self.cert.verdict { "yes" } else { "no" })?;
        match &self.cert.witness {
            None => Ok(()),
            Some(Witness::Word(w)) => write!(f, " witness={}", self.alphabet.render(w)),
            Some(Witness::Triple { u, a, v }) => write!(
                f,
                " u={} a={} v={}",
                self.alphabet.render(u),
                self.alphabet.name(*a),
                self.alphabet.render(v)
            ),
        }
    }
}

/// Whether `L(a)` equals its closure. The witness is the shortlex-least
/// word of the closure outside `L(a)`.
pub fn is_closed(a: &Nfa, direction: Direction) -> Result<Certificate> {
    let own = minimize(&determinize(a)?);
    let closed = closure_dfa(a, direction)?;
    Ok(match shortest_difference(&own, &closed)? {
        None => Certificate::holds(),
        Some(w) => Certificate::refuted(Witness::Word(w)),
    })
}

/// Closedness of a DFA language through single-letter insertions.
///
/// `L` is upward-closed iff there are no `u, a, v` with `uv ∈ L` and
/// `uav ∉ L`. The search looks for a reachable state `p` and a letter `a`
/// such that `p` and `δ(p, a)` are separated by some `v`, found by
/// reachability over state pairs. On refutation `|u| < n` and `|v| < n²`
/// with `n` the number of states of `d`.
///
/// For [`Direction::Down`] the complement is tested instead, so the
/// returned triple has `uav ∈ L` and `uv ∉ L`, and the bounds refer to the
/// complete complement DFA.
pub fn dfa_closed_witness(d: &Dfa, direction: Direction) -> Certificate {
    let target = match direction {
        Direction::Up => d.complete(),
        Direction::Down => complement(d),
    };
    match insertion_triple(&target) {
        None => Certificate::holds(),
        Some((u, a, v)) => Certificate::refuted(Witness::Triple { u, a, v }),
    }
}

// `c` is complete.
fn insertion_triple(c: &Dfa) -> Option<(Word, Symbol, Word)> {
    let n = c.num_states();
    let k = c.alphabet().len();
    let separable = separable_pairs(c);
    let parents = bfs_tree(c);
    let mut order: Vec<StateId> = (0..n).filter(|&q| parents[q].is_some()).collect();
    order.sort_by_key(|&q| parents[q].as_ref().map(|(depth, _, _)| *depth));
    for p in order {
        for a in 0..k {
            let q = c.next(p, a).expect("complete");
            if separable.contains(&(p, q)) {
                let u = path_to(&parents, p);
                let v = separating_word(c, p, q);
                return Some((u, a, v));
            }
        }
    }
    None
}

// Pairs (x, y) from which some v leads x into F and y out of F.
fn separable_pairs(c: &Dfa) -> HashSet<(StateId, StateId)> {
    let n = c.num_states();
    let k = c.alphabet().len();
    let mut rev = vec![Vec::new(); n * k];
    for (p, a, q) in c.transitions() {
        rev[q * k + a].push(p);
    }
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    for x in 0..n {
        for y in 0..n {
            if c.is_final(x) && !c.is_final(y) && seen.insert((x, y)) {
                queue.push_back((x, y));
            }
        }
    }
    while let Some((x, y)) = queue.pop_front() {
        for a in 0..k {
            for &px in &rev[x * k + a] {
                for &py in &rev[y * k + a] {
                    if seen.insert((px, py)) {
                        queue.push_back((px, py));
                    }
                }
            }
        }
    }
    seen
}

// Breadth-first tree from the initial state: (depth, parent, letter).
fn bfs_tree(c: &Dfa) -> Vec<Option<(usize, StateId, Symbol)>> {
    let mut parents = vec![None; c.num_states()];
    let init = c.initial();
    parents[init] = Some((0, init, 0));
    let mut queue = VecDeque::from([init]);
    while let Some(p) = queue.pop_front() {
        let depth = parents[p].unwrap().0;
        for a in c.alphabet().symbols() {
            if let Some(q) = c.next(p, a) {
                if parents[q].is_none() {
                    parents[q] = Some((depth + 1, p, a));
                    queue.push_back(q);
                }
            }
        }
    }
    parents
}

fn path_to(parents: &[Option<(usize, StateId, Symbol)>], mut q: StateId) -> Word {
    let mut w = Vec::new();
    while let Some((depth, p, a)) = parents[q] {
        if depth == 0 {
            break;
        }
        w.push(a);
        q = p;
    }
    w.reverse();
    Word(w)
}

// Shortlex-least v with δ(p, v) ∈ F and δ(q, v) ∉ F; such a v must exist.
fn separating_word(c: &Dfa, p: StateId, q: StateId) -> Word {
    type Pair = (StateId, StateId);
    let mut parent: HashMap<Pair, Option<(Pair, Symbol)>> = HashMap::from([((p, q), None)]);
    let mut queue = VecDeque::from([(p, q)]);
    while let Some((x, y)) = queue.pop_front() {
        if c.is_final(x) && !c.is_final(y) {
            let mut w = Vec::new();
            let mut cur = (x, y);
            while let Some((prev, a)) = parent[&cur] {
                w.push(a);
                cur = prev;
            }
            w.reverse();
            return Word(w);
        }
        for a in c.alphabet().symbols() {
            let next = (c.next(x, a).unwrap(), c.next(y, a).unwrap());
            if let std::collections::hash_map::Entry::Vacant(e) = parent.entry(next) {
                e.insert(Some(((x, y), a)));
                queue.push_back(next);
            }
        }
    }
    unreachable!("pair was reported separable")
}

/// Whether the closure of `L(a)` is included in the closure of `L(b)`.
///
/// Explores the product of the two closures' subset automata lazily. The
/// witness is the shortlex-least word of `closure(a) ∖ closure(b)`. Its
/// length is checked to be below `n_A` for upward closures and at most
/// `n_B` for downward closures. Length `n_B` itself occurs when `b` is
/// partial, e.g. `a` accepting `{a2}` and `b` a single state looping on
/// `a1`.
pub fn closure_inclusion(a: &Nfa, b: &Nfa, direction: Direction) -> Result<Certificate> {
    if a.alphabet() != b.alphabet() {
        return input("closure inclusion between automata over different alphabets");
    }
    let ca = closure(a, direction);
    let cb = closure(b, direction);
    let fa = ca.final_set();
    let fb = cb.final_set();
    let start = (ca.initial_set(), cb.initial_set());
    let mut nodes = vec![start.clone()];
    let mut parent: Vec<Option<(usize, Symbol)>> = vec![None];
    let mut index: HashMap<(StateSet, StateSet), usize> = HashMap::from([(start, 0)]);
    let mut i = 0;
    while i < nodes.len() {
        let (sa, sb) = nodes[i].clone();
        if sa.intersects(&fa) && !sb.intersects(&fb) {
            let mut w = Vec::new();
            let mut cur = i;
            while let Some((prev, c)) = parent[cur] {
                w.push(c);
                cur = prev;
            }
            w.reverse();
            let limit = match direction {
                Direction::Down => b.num_states() + 1,
                Direction::Up => a.num_states(),
            };
            if w.len() >= limit {
                return Err(Error::Verification(format!(
                    "closure inclusion witness of length {} is not below {limit}",
                    w.len()
                )));
            }
            return Ok(Certificate::refuted(Witness::Word(Word(w))));
        }
        for c in ca.alphabet().symbols() {
            let na = ca.step(&sa, c);
            if na.is_empty() {
                continue;
            }
            let key = (na, cb.step(&sb, c));
            if !index.contains_key(&key) {
                index.insert(key.clone(), nodes.len());
                nodes.push(key);
                parent.push(Some((i, c)));
            }
        }
        i += 1;
    }
    Ok(Certificate::holds())
}

/// Both inclusions; the witness comes from the first failing side.
pub fn closure_equal(a: &Nfa, b: &Nfa, direction: Direction) -> Result<Certificate> {
    let left = closure_inclusion(a, b, direction)?;
    if !left.verdict {
        return Ok(left);
    }
    closure_inclusion(b, a, direction)
}

/// Whether `↓L(a) = Σ*`.
///
/// Holds iff some useful state `q` lies on cycles reading every letter,
/// that is, for each letter `x` some edge `p -x-> p'` has `p` and `p'` in
/// the strongly connected component of `q`. The witness is the
/// shortlex-least word outside `↓L(a)`.
pub fn down_universal(a: &Nfa) -> Result<Certificate> {
    if down_universal_graph(a) {
        return Ok(Certificate::holds());
    }
    let closed = minimize(&determinize(&down_closure(a))?);
    let missing = shortest_accepted(&complement(&closed))?
        .expect("a language that is not universal misses some word");
    Ok(Certificate::refuted(Witness::Word(missing)))
}

fn down_universal_graph(a: &Nfa) -> bool {
    let useful = a.useful_states();
    let found = useful.iter().any(|q| {
        let forward = a.forward_closure([q]);
        let backward = a.backward_closure([q]);
        let in_scc = |p: StateId| forward.contains(p) && backward.contains(p);
        a.alphabet().symbols().all(|x| {
            (0..a.num_states())
                .filter(|&p| in_scc(p))
                .any(|p| a.successors(p, x).iter().any(|&p2| in_scc(p2)))
        })
    });
    found
}
