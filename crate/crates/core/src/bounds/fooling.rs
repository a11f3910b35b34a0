use std::fmt;

use crate::automata::{Alphabet, Automaton, Symbol, Word};
use crate::error::{input, Error, Result};

/// Word pairs `(xᵢ, yᵢ)` used to lower-bound automaton sizes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoolingSet {
    alphabet: Alphabet,
    pairs: Vec<(Word, Word)>,
}

impl FoolingSet {
    /// Rejects repeated pairs and letters outside `alphabet`.
    pub fn new(alphabet: Alphabet, pairs: Vec<(Word, Word)>) -> Result<Self> {
        for (i, (x, y)) in pairs.iter().enumerate() {
            alphabet.check_word(x)?;
            alphabet.check_word(y)?;
            if pairs[..i].iter().any(|p| p.0 == *x && p.1 == *y) {
                return input(format!("pair {} repeats an earlier pair", i + 1));
            }
        }
        Ok(Self { alphabet, pairs })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn pairs(&self) -> &[(Word, Word)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Moves every word to `target`, letter `a` becoming `map[a]`.
    pub fn relabel(&self, target: &Alphabet, map: &[Symbol]) -> Result<Self> {
        if map.len() != self.alphabet.len() {
            return input("relabelling map does not cover the alphabet");
        }
        let image = |w: &Word| Word(w.iter().map(|&a| map[a]).collect());
        let pairs = self
            .pairs
            .iter()
            .map(|(x, y)| (image(x), image(y)))
            .collect();
        Self::new(target.clone(), pairs)
    }
}

/// Square 0/1 matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct FoolingMatrix {
    m: usize,
    entries: Vec<bool>,
}

impl FoolingMatrix {
    pub fn from_rows(rows: Vec<Vec<bool>>) -> Result<Self> {
        let m = rows.len();
        if rows.iter().any(|r| r.len() != m) {
            return input("matrix is not square");
        }
        Ok(Self {
            m,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(m: usize, f: impl Fn(usize, usize) -> bool) -> Self {
        let entries = (0..m * m).map(|e| f(e / m, e % m)).collect();
        Self { m, entries }
    }

    pub fn size(&self) -> usize {
        self.m
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.entries[i * self.m + j]
    }

    pub fn row(&self, i: usize) -> &[bool] {
        &self.entries[i * self.m..(i + 1) * self.m]
    }
}

impl fmt::Debug for FoolingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FoolingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.m {
            let row: Vec<&str> = self
                .row(i)
                .iter()
                .map(|&b| if b { "1" } else { "0" })
                .collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

fn check_alphabet(l: &impl Automaton, s: &FoolingSet) -> Result<()> {
    if l.alphabet() != s.alphabet() {
        return input("fooling set and automaton use different alphabets");
    }
    Ok(())
}

/// Checks the extended fooling-set conditions and returns the number of
/// pairs, a lower bound on the size of any NFA for `L(l)`.
///
/// Every `xᵢyᵢ` must be accepted, and for `i ≠ j` at least one of
/// `xᵢyⱼ`, `xⱼyᵢ` must be rejected.
pub fn verify_fooling(l: &impl Automaton, s: &FoolingSet) -> Result<usize> {
    let m = fooling_matrix(l, s)?;
    let render = |w: &Word| s.alphabet().render(w);
    for i in 0..m.size() {
        if !m.get(i, i) {
            let (x, y) = &s.pairs()[i];
            return Err(Error::Verification(format!(
                "pair {}: {}·{} is not in the language",
                i + 1,
                render(x),
                render(y)
            )));
        }
    }
    for i in 0..m.size() {
        for j in i + 1..m.size() {
            if m.get(i, j) && m.get(j, i) {
                return Err(Error::Verification(format!(
                    "pairs ({}, {}): both cross products are in the language",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    Ok(m.size())
}

/// `M[i][j] = 1` iff `xᵢyⱼ ∈ L(l)`.
pub fn fooling_matrix(l: &impl Automaton, s: &FoolingSet) -> Result<FoolingMatrix> {
    check_alphabet(l, s)?;
    let nfa = l.to_nfa();
    let pairs = s.pairs();
    let mut rows = Vec::with_capacity(pairs.len());
    for (x, _) in pairs {
        let row = pairs
            .iter()
            .map(|(_, y)| nfa.accepts(&x.concat(y)))
            .collect::<Result<Vec<bool>>>()?;
        rows.push(row);
    }
    FoolingMatrix::from_rows(rows)
}

/// `rank(M)` plus one when `initial_excluded` is set. The flag is only
/// sound when no `yᵢ` is in the language, which is checked.
pub fn ufa_lower_bound(
    l: &impl Automaton,
    s: &FoolingSet,
    initial_excluded: bool,
) -> Result<usize> {
    let m = fooling_matrix(l, s)?;
    let mut bound = super::rational_rank(&m);
    if initial_excluded {
        for (i, (_, y)) in s.pairs().iter().enumerate() {
            if l.accepts(y)? {
                return Err(Error::Verification(format!(
                    "pair {}: {} is in the language, the initial state may be a witness state",
                    i + 1,
                    s.alphabet().render(y)
                )));
            }
        }
        bound += 1;
    }
    Ok(bound)
}
