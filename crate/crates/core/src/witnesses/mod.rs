//! Witness families for the state-complexity bounds, their fooling sets,
//! and the word machinery of the two-letter family.

mod families;
mod two_letter;

use std::fmt;

pub use families::{
    d_dfa, down_interior_witness, down_witness_ell, e_dfa, finite_language_dfa, heam_dfa,
    not_u_nfa, u_dfa, u_prime_dfa, up_interior_witness, up_witness_alphabet, up_witness_ell, v_dfa,
};
pub use two_letter::{
    c_of, c_word, d_of, d_word, distinguisher_words, max_prefix_power, min_cover_power,
    morphism_value, two_letter_dfa, MorphismKind, TwoLetterParams,
};

use crate::automata::{minimal_dfa, Alphabet, Machine, Nfa, Symbol, Word};
use crate::bounds::{canonical_subsets, FoolingSet};
use crate::closures::{closure, Direction};
use crate::error::{input, Result};

/// A witness family with its size parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyId {
    U(usize),
    V(usize),
    Uprime(usize),
    E(usize),
    D(usize),
    NotU(usize),
    Heam(usize),
    TwoLetter(usize),
    DownIntWitness(usize),
    UpIntWitness(usize),
}

const FAMILY_NAMES: [&str; 10] = [
    "U",
    "V",
    "Uprime",
    "E",
    "D",
    "notU",
    "heam",
    "twoLetter",
    "downIntWitness",
    "upIntWitness",
];

impl FamilyId {
    pub fn parse(name: &str, param: usize) -> Result<Self> {
        let id = match FAMILY_NAMES
            .iter()
            .position(|f| f.eq_ignore_ascii_case(name))
        {
            Some(0) => FamilyId::U(param),
            Some(1) => FamilyId::V(param),
            Some(2) => FamilyId::Uprime(param),
            Some(3) => FamilyId::E(param),
            Some(4) => FamilyId::D(param),
            Some(5) => FamilyId::NotU(param),
            Some(6) => FamilyId::Heam(param),
            Some(7) => FamilyId::TwoLetter(param),
            Some(8) => FamilyId::DownIntWitness(param),
            Some(9) => FamilyId::UpIntWitness(param),
            _ => {
                return input(format!(
                    "unknown family {name:?}; expected one of {}",
                    FAMILY_NAMES.join(", ")
                ))
            }
        };
        Ok(id)
    }

    pub fn name(&self) -> &'static str {
        FAMILY_NAMES[self.index()]
    }

    pub fn param(&self) -> usize {
        match *self {
            FamilyId::U(p)
            | FamilyId::V(p)
            | FamilyId::Uprime(p)
            | FamilyId::E(p)
            | FamilyId::D(p)
            | FamilyId::NotU(p)
            | FamilyId::Heam(p)
            | FamilyId::TwoLetter(p)
            | FamilyId::DownIntWitness(p)
            | FamilyId::UpIntWitness(p) => p,
        }
    }

    fn index(&self) -> usize {
        match self {
            FamilyId::U(_) => 0,
            FamilyId::V(_) => 1,
            FamilyId::Uprime(_) => 2,
            FamilyId::E(_) => 3,
            FamilyId::D(_) => 4,
            FamilyId::NotU(_) => 5,
            FamilyId::Heam(_) => 6,
            FamilyId::TwoLetter(_) => 7,
            FamilyId::DownIntWitness(_) => 8,
            FamilyId::UpIntWitness(_) => 9,
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.name(), self.param())
    }
}

/// Builds the automaton of a family.
///
/// | family | language | states |
/// |---|---|---|
/// | `U k` | words over `Σ_k` using every letter | `2^k` |
/// | `V k` | words over `Σ_k` without repeated letters | `2^k` |
/// | `Uprime k` | `Σ_k · U_k` | `2^k + 1` |
/// | `E k` | `{aa \| a ∈ Σ_k}` | `k + 2` |
/// | `D k` | non-empty words whose first letter does not reappear | `k + 1` |
/// | `notU k` | `Σ_k* ∖ U_k` (NFA) | `k` |
/// | `heam n` | `{aⁱ b a^{2j} b aⁱ \| i + j + 1 = n}`, complete | `(n+1)²` |
/// | `twoLetter n` | `{c(i)ⁿ \| n ≤ i ≤ 2n}` | `3n³ + 1` |
/// | `downIntWitness n` | `Γ* ∖ {xx \| x ∈ Γ}` (NFA) | `2ℓ + 3` |
/// | `upIntWitness n` | see [`up_interior_witness`] (NFA) | `3ℓ + 4` |
pub fn gen_family(id: FamilyId) -> Result<Machine> {
    Ok(match id {
        FamilyId::U(k) => u_dfa(k)?.into(),
        FamilyId::V(k) => v_dfa(k)?.into(),
        FamilyId::Uprime(k) => u_prime_dfa(k)?.into(),
        FamilyId::E(k) => e_dfa(k)?.into(),
        FamilyId::D(k) => d_dfa(k)?.into(),
        FamilyId::NotU(k) => not_u_nfa(k)?.into(),
        FamilyId::Heam(n) => heam_dfa(n)?.into(),
        FamilyId::TwoLetter(n) => two_letter_dfa(n)?.into(),
        FamilyId::DownIntWitness(n) => down_interior_witness(n)?.into(),
        FamilyId::UpIntWitness(n) => up_interior_witness(n)?.into(),
    })
}

/// Families with a known fooling set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FoolingFamily {
    U(usize),
    V(usize),
    Uprime(usize),
    /// For `D_{n−1}`, indexed by the NFA size `n`.
    D(usize),
    /// Rank certificate for `Σ_n* ∖ U_n`.
    NotU(usize),
    /// Rank certificate for `↓D_n`.
    DownD(usize),
    /// Rank certificate for `↑E_n`; the `yᵢ` avoid the language.
    UpE(usize),
}

impl FoolingFamily {
    pub fn parse(name: &str, param: usize) -> Result<Self> {
        let names = ["U", "V", "Uprime", "D", "notU", "downD", "upE"];
        Ok(
            match names.iter().position(|f| f.eq_ignore_ascii_case(name)) {
                Some(0) => FoolingFamily::U(param),
                Some(1) => FoolingFamily::V(param),
                Some(2) => FoolingFamily::Uprime(param),
                Some(3) => FoolingFamily::D(param),
                Some(4) => FoolingFamily::NotU(param),
                Some(5) => FoolingFamily::DownD(param),
                Some(6) => FoolingFamily::UpE(param),
                _ => {
                    return input(format!(
                        "no fooling set for {name:?}; expected one of {}",
                        names.join(", ")
                    ))
                }
            },
        )
    }

    /// Whether the pairs also certify that the initial state is not a
    /// witness state.
    pub fn initial_excluded(&self) -> bool {
        matches!(self, FoolingFamily::UpE(_))
    }

    /// The language the set is built for.
    pub fn language(&self) -> Result<Nfa> {
        Ok(match *self {
            FoolingFamily::U(k) => u_dfa(k)?.into_nfa(),
            FoolingFamily::V(k) => v_dfa(k)?.into_nfa(),
            FoolingFamily::Uprime(k) => u_prime_dfa(k)?.into_nfa(),
            FoolingFamily::D(n) => d_dfa(d_letters(n)?)?.into_nfa(),
            FoolingFamily::NotU(n) => not_u_nfa(n)?,
            FoolingFamily::DownD(n) => {
                minimal_dfa(&closure(&d_dfa(n)?.into_nfa(), Direction::Down))?.into_nfa()
            }
            FoolingFamily::UpE(n) => {
                minimal_dfa(&closure(&e_dfa(n)?.into_nfa(), Direction::Up))?.into_nfa()
            }
        })
    }
}

impl From<FamilyId> for Option<FoolingFamily> {
    fn from(id: FamilyId) -> Self {
        match id {
            FamilyId::U(k) => Some(FoolingFamily::U(k)),
            FamilyId::V(k) => Some(FoolingFamily::V(k)),
            FamilyId::Uprime(k) => Some(FoolingFamily::Uprime(k)),
            FamilyId::NotU(k) => Some(FoolingFamily::NotU(k)),
            _ => None,
        }
    }
}

fn d_letters(n: usize) -> Result<usize> {
    if n < 2 {
        return input("the D fooling set needs n >= 2");
    }
    Ok(n - 1)
}

/// Letters of `mask` in increasing order.
fn x_of(mask: u64, k: usize) -> Word {
    Word((0..k).filter(|&a| mask >> a & 1 == 1).collect())
}

fn x_not(mask: u64, k: usize) -> Word {
    Word((0..k).filter(|&a| mask >> a & 1 == 0).collect())
}

fn subset_pairs(k: usize, f: impl Fn(u64) -> (Word, Word)) -> Result<Vec<(Word, Word)>> {
    if k > families::MAX_SUBSET_LETTERS {
        return input(format!(
            "alphabet of {k} letters exceeds {}",
            families::MAX_SUBSET_LETTERS
        ));
    }
    Ok(canonical_subsets(k).into_iter().map(f).collect())
}

/// The fooling set of a family, subsets `Γ` in canonical order.
pub fn fooling_for(family: FoolingFamily) -> Result<FoolingSet> {
    let a1: Symbol = 0;
    let (k, pairs) = match family {
        FoolingFamily::U(k) | FoolingFamily::V(k) => {
            (k, subset_pairs(k, |g| (x_of(g, k), x_not(g, k)))?)
        }
        FoolingFamily::Uprime(k) => {
            if k == 0 {
                return input("Uprime needs a non-empty alphabet");
            }
            let mut pairs = subset_pairs(k, |g| (Word(vec![a1]).concat(&x_of(g, k)), x_not(g, k)))?;
            let all = Word((0..k).collect());
            pairs.push((Word::empty(), Word(vec![a1]).concat(&all)));
            (k, pairs)
        }
        FoolingFamily::D(n) => {
            let k = d_letters(n)?;
            let mut pairs = vec![(Word::empty(), Word((0..k).collect()))];
            pairs.extend(
                (0..k).map(|a| (Word(vec![a]), Word((0..k).filter(|&b| b != a).collect()))),
            );
            (k, pairs)
        }
        FoolingFamily::NotU(n) => (n, subset_pairs(n, |g| (x_not(g, n), x_not(g, n)))?),
        FoolingFamily::DownD(n) => {
            let mut pairs =
                subset_pairs(n, |g| (Word(vec![a1]).concat(&x_not(g, n)), x_not(g, n)))?;
            pairs.push((Word::empty(), x_not(0, n)));
            (n, pairs)
        }
        FoolingFamily::UpE(n) => {
            let mut pairs = subset_pairs(n, |g| (x_of(g, n), x_of(g, n)))?;
            pairs.push((Word(vec![a1, a1]), Word::empty()));
            (n, pairs)
        }
    };
    if k == 0 && matches!(family, FoolingFamily::DownD(_) | FoolingFamily::UpE(_)) {
        return input("this fooling set needs n >= 1");
    }
    FoolingSet::new(Alphabet::indexed(k), pairs)
}
