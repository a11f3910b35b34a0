use crate::automata::{Dfa, Word};
use crate::closures::Direction;
use crate::error::{input, Result};
use crate::subwords::embeds;

use super::families::{ab, finite_language_dfa};

/// The parameter `n` with its index range `H = {n, …, 2n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TwoLetterParams {
    n: usize,
}

impl TwoLetterParams {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return input("two-letter family needs n >= 1");
        }
        Ok(Self { n })
    }

    /// Like [`TwoLetterParams::new`] but also requires `n` even.
    pub fn even(n: usize) -> Result<Self> {
        if !n.is_multiple_of(2) {
            return input(format!("n must be even, got {n}"));
        }
        Self::new(n)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn h(&self) -> std::ops::RangeInclusive<usize> {
        self.n..=2 * self.n
    }

    fn check(&self, i: usize) -> Result<()> {
        if !self.h().contains(&i) {
            return input(format!(
                "index {i} outside H = {{{}..{}}}",
                self.n,
                2 * self.n
            ));
        }
        Ok(())
    }
}

/// `c(i) = aⁱ b^{3n−i}`.
pub fn c_word(i: usize, n: usize) -> Result<Word> {
    TwoLetterParams::new(n)?.check(i)?;
    let mut w = vec![0; i];
    w.extend(std::iter::repeat_n(1, 3 * n - i));
    Ok(Word(w))
}

/// `d(i) = c(i) c(i)`.
pub fn d_word(i: usize, n: usize) -> Result<Word> {
    Ok(c_word(i, n)?.power(2))
}

/// `c(σ) = c(σ₁) ⋯ c(σ_m)`.
pub fn c_of(sigma: &[usize], n: usize) -> Result<Word> {
    let mut w = Word::empty();
    for &i in sigma {
        w = w.concat(&c_word(i, n)?);
    }
    Ok(w)
}

/// `d(σ) = d(σ₁) ⋯ d(σ_m)`.
pub fn d_of(sigma: &[usize], n: usize) -> Result<Word> {
    let mut w = Word::empty();
    for &i in sigma {
        w = w.concat(&d_word(i, n)?);
    }
    Ok(w)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MorphismKind {
    Theta,
    Eta,
}

/// `θᵢ(σ) = 2|σ| − #ᵢ(σ)` and `ηᵢ(σ) = |σ| + #ᵢ(σ)`.
pub fn morphism_value(kind: MorphismKind, i: usize, sigma: &[usize]) -> usize {
    let hits = sigma.iter().filter(|&&j| j == i).count();
    match kind {
        MorphismKind::Theta => 2 * sigma.len() - hits,
        MorphismKind::Eta => sigma.len() + hits,
    }
}

/// Least `ℓ` with `c(σ) ⊑ c(i)^ℓ`, by search.
pub fn min_cover_power(sigma: &[usize], i: usize, n: usize) -> Result<usize> {
    let target = c_of(sigma, n)?;
    let ci = c_word(i, n)?;
    let mut l = 0;
    let mut host = Word::empty();
    while !embeds(&target, &host) {
        l += 1;
        host = host.concat(&ci);
    }
    Ok(l)
}

/// Greatest `ℓ` with `c(i)^ℓ ⊑ d(σ)`, by search.
pub fn max_prefix_power(sigma: &[usize], i: usize, n: usize) -> Result<usize> {
    let host = d_of(sigma, n)?;
    let ci = c_word(i, n)?;
    let mut l = 0;
    let mut probe = ci.clone();
    while embeds(&probe, &host) {
        l += 1;
        probe = probe.concat(&ci);
    }
    Ok(l)
}

/// `w_X = c(p₁ ⋯ p_{n/2})` for [`Direction::Down`] and
/// `w′_X = d(p₁ ⋯ p_{n/2})` for [`Direction::Up`], with `p₁ < ⋯ < p_{n/2}`
/// the elements of `X`.
pub fn distinguisher_words(x: &[usize], n: usize, kind: Direction) -> Result<Word> {
    let params = TwoLetterParams::even(n)?;
    let mut sorted = x.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != n / 2 || sorted.len() != x.len() {
        return input(format!("X must have {} distinct elements", n / 2));
    }
    for &i in &sorted {
        params.check(i)?;
    }
    match kind {
        Direction::Down => c_of(&sorted, n),
        Direction::Up => d_of(&sorted, n),
    }
}

/// Minimal DFA of `{c(i)ⁿ | i ∈ H}`.
pub fn two_letter_dfa(n: usize) -> Result<Dfa> {
    let params = TwoLetterParams::new(n)?;
    let words = params
        .h()
        .map(|i| Ok(c_word(i, n)?.power(n)))
        .collect::<Result<Vec<_>>>()?;
    finite_language_dfa(&ab(), &words)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::Automaton;

    fn text(w: &Word) -> String {
        ab().render(w)
    }

    #[test]
    fn c_and_d() {
        assert_eq!(text(&c_word(2, 2).unwrap()), "aabbbb");
        assert_eq!(text(&c_word(4, 2).unwrap()), "aaaabb");
        assert_eq!(text(&d_word(2, 2).unwrap()), "aabbbbaabbbb");
        assert!(c_word(5, 2).is_err());
        assert!(c_word(1, 2).is_err());
    }

    #[test]
    fn morphisms() {
        assert_eq!(morphism_value(MorphismKind::Theta, 2, &[2, 3]), 3);
        assert_eq!(morphism_value(MorphismKind::Eta, 2, &[2, 2]), 4);
        assert_eq!(morphism_value(MorphismKind::Theta, 3, &[]), 0);
    }

    #[test]
    fn cover_examples() {
        assert_eq!(min_cover_power(&[2, 3], 2, 2).unwrap(), 3);
        assert_eq!(min_cover_power(&[3], 3, 2).unwrap(), 1);
        assert_eq!(min_cover_power(&[3], 2, 2).unwrap(), 2);
        assert_eq!(max_prefix_power(&[3], 2, 2).unwrap(), 1);
        assert_eq!(max_prefix_power(&[2], 2, 2).unwrap(), 2);
        assert_eq!(max_prefix_power(&[2, 3], 2, 2).unwrap(), 3);
    }

    #[test]
    fn distinguishers() {
        assert_eq!(
            text(&distinguisher_words(&[2], 2, Direction::Down).unwrap()),
            "aabbbb"
        );
        assert_eq!(
            text(&distinguisher_words(&[3], 2, Direction::Up).unwrap()),
            "aaabbbaaabbb"
        );
        assert!(distinguisher_words(&[2, 3], 2, Direction::Down).is_err());
        assert!(distinguisher_words(&[2], 3, Direction::Down).is_err());
    }

    #[test]
    fn two_letter_size() {
        assert_eq!(two_letter_dfa(2).unwrap().num_states(), 25);
    }
}
