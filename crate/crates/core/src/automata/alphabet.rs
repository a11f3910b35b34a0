use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{input, Result};

/// Index of a letter in an [`Alphabet`].
pub type Symbol = usize;

/// A finite, ordered set of named letters.
///
/// Letters are addressed by their index; names are only used for I/O.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    names: Arc<[String]>,
}

impl Alphabet {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut seen = HashMap::new();
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() || name.chars().any(|c| c.is_whitespace() || c == '#') {
                return input(format!("letter name {name:?} is not a printable token"));
            }
            if let Some(j) = seen.insert(name.as_str(), i) {
                return input(format!("letter {name:?} appears at positions {j} and {i}"));
            }
        }
        Ok(Self {
            names: names.into(),
        })
    }

    /// The alphabet `a1, …, ak`.
    pub fn indexed(k: usize) -> Self {
        Self::with_prefix("a", 1, k)
    }

    /// Letters `{prefix}{start}`, `{prefix}{start+1}`, … (`k` of them).
    pub fn with_prefix(prefix: &str, start: usize, k: usize) -> Self {
        Self::new((start..start + k).map(|i| format!("{prefix}{i}")))
            .expect("generated names are distinct")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, a: Symbol) -> &str {
        &self.names[a]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<Symbol> {
        self.names.iter().position(|n| n == name)
    }

    pub fn symbols(&self) -> std::ops::Range<Symbol> {
        0..self.len()
    }

    /// Renders a word as letter names joined without separator, `ε` when empty.
    pub fn render(&self, w: &[Symbol]) -> String {
        if w.is_empty() {
            return "ε".to_string();
        }
        w.iter().map(|&a| self.name(a)).collect()
    }

    /// Parses space-separated letter names (`ε` or the empty string for the empty word).
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let mut letters = Vec::new();
        for tok in text.split_whitespace() {
            if tok == "ε" {
                continue;
            }
            match self.index_of(tok) {
                Some(a) => letters.push(a),
                None => return input(format!("unknown letter {tok:?}")),
            }
        }
        Ok(Word(letters))
    }

    pub(crate) fn check_word(&self, w: &[Symbol]) -> Result<()> {
        match w.iter().find(|&&a| a >= self.len()) {
            Some(a) => input(format!(
                "symbol index {a} outside alphabet of size {}",
                self.len()
            )),
            None => Ok(()),
        }
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.names.iter()).finish()
    }
}

/// A word: a sequence of letter indices.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<Symbol>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Symbol] {
        &self.0
    }

    pub fn concat(&self, other: &[Symbol]) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(other);
        Word(v)
    }

    /// `self` repeated `times` times.
    pub fn power(&self, times: usize) -> Word {
        Word(self.0.repeat(times))
    }

    /// Length-lexicographic comparison (shorter first, then by symbol index).
    pub fn shortlex_cmp(&self, other: &Word) -> std::cmp::Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl std::ops::Deref for Word {
    type Target = [Symbol];
    fn deref(&self) -> &[Symbol] {
        &self.0
    }
}

impl From<Vec<Symbol>> for Word {
    fn from(v: Vec<Symbol>) -> Self {
        Word(v)
    }
}

impl From<&[Symbol]> for Word {
    fn from(v: &[Symbol]) -> Self {
        Word(v.to_vec())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "ε");
        }
        let parts: Vec<String> = self.0.iter().map(|a| a.to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicate_names() {
        assert!(Alphabet::new(["a", "b", "a"]).is_err());
        assert!(Alphabet::new(["a b"]).is_err());
        assert!(Alphabet::new(Vec::<String>::new()).unwrap().is_empty());
    }

    #[test]
    fn index_name_bijection() {
        let s = Alphabet::indexed(4);
        for a in s.symbols() {
            assert_eq!(s.index_of(s.name(a)), Some(a));
        }
        assert_eq!(s.name(0), "a1");
    }

    #[test]
    fn word_io() {
        let s = Alphabet::indexed(2);
        let w = s.parse_word("a1 a2 a2").unwrap();
        assert_eq!(w, Word(vec![0, 1, 1]));
        assert_eq!(s.render(&w), "a1a2a2");
        assert_eq!(s.render(&[]), "ε");
        assert!(s.parse_word("a3").is_err());
        assert!(s.check_word(&[0, 2]).is_err());
    }

    #[test]
    fn shortlex() {
        use std::cmp::Ordering::*;
        assert_eq!(Word(vec![1]).shortlex_cmp(&Word(vec![0, 0])), Less);
        assert_eq!(Word(vec![0, 1]).shortlex_cmp(&Word(vec![1, 0])), Less);
    }
}
