//! The scattered-subword order on words.

use crate::automata::Symbol;

/// Positions of a subword inside a superword, 1-based and strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingPositions(pub Vec<usize>);

/// Whether `x` is a scattered subword of `y`.
pub fn embeds(x: &[Symbol], y: &[Symbol]) -> bool {
    let mut rest = y.iter();
    x.iter().all(|a| rest.any(|b| b == a))
}

/// The greedy embedding: each letter of `x` is matched at the first
/// available position of `y`. Pointwise below every other embedding.
pub fn leftmost_embedding(x: &[Symbol], y: &[Symbol]) -> Option<EmbeddingPositions> {
    let mut positions = Vec::with_capacity(x.len());
    let mut j = 0;
    for &a in x {
        while j < y.len() && y[j] != a {
            j += 1;
        }
        if j == y.len() {
            return None;
        }
        j += 1;
        positions.push(j);
    }
    Some(EmbeddingPositions(positions))
}

/// Length of the longest prefix of `x` that embeds in `y`.
pub fn longest_embedded_prefix(x: &[Symbol], y: &[Symbol]) -> usize {
    let mut i = 0;
    for &b in y {
        if i < x.len() && x[i] == b {
            i += 1;
        }
    }
    i
}

#[cfg(test)]
mod tests {
    use super::*;

    // a = 0, b = 1, c = 2
    #[test]
    fn examples() {
        assert!(embeds(&[0, 1], &[0, 2, 1, 0]));
        assert!(embeds(&[], &[2, 2]));
        assert!(embeds(&[], &[]));
        assert!(!embeds(&[1, 0], &[0, 1]));
        assert!(!embeds(&[0], &[]));
    }

    #[test]
    fn leftmost_positions() {
        assert_eq!(
            leftmost_embedding(&[0, 1], &[0, 2, 1, 0]),
            Some(EmbeddingPositions(vec![1, 3]))
        );
        assert_eq!(
            leftmost_embedding(&[], &[0]),
            Some(EmbeddingPositions(vec![]))
        );
        assert_eq!(
            leftmost_embedding(&[0, 0], &[0, 1, 0]),
            Some(EmbeddingPositions(vec![1, 3]))
        );
        assert_eq!(leftmost_embedding(&[1, 0], &[0, 1]), None);
    }

    #[test]
    fn prefix_length() {
        assert_eq!(longest_embedded_prefix(&[0, 1, 0], &[0, 0, 1]), 2);
        assert_eq!(longest_embedded_prefix(&[], &[0]), 0);
    }
}
