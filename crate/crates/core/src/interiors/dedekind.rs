use crate::error::{input, Result};

/// Largest `n` accepted by [`dedekind_count`].
pub const MAX_DEDEKIND_N: usize = 6;

/// Number of antichains (including the empty one) in the lattice of
/// subsets of an `n`-element set.
///
/// Branches on the least still-available subset: either it is left out,
/// or it is taken and every subset comparable to it is discarded.
pub fn dedekind_count(n: usize) -> Result<u64> {
    if n > MAX_DEDEKIND_N {
        return input(format!(
            "dedekind_count supports n <= {MAX_DEDEKIND_N}, got {n}"
        ));
    }
    let size = 1usize << n;
    let comparable: Vec<u64> = (0..size)
        .map(|s| {
            (0..size)
                .filter(|&t| s & t == s || s & t == t)
                .fold(0u64, |m, t| m | 1 << t)
        })
        .collect();
    let all = if size == 64 {
        u64::MAX
    } else {
        (1u64 << size) - 1
    };
    Ok(count(all, &comparable))
}

fn count(available: u64, comparable: &[u64]) -> u64 {
    if available == 0 {
        return 1;
    }
    let s = available.trailing_zeros() as usize;
    count(available & !(1 << s), comparable) + count(available & !comparable[s], comparable)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_large_n() {
        assert!(dedekind_count(7).is_err());
    }

    #[test]
    fn small_values() {
        assert_eq!(dedekind_count(0).unwrap(), 2);
        assert_eq!(dedekind_count(1).unwrap(), 3);
    }
}
