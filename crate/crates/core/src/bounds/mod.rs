//! Lower bounds on automaton sizes: extended fooling sets for NFAs and
//! fooling-matrix ranks for unambiguous automata.

mod fooling;

pub use fooling::{fooling_matrix, ufa_lower_bound, verify_fooling, FoolingMatrix, FoolingSet};

use num::{BigRational, One, Zero};

use crate::error::{input, Result};

/// Largest `n` accepted by [`mx_matrix`].
pub const MAX_MX_N: usize = 6;

/// Subsets of `{0, …, n−1}` as bit masks, by size and then
/// lexicographically on their sorted members.
pub fn canonical_subsets(n: usize) -> Vec<u64> {
    assert!(n < 64);
    let mut subsets: Vec<u64> = (0..1u64 << n).collect();
    subsets.sort_by_key(|&s| {
        let members: Vec<u32> = (0..n as u32).filter(|&i| s >> i & 1 == 1).collect();
        (members.len(), members)
    });
    subsets
}

/// Rank over the rationals, by exact Gaussian elimination.
pub fn rational_rank(m: &FoolingMatrix) -> usize {
    let n = m.size();
    let mut rows: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            m.row(i)
                .iter()
                .map(|&b| {
                    if b {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect();
    let mut rank = 0;
    for col in 0..n {
        let Some(pivot) = (rank..n).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let lead = rows[rank][col].clone();
        for x in rows[rank].iter_mut() {
            *x /= &lead;
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x -= &factor * p;
            }
        }
        rank += 1;
    }
    rank
}

/// The `2ⁿ × 2ⁿ` matrix with `M[Y][Z] = 1` iff `Y ∩ Z ≠ ∅`, subsets in
/// canonical order.
pub fn mx_matrix(n: usize) -> Result<FoolingMatrix> {
    if n > MAX_MX_N {
        return input(format!("mx_matrix supports n <= {MAX_MX_N}, got {n}"));
    }
    let subsets = canonical_subsets(n);
    Ok(FoolingMatrix::from_fn(subsets.len(), |i, j| {
        subsets[i] & subsets[j] != 0
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::{Alphabet, Nfa, Word};
    use crate::Error;

    #[test]
    fn subset_order() {
        assert_eq!(canonical_subsets(2), vec![0b00, 0b01, 0b10, 0b11]);
        assert_eq!(
            canonical_subsets(3),
            vec![0, 0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111]
        );
    }

    #[test]
    fn small_ranks() {
        let id = FoolingMatrix::from_fn(4, |i, j| i == j);
        assert_eq!(rational_rank(&id), 4);
        let ones = FoolingMatrix::from_fn(3, |_, _| true);
        assert_eq!(rational_rank(&ones), 1);
        assert_eq!(rational_rank(&FoolingMatrix::from_fn(0, |_, _| true)), 0);
        // rank 2 over Q, with a row that is the sum of the other two
        let m = FoolingMatrix::from_rows(vec![
            vec![true, false, true],
            vec![false, true, true],
            vec![true, true, true],
        ])
        .unwrap();
        assert_eq!(rational_rank(&m), 3);
        let m = FoolingMatrix::from_rows(vec![
            vec![true, false, false],
            vec![false, true, false],
            vec![true, true, false],
        ])
        .unwrap();
        assert_eq!(rational_rank(&m), 2);
    }

    #[test]
    fn mx_small() {
        let m = mx_matrix(1).unwrap();
        assert_eq!(format!("{m}"), "0 0\n0 1\n");
        assert_eq!(rational_rank(&mx_matrix(2).unwrap()), 3);
        assert!(mx_matrix(7).is_err());
    }

    #[test]
    fn fooling_violation_names_pair() {
        let s = Alphabet::indexed(1);
        let all = Nfa::universal(s.clone());
        let w = |v: Vec<usize>| Word(v);
        let set =
            FoolingSet::new(s, vec![(w(vec![]), w(vec![])), (w(vec![0]), w(vec![]))]).unwrap();
        match verify_fooling(&all, &set) {
            Err(Error::Verification(msg)) => assert!(msg.contains("(1, 2)"), "{msg}"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn repeated_pairs_rejected() {
        let s = Alphabet::indexed(1);
        let p = (Word(vec![0]), Word(vec![]));
        assert!(FoolingSet::new(s, vec![p.clone(), p]).is_err());
    }
}
