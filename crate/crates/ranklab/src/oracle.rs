//! Brute-force reference implementations.
//!
//! These share no algorithmic idea with the fast paths: ranks are computed by
//! counting (no sorting) and the minimum gap by scanning all pairs. Both are
//! quadratic on purpose; they exist to be trusted, not to be fast.

use std::cmp::Ordering;
use std::ops::Add;

use crate::numeric::{Extended, Scalar};

/// Even-rank-sum computed without sorting.
///
/// Each element gets the stable rank `1 + #{j : a_j < a_i} + #{j < i : a_j = a_i}`;
/// the result is the sum of elements whose rank is even. One three-way
/// comparison per ordered pair, `m(m-1)` in total.
pub fn even_rank_sum_counting(values: &[Scalar]) -> Scalar {
    counting_even_rank_sum_generic(values).unwrap_or_else(Scalar::zero)
}

pub(crate) fn counting_even_rank_sum_generic<T>(values: &[T]) -> Option<T>
where
    T: Clone + Ord + Add<Output = T>,
{
    let mut sum: Option<T> = None;
    for (i, value) in values.iter().enumerate() {
        if stable_rank(values, i) % 2 == 0 {
            sum = Some(match sum {
                Some(acc) => acc + value.clone(),
                None => value.clone(),
            });
        }
    }
    sum
}

/// Stable 1-based rank of `values[i]`: position it would occupy after a
/// stable sort.
pub(crate) fn stable_rank<T: Ord>(values: &[T], i: usize) -> usize {
    let mut rank = 1;
    for (j, other) in values.iter().enumerate() {
        if j == i {
            continue;
        }
        match other.cmp(&values[i]) {
            Ordering::Less => rank += 1,
            Ordering::Equal if j < i => rank += 1,
            _ => {}
        }
    }
    rank
}

/// Minimum pairwise absolute difference; `Infinity` for fewer than two elements.
pub fn min_gap_all_pairs(values: &[Scalar]) -> Extended {
    let mut best: Option<Scalar> = None;
    for i in 0..values.len() {
        for j in i + 1..values.len() {
            let diff = (&values[i] - &values[j]).abs();
            best = Some(match best {
                Some(current) if current <= diff => current,
                _ => diff,
            });
        }
    }
    match best {
        Some(value) => Extended::Finite(value),
        None => Extended::Infinity,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(values: &[i64]) -> Vec<Scalar> {
        values.iter().map(|&v| Scalar::from(v)).collect()
    }

    #[test]
    fn counting_handles_ties_stably() {
        assert_eq!(even_rank_sum_counting(&seq(&[2, 2])), Scalar::from(2));
    }

    #[test]
    fn counting_matches_hand_ranked_example() {
        // ranks of (3,1,2,4) are (3,1,2,4); even ranks hold 2 and 4
        assert_eq!(even_rank_sum_counting(&seq(&[3, 1, 2, 4])), Scalar::from(6));
    }

    #[test]
    fn counting_empty_is_zero() {
        assert_eq!(even_rank_sum_counting(&[]), Scalar::zero());
    }

    #[test]
    fn stable_rank_is_a_bijection() {
        for values in [vec![0, 0, 0], vec![2, 1, 2, 1], vec![5], vec![3, 1, 4, 1, 5, 9, 2, 6]] {
            let values = seq(&values);
            let mut ranks: Vec<usize> = (0..values.len()).map(|i| stable_rank(&values, i)).collect();
            ranks.sort_unstable();
            assert_eq!(ranks, (1..=values.len()).collect::<Vec<_>>());
        }
    }

    #[test]
    fn all_pairs_examples() {
        assert_eq!(min_gap_all_pairs(&seq(&[0, 5, 12])), Extended::Finite(Scalar::from(5)));
        assert_eq!(min_gap_all_pairs(&seq(&[1, 1])), Extended::Finite(Scalar::zero()));
        assert_eq!(min_gap_all_pairs(&seq(&[9])), Extended::Infinity);
        assert_eq!(min_gap_all_pairs(&[]), Extended::Infinity);
    }
}
