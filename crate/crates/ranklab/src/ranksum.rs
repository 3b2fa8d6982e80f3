//! Sorting-based rank sums.
//!
//! The sort is a hand-rolled top-down merge sort over an index permutation:
//! comparison-based, stable, and within `m * ceil(log2 m)` comparisons in the
//! worst case. That bound is contractual — the cost model counts comparisons
//! against it — so no `sort_unstable` shortcut here.

use std::cmp::Ordering;
use std::ops::Add;

use crate::numeric::Scalar;

/// A sorting permutation together with the values it produces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SortedView {
    permutation: Vec<usize>,
    sorted: Vec<Scalar>,
}

impl SortedView {
    /// Indices into the source sequence, in sorted order (0-based):
    /// `sorted()[i] == source[permutation()[i]]`.
    pub fn permutation(&self) -> &[usize] {
        &self.permutation
    }

    pub fn sorted(&self) -> &[Scalar] {
        &self.sorted
    }

    pub fn len(&self) -> usize {
        self.sorted.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sorted.is_empty()
    }
}

/// Sums of the values at even and odd positions (1-based) of the sorted order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankSumResult {
    pub even_sum: Scalar,
    pub odd_sum: Scalar,
    pub len: usize,
}

pub fn sort_view(values: &[Scalar]) -> SortedView {
    let permutation = sort_permutation(values);
    let sorted = permutation.iter().map(|&i| values[i].clone()).collect();
    SortedView { permutation, sorted }
}

/// Both rank sums of a sequence of any length; the sums do not depend on how
/// the sort broke ties.
pub fn rank_sums(values: &[Scalar]) -> RankSumResult {
    let view = sort_view(values);
    let (even, odd) = split_rank_sums(view.sorted());
    RankSumResult {
        even_sum: even.unwrap_or_else(Scalar::zero),
        odd_sum: odd.unwrap_or_else(Scalar::zero),
        len: values.len(),
    }
}

/// Sum of the values at even sorted positions; zero when none exist.
pub fn even_rank_sum(values: &[Scalar]) -> Scalar {
    let view = sort_view(values);
    sum_every_other(view.sorted(), 1).unwrap_or_else(Scalar::zero)
}

/// Stable merge sort producing the sorting permutation without moving values.
pub(crate) fn sort_permutation<T: Ord>(values: &[T]) -> Vec<usize> {
    let mut indices: Vec<usize> = (0..values.len()).collect();
    let mut scratch = indices.clone();
    merge_sort(&mut indices, &mut scratch, values);
    indices
}

fn merge_sort<T: Ord>(indices: &mut [usize], scratch: &mut [usize], values: &[T]) {
    let len = indices.len();
    if len <= 1 {
        return;
    }
    let mid = len / 2;
    merge_sort(&mut indices[..mid], &mut scratch[..mid], values);
    merge_sort(&mut indices[mid..], &mut scratch[mid..], values);

    let mut left = 0;
    let mut right = mid;
    for slot in scratch.iter_mut() {
        // Compare only while both runs are non-empty: at most len - 1
        // comparisons per merge. Ties take from the left run (stable).
        let take_left = left < mid
            && (right == len
                || values[indices[left]].cmp(&values[indices[right]]) != Ordering::Greater);
        if take_left {
            *slot = indices[left];
            left += 1;
        } else {
            *slot = indices[right];
            right += 1;
        }
    }
    indices.copy_from_slice(scratch);
}

/// Sums `sorted[start], sorted[start + 2], ...` with one addition per extra
/// term; `None` when the range is empty.
pub(crate) fn sum_every_other<T>(sorted: &[T], start: usize) -> Option<T>
where
    T: Clone + Add<Output = T>,
{
    sorted.iter().skip(start).step_by(2).fold(None, |acc, value| {
        Some(match acc {
            Some(sum) => sum + value.clone(),
            None => value.clone(),
        })
    })
}

/// `(even positions sum, odd positions sum)` of an already-sorted slice.
pub(crate) fn split_rank_sums<T>(sorted: &[T]) -> (Option<T>, Option<T>)
where
    T: Clone + Add<Output = T>,
{
    (sum_every_other(sorted, 1), sum_every_other(sorted, 0))
}
