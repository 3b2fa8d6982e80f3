//! Direct minimum-gap computation and the threshold decision problem.

use std::fmt;

use crate::numeric::{Extended, Scalar};
use crate::ranksum;

/// Outcome of a decision problem.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Decision {
    Yes,
    No,
}

impl Decision {
    pub fn is_yes(self) -> bool {
        self == Decision::Yes
    }
}

impl fmt::Display for Decision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Decision::Yes => "YES",
            Decision::No => "NO",
        })
    }
}

/// Result of [`min_gap_at_least`]: the gap, the threshold it was tested
/// against, and the verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapReport {
    pub min_gap: Extended,
    pub threshold: Scalar,
    pub decision: Decision,
}

/// Minimum difference between consecutive elements of the sorted sequence.
///
/// `Infinity` when there are fewer than two elements (the gap set is empty);
/// zero whenever the sequence contains duplicates.
pub fn min_gap(values: &[Scalar]) -> Extended {
    let view = ranksum::sort_view(values);
    let sorted = view.sorted();
    let mut best: Option<Scalar> = None;
    for pair in sorted.windows(2) {
        let gap = &pair[1] - &pair[0];
        best = Some(match best {
            Some(current) if current <= gap => current,
            _ => gap,
        });
    }
    match best {
        Some(gap) => Extended::Finite(gap),
        None => Extended::Infinity,
    }
}

/// Is every gap at least `g`? Vacuously YES for fewer than two elements, and
/// immediately YES for `g <= 0` since gaps of a sorted sequence are never
/// negative.
pub fn min_gap_at_least(values: &[Scalar], g: &Scalar) -> GapReport {
    let min_gap = min_gap(values);
    let decision = if min_gap.is_at_least(g) {
        Decision::Yes
    } else {
        Decision::No
    };
    GapReport {
        min_gap,
        threshold: g.clone(),
        decision,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    fn seq(values: &[i64]) -> Vec<Scalar> {
        values.iter().map(|&v| Scalar::from(v)).collect()
    }

    #[test]
    fn min_gap_examples() {
        assert_eq!(min_gap(&seq(&[0, 5, 12])), Extended::Finite(Scalar::from(5)));
        assert_eq!(min_gap(&seq(&[7])), Extended::Infinity);
        assert_eq!(min_gap(&seq(&[2, 7, 2])), Extended::Finite(Scalar::zero()));
    }

    #[test]
    fn threshold_examples() {
        assert_eq!(min_gap_at_least(&seq(&[0, 5, 12]), &Scalar::from(5)).decision, Decision::Yes);
        assert_eq!(min_gap_at_least(&seq(&[0, 3, 12]), &Scalar::from(5)).decision, Decision::No);
        assert_eq!(min_gap_at_least(&seq(&[7]), &Scalar::from(1)).decision, Decision::Yes);
        assert_eq!(min_gap_at_least(&[], &Scalar::from(1)).decision, Decision::Yes);
    }

    #[test]
    fn non_positive_threshold_is_always_yes() {
        let values = seq(&[4, 4, 9]);
        assert_eq!(min_gap_at_least(&values, &Scalar::zero()).decision, Decision::Yes);
        assert_eq!(min_gap_at_least(&values, &Scalar::from(-3)).decision, Decision::Yes);
    }

    #[test]
    fn agrees_with_all_pairs_oracle() {
        let cases: &[&[i64]] = &[
            &[],
            &[3],
            &[8, 1],
            &[0, 5, 12],
            &[10, 10, 10],
            &[-4, 7, -4, 2, 19],
        ];
        for case in cases {
            let values = seq(case);
            assert_eq!(min_gap(&values), oracle::min_gap_all_pairs(&values), "mismatch on {case:?}");
        }
    }
}
