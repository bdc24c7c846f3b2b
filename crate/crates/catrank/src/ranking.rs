//! Ranking semantics derived from solved strengths: a total preorder on
//! arguments, pairwise and group comparison, and interval-backed certified
//! comparison.
//!
//! Ties under approximate arithmetic are handled with an explicit
//! `tie_epsilon`: adjacent values of the descending sort are merged into
//! one class when their gap is at most epsilon, and merging chains
//! transitively so the result is a genuine total preorder. Arguments with
//! identical attacker rows have bit-identical solved values, so they merge
//! even at epsilon 0.

use thiserror::Error;

use crate::af::ArgumentSet;
use crate::solver::{CertifiedBounds, StrengthVector};

/// Outcome of comparing two arguments in a ranking.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Comparison {
    StrictlyAbove,
    Equivalent,
    StrictlyBelow,
}

/// Outcome of a group comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroupComparison {
    /// The first set is at least as acceptable as the second.
    pub geq: bool,
    /// The comparison is strict; implies `geq`.
    pub strict: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RankingError {
    #[error("brute-force group comparison is capped at sets of size {cap}, got {got}")]
    GroupTooLarge { cap: usize, got: usize },
}

/// A total preorder on arguments as ordered equivalence classes, most
/// acceptable first, together with the strengths backing the order.
#[derive(Debug, Clone, PartialEq)]
pub struct Ranking {
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
    strengths: Vec<f64>,
    tie_epsilon: f64,
}

impl Ranking {
    /// Rank arguments by descending strength, merging adjacent values whose
    /// gap is at most `tie_epsilon` (chained transitively).
    pub fn from_strengths(v: &StrengthVector, tie_epsilon: f64) -> Self {
        Self::from_values(&v.values, tie_epsilon)
    }

    pub fn from_values(values: &[f64], tie_epsilon: f64) -> Self {
        assert!(
            tie_epsilon >= 0.0 && tie_epsilon.is_finite(),
            "tie_epsilon must be a nonnegative finite number"
        );
        let n = values.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_unstable_by(|&a, &b| values[b].total_cmp(&values[a]).then(a.cmp(&b)));

        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut prev_value = f64::INFINITY;
        for &x in &order {
            let value = values[x];
            if classes.is_empty() || prev_value - value > tie_epsilon {
                classes.push(vec![x]);
            } else {
                classes.last_mut().unwrap().push(x);
            }
            prev_value = value;
        }
        for class in &mut classes {
            class.sort_unstable();
        }
        let mut class_of = vec![0; n];
        for (c, class) in classes.iter().enumerate() {
            for &x in class {
                class_of[x] = c;
            }
        }
        Self {
            classes,
            class_of,
            strengths: values.to_vec(),
            tie_epsilon,
        }
    }

    pub fn n(&self) -> usize {
        self.class_of.len()
    }

    /// Equivalence classes, most acceptable first; members sorted by index.
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    /// Position of `x`'s class (0 = most acceptable).
    pub fn class_index(&self, x: usize) -> usize {
        self.class_of[x]
    }

    /// The solved value backing the order of `x`.
    pub fn strength(&self, x: usize) -> f64 {
        self.strengths[x]
    }

    pub fn tie_epsilon(&self) -> f64 {
        self.tie_epsilon
    }

    pub fn compare(&self, x: usize, y: usize) -> Comparison {
        match self.class_of[x].cmp(&self.class_of[y]) {
            std::cmp::Ordering::Less => Comparison::StrictlyAbove,
            std::cmp::Ordering::Equal => Comparison::Equivalent,
            std::cmp::Ordering::Greater => Comparison::StrictlyBelow,
        }
    }

    /// Group comparison: `s1` is at least as acceptable as `s2` iff some
    /// injection from `s2` into `s1` maps every element to one ranked at
    /// least as high. Over a total preorder that holds exactly when the
    /// class-sorted sequences dominate position-wise, which is what is
    /// checked here; strictness follows the two-clause definition (size
    /// difference, or some position strictly higher).
    pub fn group_compare(&self, s1: &ArgumentSet, s2: &ArgumentSet) -> GroupComparison {
        if s1.len() < s2.len() {
            return GroupComparison {
                geq: false,
                strict: false,
            };
        }
        let mut k1: Vec<usize> = s1.iter().map(|&x| self.class_of[x]).collect();
        let mut k2: Vec<usize> = s2.iter().map(|&x| self.class_of[x]).collect();
        k1.sort_unstable();
        k2.sort_unstable();
        let geq = k1.iter().zip(&k2).all(|(a, b)| a <= b);
        let strict = geq && (s1.len() > s2.len() || k1.iter().zip(&k2).any(|(a, b)| a < b));
        GroupComparison { geq, strict }
    }

    /// Literal enumeration of all injective mappings from `s2` into `s1`,
    /// kept as a permanent oracle for [`Ranking::group_compare`]. Sets are
    /// capped at 8 elements.
    pub fn group_compare_bruteforce(
        &self,
        s1: &ArgumentSet,
        s2: &ArgumentSet,
    ) -> Result<GroupComparison, RankingError> {
        const CAP: usize = 8;
        for s in [s1, s2] {
            if s.len() > CAP {
                return Err(RankingError::GroupTooLarge {
                    cap: CAP,
                    got: s.len(),
                });
            }
        }
        if s1.len() < s2.len() {
            return Ok(GroupComparison {
                geq: false,
                strict: false,
            });
        }
        let targets: Vec<usize> = s1.iter().copied().collect();
        let sources: Vec<usize> = s2.iter().copied().collect();
        let mut used = vec![false; targets.len()];
        let mut geq = false;
        let mut strict_witness = false;
        self.enumerate_injections(
            &sources,
            &targets,
            0,
            false,
            &mut used,
            &mut geq,
            &mut strict_witness,
        );
        let strict = geq && (s1.len() > s2.len() || strict_witness);
        Ok(GroupComparison { geq, strict })
    }

    #[allow(clippy::too_many_arguments)]
    fn enumerate_injections(
        &self,
        sources: &[usize],
        targets: &[usize],
        pos: usize,
        any_strict: bool,
        used: &mut [bool],
        geq: &mut bool,
        strict_witness: &mut bool,
    ) {
        if pos == sources.len() {
            *geq = true;
            if any_strict {
                *strict_witness = true;
            }
            return;
        }
        // Prune once both facts are established.
        if *geq && *strict_witness {
            return;
        }
        for (t, &target) in targets.iter().enumerate() {
            if used[t] {
                continue;
            }
            match self.compare(target, sources[pos]) {
                Comparison::StrictlyBelow => continue,
                cmp => {
                    used[t] = true;
                    self.enumerate_injections(
                        sources,
                        targets,
                        pos + 1,
                        any_strict || cmp == Comparison::StrictlyAbove,
                        used,
                        geq,
                        strict_witness,
                    );
                    used[t] = false;
                }
            }
        }
    }
}

/// Outcome of an interval-backed comparison. A strict relation is only
/// asserted when the intervals separate; equality only when both intervals
/// are the same single point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertifiedOrder {
    /// `v(x) > v(y)` proven: `lower(x) > upper(y)`.
    Above,
    /// `v(x) < v(y)` proven.
    Below,
    /// `v(x) = v(y)` proven (both intervals are the same point).
    Equivalent,
    /// `v(x) <= v(y)` proven, but neither `<` nor `=`.
    AtMost,
    /// `v(x) >= v(y)` proven, but neither `>` nor `=`.
    AtLeast,
    /// The intervals overlap; the order is numerically unresolved.
    Unresolved,
}

pub fn compare_certified(bounds: &CertifiedBounds, x: usize, y: usize) -> CertifiedOrder {
    let (lx, ux) = (bounds.lower[x], bounds.upper[x]);
    let (ly, uy) = (bounds.lower[y], bounds.upper[y]);
    if lx > uy {
        CertifiedOrder::Above
    } else if ly > ux {
        CertifiedOrder::Below
    } else if lx == ux && ly == uy && lx == ly {
        CertifiedOrder::Equivalent
    } else if ux <= ly {
        CertifiedOrder::AtMost
    } else if uy <= lx {
        CertifiedOrder::AtLeast
    } else {
        CertifiedOrder::Unresolved
    }
}
