//! Classical extension semantics: grounded, complete, preferred, stable.
//!
//! Grounded is the least fixed point of the characteristic function and is
//! computed by iteration, with no size limit. The other semantics are
//! enumerated exhaustively over conflict-free candidate sets (backtracking
//! with attack-based pruning, bitmask representation) and are capped at
//! [`ENUMERATION_CAP`] arguments; exceeding the cap is an explicit error,
//! never a silent truncation.

use thiserror::Error;

use crate::af::{ArgumentSet, ArgumentationFramework};

/// Largest framework the exhaustive enumerations accept.
pub const ENUMERATION_CAP: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Semantics {
    Grounded,
    Complete,
    Preferred,
    Stable,
}

impl Semantics {
    pub fn name(self) -> &'static str {
        match self {
            Semantics::Grounded => "grounded",
            Semantics::Complete => "complete",
            Semantics::Preferred => "preferred",
            Semantics::Stable => "stable",
        }
    }
}

/// All extensions of a framework under one semantics, sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionSet {
    pub semantics: Semantics,
    pub extensions: Vec<ArgumentSet>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtensionsError {
    #[error("extension enumeration handles at most {cap} arguments, framework has {n}")]
    CapExceeded { n: usize, cap: usize },
}

/// The grounded extension: iterate the characteristic function from the
/// empty set until it stabilises (at most n rounds).
pub fn grounded(af: &ArgumentationFramework) -> ArgumentSet {
    let mut current = ArgumentSet::new();
    loop {
        let next = af.characteristic_function(&current);
        if next == current {
            return current;
        }
        current = next;
    }
}

/// Conflict-free and defending all its members.
pub fn is_admissible(af: &ArgumentationFramework, s: &ArgumentSet) -> bool {
    af.is_conflict_free(s) && s.is_subset(&af.characteristic_function(s))
}

pub fn complete_extensions(af: &ArgumentationFramework) -> Result<ExtensionSet, ExtensionsError> {
    let masks = complete_masks(af)?;
    Ok(collect(af, Semantics::Complete, masks))
}

/// Preferred extensions are the set-maximal complete extensions.
pub fn preferred_extensions(af: &ArgumentationFramework) -> Result<ExtensionSet, ExtensionsError> {
    let mut complete = complete_masks(af)?;
    complete.sort_unstable_by_key(|m| std::cmp::Reverse(m.count_ones()));
    let mut maximal: Vec<u64> = Vec::new();
    for m in complete {
        if !maximal.iter().any(|&kept| m & kept == m) {
            maximal.push(m);
        }
    }
    Ok(collect(af, Semantics::Preferred, maximal))
}

pub fn stable_extensions(af: &ArgumentationFramework) -> Result<ExtensionSet, ExtensionsError> {
    let ctx = MaskContext::new(af)?;
    // n ≤ ENUMERATION_CAP < 64, so the shift cannot overflow
    let all = (1u64 << af.n()) - 1;
    let masks = ctx
        .conflict_free()
        .into_iter()
        .filter(|&m| ctx.attacked_by(m) == all & !m)
        .collect();
    Ok(collect(af, Semantics::Stable, masks))
}

fn complete_masks(af: &ArgumentationFramework) -> Result<Vec<u64>, ExtensionsError> {
    let ctx = MaskContext::new(af)?;
    Ok(ctx
        .conflict_free()
        .into_iter()
        .filter(|&m| ctx.characteristic(m) == m)
        .collect())
}

struct MaskContext {
    n: usize,
    attackers: Vec<u64>,
    attacked: Vec<u64>,
}

impl MaskContext {
    fn new(af: &ArgumentationFramework) -> Result<Self, ExtensionsError> {
        let n = af.n();
        if n > ENUMERATION_CAP {
            return Err(ExtensionsError::CapExceeded {
                n,
                cap: ENUMERATION_CAP,
            });
        }
        let mut attackers = vec![0u64; n];
        let mut attacked = vec![0u64; n];
        for (a, b) in af.attacks() {
            attackers[b] |= 1 << a;
            attacked[a] |= 1 << b;
        }
        Ok(Self {
            n,
            attackers,
            attacked,
        })
    }

    /// All conflict-free subsets, by backtracking: a candidate argument is
    /// skipped whenever it attacks or is attacked by the current set.
    fn conflict_free(&self) -> Vec<u64> {
        let mut out = Vec::new();
        let mut stack = vec![(0usize, 0u64)];
        while let Some((i, mask)) = stack.pop() {
            if i == self.n {
                out.push(mask);
                continue;
            }
            let bit = 1u64 << i;
            // branch: exclude i
            stack.push((i + 1, mask));
            // branch: include i if it stays conflict-free (no attack between
            // i and the current set, no self-attack)
            let conflicts = self.attackers[i] | self.attacked[i];
            if conflicts & (mask | bit) == 0 {
                stack.push((i + 1, mask | bit));
            }
        }
        out
    }

    fn attacked_by(&self, mask: u64) -> u64 {
        let mut out = 0;
        let mut m = mask;
        while m != 0 {
            let i = m.trailing_zeros() as usize;
            out |= self.attacked[i];
            m &= m - 1;
        }
        out
    }

    fn characteristic(&self, mask: u64) -> u64 {
        let counter = self.attacked_by(mask);
        let mut out = 0;
        for i in 0..self.n {
            if self.attackers[i] & !counter == 0 {
                out |= 1 << i;
            }
        }
        out
    }
}

fn collect(af: &ArgumentationFramework, semantics: Semantics, masks: Vec<u64>) -> ExtensionSet {
    let mut extensions: Vec<ArgumentSet> = masks
        .into_iter()
        .map(|m| (0..af.n()).filter(|&i| m & (1 << i) != 0).collect())
        .collect();
    extensions.sort();
    extensions.dedup();
    ExtensionSet {
        semantics,
        extensions,
    }
}
