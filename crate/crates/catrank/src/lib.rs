//! Categoriser strength valuation and ranking semantics for abstract
//! argumentation frameworks.
//!
//! The crate models frameworks (arguments plus an attack relation), solves
//! the categoriser equations `v[i] = 1 / (1 + sum of attacker strengths)`
//! by fixed-point iteration with optional certified error intervals,
//! derives the induced ranking, checks the nine ranking axioms with a
//! randomized falsifier, and computes the classical extension semantics
//! for side-by-side comparison. APX and TGF text formats are supported on
//! the way in, APX/TGF/DOT and a JSON report on the way out.

pub mod af;
pub mod axioms;
pub mod extensions;
pub mod generator;
pub mod io;
pub mod ranking;
pub mod solver;

pub use af::{AfError, ArgumentSet, ArgumentationFramework, AttackMatrix};
pub use ranking::{Comparison, GroupComparison, Ranking};
pub use solver::{CertifiedBounds, SolveConfig, SolveError, StrengthVector};
