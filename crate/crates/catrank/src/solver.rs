//! Fixed-point computation of the categoriser strength valuation.
//!
//! Every argument's strength must satisfy `v[i] = 1 / (1 + s)` where `s` is
//! the sum of its attackers' strengths. The update map sending a strength
//! vector to the recomputed one is continuous and antitone on `[0,1]^n` and
//! has exactly one fixed point there; iterating it from any start in
//! `[0,1]^n` converges to that fixed point.
//!
//! Two solving modes are provided:
//!
//! * [`solve`] iterates from a start vector (all-ones by default) until the
//!   max-norm step change drops below the tolerance.
//! * [`solve_certified`] iterates from the zero vector instead. Because the
//!   map is antitone, the even iterates increase toward the fixed point and
//!   the odd iterates decrease toward it, so each (even, odd) pair brackets
//!   the fixed point per argument. The bracket widths are the certified
//!   error statement; rounding error of double arithmetic itself is not
//!   formally bounded.
//!
//! Iteration is synchronous: every coordinate of step `k` is computed from
//! the full vector of step `k-1`, never from a half-updated one.

use thiserror::Error;

use crate::af::AttackMatrix;

/// Iteration parameters. `init = None` starts from the all-ones vector.
#[derive(Debug, Clone, PartialEq)]
pub struct SolveConfig {
    /// Stopping threshold for the max-norm step change (resp. bracket width).
    pub tolerance: f64,
    pub max_iterations: usize,
    /// Optional start vector; entries must lie in `[0,1]`.
    pub init: Option<Vec<f64>>,
}

impl Default for SolveConfig {
    fn default() -> Self {
        Self {
            tolerance: 1e-9,
            max_iterations: 10_000,
            init: None,
        }
    }
}

impl SolveConfig {
    pub fn with_tolerance(tolerance: f64) -> Self {
        Self {
            tolerance,
            ..Self::default()
        }
    }

    fn validate(&self, n: usize) -> Result<(), SolveError> {
        if !(self.tolerance > 0.0 && self.tolerance.is_finite()) {
            return Err(SolveError::InvalidConfig(format!(
                "tolerance must be a positive finite number, got {}",
                self.tolerance
            )));
        }
        if self.max_iterations == 0 {
            return Err(SolveError::InvalidConfig(
                "max_iterations must be at least 1".into(),
            ));
        }
        if let Some(init) = &self.init {
            check_vector(init, n)?;
        }
        Ok(())
    }
}

/// A solved (or best-effort) strength assignment.
#[derive(Debug, Clone, PartialEq)]
pub struct StrengthVector {
    /// Per-argument strengths in `(0, 1]`; exactly 1 for unattacked arguments.
    pub values: Vec<f64>,
    /// Number of update steps performed.
    pub iterations: usize,
    /// Max-norm of `v - F(v)` at the returned vector.
    pub residual: f64,
}

/// Per-argument interval `[lower, upper]` bracketing the unique fixed point.
#[derive(Debug, Clone, PartialEq)]
pub struct CertifiedBounds {
    pub lower: Vec<f64>,
    pub upper: Vec<f64>,
    /// Number of update steps performed.
    pub iterations: usize,
}

impl CertifiedBounds {
    /// Max-norm interval width.
    pub fn width(&self) -> f64 {
        self.lower
            .iter()
            .zip(&self.upper)
            .map(|(lo, hi)| hi - lo)
            .fold(0.0, f64::max)
    }

    pub fn midpoint(&self) -> Vec<f64> {
        self.lower
            .iter()
            .zip(&self.upper)
            .map(|(lo, hi)| (lo + hi) / 2.0)
            .collect()
    }
}

#[derive(Debug, Clone, Error)]
pub enum SolveError {
    #[error("vector length {got} does not match framework size {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("strength entry {index} is {value}, outside [0, 1]")]
    EntryOutOfRange { index: usize, value: f64 },
    #[error("invalid solve configuration: {0}")]
    InvalidConfig(String),
    #[error("no convergence within {} iterations (residual {})", last.iterations, last.residual)]
    NonConvergence { last: Box<StrengthVector> },
    #[error("certified iteration did not reach tolerance within {} steps (width {})", bounds.iterations, bounds.width())]
    CertifiedNonConvergence { bounds: Box<CertifiedBounds> },
}

fn check_vector(v: &[f64], n: usize) -> Result<(), SolveError> {
    if v.len() != n {
        return Err(SolveError::DimensionMismatch {
            expected: n,
            got: v.len(),
        });
    }
    for (index, &value) in v.iter().enumerate() {
        if !(0.0..=1.0).contains(&value) {
            return Err(SolveError::EntryOutOfRange { index, value });
        }
    }
    Ok(())
}

/// One synchronous update: recompute every strength from its attackers.
///
/// Attacker strengths are accumulated in ascending value order. That fixes
/// the floating-point result as a function of the attacker value multiset
/// (arguments with value-identical attacker rows get bit-identical results)
/// and keeps the computed map antitone, which the certified brackets and
/// the ranking's exact-tie behaviour rely on.
pub fn categoriser_step(matrix: &AttackMatrix, v: &[f64]) -> Result<Vec<f64>, SolveError> {
    check_vector(v, matrix.n())?;
    let mut out = vec![0.0; matrix.n()];
    let mut buf = Vec::new();
    step_into(matrix, v, &mut out, &mut buf);
    Ok(out)
}

fn step_into(matrix: &AttackMatrix, v: &[f64], out: &mut [f64], buf: &mut Vec<f64>) {
    for (i, row) in matrix.rows().iter().enumerate() {
        buf.clear();
        buf.extend(row.iter().map(|&j| v[j]));
        buf.sort_unstable_by(f64::total_cmp);
        let mut sum = 0.0;
        for x in buf.iter() {
            sum += x;
        }
        out[i] = 1.0 / (1.0 + sum);
    }
}

fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

/// Max-norm of `v - F(v)`: how far `v` is from solving the equations.
pub fn residual(matrix: &AttackMatrix, v: &[f64]) -> Result<f64, SolveError> {
    let next = categoriser_step(matrix, v)?;
    Ok(max_abs_diff(v, &next))
}

/// Iterate the update map until the step change drops below the tolerance.
///
/// Non-convergence within `max_iterations` is an error carrying the last
/// iterate, so callers can distinguish it from success but still inspect
/// the best available vector.
pub fn solve(matrix: &AttackMatrix, config: &SolveConfig) -> Result<StrengthVector, SolveError> {
    let n = matrix.n();
    config.validate(n)?;
    let mut v = config.init.clone().unwrap_or_else(|| vec![1.0; n]);
    let mut next = vec![0.0; n];
    let mut buf = Vec::new();
    for k in 1..=config.max_iterations {
        step_into(matrix, &v, &mut next, &mut buf);
        let delta = max_abs_diff(&v, &next);
        std::mem::swap(&mut v, &mut next);
        if delta <= config.tolerance {
            let residual = {
                step_into(matrix, &v, &mut next, &mut buf);
                max_abs_diff(&v, &next)
            };
            return Ok(StrengthVector {
                values: v,
                iterations: k,
                residual,
            });
        }
    }
    step_into(matrix, &v, &mut next, &mut buf);
    let residual = max_abs_diff(&v, &next);
    Err(SolveError::NonConvergence {
        last: Box::new(StrengthVector {
            values: v,
            iterations: config.max_iterations,
            residual,
        }),
    })
}

/// Iterate from the zero vector, collecting even iterates as lower bounds
/// and odd iterates as upper bounds, until the max-norm bracket width drops
/// to the tolerance. Returns the bracket midpoints as the strength estimate
/// together with the final bounds.
///
/// The start vector is fixed; `config.init` is ignored here.
pub fn solve_certified(
    matrix: &AttackMatrix,
    config: &SolveConfig,
) -> Result<(StrengthVector, CertifiedBounds), SolveError> {
    let n = matrix.n();
    config.validate(n)?;
    let mut lower = vec![0.0; n];
    let mut upper = vec![1.0; n];
    let mut u = vec![0.0; n];
    let mut next = vec![0.0; n];
    let mut buf = Vec::new();
    let mut iterations = 0;
    loop {
        if iterations >= config.max_iterations {
            return Err(SolveError::CertifiedNonConvergence {
                bounds: Box::new(CertifiedBounds {
                    lower,
                    upper,
                    iterations,
                }),
            });
        }
        step_into(matrix, &u, &mut next, &mut buf);
        std::mem::swap(&mut u, &mut next);
        iterations += 1;
        if iterations % 2 == 0 {
            lower.copy_from_slice(&u);
        } else {
            upper.copy_from_slice(&u);
        }
        // The first even/odd pair is only complete after two steps; before
        // that `upper - lower` still spans the whole unit interval.
        if iterations >= 2 || n == 0 {
            let width = max_abs_diff(&lower, &upper);
            if width <= config.tolerance {
                break;
            }
        }
    }
    let bounds = CertifiedBounds {
        lower,
        upper,
        iterations,
    };
    let values = bounds.midpoint();
    let residual = residual(matrix, &values)?;
    Ok((
        StrengthVector {
            values,
            iterations,
            residual,
        },
        bounds,
    ))
}
