//! Text formats: APX and TGF parsing, APX/TGF/DOT emission, and the
//! machine-readable result report.

mod apx;
mod dot;
mod report;
mod tgf;

pub use apx::{emit_apx, parse_apx};
pub use dot::emit_dot;
pub use report::emit_report;
pub use tgf::{emit_tgf, parse_tgf};

use thiserror::Error;

/// Severity of a parse diagnostic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Severity {
    Error,
    Warning,
}

/// A diagnostic anchored to a 1-based line of the source text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseDiagnostic {
    pub line: usize,
    pub message: String,
    pub severity: Severity,
}

/// A fatal parse diagnostic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {}: {}", .0.line, .0.message)]
pub struct ParseError(pub ParseDiagnostic);

impl ParseError {
    pub(crate) fn new(line: usize, message: impl Into<String>) -> Self {
        Self(ParseDiagnostic {
            line,
            message: message.into(),
            severity: Severity::Error,
        })
    }

    pub fn line(&self) -> usize {
        self.0.line
    }
}

/// Emission errors: the only failure mode is inconsistent dimensions
/// between a framework and the numeric data attached to it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmitError {
    #[error("{what} has {got} entries but the framework has {expected} arguments")]
    DimensionMismatch {
        what: &'static str,
        expected: usize,
        got: usize,
    },
}

/// Argument names accepted by the text formats: `[A-Za-z0-9_]+`.
pub(crate) fn is_valid_name(name: &str) -> bool {
    !name.is_empty() && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}
