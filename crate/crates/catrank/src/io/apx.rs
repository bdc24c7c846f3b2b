//! APX format: one `arg(NAME).` fact per argument, one `att(A,B).` fact per
//! attack (A attacks B). `%` starts a comment to end of line; blank lines
//! are ignored. The order of `arg` facts fixes the index order.

use std::collections::HashMap;

use super::{is_valid_name, ParseError};
use crate::af::ArgumentationFramework;

pub fn parse_apx(source: &str) -> Result<ArgumentationFramework, ParseError> {
    enum Fact<'a> {
        Arg(&'a str),
        Att(&'a str, &'a str),
    }

    let mut facts = Vec::new();
    for (lineno, raw) in source.lines().enumerate() {
        let lineno = lineno + 1;
        let line = match raw.find('%') {
            Some(pos) => &raw[..pos],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let fact = line
            .strip_suffix('.')
            .ok_or_else(|| ParseError::new(lineno, format!("missing terminating `.` in `{line}`")))?
            .trim();
        if let Some(body) = strip_functor(fact, "arg") {
            let name = body.trim();
            if !is_valid_name(name) {
                return Err(ParseError::new(
                    lineno,
                    format!("invalid argument name `{name}` (expected [A-Za-z0-9_]+)"),
                ));
            }
            facts.push((lineno, Fact::Arg(name)));
        } else if let Some(body) = strip_functor(fact, "att") {
            let (a, b) = body.split_once(',').ok_or_else(|| {
                ParseError::new(lineno, format!("expected `att(A,B).`, got `{line}`"))
            })?;
            let (a, b) = (a.trim(), b.trim());
            for name in [a, b] {
                if !is_valid_name(name) {
                    return Err(ParseError::new(
                        lineno,
                        format!("invalid argument name `{name}` (expected [A-Za-z0-9_]+)"),
                    ));
                }
            }
            facts.push((lineno, Fact::Att(a, b)));
        } else {
            return Err(ParseError::new(
                lineno,
                format!("expected `arg(NAME).` or `att(A,B).`, got `{line}`"),
            ));
        }
    }

    // arg facts fix the index order; att facts may reference forward.
    let mut names: Vec<String> = Vec::new();
    let mut index: HashMap<&str, usize> = HashMap::new();
    for (lineno, fact) in &facts {
        if let Fact::Arg(name) = fact {
            if index.insert(name, names.len()).is_some() {
                return Err(ParseError::new(
                    *lineno,
                    format!("duplicate argument declaration `{name}`"),
                ));
            }
            names.push((*name).to_string());
        }
    }
    let mut attacks = Vec::new();
    for (lineno, fact) in &facts {
        if let Fact::Att(a, b) = fact {
            let resolve = |name: &str| {
                index.get(name).copied().ok_or_else(|| {
                    ParseError::new(*lineno, format!("attack references undeclared argument `{name}`"))
                })
            };
            attacks.push((resolve(a)?, resolve(b)?));
        }
    }
    ArgumentationFramework::from_index_pairs(names, attacks)
        .map_err(|e| ParseError::new(0, e.to_string()))
}

fn strip_functor<'a>(fact: &'a str, functor: &str) -> Option<&'a str> {
    fact.strip_prefix(functor)?
        .trim_start()
        .strip_prefix('(')?
        .strip_suffix(')')
}

/// Canonical APX emission: all `arg` facts in index order, then all `att`
/// facts sorted lexicographically by (attacker name, target name). LF line
/// endings, one fact per line. An empty framework emits empty text.
pub fn emit_apx(af: &ArgumentationFramework) -> String {
    let mut out = String::new();
    for name in af.names() {
        out.push_str("arg(");
        out.push_str(name);
        out.push_str(").\n");
    }
    let mut atts: Vec<(&str, &str)> = af.attacks().map(|(a, b)| (af.name(a), af.name(b))).collect();
    atts.sort_unstable();
    for (a, b) in atts {
        out.push_str("att(");
        out.push_str(a);
        out.push(',');
        out.push_str(b);
        out.push_str(").\n");
    }
    out
}
