//! TGF format: node lines `ID [LABEL]` before a single `#` separator, edge
//! lines `SRC DST` after it; SRC attacks DST. The label, when present,
//! becomes the argument name (one token, `[A-Za-z0-9_]+`), otherwise the
//! node id is used.

use std::collections::HashMap;

use super::{is_valid_name, ParseError};
use crate::af::ArgumentationFramework;

pub fn parse_tgf(source: &str) -> Result<ArgumentationFramework, ParseError> {
    let mut names: Vec<String> = Vec::new();
    let mut by_id: HashMap<String, usize> = HashMap::new();
    let mut attacks: Vec<(usize, usize)> = Vec::new();
    let mut seen_separator = false;

    for (lineno, raw) in source.lines().enumerate() {
        let lineno = lineno + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if line == "#" {
            if seen_separator {
                return Err(ParseError::new(lineno, "duplicate `#` separator"));
            }
            seen_separator = true;
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if !seen_separator {
            let (id, label) = match tokens.as_slice() {
                [id] => (*id, *id),
                [id, label] => (*id, *label),
                _ => {
                    return Err(ParseError::new(
                        lineno,
                        format!("expected `ID [LABEL]`, got `{line}`"),
                    ))
                }
            };
            if !is_valid_name(label) {
                return Err(ParseError::new(
                    lineno,
                    format!("invalid node label `{label}` (expected [A-Za-z0-9_]+)"),
                ));
            }
            if by_id.insert(id.to_string(), names.len()).is_some() {
                return Err(ParseError::new(lineno, format!("duplicate node id `{id}`")));
            }
            if names.iter().any(|n| n == label) {
                return Err(ParseError::new(
                    lineno,
                    format!("duplicate node label `{label}`"),
                ));
            }
            names.push(label.to_string());
        } else {
            let [src, dst] = tokens.as_slice() else {
                return Err(ParseError::new(
                    lineno,
                    format!("expected `SRC DST`, got `{line}`"),
                ));
            };
            let resolve = |id: &str| {
                by_id.get(id).copied().ok_or_else(|| {
                    ParseError::new(lineno, format!("edge references unknown node id `{id}`"))
                })
            };
            attacks.push((resolve(src)?, resolve(dst)?));
        }
    }
    if !seen_separator {
        return Err(ParseError::new(
            source.lines().count(),
            "missing `#` separator between nodes and edges",
        ));
    }
    ArgumentationFramework::from_index_pairs(names, attacks)
        .map_err(|e| ParseError::new(0, e.to_string()))
}

/// Canonical TGF emission: nodes numbered `1..n` in index order with the
/// argument name as label, then edges sorted by index pair.
pub fn emit_tgf(af: &ArgumentationFramework) -> String {
    let mut out = String::new();
    for (i, name) in af.names().iter().enumerate() {
        out.push_str(&format!("{} {}\n", i + 1, name));
    }
    out.push_str("#\n");
    for (a, b) in af.attacks() {
        out.push_str(&format!("{} {}\n", a + 1, b + 1));
    }
    out
}
