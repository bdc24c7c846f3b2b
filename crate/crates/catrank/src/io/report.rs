//! Machine-readable result report: a JSON object with keys `arguments`,
//! `strengths`, `iterations`, `residual`, optional `bounds`, and `ranking`.
//!
//! Numbers are written with 17 significant digits so a reader recovers the
//! exact double-precision values.

use std::fmt::Write;

use super::EmitError;
use crate::af::ArgumentationFramework;
use crate::ranking::Ranking;
use crate::solver::{CertifiedBounds, StrengthVector};

fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

fn json_name(name: &str) -> String {
    serde_json::to_string(name).expect("string serialization cannot fail")
}

fn number_array(values: &[f64]) -> String {
    let body: Vec<String> = values.iter().copied().map(fmt_f64).collect();
    format!("[{}]", body.join(", "))
}

pub fn emit_report(
    af: &ArgumentationFramework,
    strengths: &StrengthVector,
    bounds: Option<&CertifiedBounds>,
    ranking: &Ranking,
) -> Result<String, EmitError> {
    let n = af.n();
    let check = |what: &'static str, got: usize| {
        if got != n {
            Err(EmitError::DimensionMismatch {
                what,
                expected: n,
                got,
            })
        } else {
            Ok(())
        }
    };
    check("strength vector", strengths.values.len())?;
    check("ranking", ranking.n())?;
    if let Some(b) = bounds {
        check("lower bound vector", b.lower.len())?;
        check("upper bound vector", b.upper.len())?;
    }

    let names: Vec<String> = af.names().iter().map(|n| json_name(n)).collect();
    let mut out = String::from("{\n");
    writeln!(out, "  \"arguments\": [{}],", names.join(", ")).unwrap();
    writeln!(out, "  \"strengths\": {},", number_array(&strengths.values)).unwrap();
    writeln!(out, "  \"iterations\": {},", strengths.iterations).unwrap();
    writeln!(out, "  \"residual\": {},", fmt_f64(strengths.residual)).unwrap();
    if let Some(b) = bounds {
        writeln!(
            out,
            "  \"bounds\": {{\"lower\": {}, \"upper\": {}, \"iterations\": {}}},",
            number_array(&b.lower),
            number_array(&b.upper),
            b.iterations
        )
        .unwrap();
    }
    let classes: Vec<String> = ranking
        .classes()
        .iter()
        .map(|class| {
            let members: Vec<String> = class.iter().map(|&x| json_name(af.name(x))).collect();
            format!("[{}]", members.join(", "))
        })
        .collect();
    writeln!(out, "  \"ranking\": [{}]", classes.join(", ")).unwrap();
    out.push_str("}\n");
    Ok(out)
}
