//! DOT emission for rendering attack graphs, optionally annotating each
//! node with its solved strength to two decimals.

use super::EmitError;
use crate::af::ArgumentationFramework;
use crate::solver::StrengthVector;

pub fn emit_dot(
    af: &ArgumentationFramework,
    strengths: Option<&StrengthVector>,
) -> Result<String, EmitError> {
    if let Some(sv) = strengths {
        if sv.values.len() != af.n() {
            return Err(EmitError::DimensionMismatch {
                what: "strength vector",
                expected: af.n(),
                got: sv.values.len(),
            });
        }
    }
    let mut out = String::from("digraph af {\n");
    for (i, name) in af.names().iter().enumerate() {
        match strengths {
            Some(sv) => out.push_str(&format!(
                "  \"{name}\" [label=\"{name}\\n{:.2}\"];\n",
                sv.values[i]
            )),
            None => out.push_str(&format!("  \"{name}\";\n")),
        }
    }
    for (a, b) in af.attacks() {
        out.push_str(&format!("  \"{}\" -> \"{}\";\n", af.name(a), af.name(b)));
    }
    out.push_str("}\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::af::ArgumentationFramework;
    use crate::solver::{solve, SolveConfig};
    use crate::testutil::example1;

    #[test]
    fn single_edge_without_strengths() {
        let af = crate::io::parse_apx("arg(a).\narg(b).\natt(a,b).").unwrap();
        let dot = emit_dot(&af, None).unwrap();
        assert!(dot.starts_with("digraph af {"));
        assert!(dot.contains("\"a\" -> \"b\";"));
        assert!(!dot.contains("label"));
    }

    #[test]
    fn example1_with_strengths_labels_two_decimals() {
        let af = example1();
        let sv = solve(&af.attack_matrix(), &SolveConfig::with_tolerance(1e-10)).unwrap();
        let dot = emit_dot(&af, Some(&sv)).unwrap();
        assert!(dot.contains("\"x3\" [label=\"x3\\n1.00\"];"));
        assert!(dot.contains("\"x1\" [label=\"x1\\n0.72\"];"));
    }

    #[test]
    fn empty_framework_has_empty_body() {
        let af = ArgumentationFramework::new(Vec::<String>::new(), &[]).unwrap();
        assert_eq!(emit_dot(&af, None).unwrap(), "digraph af {\n}\n");
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let af = example1();
        let sv = StrengthVector {
            values: vec![1.0; 3],
            iterations: 0,
            residual: 0.0,
        };
        assert!(matches!(
            emit_dot(&af, Some(&sv)),
            Err(EmitError::DimensionMismatch { .. })
        ));
    }
}
