//! Python bindings: a `Framework` class carrying the main operations
//! (parsing, solving, ranking, extensions, axiom checks) plus the seeded
//! falsifier as a module function.

use pyo3::exceptions::{PyKeyError, PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use catrank::axioms::{self, AxiomId, FalsifierConfig};
use catrank::extensions;
use catrank::generator::{random_af, GenSpec};
use catrank::io;
use catrank::ranking;
use catrank::solver::{self, SolveConfig, SolveError};
use catrank::{ArgumentSet, ArgumentationFramework};

fn solve_err(e: SolveError) -> PyErr {
    match e {
        SolveError::NonConvergence { .. } | SolveError::CertifiedNonConvergence { .. } => {
            PyRuntimeError::new_err(e.to_string())
        }
        other => PyValueError::new_err(other.to_string()),
    }
}

/// An abstract argumentation framework: named arguments plus attacks.
#[pyclass(module = "catrank_py")]
struct Framework {
    inner: ArgumentationFramework,
}

impl Framework {
    fn index(&self, name: &str) -> PyResult<usize> {
        self.inner
            .index_of(name)
            .ok_or_else(|| PyKeyError::new_err(format!("no argument named `{name}`")))
    }

    fn names_of(&self, indices: impl IntoIterator<Item = usize>) -> Vec<String> {
        indices
            .into_iter()
            .map(|i| self.inner.name(i).to_string())
            .collect()
    }

    fn config(tolerance: f64, max_iterations: usize) -> SolveConfig {
        SolveConfig {
            tolerance,
            max_iterations,
            init: None,
        }
    }
}

#[pymethods]
impl Framework {
    /// Build a framework from argument names and (attacker, target) pairs.
    #[new]
    #[pyo3(signature = (names, attacks=vec![]))]
    fn new(names: Vec<String>, attacks: Vec<(String, String)>) -> PyResult<Self> {
        let pairs: Vec<(&str, &str)> = attacks
            .iter()
            .map(|(a, b)| (a.as_str(), b.as_str()))
            .collect();
        let inner = ArgumentationFramework::new(names, &pairs)
            .map_err(|e| PyValueError::new_err(e.to_string()))?;
        Ok(Self { inner })
    }

    /// Parse APX text (`arg(a).` / `att(a,b).` facts).
    #[staticmethod]
    fn from_apx(text: &str) -> PyResult<Self> {
        io::parse_apx(text)
            .map(|inner| Self { inner })
            .map_err(|e| PyValueError::new_err(e.to_string()))
    }

    /// Parse TGF text (`ID [LABEL]` nodes, `#`, `SRC DST` edges).
    #[staticmethod]
    fn from_tgf(text: &str) -> PyResult<Self> {
        io::parse_tgf(text)
            .map(|inner| Self { inner })
            .map_err(|e| PyValueError::new_err(e.to_string()))
    }

    /// Seeded random framework: every ordered pair is an attack with
    /// probability `edge_prob`.
    #[staticmethod]
    #[pyo3(signature = (n, edge_prob=0.25, seed=0, allow_self_attacks=true))]
    fn random(n: usize, edge_prob: f64, seed: u64, allow_self_attacks: bool) -> PyResult<Self> {
        if !(0.0..=1.0).contains(&edge_prob) {
            return Err(PyValueError::new_err(format!(
                "edge_prob must lie in [0, 1], got {edge_prob}"
            )));
        }
        Ok(Self {
            inner: random_af(&GenSpec {
                n,
                edge_prob,
                allow_self_attacks,
                seed,
            }),
        })
    }

    fn __len__(&self) -> usize {
        self.inner.n()
    }

    fn __repr__(&self) -> String {
        format!(
            "Framework({} arguments, {} attacks)",
            self.inner.n(),
            self.inner.attack_count()
        )
    }

    fn argument_names(&self) -> Vec<String> {
        self.inner.names().to_vec()
    }

    fn attacks(&self) -> Vec<(String, String)> {
        self.inner
            .attacks()
            .map(|(a, b)| (self.inner.name(a).to_string(), self.inner.name(b).to_string()))
            .collect()
    }

    /// Direct attackers of the named argument.
    fn attackers(&self, name: &str) -> PyResult<Vec<String>> {
        let x = self.index(name)?;
        Ok(self.names_of(self.inner.attackers(x).to_vec()))
    }

    fn attacked_by(&self, name: &str) -> PyResult<Vec<String>> {
        let x = self.index(name)?;
        Ok(self.names_of(self.inner.attacked_by(x).to_vec()))
    }

    /// Attackers of the attackers of the named argument.
    fn defenders(&self, name: &str) -> PyResult<Vec<String>> {
        let x = self.index(name)?;
        Ok(self.names_of(self.inner.defenders(x)))
    }

    fn is_conflict_free(&self, names: Vec<String>) -> PyResult<bool> {
        let set: ArgumentSet = names
            .iter()
            .map(|n| self.index(n))
            .collect::<PyResult<_>>()?;
        Ok(self.inner.is_conflict_free(&set))
    }

    /// The grounded extension.
    fn grounded(&self) -> Vec<String> {
        self.names_of(extensions::grounded(&self.inner))
    }

    /// All extensions under `"complete"`, `"preferred"` or `"stable"`
    /// semantics (`"grounded"` yields its single extension).
    fn extensions(&self, semantics: &str) -> PyResult<Vec<Vec<String>>> {
        let result = match semantics {
            "grounded" => return Ok(vec![self.grounded()]),
            "complete" => extensions::complete_extensions(&self.inner),
            "preferred" => extensions::preferred_extensions(&self.inner),
            "stable" => extensions::stable_extensions(&self.inner),
            other => {
                return Err(PyValueError::new_err(format!(
                    "unknown semantics `{other}` (expected grounded, complete, preferred, stable)"
                )))
            }
        };
        let set = result.map_err(|e| PyValueError::new_err(e.to_string()))?;
        Ok(set
            .extensions
            .into_iter()
            .map(|ext| self.names_of(ext))
            .collect())
    }

    /// Solve the categoriser equations by fixed-point iteration.
    #[pyo3(signature = (tolerance=1e-9, max_iterations=10_000))]
    fn solve(&self, tolerance: f64, max_iterations: usize) -> PyResult<Strengths> {
        let sv = solver::solve(
            &self.inner.attack_matrix(),
            &Self::config(tolerance, max_iterations),
        )
        .map_err(solve_err)?;
        Ok(Strengths::from(sv))
    }

    /// Solve with certified per-argument intervals; returns
    /// `(Strengths, Bounds)`.
    #[pyo3(signature = (tolerance=1e-9, max_iterations=10_000))]
    fn solve_certified(&self, tolerance: f64, max_iterations: usize) -> PyResult<(Strengths, Bounds)> {
        let (sv, bounds) = solver::solve_certified(
            &self.inner.attack_matrix(),
            &Self::config(tolerance, max_iterations),
        )
        .map_err(solve_err)?;
        Ok((Strengths::from(sv), Bounds::from(bounds)))
    }

    /// Solve and rank. `tie_epsilon` defaults to ten times the tolerance.
    #[pyo3(signature = (tie_epsilon=None, tolerance=1e-9, max_iterations=10_000))]
    fn rank(&self, tie_epsilon: Option<f64>, tolerance: f64, max_iterations: usize) -> PyResult<Ranking> {
        let sv = solver::solve(
            &self.inner.attack_matrix(),
            &Self::config(tolerance, max_iterations),
        )
        .map_err(solve_err)?;
        let eps = tie_epsilon.unwrap_or(10.0 * tolerance);
        if !(eps >= 0.0 && eps.is_finite()) {
            return Err(PyValueError::new_err(format!(
                "tie_epsilon must be a nonnegative finite number, got {eps}"
            )));
        }
        let inner = ranking::Ranking::from_strengths(&sv, eps);
        Ok(Ranking {
            classes: inner
                .classes()
                .iter()
                .map(|c| self.names_of(c.clone()))
                .collect(),
            inner,
            names: self.inner.names().to_vec(),
        })
    }

    /// Check one axiom (code: Ab, In, VP, DP, CT, SCT, CP, QP, DDP).
    /// Ab samples 10 seeded permutations; In checks component unions.
    /// Comparisons are backed by certified intervals.
    #[pyo3(signature = (axiom, tolerance=1e-10, seed=0))]
    fn check_axiom(&self, axiom: &str, tolerance: f64, seed: u64) -> PyResult<Verdict> {
        let axiom: AxiomId = axiom
            .parse()
            .map_err(|e: axioms::UnknownAxiom| PyValueError::new_err(e.to_string()))?;
        let config = Self::config(tolerance, 10_000);
        let verdict = match axiom {
            AxiomId::Abstraction => {
                axioms::check_ab_sampled(&self.inner, 10, seed, &axioms::rank_fn(config))
            }
            AxiomId::Independence => {
                axioms::check_in_all_unions(&self.inner, &axioms::rank_fn(config))
            }
            pairwise => {
                let (sv, bounds) =
                    solver::solve_certified(&self.inner.attack_matrix(), &config).map_err(solve_err)?;
                let ranking = ranking::Ranking::from_strengths(&sv, 10.0 * tolerance);
                let ev = axioms::Evidence::with_bounds(&self.inner, &ranking, &bounds);
                match pairwise {
                    AxiomId::VoidPrecedence => axioms::check_vp(&ev),
                    AxiomId::DefensePrecedence => axioms::check_dp(&ev),
                    AxiomId::CounterTransitivity => axioms::check_ct(&ev),
                    AxiomId::StrictCounterTransitivity => axioms::check_sct(&ev),
                    AxiomId::CardinalityPrecedence => axioms::check_cp(&ev),
                    AxiomId::QualityPrecedence => axioms::check_qp(&ev),
                    AxiomId::DistributedDefensePrecedence => axioms::check_ddp(&ev),
                    _ => unreachable!(),
                }
            }
        };
        Ok(Verdict::from_verdict(&self.inner, verdict))
    }

    /// Canonical APX text.
    fn to_apx(&self) -> String {
        io::emit_apx(&self.inner)
    }

    fn to_tgf(&self) -> String {
        io::emit_tgf(&self.inner)
    }

    /// DOT digraph, optionally labelling nodes with strengths.
    #[pyo3(signature = (strengths=None))]
    fn to_dot(&self, strengths: Option<PyRef<'_, Strengths>>) -> PyResult<String> {
        let sv = strengths.map(|s| s.to_strength_vector());
        io::emit_dot(&self.inner, sv.as_ref()).map_err(|e| PyValueError::new_err(e.to_string()))
    }

    /// The JSON result report (solve + rank, optionally certified).
    #[pyo3(signature = (tolerance=1e-9, max_iterations=10_000, certify=false))]
    fn report(&self, tolerance: f64, max_iterations: usize, certify: bool) -> PyResult<String> {
        let matrix = self.inner.attack_matrix();
        let config = Self::config(tolerance, max_iterations);
        let (sv, bounds) = if certify {
            let (sv, b) = solver::solve_certified(&matrix, &config).map_err(solve_err)?;
            (sv, Some(b))
        } else {
            (solver::solve(&matrix, &config).map_err(solve_err)?, None)
        };
        let ranking = ranking::Ranking::from_strengths(&sv, 10.0 * tolerance);
        io::emit_report(&self.inner, &sv, bounds.as_ref(), &ranking)
            .map_err(|e| PyValueError::new_err(e.to_string()))
    }
}

/// Solved strengths with iteration count and residual.
#[pyclass(module = "catrank_py")]
struct Strengths {
    #[pyo3(get)]
    values: Vec<f64>,
    #[pyo3(get)]
    iterations: usize,
    #[pyo3(get)]
    residual: f64,
}

impl Strengths {
    fn to_strength_vector(&self) -> solver::StrengthVector {
        solver::StrengthVector {
            values: self.values.clone(),
            iterations: self.iterations,
            residual: self.residual,
        }
    }
}

impl From<solver::StrengthVector> for Strengths {
    fn from(sv: solver::StrengthVector) -> Self {
        Self {
            values: sv.values,
            iterations: sv.iterations,
            residual: sv.residual,
        }
    }
}

#[pymethods]
impl Strengths {
    fn __repr__(&self) -> String {
        format!(
            "Strengths({} values, iterations={}, residual={:.3e})",
            self.values.len(),
            self.iterations,
            self.residual
        )
    }
}

/// Certified per-argument intervals bracketing the unique fixed point.
#[pyclass(module = "catrank_py")]
struct Bounds {
    #[pyo3(get)]
    lower: Vec<f64>,
    #[pyo3(get)]
    upper: Vec<f64>,
    #[pyo3(get)]
    iterations: usize,
}

impl From<solver::CertifiedBounds> for Bounds {
    fn from(b: solver::CertifiedBounds) -> Self {
        Self {
            lower: b.lower,
            upper: b.upper,
            iterations: b.iterations,
        }
    }
}

#[pymethods]
impl Bounds {
    /// Max-norm interval width.
    fn width(&self) -> f64 {
        self.lower
            .iter()
            .zip(&self.upper)
            .map(|(lo, hi)| hi - lo)
            .fold(0.0, f64::max)
    }

    fn __repr__(&self) -> String {
        format!("Bounds({} intervals, width={:.3e})", self.lower.len(), self.width())
    }
}

/// Ordered equivalence classes, most acceptable first.
#[pyclass(module = "catrank_py")]
struct Ranking {
    inner: ranking::Ranking,
    names: Vec<String>,
    #[pyo3(get)]
    classes: Vec<Vec<String>>,
}

#[pymethods]
impl Ranking {
    /// `"strictly_above"`, `"equivalent"` or `"strictly_below"`.
    fn compare(&self, a: &str, b: &str) -> PyResult<&'static str> {
        let find = |name: &str| {
            self.names
                .iter()
                .position(|n| n == name)
                .ok_or_else(|| PyKeyError::new_err(format!("no argument named `{name}`")))
        };
        Ok(match self.inner.compare(find(a)?, find(b)?) {
            ranking::Comparison::StrictlyAbove => "strictly_above",
            ranking::Comparison::Equivalent => "equivalent",
            ranking::Comparison::StrictlyBelow => "strictly_below",
        })
    }

    /// Group comparison of two argument-name sets: `(geq, strict)`.
    fn compare_groups(&self, s1: Vec<String>, s2: Vec<String>) -> PyResult<(bool, bool)> {
        let to_set = |names: Vec<String>| -> PyResult<ArgumentSet> {
            names
                .iter()
                .map(|name| {
                    self.names
                        .iter()
                        .position(|n| n == name)
                        .ok_or_else(|| PyKeyError::new_err(format!("no argument named `{name}`")))
                })
                .collect()
        };
        let g = self.inner.group_compare(&to_set(s1)?, &to_set(s2)?);
        Ok((g.geq, g.strict))
    }

    fn strength(&self, name: &str) -> PyResult<f64> {
        let x = self
            .names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| PyKeyError::new_err(format!("no argument named `{name}`")))?;
        Ok(self.inner.strength(x))
    }

    fn __repr__(&self) -> String {
        let joined: Vec<String> = self.classes.iter().map(|c| c.join(", ")).collect();
        format!("Ranking({})", joined.join(" > "))
    }
}

/// Outcome of one axiom check.
#[pyclass(module = "catrank_py")]
struct Verdict {
    #[pyo3(get)]
    axiom: String,
    #[pyo3(get)]
    holds: bool,
    /// Violating instantiations as (x, y, detail) name triples.
    #[pyo3(get)]
    witnesses: Vec<(String, String, String)>,
    #[pyo3(get)]
    unresolved: Vec<(String, String, String)>,
    #[pyo3(get)]
    notes: Vec<String>,
}

impl Verdict {
    fn from_verdict(af: &ArgumentationFramework, v: axioms::AxiomVerdict) -> Self {
        let map = |ws: &[axioms::ViolationWitness]| {
            ws.iter()
                .map(|w| {
                    (
                        af.name(w.x).to_string(),
                        af.name(w.y).to_string(),
                        w.detail.clone(),
                    )
                })
                .collect()
        };
        Self {
            axiom: v.axiom.code().to_string(),
            holds: v.holds,
            witnesses: map(&v.witnesses),
            unresolved: map(&v.unresolved),
            notes: v.notes,
        }
    }
}

#[pymethods]
impl Verdict {
    fn __bool__(&self) -> bool {
        self.holds
    }

    fn __repr__(&self) -> String {
        if self.holds {
            format!("Verdict({}: holds)", self.axiom)
        } else {
            format!("Verdict({}: {} violation(s))", self.axiom, self.witnesses.len())
        }
    }
}

/// Search seeded random frameworks for a violation of `axiom`. Returns
/// `None` or a `(trial, Framework, Verdict)` triple; deterministic per
/// seed.
#[pyfunction]
#[pyo3(signature = (axiom, trials=1000, n_max=9, seed=0, edge_prob_min=0.0, edge_prob_max=0.5))]
fn falsify(
    axiom: &str,
    trials: u64,
    n_max: usize,
    seed: u64,
    edge_prob_min: f64,
    edge_prob_max: f64,
) -> PyResult<Option<(u64, Framework, Verdict)>> {
    let axiom: AxiomId = axiom
        .parse()
        .map_err(|e: axioms::UnknownAxiom| PyValueError::new_err(e.to_string()))?;
    if n_max < 3 {
        return Err(PyValueError::new_err("n_max must be at least 3"));
    }
    if trials == 0 {
        return Err(PyValueError::new_err("trials must be at least 1"));
    }
    if !((0.0..=1.0).contains(&edge_prob_min)
        && (0.0..=1.0).contains(&edge_prob_max)
        && edge_prob_min <= edge_prob_max)
    {
        return Err(PyValueError::new_err(
            "edge probability range must be an ordered subrange of [0, 1]",
        ));
    }
    let report = axioms::falsify(
        axiom,
        &FalsifierConfig {
            n_max,
            edge_prob_range: (edge_prob_min, edge_prob_max),
            trials,
            seed,
        },
    );
    Ok(report.witness.map(|w| {
        let verdict = Verdict::from_verdict(&w.af, w.verdict);
        (w.trial, Framework { inner: w.af }, verdict)
    }))
}

#[pymodule]
fn catrank_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_class::<Framework>()?;
    m.add_class::<Strengths>()?;
    m.add_class::<Bounds>()?;
    m.add_class::<Ranking>()?;
    m.add_class::<Verdict>()?;
    m.add_function(wrap_pyfunction!(falsify, m)?)?;
    Ok(())
}
