//! Instance-level checkers for the nine ranking axioms, plus a seeded
//! randomized falsifier that searches for violating frameworks.
//!
//! A checker scans every quantified instantiation on one framework and
//! returns a verdict with concrete witnesses for each violation. When
//! certified bounds are supplied, comparisons go through the interval
//! order: a violation is only recorded when the intervals prove it, and
//! pairs the numerics cannot separate are reported as unresolved instead
//! of being counted either way.

use std::fmt;
use std::str::FromStr;

use rand_core::RngCore;

use crate::af::{AfError, ArgumentSet, ArgumentationFramework, AttackMatrix};
use crate::generator::{random_af, random_permutation, stream_rng, GenSpec};
use crate::ranking::{compare_certified, CertifiedOrder, Comparison, Ranking};
use crate::solver::{solve_certified, CertifiedBounds, SolveConfig};

/// The nine ranking axioms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AxiomId {
    Abstraction,
    Independence,
    VoidPrecedence,
    DefensePrecedence,
    CounterTransitivity,
    StrictCounterTransitivity,
    CardinalityPrecedence,
    QualityPrecedence,
    DistributedDefensePrecedence,
}

impl AxiomId {
    pub const ALL: [AxiomId; 9] = [
        AxiomId::Abstraction,
        AxiomId::Independence,
        AxiomId::VoidPrecedence,
        AxiomId::DefensePrecedence,
        AxiomId::CounterTransitivity,
        AxiomId::StrictCounterTransitivity,
        AxiomId::CardinalityPrecedence,
        AxiomId::QualityPrecedence,
        AxiomId::DistributedDefensePrecedence,
    ];

    /// Conventional short code.
    pub fn code(self) -> &'static str {
        match self {
            AxiomId::Abstraction => "Ab",
            AxiomId::Independence => "In",
            AxiomId::VoidPrecedence => "VP",
            AxiomId::DefensePrecedence => "DP",
            AxiomId::CounterTransitivity => "CT",
            AxiomId::StrictCounterTransitivity => "SCT",
            AxiomId::CardinalityPrecedence => "CP",
            AxiomId::QualityPrecedence => "QP",
            AxiomId::DistributedDefensePrecedence => "DDP",
        }
    }
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown axiom `{0}` (expected one of Ab, In, VP, DP, CT, SCT, CP, QP, DDP)")]
pub struct UnknownAxiom(pub String);

impl FromStr for AxiomId {
    type Err = UnknownAxiom;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        AxiomId::ALL
            .into_iter()
            .find(|a| a.code().eq_ignore_ascii_case(s))
            .ok_or_else(|| UnknownAxiom(s.to_string()))
    }
}

/// One instantiation of an axiom's quantifiers that failed (or could not
/// be resolved): the argument pair plus, for Abstraction/Independence, the
/// auxiliary permutation or component union.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ViolationWitness {
    pub x: usize,
    pub y: usize,
    pub detail: String,
    pub permutation: Option<Vec<usize>>,
    pub component_union: Option<ArgumentSet>,
}

impl ViolationWitness {
    fn pair(x: usize, y: usize, detail: String) -> Self {
        Self {
            x,
            y,
            detail,
            permutation: None,
            component_union: None,
        }
    }
}

/// Outcome of checking one axiom on one framework.
#[derive(Debug, Clone, PartialEq)]
pub struct AxiomVerdict {
    pub axiom: AxiomId,
    /// True iff no violation was found; `holds == witnesses.is_empty()`.
    pub holds: bool,
    pub witnesses: Vec<ViolationWitness>,
    /// Guarded pairs the numerics could not decide (certified mode only).
    /// Never counted as violations.
    pub unresolved: Vec<ViolationWitness>,
    pub notes: Vec<String>,
}

impl AxiomVerdict {
    fn new(axiom: AxiomId) -> Self {
        Self {
            axiom,
            holds: true,
            witnesses: Vec::new(),
            unresolved: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn violation(&mut self, w: ViolationWitness) {
        self.witnesses.push(w);
        self.holds = false;
    }
}

/// What an axiom demands of a guarded pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Requirement {
    AtLeastAsAcceptable,
    StrictlyMoreAcceptable,
}

/// The inputs a pairwise checker needs: framework, ranking, and optionally
/// the certified bounds backing it.
pub struct Evidence<'a> {
    af: &'a ArgumentationFramework,
    matrix: AttackMatrix,
    ranking: &'a Ranking,
    bounds: Option<&'a CertifiedBounds>,
}

impl<'a> Evidence<'a> {
    pub fn new(af: &'a ArgumentationFramework, ranking: &'a Ranking) -> Self {
        Self {
            af,
            matrix: af.attack_matrix(),
            ranking,
            bounds: None,
        }
    }

    pub fn with_bounds(
        af: &'a ArgumentationFramework,
        ranking: &'a Ranking,
        bounds: &'a CertifiedBounds,
    ) -> Self {
        Self {
            af,
            matrix: af.attack_matrix(),
            ranking,
            bounds: Some(bounds),
        }
    }

    /// Strongest provable order between two strengths. Arguments with
    /// identical attacker rows solve to bit-identical values, so they are
    /// equivalent regardless of interval width.
    fn proven(&self, x: usize, y: usize) -> CertifiedOrder {
        if self.matrix.row(x) == self.matrix.row(y) {
            return CertifiedOrder::Equivalent;
        }
        match self.bounds {
            Some(b) => compare_certified(b, x, y),
            None => match self.ranking.compare(x, y) {
                Comparison::StrictlyAbove => CertifiedOrder::Above,
                Comparison::Equivalent => CertifiedOrder::Equivalent,
                Comparison::StrictlyBelow => CertifiedOrder::Below,
            },
        }
    }

    /// Some(true) = requirement satisfied, Some(false) = proven violated,
    /// None = numerically unresolved.
    fn evaluate(&self, requirement: Requirement, x: usize, y: usize) -> Option<bool> {
        match (requirement, self.proven(x, y)) {
            (Requirement::AtLeastAsAcceptable, CertifiedOrder::Above)
            | (Requirement::AtLeastAsAcceptable, CertifiedOrder::Equivalent)
            | (Requirement::AtLeastAsAcceptable, CertifiedOrder::AtLeast) => Some(true),
            (Requirement::AtLeastAsAcceptable, CertifiedOrder::Below) => Some(false),
            (Requirement::AtLeastAsAcceptable, _) => None,
            (Requirement::StrictlyMoreAcceptable, CertifiedOrder::Above) => Some(true),
            (Requirement::StrictlyMoreAcceptable, CertifiedOrder::Below)
            | (Requirement::StrictlyMoreAcceptable, CertifiedOrder::Equivalent)
            | (Requirement::StrictlyMoreAcceptable, CertifiedOrder::AtMost) => Some(false),
            (Requirement::StrictlyMoreAcceptable, _) => None,
        }
    }

    fn require(
        &self,
        verdict: &mut AxiomVerdict,
        requirement: Requirement,
        x: usize,
        y: usize,
        guard: &str,
    ) {
        let relation = match requirement {
            Requirement::AtLeastAsAcceptable => "at least as acceptable as",
            Requirement::StrictlyMoreAcceptable => "strictly more acceptable than",
        };
        let detail = || {
            format!(
                "{guard}: {} (v={:.6}) must be {relation} {} (v={:.6})",
                self.af.name(x),
                self.ranking.strength(x),
                self.af.name(y),
                self.ranking.strength(y),
            )
        };
        match self.evaluate(requirement, x, y) {
            Some(true) => {}
            Some(false) => verdict.violation(ViolationWitness::pair(x, y, detail())),
            None => verdict
                .unresolved
                .push(ViolationWitness::pair(x, y, detail())),
        }
    }

    fn attacker_set(&self, x: usize) -> ArgumentSet {
        self.af.attackers(x).iter().copied().collect()
    }
}

/// Void precedence: an unattacked argument ranks at least as high as any
/// attacked one. Whether the strict form also held is recorded as a note.
pub fn check_vp(ev: &Evidence) -> AxiomVerdict {
    let mut verdict = AxiomVerdict::new(AxiomId::VoidPrecedence);
    let n = ev.af.n();
    let mut guarded = 0usize;
    let mut strict_held = true;
    for x in 0..n {
        if !ev.af.attackers(x).is_empty() {
            continue;
        }
        for y in 0..n {
            if x == y || ev.af.attackers(y).is_empty() {
                continue;
            }
            guarded += 1;
            ev.require(
                &mut verdict,
                Requirement::AtLeastAsAcceptable,
                x,
                y,
                "void precedence",
            );
            if ev.evaluate(Requirement::StrictlyMoreAcceptable, x, y) != Some(true) {
                strict_held = false;
            }
        }
    }
    verdict.notes.push(if guarded == 0 {
        "holds vacuously: no (unattacked, attacked) pair".into()
    } else if strict_held {
        format!("strict form held on all {guarded} guarded pairs")
    } else {
        format!("strict form not established on some of {guarded} guarded pairs")
    });
    verdict
}

/// Defense precedence: with equally many attackers, being defended beats
/// being undefended.
pub fn check_dp(ev: &Evidence) -> AxiomVerdict {
    let mut verdict = AxiomVerdict::new(AxiomId::DefensePrecedence);
    let n = ev.af.n();
    let defended: Vec<bool> = (0..n).map(|x| !ev.af.defenders(x).is_empty()).collect();
    for x in 0..n {
        for y in 0..n {
            if x == y
                || ev.af.attackers(x).len() != ev.af.attackers(y).len()
                || !defended[x]
                || defended[y]
            {
                continue;
            }
            ev.require(
                &mut verdict,
                Requirement::AtLeastAsAcceptable,
                x,
                y,
                "defense precedence",
            );
        }
    }
    verdict
}

/// Counter-transitivity: if y's attackers are at least as numerous and
/// well-ranked as x's, then x is at least as acceptable as y.
pub fn check_ct(ev: &Evidence) -> AxiomVerdict {
    let mut verdict = AxiomVerdict::new(AxiomId::CounterTransitivity);
    let n = ev.af.n();
    for x in 0..n {
        for y in 0..n {
            if x == y {
                continue;
            }
            let g = ev
                .ranking
                .group_compare(&ev.attacker_set(y), &ev.attacker_set(x));
            if g.geq {
                ev.require(
                    &mut verdict,
                    Requirement::AtLeastAsAcceptable,
                    x,
                    y,
                    "counter-transitivity",
                );
            }
        }
    }
    verdict
}

/// Strict counter-transitivity: a strict group comparison of the attacker
/// sets forces a strict ranking.
pub fn check_sct(ev: &Evidence) -> AxiomVerdict {
    let mut verdict = AxiomVerdict::new(AxiomId::StrictCounterTransitivity);
    let n = ev.af.n();
    for x in 0..n {
        for y in 0..n {
            if x == y {
                continue;
            }
            let g = ev
                .ranking
                .group_compare(&ev.attacker_set(y), &ev.attacker_set(x));
            if g.strict {
                ev.require(
                    &mut verdict,
                    Requirement::StrictlyMoreAcceptable,
                    x,
                    y,
                    "strict counter-transitivity",
                );
            }
        }
    }
    verdict
}

/// Cardinality precedence: fewer attackers should mean strictly more
/// acceptable. The categoriser semantics is expected to violate this.
pub fn check_cp(ev: &Evidence) -> AxiomVerdict {
    let mut verdict = AxiomVerdict::new(AxiomId::CardinalityPrecedence);
    let n = ev.af.n();
    for x in 0..n {
        for y in 0..n {
            if x != y && ev.af.attackers(x).len() < ev.af.attackers(y).len() {
                ev.require(
                    &mut verdict,
                    Requirement::StrictlyMoreAcceptable,
                    x,
                    y,
                    "cardinality precedence",
                );
            }
        }
    }
    verdict
}

/// Quality precedence: if some attacker of y strictly outranks every
/// attacker of x, x should strictly outrank y. With an unattacked x the
/// inner universal is vacuous, so the guard can fire; such instantiations
/// are flagged in the witness detail. Expected to be violated.
pub fn check_qp(ev: &Evidence) -> AxiomVerdict {
    let mut verdict = AxiomVerdict::new(AxiomId::QualityPrecedence);
    let n = ev.af.n();
    let mut vacuous_guards = 0usize;
    for x in 0..n {
        for y in 0..n {
            if x == y {
                continue;
            }
            let guard = ev.af.attackers(y).iter().any(|&yp| {
                ev.af
                    .attackers(x)
                    .iter()
                    .all(|&xp| ev.proven(yp, xp) == CertifiedOrder::Above)
            });
            if !guard {
                continue;
            }
            let vacuous = ev.af.attackers(x).is_empty();
            if vacuous {
                vacuous_guards += 1;
            }
            let label = if vacuous {
                "quality precedence (guard vacuous: x has no attackers)"
            } else {
                "quality precedence"
            };
            ev.require(&mut verdict, Requirement::StrictlyMoreAcceptable, x, y, label);
        }
    }
    if vacuous_guards > 0 {
        verdict
            .notes
            .push(format!("{vacuous_guards} guard(s) fired vacuously (unattacked x)"));
    }
    verdict
}

/// Each defender of `x` attacks exactly one attacker of `x`.
pub fn is_simple_defense(af: &ArgumentationFramework, x: usize) -> bool {
    let attackers: ArgumentSet = af.attackers(x).iter().copied().collect();
    af.defenders(x).iter().all(|&d| {
        af.attacked_by(d)
            .iter()
            .filter(|t| attackers.contains(t))
            .count()
            == 1
    })
}

/// Every attacker of `x` is itself attacked.
pub fn is_distributed_defense(af: &ArgumentationFramework, x: usize) -> bool {
    af.attackers(x)
        .iter()
        .all(|&a| !af.attackers(a).is_empty())
}

/// Pairs (x, y) meeting the distributed-defense guard: equal attacker and
/// defender counts, x's defense simple and distributed, y's simple but not
/// distributed. Purely structural, so it doubles as a falsifier prefilter.
pub fn ddp_guard_pairs(af: &ArgumentationFramework) -> Vec<(usize, usize)> {
    let n = af.n();
    let simple: Vec<bool> = (0..n).map(|x| is_simple_defense(af, x)).collect();
    let distributed: Vec<bool> = (0..n).map(|x| is_distributed_defense(af, x)).collect();
    let defender_count: Vec<usize> = (0..n).map(|x| af.defenders(x).len()).collect();
    let mut pairs = Vec::new();
    for x in 0..n {
        if !(simple[x] && distributed[x]) {
            continue;
        }
        for y in 0..n {
            if x == y || !simple[y] || distributed[y] {
                continue;
            }
            if af.attackers(x).len() == af.attackers(y).len()
                && defender_count[x] == defender_count[y]
            {
                pairs.push((x, y));
            }
        }
    }
    pairs
}

/// Distributed-defense precedence. Expected to be violated.
pub fn check_ddp(ev: &Evidence) -> AxiomVerdict {
    let mut verdict = AxiomVerdict::new(AxiomId::DistributedDefensePrecedence);
    for (x, y) in ddp_guard_pairs(ev.af) {
        ev.require(
            &mut verdict,
            Requirement::StrictlyMoreAcceptable,
            x,
            y,
            "distributed-defense precedence",
        );
    }
    verdict
}

/// Abstraction: rankings commute with relabelling. Solves both the
/// framework and its image under `perm` via `rank`, then compares all
/// pairs through the isomorphism.
pub fn check_ab(
    af: &ArgumentationFramework,
    perm: &[usize],
    rank: &dyn Fn(&ArgumentationFramework) -> Ranking,
) -> Result<AxiomVerdict, AfError> {
    let mut verdict = AxiomVerdict::new(AxiomId::Abstraction);
    let mapped = af.apply_isomorphism(perm)?;
    let original = rank(af);
    let image = rank(&mapped);
    for x in 0..af.n() {
        for y in 0..af.n() {
            if x == y {
                continue;
            }
            let before = original.compare(x, y);
            let after = image.compare(perm[x], perm[y]);
            if before != after {
                verdict.violation(ViolationWitness {
                    x,
                    y,
                    detail: format!(
                        "comparison of ({}, {}) is {:?} but {:?} after relabelling",
                        af.name(x),
                        af.name(y),
                        before,
                        after
                    ),
                    permutation: Some(perm.to_vec()),
                    component_union: None,
                });
            }
        }
    }
    Ok(verdict)
}

/// Independence: comparisons within a union of weakly connected components
/// are unaffected by deleting the rest of the framework.
pub fn check_in(
    af: &ArgumentationFramework,
    component_union: &ArgumentSet,
    rank: &dyn Fn(&ArgumentationFramework) -> Ranking,
) -> Result<AxiomVerdict, AfError> {
    let mut verdict = AxiomVerdict::new(AxiomId::Independence);
    let sub = af.restrict(component_union)?;
    let kept: Vec<usize> = (0..af.n()).filter(|x| component_union.contains(x)).collect();
    let original = rank(af);
    let restricted = rank(&sub);
    for (sx, &x) in kept.iter().enumerate() {
        for (sy, &y) in kept.iter().enumerate() {
            if x == y {
                continue;
            }
            let before = original.compare(x, y);
            let after = restricted.compare(sx, sy);
            if before != after {
                verdict.violation(ViolationWitness {
                    x,
                    y,
                    detail: format!(
                        "comparison of ({}, {}) is {:?} in the full framework but {:?} restricted",
                        af.name(x),
                        af.name(y),
                        before,
                        after
                    ),
                    permutation: None,
                    component_union: Some(component_union.clone()),
                });
            }
        }
    }
    Ok(verdict)
}

/// Check abstraction under `count` permutations sampled from `seed`
/// (stream 2 of the generator). Returns the first failing verdict, or a
/// passing one noting how many permutations were tried.
pub fn check_ab_sampled(
    af: &ArgumentationFramework,
    count: usize,
    seed: u64,
    rank: &dyn Fn(&ArgumentationFramework) -> Ranking,
) -> AxiomVerdict {
    let mut rng = stream_rng(seed, 2);
    for _ in 0..count {
        let perm = random_permutation(af.n(), rng.next_u64());
        let verdict = check_ab(af, &perm, rank).expect("sampled permutations are bijections");
        if !verdict.holds {
            return verdict;
        }
    }
    let mut verdict = AxiomVerdict::new(AxiomId::Abstraction);
    verdict
        .notes
        .push(format!("checked {count} sampled permutations"));
    verdict
}

/// Check independence across every union from [`component_unions`]
/// (exhaustive up to 8 components). Returns the first failing verdict, or
/// a passing one noting how many unions were tried.
pub fn check_in_all_unions(
    af: &ArgumentationFramework,
    rank: &dyn Fn(&ArgumentationFramework) -> Ranking,
) -> AxiomVerdict {
    let unions = component_unions(af, 8);
    let count = unions.len();
    for union in unions {
        let verdict = check_in(af, &union, rank).expect("unions never split components");
        if !verdict.holds {
            return verdict;
        }
    }
    let mut verdict = AxiomVerdict::new(AxiomId::Independence);
    verdict.notes.push(format!("checked {count} component unions"));
    verdict
}

/// Component unions to feed [`check_in`]: all nonempty unions when there
/// are at most `exhaustive_cap` components, otherwise each single
/// component, each leave-one-out union, and the full framework.
pub fn component_unions(
    af: &ArgumentationFramework,
    exhaustive_cap: usize,
) -> Vec<ArgumentSet> {
    let components = af.weakly_connected_components();
    let c = components.len();
    let union_of = |mask: &dyn Fn(usize) -> bool| -> ArgumentSet {
        components
            .iter()
            .enumerate()
            .filter(|(k, _)| mask(*k))
            .flat_map(|(_, comp)| comp.iter().copied())
            .collect()
    };
    // exhaustive only while 2^c stays enumerable
    if c <= exhaustive_cap.min(20) {
        (1u32..(1u32 << c))
            .map(|bits| union_of(&|k| bits & (1 << k) != 0))
            .collect()
    } else {
        let mut out: Vec<ArgumentSet> = (0..c).map(|k| union_of(&|j| j == k)).collect();
        out.extend((0..c).map(|k| union_of(&|j| j != k)));
        out.push(union_of(&|_| true));
        out
    }
}

/// Falsifier search space and reproducibility token.
#[derive(Debug, Clone, PartialEq)]
pub struct FalsifierConfig {
    /// Argument count is drawn uniformly from `3..=n_max`.
    pub n_max: usize,
    /// Edge probability is drawn uniformly from this inclusive range.
    pub edge_prob_range: (f64, f64),
    pub trials: u64,
    pub seed: u64,
}

impl Default for FalsifierConfig {
    fn default() -> Self {
        Self {
            n_max: 9,
            edge_prob_range: (0.0, 0.5),
            trials: 1000,
            seed: 0,
        }
    }
}

/// A violating framework found by the falsifier, with the verdict that
/// re-checking it reproduces.
#[derive(Debug, Clone, PartialEq)]
pub struct FalsifierWitness {
    pub trial: u64,
    pub af: ArgumentationFramework,
    pub verdict: AxiomVerdict,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FalsifierReport {
    pub axiom: AxiomId,
    /// Trials actually run (stops at the first witness).
    pub trials: u64,
    pub witness: Option<FalsifierWitness>,
    pub seed: u64,
}

/// Solve tolerance used by the falsifier; ranking ties use ten times this.
pub const FALSIFIER_TOLERANCE: f64 = 1e-10;

/// Stream ids 0 and 1 belong to the generator; falsifier trial `t` draws
/// from stream `t + 2` of the master seed, so trials are independent of
/// scheduling and the first violating trial index is well defined.
const FALSIFIER_STREAM_BASE: u64 = 2;

/// Search for a framework violating `axiom`: generate, solve, check.
/// Fully deterministic per (axiom, config).
pub fn falsify(axiom: AxiomId, config: &FalsifierConfig) -> FalsifierReport {
    assert!(config.n_max >= 3, "n_max must be at least 3");
    let (lo, hi) = config.edge_prob_range;
    assert!(
        (0.0..=1.0).contains(&lo) && (0.0..=1.0).contains(&hi) && lo <= hi,
        "edge_prob_range must be an ordered subrange of [0, 1]"
    );
    for trial in 0..config.trials {
        let mut rng = stream_rng(config.seed, FALSIFIER_STREAM_BASE + trial);
        let n = 3 + (rng.next_u64() % (config.n_max as u64 - 2)) as usize;
        let unit = (rng.next_u64() >> 11) as f64 / (1u64 << 53) as f64;
        let edge_prob = lo + unit * (hi - lo);
        let af_seed = rng.next_u64();
        let af = random_af(&GenSpec {
            n,
            edge_prob,
            allow_self_attacks: true,
            seed: af_seed,
        });
        if axiom == AxiomId::DistributedDefensePrecedence && ddp_guard_pairs(&af).is_empty() {
            continue;
        }
        let Some(verdict) = check_on_framework(axiom, &af, &mut rng) else {
            continue;
        };
        if !verdict.holds {
            return FalsifierReport {
                axiom,
                trials: trial + 1,
                witness: Some(FalsifierWitness { trial, af, verdict }),
                seed: config.seed,
            };
        }
    }
    FalsifierReport {
        axiom,
        trials: config.trials,
        witness: None,
        seed: config.seed,
    }
}

/// Solve one framework and check one axiom on it, drawing any sampling the
/// axiom needs (permutations, component unions) from `rng`. Returns None
/// when the solve does not converge.
fn check_on_framework(
    axiom: AxiomId,
    af: &ArgumentationFramework,
    rng: &mut rand_chacha::ChaCha8Rng,
) -> Option<AxiomVerdict> {
    let solve_config = SolveConfig::with_tolerance(FALSIFIER_TOLERANCE);
    match axiom {
        AxiomId::Abstraction => {
            let rank = rank_fn(solve_config.clone());
            Some(check_ab_sampled(af, 3, rng.next_u64(), &rank))
        }
        AxiomId::Independence => {
            let rank = rank_fn(solve_config.clone());
            let mut unions = component_unions(af, 4);
            // keep a handful per trial
            while unions.len() > 8 {
                let drop = (rng.next_u64() % unions.len() as u64) as usize;
                unions.swap_remove(drop);
            }
            for union in unions {
                let verdict =
                    check_in(af, &union, &rank).expect("unions are whole components");
                if !verdict.holds {
                    return Some(verdict);
                }
            }
            Some(AxiomVerdict::new(AxiomId::Independence))
        }
        _ => {
            let (sv, bounds) = solve_certified(&af.attack_matrix(), &solve_config).ok()?;
            let ranking = Ranking::from_strengths(&sv, 10.0 * FALSIFIER_TOLERANCE);
            let ev = Evidence::with_bounds(af, &ranking, &bounds);
            Some(match axiom {
                AxiomId::VoidPrecedence => check_vp(&ev),
                AxiomId::DefensePrecedence => check_dp(&ev),
                AxiomId::CounterTransitivity => check_ct(&ev),
                AxiomId::StrictCounterTransitivity => check_sct(&ev),
                AxiomId::CardinalityPrecedence => check_cp(&ev),
                AxiomId::QualityPrecedence => check_qp(&ev),
                AxiomId::DistributedDefensePrecedence => check_ddp(&ev),
                AxiomId::Abstraction | AxiomId::Independence => unreachable!(),
            })
        }
    }
}

/// A ranking function for [`check_ab`]/[`check_in`] backed by the solver
/// at the given configuration, with ties merged at ten times the solve
/// tolerance.
pub fn rank_fn(config: SolveConfig) -> impl Fn(&ArgumentationFramework) -> Ranking {
    move |af: &ArgumentationFramework| {
        let sv = crate::solver::solve(&af.attack_matrix(), &config)
            .expect("categoriser iteration converges on every framework");
        Ranking::from_strengths(&sv, 10.0 * config.tolerance)
    }
}
