//! Command-line front end: solve, rank, axioms, extensions, falsify, gen
//! and convert over APX/TGF files or standard streams.
//!
//! Exit codes are part of the interface and stable:
//! 0 success, 1 usage or parse error, 2 solver non-convergence,
//! 3 axiom violation found under `axioms --strict`, 4 falsifier witness.

use std::fmt::Write as _;
use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use catrank::axioms::{self, AxiomId, AxiomVerdict, FalsifierConfig};
use catrank::extensions;
use catrank::generator::{random_af, GenSpec};
use catrank::io::{emit_apx, emit_dot, emit_report, emit_tgf, parse_apx, parse_tgf};
use catrank::ranking::Ranking;
use catrank::solver::{self, SolveConfig, SolveError};
use catrank::{ArgumentSet, ArgumentationFramework};

#[derive(Parser)]
#[command(
    name = "catrank",
    version,
    about = "Categoriser strength valuation, ranking and axiom checks for argumentation frameworks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve the categoriser equations and print a report
    Solve(SolveCmd),
    /// Print the ranking, most acceptable arguments first
    Rank(RankCmd),
    /// Check ranking axioms on one framework
    Axioms(AxiomsCmd),
    /// Compute classical extension semantics
    Extensions(ExtensionsCmd),
    /// Search random frameworks for an axiom violation
    Falsify(FalsifyCmd),
    /// Generate a seeded random framework as APX
    Gen(GenCmd),
    /// Translate between input/output formats
    Convert(ConvertCmd),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InFormat {
    Apx,
    Tgf,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutFormat {
    Apx,
    Tgf,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SolveOut {
    Report,
    Csv,
}

#[derive(Args)]
struct InputArgs {
    /// Input file; `-` or absent reads standard input
    input: Option<PathBuf>,
    /// Input format; auto-detected from the file extension when omitted
    /// (standard input defaults to APX)
    #[arg(long, value_enum)]
    format: Option<InFormat>,
}

#[derive(Args)]
struct SolverArgs {
    /// Stopping tolerance (max-norm)
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    /// Iteration ceiling
    #[arg(long, default_value_t = 10_000)]
    max_iter: usize,
}

impl SolverArgs {
    fn config(&self) -> SolveConfig {
        SolveConfig {
            tolerance: self.tol,
            max_iterations: self.max_iter,
            init: None,
        }
    }
}

#[derive(Args)]
struct SolveCmd {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    solver: SolverArgs,
    /// Also compute certified per-argument intervals
    #[arg(long)]
    certify: bool,
    #[arg(long, value_enum, default_value_t = SolveOut::Report)]
    out: SolveOut,
}

#[derive(Args)]
struct RankCmd {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    solver: SolverArgs,
    /// Merge classes whose strengths differ by at most this;
    /// defaults to ten times the tolerance
    #[arg(long)]
    tie_eps: Option<f64>,
}

#[derive(Args)]
struct AxiomsCmd {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    solver: SolverArgs,
    /// Comma-separated axiom codes (Ab,In,VP,DP,CT,SCT,CP,QP,DDP) or `all`
    #[arg(long, default_value = "all")]
    axioms: String,
    /// Exit with status 3 when any violation is found
    #[arg(long)]
    strict: bool,
    /// Seed for the sampled permutations and component unions
    #[arg(long, value_parser = parse_seed, default_value = "0")]
    seed: u64,
}

#[derive(Args)]
struct ExtensionsCmd {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_enum)]
    semantics: SemanticsArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum SemanticsArg {
    Grounded,
    Complete,
    Preferred,
    Stable,
}

#[derive(Args)]
struct FalsifyCmd {
    /// Axiom code to attack (e.g. CP, QP, DDP)
    #[arg(long)]
    axiom: String,
    #[arg(long, default_value_t = 1000)]
    trials: u64,
    /// Largest framework size to draw (argument count is uniform in 3..=n-max)
    #[arg(long, default_value_t = 9)]
    n_max: usize,
    #[arg(long, value_parser = parse_seed, default_value = "0")]
    seed: u64,
    #[arg(long, default_value_t = 0.0)]
    edge_prob_min: f64,
    #[arg(long, default_value_t = 0.5)]
    edge_prob_max: f64,
}

#[derive(Args)]
struct GenCmd {
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 0.25)]
    edge_prob: f64,
    #[arg(long, value_parser = parse_seed, default_value = "0")]
    seed: u64,
    /// Exclude pairs (x, x) from the draw
    #[arg(long)]
    no_self_attacks: bool,
}

#[derive(Args)]
struct ConvertCmd {
    #[command(flatten)]
    input: InputArgs,
    /// Alias of --format
    #[arg(long, value_enum)]
    from: Option<InFormat>,
    #[arg(long, value_enum)]
    to: OutFormat,
}

/// Seeds are unsigned 64-bit integers, decimal or 0x-prefixed hex.
fn parse_seed(s: &str) -> Result<u64, String> {
    let parsed = match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => s.parse(),
    };
    parsed.map_err(|_| format!("`{s}` is not a decimal or 0x-hex 64-bit seed"))
}

enum CliError {
    /// Usage or parse problems: exit 1.
    Usage(String),
    /// The solver exhausted its iteration budget: exit 2.
    NonConvergence(String),
}

impl From<SolveError> for CliError {
    fn from(e: SolveError) -> Self {
        match e {
            SolveError::NonConvergence { .. } | SolveError::CertifiedNonConvergence { .. } => {
                CliError::NonConvergence(e.to_string())
            }
            other => CliError::Usage(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = u8::from(e.use_stderr());
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Solve(cmd) => cmd_solve(cmd),
        Command::Rank(cmd) => cmd_rank(cmd),
        Command::Axioms(cmd) => cmd_axioms(cmd),
        Command::Extensions(cmd) => cmd_extensions(cmd),
        Command::Falsify(cmd) => cmd_falsify(cmd),
        Command::Gen(cmd) => cmd_gen(cmd),
        Command::Convert(cmd) => cmd_convert(cmd),
    };
    match result {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::NonConvergence(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn load(input: &InputArgs) -> Result<ArgumentationFramework, CliError> {
    let stdin_marker = PathBuf::from("-");
    let (text, format) = match &input.input {
        Some(path) if *path != stdin_marker => {
            let text = fs::read_to_string(path)
                .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
            let format = input.format.unwrap_or_else(|| {
                match path.extension().and_then(|e| e.to_str()) {
                    Some(ext) if ext.eq_ignore_ascii_case("tgf") => InFormat::Tgf,
                    _ => InFormat::Apx,
                }
            });
            (text, format)
        }
        _ => {
            let mut text = String::new();
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| CliError::Usage(format!("cannot read standard input: {e}")))?;
            (text, input.format.unwrap_or(InFormat::Apx))
        }
    };
    let parsed = match format {
        InFormat::Apx => parse_apx(&text),
        InFormat::Tgf => parse_tgf(&text),
    };
    parsed.map_err(|e| CliError::Usage(e.to_string()))
}

fn fmt_value(x: f64) -> String {
    format!("{x:.16e}")
}

fn cmd_solve(cmd: SolveCmd) -> Result<ExitCode, CliError> {
    let af = load(&cmd.input)?;
    let config = cmd.solver.config();
    let matrix = af.attack_matrix();
    let (sv, bounds) = if cmd.certify {
        let (sv, bounds) = solver::solve_certified(&matrix, &config)?;
        (sv, Some(bounds))
    } else {
        (solver::solve(&matrix, &config)?, None)
    };
    let ranking = Ranking::from_strengths(&sv, 10.0 * config.tolerance);
    match cmd.out {
        SolveOut::Report => {
            let report = emit_report(&af, &sv, bounds.as_ref(), &ranking)
                .map_err(|e| CliError::Usage(e.to_string()))?;
            print!("{report}");
        }
        SolveOut::Csv => {
            let mut out = String::new();
            match &bounds {
                Some(b) => {
                    out.push_str("argument,strength,lower,upper\n");
                    for i in 0..af.n() {
                        writeln!(
                            out,
                            "{},{},{},{}",
                            af.name(i),
                            fmt_value(sv.values[i]),
                            fmt_value(b.lower[i]),
                            fmt_value(b.upper[i])
                        )
                        .unwrap();
                    }
                }
                None => {
                    out.push_str("argument,strength\n");
                    for i in 0..af.n() {
                        writeln!(out, "{},{}", af.name(i), fmt_value(sv.values[i])).unwrap();
                    }
                }
            }
            print!("{out}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_rank(cmd: RankCmd) -> Result<ExitCode, CliError> {
    let af = load(&cmd.input)?;
    let config = cmd.solver.config();
    let tie_eps = cmd.tie_eps.unwrap_or(10.0 * config.tolerance);
    if !(tie_eps >= 0.0 && tie_eps.is_finite()) {
        return Err(CliError::Usage(format!(
            "--tie-eps must be a nonnegative finite number, got {tie_eps}"
        )));
    }
    let sv = solver::solve(&af.attack_matrix(), &config)?;
    let ranking = Ranking::from_strengths(&sv, tie_eps);
    let line = ranking
        .classes()
        .iter()
        .map(|class| {
            class
                .iter()
                .map(|&x| af.name(x))
                .collect::<Vec<_>>()
                .join(", ")
        })
        .collect::<Vec<_>>()
        .join(" > ");
    if !line.is_empty() {
        println!("{line}");
    }
    Ok(ExitCode::SUCCESS)
}

fn requested_axioms(spec: &str) -> Result<Vec<AxiomId>, CliError> {
    if spec.trim().eq_ignore_ascii_case("all") {
        return Ok(AxiomId::ALL.to_vec());
    }
    let mut out = Vec::new();
    for token in spec.split(',') {
        let token = token.trim();
        if token.is_empty() {
            continue;
        }
        let axiom: AxiomId = token
            .parse()
            .map_err(|e: axioms::UnknownAxiom| CliError::Usage(e.to_string()))?;
        if !out.contains(&axiom) {
            out.push(axiom);
        }
    }
    if out.is_empty() {
        return Err(CliError::Usage("no axioms requested".into()));
    }
    Ok(out)
}

fn describe(verdict: &AxiomVerdict, af: &ArgumentationFramework) -> String {
    let mut line = String::new();
    if verdict.holds {
        write!(line, "{:<4} pass", verdict.axiom.code()).unwrap();
        if let Some(note) = verdict.notes.first() {
            write!(line, " ({note})").unwrap();
        }
        if !verdict.unresolved.is_empty() {
            write!(line, " [{} pair(s) numerically unresolved]", verdict.unresolved.len()).unwrap();
        }
    } else {
        let w = &verdict.witnesses[0];
        write!(
            line,
            "{:<4} VIOLATION ({}, {}): {}",
            verdict.axiom.code(),
            af.name(w.x),
            af.name(w.y),
            w.detail
        )
        .unwrap();
        if verdict.witnesses.len() > 1 {
            write!(line, " [+{} more]", verdict.witnesses.len() - 1).unwrap();
        }
    }
    line
}

fn cmd_axioms(cmd: AxiomsCmd) -> Result<ExitCode, CliError> {
    let af = load(&cmd.input)?;
    let which = requested_axioms(&cmd.axioms)?;
    let config = cmd.solver.config();
    let matrix = af.attack_matrix();
    let (sv, bounds) = solver::solve_certified(&matrix, &config)?;
    let ranking = Ranking::from_strengths(&sv, 10.0 * config.tolerance);
    let evidence = axioms::Evidence::with_bounds(&af, &ranking, &bounds);
    let rank = axioms::rank_fn(config.clone());

    let mut any_violation = false;
    for axiom in which {
        let verdict = match axiom {
            AxiomId::Abstraction => axioms::check_ab_sampled(&af, 10, cmd.seed, &rank),
            AxiomId::Independence => axioms::check_in_all_unions(&af, &rank),
            AxiomId::VoidPrecedence => axioms::check_vp(&evidence),
            AxiomId::DefensePrecedence => axioms::check_dp(&evidence),
            AxiomId::CounterTransitivity => axioms::check_ct(&evidence),
            AxiomId::StrictCounterTransitivity => axioms::check_sct(&evidence),
            AxiomId::CardinalityPrecedence => axioms::check_cp(&evidence),
            AxiomId::QualityPrecedence => axioms::check_qp(&evidence),
            AxiomId::DistributedDefensePrecedence => axioms::check_ddp(&evidence),
        };
        any_violation |= !verdict.holds;
        println!("{}", describe(&verdict, &af));
    }
    if any_violation && cmd.strict {
        Ok(ExitCode::from(3))
    } else {
        Ok(ExitCode::SUCCESS)
    }
}

fn format_set(af: &ArgumentationFramework, s: &ArgumentSet) -> String {
    let names: Vec<&str> = s.iter().map(|&x| af.name(x)).collect();
    format!("{{{}}}", names.join(", "))
}

fn cmd_extensions(cmd: ExtensionsCmd) -> Result<ExitCode, CliError> {
    let af = load(&cmd.input)?;
    let result = match cmd.semantics {
        SemanticsArg::Grounded => {
            println!("{}", format_set(&af, &extensions::grounded(&af)));
            return Ok(ExitCode::SUCCESS);
        }
        SemanticsArg::Complete => extensions::complete_extensions(&af),
        SemanticsArg::Preferred => extensions::preferred_extensions(&af),
        SemanticsArg::Stable => extensions::stable_extensions(&af),
    };
    let set = result.map_err(|e| CliError::Usage(e.to_string()))?;
    if set.extensions.is_empty() {
        println!("(none)");
    } else {
        for ext in &set.extensions {
            println!("{}", format_set(&af, ext));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_falsify(cmd: FalsifyCmd) -> Result<ExitCode, CliError> {
    let axiom: AxiomId = cmd
        .axiom
        .parse()
        .map_err(|e: axioms::UnknownAxiom| CliError::Usage(e.to_string()))?;
    if cmd.n_max < 3 {
        return Err(CliError::Usage("--n-max must be at least 3".into()));
    }
    let (lo, hi) = (cmd.edge_prob_min, cmd.edge_prob_max);
    if !((0.0..=1.0).contains(&lo) && (0.0..=1.0).contains(&hi) && lo <= hi) {
        return Err(CliError::Usage(format!(
            "edge probability range [{lo}, {hi}] must be an ordered subrange of [0, 1]"
        )));
    }
    if cmd.trials == 0 {
        return Err(CliError::Usage("--trials must be at least 1".into()));
    }
    let report = axioms::falsify(
        axiom,
        &FalsifierConfig {
            n_max: cmd.n_max,
            edge_prob_range: (lo, hi),
            trials: cmd.trials,
            seed: cmd.seed,
        },
    );
    match report.witness {
        Some(witness) => {
            println!(
                "{} violated at trial {} (seed {}):",
                axiom,
                witness.trial,
                report.seed
            );
            print!("{}", emit_apx(&witness.af));
            for w in &witness.verdict.witnesses {
                println!(
                    "violating pair ({}, {}): {}",
                    witness.af.name(w.x),
                    witness.af.name(w.y),
                    w.detail
                );
            }
            Ok(ExitCode::from(4))
        }
        None => {
            println!("no witness in {} trials", report.trials);
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn cmd_gen(cmd: GenCmd) -> Result<ExitCode, CliError> {
    if !(0.0..=1.0).contains(&cmd.edge_prob) {
        return Err(CliError::Usage(format!(
            "--edge-prob must lie in [0, 1], got {}",
            cmd.edge_prob
        )));
    }
    let af = random_af(&GenSpec {
        n: cmd.n,
        edge_prob: cmd.edge_prob,
        allow_self_attacks: !cmd.no_self_attacks,
        seed: cmd.seed,
    });
    print!("{}", emit_apx(&af));
    Ok(ExitCode::SUCCESS)
}

fn cmd_convert(cmd: ConvertCmd) -> Result<ExitCode, CliError> {
    let mut input = cmd.input;
    if input.format.is_none() {
        input.format = cmd.from;
    }
    let af = load(&input)?;
    let text = match cmd.to {
        OutFormat::Apx => emit_apx(&af),
        OutFormat::Tgf => emit_tgf(&af),
        OutFormat::Dot => emit_dot(&af, None).map_err(|e| CliError::Usage(e.to_string()))?,
    };
    print!("{text}");
    Ok(ExitCode::SUCCESS)
}
