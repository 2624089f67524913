//! Command-line front end: build algebras, dump root data, run
//! verification suites, emit machine-readable reports.
//!
//! Exit codes are a contract: `0` everything passed, `1` a verification
//! check failed, `2` the input was invalid (unknown family, bad
//! parameters, malformed options).
//!
//! JSON is the stable output format (see `report`); the text output is
//! human-oriented and may change. `--json PATH` writes the JSON artifact
//! to a file (`-` for stdout). The default tolerance can be overridden
//! by the `ROOTSCOPE_TOL` environment variable; an explicit `--tol`
//! always wins.

use crate::catalog::{build, list_catalog, parse_tokens, AlgebraSpec, CatalogError};
use crate::liealg::{CartanData, LieAlgebra};
use crate::radiality::{
    fundamental_derivative_report, k_invariance_report, radiality_check, InvariantFunction,
};
use crate::report::{
    to_json_string, AlgebraSection, CheckCtx, CheckEntry, RootDatumExport, SuiteSummary,
};
use crate::rootspace::{decompose, grading_check, RootDatum};
use crate::theorem::{
    corollary_checks, reconstruction_report, relation1_report, relation1b_report, verify_theorem1,
};
use clap::{Args, Parser, Subcommand};
use std::fmt::Write as _;
use std::path::PathBuf;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

const DEFAULT_TOL: f64 = 1e-9;

/// Everything a command needs to run, resolved from arguments and
/// environment.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub spec: Option<AlgebraSpec>,
    pub tol: f64,
    pub seed: u64,
    pub trials: usize,
    pub json: Option<PathBuf>,
}

#[derive(Parser, Debug)]
#[command(
    name = "rootscope",
    version,
    about = "Restricted root space decompositions of classical real semisimple \
             Lie algebras, with numerical verification of their orthogonal structure"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute a restricted root decomposition and print it
    Roots {
        /// Algebra family and parameters, e.g. `sl 3`, `su 2 1`, `so 1 4`
        #[arg(value_name = "FAMILY_PARAMS", required = true, num_args = 1..)]
        algebra: Vec<String>,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Run verification checks against a decomposition
    Verify {
        /// Which checks: all | relation1 | relation1b | theorem1 | corollaries | grading
        #[arg(value_name = "WHICH")]
        which: String,
        /// Algebra family and parameters (alternative to --spec)
        #[arg(value_name = "FAMILY_PARAMS", num_args = 0..)]
        algebra: Vec<String>,
        /// Algebra as one quoted string, e.g. --spec "so 1 4"
        #[arg(long, value_name = "SPEC")]
        spec: Option<String>,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Verify radiality of an invariant function on every eligible root space
    Radiality {
        /// Algebra family and parameters, e.g. `so 1 4`
        #[arg(value_name = "FAMILY_PARAMS", required = true, num_args = 1..)]
        algebra: Vec<String>,
        /// Invariant function: trace_p | trace_p2 | trace_p_inv
        #[arg(long = "fn", value_name = "KIND", default_value = "trace_p")]
        function: String,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Run every check on every catalog algebra and aggregate one summary
    Suite {
        #[command(flatten)]
        opts: CommonOpts,
    },
}

#[derive(Args, Debug)]
struct CommonOpts {
    /// Residual tolerance (default 1e-9, or ROOTSCOPE_TOL if set)
    #[arg(long, value_name = "R")]
    tol: Option<f64>,
    /// Seed for all randomized checks
    #[arg(long, value_name = "N", default_value_t = 42)]
    seed: u64,
    /// Trials per randomized check
    #[arg(long, value_name = "N", default_value_t = 100)]
    trials: usize,
    /// Write the JSON artifact to PATH (`-` for stdout)
    #[arg(long, value_name = "PATH")]
    json: Option<PathBuf>,
}

/// Entry point used by `main`; returns the process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let is_usage_error = e.use_stderr();
            let _ = e.print();
            return if is_usage_error { EXIT_INPUT } else { EXIT_PASS };
        }
    };
    match cli.command {
        Command::Roots { algebra, opts } => match config_for(Some(&algebra), &opts) {
            Ok(cfg) => cmd_roots(&cfg),
            Err(code) => code,
        },
        Command::Verify {
            which,
            algebra,
            spec,
            opts,
        } => {
            let toks = match (algebra.is_empty(), &spec) {
                (false, None) => algebra.clone(),
                (true, Some(s)) => s.split_whitespace().map(str::to_string).collect(),
                (true, None) => {
                    eprintln!("error: give the algebra positionally or via --spec");
                    return EXIT_INPUT;
                }
                (false, Some(_)) => {
                    eprintln!("error: give the algebra positionally or via --spec, not both");
                    return EXIT_INPUT;
                }
            };
            let which = match which.parse::<WhichVerify>() {
                Ok(w) => w,
                Err(msg) => {
                    eprintln!("error: {}", msg);
                    return EXIT_INPUT;
                }
            };
            match config_for(Some(&toks), &opts) {
                Ok(cfg) => cmd_verify(&cfg, which),
                Err(code) => code,
            }
        }
        Command::Radiality {
            algebra,
            function,
            opts,
        } => {
            let f = match InvariantFunction::parse(&function) {
                Some(f) => f,
                None => {
                    eprintln!(
                        "error: unknown function kind '{}' (expected trace_p, trace_p2, or trace_p_inv)",
                        function
                    );
                    return EXIT_INPUT;
                }
            };
            match config_for(Some(&algebra), &opts) {
                Ok(cfg) => cmd_radiality(&cfg, f),
                Err(code) => code,
            }
        }
        Command::Suite { opts } => match config_for(None, &opts) {
            Ok(cfg) => cmd_suite(&cfg),
            Err(code) => code,
        },
    }
}

/// Which verification suites `verify` runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WhichVerify {
    All,
    Relation1,
    Relation1b,
    Theorem1,
    Corollaries,
    Grading,
}

impl std::str::FromStr for WhichVerify {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "all" => WhichVerify::All,
            "relation1" => WhichVerify::Relation1,
            "relation1b" => WhichVerify::Relation1b,
            "theorem1" => WhichVerify::Theorem1,
            "corollaries" => WhichVerify::Corollaries,
            "grading" => WhichVerify::Grading,
            other => {
                return Err(format!(
                    "unknown check '{}' (expected all, relation1, relation1b, theorem1, corollaries, or grading)",
                    other
                ))
            }
        })
    }
}

fn config_for(algebra: Option<&[String]>, opts: &CommonOpts) -> Result<RunConfig, i32> {
    let spec = match algebra {
        Some(toks) => {
            let refs: Vec<&str> = toks.iter().map(String::as_str).collect();
            match parse_tokens(&refs) {
                Ok(s) => Some(s),
                Err(e) => {
                    eprintln!("error: {}", e);
                    return Err(EXIT_INPUT);
                }
            }
        }
        None => None,
    };
    let tol = match opts.tol {
        Some(t) => t,
        None => match std::env::var("ROOTSCOPE_TOL") {
            Ok(raw) => match raw.parse::<f64>() {
                Ok(t) => t,
                Err(_) => {
                    eprintln!("error: ROOTSCOPE_TOL='{}' is not a number", raw);
                    return Err(EXIT_INPUT);
                }
            },
            Err(_) => DEFAULT_TOL,
        },
    };
    if !(tol.is_finite() && tol > 0.0) {
        eprintln!("error: tolerance must be a positive real, got {}", tol);
        return Err(EXIT_INPUT);
    }
    if opts.trials == 0 {
        eprintln!("error: --trials must be at least 1");
        return Err(EXIT_INPUT);
    }
    Ok(RunConfig {
        spec,
        tol,
        seed: opts.seed,
        trials: opts.trials,
        json: opts.json.clone(),
    })
}

struct Built {
    spec: AlgebraSpec,
    alg: LieAlgebra,
    cartan: CartanData,
    datum: RootDatum,
}

/// Build + decompose, mapping input-shaped errors to exit 2 and engine
/// failures to exit 1.
fn prepare(cfg: &RunConfig) -> Result<Built, i32> {
    let spec = cfg.spec.clone().expect("command requires an algebra");
    let (alg, cartan) = match build(&spec) {
        Ok(b) => b,
        Err(CatalogError::InvalidParams(msg)) => {
            eprintln!("error: {}", msg);
            return Err(EXIT_INPUT);
        }
        Err(e) => {
            eprintln!("error: constructing {} failed: {}", spec, e);
            return Err(EXIT_FAIL);
        }
    };
    let datum = match decompose(&alg, &cartan, cfg.tol, cfg.seed) {
        Ok(d) => d,
        Err(e) => {
            eprintln!("error: decomposing {} failed: {}", spec, e);
            return Err(EXIT_FAIL);
        }
    };
    Ok(Built {
        spec,
        alg,
        cartan,
        datum,
    })
}

fn export_datum(b: &Built, cfg: &RunConfig) -> RootDatumExport {
    RootDatumExport {
        algebra: b.spec.to_string(),
        dim: b.alg.dim,
        rank: b.datum.a_dim,
        roots: b.datum.roots.clone(),
        multiplicities: b.datum.multiplicities.clone(),
        m_dim: b.datum.m_frame.len(),
        tol: cfg.tol,
        seed: cfg.seed,
    }
}

/// Writes the JSON artifact per `--json` and prints the text summary
/// when JSON is not claiming stdout.
fn emit(cfg: &RunConfig, json_payload: &str, text: &str) -> Result<(), i32> {
    match &cfg.json {
        None => println!("{}", text),
        Some(p) if p.as_os_str() == "-" => println!("{}", json_payload),
        Some(p) => {
            if let Err(e) = std::fs::write(p, json_payload) {
                eprintln!("error: writing {}: {}", p.display(), e);
                return Err(EXIT_FAIL);
            }
            println!("{}", text);
        }
    }
    Ok(())
}

fn fmt_root(root: &[f64]) -> String {
    let comps: Vec<String> = root.iter().map(|c| format!("{:+.6}", c)).collect();
    format!("({})", comps.join(", "))
}

fn render_entries(text: &mut String, entries: &[CheckEntry]) {
    for e in entries {
        let status = if e.pass { "PASS" } else { "FAIL" };
        let root = e
            .root
            .as_deref()
            .map(|r| format!(" root={}", fmt_root(r)))
            .unwrap_or_default();
        let kind = e
            .function_kind
            .as_deref()
            .map(|k| format!(" fn={}", k))
            .unwrap_or_default();
        let _ = writeln!(
            text,
            "{} {:<30} {}{}{} max_residual={:.3e} tol={:.1e} trials={}",
            status, e.check, e.algebra, root, kind, e.max_residual, e.tol, e.trials
        );
    }
}

/// `roots`: print/write the decomposition of one algebra.
pub fn cmd_roots(cfg: &RunConfig) -> i32 {
    let b = match prepare(cfg) {
        Ok(b) => b,
        Err(code) => return code,
    };
    let export = export_datum(&b, cfg);
    let mut text = String::new();
    let _ = writeln!(
        text,
        "{}: dim {}, rank {}, dim m = {}",
        export.algebra, export.dim, export.rank, export.m_dim
    );
    for (root, mult) in export.roots.iter().zip(&export.multiplicities) {
        let _ = writeln!(text, "  root {}  multiplicity {}", fmt_root(root), mult);
    }
    let _ = write!(
        text,
        "total: {} restricted roots, g_0 accounts for dim {}",
        export.roots.len(),
        export.rank + export.m_dim
    );
    match emit(cfg, &to_json_string(&export), &text) {
        Ok(()) => EXIT_PASS,
        Err(code) => code,
    }
}

fn verify_entries(b: &Built, cfg: &RunConfig, which: WhichVerify, ctx: &CheckCtx) -> Vec<CheckEntry> {
    let mut entries = Vec::new();
    let (alg, cartan, datum) = (&b.alg, &b.cartan, &b.datum);
    let all = which == WhichVerify::All;
    if all || which == WhichVerify::Relation1 {
        entries.extend(
            relation1_report(alg, cartan, datum, cfg.trials, cfg.tol, cfg.seed, ctx).entries,
        );
    }
    if all || which == WhichVerify::Relation1b {
        entries.extend(
            relation1b_report(alg, cartan, datum, cfg.trials, cfg.tol, cfg.seed, ctx).entries,
        );
    }
    if all || which == WhichVerify::Theorem1 {
        for idx in 0..datum.roots.len() {
            entries.extend(
                verify_theorem1(alg, cartan, datum, idx, cfg.trials, cfg.tol, cfg.seed, ctx)
                    .entries,
            );
        }
        entries.extend(
            reconstruction_report(alg, cartan, datum, cfg.trials, cfg.tol, cfg.seed, ctx).entries,
        );
    }
    if all || which == WhichVerify::Corollaries {
        entries.extend(
            corollary_checks(alg, cartan, datum, cfg.trials, cfg.tol, cfg.seed, ctx).entries,
        );
    }
    if all || which == WhichVerify::Grading {
        entries.extend(grading_check(alg, cartan, datum, cfg.tol, ctx).entries);
    }
    entries
}

/// `verify`: run the selected checks on one algebra.
pub fn cmd_verify(cfg: &RunConfig, which: WhichVerify) -> i32 {
    let b = match prepare(cfg) {
        Ok(b) => b,
        Err(code) => return code,
    };
    let ctx = CheckCtx {
        algebra: b.spec.to_string(),
        seed: cfg.seed,
        trials: cfg.trials,
    };
    let entries = verify_entries(&b, cfg, which, &ctx);
    let pass = entries.iter().all(|e| e.pass);
    let mut text = String::new();
    render_entries(&mut text, &entries);
    let _ = write!(
        text,
        "{}: {} checks, {}",
        b.spec,
        entries.len(),
        if pass { "all passed" } else { "FAILURES above" }
    );
    match emit(cfg, &to_json_string(&entries), &text) {
        Ok(()) if pass => EXIT_PASS,
        Ok(()) => EXIT_FAIL,
        Err(code) => code,
    }
}

fn radiality_entries(
    b: &Built,
    cfg: &RunConfig,
    kinds: &[InvariantFunction],
    ctx: &CheckCtx,
) -> Result<Vec<CheckEntry>, i32> {
    let eligible: Vec<usize> = (0..b.datum.roots.len())
        .filter(|&i| b.datum.multiplicities[i] >= 2)
        .collect();
    if eligible.is_empty() {
        eprintln!(
            "error: {} has no root space of multiplicity >= 2; radiality is vacuous here",
            b.spec
        );
        return Err(EXIT_INPUT);
    }
    let mut entries = Vec::new();
    for f in kinds {
        entries.extend(k_invariance_report(&b.alg, &b.cartan, f, cfg.trials, cfg.seed, ctx).entries);
        entries.extend(
            fundamental_derivative_report(&b.alg, &b.datum, f, cfg.trials, cfg.seed, ctx).entries,
        );
        for &idx in &eligible {
            match radiality_check(
                &b.alg, &b.cartan, &b.datum, idx, f, cfg.trials, cfg.tol, cfg.seed, ctx,
            ) {
                Ok(rep) => entries.extend(rep.entries),
                Err(e) => {
                    eprintln!("error: radiality on {} root {}: {}", b.spec, idx, e);
                    return Err(EXIT_FAIL);
                }
            }
        }
    }
    Ok(entries)
}

/// `radiality`: equal-norm and tangential-gradient checks for one
/// invariant function on every eligible root space of one algebra.
pub fn cmd_radiality(cfg: &RunConfig, f: InvariantFunction) -> i32 {
    let b = match prepare(cfg) {
        Ok(b) => b,
        Err(code) => return code,
    };
    let ctx = CheckCtx {
        algebra: b.spec.to_string(),
        seed: cfg.seed,
        trials: cfg.trials,
    };
    let entries = match radiality_entries(&b, cfg, &[f], &ctx) {
        Ok(e) => e,
        Err(code) => return code,
    };
    let pass = entries.iter().all(|e| e.pass);
    let mut text = String::new();
    render_entries(&mut text, &entries);
    let _ = write!(
        text,
        "{}: {} checks with fn={}, {}",
        b.spec,
        entries.len(),
        f.name(),
        if pass { "all passed" } else { "FAILURES above" }
    );
    match emit(cfg, &to_json_string(&entries), &text) {
        Ok(()) if pass => EXIT_PASS,
        Ok(()) => EXIT_FAIL,
        Err(code) => code,
    }
}

/// `suite`: every check on every catalog algebra, one aggregate summary.
pub fn cmd_suite(cfg: &RunConfig) -> i32 {
    let mut algebras = Vec::new();
    for spec in list_catalog() {
        let algebra_cfg = RunConfig {
            spec: Some(spec.clone()),
            json: None,
            ..cfg.clone()
        };
        let b = match prepare(&algebra_cfg) {
            Ok(b) => b,
            Err(code) => return code,
        };
        let ctx = CheckCtx {
            algebra: b.spec.to_string(),
            seed: cfg.seed,
            trials: cfg.trials,
        };
        let mut entries = verify_entries(&b, &algebra_cfg, WhichVerify::All, &ctx);
        let has_eligible = b.datum.multiplicities.iter().any(|&m| m >= 2);
        if has_eligible {
            match radiality_entries(&b, &algebra_cfg, &InvariantFunction::all(), &ctx) {
                Ok(r) => entries.extend(r),
                Err(code) => return code,
            }
        }
        algebras.push(AlgebraSection {
            algebra: b.spec.to_string(),
            root_datum: export_datum(&b, &algebra_cfg),
            entries,
        });
    }
    let mut checks: Vec<String> = algebras
        .iter()
        .flat_map(|a| a.entries.iter().map(|e| e.check.clone()))
        .collect();
    checks.sort();
    checks.dedup();
    let pass = algebras.iter().all(|a| a.entries.iter().all(|e| e.pass));
    let summary = SuiteSummary {
        seed: cfg.seed,
        tol: cfg.tol,
        trials: cfg.trials,
        checks,
        algebras,
        pass,
    };
    let mut text = String::new();
    for a in &summary.algebras {
        let ok = a.entries.iter().all(|e| e.pass);
        let _ = writeln!(
            text,
            "{} {:<10} {} roots, dim m = {}, {} checks",
            if ok { "PASS" } else { "FAIL" },
            a.algebra,
            a.root_datum.roots.len(),
            a.root_datum.m_dim,
            a.entries.len()
        );
        if !ok {
            render_entries(&mut text, &a.entries);
        }
    }
    let _ = write!(
        text,
        "suite: {} algebras, {} distinct checks, seed {}, tol {:.1e}: {}",
        summary.algebras.len(),
        summary.checks.len(),
        summary.seed,
        summary.tol,
        if summary.pass { "all passed" } else { "FAILED" }
    );
    match emit(cfg, &to_json_string(&summary), &text) {
        Ok(()) if summary.pass => EXIT_PASS,
        Ok(()) => EXIT_FAIL,
        Err(code) => code,
    }
}
