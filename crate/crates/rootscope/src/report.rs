//! Machine-readable verification reports.
//!
//! JSON is the stable contract: field order is fixed by declaration
//! order, floats are emitted with 17 significant digits (exact f64
//! round-trip), and no timestamps or host data appear anywhere, so a
//! given (spec, seed, tol) always produces byte-identical output.

use serde::{Deserialize, Serialize};
use std::io;

/// Ambient data every check entry carries for reproducibility.
#[derive(Debug, Clone)]
pub struct CheckCtx {
    pub algebra: String,
    pub seed: u64,
    pub trials: usize,
}

/// One verification record. `root` is the covector of the root space the
/// check ran on, absent for whole-algebra checks; `function_kind` and
/// `max_delta` are used by the invariant-function checks only.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct CheckEntry {
    pub check: String,
    pub algebra: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub root: Option<Vec<f64>>,
    pub trials: usize,
    pub max_residual: f64,
    pub tol: f64,
    pub pass: bool,
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub function_kind: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub max_delta: Option<f64>,
}

impl CheckEntry {
    /// A residual-style check: passes iff the residual stays below `tol`.
    pub fn residual(
        ctx: &CheckCtx,
        check: &str,
        root: Option<&[f64]>,
        trials: usize,
        max_residual: f64,
        tol: f64,
    ) -> CheckEntry {
        // non-finite residuals (an errored trial) fail but stay JSON-legal
        let max_residual = if max_residual.is_finite() {
            max_residual
        } else {
            f64::MAX
        };
        CheckEntry {
            check: check.to_string(),
            algebra: ctx.algebra.clone(),
            root: root.map(|r| r.to_vec()),
            trials,
            max_residual,
            tol,
            pass: max_residual < tol,
            seed: ctx.seed,
            function_kind: None,
            max_delta: None,
        }
    }

    /// An integer-exact check: residual reads 0 (pass) or the failure
    /// count, with tol 0.
    pub fn counted(ctx: &CheckCtx, check: &str, trials: usize, ok: bool) -> CheckEntry {
        CheckEntry {
            check: check.to_string(),
            algebra: ctx.algebra.clone(),
            root: None,
            trials,
            max_residual: if ok { 0.0 } else { 1.0 },
            tol: 0.0,
            pass: ok,
            seed: ctx.seed,
            function_kind: None,
            max_delta: None,
        }
    }

    pub fn with_root(mut self, root: &[f64]) -> CheckEntry {
        self.root = Some(root.to_vec());
        self
    }

    pub fn with_function(mut self, kind: &str, max_delta: f64) -> CheckEntry {
        self.function_kind = Some(kind.to_string());
        self.max_delta = Some(max_delta);
        self
    }
}

#[derive(Debug, Clone, Default)]
pub struct VerificationReport {
    pub entries: Vec<CheckEntry>,
}

impl VerificationReport {
    pub fn pass(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.entries.extend(other.entries);
    }
}

/// Export form of a root decomposition.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct RootDatumExport {
    pub algebra: String,
    pub dim: usize,
    pub rank: usize,
    pub roots: Vec<Vec<f64>>,
    pub multiplicities: Vec<usize>,
    pub m_dim: usize,
    pub tol: f64,
    pub seed: u64,
}

/// Aggregate output of the `suite` command.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct SuiteSummary {
    pub seed: u64,
    pub tol: f64,
    pub trials: usize,
    pub checks: Vec<String>,
    pub algebras: Vec<AlgebraSection>,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct AlgebraSection {
    pub algebra: String,
    pub root_datum: RootDatumExport,
    pub entries: Vec<CheckEntry>,
}

/// Serializes with 17-significant-digit floats so equal values produce
/// equal bytes and parsing recovers the exact f64.
pub fn to_json_string<T: Serialize>(value: &T) -> String {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, SciFormatter);
    value
        .serialize(&mut ser)
        .expect("in-memory serialization cannot fail");
    String::from_utf8(out).expect("serializer emits utf-8")
}

struct SciFormatter;

impl serde_json::ser::Formatter for SciFormatter {
    fn write_f64<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        write!(writer, "{:.16e}", value)
    }
}
