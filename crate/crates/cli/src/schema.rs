//! JSON shapes of the problem files the CLI reads and the reports it writes.
//!
//! Output structs serialize with a fixed field order and rationals as
//! `"p/q"` strings, so a given input always produces byte-identical report
//! files.

use serde::{Deserialize, Serialize};

use l2dim_core::betti::{BettiReport, RealizationSpec};
use l2dim_core::rational::format_rational;

/// The main input file: a presentation, optionally with the realization the
/// `compute` command needs. `sweep` ignores the realization field and takes
/// its family from the command line.
#[derive(Clone, Debug, Deserialize)]
pub struct ProblemFile {
    pub generators: Vec<String>,
    pub relators: Vec<String>,
    #[serde(default)]
    pub realization: Option<RealizationSpec>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct ReportJson {
    pub order: usize,
    pub generator_count: usize,
    pub relator_count: usize,
    pub rank_d1: usize,
    pub rank_d2: usize,
    pub dim_ker_d1: usize,
    pub beta0: String,
    pub beta1: String,
    pub delta2: String,
    pub delta2_alt: String,
    pub consistent: bool,
}

impl From<&BettiReport> for ReportJson {
    fn from(report: &BettiReport) -> Self {
        ReportJson {
            order: report.order,
            generator_count: report.generator_count,
            relator_count: report.relator_count,
            rank_d1: report.rank_d1,
            rank_d2: report.rank_d2,
            dim_ker_d1: report.dim_ker_d1,
            beta0: format_rational(&report.beta0),
            beta1: format_rational(&report.beta1),
            delta2: format_rational(&report.delta2),
            delta2_alt: format_rational(&report.delta2_alt),
            consistent: report.consistent,
        }
    }
}

/// Output of `compute`: the full-complex report, plus one row per relator
/// prefix when `--exhaust` is set.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ComputeOutput {
    pub report: ReportJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exhaustion: Option<Vec<ExhaustionRow>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ExhaustionRow {
    pub active_relators: usize,
    pub report: ReportJson,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct ErrorJson {
    pub kind: String,
    pub message: String,
}

/// One member of a sweep report file (the file is a JSON array of these, in
/// family order). Exactly one of `approximation` and `error` is present; the
/// field is called an approximation because the member stands in for a group
/// the sweep as a whole is probing, not for itself.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SweepRecord {
    pub label: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub approximation: Option<ReportJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorJson>,
}

/// Output of `truncate`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TruncateOutput {
    pub p: f64,
    pub epsilon: f64,
    /// Chosen threshold, exact.
    pub t: String,
    /// lp norm of the coboundary difference at `t`.
    pub certified_deficit: f64,
    /// Sup norm of the truncated cochain, exact; at most `t`.
    pub sup_norm: String,
    /// Number of edges leaving the sublevel set, i.e. where the coboundary
    /// may have changed.
    pub boundary_edge_count: usize,
}

/// Structured error record, printed to stdout when a command fails.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ErrorOutput {
    pub error: ErrorJson,
}
