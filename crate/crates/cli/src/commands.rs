//! The three subcommands, as plain functions from parsed arguments to
//! written files.
//!
//! Every failure is a [`CliError`]: a stable machine kind plus a human
//! message. The binary prints it as a JSON record on stdout and exits with
//! code 2; success writes the report file(s) and exits 0.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use serde::Serialize;

use l2dim_core::betti::{betti1_exhaustion, sweep_quotients, QuotientFamilySpec, SweepOutcome};
use l2dim_core::rational::{format_significant, rational_to_f64};
use l2dim_core::truncation::{
    approximate_bounded, lp_deficit, Cochain0, CochainFile, Graph, GraphFile,
};
use l2dim_core::words::Presentation;

use crate::schema::{
    ComputeOutput, ErrorJson, ErrorOutput, ExhaustionRow, ProblemFile, ReportJson, SweepRecord,
    TruncateOutput,
};

/// Significant digits used for CSV decimals.
const CSV_DIGITS: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliError {
    pub kind: String,
    pub message: String,
}

impl CliError {
    pub fn new(kind: &str, message: impl Into<String>) -> Self {
        CliError {
            kind: kind.to_owned(),
            message: message.into(),
        }
    }

    pub fn to_record(&self) -> ErrorOutput {
        ErrorOutput {
            error: ErrorJson {
                kind: self.kind.clone(),
                message: self.message.clone(),
            },
        }
    }
}

impl From<l2dim_core::Error> for CliError {
    fn from(error: l2dim_core::Error) -> Self {
        CliError {
            kind: error.kind().to_owned(),
            message: error.to_string(),
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {}", self.kind, self.message)
    }
}

impl std::error::Error for CliError {}

fn read_text(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path)
        .map_err(|e| CliError::new("io", format!("cannot read {}: {e}", path.display())))
}

fn parse_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = read_text(path)?;
    serde_json::from_str(&text)
        .map_err(|e| CliError::new("json", format!("cannot parse {}: {e}", path.display())))
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<(), CliError> {
    let mut text = serde_json::to_string_pretty(value)
        .map_err(|e| CliError::new("json", format!("cannot serialize report: {e}")))?;
    text.push('\n');
    fs::write(path, text)
        .map_err(|e| CliError::new("io", format!("cannot write {}: {e}", path.display())))
}

fn load_presentation(file: &ProblemFile) -> Result<Presentation, CliError> {
    Ok(Presentation::parse(file.generators.clone(), &file.relators)?)
}

#[derive(Clone, Debug)]
pub struct ComputeArgs {
    pub input: PathBuf,
    pub output: PathBuf,
    pub exhaust: bool,
}

/// `compute`: one presentation, one realization, one report.
pub fn cmd_compute(args: &ComputeArgs, cap: usize) -> Result<(), CliError> {
    let file: ProblemFile = parse_json(&args.input)?;
    let presentation = load_presentation(&file)?;
    let spec = file.realization.as_ref().ok_or_else(|| {
        CliError::new(
            "missing-realization",
            "compute needs a \"realization\" object in the input file",
        )
    })?;
    let realization = spec.realize(&presentation, cap)?;
    let relator_count = presentation.relator_count();
    let report = betti1_exhaustion(&realization, &presentation, relator_count)?;
    let exhaustion = if args.exhaust {
        let mut rows = Vec::with_capacity(relator_count + 1);
        for j in 0..=relator_count {
            let row = betti1_exhaustion(&realization, &presentation, j)?;
            rows.push(ExhaustionRow {
                active_relators: j,
                report: ReportJson::from(&row),
            });
        }
        Some(rows)
    } else {
        None
    };
    write_json(
        &args.output,
        &ComputeOutput {
            report: ReportJson::from(&report),
            exhaustion,
        },
    )?;
    eprintln!("wrote {}", args.output.display());
    Ok(())
}

#[derive(Clone, Debug)]
pub struct SweepArgs {
    pub input: PathBuf,
    /// `abelian-grid`, `cyclic`, or a path to a family JSON file.
    pub family: String,
    pub from: Option<usize>,
    pub to: Option<usize>,
    pub output: PathBuf,
    pub csv: Option<PathBuf>,
    pub jobs: Option<usize>,
}

fn resolve_family(args: &SweepArgs) -> Result<QuotientFamilySpec, CliError> {
    let range = || -> Result<(usize, usize), CliError> {
        let (Some(from), Some(to)) = (args.from, args.to) else {
            return Err(CliError::new(
                "bad-flag",
                format!("family {} needs --from and --to", args.family),
            ));
        };
        if from > to {
            return Err(CliError::new(
                "empty-range",
                format!("--from {from} exceeds --to {to}"),
            ));
        }
        if from < 2 {
            return Err(CliError::new(
                "bad-range",
                format!("--from must be at least 2, got {from}"),
            ));
        }
        Ok((from, to))
    };
    match args.family.as_str() {
        "abelian-grid" => {
            let (from, to) = range()?;
            Ok(QuotientFamilySpec::AbelianGrid { from, to })
        }
        "cyclic" => {
            let (from, to) = range()?;
            Ok(QuotientFamilySpec::Cyclic { from, to })
        }
        path => {
            if args.from.is_some() || args.to.is_some() {
                return Err(CliError::new(
                    "bad-flag",
                    "--from/--to apply only to the named families",
                ));
            }
            parse_json(Path::new(path))
        }
    }
}

fn sweep_records(outcome: &SweepOutcome) -> Vec<SweepRecord> {
    outcome
        .members
        .iter()
        .map(|member| match &member.approximation {
            Ok(report) => SweepRecord {
                label: member.label.clone(),
                approximation: Some(ReportJson::from(report)),
                error: None,
            },
            Err(error) => SweepRecord {
                label: member.label.clone(),
                approximation: None,
                error: Some(ErrorJson {
                    kind: error.kind().to_owned(),
                    message: error.to_string(),
                }),
            },
        })
        .collect()
}

fn sweep_csv(outcome: &SweepOutcome) -> String {
    let mut out = String::from("order,beta0,beta1,delta2\n");
    let decimal = |r| format_significant(rational_to_f64(r), CSV_DIGITS);
    for member in &outcome.members {
        if let Ok(report) = &member.approximation {
            writeln!(
                out,
                "{},{},{},{}",
                report.order,
                decimal(&report.beta0),
                decimal(&report.beta1),
                decimal(&report.delta2),
            )
            .expect("writing to a string cannot fail");
        }
    }
    out
}

/// `sweep`: one presentation against a family of realizations. The report
/// file is a JSON array in family order; failed members carry their error in
/// place. Exit is successful as long as the family was well formed, even if
/// individual members failed.
pub fn cmd_sweep(args: &SweepArgs, cap: usize) -> Result<(), CliError> {
    let file: ProblemFile = parse_json(&args.input)?;
    let presentation = load_presentation(&file)?;
    let family = resolve_family(args)?;
    let outcome = match args.jobs {
        None => sweep_quotients(&presentation, &family, cap),
        Some(0) => return Err(CliError::new("bad-flag", "--jobs must be at least 1")),
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| CliError::new("jobs", format!("cannot build thread pool: {e}")))?
            .install(|| sweep_quotients(&presentation, &family, cap)),
    };
    write_json(&args.output, &sweep_records(&outcome))?;
    eprintln!("wrote {}", args.output.display());
    if let Some(csv_path) = &args.csv {
        fs::write(csv_path, sweep_csv(&outcome))
            .map_err(|e| CliError::new("io", format!("cannot write {}: {e}", csv_path.display())))?;
        eprintln!("wrote {}", csv_path.display());
    }
    if outcome.stopped_by_order_cap {
        eprintln!("sweep stopped early: a member exceeded the element cap of {cap}");
    }
    // The report file is still useful when members fail, but a sweep in
    // which nothing succeeded should not look like a success to scripts.
    if outcome
        .members
        .iter()
        .all(|member| member.approximation.is_err())
    {
        return Err(CliError::new(
            "no-member-succeeded",
            "every sweep member failed; the report array holds the per-member errors",
        ));
    }
    Ok(())
}

#[derive(Clone, Debug)]
pub struct TruncateArgs {
    pub graph: PathBuf,
    pub function: PathBuf,
    pub p: f64,
    pub epsilon: f64,
    pub output: PathBuf,
}

/// `truncate`: clamp a rational vertex function so its coboundary moves by
/// less than epsilon in lp norm, and report the certificate.
pub fn cmd_truncate(args: &TruncateArgs) -> Result<(), CliError> {
    if !args.p.is_finite() || args.p < 1.0 {
        return Err(CliError::new("bad-flag", "--p must be a finite number >= 1"));
    }
    if !args.epsilon.is_finite() || args.epsilon <= 0.0 {
        return Err(CliError::new("bad-flag", "--epsilon must be a finite number > 0"));
    }
    let graph_file: GraphFile = parse_json(&args.graph)?;
    let graph = Graph::try_from(graph_file)?;
    let cochain_file: CochainFile = parse_json(&args.function)?;
    let values = cochain_file.parse_values()?;
    let cochain = Cochain0::for_graph(&graph, values)?;

    let approx = approximate_bounded(&graph, &cochain, args.p, args.epsilon);
    let (_, boundary_edges) = lp_deficit(&graph, &cochain, &approx.t, args.p);
    write_json(
        &args.output,
        &TruncateOutput {
            p: args.p,
            epsilon: args.epsilon,
            t: l2dim_core::rational::format_rational(&approx.t),
            certified_deficit: approx.certified_deficit,
            sup_norm: l2dim_core::rational::format_rational(&approx.truncated.sup_norm()),
            boundary_edge_count: boundary_edges.len(),
        },
    )?;
    eprintln!("wrote {}", args.output.display());
    Ok(())
}
