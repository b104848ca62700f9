//! `fillcheck` command-line frontend.
//!
//! Every command takes a JSON payload, either from `--input` or assembled
//! from inline flags, and produces a [`Report`]. `batch` runs a manifest of
//! requests in parallel and keeps the results in manifest order.

mod commands;
mod render;
mod report;

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{Map, Value};

pub use commands::{execute, Options};
pub use render::{flatten, report_text};
pub use report::{CliError, Command, OutputMode, Report, Request, SCHEMA};

pub const MAX_MU_ENV: &str = "FILLCHECK_MAX_MU";

#[derive(Parser, Debug)]
#[command(
    name = "fillcheck",
    version,
    about = "Homological obstructions to contact embeddings and fillings"
)]
struct Cli {
    #[command(subcommand)]
    command: Sub,
}

#[derive(Subcommand, Debug)]
enum Sub {
    /// Milnor number, intersection form and verdicts for a Brieskorn link
    Brieskorn(Inline),
    /// Integral and field homology of a Brieskorn link
    LinkHomology(Inline),
    /// Check b_p(Sigma) = b_p(W) + b_(2n-p-1)(W)
    CheckDuality(Inline),
    /// Betti numbers of a Stein filling of a hypersurface in R^2n
    SteinFill(Inline),
    /// Contact homology ranks from the boundary and from the filling
    HcRank(Inline),
    /// Unit cotangent bundle Betti numbers and verdicts
    SphereBundle(Inline),
    /// Circle bundle of a negative line bundle: b_2 and verdicts
    CircleBundle(Inline),
    /// Effect of contact surgery on b_2 of the boundary and filling
    Surgery(Inline),
    /// Mayer-Vietoris bound on the Betti numbers of a filling
    MvBound(Inline),
    /// Smith normal form with unimodular certificates
    Snf(Inline),
    /// Run a JSON array of {"command", "payload"} requests
    Batch(BatchArgs),
}

impl Sub {
    fn split(self) -> Result<(Command, Inline), BatchArgs> {
        let c = match self {
            Sub::Brieskorn(a) => (Command::Brieskorn, a),
            Sub::LinkHomology(a) => (Command::LinkHomology, a),
            Sub::CheckDuality(a) => (Command::CheckDuality, a),
            Sub::SteinFill(a) => (Command::SteinFill, a),
            Sub::HcRank(a) => (Command::HcRank, a),
            Sub::SphereBundle(a) => (Command::SphereBundle, a),
            Sub::CircleBundle(a) => (Command::CircleBundle, a),
            Sub::Surgery(a) => (Command::Surgery, a),
            Sub::MvBound(a) => (Command::MvBound, a),
            Sub::Snf(a) => (Command::Snf, a),
            Sub::Batch(b) => return Err(b),
        };
        Ok(c)
    }
}

#[derive(Args, Debug)]
struct Inline {
    /// JSON payload file
    #[arg(long)]
    input: Option<PathBuf>,
    /// Brieskorn exponents, comma separated
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    exponents: Option<Vec<i64>>,
    /// Coefficient field: Q or Fp:<prime>
    #[arg(long)]
    field: Option<String>,
    /// Grading k for hc-rank
    #[arg(long, allow_negative_numbers = true)]
    degree: Option<i64>,
    /// Betti profile file for the boundary
    #[arg(long)]
    sigma: Option<PathBuf>,
    /// Betti profile file for the filling
    #[arg(long)]
    w: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = OutputMode::Json)]
    output: OutputMode,
}

#[derive(Args, Debug)]
struct BatchArgs {
    /// Manifest file: a JSON array of requests
    manifest: PathBuf,
    #[arg(long, value_enum, default_value_t = OutputMode::Json)]
    output: OutputMode,
}

/// Exit status and captured streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn failure(e: &CliError) -> Self {
        Outcome {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("error ({}): {e}\n", e.kind()),
        }
    }
}

fn read_json(path: &Path, what: &str) -> Result<Value, CliError> {
    let text = fs::read_to_string(path).map_err(|e| {
        CliError::Validation(format!("{what}: cannot read {}: {e}", path.display()))
    })?;
    serde_json::from_str(&text).map_err(|e| {
        CliError::Validation(format!("{what}: {} is not valid JSON: {e}", path.display()))
    })
}

fn build_payload(args: &Inline) -> Result<Value, CliError> {
    let mut payload = match &args.input {
        Some(path) => read_json(path, "--input")?,
        None => Value::Object(Map::new()),
    };
    let mut overrides = Map::new();
    if let Some(e) = &args.exponents {
        overrides.insert("exponents".into(), e.clone().into());
    }
    if let Some(f) = &args.field {
        overrides.insert("field".into(), f.clone().into());
    }
    if let Some(k) = args.degree {
        overrides.insert("degree".into(), k.into());
    }
    if let Some(path) = &args.sigma {
        overrides.insert("sigma".into(), read_json(path, "--sigma")?);
    }
    if let Some(path) = &args.w {
        overrides.insert("w".into(), read_json(path, "--w")?);
    }
    if !overrides.is_empty() {
        let Value::Object(map) = &mut payload else {
            return Err(CliError::Validation(
                "--input: inline flags need the payload to be a JSON object".into(),
            ));
        };
        map.extend(overrides);
    }
    Ok(payload)
}

fn options_from_env() -> Result<Options, CliError> {
    let mut opts = Options::default();
    if let Ok(raw) = std::env::var(MAX_MU_ENV) {
        opts.max_mu = raw.trim().parse().map_err(|_| {
            CliError::Validation(format!(
                "{MAX_MU_ENV}: expected a nonnegative integer, got {raw:?}"
            ))
        })?;
    }
    Ok(opts)
}

fn to_output<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

/// Parses `argv` (including the program name) and runs it.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: rendered,
                }
            } else {
                Outcome {
                    code: 0,
                    stdout: rendered,
                    stderr: String::new(),
                }
            };
        }
    };
    let opts = match options_from_env() {
        Ok(o) => o,
        Err(e) => return Outcome::failure(&e),
    };
    match cli.command.split() {
        Ok((command, args)) => run_single(command, &args, &opts),
        Err(batch) => run_batch(&batch, &opts),
    }
}

fn run_single(command: Command, args: &Inline, opts: &Options) -> Outcome {
    let report =
        build_payload(args).and_then(|payload| execute(&Request { command, payload }, opts));
    match report {
        Ok(r) => Outcome {
            code: 0,
            stdout: match args.output {
                OutputMode::Json => to_output(&r),
                OutputMode::Text => report_text(&r),
            },
            stderr: String::new(),
        },
        Err(e) => Outcome::failure(&e),
    }
}

#[derive(Debug, Serialize)]
struct ItemError {
    kind: &'static str,
    exit_code: i32,
    message: String,
}

#[derive(Debug, Serialize)]
pub struct BatchItem {
    index: usize,
    ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    report: Option<Report>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<ItemError>,
    #[serde(skip_serializing_if = "Option::is_none")]
    request: Option<Value>,
}

#[derive(Debug, Serialize)]
struct Summary {
    total: usize,
    succeeded: usize,
    failed: usize,
}

#[derive(Debug, Serialize)]
pub struct BatchReport {
    schema: &'static str,
    command: &'static str,
    items: Vec<BatchItem>,
    summary: Summary,
}

impl BatchReport {
    pub fn all_succeeded(&self) -> bool {
        self.summary.failed == 0
    }
}

/// Runs every request of a manifest. Item failures are recorded, not fatal.
pub fn batch(items: &[Value], opts: &Options) -> BatchReport {
    let items: Vec<BatchItem> = items
        .par_iter()
        .enumerate()
        .map(|(index, raw)| {
            let outcome = serde_json::from_value::<Request>(raw.clone())
                .map_err(|e| CliError::Validation(format!("request: {e}")))
                .and_then(|req| execute(&req, opts));
            match outcome {
                Ok(report) => BatchItem {
                    index,
                    ok: true,
                    report: Some(report),
                    error: None,
                    request: None,
                },
                Err(e) => BatchItem {
                    index,
                    ok: false,
                    report: None,
                    error: Some(ItemError {
                        kind: e.kind(),
                        exit_code: e.exit_code(),
                        message: e.to_string(),
                    }),
                    request: Some(raw.clone()),
                },
            }
        })
        .collect();
    let succeeded = items.iter().filter(|i| i.ok).count();
    BatchReport {
        schema: SCHEMA,
        command: "batch",
        summary: Summary {
            total: items.len(),
            succeeded,
            failed: items.len() - succeeded,
        },
        items,
    }
}

fn batch_text(b: &BatchReport) -> String {
    let mut s = format!("{} batch\n", b.schema);
    for item in &b.items {
        s.push_str(&format!("--- item {} ---\n", item.index));
        match (&item.report, &item.error) {
            (Some(r), _) => s.push_str(&report_text(r)),
            (None, Some(e)) => s.push_str(&format!("error ({}): {}\n", e.kind, e.message)),
            (None, None) => {}
        }
    }
    s.push_str(&format!(
        "summary: total = {}, succeeded = {}, failed = {}\n",
        b.summary.total, b.summary.succeeded, b.summary.failed
    ));
    s
}

fn run_batch(args: &BatchArgs, opts: &Options) -> Outcome {
    let manifest = match read_json(&args.manifest, "manifest") {
        Ok(v) => v,
        Err(e) => return Outcome::failure(&e),
    };
    let Value::Array(items) = manifest else {
        return Outcome::failure(&CliError::Validation(
            "manifest: expected a JSON array of requests".into(),
        ));
    };
    let report = batch(&items, opts);
    Outcome {
        code: if report.all_succeeded() { 0 } else { 1 },
        stdout: match args.output {
            OutputMode::Json => to_output(&report),
            OutputMode::Text => batch_text(&report),
        },
        stderr: String::new(),
    }
}
