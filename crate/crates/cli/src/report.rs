use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use fillcheck_core::cite::{self, Citation};
use fillcheck_core::{Error, Verdict};
use serde::{Deserialize, Serialize};
use serde_json::Value;

pub const SCHEMA: &str = "fillcheck/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    Brieskorn,
    LinkHomology,
    CheckDuality,
    SteinFill,
    HcRank,
    SphereBundle,
    CircleBundle,
    Surgery,
    MvBound,
    Snf,
}

impl Command {
    pub const ALL: [Command; 10] = [
        Command::Brieskorn,
        Command::LinkHomology,
        Command::CheckDuality,
        Command::SteinFill,
        Command::HcRank,
        Command::SphereBundle,
        Command::CircleBundle,
        Command::Surgery,
        Command::MvBound,
        Command::Snf,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Command::Brieskorn => "brieskorn",
            Command::LinkHomology => "link-homology",
            Command::CheckDuality => "check-duality",
            Command::SteinFill => "stein-fill",
            Command::HcRank => "hc-rank",
            Command::SphereBundle => "sphere-bundle",
            Command::CircleBundle => "circle-bundle",
            Command::Surgery => "surgery",
            Command::MvBound => "mv-bound",
            Command::Snf => "snf",
        }
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Command {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        Command::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| CliError::Validation(format!("unknown command {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutputMode {
    #[default]
    Json,
    Text,
}

/// One unit of work: a command and its JSON payload.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Request {
    pub command: Command,
    #[serde(default = "empty_object")]
    pub payload: Value,
}

fn empty_object() -> Value {
    Value::Object(Default::default())
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CliError {
    /// Malformed or out-of-range input.
    #[error("{0}")]
    Validation(String),
    /// Well-formed input that fails a mathematical precondition.
    #[error("{0}")]
    Precondition(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) => 2,
            CliError::Precondition(_) => 3,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Validation(_) => "validation",
            CliError::Precondition(_) => "precondition",
        }
    }

    pub(crate) fn context(self, what: &str) -> Self {
        match self {
            CliError::Validation(m) => CliError::Validation(format!("{what}: {m}")),
            CliError::Precondition(m) => CliError::Precondition(format!("{what}: {m}")),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Shape(_)
            | Error::NotPrime(_)
            | Error::BadExponent { .. }
            | Error::TooFewExponents(_)
            | Error::BadBlockSize(_)
            | Error::Profile(_)
            | Error::NotPoincareDual { .. }
            | Error::BadField(_) => CliError::Validation(e.to_string()),
            Error::MilnorNumberTooLarge { .. }
            | Error::MilnorNumberOverflow
            | Error::FieldMismatch(_, _)
            | Error::Dimension(_)
            | Error::Hypothesis(_)
            | Error::Inconsistent(_) => CliError::Precondition(e.to_string()),
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Validation(e.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub command: Command,
    pub inputs: Value,
    pub results: Value,
    pub verdicts: BTreeMap<String, Verdict>,
    pub citations: Vec<&'static Citation>,
    pub warnings: Vec<String>,
}

/// Collects a report while a command runs.
#[derive(Debug)]
pub(crate) struct ReportBuilder {
    command: Command,
    inputs: Value,
    verdicts: BTreeMap<String, Verdict>,
    cites: Vec<&'static str>,
    warnings: Vec<String>,
}

impl ReportBuilder {
    pub fn new(command: Command, inputs: Value) -> Self {
        Self {
            command,
            inputs,
            verdicts: BTreeMap::new(),
            cites: Vec::new(),
            warnings: Vec::new(),
        }
    }

    pub fn cite(&mut self, key: &'static str) -> &mut Self {
        self.cites.push(key);
        self
    }

    pub fn warn(&mut self, text: impl Into<String>) -> &mut Self {
        self.warnings.push(text.into());
        self
    }

    pub fn verdict(&mut self, name: &str, v: Verdict) -> &mut Self {
        self.cites.extend(v.citations());
        for c in &v.caveats {
            self.warnings.push(format!("{name}: {c}"));
        }
        self.verdicts.insert(name.to_string(), v);
        self
    }

    pub fn finish(self, results: Value) -> Report {
        let citations = cite::TABLE
            .iter()
            .filter(|c| self.cites.contains(&c.key))
            .collect();
        let mut warnings = Vec::new();
        for w in self.warnings {
            if !warnings.contains(&w) {
                warnings.push(w);
            }
        }
        Report {
            schema: SCHEMA,
            command: self.command,
            inputs: self.inputs,
            results,
            verdicts: self.verdicts,
            citations,
            warnings,
        }
    }
}
