use std::fmt;

use serde::Serialize;

use crate::cite;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Status {
    Obstructed,
    NotObstructed,
    Inconclusive,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Status::Obstructed => "Obstructed",
            Status::NotObstructed => "NotObstructed",
            Status::Inconclusive => "Inconclusive",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub statement: String,
    pub cite: &'static str,
}

/// Outcome of an obstruction criterion with the derivation that produced
/// it. Caveats list hypotheses that were assumed rather than checked.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub status: Status,
    pub trace: Vec<TraceStep>,
    pub caveats: Vec<String>,
}

impl Verdict {
    pub fn is_obstructed(&self) -> bool {
        self.status == Status::Obstructed
    }

    pub fn citations(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.trace.iter().map(|s| s.cite)
    }
}

/// Accumulates trace steps; every step must name a key from the citation
/// table.
#[derive(Debug, Default)]
pub(crate) struct TraceBuilder {
    steps: Vec<TraceStep>,
    caveats: Vec<String>,
}

impl TraceBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn step(&mut self, cite_key: &'static str, statement: impl Into<String>) -> &mut Self {
        debug_assert!(
            cite::lookup(cite_key).is_some(),
            "unknown citation {cite_key}"
        );
        self.steps.push(TraceStep {
            statement: statement.into(),
            cite: cite_key,
        });
        self
    }

    pub fn caveat(&mut self, text: impl Into<String>) -> &mut Self {
        self.caveats.push(text.into());
        self
    }

    pub fn finish(self, status: Status) -> Verdict {
        assert!(!self.steps.is_empty(), "verdict without a derivation");
        Verdict {
            status,
            trace: self.steps,
            caveats: self.caveats,
        }
    }
}
