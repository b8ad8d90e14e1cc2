//! Structured pass/fail records for identity suites.

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use serde::Serialize;

use crate::error::Error;

/// Version tag of the JSON report layout.
pub const REPORT_SCHEMA_VERSION: &str = "1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        })
    }
}

/// Outcome of one identity check.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Entry {
    pub id: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

/// Result of a check body: `Ok(None)` passes, `Ok(Some(w))` fails with witness `w`.
pub type CheckResult = crate::error::Result<Option<String>>;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub schema_version: String,
    pub suite: String,
    pub params: BTreeMap<String, String>,
    pub entries: Vec<Entry>,
    /// Whether SKIP entries are tolerated in the overall verdict.
    pub skips_allowed: bool,
    pub overall: Status,
}

impl VerificationReport {
    pub fn new(suite: &str) -> Self {
        VerificationReport {
            schema_version: REPORT_SCHEMA_VERSION.to_string(),
            suite: suite.to_string(),
            params: BTreeMap::new(),
            entries: Vec::new(),
            skips_allowed: false,
            overall: Status::Pass,
        }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    fn refresh(&mut self) {
        let fail = self.entries.iter().any(|e| e.status == Status::Fail);
        let skip = self.entries.iter().any(|e| e.status == Status::Skip);
        self.overall = if fail {
            Status::Fail
        } else if skip && !self.skips_allowed {
            Status::Skip
        } else {
            Status::Pass
        };
    }

    pub fn allow_skips(&mut self, yes: bool) {
        self.skips_allowed = yes;
        self.refresh();
    }

    pub fn push(&mut self, entry: Entry) {
        self.entries.push(entry);
        self.refresh();
    }

    pub fn pass(&mut self, id: impl Into<String>) {
        self.push(Entry { id: id.into(), status: Status::Pass, witness: None, detail: None, elapsed_ms: None });
    }

    pub fn fail(&mut self, id: impl Into<String>, witness: impl Into<String>) {
        self.push(Entry {
            id: id.into(),
            status: Status::Fail,
            witness: Some(witness.into()),
            detail: None,
            elapsed_ms: None,
        });
    }

    pub fn skip(&mut self, id: impl Into<String>, why: impl Into<String>) {
        self.push(Entry {
            id: id.into(),
            status: Status::Skip,
            witness: None,
            detail: Some(why.into()),
            elapsed_ms: None,
        });
    }

    /// Records `body` as one entry. Window insufficiency becomes SKIP; other
    /// errors become FAIL with the error text as witness.
    pub fn check(&mut self, id: impl Into<String>, body: impl FnOnce() -> CheckResult) {
        let start = Instant::now();
        let outcome = body();
        self.push(entry_from(id.into(), outcome, start));
    }

    /// Runs independent checks in parallel and appends them in the given order.
    pub fn check_all<F>(&mut self, items: Vec<(String, F)>)
    where
        F: FnOnce() -> CheckResult + Send,
    {
        use rayon::prelude::*;
        let results: Vec<Entry> = items
            .into_par_iter()
            .map(|(id, body)| {
                let start = Instant::now();
                entry_from(id, body(), start)
            })
            .collect();
        for e in results {
            self.push(e);
        }
    }

    /// Appends the entries of `other` with a prefix on their ids.
    pub fn absorb(&mut self, prefix: &str, other: VerificationReport) {
        for mut e in other.entries {
            e.id = format!("{prefix}{}", e.id);
            self.push(e);
        }
    }

    pub fn is_pass(&self) -> bool {
        self.overall == Status::Pass
    }

    pub fn count(&self, s: Status) -> usize {
        self.entries.iter().filter(|e| e.status == s).count()
    }

    /// Drops timing information so that output is reproducible.
    pub fn without_timings(mut self) -> Self {
        for e in &mut self.entries {
            e.elapsed_ms = None;
        }
        self
    }
}

fn entry_from(id: String, outcome: CheckResult, start: Instant) -> Entry {
    let elapsed_ms = Some(start.elapsed().as_secs_f64() * 1e3);
    match outcome {
        Ok(None) => Entry { id, status: Status::Pass, witness: None, detail: None, elapsed_ms },
        Ok(Some(w)) => Entry { id, status: Status::Fail, witness: Some(w), detail: None, elapsed_ms },
        Err(Error::WindowInsufficient(m)) => {
            Entry { id, status: Status::Skip, witness: None, detail: Some(format!("window insufficient: {m}")), elapsed_ms }
        }
        Err(e) => Entry { id, status: Status::Fail, witness: Some(format!("error: {e}")), detail: None, elapsed_ms },
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        writeln!(f, "suite {} [{}]", self.suite, params.join(", "))?;
        for e in &self.entries {
            write!(f, "  {} {}", e.status, e.id)?;
            if let Some(d) = &e.detail {
                write!(f, " ({d})")?;
            }
            if let Some(w) = &e.witness {
                write!(f, "\n      witness: {w}")?;
            }
            if let Some(t) = e.elapsed_ms {
                write!(f, " [{t:.1} ms]")?;
            }
            writeln!(f)?;
        }
        write!(
            f,
            "overall {} ({} pass, {} fail, {} skip)",
            self.overall,
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Skip)
        )
    }
}
