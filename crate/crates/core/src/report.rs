//! Validation and check reports.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::Serialize;
use serde_json::Value;

/// One violated condition, with every detail found for the same witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub kind: String,
    pub witness: String,
    pub details: Vec<String>,
}

/// Violations grouped by `(kind, witness)` in the order first seen.
#[derive(Clone, Debug, Default, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    #[serde(skip)]
    seen: HashMap<(String, String), usize>,
}

impl PartialEq for ValidationReport {
    fn eq(&self, other: &Self) -> bool {
        self.violations == other.violations
    }
}

impl ValidationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn len(&self) -> usize {
        self.violations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn push(&mut self, kind: &str, witness: impl Into<String>, detail: impl Into<String>) {
        let key = (kind.to_string(), witness.into());
        let detail = detail.into();
        match self.seen.get(&key) {
            Some(&i) => self.violations[i].details.push(detail),
            None => {
                self.seen.insert(key.clone(), self.violations.len());
                self.violations.push(Violation {
                    kind: key.0,
                    witness: key.1,
                    details: vec![detail],
                });
            }
        }
    }

    /// Appends the violations of `other`, prefixing witnesses with `context`.
    pub fn absorb(&mut self, context: &str, other: ValidationReport) {
        for v in other.violations {
            let witness = if context.is_empty() {
                v.witness
            } else {
                format!("{context}: {}", v.witness)
            };
            for d in v.details {
                self.push(&v.kind, witness.clone(), d);
            }
        }
    }

    pub fn kinds(&self) -> Vec<&str> {
        self.violations.iter().map(|v| v.kind.as_str()).collect()
    }

    pub fn into_result<T>(self, kind: &'static str, value: T) -> crate::Result<T> {
        if self.is_ok() {
            Ok(value)
        } else {
            Err(crate::Error::Invalid { kind, report: self })
        }
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            return write!(f, "no violations");
        }
        for (n, v) in self.violations.iter().enumerate() {
            if n > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{} at {}: {}", v.kind, v.witness, v.details.join(", "))?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn passed(self) -> bool {
        self == Verdict::Pass
    }
}

/// Outcome of a named check: `{"check", "verdict", "witnesses", "bounds"}`
/// plus free-form details.
#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub verdict: Verdict,
    pub witnesses: Vec<String>,
    pub bounds: BTreeMap<String, Value>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub details: BTreeMap<String, Value>,
}

/// Witness lists are cut off here; the count of failures is kept in details.
pub const MAX_WITNESSES: usize = 32;

impl CheckReport {
    pub fn new(check: impl Into<String>) -> Self {
        CheckReport {
            check: check.into(),
            verdict: Verdict::Pass,
            witnesses: Vec::new(),
            bounds: BTreeMap::new(),
            details: BTreeMap::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict.passed()
    }

    pub fn fail(&mut self, witness: impl Into<String>) {
        self.verdict = Verdict::Fail;
        if self.witnesses.len() < MAX_WITNESSES {
            self.witnesses.push(witness.into());
        }
        let n = self
            .details
            .get("failures")
            .and_then(Value::as_u64)
            .unwrap_or(0);
        self.details.insert("failures".into(), Value::from(n + 1));
    }

    pub fn bound(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.bounds.insert(key.to_string(), value.into());
        self
    }

    pub fn detail(&mut self, key: &str, value: impl Into<Value>) {
        self.details.insert(key.to_string(), value.into());
    }

    pub fn from_validation(check: impl Into<String>, report: &ValidationReport) -> Self {
        let mut out = CheckReport::new(check);
        for v in &report.violations {
            out.fail(format!("{} at {}: {}", v.kind, v.witness, v.details.join(", ")));
        }
        out
    }

    /// Folds a sub-check into this one.
    pub fn merge(&mut self, other: &CheckReport) {
        for w in &other.witnesses {
            self.fail(format!("{}: {w}", other.check));
        }
        if !other.passed() && other.witnesses.is_empty() {
            self.fail(format!("{} failed", other.check));
        }
    }
}
