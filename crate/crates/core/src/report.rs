//! Outcome of a certificate or property check.

use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub check: String,
    pub passed: bool,
    /// Number of instances (or cases) examined.
    pub checked: u64,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Report {
    pub fn new(check: impl Into<String>) -> Self {
        Report {
            check: check.into(),
            passed: true,
            checked: 0,
            notes: Vec::new(),
            witness: None,
        }
    }

    pub fn tick(&mut self, n: u64) {
        self.checked += n;
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    /// Records a failure; only the first witness is kept.
    pub fn fail(&mut self, witness: impl Into<String>) {
        self.passed = false;
        if self.witness.is_none() {
            self.witness = Some(witness.into());
        }
    }

    /// Folds another report's tally and outcome into this one.
    pub fn absorb(&mut self, other: Report) {
        self.checked += other.checked;
        if !other.passed {
            self.fail(format!(
                "{}: {}",
                other.check,
                other.witness.unwrap_or_default()
            ));
        }
        self.notes.extend(other.notes);
    }
}
