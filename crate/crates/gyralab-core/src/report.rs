//! Machine-readable verification reports shared by the checker operations.

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Report {
    pub check: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub domain: Option<String>,
    pub status: Status,
    /// First counterexample found, if any.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    /// Informational data (found prefactors, totals, ...).
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Report {
    pub fn pass(check: impl Into<String>) -> Self {
        Report {
            check: check.into(),
            domain: None,
            status: Status::Pass,
            witness: None,
            notes: vec![],
        }
    }

    pub fn fail(check: impl Into<String>, witness: impl Into<String>) -> Self {
        Report {
            check: check.into(),
            domain: None,
            status: Status::Fail,
            witness: Some(witness.into()),
            notes: vec![],
        }
    }

    pub fn with_domain(mut self, d: impl Into<String>) -> Self {
        self.domain = Some(d.into());
        self
    }

    pub fn note(mut self, n: impl Into<String>) -> Self {
        self.notes.push(n.into());
        self
    }

    pub fn ok(&self) -> bool {
        self.status == Status::Pass
    }

    /// Merge sub-reports into one summary report.
    pub fn combine(check: impl Into<String>, parts: Vec<Report>) -> Report {
        let mut out = Report::pass(check);
        for p in parts {
            if !p.ok() {
                out.status = Status::Fail;
                if out.witness.is_none() {
                    out.witness = Some(format!(
                        "{}: {}",
                        p.check,
                        p.witness.clone().unwrap_or_default()
                    ));
                }
            }
            out.notes
                .push(format!("{}: {:?}", p.check, p.status).to_lowercase());
            for n in p.notes {
                out.notes.push(format!("{}: {}", p.check, n));
            }
        }
        out
    }
}
