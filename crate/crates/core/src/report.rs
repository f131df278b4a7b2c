//! Pass/fail reports for identity and axiom checks.

use std::fmt::Display;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportEntry {
    pub identity: String,
    pub inputs: Vec<String>,
    pub status: Status,
    pub lhs: String,
    pub rhs: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl ReportEntry {
    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Report {
    pub entries: Vec<ReportEntry>,
}

fn strings<I: IntoIterator<Item = T>, T: Display>(inputs: I) -> Vec<String> {
    inputs.into_iter().map(|x| x.to_string()).collect()
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records `lhs == rhs`.
    pub fn compare<I, T>(&mut self, identity: &str, inputs: I, lhs: impl Display, rhs: impl Display) -> &mut ReportEntry
    where
        I: IntoIterator<Item = T>,
        T: Display,
    {
        let (lhs, rhs) = (lhs.to_string(), rhs.to_string());
        let status = if lhs == rhs { Status::Pass } else { Status::Fail };
        self.push(ReportEntry {
            identity: identity.to_string(),
            inputs: strings(inputs),
            status,
            lhs,
            rhs,
            note: None,
        })
    }

    pub fn skip<I, T>(&mut self, identity: &str, inputs: I, reason: &str) -> &mut ReportEntry
    where
        I: IntoIterator<Item = T>,
        T: Display,
    {
        self.push(ReportEntry {
            identity: identity.to_string(),
            inputs: strings(inputs),
            status: Status::Skipped,
            lhs: String::new(),
            rhs: String::new(),
            note: Some(reason.to_string()),
        })
    }

    pub fn push(&mut self, entry: ReportEntry) -> &mut ReportEntry {
        self.entries.push(entry);
        self.entries.last_mut().expect("just pushed")
    }

    pub fn extend(&mut self, other: Report) {
        self.entries.extend(other.entries);
    }

    pub fn count(&self, status: Status) -> usize {
        self.entries.iter().filter(|e| e.status == status).count()
    }

    pub fn has_failures(&self) -> bool {
        self.entries.iter().any(|e| e.status == Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ReportEntry> {
        self.entries.iter().filter(|e| e.status == Status::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
