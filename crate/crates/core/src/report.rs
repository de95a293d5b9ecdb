use alloc::string::String;
use alloc::vec::Vec;

/// One verification check instance: pass/fail plus an exact certificate for
/// failures (typically the first differing matrix entry or coefficient).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckEntry {
    pub check: String,
    pub instance: String,
    pub pass: bool,
    pub certificate: Option<String>,
}

/// A list of check entries; failures are entries, never panics.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub entries: Vec<CheckEntry>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn pass(&mut self, check: impl Into<String>, instance: impl Into<String>) {
        self.entries.push(CheckEntry {
            check: check.into(),
            instance: instance.into(),
            pass: true,
            certificate: None,
        });
    }

    pub fn fail(
        &mut self,
        check: impl Into<String>,
        instance: impl Into<String>,
        certificate: impl Into<String>,
    ) {
        self.entries.push(CheckEntry {
            check: check.into(),
            instance: instance.into(),
            pass: false,
            certificate: Some(certificate.into()),
        });
    }

    pub fn merge(&mut self, other: Report) {
        self.entries.extend(other.entries);
    }

    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckEntry> {
        self.entries.iter().filter(|e| !e.pass)
    }
}
