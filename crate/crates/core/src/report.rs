//! Structured verification outcomes. A suite is a named, ordered list of
//! checks; ordering is fixed by the relation catalogs so reports are
//! deterministic and byte-identical across runs.

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    VariantPass,
    Fail,
}

/// Witness for a failed matrix identity: the first differing entry, 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub row: usize,
    pub col: usize,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub id: String,
    pub status: Status,
    pub variant: Option<String>,
    pub witness: Option<Witness>,
}

impl Check {
    pub fn pass(id: impl Into<String>) -> Self {
        Check {
            id: id.into(),
            status: Status::Pass,
            variant: None,
            witness: None,
        }
    }

    pub fn variant_pass(id: impl Into<String>, note: impl Into<String>) -> Self {
        Check {
            id: id.into(),
            status: Status::VariantPass,
            variant: Some(note.into()),
            witness: None,
        }
    }

    pub fn fail(id: impl Into<String>, witness: Option<Witness>) -> Self {
        Check {
            id: id.into(),
            status: Status::Fail,
            variant: None,
            witness,
        }
    }

    pub fn fail_msg(id: impl Into<String>, msg: impl Into<String>) -> Self {
        Check {
            id: id.into(),
            status: Status::Fail,
            variant: Some(msg.into()),
            witness: None,
        }
    }

    pub fn from_bool(id: impl Into<String>, ok: bool) -> Self {
        if ok {
            Self::pass(id)
        } else {
            Self::fail(id, None)
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub suite: String,
    pub n: u8,
    pub rep: String,
    pub checks: Vec<Check>,
}

impl CheckReport {
    pub fn new(suite: impl Into<String>, n: u8, rep: impl Into<String>) -> Self {
        CheckReport {
            suite: suite.into(),
            n,
            rep: rep.into(),
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, checks: impl IntoIterator<Item = Check>) {
        self.checks.extend(checks);
    }

    /// A suite passes iff no check failed; variant-passes count as passes
    /// (they always carry an annotation).
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn variant_passes(&self) -> impl Iterator<Item = &Check> {
        self.checks
            .iter()
            .filter(|c| c.status == Status::VariantPass)
    }
}
