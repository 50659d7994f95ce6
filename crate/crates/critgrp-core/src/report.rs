//! Structured pass/fail reports, shared by the theorem-checking operations
//! so sweeps can aggregate them.

use alloc::string::String;
use alloc::vec::Vec;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConditionStatus {
    Pass,
    Fail,
    NotApplicable,
}

impl ConditionStatus {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            ConditionStatus::Pass
        } else {
            ConditionStatus::Fail
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            ConditionStatus::Pass => "pass",
            ConditionStatus::Fail => "fail",
            ConditionStatus::NotApplicable => "n/a",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Condition {
    pub name: &'static str,
    pub status: ConditionStatus,
    pub detail: String,
}

impl Condition {
    pub fn new(name: &'static str, ok: bool, detail: String) -> Self {
        Condition {
            name,
            status: ConditionStatus::from_bool(ok),
            detail,
        }
    }
}

/// A named bundle of conditions; `applicable` is false when the premise of
/// the statement under test does not hold for the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureReport {
    pub applicable: bool,
    pub conditions: Vec<Condition>,
}

impl StructureReport {
    pub fn not_applicable() -> Self {
        StructureReport {
            applicable: false,
            conditions: Vec::new(),
        }
    }

    /// True when applicable and every condition passed, or not applicable.
    pub fn passed(&self) -> bool {
        self.conditions
            .iter()
            .all(|c| c.status != ConditionStatus::Fail)
    }
}
