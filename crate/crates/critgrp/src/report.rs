//! The stable JSON report schema and its plain-text rendering.

use serde::{Deserialize, Serialize};

use critgrp_core::group::AbelianGroup;
use critgrp_core::report::{Condition, StructureReport};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckLine {
    pub name: String,
    /// "pass", "fail", or "n/a".
    pub status: String,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

impl CheckLine {
    pub fn new(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        CheckLine {
            name: name.into(),
            status: if ok { "pass" } else { "fail" }.into(),
            detail: detail.into(),
        }
    }

    pub fn from_condition(c: &Condition) -> Self {
        CheckLine {
            name: c.name.to_string(),
            status: c.status.as_str().to_string(),
            detail: c.detail.clone(),
        }
    }
}

/// One classification hit: the object in its text format plus its group.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FoundItem {
    pub object: String,
    pub invariant_factors: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub input_digest: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub invariant_factors: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exponent: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<CheckLine>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub divisor: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub all_burnt: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub burn_rounds: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub projection: Option<Vec<Vec<String>>>,
    /// Denominator value (as a string) to count of entries with it.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub denominator_histogram: Option<Vec<(String, usize)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub found: Option<Vec<FoundItem>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<Vec<String>>,
    /// "match" or "mismatch" for classification-style commands.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verdict: Option<String>,
    pub timing_ms: u64,
}

impl Report {
    pub fn new(command: impl Into<String>, input_digest: String) -> Self {
        Report {
            command: command.into(),
            input_digest,
            invariant_factors: None,
            exponent: None,
            order: None,
            checks: Vec::new(),
            divisor: None,
            all_burnt: None,
            burn_rounds: None,
            projection: None,
            denominator_histogram: None,
            found: None,
            expected: None,
            verdict: None,
            timing_ms: 0,
        }
    }

    pub fn set_group(&mut self, g: &AbelianGroup) {
        self.invariant_factors = Some(g.factors().iter().map(|d| d.to_string()).collect());
        self.exponent = Some(g.exponent().to_string());
        self.order = Some(g.order().to_string());
    }

    pub fn push_structure(&mut self, name: &str, report: &StructureReport) {
        if !report.applicable {
            self.checks.push(CheckLine {
                name: name.to_string(),
                status: "n/a".into(),
                detail: String::new(),
            });
            return;
        }
        for c in &report.conditions {
            let mut line = CheckLine::from_condition(c);
            line.name = format!("{name}:{}", line.name);
            self.checks.push(line);
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Human-readable rendering.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("command: {}\n", self.command));
        out.push_str(&format!("input:   {}\n", self.input_digest));
        if let Some(f) = &self.invariant_factors {
            let shown = if f.is_empty() {
                "(trivial group)".to_string()
            } else {
                format!("[{}]", f.join(", "))
            };
            out.push_str(&format!("invariant factors: {shown}\n"));
        }
        if let (Some(order), Some(exponent)) = (&self.order, &self.exponent) {
            out.push_str(&format!("order: {order}   exponent: {exponent}\n"));
        }
        if let Some(d) = &self.divisor {
            out.push_str(&format!("divisor: {}\n", d.join(" ")));
        }
        if let Some(all) = self.all_burnt {
            out.push_str(&format!("all burnt: {all}\n"));
        }
        if let Some(rounds) = &self.burn_rounds {
            for (i, round) in rounds.iter().enumerate() {
                out.push_str(&format!("round {i}: burnt {round:?}\n"));
            }
        }
        if let Some(p) = &self.projection {
            out.push_str("projection matrix:\n");
            for row in p {
                out.push_str(&format!("  [{}]\n", row.join(", ")));
            }
        }
        if let Some(h) = &self.denominator_histogram {
            let parts: Vec<String> = h.iter().map(|(d, c)| format!("{d}:{c}")).collect();
            out.push_str(&format!("denominators: {}\n", parts.join("  ")));
        }
        if let Some(found) = &self.found {
            out.push_str(&format!("found {} object(s):\n", found.len()));
            for item in found {
                let factors = if item.invariant_factors.is_empty() {
                    "(trivial group)".to_string()
                } else {
                    format!("[{}]", item.invariant_factors.join(", "))
                };
                out.push_str(&format!(
                    "  {}  factors {}\n",
                    item.object.replace('\n', "; ").trim_end_matches("; "),
                    factors
                ));
            }
        }
        for check in &self.checks {
            out.push_str(&format!("check {:<45} {}", check.name, check.status));
            if !check.detail.is_empty() {
                out.push_str(&format!("  ({})", check.detail));
            }
            out.push('\n');
        }
        if let Some(v) = &self.verdict {
            out.push_str(&format!("verdict: {v}\n"));
        }
        out.push_str(&format!("elapsed: {} ms\n", self.timing_ms));
        out
    }
}
