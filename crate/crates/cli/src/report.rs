use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

/// One named check and the residuals that kept it from passing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub residuals: Vec<ResidualLine>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidualLine {
    pub label: String,
    pub value: String,
}

impl Check {
    pub fn new(name: impl Into<String>, residuals: Vec<ResidualLine>) -> Self {
        Check {
            name: name.into(),
            passed: residuals.is_empty(),
            residuals,
        }
    }

    pub fn pass_if(name: impl Into<String>, ok: bool) -> Self {
        Check {
            name: name.into(),
            passed: ok,
            residuals: Vec::new(),
        }
    }
}

pub fn residual(label: impl Into<String>, value: impl Into<String>) -> ResidualLine {
    ResidualLine {
        label: label.into(),
        value: value.into(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedValue {
    pub name: String,
    pub value: String,
}

/// Output of `verify`, `coboundary`, `poisson` and `realize`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Report {
    pub command: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<u32>,
    /// Settings the checks ran under, shown as `name: value`.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<NamedValue>,
    /// Computed quantities, shown as `name = value`.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub values: Vec<NamedValue>,
    pub checks: Vec<Check>,
    pub passed: bool,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.into(),
            family: None,
            order: None,
            notes: Vec::new(),
            values: Vec::new(),
            checks: Vec::new(),
            passed: true,
        }
    }

    pub fn note(&mut self, key: impl Into<String>, v: impl Into<String>) {
        self.notes.push(NamedValue {
            name: key.into(),
            value: v.into(),
        });
    }

    pub fn value(&mut self, key: impl Into<String>, v: impl Into<String>) {
        self.values.push(NamedValue {
            name: key.into(),
            value: v.into(),
        });
    }

    pub fn check(&mut self, c: Check) {
        self.passed &= c.passed;
        self.checks.push(c);
    }

    pub fn text(&self) -> String {
        let mut out = String::new();
        if let Some(f) = &self.family {
            writeln!(out, "family: {f}").unwrap();
        }
        if let Some(k) = self.order {
            writeln!(out, "order: {k}").unwrap();
        }
        for v in &self.notes {
            writeln!(out, "{}: {}", v.name, v.value).unwrap();
        }
        for v in &self.values {
            writeln!(out, "{} = {}", v.name, v.value).unwrap();
        }
        for c in &self.checks {
            writeln!(
                out,
                "{}: {}",
                c.name,
                if c.passed { "PASS" } else { "FAIL" }
            )
            .unwrap();
            for r in &c.residuals {
                writeln!(out, "  {}: {}", r.label, r.value).unwrap();
            }
        }
        out
    }
}
