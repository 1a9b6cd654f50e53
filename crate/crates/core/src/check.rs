//! A named pass/fail result, the unit of the verification reports.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub label: String,
    pub pass: bool,
    /// Populated on failure with the mismatching values.
    pub detail: Option<String>,
}

impl Check {
    pub fn passed(label: impl Into<String>) -> Self {
        Check { label: label.into(), pass: true, detail: None }
    }

    pub fn failed(label: impl Into<String>, detail: impl Into<String>) -> Self {
        Check { label: label.into(), pass: false, detail: Some(detail.into()) }
    }

    pub fn from_eq<T: PartialEq + fmt::Display>(label: impl Into<String>, lhs: T, rhs: T) -> Self {
        if lhs == rhs {
            Check::passed(label)
        } else {
            Check::failed(label, format!("left = {}, right = {}", lhs, rhs))
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", if self.pass { "PASS" } else { "FAIL" }, self.label)?;
        if let Some(d) = &self.detail {
            write!(f, " ({})", d)?;
        }
        Ok(())
    }
}

/// Convenience for report printing: true when every check passed.
pub fn all_pass(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.pass)
}
