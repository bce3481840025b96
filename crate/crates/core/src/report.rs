//! Named residual checks collected by the verification routines.

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub residual: f64,
    pub tolerance: f64,
    pub passed: bool,
}

/// Ordered list of checks. An empty report passes.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub title: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report { title: title.into(), checks: Vec::new() }
    }

    /// Records `residual <= tolerance`. NaN never passes.
    pub fn push(&mut self, name: impl Into<String>, residual: f64, tolerance: f64) -> bool {
        let passed = residual <= tolerance;
        self.checks.push(Check { name: name.into(), residual, tolerance, passed });
        passed
    }

    /// Records `residual > threshold`, for negative controls.
    pub fn push_exceeds(&mut self, name: impl Into<String>, residual: f64, threshold: f64) -> bool {
        let passed = residual > threshold;
        self.checks.push(Check { name: name.into(), residual, tolerance: threshold, passed });
        passed
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn max_residual(&self) -> f64 {
        self.checks.iter().fold(0.0, |m, c| m.max(c.residual))
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn residual(&self, name: &str) -> f64 {
        self.get(name).map(|c| c.residual).unwrap_or(f64::NAN)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    /// Appends another report's checks, prefixing their names.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for mut ch in other.checks {
            if !prefix.is_empty() {
                ch.name = format!("{prefix}/{}", ch.name);
            }
            self.checks.push(ch);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nan_fails() {
        let mut r = Report::new("t");
        assert!(!r.push("x", f64::NAN, 1.0));
        assert!(!r.passed());
    }

    #[test]
    fn exceeds_is_strict() {
        let mut r = Report::new("t");
        assert!(!r.push_exceeds("x", 0.1, 0.1));
        assert!(r.push_exceeds("y", 0.2, 0.1));
    }
}
