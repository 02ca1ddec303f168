//! Defects found by the verifiers.

use serde::Serialize;

/// One failed comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Defect {
    pub location: String,
    pub expected: String,
    pub actual: String,
}

impl Defect {
    pub fn new(location: impl Into<String>, expected: impl Into<String>, actual: impl Into<String>) -> Defect {
        Defect { location: location.into(), expected: expected.into(), actual: actual.into() }
    }
}

impl std::fmt::Display for Defect {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: expected {}, got {}", self.location, self.expected, self.actual)
    }
}
