//! Structured results for the verification suites and the CLI.
//!
//! Every numeric field is an exact integer; values that may exceed machine
//! integers are carried as decimal strings so JSON output never degrades to
//! floating point.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

/// One multiplicity query answered by one method.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplicityRecord {
    pub algebra: String,
    pub p: i64,
    pub q: i64,
    pub m: i64,
    pub n: i64,
    pub method: String,
    pub value: u64,
}

/// A point where two or more methods disagreed.  The map goes from method
/// name to the value that method produced.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub algebra: String,
    pub p: i64,
    pub q: i64,
    pub m: i64,
    pub n: i64,
    pub values: BTreeMap<String, String>,
}

impl Mismatch {
    pub fn at(algebra: impl std::fmt::Display, p: i64, q: i64, m: i64, n: i64) -> Self {
        Mismatch {
            algebra: algebra.to_string(),
            p,
            q,
            m,
            n,
            values: BTreeMap::new(),
        }
    }

    pub fn record(&mut self, method: &str, value: &str) {
        self.values.insert(method.to_string(), value.to_string());
    }
}

/// Outcome of one named identity check (a Clebsch-Gordan relation, a
/// differential-equation residual, a cross-multiplication, ...).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityOutcome {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl IdentityOutcome {
    pub fn pass(name: &str, detail: String) -> Self {
        IdentityOutcome {
            name: name.to_string(),
            pass: true,
            detail,
        }
    }

    pub fn fail(name: &str, detail: String) -> Self {
        IdentityOutcome {
            name: name.to_string(),
            pass: false,
            detail,
        }
    }

    pub fn from_eq<T: PartialEq + std::fmt::Display>(name: &str, lhs: T, rhs: T) -> Self {
        if lhs == rhs {
            IdentityOutcome::pass(name, format!("both sides equal: {lhs}"))
        } else {
            IdentityOutcome::fail(name, format!("lhs {lhs} != rhs {rhs}"))
        }
    }
}

/// Result of running one verification suite.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub cases: u64,
    pub mismatches: Vec<Mismatch>,
    pub identities: Vec<IdentityOutcome>,
    pub elapsed_ms: u64,
}

impl SuiteReport {
    pub fn new(suite: &str) -> Self {
        SuiteReport {
            suite: suite.to_string(),
            cases: 0,
            mismatches: Vec::new(),
            identities: Vec::new(),
            elapsed_ms: 0,
        }
    }

    pub fn passed(&self) -> bool {
        self.mismatches.is_empty() && self.identities.iter().all(|i| i.pass)
    }
}
