//! Pass/fail reports produced by the verification routines.

use std::fmt::{self, Display};

use serde::{Deserialize, Serialize};

/// Where and how a check failed. Matrix checks fill in `row`/`col` (1-based).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub row: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub col: Option<usize>,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub check_name: String,
    pub pass: bool,
    pub witness: Option<Witness>,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Self {
        Check {
            check_name: name.into(),
            pass: true,
            witness: None,
        }
    }

    pub fn fail(name: impl Into<String>, witness: Witness) -> Self {
        Check {
            check_name: name.into(),
            pass: false,
            witness: Some(witness),
        }
    }

    /// Passes iff `expected == actual`; on failure both sides are recorded via `Display`.
    pub fn equal<T: PartialEq + Display>(name: impl Into<String>, expected: &T, actual: &T) -> Self {
        if expected == actual {
            Check::pass(name)
        } else {
            Check::fail(
                name,
                Witness {
                    row: None,
                    col: None,
                    expected: expected.to_string(),
                    actual: actual.to_string(),
                },
            )
        }
    }

    pub fn from_result(name: impl Into<String>, outcome: Result<(), Witness>) -> Self {
        match outcome {
            Ok(()) => Check::pass(name),
            Err(w) => Check::fail(name, w),
        }
    }
}

/// A named suite of checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Report {
            suite: suite.into(),
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn pass_count(&self) -> usize {
        self.checks.iter().filter(|c| c.pass).count()
    }

    pub fn find(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.check_name == name)
    }
}

const MAX_LISTED_FAILURES: usize = 40;

impl Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "[{}] {}: {}/{} checks passed",
            if self.passed() { "PASS" } else { "FAIL" },
            self.suite,
            self.pass_count(),
            self.checks.len()
        )?;
        let failures: Vec<&Check> = self.failures().collect();
        for c in failures.iter().take(MAX_LISTED_FAILURES) {
            write!(f, "    FAIL {}", c.check_name)?;
            if let Some(w) = &c.witness {
                if let (Some(r), Some(col)) = (w.row, w.col) {
                    write!(f, " at ({r},{col})")?;
                }
                write!(f, ": expected {}, got {}", w.expected, w.actual)?;
            }
            writeln!(f)?;
        }
        if failures.len() > MAX_LISTED_FAILURES {
            writeln!(f, "    ... and {} more", failures.len() - MAX_LISTED_FAILURES)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn equal_records_witness() {
        assert!(Check::equal("same", &1, &1).pass);
        let c = Check::equal("diff", &1, &2);
        assert!(!c.pass);
        let w = c.witness.unwrap();
        assert_eq!((w.expected.as_str(), w.actual.as_str()), ("1", "2"));
    }

    #[test]
    fn json_shape() {
        let mut r = Report::new("demo");
        r.push(Check::pass("ok"));
        r.push(Check::fail(
            "bad",
            Witness {
                row: Some(1),
                col: Some(2),
                expected: "a".into(),
                actual: "b".into(),
            },
        ));
        let v = serde_json::to_value(&r.checks).unwrap();
        assert_eq!(
            v,
            serde_json::json!([
                {"check_name": "ok", "pass": true, "witness": null},
                {"check_name": "bad", "pass": false,
                 "witness": {"row": 1, "col": 2, "expected": "a", "actual": "b"}}
            ])
        );
        assert!(!r.passed());
        assert_eq!(r.pass_count(), 1);
        assert!(r.to_string().starts_with("[FAIL] demo: 1/2"));
    }
}
