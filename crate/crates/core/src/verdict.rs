use std::fmt;

use serde::Serialize;

/// Outcome of an exhaustive or sampled verification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "lowercase")]
pub enum Verdict {
    Pass { checks: usize },
    Fail { checks: usize, counterexample: String },
}

impl Verdict {
    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass { .. })
    }

    pub fn checks(&self) -> usize {
        match self {
            Verdict::Pass { checks } | Verdict::Fail { checks, .. } => *checks,
        }
    }

    pub fn counterexample(&self) -> Option<&str> {
        match self {
            Verdict::Pass { .. } => None,
            Verdict::Fail { counterexample, .. } => Some(counterexample),
        }
    }

    /// Combines two verdicts, keeping the first counterexample.
    pub fn and(self, other: Verdict) -> Verdict {
        let checks = self.checks() + other.checks();
        match (self, other) {
            (Verdict::Fail { counterexample, .. }, _) | (_, Verdict::Fail { counterexample, .. }) => {
                Verdict::Fail { checks, counterexample }
            }
            _ => Verdict::Pass { checks },
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass { checks } => write!(f, "pass ({checks} checks)"),
            Verdict::Fail { checks, counterexample } => {
                write!(f, "FAIL after {checks} checks: {counterexample}")
            }
        }
    }
}

/// Accumulates checks and keeps the first failure.
#[derive(Debug, Default)]
pub struct Checker {
    checks: usize,
    failure: Option<String>,
}

impl Checker {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(describe());
        }
    }

    pub fn record(&mut self, r: Result<(), String>) {
        self.checks += 1;
        if let Err(msg) = r {
            if self.failure.is_none() {
                self.failure = Some(msg);
            }
        }
    }

    pub fn failed(&self) -> bool {
        self.failure.is_some()
    }

    pub fn finish(self) -> Verdict {
        match self.failure {
            None => Verdict::Pass { checks: self.checks },
            Some(counterexample) => Verdict::Fail {
                checks: self.checks,
                counterexample,
            },
        }
    }
}
