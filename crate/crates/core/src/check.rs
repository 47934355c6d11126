use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Outcome of verifying one identity.
///
/// `anchor` names the identity family the check belongs to (for example
/// `"atkinson-factorization"`); `cases` counts the instances that were
/// evaluated. A failing result always carries a counterexample.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub anchor: String,
    pub status: Status,
    pub counterexample: Option<String>,
    pub cases: usize,
}

impl CheckResult {
    pub fn pass(name: impl Into<String>, anchor: impl Into<String>, cases: usize) -> Self {
        CheckResult {
            name: name.into(),
            anchor: anchor.into(),
            status: Status::Pass,
            counterexample: None,
            cases,
        }
    }

    pub fn fail(
        name: impl Into<String>,
        anchor: impl Into<String>,
        cases: usize,
        counterexample: impl Into<String>,
    ) -> Self {
        CheckResult {
            name: name.into(),
            anchor: anchor.into(),
            status: Status::Fail,
            counterexample: Some(counterexample.into()),
            cases,
        }
    }

    /// Builds a result from the first counterexample found, if any.
    pub fn from_outcome(
        name: impl Into<String>,
        anchor: impl Into<String>,
        cases: usize,
        counterexample: Option<String>,
    ) -> Self {
        match counterexample {
            None => Self::pass(name, anchor, cases),
            Some(c) => Self::fail(name, anchor, cases, c),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Combines several sub-checks into one result; the first failure wins.
    pub fn all(
        name: impl Into<String>,
        anchor: impl Into<String>,
        parts: impl IntoIterator<Item = CheckResult>,
    ) -> Self {
        let mut cases = 0;
        let mut failure = None;
        for part in parts {
            cases += part.cases;
            if failure.is_none() {
                if let Some(c) = part.counterexample {
                    failure = Some(format!("{}: {}", part.name, c));
                }
            }
        }
        Self::from_outcome(name, anchor, cases, failure)
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {} ({} cases)", self.status, self.name, self.cases)?;
        if let Some(c) = &self.counterexample {
            write!(f, ": {c}")?;
        }
        Ok(())
    }
}
