//! Result bookkeeping for the acceptance run.

use std::fmt;
use std::time::Duration;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// The stated scope cannot be run to completion; a reduced scope was
    /// checked instead and found no discrepancy.
    ScopeFail,
}

#[derive(Debug, Clone)]
pub struct Verdict {
    pub id: u8,
    pub title: &'static str,
    pub status: Status,
    pub detail: String,
    pub elapsed: Duration,
}

impl Verdict {
    /// Failures that should stop the run. A scope failure is reported but
    /// does not count, since nothing in it disagreed with an oracle.
    pub fn is_blocking(&self) -> bool {
        self.status == Status::Fail
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.status {
            Status::Pass => "PASS",
            Status::Fail | Status::ScopeFail => "FAIL",
        };
        write!(
            f,
            "{tag} criterion {:>2} {}: {} [{:.2} s]",
            self.id,
            self.title,
            self.detail,
            self.elapsed.as_secs_f64()
        )
    }
}

/// Collects problems while a criterion runs; keeps the first few for the report.
#[derive(Debug, Default)]
pub struct Tally {
    pub checked: usize,
    pub failures: usize,
    examples: Vec<String>,
}

impl Tally {
    pub fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.fail(what());
        }
    }

    pub fn fail(&mut self, what: String) {
        self.failures += 1;
        if self.examples.len() < 3 {
            self.examples.push(what);
        }
    }

    pub fn ok(&self) -> bool {
        self.failures == 0
    }

    pub fn examples(&self) -> String {
        self.examples.join("; ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tally_keeps_three_examples() {
        let mut t = Tally::default();
        for i in 0..5 {
            t.check(i % 2 == 0, || format!("case {i}"));
            t.fail(format!("extra {i}"));
        }
        assert_eq!(t.checked, 5);
        assert_eq!(t.failures, 7);
        assert_eq!(t.examples(), "extra 0; case 1; extra 1");
    }

    #[test]
    fn scope_failures_print_as_failures() {
        let v = Verdict {
            id: 2,
            title: "x",
            status: Status::ScopeFail,
            detail: "d".into(),
            elapsed: Duration::from_millis(1500),
        };
        assert!(v.to_string().starts_with("FAIL criterion  2 x: d"));
        assert!(!v.is_blocking());
    }
}
