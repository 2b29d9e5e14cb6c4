use std::fmt;

use crate::resolution::{prove_equiv, EquivOutcome, ProverLimits};
use crate::semantics::{equiv_finite, render_countermodel, Equivalence};
use crate::syntax::{parse, Formula};

/// The one-variable formalization of the first sentence.
pub const F1: &str = "~forall t. ((C(t) | B(t)) & S(t) -> T(t))";
/// The one-variable formalization of the second sentence.
pub const F2: &str = "exists t. (S(t) & ~T(t) & (C(t) | B(t)))";
/// The two-variable formalization of the first sentence.
pub const G1: &str = "~forall t. exists p. ((C(t) | B(t)) & S(p, t) -> T(p, t))";
/// The two-variable formalization of the second sentence.
pub const G2: &str = "exists t. forall p. (S(p, t) & ~T(p, t) & (C(t) | B(t)))";

/// Rewrite steps from `F1` to `F2`, each labelled by the law it applies.
pub const CHAIN_ONE: [(&str, &str); 5] = [
    ("start", F1),
    ("quantifier negation", "exists t. ~((C(t) | B(t)) & S(t) -> T(t))"),
    ("implication as disjunction", "exists t. ~(~((C(t) | B(t)) & S(t)) | T(t))"),
    ("De Morgan, double negation", "exists t. (((C(t) | B(t)) & S(t)) & ~T(t))"),
    ("commutativity, associativity", F2),
];

/// Rewrite steps from `G2` back to a form of `G1`.
pub const CHAIN_TWO: [(&str, &str); 7] = [
    ("start", G2),
    ("quantifier duality", "~forall t. ~(forall p. (S(p, t) & ~T(p, t) & (C(t) | B(t))))"),
    ("quantifier negation", "~forall t. (exists p. ~(S(p, t) & ~T(p, t) & (C(t) | B(t))))"),
    ("De Morgan, double negation", "~forall t. (exists p. (~S(p, t) | T(p, t) | ~(C(t) | B(t))))"),
    ("commutativity", "~forall t. (exists p. (~S(p, t) | ~(C(t) | B(t)) | T(p, t)))"),
    ("De Morgan", "~forall t. (exists p. (~(S(p, t) & (C(t) | B(t))) | T(p, t)))"),
    ("implication as disjunction", "~forall t. (exists p. ((S(p, t) & (C(t) | B(t))) -> T(p, t)))"),
];

/// Domain bound used when validating rewrite steps semantically.
pub const CHAIN_DOMAIN_BOUND: usize = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PaperFixtures {
    pub f1: Formula,
    pub f2: Formula,
    pub g1: Formula,
    pub g2: Formula,
}

pub fn paper_fixtures() -> PaperFixtures {
    let p = |s: &str| parse(s).expect("fixture parses");
    PaperFixtures { f1: p(F1), f2: p(F2), g1: p(G1), g2: p(G2) }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportEntry {
    pub check: String,
    pub passed: bool,
    pub detail: String,
}

/// Outcome of every check run by [`verify_paper_example`].
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PaperReport {
    pub entries: Vec<ReportEntry>,
}

impl PaperReport {
    pub fn all_passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed)
    }

    fn push(&mut self, check: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.entries.push(ReportEntry { check: check.into(), passed, detail: detail.into() });
    }
}

impl fmt::Display for PaperReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            let mark = if e.passed { "ok  " } else { "FAIL" };
            writeln!(f, "{mark} {}: {}", e.check, e.detail)?;
        }
        let passed = self.entries.iter().filter(|e| e.passed).count();
        writeln!(f, "{passed}/{} checks passed", self.entries.len())
    }
}

fn resolution_check(report: &mut PaperReport, name: &str, a: &Formula, b: &Formula) {
    match prove_equiv(a, b, ProverLimits::default()) {
        Ok(r) => match r.outcome {
            EquivOutcome::Equivalent(p, q) => report.push(
                name,
                true,
                format!("equivalent; refutations of {} and {} steps", p.len(), q.len()),
            ),
            EquivOutcome::Unknown { .. } => report.push(name, false, "resolution found no refutation"),
        },
        Err(e) => report.push(name, false, e.to_string()),
    }
}

fn finite_check(report: &mut PaperReport, name: &str, a: &Formula, b: &Formula) {
    match equiv_finite(a, b, CHAIN_DOMAIN_BOUND) {
        Ok(Equivalence::EquivalentUpTo(n)) => {
            report.push(name, true, format!("agree on all models with domain size <= {n}"))
        }
        Ok(Equivalence::Countermodel(m, env)) => {
            report.push(name, false, format!("countermodel {}", render_countermodel(&m, &env)))
        }
        Err(e) => report.push(name, false, e.to_string()),
    }
}

fn chain_checks(report: &mut PaperReport, label: &str, chain: &[(&str, &str)]) -> Option<Formula> {
    let mut prev: Option<Formula> = None;
    for (i, (law, text)) in chain.iter().enumerate() {
        let f = match parse(text) {
            Ok(f) => f,
            Err(e) => {
                report.push(format!("{label} step {i}"), false, e.to_string());
                return None;
            }
        };
        if let Some(p) = &prev {
            finite_check(report, &format!("{label} step {i} ({law})"), p, &f);
        }
        prev = Some(f);
    }
    prev
}

/// Proves both pairs of formalizations equivalent by resolution, checks them
/// on small models, and validates every rewrite step semantically.
pub fn verify_paper_example() -> PaperReport {
    let fx = paper_fixtures();
    let mut report = PaperReport::default();
    resolution_check(&mut report, "resolution f1 = f2", &fx.f1, &fx.f2);
    resolution_check(&mut report, "resolution g1 = g2", &fx.g1, &fx.g2);
    finite_check(&mut report, "finite models f1 = f2", &fx.f1, &fx.f2);
    finite_check(&mut report, "finite models g1 = g2", &fx.g1, &fx.g2);
    if let Some(last) = chain_checks(&mut report, "chain one", &CHAIN_ONE) {
        report.push("chain one ends at f2", last == fx.f2, last.to_string());
    }
    if let Some(last) = chain_checks(&mut report, "chain two", &CHAIN_TWO) {
        finite_check(&mut report, "chain two ends equivalent to g1", &last, &fx.g1);
    }
    report
}
