//! Fitch-style natural deduction: a line-oriented proof format and a checker.

mod check;
mod proof;
mod rules;

pub use check::{check, CheckResult, Reason};
pub use proof::{parse_proof, Proof, ProofLine, ProofParseError, Ref, Sequent};
pub use rules::{instance_of, natded_rules, Cited, InferenceRule, RefKind, RuleContext, RuleFailure};
