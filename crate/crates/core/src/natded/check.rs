use std::fmt;

use super::proof::{Proof, Ref};
use super::rules::{natded_rules, Cited, RefKind, RuleContext, RuleFailure};
use crate::syntax::Formula;

/// Machine-readable reason attached to an invalid proof.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Reason {
    ConclusionMismatch,
    EigenvariableViolation,
    BadReference,
    ReferenceCount,
    DepthViolation,
    NotAPremise,
    UndischargedAssumption,
    GoalMismatch,
    UnknownRule,
    EmptyProof,
}

impl Reason {
    pub fn code(self) -> &'static str {
        match self {
            Reason::ConclusionMismatch => "conclusion mismatch",
            Reason::EigenvariableViolation => "eigenvariable violation",
            Reason::BadReference => "bad reference",
            Reason::ReferenceCount => "reference count",
            Reason::DepthViolation => "depth violation",
            Reason::NotAPremise => "not a premise",
            Reason::UndischargedAssumption => "undischarged assumption",
            Reason::GoalMismatch => "goal mismatch",
            Reason::UnknownRule => "unknown rule",
            Reason::EmptyProof => "empty proof",
        }
    }
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckResult {
    Valid,
    /// `line` is 1-based; proof-level failures use the last line.
    Invalid { line: usize, reason: Reason, detail: String },
}

impl CheckResult {
    pub fn is_valid(&self) -> bool {
        matches!(self, CheckResult::Valid)
    }

    pub fn reason(&self) -> Option<Reason> {
        match self {
            CheckResult::Valid => None,
            CheckResult::Invalid { reason, .. } => Some(*reason),
        }
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckResult::Valid => f.write_str("valid"),
            CheckResult::Invalid { line, reason, detail } if detail.is_empty() => {
                write!(f, "invalid at line {line}: {reason}")
            }
            CheckResult::Invalid { line, reason, detail } => {
                write!(f, "invalid at line {line}: {reason} ({detail})")
            }
        }
    }
}

struct Scope {
    parent: Option<usize>,
    /// Index of the opening `assume` line; `None` for the top level.
    opened_by: Option<usize>,
    /// Index of the last line inside the scope, nested lines included.
    end: usize,
}

struct Scopes {
    scopes: Vec<Scope>,
    of_line: Vec<usize>,
}

impl Scopes {
    fn encloses(&self, outer: usize, mut inner: usize) -> bool {
        loop {
            if inner == outer {
                return true;
            }
            match self.scopes[inner].parent {
                Some(p) => inner = p,
                None => return false,
            }
        }
    }

    fn chain(&self, mut s: usize) -> Vec<usize> {
        let mut out = vec![s];
        while let Some(p) = self.scopes[s].parent {
            out.push(p);
            s = p;
        }
        out
    }
}

fn invalid(index: usize, reason: Reason, detail: impl Into<String>) -> CheckResult {
    CheckResult::Invalid { line: index + 1, reason, detail: detail.into() }
}

/// Checks every line in order and reports the first failure.
pub fn check(proof: &Proof) -> CheckResult {
    let lines = &proof.lines;
    if lines.is_empty() {
        return CheckResult::Invalid { line: 0, reason: Reason::EmptyProof, detail: String::new() };
    }
    let rules = natded_rules();
    let mut sc = Scopes {
        scopes: vec![Scope { parent: None, opened_by: None, end: 0 }],
        of_line: Vec::with_capacity(lines.len()),
    };
    let mut stack = vec![0usize];
    let premises: Vec<&Formula> = match &proof.goal {
        Some(g) => g.premises.iter().collect(),
        None => lines.iter().filter(|l| l.rule == "premise").map(|l| &l.formula).collect(),
    };

    for (i, line) in lines.iter().enumerate() {
        let prev = if i == 0 { 0 } else { lines[i - 1].depth };
        let d = line.depth;
        let opens = line.rule == "assume";
        let depth_ok = if opens { d >= 1 && d <= prev + 1 } else { d <= prev };
        if !depth_ok || d + 1 < prev {
            return invalid(i, Reason::DepthViolation, format!("depth {d} after depth {prev}"));
        }
        if opens {
            stack.truncate(d);
            sc.scopes.push(Scope { parent: Some(stack[d - 1]), opened_by: Some(i), end: i });
            stack.push(sc.scopes.len() - 1);
        } else {
            stack.truncate(d + 1);
        }
        let here = stack[d];
        sc.of_line.push(here);
        for s in sc.chain(here) {
            sc.scopes[s].end = i;
        }

        let Some(rule) = rules.get(&line.rule) else {
            return invalid(i, Reason::UnknownRule, line.rule.clone());
        };
        if line.rule == "premise" {
            if d != 0 {
                return invalid(i, Reason::NotAPremise, "premise inside a subproof");
            }
            if proof.goal.is_some() && !premises.contains(&&line.formula) {
                return invalid(i, Reason::NotAPremise, line.formula.to_string());
            }
        }
        let slots = rule.slots();
        if slots.len() != line.refs.len() {
            return invalid(
                i,
                Reason::ReferenceCount,
                format!("{} expects {}, got {}", line.rule, slots.len(), line.refs.len()),
            );
        }
        let mut cited = Vec::with_capacity(slots.len());
        for (&kind, &r) in slots.iter().zip(&line.refs) {
            match resolve(&sc, lines, i, kind, r) {
                Some(c) => cited.push(c),
                None => return invalid(i, Reason::BadReference, r.to_string()),
            }
        }
        let mut context = premises.clone();
        for s in sc.chain(here) {
            if let Some(a) = sc.scopes[s].opened_by {
                if a != i {
                    context.push(&lines[a].formula);
                }
            }
        }
        let cx = RuleContext { formula: &line.formula, cited, context };
        match rule.check(&cx) {
            Ok(()) => {}
            Err(RuleFailure::ConclusionMismatch) => {
                return invalid(i, Reason::ConclusionMismatch, line.rule.clone())
            }
            Err(RuleFailure::EigenvariableViolation) => {
                return invalid(i, Reason::EigenvariableViolation, line.rule.clone())
            }
        }
    }

    let last = lines.len() - 1;
    if lines[last].depth != 0 {
        return invalid(last, Reason::UndischargedAssumption, "proof ends inside a subproof");
    }
    if let Some(g) = &proof.goal {
        if lines[last].formula != g.conclusion {
            return invalid(last, Reason::GoalMismatch, format!("expected {}", g.conclusion));
        }
    }
    CheckResult::Valid
}

fn resolve<'a>(
    sc: &Scopes,
    lines: &'a [super::proof::ProofLine],
    at: usize,
    kind: RefKind,
    r: Ref,
) -> Option<Cited<'a>> {
    let here = sc.of_line[at];
    match (kind, r) {
        (RefKind::Line, Ref::Line(n)) => {
            let j = n.checked_sub(1)?;
            (j < at && sc.encloses(sc.of_line[j], here)).then(|| Cited::Line(&lines[j].formula))
        }
        (RefKind::Subproof, Ref::Range(a, b)) => {
            let (a, b) = (a.checked_sub(1)?, b.checked_sub(1)?);
            if b >= at || a > b {
                return None;
            }
            let s = sc.of_line[a];
            let scope = &sc.scopes[s];
            let ok = scope.opened_by == Some(a)
                && scope.end == b
                && sc.of_line[b] == s
                && !sc.encloses(s, here)
                && sc.encloses(scope.parent?, here);
            ok.then(|| Cited::Subproof {
                assumption: &lines[a].formula,
                conclusion: &lines[b].formula,
            })
        }
        _ => None,
    }
}
