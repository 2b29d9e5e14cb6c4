use std::collections::BTreeSet;

use crate::registry::{Named, Registry};
use crate::syntax::{Formula, Term};

/// What a rule expects in each citation slot.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RefKind {
    Line,
    Subproof,
}

/// A resolved citation.
#[derive(Debug, Clone, Copy)]
pub enum Cited<'a> {
    Line(&'a Formula),
    Subproof { assumption: &'a Formula, conclusion: &'a Formula },
}

/// Everything a rule may inspect when justifying one line.
pub struct RuleContext<'a> {
    pub formula: &'a Formula,
    pub cited: Vec<Cited<'a>>,
    /// Premises of the proof and assumptions open at this line.
    pub context: Vec<&'a Formula>,
}

impl<'a> RuleContext<'a> {
    fn line(&self, k: usize) -> &'a Formula {
        match self.cited[k] {
            Cited::Line(f) => f,
            Cited::Subproof { .. } => unreachable!("slot kinds are checked before the rule runs"),
        }
    }

    fn sub(&self, k: usize) -> (&'a Formula, &'a Formula) {
        match self.cited[k] {
            Cited::Subproof { assumption, conclusion } => (assumption, conclusion),
            Cited::Line(_) => unreachable!("slot kinds are checked before the rule runs"),
        }
    }

    fn constant_in_context(&self, c: &str) -> bool {
        self.context.iter().any(|f| f.constants().contains(c))
    }
}

/// Why a rule application failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RuleFailure {
    ConclusionMismatch,
    EigenvariableViolation,
}

pub trait InferenceRule: Named + Send + Sync {
    fn slots(&self) -> &'static [RefKind];
    fn check(&self, cx: &RuleContext<'_>) -> Result<(), RuleFailure>;
}

struct FnRule {
    name: &'static str,
    slots: &'static [RefKind],
    check: fn(&RuleContext<'_>) -> Result<(), RuleFailure>,
}

impl Named for FnRule {
    fn name(&self) -> &'static str {
        self.name
    }
}

impl InferenceRule for FnRule {
    fn slots(&self) -> &'static [RefKind] {
        self.slots
    }

    fn check(&self, cx: &RuleContext<'_>) -> Result<(), RuleFailure> {
        (self.check)(cx)
    }
}

use RefKind::{Line as L, Subproof as S};
use RuleFailure::{ConclusionMismatch as Mismatch, EigenvariableViolation as Eigen};

fn require(ok: bool) -> Result<(), RuleFailure> {
    if ok {
        Ok(())
    } else {
        Err(Mismatch)
    }
}

/// The term `t` with `target = body[var := t]`; `Some(None)` when `var` is not
/// free in `body` and the two are identical.
pub fn instance_of(body: &Formula, var: &str, target: &Formula) -> Option<Option<Term>> {
    let mut binding = None;
    if inst_formula(body, var, target, &mut binding) {
        Some(binding)
    } else {
        None
    }
}

fn inst_formula(p: &Formula, var: &str, t: &Formula, b: &mut Option<Term>) -> bool {
    match (p, t) {
        (Formula::Top, Formula::Top) | (Formula::Bottom, Formula::Bottom) => true,
        (Formula::Atom(x, xa), Formula::Atom(y, ya)) => {
            x == y && xa.len() == ya.len() && xa.iter().zip(ya).all(|(s, u)| inst_term(s, var, u, b))
        }
        (Formula::Not(x), Formula::Not(y)) => inst_formula(x, var, y, b),
        (Formula::And(a, c), Formula::And(x, y))
        | (Formula::Or(a, c), Formula::Or(x, y))
        | (Formula::Imp(a, c), Formula::Imp(x, y))
        | (Formula::Iff(a, c), Formula::Iff(x, y)) => {
            inst_formula(a, var, x, b) && inst_formula(c, var, y, b)
        }
        (Formula::Forall(v, a), Formula::Forall(w, x)) | (Formula::Exists(v, a), Formula::Exists(w, x)) => {
            v == w && if v == var { a == x } else { inst_formula(a, var, x, b) }
        }
        _ => false,
    }
}

fn inst_term(p: &Term, var: &str, t: &Term, b: &mut Option<Term>) -> bool {
    match (p, t) {
        (Term::Var(v), _) if v == var => match b {
            Some(bound) => bound == t,
            None => {
                *b = Some(t.clone());
                true
            }
        },
        (Term::Func(f, fa), Term::Func(g, ga)) => {
            f == g && fa.len() == ga.len() && fa.iter().zip(ga).all(|(x, y)| inst_term(x, var, y, b))
        }
        _ => p == t,
    }
}

fn ground_instance(body: &Formula, var: &str, target: &Formula) -> Result<(), RuleFailure> {
    match instance_of(body, var, target) {
        Some(None) => Ok(()),
        Some(Some(t)) if t.is_ground() => Ok(()),
        _ => Err(Mismatch),
    }
}

/// The eigen-constant of an instance, if any; non-constant witnesses are rejected.
fn eigen_instance(body: &Formula, var: &str, target: &Formula) -> Result<Option<String>, RuleFailure> {
    match instance_of(body, var, target) {
        Some(None) => Ok(None),
        Some(Some(Term::Const(c))) => Ok(Some(c)),
        _ => Err(Mismatch),
    }
}

fn premise(_: &RuleContext<'_>) -> Result<(), RuleFailure> {
    Ok(())
}

fn reit(cx: &RuleContext<'_>) -> Result<(), RuleFailure> {
    require(cx.line(0) == cx.formula)
}

fn and_i(cx: &RuleContext<'_>) -> Result<(), RuleFailure> {
    require(*cx.formula == Formula::and(cx.line(0).clone(), cx.line(1).clone()))
}

fn and_e1(cx: &RuleContext<'_>) -> Result<(), RuleFailure> {
    require(matches!(cx.line(0), Formula::And(a, _) if **a == *cx.formula))
}

fn and_e2(cx: &RuleContext<'_>) -> Result<(), RuleFailure> {
    require(matches!(cx.line(0), Formula::And(_, b) if **b == *cx.formula))
}

fn or_i1(cx: &RuleContext<'_>) -> Result<(), RuleFailure> {
    require(matches!(cx.formula, Formula::Or(a, _) if **a == *cx.line(0)))
}

fn or_i2(cx: &RuleContext<'_>) -> Result<(), RuleFailure> {
    require(matches!(cx.formula, Formula::Or(_, b) if **b == *cx.line(0)))
}

fn or_e(cx: &RuleContext<'_>) -> Result<(), RuleFailure> {
    let Formula::Or(a, b) = cx.line(0) else { return Err(Mismatch) };
    let (h1, c1) = cx.sub(1);
    let (h2, c2) = cx.sub(2);
    require(**a == *h1 && **b == *h2 && c1 == cx.formula && c2 == cx.formula)
}

fn imp_i(cx: &RuleContext<'_>) -> Result<(), RuleFailure> {
    let (h, c) = cx.sub(0);
    require(*cx.formula == Formula::imp(h.clone(), c.clone()))
}

fn imp_e(cx: &RuleContext<'_>) -> Result<(), RuleFailure> {
    require(matches!(cx.line(0), Formula::Imp(a, b) if **a == *cx.line(1) && **b == *cx.formula))
}

fn not_i(cx: &RuleContext<'_>) -> Result<(), RuleFailure> {
    let (h, c) = cx.sub(0);
    require(*c == Formula::Bottom && *cx.formula == Formula::not(h.clone()))
}

fn not_e(cx: &RuleContext<'_>) -> Result<(), RuleFailure> {
    require(
        *cx.formula == Formula::Bottom && *cx.line(1) == Formula::not(cx.line(0).clone()),
    )
}

fn bot_e(cx: &RuleContext<'_>) -> Result<(), RuleFailure> {
    require(*cx.line(0) == Formula::Bottom)
}

fn dne(cx: &RuleContext<'_>) -> Result<(), RuleFailure> {
    require(*cx.line(0) == Formula::not(Formula::not(cx.formula.clone())))
}

fn iff_i(cx: &RuleContext<'_>) -> Result<(), RuleFailure> {
    let Formula::Iff(a, b) = cx.formula else { return Err(Mismatch) };
    let (h1, c1) = cx.sub(0);
    let (h2, c2) = cx.sub(1);
    require(**a == *h1 && **b == *c1 && **b == *h2 && **a == *c2)
}

fn iff_e1(cx: &RuleContext<'_>) -> Result<(), RuleFailure> {
    require(matches!(cx.line(0), Formula::Iff(a, b) if **a == *cx.line(1) && **b == *cx.formula))
}

fn iff_e2(cx: &RuleContext<'_>) -> Result<(), RuleFailure> {
    require(matches!(cx.line(0), Formula::Iff(a, b) if **b == *cx.line(1) && **a == *cx.formula))
}

fn forall_i(cx: &RuleContext<'_>) -> Result<(), RuleFailure> {
    let Formula::Forall(x, body) = cx.formula else { return Err(Mismatch) };
    if let Some(c) = eigen_instance(body, x, cx.line(0))? {
        if cx.formula.constants().contains(&c) || cx.constant_in_context(&c) {
            return Err(Eigen);
        }
    }
    Ok(())
}

fn forall_e(cx: &RuleContext<'_>) -> Result<(), RuleFailure> {
    let Formula::Forall(x, body) = cx.line(0) else { return Err(Mismatch) };
    ground_instance(body, x, cx.formula)
}

fn exists_i(cx: &RuleContext<'_>) -> Result<(), RuleFailure> {
    let Formula::Exists(x, body) = cx.formula else { return Err(Mismatch) };
    ground_instance(body, x, cx.line(0))
}

fn exists_e(cx: &RuleContext<'_>) -> Result<(), RuleFailure> {
    let ex = cx.line(0);
    let Formula::Exists(x, body) = ex else { return Err(Mismatch) };
    let (h, c) = cx.sub(1);
    require(c == cx.formula)?;
    if let Some(k) = eigen_instance(body, x, h)? {
        let mut seen: BTreeSet<String> = ex.constants();
        seen.extend(cx.formula.constants());
        if seen.contains(&k) || cx.constant_in_context(&k) {
            return Err(Eigen);
        }
    }
    Ok(())
}

type RuleCheck = fn(&RuleContext<'_>) -> Result<(), RuleFailure>;

/// The natural-deduction rules, keyed by the names used in proof files.
///
/// `premise` and `assume` take no citations; their placement is checked by
/// the proof checker itself.
pub fn natded_rules() -> Registry<dyn InferenceRule> {
    let table: [(&'static str, &'static [RefKind], RuleCheck); 22] = [
        ("premise", &[], premise),
        ("assume", &[], premise),
        ("reit", &[L], reit),
        ("andI", &[L, L], and_i),
        ("andE1", &[L], and_e1),
        ("andE2", &[L], and_e2),
        ("orI1", &[L], or_i1),
        ("orI2", &[L], or_i2),
        ("orE", &[L, S, S], or_e),
        ("impI", &[S], imp_i),
        ("impE", &[L, L], imp_e),
        ("notI", &[S], not_i),
        ("notE", &[L, L], not_e),
        ("botE", &[L], bot_e),
        ("dne", &[L], dne),
        ("iffI", &[S, S], iff_i),
        ("iffE1", &[L, L], iff_e1),
        ("iffE2", &[L, L], iff_e2),
        ("forallI", &[L], forall_i),
        ("forallE", &[L], forall_e),
        ("existsI", &[L], exists_i),
        ("existsE", &[L, S], exists_e),
    ];
    let mut r: Registry<dyn InferenceRule> = Registry::new();
    for (name, slots, check) in table {
        r.register(Box::new(FnRule { name, slots, check }));
    }
    r
}
