use std::collections::BTreeMap;
use std::fmt;

use crate::normalform::{Clause, Literal};
use crate::syntax::Term;

/// A finite map from variables to terms, kept idempotent.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Substitution(BTreeMap<String, Term>);

/// Why two terms have no unifier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UnifyFailure {
    /// Different function symbols, constants, or argument counts.
    Clash(Term, Term),
    /// The variable occurs inside the term it would be bound to.
    OccursCheck(String, Term),
}

impl fmt::Display for UnifyFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UnifyFailure::Clash(a, b) => write!(f, "clash between {a} and {b}"),
            UnifyFailure::OccursCheck(v, t) => write!(f, "{v} occurs in {t}"),
        }
    }
}

impl Substitution {
    pub fn new() -> Self {
        Substitution::default()
    }

    /// Builds a substitution from explicit bindings without any checks.
    pub fn from_bindings(pairs: impl IntoIterator<Item = (String, Term)>) -> Self {
        Substitution(pairs.into_iter().collect())
    }

    pub fn get(&self, var: &str) -> Option<&Term> {
        self.0.get(var)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&String, &Term)> {
        self.0.iter()
    }

    pub fn apply(&self, t: &Term) -> Term {
        match t {
            Term::Var(v) => self.0.get(v).cloned().unwrap_or_else(|| t.clone()),
            Term::Const(_) => t.clone(),
            Term::Func(f, args) => Term::Func(f.clone(), args.iter().map(|a| self.apply(a)).collect()),
        }
    }

    pub fn apply_literal(&self, l: &Literal) -> Literal {
        l.map_terms(&mut |t| self.apply(t))
    }

    pub fn apply_clause(&self, c: &Clause) -> Clause {
        c.map_terms(&mut |t| self.apply(t))
    }

    /// The substitution `t ↦ other(self(t))`.
    pub fn then(&self, other: &Substitution) -> Substitution {
        let mut out: BTreeMap<String, Term> =
            self.0.iter().map(|(v, t)| (v.clone(), other.apply(t))).collect();
        for (v, t) in &other.0 {
            out.entry(v.clone()).or_insert_with(|| t.clone());
        }
        out.retain(|v, t| *t != Term::Var(v.clone()));
        Substitution(out)
    }

    pub fn is_idempotent(&self) -> bool {
        self.0.values().all(|t| self.apply(t) == *t)
    }

    // Adds x ↦ t to an idempotent substitution whose range already has self applied.
    fn bind(&mut self, var: &str, t: Term) {
        let single = Substitution(BTreeMap::from([(var.to_string(), t.clone())]));
        for v in self.0.values_mut() {
            *v = single.apply(v);
        }
        self.0.insert(var.to_string(), t);
    }
}

impl fmt::Display for Substitution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(v, t)| format!("{v}↦{t}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Most general unifier of two terms.
pub fn unify(t1: &Term, t2: &Term) -> Result<Substitution, UnifyFailure> {
    let mut s = Substitution::new();
    unify_into(&mut s, t1, t2)?;
    Ok(s)
}

/// Most general simultaneous unifier of two argument lists of equal length.
pub fn unify_args(a: &[Term], b: &[Term]) -> Result<Substitution, UnifyFailure> {
    let mut s = Substitution::new();
    for (x, y) in a.iter().zip(b) {
        unify_into(&mut s, x, y)?;
    }
    Ok(s)
}

/// Extends `s` to a unifier of `s(t1)` and `s(t2)`.
pub fn unify_into(s: &mut Substitution, t1: &Term, t2: &Term) -> Result<(), UnifyFailure> {
    let mut stack = vec![(s.apply(t1), s.apply(t2))];
    while let Some((a, b)) = stack.pop() {
        let (a, b) = (s.apply(&a), s.apply(&b));
        match (&a, &b) {
            _ if a == b => {}
            (Term::Var(x), t) | (t, Term::Var(x)) => {
                if t.occurs(x) {
                    return Err(UnifyFailure::OccursCheck(x.clone(), t.clone()));
                }
                s.bind(x, t.clone());
            }
            (Term::Func(f, fa), Term::Func(g, ga)) if f == g && fa.len() == ga.len() => {
                stack.extend(fa.iter().cloned().zip(ga.iter().cloned()).rev());
            }
            _ => return Err(UnifyFailure::Clash(a.clone(), b.clone())),
        }
    }
    Ok(())
}

/// One-way matching: extends `s` so that `s(pattern) == target`, treating
/// the variables of `target` as constants.
pub fn match_term(s: &mut Substitution, pattern: &Term, target: &Term) -> bool {
    match (pattern, target) {
        (Term::Var(x), _) => match s.0.get(x) {
            Some(bound) => bound == target,
            None => {
                s.0.insert(x.clone(), target.clone());
                true
            }
        },
        (Term::Const(a), Term::Const(b)) => a == b,
        (Term::Func(f, fa), Term::Func(g, ga)) if f == g && fa.len() == ga.len() => {
            fa.iter().zip(ga).all(|(p, t)| match_term(s, p, t))
        }
        _ => false,
    }
}
