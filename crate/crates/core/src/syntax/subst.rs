//! Fresh names and capture-avoiding substitution.

use std::collections::{BTreeSet, HashMap, HashSet};

use super::formula::Formula;
use super::term::Term;

/// Appends the smallest positive integer to `base` that yields an unused name.
pub fn fresh_name(base: &str, used: &BTreeSet<String>) -> String {
    (1..)
        .map(|k| format!("{base}{k}"))
        .find(|c| !used.contains(c))
        .expect("unbounded suffix search")
}

/// Replaces the free occurrences of `var` in `f` by `term`.
///
/// Bound variables that would capture a variable of `term` are renamed with
/// [`fresh_name`], avoiding every identifier of `f` and `term`.
pub fn substitute(f: &Formula, var: &str, term: &Term) -> Formula {
    if !f.has_free(var) {
        return f.clone();
    }
    let mut used = f.term_names();
    term.collect_names(&mut used);
    used.insert(var.to_string());
    let term_vars = term.vars();
    subst_rec(f, var, term, &term_vars, &mut used)
}

fn subst_rec(
    f: &Formula,
    var: &str,
    term: &Term,
    term_vars: &BTreeSet<String>,
    used: &mut BTreeSet<String>,
) -> Formula {
    let rec = |g: &Formula, used: &mut BTreeSet<String>| subst_rec(g, var, term, term_vars, used);
    match f {
        Formula::Top | Formula::Bottom => f.clone(),
        Formula::Atom(p, args) => {
            Formula::Atom(p.clone(), args.iter().map(|a| a.replace_var(var, term)).collect())
        }
        Formula::Not(a) => Formula::not(rec(a, used)),
        Formula::And(a, b) => {
            let a = rec(a, used);
            Formula::and(a, rec(b, used))
        }
        Formula::Or(a, b) => {
            let a = rec(a, used);
            Formula::or(a, rec(b, used))
        }
        Formula::Imp(a, b) => {
            let a = rec(a, used);
            Formula::imp(a, rec(b, used))
        }
        Formula::Iff(a, b) => {
            let a = rec(a, used);
            Formula::iff(a, rec(b, used))
        }
        Formula::Forall(y, body) | Formula::Exists(y, body) => {
            let forall = matches!(f, Formula::Forall(..));
            let rebuild = |v: String, b: Formula| {
                if forall {
                    Formula::forall(v, b)
                } else {
                    Formula::exists(v, b)
                }
            };
            if y == var || !body.has_free(var) {
                return f.clone();
            }
            if term_vars.contains(y) {
                let renamed = fresh_name(y, used);
                used.insert(renamed.clone());
                let body = subst_rec(body, y, &Term::Var(renamed.clone()), &BTreeSet::new(), used);
                rebuild(renamed, rec(&body, used))
            } else {
                rebuild(y.clone(), rec(body, used))
            }
        }
    }
}

/// Renames the bound variable of every quantifier whose name was already bound
/// earlier (pre-order, left to right) or also occurs free or as a constant.
///
/// Afterwards all binders are distinct and no binder shadows a free name.
pub fn rename_apart(f: &Formula) -> Formula {
    let mut used = f.term_names();
    let mut reserved = f.free_vars();
    reserved.extend(f.constants());
    let mut bound = BTreeSet::new();
    rename_rec(f, &reserved, &mut bound, &mut used)
}

fn rename_rec(
    f: &Formula,
    reserved: &BTreeSet<String>,
    bound: &mut BTreeSet<String>,
    used: &mut BTreeSet<String>,
) -> Formula {
    match f {
        Formula::Top | Formula::Bottom | Formula::Atom(..) => f.clone(),
        Formula::Not(a) => Formula::not(rename_rec(a, reserved, bound, used)),
        Formula::And(a, b) => {
            let a = rename_rec(a, reserved, bound, used);
            Formula::and(a, rename_rec(b, reserved, bound, used))
        }
        Formula::Or(a, b) => {
            let a = rename_rec(a, reserved, bound, used);
            Formula::or(a, rename_rec(b, reserved, bound, used))
        }
        Formula::Imp(a, b) => {
            let a = rename_rec(a, reserved, bound, used);
            Formula::imp(a, rename_rec(b, reserved, bound, used))
        }
        Formula::Iff(a, b) => {
            let a = rename_rec(a, reserved, bound, used);
            Formula::iff(a, rename_rec(b, reserved, bound, used))
        }
        Formula::Forall(y, body) | Formula::Exists(y, body) => {
            let (name, body) = if bound.contains(y) || reserved.contains(y) {
                let fresh = fresh_name(y, used);
                used.insert(fresh.clone());
                let body = substitute(body, y, &Term::Var(fresh.clone()));
                (fresh, body)
            } else {
                (y.clone(), (**body).clone())
            };
            bound.insert(name.clone());
            let body = rename_rec(&body, reserved, bound, used);
            if matches!(f, Formula::Forall(..)) {
                Formula::forall(name, body)
            } else {
                Formula::exists(name, body)
            }
        }
    }
}

/// A supply of fresh identifiers for long-running procedures.
///
/// Names are `stem` + counter where the stem is the base name with trailing
/// digits removed; each stem keeps its own counter so lookups stay cheap.
#[derive(Debug, Clone, Default)]
pub struct NameSupply {
    used: HashSet<String>,
    next: HashMap<String, usize>,
}

impl NameSupply {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn reserve(&mut self, name: &str) {
        self.used.insert(name.to_string());
    }

    pub fn contains(&self, name: &str) -> bool {
        self.used.contains(name)
    }

    /// Returns `base` itself when unused, otherwise a fresh variant.
    pub fn claim(&mut self, base: &str) -> String {
        if self.used.insert(base.to_string()) {
            return base.to_string();
        }
        self.fresh(base)
    }

    pub fn fresh(&mut self, base: &str) -> String {
        let stem = base.trim_end_matches(|c: char| c.is_ascii_digit());
        let stem = if stem.is_empty() { "v" } else { stem };
        let counter = self.next.entry(stem.to_string()).or_insert(1);
        loop {
            let candidate = format!("{stem}{counter}");
            *counter += 1;
            if self.used.insert(candidate.clone()) {
                return candidate;
            }
        }
    }
}
