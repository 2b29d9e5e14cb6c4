use std::collections::BTreeSet;

use super::clause::{Clause, ClauseSet, FreshSymbols, Literal};
use super::cnf::{cnf_clauses, DEFAULT_NODE_LIMIT};
use super::nnf::nnf;
use super::NormalFormError;
use crate::syntax::{fresh_name, rename_apart, Formula, Quantifier, Term};

/// Prenex form of `nnf(f)` with all bound variables renamed apart.
///
/// Quantifiers are hoisted one at a time, those of the left operand of a
/// binary node ahead of those of the right operand.
pub fn prenex(f: &Formula) -> Formula {
    let g = rename_apart(&nnf(f));
    let (prefix, matrix) = pull(&g);
    close(prefix, matrix)
}

/// Splits a prenex formula into its quantifier prefix and matrix.
pub fn split_prefix(f: &Formula) -> (Vec<(Quantifier, String)>, Formula) {
    let mut prefix = Vec::new();
    let mut cur = f;
    loop {
        match cur {
            Formula::Forall(v, b) => {
                prefix.push((Quantifier::Forall, v.clone()));
                cur = b;
            }
            Formula::Exists(v, b) => {
                prefix.push((Quantifier::Exists, v.clone()));
                cur = b;
            }
            _ => return (prefix, cur.clone()),
        }
    }
}

fn close(prefix: Vec<(Quantifier, String)>, matrix: Formula) -> Formula {
    prefix.into_iter().rev().fold(matrix, |body, (q, v)| q.bind(v, body))
}

fn pull(f: &Formula) -> (Vec<(Quantifier, String)>, Formula) {
    match f {
        Formula::Forall(v, b) | Formula::Exists(v, b) => {
            let q = if matches!(f, Formula::Forall(..)) { Quantifier::Forall } else { Quantifier::Exists };
            let (mut prefix, m) = pull(b);
            prefix.insert(0, (q, v.clone()));
            (prefix, m)
        }
        Formula::And(a, b) | Formula::Or(a, b) => {
            let (mut pa, ma) = pull(a);
            let (pb, mb) = pull(b);
            pa.extend(pb);
            let m = if matches!(f, Formula::And(..)) { Formula::and(ma, mb) } else { Formula::or(ma, mb) };
            (pa, m)
        }
        _ => (Vec::new(), f.clone()),
    }
}

/// Skolem normal form: a universally quantified prenex formula in which each
/// existential variable is replaced by `_cK` or `_fK(x1, .., xn)` over the
/// universals preceding it.
pub fn skolemize(f: &Formula) -> Result<(Formula, FreshSymbols), NormalFormError> {
    if !f.is_sentence() {
        return Err(NormalFormError::NotSentence(f.free_vars().into_iter().collect()));
    }
    let p = prenex(f);
    let (prefix, mut matrix) = split_prefix(&p);
    let mut used: BTreeSet<String> = p.term_names();
    used.extend(p.predicates());
    let mut fresh = FreshSymbols::default();
    let (mut nc, mut nf) = (0, 0);
    let mut universals: Vec<String> = Vec::new();
    for (q, v) in prefix {
        if q == Quantifier::Forall {
            universals.push(v);
            continue;
        }
        let witness = if universals.is_empty() {
            let name = next_name("_c", &mut nc, &used);
            fresh.skolem_constants.push(name.clone());
            Term::Const(name)
        } else {
            let name = next_name("_f", &mut nf, &used);
            fresh.skolem_functions.push((name.clone(), universals.len()));
            Term::Func(name, universals.iter().map(|u| Term::Var(u.clone())).collect())
        };
        matrix = matrix.map_terms(&mut |t| t.replace_var(&v, &witness));
    }
    let out = universals.into_iter().rev().fold(matrix, |body, v| Formula::forall(v, body));
    Ok((out, fresh))
}

fn next_name(prefix: &str, counter: &mut usize, used: &BTreeSet<String>) -> String {
    loop {
        *counter += 1;
        let name = format!("{prefix}{counter}");
        if !used.contains(&name) {
            return name;
        }
    }
}

/// Clausal form of a sentence: Skolemize, drop the universal prefix, and
/// read clauses off the distributive CNF of the matrix.
///
/// Tautologies are dropped and every clause gets variables not used by any
/// earlier clause.
pub fn clausify(f: &Formula) -> Result<ClauseSet, NormalFormError> {
    let (sk, fresh) = skolemize(f)?;
    let (_, matrix) = split_prefix(&sk);
    let raw = cnf_clauses(&matrix, DEFAULT_NODE_LIMIT)?;
    let mut used: BTreeSet<String> = sk.term_names();
    let mut seen_vars: BTreeSet<String> = BTreeSet::new();
    let mut out = ClauseSet::new();
    out.fresh = fresh;
    for lits in raw {
        let clause: Clause = lits
            .iter()
            .map(|l| Literal::from_formula(l).expect("CNF clauses hold literals"))
            .collect();
        if clause.is_tautology() {
            continue;
        }
        let mut renaming = Vec::new();
        for v in clause.vars() {
            if seen_vars.contains(&v) {
                let new = fresh_name(&v, &used);
                used.insert(new.clone());
                renaming.push((v, new));
            }
        }
        let clause = if renaming.is_empty() {
            clause
        } else {
            clause.map_terms(&mut |t| {
                renaming
                    .iter()
                    .fold(t.clone(), |acc, (from, to)| acc.replace_var(from, &Term::Var(to.clone())))
            })
        };
        seen_vars.extend(clause.vars());
        out.push(clause);
    }
    Ok(out)
}

/// True when every clause has at most one positive literal.
pub fn is_horn(cs: &ClauseSet) -> bool {
    cs.iter().all(Clause::is_horn)
}
