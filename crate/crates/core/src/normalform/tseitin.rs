use std::collections::BTreeSet;

use super::clause::{Clause, ClauseSet, Literal};
use super::NormalFormError;
use crate::syntax::Formula;

/// Equisatisfiable CNF with one definition atom per non-literal node.
///
/// Definition atoms are named `_t1`, `_t2`, ... in post-order, skipping any
/// name already used by the formula. A literal root yields a single unit
/// clause and no fresh atoms.
pub fn tseitin(f: &Formula) -> Result<ClauseSet, NormalFormError> {
    if !f.is_propositional() {
        return Err(NormalFormError::NotPropositional);
    }
    let mut enc = Encoder {
        used: f.atoms(),
        counter: 0,
        out: ClauseSet::new(),
    };
    let root = enc.encode(f);
    enc.out.push(std::iter::once(root).collect());
    Ok(enc.out)
}

struct Encoder {
    used: BTreeSet<String>,
    counter: usize,
    out: ClauseSet,
}

impl Encoder {
    fn fresh(&mut self) -> Literal {
        loop {
            self.counter += 1;
            let name = format!("_t{}", self.counter);
            if !self.used.contains(&name) {
                self.out.fresh.tseitin_atoms.push(name.clone());
                return Literal::pos(name);
            }
        }
    }

    fn clause(&mut self, lits: &[&Literal]) {
        let c: Clause = lits.iter().map(|l| (*l).clone()).collect();
        self.out.push(c);
    }

    fn encode(&mut self, f: &Formula) -> Literal {
        if let Some(lit) = Literal::from_formula(f) {
            return lit;
        }
        match f {
            Formula::Top | Formula::Bottom => {
                let x = self.fresh();
                let unit = if *f == Formula::Top { x.clone() } else { x.negated() };
                self.clause(&[&unit]);
                x
            }
            Formula::Not(a) => {
                let a = self.encode(a);
                let x = self.fresh();
                self.clause(&[&x.negated(), &a.negated()]);
                self.clause(&[&x, &a]);
                x
            }
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) | Formula::Iff(a, b) => {
                let a = self.encode(a);
                let b = self.encode(b);
                let x = self.fresh();
                let (nx, na, nb) = (x.negated(), a.negated(), b.negated());
                match f {
                    Formula::And(..) => {
                        self.clause(&[&nx, &a]);
                        self.clause(&[&nx, &b]);
                        self.clause(&[&x, &na, &nb]);
                    }
                    Formula::Or(..) => {
                        self.clause(&[&nx, &a, &b]);
                        self.clause(&[&x, &na]);
                        self.clause(&[&x, &nb]);
                    }
                    Formula::Imp(..) => {
                        self.clause(&[&nx, &na, &b]);
                        self.clause(&[&x, &a]);
                        self.clause(&[&x, &nb]);
                    }
                    _ => {
                        self.clause(&[&nx, &na, &b]);
                        self.clause(&[&nx, &a, &nb]);
                        self.clause(&[&x, &a, &b]);
                        self.clause(&[&x, &na, &nb]);
                    }
                }
                x
            }
            Formula::Atom(..) | Formula::Forall(..) | Formula::Exists(..) => {
                unreachable!("literals and quantifiers are handled above")
            }
        }
    }
}
