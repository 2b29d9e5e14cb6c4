use std::collections::{BTreeMap, BTreeSet};

use super::{Answer, Atom, FactBase, Program, Tuple};
use crate::registry::{Named, Registry};
use crate::syntax::Term;

/// A bottom-up strategy for computing the least fixpoint of a program.
pub trait Evaluator: Named + Send + Sync {
    fn evaluate(&self, p: &Program) -> FactBase;
}

/// Recomputes every rule against all known facts until nothing changes.
pub struct Naive;

/// Requires each derivation to use at least one fact new in the last round.
pub struct SemiNaive;

impl Named for Naive {
    fn name(&self) -> &'static str {
        "naive"
    }
}

impl Named for SemiNaive {
    fn name(&self) -> &'static str {
        "semi-naive"
    }
}

pub fn datalog_engines() -> Registry<dyn Evaluator> {
    let mut r: Registry<dyn Evaluator> = Registry::new();
    r.register(Box::new(Naive));
    r.register(Box::new(SemiNaive));
    r
}

/// The least fixpoint, computed semi-naively.
pub fn fixpoint(p: &Program) -> FactBase {
    SemiNaive.evaluate(p)
}

pub(crate) fn match_tuple(args: &[Term], t: &Tuple, b: &mut Answer) -> bool {
    for (a, v) in args.iter().zip(t) {
        match a {
            Term::Const(c) if c != v => return false,
            Term::Var(x) => match b.get(x) {
                Some(bound) if bound != v => return false,
                Some(_) => {}
                None => {
                    b.insert(x.clone(), v.clone());
                }
            },
            _ => {}
        }
    }
    true
}

fn instantiate(head: &Atom, b: &Answer) -> Tuple {
    head.args
        .iter()
        .map(|t| match t {
            Term::Var(x) => b[x].clone(),
            Term::Const(c) => c.clone(),
            Term::Func(..) => unreachable!("rejected on construction"),
        })
        .collect()
}

type Relations = BTreeMap<String, BTreeSet<Tuple>>;

/// Extends `b` through `body[k..]`, taking atom `i` from `sources[i]`.
fn join(body: &[Atom], sources: &[&Relations], k: usize, b: &mut Answer, emit: &mut impl FnMut(&Answer)) {
    if k == body.len() {
        emit(b);
        return;
    }
    let atom = &body[k];
    let Some(rel) = sources[k].get(&atom.pred) else { return };
    for t in rel {
        let saved = b.clone();
        if match_tuple(&atom.args, t, b) {
            join(body, sources, k + 1, b, emit);
        }
        *b = saved;
    }
}

impl Evaluator for Naive {
    fn evaluate(&self, p: &Program) -> FactBase {
        let mut facts = p.facts();
        loop {
            let mut new = Vec::new();
            for r in p.rules() {
                let sources = vec![&facts.relations; r.body.len()];
                join(&r.body, &sources, 0, &mut Answer::new(), &mut |b| {
                    let t = instantiate(&r.head, b);
                    if !facts.contains(&r.head.pred, &t) {
                        new.push((r.head.pred.clone(), t));
                    }
                });
            }
            if new.is_empty() {
                return facts;
            }
            for (pred, t) in new {
                facts.insert(&pred, t);
            }
        }
    }
}

impl Evaluator for SemiNaive {
    fn evaluate(&self, p: &Program) -> FactBase {
        let mut facts = p.facts();
        let mut delta = facts.relations.clone();
        while !delta.is_empty() {
            let mut next: Relations = BTreeMap::new();
            for r in p.rules() {
                for i in 0..r.body.len() {
                    if !delta.contains_key(&r.body[i].pred) {
                        continue;
                    }
                    let sources: Vec<&Relations> = (0..r.body.len())
                        .map(|j| if j == i { &delta } else { &facts.relations })
                        .collect();
                    join(&r.body, &sources, 0, &mut Answer::new(), &mut |b| {
                        let t = instantiate(&r.head, b);
                        if !facts.contains(&r.head.pred, &t) {
                            next.entry(r.head.pred.clone()).or_default().insert(t);
                        }
                    });
                }
            }
            for (pred, rel) in &next {
                for t in rel {
                    facts.insert(pred, t.clone());
                }
            }
            delta = next;
        }
        facts
    }
}
