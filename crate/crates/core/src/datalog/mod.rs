//! Function-free Horn programs evaluated bottom-up, with closed-world queries.

mod eval;
mod parse;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::semantics::Interpretation;
use crate::syntax::{Formula, Term};

pub use eval::{datalog_engines, fixpoint, Evaluator, Naive, SemiNaive};
pub use parse::{parse_atom, parse_program};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DatalogError {
    #[error("line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("function symbol `{0}` is not allowed in Datalog")]
    FunctionSymbol(String),
    #[error("rule `{0}` is not range-restricted")]
    RangeRestriction(String),
    #[error("predicate `{pred}` used with arity {found}, expected {expected}")]
    Arity { pred: String, expected: usize, found: usize },
    #[error("unknown predicate `{0}`")]
    UnknownPredicate(String),
}

/// `pred(t1, .., tn)` whose arguments are variables or constants.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Atom {
    pub pred: String,
    pub args: Vec<Term>,
}

impl Atom {
    pub fn new(pred: impl Into<String>, args: Vec<Term>) -> Result<Self, DatalogError> {
        for a in &args {
            if let Term::Func(f, _) = a {
                return Err(DatalogError::FunctionSymbol(f.clone()));
            }
        }
        Ok(Atom { pred: pred.into(), args })
    }

    pub fn vars(&self) -> BTreeSet<String> {
        self.args.iter().filter_map(|t| match t {
            Term::Var(v) => Some(v.clone()),
            _ => None,
        }).collect()
    }

    pub fn is_ground(&self) -> bool {
        self.args.iter().all(|t| !t.is_var())
    }

    fn constants(&self) -> impl Iterator<Item = &String> {
        self.args.iter().filter_map(|t| match t {
            Term::Const(c) => Some(c),
            _ => None,
        })
    }

    pub fn to_formula(&self) -> Formula {
        Formula::pred(self.pred.clone(), self.args.clone())
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.pred)?;
        if !self.args.is_empty() {
            let args: Vec<String> = self.args.iter().map(dl_term).collect();
            write!(f, "({})", args.join(", "))?;
        }
        Ok(())
    }
}

fn dl_term(t: &Term) -> String {
    match t {
        Term::Var(v) | Term::Const(v) => v.clone(),
        Term::Func(..) => unreachable!("rejected on construction"),
    }
}

/// `head :- body`; an empty body makes the rule a fact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rule {
    pub head: Atom,
    pub body: Vec<Atom>,
}

impl Rule {
    /// The rule as a universally closed Horn implication.
    pub fn to_formula(&self) -> Formula {
        let body = if self.body.is_empty() {
            Formula::Top
        } else {
            Formula::conjunction(self.body.iter().map(Atom::to_formula))
        };
        let mut vars = self.head.vars();
        for b in &self.body {
            vars.extend(b.vars());
        }
        let imp = Formula::imp(body, self.head.to_formula());
        vars.into_iter().rev().fold(imp, |f, v| Formula::forall(v, f))
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.head)?;
        if !self.body.is_empty() {
            let body: Vec<String> = self.body.iter().map(Atom::to_string).collect();
            write!(f, " :- {}", body.join(", "))?;
        }
        write!(f, ".")
    }
}

/// A ground atom in relational form.
pub type Tuple = Vec<String>;

/// A validated program: ground facts plus range-restricted rules.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Program {
    facts: BTreeMap<String, BTreeSet<Tuple>>,
    rules: Vec<Rule>,
    arities: BTreeMap<String, usize>,
    constants: BTreeSet<String>,
}

impl Program {
    /// Validates range restriction and consistent arities. Ground rules with
    /// an empty body become facts.
    pub fn new(facts: Vec<Atom>, rules: Vec<Rule>) -> Result<Self, DatalogError> {
        let mut p = Program::default();
        for a in &facts {
            p.declare(a)?;
            if !a.is_ground() {
                return Err(DatalogError::RangeRestriction(format!("{a}.")));
            }
            p.facts.entry(a.pred.clone()).or_default().insert(a.args.iter().map(dl_term).collect());
        }
        for r in rules {
            p.declare(&r.head)?;
            let mut body_vars = BTreeSet::new();
            for b in &r.body {
                p.declare(b)?;
                body_vars.extend(b.vars());
            }
            if !r.head.vars().is_subset(&body_vars) {
                return Err(DatalogError::RangeRestriction(r.to_string()));
            }
            if r.body.is_empty() {
                p.facts
                    .entry(r.head.pred.clone())
                    .or_default()
                    .insert(r.head.args.iter().map(dl_term).collect());
            } else {
                p.rules.push(r);
            }
        }
        Ok(p)
    }

    fn declare(&mut self, a: &Atom) -> Result<(), DatalogError> {
        let expected = *self.arities.entry(a.pred.clone()).or_insert(a.args.len());
        if expected != a.args.len() {
            return Err(DatalogError::Arity { pred: a.pred.clone(), expected, found: a.args.len() });
        }
        self.constants.extend(a.constants().cloned());
        Ok(())
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn facts(&self) -> FactBase {
        FactBase { relations: self.facts.clone() }
    }

    /// Predicates and their arities.
    pub fn signature(&self) -> &BTreeMap<String, usize> {
        &self.arities
    }

    /// The active domain: every constant mentioned by the program.
    pub fn constants(&self) -> &BTreeSet<String> {
        &self.constants
    }

    fn arity_of(&self, pred: &str) -> Result<usize, DatalogError> {
        self.arities.get(pred).copied().ok_or_else(|| DatalogError::UnknownPredicate(pred.to_string()))
    }
}

impl fmt::Display for Program {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for a in self.facts().atoms() {
            writeln!(f, "{a}.")?;
        }
        for r in &self.rules {
            writeln!(f, "{r}")?;
        }
        Ok(())
    }
}

/// A set of ground atoms indexed by predicate.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FactBase {
    pub(crate) relations: BTreeMap<String, BTreeSet<Tuple>>,
}

impl FactBase {
    pub fn relation(&self, pred: &str) -> impl Iterator<Item = &Tuple> {
        self.relations.get(pred).into_iter().flatten()
    }

    pub fn contains(&self, pred: &str, args: &[String]) -> bool {
        self.relations.get(pred).is_some_and(|r| r.contains(args))
    }

    pub fn insert(&mut self, pred: &str, args: Tuple) -> bool {
        self.relations.entry(pred.to_string()).or_default().insert(args)
    }

    pub fn len(&self) -> usize {
        self.relations.values().map(BTreeSet::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// All facts, sorted by predicate then arguments.
    pub fn atoms(&self) -> impl Iterator<Item = Atom> + '_ {
        self.relations.iter().flat_map(|(p, rel)| {
            rel.iter().map(move |t| Atom {
                pred: p.clone(),
                args: t.iter().map(|c| Term::Const(c.clone())).collect(),
            })
        })
    }
}

impl fmt::Display for FactBase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for a in self.atoms() {
            writeln!(f, "{a}.")?;
        }
        Ok(())
    }
}

/// A variable binding produced by [`query`].
pub type Answer = BTreeMap<String, String>;

pub fn render_answer(a: &Answer) -> String {
    let parts: Vec<String> = a.iter().map(|(k, v)| format!("{k}↦{v}")).collect();
    format!("{{{}}}", parts.join(", "))
}

/// Every substitution mapping `q` into the least fixpoint, sorted. A ground
/// query yields one empty answer when true and none when false.
pub fn query(p: &Program, q: &Atom) -> Result<Vec<Answer>, DatalogError> {
    query_facts(p, &fixpoint(p), q)
}

/// Like [`query`] against an already computed fact base of `p`.
pub fn query_facts(p: &Program, facts: &FactBase, q: &Atom) -> Result<Vec<Answer>, DatalogError> {
    let arity = p.arity_of(&q.pred)?;
    if arity != q.args.len() {
        return Err(DatalogError::Arity { pred: q.pred.clone(), expected: arity, found: q.args.len() });
    }
    let mut out = BTreeSet::new();
    for t in facts.relation(&q.pred) {
        let mut b = Answer::new();
        if eval::match_tuple(&q.args, t, &mut b) {
            out.insert(b);
        }
    }
    Ok(out.into_iter().collect())
}

/// Ground atoms of `pred` over the program's constants that the fixpoint
/// does not contain.
pub fn cwa_complement(p: &Program, pred: &str) -> Result<Vec<Atom>, DatalogError> {
    let arity = p.arity_of(pred)?;
    let facts = fixpoint(p);
    let consts: Vec<&String> = p.constants.iter().collect();
    let mut out = Vec::new();
    for idx in crate::semantics::tuples(consts.len(), arity) {
        let t: Tuple = idx.iter().map(|&i| consts[i].clone()).collect();
        if !facts.contains(pred, &t) {
            out.push(Atom { pred: pred.to_string(), args: t.into_iter().map(Term::Const).collect() });
        }
    }
    Ok(out)
}

/// The Herbrand structure of `facts` over the program's constants, each
/// constant denoting its position in sorted order.
pub fn herbrand_interpretation(p: &Program, facts: &FactBase) -> Interpretation {
    let index: BTreeMap<&String, usize> = p.constants.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let mut m = Interpretation::new(p.constants.len().max(1));
    for (c, &i) in &index {
        m.constants.insert((*c).clone(), i);
    }
    for pred in p.arities.keys() {
        let ext = facts.relation(pred).map(|t| t.iter().map(|c| index[c]).collect()).collect();
        m.predicates.insert(pred.clone(), ext);
    }
    m
}
