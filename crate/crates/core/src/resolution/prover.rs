use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use super::unify::{match_term, unify_args, Substitution};
use crate::normalform::{Clause, ClauseSet, Literal};
use crate::syntax::{fresh_name, NameSupply, Term};

/// Bounds on a saturation run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProverLimits {
    /// Inferences (resolvents and factors) computed before giving up.
    pub max_steps: usize,
    pub max_clause_length: usize,
    pub max_term_depth: usize,
}

impl Default for ProverLimits {
    fn default() -> Self {
        ProverLimits { max_steps: 50_000, max_clause_length: 12, max_term_depth: 8 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Justification {
    Input,
    Resolvent { left: usize, right: usize, unifier: Substitution },
    Factor { parent: usize, unifier: Substitution },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofStep {
    pub clause: Clause,
    pub justification: Justification,
}

/// A derivation of the empty clause. Step numbers in justifications are
/// 1-based and always refer to earlier steps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RefutationProof {
    pub steps: Vec<ProofStep>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ResolutionOutcome {
    Refuted(RefutationProof),
    /// No new clause can be derived.
    Saturated,
    /// A limit was hit before refutation or saturation.
    ResourceOut,
}

impl ResolutionOutcome {
    pub fn is_refuted(&self) -> bool {
        matches!(self, ResolutionOutcome::Refuted(_))
    }
}

/// Renames every variable of `c` to a name not occurring in `c`.
///
/// Used for the second premise when a clause is resolved with itself.
pub fn variant_apart(c: &Clause) -> Clause {
    let vars = c.vars();
    let mut used = vars.clone();
    let mut map = BTreeMap::new();
    for v in &vars {
        let new = fresh_name(v, &used);
        used.insert(new.clone());
        map.insert(v.clone(), Term::Var(new));
    }
    Substitution::from_bindings(map).apply_clause(c)
}

/// True when the clauses differ only by a bijective renaming of variables.
pub fn is_variant(a: &Clause, b: &Clause) -> bool {
    a.len() == b.len() && subsumes(a, b) && subsumes(b, a)
}

/// Clause subsumption: some instance of `c` is contained in `d`, and `c` is no longer than `d`.
pub fn subsumes(c: &Clause, d: &Clause) -> bool {
    if c.len() > d.len() {
        return false;
    }
    let lits: Vec<&Literal> = c.iter().collect();
    let targets: Vec<&Literal> = d.iter().collect();
    extend_match(&lits, &targets, &mut Substitution::new())
}

fn extend_match(lits: &[&Literal], targets: &[&Literal], s: &mut Substitution) -> bool {
    let Some((first, rest)) = lits.split_first() else {
        return true;
    };
    for t in targets {
        if t.pred != first.pred || t.positive != first.positive || t.args.len() != first.args.len() {
            continue;
        }
        let mut trial = s.clone();
        if first.args.iter().zip(&t.args).all(|(p, a)| match_term(&mut trial, p, a)) && extend_match(rest, targets, &mut trial) {
            *s = trial;
            return true;
        }
    }
    false
}

fn max_depth(c: &Clause) -> usize {
    c.iter().flat_map(|l| l.args.iter().map(Term::depth)).max().unwrap_or(0)
}

/// Binary resolution with positive factoring, driven by a given-clause loop.
///
/// The given clause is the shortest unprocessed clause, ties broken by age.
/// New clauses are dropped when tautological or subsumed by a kept clause.
/// Clauses beyond the length or term-depth limit are discarded, which turns
/// a later saturation into [`ResolutionOutcome::ResourceOut`].
pub fn resolve_fol(cs: &ClauseSet, lim: ProverLimits) -> ResolutionOutcome {
    Saturation::new(lim).run(cs)
}

struct Stored {
    clause: Clause,
    just: Justification,
    /// (predicate, sign) pairs, for a quick subsumption pre-check.
    keys: BTreeSet<(String, bool)>,
}

struct Saturation {
    lim: ProverLimits,
    store: Vec<Stored>,
    unprocessed: BTreeSet<(usize, usize)>,
    processed: Vec<usize>,
    names: NameSupply,
    incomplete: bool,
    steps: usize,
}

enum Added {
    Kept,
    Empty(usize),
    Dropped,
}

impl Saturation {
    fn new(lim: ProverLimits) -> Self {
        Saturation {
            lim,
            store: Vec::new(),
            unprocessed: BTreeSet::new(),
            processed: Vec::new(),
            names: NameSupply::new(),
            incomplete: false,
            steps: 0,
        }
    }

    fn run(mut self, cs: &ClauseSet) -> ResolutionOutcome {
        for c in cs {
            let mut names = BTreeSet::new();
            for l in c {
                l.args.iter().for_each(|a| a.collect_names(&mut names));
            }
            let vars = c.vars();
            names.difference(&vars).for_each(|n| self.names.reserve(n));
        }
        for c in cs {
            if let Added::Empty(id) = self.add(c.clone(), Justification::Input, true) {
                return ResolutionOutcome::Refuted(self.extract(id));
            }
        }
        while let Some(&(len, id)) = self.unprocessed.iter().next() {
            self.unprocessed.remove(&(len, id));
            if let Some(empty) = self.process(id) {
                return ResolutionOutcome::Refuted(self.extract(empty));
            }
            if self.steps >= self.lim.max_steps {
                return ResolutionOutcome::ResourceOut;
            }
        }
        if self.incomplete {
            ResolutionOutcome::ResourceOut
        } else {
            ResolutionOutcome::Saturated
        }
    }

    /// Standardizes `c` apart and stores it unless redundant.
    fn add(&mut self, c: Clause, just: Justification, input: bool) -> Added {
        if c.is_tautology() {
            return Added::Dropped;
        }
        if c.len() > self.lim.max_clause_length || max_depth(&c) > self.lim.max_term_depth {
            self.incomplete = true;
            return Added::Dropped;
        }
        let keys: BTreeSet<(String, bool)> = c.iter().map(|l| (l.pred.clone(), l.positive)).collect();
        let redundant = self
            .store
            .iter()
            .any(|s| s.keys.is_subset(&keys) && subsumes(&s.clause, &c));
        if redundant {
            return Added::Dropped;
        }
        let renaming: BTreeMap<String, Term> = c
            .vars()
            .into_iter()
            .map(|v| {
                let new = if input { self.names.claim(&v) } else { self.names.fresh(&v) };
                (v, Term::Var(new))
            })
            .collect();
        let clause = Substitution::from_bindings(renaming).apply_clause(&c);
        let id = self.store.len();
        let empty = clause.is_empty();
        self.unprocessed.insert((clause.len(), id));
        self.store.push(Stored { clause, just, keys });
        if empty {
            Added::Empty(id)
        } else {
            Added::Kept
        }
    }

    fn process(&mut self, given: usize) -> Option<usize> {
        let g = self.store[given].clause.clone();
        let lits: Vec<Literal> = g.iter().cloned().collect();
        // positive factors
        for i in 0..lits.len() {
            for j in i + 1..lits.len() {
                let (a, b) = (&lits[i], &lits[j]);
                if !a.positive || !b.positive || a.pred != b.pred || a.args.len() != b.args.len() {
                    continue;
                }
                if let Ok(s) = unify_args(&a.args, &b.args) {
                    self.steps += 1;
                    let f = s.apply_clause(&g);
                    if let Added::Empty(id) = self.add(f, Justification::Factor { parent: given, unifier: s }, false) {
                        return Some(id);
                    }
                }
            }
        }
        self.processed.push(given);
        let partners = self.processed.clone();
        for other in partners {
            let partner = if other == given {
                variant_apart(&g)
            } else {
                self.store[other].clause.clone()
            };
            for a in &lits {
                for b in partner.iter() {
                    if a.pred != b.pred || a.positive == b.positive || a.args.len() != b.args.len() {
                        continue;
                    }
                    let Ok(s) = unify_args(&a.args, &b.args) else { continue };
                    self.steps += 1;
                    let resolvent: Clause = g
                        .iter()
                        .filter(|l| *l != a)
                        .chain(partner.iter().filter(|l| *l != b))
                        .map(|l| s.apply_literal(l))
                        .collect();
                    let just = Justification::Resolvent { left: given, right: other, unifier: s };
                    if let Added::Empty(id) = self.add(resolvent, just, false) {
                        return Some(id);
                    }
                }
            }
        }
        None
    }

    fn extract(&self, empty: usize) -> RefutationProof {
        let mut needed = BTreeSet::new();
        let mut stack = vec![empty];
        while let Some(id) = stack.pop() {
            if !needed.insert(id) {
                continue;
            }
            match &self.store[id].just {
                Justification::Input => {}
                Justification::Resolvent { left, right, .. } => {
                    stack.push(*left);
                    stack.push(*right);
                }
                Justification::Factor { parent, .. } => stack.push(*parent),
            }
        }
        let number: BTreeMap<usize, usize> =
            needed.iter().enumerate().map(|(k, &id)| (id, k + 1)).collect();
        let steps = needed
            .iter()
            .map(|&id| {
                let s = &self.store[id];
                let justification = match &s.just {
                    Justification::Input => Justification::Input,
                    Justification::Resolvent { left, right, unifier } => Justification::Resolvent {
                        left: number[left],
                        right: number[right],
                        unifier: unifier.clone(),
                    },
                    Justification::Factor { parent, unifier } => {
                        Justification::Factor { parent: number[parent], unifier: unifier.clone() }
                    }
                };
                ProofStep { clause: s.clause.clone(), justification }
            })
            .collect();
        RefutationProof { steps }
    }
}

impl RefutationProof {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn resolution_steps(&self) -> usize {
        self.steps
            .iter()
            .filter(|s| matches!(s.justification, Justification::Resolvent { .. }))
            .count()
    }

    /// Checks every step against its justification and that the proof ends in
    /// the empty clause. Input steps must be variants of clauses of `inputs`.
    pub fn replay(&self, inputs: &ClauseSet) -> Result<(), String> {
        for (k, step) in self.steps.iter().enumerate() {
            let n = k + 1;
            let earlier = |i: usize| -> Result<&Clause, String> {
                if i == 0 || i >= n {
                    return Err(format!("step {n} refers to step {i}, which does not precede it"));
                }
                Ok(&self.steps[i - 1].clause)
            };
            match &step.justification {
                Justification::Input => {
                    if !inputs.iter().any(|c| is_variant(c, &step.clause)) {
                        return Err(format!("step {n} is not an input clause"));
                    }
                }
                Justification::Factor { parent, unifier } => {
                    let p = earlier(*parent)?;
                    let inst = unifier.apply_clause(p);
                    if inst.len() >= p.len() || !is_variant(&inst, &step.clause) {
                        return Err(format!("step {n} is not a factor of step {parent}"));
                    }
                }
                Justification::Resolvent { left, right, unifier } => {
                    let l = earlier(*left)?;
                    let r = if left == right { variant_apart(l) } else { earlier(*right)?.clone() };
                    if !is_resolvent(l, &r, unifier, &step.clause) {
                        return Err(format!("step {n} is not a resolvent of steps {left} and {right}"));
                    }
                }
            }
        }
        match self.steps.last() {
            Some(s) if s.clause.is_empty() => Ok(()),
            _ => Err("proof does not end in the empty clause".into()),
        }
    }
}

fn is_resolvent(l: &Clause, r: &Clause, s: &Substitution, result: &Clause) -> bool {
    l.iter().any(|a| {
        r.iter().any(|b| {
            a.pred == b.pred
                && a.positive != b.positive
                && s.apply_literal(a).args == s.apply_literal(b).args
                && {
                    let c: Clause = l
                        .iter()
                        .filter(|x| *x != a)
                        .chain(r.iter().filter(|x| *x != b))
                        .map(|x| s.apply_literal(x))
                        .collect();
                    is_variant(&c, result)
                }
        })
    })
}

impl fmt::Display for RefutationProof {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, s) in self.steps.iter().enumerate() {
            write!(f, "{}. {} [", k + 1, s.clause)?;
            match &s.justification {
                Justification::Input => write!(f, "input")?,
                Justification::Resolvent { left, right, unifier } => {
                    write!(f, "res {left},{right} {unifier}")?
                }
                Justification::Factor { parent, unifier } => write!(f, "factor {parent} {unifier}")?,
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}
