use std::collections::BTreeMap;

use super::SatError;
use crate::normalform::{Clause, ClauseSet, Literal};
use crate::semantics::Assignment;

/// Answer of a satisfiability check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SatResult {
    /// A total model over the clause-set atoms.
    Sat(Assignment),
    Unsat,
}

impl SatResult {
    pub fn is_sat(&self) -> bool {
        matches!(self, SatResult::Sat(_))
    }

    pub fn model(&self) -> Option<&Assignment> {
        match self {
            SatResult::Sat(m) => Some(m),
            SatResult::Unsat => None,
        }
    }
}

/// Counters collected during one DPLL run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DpllStats {
    pub decisions: usize,
    pub propagations: usize,
    pub pure_assignments: usize,
    pub conflicts: usize,
}

/// Decides a propositional clause set.
///
/// Unit propagation runs to a fixpoint, then pure literals are assigned; the
/// solver branches on the smallest-named unassigned atom that still occurs in
/// an unsatisfied clause, trying `true` first, and backtracks
/// chronologically. Atoms left unassigned in a model are set to `false`.
pub fn dpll(cs: &ClauseSet) -> Result<SatResult, SatError> {
    dpll_with_stats(cs).map(|(r, _)| r)
}

pub fn dpll_with_stats(cs: &ClauseSet) -> Result<(SatResult, DpllStats), SatError> {
    let mut solver = Solver::new(cs)?;
    let sat = solver.solve();
    let result = if sat {
        SatResult::Sat(
            solver
                .names
                .iter()
                .zip(&solver.value)
                .map(|(n, v)| (n.clone(), v.unwrap_or(false)))
                .collect(),
        )
    } else {
        SatResult::Unsat
    };
    Ok((result, solver.stats))
}

/// Up to `limit` distinct total models, each found by re-solving with
/// clauses blocking the models found before.
pub fn enumerate_models(cs: &ClauseSet, limit: usize) -> Result<Vec<Assignment>, SatError> {
    let mut work = cs.clone();
    let mut models = Vec::new();
    while models.len() < limit {
        match dpll(&work)? {
            SatResult::Unsat => break,
            SatResult::Sat(m) => {
                let block: Clause = m
                    .iter()
                    .map(|(a, &v)| Literal::new(!v, a.clone(), Vec::new()))
                    .collect();
                work.push(block);
                models.push(m);
            }
        }
    }
    Ok(models)
}

/// True when `m` makes some literal of every clause true.
pub fn satisfies(m: &Assignment, cs: &ClauseSet) -> bool {
    cs.iter()
        .all(|c| c.iter().any(|l| m.get(&l.pred).copied().unwrap_or(false) == l.positive))
}

// Literals are encoded as 2 * var + sign, sign 1 meaning negated.
type Lit = usize;

fn var(l: Lit) -> usize {
    l >> 1
}

fn is_neg(l: Lit) -> bool {
    l & 1 == 1
}

#[derive(Debug, Clone, Copy)]
enum Reason {
    Decision { flipped: bool },
    Implied,
}

struct Solver {
    names: Vec<String>,
    clauses: Vec<Vec<Lit>>,
    /// Clause indices per literal.
    occurs: Vec<Vec<usize>>,
    value: Vec<Option<bool>>,
    trail: Vec<(usize, Reason)>,
    queue_head: usize,
    has_empty: bool,
    stats: DpllStats,
}

impl Solver {
    fn new(cs: &ClauseSet) -> Result<Self, SatError> {
        if !cs.is_propositional() {
            return Err(SatError::NotPropositional);
        }
        let names: Vec<String> = cs.atoms().into_iter().collect();
        let index: BTreeMap<&str, usize> =
            names.iter().enumerate().map(|(i, n)| (n.as_str(), i)).collect();
        let mut clauses = Vec::with_capacity(cs.len());
        let mut occurs = vec![Vec::new(); names.len() * 2];
        let mut has_empty = false;
        for (ci, c) in cs.iter().enumerate() {
            has_empty |= c.is_empty();
            let lits: Vec<Lit> = c
                .iter()
                .map(|l| index[l.pred.as_str()] * 2 + usize::from(!l.positive))
                .collect();
            for &l in &lits {
                occurs[l].push(ci);
            }
            clauses.push(lits);
        }
        Ok(Solver {
            value: vec![None; names.len()],
            names,
            clauses,
            occurs,
            trail: Vec::new(),
            queue_head: 0,
            has_empty,
            stats: DpllStats::default(),
        })
    }

    fn lit_value(&self, l: Lit) -> Option<bool> {
        self.value[var(l)].map(|v| v != is_neg(l))
    }

    fn assign(&mut self, l: Lit, reason: Reason) {
        self.value[var(l)] = Some(!is_neg(l));
        self.trail.push((var(l), reason));
    }

    fn clause_satisfied(&self, ci: usize) -> bool {
        self.clauses[ci].iter().any(|&l| self.lit_value(l) == Some(true))
    }

    /// Propagates assignments on the trail; returns false on conflict.
    fn propagate(&mut self) -> bool {
        while self.queue_head < self.trail.len() {
            let (v, _) = self.trail[self.queue_head];
            self.queue_head += 1;
            let false_lit = v * 2 + usize::from(self.value[v] == Some(true));
            for k in 0..self.occurs[false_lit].len() {
                let ci = self.occurs[false_lit][k];
                let mut unassigned = None;
                let mut open = 0;
                let mut satisfied = false;
                for &l in &self.clauses[ci] {
                    match self.lit_value(l) {
                        Some(true) => {
                            satisfied = true;
                            break;
                        }
                        None => {
                            open += 1;
                            unassigned = Some(l);
                        }
                        Some(false) => {}
                    }
                }
                if satisfied {
                    continue;
                }
                match (open, unassigned) {
                    (0, _) => return false,
                    (1, Some(l)) => {
                        self.stats.propagations += 1;
                        self.assign(l, Reason::Implied);
                    }
                    _ => {}
                }
            }
        }
        true
    }

    /// Initial units, including duplicates of opposite units.
    fn seed_units(&mut self) -> bool {
        for ci in 0..self.clauses.len() {
            if self.clauses[ci].len() == 1 {
                let l = self.clauses[ci][0];
                match self.lit_value(l) {
                    Some(false) => return false,
                    Some(true) => {}
                    None => {
                        self.stats.propagations += 1;
                        self.assign(l, Reason::Implied);
                    }
                }
            }
        }
        true
    }

    /// Assigns every pure literal of the unsatisfied clauses; returns whether any was found.
    fn assign_pure(&mut self) -> bool {
        let mut seen = vec![0u8; self.names.len()];
        for ci in 0..self.clauses.len() {
            if self.clause_satisfied(ci) {
                continue;
            }
            for &l in &self.clauses[ci] {
                if self.value[var(l)].is_none() {
                    seen[var(l)] |= if is_neg(l) { 2 } else { 1 };
                }
            }
        }
        let mut any = false;
        for (v, &s) in seen.iter().enumerate() {
            if s == 1 || s == 2 {
                self.stats.pure_assignments += 1;
                self.assign(v * 2 + usize::from(s == 2), Reason::Implied);
                any = true;
            }
        }
        any
    }

    fn branch_var(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for ci in 0..self.clauses.len() {
            if self.clause_satisfied(ci) {
                continue;
            }
            for &l in &self.clauses[ci] {
                if self.value[var(l)].is_none() && best.is_none_or(|b| var(l) < b) {
                    best = Some(var(l));
                }
            }
        }
        best
    }

    /// Undoes assignments up to the latest unflipped decision and flips it.
    fn backtrack(&mut self) -> bool {
        while let Some((v, reason)) = self.trail.pop() {
            let was = self.value[v].take();
            if let Reason::Decision { flipped: false } = reason {
                let lit = v * 2 + usize::from(was == Some(true));
                self.assign(lit, Reason::Decision { flipped: true });
                self.queue_head = self.trail.len() - 1;
                return true;
            }
        }
        false
    }

    fn solve(&mut self) -> bool {
        if self.has_empty {
            return false;
        }
        if !self.seed_units() {
            return false;
        }
        loop {
            if !self.propagate() {
                self.stats.conflicts += 1;
                if !self.backtrack() {
                    return false;
                }
                continue;
            }
            if self.assign_pure() {
                continue;
            }
            match self.branch_var() {
                None => return true,
                Some(v) => {
                    self.stats.decisions += 1;
                    self.assign(v * 2, Reason::Decision { flipped: false });
                }
            }
        }
    }
}
