use std::collections::BTreeSet;
use std::fmt;

use crate::syntax::{Formula, Signature, SignatureError, Term};

/// A possibly negated atom.
///
/// Field order makes literals sort by predicate, then arguments, with the
/// negative literal before the positive one.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Literal {
    pub pred: String,
    pub args: Vec<Term>,
    pub positive: bool,
}

impl Literal {
    pub fn new(positive: bool, pred: impl Into<String>, args: Vec<Term>) -> Self {
        Literal { pred: pred.into(), args, positive }
    }

    pub fn pos(pred: impl Into<String>) -> Self {
        Literal::new(true, pred, Vec::new())
    }

    pub fn neg(pred: impl Into<String>) -> Self {
        Literal::new(false, pred, Vec::new())
    }

    pub fn negated(&self) -> Literal {
        Literal { positive: !self.positive, ..self.clone() }
    }

    /// Reads an atom or negated atom; anything else yields `None`.
    pub fn from_formula(f: &Formula) -> Option<Literal> {
        match f {
            Formula::Atom(p, args) => Some(Literal::new(true, p.clone(), args.clone())),
            Formula::Not(inner) => match &**inner {
                Formula::Atom(p, args) => Some(Literal::new(false, p.clone(), args.clone())),
                _ => None,
            },
            _ => None,
        }
    }

    pub fn atom(&self) -> Formula {
        Formula::Atom(self.pred.clone(), self.args.clone())
    }

    pub fn to_formula(&self) -> Formula {
        if self.positive {
            self.atom()
        } else {
            Formula::not(self.atom())
        }
    }

    pub fn is_propositional(&self) -> bool {
        self.args.is_empty()
    }

    pub fn map_terms(&self, f: &mut impl FnMut(&Term) -> Term) -> Literal {
        Literal { pred: self.pred.clone(), args: self.args.iter().map(f).collect(), positive: self.positive }
    }

    pub fn collect_vars(&self, out: &mut BTreeSet<String>) {
        for a in &self.args {
            a.collect_vars(out);
        }
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.positive {
            f.write_str("~")?;
        }
        write!(f, "{}", self.atom())
    }
}

/// A disjunction of literals with set semantics.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Clause(BTreeSet<Literal>);

impl Clause {
    pub fn new() -> Self {
        Clause::default()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn insert(&mut self, lit: Literal) -> bool {
        self.0.insert(lit)
    }

    pub fn contains(&self, lit: &Literal) -> bool {
        self.0.contains(lit)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Literal> {
        self.0.iter()
    }

    pub fn literals(&self) -> &BTreeSet<Literal> {
        &self.0
    }

    /// True when some literal occurs with both signs.
    pub fn is_tautology(&self) -> bool {
        self.0.iter().any(|l| l.positive && self.0.contains(&l.negated()))
    }

    pub fn positive_count(&self) -> usize {
        self.0.iter().filter(|l| l.positive).count()
    }

    pub fn is_horn(&self) -> bool {
        self.positive_count() <= 1
    }

    pub fn is_propositional(&self) -> bool {
        self.0.iter().all(Literal::is_propositional)
    }

    pub fn vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        for l in &self.0 {
            l.collect_vars(&mut out);
        }
        out
    }

    pub fn map_terms(&self, f: &mut impl FnMut(&Term) -> Term) -> Clause {
        self.0.iter().map(|l| l.map_terms(f)).collect()
    }

    /// Left-nested disjunction; the empty clause is `false`.
    pub fn to_formula(&self) -> Formula {
        Formula::disjunction(self.0.iter().map(Literal::to_formula))
    }
}

impl FromIterator<Literal> for Clause {
    fn from_iter<I: IntoIterator<Item = Literal>>(iter: I) -> Self {
        Clause(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a Clause {
    type Item = &'a Literal;
    type IntoIter = std::collections::btree_set::Iter<'a, Literal>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(Literal::to_string).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Symbols invented while building a clause set.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FreshSymbols {
    pub tseitin_atoms: Vec<String>,
    pub skolem_constants: Vec<String>,
    /// Skolem functions with their arities.
    pub skolem_functions: Vec<(String, usize)>,
}

impl FreshSymbols {
    pub fn is_empty(&self) -> bool {
        self.tseitin_atoms.is_empty()
            && self.skolem_constants.is_empty()
            && self.skolem_functions.is_empty()
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.tseitin_atoms
            .iter()
            .chain(&self.skolem_constants)
            .map(String::as_str)
            .chain(self.skolem_functions.iter().map(|(n, _)| n.as_str()))
    }
}

/// Clauses in first-insertion order without duplicates.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ClauseSet {
    clauses: Vec<Clause>,
    pub fresh: FreshSymbols,
}

impl ClauseSet {
    pub fn new() -> Self {
        ClauseSet::default()
    }

    /// Adds `c` unless an equal clause is already present.
    pub fn push(&mut self, c: Clause) -> bool {
        if self.clauses.contains(&c) {
            return false;
        }
        self.clauses.push(c);
        true
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    pub fn len(&self) -> usize {
        self.clauses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.clauses.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Clause> {
        self.clauses.iter()
    }

    pub fn is_propositional(&self) -> bool {
        self.clauses.iter().all(Clause::is_propositional)
    }

    /// Predicate names of all literals, sorted.
    pub fn atoms(&self) -> BTreeSet<String> {
        self.clauses.iter().flatten().map(|l| l.pred.clone()).collect()
    }

    pub fn signature(&self) -> Result<Signature, SignatureError> {
        let mut sig = Signature::default();
        sig.add_formula(&self.to_formula())?;
        Ok(sig)
    }

    /// Conjunction of the clause disjunctions; `true` when empty.
    pub fn to_formula(&self) -> Formula {
        Formula::conjunction(self.clauses.iter().map(Clause::to_formula))
    }
}

impl FromIterator<Clause> for ClauseSet {
    fn from_iter<I: IntoIterator<Item = Clause>>(iter: I) -> Self {
        let mut cs = ClauseSet::new();
        for c in iter {
            cs.push(c);
        }
        cs
    }
}

impl<'a> IntoIterator for &'a ClauseSet {
    type Item = &'a Clause;
    type IntoIter = std::slice::Iter<'a, Clause>;

    fn into_iter(self) -> Self::IntoIter {
        self.clauses.iter()
    }
}

impl fmt::Display for ClauseSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.clauses {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Builds a clause set from string literals such as `["p", "~q"]`, for tests and examples.
pub fn prop_clauses(clauses: &[&[&str]]) -> ClauseSet {
    clauses
        .iter()
        .map(|c| {
            c.iter()
                .map(|l| match l.strip_prefix('~') {
                    Some(name) => Literal::neg(name),
                    None => Literal::pos(*l),
                })
                .collect()
        })
        .collect()
}
