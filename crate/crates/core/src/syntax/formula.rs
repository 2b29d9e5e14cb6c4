use std::collections::BTreeSet;

use super::term::Term;

/// Propositional and first-order formulas share one binary AST.
///
/// A propositional formula is one without quantifiers whose atoms all have
/// arity zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Top,
    Bottom,
    Atom(String, Vec<Term>),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Imp(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
    Forall(String, Box<Formula>),
    Exists(String, Box<Formula>),
}

/// The two quantifier kinds, used when formulas are split into prefix and matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Quantifier {
    Forall,
    Exists,
}

impl Quantifier {
    pub fn bind(self, var: impl Into<String>, body: Formula) -> Formula {
        match self {
            Quantifier::Forall => Formula::Forall(var.into(), Box::new(body)),
            Quantifier::Exists => Formula::Exists(var.into(), Box::new(body)),
        }
    }

    pub fn dual(self) -> Self {
        match self {
            Quantifier::Forall => Quantifier::Exists,
            Quantifier::Exists => Quantifier::Forall,
        }
    }
}

impl Formula {
    /// A zero-arity atom.
    pub fn prop(name: impl Into<String>) -> Self {
        Formula::Atom(name.into(), Vec::new())
    }

    pub fn pred(name: impl Into<String>, args: Vec<Term>) -> Self {
        Formula::Atom(name.into(), args)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Self {
        Formula::Not(Box::new(f))
    }

    pub fn and(a: Formula, b: Formula) -> Self {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Self {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn imp(a: Formula, b: Formula) -> Self {
        Formula::Imp(Box::new(a), Box::new(b))
    }

    pub fn iff(a: Formula, b: Formula) -> Self {
        Formula::Iff(Box::new(a), Box::new(b))
    }

    pub fn forall(var: impl Into<String>, body: Formula) -> Self {
        Formula::Forall(var.into(), Box::new(body))
    }

    pub fn exists(var: impl Into<String>, body: Formula) -> Self {
        Formula::Exists(var.into(), Box::new(body))
    }

    /// Left-nested conjunction of `parts`; `Top` when empty.
    pub fn conjunction(parts: impl IntoIterator<Item = Formula>) -> Self {
        parts
            .into_iter()
            .reduce(Formula::and)
            .unwrap_or(Formula::Top)
    }

    /// Left-nested disjunction of `parts`; `Bottom` when empty.
    pub fn disjunction(parts: impl IntoIterator<Item = Formula>) -> Self {
        parts
            .into_iter()
            .reduce(Formula::or)
            .unwrap_or(Formula::Bottom)
    }

    pub fn is_atom(&self) -> bool {
        matches!(self, Formula::Atom(..))
    }

    /// An atom or a negated atom.
    pub fn is_literal(&self) -> bool {
        match self {
            Formula::Atom(..) => true,
            Formula::Not(inner) => inner.is_atom(),
            _ => false,
        }
    }

    pub fn is_quantifier_free(&self) -> bool {
        match self {
            Formula::Top | Formula::Bottom | Formula::Atom(..) => true,
            Formula::Not(a) => a.is_quantifier_free(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) | Formula::Iff(a, b) => {
                a.is_quantifier_free() && b.is_quantifier_free()
            }
            Formula::Forall(..) | Formula::Exists(..) => false,
        }
    }

    pub fn is_propositional(&self) -> bool {
        match self {
            Formula::Top | Formula::Bottom => true,
            Formula::Atom(_, args) => args.is_empty(),
            Formula::Not(a) => a.is_propositional(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) | Formula::Iff(a, b) => {
                a.is_propositional() && b.is_propositional()
            }
            Formula::Forall(..) | Formula::Exists(..) => false,
        }
    }

    /// Names of the zero-arity atoms, sorted.
    pub fn atoms(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.visit(&mut |f| {
            if let Formula::Atom(p, args) = f {
                if args.is_empty() {
                    out.insert(p.clone());
                }
            }
        });
        out
    }

    /// Predicate symbols of every arity.
    pub fn predicates(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.visit(&mut |f| {
            if let Formula::Atom(p, _) = f {
                out.insert(p.clone());
            }
        });
        out
    }

    /// Pre-order traversal of every subformula.
    pub fn visit<'a>(&'a self, f: &mut impl FnMut(&'a Formula)) {
        f(self);
        match self {
            Formula::Top | Formula::Bottom | Formula::Atom(..) => {}
            Formula::Not(a) | Formula::Forall(_, a) | Formula::Exists(_, a) => a.visit(f),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) | Formula::Iff(a, b) => {
                a.visit(f);
                b.visit(f);
            }
        }
    }

    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        let mut bound = Vec::new();
        self.collect_free(&mut bound, &mut out);
        out
    }

    fn collect_free(&self, bound: &mut Vec<String>, out: &mut BTreeSet<String>) {
        match self {
            Formula::Top | Formula::Bottom => {}
            Formula::Atom(_, args) => {
                for a in args {
                    for v in a.vars() {
                        if !bound.contains(&v) {
                            out.insert(v);
                        }
                    }
                }
            }
            Formula::Not(a) => a.collect_free(bound, out),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) | Formula::Iff(a, b) => {
                a.collect_free(bound, out);
                b.collect_free(bound, out);
            }
            Formula::Forall(v, a) | Formula::Exists(v, a) => {
                bound.push(v.clone());
                a.collect_free(bound, out);
                bound.pop();
            }
        }
    }

    pub fn is_sentence(&self) -> bool {
        self.free_vars().is_empty()
    }

    /// Whether `var` occurs free.
    pub fn has_free(&self, var: &str) -> bool {
        match self {
            Formula::Top | Formula::Bottom => false,
            Formula::Atom(_, args) => args.iter().any(|t| t.occurs(var)),
            Formula::Not(a) => a.has_free(var),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) | Formula::Iff(a, b) => {
                a.has_free(var) || b.has_free(var)
            }
            Formula::Forall(v, a) | Formula::Exists(v, a) => v != var && a.has_free(var),
        }
    }

    /// Every identifier used in a term position or as a bound variable.
    pub fn term_names(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.visit(&mut |f| match f {
            Formula::Atom(_, args) => args.iter().for_each(|a| a.collect_names(&mut out)),
            Formula::Forall(v, _) | Formula::Exists(v, _) => {
                out.insert(v.clone());
            }
            _ => {}
        });
        out
    }

    /// Constants occurring anywhere in the formula.
    pub fn constants(&self) -> BTreeSet<String> {
        fn walk(t: &Term, out: &mut BTreeSet<String>) {
            match t {
                Term::Var(_) => {}
                Term::Const(c) => {
                    out.insert(c.clone());
                }
                Term::Func(_, args) => args.iter().for_each(|a| walk(a, out)),
            }
        }
        let mut out = BTreeSet::new();
        self.visit(&mut |f| {
            if let Formula::Atom(_, args) = f {
                args.iter().for_each(|a| walk(a, &mut out));
            }
        });
        out
    }

    /// Height of the syntax tree; atoms, `Top` and `Bottom` have depth 0.
    pub fn depth(&self) -> usize {
        match self {
            Formula::Top | Formula::Bottom | Formula::Atom(..) => 0,
            Formula::Not(a) | Formula::Forall(_, a) | Formula::Exists(_, a) => 1 + a.depth(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) | Formula::Iff(a, b) => {
                1 + a.depth().max(b.depth())
            }
        }
    }

    /// Number of nodes in the syntax tree.
    pub fn size(&self) -> usize {
        let mut n = 0;
        self.visit(&mut |_| n += 1);
        n
    }

    /// Applies `f` to every term argument of every atom; quantifier binders are untouched.
    pub fn map_terms(&self, f: &mut impl FnMut(&Term) -> Term) -> Formula {
        match self {
            Formula::Top | Formula::Bottom => self.clone(),
            Formula::Atom(p, args) => Formula::Atom(p.clone(), args.iter().map(&mut *f).collect()),
            Formula::Not(a) => Formula::not(a.map_terms(f)),
            Formula::And(a, b) => Formula::and(a.map_terms(f), b.map_terms(f)),
            Formula::Or(a, b) => Formula::or(a.map_terms(f), b.map_terms(f)),
            Formula::Imp(a, b) => Formula::imp(a.map_terms(f), b.map_terms(f)),
            Formula::Iff(a, b) => Formula::iff(a.map_terms(f), b.map_terms(f)),
            Formula::Forall(v, a) => Formula::forall(v.clone(), a.map_terms(f)),
            Formula::Exists(v, a) => Formula::exists(v.clone(), a.map_terms(f)),
        }
    }

    /// Constructor-style rendering of the tree, e.g. `Not(Forall(t, Atom(P, [t])))`.
    pub fn to_ast_string(&self) -> String {
        match self {
            Formula::Top => "Top".into(),
            Formula::Bottom => "Bottom".into(),
            Formula::Atom(p, args) if args.is_empty() => format!("Atom({p})"),
            Formula::Atom(p, args) => {
                let args: Vec<String> = args.iter().map(term_ast).collect();
                format!("Atom({p}, [{}])", args.join(", "))
            }
            Formula::Not(a) => format!("Not({})", a.to_ast_string()),
            Formula::And(a, b) => format!("And({}, {})", a.to_ast_string(), b.to_ast_string()),
            Formula::Or(a, b) => format!("Or({}, {})", a.to_ast_string(), b.to_ast_string()),
            Formula::Imp(a, b) => format!("Imp({}, {})", a.to_ast_string(), b.to_ast_string()),
            Formula::Iff(a, b) => format!("Iff({}, {})", a.to_ast_string(), b.to_ast_string()),
            Formula::Forall(v, a) => format!("Forall({v}, {})", a.to_ast_string()),
            Formula::Exists(v, a) => format!("Exists({v}, {})", a.to_ast_string()),
        }
    }
}

fn term_ast(t: &Term) -> String {
    match t {
        Term::Var(v) => format!("Var({v})"),
        Term::Const(c) => format!("Const({c})"),
        Term::Func(f, args) => {
            let args: Vec<String> = args.iter().map(term_ast).collect();
            format!("Func({f}, [{}])", args.join(", "))
        }
    }
}
