//! Strategies and independent oracles shared by the integration tests.
//!
//! Nothing here calls the library's evaluators: truth tables, clause
//! satisfaction and monadic model search are reimplemented directly so the
//! tests compare two separate implementations.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use logicbench::natded::Ref;
use logicbench::normalform::{ClauseSet, Literal};
use logicbench::resolution::Substitution;
use logicbench::syntax::{Formula, Term};
use proptest::prelude::*;

pub fn combine(op: u8, a: Formula, b: Formula) -> Formula {
    match op % 4 {
        0 => Formula::and(a, b),
        1 => Formula::or(a, b),
        2 => Formula::imp(a, b),
        _ => Formula::iff(a, b),
    }
}

/// Propositional formulas over the first `atoms` of `p, q, r, ..`.
pub fn arb_prop(atoms: usize, depth: u32) -> BoxedStrategy<Formula> {
    let names: Vec<String> = logicbench::generate::atom_names(atoms);
    let leaf = prop_oneof![
        1 => Just(Formula::Top),
        1 => Just(Formula::Bottom),
        8 => proptest::sample::select(names).prop_map(Formula::prop),
    ];
    leaf.prop_recursive(depth, 96, 2, |inner| {
        prop_oneof![
            1 => inner.clone().prop_map(Formula::not),
            4 => (any::<u8>(), inner.clone(), inner).prop_map(|(op, a, b)| combine(op, a, b)),
        ]
    })
    .boxed()
}

pub fn arb_term() -> BoxedStrategy<Term> {
    let leaf = prop_oneof![
        3 => proptest::sample::select(vec!["x", "y", "z"]).prop_map(Term::var),
        1 => proptest::sample::select(vec!["a", "b"]).prop_map(Term::constant),
    ];
    leaf.prop_recursive(2, 8, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(|t| Term::func("f", vec![t])),
            (inner.clone(), inner).prop_map(|(s, t)| Term::func("g", vec![s, t])),
        ]
    })
    .boxed()
}

/// First-order formulas over `p/0`, `P/1`, `R/2`, `f/1`, `g/2`, constants
/// `a, b` and variables `x, y, z`. Free variables may remain.
pub fn arb_fol(depth: u32) -> BoxedStrategy<Formula> {
    let leaf = prop_oneof![
        1 => Just(Formula::prop("p")),
        3 => arb_term().prop_map(|t| Formula::pred("P", vec![t])),
        3 => (arb_term(), arb_term()).prop_map(|(s, t)| Formula::pred("R", vec![s, t])),
    ];
    leaf.prop_recursive(depth, 64, 2, |inner| {
        let var = proptest::sample::select(vec!["x", "y", "z"]);
        prop_oneof![
            1 => inner.clone().prop_map(Formula::not),
            3 => (any::<u8>(), inner.clone(), inner.clone()).prop_map(|(op, a, b)| combine(op, a, b)),
            2 => (any::<bool>(), var, inner).prop_map(|(all, v, body)| {
                if all { Formula::forall(v, body) } else { Formula::exists(v, body) }
            }),
        ]
    })
    .boxed()
}

/// Universal closure over the free variables.
pub fn close(f: Formula) -> Formula {
    f.free_vars().into_iter().rev().fold(f, |body, v| Formula::forall(v, body))
}

pub fn arb_sentence(depth: u32) -> BoxedStrategy<Formula> {
    arb_fol(depth).prop_map(close).boxed()
}

/// A random rewrite of `f` by commutation, De Morgan, contraposition,
/// implication and biconditional expansion and double negation. The result
/// is equivalent to `f` by construction.
pub fn rewrite<R: rand::Rng>(f: &Formula, rng: &mut R) -> Formula {
    use Formula as F;
    let n = |x: Formula| F::not(x);
    let out = match f {
        F::Top if rng.gen_bool(0.5) => n(F::Bottom),
        F::Bottom if rng.gen_bool(0.5) => n(F::Top),
        F::Top | F::Bottom | F::Atom(..) => f.clone(),
        F::Not(a) => match &**a {
            F::Not(inner) if rng.gen_bool(0.5) => rewrite(inner, rng),
            _ => n(rewrite(a, rng)),
        },
        F::And(a, b) | F::Or(a, b) | F::Imp(a, b) | F::Iff(a, b) => {
            let (a, b) = (rewrite(a, rng), rewrite(b, rng));
            match (f, rng.gen_range(0..3)) {
                (F::And(..), 0) => F::and(b, a),
                (F::And(..), 1) => n(F::or(n(a), n(b))),
                (F::And(..), _) => F::and(a, b),
                (F::Or(..), 0) => F::or(b, a),
                (F::Or(..), 1) => n(F::and(n(a), n(b))),
                (F::Or(..), _) => F::imp(n(a), b),
                (F::Imp(..), 0) => F::or(n(a), b),
                (F::Imp(..), 1) => F::imp(n(b), n(a)),
                (F::Imp(..), _) => F::imp(a, b),
                (_, 0) => F::iff(b, a),
                (_, 1) => F::and(F::imp(a.clone(), b.clone()), F::imp(b, a)),
                (_, _) => F::iff(n(a), n(b)),
            }
        }
        F::Forall(..) | F::Exists(..) => panic!("rewrite expects propositional input"),
    };
    if rng.gen_bool(0.05) {
        n(n(out))
    } else {
        out
    }
}

// ---------------------------------------------------------------- truth tables

/// Zero-arity atoms of a propositional formula, sorted.
pub fn prop_atoms(f: &Formula) -> Vec<String> {
    fn walk(f: &Formula, out: &mut BTreeSet<String>) {
        match f {
            Formula::Atom(p, args) => {
                assert!(args.is_empty(), "oracle expects propositional input");
                out.insert(p.clone());
            }
            Formula::Not(a) => walk(a, out),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) | Formula::Iff(a, b) => {
                walk(a, out);
                walk(b, out);
            }
            Formula::Forall(..) | Formula::Exists(..) => panic!("oracle expects propositional input"),
            Formula::Top | Formula::Bottom => {}
        }
    }
    let mut out = BTreeSet::new();
    walk(f, &mut out);
    out.into_iter().collect()
}

/// Evaluates a propositional formula; `val` must cover every atom.
pub fn oracle_eval(f: &Formula, val: &dyn Fn(&str) -> bool) -> bool {
    match f {
        Formula::Top => true,
        Formula::Bottom => false,
        Formula::Atom(p, _) => val(p),
        Formula::Not(a) => !oracle_eval(a, val),
        Formula::And(a, b) => oracle_eval(a, val) && oracle_eval(b, val),
        Formula::Or(a, b) => oracle_eval(a, val) || oracle_eval(b, val),
        Formula::Imp(a, b) => !oracle_eval(a, val) || oracle_eval(b, val),
        Formula::Iff(a, b) => oracle_eval(a, val) == oracle_eval(b, val),
        Formula::Forall(..) | Formula::Exists(..) => panic!("oracle expects propositional input"),
    }
}

/// Bit `i` of row `r` gives the value of `atoms[i]`.
pub fn row_value(atoms: &[String], row: usize) -> impl Fn(&str) -> bool + '_ {
    move |name: &str| {
        let i = atoms.iter().position(|a| a == name).unwrap_or_else(|| panic!("no value for {name}"));
        row >> i & 1 == 1
    }
}

/// The column of `f` over all rows of `atoms`.
pub fn column(f: &Formula, atoms: &[String]) -> Vec<bool> {
    (0..1usize << atoms.len()).map(|r| oracle_eval(f, &row_value(atoms, r))).collect()
}

pub fn union_atoms(fs: &[&Formula]) -> Vec<String> {
    let set: BTreeSet<String> = fs.iter().flat_map(|f| prop_atoms(f)).collect();
    set.into_iter().collect()
}

pub fn oracle_equivalent(f: &Formula, g: &Formula) -> bool {
    let atoms = union_atoms(&[f, g]);
    column(f, &atoms) == column(g, &atoms)
}

pub fn oracle_model_count(f: &Formula) -> usize {
    column(f, &prop_atoms(f)).into_iter().filter(|&v| v).count()
}

pub fn oracle_satisfiable(f: &Formula) -> bool {
    column(f, &prop_atoms(f)).into_iter().any(|v| v)
}

pub fn literal_holds(l: &Literal, val: &dyn Fn(&str) -> bool) -> bool {
    assert!(l.args.is_empty(), "oracle expects ground propositional literals");
    val(&l.pred) == l.positive
}

pub fn clauses_hold(cs: &ClauseSet, val: &dyn Fn(&str) -> bool) -> bool {
    cs.iter().all(|c| c.iter().any(|l| literal_holds(l, val)))
}

/// Brute force over every assignment to the clause-set atoms.
pub fn oracle_clauses_satisfiable(cs: &ClauseSet) -> bool {
    let atoms: Vec<String> = cs.atoms().into_iter().collect();
    (0..1usize << atoms.len()).any(|r| clauses_hold(cs, &row_value(&atoms, r)))
}

// ---------------------------------------------------------------- first-order

/// A finite structure for the oracle's own evaluator.
#[derive(Debug, Clone, Default)]
pub struct Structure {
    pub size: usize,
    pub preds: BTreeMap<String, BTreeSet<Vec<usize>>>,
    pub funcs: BTreeMap<String, BTreeMap<Vec<usize>, usize>>,
    pub consts: BTreeMap<String, usize>,
}

fn term_value(t: &Term, m: &Structure, env: &BTreeMap<String, usize>) -> usize {
    match t {
        Term::Var(v) => env[v],
        Term::Const(c) => m.consts[c],
        Term::Func(f, args) => {
            let vals: Vec<usize> = args.iter().map(|a| term_value(a, m, env)).collect();
            m.funcs[f][&vals]
        }
    }
}

pub fn fol_holds(f: &Formula, m: &Structure, env: &mut BTreeMap<String, usize>) -> bool {
    match f {
        Formula::Top => true,
        Formula::Bottom => false,
        Formula::Atom(p, args) => {
            let vals: Vec<usize> = args.iter().map(|a| term_value(a, m, env)).collect();
            m.preds.get(p).is_some_and(|ext| ext.contains(&vals))
        }
        Formula::Not(a) => !fol_holds(a, m, env),
        Formula::And(a, b) => fol_holds(a, m, env) && fol_holds(b, m, env),
        Formula::Or(a, b) => fol_holds(a, m, env) || fol_holds(b, m, env),
        Formula::Imp(a, b) => !fol_holds(a, m, env) || fol_holds(b, m, env),
        Formula::Iff(a, b) => fol_holds(a, m, env) == fol_holds(b, m, env),
        Formula::Forall(v, body) | Formula::Exists(v, body) => {
            let universal = matches!(f, Formula::Forall(..));
            let saved = env.get(v).copied();
            let mut result = universal;
            for d in 0..m.size {
                env.insert(v.clone(), d);
                if fol_holds(body, m, env) != universal {
                    result = !universal;
                    break;
                }
            }
            match saved {
                Some(x) => env.insert(v.clone(), x),
                None => env.remove(v),
            };
            result
        }
    }
}

/// Whether an equality-free sentence over unary predicates has a model of
/// size at most `n`.
///
/// Without equality two elements of the same predicate type satisfy the same
/// formulas, so every structure agrees with the one keeping a single element
/// per occupied type. The search runs over those: one structure per non-empty
/// set of at most `n` types.
pub fn oracle_monadic_sat(f: &Formula, preds: &[String], n: usize) -> bool {
    let types = 1usize << preds.len();
    assert!(types <= 16, "too many predicates for the type search");
    (1u32..1 << types).filter(|set| set.count_ones() as usize <= n).any(|set| {
        let mut m = Structure::default();
        for p in preds {
            m.preds.insert(p.clone(), BTreeSet::new());
        }
        for ty in (0..types).filter(|t| set >> t & 1 == 1) {
            for (j, p) in preds.iter().enumerate() {
                if ty >> j & 1 == 1 {
                    m.preds.get_mut(p).unwrap().insert(vec![m.size]);
                }
            }
            m.size += 1;
        }
        fol_holds(f, &m, &mut BTreeMap::new())
    })
}

/// Whether a universal sentence whose matrix mentions unary predicates,
/// Skolem constants and Skolem functions applied to variables has a model
/// of size `n`.
///
/// The question is ground into propositional logic: atom `P#d` says element
/// `d` is in `P`, atom `f#args#d` says `f(args) = d`. Satisfiability of the
/// grounding is decided by the oracle's own DPLL on its own clause form.
pub fn oracle_skolem_sat(f: &Formula, n: usize) -> bool {
    let mut universals = Vec::new();
    let mut matrix = f;
    while let Formula::Forall(v, body) = matrix {
        universals.push(v.clone());
        matrix = body;
    }
    assert!(matrix.is_quantifier_free(), "expected a universal prenex sentence");
    // vacuous binders only repeat identical instances
    let occurring = matrix.free_vars();
    universals.retain(|v| occurring.contains(v));
    universals.dedup();
    let mut g = Grounder { n, clauses: Vec::new(), ids: BTreeMap::new(), used_terms: BTreeSet::new() };
    let k = universals.len();
    for code in 0..n.pow(k as u32) {
        let mut env = BTreeMap::new();
        let mut c = code;
        for v in &universals {
            env.insert(v.clone(), c % n);
            c /= n;
        }
        let root = g.encode(matrix, &env);
        g.clauses.push(vec![root]);
    }
    for key in g.used_terms.clone() {
        let vals: Vec<i64> = (0..n).map(|d| g.id(&format!("{key}#{d}"))).collect();
        g.clauses.push(vals.clone());
        for i in 0..n {
            for j in i + 1..n {
                g.clauses.push(vec![-vals[i], -vals[j]]);
            }
        }
    }
    oracle_dpll(g.clauses, g.ids.len())
}

struct Grounder {
    n: usize,
    clauses: Vec<Vec<i64>>,
    ids: BTreeMap<String, i64>,
    used_terms: BTreeSet<String>,
}

impl Grounder {
    fn id(&mut self, name: &str) -> i64 {
        let next = self.ids.len() as i64 + 1;
        *self.ids.entry(name.to_string()).or_insert(next)
    }

    fn fresh(&mut self) -> i64 {
        let name = format!("#aux{}", self.ids.len());
        self.id(&name)
    }

    /// Tseitin-style definition of `f`, returning its literal.
    fn encode(&mut self, f: &Formula, env: &BTreeMap<String, usize>) -> i64 {
        match f {
            Formula::Top | Formula::Bottom => {
                let x = self.fresh();
                self.clauses.push(vec![if matches!(f, Formula::Top) { x } else { -x }]);
                x
            }
            Formula::Atom(p, args) => {
                assert!(args.len() <= 1, "expected a monadic matrix");
                let Some(t) = args.first() else { return self.id(p) };
                match t {
                    Term::Var(v) => self.id(&format!("{p}#{}", env[v])),
                    Term::Const(c) => self.term_atom(p, c.clone()),
                    Term::Func(fname, fargs) => {
                        let vals: Vec<String> = fargs
                            .iter()
                            .map(|a| match a {
                                Term::Var(v) => env[v].to_string(),
                                _ => panic!("expected Skolem terms over variables"),
                            })
                            .collect();
                        self.term_atom(p, format!("{fname}({})", vals.join(",")))
                    }
                }
            }
            Formula::Not(a) => -self.encode(a, env),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) | Formula::Iff(a, b) => {
                let (x, y) = (self.encode(a, env), self.encode(b, env));
                let z = self.fresh();
                match f {
                    Formula::And(..) => self.define_and(z, x, y),
                    Formula::Or(..) => self.define_and(-z, -x, -y),
                    Formula::Imp(..) => self.define_and(-z, x, -y),
                    _ => {
                        self.clauses.push(vec![-z, -x, y]);
                        self.clauses.push(vec![-z, x, -y]);
                        self.clauses.push(vec![z, x, y]);
                        self.clauses.push(vec![z, -x, -y]);
                    }
                }
                z
            }
            Formula::Forall(..) | Formula::Exists(..) => unreachable!("matrix is quantifier-free"),
        }
    }

    fn define_and(&mut self, z: i64, x: i64, y: i64) {
        self.clauses.push(vec![-z, x]);
        self.clauses.push(vec![-z, y]);
        self.clauses.push(vec![z, -x, -y]);
    }

    /// `P(t)` where `t` denotes one of `n` elements: `OR_d (t = d & P#d)`.
    fn term_atom(&mut self, p: &str, key: String) -> i64 {
        self.used_terms.insert(key.clone());
        let z = self.fresh();
        let mut any = vec![-z];
        for d in 0..self.n {
            let eq = self.id(&format!("{key}#{d}"));
            let pd = self.id(&format!("{p}#{d}"));
            let both = self.fresh();
            self.define_and(both, eq, pd);
            any.push(both);
            self.clauses.push(vec![z, -both]);
        }
        self.clauses.push(any);
        z
    }
}

/// Conflict-driven clause learning over integer clauses: occurrence-list
/// propagation, first-UIP learning, backjumping and activity-based branching.
pub fn oracle_dpll(clauses: Vec<Vec<i64>>, vars: usize) -> bool {
    let mut s = Cdcl {
        occ: vec![Vec::new(); 2 * vars + 2],
        clauses: Vec::new(),
        val: vec![0; vars + 1],
        level: vec![0; vars + 1],
        reason: vec![None; vars + 1],
        activity: vec![0.0; vars + 1],
        bump: 1.0,
        trail: Vec::new(),
        limits: Vec::new(),
        head: 0,
    };
    for c in clauses {
        let mut c = c;
        c.sort_unstable();
        c.dedup();
        if c.iter().any(|&l| c.contains(&-l)) {
            continue;
        }
        match c.len() {
            0 => return false,
            1 => match s.value(c[0]) {
                -1 => return false,
                0 => {
                    let ci = s.add(c.clone());
                    s.set(c[0], Some(ci));
                }
                _ => {}
            },
            _ => {
                s.add(c);
            }
        }
    }
    s.solve()
}

fn lit_code(l: i64) -> usize {
    2 * l.unsigned_abs() as usize + usize::from(l < 0)
}

struct Cdcl {
    clauses: Vec<Vec<i64>>,
    occ: Vec<Vec<usize>>,
    val: Vec<i8>,
    level: Vec<usize>,
    reason: Vec<Option<usize>>,
    activity: Vec<f64>,
    bump: f64,
    trail: Vec<i64>,
    limits: Vec<usize>,
    head: usize,
}

impl Cdcl {
    fn add(&mut self, c: Vec<i64>) -> usize {
        let ci = self.clauses.len();
        for &l in &c {
            self.occ[lit_code(l)].push(ci);
        }
        self.clauses.push(c);
        ci
    }

    fn value(&self, l: i64) -> i8 {
        self.val[l.unsigned_abs() as usize] * if l < 0 { -1 } else { 1 }
    }

    fn set(&mut self, l: i64, reason: Option<usize>) {
        let v = l.unsigned_abs() as usize;
        self.val[v] = if l < 0 { -1 } else { 1 };
        self.level[v] = self.limits.len();
        self.reason[v] = reason;
        self.trail.push(l);
    }

    /// Returns a falsified clause on conflict.
    fn propagate(&mut self) -> Option<usize> {
        while self.head < self.trail.len() {
            let falsified = -self.trail[self.head];
            self.head += 1;
            let code = lit_code(falsified);
            for k in 0..self.occ[code].len() {
                let ci = self.occ[code][k];
                let mut open = None;
                let mut n_open = 0;
                let mut sat = false;
                for &l in &self.clauses[ci] {
                    match self.value(l) {
                        1 => {
                            sat = true;
                            break;
                        }
                        0 => {
                            n_open += 1;
                            open = Some(l);
                        }
                        _ => {}
                    }
                }
                if sat {
                    continue;
                }
                match (n_open, open) {
                    (0, _) => return Some(ci),
                    (1, Some(l)) => self.set(l, Some(ci)),
                    _ => {}
                }
            }
        }
        None
    }

    fn analyze(&mut self, conflict: usize) -> (Vec<i64>, usize) {
        let current = self.limits.len();
        let mut seen = vec![false; self.val.len()];
        let mut learnt = vec![0];
        let mut pending = 0;
        let mut idx = self.trail.len();
        let mut clause = conflict;
        let mut pivot: Option<i64> = None;
        loop {
            for k in 0..self.clauses[clause].len() {
                let q = self.clauses[clause][k];
                if Some(q) == pivot {
                    continue;
                }
                let v = q.unsigned_abs() as usize;
                if seen[v] || self.level[v] == 0 {
                    continue;
                }
                seen[v] = true;
                self.activity[v] += self.bump;
                if self.level[v] == current {
                    pending += 1;
                } else {
                    learnt.push(q);
                }
            }
            loop {
                idx -= 1;
                if seen[self.trail[idx].unsigned_abs() as usize] {
                    break;
                }
            }
            let p = self.trail[idx];
            seen[p.unsigned_abs() as usize] = false;
            pending -= 1;
            if pending == 0 {
                learnt[0] = -p;
                break;
            }
            pivot = Some(p);
            clause = self.reason[p.unsigned_abs() as usize].expect("implied literal has a reason");
        }
        self.bump /= 0.95;
        if self.bump > 1e100 {
            self.activity.iter_mut().for_each(|a| *a *= 1e-100);
            self.bump *= 1e-100;
        }
        let back = learnt[1..].iter().map(|l| self.level[l.unsigned_abs() as usize]).max().unwrap_or(0);
        (learnt, back)
    }

    fn backjump(&mut self, level: usize) {
        let mark = self.limits[level];
        for l in self.trail.drain(mark..) {
            let v = l.unsigned_abs() as usize;
            self.val[v] = 0;
            self.reason[v] = None;
        }
        self.limits.truncate(level);
        self.head = self.trail.len();
    }

    fn solve(&mut self) -> bool {
        loop {
            if let Some(conflict) = self.propagate() {
                if self.limits.is_empty() {
                    return false;
                }
                let (learnt, back) = self.analyze(conflict);
                self.backjump(back);
                let asserting = learnt[0];
                let ci = self.add(learnt);
                self.set(asserting, Some(ci));
                continue;
            }
            let mut best: Option<usize> = None;
            for v in 1..self.val.len() {
                if self.val[v] == 0 && best.is_none_or(|b| self.activity[v] > self.activity[b]) {
                    best = Some(v);
                }
            }
            let Some(v) = best else { return true };
            self.limits.push(self.trail.len());
            self.set(-(v as i64), None);
        }
    }
}

// ---------------------------------------------------------------- small structures

fn collect_predicates(f: &Formula, out: &mut BTreeMap<String, usize>) {
    match f {
        Formula::Atom(p, args) => {
            out.insert(p.clone(), args.len());
        }
        Formula::Not(a) | Formula::Forall(_, a) | Formula::Exists(_, a) => collect_predicates(a, out),
        Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) | Formula::Iff(a, b) => {
            collect_predicates(a, out);
            collect_predicates(b, out);
        }
        Formula::Top | Formula::Bottom => {}
    }
}

/// Whether two relational sentences (no constants or functions) agree on
/// every structure with at most `max_n` elements.
pub fn oracle_small_equiv(f: &Formula, g: &Formula, max_n: usize) -> bool {
    let mut preds = BTreeMap::new();
    collect_predicates(f, &mut preds);
    collect_predicates(g, &mut preds);
    for n in 1..=max_n {
        // one bit per (predicate, tuple)
        let mut cells: Vec<(String, Vec<usize>)> = Vec::new();
        for (p, &arity) in &preds {
            for code in 0..n.pow(arity as u32) {
                let mut c = code;
                let t: Vec<usize> = (0..arity)
                    .map(|_| {
                        let d = c % n;
                        c /= n;
                        d
                    })
                    .collect();
                cells.push((p.clone(), t));
            }
        }
        assert!(cells.len() < 24, "too many structures to enumerate");
        for bits in 0u32..1 << cells.len() {
            let mut m = Structure { size: n, ..Default::default() };
            for p in preds.keys() {
                m.preds.insert(p.clone(), BTreeSet::new());
            }
            for (i, (p, t)) in cells.iter().enumerate() {
                if bits >> i & 1 == 1 {
                    m.preds.get_mut(p).unwrap().insert(t.clone());
                }
            }
            let mut env = BTreeMap::new();
            if fol_holds(f, &m, &mut env) != fol_holds(g, &m, &mut env) {
                return false;
            }
        }
    }
    true
}

/// Validity of a categorical syllogism by Venn regions.
///
/// Terms are S, M, P (bits 0, 1, 2 of a region). A model is, up to
/// elementary equivalence, the set of occupied regions, so the 255
/// non-empty region sets cover every case. `import` is 0 for none, 1 for
/// the subjects of universal premises, 2 for all three terms.
pub fn oracle_syllogism_valid(figure: u8, moods: [char; 3], import: u8) -> bool {
    const S: usize = 0;
    const M: usize = 1;
    const P: usize = 2;
    let premises = match figure {
        1 => [(M, P), (S, M)],
        2 => [(P, M), (S, M)],
        3 => [(M, P), (M, S)],
        _ => [(P, M), (M, S)],
    };
    let holds = |occupied: u32, mood: char, x: usize, y: usize| {
        let regions = (0..8usize).filter(|r| occupied >> r & 1 == 1);
        let mut regions_x = regions.filter(|r| r >> x & 1 == 1);
        match mood {
            'A' => regions_x.all(|r| r >> y & 1 == 1),
            'E' => regions_x.all(|r| r >> y & 1 == 0),
            'I' => regions_x.any(|r| r >> y & 1 == 1),
            _ => regions_x.any(|r| r >> y & 1 == 0),
        }
    };
    let nonempty = |occupied: u32, x: usize| (0..8usize).any(|r| occupied >> r & 1 == 1 && r >> x & 1 == 1);
    (1u32..256).all(|occ| {
        let mut ok = premises.iter().zip(&moods).all(|(&(x, y), &m)| holds(occ, m, x, y));
        match import {
            1 => {
                for (&(x, _), &m) in premises.iter().zip(&moods) {
                    if m == 'A' || m == 'E' {
                        ok &= nonempty(occ, x);
                    }
                }
            }
            2 => ok &= [S, M, P].iter().all(|&x| nonempty(occ, x)),
            _ => {}
        }
        !ok || holds(occ, moods[2], S, P)
    })
}

/// Checks a grid (`houses[h]` lists the values of house `h + 1`) against a
/// zebra spec read line by line: every category is a permutation and every
/// clue holds. Returns the broken lines.
pub fn oracle_zebra_violations(spec: &str, houses: &[Vec<String>]) -> Vec<String> {
    let house = |v: &str| houses.iter().position(|row| row.iter().any(|x| x == v)).map(|h| h as i64 + 1);
    let mut broken = Vec::new();
    for line in spec.lines().map(str::trim) {
        let Some((head, rest)) = line.split_once(':') else { continue };
        let words: Vec<&str> = rest.split_whitespace().collect();
        let ok = match head.trim() {
            "category nationality" | "category color" | "category beverage" | "category cigarette"
            | "category pet" => {
                let k = ["nationality", "color", "beverage", "cigarette", "pet"]
                    .iter()
                    .position(|c| head.ends_with(c))
                    .unwrap();
                let mut col: Vec<&str> = houses.iter().map(|row| row[k].as_str()).collect();
                let mut want = words.clone();
                col.sort_unstable();
                want.sort_unstable();
                col == want
            }
            "clue same" => house(words[0]).is_some() && house(words[0]) == house(words[1]),
            "clue neighbor" => match (house(words[0]), house(words[1])) {
                (Some(a), Some(b)) => (a - b).abs() == 1,
                _ => false,
            },
            "clue leftof" => match (house(words[0]), house(words[1])) {
                (Some(a), Some(b)) => a + 1 == b,
                _ => false,
            },
            "clue rightof" => match (house(words[0]), house(words[1])) {
                (Some(a), Some(b)) => a == b + 1,
                _ => false,
            },
            "clue at" => house(words[0]) == words[1].parse().ok(),
            _ => true,
        };
        if !ok {
            broken.push(line.to_string());
        }
    }
    broken
}

// Substitutions applied directly, without the library's unifier.

pub fn apply(bindings: &BTreeMap<String, Term>, t: &Term) -> Term {
    match t {
        Term::Var(v) => bindings.get(v).cloned().unwrap_or_else(|| t.clone()),
        Term::Const(_) => t.clone(),
        Term::Func(f, args) => Term::Func(f.clone(), args.iter().map(|a| apply(bindings, a)).collect()),
    }
}

pub fn bindings(s: &Substitution) -> BTreeMap<String, Term> {
    s.iter().map(|(v, t)| (v.clone(), t.clone())).collect()
}

pub fn term_vars(t: &Term, out: &mut BTreeSet<String>) {
    match t {
        Term::Var(v) => {
            out.insert(v.clone());
        }
        Term::Const(_) => {}
        Term::Func(_, args) => args.iter().for_each(|a| term_vars(a, out)),
    }
}

// Decision diagrams read back from their DOT rendering.

#[derive(Debug)]
pub struct DotNode {
    pub label: String,
    pub low: usize,
    pub high: usize,
}

/// Reads the nodes back out of the DOT rendering.
pub fn parse_dot(dot: &str) -> BTreeMap<usize, DotNode> {
    let id = |s: &str| s.trim().trim_start_matches('n').parse::<usize>().unwrap();
    let mut labels = BTreeMap::new();
    let mut low = BTreeMap::new();
    let mut high = BTreeMap::new();
    for line in dot.lines().map(str::trim) {
        if let Some((from, rest)) = line.split_once(" -> ") {
            let to = id(rest.split([' ', ';']).next().unwrap());
            if rest.contains("dashed") {
                low.insert(id(from), to);
            } else {
                high.insert(id(from), to);
            }
        } else if let Some((node, rest)) = line.split_once(" [") {
            if let Some(l) = rest.split("label=\"").nth(1) {
                labels.insert(id(node), l.split('"').next().unwrap().to_string());
            }
        }
    }
    labels
        .into_iter()
        .filter(|(n, _)| *n > 1)
        .map(|(n, label)| (n, DotNode { label, low: low[&n], high: high[&n] }))
        .collect()
}

/// Reduction, ordering and sharing, checked from the outside.
pub fn walk_check(nodes: &BTreeMap<usize, DotNode>, order: &[String]) -> Result<(), String> {
    let level = |n: usize| -> Option<usize> {
        if n < 2 {
            Some(order.len())
        } else {
            let label = &nodes.get(&n)?.label;
            order.iter().position(|a| a == label)
        }
    };
    let mut shapes = BTreeSet::new();
    for (&n, node) in nodes {
        if node.low == node.high {
            return Err(format!("redundant test at node {n}"));
        }
        let (here, lo, hi) = (level(n), level(node.low), level(node.high));
        if here.is_none() || lo.is_none() || hi.is_none() || lo <= here || hi <= here {
            return Err(format!("order broken at node {n}"));
        }
        if !shapes.insert((node.label.clone(), node.low, node.high)) {
            return Err(format!("duplicate of node {n}"));
        }
    }
    Ok(())
}

pub fn eval_dot(nodes: &BTreeMap<usize, DotNode>, root: usize, val: &dyn Fn(&str) -> bool) -> bool {
    let mut u = root;
    while u > 1 {
        let n = &nodes[&u];
        u = if val(&n.label) { n.high } else { n.low };
    }
    u == 1
}

/// Pairs `(s, t)` with `t` reachable from `s` by a non-empty path.
pub fn reachable(n: usize, edges: &[(usize, usize)]) -> BTreeSet<(usize, usize)> {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
    }
    let mut out = BTreeSet::new();
    for s in 0..n {
        let mut seen = vec![false; n];
        let mut queue: VecDeque<usize> = adj[s].iter().copied().collect();
        while let Some(v) = queue.pop_front() {
            if !std::mem::replace(&mut seen[v], true) {
                out.insert((s, v));
                queue.extend(&adj[v]);
            }
        }
    }
    out
}

/// Every other reference a proof line could have cited instead of `r`.
pub fn ref_variants(r: Ref, len: usize) -> Vec<Ref> {
    let mut out = Vec::new();
    match r {
        Ref::Line(n) => {
            out.extend((1..=len + 1).filter(|&m| m != n).map(Ref::Line));
            out.push(Ref::Range(n, n));
        }
        Ref::Range(a, b) => {
            out.extend((1..=len + 1).filter(|&m| m != a).map(|m| Ref::Range(m, b)));
            out.extend((1..=len + 1).filter(|&m| m != b).map(|m| Ref::Range(a, m)));
            out.push(Ref::Line(a));
            out.push(Ref::Line(b));
        }
    }
    out
}
