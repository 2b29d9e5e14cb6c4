//! Formula and term generators for testing and benchmarking.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::syntax::{Formula, Term};

/// `p, q, r, s, t, u, v, w`, then `p1, p2, ..`.
pub fn atom_names(k: usize) -> Vec<String> {
    const BASE: [&str; 8] = ["p", "q", "r", "s", "t", "u", "v", "w"];
    (0..k)
        .map(|i| if i < BASE.len() { BASE[i].to_string() } else { format!("p{}", i - BASE.len() + 1) })
        .collect()
}

fn combine(op: usize, a: Formula, b: Formula) -> Formula {
    match op {
        0 => Formula::and(a, b),
        1 => Formula::or(a, b),
        2 => Formula::imp(a, b),
        _ => Formula::iff(a, b),
    }
}

/// Every formula over `leaves` built with `~ & | -> <->` of depth at most
/// `max_depth`, shallower formulas first.
pub fn all_formulas(leaves: &[Formula], max_depth: usize) -> Vec<Formula> {
    let mut all: Vec<Formula> = leaves.to_vec();
    let mut by_depth: Vec<Vec<Formula>> = vec![leaves.to_vec()];
    for d in 1..=max_depth {
        let mut level = Vec::new();
        let shallower = all.clone();
        let prev = &by_depth[d - 1];
        for f in prev {
            level.push(Formula::not(f.clone()));
        }
        // binary: at least one side has depth exactly d - 1
        let below: Vec<&Formula> = shallower.iter().filter(|f| f.depth() < d - 1).collect();
        for op in 0..4 {
            for a in prev {
                for b in &shallower {
                    level.push(combine(op, a.clone(), b.clone()));
                }
                for b in &below {
                    level.push(combine(op, (*b).clone(), a.clone()));
                }
            }
        }
        all.extend(level.iter().cloned());
        by_depth.push(level);
    }
    all
}

/// Number of formulas [`all_formulas`] would produce, saturating at `u128::MAX`.
pub fn formula_count(leaves: usize, max_depth: usize) -> u128 {
    let mut total = leaves as u128;
    for _ in 0..max_depth {
        total = total.saturating_mul(total).saturating_mul(4).saturating_add(total).saturating_add(leaves as u128);
    }
    total
}

/// A random propositional formula over `atoms` of depth at most `max_depth`.
/// `Top` and `Bottom` appear as occasional leaves.
pub fn random_formula<R: Rng + ?Sized>(rng: &mut R, atoms: &[String], max_depth: usize) -> Formula {
    if max_depth == 0 || rng.gen_bool(0.2) {
        return match rng.gen_range(0..20) {
            0 => Formula::Top,
            1 => Formula::Bottom,
            _ => Formula::prop(atoms.choose(rng).expect("at least one atom").clone()),
        };
    }
    match rng.gen_range(0..5) {
        4 => Formula::not(random_formula(rng, atoms, max_depth - 1)),
        op => {
            let a = random_formula(rng, atoms, max_depth - 1);
            combine(op, a, random_formula(rng, atoms, max_depth - 1))
        }
    }
}

/// A random closed formula over unary predicates with variables `x, y, z`.
pub fn random_monadic_sentence<R: Rng + ?Sized>(rng: &mut R, preds: &[String], max_depth: usize) -> Formula {
    monadic(rng, preds, max_depth, &mut Vec::new())
}

fn monadic<R: Rng + ?Sized>(rng: &mut R, preds: &[String], depth: usize, scope: &mut Vec<String>) -> Formula {
    const VARS: [&str; 3] = ["x", "y", "z"];
    let must_bind = scope.is_empty();
    if depth == 0 || (!must_bind && rng.gen_bool(0.25)) {
        if must_bind {
            let v = VARS[0].to_string();
            let p = preds.choose(rng).expect("at least one predicate");
            let body = Formula::pred(p.clone(), vec![Term::var(&v)]);
            return if rng.gen() { Formula::forall(v, body) } else { Formula::exists(v, body) };
        }
        let v = scope.choose(rng).expect("non-empty scope").clone();
        let p = preds.choose(rng).expect("at least one predicate");
        return Formula::pred(p.clone(), vec![Term::var(v)]);
    }
    let choice = if must_bind { 5 } else { rng.gen_range(0..7) };
    match choice {
        5 | 6 => {
            let v = VARS[scope.len() % VARS.len()].to_string();
            scope.push(v.clone());
            let body = monadic(rng, preds, depth - 1, scope);
            scope.pop();
            if rng.gen() {
                Formula::forall(v, body)
            } else {
                Formula::exists(v, body)
            }
        }
        4 => Formula::not(monadic(rng, preds, depth - 1, scope)),
        op => {
            let a = monadic(rng, preds, depth - 1, scope);
            combine(op, a, monadic(rng, preds, depth - 1, scope))
        }
    }
}

/// Vocabulary for random terms: function symbols with arities and constants.
#[derive(Debug, Clone)]
pub struct TermVocabulary {
    pub functions: Vec<(String, usize)>,
    pub constants: Vec<String>,
    pub variables: Vec<String>,
}

impl Default for TermVocabulary {
    fn default() -> Self {
        let s = |v: &[&str]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
        TermVocabulary {
            functions: vec![("f".into(), 1), ("g".into(), 2), ("h".into(), 3)],
            constants: s(&["a", "b", "c"]),
            variables: s(&["x", "y", "z", "u", "v", "w"]),
        }
    }
}

pub fn random_term<R: Rng + ?Sized>(rng: &mut R, voc: &TermVocabulary, max_depth: usize) -> Term {
    if max_depth == 0 || rng.gen_bool(0.3) {
        return if rng.gen_bool(0.5) {
            Term::Var(voc.variables.choose(rng).expect("variables").clone())
        } else {
            Term::Const(voc.constants.choose(rng).expect("constants").clone())
        };
    }
    let (f, n) = voc.functions.choose(rng).expect("functions").clone();
    Term::Func(f, (0..n).map(|_| random_term(rng, voc, max_depth - 1)).collect())
}

/// Replaces random subterms by variables named `prefix1, prefix2, ..`;
/// equal subterms get the same variable.
fn abstract_subterms<R: Rng + ?Sized>(
    rng: &mut R,
    t: &Term,
    prefix: &str,
    seen: &mut Vec<(Term, String)>,
) -> Term {
    if !matches!(t, Term::Var(_)) && rng.gen_bool(0.25) {
        if let Some((_, v)) = seen.iter().find(|(s, _)| s == t) {
            return Term::Var(v.clone());
        }
        let v = format!("{prefix}{}", seen.len() + 1);
        seen.push((t.clone(), v.clone()));
        return Term::Var(v);
    }
    match t {
        Term::Func(f, args) => {
            Term::Func(f.clone(), args.iter().map(|a| abstract_subterms(rng, a, prefix, seen)).collect())
        }
        _ => t.clone(),
    }
}

/// Two different generalizations of one random term; they always unify.
pub fn random_unifiable_pair<R: Rng + ?Sized>(rng: &mut R, voc: &TermVocabulary, max_depth: usize) -> (Term, Term) {
    let base = random_term(rng, voc, max_depth);
    let left = abstract_subterms(rng, &base, "s", &mut Vec::new());
    let right = abstract_subterms(rng, &base, "t", &mut Vec::new());
    (left, right)
}

/// A pair whose only obstacle to unification is the occurs check.
///
/// Either `W[x]` against `W[C[x]]` for a shared context `W` and a proper
/// context `C`, or `g(x, y, W)` against `g(y, C[x], W)`, which binds `x` to
/// `y` before the cycle appears.
pub fn random_cyclic_pair<R: Rng + ?Sized>(rng: &mut R, voc: &TermVocabulary, max_depth: usize) -> (Term, Term) {
    let x = Term::var("x");
    let cycle = proper_context(rng, voc, max_depth.max(1), &x);
    let filler = random_ground_term(rng, voc, max_depth);
    if rng.gen() {
        let hole = wrap(rng, voc, max_depth);
        (hole(&x), hole(&cycle))
    } else {
        let y = Term::var("y");
        (
            Term::Func("k".into(), vec![x.clone(), y.clone(), filler.clone()]),
            Term::Func("k".into(), vec![y, cycle, filler]),
        )
    }
}

fn random_ground_term<R: Rng + ?Sized>(rng: &mut R, voc: &TermVocabulary, max_depth: usize) -> Term {
    let ground = TermVocabulary { variables: vec![], ..voc.clone() };
    fn go<R: Rng + ?Sized>(rng: &mut R, voc: &TermVocabulary, d: usize) -> Term {
        if d == 0 || rng.gen_bool(0.4) {
            return Term::Const(voc.constants.choose(rng).expect("constants").clone());
        }
        let (f, n) = voc.functions.choose(rng).expect("functions").clone();
        Term::Func(f, (0..n).map(|_| go(rng, voc, d - 1)).collect())
    }
    go(rng, &ground, max_depth)
}

/// A non-variable term containing `inner` at depth at least one.
fn proper_context<R: Rng + ?Sized>(rng: &mut R, voc: &TermVocabulary, depth: usize, inner: &Term) -> Term {
    let (f, n) = voc.functions.choose(rng).expect("functions").clone();
    let slot = rng.gen_range(0..n);
    let args = (0..n)
        .map(|i| {
            if i != slot {
                random_ground_term(rng, voc, depth.saturating_sub(1))
            } else if depth > 1 && rng.gen_bool(0.4) {
                proper_context(rng, voc, depth - 1, inner)
            } else {
                inner.clone()
            }
        })
        .collect();
    Term::Func(f, args)
}

/// A random one-hole context with ground side arguments.
fn wrap<R: Rng + ?Sized>(
    rng: &mut R,
    voc: &TermVocabulary,
    depth: usize,
) -> impl Fn(&Term) -> Term {
    let mut frames: Vec<(String, usize, Vec<Term>)> = Vec::new();
    for _ in 0..rng.gen_range(0..=depth) {
        let (f, n) = voc.functions.choose(rng).expect("functions").clone();
        let slot = rng.gen_range(0..n);
        let others = (0..n).map(|_| random_ground_term(rng, voc, 1)).collect();
        frames.push((f, slot, others));
    }
    move |t: &Term| {
        frames.iter().fold(t.clone(), |acc, (f, slot, others)| {
            let mut args = others.clone();
            args[*slot] = acc;
            Term::Func(f.clone(), args)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    #[test]
    fn exhaustive_counts_match_the_recurrence() {
        let leaves: Vec<Formula> = atom_names(2).into_iter().map(Formula::prop).collect();
        for d in 0..=2 {
            let all = all_formulas(&leaves, d);
            assert_eq!(all.len() as u128, formula_count(2, d));
            let distinct: std::collections::HashSet<_> = all.iter().collect();
            assert_eq!(distinct.len(), all.len());
            assert!(all.iter().all(|f| f.depth() <= d));
        }
        assert_eq!(formula_count(5, 2), 48_515);
    }

    #[test]
    fn monadic_sentences_are_closed() {
        let mut rng = StdRng::seed_from_u64(7);
        let preds = vec!["P".to_string(), "Q".to_string()];
        for _ in 0..200 {
            let f = random_monadic_sentence(&mut rng, &preds, 4);
            assert!(f.is_sentence(), "{f}");
        }
    }

    #[test]
    fn generated_depth_is_bounded() {
        let mut rng = StdRng::seed_from_u64(1);
        let atoms = atom_names(3);
        for _ in 0..200 {
            assert!(random_formula(&mut rng, &atoms, 4).depth() <= 4);
        }
    }
}
