mod common;

use std::collections::BTreeMap;

use common::{arb_prop, oracle_eval, prop_atoms};
use logicbench::generate::{atom_names, random_monadic_sentence};
use logicbench::semantics::{
    enumerate_interpretations, equiv_finite, eval_fol, eval_prop, monadic_structures, truth_table,
    Assignment, Environment, Equivalence, Interpretation,
};
use logicbench::syntax::{parse, Formula, Signature};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn assignment(atoms: &[String], bits: u32) -> Assignment {
    atoms.iter().enumerate().map(|(i, a)| (a.clone(), bits >> i & 1 == 1)).collect()
}

/// The same valuation as a first-order structure with zero-arity predicates.
fn as_structure(a: &Assignment) -> Interpretation {
    let mut m = Interpretation::new(1);
    for (p, &v) in a {
        m = m.with_predicate(p, if v { vec![vec![]] } else { vec![] });
    }
    m
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn boolean_laws(f in arb_prop(4, 4), g in arb_prop(4, 4), bits in any::<u32>()) {
        let a = assignment(&atom_names(4), bits);
        let ev = |h: &Formula| eval_prop(h, &a).unwrap();
        let (nf, ng) = (Formula::not(f.clone()), Formula::not(g.clone()));
        prop_assert_eq!(ev(&Formula::not(Formula::and(f.clone(), g.clone()))), ev(&Formula::or(nf.clone(), ng.clone())));
        prop_assert_eq!(ev(&Formula::not(Formula::or(f.clone(), g.clone()))), ev(&Formula::and(nf.clone(), ng)));
        prop_assert_eq!(ev(&Formula::not(nf.clone())), ev(&f));
        prop_assert_eq!(ev(&Formula::imp(f.clone(), g.clone())), ev(&Formula::or(nf, g.clone())));
        let both = Formula::and(Formula::imp(f.clone(), g.clone()), Formula::imp(g.clone(), f.clone()));
        prop_assert_eq!(ev(&Formula::iff(f, g)), ev(&both));
    }

    #[test]
    fn eval_prop_matches_the_oracle(f in arb_prop(5, 5), bits in any::<u32>()) {
        let names = atom_names(5);
        let a = assignment(&names, bits);
        prop_assert_eq!(eval_prop(&f, &a).unwrap(), oracle_eval(&f, &|p| a[p]));
    }

    #[test]
    fn eval_fol_agrees_with_eval_prop(f in arb_prop(4, 5), bits in any::<u32>()) {
        let a = assignment(&atom_names(4), bits);
        let m = as_structure(&a);
        prop_assert_eq!(eval_fol(&f, &m, &Environment::new()).unwrap(), eval_prop(&f, &a).unwrap());
    }

    #[test]
    fn truth_table_rows_match_the_oracle(f in arb_prop(4, 5)) {
        let t = truth_table(&f).unwrap();
        prop_assert_eq!(t.atoms.clone(), prop_atoms(&f));
        prop_assert_eq!(t.rows.len(), 1 << t.atoms.len());
        for (a, v) in &t.rows {
            prop_assert_eq!(*v, oracle_eval(&f, &|p| a[p]));
        }
    }
}

#[test]
fn sentences_ignore_the_environment() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let preds = vec!["P".to_string(), "Q".to_string()];
    for _ in 0..200 {
        let f = random_monadic_sentence(&mut rng, &preds, 4);
        assert!(f.is_sentence());
        for n in 1..=3 {
            for m in monadic_structures(&preds, n) {
                let base = eval_fol(&f, &m, &Environment::new()).unwrap();
                for x in 0..n {
                    let env: Environment =
                        [("x", x), ("y", n - 1 - x), ("z", 0)].iter().map(|(k, v)| (k.to_string(), *v)).collect();
                    assert_eq!(eval_fol(&f, &m, &env).unwrap(), base, "{f}");
                }
            }
        }
    }
}

#[test]
fn countermodels_are_real() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let preds = vec!["P".to_string(), "Q".to_string()];
    let mut found = 0;
    for _ in 0..150 {
        let f = random_monadic_sentence(&mut rng, &preds, 3);
        let g = random_monadic_sentence(&mut rng, &preds, 3);
        if let Equivalence::Countermodel(m, env) = equiv_finite(&f, &g, 3).unwrap() {
            found += 1;
            assert_ne!(eval_fol(&f, &m, &env).unwrap(), eval_fol(&g, &m, &env).unwrap());
        }
    }
    assert!(found > 50);
}

#[test]
fn countermodels_for_open_formulas_bind_the_free_variables() {
    let f = Formula::pred("P", vec![logicbench::syntax::Term::var("x")]);
    let g = Formula::pred("Q", vec![logicbench::syntax::Term::var("x")]);
    match equiv_finite(&f, &g, 2).unwrap() {
        Equivalence::Countermodel(m, env) => {
            assert!(env.contains_key("x"));
            assert_ne!(eval_fol(&f, &m, &env).unwrap(), eval_fol(&g, &m, &env).unwrap());
        }
        other => panic!("expected a countermodel, got {other:?}"),
    }
}

#[test]
fn interpretation_enumeration_covers_every_structure() {
    // every binary relation over a 2-element domain, each exactly once
    let sig = Signature::of(&parse("forall x. forall y. R(x, y)").unwrap()).unwrap();
    let mut seen = BTreeMap::new();
    for m in enumerate_interpretations(&sig, 2, 1 << 10).unwrap() {
        *seen.entry(m.predicates["R"].clone()).or_insert(0) += 1;
    }
    assert_eq!(seen.len(), 16);
    assert!(seen.values().all(|&c| c == 1));
}

#[test]
fn classic_quantifier_equivalences() {
    let pairs = [
        ("~forall x. P(x)", "exists x. ~P(x)"),
        ("~exists x. P(x)", "forall x. ~P(x)"),
        ("forall x. (P(x) & Q(x))", "(forall x. P(x)) & forall x. Q(x)"),
        ("exists x. (P(x) | Q(x))", "(exists x. P(x)) | exists x. Q(x)"),
    ];
    for (a, b) in pairs {
        assert!(equiv_finite(&parse(a).unwrap(), &parse(b).unwrap(), 3).unwrap().is_equivalent(), "{a}");
    }
    let (a, b) = ("forall x. (P(x) | Q(x))", "(forall x. P(x)) | forall x. Q(x)");
    assert!(!equiv_finite(&parse(a).unwrap(), &parse(b).unwrap(), 2).unwrap().is_equivalent());
}
