mod common;

use std::fs;
use std::path::PathBuf;

use common::ref_variants;
use logicbench::natded::{check, natded_rules, parse_proof, CheckResult, Proof, Reason};
use logicbench::resolution::{prove_valid, ProverLimits};
use logicbench::semantics::equiv_finite;
use logicbench::syntax::Formula;

fn bundled() -> Vec<(String, Proof)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/proofs");
    let mut out: Vec<(String, Proof)> = fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "nd"))
        .map(|p| {
            let text = fs::read_to_string(&p).unwrap();
            let name = p.file_name().unwrap().to_string_lossy().into_owned();
            let proof = parse_proof(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
            (name, proof)
        })
        .collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

fn reason(r: &CheckResult) -> (usize, Reason) {
    match r {
        CheckResult::Invalid { line, reason, .. } => (*line, *reason),
        CheckResult::Valid => panic!("expected an invalid proof"),
    }
}

#[test]
fn every_bundled_proof_checks() {
    let proofs = bundled();
    assert!(proofs.len() >= 10);
    for (name, p) in &proofs {
        assert_eq!(check(p), CheckResult::Valid, "{name}");
    }
}

#[test]
fn bundled_proofs_are_sound() {
    for (name, p) in bundled() {
        let g = p.sequent().unwrap();
        let claim = if g.premises.is_empty() {
            g.conclusion.clone()
        } else {
            Formula::imp(Formula::conjunction(g.premises.clone()), g.conclusion.clone())
        };
        let outcome = prove_valid(&claim, ProverLimits::default()).unwrap();
        assert!(outcome.is_proved(), "{name}: resolution did not confirm {claim}");
        let finite = equiv_finite(&claim, &Formula::Top, 3).unwrap();
        assert!(finite.is_equivalent(), "{name}: countermodel for {claim}");
    }
}

#[test]
fn changing_any_rule_name_breaks_the_proof() {
    let names = natded_rules().names();
    for (name, p) in bundled() {
        for i in 0..p.lines.len() {
            for other in &names {
                if *other == p.lines[i].rule {
                    continue;
                }
                let mut q = p.clone();
                q.lines[i].rule = other.to_string();
                assert!(!check(&q).is_valid(), "{name}: line {} as {other} survives", i + 1);
            }
        }
    }
}

#[test]
fn changing_any_reference_breaks_the_proof() {
    for (name, p) in bundled() {
        for i in 0..p.lines.len() {
            for k in 0..p.lines[i].refs.len() {
                for v in ref_variants(p.lines[i].refs[k], p.lines.len()) {
                    let mut q = p.clone();
                    q.lines[i].refs[k] = v;
                    assert!(!check(&q).is_valid(), "{name}: line {} with ref {v} survives", i + 1);
                }
                for k2 in k + 1..p.lines[i].refs.len() {
                    let mut q = p.clone();
                    q.lines[i].refs.swap(k, k2);
                    if q.lines[i].refs == p.lines[i].refs {
                        continue;
                    }
                    assert!(!check(&q).is_valid(), "{name}: line {} with swapped refs survives", i + 1);
                }
            }
        }
    }
}

#[test]
fn swapped_conjunction_refs_give_a_mismatch() {
    let p = parse_proof("goal p & q |- q & p\n1 | p & q premise\n2 | q andE2 1\n3 | p andE1 1\n4 | p & p andI 3,2\n")
        .unwrap();
    assert_eq!(reason(&check(&p)), (4, Reason::ConclusionMismatch));
    let swapped =
        parse_proof("1 | p & q premise\n2 | q andE2 1\n3 | p andE1 1\n4 | q & p andI 3,2\n").unwrap();
    assert_eq!(reason(&check(&swapped)), (4, Reason::ConclusionMismatch));
}

#[test]
fn generalizing_a_premise_constant_is_rejected() {
    let p = parse_proof("goal P(a) |- forall x. P(x)\n1 | P(a) premise\n2 | forall x. P(x) forallI 1\n").unwrap();
    assert_eq!(reason(&check(&p)), (2, Reason::EigenvariableViolation));
}

#[test]
fn witness_escaping_its_subproof_is_rejected() {
    let text = "\
1 | exists x. P(x) premise
2 || P(a) assume
3 || P(a) reit 2
4 | P(a) existsE 1,2-3
";
    assert_eq!(reason(&check(&parse_proof(text).unwrap())), (4, Reason::EigenvariableViolation));
}

#[test]
fn lines_inside_closed_subproofs_are_out_of_scope() {
    let text = "\
1 || p assume
2 || p reit 1
3 | p -> p impI 1-2
4 | p reit 2
";
    assert_eq!(reason(&check(&parse_proof(text).unwrap())), (4, Reason::BadReference));
}

#[test]
fn open_assumption_at_the_end_is_reported() {
    let text = "1 | p premise\n2 || q assume\n";
    assert_eq!(reason(&check(&parse_proof(text).unwrap())), (2, Reason::UndischargedAssumption));
}

#[test]
fn goal_must_match_the_last_line() {
    let text = "goal p |- q\n1 | p premise\n";
    assert_eq!(reason(&check(&parse_proof(text).unwrap())), (1, Reason::GoalMismatch));
    let text = "goal p |- p\n1 | q premise\n";
    assert_eq!(reason(&check(&parse_proof(text).unwrap())), (1, Reason::NotAPremise));
}

#[test]
fn smallest_offending_line_is_reported() {
    let text = "1 | p & q premise\n2 | r andE1 1\n3 | s andE2 1\n";
    assert_eq!(reason(&check(&parse_proof(text).unwrap())), (2, Reason::ConclusionMismatch));
}

#[test]
fn parser_examples() {
    let p = parse_proof("1 | p & q premise").unwrap();
    assert_eq!(p.lines.len(), 1);
    assert_eq!(p.lines[0].rule, "premise");
    assert_eq!(p.lines[0].depth, 0);

    let e = parse_proof("1 | p premise\n2 || q andE1 1\n").unwrap_err();
    assert_eq!(e.line, 2);
    let e = parse_proof("1 | p premise\n3 | p reit 1\n").unwrap_err();
    assert_eq!(e.line, 2);
    let e = parse_proof("1 | p frobnicate 1\n").unwrap_err();
    assert!(e.message.contains("frobnicate"));
    let e = parse_proof("1 | p & premise\n").unwrap_err();
    assert_eq!(e.line, 1);
}

#[test]
fn display_round_trips() {
    for (name, p) in bundled() {
        let again = parse_proof(&p.to_string()).unwrap();
        assert_eq!(again, p, "{name}");
    }
}

#[test]
fn mixed_depth_mutation_is_a_depth_violation() {
    let (_, mut p) = bundled().into_iter().find(|(n, _)| n == "and-commute.nd").unwrap();
    p.lines[2].depth = 1;
    assert_eq!(reason(&check(&p)), (3, Reason::DepthViolation));
}
