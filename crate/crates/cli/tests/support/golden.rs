//! CLI invocations whose output is pinned by files under `tests/golden`.
//!
//! Paths in the arguments are relative to the CLI package root; callers must
//! run from there. Set `UPDATE_GOLDEN=1` to rewrite the files.
#![allow(dead_code)]

use std::fs;
use std::path::{Path, PathBuf};

use logicbench::applications::{F1, F2, G1, G2};

pub struct Case {
    pub name: &'static str,
    pub args: &'static [&'static str],
}

pub const CASES: &[Case] = &[
    Case { name: "parse", args: &["parse", F1] },
    Case { name: "parse-error", args: &["parse", "p & (q"] },
    Case { name: "parse-arity", args: &["parse", "P(x) & P(x, y)"] },
    Case { name: "print", args: &["print", "((p)) & (q | r) -> ~~s <-> t"] },
    Case { name: "print-file", args: &["print", "@tests/fixtures/socrates.txt"] },
    Case { name: "table", args: &["table", "(p -> q) & (q -> r)"] },
    Case { name: "eval-prop", args: &["eval", "p & ~q", "--model", "p=1, q=0"] },
    Case { name: "eval-fol", args: &["eval", "forall x. exists y. R(x, y)", "--model", "n=2, R = {(0, 1), (1, 1)}"] },
    Case { name: "nnf", args: &["nnf", "~(p -> (q <-> r))"] },
    Case { name: "nnf-fol", args: &["nnf", F1] },
    Case { name: "cnf", args: &["cnf", "(p & q) | (r & s)"] },
    Case { name: "cnf-tseitin", args: &["cnf", "(p & q) | ~r", "--tseitin"] },
    Case { name: "dnf", args: &["dnf", "(p | q) & (r | ~p)"] },
    Case { name: "prenex", args: &["prenex", "(forall x. P(x)) -> exists y. Q(y)"] },
    Case { name: "skolemize", args: &["skolemize", "forall x. exists y. forall z. exists w. R(x, y, z, w)"] },
    Case { name: "clausify", args: &["clausify", G1] },
    Case { name: "clausify-dimacs", args: &["clausify", "(p | q) & (~p | r)", "--dimacs"] },
    Case { name: "horn", args: &["horn", "(p & q -> r) & (s -> t) & ~u"] },
    Case { name: "horn-not", args: &["horn", "p | q"] },
    Case { name: "sat", args: &["sat", "(p | q) & ~p"] },
    Case { name: "sat-dimacs", args: &["sat", "@tests/fixtures/small.cnf"] },
    Case { name: "sat-unsat", args: &["sat", "@tests/fixtures/pigeonhole.cnf"] },
    Case { name: "sat-truth-table", args: &["sat", "@tests/fixtures/small.cnf", "--backend", "truth-table"] },
    Case { name: "sat-bdd", args: &["sat", "@tests/fixtures/small.cnf", "--backend", "bdd"] },
    Case { name: "sat-resolution", args: &["sat", "@tests/fixtures/pigeonhole.cnf", "--backend", "resolution"] },
    Case { name: "sat-unknown-backend", args: &["sat", "p", "--backend", "cdcl"] },
    Case { name: "models", args: &["models", "p | q"] },
    Case { name: "models-limit", args: &["models", "p | q | r", "--limit", "3"] },
    Case { name: "resolve", args: &["resolve", "(forall x. (P(x) -> Q(x))) & P(a) & ~Q(a)"] },
    Case { name: "resolve-saturated", args: &["resolve", "p | q"] },
    Case { name: "prove", args: &["prove", "@tests/fixtures/socrates.txt"] },
    Case { name: "prove-unknown", args: &["prove", "exists x. P(x)"] },
    Case { name: "equiv-f", args: &["equiv", F1, F2] },
    Case { name: "equiv-g", args: &["equiv", G1, G2] },
    Case { name: "equiv-countermodel", args: &["equiv", "forall x. P(x)", "exists x. P(x)"] },
    Case { name: "check-proof", args: &["check-proof", "../core/data/proofs/example-forward.nd"] },
    Case { name: "check-proof-invalid", args: &["check-proof", "tests/fixtures/broken.nd"] },
    Case { name: "bdd", args: &["bdd", "(p & q) | r"] },
    Case { name: "bdd-order-dot", args: &["bdd", "(p & q) | r", "--order", "r,q,p", "--dot"] },
    Case { name: "datalog-run", args: &["datalog", "run", "tests/fixtures/graph.dl"] },
    Case { name: "datalog-query", args: &["datalog", "run", "tests/fixtures/graph.dl", "--query", "path(a, Y)"] },
    Case { name: "datalog-naive", args: &["datalog", "run", "tests/fixtures/graph.dl", "--engine", "naive"] },
    Case { name: "datalog-cwa", args: &["datalog", "cwa", "tests/fixtures/graph.dl", "path"] },
    Case { name: "syllogism", args: &["syllogism", "Barbara"] },
    Case { name: "syllogism-countermodel", args: &["syllogism", "AAA-2"] },
    Case { name: "syllogism-import", args: &["syllogism", "AAI-3", "--import"] },
    Case { name: "syllogism-all", args: &["syllogism", "--all"] },
    Case { name: "syllogism-all-terms", args: &["syllogism", "--all", "--import", "all-terms"] },
    Case { name: "puzzle-solve", args: &["puzzle", "solve"] },
    Case { name: "puzzle-solve-file", args: &["puzzle", "solve", "tests/fixtures/tiny.zebra"] },
    Case { name: "puzzle-encode", args: &["puzzle", "encode", "tests/fixtures/tiny.zebra"] },
    Case { name: "paper-example", args: &["paper-example"] },
    Case { name: "unknown-command", args: &["frobnicate"] },
];

pub fn golden_dir(cli_root: &Path) -> PathBuf {
    cli_root.join("tests/golden")
}

fn quote(arg: &str) -> String {
    if arg.chars().all(|c| c.is_ascii_alphanumeric() || "-_./@=,".contains(c)) {
        arg.to_string()
    } else {
        format!("'{arg}'")
    }
}

/// The invocation, exit code and both streams as one text block.
pub fn render(case: &Case) -> String {
    let out = logicbench_cli::run(std::iter::once("logicbench").chain(case.args.iter().copied()));
    let cmd: Vec<String> = case.args.iter().map(|a| quote(a)).collect();
    format!(
        "$ logicbench {}\nexit: {}\n--- stdout\n{}--- stderr\n{}",
        cmd.join(" "),
        out.code,
        out.stdout,
        out.stderr
    )
}

/// Compares one case with its golden file, or rewrites the file when
/// `UPDATE_GOLDEN` is set.
pub fn check(case: &Case, cli_root: &Path) -> Result<(), String> {
    let path = golden_dir(cli_root).join(format!("{}.txt", case.name));
    let actual = render(case);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        fs::write(&path, &actual).map_err(|e| format!("{}: {e}", path.display()))?;
        return Ok(());
    }
    let expected = fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    if expected == actual {
        Ok(())
    } else {
        Err(format!("{} differs from the golden file\n--- expected\n{expected}--- actual\n{actual}", case.name))
    }
}
