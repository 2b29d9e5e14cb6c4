//! Argument handling and command dispatch for the `logicbench` binary.
//!
//! [`run`] never touches the process: it returns the exit code and both
//! output streams, which keeps every command golden-testable.

use std::fmt::Write;
use std::fs;

use clap::{Args, Parser, Subcommand};

use logicbench::applications::{
    check_syllogism_with, count_valid_syllogisms_with, encode_zebra, parse_zebra, solve_zebra,
    verify_paper_example, Import, Syllogism, SyllogismVerdict, ZebraOutcome, EINSTEIN_SPEC,
};
use logicbench::bdd::{BddError, BddManager};
use logicbench::datalog::{
    cwa_complement, datalog_engines, parse_atom, parse_program, query_facts, render_answer, DatalogError,
};
use logicbench::natded::{check, parse_proof};
use logicbench::normalform::{
    clausify, cnf_distributive, dnf, is_horn, nnf, parse_dimacs, prenex, skolemize, to_dimacs, tseitin,
    ClauseSet, NormalFormError,
};
use logicbench::resolution::{
    prove_equiv, prove_valid, resolve_fol, EquivOutcome, ProofOutcome, ProverLimits, ResolutionError,
    ResolutionOutcome, UnknownReason,
};
use logicbench::sat::{enumerate_models, sat_backends, SatError, Verdict};
use logicbench::semantics::{
    equiv_finite, eval_fol, eval_prop, parse_interpretation, render_countermodel, truth_table, Assignment,
    Environment, Equivalence, SemanticsError,
};
use logicbench::syntax::{parse, Formula, ParseError};

/// Exit code and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "logicbench", version, about = "Propositional and first-order logic workbench")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct FormulaArg {
    /// Formula text, or `@path` to read it from a file.
    formula: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Show the syntax tree of a formula.
    Parse(FormulaArg),
    /// Print a formula in canonical form.
    Print(FormulaArg),
    /// Truth table of a propositional formula.
    Table(FormulaArg),
    /// Evaluate under an assignment (`p=1, q=0`) or a finite model (`n=2, P = {0}`).
    Eval {
        formula: String,
        #[arg(long)]
        model: String,
    },
    /// Negation normal form.
    Nnf(FormulaArg),
    /// Conjunctive normal form.
    Cnf {
        formula: String,
        /// Print the Tseitin clause set instead.
        #[arg(long)]
        tseitin: bool,
    },
    /// Disjunctive normal form.
    Dnf(FormulaArg),
    /// Prenex normal form.
    Prenex(FormulaArg),
    /// Skolem normal form of a sentence.
    Skolemize(FormulaArg),
    /// Clause set of a sentence.
    Clausify {
        formula: String,
        /// Emit DIMACS (propositional input only).
        #[arg(long)]
        dimacs: bool,
    },
    /// Report whether the clause set of a sentence is Horn.
    Horn(FormulaArg),
    /// Decide satisfiability of a formula or a DIMACS file.
    Sat {
        input: String,
        #[arg(long, default_value = "dpll")]
        backend: String,
    },
    /// Enumerate models of a propositional formula.
    Models {
        formula: String,
        #[arg(long, default_value_t = 16)]
        limit: usize,
    },
    /// Run resolution on the clauses of a sentence or DIMACS file.
    Resolve { input: String },
    /// Prove a sentence valid by refutation.
    Prove(FormulaArg),
    /// Prove two sentences equivalent, or find a small countermodel.
    Equiv {
        left: String,
        right: String,
        /// Largest domain searched for a countermodel when no proof is found.
        #[arg(long, default_value_t = 3)]
        max_n: usize,
    },
    /// Check a natural-deduction proof file.
    CheckProof { file: String },
    /// Build a reduced ordered BDD.
    Bdd {
        formula: String,
        /// Comma-separated variable order; defaults to sorted atoms.
        #[arg(long)]
        order: Option<String>,
        #[arg(long)]
        dot: bool,
    },
    /// Evaluate Datalog programs.
    Datalog {
        #[command(subcommand)]
        action: DatalogAction,
    },
    /// Decide categorical syllogisms.
    Syllogism {
        /// A form such as `AAA-1` or a traditional name such as `Barbara`.
        form: Option<String>,
        /// Existential import: `subjects` (default when given bare) or `all-terms`.
        #[arg(long, num_args = 0..=1, default_missing_value = "subjects")]
        import: Option<String>,
        /// Sweep all 256 forms.
        #[arg(long)]
        all: bool,
    },
    /// Grid puzzles of the Einstein kind.
    Puzzle {
        #[command(subcommand)]
        action: PuzzleAction,
    },
    /// Reproduce the two-sentence equivalence example.
    PaperExample,
}

#[derive(Subcommand, Debug)]
enum DatalogAction {
    /// Print the least fixpoint, or the answers to a query.
    Run {
        file: String,
        #[arg(long)]
        query: Option<String>,
        #[arg(long, default_value = "semi-naive")]
        engine: String,
    },
    /// Ground atoms of a predicate that are false under the closed-world assumption.
    Cwa { file: String, pred: String },
}

#[derive(Subcommand, Debug)]
enum PuzzleAction {
    /// Solve a puzzle file, or the bundled classic when none is given.
    Solve { file: Option<String> },
    /// Print the DIMACS encoding of a puzzle.
    Encode { file: Option<String> },
}

enum Failure {
    Input(String),
    Resource(String),
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<SemanticsError> for Failure {
    fn from(e: SemanticsError) -> Self {
        match e {
            SemanticsError::CapExceeded { .. } | SemanticsError::TooManyAtoms { .. } => {
                Failure::Resource(e.to_string())
            }
            other => Failure::Input(other.to_string()),
        }
    }
}

impl From<NormalFormError> for Failure {
    fn from(e: NormalFormError) -> Self {
        match e {
            NormalFormError::ResourceLimit { .. } => Failure::Resource(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

impl From<ResolutionError> for Failure {
    fn from(e: ResolutionError) -> Self {
        match e {
            ResolutionError::NormalForm(n) => n.into(),
            other => Failure::Input(other.to_string()),
        }
    }
}

impl From<SatError> for Failure {
    fn from(e: SatError) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<BddError> for Failure {
    fn from(e: BddError) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<DatalogError> for Failure {
    fn from(e: DatalogError) -> Self {
        Failure::Input(e.to_string())
    }
}

struct Io {
    out: String,
    err: String,
}

type Status = Result<i32, Failure>;

/// Parses `args` (program name first) and executes the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code, stdout: String::new(), stderr: text }
            } else {
                Outcome { code, stdout: text, stderr: String::new() }
            };
        }
    };
    let mut io = Io { out: String::new(), err: String::new() };
    let code = match dispatch(cli.command, &mut io) {
        Ok(c) => c,
        Err(Failure::Input(m)) => {
            writeln!(io.err, "error: {m}").unwrap();
            EXIT_INPUT
        }
        Err(Failure::Resource(m)) => {
            writeln!(io.err, "resource limit: {m}").unwrap();
            EXIT_RESOURCE
        }
    };
    Outcome { code, stdout: io.out, stderr: io.err }
}

/// Inline text, or the contents of the file named after a leading `@`.
fn read_input(arg: &str) -> Result<String, Failure> {
    match arg.strip_prefix('@') {
        Some(path) => fs::read_to_string(path).map_err(|e| Failure::Input(format!("{path}: {e}"))),
        None => Ok(arg.to_string()),
    }
}

fn read_file(path: &str) -> Result<String, Failure> {
    read_input(&format!("@{}", path.strip_prefix('@').unwrap_or(path)))
}

fn formula(arg: &str) -> Result<Formula, Failure> {
    Ok(parse(&read_input(arg)?)?)
}

fn looks_like_dimacs(text: &str) -> bool {
    text.lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('c'))
        .is_some_and(|l| l.starts_with("p cnf"))
}

/// A clause set from DIMACS text or from the Tseitin encoding of a formula.
/// The source formula is returned for formula input.
fn clauses_of(arg: &str) -> Result<(ClauseSet, Option<Formula>), Failure> {
    let text = read_input(arg)?;
    if looks_like_dimacs(&text) {
        return Ok((parse_dimacs(&text)?, None));
    }
    let f = parse(&text)?;
    Ok((tseitin(&f)?, Some(f)))
}

fn bit(b: bool) -> u8 {
    u8::from(b)
}

fn render_assignment(a: &Assignment) -> String {
    a.iter().map(|(k, v)| format!("{k}={}", bit(*v))).collect::<Vec<_>>().join(" ")
}

fn dispatch(cmd: Command, io: &mut Io) -> Status {
    match cmd {
        Command::Parse(a) => {
            writeln!(io.out, "{}", formula(&a.formula)?.to_ast_string()).unwrap();
            Ok(EXIT_OK)
        }
        Command::Print(a) => {
            writeln!(io.out, "{}", formula(&a.formula)?).unwrap();
            Ok(EXIT_OK)
        }
        Command::Table(a) => {
            write!(io.out, "{}", truth_table(&formula(&a.formula)?)?).unwrap();
            Ok(EXIT_OK)
        }
        Command::Eval { formula: f, model } => eval(&formula(&f)?, &read_input(&model)?, io),
        Command::Nnf(a) => {
            writeln!(io.out, "{}", nnf(&formula(&a.formula)?)).unwrap();
            Ok(EXIT_OK)
        }
        Command::Cnf { formula: f, tseitin: ts } => {
            let f = formula(&f)?;
            if ts {
                write!(io.out, "{}", tseitin(&f)?).unwrap();
            } else {
                writeln!(io.out, "{}", cnf_distributive(&f)?).unwrap();
            }
            Ok(EXIT_OK)
        }
        Command::Dnf(a) => {
            writeln!(io.out, "{}", dnf(&formula(&a.formula)?)?).unwrap();
            Ok(EXIT_OK)
        }
        Command::Prenex(a) => {
            writeln!(io.out, "{}", prenex(&formula(&a.formula)?)).unwrap();
            Ok(EXIT_OK)
        }
        Command::Skolemize(a) => {
            let (g, fresh) = skolemize(&formula(&a.formula)?)?;
            writeln!(io.out, "{g}").unwrap();
            let names: Vec<String> = fresh
                .skolem_constants
                .iter()
                .cloned()
                .chain(fresh.skolem_functions.iter().map(|(f, n)| format!("{f}/{n}")))
                .collect();
            if !names.is_empty() {
                writeln!(io.err, "skolem symbols: {}", names.join(", ")).unwrap();
            }
            Ok(EXIT_OK)
        }
        Command::Clausify { formula: f, dimacs } => {
            let cs = clausify(&formula(&f)?)?;
            if dimacs {
                write!(io.out, "{}", to_dimacs(&cs)?).unwrap();
            } else {
                write!(io.out, "{cs}").unwrap();
            }
            Ok(EXIT_OK)
        }
        Command::Horn(a) => {
            let cs = clausify(&formula(&a.formula)?)?;
            let horn = is_horn(&cs);
            writeln!(io.out, "{}", if horn { "horn" } else { "not horn" }).unwrap();
            for c in cs.iter().filter(|c| !c.is_horn()) {
                writeln!(io.out, "non-horn clause: {c}").unwrap();
            }
            Ok(if horn { EXIT_OK } else { EXIT_NEGATIVE })
        }
        Command::Sat { input, backend } => sat(&input, &backend, io),
        Command::Models { formula: f, limit } => models(&formula(&f)?, limit, io),
        Command::Resolve { input } => resolve(&input, io),
        Command::Prove(a) => prove(&formula(&a.formula)?, io),
        Command::Equiv { left, right, max_n } => equiv(&formula(&left)?, &formula(&right)?, max_n, io),
        Command::CheckProof { file } => {
            let text = read_file(&file)?;
            let proof = parse_proof(&text).map_err(|e| Failure::Input(format!("{file}: {e}")))?;
            let result = check(&proof);
            writeln!(io.out, "{result}").unwrap();
            Ok(if result.is_valid() { EXIT_OK } else { EXIT_NEGATIVE })
        }
        Command::Bdd { formula: f, order, dot } => bdd(&formula(&f)?, order.as_deref(), dot, io),
        Command::Datalog { action } => datalog(action, io),
        Command::Syllogism { form, import, all } => syllogism(form.as_deref(), import.as_deref(), all, io),
        Command::Puzzle { action } => puzzle(action, io),
        Command::PaperExample => {
            let report = verify_paper_example();
            write!(io.out, "{report}").unwrap();
            Ok(if report.all_passed() { EXIT_OK } else { EXIT_NEGATIVE })
        }
    }
}

fn parse_assignment(text: &str) -> Result<Assignment, Failure> {
    let mut a = Assignment::new();
    for part in text.split([',', ' ']).map(str::trim).filter(|p| !p.is_empty()) {
        let (k, v) = part
            .split_once('=')
            .ok_or_else(|| Failure::Input(format!("expected `atom=value` in `{part}`")))?;
        let v = match v.trim() {
            "1" | "T" | "true" => true,
            "0" | "F" | "false" => false,
            other => return Err(Failure::Input(format!("bad truth value `{other}`"))),
        };
        a.insert(k.trim().to_string(), v);
    }
    Ok(a)
}

fn eval(f: &Formula, model: &str, io: &mut Io) -> Status {
    let value = if f.is_propositional() && !model.trim_start().starts_with("n=") {
        eval_prop(f, &parse_assignment(model)?)?
    } else {
        eval_fol(f, &parse_interpretation(model)?, &Environment::new())?
    };
    writeln!(io.out, "{value}").unwrap();
    Ok(if value { EXIT_OK } else { EXIT_NEGATIVE })
}

fn sat(input: &str, backend: &str, io: &mut Io) -> Status {
    let backends = sat_backends();
    let decider = backends.get(backend).ok_or_else(|| {
        Failure::Input(format!("unknown backend `{backend}`; available: {}", backends.names().join(", ")))
    })?;
    let (cs, source) = clauses_of(input)?;
    match decider.decide(&cs)? {
        Verdict::Sat(model) => {
            writeln!(io.out, "SAT").unwrap();
            if let Some(m) = model {
                match &source {
                    Some(f) => {
                        let lits: Vec<String> = f
                            .atoms()
                            .iter()
                            .map(|a| if m.get(a).copied().unwrap_or(false) { a.clone() } else { format!("-{a}") })
                            .collect();
                        writeln!(io.out, "v {} 0", lits.join(" ")).unwrap();
                    }
                    None => {
                        let lits: Vec<String> = cs
                            .atoms()
                            .iter()
                            .enumerate()
                            .map(|(i, a)| {
                                let n = i as i64 + 1;
                                (if m.get(a).copied().unwrap_or(false) { n } else { -n }).to_string()
                            })
                            .collect();
                        writeln!(io.out, "v {} 0", lits.join(" ")).unwrap();
                    }
                }
            }
            Ok(EXIT_OK)
        }
        Verdict::Unsat => {
            writeln!(io.out, "UNSAT").unwrap();
            Ok(EXIT_NEGATIVE)
        }
        Verdict::Unknown => {
            writeln!(io.out, "UNKNOWN").unwrap();
            Ok(EXIT_RESOURCE)
        }
    }
}

fn models(f: &Formula, limit: usize, io: &mut Io) -> Status {
    let atoms = f.atoms();
    let cs = tseitin(f)?;
    let mut seen = Vec::new();
    for m in enumerate_models(&cs, limit)? {
        let projected: Assignment = atoms.iter().map(|a| (a.clone(), m.get(a).copied().unwrap_or(false))).collect();
        if !seen.contains(&projected) {
            seen.push(projected);
        }
    }
    seen.sort();
    for m in &seen {
        writeln!(io.out, "{}", render_assignment(m)).unwrap();
    }
    writeln!(io.out, "models: {}", seen.len()).unwrap();
    Ok(if seen.is_empty() { EXIT_NEGATIVE } else { EXIT_OK })
}

fn resolve(input: &str, io: &mut Io) -> Status {
    let text = read_input(input)?;
    let cs = if looks_like_dimacs(&text) { parse_dimacs(&text)? } else { clausify(&parse(&text)?)? };
    match resolve_fol(&cs, ProverLimits::default()) {
        ResolutionOutcome::Refuted(p) => {
            write!(io.out, "{p}").unwrap();
            writeln!(io.out, "REFUTED").unwrap();
            Ok(EXIT_OK)
        }
        ResolutionOutcome::Saturated => {
            writeln!(io.out, "SATURATED").unwrap();
            Ok(EXIT_NEGATIVE)
        }
        ResolutionOutcome::ResourceOut => {
            writeln!(io.out, "UNKNOWN").unwrap();
            Ok(EXIT_RESOURCE)
        }
    }
}

fn unknown_status(reason: &UnknownReason) -> i32 {
    match reason {
        UnknownReason::Saturated => EXIT_NEGATIVE,
        UnknownReason::ResourceOut => EXIT_RESOURCE,
    }
}

fn prove(f: &Formula, io: &mut Io) -> Status {
    match prove_valid(f, ProverLimits::default())? {
        ProofOutcome::Proved(p) => {
            write!(io.out, "{p}").unwrap();
            writeln!(io.out, "PROVED").unwrap();
            Ok(EXIT_OK)
        }
        ProofOutcome::Unknown(reason) => {
            let word = match reason {
                UnknownReason::Saturated => "NOT VALID (clauses saturated)",
                UnknownReason::ResourceOut => "UNKNOWN (resource limit)",
            };
            writeln!(io.out, "{word}").unwrap();
            Ok(unknown_status(&reason))
        }
    }
}

fn equiv(f1: &Formula, f2: &Formula, max_n: usize, io: &mut Io) -> Status {
    let report = prove_equiv(f1, f2, ProverLimits::default())?;
    if let Some(w) = &report.warning {
        writeln!(io.err, "warning: {w}").unwrap();
    }
    match report.outcome {
        EquivOutcome::Equivalent(forward, backward) => {
            writeln!(io.out, "left -> right").unwrap();
            write!(io.out, "{forward}").unwrap();
            writeln!(io.out, "right -> left").unwrap();
            write!(io.out, "{backward}").unwrap();
            writeln!(io.out, "EQUIVALENT").unwrap();
            Ok(EXIT_OK)
        }
        EquivOutcome::Unknown { forward, backward } => {
            if let Equivalence::Countermodel(m, env) = equiv_finite(f1, f2, max_n)? {
                writeln!(io.out, "NOT EQUIVALENT").unwrap();
                writeln!(io.out, "countermodel: {}", render_countermodel(&m, &env)).unwrap();
                return Ok(EXIT_NEGATIVE);
            }
            writeln!(io.out, "UNKNOWN").unwrap();
            let resource = [&forward, &backward]
                .iter()
                .any(|o| matches!(o, ProofOutcome::Unknown(UnknownReason::ResourceOut)));
            Ok(if resource { EXIT_RESOURCE } else { EXIT_NEGATIVE })
        }
    }
}

fn bdd(f: &Formula, order: Option<&str>, dot: bool, io: &mut Io) -> Status {
    let order: Vec<String> = match order {
        Some(o) => o.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect(),
        None => f.atoms().into_iter().collect(),
    };
    let mut mgr = BddManager::with_order(order)?;
    let root = mgr.build(f)?;
    writeln!(io.out, "order: {}", mgr.order().join(",")).unwrap();
    writeln!(io.out, "nodes: {}", mgr.node_count(root)?).unwrap();
    writeln!(io.out, "satcount: {}", mgr.satcount(root)?).unwrap();
    if dot {
        write!(io.out, "{}", mgr.to_dot(root)?).unwrap();
    }
    Ok(EXIT_OK)
}

fn datalog(action: DatalogAction, io: &mut Io) -> Status {
    match action {
        DatalogAction::Run { file, query, engine } => {
            let engines = datalog_engines();
            let ev = engines.get(&engine).ok_or_else(|| {
                Failure::Input(format!("unknown engine `{engine}`; available: {}", engines.names().join(", ")))
            })?;
            let program = parse_program(&read_file(&file)?)?;
            let facts = ev.evaluate(&program);
            let Some(q) = query else {
                write!(io.out, "{facts}").unwrap();
                return Ok(EXIT_OK);
            };
            let q = parse_atom(&q)?;
            let answers = query_facts(&program, &facts, &q)?;
            if q.is_ground() {
                writeln!(io.out, "{}", !answers.is_empty()).unwrap();
            } else {
                for a in &answers {
                    writeln!(io.out, "{}", render_answer(a)).unwrap();
                }
            }
            Ok(if answers.is_empty() { EXIT_NEGATIVE } else { EXIT_OK })
        }
        DatalogAction::Cwa { file, pred } => {
            let program = parse_program(&read_file(&file)?)?;
            for a in cwa_complement(&program, &pred)? {
                writeln!(io.out, "~{a}").unwrap();
            }
            Ok(EXIT_OK)
        }
    }
}

fn import_mode(flag: Option<&str>) -> Result<Import, Failure> {
    match flag {
        None => Ok(Import::None),
        Some("subjects") => Ok(Import::PremiseSubjects),
        Some("all-terms") => Ok(Import::AllTerms),
        Some("none") => Ok(Import::None),
        Some(other) => Err(Failure::Input(format!(
            "unknown import mode `{other}`; expected subjects, all-terms or none"
        ))),
    }
}

fn form_label(s: &Syllogism) -> String {
    match s.traditional_name() {
        Some(n) => format!("{s} ({n})"),
        None => s.to_string(),
    }
}

fn syllogism(form: Option<&str>, import: Option<&str>, all: bool, io: &mut Io) -> Status {
    let import = import_mode(import)?;
    if all {
        let mut valid = 0;
        for s in Syllogism::all() {
            let ok = check_syllogism_with(&s, import).is_valid();
            valid += usize::from(ok);
            let name = s.traditional_name().unwrap_or("-");
            writeln!(io.out, "{s} {name} {}", if ok { "valid" } else { "invalid" }).unwrap();
        }
        debug_assert_eq!(valid, count_valid_syllogisms_with(import));
        writeln!(io.out, "valid: {valid}/256").unwrap();
        return Ok(EXIT_OK);
    }
    let Some(form) = form else {
        return Err(Failure::Input("give a syllogism such as AAA-1, or --all".into()));
    };
    let s: Syllogism = form.parse().map_err(|e: logicbench::applications::SyllogismError| Failure::Input(e.to_string()))?;
    match check_syllogism_with(&s, import) {
        SyllogismVerdict::Valid => {
            writeln!(io.out, "{}: valid", form_label(&s)).unwrap();
            Ok(EXIT_OK)
        }
        SyllogismVerdict::Countermodel(m) => {
            writeln!(io.out, "{}: invalid", form_label(&s)).unwrap();
            writeln!(io.out, "countermodel: {m}").unwrap();
            Ok(EXIT_NEGATIVE)
        }
    }
}

fn puzzle_spec(file: Option<&str>) -> Result<logicbench::applications::ZebraSpec, Failure> {
    let text = match file {
        Some(f) => read_file(f)?,
        None => EINSTEIN_SPEC.to_string(),
    };
    parse_zebra(&text).map_err(|e| Failure::Input(e.to_string()))
}

fn puzzle(action: PuzzleAction, io: &mut Io) -> Status {
    match action {
        PuzzleAction::Encode { file } => {
            let spec = puzzle_spec(file.as_deref())?;
            let cs = encode_zebra(&spec).map_err(|e| Failure::Input(e.to_string()))?;
            write!(io.out, "{}", to_dimacs(&cs)?).unwrap();
            Ok(EXIT_OK)
        }
        PuzzleAction::Solve { file } => {
            let spec = puzzle_spec(file.as_deref())?;
            match solve_zebra(&spec).map_err(|e| Failure::Input(e.to_string()))? {
                ZebraOutcome::Solved(sol) => {
                    write!(io.out, "{sol}").unwrap();
                    if let Err(e) = sol.verify(&spec) {
                        writeln!(io.err, "decoded grid fails a direct check: {e}").unwrap();
                        return Ok(EXIT_NEGATIVE);
                    }
                    if let Some((value, category)) = &spec.ask {
                        if let Some(ans) = sol.answer(value, category) {
                            writeln!(io.out, "answer: the {value} belongs to {category} {ans}").unwrap();
                        }
                    }
                    Ok(EXIT_OK)
                }
                ZebraOutcome::Unsatisfiable => {
                    writeln!(io.out, "UNSATISFIABLE").unwrap();
                    Ok(EXIT_NEGATIVE)
                }
                ZebraOutcome::NotUnique(n) => {
                    writeln!(io.out, "NOT UNIQUE (at least {n} solutions)").unwrap();
                    Ok(EXIT_NEGATIVE)
                }
            }
        }
    }
}
