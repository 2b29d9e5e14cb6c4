use std::fmt;
use std::str::FromStr;

use crate::resolution::{prove_valid, ProverLimits};
use crate::semantics::{eval_fol, monadic_structures, Environment, Interpretation};
use crate::syntax::{Formula, Term};

/// Largest domain searched; complete for three unary predicates.
pub const SYLLOGISM_DOMAIN_BOUND: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Mood {
    /// All X are Y.
    A,
    /// No X is Y.
    E,
    /// Some X is Y.
    I,
    /// Some X is not Y.
    O,
}

impl Mood {
    pub const ALL: [Mood; 4] = [Mood::A, Mood::E, Mood::I, Mood::O];

    pub fn is_universal(self) -> bool {
        matches!(self, Mood::A | Mood::E)
    }

    pub fn letter(self) -> char {
        match self {
            Mood::A => 'A',
            Mood::E => 'E',
            Mood::I => 'I',
            Mood::O => 'O',
        }
    }

    fn from_letter(c: char) -> Option<Mood> {
        match c.to_ascii_uppercase() {
            'A' => Some(Mood::A),
            'E' => Some(Mood::E),
            'I' => Some(Mood::I),
            'O' => Some(Mood::O),
            _ => None,
        }
    }

    /// The categorical sentence relating `subject` to `predicate`.
    pub fn sentence(self, subject: &str, predicate: &str) -> Formula {
        let s = Formula::pred(subject, vec![Term::var("x")]);
        let p = Formula::pred(predicate, vec![Term::var("x")]);
        match self {
            Mood::A => Formula::forall("x", Formula::imp(s, p)),
            Mood::E => Formula::forall("x", Formula::imp(s, Formula::not(p))),
            Mood::I => Formula::exists("x", Formula::and(s, p)),
            Mood::O => Formula::exists("x", Formula::and(s, Formula::not(p))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("malformed syllogism `{0}`: expected three moods from AEIO and a figure 1-4, e.g. AAA-1")]
pub struct SyllogismError(pub String);

/// A categorical syllogism over the terms `S` (minor), `M` (middle) and `P` (major).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Syllogism {
    pub figure: u8,
    /// Major premise, minor premise, conclusion.
    pub moods: [Mood; 3],
}

impl Syllogism {
    pub fn new(figure: u8, moods: [Mood; 3]) -> Result<Self, SyllogismError> {
        let s = Syllogism { figure, moods };
        if (1..=4).contains(&figure) {
            Ok(s)
        } else {
            Err(SyllogismError(s.to_string()))
        }
    }

    /// All 256 mood and figure combinations, ordered by mood string then figure.
    pub fn all() -> Vec<Syllogism> {
        let mut out = Vec::with_capacity(256);
        for a in Mood::ALL {
            for b in Mood::ALL {
                for c in Mood::ALL {
                    for figure in 1..=4 {
                        out.push(Syllogism { figure, moods: [a, b, c] });
                    }
                }
            }
        }
        out
    }

    /// Subject and predicate of the major and minor premise.
    pub fn premise_terms(&self) -> [(&'static str, &'static str); 2] {
        match self.figure {
            1 => [("M", "P"), ("S", "M")],
            2 => [("P", "M"), ("S", "M")],
            3 => [("M", "P"), ("M", "S")],
            _ => [("P", "M"), ("M", "S")],
        }
    }

    /// The traditional mnemonic name, if this form has one.
    pub fn traditional_name(&self) -> Option<&'static str> {
        let key: String = self.moods.iter().map(|m| m.letter()).collect();
        TRADITIONAL
            .iter()
            .find(|(m, f, _)| *m == key && *f == self.figure)
            .map(|(_, _, n)| *n)
    }
}

const TRADITIONAL: [(&str, u8, &str); 24] = [
    ("AAA", 1, "Barbara"),
    ("EAE", 1, "Celarent"),
    ("AII", 1, "Darii"),
    ("EIO", 1, "Ferio"),
    ("AAI", 1, "Barbari"),
    ("EAO", 1, "Celaront"),
    ("EAE", 2, "Cesare"),
    ("AEE", 2, "Camestres"),
    ("EIO", 2, "Festino"),
    ("AOO", 2, "Baroco"),
    ("EAO", 2, "Cesaro"),
    ("AEO", 2, "Camestros"),
    ("AAI", 3, "Darapti"),
    ("IAI", 3, "Disamis"),
    ("AII", 3, "Datisi"),
    ("EAO", 3, "Felapton"),
    ("OAO", 3, "Bocardo"),
    ("EIO", 3, "Ferison"),
    ("AAI", 4, "Bramantip"),
    ("AEE", 4, "Camenes"),
    ("IAI", 4, "Dimaris"),
    ("EAO", 4, "Fesapo"),
    ("EIO", 4, "Fresison"),
    ("AEO", 4, "Camenos"),
];

impl fmt::Display for Syllogism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let moods: String = self.moods.iter().map(|m| m.letter()).collect();
        write!(f, "{moods}-{}", self.figure)
    }
}

impl FromStr for Syllogism {
    type Err = SyllogismError;

    /// Accepts `AAA-1`, `aaa1` or a traditional name such as `Barbara`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if let Some((m, f, _)) = TRADITIONAL.iter().find(|(_, _, n)| n.eq_ignore_ascii_case(t)) {
            return t_parse(m, *f).ok_or_else(|| SyllogismError(s.to_string()));
        }
        let compact: String = t.chars().filter(|c| *c != '-').collect();
        let mut chars = compact.chars();
        let moods: Option<Vec<Mood>> = chars.by_ref().take(3).map(Mood::from_letter).collect();
        let figure: Option<u8> = chars.as_str().parse().ok();
        match (moods, figure) {
            (Some(m), Some(f)) if m.len() == 3 => Syllogism::new(f, [m[0], m[1], m[2]]),
            _ => Err(SyllogismError(s.to_string())),
        }
    }
}

fn t_parse(moods: &str, figure: u8) -> Option<Syllogism> {
    let m: Vec<Mood> = moods.chars().map(Mood::from_letter).collect::<Option<_>>()?;
    Some(Syllogism { figure, moods: [m[0], m[1], m[2]] })
}

/// Which terms an argument presupposes to be nonempty.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Import {
    /// Modern reading: no term is assumed nonempty.
    #[default]
    None,
    /// The subject of every universal premise is nonempty.
    PremiseSubjects,
    /// `S`, `M` and `P` are all nonempty.
    AllTerms,
}

impl Import {
    pub fn from_flag(existential_import: bool) -> Import {
        if existential_import {
            Import::PremiseSubjects
        } else {
            Import::None
        }
    }
}

fn nonempty(term: &str) -> Formula {
    Formula::exists("x", Formula::pred(term, vec![Term::var("x")]))
}

/// Premises and conclusion as monadic sentences. With existential import every
/// universal premise also asserts that its subject is nonempty.
pub fn syllogism_to_fol(s: &Syllogism, existential_import: bool) -> (Vec<Formula>, Formula) {
    syllogism_to_fol_with(s, Import::from_flag(existential_import))
}

pub fn syllogism_to_fol_with(s: &Syllogism, import: Import) -> (Vec<Formula>, Formula) {
    let mut premises = Vec::new();
    let mut imports = Vec::new();
    for (mood, (subj, pred)) in s.moods[..2].iter().zip(s.premise_terms()) {
        premises.push(mood.sentence(subj, pred));
        if import == Import::PremiseSubjects && mood.is_universal() && !imports.contains(&nonempty(subj)) {
            imports.push(nonempty(subj));
        }
    }
    if import == Import::AllTerms {
        imports.extend(["S", "M", "P"].map(nonempty));
    }
    premises.extend(imports);
    (premises, s.moods[2].sentence("S", "P"))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SyllogismVerdict {
    Valid,
    /// A structure making the premises true and the conclusion false.
    Countermodel(Interpretation),
}

impl SyllogismVerdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, SyllogismVerdict::Valid)
    }
}

/// Decides validity by searching every monadic structure up to
/// [`SYLLOGISM_DOMAIN_BOUND`] elements, one per isomorphism class.
pub fn check_syllogism(s: &Syllogism, existential_import: bool) -> SyllogismVerdict {
    check_syllogism_with(s, Import::from_flag(existential_import))
}

pub fn check_syllogism_with(s: &Syllogism, import: Import) -> SyllogismVerdict {
    let (premises, conclusion) = syllogism_to_fol_with(s, import);
    let preds = ["M".to_string(), "P".to_string(), "S".to_string()];
    let env = Environment::new();
    let holds = |f: &Formula, m: &Interpretation| eval_fol(f, m, &env).expect("closed monadic sentence");
    for n in 1..=SYLLOGISM_DOMAIN_BOUND {
        for m in monadic_structures(&preds, n) {
            if premises.iter().all(|p| holds(p, &m)) && !holds(&conclusion, &m) {
                return SyllogismVerdict::Countermodel(m);
            }
        }
    }
    SyllogismVerdict::Valid
}

/// `Some(true)` when resolution proves the argument, `None` when it gives up.
pub fn certify_syllogism(s: &Syllogism, import: Import) -> Option<bool> {
    let (premises, conclusion) = syllogism_to_fol_with(s, import);
    let claim = Formula::imp(Formula::conjunction(premises), conclusion);
    match prove_valid(&claim, ProverLimits::default()) {
        Ok(o) if o.is_proved() => Some(true),
        _ => None,
    }
}

pub fn count_valid_syllogisms(existential_import: bool) -> usize {
    count_valid_syllogisms_with(Import::from_flag(existential_import))
}

pub fn count_valid_syllogisms_with(import: Import) -> usize {
    Syllogism::all().iter().filter(|s| check_syllogism_with(s, import).is_valid()).count()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn syl(s: &str) -> Syllogism {
        s.parse().unwrap()
    }

    #[test]
    fn barbara_translation() {
        let (premises, conclusion) = syllogism_to_fol(&syl("AAA-1"), false);
        let shown: Vec<String> = premises.iter().map(Formula::to_string).collect();
        assert_eq!(shown, ["forall x. M(x) -> P(x)", "forall x. S(x) -> M(x)"]);
        assert_eq!(conclusion.to_string(), "forall x. S(x) -> P(x)");
    }

    #[test]
    fn particular_premise_translation() {
        let (premises, _) = syllogism_to_fol(&syl("IAI-3"), false);
        assert_eq!(premises[0].to_string(), "exists x. M(x) & P(x)");
    }

    #[test]
    fn darapti_needs_import() {
        let s = syl("Darapti");
        let (premises, _) = syllogism_to_fol(&s, true);
        assert!(premises.iter().any(|p| p.to_string() == "exists x. M(x)"));
        assert!(!check_syllogism(&s, false).is_valid());
        assert!(check_syllogism(&s, true).is_valid());
    }

    #[test]
    fn classic_verdicts() {
        assert!(check_syllogism(&syl("AAA-1"), false).is_valid());
        assert!(matches!(check_syllogism(&syl("AAA-2"), false), SyllogismVerdict::Countermodel(_)));
        assert_eq!(certify_syllogism(&syl("Barbara"), Import::None), Some(true));
    }

    #[test]
    fn camenos_needs_a_nonempty_minor_term() {
        let s = syl("Camenos");
        assert!(!check_syllogism_with(&s, Import::PremiseSubjects).is_valid());
        assert!(check_syllogism_with(&s, Import::AllTerms).is_valid());
    }

    #[test]
    fn parsing() {
        assert_eq!(syl("aaa1"), syl("AAA-1"));
        assert_eq!(syl("Celarent").to_string(), "EAE-1");
        assert!("AAX-1".parse::<Syllogism>().is_err());
        assert!("AAA-5".parse::<Syllogism>().is_err());
        assert_eq!(Syllogism::all().len(), 256);
    }
}
