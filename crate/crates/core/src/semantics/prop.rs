use std::collections::BTreeMap;
use std::fmt;

use super::SemanticsError;
use crate::syntax::Formula;

/// Truth values for zero-arity atoms.
pub type Assignment = BTreeMap<String, bool>;

/// Largest number of atoms a truth table will enumerate.
pub const MAX_TABLE_ATOMS: usize = 24;

/// Two-valued evaluation of a propositional formula.
pub fn eval_prop(f: &Formula, a: &Assignment) -> Result<bool, SemanticsError> {
    Ok(match f {
        Formula::Top => true,
        Formula::Bottom => false,
        Formula::Atom(p, args) => {
            if !args.is_empty() {
                return Err(SemanticsError::NotPropositional);
            }
            *a.get(p).ok_or_else(|| SemanticsError::MissingAtom(p.clone()))?
        }
        Formula::Not(x) => !eval_prop(x, a)?,
        Formula::And(x, y) => eval_prop(x, a)? & eval_prop(y, a)?,
        Formula::Or(x, y) => eval_prop(x, a)? | eval_prop(y, a)?,
        Formula::Imp(x, y) => !eval_prop(x, a)? | eval_prop(y, a)?,
        Formula::Iff(x, y) => eval_prop(x, a)? == eval_prop(y, a)?,
        Formula::Forall(..) | Formula::Exists(..) => return Err(SemanticsError::NotPropositional),
    })
}

/// All rows of a truth table, atoms sorted by name, first atom varying slowest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruthTable {
    pub formula: Formula,
    pub atoms: Vec<String>,
    pub rows: Vec<(Assignment, bool)>,
}

impl TruthTable {
    pub fn model_count(&self) -> usize {
        self.rows.iter().filter(|(_, v)| *v).count()
    }

    pub fn is_valid(&self) -> bool {
        self.rows.iter().all(|(_, v)| *v)
    }

    pub fn is_satisfiable(&self) -> bool {
        self.rows.iter().any(|(_, v)| *v)
    }

    pub fn models(&self) -> impl Iterator<Item = &Assignment> {
        self.rows.iter().filter(|(_, v)| *v).map(|(a, _)| a)
    }
}

/// Enumerates the truth table of a propositional formula.
pub fn truth_table(f: &Formula) -> Result<TruthTable, SemanticsError> {
    if !f.is_propositional() {
        return Err(SemanticsError::NotPropositional);
    }
    let atoms: Vec<String> = f.atoms().into_iter().collect();
    let k = atoms.len();
    if k > MAX_TABLE_ATOMS {
        return Err(SemanticsError::TooManyAtoms { atoms: k, limit: MAX_TABLE_ATOMS });
    }
    let mut rows = Vec::with_capacity(1 << k);
    for i in 0..(1usize << k) {
        let a: Assignment = atoms
            .iter()
            .enumerate()
            .map(|(j, name)| (name.clone(), (i >> (k - 1 - j)) & 1 == 1))
            .collect();
        let v = eval_prop(f, &a)?;
        rows.push((a, v));
    }
    Ok(TruthTable { formula: f.clone(), atoms, rows })
}

impl fmt::Display for TruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let result = self.formula.to_string();
        let mut header: Vec<String> = self.atoms.clone();
        header.push("|".into());
        header.push(result.clone());
        writeln!(f, "{}", header.join(" "))?;
        let atoms_width: usize = self.atoms.iter().map(|a| a.len() + 1).sum();
        writeln!(f, "{}+{}", "-".repeat(atoms_width), "-".repeat(result.len() + 1))?;
        for (a, v) in &self.rows {
            let mut cells: Vec<String> = self
                .atoms
                .iter()
                .map(|name| format!("{:<width$}", tf(a[name]), width = name.len()))
                .collect();
            cells.push("|".into());
            cells.push(tf(*v).into());
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

fn tf(v: bool) -> &'static str {
    if v {
        "T"
    } else {
        "F"
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse;

    fn assign(pairs: &[(&str, bool)]) -> Assignment {
        pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
    }

    #[test]
    fn eval_examples() {
        let f = parse("p & q").unwrap();
        assert!(!eval_prop(&f, &assign(&[("p", true), ("q", false)])).unwrap());
        let g = parse("p -> q").unwrap();
        assert!(eval_prop(&g, &assign(&[("p", false), ("q", false)])).unwrap());
        let h = parse("p | ~p").unwrap();
        assert!(eval_prop(&h, &assign(&[("p", false)])).unwrap());
        assert!(eval_prop(&h, &assign(&[("p", true)])).unwrap());
    }

    #[test]
    fn missing_atom_is_reported() {
        let f = parse("p & q").unwrap();
        assert_eq!(
            eval_prop(&f, &assign(&[("p", true)])),
            Err(SemanticsError::MissingAtom("q".into()))
        );
    }

    #[test]
    fn table_counts() {
        assert_eq!(truth_table(&parse("p & q").unwrap()).unwrap().model_count(), 1);
        assert_eq!(truth_table(&parse("p <-> q").unwrap()).unwrap().model_count(), 2);
    }

    #[test]
    fn table_order_is_lexicographic_false_first() {
        let t = truth_table(&parse("q | p").unwrap()).unwrap();
        assert_eq!(t.atoms, vec!["p", "q"]);
        let order: Vec<(bool, bool)> = t.rows.iter().map(|(a, _)| (a["p"], a["q"])).collect();
        assert_eq!(order, vec![(false, false), (false, true), (true, false), (true, true)]);
    }

    #[test]
    fn too_many_atoms_guard() {
        let f = Formula::conjunction((0..25).map(|i| Formula::prop(format!("a{i}"))));
        assert!(matches!(truth_table(&f), Err(SemanticsError::TooManyAtoms { .. })));
    }

    #[test]
    fn renders_aligned_table() {
        let t = truth_table(&parse("p & q").unwrap()).unwrap();
        let expected = "p q | p & q\n----+------\nF F | F\nF T | F\nT F | F\nT T | T\n";
        assert_eq!(t.to_string(), expected);
    }
}
