use std::collections::BTreeSet;

use super::enumerate::{enumerate_interpretations, tuples, DEFAULT_INTERPRETATION_CAP};
use super::model::{eval_fol, Environment, Interpretation};
use super::SemanticsError;
use crate::syntax::{Formula, Signature};

/// Outcome of a bounded semantic equivalence check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Equivalence {
    /// The formulas agree on every interpretation with domain size up to the bound.
    EquivalentUpTo(usize),
    /// An interpretation and variable environment on which the formulas differ.
    Countermodel(Interpretation, Environment),
}

impl Equivalence {
    pub fn is_equivalent(&self) -> bool {
        matches!(self, Equivalence::EquivalentUpTo(_))
    }
}

/// Compares `f1` and `f2` on every interpretation of their joint signature
/// with domain sizes `1..=max_n`, smallest domains first.
///
/// Free variables are treated as additional parameters and range over the
/// domain as well.
pub fn equiv_finite(f1: &Formula, f2: &Formula, max_n: usize) -> Result<Equivalence, SemanticsError> {
    equiv_finite_with_cap(f1, f2, max_n, DEFAULT_INTERPRETATION_CAP)
}

pub fn equiv_finite_with_cap(
    f1: &Formula,
    f2: &Formula,
    max_n: usize,
    cap: u128,
) -> Result<Equivalence, SemanticsError> {
    let sig = Signature::of_all([f1, f2])?;
    let free: Vec<String> = f1.free_vars().union(&f2.free_vars()).cloned().collect();
    for n in 1..=max_n {
        let envs: Vec<Environment> = tuples(n, free.len())
            .into_iter()
            .map(|vals| free.iter().cloned().zip(vals).collect())
            .collect();
        for m in enumerate_interpretations(&sig, n, cap)? {
            for env in &envs {
                if eval_fol(f1, &m, env)? != eval_fol(f2, &m, env)? {
                    return Ok(Equivalence::Countermodel(m, env.clone()));
                }
            }
        }
    }
    Ok(Equivalence::EquivalentUpTo(max_n))
}

/// Searches for a model of `f` over domains `1..=max_n`.
pub fn find_model(f: &Formula, max_n: usize) -> Result<Option<Interpretation>, SemanticsError> {
    let sig = Signature::of(f)?;
    if !f.is_sentence() {
        let free: BTreeSet<String> = f.free_vars();
        return Err(SemanticsError::UnboundVariable(free.into_iter().next().unwrap_or_default()));
    }
    for n in 1..=max_n {
        for m in enumerate_interpretations(&sig, n, DEFAULT_INTERPRETATION_CAP)? {
            if eval_fol(f, &m, &Environment::new())? {
                return Ok(Some(m));
            }
        }
    }
    Ok(None)
}
