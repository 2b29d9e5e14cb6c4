//! Truth tables, finite first-order models and brute-force semantic checks.

mod enumerate;
mod equiv;
mod model;
mod prop;

pub use enumerate::{
    enumerate_interpretations, interpretation_count, monadic_structures, tuples, Interpretations,
    MonadicStructures, DEFAULT_INTERPRETATION_CAP,
};
pub use equiv::{equiv_finite, equiv_finite_with_cap, find_model, Equivalence};
pub use model::{eval_fol, parse_interpretation, render_countermodel, Environment, Interpretation};
pub use prop::{eval_prop, truth_table, Assignment, TruthTable, MAX_TABLE_ATOMS};

use crate::syntax::SignatureError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SemanticsError {
    #[error("formula is not propositional")]
    NotPropositional,
    #[error("assignment has no value for atom `{0}`")]
    MissingAtom(String),
    #[error("{atoms} atoms exceed the truth-table limit of {limit}")]
    TooManyAtoms { atoms: usize, limit: usize },
    #[error("interpretation does not cover symbol `{0}`")]
    UncoveredSymbol(String),
    #[error("variable `{0}` has no value")]
    UnboundVariable(String),
    #[error("domain must be non-empty")]
    EmptyDomain,
    #[error("more than {cap} interpretations at domain size {domain_size}")]
    CapExceeded { domain_size: usize, cap: u128 },
    #[error("malformed model: {0}")]
    BadModel(String),
    #[error(transparent)]
    Signature(#[from] SignatureError),
}
