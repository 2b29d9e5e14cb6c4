//! Normal forms: NNF, CNF/DNF by distribution, Tseitin, prenex, Skolem and clausal form.

mod clause;
mod cnf;
mod dimacs;
mod nnf;
mod prenex;
mod tseitin;

pub use clause::{prop_clauses, Clause, ClauseSet, FreshSymbols, Literal};
pub use cnf::{
    cnf_clauses, cnf_distributive, cnf_with_limit, dnf, dnf_terms, dnf_with_limit,
    DEFAULT_NODE_LIMIT,
};
pub use dimacs::{parse_dimacs, to_dimacs};
pub use nnf::{is_nnf, nnf};
pub use prenex::{clausify, is_horn, prenex, skolemize, split_prefix};
pub use tseitin::tseitin;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NormalFormError {
    #[error("formula is not propositional")]
    NotPropositional,
    #[error("formula contains quantifiers")]
    NotQuantifierFree,
    #[error("formula has free variables: {}", .0.join(", "))]
    NotSentence(Vec<String>),
    #[error("normal form exceeds {limit} literal occurrences")]
    ResourceLimit { limit: usize },
    #[error("DIMACS line {line}: {message}")]
    Dimacs { line: usize, message: String },
}
