//! Propositional satisfiability: DPLL, model enumeration and interchangeable deciders.

mod backends;
mod dpll;

pub use backends::{
    sat_backends, BddDecider, Dpll, ResolutionDecider, SatDecider, TruthTableDecider, Verdict,
};
pub use dpll::{dpll, dpll_with_stats, enumerate_models, satisfies, DpllStats, SatResult};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SatError {
    #[error("clause set is not propositional")]
    NotPropositional,
    #[error("{0}")]
    Backend(String),
}
