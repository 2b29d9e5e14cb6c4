//! Unification and resolution: refutation search, validity and equivalence proving.

mod prover;
mod unify;

pub use prover::{
    is_variant, resolve_fol, subsumes, variant_apart, Justification, ProofStep, ProverLimits,
    RefutationProof, ResolutionOutcome,
};
pub use unify::{match_term, unify, unify_args, unify_into, Substitution, UnifyFailure};

use crate::normalform::{clausify, ClauseSet, NormalFormError};
use crate::syntax::{Formula, Signature};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ResolutionError {
    #[error("clause set is not propositional")]
    NotPropositional,
    #[error(transparent)]
    NormalForm(#[from] NormalFormError),
}

/// Propositional resolution; the same saturation loop restricted to ground clauses.
pub fn resolve_prop(cs: &ClauseSet, lim: ProverLimits) -> Result<ResolutionOutcome, ResolutionError> {
    if !cs.is_propositional() {
        return Err(ResolutionError::NotPropositional);
    }
    Ok(resolve_fol(cs, lim))
}

/// Why a validity proof was not found.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnknownReason {
    Saturated,
    ResourceOut,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProofOutcome {
    Proved(RefutationProof),
    Unknown(UnknownReason),
}

impl ProofOutcome {
    pub fn is_proved(&self) -> bool {
        matches!(self, ProofOutcome::Proved(_))
    }
}

/// The clauses refuted when proving `f` valid.
pub fn negated_clauses(f: &Formula) -> Result<ClauseSet, ResolutionError> {
    Ok(clausify(&Formula::not(f.clone()))?)
}

/// Proves a sentence valid by refuting the clausal form of its negation.
pub fn prove_valid(f: &Formula, lim: ProverLimits) -> Result<ProofOutcome, ResolutionError> {
    let cs = negated_clauses(f)?;
    Ok(match resolve_fol(&cs, lim) {
        ResolutionOutcome::Refuted(p) => ProofOutcome::Proved(p),
        ResolutionOutcome::Saturated => ProofOutcome::Unknown(UnknownReason::Saturated),
        ResolutionOutcome::ResourceOut => ProofOutcome::Unknown(UnknownReason::ResourceOut),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EquivOutcome {
    /// Refutations of `~(f1 -> f2)` and `~(f2 -> f1)`.
    Equivalent(RefutationProof, RefutationProof),
    Unknown { forward: ProofOutcome, backward: ProofOutcome },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivReport {
    pub outcome: EquivOutcome,
    /// Set when the two sentences do not use the same symbols.
    pub warning: Option<String>,
}

/// Proves `f1 <-> f2` as two separate implications.
pub fn prove_equiv(f1: &Formula, f2: &Formula, lim: ProverLimits) -> Result<EquivReport, ResolutionError> {
    let forward = prove_valid(&Formula::imp(f1.clone(), f2.clone()), lim)?;
    let backward = prove_valid(&Formula::imp(f2.clone(), f1.clone()), lim)?;
    let warning = signature_mismatch(f1, f2);
    let outcome = match (forward, backward) {
        (ProofOutcome::Proved(a), ProofOutcome::Proved(b)) => EquivOutcome::Equivalent(a, b),
        (forward, backward) => EquivOutcome::Unknown { forward, backward },
    };
    Ok(EquivReport { outcome, warning })
}

fn signature_mismatch(f1: &Formula, f2: &Formula) -> Option<String> {
    let (Ok(a), Ok(b)) = (Signature::of(f1), Signature::of(f2)) else {
        return Some("formulas use a symbol with inconsistent arities".into());
    };
    if a == b {
        None
    } else {
        Some(format!("signatures differ: [{a}] vs [{b}]"))
    }
}
