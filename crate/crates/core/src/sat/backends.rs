use super::dpll::{dpll, SatResult};
use super::SatError;
use crate::bdd::BddManager;
use crate::normalform::ClauseSet;
use crate::registry::{Named, Registry};
use crate::resolution::{resolve_prop, ProverLimits, ResolutionOutcome};
use crate::semantics::{truth_table, Assignment};

/// What a decider concluded about a clause set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// Satisfiable, with a total model when the method produces one.
    Sat(Option<Assignment>),
    Unsat,
    /// The method gave up before deciding.
    Unknown,
}

impl From<SatResult> for Verdict {
    fn from(r: SatResult) -> Self {
        match r {
            SatResult::Sat(m) => Verdict::Sat(Some(m)),
            SatResult::Unsat => Verdict::Unsat,
        }
    }
}

/// A procedure deciding propositional satisfiability.
pub trait SatDecider: Named + Send + Sync {
    fn description(&self) -> &'static str;
    fn decide(&self, cs: &ClauseSet) -> Result<Verdict, SatError>;
}

pub struct Dpll;
pub struct TruthTableDecider;
pub struct BddDecider;
pub struct ResolutionDecider {
    pub limits: ProverLimits,
}

impl Named for Dpll {
    fn name(&self) -> &'static str {
        "dpll"
    }
}

impl SatDecider for Dpll {
    fn description(&self) -> &'static str {
        "backtracking search with unit propagation and pure literals"
    }

    fn decide(&self, cs: &ClauseSet) -> Result<Verdict, SatError> {
        Ok(dpll(cs)?.into())
    }
}

impl Named for TruthTableDecider {
    fn name(&self) -> &'static str {
        "truth-table"
    }
}

impl SatDecider for TruthTableDecider {
    fn description(&self) -> &'static str {
        "enumerates every assignment"
    }

    fn decide(&self, cs: &ClauseSet) -> Result<Verdict, SatError> {
        if !cs.is_propositional() {
            return Err(SatError::NotPropositional);
        }
        let table = truth_table(&cs.to_formula()).map_err(|e| SatError::Backend(e.to_string()))?;
        let model = table.models().next().cloned();
        Ok(match model {
            Some(m) => Verdict::Sat(Some(m)),
            None => Verdict::Unsat,
        })
    }
}

impl Named for BddDecider {
    fn name(&self) -> &'static str {
        "bdd"
    }
}

impl SatDecider for BddDecider {
    fn description(&self) -> &'static str {
        "builds the diagram of the conjunction, atoms in name order"
    }

    fn decide(&self, cs: &ClauseSet) -> Result<Verdict, SatError> {
        if !cs.is_propositional() {
            return Err(SatError::NotPropositional);
        }
        let backend = |e: crate::bdd::BddError| SatError::Backend(e.to_string());
        let mut m = BddManager::with_order(cs.atoms().into_iter().collect()).map_err(backend)?;
        let u = m.build(&cs.to_formula()).map_err(backend)?;
        Ok(match m.any_sat(u).map_err(backend)? {
            Some(a) => Verdict::Sat(Some(a)),
            None => Verdict::Unsat,
        })
    }
}

impl Named for ResolutionDecider {
    fn name(&self) -> &'static str {
        "resolution"
    }
}

impl SatDecider for ResolutionDecider {
    fn description(&self) -> &'static str {
        "saturates under binary resolution; reports no model"
    }

    fn decide(&self, cs: &ClauseSet) -> Result<Verdict, SatError> {
        let out = resolve_prop(cs, self.limits).map_err(|_| SatError::NotPropositional)?;
        Ok(match out {
            ResolutionOutcome::Refuted(_) => Verdict::Unsat,
            ResolutionOutcome::Saturated => Verdict::Sat(None),
            ResolutionOutcome::ResourceOut => Verdict::Unknown,
        })
    }
}

/// All built-in deciders.
pub fn sat_backends() -> Registry<dyn SatDecider> {
    let mut r: Registry<dyn SatDecider> = Registry::new();
    r.register(Box::new(Dpll));
    r.register(Box::new(TruthTableDecider));
    r.register(Box::new(BddDecider));
    r.register(Box::new(ResolutionDecider { limits: ProverLimits::default() }));
    r
}
