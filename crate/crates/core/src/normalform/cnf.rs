use super::nnf::nnf;
use super::NormalFormError;
use crate::syntax::Formula;

/// Default bound on literal occurrences produced by distribution.
pub const DEFAULT_NODE_LIMIT: usize = 1_000_000;

/// Conjunctive normal form by NNF followed by distribution of `|` over `&`.
pub fn cnf_distributive(f: &Formula) -> Result<Formula, NormalFormError> {
    cnf_with_limit(f, DEFAULT_NODE_LIMIT)
}

pub fn cnf_with_limit(f: &Formula, limit: usize) -> Result<Formula, NormalFormError> {
    let clauses = cnf_clauses(f, limit)?;
    Ok(Formula::conjunction(clauses.into_iter().map(Formula::disjunction)))
}

/// Disjunctive normal form by NNF followed by distribution of `&` over `|`.
pub fn dnf(f: &Formula) -> Result<Formula, NormalFormError> {
    dnf_with_limit(f, DEFAULT_NODE_LIMIT)
}

pub fn dnf_with_limit(f: &Formula, limit: usize) -> Result<Formula, NormalFormError> {
    let terms = dnf_terms(f, limit)?;
    Ok(Formula::disjunction(terms.into_iter().map(Formula::conjunction)))
}

/// The clauses of the distributive CNF, each a list of literal formulas.
pub fn cnf_clauses(f: &Formula, limit: usize) -> Result<Vec<Vec<Formula>>, NormalFormError> {
    if !f.is_quantifier_free() {
        return Err(NormalFormError::NotQuantifierFree);
    }
    distribute(&nnf(f), true, limit)
}

/// The conjunctive terms of the distributive DNF.
pub fn dnf_terms(f: &Formula, limit: usize) -> Result<Vec<Vec<Formula>>, NormalFormError> {
    if !f.is_quantifier_free() {
        return Err(NormalFormError::NotQuantifierFree);
    }
    distribute(&nnf(f), false, limit)
}

// With `cnf` set the result is a list of disjunctions, otherwise a list of
// conjunctions.
fn distribute(f: &Formula, cnf: bool, limit: usize) -> Result<Vec<Vec<Formula>>, NormalFormError> {
    let (unit, zero) = if cnf { (Formula::Top, Formula::Bottom) } else { (Formula::Bottom, Formula::Top) };
    Ok(match f {
        _ if *f == unit => Vec::new(),
        _ if *f == zero => vec![Vec::new()],
        Formula::And(a, b) | Formula::Or(a, b) => {
            let outer = matches!(f, Formula::And(..)) == cnf;
            let left = distribute(a, cnf, limit)?;
            let right = distribute(b, cnf, limit)?;
            if outer {
                let size: usize = left.iter().chain(&right).map(Vec::len).sum();
                if size > limit {
                    return Err(NormalFormError::ResourceLimit { limit });
                }
                let mut all = left;
                all.extend(right);
                all
            } else {
                let size: usize = left.iter().map(Vec::len).sum::<usize>() * right.len()
                    + right.iter().map(Vec::len).sum::<usize>() * left.len();
                if size > limit {
                    return Err(NormalFormError::ResourceLimit { limit });
                }
                let mut out = Vec::with_capacity(left.len() * right.len());
                for l in &left {
                    for r in &right {
                        let mut merged = l.clone();
                        for lit in r {
                            if !merged.contains(lit) {
                                merged.push(lit.clone());
                            }
                        }
                        out.push(merged);
                    }
                }
                out
            }
        }
        _ => vec![vec![f.clone()]],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse;

    fn c(s: &str) -> String {
        cnf_distributive(&parse(s).unwrap()).unwrap().to_string()
    }

    #[test]
    fn distributes_once() {
        assert_eq!(c("p | (q & r)"), "(p | q) & (p | r)");
    }

    #[test]
    fn cnf_input_unchanged() {
        let f = parse("(p | q) & r").unwrap();
        assert_eq!(cnf_distributive(&f).unwrap(), f);
    }

    #[test]
    fn duplicate_literals_removed() {
        assert_eq!(c("(p & q) | p"), "p & (q | p)");
        assert_eq!(c("p | p"), "p");
    }

    #[test]
    fn constants() {
        assert_eq!(c("p | true"), "true");
        assert_eq!(c("p & false"), "p & false");
        assert_eq!(c("false"), "false");
    }

    #[test]
    fn dnf_dual() {
        let f = parse("(p | q) & r").unwrap();
        assert_eq!(dnf(&f).unwrap().to_string(), "p & r | q & r");
    }

    #[test]
    fn blow_up_is_guarded() {
        let parts = (0..20).map(|i| {
            Formula::and(Formula::prop(format!("a{i}")), Formula::prop(format!("b{i}")))
        });
        let f = Formula::disjunction(parts);
        assert!(matches!(cnf_distributive(&f), Err(NormalFormError::ResourceLimit { .. })));
    }

    #[test]
    fn long_conjunctions_are_guarded() {
        let f = Formula::conjunction((0..40).map(|i| Formula::prop(format!("a{i}"))));
        assert!(cnf_with_limit(&f, 40).is_ok());
        assert!(matches!(cnf_with_limit(&f, 39), Err(NormalFormError::ResourceLimit { limit: 39 })));
        assert!(matches!(dnf_with_limit(&Formula::not(f), 39), Err(NormalFormError::ResourceLimit { .. })));
    }

    #[test]
    fn quantifiers_rejected() {
        let f = parse("forall x. P(x)").unwrap();
        assert_eq!(cnf_distributive(&f), Err(NormalFormError::NotQuantifierFree));
    }
}
