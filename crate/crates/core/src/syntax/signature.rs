use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use super::formula::Formula;
use super::term::Term;

/// Symbols of a formula together with their arities.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Signature {
    pub predicates: BTreeMap<String, usize>,
    pub functions: BTreeMap<String, usize>,
    pub constants: BTreeSet<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SignatureError {
    #[error("symbol `{symbol}` used with arity {first} and arity {second}")]
    ArityConflict {
        symbol: String,
        first: usize,
        second: usize,
    },
    #[error("identifier `{symbol}` used both as {first} and as {second}")]
    KindConflict {
        symbol: String,
        first: &'static str,
        second: &'static str,
    },
}

impl Signature {
    /// Extracts the signature of `f`, checking arity and kind consistency.
    pub fn of(f: &Formula) -> Result<Self, SignatureError> {
        let mut sig = Signature::default();
        sig.add_formula(f)?;
        Ok(sig)
    }

    /// Signature covering several formulas at once.
    pub fn of_all<'a>(fs: impl IntoIterator<Item = &'a Formula>) -> Result<Self, SignatureError> {
        let mut sig = Signature::default();
        for f in fs {
            sig.add_formula(f)?;
        }
        Ok(sig)
    }

    pub fn add_formula(&mut self, f: &Formula) -> Result<(), SignatureError> {
        let mut vars = BTreeSet::new();
        let mut result = Ok(());
        f.visit(&mut |g| {
            if result.is_err() {
                return;
            }
            match g {
                Formula::Atom(p, args) => {
                    result = self.add_predicate(p, args.len());
                    for a in args {
                        if result.is_ok() {
                            result = self.add_term(a, &mut vars);
                        }
                    }
                }
                Formula::Forall(v, _) | Formula::Exists(v, _) => {
                    vars.insert(v.clone());
                }
                _ => {}
            }
        });
        result?;
        for v in &vars {
            if self.constants.contains(v) {
                return Err(SignatureError::KindConflict {
                    symbol: v.clone(),
                    first: "a constant",
                    second: "a variable",
                });
            }
        }
        Ok(())
    }

    pub fn add_predicate(&mut self, name: &str, arity: usize) -> Result<(), SignatureError> {
        insert_arity(&mut self.predicates, name, arity)
    }

    fn add_term(&mut self, t: &Term, vars: &mut BTreeSet<String>) -> Result<(), SignatureError> {
        match t {
            Term::Var(v) => {
                vars.insert(v.clone());
                Ok(())
            }
            Term::Const(c) => {
                if self.functions.contains_key(c) {
                    return Err(SignatureError::KindConflict {
                        symbol: c.clone(),
                        first: "a function",
                        second: "a constant",
                    });
                }
                self.constants.insert(c.clone());
                Ok(())
            }
            Term::Func(name, args) => {
                if self.constants.contains(name) {
                    return Err(SignatureError::KindConflict {
                        symbol: name.clone(),
                        first: "a constant",
                        second: "a function",
                    });
                }
                insert_arity(&mut self.functions, name, args.len())?;
                args.iter().try_for_each(|a| self.add_term(a, vars))
            }
        }
    }

    /// Whether every predicate has arity at most one and there are no functions.
    pub fn is_monadic(&self) -> bool {
        self.functions.is_empty() && self.predicates.values().all(|&a| a <= 1)
    }

    /// Merges `other` into `self`, failing on conflicting arities.
    pub fn merge(&mut self, other: &Signature) -> Result<(), SignatureError> {
        for (p, &a) in &other.predicates {
            self.add_predicate(p, a)?;
        }
        for (f, &a) in &other.functions {
            if self.constants.contains(f) {
                return Err(SignatureError::KindConflict {
                    symbol: f.clone(),
                    first: "a constant",
                    second: "a function",
                });
            }
            insert_arity(&mut self.functions, f, a)?;
        }
        for c in &other.constants {
            if self.functions.contains_key(c) {
                return Err(SignatureError::KindConflict {
                    symbol: c.clone(),
                    first: "a function",
                    second: "a constant",
                });
            }
            self.constants.insert(c.clone());
        }
        Ok(())
    }
}

fn insert_arity(
    map: &mut BTreeMap<String, usize>,
    name: &str,
    arity: usize,
) -> Result<(), SignatureError> {
    match map.get(name) {
        Some(&first) if first != arity => Err(SignatureError::ArityConflict {
            symbol: name.to_string(),
            first,
            second: arity,
        }),
        Some(_) => Ok(()),
        None => {
            map.insert(name.to_string(), arity);
            Ok(())
        }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |m: &BTreeMap<String, usize>| -> String {
            if m.is_empty() {
                "-".into()
            } else {
                m.iter().map(|(n, a)| format!("{n}/{a}")).collect::<Vec<_>>().join(", ")
            }
        };
        let consts = if self.constants.is_empty() {
            "-".to_string()
        } else {
            self.constants.iter().cloned().collect::<Vec<_>>().join(", ")
        };
        write!(
            f,
            "predicates: {}; functions: {}; constants: {}",
            list(&self.predicates),
            list(&self.functions),
            consts
        )
    }
}
