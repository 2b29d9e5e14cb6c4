//! Exhaustive enumeration of finite interpretations.

use std::collections::{BTreeMap, BTreeSet};

use super::model::Interpretation;
use super::SemanticsError;
use crate::syntax::Signature;

/// Default bound on the number of interpretations enumerated for one domain size.
pub const DEFAULT_INTERPRETATION_CAP: u128 = 1 << 24;

/// All tuples of width `arity` over `{0..n}` in lexicographic order.
pub fn tuples(n: usize, arity: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..arity {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..n).map(move |d| {
                    let mut t = prefix.clone();
                    t.push(d);
                    t
                })
            })
            .collect();
    }
    out
}

#[derive(Debug, Clone)]
enum Slot {
    /// Membership of one tuple in a predicate extension.
    Pred(String, Vec<usize>),
    /// Value of a function at one argument tuple.
    Func(String, Vec<usize>),
    Const(String),
}

/// Number of interpretations of `sig` over a domain of size `n`, if it fits in `u128`.
pub fn interpretation_count(sig: &Signature, n: usize) -> Option<u128> {
    let n128 = n as u128;
    let mut total: u128 = 1;
    for &arity in sig.predicates.values() {
        let cells = u32::try_from(n128.checked_pow(arity as u32)?).ok()?;
        total = total.checked_mul(2u128.checked_pow(cells)?)?;
    }
    for &arity in sig.functions.values() {
        let cells = u32::try_from(n128.checked_pow(arity as u32)?).ok()?;
        total = total.checked_mul(n128.checked_pow(cells)?)?;
    }
    for _ in &sig.constants {
        total = total.checked_mul(n128)?;
    }
    Some(total)
}

/// Deterministic stream over every interpretation of `sig` with domain `{0..n}`.
///
/// The interpretation is read off a mixed-radix counter whose digits are, in
/// order: one binary digit per (predicate, tuple), one base-`n` digit per
/// (function, tuple), and one base-`n` digit per constant; symbols sorted by
/// name, tuples lexicographic. The first digit varies fastest.
#[derive(Debug, Clone)]
pub struct Interpretations {
    n: usize,
    slots: Vec<Slot>,
    radix: Vec<usize>,
    digits: Vec<usize>,
    predicates: Vec<String>,
    done: bool,
}

/// Enumerates interpretations, refusing when there are more than `cap`.
pub fn enumerate_interpretations(
    sig: &Signature,
    n: usize,
    cap: u128,
) -> Result<Interpretations, SemanticsError> {
    if n == 0 {
        return Err(SemanticsError::EmptyDomain);
    }
    match interpretation_count(sig, n) {
        Some(c) if c <= cap => {}
        _ => return Err(SemanticsError::CapExceeded { domain_size: n, cap }),
    }
    let mut slots = Vec::new();
    let mut radix = Vec::new();
    for (p, &arity) in &sig.predicates {
        for t in tuples(n, arity) {
            slots.push(Slot::Pred(p.clone(), t));
            radix.push(2);
        }
    }
    for (f, &arity) in &sig.functions {
        for t in tuples(n, arity) {
            slots.push(Slot::Func(f.clone(), t));
            radix.push(n);
        }
    }
    for c in &sig.constants {
        slots.push(Slot::Const(c.clone()));
        radix.push(n);
    }
    Ok(Interpretations {
        n,
        digits: vec![0; slots.len()],
        slots,
        radix,
        predicates: sig.predicates.keys().cloned().collect(),
        done: false,
    })
}

impl Interpretations {
    fn current(&self) -> Interpretation {
        let mut m = Interpretation::new(self.n);
        for p in &self.predicates {
            m.predicates.insert(p.clone(), BTreeSet::new());
        }
        for (slot, &d) in self.slots.iter().zip(&self.digits) {
            match slot {
                Slot::Pred(p, t) => {
                    if d == 1 {
                        m.predicates.get_mut(p).expect("declared").insert(t.clone());
                    }
                }
                Slot::Func(f, t) => {
                    m.functions.entry(f.clone()).or_default().insert(t.clone(), d);
                }
                Slot::Const(c) => {
                    m.constants.insert(c.clone(), d);
                }
            }
        }
        m
    }

    fn advance(&mut self) {
        for (digit, &radix) in self.digits.iter_mut().zip(&self.radix) {
            *digit += 1;
            if *digit < radix {
                return;
            }
            *digit = 0;
        }
        self.done = true;
    }
}

impl Iterator for Interpretations {
    type Item = Interpretation;

    fn next(&mut self) -> Option<Interpretation> {
        if self.done {
            return None;
        }
        let m = self.current();
        self.advance();
        Some(m)
    }
}

/// Monadic structures of size `n` over `predicates`, one per isomorphism class.
///
/// Each element is assigned a type (the subset of predicates it satisfies) and
/// types are non-decreasing along the domain, so every monadic structure is
/// isomorphic to exactly one yielded structure.
pub fn monadic_structures(predicates: &[String], n: usize) -> MonadicStructures {
    MonadicStructures {
        predicates: predicates.to_vec(),
        types: 1usize << predicates.len(),
        current: if n == 0 { None } else { Some(vec![0; n]) },
    }
}

#[derive(Debug, Clone)]
pub struct MonadicStructures {
    predicates: Vec<String>,
    types: usize,
    current: Option<Vec<usize>>,
}

impl Iterator for MonadicStructures {
    type Item = Interpretation;

    fn next(&mut self) -> Option<Interpretation> {
        let cur = self.current.as_mut()?;
        let n = cur.len();
        let mut m = Interpretation::new(n);
        let mut ext: BTreeMap<String, BTreeSet<Vec<usize>>> =
            self.predicates.iter().map(|p| (p.clone(), BTreeSet::new())).collect();
        for (elem, &ty) in cur.iter().enumerate() {
            for (j, p) in self.predicates.iter().enumerate() {
                if ty >> j & 1 == 1 {
                    ext.get_mut(p).expect("declared").insert(vec![elem]);
                }
            }
        }
        m.predicates = ext;
        // next non-decreasing sequence
        let mut i = n;
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            if cur[i] + 1 < self.types {
                let v = cur[i] + 1;
                cur[i..].iter_mut().for_each(|x| *x = v);
                break;
            }
        }
        Some(m)
    }
}
