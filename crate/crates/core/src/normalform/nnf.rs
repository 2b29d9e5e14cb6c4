use crate::syntax::Formula;

/// Negation normal form.
///
/// `a <-> b` is first read as `(a -> b) & (b -> a)` and `a -> b` as `~a | b`;
/// negations are then pushed inward through connectives and quantifiers.
/// Operand order and the binary shape are kept.
pub fn nnf(f: &Formula) -> Formula {
    pos(f)
}

fn pos(f: &Formula) -> Formula {
    match f {
        Formula::Top | Formula::Bottom | Formula::Atom(..) => f.clone(),
        Formula::Not(a) => neg(a),
        Formula::And(a, b) => Formula::and(pos(a), pos(b)),
        Formula::Or(a, b) => Formula::or(pos(a), pos(b)),
        Formula::Imp(a, b) => Formula::or(neg(a), pos(b)),
        Formula::Iff(a, b) => Formula::and(
            Formula::or(neg(a), pos(b)),
            Formula::or(neg(b), pos(a)),
        ),
        Formula::Forall(v, a) => Formula::forall(v.clone(), pos(a)),
        Formula::Exists(v, a) => Formula::exists(v.clone(), pos(a)),
    }
}

fn neg(f: &Formula) -> Formula {
    match f {
        Formula::Top => Formula::Bottom,
        Formula::Bottom => Formula::Top,
        Formula::Atom(..) => Formula::not(f.clone()),
        Formula::Not(a) => pos(a),
        Formula::And(a, b) => Formula::or(neg(a), neg(b)),
        Formula::Or(a, b) => Formula::and(neg(a), neg(b)),
        Formula::Imp(a, b) => Formula::and(pos(a), neg(b)),
        // ~((a -> b) & (b -> a))
        Formula::Iff(a, b) => Formula::or(
            Formula::and(pos(a), neg(b)),
            Formula::and(pos(b), neg(a)),
        ),
        Formula::Forall(v, a) => Formula::exists(v.clone(), neg(a)),
        Formula::Exists(v, a) => Formula::forall(v.clone(), neg(a)),
    }
}

/// True when `f` has no `->`/`<->` and negation only applies to atoms.
pub fn is_nnf(f: &Formula) -> bool {
    match f {
        Formula::Top | Formula::Bottom | Formula::Atom(..) => true,
        Formula::Not(a) => a.is_atom(),
        Formula::And(a, b) | Formula::Or(a, b) => is_nnf(a) && is_nnf(b),
        Formula::Imp(..) | Formula::Iff(..) => false,
        Formula::Forall(_, a) | Formula::Exists(_, a) => is_nnf(a),
    }
}
