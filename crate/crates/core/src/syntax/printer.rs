//! Minimal-parenthesis rendering in the ASCII formula grammar.
//!
//! Binding strength from tight to loose: `~`, `&`, `|`, `->`, `<->`. `&` and `|`
//! associate to the left, `->` and `<->` to the right. A quantifier body extends
//! as far right as possible, so a quantifier needs parentheses whenever anything
//! follows it at the same bracket level.

use std::fmt;

use super::formula::Formula;
use super::term::write_args;

const PREC_IFF: u8 = 1;
const PREC_IMP: u8 = 2;
const PREC_OR: u8 = 3;
const PREC_AND: u8 = 4;
const PREC_NOT: u8 = 5;

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_prec(f, self, 0, true)
    }
}

fn write_prec(out: &mut fmt::Formatter<'_>, f: &Formula, min_prec: u8, tail: bool) -> fmt::Result {
    match f {
        Formula::Top => out.write_str("true"),
        Formula::Bottom => out.write_str("false"),
        Formula::Atom(p, args) => {
            out.write_str(p)?;
            if !args.is_empty() {
                out.write_str("(")?;
                write_args(out, args)?;
                out.write_str(")")?;
            }
            Ok(())
        }
        Formula::Not(a) => {
            out.write_str("~")?;
            write_prec(out, a, PREC_NOT, tail)
        }
        Formula::Forall(v, body) | Formula::Exists(v, body) => {
            let kw = if matches!(f, Formula::Forall(..)) { "forall" } else { "exists" };
            if tail {
                write!(out, "{kw} {v}. ")?;
                write_prec(out, body, 0, true)
            } else {
                write!(out, "({kw} {v}. ")?;
                write_prec(out, body, 0, true)?;
                out.write_str(")")
            }
        }
        Formula::And(a, b) => write_binary(out, a, b, " & ", PREC_AND, false, min_prec, tail),
        Formula::Or(a, b) => write_binary(out, a, b, " | ", PREC_OR, false, min_prec, tail),
        Formula::Imp(a, b) => write_binary(out, a, b, " -> ", PREC_IMP, true, min_prec, tail),
        Formula::Iff(a, b) => write_binary(out, a, b, " <-> ", PREC_IFF, true, min_prec, tail),
    }
}

#[allow(clippy::too_many_arguments)]
fn write_binary(
    out: &mut fmt::Formatter<'_>,
    left: &Formula,
    right: &Formula,
    op: &str,
    prec: u8,
    right_assoc: bool,
    min_prec: u8,
    tail: bool,
) -> fmt::Result {
    let parens = prec < min_prec;
    let inner_tail = parens || tail;
    let (left_min, right_min) = if right_assoc { (prec + 1, prec) } else { (prec, prec + 1) };
    if parens {
        out.write_str("(")?;
    }
    write_prec(out, left, left_min, false)?;
    out.write_str(op)?;
    write_prec(out, right, right_min, inner_tail)?;
    if parens {
        out.write_str(")")?;
    }
    Ok(())
}
