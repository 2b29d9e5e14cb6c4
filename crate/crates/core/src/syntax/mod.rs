//! Formula and term syntax: AST, parsing, printing, signatures and substitution.

mod formula;
mod parser;
mod printer;
mod signature;
mod subst;
mod term;

pub use formula::{Formula, Quantifier};
pub use parser::{is_identifier, parse, parse_with_bound, parse_with_signature, ParseError};
pub use signature::{Signature, SignatureError};
pub use subst::{fresh_name, rename_apart, substitute, NameSupply};
pub use term::Term;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prints_minimal_parentheses() {
        let f = Formula::and(
            Formula::prop("p"),
            Formula::or(Formula::prop("q"), Formula::prop("r")),
        );
        assert_eq!(f.to_string(), "p & (q | r)");
        assert_eq!(Formula::not(Formula::prop("p")).to_string(), "~p");
    }

    #[test]
    fn second_formalization_round_trips() {
        let f = parse("exists t. (S(t) & ~T(t) & (C(t) | B(t)))").unwrap();
        assert_eq!(parse(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn quantifier_in_non_tail_position_is_parenthesized() {
        let f = Formula::or(
            Formula::and(Formula::prop("p"), Formula::forall("x", Formula::pred("Q", vec![Term::var("x")]))),
            Formula::prop("r"),
        );
        assert_eq!(f.to_string(), "p & (forall x. Q(x)) | r");
        assert_eq!(parse(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn free_vars_examples() {
        let f = Formula::forall("x", Formula::pred("P", vec![Term::var("x"), Term::var("y")]));
        assert_eq!(f.free_vars().into_iter().collect::<Vec<_>>(), vec!["y".to_string()]);
        let worked = parse("~forall t. ((C(t) | B(t)) & S(t) -> T(t))").unwrap();
        assert!(worked.free_vars().is_empty());
        assert!(Formula::prop("p").free_vars().is_empty());
    }
}
