use super::{Atom, DatalogError, Program, Rule};
use crate::syntax::Term;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    LParen,
    RParen,
    Comma,
    Dot,
    If,
}

struct Lexed {
    toks: Vec<(Tok, usize, usize)>,
    end: (usize, usize),
}

fn lex(text: &str) -> Result<Lexed, DatalogError> {
    let mut toks = Vec::new();
    let mut end = (1, 1);
    for (l, line) in text.lines().enumerate() {
        let chars: Vec<char> = line.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let pos = (l + 1, i + 1);
            match c {
                '%' | '#' => break,
                c if c.is_whitespace() => {
                    i += 1;
                    continue;
                }
                '(' => toks.push((Tok::LParen, pos.0, pos.1)),
                ')' => toks.push((Tok::RParen, pos.0, pos.1)),
                ',' => toks.push((Tok::Comma, pos.0, pos.1)),
                '.' => toks.push((Tok::Dot, pos.0, pos.1)),
                ':' if chars.get(i + 1) == Some(&'-') => {
                    toks.push((Tok::If, pos.0, pos.1));
                    i += 1;
                }
                c if c.is_alphanumeric() || c == '_' => {
                    let start = i;
                    while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                        i += 1;
                    }
                    toks.push((Tok::Ident(chars[start..i].iter().collect()), pos.0, pos.1));
                    continue;
                }
                other => {
                    return Err(DatalogError::Parse {
                        line: pos.0,
                        column: pos.1,
                        message: format!("unexpected character `{other}`"),
                    })
                }
            }
            i += 1;
        }
        end = (l + 1, chars.len() + 1);
    }
    Ok(Lexed { toks, end })
}

struct Parser {
    lexed: Lexed,
    pos: usize,
    anonymous: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.lexed.toks.get(self.pos).map(|t| &t.0)
    }

    fn error(&self, message: impl Into<String>) -> DatalogError {
        let (line, column) = match self.lexed.toks.get(self.pos) {
            Some(&(_, l, c)) => (l, c),
            None => self.lexed.end,
        };
        DatalogError::Parse { line, column, message: message.into() }
    }

    fn expect(&mut self, t: Tok, what: &str) -> Result<(), DatalogError> {
        if self.peek() == Some(&t) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected {what}")))
        }
    }

    fn ident(&mut self, what: &str) -> Result<String, DatalogError> {
        match self.peek() {
            Some(Tok::Ident(s)) => {
                let s = s.clone();
                self.pos += 1;
                Ok(s)
            }
            _ => Err(self.error(format!("expected {what}"))),
        }
    }

    fn term(&mut self) -> Result<Term, DatalogError> {
        let name = self.ident("a variable or constant")?;
        if self.peek() == Some(&Tok::LParen) {
            return Err(DatalogError::FunctionSymbol(name));
        }
        if name == "_" {
            self.anonymous += 1;
            return Ok(Term::Var(format!("_{}", self.anonymous)));
        }
        let first = name.chars().next().expect("identifiers are non-empty");
        Ok(if first.is_uppercase() || first == '_' { Term::Var(name) } else { Term::Const(name) })
    }

    fn atom(&mut self) -> Result<Atom, DatalogError> {
        let pred = self.ident("a predicate")?;
        if pred.starts_with(|c: char| c.is_uppercase() || c == '_') {
            self.pos -= 1;
            return Err(self.error(format!("predicate `{pred}` must start with a lowercase letter")));
        }
        let mut args = Vec::new();
        if self.peek() == Some(&Tok::LParen) {
            self.pos += 1;
            loop {
                args.push(self.term()?);
                match self.peek() {
                    Some(Tok::Comma) => self.pos += 1,
                    Some(Tok::RParen) => {
                        self.pos += 1;
                        break;
                    }
                    _ => return Err(self.error("expected `,` or `)`")),
                }
            }
        }
        Atom::new(pred, args)
    }

    fn clause(&mut self) -> Result<Rule, DatalogError> {
        let head = self.atom()?;
        let mut body = Vec::new();
        if self.peek() == Some(&Tok::If) {
            self.pos += 1;
            loop {
                body.push(self.atom()?);
                if self.peek() == Some(&Tok::Comma) {
                    self.pos += 1;
                } else {
                    break;
                }
            }
        }
        self.expect(Tok::Dot, "`.`")?;
        Ok(Rule { head, body })
    }
}

/// Parses `fact.` and `head :- b1, .., bn.` clauses. Identifiers starting
/// with an uppercase letter or `_` are variables; `%` and `#` start comments.
pub fn parse_program(text: &str) -> Result<Program, DatalogError> {
    let mut p = Parser { lexed: lex(text)?, pos: 0, anonymous: 0 };
    let mut facts = Vec::new();
    let mut rules = Vec::new();
    while p.peek().is_some() {
        let r = p.clause()?;
        if r.body.is_empty() && r.head.is_ground() {
            facts.push(r.head);
        } else {
            rules.push(r);
        }
    }
    Program::new(facts, rules)
}

/// Parses a single atom such as a query, with an optional trailing `.`.
pub fn parse_atom(text: &str) -> Result<Atom, DatalogError> {
    let mut p = Parser { lexed: lex(text)?, pos: 0, anonymous: 0 };
    let a = p.atom()?;
    if p.peek() == Some(&Tok::Dot) {
        p.pos += 1;
    }
    if p.peek().is_some() {
        return Err(p.error("unexpected input after the atom"));
    }
    Ok(a)
}
