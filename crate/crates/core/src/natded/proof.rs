use std::fmt;

use super::rules::natded_rules;
use crate::syntax::{parse, Formula, ParseError};

/// A line citation: a single line or a whole subproof `first-last`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ref {
    Line(usize),
    Range(usize, usize),
}

impl fmt::Display for Ref {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ref::Line(n) => write!(f, "{n}"),
            Ref::Range(a, b) => write!(f, "{a}-{b}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofLine {
    pub formula: Formula,
    pub rule: String,
    pub refs: Vec<Ref>,
    /// Subproof nesting; top-level lines have depth 0.
    pub depth: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sequent {
    pub premises: Vec<Formula>,
    pub conclusion: Formula,
}

impl fmt::Display for Sequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ps: Vec<String> = self.premises.iter().map(Formula::to_string).collect();
        if ps.is_empty() {
            write!(f, "|- {}", self.conclusion)
        } else {
            write!(f, "{} |- {}", ps.join(", "), self.conclusion)
        }
    }
}

/// A Fitch-style derivation. Line `k` of the text is `lines[k - 1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Proof {
    /// The sequent from a `goal` header, if the text had one.
    pub goal: Option<Sequent>,
    pub lines: Vec<ProofLine>,
}

impl Proof {
    /// The stated goal, or else the premise lines and the last line.
    pub fn sequent(&self) -> Option<Sequent> {
        if let Some(g) = &self.goal {
            return Some(g.clone());
        }
        let last = self.lines.last()?;
        Some(Sequent {
            premises: self
                .lines
                .iter()
                .filter(|l| l.rule == "premise")
                .map(|l| l.formula.clone())
                .collect(),
            conclusion: last.formula.clone(),
        })
    }
}

impl fmt::Display for Proof {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(g) = &self.goal {
            writeln!(f, "goal {g}")?;
        }
        for (k, l) in self.lines.iter().enumerate() {
            write!(f, "{} {} {} {}", k + 1, "|".repeat(l.depth + 1), l.formula, l.rule)?;
            if !l.refs.is_empty() {
                let refs: Vec<String> = l.refs.iter().map(Ref::to_string).collect();
                write!(f, " {}", refs.join(","))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ProofParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

/// Reads the line format `<num> <bars> <formula> <rule> [<refs>]`, with an
/// optional `goal <premises> |- <conclusion>` header.
///
/// Numbers must run 1, 2, 3, ...; one bar marks the top level, each further
/// bar one subproof level. Depth may grow by one only on an `assume` line and
/// may shrink by at most one per line.
pub fn parse_proof(text: &str) -> Result<Proof, ProofParseError> {
    let rules = natded_rules();
    let mut goal = None;
    let mut lines: Vec<ProofLine> = Vec::new();
    for (no, raw) in text.lines().enumerate() {
        let line_no = no + 1;
        let err = |column: usize, message: String| ProofParseError { line: line_no, column, message };
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let indent = content.len() - content.trim_start().len();
        let body = content.trim();
        if let Some(rest) = body.strip_prefix("goal") {
            if !lines.is_empty() || goal.is_some() {
                return Err(err(indent + 1, "`goal` must be the first line".into()));
            }
            let offset = indent + 4 + (rest.len() - rest.trim_start().len());
            goal = Some(parse_goal(rest.trim(), offset).map_err(|(c, m)| err(c, m))?);
            continue;
        }
        let num_len = body.find(|c: char| !c.is_ascii_digit()).unwrap_or(body.len());
        let number: usize = body[..num_len]
            .parse()
            .map_err(|_| err(indent + 1, "expected a line number".into()))?;
        if number != lines.len() + 1 {
            return Err(err(indent + 1, format!("expected line number {}, found {number}", lines.len() + 1)));
        }
        let after_num = &body[num_len..];
        let bars_region = after_num.len() - after_num.trim_start_matches(|c: char| c == '|' || c.is_whitespace()).len();
        let bars = after_num[..bars_region].chars().filter(|&c| c == '|').count();
        if bars == 0 {
            return Err(err(indent + num_len + 1, "expected `|` depth markers".into()));
        }
        let depth = bars - 1;
        let rest = &after_num[bars_region..];
        let rest_col = indent + num_len + bars_region + 1;
        let spans = token_spans(rest);
        let tokens: Vec<&str> = spans.iter().map(|&(_, t)| t).collect();
        let (rule, refs_tok, formula_end) = match tokens.as_slice() {
            [.., r, refs] if is_refs(refs) => (*r, Some(*refs), tokens.len() - 2),
            [.., r] => (*r, None, tokens.len() - 1),
            [] => return Err(err(rest_col, "expected a formula and a rule".into())),
        };
        if !rules.contains(rule) {
            let col = rest_col + spans[formula_end].0;
            return Err(err(col, format!("unknown rule `{rule}`")));
        }
        if formula_end == 0 {
            return Err(err(rest_col, "missing formula".into()));
        }
        let formula_text = &rest[..spans[formula_end].0];
        let formula = parse(formula_text).map_err(|e| match e {
            ParseError::Syntax { column, message, .. } => err(rest_col + column - 1, message),
            other => err(rest_col, other.to_string()),
        })?;
        let refs = match refs_tok {
            Some(t) => parse_refs(t).ok_or_else(|| err(rest_col, format!("bad references `{t}`")))?,
            None => Vec::new(),
        };
        let prev = lines.last().map_or(0, |l| l.depth);
        if depth > prev + 1 || (depth == prev + 1 && rule != "assume") {
            return Err(err(indent + num_len + 1, "subproof opened without `assume`".into()));
        }
        if depth + 1 < prev {
            return Err(err(indent + num_len + 1, "depth decreases by more than one".into()));
        }
        lines.push(ProofLine { formula, rule: rule.to_string(), refs, depth });
    }
    Ok(Proof { goal, lines })
}

fn parse_goal(text: &str, offset: usize) -> Result<Sequent, (usize, String)> {
    let (left, right) = text
        .split_once("|-")
        .ok_or_else(|| (offset + 1, "expected `|-` in goal".to_string()))?;
    let mut premises = Vec::new();
    for part in split_top_level_commas(left) {
        if part.trim().is_empty() {
            continue;
        }
        premises.push(parse(part).map_err(|e| (offset + 1, e.to_string()))?);
    }
    let col = offset + left.len() + 3;
    let conclusion = parse(right).map_err(|e| (col, e.to_string()))?;
    Ok(Sequent { premises, conclusion })
}

fn split_top_level_commas(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

fn token_spans(s: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in s.char_indices() {
        match (c.is_whitespace(), start) {
            (true, Some(st)) => {
                out.push((st, &s[st..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(st) = start {
        out.push((st, &s[st..]));
    }
    out
}

fn is_refs(s: &str) -> bool {
    parse_refs(s).is_some()
}

fn parse_refs(s: &str) -> Option<Vec<Ref>> {
    s.split(',')
        .map(|part| match part.split_once('-') {
            Some((a, b)) => Some(Ref::Range(a.parse().ok()?, b.parse().ok()?)),
            None => Some(Ref::Line(part.parse().ok()?)),
        })
        .collect()
}
