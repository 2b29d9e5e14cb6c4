use std::collections::BTreeMap;
use std::fmt::Write;

use super::clause::{Clause, ClauseSet, Literal};
use super::NormalFormError;

/// DIMACS CNF text with `c <index> <atom>` mapping comments.
///
/// Atoms are numbered from 1 in name order.
pub fn to_dimacs(cs: &ClauseSet) -> Result<String, NormalFormError> {
    if !cs.is_propositional() {
        return Err(NormalFormError::NotPropositional);
    }
    let index: BTreeMap<String, usize> =
        cs.atoms().into_iter().enumerate().map(|(i, a)| (a, i + 1)).collect();
    let mut out = String::new();
    for (atom, i) in &index {
        writeln!(out, "c {i} {atom}").unwrap();
    }
    writeln!(out, "p cnf {} {}", index.len(), cs.len()).unwrap();
    for c in cs {
        for l in c {
            let i = index[&l.pred] as i64;
            write!(out, "{} ", if l.positive { i } else { -i }).unwrap();
        }
        out.push_str("0\n");
    }
    Ok(out)
}

/// Reads DIMACS CNF. Variable names come from `c <index> <name>` comments
/// when present and default to zero-padded `x01`, `x02`, ... otherwise.
pub fn parse_dimacs(text: &str) -> Result<ClauseSet, NormalFormError> {
    let bad = |line: usize, msg: String| NormalFormError::Dimacs { line, message: msg };
    let mut names: BTreeMap<usize, String> = BTreeMap::new();
    let mut header: Option<(usize, usize)> = None;
    let mut clauses: Vec<Vec<i64>> = Vec::new();
    let mut current: Vec<i64> = Vec::new();
    for (no, raw) in text.lines().enumerate() {
        let line_no = no + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if line.starts_with('%') {
            break;
        }
        if let Some(rest) = line.strip_prefix('c') {
            let parts: Vec<&str> = rest.split_whitespace().collect();
            if let [idx, name] = parts[..] {
                if let Ok(i) = idx.parse::<usize>() {
                    names.insert(i, name.to_string());
                }
            }
            continue;
        }
        if let Some(rest) = line.strip_prefix('p') {
            let parts: Vec<&str> = rest.split_whitespace().collect();
            match parts[..] {
                ["cnf", v, c] => {
                    let v = v.parse().map_err(|_| bad(line_no, format!("bad variable count `{v}`")))?;
                    let c = c.parse().map_err(|_| bad(line_no, format!("bad clause count `{c}`")))?;
                    header = Some((v, c));
                }
                _ => return Err(bad(line_no, "expected `p cnf <vars> <clauses>`".into())),
            }
            continue;
        }
        let (vars, _) = header.ok_or_else(|| bad(line_no, "clause before the `p cnf` header".into()))?;
        for tok in line.split_whitespace() {
            let x: i64 = tok.parse().map_err(|_| bad(line_no, format!("bad literal `{tok}`")))?;
            if x == 0 {
                clauses.push(std::mem::take(&mut current));
            } else if x.unsigned_abs() as usize > vars {
                return Err(bad(line_no, format!("variable {} exceeds the declared {vars}", x.abs())));
            } else {
                current.push(x);
            }
        }
    }
    let (vars, _) = header.ok_or_else(|| bad(0, "missing `p cnf` header".into()))?;
    if !current.is_empty() {
        clauses.push(current);
    }
    let width = vars.to_string().len().max(2);
    let name = |i: usize| names.get(&i).cloned().unwrap_or_else(|| format!("x{i:0width$}"));
    Ok(clauses
        .into_iter()
        .map(|c| {
            c.into_iter()
                .map(|x| Literal::new(x > 0, name(x.unsigned_abs() as usize), Vec::new()))
                .collect::<Clause>()
        })
        .collect())
}
