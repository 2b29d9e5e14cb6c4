use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use super::SemanticsError;
use crate::syntax::{Formula, Term};

/// Values of variables, keyed by variable name.
pub type Environment = BTreeMap<String, usize>;

/// A finite first-order structure over the domain `{0, .., domain_size - 1}`.
///
/// Zero-arity predicates are true iff their extension contains the empty tuple.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Interpretation {
    pub domain_size: usize,
    pub predicates: BTreeMap<String, BTreeSet<Vec<usize>>>,
    pub functions: BTreeMap<String, BTreeMap<Vec<usize>, usize>>,
    pub constants: BTreeMap<String, usize>,
}

impl Interpretation {
    pub fn new(domain_size: usize) -> Self {
        Interpretation { domain_size, ..Default::default() }
    }

    pub fn with_predicate(
        mut self,
        name: &str,
        tuples: impl IntoIterator<Item = Vec<usize>>,
    ) -> Self {
        self.predicates.insert(name.to_string(), tuples.into_iter().collect());
        self
    }

    pub fn with_constant(mut self, name: &str, value: usize) -> Self {
        self.constants.insert(name.to_string(), value);
        self
    }

    pub fn eval_term(&self, t: &Term, env: &Environment) -> Result<usize, SemanticsError> {
        match t {
            Term::Var(v) => env
                .get(v)
                .copied()
                .ok_or_else(|| SemanticsError::UnboundVariable(v.clone())),
            Term::Const(c) => self
                .constants
                .get(c)
                .copied()
                .ok_or_else(|| SemanticsError::UncoveredSymbol(c.clone())),
            Term::Func(f, args) => {
                let table = self
                    .functions
                    .get(f)
                    .ok_or_else(|| SemanticsError::UncoveredSymbol(f.clone()))?;
                let vals = args
                    .iter()
                    .map(|a| self.eval_term(a, env))
                    .collect::<Result<Vec<_>, _>>()?;
                table
                    .get(&vals)
                    .copied()
                    .ok_or_else(|| SemanticsError::UncoveredSymbol(f.clone()))
            }
        }
    }
}

/// Tarskian evaluation with quantifiers ranging over the model's domain.
pub fn eval_fol(
    f: &Formula,
    m: &Interpretation,
    env: &Environment,
) -> Result<bool, SemanticsError> {
    let mut env = env.clone();
    eval_rec(f, m, &mut env)
}

fn eval_rec(f: &Formula, m: &Interpretation, env: &mut Environment) -> Result<bool, SemanticsError> {
    Ok(match f {
        Formula::Top => true,
        Formula::Bottom => false,
        Formula::Atom(p, args) => {
            let ext = m
                .predicates
                .get(p)
                .ok_or_else(|| SemanticsError::UncoveredSymbol(p.clone()))?;
            let vals = args
                .iter()
                .map(|a| m.eval_term(a, env))
                .collect::<Result<Vec<_>, _>>()?;
            ext.contains(&vals)
        }
        Formula::Not(a) => !eval_rec(a, m, env)?,
        Formula::And(a, b) => eval_rec(a, m, env)? && eval_rec(b, m, env)?,
        Formula::Or(a, b) => eval_rec(a, m, env)? || eval_rec(b, m, env)?,
        Formula::Imp(a, b) => !eval_rec(a, m, env)? || eval_rec(b, m, env)?,
        Formula::Iff(a, b) => eval_rec(a, m, env)? == eval_rec(b, m, env)?,
        Formula::Forall(v, body) | Formula::Exists(v, body) => {
            let universal = matches!(f, Formula::Forall(..));
            let saved = env.get(v).copied();
            let mut result = universal;
            for d in 0..m.domain_size {
                env.insert(v.clone(), d);
                let value = eval_rec(body, m, env);
                let value = match value {
                    Ok(x) => x,
                    Err(e) => {
                        restore(env, v, saved);
                        return Err(e);
                    }
                };
                if value != universal {
                    result = !universal;
                    break;
                }
            }
            restore(env, v, saved);
            result
        }
    })
}

fn restore(env: &mut Environment, var: &str, saved: Option<usize>) {
    match saved {
        Some(x) => {
            env.insert(var.to_string(), x);
        }
        None => {
            env.remove(var);
        }
    }
}

fn fmt_tuple(t: &[usize]) -> String {
    if t.len() == 1 {
        t[0].to_string()
    } else {
        let inner: Vec<String> = t.iter().map(usize::to_string).collect();
        format!("({})", inner.join(", "))
    }
}

impl fmt::Display for Interpretation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}", self.domain_size)?;
        for (p, ext) in &self.predicates {
            if ext.iter().any(|t| t.is_empty()) {
                write!(f, ", {p} = true")?;
            } else {
                let items: Vec<String> = ext.iter().map(|t| fmt_tuple(t)).collect();
                write!(f, ", {p} = {{{}}}", items.join(", "))?;
            }
        }
        for (name, table) in &self.functions {
            let items: Vec<String> =
                table.iter().map(|(k, v)| format!("{}↦{v}", fmt_tuple(k))).collect();
            write!(f, ", {name} = {{{}}}", items.join(", "))?;
        }
        for (c, v) in &self.constants {
            write!(f, ", {c} = {v}")?;
        }
        Ok(())
    }
}

/// Renders a countermodel as `n=.., P = {..}, x↦..`.
pub fn render_countermodel(m: &Interpretation, env: &Environment) -> String {
    let mut s = m.to_string();
    for (v, d) in env {
        s.push_str(&format!(", {v}↦{d}"));
    }
    s
}

/// Parses the rendering produced by [`Interpretation`]'s `Display` impl.
///
/// Constants are written `c = 2`, zero-arity predicates `p = true`, predicate
/// extensions `P = {0, 2}` or `R = {(0, 1)}`, function tables `f = {0↦1, 1:0}`.
pub fn parse_interpretation(text: &str) -> Result<Interpretation, SemanticsError> {
    let bad = |msg: String| SemanticsError::BadModel(msg);
    let mut m = Interpretation::default();
    let mut saw_size = false;
    for part in split_top_level(text, &[',', ';']) {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let (name, value) = part
            .split_once('=')
            .ok_or_else(|| bad(format!("expected `name = value` in `{part}`")))?;
        let (name, value) = (name.trim(), value.trim());
        if name == "n" {
            m.domain_size = value.parse().map_err(|_| bad(format!("bad domain size `{value}`")))?;
            saw_size = true;
        } else if value == "true" || value == "false" {
            let ext = if value == "true" { vec![Vec::new()] } else { Vec::new() };
            m.predicates.insert(name.to_string(), ext.into_iter().collect());
        } else if let Some(inner) = value.strip_prefix('{').and_then(|v| v.strip_suffix('}')) {
            let items: Vec<String> = split_top_level(inner, &[','])
                .into_iter()
                .map(|s| s.trim().to_string())
                .filter(|s| !s.is_empty())
                .collect();
            if items.iter().any(|s| s.contains('↦') || s.contains(':')) {
                let mut table = BTreeMap::new();
                for item in items {
                    let (k, v) = item
                        .split_once('↦')
                        .or_else(|| item.split_once(':'))
                        .ok_or_else(|| bad(format!("expected `args↦value` in `{item}`")))?;
                    let v = v.trim().parse().map_err(|_| bad(format!("bad value `{v}`")))?;
                    table.insert(parse_tuple(k).map_err(bad)?, v);
                }
                m.functions.insert(name.to_string(), table);
            } else {
                let ext = items
                    .iter()
                    .map(|s| parse_tuple(s))
                    .collect::<Result<BTreeSet<_>, _>>()
                    .map_err(bad)?;
                m.predicates.insert(name.to_string(), ext);
            }
        } else {
            let v = value.parse().map_err(|_| bad(format!("bad constant value `{value}`")))?;
            m.constants.insert(name.to_string(), v);
        }
    }
    if !saw_size || m.domain_size == 0 {
        return Err(bad("missing positive domain size `n=..`".into()));
    }
    let n = m.domain_size;
    let in_range = m.constants.values().all(|&v| v < n)
        && m.predicates.values().flatten().flatten().all(|&v| v < n)
        && m.functions.values().flatten().all(|(k, &v)| v < n && k.iter().all(|&x| x < n));
    if !in_range {
        return Err(bad("value outside the domain".into()));
    }
    Ok(m)
}

fn parse_tuple(s: &str) -> Result<Vec<usize>, String> {
    let s = s.trim();
    let inner = s.strip_prefix('(').and_then(|v| v.strip_suffix(')')).unwrap_or(s);
    inner
        .split(',')
        .map(|x| x.trim().parse::<usize>().map_err(|_| format!("bad element `{x}`")))
        .collect()
}

fn split_top_level<'a>(s: &'a str, seps: &[char]) -> Vec<&'a str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '{' | '(' => depth += 1,
            '}' | ')' => depth -= 1,
            c if depth == 0 && seps.contains(&c) => {
                out.push(&s[start..i]);
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}
