use std::collections::BTreeMap;
use std::fmt;

use crate::normalform::{Clause, ClauseSet, Literal};
use crate::sat::enumerate_models;
use crate::semantics::Assignment;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ZebraError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("unknown value `{0}`")]
    UnknownValue(String),
    #[error("value `{0}` appears in more than one place")]
    DuplicateValue(String),
    #[error("categories must all have {expected} values, `{category}` has {found}")]
    Ragged { category: String, expected: usize, found: usize },
    #[error("house {position} is outside 1..={houses}")]
    Position { position: usize, houses: usize },
    #[error("the puzzle has no categories")]
    Empty,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Clue {
    Same(String, String),
    Neighbor(String, String),
    /// The first value's house is immediately left of the second's.
    LeftOf(String, String),
    /// The first value's house is immediately right of the second's.
    RightOf(String, String),
    /// A value at a 1-based house position.
    At(String, usize),
}

impl fmt::Display for Clue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Clue::Same(a, b) => write!(f, "same: {a} {b}"),
            Clue::Neighbor(a, b) => write!(f, "neighbor: {a} {b}"),
            Clue::LeftOf(a, b) => write!(f, "leftof: {a} {b}"),
            Clue::RightOf(a, b) => write!(f, "rightof: {a} {b}"),
            Clue::At(a, p) => write!(f, "at: {a} {p}"),
        }
    }
}

/// A grid puzzle: every category assigns each of its values to exactly one house.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZebraSpec {
    pub categories: Vec<(String, Vec<String>)>,
    pub clues: Vec<Clue>,
    /// `(value, category)`: report the category value sharing a house with `value`.
    pub ask: Option<(String, String)>,
}

impl ZebraSpec {
    /// Checks shape and names; returns the number of houses.
    pub fn validate(&self) -> Result<usize, ZebraError> {
        let houses = self.categories.first().ok_or(ZebraError::Empty)?.1.len();
        let mut seen = BTreeMap::new();
        for (cat, vals) in &self.categories {
            if vals.len() != houses {
                return Err(ZebraError::Ragged { category: cat.clone(), expected: houses, found: vals.len() });
            }
            for v in vals {
                if seen.insert(v.as_str(), cat.as_str()).is_some() {
                    return Err(ZebraError::DuplicateValue(v.clone()));
                }
            }
        }
        let known = |v: &String| {
            if seen.contains_key(v.as_str()) {
                Ok(())
            } else {
                Err(ZebraError::UnknownValue(v.clone()))
            }
        };
        for c in &self.clues {
            match c {
                Clue::Same(a, b) | Clue::Neighbor(a, b) | Clue::LeftOf(a, b) | Clue::RightOf(a, b) => {
                    known(a)?;
                    known(b)?;
                }
                Clue::At(a, p) => {
                    known(a)?;
                    if *p == 0 || *p > houses {
                        return Err(ZebraError::Position { position: *p, houses });
                    }
                }
            }
        }
        if let Some((v, cat)) = &self.ask {
            known(v)?;
            if !self.categories.iter().any(|(c, _)| c == cat) {
                return Err(ZebraError::UnknownValue(cat.clone()));
            }
        }
        Ok(houses)
    }

    fn category_of(&self, value: &str) -> &str {
        self.categories
            .iter()
            .find(|(_, vals)| vals.iter().any(|v| v == value))
            .map(|(c, _)| c.as_str())
            .expect("validated")
    }

    /// Variable for "`value` lives in house `h`" (1-based).
    pub fn var(&self, value: &str, h: usize) -> String {
        format!("{}_{}_{}", self.category_of(value), value, h)
    }
}

/// Parses the line format
/// `category <name>: v1 v2 ..`, `clue same|neighbor|leftof|rightof: a b`,
/// `clue at: a <house>` and `ask <value> <category>`; `#` starts a comment.
pub fn parse_zebra(text: &str) -> Result<ZebraSpec, ZebraError> {
    let mut spec = ZebraSpec { categories: Vec::new(), clues: Vec::new(), ask: None };
    for (no, raw) in text.lines().enumerate() {
        let err = |message: String| ZebraError::Parse { line: no + 1, message };
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (keyword, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        match keyword {
            "category" => {
                let (name, vals) = rest.split_once(':').ok_or_else(|| err("expected `category name: values`".into()))?;
                let name = name.trim();
                if name.is_empty() || name.contains(char::is_whitespace) {
                    return Err(err(format!("bad category name `{name}`")));
                }
                spec.categories.push((name.to_string(), vals.split_whitespace().map(str::to_string).collect()));
            }
            "clue" => {
                let (kind, args) = rest.split_once(':').ok_or_else(|| err("expected `clue kind: args`".into()))?;
                let args: Vec<&str> = args.split_whitespace().collect();
                let [a, b] = args.as_slice() else {
                    return Err(err(format!("clue takes two arguments, got {}", args.len())));
                };
                let (a, b) = (a.to_string(), b.to_string());
                spec.clues.push(match kind.trim() {
                    "same" => Clue::Same(a, b),
                    "neighbor" => Clue::Neighbor(a, b),
                    "leftof" => Clue::LeftOf(a, b),
                    "rightof" => Clue::RightOf(a, b),
                    "at" => Clue::At(a, b.parse().map_err(|_| err(format!("bad house `{b}`")))?),
                    other => return Err(err(format!("unknown clue kind `{other}`"))),
                });
            }
            "ask" => {
                let args: Vec<&str> = rest.split_whitespace().collect();
                let [v, c] = args.as_slice() else {
                    return Err(err("expected `ask <value> <category>`".into()));
                };
                spec.ask = Some((v.to_string(), c.to_string()));
            }
            other => return Err(err(format!("unknown directive `{other}`"))),
        }
    }
    spec.validate()?;
    Ok(spec)
}

fn exactly_one(cs: &mut ClauseSet, vars: &[String]) {
    cs.push(vars.iter().map(Literal::pos).collect());
    for i in 0..vars.len() {
        for j in i + 1..vars.len() {
            cs.push(Clause::from_iter([Literal::neg(&vars[i]), Literal::neg(&vars[j])]));
        }
    }
}

/// One variable per (category, value, house); pairwise exactly-one blocks per
/// value over houses and per house over values, then one group per clue.
pub fn encode_zebra(spec: &ZebraSpec) -> Result<ClauseSet, ZebraError> {
    let n = spec.validate()?;
    let mut cs = ClauseSet::default();
    for (cat, vals) in &spec.categories {
        for v in vals {
            let vars: Vec<String> = (1..=n).map(|h| format!("{cat}_{v}_{h}")).collect();
            exactly_one(&mut cs, &vars);
        }
        for h in 1..=n {
            let vars: Vec<String> = vals.iter().map(|v| format!("{cat}_{v}_{h}")).collect();
            exactly_one(&mut cs, &vars);
        }
    }
    let adjacent = |cs: &mut ClauseSet, a: &str, b: &str, offsets: &[isize]| {
        for h in 1..=n {
            let mut c = Clause::from_iter([Literal::neg(spec.var(a, h))]);
            for &d in offsets {
                let k = h as isize + d;
                if k >= 1 && k <= n as isize {
                    c.insert(Literal::pos(spec.var(b, k as usize)));
                }
            }
            cs.push(c);
        }
    };
    for clue in &spec.clues {
        match clue {
            Clue::Same(a, b) => {
                for h in 1..=n {
                    let (x, y) = (spec.var(a, h), spec.var(b, h));
                    cs.push(Clause::from_iter([Literal::neg(&x), Literal::pos(&y)]));
                    cs.push(Clause::from_iter([Literal::neg(&y), Literal::pos(&x)]));
                }
            }
            Clue::Neighbor(a, b) => {
                adjacent(&mut cs, a, b, &[-1, 1]);
                adjacent(&mut cs, b, a, &[-1, 1]);
            }
            Clue::LeftOf(a, b) => {
                adjacent(&mut cs, a, b, &[1]);
                adjacent(&mut cs, b, a, &[-1]);
            }
            Clue::RightOf(a, b) => {
                adjacent(&mut cs, a, b, &[-1]);
                adjacent(&mut cs, b, a, &[1]);
            }
            Clue::At(a, p) => {
                cs.push(Clause::from_iter([Literal::pos(spec.var(a, *p))]));
            }
        }
    }
    Ok(cs)
}

/// A decoded grid: `houses[h][k]` is the value of category `k` in house `h + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZebraSolution {
    pub categories: Vec<String>,
    pub houses: Vec<Vec<String>>,
}

impl ZebraSolution {
    /// 1-based house holding `value`.
    pub fn house_of(&self, value: &str) -> Option<usize> {
        self.houses.iter().position(|row| row.iter().any(|v| v == value)).map(|h| h + 1)
    }

    /// The value of `category` in the house holding `value`.
    pub fn answer(&self, value: &str, category: &str) -> Option<&str> {
        let k = self.categories.iter().position(|c| c == category)?;
        let h = self.house_of(value)?;
        Some(&self.houses[h - 1][k])
    }

    /// Re-evaluates every structural constraint and clue directly on the grid.
    pub fn verify(&self, spec: &ZebraSpec) -> Result<(), String> {
        if self.houses.len() != spec.categories.first().map_or(0, |c| c.1.len()) {
            return Err("wrong number of houses".into());
        }
        for (k, (cat, vals)) in spec.categories.iter().enumerate() {
            let mut col: Vec<&String> = self.houses.iter().map(|row| &row[k]).collect();
            col.sort();
            let mut want: Vec<&String> = vals.iter().collect();
            want.sort();
            if col != want {
                return Err(format!("category {cat} is not a permutation of its values"));
            }
        }
        for clue in &spec.clues {
            let pos = |v: &str| self.house_of(v).map(|h| h as isize).unwrap_or(-10);
            let ok = match clue {
                Clue::Same(a, b) => pos(a) == pos(b),
                Clue::Neighbor(a, b) => (pos(a) - pos(b)).abs() == 1,
                Clue::LeftOf(a, b) => pos(a) + 1 == pos(b),
                Clue::RightOf(a, b) => pos(a) == pos(b) + 1,
                Clue::At(a, p) => pos(a) == *p as isize,
            };
            if !ok {
                return Err(format!("clue `{clue}` fails"));
            }
        }
        Ok(())
    }
}

impl fmt::Display for ZebraSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut widths: Vec<usize> = self.categories.iter().map(String::len).collect();
        for row in &self.houses {
            for (w, v) in widths.iter_mut().zip(row) {
                *w = (*w).max(v.len());
            }
        }
        let line = |cells: Vec<&str>, first: &str| {
            let padded: Vec<String> =
                cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}", w = *w)).collect();
            format!("{first:<5} {}", padded.join(" ")).trim_end().to_string()
        };
        writeln!(f, "{}", line(self.categories.iter().map(String::as_str).collect(), "house"))?;
        for (h, row) in self.houses.iter().enumerate() {
            writeln!(f, "{}", line(row.iter().map(String::as_str).collect(), &(h + 1).to_string()))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ZebraOutcome {
    Solved(ZebraSolution),
    Unsatisfiable,
    /// At least this many models exist.
    NotUnique(usize),
}

fn decode(spec: &ZebraSpec, n: usize, m: &Assignment) -> ZebraSolution {
    let houses = (1..=n)
        .map(|h| {
            spec.categories
                .iter()
                .map(|(cat, vals)| {
                    vals.iter()
                        .find(|v| m.get(&format!("{cat}_{v}_{h}")).copied().unwrap_or(false))
                        .cloned()
                        .unwrap_or_default()
                })
                .collect()
        })
        .collect();
    ZebraSolution { categories: spec.categories.iter().map(|(c, _)| c.clone()).collect(), houses }
}

/// Encodes, asks DPLL for up to two models and decodes a unique one.
pub fn solve_zebra(spec: &ZebraSpec) -> Result<ZebraOutcome, ZebraError> {
    let n = spec.validate()?;
    let cs = encode_zebra(spec)?;
    let models = enumerate_models(&cs, 2).expect("zebra encodings are propositional");
    Ok(match models.as_slice() {
        [] => ZebraOutcome::Unsatisfiable,
        [m] => ZebraOutcome::Solved(decode(spec, n, m)),
        many => ZebraOutcome::NotUnique(many.len()),
    })
}
