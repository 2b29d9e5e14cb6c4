//! Reduced ordered binary decision diagrams.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write;
use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigUint;

use crate::semantics::Assignment;
use crate::syntax::Formula;

static NEXT_MANAGER: AtomicU64 = AtomicU64::new(1);

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BddError {
    #[error("atom `{0}` is not in the variable order")]
    AtomNotInOrder(String),
    #[error("atom `{0}` appears twice in the variable order")]
    DuplicateAtom(String),
    #[error("diagram belongs to a different manager")]
    ManagerMismatch,
    #[error("formula is not propositional")]
    NotPropositional,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BddOp {
    And,
    Or,
    Xor,
    Imp,
    Iff,
}

impl BddOp {
    pub fn eval(self, a: bool, b: bool) -> bool {
        match self {
            BddOp::And => a && b,
            BddOp::Or => a || b,
            BddOp::Xor => a != b,
            BddOp::Imp => !a || b,
            BddOp::Iff => a == b,
        }
    }
}

/// A node handle, meaningful only with the manager that created it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BddRef {
    manager: u64,
    node: usize,
}

impl BddRef {
    pub fn id(self) -> usize {
        self.node
    }

    pub fn is_false(self) -> bool {
        self.node == 0
    }

    pub fn is_true(self) -> bool {
        self.node == 1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Node {
    var: usize,
    low: usize,
    high: usize,
}

/// Node store, unique table and apply cache for one variable order.
///
/// Ids 0 and 1 are the terminals. Nodes are never freed.
#[derive(Debug, Clone)]
pub struct BddManager {
    id: u64,
    order: Vec<String>,
    index: HashMap<String, usize>,
    nodes: Vec<Node>,
    unique: HashMap<(usize, usize, usize), usize>,
    cache: HashMap<(BddOp, usize, usize), usize>,
}

impl BddManager {
    pub fn new(order: &[&str]) -> Result<Self, BddError> {
        Self::with_order(order.iter().map(|s| s.to_string()).collect())
    }

    pub fn with_order(order: Vec<String>) -> Result<Self, BddError> {
        let mut index = HashMap::new();
        for (i, a) in order.iter().enumerate() {
            if index.insert(a.clone(), i).is_some() {
                return Err(BddError::DuplicateAtom(a.clone()));
            }
        }
        let n = order.len();
        let terminal = Node { var: n, low: 0, high: 0 };
        Ok(BddManager {
            id: NEXT_MANAGER.fetch_add(1, Ordering::Relaxed),
            order,
            index,
            nodes: vec![terminal, Node { high: 1, low: 1, ..terminal }],
            unique: HashMap::new(),
            cache: HashMap::new(),
        })
    }

    pub fn order(&self) -> &[String] {
        &self.order
    }

    fn r(&self, node: usize) -> BddRef {
        BddRef { manager: self.id, node }
    }

    pub fn zero(&self) -> BddRef {
        self.r(0)
    }

    pub fn one(&self) -> BddRef {
        self.r(1)
    }

    fn check(&self, u: BddRef) -> Result<usize, BddError> {
        if u.manager == self.id {
            Ok(u.node)
        } else {
            Err(BddError::ManagerMismatch)
        }
    }

    fn mk(&mut self, var: usize, low: usize, high: usize) -> usize {
        if low == high {
            return low;
        }
        if let Some(&id) = self.unique.get(&(var, low, high)) {
            return id;
        }
        let id = self.nodes.len();
        self.nodes.push(Node { var, low, high });
        self.unique.insert((var, low, high), id);
        id
    }

    pub fn var(&mut self, atom: &str) -> Result<BddRef, BddError> {
        let v = *self.index.get(atom).ok_or_else(|| BddError::AtomNotInOrder(atom.to_string()))?;
        let id = self.mk(v, 0, 1);
        Ok(self.r(id))
    }

    pub fn apply(&mut self, op: BddOp, u: BddRef, v: BddRef) -> Result<BddRef, BddError> {
        let (a, b) = (self.check(u)?, self.check(v)?);
        let id = self.apply_rec(op, a, b);
        Ok(self.r(id))
    }

    fn apply_rec(&mut self, op: BddOp, u: usize, v: usize) -> usize {
        if u < 2 && v < 2 {
            return usize::from(op.eval(u == 1, v == 1));
        }
        if let Some(&r) = self.cache.get(&(op, u, v)) {
            return r;
        }
        let (nu, nv) = (self.nodes[u], self.nodes[v]);
        let var = nu.var.min(nv.var);
        let (ul, uh) = if nu.var == var { (nu.low, nu.high) } else { (u, u) };
        let (vl, vh) = if nv.var == var { (nv.low, nv.high) } else { (v, v) };
        let low = self.apply_rec(op, ul, vl);
        let high = self.apply_rec(op, uh, vh);
        let r = self.mk(var, low, high);
        self.cache.insert((op, u, v), r);
        r
    }

    /// Negation as exclusive-or with the true terminal.
    pub fn not(&mut self, u: BddRef) -> Result<BddRef, BddError> {
        let one = self.one();
        self.apply(BddOp::Xor, u, one)
    }

    /// The diagram of a propositional formula, built by apply over the syntax tree.
    pub fn build(&mut self, f: &Formula) -> Result<BddRef, BddError> {
        if !f.is_propositional() {
            return Err(BddError::NotPropositional);
        }
        if let Some(a) = f.atoms().into_iter().find(|a| !self.index.contains_key(a)) {
            return Err(BddError::AtomNotInOrder(a));
        }
        self.build_rec(f)
    }

    fn build_rec(&mut self, f: &Formula) -> Result<BddRef, BddError> {
        Ok(match f {
            Formula::Top => self.one(),
            Formula::Bottom => self.zero(),
            Formula::Atom(p, _) => self.var(p)?,
            Formula::Not(a) => {
                let a = self.build_rec(a)?;
                self.not(a)?
            }
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) | Formula::Iff(a, b) => {
                let op = match f {
                    Formula::And(..) => BddOp::And,
                    Formula::Or(..) => BddOp::Or,
                    Formula::Imp(..) => BddOp::Imp,
                    _ => BddOp::Iff,
                };
                let a = self.build_rec(a)?;
                let b = self.build_rec(b)?;
                self.apply(op, a, b)?
            }
            Formula::Forall(..) | Formula::Exists(..) => return Err(BddError::NotPropositional),
        })
    }

    /// Number of satisfying assignments over the whole variable order.
    pub fn satcount(&self, u: BddRef) -> Result<BigUint, BddError> {
        let node = self.check(u)?;
        let mut memo = HashMap::new();
        let c = self.count_rec(node, &mut memo);
        Ok(c << self.nodes[node].var)
    }

    // Models over the variables from this node's level downwards.
    fn count_rec(&self, u: usize, memo: &mut HashMap<usize, BigUint>) -> BigUint {
        if u < 2 {
            return BigUint::from(u);
        }
        if let Some(c) = memo.get(&u) {
            return c.clone();
        }
        let n = self.nodes[u];
        let lo = self.count_rec(n.low, memo) << (self.nodes[n.low].var - n.var - 1);
        let hi = self.count_rec(n.high, memo) << (self.nodes[n.high].var - n.var - 1);
        let c = lo + hi;
        memo.insert(u, c.clone());
        c
    }

    /// Cofactor with `atom` fixed to `value`.
    pub fn restrict(&mut self, u: BddRef, atom: &str, value: bool) -> Result<BddRef, BddError> {
        let node = self.check(u)?;
        let v = *self.index.get(atom).ok_or_else(|| BddError::AtomNotInOrder(atom.to_string()))?;
        let mut memo = HashMap::new();
        let id = self.restrict_rec(node, v, value, &mut memo);
        Ok(self.r(id))
    }

    fn restrict_rec(&mut self, u: usize, v: usize, value: bool, memo: &mut HashMap<usize, usize>) -> usize {
        let n = self.nodes[u];
        if n.var > v {
            return u;
        }
        if n.var == v {
            return if value { n.high } else { n.low };
        }
        if let Some(&r) = memo.get(&u) {
            return r;
        }
        let low = self.restrict_rec(n.low, v, value, memo);
        let high = self.restrict_rec(n.high, v, value, memo);
        let r = self.mk(n.var, low, high);
        memo.insert(u, r);
        r
    }

    /// Existential quantification: the disjunction of both cofactors.
    pub fn exists_quantify(&mut self, u: BddRef, atom: &str) -> Result<BddRef, BddError> {
        let lo = self.restrict(u, atom, false)?;
        let hi = self.restrict(u, atom, true)?;
        self.apply(BddOp::Or, lo, hi)
    }

    /// Some satisfying assignment, preferring `false` at each node; atoms off
    /// the chosen path are set to `false`.
    pub fn any_sat(&self, u: BddRef) -> Result<Option<Assignment>, BddError> {
        let mut node = self.check(u)?;
        if node == 0 {
            return Ok(None);
        }
        let mut a: Assignment = self.order.iter().map(|n| (n.clone(), false)).collect();
        while node > 1 {
            let n = self.nodes[node];
            if n.low != 0 {
                node = n.low;
            } else {
                a.insert(self.order[n.var].clone(), true);
                node = n.high;
            }
        }
        Ok(Some(a))
    }

    fn reachable(&self, u: usize) -> BTreeSet<usize> {
        let mut seen = BTreeSet::new();
        let mut stack = vec![u];
        while let Some(x) = stack.pop() {
            if seen.insert(x) && x > 1 {
                stack.push(self.nodes[x].low);
                stack.push(self.nodes[x].high);
            }
        }
        seen
    }

    /// Nodes reachable from `u`, terminals included.
    pub fn node_count(&self, u: BddRef) -> Result<usize, BddError> {
        Ok(self.reachable(self.check(u)?).len())
    }

    /// Size of the whole node store, terminals included.
    pub fn total_nodes(&self) -> usize {
        self.nodes.len()
    }

    /// Walks the store and reports the first broken reduction, sharing or ordering rule.
    pub fn check_invariants(&self) -> Result<(), String> {
        let mut seen = HashMap::new();
        for (i, n) in self.nodes.iter().enumerate().skip(2) {
            if n.low == n.high {
                return Err(format!("node {i} has identical children"));
            }
            if self.nodes[n.low].var <= n.var || self.nodes[n.high].var <= n.var {
                return Err(format!("node {i} has a child at the same or an earlier level"));
            }
            if let Some(j) = seen.insert((n.var, n.low, n.high), i) {
                return Err(format!("nodes {j} and {i} are duplicates"));
            }
            if self.unique.get(&(n.var, n.low, n.high)) != Some(&i) {
                return Err(format!("node {i} is missing from the unique table"));
            }
        }
        Ok(())
    }

    /// Graphviz rendering of the diagram below `u`; dashed edges are low branches.
    pub fn to_dot(&self, u: BddRef) -> Result<String, BddError> {
        let root = self.check(u)?;
        let mut out = String::from("digraph bdd {\n");
        for id in self.reachable(root) {
            if id < 2 {
                writeln!(out, "  n{id} [shape=box, label=\"{id}\"];").unwrap();
            } else {
                let n = self.nodes[id];
                writeln!(out, "  n{id} [label=\"{}\"];", self.order[n.var]).unwrap();
                writeln!(out, "  n{id} -> n{} [style=dashed];", n.low).unwrap();
                writeln!(out, "  n{id} -> n{};", n.high).unwrap();
            }
        }
        out.push_str("}\n");
        Ok(out)
    }
}

/// Builds `f` in a fresh manager over `order`.
pub fn build(f: &Formula, order: &[String]) -> Result<(BddManager, BddRef), BddError> {
    let mut m = BddManager::with_order(order.to_vec())?;
    let u = m.build(f)?;
    Ok((m, u))
}

/// Builds `f` with its atoms in name order.
pub fn build_sorted(f: &Formula) -> Result<(BddManager, BddRef), BddError> {
    let order: Vec<String> = f.atoms().into_iter().collect();
    build(f, &order)
}
