use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

/// A propositional formula over the connectives ∧, ∨, ¬ and the constants 0, 1.
///
/// Children are reference counted so large generated formulas (iterated
/// restrictions in particular) share subterms instead of copying them.
/// Traversals in this crate memoize on node identity, so sharing keeps
/// evaluation linear in the number of distinct nodes.
#[derive(Clone, PartialEq, Eq)]
pub enum Formula {
    Var(Arc<str>),
    Zero,
    One,
    Not(Arc<Formula>),
    And(Arc<Formula>, Arc<Formula>),
    Or(Arc<Formula>, Arc<Formula>),
}

impl Formula {
    pub fn var(name: &str) -> Self {
        Formula::Var(Arc::from(name))
    }

    pub fn not(self) -> Self {
        Formula::Not(Arc::new(self))
    }

    pub fn and(self, rhs: Self) -> Self {
        Formula::And(Arc::new(self), Arc::new(rhs))
    }

    pub fn or(self, rhs: Self) -> Self {
        Formula::Or(Arc::new(self), Arc::new(rhs))
    }

    /// Left-associated join of all items; `Zero` when empty.
    pub fn join_all<I: IntoIterator<Item = Formula>>(items: I) -> Self {
        items.into_iter().reduce(Formula::or).unwrap_or(Formula::Zero)
    }

    /// Left-associated meet of all items; `One` when empty.
    pub fn meet_all<I: IntoIterator<Item = Formula>>(items: I) -> Self {
        items.into_iter().reduce(Formula::and).unwrap_or(Formula::One)
    }

    /// Free variable names, sorted.
    pub fn vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        let mut seen = HashSet::new();
        collect_vars(self, &mut out, &mut seen);
        out
    }

    /// Node count of the fully expanded tree (saturating).
    pub fn tree_size(&self) -> u128 {
        fn go(f: &Formula, memo: &mut HashMap<*const Formula, u128>) -> u128 {
            let key = f as *const Formula;
            if let Some(&n) = memo.get(&key) {
                return n;
            }
            let n = match f {
                Formula::Var(_) | Formula::Zero | Formula::One => 1,
                Formula::Not(c) => 1u128.saturating_add(go(c, memo)),
                Formula::And(a, b) | Formula::Or(a, b) => 1u128.saturating_add(go(a, memo)).saturating_add(go(b, memo)),
            };
            memo.insert(key, n);
            n
        }
        go(self, &mut HashMap::new())
    }

    /// Number of distinct nodes reachable through shared references.
    pub fn dag_size(&self) -> usize {
        fn go(f: &Formula, seen: &mut HashSet<*const Formula>) {
            if !seen.insert(f as *const Formula) {
                return;
            }
            match f {
                Formula::Not(c) => go(c, seen),
                Formula::And(a, b) | Formula::Or(a, b) => {
                    go(a, seen);
                    go(b, seen);
                }
                _ => {}
            }
        }
        let mut seen = HashSet::new();
        go(self, &mut seen);
        seen.len()
    }

    /// Rebuilds the formula with structurally equal subterms shared. Parsed
    /// text of a generated formula is a plain tree; this restores the sharing
    /// that makes memoized evaluation cheap.
    pub fn hash_consed(&self) -> Formula {
        let mut interner = Interner::default();
        let root = interner.intern_node(self);
        Arc::try_unwrap(root).unwrap_or_else(|a| (*a).clone())
    }

    /// Renames variables according to `f`, keeping sharing intact.
    pub fn rename(&self, f: &dyn Fn(&str) -> String) -> Formula {
        fn go(
            node: &Formula,
            f: &dyn Fn(&str) -> String,
            memo: &mut HashMap<*const Formula, Arc<Formula>>,
        ) -> Arc<Formula> {
            let key = node as *const Formula;
            if let Some(hit) = memo.get(&key) {
                return hit.clone();
            }
            let out = Arc::new(match node {
                Formula::Var(v) => Formula::var(&f(v)),
                Formula::Zero => Formula::Zero,
                Formula::One => Formula::One,
                Formula::Not(c) => Formula::Not(go(c, f, memo)),
                Formula::And(a, b) => Formula::And(go(a, f, memo), go(b, f, memo)),
                Formula::Or(a, b) => Formula::Or(go(a, f, memo), go(b, f, memo)),
            });
            memo.insert(key, out.clone());
            out
        }
        (*go(self, f, &mut HashMap::new())).clone()
    }
}

fn collect_vars(f: &Formula, out: &mut BTreeSet<String>, seen: &mut HashSet<*const Formula>) {
    if !seen.insert(f as *const Formula) {
        return;
    }
    match f {
        Formula::Var(v) => {
            out.insert(v.to_string());
        }
        Formula::Zero | Formula::One => {}
        Formula::Not(c) => collect_vars(c, out, seen),
        Formula::And(a, b) | Formula::Or(a, b) => {
            collect_vars(a, out, seen);
            collect_vars(b, out, seen);
        }
    }
}

#[derive(Hash, PartialEq, Eq)]
enum NodeKey {
    Var(Arc<str>),
    Zero,
    One,
    Not(usize),
    And(usize, usize),
    Or(usize, usize),
}

/// Hash-consing table. Children are interned first, so a node is keyed by
/// its tag and the addresses of its (already canonical) children.
#[derive(Default)]
pub(crate) struct Interner {
    table: HashMap<NodeKey, Arc<Formula>>,
    by_source: HashMap<*const Formula, Arc<Formula>>,
}

impl Interner {
    pub(crate) fn make(&mut self, node: Formula) -> Arc<Formula> {
        let key = match &node {
            Formula::Var(v) => NodeKey::Var(v.clone()),
            Formula::Zero => NodeKey::Zero,
            Formula::One => NodeKey::One,
            Formula::Not(c) => NodeKey::Not(Arc::as_ptr(c) as usize),
            Formula::And(a, b) => NodeKey::And(Arc::as_ptr(a) as usize, Arc::as_ptr(b) as usize),
            Formula::Or(a, b) => NodeKey::Or(Arc::as_ptr(a) as usize, Arc::as_ptr(b) as usize),
        };
        self.table.entry(key).or_insert_with(|| Arc::new(node)).clone()
    }

    fn intern_node(&mut self, f: &Formula) -> Arc<Formula> {
        let src = f as *const Formula;
        if let Some(hit) = self.by_source.get(&src) {
            return hit.clone();
        }
        let node = match f {
            Formula::Var(v) => Formula::Var(v.clone()),
            Formula::Zero => Formula::Zero,
            Formula::One => Formula::One,
            Formula::Not(c) => Formula::Not(self.intern_node(c)),
            Formula::And(a, b) => {
                let (a, b) = (self.intern_node(a), self.intern_node(b));
                Formula::And(a, b)
            }
            Formula::Or(a, b) => {
                let (a, b) = (self.intern_node(a), self.intern_node(b));
                Formula::Or(a, b)
            }
        };
        let out = self.make(node);
        self.by_source.insert(src, out.clone());
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Equal,
    /// `s <= t`, checked as `s ∧ t = s`.
    Leq,
}

impl Relation {
    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Equal => "=",
            Relation::Leq => "<=",
        }
    }
}

/// A law candidate `lhs = rhs` or `lhs <= rhs`.
#[derive(Clone, PartialEq, Eq)]
pub struct Equation {
    pub lhs: Formula,
    pub rhs: Formula,
    pub relation: Relation,
}

impl Equation {
    pub fn new(lhs: Formula, relation: Relation, rhs: Formula) -> Self {
        Self { lhs, rhs, relation }
    }

    pub fn eq(lhs: Formula, rhs: Formula) -> Self {
        Self::new(lhs, Relation::Equal, rhs)
    }

    pub fn leq(lhs: Formula, rhs: Formula) -> Self {
        Self::new(lhs, Relation::Leq, rhs)
    }

    pub fn vars(&self) -> BTreeSet<String> {
        let mut v = self.lhs.vars();
        v.extend(self.rhs.vars());
        v
    }
}

impl fmt::Display for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.lhs, self.relation.symbol(), self.rhs)
    }
}

impl fmt::Debug for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Debug for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
