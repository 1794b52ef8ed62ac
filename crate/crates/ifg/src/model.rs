//! Finite first-order structures and the classical Tarski evaluator.
//!
//! Universe elements are canonically `0..|A|-1`, so valuations are plain
//! integer tuples and team enumeration is cheap. Signatures are relational
//! (plus built-in equality).
//!
//! The Tarski evaluator accepts only perfect formulas. It is the independent
//! oracle against which the trump-semantics evaluator is compared on perfect
//! formulas, so it deliberately shares nothing with the team machinery.

use std::collections::BTreeMap;
use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::formula::{Atom, Formula, Node, VarIndex};

/// A universe element, `0..|A|-1`.
pub type Element = usize;

/// A valuation: entry `i` is the value of `v_i`.
pub type Valuation = Vec<Element>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub arity: usize,
    pub tuples: BTreeSet<Vec<Element>>,
}

/// A finite first-order structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Structure {
    universe_size: usize,
    relations: BTreeMap<String, Relation>,
}

impl Structure {
    pub fn new(universe_size: usize) -> Result<Self> {
        if universe_size == 0 {
            return Err(Error::Syntax {
                pos: 0,
                msg: "universe must be nonempty".into(),
            });
        }
        Ok(Structure {
            universe_size,
            relations: BTreeMap::new(),
        })
    }

    pub fn universe_size(&self) -> usize {
        self.universe_size
    }

    pub fn relations(&self) -> impl Iterator<Item = (&str, &Relation)> {
        self.relations.iter().map(|(n, r)| (n.as_str(), r))
    }

    pub fn add_relation(
        &mut self,
        name: &str,
        arity: usize,
        tuples: impl IntoIterator<Item = Vec<Element>>,
    ) -> Result<()> {
        let mut set = BTreeSet::new();
        for t in tuples {
            if t.len() != arity {
                return Err(Error::ArityMismatch {
                    name: name.to_string(),
                    expected: arity,
                    actual: t.len(),
                });
            }
            if let Some(&e) = t.iter().find(|&&e| e >= self.universe_size) {
                return Err(Error::ElementOutOfRange {
                    element: e,
                    universe: self.universe_size,
                });
            }
            set.insert(t);
        }
        self.relations
            .insert(name.to_string(), Relation { arity, tuples: set });
        Ok(())
    }

    /// Parse the line-oriented structure format:
    ///
    /// ```text
    /// universe = 3
    /// rel R 1 = (0) (2)
    /// rel Edge 2 = (0,1) (1,2)
    /// ```
    ///
    /// Blank lines and lines starting with `#` are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut structure: Option<Structure> = None;
        let mut offset = 0;
        for line in text.lines() {
            let line_start = offset;
            offset += line.len() + 1;
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let syntax = |msg: &str| Error::Syntax {
                pos: line_start,
                msg: msg.into(),
            };
            if let Some(rest) = trimmed.strip_prefix("universe") {
                let rest = rest.trim_start();
                let rest = rest.strip_prefix('=').ok_or_else(|| syntax("expected `=`"))?;
                let k: usize = rest
                    .trim()
                    .parse()
                    .map_err(|_| syntax("expected a universe size"))?;
                if structure.is_some() {
                    return Err(syntax("duplicate `universe` line"));
                }
                structure = Some(Structure::new(k).map_err(|_| syntax("universe must be nonempty"))?);
            } else if let Some(rest) = trimmed.strip_prefix("rel") {
                let s = structure
                    .as_mut()
                    .ok_or_else(|| syntax("`rel` before `universe`"))?;
                let (head, tail) = rest
                    .split_once('=')
                    .ok_or_else(|| syntax("expected `=` in rel line"))?;
                let mut parts = head.split_whitespace();
                let name = parts.next().ok_or_else(|| syntax("expected relation name"))?;
                let arity: usize = parts
                    .next()
                    .ok_or_else(|| syntax("expected arity"))?
                    .parse()
                    .map_err(|_| syntax("expected arity"))?;
                if parts.next().is_some() {
                    return Err(syntax("unexpected tokens before `=`"));
                }
                let mut tuples = Vec::new();
                for tok in tail.split_whitespace() {
                    let inner = tok
                        .strip_prefix('(')
                        .and_then(|t| t.strip_suffix(')'))
                        .ok_or_else(|| syntax("tuples must look like (0,1)"))?;
                    let tuple: Vec<Element> = inner
                        .split(',')
                        .map(|d| d.trim().parse::<Element>())
                        .collect::<std::result::Result<_, _>>()
                        .map_err(|_| syntax("tuple entries must be integers"))?;
                    tuples.push(tuple);
                }
                s.add_relation(name, arity, tuples)?;
            } else {
                return Err(syntax("expected `universe = ...` or `rel ...`"));
            }
        }
        structure.ok_or(Error::Syntax {
            pos: 0,
            msg: "missing `universe` line".into(),
        })
    }

    /// Single-valuation satisfaction of an atomic formula.
    pub fn atomic_eval(&self, atom: &Atom, a: &Valuation) -> Result<bool> {
        match atom {
            Atom::Eq(i, j) => {
                let x = Self::lookup(a, *i)?;
                let y = Self::lookup(a, *j)?;
                Ok(x == y)
            }
            Atom::Rel(name, args) => {
                let rel = self
                    .relations
                    .get(name)
                    .ok_or_else(|| Error::UnknownRelation(name.clone()))?;
                if rel.arity != args.len() {
                    return Err(Error::ArityMismatch {
                        name: name.clone(),
                        expected: rel.arity,
                        actual: args.len(),
                    });
                }
                let tuple: Vec<Element> = args
                    .iter()
                    .map(|&i| Self::lookup(a, i))
                    .collect::<Result<_>>()?;
                Ok(rel.tuples.contains(&tuple))
            }
        }
    }

    fn lookup(a: &Valuation, i: VarIndex) -> Result<Element> {
        a.get(i).copied().ok_or(Error::ValuationLength {
            expected: i + 1,
            actual: a.len(),
        })
    }

    /// Classical Tarski satisfaction. Only defined on perfect formulas:
    /// `∼` is read as `¬`, `∨/∅` as `∨`, `∧/∅` as `∧`, `∃vn/∅` as `∃vn`,
    /// and `∀vn/∅` as `∀vn`.
    pub fn tarski_eval(&self, formula: &Formula, a: &Valuation) -> Result<bool> {
        if !formula.is_perfect() {
            return Err(Error::NotPerfect);
        }
        if a.len() != formula.variable_count() {
            return Err(Error::ValuationLength {
                expected: formula.variable_count(),
                actual: a.len(),
            });
        }
        self.tarski_node(formula.root(), &mut a.clone())
    }

    fn tarski_node(&self, node: &Node, a: &mut Valuation) -> Result<bool> {
        match node {
            Node::Atom(atom) => self.atomic_eval(atom, a),
            Node::Not(c) => Ok(!self.tarski_node(c, a)?),
            Node::Or(_, l, r) => Ok(self.tarski_node(l, a)? || self.tarski_node(r, a)?),
            Node::And(_, l, r) => Ok(self.tarski_node(l, a)? && self.tarski_node(r, a)?),
            Node::Exists(n, _, c) => {
                let saved = a[*n];
                let mut found = false;
                for b in 0..self.universe_size {
                    a[*n] = b;
                    if self.tarski_node(c, a)? {
                        found = true;
                        break;
                    }
                }
                a[*n] = saved;
                Ok(found)
            }
            Node::Forall(n, _, c) => {
                let saved = a[*n];
                let mut all = true;
                for b in 0..self.universe_size {
                    a[*n] = b;
                    if !self.tarski_node(c, a)? {
                        all = false;
                        break;
                    }
                }
                a[*n] = saved;
                Ok(all)
            }
        }
    }

    /// All `|A|^N` valuations in lexicographic order. `budget` caps the
    /// number of valuations produced.
    pub fn all_valuations(&self, n: usize, budget: u64) -> Result<Vec<Valuation>> {
        let count = (self.universe_size as u128)
            .checked_pow(n as u32)
            .unwrap_or(u128::MAX);
        if count > budget as u128 {
            return Err(Error::BudgetExceeded {
                what: "enumerating all valuations",
                needed: count,
                limit: budget,
            });
        }
        let mut out = Vec::with_capacity(count as usize);
        let mut current = vec![0; n];
        loop {
            out.push(current.clone());
            // increment as a base-|A| counter, most significant digit first
            let mut i = n;
            loop {
                if i == 0 {
                    return Ok(out);
                }
                i -= 1;
                current[i] += 1;
                if current[i] < self.universe_size {
                    break;
                }
                current[i] = 0;
            }
        }
    }
}
