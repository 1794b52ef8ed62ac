//! IFG-formula AST, concrete syntax, subformula trees, and perfection.
//!
//! A formula carries its ambient variable count `N`: the formula proper is a
//! pair of a syntax tree and a variable set `{v_0, ..., v_{N-1}}`, and two
//! formulas with the same tree but different `N` are different objects. `N`
//! may exceed the largest variable index actually used, never be below it.
//!
//! Concrete syntax (ASCII, whitespace-insensitive):
//!
//! ```text
//! formula := "~" formula | "(" formula binop formula ")" | quant | atom
//! binop   := "|/" slash | "&/" slash
//! quant   := ("E" | "A") var "/" slash "." formula
//! slash   := "{" [ var ("," var)* ] "}"
//! atom    := var "=" var | ident "(" var ("," var)* ")"
//! var     := "v" digits
//! ```

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// Index of a variable: `n` denotes `v_n`.
pub type VarIndex = usize;

/// A slash set `J`: the variable indices a connective or quantifier is
/// independent of.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SlashSet(BTreeSet<VarIndex>);

impl SlashSet {
    pub fn empty() -> Self {
        SlashSet(BTreeSet::new())
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, index: VarIndex) -> bool {
        self.0.contains(&index)
    }

    pub fn iter(&self) -> impl Iterator<Item = VarIndex> + '_ {
        self.0.iter().copied()
    }

    pub fn max_index(&self) -> Option<VarIndex> {
        self.0.iter().next_back().copied()
    }
}

impl FromIterator<VarIndex> for SlashSet {
    fn from_iter<T: IntoIterator<Item = VarIndex>>(iter: T) -> Self {
        SlashSet(iter.into_iter().collect())
    }
}

impl fmt::Display for SlashSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "v{v}")?;
        }
        write!(f, "}}")
    }
}

/// An atomic formula: equality between variables or a relation applied to
/// variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Atom {
    Eq(VarIndex, VarIndex),
    Rel(String, Vec<VarIndex>),
}

/// A node of the formula tree.
///
/// `And` and `Forall` are stored distinctly so printed output matches input,
/// but they are the abbreviations `φ ∧/J ψ = ∼(∼φ ∨/J ∼ψ)` and
/// `∀vn/J φ = ∼∃vn/J ∼φ`; every semantic operation treats them by those
/// equations.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Node {
    Atom(Atom),
    Not(Box<Node>),
    Or(SlashSet, Box<Node>, Box<Node>),
    And(SlashSet, Box<Node>, Box<Node>),
    Exists(VarIndex, SlashSet, Box<Node>),
    Forall(VarIndex, SlashSet, Box<Node>),
}

impl Node {
    /// Largest variable index appearing anywhere in this subtree (bound
    /// variables and slash sets included), if any variable appears.
    pub fn max_var_index(&self) -> Option<VarIndex> {
        fn max2(a: Option<usize>, b: Option<usize>) -> Option<usize> {
            match (a, b) {
                (Some(x), Some(y)) => Some(x.max(y)),
                (x, None) => x,
                (None, y) => y,
            }
        }
        match self {
            Node::Atom(Atom::Eq(i, j)) => Some(*i.max(j)),
            Node::Atom(Atom::Rel(_, args)) => args.iter().copied().max(),
            Node::Not(c) => c.max_var_index(),
            Node::Or(j, l, r) | Node::And(j, l, r) => max2(
                j.max_index(),
                max2(l.max_var_index(), r.max_var_index()),
            ),
            Node::Exists(n, j, c) | Node::Forall(n, j, c) => {
                max2(Some(*n), max2(j.max_index(), c.max_var_index()))
            }
        }
    }

    fn is_perfect(&self) -> bool {
        match self {
            Node::Atom(_) => true,
            Node::Not(c) => c.is_perfect(),
            Node::Or(j, l, r) | Node::And(j, l, r) => {
                j.is_empty() && l.is_perfect() && r.is_perfect()
            }
            Node::Exists(_, j, c) | Node::Forall(_, j, c) => j.is_empty() && c.is_perfect(),
        }
    }

    fn perfection(&self) -> Node {
        match self {
            Node::Atom(a) => Node::Atom(a.clone()),
            Node::Not(c) => Node::Not(Box::new(c.perfection())),
            Node::Or(_, l, r) => Node::Or(
                SlashSet::empty(),
                Box::new(l.perfection()),
                Box::new(r.perfection()),
            ),
            Node::And(_, l, r) => Node::And(
                SlashSet::empty(),
                Box::new(l.perfection()),
                Box::new(r.perfection()),
            ),
            Node::Exists(n, _, c) => Node::Exists(*n, SlashSet::empty(), Box::new(c.perfection())),
            Node::Forall(n, _, c) => Node::Forall(*n, SlashSet::empty(), Box::new(c.perfection())),
        }
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Node::Atom(Atom::Eq(i, j)) => write!(f, "v{i} = v{j}"),
            Node::Atom(Atom::Rel(name, args)) => {
                write!(f, "{name}(")?;
                for (k, a) in args.iter().enumerate() {
                    if k > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "v{a}")?;
                }
                write!(f, ")")
            }
            Node::Not(c) => write!(f, "~{c}"),
            Node::Or(j, l, r) => write!(f, "({l} |/{j} {r})"),
            Node::And(j, l, r) => write!(f, "({l} &/{j} {r})"),
            Node::Exists(n, j, c) => write!(f, "E v{n}/{j} . {c}"),
            Node::Forall(n, j, c) => write!(f, "A v{n}/{j} . {c}"),
        }
    }
}

/// An IFG formula together with its ambient variable count `N`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Formula {
    variable_count: usize,
    root: Node,
}

/// Steps of a tree position: under a negation, the left or right operand of
/// a binary connective, or under a quantifier.
pub const STEP_NEG: u8 = 0;
pub const STEP_LEFT: u8 = 1;
pub const STEP_RIGHT: u8 = 2;
pub const STEP_QUANT: u8 = 3;

/// Address of a subformula occurrence in the subformula tree. The same
/// syntactic subformula at two occurrences gets two positions.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Position(Vec<u8>);

impl Position {
    pub fn root() -> Self {
        Position(Vec::new())
    }

    pub fn from_steps(steps: impl IntoIterator<Item = u8>) -> Self {
        Position(steps.into_iter().collect())
    }

    pub fn child(&self, step: u8) -> Self {
        let mut steps = self.0.clone();
        steps.push(step);
        Position(steps)
    }

    pub fn steps(&self) -> &[u8] {
        &self.0
    }

    /// Positive iff the number of negation steps on the path is even.
    pub fn polarity(&self) -> Polarity {
        if self.0.iter().filter(|&&s| s == STEP_NEG).count() % 2 == 0 {
            Polarity::Positive
        } else {
            Polarity::Negative
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Polarity {
    Positive,
    Negative,
}

impl Formula {
    /// Build a formula, checking that every variable index (free, bound, or
    /// slashed) is below `variable_count`.
    pub fn new(variable_count: usize, root: Node) -> Result<Self> {
        if variable_count == 0 {
            return Err(Error::Syntax {
                pos: 0,
                msg: "variable count must be positive".into(),
            });
        }
        if let Some(max) = root.max_var_index() {
            if max >= variable_count {
                return Err(Error::VariableOutOfRange {
                    index: max,
                    count: variable_count,
                });
            }
        }
        Ok(Formula {
            variable_count,
            root,
        })
    }

    /// Parse from the concrete syntax. With `declared_n`, the variable count
    /// is fixed (and using a larger index is an error); otherwise it is one
    /// more than the largest index used.
    pub fn parse(text: &str, declared_n: Option<usize>) -> Result<Self> {
        let mut p = Parser::new(text);
        let root = p.formula()?;
        p.skip_ws();
        if p.pos < p.bytes.len() {
            return Err(p.err("unexpected trailing input"));
        }
        let used = root.max_var_index().map_or(0, |m| m + 1);
        let n = match declared_n {
            Some(n) => {
                if used > n {
                    return Err(Error::VariableOutOfRange {
                        index: used - 1,
                        count: n,
                    });
                }
                n
            }
            None => used.max(1),
        };
        Formula::new(n, root)
    }

    pub fn variable_count(&self) -> usize {
        self.variable_count
    }

    pub fn root(&self) -> &Node {
        &self.root
    }

    /// True iff every slash set in the formula is empty.
    pub fn is_perfect(&self) -> bool {
        self.root.is_perfect()
    }

    /// The perfection `φ_∅`: the same tree with every slash set emptied,
    /// recursively at every node.
    pub fn perfection(&self) -> Formula {
        Formula {
            variable_count: self.variable_count,
            root: self.root.perfection(),
        }
    }

    /// The subformula tree: every (position, node) pair, in preorder.
    /// Negations descend with step 0, binary connectives with 1 and 2,
    /// quantifiers with 3.
    pub fn subformula_tree(&self) -> Vec<(Position, &Node)> {
        fn walk<'a>(node: &'a Node, pos: Position, out: &mut Vec<(Position, &'a Node)>) {
            out.push((pos.clone(), node));
            match node {
                Node::Atom(_) => {}
                Node::Not(c) => walk(c, pos.child(STEP_NEG), out),
                Node::Or(_, l, r) | Node::And(_, l, r) => {
                    walk(l, pos.child(STEP_LEFT), out);
                    walk(r, pos.child(STEP_RIGHT), out);
                }
                Node::Exists(_, _, c) | Node::Forall(_, _, c) => {
                    walk(c, pos.child(STEP_QUANT), out)
                }
            }
        }
        let mut out = Vec::new();
        walk(&self.root, Position::root(), &mut out);
        out
    }

    /// The node addressed by a position, or an error if the position does
    /// not exist in this formula.
    pub fn node_at(&self, pos: &Position) -> Result<&Node> {
        let mut node = &self.root;
        for &step in pos.steps() {
            node = match (node, step) {
                (Node::Not(c), STEP_NEG) => c,
                (Node::Or(_, l, _), STEP_LEFT) | (Node::And(_, l, _), STEP_LEFT) => l,
                (Node::Or(_, _, r), STEP_RIGHT) | (Node::And(_, _, r), STEP_RIGHT) => r,
                (Node::Exists(_, _, c), STEP_QUANT) | (Node::Forall(_, _, c), STEP_QUANT) => c,
                _ => return Err(Error::InvalidPosition(pos.steps().to_vec())),
            };
        }
        Ok(node)
    }

    /// Polarity of a valid position: positive iff the path passes under an
    /// even number of negations.
    pub fn polarity(&self, pos: &Position) -> Result<Polarity> {
        self.node_at(pos)?;
        Ok(pos.polarity())
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.root.fmt(f)
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn err(&self, msg: &str) -> Error {
        Error::Syntax {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn expect(&mut self, b: u8) -> Result<()> {
        if self.peek() == Some(b) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected `{}`", b as char)))
        }
    }

    fn ident(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len()
            && (self.bytes[self.pos].is_ascii_alphanumeric() || self.bytes[self.pos] == b'_')
        {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected an identifier"));
        }
        Ok(std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .to_string())
    }

    fn var(&mut self) -> Result<VarIndex> {
        self.skip_ws();
        let ident = self.ident()?;
        Self::ident_as_var(&ident).ok_or_else(|| self.err("expected a variable `v<digits>`"))
    }

    fn ident_as_var(ident: &str) -> Option<VarIndex> {
        let digits = ident.strip_prefix('v')?;
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        digits.parse().ok()
    }

    fn slash(&mut self) -> Result<SlashSet> {
        self.expect(b'{')?;
        let mut indices = BTreeSet::new();
        if self.peek() != Some(b'}') {
            loop {
                indices.insert(self.var()?);
                match self.peek() {
                    Some(b',') => {
                        self.pos += 1;
                    }
                    _ => break,
                }
            }
        }
        self.expect(b'}')?;
        Ok(SlashSet(indices))
    }

    fn formula(&mut self) -> Result<Node> {
        match self.peek() {
            Some(b'~') => {
                self.pos += 1;
                Ok(Node::Not(Box::new(self.formula()?)))
            }
            Some(b'(') => {
                self.pos += 1;
                let left = self.formula()?;
                let op = match self.peek() {
                    Some(b'|') => b'|',
                    Some(b'&') => b'&',
                    _ => return Err(self.err("expected `|/` or `&/`")),
                };
                self.pos += 1;
                self.expect(b'/')?;
                let slash = self.slash()?;
                let right = self.formula()?;
                self.expect(b')')?;
                Ok(if op == b'|' {
                    Node::Or(slash, Box::new(left), Box::new(right))
                } else {
                    Node::And(slash, Box::new(left), Box::new(right))
                })
            }
            Some(_) => {
                let ident = self.ident()?;
                match ident.as_str() {
                    "E" | "A" => {
                        let bound = self.var()?;
                        self.expect(b'/')?;
                        let slash = self.slash()?;
                        self.expect(b'.')?;
                        let body = self.formula()?;
                        Ok(if ident == "E" {
                            Node::Exists(bound, slash, Box::new(body))
                        } else {
                            Node::Forall(bound, slash, Box::new(body))
                        })
                    }
                    _ => {
                        if let Some(i) = Self::ident_as_var(&ident) {
                            self.expect(b'=')?;
                            let j = self.var()?;
                            Ok(Node::Atom(Atom::Eq(i, j)))
                        } else {
                            self.expect(b'(')?;
                            let mut args = vec![self.var()?];
                            while self.peek() == Some(b',') {
                                self.pos += 1;
                                args.push(self.var()?);
                            }
                            self.expect(b')')?;
                            Ok(Node::Atom(Atom::Rel(ident, args)))
                        }
                    }
                }
            }
            None => Err(self.err("empty input")),
        }
    }
}
