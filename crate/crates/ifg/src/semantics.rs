//! The compositional trump-semantics evaluator: `⊨⁺` and `⊨⁻` on teams,
//! sentence-level truth/falsity, and full-meaning computation.
//!
//! `models_plus`/`models_minus` walk the formula top-down per the semantic
//! clauses, searching covers and independent functions with short-circuit on
//! first success; verdicts are memoized per (subformula occurrence, team).
//! `meaning` instead computes each subformula's full meaning bottom-up with
//! the algebra operations, which is what makes the compositional coherence
//! between the two routes directly testable.
//!
//! The sugar connectives are evaluated by their defining abbreviations:
//! `φ ∧/J ψ` behaves as `∼(∼φ ∨/J ∼ψ)` and `∀vn/J φ` as `∼∃vn/J ∼φ`, which
//! unfolds to: conjunction needs both conjuncts on the whole team (and a
//! cover search on the minus side); the universal quantifier rewrites
//! coordinate `n` to the whole universe (and searches functions on the
//! minus side).

use std::collections::HashMap;

use crate::algebra::{self, AlgebraElement, Space};
use crate::error::{Error, Result};
use crate::formula::{Formula, Node, SlashSet};
use crate::model::{Element, Structure};
use crate::team::{
    independent_functions, saturated_covers, variation_fn, variation_subset, Team,
};
use crate::Limits;

/// The full meaning `‖φ‖ = ⟨⟦φ⟧⁺, ⟦φ⟧⁻⟩`: trumps and cotrumps as
/// downward-closed families.
pub type Meaning = AlgebraElement;

/// `𝔄 ⊨⁺ φ[V]`: the team is a trump of the formula.
pub fn models_plus(
    structure: &Structure,
    formula: &Formula,
    team: &Team,
    limits: &Limits,
) -> Result<bool> {
    let mut eval = Evaluator::new(structure, formula, limits)?;
    eval.check_team(team)?;
    eval.eval(formula.root(), 0, true, team)
}

/// `𝔄 ⊨⁻ φ[W]`: the team is a cotrump of the formula.
pub fn models_minus(
    structure: &Structure,
    formula: &Formula,
    team: &Team,
    limits: &Limits,
) -> Result<bool> {
    let mut eval = Evaluator::new(structure, formula, limits)?;
    eval.check_team(team)?;
    eval.eval(formula.root(), 0, false, team)
}

/// `𝔄 ⊨⁺ φ`: truth on the full team `^N A`.
pub fn is_true_sentencewise(
    structure: &Structure,
    formula: &Formula,
    limits: &Limits,
) -> Result<bool> {
    let full = full_team(structure, formula, limits)?;
    models_plus(structure, formula, &full, limits)
}

/// `𝔄 ⊨⁻ φ`: falsity on the full team `^N A`.
pub fn is_false_sentencewise(
    structure: &Structure,
    formula: &Formula,
    limits: &Limits,
) -> Result<bool> {
    let full = full_team(structure, formula, limits)?;
    models_minus(structure, formula, &full, limits)
}

fn full_team(structure: &Structure, formula: &Formula, limits: &Limits) -> Result<Team> {
    Ok(Team::from_valuations(
        structure.all_valuations(formula.variable_count(), limits.enumeration)?,
    ))
}

/// The meaning of every team at once, computed bottom-up over the formula
/// with the algebra operations.
pub fn meaning(structure: &Structure, formula: &Formula, limits: &Limits) -> Result<Meaning> {
    let space = Space::new(structure.universe_size(), formula.variable_count());
    let points = space.points();
    if points > limits.meaning_space as u128 || points > 63 {
        return Err(Error::SpaceTooLarge {
            points,
            limit: limits.meaning_space,
        });
    }
    meaning_node(structure, formula.root(), space, limits)
}

fn meaning_node(
    structure: &Structure,
    node: &Node,
    space: Space,
    limits: &Limits,
) -> Result<Meaning> {
    match node {
        Node::Atom(atom) => {
            let mut sat = Vec::new();
            for a in space.all_valuations() {
                if structure.atomic_eval(atom, &a)? {
                    sat.push(a);
                }
            }
            Ok(algebra::embed_f(space, &Team::from_valuations(sat)))
        }
        Node::Not(c) => Ok(meaning_node(structure, c, space, limits)?.neg()),
        Node::Or(j, l, r) => algebra::plus_j(
            &meaning_node(structure, l, space, limits)?,
            &meaning_node(structure, r, space, limits)?,
            j,
            limits,
        ),
        Node::And(j, l, r) => algebra::times_j(
            &meaning_node(structure, l, space, limits)?,
            &meaning_node(structure, r, space, limits)?,
            j,
            limits,
        ),
        Node::Exists(n, j, c) => {
            algebra::cyl(*n, j, &meaning_node(structure, c, space, limits)?, limits)
        }
        Node::Forall(n, j, c) => Ok(algebra::cyl(
            *n,
            j,
            &meaning_node(structure, c, space, limits)?.neg(),
            limits,
        )?
        .neg()),
    }
}

struct Evaluator<'a> {
    structure: &'a Structure,
    limits: &'a Limits,
    n: usize,
    universe: Vec<Element>,
    // key: (preorder node id, sign, team)
    memo: HashMap<(usize, bool, Team), bool>,
}

impl<'a> Evaluator<'a> {
    fn new(structure: &'a Structure, formula: &'a Formula, limits: &'a Limits) -> Result<Self> {
        Ok(Evaluator {
            structure,
            limits,
            n: formula.variable_count(),
            universe: (0..structure.universe_size()).collect(),
            memo: HashMap::new(),
        })
    }

    fn check_team(&self, team: &Team) -> Result<()> {
        for a in team.iter() {
            if a.len() != self.n {
                return Err(Error::ValuationLength {
                    expected: self.n,
                    actual: a.len(),
                });
            }
            if let Some(&e) = a.iter().find(|&&e| e >= self.structure.universe_size()) {
                return Err(Error::ElementOutOfRange {
                    element: e,
                    universe: self.structure.universe_size(),
                });
            }
        }
        Ok(())
    }

    fn eval(&mut self, node: &Node, id: usize, plus: bool, team: &Team) -> Result<bool> {
        let key = (id, plus, team.clone());
        if let Some(&verdict) = self.memo.get(&key) {
            return Ok(verdict);
        }
        let verdict = self.eval_uncached(node, id, plus, team)?;
        self.memo.insert(key, verdict);
        Ok(verdict)
    }

    fn eval_uncached(&mut self, node: &Node, id: usize, plus: bool, team: &Team) -> Result<bool> {
        // children get preorder ids: ids are disjoint across occurrences
        // because each child subtree is offset past its predecessors
        match node {
            Node::Atom(atom) => {
                for a in team.iter() {
                    if self.structure.atomic_eval(atom, a)? != plus {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            Node::Not(c) => self.eval(c, id + 1, !plus, team),
            Node::Or(j, l, r) => {
                if plus {
                    self.split_search(j, team, (l, id + 1), (r, id + 1 + node_count(l)), true)
                } else {
                    Ok(self.eval(l, id + 1, false, team)?
                        && self.eval(r, id + 1 + node_count(l), false, team)?)
                }
            }
            Node::And(j, l, r) => {
                if plus {
                    Ok(self.eval(l, id + 1, true, team)?
                        && self.eval(r, id + 1 + node_count(l), true, team)?)
                } else {
                    self.split_search(j, team, (l, id + 1), (r, id + 1 + node_count(l)), false)
                }
            }
            Node::Exists(n, j, c) => {
                if plus {
                    self.function_search(*n, j, team, c, id + 1, true)
                } else {
                    let widened = variation_subset(team, *n, &self.universe)?;
                    self.eval(c, id + 1, false, &widened)
                }
            }
            Node::Forall(n, j, c) => {
                if plus {
                    let widened = variation_subset(team, *n, &self.universe)?;
                    self.eval(c, id + 1, true, &widened)
                } else {
                    self.function_search(*n, j, team, c, id + 1, false)
                }
            }
        }
    }

    /// Search for a J-saturated disjoint 2-cover with the given sign holding
    /// on each part.
    fn split_search(
        &mut self,
        j: &SlashSet,
        team: &Team,
        left: (&Node, usize),
        right: (&Node, usize),
        plus: bool,
    ) -> Result<bool> {
        for cover in saturated_covers(team, j, 2, self.limits.enumeration)? {
            if self.eval(left.0, left.1, plus, &cover[0])?
                && self.eval(right.0, right.1, plus, &cover[1])?
            {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Search for a J-independent function rewriting coordinate `n` so the
    /// child holds with the given sign.
    fn function_search(
        &mut self,
        n: usize,
        j: &SlashSet,
        team: &Team,
        child: &Node,
        child_id: usize,
        plus: bool,
    ) -> Result<bool> {
        for f in independent_functions(
            team,
            j,
            self.structure.universe_size(),
            self.limits.enumeration,
        )? {
            if self.eval(child, child_id, plus, &variation_fn(team, n, &f)?)? {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

fn node_count(node: &Node) -> usize {
    match node {
        Node::Atom(_) => 1,
        Node::Not(c) => 1 + node_count(c),
        Node::Or(_, l, r) | Node::And(_, l, r) => 1 + node_count(l) + node_count(r),
        Node::Exists(_, _, c) | Node::Forall(_, _, c) => 1 + node_count(c),
    }
}
