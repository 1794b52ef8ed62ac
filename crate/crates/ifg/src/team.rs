//! Teams and the combinatorics underneath trump semantics: the agreement
//! relation `≈_J`, saturated covers and the partial union `∪_J`,
//! variants/variations, and enumeration of J-independent functions.
//!
//! Covers and independent functions are enumerated by assigning each
//! `≈_J`-equivalence class of the team to a part (or a value), which
//! generates exactly the J-saturated disjoint covers (resp. the functions
//! constant on classes) without filtering a larger search space. Empty parts
//! are allowed; the disjunction clause of the semantics needs them.
//!
//! All orderings are deterministic so failures are reproducible.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::formula::SlashSet;
use crate::model::{Element, Valuation};

/// A finite set of valuations, all of the same length. Stored sorted, so
/// equality, hashing, and iteration order are canonical.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Team {
    vals: Vec<Valuation>,
}

impl Team {
    pub fn empty() -> Self {
        Team::default()
    }

    pub fn from_valuations(vals: impl IntoIterator<Item = Valuation>) -> Self {
        let mut vals: Vec<Valuation> = vals.into_iter().collect();
        vals.sort();
        vals.dedup();
        Team { vals }
    }

    /// Parse a team literal like `{(0,0),(1,1)}` or `{}`.
    pub fn parse(text: &str) -> Result<Self> {
        let syntax = |msg: &str| Error::Syntax {
            pos: 0,
            msg: msg.into(),
        };
        let inner = text
            .trim()
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .ok_or_else(|| syntax("team literal must be enclosed in braces"))?;
        let inner = inner.trim();
        if inner.is_empty() {
            return Ok(Team::empty());
        }
        let mut vals = Vec::new();
        for part in inner.split(')') {
            let part = part.trim().trim_start_matches(',').trim();
            if part.is_empty() {
                continue;
            }
            let tuple = part
                .strip_prefix('(')
                .ok_or_else(|| syntax("valuations must look like (0,1)"))?;
            let entries: Vec<Element> = tuple
                .split(',')
                .map(|d| d.trim().parse::<Element>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| syntax("valuation entries must be integers"))?;
            vals.push(entries);
        }
        Ok(Team::from_valuations(vals))
    }

    pub fn len(&self) -> usize {
        self.vals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vals.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Valuation> {
        self.vals.iter()
    }

    pub fn valuations(&self) -> &[Valuation] {
        &self.vals
    }

    pub fn contains(&self, a: &Valuation) -> bool {
        self.vals.binary_search(a).is_ok()
    }

    pub fn is_subset(&self, other: &Team) -> bool {
        self.vals.iter().all(|a| other.contains(a))
    }

    pub fn is_disjoint(&self, other: &Team) -> bool {
        self.vals.iter().all(|a| !other.contains(a))
    }

    pub fn union(&self, other: &Team) -> Team {
        Team::from_valuations(self.vals.iter().chain(other.vals.iter()).cloned())
    }

    pub fn intersection(&self, other: &Team) -> Team {
        Team::from_valuations(self.vals.iter().filter(|a| other.contains(a)).cloned())
    }

    pub fn difference(&self, other: &Team) -> Team {
        Team::from_valuations(self.vals.iter().filter(|a| !other.contains(a)).cloned())
    }
}

impl fmt::Display for Team {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, a) in self.vals.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "(")?;
            for (k, e) in a.iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{e}")?;
            }
            write!(f, ")")?;
        }
        write!(f, "}}")
    }
}

/// `a ≈_J b`: the valuations agree on every coordinate outside `J`.
pub fn agrees_outside(a: &Valuation, b: &Valuation, j: &SlashSet) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::ValuationLength {
            expected: a.len(),
            actual: b.len(),
        });
    }
    Ok((0..a.len()).all(|i| j.contains(i) || a[i] == b[i]))
}

/// The `≈_J`-equivalence classes of a team, ordered by smallest member.
pub fn classes(team: &Team, j: &SlashSet) -> Vec<Team> {
    let mut keyed: Vec<(Vec<Element>, Vec<Valuation>)> = Vec::new();
    for a in team.iter() {
        let key: Vec<Element> = (0..a.len())
            .filter(|&i| !j.contains(i))
            .map(|i| a[i])
            .collect();
        match keyed.iter_mut().find(|(k, _)| *k == key) {
            Some((_, block)) => block.push(a.clone()),
            None => keyed.push((key, vec![a.clone()])),
        }
    }
    keyed
        .into_iter()
        .map(|(_, block)| Team::from_valuations(block))
        .collect()
}

/// The partial operation `⋃_J`: the union of the parts when they form a
/// J-saturated disjoint cover of it, `None` otherwise. Partiality is a
/// value, exactly as the operation is defined.
pub fn union_j(parts: &[Team], j: &SlashSet) -> Option<Team> {
    let mut union = Team::empty();
    for (i, p) in parts.iter().enumerate() {
        for q in &parts[i + 1..] {
            if !p.is_disjoint(q) {
                return None;
            }
        }
        union = union.union(p);
    }
    // every ≈_J-class of the union must land inside a single part
    for class in classes(&union, j) {
        let home = parts.iter().find(|p| p.contains(&class.valuations()[0]))?;
        if !class.is_subset(home) {
            return None;
        }
    }
    Some(union)
}

/// Lazy enumeration of the k-tuples `(V_1, ..., V_k)` with
/// `V = V_1 ∪_J ... ∪_J V_k`, one per assignment of `≈_J`-classes to parts
/// (`k^c` tuples for `c` classes).
pub struct SaturatedCovers {
    classes: Vec<Team>,
    part_count: usize,
    assignment: Vec<usize>,
    done: bool,
}

/// Build the cover enumeration, checking `k^c` against the budget first.
pub fn saturated_covers(
    team: &Team,
    j: &SlashSet,
    part_count: usize,
    budget: u64,
) -> Result<SaturatedCovers> {
    assert!(part_count >= 1, "a cover needs at least one part");
    let classes = classes(team, j);
    let total = (part_count as u128)
        .checked_pow(classes.len() as u32)
        .unwrap_or(u128::MAX);
    if total > budget as u128 {
        return Err(Error::BudgetExceeded {
            what: "enumerating saturated covers",
            needed: total,
            limit: budget,
        });
    }
    Ok(SaturatedCovers {
        assignment: vec![0; classes.len()],
        classes,
        part_count,
        done: false,
    })
}

impl Iterator for SaturatedCovers {
    type Item = Vec<Team>;

    fn next(&mut self) -> Option<Vec<Team>> {
        if self.done {
            return None;
        }
        let mut parts: Vec<Vec<Valuation>> = vec![Vec::new(); self.part_count];
        for (class, &part) in self.classes.iter().zip(&self.assignment) {
            parts[part].extend(class.iter().cloned());
        }
        let cover = parts.into_iter().map(Team::from_valuations).collect();
        // advance the assignment as a base-k counter, last class fastest
        let mut i = self.assignment.len();
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            self.assignment[i] += 1;
            if self.assignment[i] < self.part_count {
                break;
            }
            self.assignment[i] = 0;
        }
        Some(cover)
    }
}

/// The n-variant `a(n:b)`: coordinate `n` rewritten to `b`.
pub fn variant(a: &Valuation, n: usize, b: Element) -> Result<Valuation> {
    if n >= a.len() {
        return Err(Error::ValuationLength {
            expected: n + 1,
            actual: a.len(),
        });
    }
    let mut out = a.clone();
    out[n] = b;
    Ok(out)
}

/// `V(n:b) = {a(n:b) : a ∈ V}`.
pub fn variation_element(team: &Team, n: usize, b: Element) -> Result<Team> {
    team.iter()
        .map(|a| variant(a, n, b))
        .collect::<Result<Vec<_>>>()
        .map(Team::from_valuations)
}

/// `V(n:B) = {a(n:b) : a ∈ V, b ∈ B}`.
pub fn variation_subset(team: &Team, n: usize, b: &[Element]) -> Result<Team> {
    let mut out = Vec::new();
    for a in team.iter() {
        for &e in b {
            out.push(variant(a, n, e)?);
        }
    }
    Ok(Team::from_valuations(out))
}

/// `V(n:f) = {a(n:f(a)) : a ∈ V}` for an explicit finite map `f`, which must
/// be total on the team.
pub fn variation_fn(
    team: &Team,
    n: usize,
    f: &BTreeMap<Valuation, Element>,
) -> Result<Team> {
    let mut out = Vec::new();
    for a in team.iter() {
        let &b = f.get(a).ok_or(Error::PartialFunction)?;
        out.push(variant(a, n, b)?);
    }
    Ok(Team::from_valuations(out))
}

/// Lazy enumeration of the J-independent functions `f: V → A`: exactly the
/// functions constant on each `≈_J`-class (`|A|^c` of them for `c` classes),
/// each returned as an explicit finite map.
pub struct IndependentFunctions {
    classes: Vec<Team>,
    universe_size: usize,
    values: Vec<Element>,
    done: bool,
}

pub fn independent_functions(
    team: &Team,
    j: &SlashSet,
    universe_size: usize,
    budget: u64,
) -> Result<IndependentFunctions> {
    let classes = classes(team, j);
    let total = (universe_size as u128)
        .checked_pow(classes.len() as u32)
        .unwrap_or(u128::MAX);
    if total > budget as u128 {
        return Err(Error::BudgetExceeded {
            what: "enumerating independent functions",
            needed: total,
            limit: budget,
        });
    }
    Ok(IndependentFunctions {
        values: vec![0; classes.len()],
        classes,
        universe_size,
        done: false,
    })
}

impl Iterator for IndependentFunctions {
    type Item = BTreeMap<Valuation, Element>;

    fn next(&mut self) -> Option<BTreeMap<Valuation, Element>> {
        if self.done {
            return None;
        }
        let mut f = BTreeMap::new();
        for (class, &value) in self.classes.iter().zip(&self.values) {
            for a in class.iter() {
                f.insert(a.clone(), value);
            }
        }
        let mut i = self.values.len();
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            self.values[i] += 1;
            if self.values[i] < self.universe_size {
                break;
            }
            self.values[i] = 0;
        }
        Some(f)
    }
}
