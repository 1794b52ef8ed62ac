//! The IFG-cylindric power set algebra over a finite valuation space, plus
//! the ordinary cylindric set algebra and the embedding between them.
//!
//! Elements are pairs `⟨X⁺, X⁻⟩` of downward-closed team families. Families
//! are stored as antichains of maximal teams; membership is subset-of-some-
//! maximal. Operations whose definitions quantify existentially over all
//! teams (the plus coordinate of `+_J`, both coordinates of `C_{n,J}`) are
//! computed by evaluating the membership predicate over every team of the
//! space and compressing to maximal elements, which is exact as long as
//! `|A|^N` stays within the configured budget.
//!
//! The full algebras of all (double) suits are doubly exponential and exist
//! here only as predicates, never as materialized universes.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::formula::SlashSet;
use crate::model::{Element as BaseElement, Structure, Valuation};
use crate::team::{
    classes, independent_functions, saturated_covers, variation_element, variation_fn,
    variation_subset, Team,
};
use crate::Limits;

/// The valuation space `^N A`: a base-set size and a dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Space {
    pub universe_size: usize,
    pub n: usize,
}

impl Space {
    pub fn new(universe_size: usize, n: usize) -> Self {
        assert!(universe_size > 0 && n > 0, "space must be nondegenerate");
        Space { universe_size, n }
    }

    /// `|A|^N`.
    pub fn points(&self) -> u128 {
        (self.universe_size as u128)
            .checked_pow(self.n as u32)
            .unwrap_or(u128::MAX)
    }

    /// Number of points, after checking it against the team-enumeration
    /// budget.
    fn points_within(&self, limits: &Limits) -> Result<usize> {
        let points = self.points();
        if points > limits.meaning_space as u128 || points > 63 {
            return Err(Error::SpaceTooLarge {
                points,
                limit: limits.meaning_space,
            });
        }
        Ok(points as usize)
    }

    /// All valuations in lexicographic order.
    pub fn all_valuations(&self) -> Vec<Valuation> {
        let mut out = Vec::new();
        let mut current = vec![0; self.n];
        loop {
            out.push(current.clone());
            let mut i = self.n;
            loop {
                if i == 0 {
                    return out;
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

    pub fn full_team(&self) -> Team {
        Team::from_valuations(self.all_valuations())
    }

    pub fn elements(&self) -> std::ops::Range<BaseElement> {
        0..self.universe_size
    }

    fn team_from_mask(&self, mask: u64, vals: &[Valuation]) -> Team {
        Team::from_valuations(
            vals.iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, v)| v.clone()),
        )
    }

}

/// A downward-closed family of teams, represented by its antichain of
/// maximal teams. The empty team always belongs to the implied closure.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TeamFamily {
    maximal: Vec<Team>,
}

impl TeamFamily {
    /// The family `{∅}`.
    pub fn just_empty() -> Self {
        TeamFamily {
            maximal: vec![Team::empty()],
        }
    }

    /// The power set of a single team, `𝒫(V)`.
    pub fn power_set_of(team: Team) -> Self {
        TeamFamily {
            maximal: vec![team],
        }
    }

    /// Build from candidate maximal teams, pruning any team contained in
    /// another. An empty candidate list yields `{∅}`.
    pub fn from_maximal(teams: impl IntoIterator<Item = Team>) -> Self {
        let mut teams: Vec<Team> = teams.into_iter().collect();
        teams.sort();
        teams.dedup();
        let maximal: Vec<Team> = teams
            .iter()
            .filter(|t| !teams.iter().any(|u| *t != u && t.is_subset(u)))
            .cloned()
            .collect();
        if maximal.is_empty() {
            TeamFamily::just_empty()
        } else {
            TeamFamily { maximal }
        }
    }

    /// Build the family of all teams satisfying a downward-closed predicate,
    /// by evaluating it on every team of the space.
    pub fn from_predicate(
        space: &Space,
        limits: &Limits,
        mut pred: impl FnMut(&Team) -> Result<bool>,
    ) -> Result<Self> {
        let points = space.points_within(limits)?;
        let vals = space.all_valuations();
        let total: u64 = 1 << points;
        let mut sat = vec![false; total as usize];
        for mask in 0..total {
            sat[mask as usize] = pred(&space.team_from_mask(mask, &vals))?;
        }
        let mut maximal = Vec::new();
        for mask in 0..total {
            if !sat[mask as usize] {
                continue;
            }
            let is_max = (0..points)
                .all(|i| mask >> i & 1 == 1 || !sat[(mask | 1 << i) as usize]);
            if is_max {
                maximal.push(space.team_from_mask(mask, &vals));
            }
        }
        Ok(TeamFamily::from_maximal(maximal))
    }

    pub fn maximal(&self) -> &[Team] {
        &self.maximal
    }

    /// Membership in the implied downward closure.
    pub fn contains(&self, team: &Team) -> bool {
        self.maximal.iter().any(|m| team.is_subset(m))
    }

    /// `⋃` of the closure, i.e. the union of the maximal teams.
    pub fn union_all(&self) -> Team {
        self.maximal
            .iter()
            .fold(Team::empty(), |acc, t| acc.union(t))
    }

    /// Intersection of two downward closures, again as an antichain.
    pub fn intersect(&self, other: &TeamFamily) -> TeamFamily {
        let mut candidates = Vec::new();
        for p in &self.maximal {
            for q in &other.maximal {
                candidates.push(p.intersection(q));
            }
        }
        TeamFamily::from_maximal(candidates)
    }

    /// Structural suit check: the representation is a valid antichain
    /// (nonempty and pairwise incomparable), which makes the implied
    /// closure a nonempty downward-closed family.
    pub fn is_suit(&self) -> bool {
        !self.maximal.is_empty()
            && self
                .maximal
                .iter()
                .enumerate()
                .all(|(i, t)| {
                    self.maximal
                        .iter()
                        .enumerate()
                        .all(|(k, u)| i == k || !(t.is_subset(u) || u.is_subset(t)))
                })
    }

    /// Every team of the downward closure, materialized. Exponential in the
    /// size of the maximal teams; meant for cross-checks on small spaces.
    pub fn members(&self) -> BTreeSet<Team> {
        let mut out = BTreeSet::new();
        for m in &self.maximal {
            let vals = m.valuations();
            for mask in 0u64..1 << vals.len() {
                out.insert(Team::from_valuations(
                    vals.iter()
                        .enumerate()
                        .filter(|(i, _)| mask >> i & 1 == 1)
                        .map(|(_, v)| v.clone()),
                ));
            }
        }
        out
    }
}

/// Explicit downward-closure check for a materialized family; the oracle the
/// antichain representation is validated against.
pub fn is_downward_closed(family: &BTreeSet<Team>) -> bool {
    family.iter().all(|team| {
        let vals = team.valuations();
        (0..vals.len()).all(|drop| {
            family.contains(&Team::from_valuations(
                vals.iter()
                    .enumerate()
                    .filter(|(i, _)| *i != drop)
                    .map(|(_, v)| v.clone()),
            ))
        })
    })
}

/// An element of the IFG-cylindric power set algebra: a pair `⟨X⁺, X⁻⟩` of
/// team families over a common space.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlgebraElement {
    pub space: Space,
    pub plus: TeamFamily,
    pub minus: TeamFamily,
}

/// The constant `0 = ⟨{∅}, 𝒫(^N A)⟩`.
pub fn zero(space: Space) -> AlgebraElement {
    AlgebraElement {
        space,
        plus: TeamFamily::just_empty(),
        minus: TeamFamily::power_set_of(space.full_team()),
    }
}

/// The constant `1 = ⟨𝒫(^N A), {∅}⟩`.
pub fn one(space: Space) -> AlgebraElement {
    AlgebraElement {
        space,
        plus: TeamFamily::power_set_of(space.full_team()),
        minus: TeamFamily::just_empty(),
    }
}

/// The diagonal constant `D_ij`.
pub fn diag(space: Space, i: usize, j: usize) -> Result<AlgebraElement> {
    if i >= space.n || j >= space.n {
        return Err(Error::VariableOutOfRange {
            index: i.max(j),
            count: space.n,
        });
    }
    let eq = Team::from_valuations(
        space
            .all_valuations()
            .into_iter()
            .filter(|a| a[i] == a[j]),
    );
    Ok(embed_f(space, &eq))
}

impl AlgebraElement {
    /// `¬X = ⟨X⁻, X⁺⟩`.
    pub fn neg(&self) -> AlgebraElement {
        AlgebraElement {
            space: self.space,
            plus: self.minus.clone(),
            minus: self.plus.clone(),
        }
    }

    /// Both coordinates are suits and their closures intersect in `{∅}`.
    pub fn is_double_suit(&self) -> bool {
        self.plus.is_suit()
            && self.minus.is_suit()
            && self
                .plus
                .maximal()
                .iter()
                .all(|p| self.minus.maximal().iter().all(|q| p.is_disjoint(q)))
    }

    /// `X⁺ = 𝒫(V)` for some team `V`.
    pub fn is_flat(&self) -> bool {
        self.plus.maximal().len() == 1
    }

    /// `X = ⟨𝒫(V), 𝒫(^N A ∖ V)⟩` for some team `V`.
    pub fn is_perfect(&self) -> bool {
        if !self.is_flat() {
            return false;
        }
        let witness = &self.plus.maximal()[0];
        let complement = classical_complement(self.space, witness);
        self.minus == TeamFamily::power_set_of(complement)
    }
}

/// Membership test for the existential coordinate of `+_J` / `·_J`: does
/// the team split into a J-saturated disjoint 2-cover with the parts in the
/// two families? Enumerates class-to-part assignments; when both families
/// are power sets of a single team the assignment can be checked class by
/// class without enumeration, which the general route must agree with.
fn split_member(
    team: &Team,
    j: &SlashSet,
    left: &TeamFamily,
    right: &TeamFamily,
    budget: u64,
) -> Result<bool> {
    if let ([p], [q]) = (left.maximal(), right.maximal()) {
        for class in classes(team, j) {
            if !(class.is_subset(p) || class.is_subset(q)) {
                return Ok(false);
            }
        }
        return Ok(true);
    }
    split_member_general(team, j, left, right, budget)
}

fn split_member_general(
    team: &Team,
    j: &SlashSet,
    left: &TeamFamily,
    right: &TeamFamily,
    budget: u64,
) -> Result<bool> {
    for cover in saturated_covers(team, j, 2, budget)? {
        if left.contains(&cover[0]) && right.contains(&cover[1]) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Membership test for the plus coordinate of `C_{n,J}`: does some
/// J-independent rewrite of coordinate `n` land in the family? Again a
/// per-class check suffices when the family is a single power set.
fn cyl_member(
    team: &Team,
    n: usize,
    j: &SlashSet,
    family: &TeamFamily,
    universe_size: usize,
    budget: u64,
) -> Result<bool> {
    if let [p] = family.maximal() {
        for class in classes(team, j) {
            let fits = (0..universe_size)
                .map(|b| variation_element(&class, n, b))
                .collect::<Result<Vec<_>>>()?
                .iter()
                .any(|t| t.is_subset(p));
            if !fits {
                return Ok(false);
            }
        }
        return Ok(true);
    }
    cyl_member_general(team, n, j, family, universe_size, budget)
}

fn cyl_member_general(
    team: &Team,
    n: usize,
    j: &SlashSet,
    family: &TeamFamily,
    universe_size: usize,
    budget: u64,
) -> Result<bool> {
    for f in independent_functions(team, j, universe_size, budget)? {
        if family.contains(&variation_fn(team, n, &f)?) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// `X +_J Y`: trumps are teams splitting into a J-saturated disjoint cover
/// with one part a trump of each operand; cotrumps are common cotrumps.
pub fn plus_j(
    x: &AlgebraElement,
    y: &AlgebraElement,
    j: &SlashSet,
    limits: &Limits,
) -> Result<AlgebraElement> {
    assert_eq!(x.space, y.space, "operands live in different spaces");
    let plus = TeamFamily::from_predicate(&x.space, limits, |v| {
        split_member(v, j, &x.plus, &y.plus, limits.enumeration)
    })?;
    Ok(AlgebraElement {
        space: x.space,
        plus,
        minus: x.minus.intersect(&y.minus),
    })
}

/// `X ·_J Y`, the de Morgan dual of `+_J`.
pub fn times_j(
    x: &AlgebraElement,
    y: &AlgebraElement,
    j: &SlashSet,
    limits: &Limits,
) -> Result<AlgebraElement> {
    assert_eq!(x.space, y.space, "operands live in different spaces");
    let minus = TeamFamily::from_predicate(&x.space, limits, |w| {
        split_member(w, j, &x.minus, &y.minus, limits.enumeration)
    })?;
    Ok(AlgebraElement {
        space: x.space,
        plus: x.plus.intersect(&y.plus),
        minus,
    })
}

/// Cylindrification `C_{n,J}(X)`: trumps are teams with a J-independent
/// rewrite of coordinate `n` into a trump of `X`; cotrumps are teams whose
/// full `n`-variation is a cotrump of `X`.
pub fn cyl(
    n: usize,
    j: &SlashSet,
    x: &AlgebraElement,
    limits: &Limits,
) -> Result<AlgebraElement> {
    if n >= x.space.n {
        return Err(Error::VariableOutOfRange {
            index: n,
            count: x.space.n,
        });
    }
    let universe: Vec<BaseElement> = x.space.elements().collect();
    let plus = TeamFamily::from_predicate(&x.space, limits, |v| {
        cyl_member(v, n, j, &x.plus, x.space.universe_size, limits.enumeration)
    })?;
    let minus = TeamFamily::from_predicate(&x.space, limits, |w| {
        Ok(x.minus.contains(&variation_subset(w, n, &universe)?))
    })?;
    Ok(AlgebraElement {
        space: x.space,
        plus,
        minus,
    })
}

/// The embedding `F(V) = ⟨𝒫(V), 𝒫(^N A ∖ V)⟩`: the perfect element over `V`.
pub fn embed_f(space: Space, v: &Team) -> AlgebraElement {
    AlgebraElement {
        space,
        plus: TeamFamily::power_set_of(v.clone()),
        minus: TeamFamily::power_set_of(classical_complement(space, v)),
    }
}

/// The inverse direction `G(X) = ⋃X⁺`. Defined for any element; inverse to
/// `F` exactly on perfect elements.
pub fn embed_g(x: &AlgebraElement) -> Team {
    x.plus.union_all()
}

/// Classical complement `−V = ^N A ∖ V`.
pub fn classical_complement(space: Space, v: &Team) -> Team {
    space.full_team().difference(v)
}

/// Classical cylindrification `C_n(V) = V(n:A)`.
pub fn classical_cylinder(space: Space, n: usize, v: &Team) -> Result<Team> {
    let universe: Vec<BaseElement> = space.elements().collect();
    variation_subset(v, n, &universe)
}

/// The classical diagonal set `{a : a_i = a_j}`.
pub fn classical_diag(space: Space, i: usize, j: usize) -> Result<Team> {
    if i >= space.n || j >= space.n {
        return Err(Error::VariableOutOfRange {
            index: i.max(j),
            count: space.n,
        });
    }
    Ok(Team::from_valuations(
        space
            .all_valuations()
            .into_iter()
            .filter(|a| a[i] == a[j]),
    ))
}

/// Which operation set to close under.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosureSignature {
    /// All `+_J`, `·_J`, `C_{n,J}` for every `J ⊆ {0..N-1}`.
    Full,
    /// The ∅-reduct: only `+_∅`, `·_∅`, `C_{n,∅}` (plus `¬` and constants).
    EmptyReduct,
}

fn signature_slashes(space: Space, signature: ClosureSignature) -> Vec<SlashSet> {
    match signature {
        ClosureSignature::EmptyReduct => vec![SlashSet::empty()],
        ClosureSignature::Full => {
            let mut out = Vec::new();
            for mask in 0u64..1 << space.n {
                out.push((0..space.n).filter(|i| mask >> i & 1 == 1).collect());
            }
            out
        }
    }
}

/// Least set containing the generators and the constants, closed under the
/// chosen signature's operations. Breadth-first fixpoint with canonical
/// element ordering; deterministic.
pub fn generate_subalgebra(
    space: Space,
    generators: &[AlgebraElement],
    signature: ClosureSignature,
    limits: &Limits,
) -> Result<Vec<AlgebraElement>> {
    let slashes = signature_slashes(space, signature);
    let mut closure: BTreeSet<AlgebraElement> = BTreeSet::new();
    closure.insert(zero(space));
    closure.insert(one(space));
    for i in 0..space.n {
        for j in 0..space.n {
            closure.insert(diag(space, i, j)?);
        }
    }
    for g in generators {
        assert_eq!(g.space, space, "generator lives in a different space");
        closure.insert(g.clone());
    }
    loop {
        if closure.len() > limits.closure_cap {
            return Err(Error::ClosureTooLarge {
                cap: limits.closure_cap,
            });
        }
        let snapshot: Vec<AlgebraElement> = closure.iter().cloned().collect();
        let mut fresh: Vec<AlgebraElement> = Vec::new();
        for x in &snapshot {
            fresh.push(x.neg());
            for slash in &slashes {
                for n in 0..space.n {
                    fresh.push(cyl(n, slash, x, limits)?);
                }
                for y in &snapshot {
                    fresh.push(plus_j(x, y, slash, limits)?);
                    fresh.push(times_j(x, y, slash, limits)?);
                }
            }
        }
        let before = closure.len();
        closure.extend(fresh);
        if closure.len() == before {
            return Ok(closure.into_iter().collect());
        }
    }
}

/// Closure of a set of classical elements under complement, union, and
/// cylindrifications.
pub fn generate_classical_algebra(
    space: Space,
    generators: &[Team],
    limits: &Limits,
) -> Result<Vec<Team>> {
    let mut closure: BTreeSet<Team> = BTreeSet::new();
    closure.insert(Team::empty());
    closure.insert(space.full_team());
    for i in 0..space.n {
        for j in 0..space.n {
            closure.insert(classical_diag(space, i, j)?);
        }
    }
    closure.extend(generators.iter().cloned());
    loop {
        if closure.len() > limits.closure_cap {
            return Err(Error::ClosureTooLarge {
                cap: limits.closure_cap,
            });
        }
        let snapshot: Vec<Team> = closure.iter().cloned().collect();
        let mut fresh: Vec<Team> = Vec::new();
        for v in &snapshot {
            fresh.push(classical_complement(space, v));
            for n in 0..space.n {
                fresh.push(classical_cylinder(space, n, v)?);
            }
            for w in &snapshot {
                fresh.push(v.union(w));
            }
        }
        let before = closure.len();
        closure.extend(fresh);
        if closure.len() == before {
            return Ok(closure.into_iter().collect());
        }
    }
}

/// Result of checking the isomorphism between the ordinary cylindric set
/// algebra and the ∅-reduct closure of atomic meanings.
#[derive(Debug, Clone)]
pub struct IsoReport {
    pub classical_size: usize,
    pub ifg_size: usize,
    pub checks: Vec<(String, bool)>,
}

impl IsoReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok)
    }

    /// One `EQ <name> PASS|FAIL` line per checked equation.
    pub fn machine_lines(&self) -> Vec<String> {
        self.checks
            .iter()
            .map(|(name, ok)| format!("EQ {name} {}", if *ok { "PASS" } else { "FAIL" }))
            .collect()
    }
}

impl fmt::Display for IsoReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "classical algebra: {} elements", self.classical_size)?;
        writeln!(f, "IFG empty-reduct closure: {} elements", self.ifg_size)?;
        for (name, ok) in &self.checks {
            writeln!(f, "  {:30} {}", name, if *ok { "PASS" } else { "FAIL" })?;
        }
        write!(
            f,
            "overall: {}",
            if self.all_pass() { "PASS" } else { "FAIL" }
        )
    }
}

/// The classical meanings of all atomic formulas over `N` variables: one
/// equality set per variable pair and one set per relation/argument-tuple
/// combination.
pub fn atomic_classical_meanings(structure: &Structure, n: usize) -> Result<Vec<Team>> {
    let space = Space::new(structure.universe_size(), n);
    let vals = space.all_valuations();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            out.push(classical_diag(space, i, j)?);
        }
    }
    for (name, rel) in structure.relations() {
        let mut args = vec![0usize; rel.arity];
        loop {
            let atom = crate::formula::Atom::Rel(name.to_string(), args.clone());
            let mut sat = Vec::new();
            for a in &vals {
                if structure.atomic_eval(&atom, a)? {
                    sat.push(a.clone());
                }
            }
            out.push(Team::from_valuations(sat));
            // next argument tuple over {0..n-1}^arity
            let mut i = rel.arity;
            loop {
                if i == 0 {
                    // done with this relation
                    args.clear();
                    break;
                }
                i -= 1;
                args[i] += 1;
                if args[i] < n {
                    break;
                }
                args[i] = 0;
            }
            if args.is_empty() {
                break;
            }
        }
    }
    Ok(out)
}

/// Build both algebras from the atomic meanings and check that `F` is a
/// bijective homomorphism with inverse `G`.
pub fn verify_isomorphism(structure: &Structure, n: usize, limits: &Limits) -> Result<IsoReport> {
    let space = Space::new(structure.universe_size(), n);
    let atoms = atomic_classical_meanings(structure, n)?;
    let classical = generate_classical_algebra(space, &atoms, limits)?;
    let ifg_generators: Vec<AlgebraElement> =
        atoms.iter().map(|v| embed_f(space, v)).collect();
    let ifg = generate_subalgebra(space, &ifg_generators, ClosureSignature::EmptyReduct, limits)?;
    let empty = SlashSet::empty();

    let mut checks = Vec::new();
    checks.push(("F_zero".to_string(), embed_f(space, &Team::empty()) == zero(space)));
    checks.push((
        "F_one".to_string(),
        embed_f(space, &space.full_team()) == one(space),
    ));
    let mut diag_ok = true;
    for i in 0..n {
        for j in 0..n {
            diag_ok &= embed_f(space, &classical_diag(space, i, j)?) == diag(space, i, j)?;
        }
    }
    checks.push(("F_diag".to_string(), diag_ok));

    let mut neg_ok = true;
    let mut cyl_ok = true;
    let mut gf_ok = true;
    for v in &classical {
        neg_ok &= embed_f(space, &classical_complement(space, v)) == embed_f(space, v).neg();
        for k in 0..n {
            cyl_ok &= embed_f(space, &classical_cylinder(space, k, v)?)
                == cyl(k, &empty, &embed_f(space, v), limits)?;
        }
        gf_ok &= embed_g(&embed_f(space, v)) == *v;
    }
    checks.push(("F_complement".to_string(), neg_ok));
    checks.push(("F_cylinder".to_string(), cyl_ok));

    let mut plus_ok = true;
    for v in &classical {
        for w in &classical {
            plus_ok &= embed_f(space, &v.union(w))
                == plus_j(&embed_f(space, v), &embed_f(space, w), &empty, limits)?;
        }
    }
    checks.push(("F_union".to_string(), plus_ok));

    let mut fg_ok = true;
    let mut perfect_ok = true;
    for x in &ifg {
        fg_ok &= embed_f(space, &embed_g(x)) == *x;
        perfect_ok &= x.is_perfect();
    }
    checks.push(("G_after_F_identity".to_string(), gf_ok));
    checks.push(("F_after_G_identity".to_string(), fg_ok));
    checks.push(("image_all_perfect".to_string(), perfect_ok));

    let image: BTreeSet<AlgebraElement> =
        classical.iter().map(|v| embed_f(space, v)).collect();
    let ifg_set: BTreeSet<AlgebraElement> = ifg.iter().cloned().collect();
    checks.push((
        "F_bijective".to_string(),
        image == ifg_set && classical.len() == ifg.len(),
    ));

    Ok(IsoReport {
        classical_size: classical.len(),
        ifg_size: ifg.len(),
        checks,
    })
}
