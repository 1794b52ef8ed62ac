//! Acceptance suite. One test per criterion; each prints a single
//! `criterion N (...): PASS|FAIL` line.
//!
//! The corpus shared by criteria 2, 4, 7, and 8 is every formula of height
//! at most 3 built from the equality atoms over v0, v1 (129 153 formulas),
//! plus 200 seeded-random perfect formulas of depth at most 5. Meanings over
//! the two-element structure are computed once and cached.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ifg::algebra::{
    self, atomic_classical_meanings, embed_f, generate_subalgebra, is_downward_closed,
    verify_isomorphism, AlgebraElement, ClosureSignature, Space,
};
use ifg::formula::{Atom, Formula, Node, SlashSet};
use ifg::model::{Element, Structure, Valuation};
use ifg::semantics::{
    is_false_sentencewise, is_true_sentencewise, meaning, models_minus, models_plus, Meaning,
};
use ifg::team::{agrees_outside, independent_functions, saturated_covers, Team};
use ifg::Limits;

fn report(criterion: usize, name: &str, ok: bool, elapsed: Option<Duration>) {
    match elapsed {
        Some(d) => println!(
            "criterion {criterion} ({name}): {} [{:.2?}]",
            if ok { "PASS" } else { "FAIL" },
            d
        ),
        None => println!(
            "criterion {criterion} ({name}): {}",
            if ok { "PASS" } else { "FAIL" }
        ),
    }
    assert!(ok, "criterion {criterion} ({name}) failed");
}

fn limits() -> Limits {
    Limits::default()
}

// ---------------------------------------------------------------- corpus --

fn eq_atoms() -> Vec<Node> {
    vec![
        Node::Atom(Atom::Eq(0, 0)),
        Node::Atom(Atom::Eq(0, 1)),
        Node::Atom(Atom::Eq(1, 1)),
    ]
}

fn all_slashes() -> Vec<SlashSet> {
    (0u8..4)
        .map(|m| (0..2).filter(|i| m >> i & 1 == 1).collect())
        .collect()
}

/// All formulas one connective taller than `base`, together with the atoms.
fn extend_layer(base: &[Node]) -> Vec<Node> {
    let slashes = all_slashes();
    let mut out = eq_atoms();
    for f in base {
        out.push(Node::Not(Box::new(f.clone())));
        for j in &slashes {
            for v in 0..2 {
                out.push(Node::Exists(v, j.clone(), Box::new(f.clone())));
                out.push(Node::Forall(v, j.clone(), Box::new(f.clone())));
            }
        }
    }
    for f in base {
        for g in base {
            for j in &slashes {
                out.push(Node::Or(j.clone(), Box::new(f.clone()), Box::new(g.clone())));
                out.push(Node::And(j.clone(), Box::new(f.clone()), Box::new(g.clone())));
            }
        }
    }
    out
}

fn random_atom(rng: &mut ChaCha8Rng) -> Node {
    Node::Atom(Atom::Eq(rng.gen_range(0..2), rng.gen_range(0..2)))
}

fn random_slash(rng: &mut ChaCha8Rng, perfect: bool) -> SlashSet {
    if perfect {
        SlashSet::empty()
    } else {
        (0..2).filter(|_| rng.gen_bool(0.5)).collect()
    }
}

fn random_node(rng: &mut ChaCha8Rng, depth: usize, perfect: bool) -> Node {
    if depth == 0 || rng.gen_bool(0.25) {
        return random_atom(rng);
    }
    match rng.gen_range(0..5) {
        0 => Node::Not(Box::new(random_node(rng, depth - 1, perfect))),
        1 => Node::Or(
            random_slash(rng, perfect),
            Box::new(random_node(rng, depth - 1, perfect)),
            Box::new(random_node(rng, depth - 1, perfect)),
        ),
        2 => Node::And(
            random_slash(rng, perfect),
            Box::new(random_node(rng, depth - 1, perfect)),
            Box::new(random_node(rng, depth - 1, perfect)),
        ),
        3 => Node::Exists(
            rng.gen_range(0..2),
            random_slash(rng, perfect),
            Box::new(random_node(rng, depth - 1, perfect)),
        ),
        _ => Node::Forall(
            rng.gen_range(0..2),
            random_slash(rng, perfect),
            Box::new(random_node(rng, depth - 1, perfect)),
        ),
    }
}

fn random_formulas(seed: u64, count: usize, depth: usize, perfect: bool) -> Vec<Formula> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let f = Formula::new(2, random_node(&mut rng, depth, perfect)).unwrap();
        if perfect || !f.is_perfect() {
            out.push(f);
        }
    }
    out
}

/// The criterion-2 corpus: exhaustive height ≤ 3 plus 200 random perfect
/// formulas of depth ≤ 5.
fn corpus() -> &'static [Formula] {
    static C: OnceLock<Vec<Formula>> = OnceLock::new();
    C.get_or_init(|| {
        let h2 = extend_layer(&eq_atoms());
        let h3 = extend_layer(&h2);
        let mut all: Vec<Formula> = h3
            .into_iter()
            .map(|n| Formula::new(2, n).unwrap())
            .collect();
        all.extend(random_formulas(0xACCE97, 200, 5, true));
        all
    })
}

fn structure2() -> Structure {
    Structure::new(2).unwrap()
}

fn corpus_meanings() -> &'static [Meaning] {
    static M: OnceLock<Vec<Meaning>> = OnceLock::new();
    M.get_or_init(|| {
        let s = structure2();
        let limits = limits();
        corpus()
            .iter()
            .map(|f| meaning(&s, f, &limits).unwrap())
            .collect()
    })
}

/// All 16 teams of `^2{0,1}`.
fn all_teams22() -> Vec<Team> {
    let vals = Space::new(2, 2).all_valuations();
    (0u32..16)
        .map(|mask| {
            Team::from_valuations(
                vals.iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, v)| v.clone()),
            )
        })
        .collect()
}

// ------------------------------------------------------------- criteria --

#[test]
fn criterion_1_signature_example() {
    let start = Instant::now();
    let limits = limits();
    let f = Formula::parse("A v0/{} . E v1/{v0} . v0 = v1", None).unwrap();
    let mut ok = true;
    for size in [2, 3] {
        let s = Structure::new(size).unwrap();
        ok &= !is_true_sentencewise(&s, &f, &limits).unwrap();
        ok &= !is_false_sentencewise(&s, &f, &limits).unwrap();
    }
    let s1 = Structure::new(1).unwrap();
    ok &= is_true_sentencewise(&s1, &f, &limits).unwrap();
    ok &= !is_false_sentencewise(&s1, &f, &limits).unwrap();
    let elapsed = start.elapsed();
    ok &= elapsed < Duration::from_secs(1);
    report(1, "signature example", ok, Some(elapsed));
}

#[test]
fn criterion_2_conservative_extension() {
    let start = Instant::now();
    let s = structure2();
    let limits = limits();
    let teams = all_teams22();
    let mut ok = true;
    let mut checked = 0usize;
    for f in corpus() {
        if !f.is_perfect() {
            continue;
        }
        checked += 1;
        for team in &teams {
            let tarski_all = team
                .iter()
                .all(|a| s.tarski_eval(f, a).unwrap());
            let tarski_none = team
                .iter()
                .all(|a| !s.tarski_eval(f, a).unwrap());
            ok &= models_plus(&s, f, team, &limits).unwrap() == tarski_all;
            ok &= models_minus(&s, f, team, &limits).unwrap() == tarski_none;
        }
    }
    ok &= checked > 2000;
    let elapsed = start.elapsed();
    ok &= elapsed < Duration::from_secs(300);
    report(2, "conservative extension", ok, Some(elapsed));
}

#[test]
fn criterion_3_perfection_preserves_strategies() {
    let s = structure2();
    let limits = limits();
    let teams = all_teams22();
    let mut ok = true;
    for f in &random_formulas(0x5EED03, 200, 4, false) {
        let p = f.perfection();
        for team in &teams {
            if models_plus(&s, f, team, &limits).unwrap() {
                ok &= models_plus(&s, &p, team, &limits).unwrap();
            }
            if models_minus(&s, f, team, &limits).unwrap() {
                ok &= models_minus(&s, &p, team, &limits).unwrap();
            }
        }
    }
    report(3, "perfection preserves strategies", ok, None);
}

#[test]
fn criterion_4_double_suit_invariants() {
    let s = structure2();
    let limits = limits();
    let mut ok = true;
    let mut check = |m: &Meaning| {
        ok &= m.is_double_suit();
        ok &= is_downward_closed(&m.plus.members());
        ok &= is_downward_closed(&m.minus.members());
        let overlap = m.plus.intersect(&m.minus);
        ok &= overlap.maximal() == [Team::empty()];
    };
    for m in corpus_meanings() {
        check(m);
    }
    for f in &random_formulas(0x5EED03, 200, 4, false) {
        check(&meaning(&s, f, &limits).unwrap());
    }
    report(4, "double-suit and downward closure", ok, None);
}

#[test]
fn criterion_5_perfect_element_characterization() {
    let limits = limits();
    let space = Space::new(2, 2);
    let one = algebra::one(space);
    let zero = algebra::zero(space);
    let empty = SlashSet::empty();

    let mut elements: Vec<AlgebraElement> = Vec::new();
    let s = structure2();
    let atoms = atomic_classical_meanings(&s, 2).unwrap();
    let generators: Vec<AlgebraElement> = atoms.iter().map(|v| embed_f(space, v)).collect();
    elements.extend(
        generate_subalgebra(space, &generators, ClosureSignature::EmptyReduct, &limits).unwrap(),
    );
    // imperfect meanings so both directions of the equivalence are exercised
    for text in [
        "A v0/{} . E v1/{v0} . v0 = v1",
        "(v0 = v1 |/{v0,v1} ~v0 = v1)",
        "E v1/{v0} . v0 = v1",
    ] {
        let f = Formula::parse(text, Some(2)).unwrap();
        let m = meaning(&s, &f, &limits).unwrap();
        elements.push(m);
    }

    let mut ok = true;
    let mut saw_perfect = false;
    let mut saw_imperfect = false;
    for x in &elements {
        let perfect = x.is_perfect();
        saw_perfect |= perfect;
        saw_imperfect |= !perfect;
        let sum = algebra::plus_j(x, &x.neg(), &empty, &limits).unwrap();
        let product = algebra::times_j(x, &x.neg(), &empty, &limits).unwrap();
        ok &= perfect == (sum == one);
        ok &= perfect == (product == zero);
    }
    ok &= saw_perfect && saw_imperfect;
    report(5, "perfect iff excluded middle", ok, None);
}

#[test]
fn criterion_6_isomorphism() {
    let limits = limits();
    let mut ok = true;
    for (universe, n) in [(2usize, 1usize), (2, 2), (3, 2)] {
        let equality_only = Structure::new(universe).unwrap();
        let mut with_unary = Structure::new(universe).unwrap();
        with_unary
            .add_relation("R", 1, [vec![0]])
            .unwrap();
        for s in [&equality_only, &with_unary] {
            let start = Instant::now();
            let r = verify_isomorphism(s, n, &limits).unwrap();
            let elapsed = start.elapsed();
            let pass = r.all_pass() && elapsed < Duration::from_secs(120);
            if !pass {
                println!("  (|A|,N)=({universe},{n}) rels={}:\n{r}", s.relations().count());
            }
            ok &= pass;
        }
    }
    report(6, "classical algebra isomorphism", ok, None);
}

#[test]
fn criterion_7_perfect_meaning_collapse() {
    let s = structure2();
    let limits = limits();
    let mut ok = true;
    let mut collapsed = 0usize;
    for (f, m) in corpus().iter().zip(corpus_meanings()) {
        if !m.is_perfect() {
            continue;
        }
        collapsed += 1;
        let m0 = meaning(&s, &f.perfection(), &limits).unwrap();
        ok &= *m == m0;
    }
    ok &= collapsed > 2000;
    report(7, "perfect meanings collapse slashes", ok, None);
}

#[test]
fn criterion_8_compositional_coherence() {
    let s = structure2();
    let limits = limits();
    let teams = all_teams22();
    let agree = |f: &Formula, m: &Meaning| -> bool {
        teams.iter().all(|team| {
            m.plus.contains(team) == models_plus(&s, f, team, &limits).unwrap()
                && m.minus.contains(team) == models_minus(&s, f, team, &limits).unwrap()
        })
    };
    let mut ok = true;
    // the exhaustive layer is closed under subformulas, so checking every
    // root covers every subformula occurrence
    for (f, m) in corpus().iter().zip(corpus_meanings()) {
        ok &= agree(f, m);
    }
    // for the random tail, check each distinct subformula explicitly
    let mut subnodes: BTreeSet<Node> = BTreeSet::new();
    for f in corpus().iter().skip(corpus().len() - 200) {
        for (_, node) in f.subformula_tree() {
            subnodes.insert(node.clone());
        }
    }
    for node in subnodes {
        let f = Formula::new(2, node).unwrap();
        let m = meaning(&s, &f, &limits).unwrap();
        ok &= agree(&f, &m);
    }
    report(8, "compositional coherence", ok, None);
}

#[test]
fn criterion_9_team_oracle_equivalence() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x7EA9);
    let budget = limits().enumeration;
    let mut ok = true;

    let mut check = |team: &Team, j: &SlashSet, universe: usize| {
        // functions: every map team → A, kept when constant on ≈_J classes
        let fast: BTreeSet<BTreeMap<Valuation, Element>> =
            independent_functions(team, j, universe, budget)
                .unwrap()
                .collect();
        let brute = brute_force_functions(team, j, universe);
        ok &= fast == brute;
        // covers: every assignment of valuations to parts, kept when every
        // ≈_J-related pair lands in the same part
        for parts in [2usize, 3] {
            let fast: BTreeSet<Vec<Team>> = saturated_covers(team, j, parts, budget)
                .unwrap()
                .collect();
            ok &= fast == brute_force_covers(team, j, parts);
        }
    };

    for (universe, n) in [(2usize, 2usize), (3, 2), (2, 3), (3, 3)] {
        let space = Space::new(universe, n);
        let vals = space.all_valuations();
        let slashes: Vec<SlashSet> = (0u64..1 << n)
            .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect())
            .collect();
        for size in 0..=6usize.min(vals.len()) {
            for _ in 0..3 {
                let mut picked = vals.clone();
                for i in (1..picked.len()).rev() {
                    picked.swap(i, rng.gen_range(0..=i));
                }
                picked.truncate(size);
                let team = Team::from_valuations(picked);
                for j in &slashes {
                    check(&team, j, universe);
                }
            }
        }
    }
    report(9, "team enumeration oracles", ok, None);
}

fn brute_force_functions(
    team: &Team,
    j: &SlashSet,
    universe: usize,
) -> BTreeSet<BTreeMap<Valuation, Element>> {
    let vals: Vec<&Valuation> = team.iter().collect();
    let mut out = BTreeSet::new();
    let total = (universe as u64).pow(vals.len() as u32);
    for mut code in 0..total {
        let mut f = BTreeMap::new();
        for a in &vals {
            f.insert((*a).clone(), (code % universe as u64) as Element);
            code /= universe as u64;
        }
        let independent = vals.iter().enumerate().all(|(x, a)| {
            vals[..x].iter().all(|b| {
                !agrees_outside(a, b, j).unwrap() || f[*a] == f[*b]
            })
        });
        if independent {
            out.insert(f);
        }
    }
    out
}

fn brute_force_covers(team: &Team, j: &SlashSet, parts: usize) -> BTreeSet<Vec<Team>> {
    let vals: Vec<&Valuation> = team.iter().collect();
    let mut out = BTreeSet::new();
    let total = (parts as u64).pow(vals.len() as u32);
    for mut code in 0..total {
        let mut assignment = Vec::with_capacity(vals.len());
        for _ in &vals {
            assignment.push((code % parts as u64) as usize);
            code /= parts as u64;
        }
        let saturated = vals.iter().enumerate().all(|(x, a)| {
            vals[..x].iter().enumerate().all(|(y, b)| {
                !agrees_outside(a, b, j).unwrap() || assignment[x] == assignment[y]
            })
        });
        if saturated {
            let cover: Vec<Team> = (0..parts)
                .map(|p| {
                    Team::from_valuations(
                        vals.iter()
                            .zip(&assignment)
                            .filter(|(_, &q)| q == p)
                            .map(|(a, _)| (*a).clone()),
                    )
                })
                .collect();
            out.insert(cover);
        }
    }
    out
}
