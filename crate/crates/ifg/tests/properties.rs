//! Property tests for the structural invariants: parser round-trips,
//! polarity, perfection, the agreement relation, cover/union coherence,
//! downward closure, and the antichain representation.

use std::collections::BTreeSet;

use proptest::prelude::*;

use ifg::algebra::{is_downward_closed, Space, TeamFamily};
use ifg::formula::{Atom, Formula, Node, SlashSet};
use ifg::model::{Structure, Valuation};
use ifg::semantics::{models_minus, models_plus};
use ifg::team::{agrees_outside, classes, saturated_covers, union_j, Team};
use ifg::Limits;

const BUDGET: u64 = 1 << 20;

fn slash_strategy(n: usize) -> impl Strategy<Value = SlashSet> {
    prop::collection::btree_set(0..n, 0..=n).prop_map(|s| s.into_iter().collect())
}

fn node_strategy(n: usize) -> impl Strategy<Value = Node> {
    let leaf = (0..n, 0..n).prop_map(|(i, j)| Node::Atom(Atom::Eq(i, j)));
    leaf.prop_recursive(3, 24, 2, move |inner| {
        prop_oneof![
            inner.clone().prop_map(|c| Node::Not(Box::new(c))),
            (slash_strategy(n), inner.clone(), inner.clone())
                .prop_map(|(j, l, r)| Node::Or(j, Box::new(l), Box::new(r))),
            (slash_strategy(n), inner.clone(), inner.clone())
                .prop_map(|(j, l, r)| Node::And(j, Box::new(l), Box::new(r))),
            (0..n, slash_strategy(n), inner.clone())
                .prop_map(|(v, j, c)| Node::Exists(v, j, Box::new(c))),
            (0..n, slash_strategy(n), inner.clone())
                .prop_map(|(v, j, c)| Node::Forall(v, j, Box::new(c))),
        ]
    })
}

fn formula_strategy(n: usize) -> impl Strategy<Value = Formula> {
    node_strategy(n).prop_map(move |root| Formula::new(n, root).unwrap())
}

/// A team over `^2{0,1}` picked by subset mask.
fn team_from_mask(mask: u8) -> Team {
    let vals = Space::new(2, 2).all_valuations();
    Team::from_valuations(
        vals.into_iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, v)| v),
    )
}

proptest! {
    #[test]
    fn parse_print_round_trip(f in formula_strategy(3)) {
        let printed = f.to_string();
        let reparsed = Formula::parse(&printed, Some(3)).unwrap();
        prop_assert_eq!(reparsed, f);
    }

    #[test]
    fn polarity_flips_exactly_under_negation_steps(f in formula_strategy(2)) {
        for (pos, _) in f.subformula_tree() {
            prop_assert_ne!(pos.child(0).polarity(), pos.polarity());
            for step in [1u8, 2, 3] {
                prop_assert_eq!(pos.child(step).polarity(), pos.polarity());
            }
        }
    }

    #[test]
    fn perfection_is_idempotent_and_shape_preserving(f in formula_strategy(3)) {
        let p = f.perfection();
        prop_assert!(p.is_perfect());
        prop_assert_eq!(p.perfection(), p.clone());
        let shape = |g: &Formula| -> Vec<_> {
            g.subformula_tree().into_iter().map(|(pos, _)| pos).collect()
        };
        prop_assert_eq!(shape(&f), shape(&p));
    }

    #[test]
    fn agreement_is_an_equivalence_relation(
        a in prop::collection::vec(0usize..3, 3),
        b in prop::collection::vec(0usize..3, 3),
        c in prop::collection::vec(0usize..3, 3),
        j in slash_strategy(3),
    ) {
        prop_assert!(agrees_outside(&a, &a, &j).unwrap());
        prop_assert_eq!(
            agrees_outside(&a, &b, &j).unwrap(),
            agrees_outside(&b, &a, &j).unwrap()
        );
        if agrees_outside(&a, &b, &j).unwrap() && agrees_outside(&b, &c, &j).unwrap() {
            prop_assert!(agrees_outside(&a, &c, &j).unwrap());
        }
    }

    #[test]
    fn empty_slash_agreement_is_equality(
        a in prop::collection::vec(0usize..3, 3),
        b in prop::collection::vec(0usize..3, 3),
    ) {
        prop_assert_eq!(
            agrees_outside(&a, &b, &SlashSet::empty()).unwrap(),
            a == b
        );
        let total: SlashSet = (0..3).collect();
        prop_assert!(agrees_outside(&a, &b, &total).unwrap());
    }

    #[test]
    fn classes_partition_the_team(mask in 0u8.., j in slash_strategy(2)) {
        let team = team_from_mask(mask);
        let blocks = classes(&team, &j);
        let mut seen: BTreeSet<Valuation> = BTreeSet::new();
        for block in &blocks {
            prop_assert!(!block.is_empty());
            for v in block.iter() {
                prop_assert!(team.contains(v));
                prop_assert!(seen.insert(v.clone()), "blocks overlap");
            }
        }
        prop_assert_eq!(seen.len(), team.len());
    }

    #[test]
    fn negation_involution_on_teams(f in formula_strategy(2), mask in 0u8..) {
        let s = Structure::new(2).unwrap();
        let limits = Limits::default();
        let team = team_from_mask(mask);
        let doubled = Formula::new(
            2,
            Node::Not(Box::new(Node::Not(Box::new(f.root().clone())))),
        )
        .unwrap();
        prop_assert_eq!(
            models_plus(&s, &f, &team, &limits).unwrap(),
            models_plus(&s, &doubled, &team, &limits).unwrap()
        );
        prop_assert_eq!(
            models_minus(&s, &f, &team, &limits).unwrap(),
            models_minus(&s, &doubled, &team, &limits).unwrap()
        );
    }

    #[test]
    fn verdicts_are_downward_closed(f in formula_strategy(2)) {
        let s = Structure::new(2).unwrap();
        let limits = Limits::default();
        for mask in 0u8..16 {
            let team = team_from_mask(mask);
            let plus = models_plus(&s, &f, &team, &limits).unwrap();
            let minus = models_minus(&s, &f, &team, &limits).unwrap();
            for drop in 0..4 {
                if mask >> drop & 1 == 0 {
                    continue;
                }
                let sub = team_from_mask(mask & !(1 << drop));
                if plus {
                    prop_assert!(models_plus(&s, &f, &sub, &limits).unwrap());
                }
                if minus {
                    prop_assert!(models_minus(&s, &f, &sub, &limits).unwrap());
                }
            }
        }
    }

    #[test]
    fn antichain_membership_matches_materialized_closure(
        masks in prop::collection::vec(0u8..16, 0..4)
    ) {
        let family = TeamFamily::from_maximal(masks.into_iter().map(team_from_mask));
        prop_assert!(family.is_suit());
        let members = family.members();
        prop_assert!(is_downward_closed(&members));
        for mask in 0u8..16 {
            let team = team_from_mask(mask);
            prop_assert_eq!(family.contains(&team), members.contains(&team));
        }
    }
}

/// `∪_J` is defined on a tuple exactly when the cover enumeration generates
/// that tuple: checked over every pair of teams of `^2{0,1}`.
#[test]
fn union_j_and_covers_agree_exhaustively() {
    let slashes: Vec<SlashSet> = (0u8..4)
        .map(|m| (0..2).filter(|i| m >> i & 1 == 1).collect())
        .collect();
    for j in &slashes {
        for m1 in 0u8..16 {
            for m2 in 0u8..16 {
                let t1 = team_from_mask(m1);
                let t2 = team_from_mask(m2);
                let union = t1.union(&t2);
                let generated = saturated_covers(&union, j, 2, BUDGET)
                    .unwrap()
                    .any(|cover| cover[0] == t1 && cover[1] == t2);
                let defined = union_j(&[t1.clone(), t2.clone()], j);
                assert_eq!(
                    defined.is_some(),
                    generated,
                    "parts {t1} {t2} under {j}"
                );
                if let Some(u) = defined {
                    assert_eq!(u, union);
                }
            }
        }
    }
}

/// Downward closure checked exhaustively on the 512 teams of `^2{0,1,2}`
/// for a handful of formulas, imperfect ones included.
#[test]
fn downward_closure_on_three_element_universe() {
    let s = Structure::new(3).unwrap();
    let limits = Limits::default();
    let vals = s.all_valuations(2, BUDGET).unwrap();
    for text in [
        "A v0/{} . E v1/{v0} . v0 = v1",
        "(v0 = v1 |/{v1} ~v0 = v1)",
        "E v1/{} . v0 = v1",
    ] {
        let f = Formula::parse(text, None).unwrap();
        let mut plus = vec![false; 512];
        let mut minus = vec![false; 512];
        for mask in 0u16..512 {
            let team = Team::from_valuations(
                vals.iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, v)| v.clone()),
            );
            plus[mask as usize] = models_plus(&s, &f, &team, &limits).unwrap();
            minus[mask as usize] = models_minus(&s, &f, &team, &limits).unwrap();
        }
        for mask in 0u16..512 {
            for drop in 0..9 {
                if mask >> drop & 1 == 0 {
                    continue;
                }
                let sub = (mask & !(1 << drop)) as usize;
                assert!(!plus[mask as usize] || plus[sub], "{text} plus not closed");
                assert!(!minus[mask as usize] || minus[sub], "{text} minus not closed");
            }
        }
    }
}
