use primspace::catalog;
use primspace::enumerate::{enumerate_semigroups, Dedup};
use primspace::modact::abelian::{enumerate_group_actions, simple_action_count, AbelianGroup};
use primspace::modact::{
    annihilator, check_action, enumerate_actions, enumerate_actions_with, is_simple, ActionSearch, ModuleSpace,
    Strategy,
};
use primspace::primitive::{search_primitives, verify_primitive_witness, Bounds};
use primspace::FiniteSemigroup;

const BUDGET: u64 = 1 << 24;

fn simple_matrix_actions(s: &FiniteSemigroup, p: u32, k: usize) -> usize {
    let space = ModuleSpace::new(p, k).unwrap();
    enumerate_actions(s, space).unwrap().iter().filter(|w| is_simple(w)).count()
}

fn small_corpus() -> Vec<FiniteSemigroup> {
    (1..=3).flat_map(|n| enumerate_semigroups(n, Dedup::None).unwrap()).collect()
}

#[test]
fn matrix_route_matches_group_route() {
    let z2 = AbelianGroup::new(&[2]).unwrap();
    let z3 = AbelianGroup::new(&[3]).unwrap();
    let v4 = AbelianGroup::new(&[2, 2]).unwrap();
    for s in small_corpus() {
        assert_eq!(simple_action_count(&s, &z2, BUDGET).unwrap(), simple_matrix_actions(&s, 2, 1));
        assert_eq!(simple_action_count(&s, &z3, BUDGET).unwrap(), simple_matrix_actions(&s, 3, 1));
        assert_eq!(simple_action_count(&s, &v4, BUDGET).unwrap(), simple_matrix_actions(&s, 2, 2));
    }
}

#[test]
fn action_counts_match_group_route() {
    let v4 = AbelianGroup::new(&[2, 2]).unwrap();
    let space = ModuleSpace::new(2, 2).unwrap();
    for s in small_corpus() {
        let groups = enumerate_group_actions(&s, &v4, BUDGET).unwrap().len();
        assert_eq!(enumerate_actions(&s, space).unwrap().len(), groups);
    }
}

#[test]
fn cyclic_four_has_no_simple_modules() {
    let z4 = AbelianGroup::new(&[4]).unwrap();
    for n in 1..=4 {
        for s in enumerate_semigroups(n, Dedup::None).unwrap() {
            assert_eq!(simple_action_count(&s, &z4, BUDGET).unwrap(), 0);
        }
    }
}

#[test]
fn klein_four_admits_simple_modules() {
    let v4 = AbelianGroup::new(&[2, 2]).unwrap();
    assert!(simple_action_count(&catalog::cyclic_group(3), &v4, BUDGET).unwrap() > 0);
    assert_eq!(simple_action_count(&catalog::b2m(), &v4, BUDGET).unwrap(), 0);
}

#[test]
fn strategies_agree() {
    let spaces = [(2, 1), (3, 1), (2, 2), (3, 2)];
    let exhaustive = ActionSearch { strategy: Strategy::Exhaustive, ..ActionSearch::default() };
    let generators = ActionSearch { strategy: Strategy::Generators, ..ActionSearch::default() };
    for s in (1..=2).flat_map(|n| enumerate_semigroups(n, Dedup::None).unwrap()) {
        for &(p, k) in &spaces {
            let space = ModuleSpace::new(p, k).unwrap();
            let a = enumerate_actions_with(&s, space, &exhaustive).unwrap();
            let b = enumerate_actions_with(&s, space, &generators).unwrap();
            assert_eq!(a, b);
        }
    }
    for s in enumerate_semigroups(3, Dedup::None).unwrap() {
        let space = ModuleSpace::new(2, 2).unwrap();
        assert_eq!(
            enumerate_actions_with(&s, space, &exhaustive).unwrap(),
            enumerate_actions_with(&s, space, &generators).unwrap()
        );
    }
}

#[test]
fn enumerated_actions_are_actions() {
    let space = ModuleSpace::new(3, 2).unwrap();
    for s in enumerate_semigroups(3, Dedup::UpToIsoAndAntiIso).unwrap() {
        for w in enumerate_actions(&s, space).unwrap() {
            assert!(check_action(&s, &w).unwrap());
        }
    }
}

#[test]
fn witnesses_verify_across_order_three() {
    for s in small_corpus() {
        let report = search_primitives(&s, &Bounds::default()).unwrap();
        for pw in &report.points {
            verify_primitive_witness(&s, pw).unwrap();
            assert_eq!(annihilator(&pw.witness), pw.ideal);
        }
    }
}
