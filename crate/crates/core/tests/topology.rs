use primspace::catalog;
use primspace::enumerate::{enumerate_semigroups, Dedup};
use primspace::ideals::{enumerate_ideals, enumerate_primes};
use primspace::primitive::{search_primitives, Bounds};
use primspace::topology::AxiomViolation;
use primspace::topology::{PointSet, StructureSpace};
use primspace::{ElemSet, FiniteSemigroup};
use proptest::prelude::*;

fn spaces(s: &FiniteSemigroup) -> Vec<StructureSpace> {
    let primes: Vec<ElemSet> = enumerate_primes(s).iter().map(|i| i.carrier()).collect();
    let report = search_primitives(s, &Bounds::default()).unwrap();
    vec![StructureSpace::new(s.clone(), primes).unwrap(), StructureSpace::from_report(s.clone(), &report).unwrap()]
}

/// Closed sets as `{points containing A}` for every subset `A` of `S`.
fn hull_family(space: &StructureSpace) -> Vec<PointSet> {
    let n = space.semigroup().order();
    let mut out: Vec<PointSet> = (0..1u64 << n)
        .map(|a| {
            PointSet::from_points(space.points().iter().enumerate().filter(|(_, p)| a & !p.bits() == 0).map(|(i, _)| i))
        })
        .collect();
    out.sort();
    out.dedup();
    out
}

#[test]
fn closed_sets_are_hulls() {
    for n in 1..=3 {
        for s in enumerate_semigroups(n, Dedup::None).unwrap() {
            for sp in spaces(&s) {
                assert_eq!(sp.closed_sets().unwrap(), hull_family(&sp));
            }
        }
    }
}

#[test]
fn closed_sets_form_a_lattice() {
    for s in enumerate_semigroups(4, Dedup::UpToIsoAndAntiIso).unwrap() {
        for sp in spaces(&s) {
            let closed = sp.closed_sets().unwrap();
            for &a in &closed {
                for &b in &closed {
                    assert!(closed.contains(&a.union(b)));
                    assert!(closed.contains(&a.intersection(b)));
                }
            }
        }
    }
}

#[test]
fn specialization_matches_inclusion() {
    for s in enumerate_semigroups(4, Dedup::UpToIsoAndAntiIso).unwrap() {
        for sp in spaces(&s) {
            for p in 0..sp.len() {
                for q in 0..sp.len() {
                    assert_eq!(sp.point_closure(p).contains(q), sp.points()[p].is_subset(sp.points()[q]));
                }
            }
        }
    }
}

#[test]
fn structure_checks_pass_on_corpus() {
    for n in 1..=4 {
        for s in enumerate_semigroups(n, Dedup::UpToIsoAndAntiIso).unwrap() {
            for sp in spaces(&s) {
                if sp.len() <= 10 {
                    assert!(sp.verify_axioms().unwrap().all_passed());
                }
                sp.irreducibility_report().unwrap();
            }
        }
    }
}

#[test]
fn additivity_needs_prime_points() {
    let s = catalog::b2xb2();
    let all: Vec<ElemSet> = enumerate_ideals(&s).iter().map(|i| i.carrier()).collect();
    let sp = StructureSpace::new(s, all).unwrap();
    let report = sp.verify_axioms().unwrap();
    assert!(report.extensive && report.idempotent && report.empty_closure);
    assert!(!report.additive);
    assert!(matches!(report.first_violation, Some(AxiomViolation::NotAdditive { .. })));
}

proptest! {
    #[test]
    fn closure_axioms(idx in 0usize..113, x in any::<u32>(), y in any::<u32>()) {
        let s = &enumerate_semigroups(3, Dedup::None).unwrap()[idx];
        for sp in spaces(s) {
            let full = sp.all_points().bits();
            let (x, y) = (PointSet::from_points((0..sp.len()).filter(|i| x >> i & 1 == 1)),
                          PointSet::from_points((0..sp.len()).filter(|i| y >> i & 1 == 1)));
            prop_assert_eq!(x.bits() & !full, 0);
            prop_assert!(x.is_subset(sp.closure(x)));
            prop_assert_eq!(sp.closure(sp.closure(x)), sp.closure(x));
            prop_assert_eq!(sp.closure(x.union(y)), sp.closure(x).union(sp.closure(y)));
            let hull = sp.hull(sp.d_kernel(x));
            prop_assert_eq!(sp.closure(hull), hull);
        }
    }
}
