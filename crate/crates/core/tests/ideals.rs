use std::sync::OnceLock;

use primspace::enumerate::{enumerate_semigroups, Dedup};
use primspace::ideals::{
    self, all_ideals, enumerate_ideals, enumerate_primes, generated_ideal, is_prime, is_prime_by_ideal_pairs,
    maximal_ideals, standard_closed_form, ProductVariant,
};
use primspace::{ElemSet, FiniteSemigroup};
use proptest::prelude::*;

fn corpus(n: usize) -> &'static [FiniteSemigroup] {
    static ALL: OnceLock<Vec<Vec<FiniteSemigroup>>> = OnceLock::new();
    &ALL.get_or_init(|| {
        (0..=4).map(|n| if n == 0 { vec![] } else { enumerate_semigroups(n, Dedup::None).unwrap() }).collect()
    })[n]
}

fn subsets(n: usize) -> impl Iterator<Item = u64> {
    0..(1u64 << n)
}

fn has(mask: u64, x: usize) -> bool {
    mask >> x & 1 == 1
}

fn oracle_is_ideal(s: &FiniteSemigroup, mask: u64) -> bool {
    let n = s.order();
    mask != 0 && (0..n).all(|a| !has(mask, a) || (0..n).all(|t| has(mask, s.mul(a, t)) && has(mask, s.mul(t, a))))
}

fn oracle_ideals(s: &FiniteSemigroup) -> Vec<u64> {
    subsets(s.order()).filter(|&m| oracle_is_ideal(s, m)).collect()
}

fn product(s: &FiniteSemigroup, a: u64, b: u64) -> u64 {
    let n = s.order();
    let mut out = 0;
    for x in (0..n).filter(|&x| has(a, x)) {
        for y in (0..n).filter(|&y| has(b, y)) {
            out |= 1 << s.mul(x, y);
        }
    }
    out
}

/// `AB ⊆ q ⇒ A ⊆ q or B ⊆ q` over all ideals `A, B`, including `S`.
fn oracle_prime(s: &FiniteSemigroup, q: u64, ideals: &[u64]) -> bool {
    ideals.iter().all(|&a| ideals.iter().all(|&b| product(s, a, b) & !q != 0 || a & !q == 0 || b & !q == 0))
}

fn masks(v: &[ElemSet]) -> Vec<u64> {
    v.iter().map(|e| e.bits()).collect()
}

#[test]
fn ideal_lists_match_subset_scan() {
    for n in 1..=4 {
        for s in corpus(n) {
            let ideals = oracle_ideals(s);
            assert_eq!(masks(&all_ideals(s)), ideals);
            let proper: Vec<u64> = ideals.iter().copied().filter(|&m| m != s.elements().bits()).collect();
            assert_eq!(enumerate_ideals(s).iter().map(|i| i.carrier().bits()).collect::<Vec<_>>(), proper);
        }
    }
}

#[test]
fn generated_ideal_is_least_containing_ideal() {
    for n in 1..=4 {
        for s in corpus(n) {
            let ideals = oracle_ideals(s);
            for x in 1..(1u64 << n) {
                let least = ideals.iter().filter(|&&i| i & x == x).fold(u64::MAX, |acc, &i| acc & i);
                let got = generated_ideal(s, ElemSet::from_bits(x)).unwrap().carrier().bits();
                assert_eq!(got, least);
                assert_eq!(standard_closed_form(s, ElemSet::from_bits(x)).bits(), least);
            }
        }
    }
}

#[test]
fn prime_criteria_match_oracle() {
    for n in 1..=4 {
        for s in corpus(n) {
            let ideals = oracle_ideals(s);
            let full = s.elements().bits();
            let expected: Vec<u64> =
                ideals.iter().copied().filter(|&q| q != full && oracle_prime(s, q, &ideals)).collect();
            assert_eq!(enumerate_primes(s).iter().map(|i| i.carrier().bits()).collect::<Vec<_>>(), expected);
            for &q in ideals.iter().filter(|&&q| q != full) {
                let q_set = ElemSet::from_bits(q);
                let element = is_prime(s, q_set).unwrap();
                assert_eq!(element, is_prime_by_ideal_pairs(s, q_set, ProductVariant::SetProduct).unwrap());
                assert_eq!(element, is_prime_by_ideal_pairs(s, q_set, ProductVariant::GeneratedProduct).unwrap());
            }
        }
    }
}

#[test]
fn maximal_ideals_match_oracle() {
    for n in 1..=3 {
        for s in corpus(n) {
            let full = s.elements().bits();
            let proper: Vec<u64> = oracle_ideals(s).into_iter().filter(|&m| m != full).collect();
            let expected: Vec<u64> =
                proper.iter().copied().filter(|&m| !proper.iter().any(|&o| o != m && o & m == m)).collect();
            assert_eq!(maximal_ideals(s).iter().map(|i| i.carrier().bits()).collect::<Vec<_>>(), expected);
        }
    }
}

proptest! {
    #[test]
    fn ideals_closed_under_union_and_intersection(idx in 0usize..3492, pick in any::<(u64, u64)>()) {
        let s = &corpus(4)[idx];
        let ideals = all_ideals(s);
        let a = ideals[(pick.0 % ideals.len() as u64) as usize];
        let b = ideals[(pick.1 % ideals.len() as u64) as usize];
        prop_assert!(ideals::is_two_sided_ideal(s, a.union(b)));
        let meet = a.intersection(b);
        // the product ab lies in both, so the meet is never empty
        prop_assert!(!meet.is_empty());
        prop_assert!(ideals::is_two_sided_ideal(s, meet));
    }

    #[test]
    fn generated_ideal_is_closed_and_minimal(idx in 0usize..3492, x in 1u64..16) {
        let s = &corpus(4)[idx];
        let x = ElemSet::from_bits(x);
        let g = generated_ideal(s, x).unwrap().carrier();
        prop_assert!(x.is_subset(g));
        prop_assert!(ideals::is_two_sided_ideal(s, g));
        prop_assert_eq!(generated_ideal(s, g).unwrap().carrier(), g);
        for i in all_ideals(s) {
            if x.is_subset(i) {
                prop_assert!(g.is_subset(i));
            }
        }
    }
}
