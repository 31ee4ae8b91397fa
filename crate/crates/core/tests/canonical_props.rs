use primspace::enumerate::{canonical_form, enumerate_semigroups, Dedup};
use std::sync::OnceLock;

use primspace::FiniteSemigroup;
use proptest::prelude::*;

fn corpus() -> &'static [FiniteSemigroup] {
    static ALL: OnceLock<Vec<FiniteSemigroup>> = OnceLock::new();
    ALL.get_or_init(|| enumerate_semigroups(4, Dedup::None).unwrap())
}

fn perm_strategy(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #[test]
    fn canonical_form_is_invariant(idx in 0usize..3492, perm in perm_strategy(4)) {
        let s = &corpus()[idx];
        let c = canonical_form(s);
        prop_assert_eq!(canonical_form(&s.relabel(&perm)), c.clone());
        prop_assert_eq!(canonical_form(&s.opposite()), c.clone());
        prop_assert_eq!(canonical_form(&c), c);
    }
}
