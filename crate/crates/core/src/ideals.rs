//! Ideals of finite semigroups: predicates, generation, enumeration, prime and
//! maximal ideals.
//!
//! "Ideal" always excludes the empty set and "proper" excludes the whole
//! semigroup. Ideal enumerations are ordered by ascending mask value.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::semigroup::FiniteSemigroup;
use crate::subset::ElemSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Flavor {
    Left,
    Right,
    TwoSided,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("generator set is empty")]
    EmptyGenerator,
    #[error("{0} is not a two-sided ideal")]
    NotAnIdeal(ElemSet),
    #[error("{0} is not a proper ideal")]
    NotProper(ElemSet),
}

/// A nonempty subset closed under multiplication by `S` on the side(s) given
/// by its flavor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct IdealSet {
    carrier: ElemSet,
    flavor: Flavor,
}

impl IdealSet {
    pub fn new(s: &FiniteSemigroup, carrier: ElemSet, flavor: Flavor) -> Result<Self, IdealError> {
        if is_ideal(s, carrier, flavor) {
            Ok(IdealSet { carrier, flavor })
        } else {
            Err(IdealError::NotAnIdeal(carrier))
        }
    }

    pub fn carrier(&self) -> ElemSet {
        self.carrier
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub(crate) fn two_sided_unchecked(carrier: ElemSet) -> Self {
        IdealSet { carrier, flavor: Flavor::TwoSided }
    }
}

pub fn is_ideal(s: &FiniteSemigroup, a: ElemSet, flavor: Flavor) -> bool {
    if a.is_empty() || !a.is_subset(s.elements()) {
        return false;
    }
    let left = || s.left_multiple(a).is_subset(a);
    let right = || s.right_multiple(a).is_subset(a);
    match flavor {
        Flavor::Left => left(),
        Flavor::Right => right(),
        Flavor::TwoSided => left() && right(),
    }
}

pub fn is_two_sided_ideal(s: &FiniteSemigroup, a: ElemSet) -> bool {
    is_ideal(s, a, Flavor::TwoSided)
}

/// The least two-sided ideal containing `x`: the fixpoint of `U -> U ∪ SU ∪ US`.
pub fn generated_ideal(s: &FiniteSemigroup, x: ElemSet) -> Result<IdealSet, IdealError> {
    if x.is_empty() {
        return Err(IdealError::EmptyGenerator);
    }
    Ok(IdealSet::two_sided_unchecked(ideal_closure(s, x)))
}

fn ideal_closure(s: &FiniteSemigroup, x: ElemSet) -> ElemSet {
    let mut u = x;
    loop {
        let next = u.union(s.left_multiple(u)).union(s.right_multiple(u));
        if next == u {
            return u;
        }
        u = next;
    }
}

/// The union `X ∪ XS ∪ SX ∪ XSX`, taken literally. Not an ideal in general.
pub fn xsx_closed_form(s: &FiniteSemigroup, x: ElemSet) -> ElemSet {
    let xs = s.right_multiple(x);
    let sx = s.left_multiple(x);
    let xsx = s.set_product(xs, x);
    x.union(xs).union(sx).union(xsx)
}

/// The union `X ∪ SX ∪ XS ∪ SXS`, which equals the generated ideal.
pub fn standard_closed_form(s: &FiniteSemigroup, x: ElemSet) -> ElemSet {
    let xs = s.right_multiple(x);
    let sx = s.left_multiple(x);
    let sxs = s.left_multiple(xs);
    x.union(xs).union(sx).union(sxs)
}

/// `⟨{a}⟩` for every element, indexed by element.
pub fn principal_ideals(s: &FiniteSemigroup) -> Vec<ElemSet> {
    (0..s.order()).map(|a| ideal_closure(s, ElemSet::singleton(a))).collect()
}

/// Every two-sided ideal, including `S`, ascending by mask.
///
/// An ideal is the union of the principal ideals of its elements, so the
/// family is the union-closure of the principal ideals.
pub fn all_ideals(s: &FiniteSemigroup) -> Vec<ElemSet> {
    let principals = principal_ideals(s);
    let mut family: Vec<ElemSet> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for &p in &principals {
        if seen.insert(p) {
            family.push(p);
        }
    }
    let mut frontier = family.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &a in &frontier {
            for &p in &principals {
                let u = a.union(p);
                if seen.insert(u) {
                    family.push(u);
                    next.push(u);
                }
            }
        }
        frontier = next;
    }
    family.sort();
    family
}

/// All nonempty proper two-sided ideals, ascending by mask.
pub fn enumerate_ideals(s: &FiniteSemigroup) -> Vec<IdealSet> {
    let full = s.elements();
    all_ideals(s).into_iter().filter(|&a| a != full).map(IdealSet::two_sided_unchecked).collect()
}

fn require_proper_ideal(s: &FiniteSemigroup, q: ElemSet) -> Result<(), IdealError> {
    if !is_two_sided_ideal(s, q) {
        return Err(IdealError::NotAnIdeal(q));
    }
    if q == s.elements() {
        return Err(IdealError::NotProper(q));
    }
    Ok(())
}

/// Element-wise prime test: for all `a, b` outside `q` some `a s b` lies outside `q`.
pub fn is_prime(s: &FiniteSemigroup, q: ElemSet) -> Result<bool, IdealError> {
    require_proper_ideal(s, q)?;
    let outside = s.elements().difference(q);
    Ok(outside.iter().all(|a| outside.iter().all(|b| (0..s.order()).any(|m| !q.contains(s.mul(s.mul(a, m), b))))))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ProductVariant {
    /// `AB` is the raw set of products.
    SetProduct,
    /// `AB` is the ideal generated by the products.
    GeneratedProduct,
}

/// Ideal-pair prime test: `AB ⊆ q` forces `A ⊆ q` or `B ⊆ q`.
///
/// Quantifies over every two-sided ideal, the whole semigroup included. For a
/// semigroup without identity the pair `(S, S)` can matter: in the null
/// semigroup `{0, a}` the ideal `{0}` passes against proper pairs alone yet
/// `SS = {0}` shows it is not prime.
pub fn is_prime_by_ideal_pairs(s: &FiniteSemigroup, q: ElemSet, variant: ProductVariant) -> Result<bool, IdealError> {
    require_proper_ideal(s, q)?;
    let ideals = all_ideals(s);
    for &a in &ideals {
        if a.is_subset(q) {
            continue;
        }
        for &b in &ideals {
            if b.is_subset(q) {
                continue;
            }
            let raw = s.set_product(a, b);
            let prod = match variant {
                ProductVariant::SetProduct => raw,
                // raw is nonempty because a and b are
                ProductVariant::GeneratedProduct => ideal_closure(s, raw),
            };
            if prod.is_subset(q) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// All prime ideals, ascending by mask.
pub fn enumerate_primes(s: &FiniteSemigroup) -> Vec<IdealSet> {
    enumerate_ideals(s)
        .into_iter()
        .filter(|q| is_prime(s, q.carrier()).expect("enumerated ideals are proper"))
        .collect()
}

/// Proper ideals that are maximal under inclusion among proper ideals.
pub fn maximal_ideals(s: &FiniteSemigroup) -> Vec<IdealSet> {
    let proper = enumerate_ideals(s);
    proper.iter().filter(|a| !proper.iter().any(|b| a.carrier().is_proper_subset(b.carrier()))).copied().collect()
}

/// True iff `AB ⊆ A ∩ B` for every ordered pair of proper ideals.
pub fn product_containment_check(s: &FiniteSemigroup) -> bool {
    let proper = enumerate_ideals(s);
    proper.iter().all(|a| {
        proper.iter().all(|b| s.set_product(a.carrier(), b.carrier()).is_subset(a.carrier().intersection(b.carrier())))
    })
}
