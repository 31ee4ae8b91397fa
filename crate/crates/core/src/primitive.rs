//! Bounded search for primitive ideals, witnessed by simple finite modules.
//!
//! The search is sound (every reported point carries a re-checkable simple
//! module whose annihilator is the ideal) and complete only relative to the
//! module catalog in [`Bounds`]. Reports carry the bounds and the primes left
//! unwitnessed.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ideals;
use crate::modact::{self, ActionError, ActionSearch, ActionWitness, ModuleSpace};
use crate::semigroup::{FiniteSemigroup, SemigroupHom};
use crate::subset::ElemSet;

/// The module catalog: every `F_p^k` with `p` in `primes` and `1 <= k <= max_dim`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    pub primes: Vec<u32>,
    pub max_dim: usize,
    /// Search limits; not part of the serialized catalog.
    #[serde(skip)]
    pub search: ActionSearch,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { primes: vec![2, 3, 5], max_dim: 2, search: ActionSearch::default() }
    }
}

impl Bounds {
    pub fn new(primes: Vec<u32>, max_dim: usize) -> Self {
        Bounds { primes, max_dim, ..Default::default() }
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.search.budget = budget;
        self
    }

    /// Catalog spaces in search order: by dimension, then by prime.
    pub fn spaces(&self) -> Result<Vec<ModuleSpace>, ActionError> {
        let mut primes = self.primes.clone();
        primes.sort_unstable();
        primes.dedup();
        let mut out = Vec::new();
        for k in 1..=self.max_dim {
            for &p in &primes {
                out.push(ModuleSpace::new(p, k)?);
            }
        }
        Ok(out)
    }
}

/// A primitive ideal together with a simple module annihilated exactly by it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimitiveWitness {
    pub ideal: ElemSet,
    pub witness: ActionWitness,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimSearchReport {
    pub points: Vec<PrimitiveWitness>,
    pub bounds: Bounds,
    pub unwitnessed_primes: Vec<ElemSet>,
}

impl PrimSearchReport {
    pub fn ideals(&self) -> Vec<ElemSet> {
        self.points.iter().map(|p| p.ideal).collect()
    }
}

/// Runs [`search_primitives_observed`] without an observer.
pub fn search_primitives(s: &FiniteSemigroup, bounds: &Bounds) -> Result<PrimSearchReport, ActionError> {
    search_primitives_observed(s, bounds, |_| {})
}

/// Enumerates the actions of every catalog space, keeps the simple ones whose
/// annihilator is a nonempty proper ideal, and dedupes by ideal keeping the
/// first witness in enumeration order. `observe` sees every action.
pub fn search_primitives_observed(
    s: &FiniteSemigroup,
    bounds: &Bounds,
    mut observe: impl FnMut(&ActionWitness),
) -> Result<PrimSearchReport, ActionError> {
    let full = s.elements();
    let mut points: Vec<PrimitiveWitness> = Vec::new();
    for space in bounds.spaces()? {
        for w in modact::enumerate_actions_with(s, space, &bounds.search)? {
            observe(&w);
            let ann = modact::annihilator(&w);
            if ann.is_empty() || ann == full || points.iter().any(|p| p.ideal == ann) {
                continue;
            }
            if modact::is_simple(&w) {
                points.push(PrimitiveWitness { ideal: ann, witness: w });
            }
        }
    }
    points.sort_by_key(|p| p.ideal);
    let witnessed: Vec<ElemSet> = points.iter().map(|p| p.ideal).collect();
    let unwitnessed_primes =
        ideals::enumerate_primes(s).into_iter().map(|q| q.carrier()).filter(|q| !witnessed.contains(q)).collect();
    Ok(PrimSearchReport { points, bounds: bounds.clone(), unwitnessed_primes })
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error(transparent)]
    Action(#[from] ActionError),
    #[error("witness is not multiplicative")]
    NotAnAction,
    #[error("witness module is not simple")]
    NotSimple,
    #[error("ideal {0} is empty or not proper")]
    ImproperIdeal(ElemSet),
    #[error("{0} is not a two-sided ideal")]
    NotAnIdeal(ElemSet),
    #[error("annihilator {annihilator} differs from the claimed ideal {ideal}")]
    AnnihilatorMismatch { ideal: ElemSet, annihilator: ElemSet },
}

/// Re-checks every invariant of a primitive witness, reporting the first violated.
pub fn verify_primitive_witness(s: &FiniteSemigroup, pw: &PrimitiveWitness) -> Result<(), WitnessError> {
    if !modact::check_action(s, &pw.witness)? {
        return Err(WitnessError::NotAnAction);
    }
    if !modact::is_simple(&pw.witness) {
        return Err(WitnessError::NotSimple);
    }
    if pw.ideal.is_empty() || pw.ideal == s.elements() || !pw.ideal.is_subset(s.elements()) {
        return Err(WitnessError::ImproperIdeal(pw.ideal));
    }
    if !ideals::is_two_sided_ideal(s, pw.ideal) {
        return Err(WitnessError::NotAnIdeal(pw.ideal));
    }
    let annihilator = modact::annihilator(&pw.witness);
    if annihilator != pw.ideal {
        return Err(WitnessError::AnnihilatorMismatch { ideal: pw.ideal, annihilator });
    }
    Ok(())
}

/// True iff every witnessed ideal is prime.
pub fn primitive_implies_prime_check(s: &FiniteSemigroup, report: &PrimSearchReport) -> bool {
    report.points.iter().all(|p| ideals::is_prime(s, p.ideal).unwrap_or(false))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PullbackStatus {
    /// Preimage nonempty and proper, transported module simple, annihilator matches.
    PrimitiveVerified,
    /// Preimage empty or the whole source.
    Improper,
    /// Transported module is not simple over the source.
    SimplicityLost,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pullback {
    pub ideal: ElemSet,
    pub transported: ActionWitness,
    pub status: PullbackStatus,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PullbackError {
    #[error("witness acts on {found} elements, target has {expected}")]
    SemigroupMismatch { expected: usize, found: usize },
}

/// Pulls a target witness back along `phi` by `s m := phi(s) m`.
pub fn pullback(phi: &SemigroupHom, pw: &PrimitiveWitness) -> Result<Pullback, PullbackError> {
    let target_order = phi.target().order();
    if pw.witness.rho().len() != target_order || !pw.ideal.is_subset(phi.target().elements()) {
        return Err(PullbackError::SemigroupMismatch { expected: target_order, found: pw.witness.rho().len() });
    }
    let ideal = phi.preimage(pw.ideal);
    let transported = pw.witness.pull_back(phi.map());
    let source = phi.source();
    let status = if ideal.is_empty() || ideal == source.elements() {
        PullbackStatus::Improper
    } else if !modact::is_simple(&transported) {
        PullbackStatus::SimplicityLost
    } else {
        debug_assert_eq!(modact::annihilator(&transported), ideal);
        PullbackStatus::PrimitiveVerified
    };
    Ok(Pullback { ideal, transported, status })
}
