//! Finite left S-modules realised as matrix actions on `F_p^k`.
//!
//! A simple finite module has elementary abelian underlying group: for a prime
//! `p` dividing `|M|` the subgroup `pM` is invariant under every action and
//! proper, so simplicity forces `pM = 0`. Modules are therefore vector spaces
//! over prime fields, and the action of each element is a `k x k` matrix.
//! Additivity and `s0 = 0` hold for any matrix; the remaining axiom is
//! multiplicativity, `rho[s*t] = rho[s] rho[t]`.
//!
//! Over an elementary abelian group, any subgroup is closed under integer
//! scaling (scalars are repeated sums), so invariant subgroups and invariant
//! subspaces coincide. Simplicity is tested on subspaces.
//!
//! [`abelian`] keeps a brute-force model over arbitrary small abelian groups
//! that checks this reduction independently.

pub mod abelian;
mod linalg;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use linalg::EndRing;
pub use linalg::{all_vectors, Matrix, Subspace};

use crate::ideals;
use crate::semigroup::FiniteSemigroup;
use crate::subset::ElemSet;

/// Upper bound on `p^(k^2)` for a module space.
pub const MAX_ENDOMORPHISMS: u64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ActionError {
    #[error("{0} is not a prime below 256")]
    NotPrime(u32),
    #[error("module dimension must be at least 1")]
    ZeroDimension,
    #[error("space with p = {p}, k = {k} has too many endomorphisms")]
    SpaceTooLarge { p: u32, k: usize },
    #[error("witness has {found} matrices, semigroup order is {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix {index} is not {k}x{k} with entries below {p}")]
    MalformedMatrix { index: usize, k: usize, p: u32 },
    #[error("action search exceeded its budget of {budget} nodes")]
    BudgetExceeded { budget: u64 },
}

/// The vector space `F_p^k`, standing in for the abelian group `(M, +, 0)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ModuleSpace {
    p: u32,
    k: usize,
}

fn is_prime_number(p: u32) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

impl ModuleSpace {
    pub fn new(p: u32, k: usize) -> Result<Self, ActionError> {
        if !is_prime_number(p) || p > 251 {
            return Err(ActionError::NotPrime(p));
        }
        if k == 0 {
            return Err(ActionError::ZeroDimension);
        }
        let count = (p as u64).checked_pow((k * k) as u32);
        if count.is_none_or(|c| c > MAX_ENDOMORPHISMS) {
            return Err(ActionError::SpaceTooLarge { p, k });
        }
        Ok(ModuleSpace { p, k })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// `|M| = p^k`.
    pub fn size(&self) -> u64 {
        (self.p as u64).pow(self.k as u32)
    }

    pub fn endomorphism_count(&self) -> u64 {
        (self.p as u64).pow((self.k * self.k) as u32)
    }
}

/// An action `rho: S -> M_k(F_p)`, one matrix per semigroup element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ActionWitness {
    space: ModuleSpace,
    rho: Vec<Matrix>,
}

impl ActionWitness {
    /// Entries are reduced mod `p`. Multiplicativity is not checked here; see
    /// [`check_action`].
    pub fn new(space: ModuleSpace, rho: Vec<Vec<Vec<u32>>>) -> Result<Self, ActionError> {
        let (p, k) = (space.p, space.k);
        let mut mats = Vec::with_capacity(rho.len());
        for (index, m) in rho.into_iter().enumerate() {
            if m.len() != k || m.iter().any(|row| row.len() != k) {
                return Err(ActionError::MalformedMatrix { index, k, p });
            }
            let entries = m.into_iter().flatten().map(|x| (x % p) as u8).collect();
            mats.push(Matrix::from_entries(k, entries));
        }
        Ok(ActionWitness { space, rho: mats })
    }

    pub fn from_matrices(space: ModuleSpace, rho: Vec<Matrix>) -> Self {
        assert!(rho.iter().all(|m| m.dim() == space.k));
        ActionWitness { space, rho }
    }

    /// The action by zero on every element.
    pub fn zero(space: ModuleSpace, order: usize) -> Self {
        ActionWitness { space, rho: vec![Matrix::zero(space.k); order] }
    }

    /// One-dimensional action from scalars.
    pub fn scalars(space: ModuleSpace, values: &[u32]) -> Self {
        assert_eq!(space.k, 1);
        let rho = values.iter().map(|&v| Matrix::from_entries(1, vec![(v % space.p) as u8])).collect();
        ActionWitness { space, rho }
    }

    pub fn space(&self) -> ModuleSpace {
        self.space
    }

    pub fn rho(&self) -> &[Matrix] {
        &self.rho
    }

    pub fn matrix(&self, s: usize) -> &Matrix {
        &self.rho[s]
    }

    /// `rho'[s] = rho[map[s]]`.
    pub fn pull_back(&self, map: &[usize]) -> ActionWitness {
        ActionWitness { space: self.space, rho: map.iter().map(|&t| self.rho[t].clone()).collect() }
    }
}

#[derive(Serialize, Deserialize)]
struct RawWitness {
    p: u32,
    k: usize,
    rho: Vec<Vec<Vec<u32>>>,
}

impl Serialize for ActionWitness {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        RawWitness { p: self.space.p, k: self.space.k, rho: self.rho.iter().map(Matrix::rows).collect() }
            .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ActionWitness {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = RawWitness::deserialize(deserializer)?;
        let space = ModuleSpace::new(raw.p, raw.k).map_err(D::Error::custom)?;
        if raw.rho.iter().flatten().flatten().any(|&x| x >= raw.p) {
            return Err(D::Error::custom("matrix entry not reduced mod p"));
        }
        ActionWitness::new(space, raw.rho).map_err(D::Error::custom)
    }
}

fn check_dims(s: &FiniteSemigroup, w: &ActionWitness) -> Result<(), ActionError> {
    if w.rho.len() != s.order() {
        return Err(ActionError::DimensionMismatch { expected: s.order(), found: w.rho.len() });
    }
    Ok(())
}

/// True iff `rho[s*t] = rho[s] rho[t]` for all pairs.
pub fn check_action(s: &FiniteSemigroup, w: &ActionWitness) -> Result<bool, ActionError> {
    check_dims(s, w)?;
    let p = w.space.p;
    Ok((0..s.order()).all(|a| (0..s.order()).all(|b| w.rho[s.mul(a, b)] == w.rho[a].mul(&w.rho[b], p))))
}

/// `SM`: the span of the images of all `rho[s]`.
pub fn acted_span(w: &ActionWitness) -> Subspace {
    Subspace::span(w.space, w.rho.iter().flat_map(|m| m.columns()))
}

/// The smallest invariant subspace containing `v`.
pub fn generated_submodule(w: &ActionWitness, v: Vec<u8>) -> Subspace {
    let p = w.space.p;
    let mut sub = Subspace::span(w.space, [v]);
    loop {
        let basis = sub.basis().to_vec();
        let mut grew = false;
        for b in &basis {
            for m in &w.rho {
                grew |= sub.insert(m.apply(b, p));
            }
        }
        if !grew || sub.is_full() {
            return sub;
        }
    }
}

/// Simple: `SM != 0` and the only invariant subspaces are `0` and `M`.
pub fn is_simple(w: &ActionWitness) -> bool {
    if acted_span(w).is_zero() {
        return false;
    }
    // every nonzero vector must generate M; checking one vector per line suffices
    all_vectors(w.space)
        .filter(|v| v.iter().find(|&&x| x != 0) == Some(&1))
        .all(|v| generated_submodule(w, v).is_full())
}

/// `Ann_S(M) = {s : rho[s] = 0}`.
pub fn annihilator(w: &ActionWitness) -> ElemSet {
    w.rho.iter().enumerate().filter(|(_, m)| m.is_zero()).map(|(s, _)| s).collect()
}

/// The annihilator is empty, all of `S`, or a two-sided ideal.
pub fn annihilator_is_ideal_or_degenerate(s: &FiniteSemigroup, w: &ActionWitness) -> bool {
    let ann = annihilator(w);
    ann.is_empty() || ann == s.elements() || ideals::is_two_sided_ideal(s, ann)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Exhaust tuples when `|End|^|S|` is within the exhaustive limit,
    /// otherwise backtrack over generators.
    #[default]
    Auto,
    Exhaustive,
    Generators,
}

/// Limits for [`enumerate_actions_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ActionSearch {
    /// Maximum number of candidate assignments examined.
    pub budget: u64,
    /// `Auto` exhausts all tuples when their count is at most this.
    pub exhaustive_limit: u64,
    pub strategy: Strategy,
}

pub const DEFAULT_BUDGET: u64 = 50_000_000;

impl Default for ActionSearch {
    fn default() -> Self {
        ActionSearch { budget: DEFAULT_BUDGET, exhaustive_limit: 4096, strategy: Strategy::Auto }
    }
}

/// Every multiplicative action of `s` on `space`, lexicographic on the
/// concatenated matrix entries.
pub fn enumerate_actions(s: &FiniteSemigroup, space: ModuleSpace) -> Result<Vec<ActionWitness>, ActionError> {
    enumerate_actions_with(s, space, &ActionSearch::default())
}

pub fn enumerate_actions_with(
    s: &FiniteSemigroup,
    space: ModuleSpace,
    cfg: &ActionSearch,
) -> Result<Vec<ActionWitness>, ActionError> {
    let ring = EndRing::shared(space);
    let tuples = action_tuples(s, &ring, cfg)?;
    Ok(tuples
        .into_iter()
        .map(|t| ActionWitness { space, rho: t.into_iter().map(|i| ring.matrix(i).clone()).collect() })
        .collect())
}

fn action_tuples(s: &FiniteSemigroup, ring: &EndRing, cfg: &ActionSearch) -> Result<Vec<Vec<u32>>, ActionError> {
    let n = s.order();
    let tuple_count = (ring.len() as u64).checked_pow(n as u32);
    let exhaustive = match cfg.strategy {
        Strategy::Exhaustive => true,
        Strategy::Generators => false,
        Strategy::Auto => tuple_count.is_some_and(|c| c <= cfg.exhaustive_limit),
    };
    let mut out = if exhaustive {
        match tuple_count {
            Some(c) if c <= cfg.budget => exhaustive_tuples(s, ring),
            _ => return Err(ActionError::BudgetExceeded { budget: cfg.budget }),
        }
    } else {
        generator_tuples(s, ring, cfg.budget)?
    };
    out.sort_unstable();
    Ok(out)
}

fn is_multiplicative(s: &FiniteSemigroup, ring: &EndRing, rho: &[u32]) -> bool {
    let n = s.order();
    (0..n).all(|a| (0..n).all(|b| rho[s.mul(a, b)] == ring.mul(rho[a], rho[b])))
}

fn exhaustive_tuples(s: &FiniteSemigroup, ring: &EndRing) -> Vec<Vec<u32>> {
    let n = s.order();
    let size = ring.len() as u32;
    let mut rho = vec![0u32; n];
    let mut out = Vec::new();
    loop {
        if is_multiplicative(s, ring, &rho) {
            out.push(rho.clone());
        }
        // odometer, last position fastest
        let mut pos = n;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            rho[pos] += 1;
            if rho[pos] < size {
                break;
            }
            rho[pos] = 0;
        }
    }
}

/// Greedy generating set: repeatedly add the element whose adjunction grows
/// the generated subsemigroup the most (ties to the smallest index).
pub fn greedy_generators(s: &FiniteSemigroup) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut closure = ElemSet::EMPTY;
    while closure != s.elements() {
        let (best, grown) = (0..s.order())
            .filter(|&x| !closure.contains(x))
            .map(|x| (x, s.subsemigroup(closure.with(x))))
            .max_by_key(|&(x, c)| (c.len(), std::cmp::Reverse(x)))
            .expect("closure is not yet everything");
        gens.push(best);
        closure = grown;
    }
    gens
}

/// Extends a partial assignment by forced products; false on a conflict.
fn propagate(s: &FiniteSemigroup, ring: &EndRing, rho: &mut [Option<u32>]) -> bool {
    let n = s.order();
    loop {
        let mut changed = false;
        for a in 0..n {
            let Some(ra) = rho[a] else { continue };
            for b in 0..n {
                let Some(rb) = rho[b] else { continue };
                let prod = ring.mul(ra, rb);
                let ab = s.mul(a, b);
                match rho[ab] {
                    Some(x) if x != prod => return false,
                    Some(_) => {}
                    None => {
                        rho[ab] = Some(prod);
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            return true;
        }
    }
}

fn generator_tuples(s: &FiniteSemigroup, ring: &EndRing, budget: u64) -> Result<Vec<Vec<u32>>, ActionError> {
    let gens = greedy_generators(s);
    // rho[g] must satisfy the relation g^(m+r) = g^m of its cyclic subsemigroup
    let candidates: Vec<Vec<u32>> = gens
        .iter()
        .map(|&g| {
            let (m, r) = s.index_period(g);
            (0..ring.len() as u32).filter(|&a| ring.pow(a, m + r) == ring.pow(a, m)).collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut nodes = 0u64;
    let start = vec![None; s.order()];
    descend(s, ring, &gens, &candidates, 0, start, &mut nodes, budget, &mut out)?;
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn descend(
    s: &FiniteSemigroup,
    ring: &EndRing,
    gens: &[usize],
    candidates: &[Vec<u32>],
    depth: usize,
    rho: Vec<Option<u32>>,
    nodes: &mut u64,
    budget: u64,
    out: &mut Vec<Vec<u32>>,
) -> Result<(), ActionError> {
    if depth == gens.len() {
        let full: Vec<u32> = rho.iter().map(|x| x.expect("generators reach every element")).collect();
        debug_assert!(is_multiplicative(s, ring, &full));
        out.push(full);
        return Ok(());
    }
    for &c in &candidates[depth] {
        *nodes += 1;
        if *nodes > budget {
            return Err(ActionError::BudgetExceeded { budget });
        }
        let mut next = rho.clone();
        next[gens[depth]] = Some(c);
        if propagate(s, ring, &mut next) {
            descend(s, ring, gens, candidates, depth + 1, next, nodes, budget, out)?;
        }
    }
    Ok(())
}
