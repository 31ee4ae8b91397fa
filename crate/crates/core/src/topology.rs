//! The Jacobson (hull-kernel) topology on a set of primitive ideals.
//!
//! Points are ideals; the closure of a point set `X` is the set of points
//! containing `D_X`, the intersection of the ideals in `X`. By convention
//! `D_∅ = S`, so `C(∅) = ∅`. Spaces are tiny, so closed sets and all
//! topological properties are computed by brute force over point subsets.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ideals;
use crate::modact::ActionWitness;
use crate::primitive::{self, PrimSearchReport, PrimitiveWitness, PullbackStatus};
use crate::semigroup::{FiniteSemigroup, SemigroupHom};
use crate::subset::ElemSet;

/// Largest number of points a space may hold.
pub const MAX_POINTS: usize = 32;
/// Default cap for scans over all `2^|points|` subsets.
pub const DEFAULT_SUBSET_BOUND: usize = 20;
/// Default cap for scans over all pairs of subsets.
pub const DEFAULT_PAIR_BOUND: usize = 10;

/// Annotation carried by checks that hold trivially for finite spaces.
pub const FINITE_SCALE_NOTE: &str = "finite-scale: trivially true for finite spaces, not falsifiable here";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TopologyError {
    #[error("{0} points exceed the maximum of {MAX_POINTS}")]
    TooManyPoints(usize),
    #[error("point {0} is listed twice")]
    DuplicatePoint(ElemSet),
    #[error("point {0} is not a nonempty proper two-sided ideal")]
    InvalidPoint(ElemSet),
    #[error("subset scan over {points} points exceeds the bound {bound}")]
    BoundExceeded { points: usize, bound: usize },
    #[error("irreducible closed set {set:?} has {count} generic points")]
    UniqueGenericPointViolation { set: Vec<usize>, count: usize },
    #[error("irreducible closed sets differ from the point closures")]
    IrreducibleClosureMismatch,
    #[error("irreducible components differ from the closures of minimal points")]
    ComponentMismatch,
    #[error("space is not built over the homomorphism's {0}")]
    SemigroupMismatch(&'static str),
    #[error("target space carries no module witnesses")]
    MissingWitnesses,
}

/// A subset of the points of a [`StructureSpace`], by point index.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PointSet(u32);

impl PointSet {
    pub const EMPTY: PointSet = PointSet(0);

    pub fn full(n: usize) -> Self {
        if n >= 32 {
            PointSet(u32::MAX)
        } else {
            PointSet((1u32 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        PointSet(1 << i)
    }

    pub fn from_points<I: IntoIterator<Item = usize>>(it: I) -> Self {
        PointSet(it.into_iter().fold(0, |acc, i| acc | 1 << i))
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn contains(self, i: usize) -> bool {
        i < 32 && self.0 >> i & 1 == 1
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn union(self, o: Self) -> Self {
        PointSet(self.0 | o.0)
    }

    pub fn intersection(self, o: Self) -> Self {
        PointSet(self.0 & o.0)
    }

    pub fn is_subset(self, o: Self) -> bool {
        self.0 & !o.0 == 0
    }

    pub fn is_proper_subset(self, o: Self) -> bool {
        self.is_subset(o) && self != o
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        ElemSet::from_bits(self.0 as u64).iter()
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    fn all(n: usize) -> impl Iterator<Item = PointSet> {
        (0..(1u64 << n)).map(|b| PointSet(b as u32))
    }
}

impl Serialize for PointSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

/// `Prim_B(S)` with its closure operator. Point order is fixed at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureSpace {
    semigroup: FiniteSemigroup,
    points: Vec<ElemSet>,
    witnesses: Vec<ActionWitness>,
}

impl StructureSpace {
    /// A space over bare ideals, without module witnesses.
    pub fn new(semigroup: FiniteSemigroup, points: Vec<ElemSet>) -> Result<Self, TopologyError> {
        if points.len() > MAX_POINTS {
            return Err(TopologyError::TooManyPoints(points.len()));
        }
        for (i, &p) in points.iter().enumerate() {
            if points[..i].contains(&p) {
                return Err(TopologyError::DuplicatePoint(p));
            }
            if p == semigroup.elements() || !ideals::is_two_sided_ideal(&semigroup, p) {
                return Err(TopologyError::InvalidPoint(p));
            }
        }
        Ok(StructureSpace { semigroup, points, witnesses: Vec::new() })
    }

    pub fn from_report(semigroup: FiniteSemigroup, report: &PrimSearchReport) -> Result<Self, TopologyError> {
        let mut space = Self::new(semigroup, report.ideals())?;
        space.witnesses = report.points.iter().map(|p| p.witness.clone()).collect();
        Ok(space)
    }

    pub fn semigroup(&self) -> &FiniteSemigroup {
        &self.semigroup
    }

    pub fn points(&self) -> &[ElemSet] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn all_points(&self) -> PointSet {
        PointSet::full(self.points.len())
    }

    pub fn point_index(&self, ideal: ElemSet) -> Option<usize> {
        self.points.iter().position(|&p| p == ideal)
    }

    /// The witnessed point, when this space was built from a report.
    pub fn witness(&self, i: usize) -> Option<PrimitiveWitness> {
        self.witnesses.get(i).map(|w| PrimitiveWitness { ideal: self.points[i], witness: w.clone() })
    }

    /// `D_X`, the intersection of the ideals in `X`; `S` for empty `X`.
    pub fn d_kernel(&self, x: PointSet) -> ElemSet {
        x.iter().fold(self.semigroup.elements(), |acc, i| acc.intersection(self.points[i]))
    }

    /// Points containing `a`.
    pub fn hull(&self, a: ElemSet) -> PointSet {
        PointSet::from_points((0..self.points.len()).filter(|&i| a.is_subset(self.points[i])))
    }

    pub fn closure(&self, x: PointSet) -> PointSet {
        self.hull(self.d_kernel(x))
    }

    pub fn point_closure(&self, p: usize) -> PointSet {
        self.closure(PointSet::singleton(p))
    }

    pub fn is_closed(&self, x: PointSet) -> bool {
        self.closure(x) == x
    }

    fn require_bound(&self, bound: usize) -> Result<(), TopologyError> {
        if self.points.len() > bound {
            return Err(TopologyError::BoundExceeded { points: self.points.len(), bound });
        }
        Ok(())
    }

    /// All closed point sets, ascending by mask.
    pub fn closed_sets(&self) -> Result<Vec<PointSet>, TopologyError> {
        self.closed_sets_bounded(DEFAULT_SUBSET_BOUND)
    }

    pub fn closed_sets_bounded(&self, bound: usize) -> Result<Vec<PointSet>, TopologyError> {
        self.require_bound(bound)?;
        Ok(PointSet::all(self.points.len()).filter(|&x| self.is_closed(x)).collect())
    }

    /// Points whose ideal contains no other point's ideal.
    pub fn minimal_points(&self) -> Vec<usize> {
        (0..self.points.len()).filter(|&i| !self.points.iter().any(|q| q.is_proper_subset(self.points[i]))).collect()
    }

    pub fn verify_axioms(&self) -> Result<AxiomReport, TopologyError> {
        self.verify_axioms_bounded(DEFAULT_PAIR_BOUND)
    }

    /// Kuratowski conditions over all subsets and pairs of subsets, T0, and
    /// the finite-scale forms of compactness and the descending chain condition.
    pub fn verify_axioms_bounded(&self, pair_bound: usize) -> Result<AxiomReport, TopologyError> {
        self.require_bound(pair_bound)?;
        let n = self.points.len();
        let mut violation = None;
        let mut note = |v: AxiomViolation| {
            if violation.is_none() {
                violation = Some(v);
            }
        };
        let closure: Vec<PointSet> = PointSet::all(n).map(|x| self.closure(x)).collect();
        let cl = |x: PointSet| closure[x.0 as usize];

        let empty_closure = cl(PointSet::EMPTY).is_empty();
        if !empty_closure {
            note(AxiomViolation::EmptyClosure);
        }
        let mut extensive = true;
        let mut idempotent = true;
        let mut additive = true;
        for x in PointSet::all(n) {
            if extensive && !x.is_subset(cl(x)) {
                extensive = false;
                note(AxiomViolation::NotExtensive { x: x.to_vec() });
            }
            if idempotent && cl(cl(x)) != cl(x) {
                idempotent = false;
                note(AxiomViolation::NotIdempotent { x: x.to_vec() });
            }
            if additive {
                for y in PointSet::all(n) {
                    if cl(x.union(y)) != cl(x).union(cl(y)) {
                        additive = false;
                        note(AxiomViolation::NotAdditive { x: x.to_vec(), y: y.to_vec() });
                        break;
                    }
                }
            }
        }
        let mut t0 = true;
        'pairs: for p in 0..n {
            for q in 0..p {
                if self.point_closure(p) == self.point_closure(q) {
                    t0 = false;
                    note(AxiomViolation::NotT0 { p: q, q: p });
                    break 'pairs;
                }
            }
        }
        let closed = self.closed_sets_bounded(pair_bound)?;
        let finite_intersection = finite_intersection_check(n, &closed);
        let descending_chains = descending_chain_check(&closed);
        let minimal = self.minimal_points();
        let minimal_points_finite = FiniteScaleCheck {
            passed: minimal.len() <= n,
            checked: minimal.len(),
            note: FINITE_SCALE_NOTE.to_string(),
        };
        Ok(AxiomReport {
            points: n,
            empty_closure,
            extensive,
            idempotent,
            additive,
            t0,
            finite_intersection,
            descending_chains,
            minimal_points_finite,
            first_violation: violation,
        })
    }

    /// Irreducible closed sets, their generic points, components and minimal
    /// points, with the structural assertions applied.
    pub fn irreducibility_report(&self) -> Result<IrreducibilityReport, TopologyError> {
        let closed = self.closed_sets()?;
        let mut irreducibles = Vec::new();
        for &k in closed.iter().filter(|k| !k.is_empty()) {
            let proper: Vec<PointSet> = closed.iter().copied().filter(|f| f.is_proper_subset(k)).collect();
            let reducible = proper.iter().any(|&a| proper.iter().any(|&b| a.union(b) == k));
            if !reducible {
                irreducibles.push(k);
            }
        }
        let mut generic_points = Vec::with_capacity(irreducibles.len());
        for &k in &irreducibles {
            let generic: Vec<usize> = k.iter().filter(|&p| self.point_closure(p) == k).collect();
            if generic.len() != 1 {
                return Err(TopologyError::UniqueGenericPointViolation { set: k.to_vec(), count: generic.len() });
            }
            generic_points.push(generic[0]);
        }
        let mut point_closures: Vec<PointSet> = (0..self.points.len()).map(|p| self.point_closure(p)).collect();
        point_closures.sort();
        point_closures.dedup();
        if point_closures != irreducibles {
            return Err(TopologyError::IrreducibleClosureMismatch);
        }
        let components: Vec<PointSet> =
            irreducibles.iter().copied().filter(|k| !irreducibles.iter().any(|o| k.is_proper_subset(*o))).collect();
        let minimal_points = self.minimal_points();
        let mut from_minimal: Vec<PointSet> = minimal_points.iter().map(|&p| self.point_closure(p)).collect();
        from_minimal.sort();
        if from_minimal != components {
            return Err(TopologyError::ComponentMismatch);
        }
        Ok(IrreducibilityReport { irreducibles, generic_points, components, minimal_points })
    }

    /// Hasse diagram of the specialization order: `p -> q` when `p ⊊ q` with
    /// no point strictly between.
    pub fn specialization_covers(&self) -> Vec<(usize, usize)> {
        let pts = &self.points;
        let mut edges = Vec::new();
        for p in 0..pts.len() {
            for q in 0..pts.len() {
                if pts[p].is_proper_subset(pts[q])
                    && !pts.iter().any(|r| pts[p].is_proper_subset(*r) && r.is_proper_subset(pts[q]))
                {
                    edges.push((p, q));
                }
            }
        }
        edges
    }

    pub fn summary(&self) -> Result<SpaceSummary, TopologyError> {
        let closed = self.closed_sets()?;
        let irr = self.irreducibility_report()?;
        Ok(SpaceSummary {
            points: self.points.clone(),
            closed_sets: closed.len(),
            components: irr.components,
            minimal_points: irr.minimal_points,
        })
    }
}

/// Greedy extraction of a subfamily with empty intersection from every
/// family of closed sets whose intersection is empty.
fn finite_intersection_check(n: usize, closed: &[PointSet]) -> FiniteScaleCheck {
    const FAMILY_SCAN_LIMIT: usize = 12;
    let families: Vec<Vec<PointSet>> = if closed.len() <= FAMILY_SCAN_LIMIT {
        (1u32..(1 << closed.len()))
            .map(|m| closed.iter().enumerate().filter(|(i, _)| m >> i & 1 == 1).map(|(_, &c)| c).collect())
            .collect()
    } else {
        vec![closed.to_vec()]
    };
    let mut passed = true;
    let mut checked = 0;
    for family in families {
        let meet = family.iter().fold(PointSet::full(n), |acc, &c| acc.intersection(c));
        if !meet.is_empty() {
            continue;
        }
        checked += 1;
        let mut remaining = PointSet::full(n);
        let mut picked = 0;
        while !remaining.is_empty() {
            let best = family.iter().min_by_key(|c| c.intersection(remaining).len()).copied().unwrap();
            if best.intersection(remaining) == remaining {
                passed = false;
                break;
            }
            remaining = remaining.intersection(best);
            picked += 1;
        }
        passed &= picked <= family.len();
    }
    FiniteScaleCheck { passed, checked, note: FINITE_SCALE_NOTE.to_string() }
}

/// Every maximal chain of closed sets, walked downward, reaches the empty set.
fn descending_chain_check(closed: &[PointSet]) -> FiniteScaleCheck {
    const CHAIN_LIMIT: usize = 10_000;
    let Some(&top) = closed.iter().max_by_key(|c| c.len()) else {
        return FiniteScaleCheck { passed: true, checked: 0, note: FINITE_SCALE_NOTE.to_string() };
    };
    let covers_below = |c: PointSet| -> Vec<PointSet> {
        closed
            .iter()
            .copied()
            .filter(|d| {
                d.is_proper_subset(c) && !closed.iter().any(|e| d.is_proper_subset(*e) && e.is_proper_subset(c))
            })
            .collect()
    };
    let mut stack = vec![(top, 0usize)];
    let mut chains = 0;
    let mut passed = true;
    while let Some((c, len)) = stack.pop() {
        if chains >= CHAIN_LIMIT {
            break;
        }
        let below = covers_below(c);
        if below.is_empty() {
            chains += 1;
            // a chain stabilises at the bottom; its length is bounded by the closed-set count
            passed &= c.is_empty() && len < closed.len();
        }
        for d in below {
            stack.push((d, len + 1));
        }
    }
    FiniteScaleCheck { passed, checked: chains, note: FINITE_SCALE_NOTE.to_string() }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiniteScaleCheck {
    pub passed: bool,
    pub checked: usize,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum AxiomViolation {
    EmptyClosure,
    NotExtensive { x: Vec<usize> },
    NotIdempotent { x: Vec<usize> },
    NotAdditive { x: Vec<usize>, y: Vec<usize> },
    NotT0 { p: usize, q: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub points: usize,
    pub empty_closure: bool,
    pub extensive: bool,
    pub idempotent: bool,
    pub additive: bool,
    pub t0: bool,
    pub finite_intersection: FiniteScaleCheck,
    pub descending_chains: FiniteScaleCheck,
    pub minimal_points_finite: FiniteScaleCheck,
    pub first_violation: Option<AxiomViolation>,
}

impl AxiomReport {
    pub fn kuratowski(&self) -> bool {
        self.empty_closure && self.extensive && self.idempotent && self.additive
    }

    pub fn all_passed(&self) -> bool {
        self.kuratowski()
            && self.t0
            && self.finite_intersection.passed
            && self.descending_chains.passed
            && self.minimal_points_finite.passed
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IrreducibilityReport {
    pub irreducibles: Vec<PointSet>,
    /// Generic point of each irreducible, in the same order.
    pub generic_points: Vec<usize>,
    pub components: Vec<PointSet>,
    pub minimal_points: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpaceSummary {
    pub points: Vec<ElemSet>,
    pub closed_sets: usize,
    pub components: Vec<PointSet>,
    pub minimal_points: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ContinuityStatus {
    Continuous,
    NotContinuous,
    /// Some target point does not pull back to a source point.
    Partial,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PointTransport {
    pub target_point: usize,
    pub preimage: ElemSet,
    pub status: PullbackStatus,
    pub source_point: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ContinuityReport {
    pub status: ContinuityStatus,
    pub transports: Vec<PointTransport>,
    pub non_transporting: Vec<usize>,
    pub closed_preimages_checked: usize,
    pub hull_identities_checked: usize,
    pub first_failure: Option<String>,
}

impl ContinuityReport {
    pub fn count(&self, status: PullbackStatus) -> usize {
        self.transports.iter().filter(|t| t.status == status).count()
    }
}

/// Continuity of `phi_*: Prim(T) -> Prim(S)`, `q -> phi^-1(q)`.
///
/// When every target point pulls back to a verified source point, checks that
/// preimages of closed sets are closed and that
/// `phi_*^-1(hull(a)) = hull(<phi(a)>)` for every ideal `a` of the source.
pub fn pullback_continuity_check(
    phi: &SemigroupHom,
    source: &StructureSpace,
    target: &StructureSpace,
) -> Result<ContinuityReport, TopologyError> {
    if source.semigroup() != phi.source() {
        return Err(TopologyError::SemigroupMismatch("source"));
    }
    if target.semigroup() != phi.target() {
        return Err(TopologyError::SemigroupMismatch("target"));
    }
    if target.witnesses.len() != target.len() {
        return Err(TopologyError::MissingWitnesses);
    }
    let mut transports = Vec::with_capacity(target.len());
    for q in 0..target.len() {
        let pw = target.witness(q).expect("witness count checked");
        let pb = primitive::pullback(phi, &pw).map_err(|_| TopologyError::SemigroupMismatch("target"))?;
        let source_point = match pb.status {
            PullbackStatus::PrimitiveVerified => source.point_index(pb.ideal),
            _ => None,
        };
        transports.push(PointTransport { target_point: q, preimage: pb.ideal, status: pb.status, source_point });
    }
    let non_transporting: Vec<usize> =
        transports.iter().filter(|t| t.source_point.is_none()).map(|t| t.target_point).collect();
    if !non_transporting.is_empty() {
        return Ok(ContinuityReport {
            status: ContinuityStatus::Partial,
            transports,
            non_transporting,
            closed_preimages_checked: 0,
            hull_identities_checked: 0,
            first_failure: None,
        });
    }
    let image: Vec<usize> = transports.iter().map(|t| t.source_point.unwrap()).collect();
    let preimage_of = |f: PointSet| PointSet::from_points((0..target.len()).filter(|&q| f.contains(image[q])));

    let mut first_failure = None;
    let closed = source.closed_sets()?;
    for &f in &closed {
        let pre = preimage_of(f);
        if !target.is_closed(pre) && first_failure.is_none() {
            first_failure = Some(format!("preimage of closed set {:?} is not closed", f.to_vec()));
        }
    }
    let source_ideals = ideals::all_ideals(phi.source());
    for &a in &source_ideals {
        let lhs = preimage_of(source.hull(a));
        let generated = ideals::generated_ideal(phi.target(), phi.image(a)).expect("image of an ideal is nonempty");
        let rhs = target.hull(generated.carrier());
        if lhs != rhs && first_failure.is_none() {
            first_failure = Some(format!("hull identity fails for ideal {a}"));
        }
    }
    Ok(ContinuityReport {
        status: if first_failure.is_none() { ContinuityStatus::Continuous } else { ContinuityStatus::NotContinuous },
        transports,
        non_transporting,
        closed_preimages_checked: closed.len(),
        hull_identities_checked: source_ideals.len(),
        first_failure,
    })
}
