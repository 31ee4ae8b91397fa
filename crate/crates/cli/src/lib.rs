//! Command implementations behind the `primspace` binary.
//!
//! Every command returns a serializable report; the binary only handles
//! argument parsing, output and exit codes.

pub mod check;

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;
use std::time::Instant;

use anyhow::{Context, Result};
use serde::Serialize;

use primspace::enumerate::{enumerate_semigroups_bounded, Dedup, DEFAULT_MAX_ORDER};
use primspace::format::{self, FormatError};
use primspace::ideals::{self, IdealSet};
use primspace::primitive::{search_primitives, verify_primitive_witness, PrimSearchReport};
use primspace::topology::{
    pullback_continuity_check, AxiomReport, ContinuityReport, ContinuityStatus, IrreducibilityReport, SpaceSummary,
    DEFAULT_PAIR_BOUND,
};
use primspace::{catalog, dot, Bounds, ElemSet, FiniteSemigroup, StructureSpace};

pub use check::{cmd_check, CheckOptions, CheckReport};

/// Version of every serialized report.
pub const SCHEMA: u32 = 1;

/// Environment variable overriding the action-search node budget.
pub const BUDGET_ENV: &str = "PRIMSPACE_BUDGET";

/// A table with display labels, read from `@NAME` or a file.
#[derive(Debug, Clone)]
pub struct Input {
    pub semigroup: FiniteSemigroup,
    pub labels: Vec<String>,
}

impl Input {
    pub fn load(source: &str) -> Result<Self> {
        if let Some(name) = source.strip_prefix('@') {
            let ex = catalog::lookup(name).ok_or_else(|| FormatError::UnknownExample(name.to_string()))?;
            return Ok(Input { semigroup: ex.semigroup, labels: ex.labels });
        }
        let semigroup = format::load_table(source).with_context(|| format!("reading table {source}"))?;
        Ok(Self::unlabeled(semigroup))
    }

    pub fn unlabeled(semigroup: FiniteSemigroup) -> Self {
        let labels = (0..semigroup.order()).map(|i| i.to_string()).collect();
        Input { semigroup, labels }
    }

    pub fn show(&self, set: ElemSet) -> String {
        let names: Vec<&str> = set.iter().map(|e| self.labels[e].as_str()).collect();
        format!("{{{}}}", names.join(","))
    }
}

pub fn cmd_gen(order: usize, dedup: bool) -> Result<Vec<FiniteSemigroup>> {
    let mode = if dedup { Dedup::UpToIsoAndAntiIso } else { Dedup::None };
    Ok(enumerate_semigroups_bounded(order, mode, DEFAULT_MAX_ORDER)?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckLine {
    pub name: &'static str,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl CheckLine {
    fn new(name: &'static str, passed: bool, detail: Option<String>) -> Self {
        CheckLine { name, passed, detail }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AnalysisReport {
    pub schema: u32,
    pub semigroup: FiniteSemigroup,
    pub labels: Vec<String>,
    pub ideals: Vec<ElemSet>,
    pub primes: Vec<ElemSet>,
    pub maximals: Vec<ElemSet>,
    pub prim_report: PrimSearchReport,
    pub space: Option<SpaceSummary>,
    pub axioms: Option<AxiomReport>,
    pub irreducibility: Option<IrreducibilityReport>,
    pub checks: Vec<CheckLine>,
    pub all_passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<BTreeMap<&'static str, f64>>,
}

fn carriers(v: &[IdealSet]) -> Vec<ElemSet> {
    v.iter().map(|i| i.carrier()).collect()
}

/// Ideals, primes, maximal ideals, primitive search, structure space,
/// axiom checks and irreducibility, with every check recorded.
pub fn cmd_analyze(input: &Input, bounds: &Bounds, timings: bool) -> Result<AnalysisReport> {
    let s = &input.semigroup;
    let mut times = BTreeMap::new();
    let mut clock = Instant::now();
    let mut lap = |name: &'static str| {
        times.insert(name, clock.elapsed().as_secs_f64() * 1e3);
        clock = Instant::now();
    };

    let ideal_list = carriers(&ideals::enumerate_ideals(s));
    let primes = carriers(&ideals::enumerate_primes(s));
    let maximals = carriers(&ideals::maximal_ideals(s));
    lap("ideals");
    let prim_report = search_primitives(s, bounds).context("primitive search")?;
    lap("primitive_search");

    let mut checks = Vec::new();
    checks.push(CheckLine::new("product_containment", ideals::product_containment_check(s), None));
    let criteria = ideal_list.iter().find(|&&q| {
        let element = ideals::is_prime(s, q);
        element != ideals::is_prime_by_ideal_pairs(s, q, ideals::ProductVariant::SetProduct)
            || element != ideals::is_prime_by_ideal_pairs(s, q, ideals::ProductVariant::GeneratedProduct)
    });
    checks.push(CheckLine::new(
        "prime_criteria",
        criteria.is_none(),
        criteria.map(|q| format!("ideal {}", input.show(*q))),
    ));
    let not_prime = prim_report.points.iter().find(|p| !primes.contains(&p.ideal));
    checks.push(CheckLine::new(
        "primitive_is_prime",
        not_prime.is_none(),
        not_prime.map(|p| format!("ideal {}", input.show(p.ideal))),
    ));
    let bad_witness = prim_report.points.iter().find_map(|p| verify_primitive_witness(s, p).err());
    checks.push(CheckLine::new("witness_verification", bad_witness.is_none(), bad_witness.map(|e| e.to_string())));

    let space = StructureSpace::from_report(s.clone(), &prim_report).context("building structure space")?;
    let axioms = if space.len() <= DEFAULT_PAIR_BOUND { Some(space.verify_axioms()?) } else { None };
    if let Some(a) = &axioms {
        let detail = a.first_violation.as_ref().map(|v| format!("{v:?}"));
        checks.push(CheckLine::new("kuratowski", a.kuratowski(), detail));
        checks.push(CheckLine::new("t0", a.t0, None));
        let finite = a.finite_intersection.passed && a.descending_chains.passed && a.minimal_points_finite.passed;
        checks.push(CheckLine::new("finite_scale", finite, Some(a.finite_intersection.note.clone())));
    }
    let irreducibility = match space.irreducibility_report() {
        Ok(r) => {
            checks.push(CheckLine::new("irreducible_structure", true, None));
            Some(r)
        }
        Err(e) => {
            checks.push(CheckLine::new("irreducible_structure", false, Some(e.to_string())));
            None
        }
    };
    let summary = space.summary().ok();
    if let Some(sum) = &summary {
        let n = space.len();
        let consistent = sum.points.iter().all(|p| primes.contains(p))
            && sum.components.iter().all(|c| c.iter().all(|i| i < n))
            && sum.minimal_points.iter().all(|&i| i < n);
        checks.push(CheckLine::new("report_consistent", consistent, None));
    }
    lap("topology");

    let all_passed = checks.iter().all(|c| c.passed);
    Ok(AnalysisReport {
        schema: SCHEMA,
        semigroup: s.clone(),
        labels: input.labels.clone(),
        ideals: ideal_list,
        primes,
        maximals,
        prim_report,
        space: summary,
        axioms,
        irreducibility,
        checks,
        all_passed,
        timings_ms: timings.then_some(times),
    })
}

pub fn render_analysis_text(input: &Input, r: &AnalysisReport) -> String {
    let show_all = |v: &[ElemSet]| v.iter().map(|&x| input.show(x)).collect::<Vec<_>>().join(" ");
    let mut out = String::new();
    writeln!(out, "order: {}", r.semigroup.order()).unwrap();
    writeln!(out, "ideals ({}): {}", r.ideals.len(), show_all(&r.ideals)).unwrap();
    writeln!(out, "primes ({}): {}", r.primes.len(), show_all(&r.primes)).unwrap();
    writeln!(out, "maximal ({}): {}", r.maximals.len(), show_all(&r.maximals)).unwrap();
    writeln!(out, "primitive ({}): {}", r.prim_report.points.len(), show_all(&r.prim_report.ideals())).unwrap();
    for p in &r.prim_report.points {
        let sp = p.witness.space();
        let mats: Vec<String> = p.witness.rho().iter().map(|m| format!("{:?}", m.rows())).collect();
        writeln!(out, "  {} via F_{}^{}: {}", input.show(p.ideal), sp.p(), sp.k(), mats.join(" ")).unwrap();
    }
    if !r.prim_report.unwitnessed_primes.is_empty() {
        writeln!(out, "unwitnessed primes: {}", show_all(&r.prim_report.unwitnessed_primes)).unwrap();
    }
    if let Some(sum) = &r.space {
        writeln!(out, "closed sets: {}", sum.closed_sets).unwrap();
        let comps: Vec<String> = sum.components.iter().map(|c| format!("{:?}", c.to_vec())).collect();
        writeln!(out, "components: {}", comps.join(" ")).unwrap();
        writeln!(out, "minimal points: {:?}", sum.minimal_points).unwrap();
    }
    for c in &r.checks {
        let mark = if c.passed { "ok" } else { "FAILED" };
        match &c.detail {
            Some(d) => writeln!(out, "check {}: {mark} ({d})", c.name).unwrap(),
            None => writeln!(out, "check {}: {mark}", c.name).unwrap(),
        }
    }
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct PullbackReport {
    pub schema: u32,
    pub map: Vec<usize>,
    pub source_points: Vec<ElemSet>,
    pub target_points: Vec<ElemSet>,
    pub continuity: ContinuityReport,
    pub primitive_verified: usize,
    pub improper: usize,
    pub simplicity_lost: usize,
    /// False only when the map is shown not to be continuous.
    pub passed: bool,
}

pub fn cmd_pullback(hom_path: &Path, bounds: &Bounds) -> Result<PullbackReport> {
    let phi = format::load_hom(hom_path).with_context(|| format!("reading homomorphism {}", hom_path.display()))?;
    pullback_report(&phi, bounds)
}

pub fn pullback_report(phi: &primspace::SemigroupHom, bounds: &Bounds) -> Result<PullbackReport> {
    use primspace::primitive::PullbackStatus as P;
    let source_report = search_primitives(phi.source(), bounds).context("primitive search on source")?;
    let target_report = search_primitives(phi.target(), bounds).context("primitive search on target")?;
    let source = StructureSpace::from_report(phi.source().clone(), &source_report)?;
    let target = StructureSpace::from_report(phi.target().clone(), &target_report)?;
    let continuity = pullback_continuity_check(phi, &source, &target)?;
    Ok(PullbackReport {
        schema: SCHEMA,
        map: phi.map().to_vec(),
        source_points: source.points().to_vec(),
        target_points: target.points().to_vec(),
        primitive_verified: continuity.count(P::PrimitiveVerified),
        improper: continuity.count(P::Improper),
        simplicity_lost: continuity.count(P::SimplicityLost),
        passed: continuity.status != ContinuityStatus::NotContinuous,
        continuity,
    })
}

pub fn render_pullback_text(r: &PullbackReport) -> String {
    let mut out = String::new();
    writeln!(out, "map: {:?}", r.map).unwrap();
    writeln!(out, "source points: {}", r.source_points.len()).unwrap();
    writeln!(out, "target points: {}", r.target_points.len()).unwrap();
    for t in &r.continuity.transports {
        let dest = t.source_point.map_or("-".to_string(), |p| p.to_string());
        writeln!(out, "  q{} -> {} {:?} (source point {dest})", t.target_point, t.preimage, t.status).unwrap();
    }
    writeln!(
        out,
        "primitive_verified {}, improper {}, simplicity_lost {}",
        r.primitive_verified, r.improper, r.simplicity_lost
    )
    .unwrap();
    writeln!(out, "status: {:?}", r.continuity.status).unwrap();
    if let Some(f) = &r.continuity.first_failure {
        writeln!(out, "failure: {f}").unwrap();
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DotKind {
    Specialization,
    ClosedLattice,
}

pub fn cmd_dot(input: &Input, what: DotKind, bounds: &Bounds) -> Result<String> {
    let report = search_primitives(&input.semigroup, bounds)?;
    let space = StructureSpace::from_report(input.semigroup.clone(), &report)?;
    Ok(match what {
        DotKind::Specialization => dot::specialization_dot(&space, Some(&input.labels)),
        DotKind::ClosedLattice => dot::closed_lattice_dot(&space)?,
    })
}
