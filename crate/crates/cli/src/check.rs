//! Corpus sweep: every proposition suite over every semigroup up to an order.

use std::fmt::Write as _;

use anyhow::Result;
use rayon::prelude::*;
use serde::Serialize;

use primspace::enumerate::{enumerate_semigroups_bounded, Dedup, DEFAULT_MAX_ORDER};
use primspace::ideals::{self, ProductVariant};
use primspace::modact::{self, ActionError};
use primspace::primitive::{
    primitive_implies_prime_check, search_primitives_observed, verify_primitive_witness, PullbackStatus,
};
use primspace::semigroup::check_homomorphism;
use primspace::topology::{pullback_continuity_check, ContinuityStatus, DEFAULT_PAIR_BOUND};
use primspace::{catalog, format, Bounds, ElemSet, FiniteSemigroup, SemigroupHom, StructureSpace};

use crate::SCHEMA;

/// Suite names, in report order.
pub const SUITES: &[&str] = &[
    "product_containment",
    "prime_criteria",
    "annihilator_ideal",
    "primitive_is_prime",
    "witness_verification",
    "kuratowski",
    "t0",
    "specialization",
    "irreducible_structure",
    "finite_scale",
    "generated_ideal_formula",
    "pullback_identity",
];

#[derive(Debug, Clone)]
pub struct CheckOptions {
    pub max_order: usize,
    pub dedup: bool,
    pub bounds: Bounds,
    /// Also sweep the named examples.
    pub named: bool,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions { max_order: 4, dedup: false, bounds: Bounds::default(), named: true }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteResult {
    pub name: &'static str,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub first_failure: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FormulaInstance {
    pub generator: String,
    pub fixpoint: Vec<String>,
    pub xsx_form: Vec<String>,
    pub missing: Vec<String>,
}

/// The generated-ideal fixpoint against the two closed forms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FormulaComparison {
    pub cases: usize,
    /// `X ∪ SX ∪ XS ∪ SXS` differing from the fixpoint.
    pub standard_mismatches: usize,
    /// `X ∪ XS ∪ SX ∪ XSX` differing from the fixpoint.
    pub xsx_mismatches: usize,
    pub r15: FormulaInstance,
}

/// Pullbacks along identity maps and constant maps out of the trivial semigroup.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct PullbackCaveats {
    pub identity_maps: usize,
    pub identity_continuous: usize,
    pub constant_maps: usize,
    pub partial_reports: usize,
    pub improper_pullbacks: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub schema: u32,
    pub max_order: usize,
    pub dedup: bool,
    pub bounds: Bounds,
    /// `(order, count)` of swept corpus tables.
    pub corpus: Vec<(usize, usize)>,
    pub named: Vec<&'static str>,
    pub suites: Vec<SuiteResult>,
    pub formula: FormulaComparison,
    pub pullback_caveats: PullbackCaveats,
    pub all_passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Verdict {
    Pass,
    Fail(String),
    Skip,
}

fn verdict(ok: bool, detail: impl FnOnce() -> String) -> Verdict {
    if ok {
        Verdict::Pass
    } else {
        Verdict::Fail(detail())
    }
}

#[derive(Debug, Clone, Default)]
struct Tally {
    cases: usize,
    standard_mismatches: usize,
    xsx_mismatches: usize,
    caveats: PullbackCaveats,
}

struct Outcome {
    key: String,
    verdicts: Vec<Verdict>,
    tally: Tally,
}

fn check_one(s: &FiniteSemigroup, bounds: &Bounds) -> Result<(Vec<Verdict>, Tally), ActionError> {
    let mut v = Vec::with_capacity(SUITES.len());
    let mut tally = Tally::default();
    let ideal_list: Vec<ElemSet> = ideals::enumerate_ideals(s).iter().map(|i| i.carrier()).collect();

    v.push(verdict(ideals::product_containment_check(s), || "product of ideals escapes the intersection".into()));
    let criteria = ideal_list.iter().find(|&&q| {
        let element = ideals::is_prime(s, q);
        element != ideals::is_prime_by_ideal_pairs(s, q, ProductVariant::SetProduct)
            || element != ideals::is_prime_by_ideal_pairs(s, q, ProductVariant::GeneratedProduct)
    });
    v.push(verdict(criteria.is_none(), || format!("criteria disagree on {}", criteria.unwrap())));

    let mut bad_annihilator = None;
    let report = search_primitives_observed(s, bounds, |w| {
        if bad_annihilator.is_none() && !modact::annihilator_is_ideal_or_degenerate(s, w) {
            bad_annihilator = Some(modact::annihilator(w));
        }
    })?;
    v.push(verdict(bad_annihilator.is_none(), || format!("annihilator {} is not an ideal", bad_annihilator.unwrap())));
    v.push(verdict(primitive_implies_prime_check(s, &report), || "a witnessed primitive ideal is not prime".into()));
    let bad_witness = report.points.iter().find_map(|p| verify_primitive_witness(s, p).err());
    v.push(verdict(bad_witness.is_none(), || bad_witness.unwrap().to_string()));

    let space = StructureSpace::from_report(s.clone(), &report).expect("report points are proper ideals");
    let axioms = (space.len() <= DEFAULT_PAIR_BOUND).then(|| space.verify_axioms().expect("within bound"));
    if let Some(a) = &axioms {
        v.push(verdict(a.kuratowski(), || format!("{:?}", a.first_violation)));
        v.push(verdict(a.t0, || "two points share a closure".into()));
    } else {
        v.push(Verdict::Skip);
        v.push(Verdict::Skip);
    }
    let pts = space.points();
    let spec_ok =
        (0..pts.len()).all(|p| (0..pts.len()).all(|q| space.point_closure(p).contains(q) == pts[p].is_subset(pts[q])));
    v.push(verdict(spec_ok, || "specialization differs from inclusion".into()));
    let irr = space.irreducibility_report();
    v.push(verdict(irr.is_ok(), || irr.as_ref().unwrap_err().to_string()));
    if let Some(a) = &axioms {
        let ok = a.finite_intersection.passed && a.descending_chains.passed && a.minimal_points_finite.passed;
        v.push(verdict(ok, || "finite-scale surrogate failed".into()));
    } else {
        v.push(Verdict::Skip);
    }

    let mut formula_failure = None;
    for bits in 1..(1u64 << s.order()).min(1 << 16) {
        let x = ElemSet::from_bits(bits);
        let fix = ideals::generated_ideal(s, x).expect("nonempty").carrier();
        tally.cases += 1;
        if ideals::standard_closed_form(s, x) != fix {
            tally.standard_mismatches += 1;
            formula_failure.get_or_insert(x);
        }
        if ideals::xsx_closed_form(s, x) != fix {
            tally.xsx_mismatches += 1;
        }
    }
    v.push(verdict(formula_failure.is_none(), || format!("closed form differs on X = {}", formula_failure.unwrap())));

    let id = SemigroupHom::identity(s);
    let cont = pullback_continuity_check(&id, &space, &space).expect("same semigroup");
    tally.caveats.identity_maps += 1;
    if cont.status == ContinuityStatus::Continuous {
        tally.caveats.identity_continuous += 1;
    }
    v.push(verdict(cont.status == ContinuityStatus::Continuous, || format!("identity pullback is {:?}", cont.status)));

    let triv = catalog::trivial();
    let triv_space = StructureSpace::new(triv.clone(), Vec::new()).expect("empty space");
    for f in s.idempotents().iter() {
        let phi = check_homomorphism(&triv, s, &[f]).expect("idempotent image");
        let rep = pullback_continuity_check(&phi, &triv_space, &space).expect("spaces match");
        tally.caveats.constant_maps += 1;
        if rep.status == ContinuityStatus::Partial {
            tally.caveats.partial_reports += 1;
        }
        tally.caveats.improper_pullbacks += rep.count(PullbackStatus::Improper);
    }
    Ok((v, tally))
}

fn corpus(opts: &CheckOptions) -> Result<Vec<(usize, Vec<FiniteSemigroup>)>> {
    let mode = if opts.dedup { Dedup::UpToIsoAndAntiIso } else { Dedup::None };
    (1..=opts.max_order).map(|n| Ok((n, enumerate_semigroups_bounded(n, mode, DEFAULT_MAX_ORDER)?))).collect()
}

fn r15_instance() -> FormulaInstance {
    let ex = catalog::lookup("R15").expect("registered");
    let s = &ex.semigroup;
    let x = ElemSet::singleton(catalog::r15_index("x").expect("word"));
    let fix = ideals::generated_ideal(s, x).expect("nonempty").carrier();
    let xsx = ideals::xsx_closed_form(s, x);
    let names = |set: ElemSet| set.iter().map(|e| ex.labels[e].clone()).collect::<Vec<_>>();
    FormulaInstance {
        generator: "x".into(),
        fixpoint: names(fix),
        xsx_form: names(xsx),
        missing: names(fix.difference(xsx)),
    }
}

pub fn cmd_check(opts: &CheckOptions) -> Result<CheckReport> {
    let corpus = corpus(opts)?;
    let named: Vec<&'static str> = if opts.named { catalog::NAMES.to_vec() } else { Vec::new() };
    let mut jobs: Vec<(String, FiniteSemigroup)> = Vec::new();
    for (_, tables) in &corpus {
        for s in tables {
            jobs.push((format::write_table_text(s), s.clone()));
        }
    }
    for name in &named {
        jobs.push((format!("@{name}"), catalog::lookup(name).expect("registered").semigroup));
    }

    let mut outcomes: Vec<Outcome> = jobs
        .par_iter()
        .map(|(key, s)| {
            check_one(s, &opts.bounds).map(|(verdicts, tally)| Outcome { key: key.clone(), verdicts, tally })
        })
        .collect::<Result<_, _>>()?;
    outcomes.sort_by(|a, b| a.key.cmp(&b.key));

    let mut suites: Vec<SuiteResult> = SUITES
        .iter()
        .map(|&name| SuiteResult { name, passed: 0, failed: 0, skipped: 0, first_failure: None })
        .collect();
    let mut total = Tally::default();
    for o in &outcomes {
        for (suite, v) in suites.iter_mut().zip(&o.verdicts) {
            match v {
                Verdict::Pass => suite.passed += 1,
                Verdict::Skip => suite.skipped += 1,
                Verdict::Fail(msg) => {
                    suite.failed += 1;
                    suite.first_failure.get_or_insert_with(|| format!("{}: {msg}", o.key.replace('\n', " ").trim()));
                }
            }
        }
        total.cases += o.tally.cases;
        total.standard_mismatches += o.tally.standard_mismatches;
        total.xsx_mismatches += o.tally.xsx_mismatches;
        let (c, t) = (&mut total.caveats, &o.tally.caveats);
        c.identity_maps += t.identity_maps;
        c.identity_continuous += t.identity_continuous;
        c.constant_maps += t.constant_maps;
        c.partial_reports += t.partial_reports;
        c.improper_pullbacks += t.improper_pullbacks;
    }
    let all_passed = suites.iter().all(|s| s.failed == 0);
    Ok(CheckReport {
        schema: SCHEMA,
        max_order: opts.max_order,
        dedup: opts.dedup,
        bounds: opts.bounds.clone(),
        corpus: corpus.iter().map(|(n, t)| (*n, t.len())).collect(),
        named,
        suites,
        formula: FormulaComparison {
            cases: total.cases,
            standard_mismatches: total.standard_mismatches,
            xsx_mismatches: total.xsx_mismatches,
            r15: r15_instance(),
        },
        pullback_caveats: total.caveats,
        all_passed,
    })
}

pub fn render_check_text(r: &CheckReport) -> String {
    let mut out = String::new();
    let corpus: Vec<String> = r.corpus.iter().map(|(n, c)| format!("order {n}: {c}")).collect();
    writeln!(out, "corpus: {}", corpus.join(", ")).unwrap();
    if !r.named.is_empty() {
        writeln!(out, "named: {}", r.named.join(" ")).unwrap();
    }
    for s in &r.suites {
        let mark = if s.failed == 0 { "pass" } else { "FAIL" };
        write!(out, "{:<24} {mark} passed={} failed={} skipped={}", s.name, s.passed, s.failed, s.skipped).unwrap();
        if let Some(f) = &s.first_failure {
            write!(out, " first: {f}").unwrap();
        }
        out.push('\n');
    }
    let f = &r.formula;
    writeln!(
        out,
        "generated ideal: {} cases, standard form mismatches {}, xsx form mismatches {}",
        f.cases, f.standard_mismatches, f.xsx_mismatches
    )
    .unwrap();
    writeln!(
        out,
        "R15 <{}>: fixpoint {{{}}} xsx form {{{}}} missing {{{}}}",
        f.r15.generator,
        f.r15.fixpoint.join(","),
        f.r15.xsx_form.join(","),
        f.r15.missing.join(",")
    )
    .unwrap();
    let c = &r.pullback_caveats;
    writeln!(
        out,
        "pullbacks: identity {}/{} continuous; {} constant maps from TRIV, {} partial, {} improper pullbacks",
        c.identity_continuous, c.identity_maps, c.constant_maps, c.partial_reports, c.improper_pullbacks
    )
    .unwrap();
    writeln!(out, "result: {}", if r.all_passed { "pass" } else { "FAIL" }).unwrap();
    out
}
