//! Exhaustive verification sweeps over every numerical semigroup up to a
//! genus bound.
//!
//! Properties are registered in a table of `(id, summary, checker)`. A
//! checker sees one ring through a [`RingContext`], which computes the
//! invariant report and the rootset at most once and shares them between
//! checkers. Errors raised inside a checker are
//! recorded as failures, since every registered property is expected to hold
//! on every ring.

mod cache;
pub(crate) mod check;

use std::cell::OnceCell;
use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::idealization::{
    check_idealization_formulas, idealization_ag_transfer, idealization_index_experiment,
    IndexExperiment,
};
use crate::invariants::{
    canonical_setup, cdeg_routes, e1_routes, report, sweep_irreducible_ideals, InvariantReport,
};
use crate::relideal::RelativeIdeal;
use crate::roots::{
    check_root_index_bound, check_tau_bound, rootset, verify_root_theorems, Rootset,
};
use crate::semigroup::{enumerate_by_genus, NumericalSemigroup, DEFAULT_GENUS_CAP};

pub use cache::{
    cache_load, cache_store, CacheError, CacheRecord, CorpusCache, CACHE_FORMAT, CACHE_VERSION,
};
pub use check::{CheckBuilder, CheckStatus, PropertyCheckResult};

/// Id of the `ρ(R)` versus `ρ(R ⋉ m)` data collection. It produces a table
/// rather than pass/fail results.
pub const EXPERIMENT_ID: &str = "idealization-index";

/// One ring together with lazily computed shared data.
pub struct RingContext<'s> {
    semigroup: &'s NumericalSemigroup,
    search_cap: usize,
    report: OnceCell<Result<InvariantReport>>,
    rootset: OnceCell<Result<Rootset>>,
}

impl<'s> RingContext<'s> {
    pub fn new(semigroup: &'s NumericalSemigroup, search_cap: usize) -> Self {
        RingContext {
            semigroup,
            search_cap,
            report: OnceCell::new(),
            rootset: OnceCell::new(),
        }
    }

    pub fn semigroup(&self) -> &'s NumericalSemigroup {
        self.semigroup
    }

    pub fn report(&self) -> Result<&InvariantReport> {
        self.report
            .get_or_init(|| report(self.semigroup))
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn rootset(&self) -> Result<&Rootset> {
        self.rootset
            .get_or_init(|| rootset(self.semigroup, self.search_cap))
            .as_ref()
            .map_err(Clone::clone)
    }
}

type Checker = fn(&RingContext<'_>) -> Result<PropertyCheckResult>;

/// A registered property.
pub struct Property {
    pub id: &'static str,
    pub summary: &'static str,
    check: Checker,
}

impl Property {
    pub fn run(&self, ctx: &RingContext<'_>) -> PropertyCheckResult {
        match (self.check)(ctx) {
            Ok(res) => res,
            Err(err) => {
                let mut b = CheckBuilder::new(self.id, ctx.semigroup);
                b.record("error", err.to_string())
                    .expect(false, "checker raised an error");
                b.finish()
            }
        }
    }
}

static REGISTRY: &[Property] = &[
    Property {
        id: "cor2.5",
        summary: "cdeg >= r - 1, and cdeg = 0 iff r = 1",
        check: check_cdeg_lower_bound,
    },
    Property {
        id: "rem4.3",
        summary: "rho >= 2 when r >= 2; rho = 2 when e = 3 or cdeg = r - 1",
        check: check_index_remarks,
    },
    Property {
        id: "prop4.5",
        summary: "type 2: length(C^2/aC) = length(C/(a))",
        check: check_type_two_square,
    },
    Property {
        id: "thm4.6",
        summary: "type 2: e1 <= rho * cdeg, and rho = 2 iff e1 = 2 cdeg",
        check: check_type_two_e1,
    },
    Property {
        id: "thm5.8",
        summary: "rootset has fewer than r elements, roots are closed, exponents are unique",
        check: |ctx| verify_root_theorems(ctx.semigroup, ctx.rootset()?),
    },
    Property {
        id: "prop5.6",
        summary: "tau_L(C) <= min(r - 1, red(L))",
        check: |ctx| Ok(check_tau_bound(ctx.semigroup, ctx.rootset()?)),
    },
    Property {
        id: "root-index",
        summary: "rho <= floor((red(I) + p - 1) / p) whenever I^p is canonical",
        check: |ctx| check_root_index_bound(ctx.semigroup, ctx.rootset()?),
    },
    Property {
        id: "cor6.9",
        summary: "R is almost Gorenstein iff R x m is",
        check: |ctx| idealization_ag_transfer(ctx.semigroup),
    },
    Property {
        id: "thm6.8",
        summary: "cdeg(R x m) = 2 cdeg + 2 and r(R x m) = 2r + 1",
        check: |ctx| check_idealization_formulas(ctx.semigroup),
    },
    Property {
        id: "ag-routes",
        summary: "cdeg = r - 1 iff 2 genus = F + type",
        check: check_ag_routes,
    },
    Property {
        id: "e1-routes",
        summary: "Sally sum and Hilbert polynomial give the same e1",
        check: check_e1_routes,
    },
    Property {
        id: "cdeg-routes",
        summary: "the three formulas for cdeg agree",
        check: check_cdeg_routes,
    },
    Property {
        id: "irreducible-bound",
        summary: "irreducible E in m^2: length(E/(a)) >= r - 1, red(E) <= 2 at equality",
        check: |ctx| sweep_irreducible_ideals(ctx.semigroup, ctx.search_cap),
    },
];

/// Every registered property, in registry order.
pub fn registry() -> &'static [Property] {
    REGISTRY
}

/// Ids accepted by [`run_suite`]: the registry plus [`EXPERIMENT_ID`].
pub fn known_ids() -> Vec<&'static str> {
    REGISTRY
        .iter()
        .map(|p| p.id)
        .chain(std::iter::once(EXPERIMENT_ID))
        .collect()
}

fn check_cdeg_lower_bound(ctx: &RingContext<'_>) -> Result<PropertyCheckResult> {
    let rep = ctx.report()?;
    let mut b = CheckBuilder::new("cor2.5", ctx.semigroup);
    b.record("cdeg", rep.cdeg)
        .record("type", rep.type_number)
        .expect(rep.cdeg + 1 >= rep.type_number, "cdeg >= type - 1")
        .expect(
            (rep.cdeg == 0) == (rep.type_number == 1),
            "cdeg = 0 iff type = 1",
        );
    Ok(b.finish())
}

fn check_index_remarks(ctx: &RingContext<'_>) -> Result<PropertyCheckResult> {
    let rep = ctx.report()?;
    let b = CheckBuilder::new("rem4.3", ctx.semigroup);
    if rep.type_number < 2 {
        return Ok(b.skip("Gorenstein ring"));
    }
    let mut b = b;
    let rho = rep.canonical_index;
    b.record("rho", rho)
        .record("multiplicity", rep.multiplicity)
        .record("cdeg", rep.cdeg)
        .record("type", rep.type_number)
        .expect(rho >= 2, "rho >= 2")
        .expect(
            rep.multiplicity != 3 || rho == 2,
            "multiplicity 3 implies rho = 2",
        )
        .expect(
            rep.cdeg + 1 != rep.type_number || rho == 2,
            "cdeg = type - 1 implies rho = 2",
        );
    Ok(b.finish())
}

fn check_type_two_square(ctx: &RingContext<'_>) -> Result<PropertyCheckResult> {
    let s = ctx.semigroup;
    let b = CheckBuilder::new("prop4.5", s);
    if s.type_number() != 2 {
        return Ok(b.skip("type is not 2"));
    }
    let mut b = b;
    let setup = canonical_setup(s);
    let c = &setup.canonical_ideal;
    let a = setup.reduction_value;
    let square = c.product(c)?;
    let lhs = RelativeIdeal::length_between(&c.translate(a), &square)?;
    let rhs = RelativeIdeal::length_between(&RelativeIdeal::principal(s, a), c)?;
    b.record("square_over_ac", lhs)
        .record("c_over_a", rhs)
        .expect(lhs == rhs, "square_over_ac = c_over_a");
    Ok(b.finish())
}

fn check_type_two_e1(ctx: &RingContext<'_>) -> Result<PropertyCheckResult> {
    let rep = ctx.report()?;
    let b = CheckBuilder::new("thm4.6", ctx.semigroup);
    if rep.type_number != 2 {
        return Ok(b.skip("type is not 2"));
    }
    let mut b = b;
    let (e1, rho, d) = (rep.e1_c, rep.canonical_index as i64, rep.cdeg as i64);
    b.record("e1", e1)
        .record("rho", rho)
        .record("cdeg", d)
        .expect(e1 <= rho * d, "e1 <= rho * cdeg")
        .expect((rho == 2) == (e1 == 2 * d), "rho = 2 iff e1 = 2 cdeg");
    Ok(b.finish())
}

fn check_ag_routes(ctx: &RingContext<'_>) -> Result<PropertyCheckResult> {
    let s = ctx.semigroup;
    let mut b = CheckBuilder::new("ag-routes", s);
    if s.is_trivial() {
        return Ok(b.skip("valuation ring"));
    }
    let routes = cdeg_routes(s);
    let by_cdeg = routes.over_reduction + 1 == s.type_number();
    let by_gaps = s.is_almost_symmetric();
    b.record("cdeg", routes.over_reduction)
        .record("type", s.type_number())
        .record("genus", s.genus())
        .record("frobenius", s.frobenius())
        .expect(
            by_cdeg == by_gaps,
            "cdeg = type - 1 iff 2 genus = frobenius + type",
        );
    Ok(b.finish())
}

fn check_e1_routes(ctx: &RingContext<'_>) -> Result<PropertyCheckResult> {
    let s = ctx.semigroup;
    let mut b = CheckBuilder::new("e1-routes", s);
    if s.is_trivial() {
        return Ok(b.skip("valuation ring"));
    }
    let routes = e1_routes(s)?;
    b.record("sally_sum", routes.sally_sum)
        .record("hilbert_fit", routes.hilbert_fit)
        .expect(routes.agree(), "sally_sum = hilbert_fit");
    Ok(b.finish())
}

fn check_cdeg_routes(ctx: &RingContext<'_>) -> Result<PropertyCheckResult> {
    let s = ctx.semigroup;
    let mut b = CheckBuilder::new("cdeg-routes", s);
    if s.is_trivial() {
        return Ok(b.skip("valuation ring"));
    }
    let routes = cdeg_routes(s);
    b.record("routes", routes)
        .expect(routes.agree(), "all three routes agree");
    Ok(b.finish())
}

/// What to run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteConfig {
    pub max_genus: usize,
    /// Selected ids; empty selects everything.
    pub properties: Vec<String>,
    pub workers: usize,
    pub genus_cap: usize,
}

impl SuiteConfig {
    pub fn new(max_genus: usize) -> Self {
        SuiteConfig {
            max_genus,
            properties: Vec::new(),
            workers: 1,
            genus_cap: DEFAULT_GENUS_CAP,
        }
    }

    fn selection(&self) -> Result<(Vec<&'static Property>, bool)> {
        if self.properties.is_empty() {
            return Ok((REGISTRY.iter().collect(), true));
        }
        let mut props = Vec::new();
        let mut experiment = false;
        for id in &self.properties {
            if id == EXPERIMENT_ID {
                experiment = true;
            } else {
                let p = REGISTRY
                    .iter()
                    .find(|p| p.id == id)
                    .ok_or_else(|| Error::UnknownProperty(id.clone()))?;
                if !props.iter().any(|q: &&Property| q.id == p.id) {
                    props.push(p);
                }
            }
        }
        props.sort_by_key(|p| p.id);
        Ok((props, experiment))
    }
}

/// Pass, fail and skip counts.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

impl Counts {
    fn add(&mut self, r: &PropertyCheckResult) {
        match r.status {
            CheckStatus::Pass => self.pass += 1,
            CheckStatus::Fail => self.fail += 1,
            CheckStatus::Skipped(_) => self.skipped += 1,
        }
    }
}

/// Aggregate outcome of a sweep. Serialization leaves out the wall time,
/// so two runs over the same input serialize identically.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub max_genus: usize,
    pub properties: Vec<String>,
    pub semigroups: usize,
    pub totals: Counts,
    pub per_property: BTreeMap<String, Counts>,
    pub failures: Vec<PropertyCheckResult>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub experiment: Vec<IndexExperiment>,
    /// Every result, sorted by generators and then property id.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub results: Vec<PropertyCheckResult>,
    #[serde(skip)]
    pub wall_time_ms: u128,
}

impl VerificationReport {
    pub fn is_clean(&self) -> bool {
        self.totals.fail == 0
    }

    /// Canonical JSON of the report.
    pub fn to_canonical_json(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }
}

struct RingOutcome {
    results: Vec<PropertyCheckResult>,
    experiment: Option<IndexExperiment>,
    /// Set when the record gained something new.
    record: Option<CacheRecord>,
}

fn evaluate(
    s: &NumericalSemigroup,
    props: &[&Property],
    experiment: bool,
    cap: usize,
    cached: Option<&CacheRecord>,
) -> RingOutcome {
    if let Some(hit) = cached {
        let needs_experiment = experiment && !s.is_trivial();
        let complete = hit.report.is_some()
            && props.iter().all(|p| hit.checks.contains_key(p.id))
            && (!needs_experiment || hit.experiment.is_some());
        if complete {
            return RingOutcome {
                results: props.iter().map(|p| hit.checks[p.id].clone()).collect(),
                experiment: if needs_experiment {
                    hit.experiment.clone()
                } else {
                    None
                },
                record: None,
            };
        }
    }
    let ctx = RingContext::new(s, cap);
    let mut record = cached.cloned().unwrap_or_else(|| CacheRecord {
        gens: s.generators().to_vec(),
        report: None,
        checks: BTreeMap::new(),
        experiment: None,
    });
    let mut fresh = false;
    if record.report.is_none() {
        if let Ok(rep) = ctx.report() {
            record.report = Some(rep.clone());
            fresh = true;
        }
    }
    let mut results = Vec::with_capacity(props.len() + 1);
    for p in props {
        let res = match record.checks.get(p.id) {
            Some(hit) => hit.clone(),
            None => {
                let res = p.run(&ctx);
                record.checks.insert(p.id.to_string(), res.clone());
                fresh = true;
                res
            }
        };
        results.push(res);
    }
    let mut row = None;
    if experiment && !s.is_trivial() {
        if record.experiment.is_none() {
            match idealization_index_experiment(s) {
                Ok(r) => {
                    record.experiment = Some(r);
                    fresh = true;
                }
                Err(err) => {
                    let mut b = CheckBuilder::new(EXPERIMENT_ID, s);
                    b.record("error", err.to_string())
                        .expect(false, "experiment raised an error");
                    results.push(b.finish());
                }
            }
        }
        row = record.experiment.clone();
    }
    RingOutcome {
        results,
        experiment: row,
        record: fresh.then_some(record),
    }
}

/// Runs the selected checks on every semigroup of genus at most
/// `config.max_genus`.
pub fn run_suite(config: &SuiteConfig) -> Result<VerificationReport> {
    run_with_cache(config, None)
}

/// As [`run_suite`], reusing and extending `cache`.
pub fn run_suite_cached(
    config: &SuiteConfig,
    cache: &mut CorpusCache,
) -> Result<VerificationReport> {
    run_with_cache(config, Some(cache))
}

fn run_with_cache(
    config: &SuiteConfig,
    mut cache: Option<&mut CorpusCache>,
) -> Result<VerificationReport> {
    let started = Instant::now();
    let (props, experiment) = config.selection()?;
    let semigroups: Vec<NumericalSemigroup> =
        enumerate_by_genus(config.max_genus, config.genus_cap)?.collect();
    let cap = config.genus_cap.max(config.max_genus);

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers.max(1))
        .build()
        .map_err(|e| Error::InternalInconsistency(format!("thread pool: {e}")))?;
    let snapshot = cache.as_deref();
    let outcomes: Vec<RingOutcome> = pool.install(|| {
        semigroups
            .par_iter()
            .map(|s| {
                let hit = snapshot.and_then(|c| c.get(s.generators()));
                evaluate(s, &props, experiment, cap, hit)
            })
            .collect()
    });

    let mut results = Vec::new();
    let mut rows = Vec::new();
    for out in outcomes {
        results.extend(out.results);
        rows.extend(out.experiment);
        if let (Some(c), Some(rec)) = (cache.as_deref_mut(), out.record) {
            c.insert(rec);
        }
    }
    results.sort_by(|a, b| (&a.generators, &a.property_id).cmp(&(&b.generators, &b.property_id)));
    rows.sort_by(|a, b| a.gens.cmp(&b.gens));

    let mut totals = Counts::default();
    let mut per_property: BTreeMap<String, Counts> = BTreeMap::new();
    for r in &results {
        totals.add(r);
        per_property
            .entry(r.property_id.clone())
            .or_default()
            .add(r);
    }
    let mut properties: Vec<String> = props.iter().map(|p| p.id.to_string()).collect();
    if experiment {
        properties.push(EXPERIMENT_ID.to_string());
    }
    Ok(VerificationReport {
        max_genus: config.max_genus,
        properties,
        semigroups: semigroups.len(),
        totals,
        per_property,
        failures: results.iter().filter(|r| r.is_fail()).cloned().collect(),
        experiment: rows,
        results,
        wall_time_ms: started.elapsed().as_millis(),
    })
}
