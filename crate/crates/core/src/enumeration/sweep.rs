use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::SweepBox;
use crate::constraints::{
    evaluate_part, CheckClass, CheckId, CheckResult, HypothesisFlags, Part, Verdict,
};
use crate::fibration::FibrationNumerics;
use crate::invariants::{compute_invariants, verify_identities, Identity, InvariantSet};
use crate::rational::Rational;

pub const DEFAULT_COUNTEREXAMPLE_CAP: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepOptions {
    /// Maximum counterexamples kept per check; counts stay exact.
    pub counterexample_cap: usize,
    pub flags: HypothesisFlags,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            counterexample_cap: DEFAULT_COUNTEREXAMPLE_CAP,
            flags: HypothesisFlags::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub fibration: FibrationNumerics,
    pub result: CheckResult,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CheckTally {
    pub evaluated: u64,
    pub passed: u64,
    pub failed: u64,
    pub not_applicable: u64,
    /// The first failures in enumeration order, capped.
    pub counterexamples: Vec<Counterexample>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityFailure {
    pub fibration: FibrationNumerics,
    pub identity: Identity,
}

/// Consistency identities between the invariants, checked on every census.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct IdentityTally {
    pub evaluated: u64,
    pub failed: u64,
    pub counterexamples: Vec<IdentityFailure>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Extremum {
    pub value: Rational,
    pub fibration: FibrationNumerics,
}

/// Extremes over the admissible censuses of one genus. Ties keep the first
/// census in enumeration order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Extrema {
    pub max_ratio: Option<Extremum>,
    pub max_slope: Option<Extremum>,
    /// Smallest slope among censuses with separating cycles.
    pub min_slope_separating: Option<Extremum>,
    /// Smallest `n + s`.
    pub min_vanishing_cycles: Option<Extremum>,
}

fn keep_max(slot: &mut Option<Extremum>, candidate: Option<Extremum>) {
    if let Some(c) = candidate {
        if slot.as_ref().map_or(true, |cur| c.value > cur.value) {
            *slot = Some(c);
        }
    }
}

fn keep_min(slot: &mut Option<Extremum>, candidate: Option<Extremum>) {
    if let Some(c) = candidate {
        if slot.as_ref().map_or(true, |cur| c.value < cur.value) {
            *slot = Some(c);
        }
    }
}

impl Extrema {
    fn observe(&mut self, f: &FibrationNumerics, inv: &InvariantSet) {
        let point = |value: &Rational| {
            Some(Extremum {
                value: value.clone(),
                fibration: f.clone(),
            })
        };
        keep_max(&mut self.max_ratio, point(&inv.ratio));
        keep_max(&mut self.max_slope, point(&inv.slope));
        if f.has_separating() {
            keep_min(&mut self.min_slope_separating, point(&inv.slope));
        }
        let total = Rational::from(f.n()) + Rational::from(&inv.s);
        keep_min(&mut self.min_vanishing_cycles, point(&total));
    }

    /// Folds in extrema from a lexicographically later partition.
    fn merge(&mut self, later: Extrema) {
        keep_max(&mut self.max_ratio, later.max_ratio);
        keep_max(&mut self.max_slope, later.max_slope);
        keep_min(&mut self.min_slope_separating, later.min_slope_separating);
        keep_min(&mut self.min_vanishing_cycles, later.min_vanishing_cycles);
    }
}

/// Aggregate of a theorem sweep over a box.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepReport {
    pub bounds: SweepBox,
    pub checks: Vec<CheckId>,
    pub counterexample_cap: usize,
    /// Basic censuses visited.
    pub tuples_enumerated: u64,
    /// Censuses passing the box filters.
    pub tuples_admissible: u64,
    pub per_check: BTreeMap<CheckId, CheckTally>,
    pub identities: IdentityTally,
    /// Extremes over admissible censuses, by genus.
    pub extremal: BTreeMap<u64, Extrema>,
}

impl SweepReport {
    pub fn empty(bounds: SweepBox, checks: &[CheckId], counterexample_cap: usize) -> Self {
        let mut ids = checks.to_vec();
        ids.sort_unstable();
        ids.dedup();
        SweepReport {
            bounds,
            per_check: ids.iter().map(|&id| (id, CheckTally::default())).collect(),
            checks: ids,
            counterexample_cap,
            tuples_enumerated: 0,
            tuples_admissible: 0,
            identities: IdentityTally::default(),
            extremal: BTreeMap::new(),
        }
    }

    /// Check failures plus identity failures.
    pub fn counterexample_count(&self) -> u64 {
        self.per_check.values().map(|t| t.failed).sum::<u64>() + self.identities.failed
    }

    pub fn is_clean(&self) -> bool {
        self.counterexample_count() == 0
    }

    /// Appends the report of a lexicographically later partition of the same
    /// box. Merging partitions in order reproduces the sequential report.
    pub fn merge(&mut self, later: SweepReport) {
        let cap = self.counterexample_cap;
        self.tuples_enumerated += later.tuples_enumerated;
        self.tuples_admissible += later.tuples_admissible;
        for (id, tally) in later.per_check {
            let mine = self.per_check.entry(id).or_default();
            mine.evaluated += tally.evaluated;
            mine.passed += tally.passed;
            mine.failed += tally.failed;
            mine.not_applicable += tally.not_applicable;
            let room = cap.saturating_sub(mine.counterexamples.len());
            mine.counterexamples
                .extend(tally.counterexamples.into_iter().take(room));
        }
        self.identities.evaluated += later.identities.evaluated;
        self.identities.failed += later.identities.failed;
        let room = cap.saturating_sub(self.identities.counterexamples.len());
        self.identities
            .counterexamples
            .extend(later.identities.counterexamples.into_iter().take(room));
        for (g, extrema) in later.extremal {
            self.extremal.entry(g).or_default().merge(extrema);
        }
    }

    fn record(&mut self, f: &FibrationNumerics, result: CheckResult) {
        let cap = self.counterexample_cap;
        let tally = self
            .per_check
            .get_mut(&result.id)
            .expect("check registered in report");
        tally.evaluated += 1;
        match result.verdict {
            Verdict::Holds => tally.passed += 1,
            Verdict::NotApplicable => tally.not_applicable += 1,
            Verdict::Fails => {
                tally.failed += 1;
                if tally.counterexamples.len() < cap {
                    tally.counterexamples.push(Counterexample {
                        fibration: f.clone(),
                        result,
                    });
                }
            }
        }
    }
}

/// Sweeps one `(g, n)` cell of the box.
///
/// Unconditional checks and the invariant identities run on every basic
/// census; conditional checks run on censuses passing the box filters; the
/// split check C14 runs everywhere with its upper half restricted to
/// filtered censuses.
pub fn verify_cell(
    bounds: &SweepBox,
    checks: &[CheckId],
    options: SweepOptions,
    genus: u64,
    n: u64,
) -> SweepReport {
    let mut report = SweepReport::empty(*bounds, checks, options.counterexample_cap);
    let ids = report.checks.clone();
    for f in bounds.cell_tuples(genus, n) {
        let inv = compute_invariants(&f);
        report.tuples_enumerated += 1;
        report.identities.evaluated += 1;
        if let Err(identity) = verify_identities(&f, &inv) {
            report.identities.failed += 1;
            if report.identities.counterexamples.len() < report.counterexample_cap {
                report.identities.counterexamples.push(IdentityFailure {
                    fibration: f.clone(),
                    identity,
                });
            }
        }
        let admissible = bounds.filters.passes(&f, &inv);
        if admissible {
            report.tuples_admissible += 1;
            report.extremal.entry(genus).or_default().observe(&f, &inv);
        }
        for &id in &ids {
            let part = match (id.descriptor().class, admissible) {
                (_, true) => Part::All,
                (CheckClass::Unconditional, false) => Part::All,
                (CheckClass::Split, false) => Part::UnconditionalOnly,
                (CheckClass::Conditional, false) => continue,
            };
            let result = evaluate_part(id, &f, &inv, options.flags, part);
            report.record(&f, result);
        }
    }
    report
}

/// Sequential sweep over the whole box with default options.
pub fn verify_theorems(bounds: &SweepBox, checks: &[CheckId]) -> SweepReport {
    verify_theorems_with(bounds, checks, SweepOptions::default())
}

pub fn verify_theorems_with(
    bounds: &SweepBox,
    checks: &[CheckId],
    options: SweepOptions,
) -> SweepReport {
    let mut report = SweepReport::empty(*bounds, checks, options.counterexample_cap);
    for (g, n) in bounds.cells() {
        report.merge(verify_cell(bounds, checks, options, g, n));
    }
    report
}
