//! JSON shapes for invariants, check results and sweep reports.
//!
//! Exact values are written as `"p/q"` strings next to a six-significant-digit
//! decimal rendering. The decimal is for reading only and is never parsed back.

use std::collections::BTreeMap;

use lefschetz_core::constraints::{
    CheckClass, CheckId, CheckResult, HypothesisFlags, WitnessValue,
};
use lefschetz_core::enumeration::{CheckTally, Extrema, Extremum, SweepReport};
use lefschetz_core::{Error, FibrationNumerics, InvariantSet, Rational};
use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize, Serializer};

pub const DECIMAL_DIGITS: usize = 6;

/// An exact rational with its decimal rendering.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactValue {
    pub exact: String,
    pub decimal: String,
}

impl ExactValue {
    pub fn new(value: &Rational) -> Self {
        ExactValue {
            exact: value.to_string(),
            decimal: value.to_decimal(DECIMAL_DIGITS),
        }
    }

    pub fn value(&self) -> Result<Rational, Error> {
        self.exact.parse()
    }
}

impl From<&Rational> for ExactValue {
    fn from(value: &Rational) -> Self {
        ExactValue::new(value)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusJson {
    pub g: u64,
    pub n: u64,
    /// `s_1, ..., s_{g/2}`
    pub sep: Vec<u64>,
}

impl From<&FibrationNumerics> for CensusJson {
    fn from(f: &FibrationNumerics) -> Self {
        CensusJson {
            g: f.genus(),
            n: f.n(),
            sep: f.sep().to_vec(),
        }
    }
}

impl CensusJson {
    pub fn to_numerics(&self) -> Result<FibrationNumerics, Error> {
        FibrationNumerics::new(self.g, self.n, self.sep.clone())
    }
}

/// Output of the `invariants` subcommand.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub g: u64,
    pub n: u64,
    pub sep: Vec<u64>,
    pub x: ExactValue,
    pub s: ExactValue,
    pub sigma: ExactValue,
    pub euler: ExactValue,
    pub chi_h: ExactValue,
    pub c1sq: ExactValue,
    pub k_f_sq: ExactValue,
    pub chi_f: ExactValue,
    pub slope: ExactValue,
    pub ratio: ExactValue,
}

impl InvariantReport {
    pub fn new(f: &FibrationNumerics, inv: &InvariantSet) -> Self {
        InvariantReport {
            g: f.genus(),
            n: f.n(),
            sep: f.sep().to_vec(),
            x: ExactValue::new(&Rational::from(&inv.x)),
            s: ExactValue::new(&Rational::from(&inv.s)),
            sigma: ExactValue::new(&inv.sigma),
            euler: ExactValue::new(&Rational::from(&inv.euler)),
            chi_h: ExactValue::new(&inv.chi_h),
            c1sq: ExactValue::new(&inv.c1sq),
            k_f_sq: ExactValue::new(&inv.k_f_sq),
            chi_f: ExactValue::new(&inv.chi_f),
            slope: ExactValue::new(&inv.slope),
            ratio: ExactValue::new(&inv.ratio),
        }
    }

    pub fn numerics(&self) -> Result<FibrationNumerics, Error> {
        FibrationNumerics::new(self.g, self.n, self.sep.clone())
    }

    /// Rebuilds the invariant set from the exact strings.
    pub fn to_invariants(&self) -> Result<InvariantSet, Error> {
        let integer = |v: &ExactValue| -> Result<_, Error> {
            v.value()?
                .to_integer()
                .ok_or_else(|| Error::ParseRational(v.exact.clone()))
        };
        Ok(InvariantSet {
            x: integer(&self.x)?,
            s: integer(&self.s)?,
            sigma: self.sigma.value()?,
            euler: integer(&self.euler)?,
            chi_h: self.chi_h.value()?,
            c1sq: self.c1sq.value()?,
            k_f_sq: self.k_f_sq.value()?,
            chi_f: self.chi_f.value()?,
            slope: self.slope.value()?,
            ratio: self.ratio.value()?,
        })
    }
}

pub fn class_name(class: CheckClass) -> &'static str {
    match class {
        CheckClass::Unconditional => "unconditional",
        CheckClass::Conditional => "conditional",
        CheckClass::Split => "split",
    }
}

/// A witness entry; serialized untagged.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum WitnessJson {
    Value(ExactValue),
    Flag(bool),
    Note(String),
}

/// Witness entries serialized as a JSON object in their recorded order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessMap(pub Vec<(String, WitnessJson)>);

impl Serialize for WitnessMap {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResultJson {
    pub id: &'static str,
    pub name: &'static str,
    pub class: &'static str,
    pub verdict: &'static str,
    pub relation: &'static str,
    pub lhs: ExactValue,
    pub rhs: ExactValue,
    pub witness: WitnessMap,
    pub anchor: &'static str,
}

impl From<&CheckResult> for CheckResultJson {
    fn from(r: &CheckResult) -> Self {
        let d = r.id.descriptor();
        let witness = r
            .witness
            .iter()
            .map(|(k, v)| {
                let v = match v {
                    WitnessValue::Value(x) => WitnessJson::Value(ExactValue::new(x)),
                    WitnessValue::Flag(b) => WitnessJson::Flag(*b),
                    WitnessValue::Note(s) => WitnessJson::Note((*s).to_string()),
                };
                ((*k).to_string(), v)
            })
            .collect();
        CheckResultJson {
            id: d.code,
            name: d.name,
            class: class_name(d.class),
            verdict: r.verdict.as_str(),
            relation: r.relation.as_str(),
            lhs: ExactValue::new(&r.lhs),
            rhs: ExactValue::new(&r.rhs),
            witness: WitnessMap(witness),
            anchor: r.anchor,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FlagsJson {
    pub treat_as_realizable: bool,
    pub simply_connected: bool,
    pub b2plus: Option<u64>,
}

impl From<HypothesisFlags> for FlagsJson {
    fn from(f: HypothesisFlags) -> Self {
        FlagsJson {
            treat_as_realizable: f.treat_as_realizable,
            simply_connected: f.simply_connected,
            b2plus: f.b2plus,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct VerdictCounts {
    pub holds: u64,
    pub fails: u64,
    pub not_applicable: u64,
}

/// Output of the `check` subcommand.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckRun {
    pub census: CensusJson,
    pub flags: FlagsJson,
    pub summary: VerdictCounts,
    pub results: Vec<CheckResultJson>,
}

impl CheckRun {
    pub fn new(f: &FibrationNumerics, flags: HypothesisFlags, results: &[CheckResult]) -> Self {
        let mut summary = VerdictCounts::default();
        for r in results {
            match r.verdict {
                lefschetz_core::Verdict::Holds => summary.holds += 1,
                lefschetz_core::Verdict::Fails => summary.fails += 1,
                lefschetz_core::Verdict::NotApplicable => summary.not_applicable += 1,
            }
        }
        CheckRun {
            census: f.into(),
            flags: flags.into(),
            summary,
            results: results.iter().map(CheckResultJson::from).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundsJson {
    pub g_min: u64,
    pub g_max: u64,
    pub n_max: u64,
    pub s_total_max: u64,
    pub filters: Vec<&'static str>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CounterexampleJson {
    pub census: CensusJson,
    pub result: CheckResultJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TallyJson {
    pub name: &'static str,
    pub class: &'static str,
    pub evaluated: u64,
    pub passed: u64,
    pub failed: u64,
    pub not_applicable: u64,
    pub counterexamples: Vec<CounterexampleJson>,
}

impl TallyJson {
    fn new(id: CheckId, t: &CheckTally) -> Self {
        TallyJson {
            name: id.name(),
            class: class_name(id.descriptor().class),
            evaluated: t.evaluated,
            passed: t.passed,
            failed: t.failed,
            not_applicable: t.not_applicable,
            counterexamples: t
                .counterexamples
                .iter()
                .map(|c| CounterexampleJson {
                    census: (&c.fibration).into(),
                    result: (&c.result).into(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityFailureJson {
    pub census: CensusJson,
    pub identity: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentitiesJson {
    pub evaluated: u64,
    pub failed: u64,
    pub counterexamples: Vec<IdentityFailureJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtremumJson {
    pub value: ExactValue,
    pub census: CensusJson,
}

impl From<&Extremum> for ExtremumJson {
    fn from(e: &Extremum) -> Self {
        ExtremumJson {
            value: ExactValue::new(&e.value),
            census: (&e.fibration).into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtremaJson {
    pub max_ratio: Option<ExtremumJson>,
    pub max_slope: Option<ExtremumJson>,
    pub min_slope_separating: Option<ExtremumJson>,
    pub min_vanishing_cycles: Option<ExtremumJson>,
}

impl From<&Extrema> for ExtremaJson {
    fn from(e: &Extrema) -> Self {
        ExtremaJson {
            max_ratio: e.max_ratio.as_ref().map(Into::into),
            max_slope: e.max_slope.as_ref().map(Into::into),
            min_slope_separating: e.min_slope_separating.as_ref().map(Into::into),
            min_vanishing_cycles: e.min_vanishing_cycles.as_ref().map(Into::into),
        }
    }
}

/// Output of the `sweep` subcommand.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReportJson {
    pub bounds: BoundsJson,
    pub checks: Vec<&'static str>,
    pub counterexample_cap: usize,
    pub tuples_enumerated: u64,
    pub tuples_admissible: u64,
    pub counterexamples_total: u64,
    pub per_check: BTreeMap<&'static str, TallyJson>,
    pub identities: IdentitiesJson,
    /// Keyed by genus.
    pub extremal: BTreeMap<u64, ExtremaJson>,
}

impl From<&SweepReport> for SweepReportJson {
    fn from(r: &SweepReport) -> Self {
        let b = &r.bounds;
        SweepReportJson {
            bounds: BoundsJson {
                g_min: b.g_min,
                g_max: b.g_max,
                n_max: b.n_max,
                s_total_max: b.s_total_max,
                filters: b.filters.filters().iter().map(|f| f.as_str()).collect(),
            },
            checks: r.checks.iter().map(|id| id.as_str()).collect(),
            counterexample_cap: r.counterexample_cap,
            tuples_enumerated: r.tuples_enumerated,
            tuples_admissible: r.tuples_admissible,
            counterexamples_total: r.counterexample_count(),
            per_check: r
                .per_check
                .iter()
                .map(|(id, t)| (id.as_str(), TallyJson::new(*id, t)))
                .collect(),
            identities: IdentitiesJson {
                evaluated: r.identities.evaluated,
                failed: r.identities.failed,
                counterexamples: r
                    .identities
                    .counterexamples
                    .iter()
                    .map(|c| IdentityFailureJson {
                        census: (&c.fibration).into(),
                        identity: c.identity.name(),
                    })
                    .collect(),
            },
            extremal: r.extremal.iter().map(|(g, e)| (*g, e.into())).collect(),
        }
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("report types always serialize");
    out.push('\n');
    out
}
