//! Registry of the numerical laws satisfied by hyperelliptic Lefschetz
//! fibrations, each evaluable on a census to a structured verdict.
//!
//! Laws come in two classes. *Unconditional* laws are consequences of the
//! signature formula alone and hold for every valid census. *Conditional*
//! laws additionally rely on integrality of `chi_h` and on the signature
//! bound `sigma <= n - s - 4` (C05); on censuses that fail those conditions
//! a conditional law may legitimately fail, which is an expected rejection
//! rather than a counterexample. C14 is split: its lower half is
//! unconditional, its upper half conditional.

mod checks;

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::Error;
use crate::fibration::FibrationNumerics;
use crate::invariants::{compute_invariants, InvariantSet};
use crate::rational::Rational;

/// Stable identifiers of the registry entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CheckId {
    C01,
    C02,
    C03,
    C04,
    C05,
    C06,
    C07,
    C08,
    C09,
    C10,
    C11,
    C12,
    C13,
    C14,
    C15,
    C16,
    C17,
    C18,
    C19,
    C20,
    C21,
    C22,
}

impl CheckId {
    pub const ALL: [CheckId; 22] = [
        CheckId::C01,
        CheckId::C02,
        CheckId::C03,
        CheckId::C04,
        CheckId::C05,
        CheckId::C06,
        CheckId::C07,
        CheckId::C08,
        CheckId::C09,
        CheckId::C10,
        CheckId::C11,
        CheckId::C12,
        CheckId::C13,
        CheckId::C14,
        CheckId::C15,
        CheckId::C16,
        CheckId::C17,
        CheckId::C18,
        CheckId::C19,
        CheckId::C20,
        CheckId::C21,
        CheckId::C22,
    ];

    pub fn as_str(self) -> &'static str {
        self.descriptor().code
    }

    pub fn name(self) -> &'static str {
        self.descriptor().name
    }

    pub fn descriptor(self) -> &'static CheckDescriptor {
        &REGISTRY[self as usize]
    }

    fn valid_ids() -> String {
        let ids: Vec<&str> = CheckId::ALL.iter().map(|id| id.as_str()).collect();
        ids.join(", ")
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CheckId {
    type Err = Error;

    /// Accepts the code (`C07`) or the snake-case name (`g2_chi_h_nonneg`).
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        REGISTRY
            .iter()
            .find(|d| d.code.eq_ignore_ascii_case(s) || d.name == s)
            .map(|d| d.id)
            .ok_or_else(|| Error::UnknownCheck {
                id: s.to_string(),
                valid: CheckId::valid_ids(),
            })
    }
}

/// Genera a check is stated for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenusScope {
    Any,
    Genus2,
    /// Genus 2 with a dedicated genus-3 variant.
    Genus2Or3,
    AtLeast(u64),
}

impl GenusScope {
    pub fn contains(self, genus: u64) -> bool {
        match self {
            GenusScope::Any => true,
            GenusScope::Genus2 => genus == 2,
            GenusScope::Genus2Or3 => genus == 2 || genus == 3,
            GenusScope::AtLeast(min) => genus >= min,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckClass {
    /// Holds for every valid census.
    Unconditional,
    /// Holds for censuses with integral `chi_h` satisfying C05.
    Conditional,
    /// Unconditional part plus a conditional part.
    Split,
}

#[derive(Debug)]
pub struct CheckDescriptor {
    pub id: CheckId,
    pub code: &'static str,
    pub name: &'static str,
    pub scope: GenusScope,
    pub class: CheckClass,
    /// The law being checked, stated in words.
    pub anchor: &'static str,
}

macro_rules! descriptor {
    ($id:ident, $name:literal, $scope:expr, $class:ident, $anchor:literal) => {
        CheckDescriptor {
            id: CheckId::$id,
            code: stringify!($id),
            name: $name,
            scope: $scope,
            class: CheckClass::$class,
            anchor: $anchor,
        }
    };
}

use GenusScope::{Any, AtLeast, Genus2, Genus2Or3};

static REGISTRY: [CheckDescriptor; 22] = [
    descriptor!(C01, "lemma_sg_le_2x", Any, Unconditional,
        "sg <= 2x for g >= 2, refined by s(g-1) <= x"),
    descriptor!(C02, "main_theorem_equivalence", Any, Unconditional,
        "slope > 4 - 4/g iff s != 0, with slope - (4 - 4/g) = 4(2g+1)(4x - sg)/((ng+4x)g)"),
    descriptor!(C03, "stipsicz_ratio", Any, Conditional,
        "s/n <= 5"),
    descriptor!(C04, "rho_upper", Any, Conditional,
        "s/n <= (3g+2)/(4(g-1)) - (2g+1)/(n(g-1)) <= (3g+2)/(4(g-1))"),
    descriptor!(C05, "burak_signature", Any, Conditional,
        "sigma <= n - s - 4 for hyperelliptic fibrations"),
    descriptor!(C06, "g2_noether", Genus2, Conditional,
        "genus 2: c1^2 <= 6 chi_h - 3 with c1^2 = 2 chi_h - 6 + s"),
    descriptor!(C07, "g2_chi_h_nonneg", Genus2Or3, Conditional,
        "genus 2: chi_h >= 0; genus 3: chi_h >= -1"),
    descriptor!(C08, "g2_slope_upper", Genus2Or3, Conditional,
        "genus 2: slope <= 6 - 1/(chi_h+1); genus 3: slope <= 29/4 - (5/4)/(chi_h+2)"),
    descriptor!(C09, "g2_admissibility_system", Genus2Or3, Conditional,
        "genus 2: 2s + n = 10k (k a positive integer, k = chi_h + 1) and 2n - s >= 5; \
         genus 3: 3n + 8s = 28k (k = chi_h + 2) and 11n - 8s >= 28"),
    descriptor!(C10, "g2_sharpness", Genus2, Conditional,
        "genus 2: 2n - s = 5 iff slope = 6 - 1/(chi_h+1)"),
    descriptor!(C11, "g2_chain", Genus2Or3, Conditional,
        "genus 2 (n >= 4) and genus 3 (n >= 8): five-term chain of slope bounds in n and s"),
    descriptor!(C12, "general_slope_upper", Any, Conditional,
        "slope <= 10 - (2+s)/(chi_h+g-1) and slope <= 10"),
    descriptor!(C13, "n_lower_from_chi_h", Any, Conditional,
        "2 chi_h + 2g <= n; simply connected with b2+ >= 1: n >= 2g+2 (2g+4 when b2+ > 1)"),
    descriptor!(C14, "double_slope_estimate", Any, Split,
        "4(g-1)/g + (4s/g)(2g+1)(3g-4)/(ng+4s(g-1)) <= slope <= 10 - 2(2+s)/(n-2) (upper half for n > 2)"),
    descriptor!(C15, "n_divisibility", Any, Conditional,
        "integral chi_h: 4 | n for odd g, 2 | n for g = 2 mod 4, and 4 | gn"),
    descriptor!(C16, "quarter_integer", Any, Conditional,
        "integral chi_h: sigma + n + s = 4(chi_h + g - 1); for 4 not dividing g, \
         t = (n - s - sigma)/4 = ((3g+2)n - 4x)/(4(2g+1)) is a positive integer"),
    descriptor!(C17, "g2_signature_bounds", Genus2Or3, Conditional,
        "genus 2: sigma <= -2 chi_h - 3 and sigma <= -chi/3 - 2; \
         genus 3: sigma <= -(3/4)chi_h - 11/4 and sigma <= -(3/19)chi - 44/19"),
    descriptor!(C18, "g2_ratio_vs_chih", Genus2Or3, Conditional,
        "genus 2: s/n <= (4 chi_h + 3)/(2 chi_h + 4); genus 3: s/n <= (11 chi_h + 19)/(8(chi_h + 3))"),
    descriptor!(C19, "slope_negative_sig", Genus2, Conditional,
        "genus 2: slope < 8 and sigma < 0"),
    descriptor!(C20, "avg_signature", Any, Unconditional,
        "sigma/(n+s) >= -(g+1)/(2g+1), strictly when s > 0"),
    descriptor!(C21, "rho_general", Any, Conditional,
        "s/n < 3 + 2/g"),
    descriptor!(C22, "s_le_n_high_genus", AtLeast(6), Conditional,
        "genus g >= 6: s <= n"),
];

/// The full registry in id order.
pub fn registry() -> &'static [CheckDescriptor] {
    &REGISTRY
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Holds,
    Fails,
    NotApplicable,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
            Verdict::NotApplicable => "not_applicable",
        }
    }
}

/// How `lhs` and `rhs` of a [`CheckResult`] are compared.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    /// `lhs <= rhs`
    Le,
    /// `lhs < rhs`
    Lt,
    /// `lhs = rhs`
    Eq,
    /// `lhs` divides `rhs`
    Divides,
    /// Both sides of a biconditional; the truth values are in the witness.
    Iff,
    /// Check not evaluated.
    None,
}

impl Relation {
    pub fn as_str(self) -> &'static str {
        match self {
            Relation::Le => "<=",
            Relation::Lt => "<",
            Relation::Eq => "=",
            Relation::Divides => "|",
            Relation::Iff => "<=>",
            Relation::None => "",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WitnessValue {
    Value(Rational),
    Flag(bool),
    Note(&'static str),
}

impl From<Rational> for WitnessValue {
    fn from(v: Rational) -> Self {
        WitnessValue::Value(v)
    }
}

impl From<bool> for WitnessValue {
    fn from(v: bool) -> Self {
        WitnessValue::Flag(v)
    }
}

/// Ordered key/value record of intermediate exact values.
pub type Witness = Vec<(&'static str, WitnessValue)>;

/// Outcome of one registry entry on one census.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub id: CheckId,
    pub verdict: Verdict,
    pub relation: Relation,
    pub lhs: Rational,
    pub rhs: Rational,
    pub witness: Witness,
    pub anchor: &'static str,
}

impl CheckResult {
    pub fn holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }

    pub fn fails(&self) -> bool {
        self.verdict == Verdict::Fails
    }

    pub fn witness_value(&self, key: &str) -> Option<&WitnessValue> {
        self.witness.iter().find(|(k, _)| *k == key).map(|(_, v)| v)
    }

    fn not_applicable(id: CheckId, reason: &'static str) -> Self {
        CheckResult {
            id,
            verdict: Verdict::NotApplicable,
            relation: Relation::None,
            lhs: Rational::zero(),
            rhs: Rational::zero(),
            witness: alloc::vec![("reason", WitnessValue::Note(reason))],
            anchor: id.descriptor().anchor,
        }
    }
}

/// Optional hypotheses supplied with a census.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct HypothesisFlags {
    /// Treat the census as a realizable fibration: conditional checks are
    /// skipped (not applicable) when it fails the admissibility filter
    /// instead of being reported as failures.
    pub treat_as_realizable: bool,
    /// The total space is simply connected.
    pub simply_connected: bool,
    /// `b2+` of the total space, used with `simply_connected`.
    pub b2plus: Option<u64>,
}

/// Which parts of a split check to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Part {
    All,
    UnconditionalOnly,
}

/// The admissibility conditions conditional checks rely on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Admissibility {
    pub integral_chi_h: bool,
    /// `sigma <= n - s - 4`
    pub signature_bound: bool,
}

impl Admissibility {
    pub fn of(f: &FibrationNumerics, inv: &InvariantSet) -> Self {
        let bound = Rational::from(f.n()) - Rational::from(&inv.s) - 4;
        Admissibility {
            integral_chi_h: inv.chi_h.is_integer(),
            signature_bound: inv.sigma <= bound,
        }
    }

    pub fn admissible(self) -> bool {
        self.integral_chi_h && self.signature_bound
    }
}

/// Evaluates one check by id string (`C07` or `g2_chi_h_nonneg`).
pub fn run_check(check_id: &str, f: &FibrationNumerics) -> Result<CheckResult, Error> {
    let id: CheckId = check_id.parse()?;
    Ok(evaluate(
        id,
        f,
        &compute_invariants(f),
        HypothesisFlags::default(),
    ))
}

/// Evaluates one check on a census with precomputed invariants.
pub fn evaluate(
    id: CheckId,
    f: &FibrationNumerics,
    inv: &InvariantSet,
    flags: HypothesisFlags,
) -> CheckResult {
    evaluate_part(id, f, inv, flags, Part::All)
}

/// Like [`evaluate`], restricted to the unconditional part of split checks
/// when `part` is [`Part::UnconditionalOnly`].
pub fn evaluate_part(
    id: CheckId,
    f: &FibrationNumerics,
    inv: &InvariantSet,
    flags: HypothesisFlags,
    part: Part,
) -> CheckResult {
    let descriptor = id.descriptor();
    if !descriptor.scope.contains(f.genus()) {
        return CheckResult::not_applicable(id, "genus outside the scope of this law");
    }
    let mut part = part;
    if flags.treat_as_realizable && !Admissibility::of(f, inv).admissible() {
        match descriptor.class {
            CheckClass::Unconditional => {}
            CheckClass::Split => part = Part::UnconditionalOnly,
            CheckClass::Conditional => {
                return CheckResult::not_applicable(id, "census fails the admissibility filter");
            }
        }
    }
    match checks::evaluate(id, f, inv, flags, part) {
        Ok(outcome) => CheckResult {
            id,
            verdict: if outcome.holds {
                Verdict::Holds
            } else {
                Verdict::Fails
            },
            relation: outcome.relation,
            lhs: outcome.lhs,
            rhs: outcome.rhs,
            witness: outcome.witness,
            anchor: descriptor.anchor,
        },
        Err(reason) => CheckResult::not_applicable(id, reason),
    }
}

/// Evaluates every registry entry in id order. Entries outside the census's
/// genus or hypotheses are reported as not applicable.
pub fn run_all(f: &FibrationNumerics, flags: HypothesisFlags) -> Vec<CheckResult> {
    let inv = compute_invariants(f);
    CheckId::ALL
        .iter()
        .map(|&id| evaluate(id, f, &inv, flags))
        .collect()
}

/// Minimum number of non-separating vanishing cycles of a simply connected
/// hyperelliptic genus-`g` fibration with the given `b2+`.
///
/// `b2+` of such a fibration is `2 chi_h - 1`, hence odd.
pub fn min_nonseparating(genus: u64, b2plus: u64, simply_connected: bool) -> Result<u64, Error> {
    if genus < 2 {
        return Err(Error::InvalidGenus(genus));
    }
    if !simply_connected {
        return Err(Error::Hypothesis(
            "the total space must be simply connected",
        ));
    }
    if b2plus < 1 {
        return Err(Error::Hypothesis("b2+ must be at least 1"));
    }
    if b2plus % 2 == 0 {
        return Err(Error::Hypothesis(
            "b2+ of a simply connected fibration is odd",
        ));
    }
    let base = genus
        .checked_mul(2)
        .ok_or(Error::InvalidParameter("genus too large"))?;
    let extra = if b2plus == 1 { 2 } else { 4 };
    base.checked_add(extra)
        .ok_or(Error::InvalidParameter("genus too large"))
}
