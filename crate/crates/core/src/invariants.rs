//! Exact invariants of a fibration computed from its vanishing-cycle census.
//!
//! The signature of a hyperelliptic genus-`g` fibration with `n`
//! non-separating and `s_h` separating vanishing cycles of type `h` is
//!
//! ```text
//! sigma = -(g+1)/(2g+1) n + 4x/(2g+1) - s,    x = sum_h h(g-h) s_h,  s = sum_h s_h
//! ```
//!
//! and every other invariant follows from `sigma` and the Euler
//! characteristic `chi = n + s - 4(g-1)`.

use num_bigint::BigInt;

use crate::error::Error;
use crate::fibration::FibrationNumerics;
use crate::rational::Rational;

/// Derived invariants of a [`FibrationNumerics`].
///
/// Values that are integers for realizable fibrations (`sigma`, `chi_h`) are
/// still carried as rationals so that non-integral censuses can be
/// represented and filtered out downstream.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantSet {
    /// Weighted separating sum `x = sum h(g-h) s_h`.
    pub x: BigInt,
    /// Total separating count `s`.
    pub s: BigInt,
    pub sigma: Rational,
    /// Euler characteristic of the total space.
    pub euler: BigInt,
    /// Holomorphic Euler characteristic `(sigma + chi) / 4`.
    pub chi_h: Rational,
    pub c1sq: Rational,
    /// `K_f^2 = c1^2 + 8(g-1)`.
    pub k_f_sq: Rational,
    /// `chi_f = chi_h + g - 1`.
    pub chi_f: Rational,
    /// `lambda = K_f^2 / chi_f`.
    pub slope: Rational,
    /// `s / n`.
    pub ratio: Rational,
}

/// The weighted separating sum and the plain separating total.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparatingSums {
    pub x: BigInt,
    pub s: BigInt,
}

/// Census values lifted into exact arithmetic once per evaluation.
pub(crate) struct Census {
    pub g: Rational,
    pub n: Rational,
    pub x: Rational,
    pub s: Rational,
}

impl Census {
    pub(crate) fn of(f: &FibrationNumerics) -> Self {
        let (x, s) = match sums_u128(f) {
            Some((x, s)) => (Rational::from(x), Rational::from(s)),
            None => {
                let sums = weighted_separating_sum(f);
                (Rational::from(sums.x), Rational::from(sums.s))
            }
        };
        Census {
            g: Rational::from(f.genus()),
            n: Rational::from(f.n()),
            x,
            s,
        }
    }

    pub(crate) fn from_invariants(f: &FibrationNumerics, inv: &InvariantSet) -> Self {
        Census {
            g: Rational::from(f.genus()),
            n: Rational::from(f.n()),
            x: Rational::from(&inv.x),
            s: Rational::from(&inv.s),
        }
    }

    /// `ng + 4x`, positive because `n >= 1`.
    pub(crate) fn slope_denominator(&self) -> Rational {
        &self.n * &self.g + &self.x * 4
    }
}

fn sums_u128(f: &FibrationNumerics) -> Option<(u128, u128)> {
    let g = f.genus() as u128;
    let mut x: u128 = 0;
    let mut s: u128 = 0;
    for (i, &count) in f.sep().iter().enumerate() {
        let h = i as u128 + 1;
        let weight = h.checked_mul(g - h)?;
        x = x.checked_add(weight.checked_mul(count as u128)?)?;
        s = s.checked_add(count as u128)?;
    }
    Some((x, s))
}

/// `x = sum_{h=1}^{g/2} h(g-h) s_h` together with `s = sum s_h`.
pub fn weighted_separating_sum(f: &FibrationNumerics) -> SeparatingSums {
    if let Some((x, s)) = sums_u128(f) {
        return SeparatingSums {
            x: BigInt::from(x),
            s: BigInt::from(s),
        };
    }
    let g = BigInt::from(f.genus());
    let mut x = BigInt::from(0u8);
    let mut s = BigInt::from(0u8);
    for (i, &count) in f.sep().iter().enumerate() {
        let h = BigInt::from(i as u64 + 1);
        let count = BigInt::from(count);
        x += &h * (&g - &h) * &count;
        s += count;
    }
    SeparatingSums { x, s }
}

fn signature_of(c: &Census) -> Rational {
    let two_g_plus_one = &c.g * 2 + 1;
    (&c.x * 4 - (&c.g + 1) * &c.n) / two_g_plus_one - &c.s
}

fn slope_of(c: &Census) -> Rational {
    let numerator = &c.n * (&c.g - 1) - &c.s * (&c.g * 2 + 1) + &c.x * 12;
    numerator * 4 / c.slope_denominator()
}

/// Signature `-(g+1)n/(2g+1) + 4x/(2g+1) - s`.
pub fn signature(f: &FibrationNumerics) -> Rational {
    signature_of(&Census::of(f))
}

/// Slope from the closed form `4 (n(g-1) - s(2g+1) + 12x) / (ng + 4x)`.
pub fn slope(f: &FibrationNumerics) -> Rational {
    slope_of(&Census::of(f))
}

pub fn compute_invariants(f: &FibrationNumerics) -> InvariantSet {
    let c = Census::of(f);
    let sigma = signature_of(&c);
    let g_minus_one = &c.g - 1;
    let euler = &c.n + &c.s - &g_minus_one * 4;
    let chi_h = (&sigma + &euler) / 4;
    let c1sq = &euler * 2 + &sigma * 3;
    let k_f_sq = &c1sq + &g_minus_one * 8;
    let chi_f = &chi_h + &g_minus_one;
    let slope = slope_of(&c);
    let ratio = &c.s / &c.n;
    InvariantSet {
        x: c.x.numer(),
        s: c.s.numer(),
        sigma,
        euler: euler.numer(),
        chi_h,
        c1sq,
        k_f_sq,
        chi_f,
        slope,
        ratio,
    }
}

/// The three alternative expressions of the slope.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlopeForms {
    /// `12 - (n+s)/chi_f`
    pub via_chi_f: Rational,
    /// `12 - 4(n+s)/(sigma+n+s)`
    pub via_total: Rational,
    /// `8 + 4 sigma/(sigma+n+s)`
    pub via_signature: Rational,
}

impl SlopeForms {
    pub fn all_equal(&self, slope: &Rational) -> bool {
        &self.via_chi_f == slope && &self.via_total == slope && &self.via_signature == slope
    }
}

pub fn slope_alternate_forms(f: &FibrationNumerics) -> SlopeForms {
    slope_forms_of(f, &compute_invariants(f))
}

pub(crate) fn slope_forms_of(f: &FibrationNumerics, inv: &InvariantSet) -> SlopeForms {
    let total = Rational::from(f.n()) + Rational::from(&inv.s);
    // sigma + n + s = 4 chi_f > 0
    let signed_total = &inv.sigma + &total;
    SlopeForms {
        via_chi_f: 12 - &total / &inv.chi_f,
        via_total: 12 - &total * 4 / &signed_total,
        via_signature: 8 + &inv.sigma * 4 / &signed_total,
    }
}

/// `sigma = -(lambda - 8)/(lambda - 12) * (n + s)`.
pub fn signature_from_slope(lambda: &Rational, n_plus_s: &Rational) -> Result<Rational, Error> {
    let denominator = lambda - 12;
    if denominator.is_zero() {
        return Err(Error::SlopeTwelve);
    }
    Ok(-(lambda - 8) / denominator * n_plus_s)
}

/// A consistency identity between the invariants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Identity {
    EulerCharacteristic,
    HolomorphicEuler,
    ChernSquare,
    CanonicalSquare,
    RelativeEuler,
    SlopeDefinition,
    SlopeAlternateForms,
    SignatureRoundTrip,
    NoSeparatingSlope,
    LowGenusSlope,
}

impl Identity {
    pub const ALL: [Identity; 10] = [
        Identity::EulerCharacteristic,
        Identity::HolomorphicEuler,
        Identity::ChernSquare,
        Identity::CanonicalSquare,
        Identity::RelativeEuler,
        Identity::SlopeDefinition,
        Identity::SlopeAlternateForms,
        Identity::SignatureRoundTrip,
        Identity::NoSeparatingSlope,
        Identity::LowGenusSlope,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::EulerCharacteristic => "euler = n + s - 4(g-1)",
            Identity::HolomorphicEuler => "4 chi_h = sigma + euler",
            Identity::ChernSquare => "c1sq = 2 euler + 3 sigma",
            Identity::CanonicalSquare => "k_f_sq = c1sq + 8(g-1)",
            Identity::RelativeEuler => "chi_f = chi_h + g - 1 = (ng+4x)/(4(2g+1)) > 0",
            Identity::SlopeDefinition => "slope = k_f_sq / chi_f",
            Identity::SlopeAlternateForms => "slope equals its three alternate forms",
            Identity::SignatureRoundTrip => "signature_from_slope(slope, n+s) = sigma",
            Identity::NoSeparatingSlope => "s = 0 implies slope = 4 - 4/g",
            Identity::LowGenusSlope => "genus 2 and 3 closed slope forms",
        }
    }
}

/// Checks every consistency identity, returning the first one violated.
pub fn verify_identities(f: &FibrationNumerics, inv: &InvariantSet) -> Result<(), Identity> {
    let g = Rational::from(f.genus());
    let n = Rational::from(f.n());
    let s = Rational::from(&inv.s);
    let x = Rational::from(&inv.x);
    let euler = Rational::from(&inv.euler);
    let g_minus_one = &g - 1;

    let ensure = |ok: bool, id: Identity| if ok { Ok(()) } else { Err(id) };

    ensure(
        euler == &n + &s - &g_minus_one * 4,
        Identity::EulerCharacteristic,
    )?;
    ensure(
        &inv.chi_h * 4 == &inv.sigma + &euler,
        Identity::HolomorphicEuler,
    )?;
    ensure(
        inv.c1sq == &euler * 2 + &inv.sigma * 3,
        Identity::ChernSquare,
    )?;
    ensure(
        inv.k_f_sq == &inv.c1sq + &g_minus_one * 8,
        Identity::CanonicalSquare,
    )?;
    let closed_chi_f = (&n * &g + &x * 4) / ((&g * 2 + 1) * 4);
    ensure(
        inv.chi_f == &inv.chi_h + &g_minus_one
            && inv.chi_f == closed_chi_f
            && inv.chi_f.is_positive(),
        Identity::RelativeEuler,
    )?;
    ensure(
        inv.slope == &inv.k_f_sq / &inv.chi_f,
        Identity::SlopeDefinition,
    )?;
    ensure(
        slope_forms_of(f, inv).all_equal(&inv.slope),
        Identity::SlopeAlternateForms,
    )?;
    let round_trip = signature_from_slope(&inv.slope, &(&n + &s));
    ensure(
        round_trip.as_ref() == Ok(&inv.sigma),
        Identity::SignatureRoundTrip,
    )?;
    if s.is_zero() {
        ensure(
            inv.slope == 4 - Rational::integer(4) / &g,
            Identity::NoSeparatingSlope,
        )?;
    }
    let low_genus = match f.genus() {
        2 => Some((&n + &s * 7) * 2 / (&n + &s * 2)),
        3 => Some((&n * 2 + &s * 17) * 4 / (&n * 3 + &s * 8)),
        _ => None,
    };
    if let Some(closed) = low_genus {
        ensure(inv.slope == closed, Identity::LowGenusSlope)?;
    }
    Ok(())
}
