//! Property tests for the invariant layer against an independent integer
//! oracle.

use lefschetz_core::invariants::{
    compute_invariants, signature, signature_from_slope, slope, slope_alternate_forms,
    verify_identities,
};
use lefschetz_core::{FibrationNumerics, Rational};
use proptest::prelude::*;

/// Census values as plain integers: `(g, n, x, s)`.
fn oracle_census(f: &FibrationNumerics) -> (i128, i128, i128, i128) {
    let g = f.genus() as i128;
    let mut x = 0i128;
    let mut s = 0i128;
    for (i, &c) in f.sep().iter().enumerate() {
        let h = i as i128 + 1;
        x += h * (g - h) * c as i128;
        s += c as i128;
    }
    (g, f.n() as i128, x, s)
}

fn frac(num: i128, den: i128) -> Rational {
    format!("{num}/{den}").parse().unwrap()
}

fn census() -> impl Strategy<Value = FibrationNumerics> {
    (2u64..=16)
        .prop_flat_map(|g| {
            (
                Just(g),
                1u64..=500,
                prop::collection::vec(0u64..=60, (g / 2) as usize),
            )
        })
        .prop_map(|(g, n, sep)| FibrationNumerics::new(g, n, sep).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn signature_matches_cleared_denominator_form(f in census()) {
        let (g, n, x, s) = oracle_census(&f);
        // (2g+1) sigma = 4x - (g+1) n - (2g+1) s
        prop_assert_eq!(signature(&f), frac(4 * x - (g + 1) * n - (2 * g + 1) * s, 2 * g + 1));
    }

    #[test]
    fn slope_matches_cleared_denominator_form(f in census()) {
        let (g, n, x, s) = oracle_census(&f);
        prop_assert_eq!(slope(&f), frac(4 * (n * (g - 1) - s * (2 * g + 1) + 12 * x), n * g + 4 * x));
    }

    #[test]
    fn invariants_satisfy_every_identity(f in census()) {
        let inv = compute_invariants(&f);
        prop_assert_eq!(verify_identities(&f, &inv), Ok(()));
        prop_assert!(slope_alternate_forms(&f).all_equal(&inv.slope));
    }

    #[test]
    fn chi_f_closed_form(f in census()) {
        let (g, n, x, _) = oracle_census(&f);
        let inv = compute_invariants(&f);
        prop_assert_eq!(inv.chi_f, frac(n * g + 4 * x, 4 * (2 * g + 1)));
    }

    #[test]
    fn signature_round_trips_through_slope(f in census()) {
        let inv = compute_invariants(&f);
        let total = Rational::from(f.n()) + Rational::from(&inv.s);
        prop_assert_eq!(signature_from_slope(&inv.slope, &total), Ok(inv.sigma.clone()));
    }

    #[test]
    fn no_separating_cycles_pin_the_slope(g in 2u64..=40, n in 1u64..=10_000) {
        let f = FibrationNumerics::without_separating(g, n).unwrap();
        prop_assert_eq!(slope(&f), frac(4 * g as i128 - 4, g as i128));
    }

    #[test]
    fn separating_cycles_raise_the_slope(f in census()) {
        let floor = 4 - Rational::integer(4) / Rational::from(f.genus());
        prop_assert_eq!(slope(&f) > floor, f.has_separating());
    }

    #[test]
    fn slope_stays_below_twelve(f in census()) {
        prop_assert!(slope(&f) < Rational::integer(12));
    }

    #[test]
    fn rational_field_laws(a in -10_000i64..10_000, b in 1i64..500, c in -10_000i64..10_000, d in 1i64..500) {
        let p = Rational::ratio(a, b);
        let q = Rational::ratio(c, d);
        prop_assert_eq!(&p + &q, frac(a as i128 * d as i128 + c as i128 * b as i128, b as i128 * d as i128));
        prop_assert_eq!(&(&p + &q) - &q, p.clone());
        prop_assert_eq!(&p * &q, frac(a as i128 * c as i128, b as i128 * d as i128));
        if c != 0 {
            prop_assert_eq!(&(&p / &q) * &q, p.clone());
        }
        prop_assert_eq!(p.to_string().parse::<Rational>().unwrap(), p);
    }

    #[test]
    fn rational_ordering_matches_cross_multiplication(a in any::<i64>(), b in 1i64..=i64::MAX, c in any::<i64>(), d in 1i64..=i64::MAX) {
        let p = frac(a as i128, b as i128);
        let q = frac(c as i128, d as i128);
        let expected = (a as i128 * d as i128).cmp(&(c as i128 * b as i128));
        prop_assert_eq!(p.cmp(&q), expected);
    }

    #[test]
    fn rational_arithmetic_survives_overflow(a in any::<i64>(), b in any::<i64>()) {
        let p = Rational::integer(a);
        let q = Rational::integer(b);
        let product = &p * &q;
        prop_assert_eq!(product.to_string(), format!("{}/1", a as i128 * b as i128));
        let sum = &p + &q;
        prop_assert_eq!(sum.to_string(), format!("{}/1", a as i128 + b as i128));
        if b != 0 {
            prop_assert_eq!(&product / &q, p);
        }
    }
}

#[test]
fn huge_censuses_stay_exact() {
    let f = FibrationNumerics::new(5, u64::MAX, vec![u64::MAX, u64::MAX]).unwrap();
    let inv = compute_invariants(&f);
    assert_eq!(verify_identities(&f, &inv), Ok(()));
}
