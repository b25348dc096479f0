//! Enumeration, solver and region behaviour checked against brute force.

use std::collections::BTreeSet;

use lefschetz_core::constraints::{run_all, CheckId};
use lefschetz_core::enumeration::diophantine::{
    g2_boundary_ratio_sequence, solve_g2_system, solve_g3_system,
};
use lefschetz_core::enumeration::region::{classify_region_g2, RegionLabel};
use lefschetz_core::enumeration::{
    enumerate_admissible, verify_cell, verify_theorems_with, FilterSet, SweepBox, SweepOptions,
    SweepReport,
};
use lefschetz_core::invariants::compute_invariants;
use lefschetz_core::{FibrationNumerics, HypothesisFlags, Rational, Verdict};

/// Admissibility for a genus-2 census by direct integer reasoning:
/// `4 chi_h = (n + 2s)/5 - 4` must be a multiple of 4, and `sigma <= n - s - 4`.
fn g2_admissible(n: i64, s: i64) -> bool {
    let five_sigma = -3 * n + 4 * s - 5 * s;
    let chi = n + s - 4;
    // 20 chi_h = 5 sigma + 5 chi
    let twenty_chi_h = five_sigma + 5 * chi;
    twenty_chi_h % 20 == 0 && five_sigma <= 5 * (n - s - 4)
}

#[test]
fn genus_two_admissible_set_matches_oracle() {
    let b = SweepBox::new(2, 2, 40, 60, FilterSet::admissible()).unwrap();
    let found: BTreeSet<(u64, u64)> = enumerate_admissible(&b)
        .map(|(f, _)| (f.n(), f.sep()[0]))
        .collect();
    let oracle: BTreeSet<(u64, u64)> = (1..=40i64)
        .flat_map(|n| (0..=60i64).map(move |s| (n, s)))
        .filter(|&(n, s)| g2_admissible(n, s))
        .map(|(n, s)| (n as u64, s as u64))
        .collect();
    assert_eq!(found, oracle);
}

#[test]
fn enumeration_is_lexicographic_and_covers_compositions() {
    let b = SweepBox::new(2, 7, 5, 4, FilterSet::basic()).unwrap();
    let all: Vec<_> = b.tuples().collect();
    assert!(all.windows(2).all(|w| w[0] < w[1]));
    let expected: usize = (2..=7u64)
        .map(|g| {
            let slots = (g / 2) as usize;
            // compositions of totals <= 4 into `slots` parts: C(4 + slots, slots)
            let c = (1..=slots).fold(1usize, |acc, i| acc * (4 + i) / i);
            5 * c
        })
        .sum();
    assert_eq!(all.len(), expected);
}

#[test]
fn genus_two_solver_is_complete_on_the_boundary() {
    let (_, stream) = solve_g2_system(40, 1).unwrap();
    let solver: BTreeSet<(u64, u64)> = stream.filter(|x| x.n <= 20).map(|x| (x.n, x.s)).collect();
    let b = SweepBox::new(2, 2, 20, 40, FilterSet::admissible()).unwrap();
    let brute: BTreeSet<(u64, u64)> = enumerate_admissible(&b)
        .map(|(f, _)| (f.n(), f.sep()[0]))
        .filter(|&(n, s)| 2 * n as i64 - s as i64 == 5)
        .collect();
    assert!(!brute.is_empty());
    assert_eq!(solver, brute);
}

#[test]
fn genus_two_solver_satisfies_both_congruences() {
    let (_, stream) = solve_g2_system(10, 10).unwrap();
    let mut count = 0;
    for sol in stream {
        count += 1;
        let (n, s) = (sol.n as i64, sol.s as i64);
        assert_eq!(2 * s + n, 10 * sol.k as i64);
        assert_eq!(2 * n - s, 5 * sol.t as i64);
        assert_eq!(sol.slope, 6 - Rational::ratio(sol.t as i64, sol.k as i64));
        assert_eq!(compute_invariants(&sol.fibration()).slope, sol.slope);
        // solver output passes the filters whenever it sits inside s <= 2n - 5
        if s <= 2 * n - 5 {
            assert!(FilterSet::admissible()
                .passes(&sol.fibration(), &compute_invariants(&sol.fibration())));
        }
    }
    // t ranges over 1..=min(10, 4k)
    assert_eq!(count, 4 + 8 + 8 * 10);
}

#[test]
fn genus_three_solver_satisfies_its_system() {
    let (family, stream) = solve_g3_system(10).unwrap();
    assert_eq!(family.genus, 3);
    for sol in stream {
        let (n, s, k, m) = (sol.n as i64, sol.s as i64, sol.k as i64, sol.m as i64);
        assert_eq!(3 * n + 8 * s, 28 * k);
        assert_eq!(11 * n - 8 * s, 28);
        assert_eq!(sol.ratio, Rational::ratio(11 * m + 2, 8 * m + 4));
        let f = sol.fibration();
        let inv = compute_invariants(&f);
        assert!(inv.chi_h.is_integer());
        assert!(FilterSet::admissible().passes(&f, &inv));
    }
}

#[test]
fn boundary_ratios_increase_towards_two() {
    let seq: Vec<_> = g2_boundary_ratio_sequence(200).unwrap().collect();
    assert!(seq.windows(2).all(|w| w[0] < w[1]));
    assert!(seq.iter().all(|r| *r < Rational::integer(2)));
}

#[test]
fn regions_partition_the_admissible_genus_two_box() {
    let b = SweepBox::new(2, 2, 60, 40, FilterSet::admissible()).unwrap();
    let mut seen = BTreeSet::new();
    for (f, inv) in enumerate_admissible(&b) {
        let label = classify_region_g2(&f).expect("admissible genus-2 censuses are classifiable");
        let by_slope = RegionLabel::by_slope(&inv.slope);
        let by_ratio = RegionLabel::by_ratio(&inv.ratio);
        assert_eq!(by_slope, Some(label));
        assert_eq!(by_ratio, Some(label));
        let matching = RegionLabel::ALL
            .iter()
            .filter(|&&r| RegionLabel::by_slope(&inv.slope) == Some(r))
            .count();
        assert_eq!(matching, 1);
        seen.insert(label);
    }
    assert_eq!(seen.len(), 3);
}

#[test]
fn every_registry_check_holds_on_admissible_low_genus_tuples() {
    let b = SweepBox::new(2, 3, 30, 30, FilterSet::admissible()).unwrap();
    for (f, _) in enumerate_admissible(&b) {
        for result in run_all(&f, HypothesisFlags::default()) {
            assert_ne!(result.verdict, Verdict::Fails, "{f} {:?}", result);
        }
    }
}

#[test]
fn sweeps_are_deterministic_under_any_partition() {
    let b = SweepBox::new(2, 6, 15, 8, FilterSet::admissible()).unwrap();
    let opts = SweepOptions {
        counterexample_cap: 7,
        flags: HypothesisFlags::default(),
    };
    let first = verify_theorems_with(&b, &CheckId::ALL, opts);
    let second = verify_theorems_with(&b, &CheckId::ALL, opts);
    assert_eq!(first, second);

    // cells merged pairwise from the leaves up
    let mut layer: Vec<SweepReport> = b
        .cells()
        .map(|(g, n)| verify_cell(&b, &CheckId::ALL, opts, g, n))
        .collect();
    while layer.len() > 1 {
        let mut next = Vec::new();
        let mut it = layer.into_iter();
        while let Some(mut left) = it.next() {
            if let Some(right) = it.next() {
                left.merge(right);
            }
            next.push(left);
        }
        layer = next;
    }
    assert_eq!(layer.pop().unwrap(), first);
}

#[test]
fn divisibility_filter_keeps_only_divisible_tuples() {
    let b = SweepBox::new(2, 5, 30, 20, FilterSet::all()).unwrap();
    for (f, inv) in enumerate_admissible(&b) {
        let g = f.genus();
        if g % 2 == 1 {
            assert_eq!(f.n() % 4, 0, "{f}");
        } else if g % 4 == 2 {
            assert_eq!(f.n() % 2, 0, "{f}");
        }
        assert!((&inv.sigma + Rational::from(f.n()) + Rational::from(&inv.s)).divisible_by(4));
    }
}

#[test]
fn minimal_vanishing_cycle_count_in_genus_two() {
    let b = SweepBox::new(2, 2, 60, 40, FilterSet::admissible()).unwrap();
    let min = enumerate_admissible(&b)
        .map(|(f, inv)| Rational::from(f.n()) + Rational::from(&inv.s))
        .min();
    assert_eq!(min, Some(Rational::integer(7)));
    let f = FibrationNumerics::new(2, 4, vec![3]).unwrap();
    assert!(enumerate_admissible(&b).any(|(g, _)| g == f));
}
