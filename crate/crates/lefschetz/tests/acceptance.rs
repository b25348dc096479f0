//! Acceptance criteria, one PASS/FAIL line each. Exit status is non-zero if
//! any criterion fails.

use std::collections::BTreeSet;
use std::fs;
use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use lefschetz::verify_theorems_parallel;
use lefschetz_core::constraints::CheckId;
use lefschetz_core::enumeration::diophantine::{
    g2_boundary_ratio_sequence, solve_g2_system, solve_g3_system,
};
use lefschetz_core::enumeration::{enumerate_admissible, FilterSet, SweepBox, SweepOptions};
use lefschetz_core::invariants::{
    compute_invariants, signature, signature_from_slope, slope, slope_alternate_forms,
};
use lefschetz_core::{FibrationNumerics, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const FIXTURE_BUDGET: Duration = Duration::from_millis(1);
const SWEEP_BUDGET: Duration = Duration::from_secs(60);

type Outcome = Result<String, String>;

fn criterion_box(filters: FilterSet) -> SweepBox {
    SweepBox::new(2, 8, 60, 40, filters).unwrap()
}

fn int(v: i64) -> Rational {
    Rational::integer(v)
}

fn frac(p: i128, q: i128) -> Rational {
    format!("{p}/{q}").parse().unwrap()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn minimal_fixture() -> Outcome {
    let f = FibrationNumerics::new(2, 4, vec![3]).unwrap();
    let start = Instant::now();
    let inv = compute_invariants(&f);
    let elapsed = start.elapsed();
    let got = (
        inv.sigma.clone(),
        Rational::from(&inv.euler),
        inv.chi_h.clone(),
        inv.c1sq.clone(),
        inv.slope.clone(),
    );
    let want = (int(-3), int(3), int(0), int(-3), int(5));
    ensure(got == want, || format!("got {got:?}, want {want:?}"))?;
    ensure(elapsed < FIXTURE_BUDGET, || format!("took {elapsed:?}"))?;
    Ok(format!(
        "sigma=-3 chi=3 chi_h=0 c1sq=-3 slope=5 in {elapsed:?}"
    ))
}

fn no_separating_slope_law() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..200 {
        let g: u64 = rng.random_range(2..=12);
        let n: u64 = rng.random_range(1..=10_000);
        let f = FibrationNumerics::without_separating(g, n).unwrap();
        let want = frac(4 * g as i128 - 4, g as i128);
        let got = slope(&f);
        ensure(got == want, || format!("{f}: slope {got}, want {want}"))?;
    }
    Ok("200 random censuses with s = 0 have slope 4 - 4/g".into())
}

fn slope_floor_equivalence() -> Outcome {
    let b = criterion_box(FilterSet::basic());
    let start = Instant::now();
    let report = verify_theorems_parallel(&b, &[CheckId::C02], SweepOptions::default());
    let elapsed = start.elapsed();
    let tally = &report.per_check[&CheckId::C02];
    ensure(tally.evaluated == report.tuples_enumerated, || {
        "C02 skipped some censuses".into()
    })?;
    ensure(tally.failed == 0, || {
        format!(
            "{} counterexamples, first {:?}",
            tally.failed,
            tally.counterexamples.first()
        )
    })?;
    ensure(elapsed <= SWEEP_BUDGET, || format!("took {elapsed:?}"))?;
    Ok(format!(
        "{} censuses, 0 counterexamples, {elapsed:.1?}",
        report.tuples_enumerated
    ))
}

/// Criteria 4 and 5 share one pass over the box.
fn round_trip_and_slope_forms() -> (Outcome, Outcome) {
    let b = criterion_box(FilterSet::basic());
    let mut count = 0u64;
    let mut round_trip_failure = None;
    let mut forms_failure = None;
    for f in b.tuples() {
        count += 1;
        let lambda = slope(&f);
        let total =
            Rational::from(f.n()) + f.sep().iter().map(|&c| Rational::from(c)).sum::<Rational>();
        if round_trip_failure.is_none()
            && signature_from_slope(&lambda, &total) != Ok(signature(&f))
        {
            round_trip_failure = Some(f.clone());
        }
        if forms_failure.is_none() && !slope_alternate_forms(&f).all_equal(&lambda) {
            forms_failure = Some(f.clone());
        }
    }
    let round_trip = match round_trip_failure {
        None => Ok(format!(
            "{count} censuses recover sigma from slope and n + s"
        )),
        Some(f) => Err(format!("round trip fails at {f}")),
    };
    let forms = match forms_failure {
        None => Ok(format!(
            "{count} censuses agree on all four slope expressions"
        )),
        Some(f) => Err(format!("slope forms disagree at {f}")),
    };
    (round_trip, forms)
}

fn conditional_bounds() -> Outcome {
    use CheckId::*;
    let checks = [
        C03, C04, C06, C07, C08, C09, C10, C11, C12, C13, C14, C15, C16, C17, C18, C19, C21, C22,
    ];
    let b = criterion_box(FilterSet::admissible());
    let report = verify_theorems_parallel(&b, &checks, SweepOptions::default());
    for (id, tally) in &report.per_check {
        ensure(tally.failed == 0, || {
            format!(
                "{id}: {} failures, first {:?}",
                tally.failed,
                tally.counterexamples.first()
            )
        })?;
    }
    for g in 2..=8u64 {
        let extrema = report
            .extremal
            .get(&g)
            .ok_or_else(|| format!("no admissible census at genus {g}"))?;
        let max_ratio = &extrema.max_ratio.as_ref().unwrap().value;
        let bound = frac(3 * g as i128 + 2, 4 * (g as i128 - 1));
        ensure(*max_ratio <= bound, || {
            format!("genus {g}: max s/n {max_ratio} exceeds {bound}")
        })?;
    }
    let g2_max = &report.extremal[&2].max_ratio.as_ref().unwrap().value;
    ensure(*g2_max <= int(2), || format!("genus 2 max s/n {g2_max}"))?;
    let large =
        enumerate_admissible(&SweepBox::new(6, 8, 60, 40, FilterSet::admissible()).unwrap())
            .find(|(f, _)| f.sep().iter().sum::<u64>() > f.n());
    ensure(large.is_none(), || format!("s > n at {}", large.unwrap().0))?;
    Ok(format!(
        "{} admissible censuses, 0 failures across {} checks, genus-2 max s/n = {g2_max}",
        report.tuples_admissible,
        checks.len()
    ))
}

fn genus_two_solver() -> Outcome {
    let (_, stream) = solve_g2_system(10, 10).unwrap();
    let solutions: Vec<_> = stream.collect();
    let first = &solutions[0];
    ensure((first.k, first.t, first.n, first.s) == (1, 1, 4, 3), || {
        format!("first solution {first:?}")
    })?;
    for x in &solutions {
        let (n, s) = (x.n as i64, x.s as i64);
        ensure(
            2 * s + n == 10 * x.k as i64 && 2 * n - s == 5 * x.t as i64,
            || format!("congruences fail at {x:?}"),
        )?;
        let expected = 6 - frac(x.t as i128, x.k as i128);
        ensure(
            x.slope == expected && slope(&x.fibration()) == expected,
            || format!("slope mismatch at {x:?}"),
        )?;
    }
    let slice: BTreeSet<(u64, u64)> = solutions
        .iter()
        .filter(|x| x.t == 1)
        .map(|x| (x.n, x.s))
        .collect();
    let brute: BTreeSet<(u64, u64)> =
        enumerate_admissible(&SweepBox::new(2, 2, 22, 40, FilterSet::admissible()).unwrap())
            .map(|(f, _)| (f.n(), f.sep()[0]))
            .filter(|&(n, s)| 2 * n as i64 - s as i64 == 5)
            .collect();
    ensure(slice == brute, || {
        format!("t = 1 slice {slice:?} vs brute force {brute:?}")
    })?;
    let ratios: Vec<_> = g2_boundary_ratio_sequence(5).unwrap().collect();
    let listed: Vec<_> = [(3, 4), (7, 6), (11, 8), (3, 2), (19, 12), (23, 14)]
        .iter()
        .map(|&(p, q)| frac(p, q))
        .collect();
    ensure(ratios == listed, || format!("ratio sequence {ratios:?}"))?;
    Ok(format!(
        "{} solutions, t = 1 slice equals {} brute-force censuses",
        solutions.len(),
        brute.len()
    ))
}

fn genus_three_solver() -> Outcome {
    let (_, stream) = solve_g3_system(10).unwrap();
    let mut count = 0;
    for x in stream {
        count += 1;
        let (n, s, k, m) = (x.n as i128, x.s as i128, x.k as i128, x.m as i128);
        ensure(3 * n + 8 * s == 28 * k, || {
            format!("3n + 8s != 28k at {x:?}")
        })?;
        ensure(11 * n - 8 * s == 28, || format!("11n - 8s != 28 at {x:?}"))?;
        ensure((11 * k - 3) % 4 == 0, || format!("s not integral at {x:?}"))?;
        ensure(
            frac(s, n) == frac(11 * m + 2, 8 * m + 4) && x.ratio == frac(s, n),
            || format!("ratio at {x:?}"),
        )?;
    }
    Ok(format!("{count} solutions satisfy both equations"))
}

fn divisibility() -> Outcome {
    let b = criterion_box(FilterSet::admissible());
    let mut count = 0u64;
    for (f, _) in enumerate_admissible(&b) {
        count += 1;
        let g = f.genus() as i128;
        let n = f.n() as i128;
        let x: i128 = f
            .sep()
            .iter()
            .enumerate()
            .map(|(i, &c)| (i as i128 + 1) * (g - i as i128 - 1) * c as i128)
            .sum();
        if g % 2 == 1 {
            ensure(n % 4 == 0, || format!("4 does not divide n at {f}"))?;
        }
        if g % 4 == 2 {
            ensure(n % 2 == 0, || format!("2 does not divide n at {f}"))?;
        }
        if g % 4 != 0 {
            let (num, den) = ((3 * g + 2) * n - 4 * x, 4 * (2 * g + 1));
            ensure(num > 0 && num % den == 0, || {
                format!("t = {num}/{den} at {f}")
            })?;
        }
    }
    Ok(format!(
        "{count} admissible censuses obey the divisibility laws"
    ))
}

fn golden(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join("golden")
        .join(name);
    fs::read_to_string(&path).unwrap_or_else(|e| panic!("read {}: {e}", path.display()))
}

fn cli_goldens() -> Outcome {
    let cases: [(&[&str], &str, i32); 3] = [
        (
            &["invariants", "--g", "2", "--n", "4", "--sep", "1:3"],
            "invariants_g2_n4_s3.json",
            0,
        ),
        (
            &["solve", "--genus", "2", "--k-max", "1", "--t-max", "1"],
            "solve_g2_k1_t1.csv",
            0,
        ),
        (
            &[
                "check", "--g", "2", "--n", "1", "--sep", "1:0", "--checks", "C09",
            ],
            "check_g2_n1_c09.json",
            3,
        ),
    ];
    for (args, file, code) in cases {
        let out = Command::new(env!("CARGO_BIN_EXE_lefschetz"))
            .args(args)
            .output()
            .map_err(|e| e.to_string())?;
        ensure(out.status.code() == Some(code), || {
            format!("{args:?} exited {:?}", out.status.code())
        })?;
        ensure(out.stdout == golden(file).into_bytes(), || {
            format!("{args:?} differs from {file}")
        })?;
    }
    let out = Command::new(env!("CARGO_BIN_EXE_lefschetz"))
        .args([
            "geography",
            "--g-min",
            "2",
            "--g-max",
            "2",
            "--n-max",
            "20",
            "--s-max",
            "40",
            "--format",
            "csv",
        ])
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.success(), || "geography failed".into())?;
    let mut reader = csv::Reader::from_reader(out.stdout.as_slice());
    let mut rows = 0;
    for record in reader.records() {
        let record = record.map_err(|e| e.to_string())?;
        let value = |i: usize| record[i].parse::<Rational>().unwrap();
        let (s, chi_h, c1sq) = (value(2), value(4), value(5));
        ensure(c1sq == &chi_h * 2 + &s - 6, || {
            format!("Noether identity fails on row {record:?}")
        })?;
        rows += 1;
    }
    ensure(rows > 0, || "geography produced no rows".into())?;
    Ok(format!("3 goldens byte-identical with expected exit codes, {rows} geography rows on c1sq = 2 chi_h + s - 6"))
}

fn main() {
    let mut results: Vec<(u32, &str, Outcome)> = vec![
        (1, "minimal genus-2 fixture", minimal_fixture()),
        (
            2,
            "slope 4 - 4/g without separating cycles",
            no_separating_slope_law(),
        ),
        (
            3,
            "slope floor equivalence and factored excess",
            slope_floor_equivalence(),
        ),
    ];
    let (round_trip, forms) = round_trip_and_slope_forms();
    results.push((4, "signature recovered from slope", round_trip));
    results.push((5, "slope formula equivalence", forms));
    results.push((
        6,
        "conditional bounds on admissible censuses",
        conditional_bounds(),
    ));
    results.push((7, "genus-2 Diophantine solver", genus_two_solver()));
    results.push((8, "genus-3 Diophantine solver", genus_three_solver()));
    results.push((9, "divisibility laws", divisibility()));
    results.push((10, "CLI goldens and Noether identity", cli_goldens()));

    let mut failed = 0;
    for (id, title, outcome) in &results {
        match outcome {
            Ok(detail) => println!("PASS criterion {id:>2}: {title}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {id:>2}: {title}: {detail}");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        results.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
