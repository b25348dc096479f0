use alloc::vec::Vec;

use num_traits::ToPrimitive;

use super::{min_nonseparating, CheckId, HypothesisFlags, Part, Relation, Witness, WitnessValue};
use crate::fibration::FibrationNumerics;
use crate::invariants::{Census, InvariantSet};
use crate::rational::Rational;

pub(super) struct Outcome {
    pub relation: Relation,
    pub lhs: Rational,
    pub rhs: Rational,
    pub holds: bool,
    pub witness: Witness,
}

type Eval = Result<Outcome, &'static str>;

impl Outcome {
    fn new(relation: Relation, lhs: Rational, rhs: Rational) -> Self {
        let holds = match relation {
            Relation::Le => lhs <= rhs,
            Relation::Lt => lhs < rhs,
            Relation::Eq => lhs == rhs,
            Relation::Divides => match lhs.to_integer().and_then(|d| d.to_i64()) {
                Some(divisor) => rhs.divisible_by(divisor),
                None => false,
            },
            Relation::Iff | Relation::None => true,
        };
        Outcome {
            relation,
            lhs,
            rhs,
            holds,
            witness: Vec::new(),
        }
    }

    fn le(lhs: Rational, rhs: Rational) -> Self {
        Self::new(Relation::Le, lhs, rhs)
    }

    fn lt(lhs: Rational, rhs: Rational) -> Self {
        Self::new(Relation::Lt, lhs, rhs)
    }

    fn with(mut self, key: &'static str, value: impl Into<WitnessValue>) -> Self {
        self.witness.push((key, value.into()));
        self
    }

    /// Records a further condition; the verdict requires all of them.
    fn and(mut self, key: &'static str, ok: bool) -> Self {
        self.holds &= ok;
        self.witness.push((key, WitnessValue::Flag(ok)));
        self
    }
}

struct Ctx<'a> {
    f: &'a FibrationNumerics,
    inv: &'a InvariantSet,
    c: Census,
    euler: Rational,
}

impl Ctx<'_> {
    fn genus(&self) -> u64 {
        self.f.genus()
    }
}

pub(super) fn evaluate(
    id: CheckId,
    f: &FibrationNumerics,
    inv: &InvariantSet,
    flags: HypothesisFlags,
    part: Part,
) -> Eval {
    let ctx = Ctx {
        f,
        inv,
        c: Census::from_invariants(f, inv),
        euler: Rational::from(&inv.euler),
    };
    match id {
        CheckId::C01 => weighted_sum_bound(&ctx),
        CheckId::C02 => slope_floor_equivalence(&ctx),
        CheckId::C03 => ratio_at_most_five(&ctx),
        CheckId::C04 => rho_upper(&ctx),
        CheckId::C05 => signature_bound(&ctx),
        CheckId::C06 => g2_noether(&ctx),
        CheckId::C07 => chi_h_lower(&ctx),
        CheckId::C08 => low_genus_slope_upper(&ctx),
        CheckId::C09 => admissibility_system(&ctx),
        CheckId::C10 => g2_sharpness(&ctx),
        CheckId::C11 => chain(&ctx),
        CheckId::C12 => general_slope_upper(&ctx),
        CheckId::C13 => n_lower_from_chi_h(&ctx, flags),
        CheckId::C14 => double_slope_estimate(&ctx, part),
        CheckId::C15 => n_divisibility(&ctx),
        CheckId::C16 => quarter_integer(&ctx),
        CheckId::C17 => low_genus_signature_bounds(&ctx),
        CheckId::C18 => ratio_vs_chi_h(&ctx),
        CheckId::C19 => negative_signature(&ctx),
        CheckId::C20 => average_signature(&ctx),
        CheckId::C21 => rho_general(&ctx),
        CheckId::C22 => s_le_n(&ctx),
    }
}

fn weighted_sum_bound(ctx: &Ctx) -> Eval {
    let Census { g, x, s, .. } = &ctx.c;
    let s_g_minus_one = s * (g - 1);
    let refined = &s_g_minus_one <= x;
    Ok(Outcome::le(s * g, x * 2)
        .with("x", x.clone())
        .with("s", s.clone())
        .with("s_times_g_minus_1", s_g_minus_one)
        .and("refinement_s_g_minus_1_le_x", refined))
}

fn slope_floor_equivalence(ctx: &Ctx) -> Eval {
    let Census { g, n, x, s } = &ctx.c;
    let slope = &ctx.inv.slope;
    let floor = 4 - Rational::integer(4) / g;
    let excess = slope - &floor;
    let factored = (g * 2 + 1) * (x * 4 - s * g) * 4 / ((n * g + x * 4) * g);
    let exceeds = slope > &floor;
    let has_separating = !s.is_zero();
    let mut out = Outcome::new(Relation::Iff, slope.clone(), floor)
        .with("slope_exceeds_floor", exceeds)
        .with("has_separating", has_separating)
        .with("excess", excess.clone())
        .with("factored_excess", factored.clone());
    out = out.and("equivalence", exceeds == has_separating);
    Ok(out.and("factored_identity", excess == factored))
}

fn ratio_at_most_five(ctx: &Ctx) -> Eval {
    Ok(Outcome::le(ctx.inv.ratio.clone(), Rational::integer(5)))
}

fn rho_upper(ctx: &Ctx) -> Eval {
    let Census { g, n, x, s } = &ctx.c;
    let g_minus_one = g - 1;
    let two_g_plus_one = g * 2 + 1;
    let rho_bound = (g * 3 + 2) / (&g_minus_one * 4);
    let sharp = &rho_bound - &two_g_plus_one / (n * &g_minus_one);
    let t = ((g * 3 + 2) * n - x * 4) / (&two_g_plus_one * 4);
    let x_bound = (g * 3 + 2) * n / 4 - &two_g_plus_one;
    let ratio = ctx.inv.ratio.clone();
    let within_rho = ratio <= rho_bound;
    Ok(Outcome::le(ratio, sharp)
        .with("rho_bound", rho_bound)
        .with("x", x.clone())
        .with("s_times_g_minus_1", s * &g_minus_one)
        .with("x_bound", x_bound)
        .with("t", t)
        .and("ratio_le_rho_bound", within_rho))
}

fn signature_bound(ctx: &Ctx) -> Eval {
    let Census { n, s, .. } = &ctx.c;
    Ok(Outcome::le(ctx.inv.sigma.clone(), n - s - 4))
}

fn g2_noether(ctx: &Ctx) -> Eval {
    let inv = ctx.inv;
    let noether = &inv.chi_h * 2 - 6 + &ctx.c.s;
    let on_identity = inv.c1sq == noether;
    Ok(Outcome::le(inv.c1sq.clone(), &inv.chi_h * 6 - 3)
        .with("noether_value", noether)
        .and("c1sq_eq_2chi_h_minus_6_plus_s", on_identity))
}

fn chi_h_lower(ctx: &Ctx) -> Eval {
    let floor = if ctx.genus() == 2 { 0 } else { -1 };
    Ok(Outcome::le(Rational::integer(floor), ctx.inv.chi_h.clone()))
}

fn low_genus_slope_upper(ctx: &Ctx) -> Eval {
    let chi_h = &ctx.inv.chi_h;
    // chi_h + 1 (genus 2) and chi_h + 2 (genus 3) are chi_f > 0
    let bound = if ctx.genus() == 2 {
        6 - Rational::one() / (chi_h + 1)
    } else {
        Rational::ratio(29, 4) - Rational::ratio(5, 4) / (chi_h + 2)
    };
    Ok(Outcome::le(ctx.inv.slope.clone(), bound))
}

fn admissibility_system(ctx: &Ctx) -> Eval {
    let Census { n, s, .. } = &ctx.c;
    let chi_h = &ctx.inv.chi_h;
    let (sum, modulus, difference, floor, shift) = if ctx.genus() == 2 {
        (s * 2 + n, 10, n * 2 - s, 5, 1)
    } else {
        (n * 3 + s * 8, 28, n * 11 - s * 8, 28, 2)
    };
    let k = &sum / modulus;
    let k_matches_chi_h = k == chi_h + shift;
    let k_ok = k.is_positive_integer();
    Ok(Outcome::le(Rational::integer(floor), difference)
        .with("sum", sum)
        .with("k", k)
        .and("k_positive_integer", k_ok)
        .and("k_eq_chi_h_shift", k_matches_chi_h))
}

fn g2_sharpness(ctx: &Ctx) -> Eval {
    let Census { n, s, .. } = &ctx.c;
    let bound = 6 - Rational::one() / (&ctx.inv.chi_h + 1);
    let boundary = n * 2 - s == 5;
    let attains = ctx.inv.slope == bound;
    Ok(Outcome::new(Relation::Iff, ctx.inv.slope.clone(), bound)
        .with("two_n_minus_s", n * 2 - s)
        .with("two_n_minus_s_eq_5", boundary)
        .with("slope_attains_bound", attains)
        .and("equivalence", boundary == attains))
}

fn chain(ctx: &Ctx) -> Eval {
    let Census { n, s, .. } = &ctx.c;
    let terms: [Rational; 6] = if ctx.genus() == 2 {
        if *n < 4 {
            return Err("genus-2 chain requires n >= 4");
        }
        [
            ctx.inv.slope.clone(),
            (s * 3 + 1) * 2 / (s + 1),
            (s * 6 + n * 3 - 5) * 2 / (s * 2 + n),
            (n * 3 - 7) * 2 / (n - 2),
            (s + n - 2) * 10 / (s * 2 + n),
            (n * 5 - s - 12) * 2 / (n - 2),
        ]
    } else {
        if *n < 8 {
            return Err("genus-3 chain requires n >= 8");
        }
        [
            ctx.inv.slope.clone(),
            (s * 29 + 8) / (s * 4 + 3),
            (n * 87 + s * 232 - 140) / ((n * 3 + s * 8) * 4),
            (n * 29 - 68) / ((n - 2) * 4),
            (n * 15 + s * 26 - 28) * 2 / (n * 3 + s * 8),
            (n * 5 - s - 12) * 2 / (n - 2),
        ]
    };
    const LINKS: [&str; 5] = ["link_1", "link_2", "link_3", "link_4", "link_5"];
    const TERMS: [&str; 6] = ["term_1", "term_2", "term_3", "term_4", "term_5", "term_6"];
    let mut out = Outcome::le(terms[0].clone(), terms[5].clone());
    for (key, term) in TERMS.iter().zip(terms.iter()) {
        out = out.with(key, term.clone());
    }
    for (i, key) in LINKS.iter().enumerate() {
        out = out.and(key, terms[i] <= terms[i + 1]);
    }
    Ok(out)
}

fn general_slope_upper(ctx: &Ctx) -> Eval {
    let slope = &ctx.inv.slope;
    let bound = 10 - (&ctx.c.s + 2) / &ctx.inv.chi_f;
    let le_ten = slope <= &Rational::integer(10);
    Ok(Outcome::le(slope.clone(), bound).and("slope_le_10", le_ten))
}

fn n_lower_from_chi_h(ctx: &Ctx, flags: HypothesisFlags) -> Eval {
    let Census { g, n, .. } = &ctx.c;
    let mut out = Outcome::le(&ctx.inv.chi_h * 2 + g * 2, n.clone());
    if flags.simply_connected {
        if let Some(b2plus) = flags.b2plus {
            match min_nonseparating(ctx.genus(), b2plus, true) {
                Ok(min) => {
                    out = out
                        .with("min_nonseparating", Rational::from(min))
                        .and("n_ge_min_nonseparating", ctx.f.n() >= min);
                }
                Err(_) => {
                    out = out.with(
                        "min_nonseparating",
                        WitnessValue::Note("b2+ hypothesis invalid"),
                    )
                }
            }
        }
    }
    Ok(out)
}

fn double_slope_estimate(ctx: &Ctx, part: Part) -> Eval {
    let Census { g, n, s, .. } = &ctx.c;
    let slope = &ctx.inv.slope;
    let lower = (g - 1) * 4 / g + s * 4 / g * (g * 2 + 1) * (g * 3 - 4) / (n * g + s * (g - 1) * 4);
    let mut out = Outcome::le(lower, slope.clone());
    if part == Part::All && *n > 2 {
        let upper = 10 - (s + 2) * 2 / (n - 2);
        let ok = slope <= &upper;
        out = out
            .with("upper_bound", upper)
            .with("upper_evaluated", true)
            .and("upper_holds", ok);
    } else {
        out = out.with("upper_evaluated", false);
    }
    Ok(out)
}

fn n_divisibility(ctx: &Ctx) -> Eval {
    if !ctx.inv.chi_h.is_integer() {
        return Err("requires integral chi_h");
    }
    let genus = ctx.genus();
    let divisor = match genus % 4 {
        1 | 3 => 4,
        2 => 2,
        _ => 1,
    };
    let gn = &ctx.c.g * &ctx.c.n;
    let gn_ok = gn.divisible_by(4);
    Ok(Outcome::new(
        Relation::Divides,
        Rational::integer(divisor),
        ctx.c.n.clone(),
    )
    .with("g_times_n", gn)
    .and("four_divides_gn", gn_ok))
}

fn quarter_integer(ctx: &Ctx) -> Eval {
    if !ctx.inv.chi_h.is_integer() {
        return Err("requires integral chi_h");
    }
    let Census { g, n, x, s } = &ctx.c;
    let sigma = &ctx.inv.sigma;
    let total = sigma + n + s;
    let matches_chi_f = total == &ctx.inv.chi_f * 4;
    let mut out = Outcome::new(Relation::Divides, Rational::integer(4), total)
        .and("eq_4_chi_f", matches_chi_f);
    if ctx.genus() % 4 != 0 {
        let t = (n - s - sigma) / 4;
        let closed = ((g * 3 + 2) * n - x * 4) / ((g * 2 + 1) * 4);
        let agree = t == closed;
        let positive = t.is_positive_integer();
        out = out
            .with("t", t.clone())
            .and("t_closed_form", agree)
            .and("t_positive_integer", positive);
        match ctx.genus() {
            2 => {
                let n_plus_sigma = n + sigma;
                let five = n * 2 - s == &n_plus_sigma * 5;
                out = out
                    .and("two_n_minus_s_eq_5_n_plus_sigma", five)
                    .and("t_eq_n_plus_sigma", t == n_plus_sigma);
            }
            3 => {
                let ok = n * 11 - s * 8 == &t * 28;
                out = out.and("eleven_n_minus_8s_eq_28t", ok);
            }
            _ => {}
        }
    }
    Ok(out)
}

fn low_genus_signature_bounds(ctx: &Ctx) -> Eval {
    let inv = ctx.inv;
    let (first, second) = if ctx.genus() == 2 {
        (-(&inv.chi_h * 2) - 3, -(&ctx.euler / 3) - 2)
    } else {
        (
            -(&inv.chi_h * Rational::ratio(3, 4)) - Rational::ratio(11, 4),
            -(&ctx.euler * Rational::ratio(3, 19)) - Rational::ratio(44, 19),
        )
    };
    let second_ok = inv.sigma <= second;
    Ok(Outcome::le(inv.sigma.clone(), first)
        .with("second_bound", second)
        .and("second_holds", second_ok))
}

fn ratio_vs_chi_h(ctx: &Ctx) -> Eval {
    let chi_h = &ctx.inv.chi_h;
    let bound = if ctx.genus() == 2 {
        (chi_h * 4 + 3) / (chi_h * 2 + 4)
    } else {
        (chi_h * 11 + 19) / ((chi_h + 3) * 8)
    };
    Ok(Outcome::le(ctx.inv.ratio.clone(), bound))
}

fn negative_signature(ctx: &Ctx) -> Eval {
    let below_eight = ctx.inv.slope < Rational::integer(8);
    Ok(Outcome::lt(ctx.inv.sigma.clone(), Rational::zero())
        .with("slope", ctx.inv.slope.clone())
        .and("slope_lt_8", below_eight))
}

fn average_signature(ctx: &Ctx) -> Eval {
    let Census { g, n, s, .. } = &ctx.c;
    let floor = -((g + 1) / (g * 2 + 1));
    let average = &ctx.inv.sigma / (n + s);
    Ok(if s.is_zero() {
        Outcome::le(floor, average)
    } else {
        Outcome::lt(floor, average)
    })
}

fn rho_general(ctx: &Ctx) -> Eval {
    let bound = 3 + Rational::integer(2) / &ctx.c.g;
    Ok(Outcome::lt(ctx.inv.ratio.clone(), bound))
}

fn s_le_n(ctx: &Ctx) -> Eval {
    Ok(Outcome::le(ctx.c.s.clone(), ctx.c.n.clone()))
}
