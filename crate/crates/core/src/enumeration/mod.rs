//! Exhaustive enumeration of censuses in bounded boxes, admissibility
//! filtering, theorem sweeps, closed-form Diophantine families and the
//! genus-2 region taxonomy.
//!
//! Enumeration order is lexicographic in `(g, n, sep)` and is part of the
//! output contract: reports and datasets produced from the same box are
//! identical run to run.

pub mod diophantine;
pub mod region;
mod sweep;

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::constraints::{evaluate, Admissibility, CheckId, HypothesisFlags};
use crate::error::Error;
use crate::fibration::{separating_types, FibrationNumerics};
use crate::invariants::{compute_invariants, InvariantSet};

pub use sweep::{
    verify_cell, verify_theorems, verify_theorems_with, CheckTally, Counterexample, Extrema,
    Extremum, IdentityFailure, IdentityTally, SweepOptions, SweepReport,
    DEFAULT_COUNTEREXAMPLE_CAP,
};

/// Admissibility filters, applied in this order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Filter {
    /// `n >= 1`, `s_h >= 0`; always applied.
    Basic,
    IntegralChiH,
    /// `sigma <= n - s - 4`
    SignatureBoundC05,
    /// C15 and C16 hold.
    DivisibilityC15C16,
}

impl Filter {
    pub const ALL: [Filter; 4] = [
        Filter::Basic,
        Filter::IntegralChiH,
        Filter::SignatureBoundC05,
        Filter::DivisibilityC15C16,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Filter::Basic => "basic",
            Filter::IntegralChiH => "integral_chi_h",
            Filter::SignatureBoundC05 => "signature_bound_c05",
            Filter::DivisibilityC15C16 => "divisibility_c15_c16",
        }
    }
}

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Filter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Filter::ALL
            .into_iter()
            .find(|f| f.as_str() == s.trim())
            .ok_or(Error::InvalidParameter("unknown filter; expected basic, integral_chi_h, signature_bound_c05 or divisibility_c15_c16"))
    }
}

/// Set of active filters. `Basic` is always on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FilterSet {
    pub integral_chi_h: bool,
    pub signature_bound: bool,
    pub divisibility: bool,
}

impl FilterSet {
    pub const fn basic() -> Self {
        FilterSet {
            integral_chi_h: false,
            signature_bound: false,
            divisibility: false,
        }
    }

    /// Integral `chi_h` and the signature bound: the necessary conditions the
    /// conditional checks rely on.
    pub const fn admissible() -> Self {
        FilterSet {
            integral_chi_h: true,
            signature_bound: true,
            divisibility: false,
        }
    }

    pub const fn all() -> Self {
        FilterSet {
            integral_chi_h: true,
            signature_bound: true,
            divisibility: true,
        }
    }

    pub fn from_filters<I: IntoIterator<Item = Filter>>(filters: I) -> Self {
        let mut set = FilterSet::basic();
        for f in filters {
            match f {
                Filter::Basic => {}
                Filter::IntegralChiH => set.integral_chi_h = true,
                Filter::SignatureBoundC05 => set.signature_bound = true,
                Filter::DivisibilityC15C16 => set.divisibility = true,
            }
        }
        set
    }

    /// Active filters in their fixed order.
    pub fn filters(&self) -> Vec<Filter> {
        let mut out = vec![Filter::Basic];
        if self.integral_chi_h {
            out.push(Filter::IntegralChiH);
        }
        if self.signature_bound {
            out.push(Filter::SignatureBoundC05);
        }
        if self.divisibility {
            out.push(Filter::DivisibilityC15C16);
        }
        out
    }

    pub fn passes(&self, f: &FibrationNumerics, inv: &InvariantSet) -> bool {
        let adm = Admissibility::of(f, inv);
        if self.integral_chi_h && !adm.integral_chi_h {
            return false;
        }
        if self.signature_bound && !adm.signature_bound {
            return false;
        }
        if self.divisibility {
            let flags = HypothesisFlags::default();
            return [CheckId::C15, CheckId::C16]
                .iter()
                .all(|&id| evaluate(id, f, inv, flags).holds());
        }
        true
    }
}

impl Default for FilterSet {
    fn default() -> Self {
        FilterSet::admissible()
    }
}

/// A bounded box of censuses: `g` in `g_min..=g_max`, `1 <= n <= n_max`, and
/// all separating type splits with `sum s_h <= s_total_max`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SweepBox {
    pub g_min: u64,
    pub g_max: u64,
    pub n_max: u64,
    pub s_total_max: u64,
    pub filters: FilterSet,
}

impl SweepBox {
    pub fn new(
        g_min: u64,
        g_max: u64,
        n_max: u64,
        s_total_max: u64,
        filters: FilterSet,
    ) -> Result<Self, Error> {
        if g_min < 2 {
            return Err(Error::InvalidGenus(g_min));
        }
        if g_max < g_min {
            return Err(Error::InvalidParameter("g_max must be at least g_min"));
        }
        if n_max < 1 {
            return Err(Error::InvalidParameter("n_max must be at least 1"));
        }
        Ok(SweepBox {
            g_min,
            g_max,
            n_max,
            s_total_max,
            filters,
        })
    }

    /// `(g, n)` cells in lexicographic order; the unit of sweep partitioning.
    pub fn cells(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        (self.g_min..=self.g_max).flat_map(move |g| (1..=self.n_max).map(move |n| (g, n)))
    }

    pub fn cell_tuples(&self, genus: u64, n: u64) -> impl Iterator<Item = FibrationNumerics> {
        Compositions::new(separating_types(genus), self.s_total_max).map(move |sep| {
            FibrationNumerics::new(genus, n, sep).expect("box cells hold valid censuses")
        })
    }

    /// Every basic census in the box, in lexicographic order.
    pub fn tuples(&self) -> impl Iterator<Item = FibrationNumerics> + '_ {
        self.cells().flat_map(move |(g, n)| self.cell_tuples(g, n))
    }
}

/// All vectors of `slots` non-negative integers with sum at most
/// `max_total`, in lexicographic order.
#[derive(Debug, Clone)]
pub struct Compositions {
    current: Option<Vec<u64>>,
    max_total: u64,
}

impl Compositions {
    pub fn new(slots: usize, max_total: u64) -> Self {
        Compositions {
            current: Some(vec![0; slots]),
            max_total,
        }
    }

    fn advance(v: &mut [u64], max_total: u64) -> bool {
        let mut prefix: u64 = 0;
        let mut candidate = None;
        for (i, &c) in v.iter().enumerate() {
            prefix += c;
            if prefix < max_total {
                candidate = Some(i);
            }
        }
        match candidate {
            Some(i) => {
                v[i] += 1;
                v[i + 1..].iter_mut().for_each(|c| *c = 0);
                true
            }
            None => false,
        }
    }
}

impl Iterator for Compositions {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        let current = self.current.take()?;
        let mut next = current.clone();
        if Self::advance(&mut next, self.max_total) {
            self.current = Some(next);
        }
        Some(current)
    }
}

/// Every census in the box passing its filters, with invariants, in
/// lexicographic order.
pub fn enumerate_admissible(
    bounds: &SweepBox,
) -> impl Iterator<Item = (FibrationNumerics, InvariantSet)> + '_ {
    bounds.tuples().filter_map(move |f| {
        let inv = compute_invariants(&f);
        bounds.filters.passes(&f, &inv).then_some((f, inv))
    })
}
