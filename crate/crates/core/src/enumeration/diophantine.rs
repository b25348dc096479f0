//! Closed-form parametric solutions of the low-genus admissibility systems.
//!
//! Genus 2: `2s + n = 10k` and `2n - s = 5t`, solved by `n = 2t + 2k`,
//! `s = 4k - t`. Genus 3 on the boundary `11n - 8s = 28`: `k = 4m + 1`,
//! `n = 2k + 2`, `s = (11k - 3)/4`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::fibration::FibrationNumerics;
use crate::invariants::slope;
use crate::rational::Rational;

/// Largest accepted parameter bound; keeps every emitted census in `u64`.
pub const MAX_PARAMETER: u64 = 1 << 40;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Parameter {
    pub name: &'static str,
    pub min: u64,
    pub max: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiophantineFamily {
    pub genus: u64,
    pub params: Vec<Parameter>,
    pub n_formula: &'static str,
    pub s_formula: &'static str,
    pub description: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct G2Solution {
    pub k: u64,
    pub t: u64,
    pub n: u64,
    pub s: u64,
    /// `6 - t/k`
    pub slope: Rational,
}

impl G2Solution {
    pub fn fibration(&self) -> FibrationNumerics {
        FibrationNumerics::new(2, self.n, vec![self.s]).expect("family members are valid censuses")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct G3Solution {
    pub m: u64,
    pub k: u64,
    pub n: u64,
    pub s: u64,
    /// `(11m + 2)/(8m + 4)`
    pub ratio: Rational,
    pub slope: Rational,
}

impl G3Solution {
    pub fn fibration(&self) -> FibrationNumerics {
        FibrationNumerics::new(3, self.n, vec![self.s]).expect("family members are valid censuses")
    }
}

fn check_bound(value: u64, min: u64, what: &'static str) -> Result<(), Error> {
    if value < min || value > MAX_PARAMETER {
        return Err(Error::InvalidParameter(what));
    }
    Ok(())
}

/// Genus-2 family for `1 <= k <= k_max`, `1 <= t <= t_max`, keeping `s >= 0`.
/// Solutions stream with `k` outer and `t` inner.
pub fn solve_g2_system(
    k_max: u64,
    t_max: u64,
) -> Result<(DiophantineFamily, impl Iterator<Item = G2Solution>), Error> {
    check_bound(k_max, 1, "k_max must lie in 1..=2^40")?;
    check_bound(t_max, 1, "t_max must lie in 1..=2^40")?;
    let family = DiophantineFamily {
        genus: 2,
        params: vec![
            Parameter {
                name: "k",
                min: 1,
                max: k_max,
            },
            Parameter {
                name: "t",
                min: 1,
                max: t_max,
            },
        ],
        n_formula: "2t + 2k",
        s_formula: "4k - t",
        description: "solutions of 2s + n = 10k, 2n - s = 5t with s >= 0; slope 6 - t/k",
    };
    let stream = (1..=k_max).flat_map(move |k| {
        (1..=t_max.min(4 * k)).map(move |t| {
            let n = 2 * t + 2 * k;
            let s = 4 * k - t;
            G2Solution {
                k,
                t,
                n,
                s,
                slope: 6 - Rational::from(t) / Rational::from(k),
            }
        })
    });
    Ok((family, stream))
}

/// `(4m + 3)/(2m + 4)` for `m = 0..=m_max`: ratios `s/n` on the genus-2
/// boundary `2n - s = 5`.
pub fn g2_boundary_ratio_sequence(m_max: u64) -> Result<impl Iterator<Item = Rational>, Error> {
    check_bound(m_max, 0, "m_max must lie in 0..=2^40")?;
    Ok((0..=m_max).map(|m| Rational::from(4 * m + 3) / Rational::from(2 * m + 4)))
}

/// Genus-3 family on `11n - 8s = 28` for `m = 0..=m_max`.
pub fn solve_g3_system(
    m_max: u64,
) -> Result<(DiophantineFamily, impl Iterator<Item = G3Solution>), Error> {
    check_bound(m_max, 0, "m_max must lie in 0..=2^40")?;
    let family = DiophantineFamily {
        genus: 3,
        params: vec![Parameter {
            name: "m",
            min: 0,
            max: m_max,
        }],
        n_formula: "2k + 2, k = 4m + 1",
        s_formula: "(11k - 3)/4, k = 4m + 1",
        description: "solutions of 3n + 8s = 28k on the boundary 11n - 8s = 28",
    };
    let stream = (0..=m_max).map(|m| {
        let k = 4 * m + 1;
        let n = 2 * k + 2;
        let s = (11 * k - 3) / 4;
        let ratio = Rational::from(s) / Rational::from(n);
        let f = FibrationNumerics::new(3, n, vec![s]).expect("family members are valid censuses");
        G3Solution {
            m,
            k,
            n,
            s,
            ratio,
            slope: slope(&f),
        }
    });
    Ok((family, stream))
}
