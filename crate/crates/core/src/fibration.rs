use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;

/// Vanishing-cycle census of a candidate genus-`g` Lefschetz fibration.
///
/// `sep[h - 1]` is `s_h`, the number of separating vanishing cycles that cut
/// the fiber into pieces of genus `h` and `g - h`. The derived ordering is
/// lexicographic on `(g, n, sep)`, which is the enumeration order used by
/// sweeps.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FibrationNumerics {
    genus: u64,
    n: u64,
    sep: Vec<u64>,
}

/// Number of separating types, `floor(g/2)`.
pub fn separating_types(genus: u64) -> usize {
    (genus / 2) as usize
}

impl FibrationNumerics {
    pub fn new(genus: u64, n: u64, sep: Vec<u64>) -> Result<Self, Error> {
        if genus < 2 {
            return Err(Error::InvalidGenus(genus));
        }
        if n == 0 {
            return Err(Error::NoNonSeparating);
        }
        let expected = separating_types(genus);
        if sep.len() != expected {
            return Err(Error::SeparatingLength {
                expected,
                got: sep.len(),
            });
        }
        Ok(FibrationNumerics { genus, n, sep })
    }

    /// Builds a census from sparse `(h, s_h)` pairs; types not listed are 0.
    pub fn from_sparse(genus: u64, n: u64, pairs: &[(u64, u64)]) -> Result<Self, Error> {
        if genus < 2 {
            return Err(Error::InvalidGenus(genus));
        }
        let max = genus / 2;
        let mut sep = vec![0u64; max as usize];
        let mut seen = vec![false; max as usize];
        for &(h, count) in pairs {
            if h == 0 || h > max {
                return Err(Error::SeparatingType { h, max });
            }
            let slot = (h - 1) as usize;
            if seen[slot] {
                return Err(Error::DuplicateSeparatingType(h));
            }
            seen[slot] = true;
            sep[slot] = count;
        }
        Self::new(genus, n, sep)
    }

    /// Census with no separating vanishing cycles.
    pub fn without_separating(genus: u64, n: u64) -> Result<Self, Error> {
        Self::new(genus, n, vec![0; separating_types(genus)])
    }

    pub fn genus(&self) -> u64 {
        self.genus
    }

    /// Number of non-separating vanishing cycles.
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn sep(&self) -> &[u64] {
        &self.sep
    }

    /// `s_h` for `h` in `1..=g/2`, 0 otherwise.
    pub fn separating_of_type(&self, h: u64) -> u64 {
        match h.checked_sub(1) {
            Some(i) => self.sep.get(i as usize).copied().unwrap_or(0),
            None => 0,
        }
    }

    pub fn has_separating(&self) -> bool {
        self.sep.iter().any(|&c| c != 0)
    }
}

impl fmt::Display for FibrationNumerics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(g={}, n={}, sep=[", self.genus, self.n)?;
        for (i, c) in self.sep.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("])")
    }
}
