//! The three genus-2 geography regions, by slope and equivalently by `s/n`.

use alloc::string::ToString;
use core::fmt;

use crate::error::Error;
use crate::fibration::FibrationNumerics;
use crate::invariants::compute_invariants;
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RegionLabel {
    /// `2 <= slope <= 4`
    I,
    /// `4 < slope < 5`
    II,
    /// `5 <= slope < 6`
    III,
}

impl RegionLabel {
    pub const ALL: [RegionLabel; 3] = [RegionLabel::I, RegionLabel::II, RegionLabel::III];

    pub fn as_str(self) -> &'static str {
        match self {
            RegionLabel::I => "I",
            RegionLabel::II => "II",
            RegionLabel::III => "III",
        }
    }

    pub fn slope_interval(self) -> &'static str {
        match self {
            RegionLabel::I => "[2, 4]",
            RegionLabel::II => "(4, 5)",
            RegionLabel::III => "[5, 6)",
        }
    }

    pub fn ratio_interval(self) -> &'static str {
        match self {
            RegionLabel::I => "[0, 1/3]",
            RegionLabel::II => "(1/3, 3/4)",
            RegionLabel::III => "[3/4, 2)",
        }
    }

    /// Region whose slope interval contains `slope`.
    pub fn by_slope(slope: &Rational) -> Option<RegionLabel> {
        if *slope < 2 || *slope >= 6 {
            None
        } else if *slope <= 4 {
            Some(RegionLabel::I)
        } else if *slope < 5 {
            Some(RegionLabel::II)
        } else {
            Some(RegionLabel::III)
        }
    }

    /// Region whose ratio interval contains `ratio`.
    pub fn by_ratio(ratio: &Rational) -> Option<RegionLabel> {
        if ratio.is_negative() || *ratio >= 2 {
            None
        } else if *ratio <= Rational::ratio(1, 3) {
            Some(RegionLabel::I)
        } else if *ratio < Rational::ratio(3, 4) {
            Some(RegionLabel::II)
        } else {
            Some(RegionLabel::III)
        }
    }
}

impl fmt::Display for RegionLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Classifies a genus-2 census, insisting the slope and ratio descriptions
/// agree.
pub fn classify_region_g2(f: &FibrationNumerics) -> Result<RegionLabel, Error> {
    if f.genus() != 2 {
        return Err(Error::RegionGenus(f.genus()));
    }
    let inv = compute_invariants(f);
    classify(&inv.slope, &inv.ratio)
}

pub(crate) fn classify(slope: &Rational, ratio: &Rational) -> Result<RegionLabel, Error> {
    let by_slope =
        RegionLabel::by_slope(slope).ok_or_else(|| Error::RegionOutOfRange(slope.to_string()))?;
    match RegionLabel::by_ratio(ratio) {
        Some(r) if r == by_slope => Ok(by_slope),
        Some(r) => Err(Error::RegionMismatch {
            slope: by_slope.slope_interval(),
            ratio: r.ratio_interval(),
        }),
        None => Err(Error::RegionMismatch {
            slope: by_slope.slope_interval(),
            ratio: "outside [0, 2)",
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn g2(n: u64, s: u64) -> FibrationNumerics {
        FibrationNumerics::new(2, n, vec![s]).unwrap()
    }

    #[test]
    fn documented_examples() {
        assert_eq!(classify_region_g2(&g2(20, 0)), Ok(RegionLabel::I));
        assert_eq!(classify_region_g2(&g2(6, 2)), Ok(RegionLabel::I));
        assert_eq!(classify_region_g2(&g2(4, 3)), Ok(RegionLabel::III));
        assert_eq!(classify_region_g2(&g2(10, 5)), Ok(RegionLabel::II));
    }

    #[test]
    fn boundaries() {
        assert_eq!(
            RegionLabel::by_slope(&Rational::integer(4)),
            Some(RegionLabel::I)
        );
        assert_eq!(
            RegionLabel::by_slope(&Rational::integer(5)),
            Some(RegionLabel::III)
        );
        assert_eq!(RegionLabel::by_slope(&Rational::integer(6)), None);
        assert_eq!(
            RegionLabel::by_ratio(&Rational::ratio(3, 4)),
            Some(RegionLabel::III)
        );
        assert_eq!(RegionLabel::by_ratio(&Rational::integer(2)), None);
    }

    #[test]
    fn rejects_other_genera_and_out_of_range() {
        let g3 = FibrationNumerics::new(3, 4, vec![2]).unwrap();
        assert_eq!(classify_region_g2(&g3), Err(Error::RegionGenus(3)));
        assert!(matches!(
            classify_region_g2(&g2(1, 2)),
            Err(Error::RegionOutOfRange(_))
        ));
    }

    #[test]
    fn disagreeing_descriptions_are_reported() {
        let err = classify(&Rational::integer(3), &Rational::ratio(1, 2)).unwrap_err();
        assert_eq!(
            err,
            Error::RegionMismatch {
                slope: "[2, 4]",
                ratio: "(1/3, 3/4)"
            }
        );
    }
}
