//! Geography datasets: one row per admissible census, in CSV or JSON.

use std::io::Write;

use lefschetz_core::enumeration::region::classify_region_g2;
use lefschetz_core::enumeration::{enumerate_admissible, SweepBox};
use lefschetz_core::{FibrationNumerics, InvariantSet};
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::report::ExactValue;

pub const CSV_HEADER: [&str; 10] = [
    "g", "n", "s", "x", "chi_h", "c1sq", "slope", "ratio", "sigma", "region",
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeographyPoint {
    pub g: u64,
    pub n: u64,
    pub s: u128,
    pub x: u128,
    pub chi_h: ExactValue,
    pub c1sq: ExactValue,
    pub slope: ExactValue,
    pub ratio: ExactValue,
    pub sigma: ExactValue,
    /// Genus 2 only.
    pub region: Option<String>,
}

impl GeographyPoint {
    pub fn new(f: &FibrationNumerics, inv: &InvariantSet) -> Self {
        GeographyPoint {
            g: f.genus(),
            n: f.n(),
            s: inv.s.to_u128().expect("separating total fits u128"),
            x: inv.x.to_u128().expect("weighted separating sum fits u128"),
            chi_h: ExactValue::new(&inv.chi_h),
            c1sq: ExactValue::new(&inv.c1sq),
            slope: ExactValue::new(&inv.slope),
            ratio: ExactValue::new(&inv.ratio),
            sigma: ExactValue::new(&inv.sigma),
            region: classify_region_g2(f).ok().map(|r| r.as_str().to_string()),
        }
    }
}

/// Points for every census in the box passing its filters, in enumeration
/// order.
pub fn geography_points(bounds: &SweepBox) -> Vec<GeographyPoint> {
    enumerate_admissible(bounds)
        .map(|(f, inv)| GeographyPoint::new(&f, &inv))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

/// Writes the points. CSV carries only exact `p/q` strings; JSON carries
/// exact and decimal renderings under the same keys.
pub fn emit_geography<W: Write>(
    points: &[GeographyPoint],
    format: Format,
    out: W,
) -> std::io::Result<()> {
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(CSV_HEADER)?;
            for p in points {
                let ints = [
                    p.g.to_string(),
                    p.n.to_string(),
                    p.s.to_string(),
                    p.x.to_string(),
                ];
                w.write_record([
                    ints[0].as_str(),
                    ints[1].as_str(),
                    ints[2].as_str(),
                    ints[3].as_str(),
                    p.chi_h.exact.as_str(),
                    p.c1sq.exact.as_str(),
                    p.slope.exact.as_str(),
                    p.ratio.exact.as_str(),
                    p.sigma.exact.as_str(),
                    p.region.as_deref().unwrap_or(""),
                ])?;
            }
            w.flush()
        }
        Format::Json => {
            let mut out = out;
            serde_json::to_writer_pretty(&mut out, points)?;
            out.write_all(b"\n")
        }
    }
}
