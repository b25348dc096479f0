//! Parallel theorem sweeps with a deterministic merge.

use lefschetz_core::enumeration::{verify_cell, SweepBox, SweepOptions, SweepReport};
use lefschetz_core::CheckId;
use rayon::prelude::*;

/// Sweeps every `(g, n)` cell on the rayon pool and merges the partial
/// reports in lexicographic cell order. The result equals the sequential
/// sweep for any pool size.
pub fn verify_theorems_parallel(
    bounds: &SweepBox,
    checks: &[CheckId],
    options: SweepOptions,
) -> SweepReport {
    let cells: Vec<(u64, u64)> = bounds.cells().collect();
    let parts: Vec<SweepReport> = cells
        .par_iter()
        .map(|&(g, n)| verify_cell(bounds, checks, options, g, n))
        .collect();
    let mut report = SweepReport::empty(*bounds, checks, options.counterexample_cap);
    for part in parts {
        report.merge(part);
    }
    report
}
