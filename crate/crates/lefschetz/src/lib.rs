//! File formats, parallel sweeps and the command-line front end for
//! [`lefschetz_core`].

pub mod cli;
pub mod geography;
pub mod parallel;
pub mod parse;
pub mod report;

pub use geography::{emit_geography, geography_points, Format, GeographyPoint};
pub use parallel::verify_theorems_parallel;
pub use report::{CheckRun, ExactValue, InvariantReport, SweepReportJson};
