//! Command-line front end.
//!
//! Exit codes: 0 on success, 2 on malformed input, 3 when a check fails or a
//! sweep finds counterexamples, 1 on I/O failure.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use lefschetz_core::constraints::evaluate;
use lefschetz_core::enumeration::diophantine::{
    solve_g2_system, solve_g3_system, DiophantineFamily,
};
use lefschetz_core::enumeration::{FilterSet, SweepBox, SweepOptions, DEFAULT_COUNTEREXAMPLE_CAP};
use lefschetz_core::invariants::compute_invariants;
use serde::Serialize;
use thiserror::Error;

use crate::geography::{emit_geography, geography_points, Format};
use crate::parallel::verify_theorems_parallel;
use crate::parse::{parse_census, parse_checks, parse_filters, parse_flags};
use crate::report::{to_json, CheckRun, ExactValue, InvariantReport, SweepReportJson};

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_FAILED: i32 = 3;

const ADMISSIBLE_FILTERS: &str = "basic,integral_chi_h,signature_bound_c05";

#[derive(Debug, Parser)]
#[command(
    name = "lefschetz",
    version,
    about = "Exact invariants, bound checks and geography sweeps for hyperelliptic Lefschetz fibrations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct CensusArgs {
    /// Fiber genus (at least 2).
    #[arg(long)]
    g: u64,
    /// Number of non-separating vanishing cycles.
    #[arg(long)]
    n: u64,
    /// Separating counts as `h:count` pairs; unlisted types are zero.
    #[arg(long, default_value = "")]
    sep: String,
}

#[derive(Debug, Args)]
struct BoxArgs {
    #[arg(long)]
    g_min: u64,
    #[arg(long)]
    g_max: u64,
    #[arg(long)]
    n_max: u64,
    /// Bound on the separating total.
    #[arg(long)]
    s_max: u64,
    /// Comma-separated filters from basic, integral_chi_h,
    /// signature_bound_c05, divisibility_c15_c16.
    #[arg(long, default_value = ADMISSIBLE_FILTERS)]
    filters: String,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OutputFormat {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print every invariant of one census as JSON.
    Invariants(CensusArgs),
    /// Evaluate registry checks on one census.
    Check {
        #[command(flatten)]
        census: CensusArgs,
        /// Check codes or names, or `all`.
        #[arg(long, default_value = "all")]
        checks: String,
        /// treat_as_realizable, simply_connected, b2plus=K
        #[arg(long, default_value = "")]
        flags: String,
    },
    /// Exhaustively verify checks over a box.
    Sweep {
        #[command(flatten)]
        bounds: BoxArgs,
        #[arg(long, default_value = "all")]
        checks: String,
        #[arg(long, default_value = "")]
        flags: String,
        /// Counterexamples kept per check.
        #[arg(long, default_value_t = DEFAULT_COUNTEREXAMPLE_CAP)]
        cap: usize,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Tabulate a closed-form family of the low-genus admissibility systems.
    Solve {
        #[arg(long)]
        genus: u64,
        #[arg(long)]
        k_max: Option<u64>,
        #[arg(long)]
        t_max: Option<u64>,
        #[arg(long)]
        m_max: Option<u64>,
        #[arg(long, value_enum, default_value = "csv")]
        format: OutputFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit geography points for every census passing the filters.
    Geography {
        #[command(flatten)]
        bounds: BoxArgs,
        #[arg(long, value_enum, default_value = "csv")]
        format: OutputFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot write {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Io { .. } => EXIT_IO,
        }
    }
}

fn usage(e: impl ToString) -> CliError {
    CliError::Usage(e.to_string())
}

/// Destination for a subcommand's main output.
fn write_output(out: Option<&Path>, stdout: &mut dyn Write, body: &[u8]) -> Result<(), CliError> {
    match out {
        Some(path) => {
            let io = |source| CliError::Io {
                path: path.display().to_string(),
                source,
            };
            let mut file = BufWriter::new(File::create(path).map_err(io)?);
            file.write_all(body).map_err(io)?;
            file.flush().map_err(io)
        }
        None => stdout.write_all(body).map_err(|source| CliError::Io {
            path: "<stdout>".into(),
            source,
        }),
    }
}

fn sweep_box(args: &BoxArgs) -> Result<SweepBox, CliError> {
    let filters: FilterSet = parse_filters(&args.filters).map_err(usage)?;
    SweepBox::new(args.g_min, args.g_max, args.n_max, args.s_max, filters).map_err(usage)
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(text.as_bytes())
            } else {
                stdout.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, stdout, stderr) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.code()
        }
    }
}

fn dispatch(
    command: Command,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<i32, CliError> {
    match command {
        Command::Invariants(c) => {
            let f = parse_census(c.g, c.n, &c.sep).map_err(usage)?;
            let report = InvariantReport::new(&f, &compute_invariants(&f));
            write_output(None, stdout, to_json(&report).as_bytes())?;
            Ok(EXIT_OK)
        }
        Command::Check {
            census,
            checks,
            flags,
        } => {
            let f = parse_census(census.g, census.n, &census.sep).map_err(usage)?;
            let ids = parse_checks(&checks).map_err(usage)?;
            let flags = parse_flags(&flags).map_err(usage)?;
            let inv = compute_invariants(&f);
            let results: Vec<_> = ids
                .iter()
                .map(|&id| evaluate(id, &f, &inv, flags))
                .collect();
            let run = CheckRun::new(&f, flags, &results);
            write_output(None, stdout, to_json(&run).as_bytes())?;
            Ok(if run.summary.fails > 0 {
                EXIT_FAILED
            } else {
                EXIT_OK
            })
        }
        Command::Sweep {
            bounds,
            checks,
            flags,
            cap,
            out,
        } => {
            let b = sweep_box(&bounds)?;
            let ids = parse_checks(&checks).map_err(usage)?;
            let flags = parse_flags(&flags).map_err(usage)?;
            let report = verify_theorems_parallel(
                &b,
                &ids,
                SweepOptions {
                    counterexample_cap: cap,
                    flags,
                },
            );
            let json = to_json(&SweepReportJson::from(&report));
            write_output(out.as_deref(), stdout, json.as_bytes())?;
            let _ = writeln!(
                stderr,
                "tuples_enumerated={} tuples_admissible={} counterexamples={}",
                report.tuples_enumerated,
                report.tuples_admissible,
                report.counterexample_count()
            );
            Ok(if report.is_clean() {
                EXIT_OK
            } else {
                EXIT_FAILED
            })
        }
        Command::Solve {
            genus,
            k_max,
            t_max,
            m_max,
            format,
            out,
        } => {
            let body = solve_table(genus, k_max, t_max, m_max, format)?;
            write_output(out.as_deref(), stdout, body.as_bytes())?;
            Ok(EXIT_OK)
        }
        Command::Geography {
            bounds,
            format,
            out,
        } => {
            let b = sweep_box(&bounds)?;
            let points = geography_points(&b);
            let format = match format {
                OutputFormat::Csv => Format::Csv,
                OutputFormat::Json => Format::Json,
            };
            let mut body = Vec::new();
            emit_geography(&points, format, &mut body).map_err(|source| CliError::Io {
                path: "<buffer>".into(),
                source,
            })?;
            write_output(out.as_deref(), stdout, &body)?;
            Ok(EXIT_OK)
        }
    }
}

#[derive(Serialize)]
struct ParameterJson {
    name: &'static str,
    min: u64,
    max: u64,
}

#[derive(Serialize)]
struct FamilyJson<R: Serialize> {
    genus: u64,
    params: Vec<ParameterJson>,
    n_formula: &'static str,
    s_formula: &'static str,
    description: &'static str,
    solutions: Vec<R>,
}

impl<R: Serialize> FamilyJson<R> {
    fn new(family: DiophantineFamily, solutions: Vec<R>) -> Self {
        FamilyJson {
            genus: family.genus,
            params: family
                .params
                .iter()
                .map(|p| ParameterJson {
                    name: p.name,
                    min: p.min,
                    max: p.max,
                })
                .collect(),
            n_formula: family.n_formula,
            s_formula: family.s_formula,
            description: family.description,
            solutions,
        }
    }
}

#[derive(Serialize)]
struct G2Row {
    k: u64,
    t: u64,
    n: u64,
    s: u64,
    lambda: ExactValue,
}

#[derive(Serialize)]
struct G3Row {
    m: u64,
    k: u64,
    n: u64,
    s: u64,
    ratio: ExactValue,
    lambda: ExactValue,
}

fn csv_table(header: &[&str], rows: impl Iterator<Item = Vec<String>>) -> Result<String, CliError> {
    let io = |e: csv::Error| CliError::Io {
        path: "<buffer>".into(),
        source: e.into(),
    };
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).map_err(io)?;
    for row in rows {
        w.write_record(&row).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Io {
        path: "<buffer>".into(),
        source: e.into_error(),
    })?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn solve_table(
    genus: u64,
    k_max: Option<u64>,
    t_max: Option<u64>,
    m_max: Option<u64>,
    format: OutputFormat,
) -> Result<String, CliError> {
    match genus {
        2 => {
            if m_max.is_some() {
                return Err(usage(
                    "--m-max applies to genus 3; genus 2 takes --k-max and --t-max",
                ));
            }
            let (Some(k_max), Some(t_max)) = (k_max, t_max) else {
                return Err(usage("genus 2 requires --k-max and --t-max"));
            };
            let (family, stream) = solve_g2_system(k_max, t_max).map_err(usage)?;
            match format {
                OutputFormat::Csv => csv_table(
                    &["k", "t", "n", "s", "lambda"],
                    stream.map(|x| {
                        vec![
                            x.k.to_string(),
                            x.t.to_string(),
                            x.n.to_string(),
                            x.s.to_string(),
                            x.slope.to_string(),
                        ]
                    }),
                ),
                OutputFormat::Json => {
                    let rows = stream
                        .map(|x| G2Row {
                            k: x.k,
                            t: x.t,
                            n: x.n,
                            s: x.s,
                            lambda: ExactValue::new(&x.slope),
                        })
                        .collect();
                    Ok(to_json(&FamilyJson::new(family, rows)))
                }
            }
        }
        3 => {
            if k_max.is_some() || t_max.is_some() {
                return Err(usage(
                    "--k-max and --t-max apply to genus 2; genus 3 takes --m-max",
                ));
            }
            let m_max = m_max.ok_or_else(|| usage("genus 3 requires --m-max"))?;
            let (family, stream) = solve_g3_system(m_max).map_err(usage)?;
            match format {
                OutputFormat::Csv => csv_table(
                    &["m", "k", "n", "s", "ratio", "lambda"],
                    stream.map(|x| {
                        vec![
                            x.m.to_string(),
                            x.k.to_string(),
                            x.n.to_string(),
                            x.s.to_string(),
                            x.ratio.to_string(),
                            x.slope.to_string(),
                        ]
                    }),
                ),
                OutputFormat::Json => {
                    let rows = stream
                        .map(|x| G3Row {
                            m: x.m,
                            k: x.k,
                            n: x.n,
                            s: x.s,
                            ratio: ExactValue::new(&x.ratio),
                            lambda: ExactValue::new(&x.slope),
                        })
                        .collect();
                    Ok(to_json(&FamilyJson::new(family, rows)))
                }
            }
        }
        other => Err(CliError::Usage(format!(
            "solve supports genus 2 or 3, got {other}"
        ))),
    }
}
