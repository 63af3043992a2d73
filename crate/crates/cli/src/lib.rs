//! Command-line front end for `dagbound`.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 unmet precondition
//! (cyclic input, invalid ordering, exceeded cap), 3 a guaranteed property
//! failed, which means a bug.

use std::ffi::OsString;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use dagbound::bound::bound_report;
use dagbound::dim_two::{
    brute_force_dim2_realizer, certify_dimension_two, conjugate_ordering, equality_orderings,
    peel_equality_check, CertificationOutcome, CertifyOptions, DEFAULT_ORACLE_CAP,
};
use dagbound::generators::{generate, Family, Params};
use dagbound::io::{parse_instance, Instance};
use dagbound::orderings::{average_relational_distance, enumerate_orderings, validate_ordering};
use dagbound::search::{
    minimize_eg_bnb_with, minimize_eg_exhaustive, BnbOptions, DEFAULT_EXHAUSTIVE_CAP,
};
use dagbound::{Error, ErrorKind, Ranking};

mod report;

pub use report::Report;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_PROPERTY_VIOLATION: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "dagbound",
    version,
    about = "E-vector bounds and dimension-two certificates for acyclic digraphs"
)]
struct Cli {
    /// Print a single JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Suppress the text report; the exit code still tells the outcome.
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Input {
    /// Arc-list file, or `-` for standard input.
    file: PathBuf,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// E-vector, acyclicity and transitivity.
    Analyze(Input),
    /// Evaluate the bound for one ordering, given as ranks.
    Check {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_delimiter = ',', required = true)]
        ordering: Vec<usize>,
    },
    /// Minimize <e,g> over all acyclic orderings.
    Minimize {
        #[command(flatten)]
        input: Input,
        #[arg(long, conflicts_with = "bnb")]
        exhaustive: bool,
        /// Branch and bound (the default).
        #[arg(long)]
        bnb: bool,
        /// Node budget for branch and bound.
        #[arg(long)]
        budget: Option<u64>,
        /// Largest vertex count the exhaustive search accepts.
        #[arg(long, default_value_t = DEFAULT_EXHAUSTIVE_CAP)]
        cap: usize,
        #[arg(long)]
        parallel: bool,
    },
    /// Decide order dimension at most two and print a realizer.
    Certify {
        #[command(flatten)]
        input: Input,
        /// Certify the digraph as given instead of its transitive closure.
        #[arg(long)]
        as_is: bool,
        #[arg(long)]
        budget: Option<u64>,
        /// Also list every ordering attaining the bound.
        #[arg(long)]
        verbose: bool,
    },
    /// Brute-force realizer search over pairs of linear extensions.
    Oracle {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
        cap: usize,
    },
    /// List acyclic orderings in lexicographic order.
    Enumerate {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        max: Option<usize>,
    },
    /// Write a generated instance.
    Gen {
        /// path, total_order, antichain, standard_example, random_dag or figure1
        family: String,
        /// Vertex count (k for standard_example).
        #[arg(long, default_value_t = 0)]
        n: usize,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// A failure on the way to a report.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        let code = match err.kind() {
            ErrorKind::Input => EXIT_USAGE,
            ErrorKind::Precondition => EXIT_PRECONDITION,
            ErrorKind::PropertyViolation => EXIT_PROPERTY_VIOLATION,
        };
        Failure {
            code,
            message: err.to_string(),
        }
    }
}

fn fail(code: i32, message: impl Into<String>) -> Failure {
    Failure {
        code,
        message: message.into(),
    }
}

fn load(path: &Path) -> Result<Instance, Failure> {
    let text = if path == Path::new("-") {
        let mut buf = String::new();
        io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| fail(EXIT_USAGE, format!("reading stdin: {e}")))?;
        buf
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| fail(EXIT_USAGE, format!("{}: {e}", path.display())))?
    };
    parse_instance(&text).map_err(|e| fail(EXIT_USAGE, format!("{}: {e}", path.display())))
}

fn execute(command: Command) -> Result<Report, Failure> {
    match command {
        Command::Analyze(input) => {
            let inst = load(&input.file)?;
            let d = &inst.graph;
            let e = d.e_vector();
            Ok(Report::Analyze {
                name: inst.name.clone(),
                n: d.vertex_count(),
                arcs: d.arc_count(),
                acyclic: d.is_acyclic(),
                transitive: d.is_transitive(),
                e_vector: e.values().to_vec(),
                ee: e.norm_squared(),
                floor: e.norm_squared() / 2,
            })
        }
        Command::Check { input, ordering } => {
            let d = load(&input.file)?.graph;
            if !d.is_acyclic() {
                return Err(Error::Cyclic.into());
            }
            if ordering.len() != d.vertex_count() {
                return Err(Error::LengthMismatch {
                    expected: d.vertex_count(),
                    actual: ordering.len(),
                }
                .into());
            }
            let g = Ranking::new(ordering)?;
            if !validate_ordering(&d, g.ranks())? {
                return Err(fail(
                    EXIT_PRECONDITION,
                    format!("{g} is not an acyclic ordering"),
                ));
            }
            let report = bound_report(&d, &g)?;
            let ard = (d.arc_count() > 0)
                .then(|| average_relational_distance(&d, &g))
                .transpose()?
                .map(|r| format!("{}/{}", r.numer(), r.denom()));
            let conjugate = report
                .is_equality()
                .then(|| conjugate_ordering(&d, &g))
                .transpose()?;
            Ok(Report::Check {
                ordering: g,
                eg: report.eg,
                ee: report.ee,
                gap2: report.gap2,
                equality: report.is_equality(),
                average_relational_distance: ard,
                conjugate,
            })
        }
        Command::Minimize {
            input,
            exhaustive,
            budget,
            cap,
            parallel,
            ..
        } => {
            let d = load(&input.file)?.graph;
            let result = if exhaustive {
                minimize_eg_exhaustive(&d, cap)?
            } else {
                minimize_eg_bnb_with(&d, BnbOptions { budget, parallel })?
            };
            let ee = d.e_vector().norm_squared();
            Ok(Report::Minimize {
                method: if exhaustive { "exhaustive" } else { "bnb" }.into(),
                min_eg: result.min_eg,
                sequence: result.argmin.sequence(),
                argmin: result.argmin,
                explored: result.explored,
                proven_optimal: result.proven_optimal,
                ee,
                floor: ee / 2,
                gap2: 2 * result.min_eg - ee,
            })
        }
        Command::Certify {
            input,
            as_is,
            budget,
            verbose,
        } => {
            let d = load(&input.file)?.graph;
            let outcome = certify_dimension_two(&d, CertifyOptions { as_is, budget })?;
            let mut peel_check = None;
            let mut all = None;
            if let CertificationOutcome::CertifiedDim2(cert) = &outcome {
                let ok = peel_equality_check(&cert.reconstructed, &cert.g)?;
                if !ok {
                    return Err(fail(
                        EXIT_PROPERTY_VIOLATION,
                        format!("peeling checks fail for g = {}", cert.g),
                    ));
                }
                peel_check = Some(ok);
                if verbose {
                    all = Some(equality_orderings(&cert.reconstructed, None)?);
                }
            }
            Ok(Report::Certify {
                outcome,
                peel_check,
                equality_orderings: all,
            })
        }
        Command::Oracle { input, cap } => {
            let d = load(&input.file)?.graph;
            let realizer = brute_force_dim2_realizer(&d, cap)?;
            Ok(Report::Oracle {
                dim_at_most_two: realizer.is_some(),
                realizer,
            })
        }
        Command::Enumerate { input, max } => {
            let d = load(&input.file)?.graph;
            let mut it = enumerate_orderings(&d)?;
            if let Some(max) = max {
                it = it.with_limit(max);
            }
            let orderings: Vec<Ranking> = it.by_ref().collect();
            Ok(Report::Enumerate {
                count: orderings.len(),
                truncated: it.truncated(),
                orderings,
            })
        }
        Command::Gen { family, n, p, seed } => {
            let fam: Family = family.parse()?;
            let graph = generate(fam, Params { n, p, seed })?;
            let label = match fam {
                Family::Figure1 => fam.to_string(),
                Family::RandomDag => format!("{fam}(n={n}, p={p}, seed={seed})"),
                _ => format!("{fam}({n})"),
            };
            Ok(Report::Generate {
                family: label,
                graph,
            })
        }
    }
}

fn stream_orderings(
    path: &Path,
    max: Option<usize>,
    quiet: bool,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    let d = load(path)?.graph;
    let mut it = enumerate_orderings(&d)?;
    if let Some(max) = max {
        it = it.with_limit(max);
    }
    let io_err = |e: io::Error| fail(EXIT_USAGE, format!("writing output: {e}"));
    let mut count = 0usize;
    for g in it.by_ref() {
        count += 1;
        if !quiet {
            writeln!(out, "{g}").map_err(io_err)?;
        }
    }
    if !quiet {
        let note = if it.truncated() { " (truncated)" } else { "" };
        writeln!(out, "count: {count}{note}").map_err(io_err)?;
    }
    Ok(())
}

/// Runs one invocation. `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if code == EXIT_OK {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };

    // Text-mode enumeration streams instead of building the whole list.
    if let Command::Enumerate { input, max } = &cli.command {
        if !cli.json {
            return match stream_orderings(&input.file, *max, cli.quiet, out) {
                Ok(()) => EXIT_OK,
                Err(failure) => {
                    let _ = writeln!(err, "error: {}", failure.message);
                    failure.code
                }
            };
        }
    }

    let (report, code) = match execute(cli.command) {
        Ok(report) => (report, EXIT_OK),
        Err(failure) => {
            let _ = writeln!(err, "error: {}", failure.message);
            let report = Report::Error {
                exit_code: failure.code,
                message: failure.message,
            };
            (report, failure.code)
        }
    };

    if cli.json {
        let _ = writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&report).expect("reports serialize")
        );
    } else if !cli.quiet && !matches!(report, Report::Error { .. }) {
        let _ = writeln!(out, "{report}");
    }
    code
}
