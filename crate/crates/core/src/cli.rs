//! The `bss` command line.
//!
//! Exit codes: 0 for success or a `true` answer, 1 for a `false` answer, a
//! domain violation or a failed must-hold law, 2 for usage, I/O and parse errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::decision::decide;
use crate::document::{read_file, serialize, ReadError};
use crate::error::Error;
use crate::laws::catalogue::{self, Expectation};
use crate::laws::{check_laws, Bounds, InstanceSource, LawReport};
use crate::product::{and_product, or_product};
use crate::set::BipolarSoftSet;
use crate::table::to_table;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "bss", version, about = "Bipolar soft set algebra and decision making")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check that a document is a valid bipolar soft set
    Validate { path: PathBuf },
    /// Render the tabular form of a set
    Table {
        path: PathBuf,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Apply an operation to one or two sets
    Op {
        #[arg(value_enum)]
        name: OpName,
        #[arg(required = true, num_args = 1..=2)]
        paths: Vec<PathBuf>,
        /// Write the result here instead of stdout
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Score every object and report the optimal ones
    Decide {
        path: PathBuf,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Check the algebraic laws on generated instances
    CheckLaws(CheckLawsArgs),
}

#[derive(Args, Debug)]
struct OutputArgs {
    /// Write the output here instead of stdout
    #[arg(short, long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug)]
struct CheckLawsArgs {
    /// Only check this law (repeatable)
    #[arg(long = "law", value_name = "ID")]
    laws: Vec<String>,
    /// Enumerate every set over an M-object, N-parameter space
    #[arg(long, num_args = 2, value_names = ["M", "N"])]
    exhaustive: Option<Vec<usize>>,
    /// Seed for random instances
    #[arg(long)]
    seed: Option<u64>,
    /// Number of random instances per law
    #[arg(long)]
    instances: Option<u64>,
    #[arg(long, default_value_t = 6)]
    max_objects: usize,
    #[arg(long, default_value_t = 4)]
    max_params: usize,
    /// List the law catalogue and exit
    #[arg(long)]
    list: bool,
    #[arg(short, long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum OpName {
    Union,
    Intersect,
    Complement,
    And,
    Or,
    Subset,
    Equals,
}

/// Default random stream when neither `--seed` nor `--exhaustive` is given.
const DEFAULT_SEED: u64 = 0;
const DEFAULT_INSTANCES: u64 = 1000;

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<ReadError> for Failure {
    fn from(err: ReadError) -> Self {
        match err {
            ReadError::Io { .. } => Failure::Usage(err.to_string()),
            ReadError::Invalid(inner) => inner.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        match err {
            Error::Parse { .. }
            | Error::SpaceMismatch
            | Error::BoundsTooLarge(_)
            | Error::InvalidBounds(_)
            | Error::UnknownLaw(_) => Failure::Usage(err.to_string()),
            other => Failure::Domain(other.to_string()),
        }
    }
}

/// What a successful command produces: text for stdout or `--output`, and an exit code.
struct Reply {
    text: String,
    destination: Option<PathBuf>,
    code: i32,
}

impl Reply {
    fn ok(text: String, destination: Option<PathBuf>) -> Self {
        Reply {
            text,
            destination,
            code: EXIT_OK,
        }
    }
}

/// Runs the CLI with explicit argument list and output streams; returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let _ = write!(stderr, "{err}");
            return if err.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let result = match cli.command {
        Command::Validate { path } => validate(&path),
        Command::Table { path, output } => table(&path, output),
        Command::Op {
            name,
            paths,
            output,
        } => op(name, &paths, output),
        Command::Decide { path, output } => decide_cmd(&path, output),
        Command::CheckLaws(args) => check_laws_cmd(args),
    };
    match result {
        Ok(reply) => match emit(&reply, stdout) {
            Ok(()) => reply.code,
            Err(err) => {
                let _ = writeln!(stderr, "error: {err}");
                EXIT_USAGE
            }
        },
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Domain(msg)) => {
            let _ = writeln!(stderr, "invalid: {msg}");
            EXIT_FALSE
        }
    }
}

fn emit(reply: &Reply, stdout: &mut dyn Write) -> std::io::Result<()> {
    match &reply.destination {
        Some(path) => std::fs::write(path, &reply.text),
        None => stdout.write_all(reply.text.as_bytes()),
    }
}

fn validate(path: &Path) -> Result<Reply, Failure> {
    let set = read_file(path)?;
    let space = set.space();
    Ok(Reply::ok(
        format!(
            "ok: m={} n={} complete={}\n",
            space.num_objects(),
            space.num_params(),
            set.is_complete()
        ),
        None,
    ))
}

fn table(path: &Path, output: OutputArgs) -> Result<Reply, Failure> {
    let table = to_table(&read_file(path)?);
    let text = match output.format {
        Format::Text => table.render_text(),
        Format::Csv => table.render_csv(),
        Format::Json => to_json(&table),
    };
    Ok(Reply::ok(text, output.output))
}

fn op(name: OpName, paths: &[PathBuf], output: Option<PathBuf>) -> Result<Reply, Failure> {
    let expected = if name == OpName::Complement { 1 } else { 2 };
    if paths.len() != expected {
        return Err(Failure::Usage(format!(
            "`{}` takes {expected} input file(s), got {}",
            name.to_possible_value().expect("named").get_name(),
            paths.len()
        )));
    }
    let sets = paths
        .iter()
        .map(read_file)
        .collect::<Result<Vec<BipolarSoftSet>, ReadError>>()?;
    let answer = |value: bool| Reply {
        text: format!("{value}\n"),
        destination: output.clone(),
        code: if value { EXIT_OK } else { EXIT_FALSE },
    };
    let result = match name {
        OpName::Complement => sets[0].complement(),
        OpName::Union => sets[0].union(&sets[1])?,
        OpName::Intersect => sets[0].intersection(&sets[1])?,
        OpName::And => and_product(&sets[0], &sets[1])?,
        OpName::Or => or_product(&sets[0], &sets[1])?,
        OpName::Subset => return Ok(answer(sets[0].is_subset(&sets[1])?)),
        OpName::Equals => return Ok(answer(sets[0].equals(&sets[1])?)),
    };
    Ok(Reply::ok(serialize(&result), output))
}

fn decide_cmd(path: &Path, output: OutputArgs) -> Result<Reply, Failure> {
    let result = decide(&read_file(path)?);
    let text = match output.format {
        Format::Text => result.render_text(),
        Format::Csv => result.render_csv(),
        Format::Json => to_json(&result),
    };
    Ok(Reply::ok(text, output.output))
}

#[derive(Serialize)]
struct LawsDocument<'a> {
    violations: usize,
    reports: &'a [LawReport],
}

fn check_laws_cmd(args: CheckLawsArgs) -> Result<Reply, Failure> {
    let laws = catalogue::catalogue();
    if args.list {
        let text: String = laws
            .iter()
            .map(|l| {
                let tag = match l.expectation {
                    Expectation::MustHold => "must-hold",
                    Expectation::MustFail => "must-fail",
                };
                format!("{:<45} {tag:<9} {}\n", l.id, l.statement)
            })
            .collect();
        return Ok(Reply::ok(text, args.output));
    }

    let ids: Vec<&str> = if args.laws.is_empty() {
        laws.iter().map(|l| l.id).collect()
    } else {
        args.laws.iter().map(String::as_str).collect()
    };

    let random_requested = args.seed.is_some() || args.instances.is_some();
    let mut sources = Vec::new();
    if let Some(dims) = &args.exhaustive {
        sources.push(InstanceSource::Exhaustive {
            objects: dims[0],
            params: dims[1],
        });
    }
    if random_requested || args.exhaustive.is_none() {
        if args.exhaustive.is_none() && !random_requested {
            sources.push(InstanceSource::Exhaustive {
                objects: 2,
                params: 2,
            });
        }
        sources.push(InstanceSource::Random {
            seed: args.seed.unwrap_or(DEFAULT_SEED),
            instances: args.instances.unwrap_or(DEFAULT_INSTANCES),
            bounds: Bounds::new(args.max_objects, args.max_params)?,
        });
    }

    let mut reports = Vec::new();
    for source in sources {
        reports.extend(check_laws(&ids, source)?);
    }
    let violations = reports.iter().filter(|r| r.is_violation()).count();

    let text = match args.format {
        Format::Json => to_json(&LawsDocument {
            violations,
            reports: &reports,
        }),
        Format::Text | Format::Csv => render_reports(&reports, violations),
    };
    Ok(Reply {
        text,
        destination: args.output,
        code: if violations == 0 { EXIT_OK } else { EXIT_FALSE },
    })
}

fn render_reports(reports: &[LawReport], violations: usize) -> String {
    let mut out = String::new();
    for r in reports {
        let verdict = match (r.holds, r.as_expected()) {
            (true, true) => "PASS",
            (false, true) => "FAILS-AS-EXPECTED",
            (true, false) => "UNREFUTED",
            (false, false) => "VIOLATED",
        };
        let source = match r.source {
            InstanceSource::Exhaustive { objects, params } => format!("exhaustive {objects}x{params}"),
            InstanceSource::Random { seed, .. } => format!("random seed {seed}"),
        };
        out.push_str(&format!(
            "{verdict:<17} {:<45} {} instances, {source}\n",
            r.law_id, r.instances_checked
        ));
        if let Some(cx) = &r.counterexample {
            let at = match (&cx.divergence.param, &cx.divergence.object) {
                (Some(p), Some(o)) => format!(" at ({o}, {p})"),
                (Some(p), None) => format!(" at {p}"),
                _ => String::new(),
            };
            out.push_str(&format!(
                "    counterexample #{}{at}: {}\n",
                cx.instance, cx.divergence.detail
            ));
        }
    }
    out.push_str(&format!("{violations} violation(s)\n"));
    out
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("serializable");
    text.push('\n');
    text
}
