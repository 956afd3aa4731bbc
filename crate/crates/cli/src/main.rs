use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rrweights::combinatorics::{self, build_table, find_statement, render_table};
use rrweights::discovery::{self, SolutionReport};
use rrweights::identities::{self, Bindings};
use rrweights::partitions::{enumerate, PartitionClass, WeightSignature};
use rrweights::{Error, Execution};

mod render;

/// Lowest order `verify` accepts; several explicit terms start near q^20.
const ORDER_FLOOR: usize = 30;

#[derive(Parser)]
#[command(name = "rrweights", version, about = "Check weighted Rogers-Ramanujan identities and their partition refinements")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Expand both sides of catalog identities and compare coefficients.
    Verify {
        /// Catalog id, or `all`.
        #[arg(long, default_value = "all")]
        id: String,
        /// Truncation order (at least 30).
        #[arg(long, env = "RRWEIGHTS_ORDER", default_value_t = 60)]
        order: usize,
        #[command(flatten)]
        common: Common,
    },
    /// List the partitions of n in a class.
    Enumerate {
        /// diff2, diff2_star, rr1, rr2, or modM:r1,r2,...
        #[arg(long)]
        class: String,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Pair product-side and difference-side partitions of n by signature.
    Table {
        /// Refinement statement id.
        #[arg(long)]
        id: String,
        #[arg(long)]
        n: u32,
        /// Keep one signature class, e.g. `2` or `4,2,0`; its members are
        /// paired by rank.
        #[arg(long)]
        signature: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Compare product-side counts, case-rule counts and series coefficients.
    RefineCheck {
        /// Statement id, or `all`.
        #[arg(long, default_value = "all")]
        id: String,
        #[arg(long, default_value_t = 40)]
        n: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Solve a problem file for unknown numerators.
    Discover {
        #[arg(long)]
        problem: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
struct Common {
    /// Parameter binding, e.g. `M=7`. Without it parameterized entries are
    /// swept.
    #[arg(long, value_parser = parse_param)]
    param: Option<Bindings>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Run on one thread.
    #[arg(long)]
    sequential: bool,
}

impl Common {
    fn exec(&self) -> Execution {
        if self.sequential {
            Execution::Sequential
        } else {
            Execution::Parallel
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

fn parse_param(s: &str) -> Result<Bindings, String> {
    let m = s.strip_prefix("M=").ok_or_else(|| format!("expected M=<integer>, got `{s}`"))?;
    m.parse().map(Bindings::m).map_err(|_| format!("bad value in `{s}`"))
}

enum Failure {
    Usage(String),
    Lib(Error),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Io(e.into())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Io(e.into())
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Lib(e) => match e {
                Error::Overflow => 3,
                Error::UnknownId(_) | Error::ParameterDomain { .. } | Error::Parse(_) | Error::InvalidProblem(_) => 2,
                Error::ClassificationGap { .. }
                | Error::Ambiguous { .. }
                | Error::NonSingletonClass { .. }
                | Error::Inconsistent
                | Error::NonIntegral { .. } => 1,
                _ => 4,
            },
            Failure::Io(_) => 4,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Usage(m) => write!(f, "{m}"),
            Failure::Lib(e) => write!(f, "{e}"),
            Failure::Io(e) => write!(f, "{e}"),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => {
            eprintln!("error: {f}");
            ExitCode::from(f.exit_code())
        }
    }
}

/// Runs one command; `Ok(false)` means a check failed.
fn run(command: Command) -> Result<bool, Failure> {
    match command {
        Command::Verify { id, order, common } => {
            if order < ORDER_FLOOR {
                return Err(Failure::Usage(format!("--order must be at least {ORDER_FLOOR}, got {order}")));
            }
            let entries: Vec<&'static identities::CatalogEntry> = if id == "all" {
                identities::catalog().iter().collect()
            } else {
                vec![identities::find(&id)?]
            };
            let instances = match common.param {
                Some(b) => {
                    entries.iter().try_for_each(|e| e.instantiate(b).map(drop))?;
                    entries.iter().map(|&e| (e, b)).collect()
                }
                None => identities::sweep_instances(&entries),
            };
            let reports = identities::verify_instances(instances, order, common.exec())?;
            let ok = reports.iter().all(|r| r.passed());
            emit(&common.output, &render::verify(&reports, common.format)?)?;
            summary(reports.iter().filter(|r| r.passed()).count(), reports.len());
            Ok(ok)
        }
        Command::Enumerate { class, n, format, output } => {
            let class = parse_class(&class)?;
            let parts = enumerate(&class, n);
            emit(&output, &render::partitions(&parts, format)?)?;
            Ok(true)
        }
        Command::Table { id, n, signature, common } => {
            let entry = find_statement(&id)?;
            let params = common.param.unwrap_or_else(|| entry.sweep().first().copied().unwrap_or_default());
            let stmt = entry.instantiate(params)?;
            let only = match signature {
                Some(s) => Some(parse_signature(&s, &stmt.watched)?),
                None => None,
            };
            let rows = build_table(&stmt, n, only.as_ref())?;
            let text = match common.format {
                Format::Text => render_table(&stmt, &rows),
                f => render::table(&rows, f)?,
            };
            emit(&common.output, &text)?;
            Ok(true)
        }
        Command::RefineCheck { id, n, common } => {
            let entries: Vec<_> = if id == "all" {
                combinatorics::statements().iter().collect()
            } else {
                vec![find_statement(&id)?]
            };
            let mut stmts = Vec::new();
            for e in entries {
                match common.param {
                    Some(b) => stmts.push(e.instantiate(b)?),
                    None => {
                        for b in e.sweep() {
                            stmts.push(e.instantiate(b)?);
                        }
                    }
                }
            }
            let mut reports = Vec::new();
            for s in &stmts {
                reports.push(combinatorics::check_refinement(s, n, common.exec())?);
            }
            let ok = reports.iter().all(|r| r.passed());
            emit(&common.output, &render::refinements(&reports, common.format)?)?;
            summary(reports.iter().filter(|r| r.passed()).count(), reports.len());
            Ok(ok)
        }
        Command::Discover { problem, format, output } => {
            let text = fs::read_to_string(&problem)
                .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", problem.display())))?;
            let problem = discovery::parse_problem(&text)?;
            let solution = discovery::solve(&problem)?;
            let report = SolutionReport::new(&problem, &solution)?;
            emit(&output, &render::solution(&report, format)?)?;
            Ok(true)
        }
    }
}

fn parse_class(s: &str) -> Result<PartitionClass, Failure> {
    match s {
        "diff2" => Ok(PartitionClass::Diff2),
        "diff2_star" => Ok(PartitionClass::Diff2Star),
        "rr1" => Ok(PartitionClass::rr1()),
        "rr2" => Ok(PartitionClass::rr2()),
        _ => {
            let bad = || Failure::Usage(format!("unknown class `{s}`"));
            let (m, rs) = s.strip_prefix("mod").and_then(|r| r.split_once(':')).ok_or_else(bad)?;
            let m: u32 = m.parse().map_err(|_| bad())?;
            let rs: Vec<u32> = rs.split(',').map(|r| r.parse()).collect::<Result<_, _>>().map_err(|_| bad())?;
            Ok(PartitionClass::congruence(m, &rs)?)
        }
    }
}

fn parse_signature(s: &str, watched: &[u32]) -> Result<WeightSignature, Failure> {
    let body = s.trim().trim_start_matches('(').trim_end_matches(')');
    let counts: Vec<u32> = body
        .split(',')
        .map(|c| c.trim().parse())
        .collect::<Result<_, _>>()
        .map_err(|_| Failure::Usage(format!("bad signature `{s}`")))?;
    if counts.len() != watched.len() {
        return Err(Failure::Usage(format!(
            "signature `{s}` has {} entries but the statement watches {} part sizes",
            counts.len(),
            watched.len()
        )));
    }
    Ok(WeightSignature::from_counts(watched, &counts))
}

fn emit(path: &Option<PathBuf>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text)?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn summary(passed: usize, total: usize) {
    eprintln!("{passed} of {total} passed");
}
