use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use cascade_lab::lab::{AnalyzeOptions, Filter, Lab, Scope, DEFAULT_MAX_SUBSETS};
use cascade_lab::oracle::{self, DEFAULT_SAMPLES};
use cascade_lab::report::{hasse_ascii, hasse_dot, write_csv, write_json};
use cascade_lab::rootsys::{Family, SimpleType};
use cascade_lab::Error;

#[derive(Parser)]
#[command(name = "cascade-lab", version, about = "Cascade invariants of parabolic nilradicals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct TypeArgs {
    /// Cartan family: A, B, C, D, E, F or G.
    #[arg(long = "type")]
    family: String,
    #[arg(long)]
    rank: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum HasseFormat {
    Dot,
    Ascii,
}

#[derive(Subcommand)]
enum Command {
    /// Full record for one nilradical.
    Analyze {
        #[command(flatten)]
        ty: TypeArgs,
        /// Comma-separated 1-based simple-root indices.
        #[arg(long, value_delimiter = ',', required = true)]
        t: Vec<usize>,
        /// Cross-check against the structure-constant oracle.
        #[arg(long)]
        oracle: bool,
        /// Add ε-coordinates (classical types only).
        #[arg(long)]
        epsilon: bool,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
    },
    /// One record per nonempty T.
    Enumerate {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, value_enum, default_value = "all")]
        filter: Filter,
        #[arg(long, value_enum, default_value = "json")]
        format: TableFormat,
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_MAX_SUBSETS)]
        max_subsets: usize,
        #[arg(long)]
        oracle: bool,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
    },
    /// Same as `enumerate --filter all --format csv`.
    Tables {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_MAX_SUBSETS)]
        max_subsets: usize,
    },
    /// Hasse diagram of the cascade poset.
    Hasse {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, value_enum, default_value = "ascii")]
        format: HasseFormat,
    },
    /// Golden tables and oracle agreement for every T.
    Verify {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, value_enum, default_value = "all")]
        scope: Scope,
        #[arg(long, default_value_t = DEFAULT_MAX_SUBSETS)]
        max_subsets: usize,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
    },
}

enum Failure {
    /// Downstream closed stdout (e.g. piped into `head`); not an error.
    ClosedPipe,
    Usage(String),
    Verification(String),
    Other(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let field = match &e {
            Error::UnknownFamily(_) => Some("--type"),
            Error::InvalidRank { .. } => Some("--rank"),
            Error::EmptyT | Error::SimpleRootOutOfRange { .. } => Some("--t"),
            Error::TooManySubsets { .. } => Some("--max-subsets"),
            Error::Parse(_) => Some(oracle::SEED_ENV),
            Error::WrongType(_) => Some("--type"),
            _ => None,
        };
        match (field, &e) {
            (Some(f), _) => Failure::Usage(format!("{f}: {e}")),
            (None, Error::InternalInconsistency(_) | Error::CriterionMismatch { .. }) => {
                Failure::Verification(e.to_string())
            }
            (None, e) if closed_pipe(e) => Failure::ClosedPipe,
            _ => Failure::Other(e.to_string()),
        }
    }
}

fn closed_pipe(e: &Error) -> bool {
    let kind = match e {
        Error::Io(io) => Some(io.kind()),
        Error::Json(j) => j.io_error_kind(),
        Error::Csv(c) => match c.kind() {
            csv::ErrorKind::Io(io) => Some(io.kind()),
            _ => None,
        },
        _ => None,
    };
    kind == Some(io::ErrorKind::BrokenPipe)
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Failure {
        if e.kind() == io::ErrorKind::BrokenPipe {
            return Failure::ClosedPipe;
        }
        Failure::Other(e.to_string())
    }
}

fn lab(ty: &TypeArgs) -> Result<Lab, Failure> {
    let family: Family = ty.family.parse()?;
    Ok(Lab::new(SimpleType::new(family, ty.rank)?))
}

fn sink(path: &Option<PathBuf>) -> Result<Box<dyn Write>, Failure> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Analyze {
            ty,
            t,
            oracle: with_oracle,
            epsilon,
            samples,
        } => {
            let lab = lab(&ty)?;
            let opts = AnalyzeOptions {
                oracle: with_oracle,
                epsilon,
                samples,
                seed: oracle::base_seed()?,
            };
            let record = lab.analyze_labels(&t, &opts)?;
            let mut out = io::stdout().lock();
            serde_json::to_writer_pretty(&mut out, &record).map_err(|e| Failure::from(io::Error::from(e)))?;
            writeln!(out)?;
            if record.oracle.as_ref().is_some_and(|o| !o.agrees) {
                return Err(Failure::Verification(format!("oracle disagrees for T = {:?}", record.t)));
            }
        }
        Command::Enumerate {
            ty,
            filter,
            format,
            output,
            max_subsets,
            oracle: with_oracle,
            samples,
        } => {
            let lab = lab(&ty)?;
            let opts = AnalyzeOptions {
                oracle: with_oracle,
                samples,
                seed: oracle::base_seed()?,
                ..AnalyzeOptions::default()
            };
            let records = lab.enumerate(filter, max_subsets, &opts)?;
            let out = sink(&output)?;
            match format {
                TableFormat::Json => write_json(&records, out)?,
                TableFormat::Csv => write_csv(&records, out)?,
            }
            if let Some(bad) = records.iter().find(|r| r.oracle.as_ref().is_some_and(|o| !o.agrees)) {
                return Err(Failure::Verification(format!("oracle disagrees for T = {:?}", bad.t)));
            }
        }
        Command::Tables { ty, output, max_subsets } => {
            let records = lab(&ty)?.enumerate(Filter::All, max_subsets, &AnalyzeOptions::default())?;
            write_csv(&records, sink(&output)?)?;
        }
        Command::Hasse { ty, format } => {
            let lab = lab(&ty)?;
            let (rs, c) = (lab.root_system(), lab.cascade());
            print!(
                "{}",
                match format {
                    HasseFormat::Dot => hasse_dot(rs, c),
                    HasseFormat::Ascii => hasse_ascii(rs, c),
                }
            );
        }
        Command::Verify {
            ty,
            scope,
            max_subsets,
            samples,
        } => {
            let lab = lab(&ty)?;
            let summary = lab.verify(scope, max_subsets, samples, oracle::base_seed()?)?;
            let scope_name = scope.to_possible_value().map(|v| v.get_name().to_owned()).unwrap_or_default();
            println!(
                "{} verify ({scope_name}): {} nilradicals, {} checks passed, {} failed",
                lab.root_system().stype(),
                summary.nilradicals,
                summary.passed,
                summary.failed
            );
            if let Some(first) = summary.failures.first() {
                return Err(Failure::Verification(format!("first failure: {first}")));
            }
            println!("pass");
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) | Err(Failure::ClosedPipe) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(3)
        }
        Err(Failure::Other(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
