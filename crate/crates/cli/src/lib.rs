//! Command-line front end: load a problem file (or build a generic matrix),
//! run the requested analyses and print a text or JSON report.
//!
//! Exit status is 0 on success, 1 for input errors and 2 when a
//! mathematical precondition fails or a Groebner computation times out.

pub mod pipeline;
pub mod problem;
pub mod report;

use std::io::Write;
use std::path::PathBuf;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use reesbound::bounds::BoundsError;
use reesbound::groebner::{ComputeOptions, GroebnerError};
use reesbound::gs::{GsError, SValue};
use reesbound::instance::{InstanceError, ProblemInstance};
use reesbound::matrix::{generic_matrix, MatrixError, MatrixKind};
use reesbound::poly::{FieldSpec, MonomialOrder, Ring};
use thiserror::Error;

use pipeline::{Session, DEFAULT_REQUESTS};
use problem::{load_problem, parse_field, parse_order, MatrixSpec, Overrides, PowerRange, ProblemFile, Request};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Precondition(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 1,
            CliError::Precondition(_) => 2,
        }
    }
}

impl From<GroebnerError> for CliError {
    fn from(e: GroebnerError) -> Self {
        match e {
            GroebnerError::Timeout => CliError::Precondition("Groebner computation exceeded the time limit".into()),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<MatrixError> for CliError {
    fn from(e: MatrixError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<InstanceError> for CliError {
    fn from(e: InstanceError) -> Self {
        match e {
            InstanceError::NonUniformDegree => CliError::Precondition(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<GsError> for CliError {
    fn from(e: GsError) -> Self {
        match e {
            GsError::Groebner(g) => g.into(),
            GsError::Instance(i) => i.into(),
            GsError::LowerIndexOutOfRange { .. } => CliError::Input(e.to_string()),
            GsError::NotGenericHeight { .. } => CliError::Precondition(e.to_string()),
        }
    }
}

impl From<BoundsError> for CliError {
    fn from(e: BoundsError) -> Self {
        match e {
            BoundsError::Groebner(g) => g.into(),
            BoundsError::Instance(i) => i.into(),
            other => CliError::Precondition(other.to_string()),
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "reesbound",
    version,
    about = "Heights, G_s and Rees algebra degree bounds for ideals of minors and Pfaffians"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Coefficient field: `rationals` or a prime [default: 32003].
    #[arg(long, global = true, value_parser = parse_field)]
    field: Option<FieldSpec>,
    /// Monomial order: `grevlex` or `lex` [default: grevlex].
    #[arg(long, global = true, value_parser = parse_order)]
    order: Option<MonomialOrder>,
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Abort Groebner computations after this many seconds (exit 2).
    #[arg(long, global = true, value_name = "SECONDS")]
    timeout: Option<f64>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run the analyses requested in the file, or all of them.
    Analyze { file: PathBuf },
    /// Height of the ideal against its generic value.
    Height { file: PathBuf },
    /// Check the condition G_s.
    Gs {
        file: PathBuf,
        /// A positive integer or `inf`.
        #[arg(long)]
        s: SValue,
    },
    /// Verify the height hypotheses and tabulate degree bounds.
    Bounds {
        file: PathBuf,
        /// A power `k` or an inclusive range `a..b`.
        #[arg(long)]
        k: PowerRange,
    },
    /// Linear type, fiber type and related conclusions.
    Classify { file: PathBuf },
    /// Pfaffian and Pfaffian adjoint of an alternating matrix.
    Pfaffian { file: PathBuf },
    /// Build the generic matrix of a shape over its own variables.
    Generic(GenericArgs),
}

#[derive(Debug, Args)]
struct GenericArgs {
    #[arg(long)]
    kind: MatrixKind,
    /// Number of rows [default: n].
    #[arg(long)]
    m: Option<u32>,
    #[arg(long)]
    n: u32,
    /// Minor size, or half the Pfaffian size for alternating matrices.
    #[arg(long)]
    t: u32,
    #[command(subcommand)]
    action: Option<GenericAction>,
}

#[derive(Debug, Clone, Copy, Subcommand)]
enum GenericAction {
    Analyze,
    Height,
    Gs {
        #[arg(long)]
        s: SValue,
    },
    Bounds {
        #[arg(long)]
        k: PowerRange,
    },
    Classify,
    Pfaffian,
    /// Print the generic matrix as a problem file.
    Emit,
}

enum Action {
    Analyze(Vec<Request>),
    Single(Request),
    Pfaffian,
    Emit,
}

/// Parses `argv` (including the program name), runs the command and
/// returns the exit status. The report goes to `out`, diagnostics to `err`.
pub fn run_with<O: Write, E: Write>(argv: &[String], out: &mut O, err: &mut E) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    match execute(&cli) {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

/// Runs with the process arguments and standard streams.
pub fn run(argv: &[String]) -> i32 {
    run_with(argv, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}

fn compute_options(timeout: Option<f64>) -> Result<ComputeOptions, CliError> {
    match timeout {
        None => Ok(ComputeOptions::default()),
        Some(s) if s.is_finite() && s > 0.0 => Ok(ComputeOptions::with_timeout(Duration::from_secs_f64(s))),
        Some(s) => Err(CliError::Input(format!("--timeout must be a positive number of seconds, got {s}"))),
    }
}

fn execute(cli: &Cli) -> Result<(String, i32), CliError> {
    let opts = compute_options(cli.timeout)?;
    let overrides = Overrides { field: cli.field, order: cli.order };
    let from_file = |file: &PathBuf| -> Result<(Session, Vec<Request>), CliError> {
        let problem = load_problem(file)?.build(overrides)?;
        Ok((Session { matrix: problem.matrix, t: problem.t, opts }, problem.requests))
    };
    let (session, action) = match &cli.command {
        Command::Analyze { file } => {
            let (s, requests) = from_file(file)?;
            let requests = if requests.is_empty() { DEFAULT_REQUESTS.to_vec() } else { requests };
            (s, Action::Analyze(requests))
        }
        Command::Height { file } => (from_file(file)?.0, Action::Single(Request::Height)),
        Command::Gs { file, s } => (from_file(file)?.0, Action::Single(Request::Gs(*s))),
        Command::Bounds { file, k } => (from_file(file)?.0, Action::Single(Request::Bounds(*k))),
        Command::Classify { file } => (from_file(file)?.0, Action::Single(Request::Classify)),
        Command::Pfaffian { file } => (from_file(file)?.0, Action::Pfaffian),
        Command::Generic(g) => {
            let session = generic_session(g, overrides, opts)?;
            let action = match g.action.unwrap_or(GenericAction::Analyze) {
                GenericAction::Analyze => Action::Analyze(DEFAULT_REQUESTS.to_vec()),
                GenericAction::Height => Action::Single(Request::Height),
                GenericAction::Gs { s } => Action::Single(Request::Gs(s)),
                GenericAction::Bounds { k } => Action::Single(Request::Bounds(k)),
                GenericAction::Classify => Action::Single(Request::Classify),
                GenericAction::Pfaffian => Action::Pfaffian,
                GenericAction::Emit => Action::Emit,
            };
            (session, action)
        }
    };
    let (sections, code) = match action {
        Action::Emit => return Ok((emit_problem(&session).to_toml(), 0)),
        Action::Analyze(requests) => {
            let (sections, skipped) = session.run_all(&requests)?;
            (sections, if skipped { 2 } else { 0 })
        }
        Action::Single(r) => (vec![session.run(r)?], 0),
        Action::Pfaffian => (vec![session.pfaffian()?], 0),
    };
    let report = session.report(sections);
    Ok((if cli.json { report.to_json() } else { report.to_text() }, code))
}

fn generic_session(g: &GenericArgs, overrides: Overrides, opts: ComputeOptions) -> Result<Session, CliError> {
    let m = match (g.kind, g.m) {
        (_, Some(m)) => m,
        (MatrixKind::Ordinary, None) => return Err(CliError::Input("--m is required for ordinary matrices".into())),
        (_, None) => g.n,
    };
    ProblemInstance::shape(g.kind, m, g.n, g.t)?;
    let base = Ring::new(Vec::new(), overrides.field.unwrap_or_default(), overrides.order.unwrap_or_default())
        .map_err(|e| CliError::Input(e.to_string()))?;
    let matrix = generic_matrix(m as usize, g.n as usize, g.kind, &base)?;
    Ok(Session { matrix, t: g.t, opts })
}

fn emit_problem(session: &Session) -> ProblemFile {
    let ring = session.matrix.ring();
    ProblemFile {
        format: problem::FORMAT_VERSION,
        field: Some(match ring.field() {
            FieldSpec::Rationals => "rationals".to_string(),
            FieldSpec::Prime(p) => p.to_string(),
        }),
        order: Some(ring.order().name().to_string()),
        variables: ring.vars().to_vec(),
        t: session.t,
        matrix: MatrixSpec {
            kind: session.matrix.kind().name().to_string(),
            entries: session.matrix.row_vecs().iter().map(|r| r.iter().map(ToString::to_string).collect()).collect(),
        },
        requested: Vec::new(),
    }
}
