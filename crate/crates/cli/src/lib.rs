//! Command-line front end for the `monadj` engine.
//!
//! Every subcommand reads one or two ideal documents (a path, or `-` for
//! standard input) and writes either JSON (default) or aligned text.
//! Exit status: 0 on success, 1 when a `check` property fails, 2 on input or
//! usage errors.

pub mod document;
mod output;

use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use monadj::{AdjointMethod, Exponent};
use thiserror::Error;

use document::{parse_ideal, parse_monomial, parse_vector, DocumentError, ParsedIdeal};
pub use output::Format;

#[derive(Debug, Parser)]
#[command(name = "monadj", version, about = "Exact Newton polyhedra, integral closures and adjoint ideals of monomial ideals")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Worker threads for lattice enumeration (results do not depend on it).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Facets,
    Valuations,
    Bruteforce,
}

impl From<MethodArg> for AdjointMethod {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Facets => AdjointMethod::Facets,
            MethodArg::Valuations => AdjointMethod::Valuations,
            MethodArg::Bruteforce => AdjointMethod::BruteForce,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Non-coordinate facets of the Newton polyhedron.
    Facets { input: PathBuf },
    /// Rees valuations with their values and Jacobian values.
    Rees { input: PathBuf },
    /// Integral closure of a power.
    Closure {
        #[arg(long, default_value_t = 1)]
        power: u32,
        input: PathBuf,
    },
    /// Adjoint (multiplier) ideal of a power.
    Adjoint {
        #[arg(long, default_value_t = 1)]
        power: u32,
        #[arg(long, value_enum, default_value_t = MethodArg::Facets)]
        method: MethodArg,
        input: PathBuf,
    },
    /// Product of two ideals.
    Product { a: PathBuf, b: PathBuf },
    /// Membership of a monomial in the ideal, its integral closure and its adjoint.
    Member {
        /// Comma-separated exponents (`2,1`) or a monomial (`x^2*y`).
        #[arg(long, allow_hyphen_values = true)]
        exponent: String,
        input: PathBuf,
    },
    /// Verify a structural theorem and print its witnesses.
    #[command(subcommand)]
    Check(CheckCommand),
    /// Projective equivalence of two ideals.
    Equiv { a: PathBuf, b: PathBuf },
}

#[derive(Debug, Subcommand)]
pub enum CheckCommand {
    /// adj(IJ) ⊆ adj(I)·adj(J), with one factorization per generator.
    Subadditivity { a: PathBuf, b: PathBuf },
    /// Every Rees valuation is needed, with one witness monomial each.
    Necessity { input: PathBuf },
    /// adj(I^n) ⊆ ic(I^(n-l+1)) for an ideal with l minimal generators.
    BrianconSkoda {
        #[arg(long)]
        power: u32,
        input: PathBuf,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Document {
        path: String,
        source: DocumentError,
    },
    #[error("variable lists differ: {0:?} vs {1:?}")]
    VariableMismatch(Vec<String>, Vec<String>),
    #[error("invalid --exponent: {0}")]
    Exponent(String),
    #[error("invalid --threads: {0}")]
    Threads(String),
    #[error(transparent)]
    Engine(#[from] monadj::Error),
    #[error("output: {0}")]
    Output(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Engine(monadj::Error::Internal(_)) => 1,
            _ => 2,
        }
    }
}

pub(crate) struct Inputs<'a> {
    stdin: &'a mut (dyn Read + Send),
    stdin_used: bool,
}

impl Inputs<'_> {
    fn load(&mut self, path: &PathBuf) -> Result<ParsedIdeal, CliError> {
        let display = path.display().to_string();
        let text = if display == "-" {
            if self.stdin_used {
                return Err(CliError::Io {
                    path: display,
                    source: std::io::Error::other("standard input already consumed"),
                });
            }
            self.stdin_used = true;
            let mut buf = String::new();
            self.stdin
                .read_to_string(&mut buf)
                .map_err(|source| CliError::Io { path: display.clone(), source })?;
            buf
        } else {
            fs::read_to_string(path).map_err(|source| CliError::Io { path: display.clone(), source })?
        };
        parse_ideal(&text).map_err(|source| CliError::Document { path: display, source })
    }

    fn load_pair(&mut self, a: &PathBuf, b: &PathBuf) -> Result<(ParsedIdeal, ParsedIdeal), CliError> {
        let a = self.load(a)?;
        let b = self.load(b)?;
        if a.variables != b.variables {
            return Err(CliError::VariableMismatch(a.variables, b.variables));
        }
        Ok((a, b))
    }
}

fn parse_exponent_arg(text: &str, variables: &[String]) -> Result<Exponent, CliError> {
    let trimmed = text.trim().trim_start_matches('[').trim_end_matches(']');
    let numeric = trimmed
        .split(',')
        .map(|s| s.trim().parse::<i64>())
        .collect::<Result<Vec<_>, _>>();
    let result = match numeric {
        Ok(values) => parse_vector(&values, variables, 0),
        Err(_) => parse_monomial(text, variables),
    };
    result.map_err(|e| CliError::Exponent(e.to_string()))
}

/// Outcome of a successful dispatch: whether a checked property held.
pub(crate) enum Verdict {
    Done,
    PropertyFailed,
}

fn dispatch(cli: &Cli, inputs: &mut Inputs<'_>, out: &mut (dyn Write + Send)) -> Result<Verdict, CliError> {
    let fmt = cli.format;
    match &cli.command {
        Command::Facets { input } => {
            let p = inputs.load(input)?;
            let polyhedron = monadj::NewtonPolyhedron::of(&p.ideal)?;
            output::facets(out, fmt, &p.variables, &polyhedron)?;
        }
        Command::Rees { input } => {
            let p = inputs.load(input)?;
            let rees = monadj::rees_valuations(&p.ideal)?;
            output::rees(out, fmt, &p.variables, &rees)?;
        }
        Command::Closure { power, input } => {
            let p = inputs.load(input)?;
            let ic = monadj::integral_closure(&p.ideal, *power)?;
            output::ideal(out, fmt, &p.variables, &ic)?;
        }
        Command::Adjoint { power, method, input } => {
            let p = inputs.load(input)?;
            let adj = monadj::adjoint(&p.ideal, *power, (*method).into())?;
            output::ideal(out, fmt, &p.variables, &adj)?;
        }
        Command::Product { a, b } => {
            let (a, b) = inputs.load_pair(a, b)?;
            let prod = a.ideal.product(&b.ideal)?;
            output::ideal(out, fmt, &a.variables, &prod)?;
        }
        Command::Member { exponent, input } => {
            let p = inputs.load(input)?;
            let e = parse_exponent_arg(exponent, &p.variables)?;
            let polyhedron = monadj::NewtonPolyhedron::of(&p.ideal)?;
            let shifted = e.checked_add(&Exponent::ones(e.dim()))?;
            let membership = output::Membership {
                member: p.ideal.contains(&e)?,
                integral_closure_member: polyhedron.contains_exponent(&e, false)?,
                adjoint_member: polyhedron.contains_exponent(&shifted, true)?,
            };
            output::member(out, fmt, &p.variables, &e, &membership)?;
        }
        Command::Check(CheckCommand::Subadditivity { a, b }) => {
            let (a, b) = inputs.load_pair(a, b)?;
            let report = monadj::subadditivity_report(&a.ideal, &b.ideal)?;
            output::subadditivity(out, fmt, &a.variables, &report)?;
            if !report.holds {
                return Ok(Verdict::PropertyFailed);
            }
        }
        Command::Check(CheckCommand::Necessity { input }) => {
            let p = inputs.load(input)?;
            let witnesses = monadj::check_rees_necessity(&p.ideal)?;
            output::necessity(out, fmt, &p.variables, &witnesses)?;
        }
        Command::Check(CheckCommand::BrianconSkoda { power, input }) => {
            let p = inputs.load(input)?;
            let report = monadj::briancon_skoda_report(&p.ideal, *power)?;
            output::briancon_skoda(out, fmt, &p.variables, p.ideal.len(), &report)?;
            if !report.holds {
                return Ok(Verdict::PropertyFailed);
            }
        }
        Command::Equiv { a, b } => {
            let (a, b) = inputs.load_pair(a, b)?;
            let result = monadj::projective_equivalence(&a.ideal, &b.ideal)?;
            output::equivalence(out, fmt, &result)?;
        }
    }
    Ok(Verdict::Done)
}

/// Runs one invocation and returns the process exit code.
pub fn run<I, T>(
    args: I,
    stdin: &mut (dyn Read + Send),
    out: &mut (dyn Write + Send),
    err: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(rendered.as_bytes())
            } else {
                err.write_all(rendered.as_bytes())
            };
            return code;
        }
    };

    let mut inputs = Inputs { stdin, stdin_used: false };
    let result = match cli.threads {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| dispatch(&cli, &mut inputs, out)),
            Err(e) => Err(CliError::Threads(e.to_string())),
        },
        None => dispatch(&cli, &mut inputs, out),
    };
    match result {
        Ok(Verdict::Done) => 0,
        Ok(Verdict::PropertyFailed) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
