//! Command dispatcher for the `bb` binary.
//!
//! Exit codes: 0 = verdict true / computation done, 1 = verdict false,
//! 2 = input error (syntax, unknown generator, unreadable file, bad flags),
//! 3 = precondition or domain error (wrong bidegree, non-invertible
//! transition, non-nilpotent flow direction).

use crate::error::Error;
use crate::frontend::parse::parse_expression;
use crate::frontend::report::Report;
use crate::frontend::source::SourceFile;
use crate::gauge::{factorization_check, gauge_equivalence_check};
use crate::poly::SuperPoly;
use crate::space::GeneratorSpace;
use crate::symplectic::poisson_bracket;
use crate::twisting::{mc_residual, twist, TwistInput};
use clap::{Parser, Subcommand};
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

#[derive(Parser)]
#[command(
    name = "bb",
    about = "Exact checks for graded structure Hamiltonians: brackets, master equations, twists, gauge factorization",
    disable_help_subcommand = true
)]
struct Cli {
    /// Emit plain text instead of JSON
    #[arg(long, global = true)]
    plain: bool,

    /// Generator space `N,R` for commands that take inline expressions
    #[arg(long, global = true, value_name = "N,R")]
    space: Option<String>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Poisson bracket of two inline expressions (needs --space)
    Bracket { a: String, b: String },
    /// Master-equation check of the structure in FILE
    Check { file: PathBuf },
    /// Classify the structure in FILE
    Classify { file: PathBuf },
    /// Twist the structure in FILE by a 2-form or bivector
    Twist {
        /// 2-form expression (bidegree (0,2))
        #[arg(long)]
        form: Option<String>,
        /// Bivector expression (bidegree (2,0))
        #[arg(long)]
        bivector: Option<String>,
        file: PathBuf,
    },
    /// Maurer-Cartan residual of a bivector or 2-form against FILE
    Mc {
        /// Bivector expression
        #[arg(long)]
        pi: Option<String>,
        /// 2-form expression
        #[arg(long)]
        omega: Option<String>,
        file: PathBuf,
    },
    /// Factorization and gauge-equivalence checks (needs --space with N = R)
    Gauge {
        #[arg(long)]
        pi: String,
        #[arg(long)]
        omega: String,
        #[arg(long)]
        phi: Option<String>,
    },
    /// Derived bracket {{x, Theta}, y} against the structure in FILE
    Derived {
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        file: PathBuf,
    },
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::Parse { .. } | Error::Io(_) | Error::IndexOutOfRange { .. } => 2,
        _ => 3,
    }
}

fn parse_space_flag(flag: &Option<String>) -> Result<GeneratorSpace, Error> {
    let text = flag.as_ref().ok_or_else(|| {
        Error::parse(0, 0, "this command needs --space N,R")
    })?;
    let (n, r) = text.split_once(',').ok_or_else(|| {
        Error::parse(0, 0, "--space takes the form N,R")
    })?;
    let n = n
        .trim()
        .parse::<usize>()
        .map_err(|_| Error::parse(0, 0, "--space takes the form N,R"))?;
    let r = r
        .trim()
        .parse::<usize>()
        .map_err(|_| Error::parse(0, 0, "--space takes the form N,R"))?;
    Ok(GeneratorSpace::new(n, r))
}

fn exclusive<'a>(
    a: &'a Option<String>,
    b: &'a Option<String>,
    names: (&str, &str),
) -> Result<(&'a str, bool), Error> {
    match (a, b) {
        (Some(v), None) => Ok((v.as_str(), true)),
        (None, Some(v)) => Ok((v.as_str(), false)),
        _ => Err(Error::parse(
            0,
            0,
            format!("exactly one of --{} / --{} is required", names.0, names.1),
        )),
    }
}

fn run_command(cli: &Cli) -> Result<(Report, u8), Error> {
    match &cli.command {
        Command::Bracket { a, b } => {
            let space = parse_space_flag(&cli.space)?;
            let fa = parse_expression(a, space)?;
            let fb = parse_expression(b, space)?;
            let bracket = poisson_bracket(&fa, &fb)?;
            let mut report = Report::new("bracket", true);
            for (d, p) in bracket.components() {
                report = report.with_residual(d, &p);
            }
            Ok((report, 0))
        }
        Command::Check { file } => {
            let source = SourceFile::load(file)?;
            let check = source.evaluate()?;
            let code = u8::from(!check.verdict);
            Ok((Report::from_check("check", &check), code))
        }
        Command::Classify { file } => {
            let source = SourceFile::load(file)?;
            let check = source.require_theta()?.classify();
            let code = u8::from(!check.verdict);
            Ok((Report::from_check("classify", &check), code))
        }
        Command::Twist {
            form,
            bivector,
            file,
        } => {
            let source = SourceFile::load(file)?;
            let (expr, is_form) = exclusive(form, bivector, ("form", "bivector"))?;
            let generator = parse_expression(expr, source.space)?;
            let w = if is_form {
                TwistInput::by_form(generator)?
            } else {
                TwistInput::by_bivector(generator)?
            };
            let twisted = twist(source.require_theta()?, &w)?;
            let check = twisted.classify();
            let mut report =
                Report::new("twist", check.verdict).with_classification(check.classification);
            for (component, degree) in [
                (twisted.mu(), crate::structures::MU_DEGREE),
                (twisted.gamma(), crate::structures::GAMMA_DEGREE),
                (twisted.phi(), crate::structures::PHI_DEGREE),
                (twisted.psi(), crate::structures::PSI_DEGREE),
            ] {
                if !component.is_zero() {
                    report = report.with_residual(degree, component);
                }
            }
            Ok((report, 0))
        }
        Command::Mc { pi, omega, file } => {
            let source = SourceFile::load(file)?;
            let (expr, is_pi) = exclusive(pi, omega, ("pi", "omega"))?;
            let generator = parse_expression(expr, source.space)?;
            let w = if is_pi {
                TwistInput::by_bivector(generator)?
            } else {
                TwistInput::by_form(generator)?
            };
            let residual = mc_residual(&w, source.require_theta()?)?;
            let verdict = residual.is_zero();
            let mut report = Report::new("mc", verdict);
            if let Some(d) = residual.bidegree() {
                report = report.with_residual(d, &residual);
            }
            Ok((report, u8::from(!verdict)))
        }
        Command::Gauge { pi, omega, phi } => {
            let space = parse_space_flag(&cli.space)?;
            let pi = TwistInput::by_bivector(parse_expression(pi, space)?)?;
            let omega = TwistInput::by_form(parse_expression(omega, space)?)?;
            let phi = match phi {
                Some(text) => parse_expression(text, space)?,
                None => SuperPoly::zero(space),
            };
            let factorization = factorization_check(&pi, &omega)?;
            let equivalence = gauge_equivalence_check(&pi, &omega, &phi)?;
            let verdict = factorization.verdict && equivalence.verdict;
            let mut report =
                Report::new("gauge", verdict).with_classification(equivalence.classification);
            for (d, p) in factorization.residuals.iter().chain(&equivalence.residuals) {
                report = report.with_residual(*d, p);
            }
            Ok((report, u8::from(!verdict)))
        }
        Command::Derived { x, y, file } => {
            let source = SourceFile::load(file)?;
            let fx = parse_expression(x, source.space)?;
            let fy = parse_expression(y, source.space)?;
            let result = source.require_theta()?.derived_bracket(&fx, &fy)?;
            let mut report = Report::new("derived", true);
            for (d, p) in result.components() {
                report = report.with_residual(d, &p);
            }
            Ok((report, 0))
        }
    }
}

/// Parse arguments, dispatch, and write the report. Returns the exit code.
pub fn run(args: &[String], out: &mut dyn Write) -> u8 {
    let cli = match Cli::try_parse_from(std::iter::once("bb".to_string()).chain(args.iter().cloned()))
    {
        Ok(cli) => cli,
        Err(e) => {
            // clap handles --help/--version with success exits.
            if e.use_stderr() {
                eprintln!("{e}");
                return 2;
            }
            print!("{e}");
            return 0;
        }
    };
    let start = Instant::now();
    match run_command(&cli) {
        Ok((mut report, code)) => {
            report.elapsed_ms = start.elapsed().as_millis();
            let rendered = if cli.plain {
                report.to_plain()
            } else {
                let mut s = report.to_json();
                s.push('\n');
                s
            };
            if out.write_all(rendered.as_bytes()).is_err() {
                return 2;
            }
            code
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}
