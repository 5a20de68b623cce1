//! Command-line front end: expression evaluation, batch files, a REPL,
//! the null-cone CSV emitter, and the self-test suite.
//!
//! Exit codes: 0 success, 1 parse error, 2 domain error, 3 self-test failure.

pub mod ast;
pub mod eval;
pub mod format;
pub mod json;
pub mod lexer;
pub mod parser;
pub mod selftest;

use std::fmt;
use std::io::{BufRead, Write};
use std::path::PathBuf;

use clap::{Parser as ClapParser, Subcommand, ValueEnum};

use crate::ast::Stmt;
use crate::eval::{DomainError, Env};
use crate::format::OutputFormat;
use crate::lexer::ParseError;
use gnum::MappingFamily;

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_SELFTEST: i32 = 3;

#[derive(Debug, Clone, PartialEq)]
pub enum CliError {
    Parse(ParseError),
    Domain(DomainError),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(e) => write!(f, "{e}"),
            CliError::Domain(e) => write!(f, "{e}"),
        }
    }
}

/// Parses and evaluates one source line. `Ok(None)` for blank lines,
/// comments, and `let` bindings (which land in `env`).
pub fn process_line(
    line: &str,
    env: &mut Env,
    fmt: OutputFormat,
    json: bool,
    tol: f64,
) -> Result<Option<String>, CliError> {
    let stmt = parser::parse_line(line).map_err(CliError::Parse)?;
    match stmt {
        Stmt::Empty => Ok(None),
        Stmt::Let(name, expr) => {
            if eval::is_constant(&name) {
                return Err(CliError::Domain(DomainError::new(format!(
                    "cannot rebind the constant '{name}'"
                ))));
            }
            let v = eval::eval_expr(&expr, env, tol).map_err(CliError::Domain)?;
            env.insert(name, v);
            Ok(None)
        }
        Stmt::Expr(expr) => {
            let v = eval::eval_expr(&expr, env, tol).map_err(CliError::Domain)?;
            let shaped = format::shape(v, fmt, tol).map_err(CliError::Domain)?;
            let text = if json {
                json::render_json(&shaped)
            } else {
                format::render_text(&shaped, fmt)
            };
            Ok(Some(text))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Hyperbolic,
    Parabolic,
    Euclidean,
}

impl Family {
    fn mapping(self) -> MappingFamily {
        match self {
            Family::Hyperbolic => MappingFamily::Hyperbolic,
            Family::Parabolic => MappingFamily::Parabolic,
            Family::Euclidean => MappingFamily::Euclidean,
        }
    }

    fn name(self) -> &'static str {
        match self {
            Family::Hyperbolic => "hyperbolic",
            Family::Parabolic => "parabolic",
            Family::Euclidean => "euclidean",
        }
    }
}

/// CSV of the relative generators `A(t), B(t)` for `t` in `[-2, 2]`
/// with step `0.1`.
pub fn nullcone_csv(family: Option<Family>) -> String {
    let families = match family {
        Some(f) => vec![f],
        None => vec![Family::Hyperbolic, Family::Parabolic, Family::Euclidean],
    };
    let mut out = String::from("family,t,A11,A12,A21,A22,B11,B12,B21,B22\n");
    for fam in families {
        for k in -20..=20 {
            let t = k as f64 / 10.0;
            let (a, b) = gnum::nullcone_map_point(fam.mapping(), t);
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{},{}\n",
                fam.name(),
                format::fmt_f64(t),
                format::fmt_f64(a.g11),
                format::fmt_f64(a.g12),
                format::fmt_f64(a.g21),
                format::fmt_f64(a.g22),
                format::fmt_f64(b.g11),
                format::fmt_f64(b.g12),
                format::fmt_f64(b.g21),
                format::fmt_f64(b.g22),
            ));
        }
    }
    out
}

fn parse_tol(s: &str) -> Result<f64, String> {
    let x: f64 = s.parse().map_err(|_| format!("'{s}' is not a number"))?;
    if x.is_finite() && x >= 0.0 {
        Ok(x)
    } else {
        Err("tolerance must be finite and non-negative".to_string())
    }
}

#[derive(ClapParser)]
#[command(name = "gnum", version, about = "Calculator for the algebra of two nilpotent generators")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate one expression and print the result.
    Eval {
        #[arg(long, value_enum, default_value_t = OutputFormat::Coords)]
        format: OutputFormat,
        /// Print JSON instead of plain text.
        #[arg(long)]
        json: bool,
        /// Relative tolerance for singularity and classification decisions.
        #[arg(long, default_value_t = gnum::DEFAULT_TOL, value_parser = parse_tol)]
        tol: f64,
        expr: String,
    },
    /// Evaluate a file, one expression or `let` binding per line.
    Batch {
        #[arg(long, value_enum, default_value_t = OutputFormat::Coords)]
        format: OutputFormat,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = gnum::DEFAULT_TOL, value_parser = parse_tol)]
        tol: f64,
        file: PathBuf,
    },
    /// Interactive prompt; end with EOF (Ctrl-D).
    Repl {
        #[arg(long, value_enum, default_value_t = OutputFormat::Coords)]
        format: OutputFormat,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = gnum::DEFAULT_TOL, value_parser = parse_tol)]
        tol: f64,
    },
    /// Emit CSV sample paths of the three null-cone mapping families.
    NullconeMap {
        #[arg(long, value_enum)]
        family: Option<Family>,
    },
    /// Run the full acceptance suite and report one line per criterion.
    Selftest,
}

/// Entry point with injectable streams, so tests can drive it in-process.
pub fn run_with_io(
    args: &[String],
    out: &mut dyn Write,
    err: &mut dyn Write,
    input: &mut dyn BufRead,
) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let rendered = e.render();
            if e.use_stderr() {
                let _ = write!(err, "{rendered}");
                return EXIT_DOMAIN;
            }
            let _ = write!(out, "{rendered}");
            return EXIT_OK;
        }
    };
    match cli.cmd {
        Cmd::Eval { format, json, tol, expr } => {
            let mut env = Env::new();
            match process_line(&expr, &mut env, format, json, tol) {
                Ok(Some(text)) => {
                    let _ = writeln!(out, "{text}");
                    EXIT_OK
                }
                Ok(None) => EXIT_OK,
                Err(CliError::Parse(e)) => {
                    let _ = writeln!(err, "error: {e}");
                    EXIT_PARSE
                }
                Err(CliError::Domain(e)) => {
                    let _ = writeln!(err, "error: {e}");
                    EXIT_DOMAIN
                }
            }
        }
        Cmd::Batch { format, json, tol, file } => {
            let source = match std::fs::read_to_string(&file) {
                Ok(s) => s,
                Err(e) => {
                    let _ = writeln!(err, "error: cannot read {}: {e}", file.display());
                    return EXIT_DOMAIN;
                }
            };
            run_batch(&source, format, json, tol, out)
        }
        Cmd::Repl { format, json, tol } => {
            let mut env = Env::new();
            let mut line = String::new();
            loop {
                let _ = write!(err, "g> ");
                let _ = err.flush();
                line.clear();
                match input.read_line(&mut line) {
                    Ok(0) | Err(_) => break,
                    Ok(_) => {}
                }
                match process_line(line.trim_end(), &mut env, format, json, tol) {
                    Ok(Some(text)) => {
                        let _ = writeln!(out, "{text}");
                    }
                    Ok(None) => {}
                    Err(e) => {
                        let _ = writeln!(out, "error: {e}");
                    }
                }
            }
            EXIT_OK
        }
        Cmd::NullconeMap { family } => {
            let _ = write!(out, "{}", nullcone_csv(family));
            EXIT_OK
        }
        Cmd::Selftest => {
            let outcomes = selftest::run_all();
            let mut failed = 0;
            for o in &outcomes {
                let _ = writeln!(out, "{}", o.report_line());
                if let Err(detail) = &o.result {
                    let _ = writeln!(out, "    {detail}");
                    failed += 1;
                }
            }
            let _ = writeln!(out, "{} of {} criteria passed", outcomes.len() - failed, outcomes.len());
            if failed == 0 {
                EXIT_OK
            } else {
                EXIT_SELFTEST
            }
        }
    }
}

/// Evaluates a batch source: one statement per line, `#` comments, bindings
/// are file-scoped, errors are reported per line without stopping.
pub fn run_batch(
    source: &str,
    format: OutputFormat,
    json: bool,
    tol: f64,
    out: &mut dyn Write,
) -> i32 {
    let mut env = Env::new();
    let mut saw_parse = false;
    let mut saw_domain = false;
    for (idx, line) in source.lines().enumerate() {
        match process_line(line, &mut env, format, json, tol) {
            Ok(Some(text)) => {
                let _ = writeln!(out, "{text}");
            }
            Ok(None) => {}
            Err(e) => {
                match e {
                    CliError::Parse(_) => saw_parse = true,
                    CliError::Domain(_) => saw_domain = true,
                }
                let _ = writeln!(out, "error: line {}: {e}", idx + 1);
            }
        }
    }
    if saw_parse {
        EXIT_PARSE
    } else if saw_domain {
        EXIT_DOMAIN
    } else {
        EXIT_OK
    }
}
