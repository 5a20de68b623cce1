//! Expression tree and its canonical printer.
//!
//! The printer emits a form that re-parses to the identical tree, which the
//! tests rely on, and which error messages quote when an evaluation fails.

use std::fmt;

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Real(f64),
    Imag(f64),
    Name(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i32),
    Call(String, Vec<Expr>),
}

#[derive(Debug, Clone, PartialEq)]
pub enum Stmt {
    Empty,
    Expr(Expr),
    Let(String, Expr),
}

const PREC_ADD: u8 = 1;
const PREC_MUL: u8 = 2;
const PREC_NEG: u8 = 3;
const PREC_POW: u8 = 4;
const PREC_ATOM: u8 = 5;

impl Expr {
    fn prec(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => PREC_ADD,
            Expr::Mul(..) => PREC_MUL,
            Expr::Neg(..) => PREC_NEG,
            Expr::Pow(..) => PREC_POW,
            _ => PREC_ATOM,
        }
    }

    fn write(&self, f: &mut fmt::Formatter<'_>, min_prec: u8) -> fmt::Result {
        let prec = self.prec();
        let parens = prec < min_prec;
        if parens {
            write!(f, "(")?;
        }
        match self {
            Expr::Real(x) => write!(f, "{}", crate::format::fmt_f64(*x))?,
            Expr::Imag(x) => write!(f, "{}i", crate::format::fmt_f64(*x))?,
            Expr::Name(n) => write!(f, "{n}")?,
            Expr::Neg(x) => {
                write!(f, "-")?;
                x.write(f, PREC_POW)?;
            }
            Expr::Add(l, r) => {
                l.write(f, PREC_ADD)?;
                write!(f, " + ")?;
                r.write(f, PREC_MUL)?;
            }
            Expr::Sub(l, r) => {
                l.write(f, PREC_ADD)?;
                write!(f, " - ")?;
                r.write(f, PREC_MUL)?;
            }
            Expr::Mul(l, r) => {
                l.write(f, PREC_MUL)?;
                write!(f, "*")?;
                r.write(f, PREC_NEG)?;
            }
            Expr::Pow(b, n) => {
                b.write(f, PREC_ATOM)?;
                write!(f, "^{n}")?;
            }
            Expr::Call(name, args) => {
                write!(f, "{name}(")?;
                for (k, a) in args.iter().enumerate() {
                    if k > 0 {
                        write!(f, ", ")?;
                    }
                    a.write(f, 0)?;
                }
                write!(f, ")")?;
            }
        }
        if parens {
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(f, 0)
    }
}
