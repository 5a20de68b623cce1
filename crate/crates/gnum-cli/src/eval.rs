//! Evaluator: expression trees down to values, delegating all mathematics to
//! the algebra crate.

use std::collections::HashMap;
use std::fmt;

use gnum::{
    canonical_form, classify, eigenpotents, eigenvalues, euler_form, interpret, make_idempotent,
    make_nilpotent, pauli_vector, to_matrix, AlgebraCoords, CGNum, Classification, Complex64,
    EulerForm, GNum, Mat2, NilpotentParams, Signature, SpectralData,
};

use crate::ast::Expr;

/// Everything an expression can evaluate to.
#[derive(Debug, Clone)]
pub enum Value {
    Scalar(Complex64),
    G(GNum),
    CG(CGNum),
    Mat(Mat2<Complex64>),
    Coords(AlgebraCoords),
    Class(Classification),
    Euler(EulerForm),
    Spectral(Box<SpectralData>),
    /// Eigenvalue pair.
    Pair(Complex64, Complex64),
}

impl Value {
    pub fn kind_name(&self) -> &'static str {
        match self {
            Value::Scalar(_) => "scalar",
            Value::G(_) => "g-number",
            Value::CG(_) => "complex g-number",
            Value::Mat(_) => "matrix",
            Value::Coords(_) => "algebra coordinates",
            Value::Class(_) => "classification",
            Value::Euler(_) => "euler form",
            Value::Spectral(_) => "spectral data",
            Value::Pair(..) => "eigenvalue pair",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DomainError {
    pub message: String,
}

impl DomainError {
    pub fn new(message: impl Into<String>) -> Self {
        DomainError { message: message.into() }
    }
}

impl fmt::Display for DomainError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "domain error: {}", self.message)
    }
}

pub type Env = HashMap<String, Value>;

/// Collapses a value to its simplest exact representation: complex
/// coordinates with zero imaginary parts become real, and multiples of the
/// unit become scalars.
fn demote(v: Value) -> Value {
    match v {
        Value::CG(c) => match c.as_real() {
            Some(r) => demote(Value::G(r)),
            None => {
                if c.g12 == Complex64::new(0.0, 0.0)
                    && c.g21 == Complex64::new(0.0, 0.0)
                    && c.g11 == c.g22
                {
                    Value::Scalar(c.g11)
                } else {
                    Value::CG(c)
                }
            }
        },
        Value::G(g) => {
            if g.g12 == 0.0 && g.g21 == 0.0 && g.g11 == g.g22 {
                Value::Scalar(Complex64::new(g.g11, 0.0))
            } else {
                Value::G(g)
            }
        }
        other => other,
    }
}

/// Constants of the language.
pub fn constant(name: &str) -> Option<Value> {
    let v = match name {
        "a" => Value::G(gnum::A_GEN),
        "b" => Value::G(gnum::B_GEN),
        "ab" => Value::G(gnum::A_GEN * gnum::B_GEN),
        "ba" => Value::G(gnum::B_GEN * gnum::A_GEN),
        "e" | "e1" => Value::G(gnum::E),
        "f" | "f1" => Value::G(gnum::F),
        "fe" => Value::G(gnum::FE),
        "e2" => Value::CG(pauli_vector(2)),
        "e3" => Value::G(GNum::new(1.0, 0.0, 0.0, -1.0)),
        "f2" => Value::CG((CGNum::e() * CGNum::f()).scaled(Complex64::new(0.0, 1.0))),
        "i" => Value::Scalar(Complex64::new(0.0, 1.0)),
        _ => return None,
    };
    Some(v)
}

pub fn is_constant(name: &str) -> bool {
    constant(name).is_some()
}

fn to_cg(v: &Value) -> Result<CGNum, String> {
    match v {
        Value::Scalar(s) => Ok(CGNum::scalar(*s)),
        Value::G(g) => Ok(g.to_complex()),
        Value::CG(c) => Ok(*c),
        other => Err(format!("cannot use a {} in algebra arithmetic", other.kind_name())),
    }
}

fn to_real_g(v: &Value) -> Result<GNum, String> {
    match v {
        Value::Scalar(s) if s.im == 0.0 => Ok(GNum::new(s.re, 0.0, 0.0, s.re)),
        Value::G(g) => Ok(*g),
        Value::CG(c) => c.as_real().ok_or_else(|| "requires a real g-number".to_string()),
        other => Err(format!("requires a real g-number, got a {}", other.kind_name())),
    }
}

fn to_real_scalar(v: &Value) -> Result<f64, String> {
    match v {
        Value::Scalar(s) if s.im == 0.0 => Ok(s.re),
        _ => Err("requires a real scalar".to_string()),
    }
}

pub fn eval_expr(expr: &Expr, env: &Env, tol: f64) -> Result<Value, DomainError> {
    // wraps a module failure with the subexpression that caused it
    let here = |msg: String| DomainError::new(format!("{expr}: {msg}"));
    match expr {
        Expr::Real(x) => Ok(Value::Scalar(Complex64::new(*x, 0.0))),
        Expr::Imag(x) => Ok(Value::Scalar(Complex64::new(0.0, *x))),
        Expr::Name(n) => constant(n)
            .or_else(|| env.get(n).cloned())
            .ok_or_else(|| here(format!("unknown name '{n}'"))),
        Expr::Neg(x) => {
            let v = eval_expr(x, env, tol)?;
            let c = to_cg(&v).map_err(here)?;
            Ok(demote(Value::CG(-c)))
        }
        Expr::Add(l, r) => {
            let (lv, rv) = (eval_expr(l, env, tol)?, eval_expr(r, env, tol)?);
            let (lc, rc) = (to_cg(&lv).map_err(&here)?, to_cg(&rv).map_err(&here)?);
            Ok(demote(Value::CG(lc + rc)))
        }
        Expr::Sub(l, r) => {
            let (lv, rv) = (eval_expr(l, env, tol)?, eval_expr(r, env, tol)?);
            let (lc, rc) = (to_cg(&lv).map_err(&here)?, to_cg(&rv).map_err(&here)?);
            Ok(demote(Value::CG(lc - rc)))
        }
        Expr::Mul(l, r) => {
            let (lv, rv) = (eval_expr(l, env, tol)?, eval_expr(r, env, tol)?);
            let (lc, rc) = (to_cg(&lv).map_err(&here)?, to_cg(&rv).map_err(&here)?);
            Ok(demote(Value::CG(lc * rc)))
        }
        Expr::Pow(b, n) => {
            let v = eval_expr(b, env, tol)?;
            let c = to_cg(&v).map_err(&here)?;
            let p = c.powi(*n, tol).map_err(|e| here(e.to_string()))?;
            Ok(demote(Value::CG(p)))
        }
        Expr::Call(name, args) => eval_call(expr, name, args, env, tol),
    }
}

fn eval_call(
    expr: &Expr,
    name: &str,
    args: &[Expr],
    env: &Env,
    tol: f64,
) -> Result<Value, DomainError> {
    let here = |msg: String| DomainError::new(format!("{expr}: {msg}"));
    let arity = |n: usize| -> Result<(), DomainError> {
        if args.len() == n {
            Ok(())
        } else {
            Err(here(format!("{name} expects {n} argument(s), got {}", args.len())))
        }
    };
    let ev = |e: &Expr| eval_expr(e, env, tol);

    match name {
        "rev" | "inv" | "star" | "odd" | "even" => {
            arity(1)?;
            let c = to_cg(&ev(&args[0])?).map_err(&here)?;
            let out = match name {
                "rev" => c.reverse(),
                "inv" => c.inversion(),
                "star" => c.mixed(),
                "odd" => c.odd_part(),
                _ => c.even_part(),
            };
            Ok(demote(Value::CG(out)))
        }
        "tr" => {
            arity(1)?;
            let c = to_cg(&ev(&args[0])?).map_err(&here)?;
            Ok(Value::Scalar(c.trace()))
        }
        "det" => {
            arity(1)?;
            let c = to_cg(&ev(&args[0])?).map_err(&here)?;
            Ok(Value::Scalar(c.det()))
        }
        "inverse" => {
            arity(1)?;
            let c = to_cg(&ev(&args[0])?).map_err(&here)?;
            let out = c.inverse(tol).map_err(|e| here(e.to_string()))?;
            Ok(demote(Value::CG(out)))
        }
        "sym" | "skew" | "wedge" => {
            arity(2)?;
            let x = to_cg(&ev(&args[0])?).map_err(&here)?;
            let y = to_cg(&ev(&args[1])?).map_err(&here)?;
            let out = if name == "sym" { x.sym(&y) } else { x.skew(&y) };
            Ok(demote(Value::CG(out)))
        }
        "dot" => {
            arity(2)?;
            let x = to_cg(&ev(&args[0])?).map_err(&here)?;
            let y = to_cg(&ev(&args[1])?).map_err(&here)?;
            Ok(Value::Scalar(x.sym(&y).scalar_part()))
        }
        "conj" => {
            arity(2)?;
            let g = to_cg(&ev(&args[0])?).map_err(&here)?;
            let x = to_cg(&ev(&args[1])?).map_err(&here)?;
            let gi = g.inverse(tol).map_err(|e| here(e.to_string()))?;
            Ok(demote(Value::CG(g * x * gi)))
        }
        "matrix" => {
            arity(1)?;
            let c = to_cg(&ev(&args[0])?).map_err(&here)?;
            Ok(Value::Mat(to_matrix(&c)))
        }
        "classify" => {
            arity(1)?;
            let g = to_real_g(&ev(&args[0])?).map_err(&here)?;
            Ok(Value::Class(classify(&g, tol)))
        }
        "euler" => {
            arity(1)?;
            let g = to_real_g(&ev(&args[0])?).map_err(&here)?;
            let form = euler_form(&g, tol).map_err(|e| here(e.to_string()))?;
            Ok(Value::Euler(form))
        }
        "eig" => {
            arity(1)?;
            let g = to_real_g(&ev(&args[0])?).map_err(&here)?;
            let (l1, l2) = eigenvalues(&g);
            Ok(Value::Pair(l1, l2))
        }
        "spectral" => {
            arity(1)?;
            let g = to_real_g(&ev(&args[0])?).map_err(&here)?;
            Ok(Value::Spectral(Box::new(canonical_form(&g, tol))))
        }
        "eigenpotents" => {
            arity(1)?;
            let g = to_real_g(&ev(&args[0])?).map_err(&here)?;
            let s = eigenpotents(&g, tol).map_err(|e| here(e.to_string()))?;
            Ok(Value::Spectral(Box::new(s)))
        }
        "nilpotent" => {
            arity(3)?;
            let n2 = to_real_scalar(&ev(&args[0])?).map_err(&here)?;
            let n3 = to_real_scalar(&ev(&args[1])?).map_err(&here)?;
            let n4 = to_real_scalar(&ev(&args[2])?).map_err(&here)?;
            let n = make_nilpotent(NilpotentParams::new(n2, n3, n4), tol)
                .map_err(|e| here(e.to_string()))?;
            Ok(Value::G(n))
        }
        "idempotent" => {
            arity(3)?;
            let a1 = to_real_scalar(&ev(&args[0])?).map_err(&here)?;
            let a2 = to_real_scalar(&ev(&args[1])?).map_err(&here)?;
            let branch = to_real_scalar(&ev(&args[2])?).map_err(&here)?;
            if branch != 1.0 && branch != -1.0 {
                return Err(here("branch must be +1 or -1".to_string()));
            }
            let p = make_idempotent(a1, a2, branch).map_err(|e| here(e.to_string()))?;
            Ok(Value::G(p))
        }
        "interpret" => {
            arity(2)?;
            let g = to_cg(&ev(&args[0])?).map_err(&here)?;
            let sig = match &args[1] {
                Expr::Name(n) => match n.as_str() {
                    "G20" => Signature::G20,
                    "G12" => Signature::G12,
                    "G30" => Signature::G30,
                    other => {
                        return Err(here(format!(
                            "interpret target must be G20, G12, or G30, got '{other}'"
                        )))
                    }
                },
                _ => return Err(here("interpret target must be G20, G12, or G30".to_string())),
            };
            let coords = interpret(&g, sig).map_err(|e| here(e.to_string()))?;
            Ok(Value::Coords(coords))
        }
        other => Err(here(format!("unknown function '{other}'"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_expr;

    fn eval_str(src: &str) -> Result<Value, DomainError> {
        eval_expr(&parse_expr(src).unwrap(), &Env::new(), 1e-9)
    }

    #[test]
    fn basic_values() {
        match eval_str("a*b + b*a").unwrap() {
            Value::Scalar(s) => assert_eq!(s, Complex64::new(1.0, 0.0)),
            other => panic!("{other:?}"),
        }
        match eval_str("det(1 + a + b + 2*wedge(a,b))").unwrap() {
            Value::Scalar(s) => assert_eq!(s, Complex64::new(-1.0, 0.0)),
            other => panic!("{other:?}"),
        }
        match eval_str("conj(1+a+b+2*wedge(a,b), a)").unwrap() {
            Value::G(g) => assert_eq!(g, GNum::new(-2.0, 1.0, -4.0, 2.0)),
            other => panic!("{other:?}"),
        }
        match eval_str("e1*e2*e3").unwrap() {
            Value::Scalar(s) => assert_eq!(s, Complex64::new(0.0, 1.0)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn domain_errors_carry_the_subexpression() {
        let err = eval_str("inverse(a)").unwrap_err();
        assert!(err.message.starts_with("inverse(a): "), "{}", err.message);
        assert!(err.to_string().contains("singular"));
        let err = eval_str("classify(e2)").unwrap_err();
        assert!(err.message.contains("requires a real g-number"));
    }

    #[test]
    fn power_and_negative_power() {
        match eval_str("e^2").unwrap() {
            Value::Scalar(s) => assert_eq!(s.re, 1.0),
            other => panic!("{other:?}"),
        }
        match eval_str("(1 + a + b + 2*wedge(a,b))^-1").unwrap() {
            Value::G(g) => assert_eq!(g, GNum::new(-2.0, 1.0, 1.0, 0.0)),
            other => panic!("{other:?}"),
        }
        assert!(eval_str("a^-1").is_err());
    }

    #[test]
    fn let_bindings_resolve() {
        let mut env = Env::new();
        let e = parse_expr("1 + a").unwrap();
        let v = eval_expr(&e, &env, 1e-9).unwrap();
        env.insert("g".to_string(), v);
        let e = parse_expr("det(g)").unwrap();
        match eval_expr(&e, &env, 1e-9).unwrap() {
            Value::Scalar(s) => assert_eq!(s.re, 1.0),
            other => panic!("{other:?}"),
        }
    }
}
