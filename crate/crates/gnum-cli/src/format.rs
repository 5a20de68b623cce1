//! Text rendering of values. Numbers print with up to 12 significant digits,
//! trailing zeros trimmed; complex numbers as `x+yi` with zero parts dropped.

use clap::ValueEnum;
use gnum::{
    canonical_form, euler_form, to_matrix, CGNum, Classification, Complex64, EulerClass,
    EulerForm, GClass, GNum, Mat2, SpectralData, SpectralKind,
};

use crate::eval::{DomainError, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    /// Null-basis coordinates `(g11, g12, g21, g22)`.
    Coords,
    /// Standard-basis form `a0 + a1·e + a2·fe + a3·f`.
    Std,
    /// 2x2 coordinate matrix.
    Matrix,
    /// Exponential canonical form (real g-numbers only).
    Euler,
    /// Spectral canonical form (real g-numbers only).
    Spectral,
}

pub fn fmt_f64(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    // round to 12 significant digits, then print the shortest form
    let rounded: f64 = format!("{x:.11e}").parse().unwrap_or(x);
    if rounded == 0.0 {
        return "0".to_string();
    }
    format!("{rounded}")
}

pub fn fmt_c(z: Complex64) -> String {
    if z.im == 0.0 {
        fmt_f64(z.re)
    } else if z.re == 0.0 {
        format!("{}i", fmt_f64(z.im))
    } else if z.im < 0.0 {
        format!("{}-{}i", fmt_f64(z.re), fmt_f64(-z.im))
    } else {
        format!("{}+{}i", fmt_f64(z.re), fmt_f64(z.im))
    }
}

/// Like [`fmt_c`] but parenthesized when both parts are present, for use as
/// a coefficient.
fn fmt_c_coeff(z: Complex64) -> String {
    if z.re != 0.0 && z.im != 0.0 {
        format!("({})", fmt_c(z))
    } else {
        fmt_c(z)
    }
}

pub fn gnum_tuple(g: &GNum) -> String {
    format!(
        "({}, {}, {}, {})",
        fmt_f64(g.g11),
        fmt_f64(g.g12),
        fmt_f64(g.g21),
        fmt_f64(g.g22)
    )
}

pub fn cgnum_tuple(c: &CGNum) -> String {
    match c.as_real() {
        Some(g) => gnum_tuple(&g),
        None => format!(
            "({}, {}, {}, {})",
            fmt_c(c.g11),
            fmt_c(c.g12),
            fmt_c(c.g21),
            fmt_c(c.g22)
        ),
    }
}

fn gnum_std(g: &GNum) -> String {
    let c = g.std_coords();
    format!(
        "{} + {}·e + {}·fe + {}·f",
        fmt_f64(c.a0),
        fmt_f64(c.a1),
        fmt_f64(c.a2),
        fmt_f64(c.a3)
    )
}

fn cgnum_std(g: &CGNum) -> String {
    let c = g.std_coords();
    format!(
        "{} + {}·e + {}·fe + {}·f",
        fmt_c_coeff(c.a0),
        fmt_c_coeff(c.a1),
        fmt_c_coeff(c.a2),
        fmt_c_coeff(c.a3)
    )
}

pub fn mat_text(m: &Mat2<Complex64>) -> String {
    format!(
        "[[{},{}],[{},{}]]",
        fmt_c(m.m11),
        fmt_c(m.m12),
        fmt_c(m.m21),
        fmt_c(m.m22)
    )
}

pub fn class_tag(c: GClass) -> &'static str {
    match c {
        GClass::Hyperbolic => "Hyperbolic",
        GClass::Parabolic => "Parabolic",
        GClass::Euclidean => "Euclidean",
    }
}

pub fn euler_tag(c: EulerClass) -> &'static str {
    match c {
        EulerClass::HypScalarLike => "HypScalarLike",
        EulerClass::HypVectorLike => "HypVectorLike",
        EulerClass::Parabolic => "Parabolic",
        EulerClass::Euclidean => "Euclidean",
    }
}

fn class_text(c: &Classification) -> String {
    format!("{}: vsq={} singular={}", class_tag(c.class), fmt_f64(c.vsq), c.singular)
}

fn euler_text(e: &EulerForm) -> String {
    format!(
        "{}: sign={} rho={} phi={} axis={}",
        euler_tag(e.class),
        fmt_f64(e.sign),
        fmt_f64(e.rho),
        fmt_f64(e.phi),
        gnum_tuple(&e.axis)
    )
}

fn spectral_text(s: &SpectralData) -> String {
    let mut out = match s.kind {
        SpectralKind::Scalar => format!("Scalar: lambda={}", fmt_c(s.lambda1)),
        SpectralKind::Jordan => format!(
            "Jordan: alpha0={} nilpart={}",
            fmt_c(s.lambda1),
            gnum_tuple(&s.nilpart.unwrap_or(gnum::ZERO))
        ),
        SpectralKind::Diagonalizable => {
            let (vp, vm) = s.projectors.expect("diagonalizable data has projectors");
            format!(
                "Diagonalizable: lambda1={} lambda2={} vplus={} vminus={}",
                fmt_c(s.lambda1),
                fmt_c(s.lambda2),
                cgnum_tuple(&vp),
                cgnum_tuple(&vm)
            )
        }
    };
    if let Some(basis) = &s.basis {
        out.push_str(&format!(
            " BA={} B={} A={} AB={}",
            cgnum_tuple(&basis.ba),
            cgnum_tuple(&basis.b),
            cgnum_tuple(&basis.a),
            cgnum_tuple(&basis.ab)
        ));
    }
    if let Some(rel) = &s.relative_matrix {
        out.push_str(&format!(" relmat={}", mat_text(rel)));
    }
    out
}

/// Applies the requested representation, turning g-numbers into matrices or
/// canonical-form reports where asked. Non-algebra values pass through.
pub fn shape(v: Value, fmt: OutputFormat, tol: f64) -> Result<Value, DomainError> {
    let as_real = |v: &Value| -> Result<GNum, DomainError> {
        match v {
            Value::Scalar(s) if s.im == 0.0 => Ok(GNum::scalar(s.re)),
            Value::G(g) => Ok(*g),
            Value::CG(c) => c.as_real().ok_or_else(|| {
                DomainError::new(format!("{:?} format requires a real g-number", fmt))
            }),
            other => Err(DomainError::new(format!(
                "{:?} format requires a g-number, got a {}",
                fmt,
                other.kind_name()
            ))),
        }
    };
    match fmt {
        OutputFormat::Coords | OutputFormat::Std => Ok(v),
        OutputFormat::Matrix => match &v {
            Value::Scalar(_) | Value::G(_) | Value::CG(_) => {
                let c = match &v {
                    Value::Scalar(s) => CGNum::scalar(*s),
                    Value::G(g) => g.to_complex(),
                    Value::CG(c) => *c,
                    _ => unreachable!(),
                };
                Ok(Value::Mat(to_matrix(&c)))
            }
            _ => Ok(v),
        },
        OutputFormat::Euler => match &v {
            Value::Scalar(_) | Value::G(_) | Value::CG(_) => {
                let g = as_real(&v)?;
                let form = euler_form(&g, tol)
                    .map_err(|e| DomainError::new(format!("euler format: {e}")))?;
                Ok(Value::Euler(form))
            }
            _ => Ok(v),
        },
        OutputFormat::Spectral => match &v {
            Value::Scalar(_) | Value::G(_) | Value::CG(_) => {
                let g = as_real(&v)?;
                Ok(Value::Spectral(Box::new(canonical_form(&g, tol))))
            }
            _ => Ok(v),
        },
    }
}

/// Text form of an (already shaped) value.
pub fn render_text(v: &Value, fmt: OutputFormat) -> String {
    match v {
        Value::Scalar(z) => fmt_c(*z),
        Value::G(g) => match fmt {
            OutputFormat::Std => gnum_std(g),
            _ => gnum_tuple(g),
        },
        Value::CG(c) => match fmt {
            OutputFormat::Std => cgnum_std(c),
            _ => cgnum_tuple(c),
        },
        Value::Mat(m) => mat_text(m),
        Value::Coords(ac) => {
            let labels = ac.signature.blade_labels();
            let parts: Vec<String> = labels
                .iter()
                .zip(&ac.coords)
                .map(|(l, x)| format!("{l}={}", fmt_f64(*x)))
                .collect();
            format!("{}: {}", ac.signature.name(), parts.join(" "))
        }
        Value::Class(c) => class_text(c),
        Value::Euler(e) => euler_text(e),
        Value::Spectral(s) => spectral_text(s),
        Value::Pair(l1, l2) => format!("({}, {})", fmt_c(*l1), fmt_c(*l2)),
    }
}
