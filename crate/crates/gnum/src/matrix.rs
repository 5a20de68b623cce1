//! Dense 2x2 matrices and the bridge to g-number coordinates.
//!
//! The free functions `mat_*` form a reference implementation written
//! directly on matrix entries. They never call into the g-number
//! multiplication, so differential tests between the two routes are
//! meaningful.

use crate::algebra::GNum;
use crate::error::{Error, Result};
use crate::scalar::{Complex64, Scalar};

/// Plain 2x2 matrix over `f64` (default) or `Complex64`.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct Mat2<S: Scalar = f64> {
    pub m11: S,
    pub m12: S,
    pub m21: S,
    pub m22: S,
}

impl<S: Scalar> Mat2<S> {
    pub fn new(m11: S, m12: S, m21: S, m22: S) -> Self {
        Mat2 { m11, m12, m21, m22 }
    }

    pub fn identity() -> Self {
        Self::new(S::one(), S::zero(), S::zero(), S::one())
    }

    pub fn zero() -> Self {
        Self::new(S::zero(), S::zero(), S::zero(), S::zero())
    }

    pub fn scaled(&self, s: S) -> Self {
        Self::new(self.m11 * s, self.m12 * s, self.m21 * s, self.m22 * s)
    }

    pub fn max_abs(&self) -> f64 {
        [self.m11, self.m12, self.m21, self.m22]
            .iter()
            .fold(0.0, |m, c| m.max(c.abs()))
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        (self.m11 - other.m11).abs() <= tol
            && (self.m12 - other.m12).abs() <= tol
            && (self.m21 - other.m21).abs() <= tol
            && (self.m22 - other.m22).abs() <= tol
    }
}

impl Mat2<f64> {
    pub fn to_complex(&self) -> Mat2<Complex64> {
        Mat2::new(
            self.m11.to_complex(),
            self.m12.to_complex(),
            self.m21.to_complex(),
            self.m22.to_complex(),
        )
    }
}

pub fn mat_add<S: Scalar>(x: &Mat2<S>, y: &Mat2<S>) -> Mat2<S> {
    Mat2::new(x.m11 + y.m11, x.m12 + y.m12, x.m21 + y.m21, x.m22 + y.m22)
}

pub fn mat_mul<S: Scalar>(x: &Mat2<S>, y: &Mat2<S>) -> Mat2<S> {
    Mat2::new(
        x.m11 * y.m11 + x.m12 * y.m21,
        x.m11 * y.m12 + x.m12 * y.m22,
        x.m21 * y.m11 + x.m22 * y.m21,
        x.m21 * y.m12 + x.m22 * y.m22,
    )
}

pub fn mat_det<S: Scalar>(m: &Mat2<S>) -> S {
    m.m11 * m.m22 - m.m12 * m.m21
}

pub fn mat_trace<S: Scalar>(m: &Mat2<S>) -> S {
    m.m11 + m.m22
}

/// Adjugate over determinant; [`Error::SingularMatrix`] when
/// `|det| <= tol * max(1, max_abs^2)`.
pub fn mat_inv<S: Scalar>(m: &Mat2<S>, tol: f64) -> Result<Mat2<S>> {
    let det = mat_det(m);
    let scale = m.max_abs();
    if det.abs() <= tol * f64::max(1.0, scale * scale) {
        return Err(Error::SingularMatrix);
    }
    let inv_det = S::one() / det;
    Ok(Mat2::new(
        m.m22 * inv_det,
        -m.m12 * inv_det,
        -m.m21 * inv_det,
        m.m11 * inv_det,
    ))
}

/// Roots of `x^2 - trace x + det`, returned as `((tr+s)/2, (tr-s)/2)`
/// with `s` the principal square root of the discriminant.
pub fn mat_eig<S: Scalar>(m: &Mat2<S>) -> (Complex64, Complex64) {
    let tr = mat_trace(m).to_complex();
    let det = mat_det(m).to_complex();
    let disc = tr * tr - Complex64::new(4.0, 0.0) * det;
    let s = disc.sqrt();
    let half = Complex64::new(0.5, 0.0);
    ((tr + s) * half, (tr - s) * half)
}

pub fn mat_conj_transpose(m: &Mat2<Complex64>) -> Mat2<Complex64> {
    Mat2::new(m.m11.conj(), m.m21.conj(), m.m12.conj(), m.m22.conj())
}

/// Coordinate matrix of a g-number.
pub fn to_matrix<S: Scalar>(g: &GNum<S>) -> Mat2<S> {
    Mat2::new(g.g11, g.g12, g.g21, g.g22)
}

/// g-number with the given coordinate matrix.
pub fn from_matrix<S: Scalar>(m: &Mat2<S>) -> GNum<S> {
    GNum::new(m.m11, m.m12, m.m21, m.m22)
}

/// Recovers the coordinate matrix entrywise through basis sandwiches,
/// e.g. `m11` from `ba*f*ba + a*f*b`. Each sandwich sum is a scalar
/// multiple of 1 by construction; the result equals [`to_matrix`] exactly.
pub fn extract_matrix_sandwich<S: Scalar>(f: &GNum<S>) -> Mat2<S> {
    let ba = GNum::<S>::gen_b() * GNum::<S>::gen_a();
    let ab = GNum::<S>::gen_a() * GNum::<S>::gen_b();
    let a = GNum::<S>::gen_a();
    let b = GNum::<S>::gen_b();
    let entry = |left1: GNum<S>, right1: GNum<S>, left2: GNum<S>, right2: GNum<S>| -> S {
        let s = left1 * *f * right1 + left2 * *f * right2;
        assert!(
            s.g12 == S::zero() && s.g21 == S::zero() && s.g11 == s.g22,
            "basis sandwich must produce a scalar"
        );
        s.g11
    };
    Mat2::new(
        entry(ba, ba, a, b),
        entry(ba, a, a, ab),
        entry(b, ba, ab, b),
        entry(b, a, ab, ab),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{A_GEN, B_GEN, E, ONE};
    use crate::DEFAULT_TOL;

    #[test]
    fn to_matrix_examples() {
        assert_eq!(to_matrix(&ONE), Mat2::identity());
        assert_eq!(
            to_matrix(&GNum::new(0.0, 1.0, 1.0, 2.0)),
            Mat2::new(0.0, 1.0, 1.0, 2.0)
        );
        // [e] = [a] + [b]
        assert_eq!(to_matrix(&E), mat_add(&to_matrix(&A_GEN), &to_matrix(&B_GEN)));
        assert_eq!(to_matrix(&E), Mat2::new(0.0, 1.0, 1.0, 0.0));
    }

    #[test]
    fn from_matrix_examples() {
        let n = from_matrix(&Mat2::new(-2.0, 1.0, -4.0, 2.0));
        assert_eq!(n, GNum::new(-2.0, 1.0, -4.0, 2.0));
        assert_eq!(from_matrix(&Mat2::<f64>::zero()), GNum::zero());
        // [[1,0],[0,-1]] is ba - ab = ef
        let ef = E * crate::algebra::F;
        assert_eq!(from_matrix(&Mat2::new(1.0, 0.0, 0.0, -1.0)), ef);
    }

    #[test]
    fn sandwich_extraction() {
        assert_eq!(
            extract_matrix_sandwich(&(B_GEN * A_GEN)),
            Mat2::new(1.0, 0.0, 0.0, 0.0)
        );
        let g = GNum::new(0.0, 1.0, 1.0, 2.0);
        assert_eq!(extract_matrix_sandwich(&g), Mat2::new(0.0, 1.0, 1.0, 2.0));
        assert_eq!(extract_matrix_sandwich(&g), to_matrix(&g));
    }

    #[test]
    fn oracle_examples() {
        let (l1, l2) = mat_eig(&Mat2::new(0.0, 1.0, 1.0, 2.0));
        let r2 = 2.0_f64.sqrt();
        assert!((l1 - Complex64::new(1.0 + r2, 0.0)).norm() < 1e-12);
        assert!((l2 - Complex64::new(1.0 - r2, 0.0)).norm() < 1e-12);

        assert_eq!(mat_inv(&Mat2::<f64>::identity(), DEFAULT_TOL).unwrap(), Mat2::identity());
        assert_eq!(mat_inv(&Mat2::new(1.0, 0.0, 0.0, 0.0), DEFAULT_TOL), Err(Error::SingularMatrix));

        // [a][b] = [ab]
        let prod = mat_mul(&Mat2::new(0.0, 0.0, 1.0, 0.0), &Mat2::new(0.0, 1.0, 0.0, 0.0));
        assert_eq!(prod, Mat2::new(0.0, 0.0, 0.0, 1.0));
    }

    #[test]
    fn complex_eig() {
        // rotation by 90 degrees has eigenvalues +-i
        let (l1, l2) = mat_eig(&Mat2::new(0.0, -1.0, 1.0, 0.0));
        assert!((l1 - Complex64::new(0.0, 1.0)).norm() < 1e-12);
        assert!((l2 - Complex64::new(0.0, -1.0)).norm() < 1e-12);
    }
}
