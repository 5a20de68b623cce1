//! Arithmetic, conjugations, and scalar invariants of g-numbers.
//!
//! A g-number is a linear combination of the canonical null basis
//! `{ba, b, a, ab}`, where the generators satisfy `a^2 = b^2 = 0` and
//! `ab + ba = 1`. Coordinates are stored in the order `(g11, g12, g21, g22)`
//! matching `g = g11*ba + g12*b + g21*a + g22*ab`, so the coordinate matrix
//! of a product is the product of the coordinate matrices.

use crate::error::{Error, Result};
use crate::scalar::{Complex64, Scalar};

/// Element of the algebra over the scalar field `S`.
///
/// `GNum` (the default) is the real algebra; [`CGNum`] is its complex
/// extension, where the complex scalars commute with the generators.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct GNum<S: Scalar = f64> {
    pub g11: S,
    pub g12: S,
    pub g21: S,
    pub g22: S,
}

/// g-number with complex coordinates: the carrier of G(1,2) and G(3).
pub type CGNum = GNum<Complex64>;

/// The generator `a` (null vector, `a^2 = 0`).
pub const A_GEN: GNum = GNum { g11: 0.0, g12: 0.0, g21: 1.0, g22: 0.0 };
/// The generator `b` (null vector, `b^2 = 0`).
pub const B_GEN: GNum = GNum { g11: 0.0, g12: 1.0, g21: 0.0, g22: 0.0 };
/// The unit `1 = ba + ab`.
pub const ONE: GNum = GNum { g11: 1.0, g12: 0.0, g21: 0.0, g22: 1.0 };
/// The zero element.
pub const ZERO: GNum = GNum { g11: 0.0, g12: 0.0, g21: 0.0, g22: 0.0 };
/// `e = a + b`, square +1.
pub const E: GNum = GNum { g11: 0.0, g12: 1.0, g21: 1.0, g22: 0.0 };
/// `f = a - b`, square -1.
pub const F: GNum = GNum { g11: 0.0, g12: -1.0, g21: 1.0, g22: 0.0 };
/// `fe = 2 a^b = ab - ba`, square +1.
pub const FE: GNum = GNum { g11: -1.0, g12: 0.0, g21: 0.0, g22: 1.0 };

/// Products of the null basis `(ba, b, a, ab)` with itself; `None` is zero.
/// Row i times column j lands on basis element `TABLE[i][j]`.
const TABLE: [[Option<usize>; 4]; 4] = [
    [Some(0), Some(1), None, None],
    [None, None, Some(0), Some(1)],
    [Some(2), Some(3), None, None],
    [None, None, Some(2), Some(3)],
];

/// The three conjugations of the algebra.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Conjugation {
    /// Reverses products of generators: `(ab)^dagger = ba`; fixes the odd part.
    Reverse,
    /// Negates both generators; fixes the even part.
    Inversion,
    /// Reverse followed by inversion; `g * g.mixed()` is the determinant.
    Mixed,
}

impl<S: Scalar> GNum<S> {
    pub fn new(g11: S, g12: S, g21: S, g22: S) -> Self {
        GNum { g11, g12, g21, g22 }
    }

    pub fn zero() -> Self {
        Self::new(S::zero(), S::zero(), S::zero(), S::zero())
    }

    pub fn one() -> Self {
        Self::new(S::one(), S::zero(), S::zero(), S::one())
    }

    /// Embeds a scalar as `s * 1`.
    pub fn scalar(s: S) -> Self {
        Self::new(s, S::zero(), S::zero(), s)
    }

    pub fn gen_a() -> Self {
        Self::new(S::zero(), S::zero(), S::one(), S::zero())
    }

    pub fn gen_b() -> Self {
        Self::new(S::zero(), S::one(), S::zero(), S::zero())
    }

    pub fn e() -> Self {
        Self::new(S::zero(), S::one(), S::one(), S::zero())
    }

    pub fn f() -> Self {
        Self::new(S::zero(), -S::one(), S::one(), S::zero())
    }

    pub fn fe() -> Self {
        Self::new(-S::one(), S::zero(), S::zero(), S::one())
    }

    fn coords(&self) -> [S; 4] {
        [self.g11, self.g12, self.g21, self.g22]
    }

    fn from_coords(c: [S; 4]) -> Self {
        Self::new(c[0], c[1], c[2], c[3])
    }

    /// Largest coordinate magnitude; the scale used by relative tolerances.
    pub fn max_abs(&self) -> f64 {
        self.coords().iter().fold(0.0, |m, c| m.max(c.abs()))
    }

    pub fn scaled(&self, s: S) -> Self {
        Self::new(self.g11 * s, self.g12 * s, self.g21 * s, self.g22 * s)
    }

    /// Componentwise comparison with absolute tolerance.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        (*self - *other).max_abs() <= tol
    }

    /// Odd part: the null-vector (generator) components.
    pub fn odd_part(&self) -> Self {
        Self::new(S::zero(), self.g12, self.g21, S::zero())
    }

    /// Even part: the idempotent components.
    pub fn even_part(&self) -> Self {
        Self::new(self.g11, S::zero(), S::zero(), self.g22)
    }

    /// Splits into `(odd, even)` with `odd + even = self`.
    pub fn parts(&self) -> (Self, Self) {
        (self.odd_part(), self.even_part())
    }

    pub fn reverse(&self) -> Self {
        Self::new(self.g22, self.g12, self.g21, self.g11)
    }

    pub fn inversion(&self) -> Self {
        Self::new(self.g11, -self.g12, -self.g21, self.g22)
    }

    pub fn mixed(&self) -> Self {
        Self::new(self.g22, -self.g12, -self.g21, self.g11)
    }

    pub fn conjugate(&self, kind: Conjugation) -> Self {
        match kind {
            Conjugation::Reverse => self.reverse(),
            Conjugation::Inversion => self.inversion(),
            Conjugation::Mixed => self.mixed(),
        }
    }

    /// `g + g.mixed()` as a scalar; equals the trace of the coordinate matrix.
    pub fn trace(&self) -> S {
        self.g11 + self.g22
    }

    /// `g * g.mixed()` as a scalar; equals the determinant of the coordinate matrix.
    pub fn det(&self) -> S {
        self.g11 * self.g22 - self.g12 * self.g21
    }

    /// Multiplicative inverse `g.mixed() / det(g)`.
    ///
    /// Fails with [`Error::SingularGNumber`] when
    /// `|det| <= tol * max(1, max_abs^2)`.
    pub fn inverse(&self, tol: f64) -> Result<Self> {
        let det = self.det();
        let scale = self.max_abs();
        if det.abs() <= tol * f64::max(1.0, scale * scale) {
            return Err(Error::SingularGNumber);
        }
        Ok(self.mixed().scaled(S::one() / det))
    }

    /// Symmetric product `(fg + gf) / 2`.
    pub fn sym(&self, other: &Self) -> Self {
        (*self * *other + *other * *self).scaled(S::from_f64(0.5))
    }

    /// Skew product `(fg - gf) / 2`.
    pub fn skew(&self, other: &Self) -> Self {
        (*self * *other - *other * *self).scaled(S::from_f64(0.5))
    }

    /// Splits `fg` into `(sym, skew)` with `sym + skew = fg`.
    pub fn split_product(&self, other: &Self) -> (Self, Self) {
        (self.sym(other), self.skew(other))
    }

    /// Coordinates over the standard basis `(1, e, fe, f)`.
    pub fn std_coords(&self) -> StdCoords<S> {
        let half = S::from_f64(0.5);
        StdCoords {
            a0: (self.g22 + self.g11) * half,
            a1: (self.g21 + self.g12) * half,
            a2: (self.g22 - self.g11) * half,
            a3: (self.g21 - self.g12) * half,
        }
    }

    /// Scalar part `trace / 2`.
    pub fn scalar_part(&self) -> S {
        (self.g11 + self.g22) * S::from_f64(0.5)
    }

    /// Vector part `g - scalar_part(g)`, a combination of `e`, `fe`, `f`.
    pub fn vector_part(&self) -> Self {
        let s = self.std_coords();
        StdCoords { a0: S::zero(), ..s }.to_gnum()
    }

    /// Integer power by squaring; negative exponents go through the inverse.
    pub fn powi(&self, n: i32, tol: f64) -> Result<Self> {
        let mut base = if n < 0 { self.inverse(tol)? } else { *self };
        let mut k = n.unsigned_abs();
        let mut acc = Self::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            k >>= 1;
        }
        Ok(acc)
    }
}

impl GNum<f64> {
    /// Embeds into the complex algebra.
    pub fn to_complex(&self) -> CGNum {
        CGNum::new(
            self.g11.to_complex(),
            self.g12.to_complex(),
            self.g21.to_complex(),
            self.g22.to_complex(),
        )
    }
}

impl CGNum {
    /// Recovers a real g-number when every imaginary part is exactly zero.
    pub fn as_real(&self) -> Option<GNum> {
        let c = self.coords();
        if c.iter().all(|z| z.im == 0.0) {
            Some(GNum::new(c[0].re, c[1].re, c[2].re, c[3].re))
        } else {
            None
        }
    }
}

impl<S: Scalar> std::ops::Add for GNum<S> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(
            self.g11 + rhs.g11,
            self.g12 + rhs.g12,
            self.g21 + rhs.g21,
            self.g22 + rhs.g22,
        )
    }
}

impl<S: Scalar> std::ops::Sub for GNum<S> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(
            self.g11 - rhs.g11,
            self.g12 - rhs.g12,
            self.g21 - rhs.g21,
            self.g22 - rhs.g22,
        )
    }
}

impl<S: Scalar> std::ops::Neg for GNum<S> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.g11, -self.g12, -self.g21, -self.g22)
    }
}

impl<S: Scalar> std::ops::Mul for GNum<S> {
    type Output = Self;

    /// Bilinear expansion over the multiplication table of `{ba, b, a, ab}`.
    fn mul(self, rhs: Self) -> Self {
        let x = self.coords();
        let y = rhs.coords();
        let mut out = [S::zero(); 4];
        for (i, row) in TABLE.iter().enumerate() {
            for (j, cell) in row.iter().enumerate() {
                if let Some(k) = cell {
                    out[*k] = out[*k] + x[i] * y[j];
                }
            }
        }
        Self::from_coords(out)
    }
}

/// Coordinates `(a0, a1, a2, a3)` over the standard basis `(1, e, fe, f)`.
///
/// The vector part carries the metric `(+, +, -)`: its square is
/// `a1^2 + a2^2 - a3^2`.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct StdCoords<S: Scalar = f64> {
    pub a0: S,
    pub a1: S,
    pub a2: S,
    pub a3: S,
}

impl<S: Scalar> StdCoords<S> {
    pub fn new(a0: S, a1: S, a2: S, a3: S) -> Self {
        StdCoords { a0, a1, a2, a3 }
    }

    /// Back to null-basis coordinates; exact inverse of [`GNum::std_coords`].
    pub fn to_gnum(&self) -> GNum<S> {
        GNum::new(
            self.a0 - self.a2,
            self.a1 - self.a3,
            self.a1 + self.a3,
            self.a0 + self.a2,
        )
    }

    /// Square of the vector part, `a1^2 + a2^2 - a3^2`.
    pub fn vsq(&self) -> S {
        self.a1 * self.a1 + self.a2 * self.a2 - self.a3 * self.a3
    }
}

/// Builds a g-number from standard coordinates.
pub fn from_std(a0: f64, a1: f64, a2: f64, a3: f64) -> GNum {
    StdCoords::new(a0, a1, a2, a3).to_gnum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::DEFAULT_TOL;

    fn g(g11: f64, g12: f64, g21: f64, g22: f64) -> GNum {
        GNum::new(g11, g12, g21, g22)
    }

    #[test]
    fn generator_products() {
        assert_eq!(A_GEN * B_GEN, g(0.0, 0.0, 0.0, 1.0)); // a b = ab
        assert_eq!(g(0.0, 0.0, 0.0, 1.0) * A_GEN, A_GEN); // (ab) a = a
        assert_eq!(A_GEN * A_GEN, ZERO);
        assert_eq!(B_GEN * B_GEN, ZERO);
        assert_eq!(A_GEN * B_GEN + B_GEN * A_GEN, ONE);
    }

    #[test]
    fn one_is_identity() {
        let x = g(1.0, -2.0, 3.5, 0.25);
        assert_eq!(ONE * x, x);
        assert_eq!(x * ONE, x);
    }

    #[test]
    fn addition_examples() {
        assert_eq!(A_GEN + B_GEN, E);
        let x = g(1.0, 2.0, 3.0, 4.0);
        assert_eq!(x + x.scaled(-1.0), ZERO);
        assert_eq!(g(1.0, 2.0, 3.0, 4.0) + g(4.0, 3.0, 2.0, 1.0), g(5.0, 5.0, 5.0, 5.0));
    }

    #[test]
    fn conjugation_examples() {
        // (ab)^dagger = ba
        assert_eq!(g(0.0, 0.0, 0.0, 1.0).reverse(), g(1.0, 0.0, 0.0, 0.0));
        assert_eq!(A_GEN.inversion(), -A_GEN);
        assert_eq!(ONE.mixed(), ONE);
        // mixed = inversion of reverse
        let x = g(1.0, 2.0, 3.0, 4.0);
        assert_eq!(x.mixed(), x.reverse().inversion());
    }

    #[test]
    fn parts_examples() {
        let (o, e) = g(1.0, 2.0, 3.0, 4.0).parts();
        assert_eq!(o, g(0.0, 2.0, 3.0, 0.0));
        assert_eq!(e, g(1.0, 0.0, 0.0, 4.0));
        assert_eq!(E.parts(), (E, ZERO));
        assert_eq!(FE.parts(), (ZERO, FE));
        // odd = (g - g.inversion())/2, even = (g + g.inversion())/2
        let x = g(-1.0, 5.0, 2.0, 7.0);
        assert_eq!(x.odd_part(), (x - x.inversion()).scaled(0.5));
        assert_eq!(x.even_part(), (x + x.inversion()).scaled(0.5));
    }

    #[test]
    fn trace_and_det() {
        assert_eq!(ONE.trace(), 2.0);
        assert_eq!(g(0.0, 1.0, 1.0, 2.0).trace(), 2.0);
        assert_eq!(A_GEN.trace(), 0.0);
        assert_eq!(g(0.0, 1.0, 1.0, 2.0).det(), -1.0);
        assert_eq!(ONE.det(), 1.0);
        assert_eq!(A_GEN.det(), 0.0);
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(ONE.inverse(DEFAULT_TOL).unwrap(), ONE);
        let x = g(0.0, 1.0, 1.0, 2.0);
        let inv = x.inverse(DEFAULT_TOL).unwrap();
        assert_eq!(inv, g(-2.0, 1.0, 1.0, 0.0));
        assert_eq!(x * inv, ONE);
        assert_eq!(A_GEN.inverse(DEFAULT_TOL), Err(Error::SingularGNumber));
    }

    #[test]
    fn split_product_examples() {
        let (sym, skew) = A_GEN.split_product(&B_GEN);
        assert_eq!(sym, ONE.scaled(0.5));
        assert_eq!(skew, FE.scaled(0.5));
        let x = g(2.0, -1.0, 0.5, 3.0);
        let (s, k) = x.split_product(&x);
        assert_eq!(s, x * x);
        assert_eq!(k, ZERO);
        let (s, k) = E.split_product(&F);
        assert_eq!(s, ZERO);
        assert_eq!(k, g(1.0, 0.0, 0.0, -1.0)); // ef = ba - ab
    }

    #[test]
    fn std_coords_examples() {
        let c = g(0.0, 1.0, 1.0, 2.0).std_coords();
        assert_eq!((c.a0, c.a1, c.a2, c.a3), (1.0, 1.0, 1.0, 0.0));
        let c = g(-1.0, 1.0, -2.0, 1.0).std_coords();
        assert_eq!((c.a0, c.a1, c.a2, c.a3), (0.0, -0.5, 1.0, -1.5));
        let c = ONE.std_coords();
        assert_eq!((c.a0, c.a1, c.a2, c.a3), (1.0, 0.0, 0.0, 0.0));
        // exact round trip
        let x = g(-7.0, 3.0, 11.0, 5.0);
        assert_eq!(x.std_coords().to_gnum(), x);
    }

    #[test]
    fn standard_basis_relations() {
        assert_eq!(E * E, ONE);
        assert_eq!(F * F, -ONE);
        assert_eq!(E * F, -(F * E));
        assert_eq!(FE * FE, ONE);
        assert_eq!(F * E, FE);
        // the three vector basis elements anticommute pairwise
        for (x, y) in [(E, FE), (E, F), (FE, F)] {
            assert_eq!(x * y, -(y * x));
        }
    }

    #[test]
    fn complex_roundtrip() {
        let x = g(1.0, -2.0, 0.5, 3.0);
        assert_eq!(x.to_complex().as_real(), Some(x));
        let mut c = x.to_complex();
        c.g12 = Complex64::new(0.0, 1.0);
        assert_eq!(c.as_real(), None);
    }
}
