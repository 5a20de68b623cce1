//! Vector analysis on the `(e, fe, f)` frame, metric `(+, +, -)`.
//!
//! The scalar and cross products have determinant formulas; both agree with
//! the algebra-level symmetric and skew products of the embedded vectors,
//! which is what the tests pin down.

use crate::algebra::{from_std, GNum};
use crate::error::{Error, Result};

/// Coordinates over `(e, fe, f)`.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct Vec3 {
    pub x1: f64,
    pub x2: f64,
    pub x3: f64,
}

impl Vec3 {
    pub fn new(x1: f64, x2: f64, x3: f64) -> Self {
        Vec3 { x1, x2, x3 }
    }

    /// The pure-vector g-number with these coordinates.
    pub fn embed(&self) -> GNum {
        from_std(0.0, self.x1, self.x2, self.x3)
    }

    /// Reads back a pure vector; [`Error::NotAVector`] if the scalar part
    /// exceeds `tol * max(1, |g|)`.
    pub fn try_from_gnum(g: &GNum, tol: f64) -> Result<Self> {
        let st = g.std_coords();
        if st.a0.abs() > tol * f64::max(1.0, g.max_abs()) {
            return Err(Error::NotAVector);
        }
        Ok(Vec3::new(st.a1, st.a2, st.a3))
    }

    pub fn scaled(&self, s: f64) -> Self {
        Vec3::new(self.x1 * s, self.x2 * s, self.x3 * s)
    }

    pub fn max_abs(&self) -> f64 {
        self.x1.abs().max(self.x2.abs()).max(self.x3.abs())
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        (self.x1 - other.x1).abs() <= tol
            && (self.x2 - other.x2).abs() <= tol
            && (self.x3 - other.x3).abs() <= tol
    }
}

impl std::ops::Add for Vec3 {
    type Output = Vec3;
    fn add(self, rhs: Vec3) -> Vec3 {
        Vec3::new(self.x1 + rhs.x1, self.x2 + rhs.x2, self.x3 + rhs.x3)
    }
}

impl std::ops::Sub for Vec3 {
    type Output = Vec3;
    fn sub(self, rhs: Vec3) -> Vec3 {
        Vec3::new(self.x1 - rhs.x1, self.x2 - rhs.x2, self.x3 - rhs.x3)
    }
}

impl std::ops::Neg for Vec3 {
    type Output = Vec3;
    fn neg(self) -> Vec3 {
        Vec3::new(-self.x1, -self.x2, -self.x3)
    }
}

/// Bilinear form `x1 y1 + x2 y2 - x3 y3`; the scalar part of the symmetric
/// product of the embedded vectors.
pub fn scalar_prod(x: &Vec3, y: &Vec3) -> f64 {
    x.x1 * y.x1 + x.x2 * y.x2 - x.x3 * y.x3
}

/// Formal determinant with symbolic first row `(e, fe, -f)`; equals half the
/// commutator of the embedded vectors.
pub fn cross_prod(x: &Vec3, y: &Vec3) -> Vec3 {
    Vec3::new(
        x.x2 * y.x3 - x.x3 * y.x2,
        -(x.x1 * y.x3 - x.x3 * y.x1),
        -(x.x1 * y.x2 - x.x2 * y.x1),
    )
}

/// Determinant of the coordinate rows; `x o (y (x) z)` in either bracketing.
pub fn triple_scalar(x: &Vec3, y: &Vec3, z: &Vec3) -> f64 {
    x.x1 * (y.x2 * z.x3 - y.x3 * z.x2) - x.x2 * (y.x1 * z.x3 - y.x3 * z.x1)
        + x.x3 * (y.x1 * z.x2 - y.x2 * z.x1)
}

/// `x (x) (y (x) z)`, computed as the algebra half-commutator and checked
/// on the spot against `(x o y) z - (x o z) y`.
pub fn triple_cross(x: &Vec3, y: &Vec3, z: &Vec3) -> Vec3 {
    let inner = cross_prod(y, z);
    let sk = x.embed().skew(&inner.embed());
    let st = sk.std_coords();
    let algebra = Vec3::new(st.a1, st.a2, st.a3);
    let formula = z.scaled(scalar_prod(x, y)) - y.scaled(scalar_prod(x, z));
    let scale = f64::max(1.0, algebra.max_abs().max(formula.max_abs()));
    assert!(
        algebra.approx_eq(&formula, 1e-9 * scale),
        "triple product identity must hold: {algebra:?} vs {formula:?}"
    );
    algebra
}

#[cfg(test)]
mod tests {
    use super::*;

    const E1: Vec3 = Vec3 { x1: 1.0, x2: 0.0, x3: 0.0 };
    const E2: Vec3 = Vec3 { x1: 0.0, x2: 1.0, x3: 0.0 };
    const E3: Vec3 = Vec3 { x1: 0.0, x2: 0.0, x3: 1.0 };

    #[test]
    fn scalar_prod_examples() {
        assert_eq!(scalar_prod(&E3, &E3), -1.0); // f^2 = -1
        assert_eq!(scalar_prod(&E1, &E3), 0.0);
        let x = Vec3::new(2.0, -1.0, 3.0);
        let y = Vec3::new(1.0, 4.0, -2.0);
        // scalar part of the symmetric product
        let sym = x.embed().sym(&y.embed());
        assert_eq!(sym.std_coords().a0, scalar_prod(&x, &y));
    }

    #[test]
    fn cross_prod_examples() {
        assert_eq!(cross_prod(&E1, &E2), Vec3::new(0.0, 0.0, -1.0)); // e (x) fe = -f
        assert_eq!(cross_prod(&E2, &E3), Vec3::new(1.0, 0.0, 0.0)); // fe (x) f = e
        let x = Vec3::new(3.0, -2.0, 5.0);
        assert_eq!(cross_prod(&x, &x), Vec3::new(0.0, 0.0, 0.0));
        // antisymmetry
        let y = Vec3::new(-1.0, 7.0, 2.0);
        assert_eq!(cross_prod(&x, &y), -cross_prod(&y, &x));
        // equals the half-commutator of the embeddings
        let sk = x.embed().skew(&y.embed());
        assert_eq!(cross_prod(&x, &y).embed(), sk);
    }

    #[test]
    fn triple_scalar_examples() {
        assert_eq!(triple_scalar(&E1, &E2, &E3), 1.0);
        let x = Vec3::new(2.0, 0.0, 1.0);
        assert_eq!(triple_scalar(&x, &x, &E3), 0.0);
        let y = Vec3::new(1.0, 1.0, -1.0);
        let z = Vec3::new(0.0, 3.0, 2.0);
        // both bracketings agree
        assert_eq!(triple_scalar(&x, &y, &z), scalar_prod(&x, &cross_prod(&y, &z)));
        assert_eq!(triple_scalar(&x, &y, &z), scalar_prod(&cross_prod(&x, &y), &z));
    }

    #[test]
    fn triple_cross_examples() {
        // e (x) (e (x) f) = (e o e) f - (e o f) e = f
        assert_eq!(triple_cross(&E1, &E1, &E3), E3);
        // f (x) (f (x) e) = (f o f) e = -e
        assert_eq!(triple_cross(&E3, &E3, &E1), -E1);
        let x = Vec3::new(4.0, -1.0, 2.0);
        let y = Vec3::new(1.0, 5.0, -3.0);
        assert_eq!(triple_cross(&x, &y, &y), Vec3::new(0.0, 0.0, 0.0));
    }

    #[test]
    fn embed_roundtrip() {
        let x = Vec3::new(1.5, -2.0, 0.25);
        let g = x.embed();
        assert_eq!(Vec3::try_from_gnum(&g, 1e-9).unwrap(), x);
        assert_eq!(
            Vec3::try_from_gnum(&crate::algebra::ONE, 1e-9),
            Err(Error::NotAVector)
        );
    }
}
