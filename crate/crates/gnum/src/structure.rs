//! Classification, Euler forms, nilpotent and idempotent constructions,
//! regrading, and spectral decomposition of g-numbers.
//!
//! Every element splits as `g = a0 + v` with `v` a vector over `(e, fe, f)`.
//! The sign of `v^2 = a1^2 + a2^2 - a3^2` decides everything else: the Euler
//! form, the eigenvalue field, and which canonical shape the element takes.

use crate::algebra::{from_std, CGNum, GNum, E, ONE};
use crate::error::{Error, Result};
use crate::matrix::{to_matrix, Mat2};
use crate::scalar::{Complex64, Scalar};

/// Sign class of the vector-part square.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GClass {
    Hyperbolic,
    Parabolic,
    Euclidean,
}

/// Result of [`classify`].
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct Classification {
    pub class: GClass,
    /// The value `v^2`.
    pub vsq: f64,
    /// Whether `det g` is zero to tolerance.
    pub singular: bool,
}

/// Which exponential canonical form an element takes.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EulerClass {
    /// `sign * rho * exp(phi * u)` with `u^2 = +1` (determinant positive).
    HypScalarLike,
    /// `sign * rho * u * exp(phi * u)` with `u^2 = +1` (determinant negative).
    HypVectorLike,
    /// `rho * exp(phi * n)` with `n^2 = 0`, truncating to `rho * (1 + phi*n)`.
    Parabolic,
    /// `rho * exp(phi * i_v)` with `i_v^2 = -1`.
    Euclidean,
}

/// Tagged exponential form; [`euler_reconstruct`] maps it back.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct EulerForm {
    pub class: EulerClass,
    /// Magnitude: `sqrt(|det|)` for hyperbolic and Euclidean, `a0` for parabolic.
    pub rho: f64,
    /// Angle or rapidity; the exponent coefficient in the parabolic case.
    pub phi: f64,
    /// Overall sign, `+1` or `-1`.
    pub sign: f64,
    /// Unit axis (`u`, `i_v`) or the nilpotent vector part.
    pub axis: GNum,
}

/// Parameters `(n2, n3, n4)` of the nilpotent `n2*b + n3*a + 2*n4*a^b`,
/// constrained to the null cone `n2*n3 + n4^2 = 0`.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct NilpotentParams {
    pub n2: f64,
    pub n3: f64,
    pub n4: f64,
}

impl NilpotentParams {
    pub fn new(n2: f64, n3: f64, n4: f64) -> Self {
        NilpotentParams { n2, n3, n4 }
    }

    /// The redundant first matrix entry, always `-n4`.
    pub fn n1(&self) -> f64 {
        -self.n4
    }
}

/// Which way a conjugation was applied when a relative basis was built.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ConjugationSide {
    /// `x -> g * x * g^-1`
    GOnLeft,
    /// `x -> g^-1 * x * g`
    GOnRight,
}

/// Relative null basis `{BA, B, A, AB}` carried out of the canonical one
/// by a conjugation. Satisfies the same relations: `A^2 = B^2 = 0`,
/// `A o B = 1/2`, `BA + AB = 1`, and `BA`, `AB` are annihilating idempotents.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct RelativeBasis<S: Scalar = f64> {
    pub ba: GNum<S>,
    pub b: GNum<S>,
    pub a: GNum<S>,
    pub ab: GNum<S>,
    pub side: ConjugationSide,
}

impl<S: Scalar> RelativeBasis<S> {
    /// Checks every defining relation to the given tolerance.
    pub fn holds(&self, tol: f64) -> bool {
        let one = GNum::<S>::one();
        let zero = GNum::<S>::zero();
        let half = GNum::<S>::scalar(S::from_f64(0.5));
        (self.a * self.a).approx_eq(&zero, tol)
            && (self.b * self.b).approx_eq(&zero, tol)
            && self.a.sym(&self.b).approx_eq(&half, tol)
            && (self.ba + self.ab).approx_eq(&one, tol)
            && (self.ba * self.ba).approx_eq(&self.ba, tol)
            && (self.ab * self.ab).approx_eq(&self.ab, tol)
            && (self.ba * self.ab).approx_eq(&zero, tol)
            && (self.ab * self.ba).approx_eq(&zero, tol)
            && (self.b * self.a).approx_eq(&self.ba, tol)
            && (self.a * self.b).approx_eq(&self.ab, tol)
    }
}

impl RelativeBasis<f64> {
    pub fn to_complex(&self) -> RelativeBasis<Complex64> {
        RelativeBasis {
            ba: self.ba.to_complex(),
            b: self.b.to_complex(),
            a: self.a.to_complex(),
            ab: self.ab.to_complex(),
            side: self.side,
        }
    }
}

/// Shape of the spectral decomposition.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SpectralKind {
    /// `g = lambda1 * v+ + lambda2 * v-` with idempotent projectors.
    Diagonalizable,
    /// `g = a0 + n` with `n` nilpotent; no projectors exist.
    Jordan,
    /// `g` is a scalar; both eigenvalues coincide and every element projects.
    Scalar,
}

/// Eigenvalues plus whichever canonical data the class admits.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectralData {
    pub kind: SpectralKind,
    pub lambda1: Complex64,
    pub lambda2: Complex64,
    /// `(v+, v-)` when diagonalizable; real elements have zero imaginary parts.
    pub projectors: Option<(CGNum, CGNum)>,
    /// The nilpotent summand in the Jordan case.
    pub nilpart: Option<GNum>,
    /// Eigenpotent basis, when one was constructed.
    pub basis: Option<RelativeBasis<Complex64>>,
    /// Coordinate matrix of the input relative to `basis`.
    pub relative_matrix: Option<Mat2<Complex64>>,
}

fn scale1(g: &GNum) -> f64 {
    f64::max(1.0, g.max_abs())
}

fn scale2(g: &GNum) -> f64 {
    let m = g.max_abs();
    f64::max(1.0, m * m)
}

/// Splits by the sign of `v^2`, with `|v^2| <= tol * max(1, |g|^2)` counting
/// as parabolic; the same scale decides the singular flag.
pub fn classify(g: &GNum, tol: f64) -> Classification {
    let vsq = g.std_coords().vsq();
    let eps = tol * scale2(g);
    let class = if vsq > eps {
        GClass::Hyperbolic
    } else if vsq < -eps {
        GClass::Euclidean
    } else {
        GClass::Parabolic
    };
    Classification {
        class,
        vsq,
        singular: g.det().abs() <= eps,
    }
}

/// Closed-form exponential `exp(t*v)` of a pure vector.
///
/// Branches on the sign of `v^2`: cosh/sinh, the truncated nilpotent series,
/// or cos/sin.
pub fn exp_vector(v: &GNum, t: f64, tol: f64) -> Result<GNum> {
    let st = v.std_coords();
    if st.a0.abs() > tol * scale1(v) {
        return Err(Error::NotAVector);
    }
    let q = st.vsq();
    let eps = tol * scale2(v);
    if q > eps {
        let s = q.sqrt();
        Ok(ONE.scaled((t * s).cosh()) + v.scaled((t * s).sinh() / s))
    } else if q < -eps {
        let s = (-q).sqrt();
        Ok(ONE.scaled((t * s).cos()) + v.scaled((t * s).sin() / s))
    } else {
        Ok(ONE + v.scaled(t))
    }
}

/// Canonical exponential form of a non-singular element.
pub fn euler_form(g: &GNum, tol: f64) -> Result<EulerForm> {
    let c = classify(g, tol);
    let st = g.std_coords();
    let a0 = st.a0;
    let v = g.vector_part();
    match c.class {
        GClass::Parabolic => {
            if a0.abs() <= tol * scale1(g) {
                return Err(Error::ZeroScalarParabolic);
            }
            Ok(EulerForm {
                class: EulerClass::Parabolic,
                rho: a0,
                phi: 1.0 / a0,
                sign: 1.0,
                axis: v,
            })
        }
        GClass::Hyperbolic => {
            if c.singular {
                return Err(Error::SingularGNumber);
            }
            let sigma = c.vsq.sqrt();
            let axis = v.scaled(1.0 / sigma);
            let det = g.det();
            if det > 0.0 {
                let sign = a0.signum();
                let rho = det.sqrt();
                Ok(EulerForm {
                    class: EulerClass::HypScalarLike,
                    rho,
                    phi: (sign * sigma / rho).asinh(),
                    sign,
                    axis,
                })
            } else {
                let rho = (-det).sqrt();
                Ok(EulerForm {
                    class: EulerClass::HypVectorLike,
                    rho,
                    phi: (a0 / rho).asinh(),
                    sign: 1.0,
                    axis,
                })
            }
        }
        GClass::Euclidean => {
            if c.singular {
                return Err(Error::SingularGNumber);
            }
            let sigma = (-c.vsq).sqrt();
            Ok(EulerForm {
                class: EulerClass::Euclidean,
                rho: g.det().sqrt(),
                phi: sigma.atan2(a0),
                sign: 1.0,
                axis: v.scaled(1.0 / sigma),
            })
        }
    }
}

/// Evaluates the exponential form back into the algebra.
pub fn euler_reconstruct(e: &EulerForm) -> GNum {
    match e.class {
        EulerClass::HypScalarLike => {
            (ONE.scaled(e.phi.cosh()) + e.axis.scaled(e.phi.sinh())).scaled(e.sign * e.rho)
        }
        EulerClass::HypVectorLike => {
            (ONE.scaled(e.phi.sinh()) + e.axis.scaled(e.phi.cosh())).scaled(e.sign * e.rho)
        }
        EulerClass::Parabolic => (ONE + e.axis.scaled(e.phi)).scaled(e.sign * e.rho),
        EulerClass::Euclidean => {
            (ONE.scaled(e.phi.cos()) + e.axis.scaled(e.phi.sin())).scaled(e.sign * e.rho)
        }
    }
}

/// The nilpotent `n2*b + n3*a + 2*n4*a^b`, coordinates `(-n4, n2, n3, n4)`.
pub fn make_nilpotent(p: NilpotentParams, tol: f64) -> Result<GNum> {
    let s = p.n2.abs().max(p.n3.abs()).max(p.n4.abs());
    if (p.n2 * p.n3 + p.n4 * p.n4).abs() > tol * f64::max(1.0, s * s) {
        return Err(Error::NotNilpotent);
    }
    Ok(GNum::new(-p.n4, p.n2, p.n3, p.n4))
}

pub fn is_nilpotent(g: &GNum, tol: f64) -> bool {
    (*g * *g).max_abs() <= tol * scale2(g)
}

pub fn is_idempotent(g: &GNum, tol: f64) -> bool {
    (*g * *g - *g).max_abs() <= tol * scale2(g)
}

/// A non-singular `g` with `g * a * g^-1 = n`.
///
/// When the `b` coordinate of `n` is nonzero the answer is the element with
/// matrix `[[0, n2], [1, n4]]`. Otherwise `n` is first carried through
/// `e * n * e` (which swaps the roles of the generators), solved there, and
/// the conjugators composed.
pub fn conjugator_for_nilpotent(n: &GNum, tol: f64) -> Result<GNum> {
    if !is_nilpotent(n, tol) {
        return Err(Error::NotNilpotent);
    }
    let eps = tol * scale1(n);
    if n.g12.abs().max(n.g21.abs()) <= eps {
        return Err(Error::DegenerateNilpotent);
    }
    if n.g12.abs() > eps {
        Ok(GNum::new(0.0, n.g12, 1.0, n.g22))
    } else {
        let m = E * *n * E;
        let g = GNum::new(0.0, m.g12, 1.0, m.g22);
        Ok(E * g)
    }
}

/// The idempotent `(1 + a1*e + a2*fe + a3*f)/2` with
/// `a3 = branch * sqrt(a1^2 + a2^2 - 1)`.
pub fn make_idempotent(a1: f64, a2: f64, branch: f64) -> Result<GNum> {
    let r = a1 * a1 + a2 * a2;
    if r < 1.0 {
        return Err(Error::OffIdempotentVariety);
    }
    let a3 = branch.signum() * (r - 1.0).sqrt();
    Ok(from_std(0.5, 0.5 * a1, 0.5 * a2, 0.5 * a3))
}

fn rotation<S: Scalar>() -> GNum<S> {
    // exp(e), a fixed hyperbolic rotation used to escape degenerate positions
    let c = S::from_f64(1.0_f64.cosh());
    let s = S::from_f64(1.0_f64.sinh());
    GNum::new(c, s, s, c)
}

fn rotation_inv<S: Scalar>() -> GNum<S> {
    let c = S::from_f64(1.0_f64.cosh());
    let s = S::from_f64(1.0_f64.sinh());
    GNum::new(c, -s, -s, c)
}

/// Core of [`idempotent_to_canonical`], shared with the complex spectral path.
/// Assumes `p` is a non-scalar idempotent.
fn canonicalize_idempotent<S: Scalar>(p: &GNum<S>, tol: f64) -> Result<(GNum<S>, RelativeBasis<S>)> {
    let rot = rotation::<S>();
    let rot_inv = rotation_inv::<S>();
    let mut cur = *p;
    for steps in 0..4 {
        let st = cur.std_coords();
        let two = S::from_f64(2.0);
        let (al1, al2, al3) = (st.a1 * two, st.a2 * two, st.a3 * two);
        let scale = f64::max(1.0, al1.abs().max(al2.abs()).max(al3.abs()));
        if (al3 - al1).abs() > tol * scale {
            let mut g = GNum::new(S::one() - al2, al1 - al3, S::one() + al2, -al1 + al3);
            for _ in 0..steps {
                g = g * rot;
            }
            let gi = g.inverse(tol)?;
            let a = GNum::<S>::gen_a();
            let b = GNum::<S>::gen_b();
            let basis = RelativeBasis {
                ba: gi * (b * a) * g,
                b: gi * b * g,
                a: gi * a * g,
                ab: gi * (a * b) * g,
                side: ConjugationSide::GOnRight,
            };
            return Ok((g, basis));
        }
        cur = rot * cur * rot_inv;
    }
    // three successive rotations cannot all sit on the degenerate hyperplane
    unreachable!("idempotent stayed degenerate under repeated rotation")
}

/// A `g` with `g * P * g^-1 = ba`, plus the relative basis `g^-1 {.} g`
/// whose `BA` element is `P` itself.
pub fn idempotent_to_canonical(p: &GNum, tol: f64) -> Result<(GNum, RelativeBasis<f64>)> {
    if !is_idempotent(p, tol) {
        return Err(Error::NotIdempotent);
    }
    if p.max_abs() <= tol || (*p - ONE).max_abs() <= tol {
        return Err(Error::ScalarIdempotent);
    }
    canonicalize_idempotent(p, tol)
}

/// Carries the canonical basis to `g {.} g^-1`; the regrading of the algebra
/// induced by a non-singular element.
pub fn regrade(g: &GNum, tol: f64) -> Result<RelativeBasis<f64>> {
    let gi = g.inverse(tol)?;
    let a = crate::algebra::A_GEN;
    let b = crate::algebra::B_GEN;
    Ok(RelativeBasis {
        ba: *g * (b * a) * gi,
        b: *g * b * gi,
        a: *g * a * gi,
        ab: *g * (a * b) * gi,
        side: ConjugationSide::GOnLeft,
    })
}

/// Coefficients `(c1, c0)` of the characteristic polynomial
/// `x^2 + c1*x + c0 = (x - a0)^2 - v^2`, i.e. `c1 = -trace`, `c0 = det`.
pub fn char_poly(g: &GNum) -> (f64, f64) {
    (-g.trace(), g.det())
}

/// Roots `a0 +- sqrt(v^2)`; a conjugate pair `(a0 - i s, a0 + i s)` when
/// `v^2 < 0`.
pub fn eigenvalues(g: &GNum) -> (Complex64, Complex64) {
    let st = g.std_coords();
    let vsq = st.vsq();
    if vsq >= 0.0 {
        let s = vsq.sqrt();
        (
            Complex64::new(st.a0 + s, 0.0),
            Complex64::new(st.a0 - s, 0.0),
        )
    } else {
        let s = (-vsq).sqrt();
        (Complex64::new(st.a0, -s), Complex64::new(st.a0, s))
    }
}

fn complex_projectors(v: &GNum, sigma: f64) -> (CGNum, CGNum) {
    // (1 +- i*vhat)/2 for Euclidean vhat = v/sigma
    let i = Complex64::new(0.0, 1.0);
    let vhat = v.scaled(1.0 / sigma).to_complex();
    let one = CGNum::one();
    let half = Complex64::new(0.5, 0.0);
    (
        (one + vhat.scaled(i)).scaled(half),
        (one - vhat.scaled(i)).scaled(half),
    )
}

/// Canonical spectral shape: projector pair, Jordan split, or scalar.
pub fn canonical_form(g: &GNum, tol: f64) -> SpectralData {
    let c = classify(g, tol);
    let st = g.std_coords();
    let a0 = st.a0;
    let v = g.vector_part();
    match c.class {
        GClass::Hyperbolic => {
            let sigma = c.vsq.sqrt();
            let vhat = v.scaled(1.0 / sigma);
            let vp = (ONE + vhat).scaled(0.5);
            let vm = (ONE - vhat).scaled(0.5);
            SpectralData {
                kind: SpectralKind::Diagonalizable,
                lambda1: Complex64::new(a0 + sigma, 0.0),
                lambda2: Complex64::new(a0 - sigma, 0.0),
                projectors: Some((vp.to_complex(), vm.to_complex())),
                nilpart: None,
                basis: None,
                relative_matrix: None,
            }
        }
        GClass::Euclidean => {
            let sigma = (-c.vsq).sqrt();
            let (vp, vm) = complex_projectors(&v, sigma);
            SpectralData {
                kind: SpectralKind::Diagonalizable,
                lambda1: Complex64::new(a0, -sigma),
                lambda2: Complex64::new(a0, sigma),
                projectors: Some((vp, vm)),
                nilpart: None,
                basis: None,
                relative_matrix: None,
            }
        }
        GClass::Parabolic => {
            if v.max_abs() <= tol * scale1(g) {
                SpectralData {
                    kind: SpectralKind::Scalar,
                    lambda1: Complex64::new(a0, 0.0),
                    lambda2: Complex64::new(a0, 0.0),
                    projectors: None,
                    nilpart: None,
                    basis: None,
                    relative_matrix: None,
                }
            } else {
                SpectralData {
                    kind: SpectralKind::Jordan,
                    lambda1: Complex64::new(a0, 0.0),
                    lambda2: Complex64::new(a0, 0.0),
                    projectors: None,
                    nilpart: Some(v),
                    basis: None,
                    relative_matrix: None,
                }
            }
        }
    }
}

/// Spectral decomposition with an explicit eigenpotent basis.
///
/// Diagonalizable input yields a relative basis whose `B`, `A` satisfy
/// `f*B = lambda1*B` and `f*A = lambda2*A`, and in which the matrix of `f`
/// is `diag(lambda1, lambda2)`. Parabolic non-scalar input yields the basis
/// in which the matrix of `f` is the Jordan block `[[a0, 1], [0, a0]]`.
pub fn eigenpotents(f: &GNum, tol: f64) -> Result<SpectralData> {
    let c = classify(f, tol);
    let st = f.std_coords();
    let a0 = st.a0;
    let v = f.vector_part();
    match c.class {
        GClass::Hyperbolic => {
            let sigma = c.vsq.sqrt();
            let vhat = v.scaled(1.0 / sigma);
            let vp = (ONE + vhat).scaled(0.5);
            let vm = (ONE - vhat).scaled(0.5);
            let (g, basis) = canonicalize_idempotent(&vp, tol)?;
            let rel = to_matrix(&(g * *f * g.inverse(tol)?));
            Ok(SpectralData {
                kind: SpectralKind::Diagonalizable,
                lambda1: Complex64::new(a0 + sigma, 0.0),
                lambda2: Complex64::new(a0 - sigma, 0.0),
                projectors: Some((vp.to_complex(), vm.to_complex())),
                nilpart: None,
                basis: Some(basis.to_complex()),
                relative_matrix: Some(rel.to_complex()),
            })
        }
        GClass::Euclidean => {
            let sigma = (-c.vsq).sqrt();
            let (vp, vm) = complex_projectors(&v, sigma);
            let (g, basis) = canonicalize_idempotent(&vp, tol)?;
            let fc = f.to_complex();
            let rel = to_matrix(&(g * fc * g.inverse(tol)?));
            Ok(SpectralData {
                kind: SpectralKind::Diagonalizable,
                lambda1: Complex64::new(a0, -sigma),
                lambda2: Complex64::new(a0, sigma),
                projectors: Some((vp, vm)),
                nilpart: None,
                basis: Some(basis),
                relative_matrix: Some(rel),
            })
        }
        GClass::Parabolic => {
            if v.max_abs() <= tol * scale1(f) {
                return Err(Error::ScalarInput);
            }
            // g^-1 * b * g = n for g = e * h^-1, where h * a * h^-1 = n
            let h = conjugator_for_nilpotent(&v, tol)?;
            let g = E * h.inverse(tol)?;
            let gi = g.inverse(tol)?;
            let a = crate::algebra::A_GEN;
            let b = crate::algebra::B_GEN;
            let basis = RelativeBasis {
                ba: gi * (b * a) * g,
                b: gi * b * g,
                a: gi * a * g,
                ab: gi * (a * b) * g,
                side: ConjugationSide::GOnRight,
            };
            let rel = to_matrix(&(g * *f * gi));
            Ok(SpectralData {
                kind: SpectralKind::Jordan,
                lambda1: Complex64::new(a0, 0.0),
                lambda2: Complex64::new(a0, 0.0),
                projectors: None,
                nilpart: Some(v),
                basis: Some(basis.to_complex()),
                relative_matrix: Some(rel.to_complex()),
            })
        }
    }
}

/// The three families of null-cone mappings sampled by the CSV emitter.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MappingFamily {
    Hyperbolic,
    Parabolic,
    Euclidean,
}

/// Relative generators `(A(t), B(t))` for the family's one-parameter group:
/// `exp(t e)` hyperbolic, `1 + t b` parabolic, `exp(t f)` Euclidean.
pub fn nullcone_map_point(family: MappingFamily, t: f64) -> (GNum, GNum) {
    let tol = crate::DEFAULT_TOL;
    let g = match family {
        MappingFamily::Hyperbolic => exp_vector(&E, t, tol).expect("e is a vector"),
        MappingFamily::Parabolic => ONE + crate::algebra::B_GEN.scaled(t),
        MappingFamily::Euclidean => exp_vector(&crate::algebra::F, t, tol).expect("f is a vector"),
    };
    let basis = regrade(&g, tol).expect("family elements have unit determinant");
    (basis.a, basis.b)
}
