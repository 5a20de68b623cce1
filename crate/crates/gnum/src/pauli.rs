//! The complex algebra and its geometric readings: G(2,0), G(1,2), G(3).
//!
//! Complex scalars commute with the generators, so every operation of the
//! real algebra extends verbatim. On top of that this module provides the
//! Pauli vectors `e1, e2, e3`, the Hermitian adjoint (conjugate transpose
//! through the matrix bridge), the interpretation maps onto geometric
//! algebras of signature (2,0), (1,2) and (3,0), an independent Cayley-table
//! product for those signatures, and the closed-form spectral decomposition
//! of Hermitian elements.

use crate::algebra::{CGNum, E, ONE};
use crate::error::{Error, Result};
use crate::matrix::{to_matrix, Mat2};
use crate::scalar::{Complex64, Scalar};
use crate::structure::{ConjugationSide, RelativeBasis, SpectralData, SpectralKind};

const I: Complex64 = Complex64::new(0.0, 1.0);

/// The Pauli vector `e_k`: `e1 = a + b`, `e2 = i (a - b)`, `e3 = ba - ab`.
pub fn pauli_vector(k: usize) -> CGNum {
    match k {
        1 => CGNum::e(),
        2 => CGNum::f().scaled(I),
        3 => CGNum::new(
            Complex64::new(1.0, 0.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(-1.0, 0.0),
        ),
        _ => panic!("Pauli index must be 1, 2, or 3"),
    }
}

/// The Pauli matrix `sigma_k`, written out entrywise.
pub fn pauli_matrix(k: usize) -> Mat2<Complex64> {
    let z = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);
    match k {
        1 => Mat2::new(z, one, one, z),
        2 => Mat2::new(z, -I, I, z),
        3 => Mat2::new(one, z, z, -one),
        _ => panic!("Pauli index must be 1, 2, or 3"),
    }
}

/// Conjugate transpose through the matrix bridge; an involution fixing
/// `e1`, `e2`, `e3` and negating `i`.
pub fn hermitian_adjoint(g: &CGNum) -> CGNum {
    CGNum::new(g.g11.conj(), g.g21.conj(), g.g12.conj(), g.g22.conj())
}

/// Target geometric algebra of an interpretation.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Signature {
    /// G(2,0): real, generators `e1, e2` squaring to +1.
    G20,
    /// G(1,2): generators `e1, f1, f2` squaring to +1, -1, -1.
    G12,
    /// G(3): generators `e1, e2, e3` squaring to +1.
    G30,
}

impl Signature {
    /// Squares of the generators, in order.
    pub fn metric(&self) -> &'static [f64] {
        match self {
            Signature::G20 => &[1.0, 1.0],
            Signature::G12 => &[1.0, -1.0, -1.0],
            Signature::G30 => &[1.0, 1.0, 1.0],
        }
    }

    /// Basis blades as generator bitmasks, in grade-then-lexicographic order.
    pub fn blade_masks(&self) -> &'static [u8] {
        match self {
            Signature::G20 => &[0b00, 0b01, 0b10, 0b11],
            Signature::G12 | Signature::G30 => &[0, 1, 2, 4, 3, 5, 6, 7],
        }
    }

    pub fn blade_labels(&self) -> &'static [&'static str] {
        match self {
            Signature::G20 => &["1", "e1", "e2", "e12"],
            Signature::G12 => &["1", "e1", "f1", "f2", "e1f1", "e1f2", "f1f2", "e1f1f2"],
            Signature::G30 => &["1", "e1", "e2", "e3", "e12", "e13", "e23", "e123"],
        }
    }

    pub fn dim(&self) -> usize {
        self.blade_masks().len()
    }

    fn index_of_mask(&self, mask: u8) -> usize {
        self.blade_masks().iter().position(|m| *m == mask).unwrap()
    }

    pub fn name(&self) -> &'static str {
        match self {
            Signature::G20 => "G20",
            Signature::G12 => "G12",
            Signature::G30 => "G30",
        }
    }
}

/// Real coordinates over the blade basis of one signature.
#[derive(Clone, PartialEq, Debug)]
pub struct AlgebraCoords {
    pub signature: Signature,
    /// One coordinate per blade, in [`Signature::blade_labels`] order.
    pub coords: Vec<f64>,
}

impl AlgebraCoords {
    pub fn new(signature: Signature, coords: Vec<f64>) -> Self {
        assert_eq!(coords.len(), signature.dim());
        AlgebraCoords { signature, coords }
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.signature == other.signature
            && self
                .coords
                .iter()
                .zip(&other.coords)
                .all(|(x, y)| (x - y).abs() <= tol)
    }
}

/// Sign of merging two sorted blades: the parity of generator transpositions.
fn reorder_sign(a: u8, b: u8) -> f64 {
    let mut a = a >> 1;
    let mut swaps = 0u32;
    while a != 0 {
        swaps += (a & b).count_ones();
        a >>= 1;
    }
    if swaps.is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

fn blade_mul(a: u8, b: u8, metric: &[f64]) -> (f64, u8) {
    let mut sign = reorder_sign(a, b);
    let common = a & b;
    for (i, sq) in metric.iter().enumerate() {
        if common & (1 << i) != 0 {
            sign *= sq;
        }
    }
    (sign, a ^ b)
}

/// Signed product table of one signature: entry `(i, j)` says which blade
/// `blade_i * blade_j` lands on and with what sign.
pub type CayleyTable = Vec<Vec<(f64, usize)>>;

fn build_cayley_table(sig: Signature) -> CayleyTable {
    let masks = sig.blade_masks();
    let metric = sig.metric();
    masks
        .iter()
        .map(|a| {
            masks
                .iter()
                .map(|b| {
                    let (sign, mask) = blade_mul(*a, *b, metric);
                    (sign, sig.index_of_mask(mask))
                })
                .collect()
        })
        .collect()
}

impl Signature {
    /// The generated Cayley table, built once and shared read-only.
    pub fn cayley_table(&self) -> &'static CayleyTable {
        use std::sync::OnceLock;
        static G20: OnceLock<CayleyTable> = OnceLock::new();
        static G12: OnceLock<CayleyTable> = OnceLock::new();
        static G30: OnceLock<CayleyTable> = OnceLock::new();
        let cell = match self {
            Signature::G20 => &G20,
            Signature::G12 => &G12,
            Signature::G30 => &G30,
        };
        cell.get_or_init(|| build_cayley_table(*self))
    }
}

/// Geometric product straight from the generated Cayley table; the reference
/// route the interpretation maps are tested against.
pub fn clifford_product(x: &AlgebraCoords, y: &AlgebraCoords) -> Result<AlgebraCoords> {
    if x.signature != y.signature {
        return Err(Error::SignatureMismatch);
    }
    let sig = x.signature;
    let table = sig.cayley_table();
    let mut out = vec![0.0; sig.dim()];
    for (i, xi) in x.coords.iter().enumerate() {
        if *xi == 0.0 {
            continue;
        }
        for (j, yj) in y.coords.iter().enumerate() {
            if *yj == 0.0 {
                continue;
            }
            let (sign, target) = table[i][j];
            out[target] += sign * xi * yj;
        }
    }
    Ok(AlgebraCoords::new(sig, out))
}

/// Reads a complex g-number as an element of the target algebra.
///
/// The three maps are fixed by `e -> e1` together with, per signature:
/// `ef -> e2, f -> e12` (G20); `f -> f1, i e1 f1 -> f2` (G12);
/// `i f -> e2, e f -> e3` (G30). In every case the pseudoscalar lands on `i`.
/// Since the internal standard basis carries `fe = -ef`, the `fe` coordinate
/// maps with a sign flip; multiplicativity against [`clifford_product`] pins
/// that sign.
pub fn interpret(g: &CGNum, sig: Signature) -> Result<AlgebraCoords> {
    let st = g.std_coords();
    let (x0, y0) = (st.a0.re, st.a0.im);
    let (x1, y1) = (st.a1.re, st.a1.im);
    let (x2, y2) = (st.a2.re, st.a2.im);
    let (x3, y3) = (st.a3.re, st.a3.im);
    let coords = match sig {
        Signature::G20 => {
            if y0 != 0.0 || y1 != 0.0 || y2 != 0.0 || y3 != 0.0 {
                return Err(Error::ComplexInputForG20);
            }
            vec![x0, x1, -x2, x3]
        }
        Signature::G12 => vec![x0, x1, x3, -y2, -x2, y3, y1, y0],
        Signature::G30 => vec![x0, x1, y3, -x2, -y2, x3, y1, y0],
    };
    Ok(AlgebraCoords::new(sig, coords))
}

/// Inverse of [`interpret`]; a real-linear bijection.
pub fn interpret_inverse(c: &AlgebraCoords) -> CGNum {
    let v = &c.coords;
    let ((x0, y0), (x1, y1), (x2, y2), (x3, y3)) = match c.signature {
        Signature::G20 => ((v[0], 0.0), (v[1], 0.0), (-v[2], 0.0), (v[3], 0.0)),
        Signature::G12 => ((v[0], v[7]), (v[1], v[6]), (-v[4], -v[3]), (v[2], v[5])),
        Signature::G30 => ((v[0], v[7]), (v[1], v[6]), (-v[3], -v[4]), (v[5], v[2])),
    };
    crate::algebra::StdCoords::new(
        Complex64::new(x0, y0),
        Complex64::new(x1, y1),
        Complex64::new(x2, y2),
        Complex64::new(x3, y3),
    )
    .to_gnum()
}

/// The Hermitian element `a0 + u1 e1 + u2 e2 + u3 e3`.
pub fn hermitian_element(a0: f64, u: [f64; 3]) -> CGNum {
    let mut h = CGNum::scalar(Complex64::new(a0, 0.0));
    for (k, uk) in u.iter().enumerate() {
        h = h + pauli_vector(k + 1).scaled(Complex64::new(*uk, 0.0));
    }
    h
}

/// Spectral decomposition of the Hermitian element `a0 + u . e`.
///
/// Eigenvalues are `a0 +- rho` with `rho = |u|`; the eigenpotent basis comes
/// from conjugating the canonical one by the closed-form `g`, which divides
/// by `rho -+ u3`, so an axis-aligned `u` (where `rho = |u3|`) falls back to
/// the canonical pair, role-swapped when `u3 < 0`.
pub fn hermitian_spectral(a0: f64, u: [f64; 3], tol: f64) -> Result<SpectralData> {
    let [u1, u2, u3] = u;
    let rho = (u1 * u1 + u2 * u2 + u3 * u3).sqrt();
    if rho <= tol {
        return Err(Error::ZeroVectorPart);
    }
    let lp = a0 + rho;
    let lm = a0 - rho;

    let g = if (rho - u3.abs()).abs() <= tol * rho {
        if u3 >= 0.0 {
            ONE.to_complex()
        } else {
            E.to_complex()
        }
    } else {
        let w = Complex64::new(u1, u2);
        crate::matrix::from_matrix(&Mat2::new(
            w / Complex64::new(rho - u3, 0.0),
            Complex64::new(1.0, 0.0),
            -w / Complex64::new(rho + u3, 0.0),
            Complex64::new(1.0, 0.0),
        ))
    };
    let gi = g.inverse(tol)?;
    let a = CGNum::gen_a();
    let b = CGNum::gen_b();
    let basis = RelativeBasis {
        ba: gi * (b * a) * g,
        b: gi * b * g,
        a: gi * a * g,
        ab: gi * (a * b) * g,
        side: ConjugationSide::GOnRight,
    };
    let h = hermitian_element(a0, u);
    let rel = to_matrix(&(g * h * gi));
    Ok(SpectralData {
        kind: SpectralKind::Diagonalizable,
        lambda1: Complex64::new(lp, 0.0),
        lambda2: Complex64::new(lm, 0.0),
        projectors: Some((basis.ba, basis.ab)),
        nilpart: None,
        basis: Some(basis),
        relative_matrix: Some(rel),
    })
}
