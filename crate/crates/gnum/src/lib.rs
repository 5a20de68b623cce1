//! Computational engine for the algebra `R(a, b)` generated by two
//! nilpotents `a`, `b` with `ab + ba = 1`, together with:
//!
//! - exact arithmetic, three conjugations, trace/determinant/inverse
//!   ([`algebra`]);
//! - the bridge to dense 2x2 real and complex matrices, plus an independent
//!   matrix oracle for differential testing ([`matrix`]);
//! - classification into hyperbolic, parabolic and Euclidean elements, Euler
//!   exponential forms, nilpotent and idempotent canonical constructions,
//!   regrading, and spectral/eigenpotent decomposition ([`structure`]);
//! - the complex extension with Pauli vectors, Hermitian spectral theory,
//!   and interpretation maps onto G(2,0), G(1,2) and G(3) ([`pauli`]);
//! - vector-analysis identities on the `(e, fe, f)` frame ([`vector`]).
//!
//! All values are immutable and every operation is a pure function, so
//! everything here is safe to share and send across threads.

pub mod algebra;
pub mod error;
pub mod matrix;
pub mod pauli;
pub mod scalar;
pub mod structure;
pub mod vector;

pub use algebra::{from_std, CGNum, Conjugation, GNum, StdCoords, A_GEN, B_GEN, E,F, FE, ONE, ZERO};
pub use error::{Error, Result};
pub use matrix::{
    extract_matrix_sandwich, from_matrix, mat_add, mat_conj_transpose, mat_det, mat_eig, mat_inv,
    mat_mul, mat_trace, to_matrix, Mat2,
};
pub use pauli::{
    clifford_product, hermitian_adjoint, hermitian_element, hermitian_spectral, interpret,
    interpret_inverse, pauli_matrix, pauli_vector, AlgebraCoords, Signature,
};
pub use scalar::{Complex64, Scalar};
pub use structure::{
    canonical_form, char_poly, classify, conjugator_for_nilpotent, eigenvalues, eigenpotents,
    euler_form, euler_reconstruct, exp_vector, idempotent_to_canonical, is_idempotent,
    is_nilpotent, make_idempotent, make_nilpotent, nullcone_map_point, regrade, Classification,
    ConjugationSide, EulerClass, EulerForm, GClass, MappingFamily, NilpotentParams, RelativeBasis,
    SpectralData, SpectralKind,
};
pub use vector::{cross_prod, scalar_prod, triple_cross, triple_scalar, Vec3};

/// Relative tolerance for singularity and classification decisions:
/// a quantity counts as zero when it is below `DEFAULT_TOL` times the
/// squared (or plain, for linear quantities) scale of its operands.
pub const DEFAULT_TOL: f64 = 1e-9;
