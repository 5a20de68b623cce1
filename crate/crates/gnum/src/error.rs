//! Error type shared by all modules of the crate.

use std::fmt;

/// Everything that can go wrong in the algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Error {
    /// The element has determinant (approximately) zero and no multiplicative inverse.
    SingularGNumber,
    /// A 2x2 matrix with determinant (approximately) zero cannot be inverted.
    SingularMatrix,
    /// The operation requires a pure vector (zero scalar part).
    NotAVector,
    /// The parameters do not lie on the null cone, or the element does not square to zero.
    NotNilpotent,
    /// The nilpotent is (approximately) zero and carries no direction.
    DegenerateNilpotent,
    /// The element does not square to itself.
    NotIdempotent,
    /// The idempotent is 0 or 1, which generates no relative basis.
    ScalarIdempotent,
    /// The coordinates satisfy a1^2 + a2^2 < 1; no idempotent exists there.
    OffIdempotentVariety,
    /// A parabolic element with vanishing scalar part has no exponential form.
    ZeroScalarParabolic,
    /// The operation needs a non-scalar input.
    ScalarInput,
    /// The Hermitian construction needs a nonzero vector part.
    ZeroVectorPart,
    /// An interpretation over a real algebra was asked of a genuinely complex element.
    ComplexInputForG20,
    /// The two operands live in different geometric algebras.
    SignatureMismatch,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let msg = match self {
            Error::SingularGNumber => "singular g-number: determinant is zero, no inverse exists",
            Error::SingularMatrix => "singular matrix: determinant is zero, no inverse exists",
            Error::NotAVector => "not a pure vector: scalar part is nonzero",
            Error::NotNilpotent => "not a nilpotent: square is nonzero or parameters leave the null cone",
            Error::DegenerateNilpotent => "degenerate nilpotent: the element is zero",
            Error::NotIdempotent => "not an idempotent: square differs from the element",
            Error::ScalarIdempotent => "scalar idempotent (0 or 1) admits no relative basis",
            Error::OffIdempotentVariety => "a1^2 + a2^2 < 1: no idempotent with these coordinates",
            Error::ZeroScalarParabolic => "parabolic element with zero scalar part has no Euler form",
            Error::ScalarInput => "input is a scalar; a non-scalar element is required",
            Error::ZeroVectorPart => "zero vector part: the Hermitian construction needs a direction",
            Error::ComplexInputForG20 => "G(2,0) interpretation requires a real element",
            Error::SignatureMismatch => "operands belong to different algebra signatures",
        };
        f.write_str(msg)
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
