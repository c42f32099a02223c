//! Finite fields GF(q^m) and polynomials over them.

mod family;
mod field;
mod poly;

pub use family::{code_field, goppa_family_polynomial, t_of, GoppaFamily};
pub use field::{make_field, make_field_with_cap, ElemOp, Field, FieldElement, FieldId, DEFAULT_FIELD_CAP};
pub use poly::Poly;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum AlgebraError {
    #[error("q = {0} is not prime")]
    NotPrime(u32),
    #[error("extension degree must be at least 1, got {0}")]
    ExtensionDegree(u32),
    #[error("GF({q}^{m}) exceeds the field cap of {cap} elements")]
    CapExceeded { q: u32, m: u32, cap: u64 },
    #[error("element of {found} used in {expected}")]
    FieldMismatch { expected: FieldId, found: FieldId },
    #[error("inverse of zero")]
    ZeroInverse,
    #[error("polynomial is not invertible modulo the given modulus")]
    NotInvertible,
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("families are defined for odd prime q, got q = {0}")]
    UnsupportedQ(u32),
    #[error("value {0} is not an element of {1}")]
    InvalidElement(u32, FieldId),
    #[error("coordinate vector does not describe an element of {0}")]
    InvalidDigits(FieldId),
    #[error("cannot parse element text {0:?}")]
    InvalidText(String),
}
