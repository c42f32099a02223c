//! Minimum distance: exhaustive search, sampled upper bounds and the
//! constructive weight-i(t+1)+1 codewords of Γ6^(i).

mod enumerate;
mod witness;

pub use enumerate::{min_distance_exact, min_distance_upper, ExactOptions, SearchMode};
pub use witness::{
    build_theorem1_witness, coset_partition, theorem1_check, CosetPartition, Theorem1Report, Theorem1Witness,
};

use serde::Serialize;
use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::chains::ChainError;
use crate::codes::CodeError;
use crate::matrix::MatrixError;

#[derive(Debug, Error)]
pub enum DistanceError {
    #[error("q^k = {q}^{k} exceeds the enumeration cap {cap}")]
    CapExceeded { q: u32, k: usize, cap: u64 },
    #[error("generator matrix must be over a prime field")]
    NotPrimeField,
    #[error("order {i} outside 1 < i < q-1 for q = {q}")]
    OrderOutOfRange { q: u32, i: u32 },
    #[error("no nonsingular choice of groups")]
    NoWitness,
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Chain(#[from] ChainError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Exhaustive,
    SampledUpperBound,
    Witness,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DistanceResult {
    pub n: usize,
    pub k: usize,
    pub d: Option<usize>,
    pub method: Method,
    pub enumerated: u64,
    pub elapsed_s: f64,
}

/// deg G_full + 1.
pub fn designed_distance(deg_full: usize) -> usize {
    deg_full + 1
}
