//! Canonical blocks, concatenation, and Kronecker-Weierstrass decomposition
//! of 2 x n matrices of linear forms.

mod block;
mod kw;
mod matrix;

use thiserror::Error;

use crate::polycore::{FieldError, PolyError};

pub use block::{
    block_ring, concat, concat_in, make_block, name_blocks, parse_block_kinds, Block, BlockKind,
};
pub use kw::{
    invariants_of_kinds, kw_decompose, kw_invariants, verify_certificate, Certificate, JordanClass,
    KWForm, KWInvariants,
};
pub use matrix::{Labeling, LinMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PencilError {
    #[error("rows have different lengths ({top} and {bottom})")]
    RaggedRows { top: usize, bottom: usize },
    #[error("matrix has no columns")]
    Empty,
    #[error("entries live in different rings")]
    RingMismatch,
    #[error("dimension mismatch")]
    DimensionMismatch,
    #[error("column {index} out of range for {ncols} columns ({labeling:?} labels)")]
    IndexOutOfRange {
        index: usize,
        ncols: usize,
        labeling: Labeling,
    },
    #[error("invalid block: {0}")]
    InvalidBlock(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("variable `{0}` is used by two blocks")]
    VariableCollision(String),
    #[error("eigenvalues outside the base field: remaining factor {factor}")]
    EigenvaluesNotInField { factor: String },
    #[error("{0}")]
    RootSearch(String),
    #[error("field too small to find a regular point of the pencil")]
    FieldTooSmall,
    #[error("could not construct an invertible transformation")]
    SingularCertificate,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

impl From<FieldError> for PencilError {
    fn from(e: FieldError) -> Self {
        PencilError::Poly(PolyError::Field(e))
    }
}
