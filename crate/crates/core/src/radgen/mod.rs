//! Explicit generating sets up to radical for ideals of 2-minors.

mod bruns;
mod corner;
mod jordan;
mod nilpotent;
mod schmitt_vogel;
mod scroll;
mod syzygy;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::groebner::{equal_radical_with, GroebnerError, IdealPresentation, Limits};
use crate::pencil::{LinMatrix, PencilError};
use crate::polycore::{PolyError, Polynomial, RingRef};

pub use bruns::{bruns_index_sets, bruns_poset_polys, bruns_polys_for, MinorPoset};
pub use corner::{corner_zero_generators, corner_zero_monomial_partition};
pub use jordan::{jordan_generators, jordan_q_partition};
pub use nilpotent::{nilpotent_extend, nilpotent_witness};
pub use schmitt_vogel::{schmitt_vogel, SVPartition};
pub use scroll::{scroll_sci, scroll_sci_in};
pub use syzygy::{koszul_syzygy, plucker_identity, plucker_syzygy, syzygy_reduce};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RadgenError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("subsets do not cover the ground set: `{0}` is missing")]
    UnionMismatch(String),
    #[error("the first subset must have exactly one element, it has {0}")]
    FirstNotSingleton(usize),
    #[error("level {level}: no earlier element divides the product of `{p}` and `{p2}`")]
    ConditionViolated { level: usize, p: String, p2: String },
    #[error("the supplied vector is not a syzygy of the first polynomials")]
    SyzygyInvalid,
    #[error("the last polynomial to the given power is not the stated combination of the syzygy")]
    PowerNotInSyzygyIdeal,
    #[error("variable `{0}` already exists")]
    VariableCollision(String),
    #[error("block {0} is not a Jordan block")]
    NotJordan(String),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Pencil(#[from] PencilError),
}

/// Which construction produced a witness set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Construction {
    SchmittVogel,
    BrunsPoset,
    ScrollSci,
    JordanQ,
    CornerZero,
    SyzygyReduce,
    NilpotentExtend,
    /// The single minor of a two-column matrix.
    Principal,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "state", content = "reason")]
pub enum Verification {
    Unverified,
    Verified,
    Failed,
    Skipped(String),
}

/// Polynomials claimed to generate `target` up to radical.
#[derive(Clone, Debug)]
pub struct WitnessSet {
    pub polys: Vec<Polynomial>,
    pub target: IdealPresentation,
    /// The matrix whose 2-minors generate `target`, when there is one.
    pub matrix: Option<LinMatrix>,
    pub construction: Construction,
    pub status: Verification,
}

/// Serialized form of a witness set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessReport {
    pub construction: Construction,
    pub count: usize,
    pub polynomials: Vec<String>,
    pub verification: Verification,
}

impl WitnessSet {
    pub fn new(polys: Vec<Polynomial>, target: IdealPresentation, construction: Construction) -> Self {
        WitnessSet {
            polys,
            target,
            matrix: None,
            construction,
            status: Verification::Unverified,
        }
    }

    /// Witness for the 2-minors of `matrix`.
    pub fn for_matrix(polys: Vec<Polynomial>, matrix: &LinMatrix, construction: Construction) -> Result<Self, RadgenError> {
        let target = IdealPresentation::new(matrix.ring(), matrix.minor_generators())?;
        let mut w = WitnessSet::new(polys, target, construction);
        w.matrix = Some(matrix.clone());
        Ok(w)
    }

    pub fn ring(&self) -> &RingRef {
        self.target.ring()
    }

    pub fn count(&self) -> usize {
        self.polys.len()
    }

    pub fn presentation(&self) -> Result<IdealPresentation, RadgenError> {
        Ok(IdealPresentation::new(self.ring(), self.polys.iter().cloned())?)
    }

    /// Decides radical equality with the target and records the outcome.
    pub fn verify(&mut self, limits: &Limits) -> Result<bool, RadgenError> {
        let ok = equal_radical_with(&self.target, &self.presentation()?, limits)?;
        self.status = if ok { Verification::Verified } else { Verification::Failed };
        Ok(ok)
    }

    pub fn texts(&self) -> Vec<String> {
        self.polys.iter().map(|p| p.to_string()).collect()
    }

    pub fn report(&self) -> WitnessReport {
        WitnessReport {
            construction: self.construction,
            count: self.count(),
            polynomials: self.texts(),
            verification: self.status.clone(),
        }
    }
}

#[cfg(test)]
mod tests;
