//! Bounded complexes of modules, projective models, derived homs and
//! spectral sequences of filtered complexes.
//!
//! Complexes are cochain complexes with `(C[m])^k = C^{m+k}`. A projective
//! model of `N` is a bounded complex of projectives `Q` with a
//! quasi-isomorphism `Q -> N`; `RHom(N, A)` is computed as `Hom(Q, A)` with
//! `Hom^n(Q, A) = Hom(Q^{-n}, A)`.

mod complex;
mod projective;
mod spectral;

use thiserror::Error;

use crate::linalg::{Field, Matrix, Subspace};

pub use complex::{subquotient, ChainComplex, ChainMap, ComplexData};
pub use projective::{
    ext_dims, lift_chain_map, precompose_matrix, proj_resolution, projective_model, rhom_graded,
    ProjComplex, ProjModel, DEFAULT_DEPTH_BOUND,
};
pub use spectral::{FilteredComplex, SSPage};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HomologyError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("differentials do not compose to zero at degree {0}")]
    NotAComplex(i64),
    #[error("bad matrix entry `{0}`")]
    Parse(String),
    #[error("projective model did not terminate within {0} degrees")]
    Unbounded(usize),
    #[error("map cannot be lifted: {0}")]
    NoLift(String),
}

/// A bounded cochain complex of vector spaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VecComplex<F> {
    pub lo: i64,
    pub dims: Vec<usize>,
    /// `diffs[i]` is a `dims[i + 1] x dims[i]` matrix.
    pub diffs: Vec<Matrix<F>>,
}

impl<F: Field> VecComplex<F> {
    pub fn dim(&self, k: i64) -> usize {
        if k < self.lo || k >= self.lo + self.dims.len() as i64 {
            0
        } else {
            self.dims[(k - self.lo) as usize]
        }
    }

    pub fn diff(&self, k: i64) -> Matrix<F> {
        let i = k - self.lo;
        if i >= 0 && (i as usize) < self.diffs.len() {
            self.diffs[i as usize].clone()
        } else {
            Matrix::zeros(self.dim(k + 1), self.dim(k))
        }
    }

    pub fn degrees(&self) -> std::ops::Range<i64> {
        self.lo..self.lo + self.dims.len() as i64
    }

    pub fn cohomology_dim(&self, k: i64) -> usize {
        self.dim(k) - self.diff(k).rank() - self.diff(k - 1).rank()
    }

    pub fn cycles(&self, k: i64) -> Subspace<F> {
        Subspace::kernel(&self.diff(k))
    }

    pub fn boundaries(&self, k: i64) -> Subspace<F> {
        Subspace::column_space(&self.diff(k - 1))
    }
}
