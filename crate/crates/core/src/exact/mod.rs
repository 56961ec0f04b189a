//! Exact linear algebra over ℚ.

mod complex;
mod contraction;
mod echelon;
mod rational;
mod sparse;

pub use complex::ChainComplexPiece;
pub use contraction::{build_contraction, Contraction, Decomposition, Splitting};
pub use echelon::{rank, reduce, ColumnEchelon, Insertion, Reduction};
pub use rational::{ParseRationalError, Rational};
pub use sparse::{SparseMatrix, SparseVec};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("d∘d ≠ 0 starting in degree {degree}")]
    NotAComplex { degree: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("prescribed representative {0} is not a cocycle")]
    RepresentativeNotCocycle(usize),
    #[error("prescribed representative {0} is exact or dependent on earlier ones")]
    RepresentativeExact(usize),
}
