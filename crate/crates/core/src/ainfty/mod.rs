//! Finite A∞ algebras and the operations on them.
//!
//! Structure constants use Seidel's conventions: inputs are written
//! `(a_k, …, a_1)` and the relations carry the sign `(−1)^{Σ_{j≤b}(|a_j|−1)}`.

mod algebra;
mod coeff;
mod exterior;
mod hkr;
mod model_io;
mod opposite;
mod smash;
mod stasheff;

pub use algebra::{exterior_basis, wedge_algebra, wedge_sign, BasisElement, FiniteAInftyAlgebra, OpTable};
pub use coeff::{Coefficient, GroupRingElement};
pub use exterior::{exterior_normalize, supercommutativity_check, ExteriorError};
pub use hkr::{hkr_dim, hkr_pairs};
pub use model_io::{AlgebraFile, BasisRecord, EntryRecord, ModelFileError, RationalAlgebraFile};
pub use opposite::{exterior_sign_agreement, exterior_sign_exponent, opposite, opposite_sign_exponent};
pub use smash::{cyclic_block_dimensions, smash, smash_index, FiniteAbelianGroupData, SmashError};
pub use stasheff::{check_stasheff, StasheffViolation};
