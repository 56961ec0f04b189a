pub mod ainfty;
pub mod exact;
pub mod lattice;
pub mod minimal;
pub mod pants;
pub mod rnc;
pub mod weyl;

pub use exact::Rational;
