//! Combinatorics of the pair of pants: the zonotope boundary, the coamoeba,
//! Morse data on the sphere and pearl-tree bookkeeping.

mod coamoeba;
mod morse;
mod pearl;
mod zonotope;

pub use coamoeba::{coamoeba_classify, largest_gap, CoamoebaRegion};
pub use morse::{fcells_margin, morse_data, stable_unstable_membership, GParams, GradientError, MorseCriticalPoint};
pub use pearl::{pearl_degree, validate_pearl_labels, PearlLabel, PearlReport, PearlTreeLabeling};
pub use zonotope::{expected_cell_count, zonotope_complex, ZonotopeCell, ZonotopeComplex};
