use super::{rank, ExactError, SparseMatrix};

/// A finite cochain complex `V_0 → V_1 → … → V_m` over ℚ.
///
/// `maps[i]` is the differential `V_i → V_{i+1}` as a `dims[i+1] × dims[i]` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplexPiece {
    dims: Vec<usize>,
    maps: Vec<SparseMatrix>,
}

impl ChainComplexPiece {
    pub fn new(dims: Vec<usize>, maps: Vec<SparseMatrix>) -> Result<Self, ExactError> {
        if dims.is_empty() || maps.len() + 1 != dims.len() {
            return Err(ExactError::DimensionMismatch(format!(
                "{} spaces need {} maps, got {}",
                dims.len(),
                dims.len().saturating_sub(1),
                maps.len()
            )));
        }
        for (i, m) in maps.iter().enumerate() {
            if m.cols() != dims[i] || m.rows() != dims[i + 1] {
                return Err(ExactError::DimensionMismatch(format!(
                    "map {i} is {}x{}, expected {}x{}",
                    m.rows(),
                    m.cols(),
                    dims[i + 1],
                    dims[i]
                )));
            }
        }
        for i in 1..maps.len() {
            if !maps[i].mul(&maps[i - 1]).is_zero() {
                return Err(ExactError::NotAComplex { degree: i - 1 });
            }
        }
        Ok(ChainComplexPiece { dims, maps })
    }

    /// Builds the cochain complex dual to a chain complex given by boundary maps
    /// `∂_l : C_l → C_{l-1}` (`boundaries[l-1]`), so that degree `l` cochains sit at index `l`.
    pub fn from_boundaries(dims: Vec<usize>, boundaries: &[SparseMatrix]) -> Result<Self, ExactError> {
        let maps = boundaries.iter().map(SparseMatrix::transpose).collect();
        Self::new(dims, maps)
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn maps(&self) -> &[SparseMatrix] {
        &self.maps
    }

    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn homology_ranks(&self) -> Vec<usize> {
        let ranks: Vec<usize> = self.maps.iter().map(rank).collect();
        (0..self.dims.len())
            .map(|i| {
                let out = ranks.get(i).copied().unwrap_or(0);
                let inc = if i == 0 { 0 } else { ranks[i - 1] };
                self.dims[i] - out - inc
            })
            .collect()
    }
}
