//! Cells `U_{JKL}` of the boundary of `Z_n`, the image of `[0,1]^{n+2}` in `M_ℝ`.
//!
//! `U_{JKL}` fixes `θ_j = 0` on `J` and `θ_k = 1` on `K` and lets the `L`
//! coordinates vary, oriented by ascending `L`. Its boundary is
//! `Σ_i (−1)^i (U_{J, K∪l_i} − U_{J∪l_i, K})` over `L = {l_0 < l_1 < …}`.

use std::collections::HashMap;

use crate::exact::{ChainComplexPiece, ExactError, Rational, SparseMatrix};
use crate::lattice::SubsetK;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZonotopeCell {
    pub j: SubsetK,
    pub k: SubsetK,
    pub l: SubsetK,
}

impl ZonotopeCell {
    pub fn dim(&self) -> usize {
        self.l.len()
    }
}

#[derive(Clone, Debug)]
pub struct ZonotopeComplex {
    pub n: usize,
    /// Cells grouped by dimension `0..=n`.
    pub cells: Vec<Vec<ZonotopeCell>>,
    /// `boundaries[d-1]`: `C_d → C_{d-1}` for `d = 1..=n`.
    pub boundaries: Vec<SparseMatrix>,
}

pub fn zonotope_complex(n: usize) -> ZonotopeComplex {
    assert!(n >= 1, "the zonotope complex needs n ≥ 1");
    let full = SubsetK::full(n);
    let mut cells: Vec<Vec<ZonotopeCell>> = vec![Vec::new(); n + 1];
    for j in SubsetK::all(n) {
        for k in SubsetK::all(n) {
            if j.is_empty() || k.is_empty() || !j.is_disjoint(k) {
                continue;
            }
            let l = SubsetK(full.0 & !(j.0 | k.0));
            cells[l.len()].push(ZonotopeCell { j, k, l });
        }
    }
    for c in &mut cells {
        c.sort();
    }
    let index: Vec<HashMap<ZonotopeCell, usize>> =
        cells.iter().map(|cs| cs.iter().enumerate().map(|(i, c)| (*c, i)).collect()).collect();
    let mut boundaries = Vec::new();
    for d in 1..=n {
        let mut entries = Vec::new();
        for (col, cell) in cells[d].iter().enumerate() {
            for (i, l) in cell.l.iter().enumerate() {
                let bit = SubsetK::singleton(l);
                let rest = SubsetK(cell.l.0 & !bit.0);
                let sign = if i % 2 == 0 { 1 } else { -1 };
                let to_k = ZonotopeCell { j: cell.j, k: cell.k.union(bit), l: rest };
                let to_j = ZonotopeCell { j: cell.j.union(bit), k: cell.k, l: rest };
                entries.push((index[d - 1][&to_k], col, Rational::from_integer(sign)));
                entries.push((index[d - 1][&to_j], col, Rational::from_integer(-sign)));
            }
        }
        boundaries.push(SparseMatrix::from_entries(cells[d - 1].len(), cells[d].len(), entries));
    }
    ZonotopeComplex { n, cells, boundaries }
}

impl ZonotopeComplex {
    pub fn counts(&self) -> Vec<usize> {
        self.cells.iter().map(Vec::len).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.counts().iter().enumerate().map(|(d, &c)| if d % 2 == 0 { c as i64 } else { -(c as i64) }).sum()
    }

    /// Whether every composite `∂_{d-1} ∂_d` vanishes.
    pub fn boundary_squares_to_zero(&self) -> bool {
        self.boundaries.windows(2).all(|w| w[0].mul(&w[1]).is_zero())
    }

    pub fn cochain_complex(&self) -> Result<ChainComplexPiece, ExactError> {
        ChainComplexPiece::from_boundaries(self.counts(), &self.boundaries)
    }

    /// Rational Betti numbers in dimensions `0..=n`.
    pub fn homology_ranks(&self) -> Result<Vec<usize>, ExactError> {
        Ok(self.cochain_complex()?.homology_ranks())
    }
}

/// `C(n+2, l)(2^{n+2−l} − 2)` cells of dimension `l`.
pub fn expected_cell_count(n: usize, l: usize) -> usize {
    let m = n + 2;
    let mut binom = 1usize;
    for i in 0..l {
        binom = binom * (m - i) / (i + 1);
    }
    binom * ((1usize << (m - l)) - 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hexagon() {
        let z = zonotope_complex(1);
        assert_eq!(z.counts(), vec![6, 6]);
        assert_eq!(z.homology_ranks().unwrap(), vec![1, 1]);
    }

    #[test]
    fn counts_match_formula() {
        for n in 1..5 {
            let z = zonotope_complex(n);
            for (l, &c) in z.counts().iter().enumerate() {
                assert_eq!(c, expected_cell_count(n, l));
            }
            assert!(z.boundary_squares_to_zero());
        }
    }
}
