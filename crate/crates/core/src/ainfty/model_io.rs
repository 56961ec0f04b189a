//! Serializable form of a [`FiniteAInftyAlgebra`].

use serde::{Deserialize, Serialize};

use super::{BasisElement, Coefficient, FiniteAInftyAlgebra};
use crate::exact::Rational;
use crate::lattice::{LatticeVector, SubsetK};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisRecord {
    pub label: String,
    /// 1-based indices of the exterior label, if any.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subset: Option<Vec<usize>>,
    pub degree: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub qdegree: Option<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryRecord<C> {
    /// Basis indices written as `(a_k, …, a_1)`.
    pub inputs: Vec<usize>,
    pub output: usize,
    pub coefficient: C,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlgebraFile<C> {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    pub basis: Vec<BasisRecord>,
    pub entries: Vec<EntryRecord<C>>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModelFileError {
    #[error("entry {entry} refers to basis index {index}, but the basis has {dim} elements")]
    IndexOutOfRange { entry: usize, index: usize, dim: usize },
    #[error("basis element {0} has an invalid subset")]
    BadSubset(usize),
}

impl<C: Coefficient + Serialize> AlgebraFile<C> {
    pub fn from_algebra(alg: &FiniteAInftyAlgebra<C>, n: Option<usize>) -> Self {
        let basis = alg
            .basis
            .iter()
            .map(|b| BasisRecord {
                label: b.label.clone(),
                subset: b.subset.map(SubsetK::indices),
                degree: b.degree,
                weight: b.weight.as_ref().map(|w| w.0.clone()),
                qdegree: b.qdegree.clone(),
            })
            .collect();
        let entries = alg
            .entries()
            .map(|(ins, o, c)| EntryRecord { inputs: ins.clone(), output: o, coefficient: c.clone() })
            .collect();
        AlgebraFile { n, basis, entries }
    }
}

impl<C: Coefficient> AlgebraFile<C> {
    pub fn to_algebra(&self) -> Result<FiniteAInftyAlgebra<C>, ModelFileError> {
        let dim = self.basis.len();
        let mut basis = Vec::with_capacity(dim);
        for (i, b) in self.basis.iter().enumerate() {
            let subset = match &b.subset {
                None => None,
                Some(idx) => {
                    if idx.iter().any(|&j| j == 0 || j > 30) {
                        return Err(ModelFileError::BadSubset(i));
                    }
                    Some(SubsetK(idx.iter().fold(0u32, |acc, &j| acc | 1 << (j - 1))))
                }
            };
            basis.push(BasisElement {
                label: b.label.clone(),
                degree: b.degree,
                weight: b.weight.clone().map(LatticeVector),
                qdegree: b.qdegree.clone(),
                subset,
            });
        }
        let mut alg = FiniteAInftyAlgebra::new(basis);
        for (e, rec) in self.entries.iter().enumerate() {
            for &index in rec.inputs.iter().chain(std::iter::once(&rec.output)) {
                if index >= dim {
                    return Err(ModelFileError::IndexOutOfRange { entry: e, index, dim });
                }
            }
            alg.add_entry(rec.inputs.clone(), rec.output, rec.coefficient.clone());
        }
        Ok(alg)
    }
}

pub type RationalAlgebraFile = AlgebraFile<Rational>;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ainfty::wedge_algebra;

    #[test]
    fn json_roundtrip() {
        let alg = wedge_algebra(1);
        let file = AlgebraFile::from_algebra(&alg, Some(1));
        let text = serde_json::to_string(&file).unwrap();
        let back: RationalAlgebraFile = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_algebra().unwrap(), alg);
    }

    #[test]
    fn out_of_range_index_is_rejected() {
        let mut file = AlgebraFile::from_algebra(&wedge_algebra(1), Some(1));
        file.entries[0].output = 99;
        assert!(matches!(file.to_algebra(), Err(ModelFileError::IndexOutOfRange { .. })));
    }
}
