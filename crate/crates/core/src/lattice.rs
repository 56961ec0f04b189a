//! The lattices `M̃ = ℤ^{n+2}` and `M = M̃ / ℤ·𝟙`, subset vectors `e_K`, and gradings.
//!
//! Coordinates are 0-based internally (bit `j` of a [`SubsetK`] is the index `j+1`
//! in mathematical notation); `Display` prints 1-based indices.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::exact::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LatticeError {
    #[error("nvec · e_[n+2] = {got}, expected {expected}")]
    BadVolumeForm { got: i64, expected: i64 },
    #[error("expected a vector of length {expected}, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("subset {bits:#b} has elements outside [{m}]")]
    OutOfRange { bits: u32, m: usize },
}

/// A subset of `[n+2]` stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SubsetK(pub u32);

impl SubsetK {
    pub const EMPTY: SubsetK = SubsetK(0);

    pub fn new(bits: u32, n: usize) -> Result<Self, LatticeError> {
        let m = n + 2;
        if m < 32 && bits >> m != 0 {
            return Err(LatticeError::OutOfRange { bits, m });
        }
        Ok(SubsetK(bits))
    }

    pub fn full(n: usize) -> Self {
        SubsetK((1u32 << (n + 2)) - 1)
    }

    pub fn singleton(j: usize) -> Self {
        SubsetK(1 << j)
    }

    /// From 1-based indices.
    pub fn from_indices(idx: &[usize], n: usize) -> Result<Self, LatticeError> {
        let mut bits = 0u32;
        for &i in idx {
            if i == 0 || i > n + 2 {
                return Err(LatticeError::OutOfRange { bits: 1u32.checked_shl(i as u32).unwrap_or(0), m: n + 2 });
            }
            bits |= 1 << (i - 1);
        }
        Ok(SubsetK(bits))
    }

    /// 1-based indices in ascending order.
    pub fn indices(self) -> Vec<usize> {
        self.iter().map(|j| j + 1).collect()
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, j: usize) -> bool {
        self.0 >> j & 1 == 1
    }

    /// 0-based elements in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..32).filter(move |j| bits >> j & 1 == 1)
    }

    pub fn complement(self, n: usize) -> SubsetK {
        SubsetK(!self.0 & SubsetK::full(n).0)
    }

    pub fn union(self, other: SubsetK) -> SubsetK {
        SubsetK(self.0 | other.0)
    }

    pub fn is_disjoint(self, other: SubsetK) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_subset(self, other: SubsetK) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn indicator(self, n: usize) -> LatticeVector {
        LatticeVector((0..n + 2).map(|j| i64::from(self.contains(j))).collect())
    }

    /// All subsets of `[n+2]` in increasing bitmask order.
    pub fn all(n: usize) -> impl Iterator<Item = SubsetK> {
        (0..1u32 << (n + 2)).map(SubsetK)
    }
}

impl fmt::Display for SubsetK {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.indices().iter().map(ToString::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl fmt::Debug for SubsetK {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// An element of `M̃ = ℤ^{n+2}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LatticeVector(pub Vec<i64>);

impl LatticeVector {
    pub fn zero(n: usize) -> Self {
        LatticeVector(vec![0; n + 2])
    }

    pub fn ones(n: usize) -> Self {
        LatticeVector(vec![1; n + 2])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn dot(&self, other: &LatticeVector) -> i64 {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn add(&self, other: &LatticeVector) -> LatticeVector {
        LatticeVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &LatticeVector) -> LatticeVector {
        LatticeVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> LatticeVector {
        LatticeVector(self.0.iter().map(|a| -a).collect())
    }

    pub fn shift(&self, c: i64) -> LatticeVector {
        LatticeVector(self.0.iter().map(|a| a + c).collect())
    }

    /// `Some(q)` if every entry equals `q`.
    pub fn as_multiple_of_ones(&self) -> Option<i64> {
        let first = *self.0.first()?;
        self.0.iter().all(|&x| x == first).then_some(first)
    }
}

/// A class in `M`, stored by its representative with minimum entry 0.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LatticeClass(LatticeVector);

impl LatticeClass {
    pub fn of(v: &LatticeVector) -> Self {
        let min = v.0.iter().copied().min().unwrap_or(0);
        LatticeClass(v.shift(-min))
    }

    pub fn zero(n: usize) -> Self {
        LatticeClass(LatticeVector::zero(n))
    }

    pub fn representative(&self) -> &LatticeVector {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0 .0.iter().all(|&x| x == 0)
    }

    pub fn add(&self, other: &LatticeClass) -> LatticeClass {
        LatticeClass::of(&self.0.add(&other.0))
    }

    pub fn neg(&self) -> LatticeClass {
        LatticeClass::of(&self.0.neg())
    }
}

pub fn weight(k: SubsetK, n: usize) -> LatticeClass {
    LatticeClass::of(&k.indicator(n))
}

/// The default grading vector `(n+1, 0, …, 0)`.
pub fn default_nvec(n: usize) -> LatticeVector {
    let mut v = vec![0; n + 2];
    v[0] = n as i64 + 1;
    LatticeVector(v)
}

pub fn integer_grading(k: SubsetK, nvec: &LatticeVector) -> Result<i64, LatticeError> {
    let m = nvec.len();
    if m < 2 {
        return Err(LatticeError::WrongLength { expected: 3, got: m });
    }
    let n = m - 2;
    let vol = nvec.sum();
    if vol != n as i64 + 1 {
        return Err(LatticeError::BadVolumeForm { got: vol, expected: n as i64 + 1 });
    }
    let g = 2 * nvec.dot(&k.indicator(n)) - k.len() as i64;
    assert_eq!(g.rem_euclid(2), (k.len() % 2) as i64);
    Ok(g)
}

pub fn fractional_grading(k: SubsetK, n: usize) -> Rational {
    Rational::new((n * k.len()) as i64, n as i64 + 2)
}

/// `|K|` mod `n+2`, i.e. the image of `e_K` under `u ↦ 𝟙·u`.
pub fn cover_residue(k: SubsetK, n: usize) -> u32 {
    let r = (k.len() % (n + 2)) as u32;
    if !k.is_empty() && k != SubsetK::full(n) {
        assert_ne!(r, 0);
    }
    r
}

/// The integer `q` with `Σ e_{K_j} = e_{K_0} + q·𝟙` in `M̃`, if one exists with `q ≥ 0`.
pub fn homogeneity_defect(k0: SubsetK, inputs: &[SubsetK], n: usize) -> Option<i64> {
    let q = m_tilde_defect(k0, inputs, n)?;
    (q >= 0).then_some(q)
}

/// As [`homogeneity_defect`] but also returning negative `q`.
pub fn m_tilde_defect(k0: SubsetK, inputs: &[SubsetK], n: usize) -> Option<i64> {
    let mut v = LatticeVector::zero(n).sub(&k0.indicator(n));
    for k in inputs {
        v = v.add(&k.indicator(n));
    }
    v.as_multiple_of_ones()
}

/// `Σ e_{K_j} ≡ e_{K_0}` in `M`.
pub fn weight_admissible(k0: SubsetK, inputs: &[SubsetK], n: usize) -> bool {
    m_tilde_defect(k0, inputs, n).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights_of_extreme_subsets_vanish() {
        for n in 1..5 {
            assert!(weight(SubsetK::EMPTY, n).is_zero());
            assert!(weight(SubsetK::full(n), n).is_zero());
        }
        assert_eq!(weight(SubsetK::singleton(0), 1).representative().0, vec![1, 0, 0]);
    }

    #[test]
    fn weight_plus_complement_is_zero() {
        for n in 1..5 {
            for k in SubsetK::all(n) {
                assert!(weight(k, n).add(&weight(k.complement(n), n)).is_zero());
            }
        }
    }

    #[test]
    fn integer_grading_examples() {
        for n in 1..5 {
            let nv = default_nvec(n);
            assert_eq!(integer_grading(SubsetK::full(n), &nv), Ok(n as i64));
            assert_eq!(integer_grading(SubsetK::EMPTY, &nv), Ok(0));
        }
        let nv = LatticeVector(vec![3, 0, 0, 0]);
        assert_eq!(integer_grading(SubsetK::singleton(0), &nv), Ok(5));
        let bad = LatticeVector(vec![1, 0, 0, 0]);
        assert!(matches!(integer_grading(SubsetK::EMPTY, &bad), Err(LatticeError::BadVolumeForm { .. })));
    }

    #[test]
    fn fractional_and_cover() {
        assert_eq!(fractional_grading(SubsetK::singleton(2), 2), Rational::new(1, 2));
        assert_eq!(fractional_grading(SubsetK::full(3), 3), Rational::from_integer(3));
        assert_eq!(cover_residue(SubsetK(0b011), 1), 2);
        assert_eq!(cover_residue(SubsetK::full(1), 1), 0);
    }

    #[test]
    fn defect_examples() {
        let n = 2;
        assert_eq!(homogeneity_defect(SubsetK(0b0111), &[SubsetK(0b0011), SubsetK(0b0100)], n), Some(0));
        let singles: Vec<SubsetK> = (0..4).map(SubsetK::singleton).collect();
        assert_eq!(homogeneity_defect(SubsetK::EMPTY, &singles, n), Some(1));
        assert_eq!(homogeneity_defect(SubsetK(0b1), &[SubsetK(0b10)], n), None);
    }

    #[test]
    fn display_is_one_based() {
        assert_eq!(SubsetK(0b101).to_string(), "{1,3}");
        assert_eq!(SubsetK::from_indices(&[1, 3], 2).unwrap(), SubsetK(0b101));
    }
}
