//! Smash products `A ⋊ Γ*` with coefficients in `ℚ[ℤ_N]`, `N` the exponent of `Γ`.

use num_integer::Integer;

use super::{BasisElement, FiniteAInftyAlgebra, GroupRingElement};
use crate::exact::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SmashError {
    #[error("basis vector {0} carries no weight")]
    MissingWeight(usize),
    #[error("ρ has {got} rows for {expected} invariant factors")]
    Shape { expected: usize, got: usize },
    #[error("ρ does not vanish on (1, …, 1)")]
    NotWellDefined,
    #[error("invariant factors must be at least 2")]
    BadFactor,
}

/// `Γ = ⊕ ℤ_{f_i}` with a homomorphism `ρ: M → Γ` given by integer rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteAbelianGroupData {
    pub factors: Vec<u32>,
    pub rho: Vec<Vec<i64>>,
}

impl FiniteAbelianGroupData {
    pub fn new(factors: Vec<u32>, rho: Vec<Vec<i64>>) -> Result<Self, SmashError> {
        if rho.len() != factors.len() {
            return Err(SmashError::Shape { expected: factors.len(), got: rho.len() });
        }
        if factors.iter().any(|&f| f < 2) {
            return Err(SmashError::BadFactor);
        }
        for (row, &f) in rho.iter().zip(&factors) {
            if row.iter().sum::<i64>().rem_euclid(i64::from(f)) != 0 {
                return Err(SmashError::NotWellDefined);
            }
        }
        Ok(FiniteAbelianGroupData { factors, rho })
    }

    pub fn trivial() -> Self {
        FiniteAbelianGroupData { factors: Vec::new(), rho: Vec::new() }
    }

    /// `ℤ_{n+2}` with `ρ(w) = Σ w_i`.
    pub fn cyclic_sum(n: usize) -> Self {
        FiniteAbelianGroupData { factors: vec![n as u32 + 2], rho: vec![vec![1; n + 2]] }
    }

    /// `Γ_n = M ⊗ ℤ_{n+2} ≅ ℤ_{n+2}^{n+1}` with `ρ_i(w) = w_i − w_{n+2}`.
    pub fn full(n: usize) -> Self {
        let m = n + 2;
        let rho = (0..n + 1)
            .map(|i| {
                let mut row = vec![0; m];
                row[i] = 1;
                row[m - 1] = -1;
                row
            })
            .collect();
        FiniteAbelianGroupData { factors: vec![m as u32; n + 1], rho }
    }

    pub fn order(&self) -> usize {
        self.factors.iter().map(|&f| f as usize).product()
    }

    /// Exponent `N` (lcm of the factors); 1 for the trivial group.
    pub fn exponent(&self) -> u32 {
        self.factors.iter().fold(1u32, |a, &f| a.lcm(&f))
    }

    /// Characters as tuples `c` with `0 ≤ c_i < f_i`, index-ordered with the first factor fastest.
    pub fn characters(&self) -> Vec<Vec<u32>> {
        (0..self.order()).map(|i| self.character(i)).collect()
    }

    pub fn character(&self, mut index: usize) -> Vec<u32> {
        self.factors
            .iter()
            .map(|&f| {
                let c = (index % f as usize) as u32;
                index /= f as usize;
                c
            })
            .collect()
    }

    pub fn character_index(&self, c: &[u32]) -> usize {
        let mut idx = 0;
        for (ci, f) in c.iter().zip(&self.factors).rev() {
            idx = idx * *f as usize + *ci as usize;
        }
        idx
    }

    pub fn rho(&self, w: &[i64]) -> Vec<u32> {
        self.rho
            .iter()
            .zip(&self.factors)
            .map(|(row, &f)| {
                let v: i64 = row.iter().zip(w).map(|(a, b)| a * b).sum();
                v.rem_euclid(i64::from(f)) as u32
            })
            .collect()
    }

    fn multiply(&self, a: usize, b: usize) -> usize {
        let (ca, cb) = (self.character(a), self.character(b));
        let c: Vec<u32> = ca.iter().zip(&cb).zip(&self.factors).map(|((x, y), f)| (x + y) % f).collect();
        self.character_index(&c)
    }

    /// `χ(g)` as a power of `ζ_N`.
    fn pairing(&self, chi: usize, g: &[u32]) -> u32 {
        let n = self.exponent();
        let c = self.character(chi);
        let mut e = 0u64;
        for ((ci, gi), f) in c.iter().zip(g).zip(&self.factors) {
            e += u64::from(*ci) * u64::from(*gi) * u64::from(n / f);
        }
        (e % u64::from(n)) as u32
    }
}

/// Index of `(a, χ)` in the smash basis.
pub fn smash_index(a: usize, chi: usize, group_order: usize) -> usize {
    a * group_order + chi
}

/// `μ((a_k,χ_k), …, (a_1,χ_1)) = μ(a_k, χ_k▷a_{k−1}, …, (χ_k⋯χ_2)▷a_1) ⊗ χ_k⋯χ_1`.
pub fn smash(
    alg: &FiniteAInftyAlgebra<Rational>,
    grp: &FiniteAbelianGroupData,
) -> Result<FiniteAInftyAlgebra<GroupRingElement>, SmashError> {
    let order = grp.order();
    let nexp = grp.exponent();
    let mut rho_of = Vec::with_capacity(alg.dim());
    for (i, b) in alg.basis.iter().enumerate() {
        let w = b.weight.as_ref().ok_or(SmashError::MissingWeight(i))?;
        rho_of.push(grp.rho(&w.0));
    }
    let mut basis = Vec::with_capacity(alg.dim() * order);
    for b in &alg.basis {
        for chi in 0..order {
            basis.push(BasisElement {
                label: format!("{}⊗χ{:?}", b.label, grp.character(chi)),
                degree: b.degree,
                weight: b.weight.clone(),
                qdegree: b.qdegree.clone(),
                subset: b.subset,
            });
        }
    }
    let mut out = FiniteAInftyAlgebra::new(basis);
    for (inputs, o, c) in alg.entries() {
        let k = inputs.len();
        let mut chars = vec![0usize; k];
        loop {
            let mut exponent = 0u32;
            let mut acc = chars[0];
            for t in 1..k {
                exponent = (exponent + grp.pairing(acc, &rho_of[inputs[t]])) % nexp;
                acc = grp.multiply(acc, chars[t]);
            }
            let ins: Vec<usize> = inputs.iter().zip(&chars).map(|(&a, &x)| smash_index(a, x, order)).collect();
            out.add_entry(ins, smash_index(o, acc, order), GroupRingElement::monomial(nexp, exponent, c.clone()));
            let mut t = 0;
            while t < k {
                chars[t] += 1;
                if chars[t] < order {
                    break;
                }
                chars[t] = 0;
                t += 1;
            }
            if t == k {
                break;
            }
        }
    }
    Ok(out)
}

/// Number of basis vectors `(a, χ)` with `χ = j` and `χ·ρ(w(a)) = k` for a cyclic group,
/// as a `|Γ| × |Γ|` table.
pub fn cyclic_block_dimensions(
    alg: &FiniteAInftyAlgebra<Rational>,
    grp: &FiniteAbelianGroupData,
) -> Result<Vec<Vec<usize>>, SmashError> {
    if grp.factors.len() != 1 {
        return Err(SmashError::Shape { expected: 1, got: grp.factors.len() });
    }
    let f = grp.factors[0] as usize;
    let mut blocks = vec![vec![0usize; f]; f];
    for (i, b) in alg.basis.iter().enumerate() {
        let w = b.weight.as_ref().ok_or(SmashError::MissingWeight(i))?;
        let r = grp.rho(&w.0)[0] as usize;
        for (j, row) in blocks.iter_mut().enumerate() {
            row[(j + r) % f] += 1;
        }
    }
    Ok(blocks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ainfty::{check_stasheff, wedge_algebra};

    #[test]
    fn trivial_group_reproduces_tables() {
        let alg = wedge_algebra(1);
        let s = smash(&alg, &FiniteAbelianGroupData::trivial()).unwrap();
        assert_eq!(s.dim(), alg.dim());
        for (ins, o, c) in alg.entries() {
            assert_eq!(s.entry(ins, o), GroupRingElement::monomial(1, 0, c.clone()));
        }
        assert_eq!(s.entry_count(), alg.entry_count());
    }

    #[test]
    fn cyclic_smash_of_wedge_is_consistent() {
        let s = smash(&wedge_algebra(1), &FiniteAbelianGroupData::cyclic_sum(1)).unwrap();
        assert_eq!(s.dim(), 24);
        assert!(check_stasheff(&s, 3).is_empty());
    }

    #[test]
    fn full_group_order() {
        assert_eq!(FiniteAbelianGroupData::full(1).order(), 9);
        assert_eq!(FiniteAbelianGroupData::full(2).order(), 64);
    }

    #[test]
    fn rho_must_kill_ones() {
        assert_eq!(FiniteAbelianGroupData::new(vec![3], vec![vec![1, 0, 0]]), Err(SmashError::NotWellDefined));
    }
}
