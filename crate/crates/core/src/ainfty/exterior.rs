use std::collections::BTreeMap;

use super::{wedge_sign, Coefficient, FiniteAInftyAlgebra};
use crate::exact::Rational;
use crate::lattice::SubsetK;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExteriorError {
    #[error("μ¹ is nonzero")]
    RequiresMinimal,
    #[error("basis vector for {0} is missing")]
    MissingLabel(SubsetK),
    #[error("no sign choice matches the wedge product at μ²({a}, {b})")]
    Inconsistent { a: SubsetK, b: SubsetK },
}

/// Whether `(−1)^{|a|} μ²(a, b) = (−1)^{|a||b|} (−1)^{|b|} μ²(b, a)` for all basis pairs.
pub fn supercommutativity_check<C: Coefficient>(alg: &FiniteAInftyAlgebra<C>) -> Result<bool, ExteriorError> {
    if !alg.mu1_is_zero() {
        return Err(ExteriorError::RequiresMinimal);
    }
    for a in 0..alg.dim() {
        for b in 0..alg.dim() {
            let (pa, pb) = (alg.parity(a), alg.parity(b));
            let lhs = alg.outputs(&[a, b]);
            let rhs = alg.outputs(&[b, a]);
            let sign = (pa * pb + pa + pb).rem_euclid(2) == 1;
            let rhs: Vec<(usize, C)> = rhs.iter().map(|(o, c)| (*o, c.signed(sign))).collect();
            if lhs != rhs.as_slice() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Signs `σ_K` making `μ²` the graded wedge product `μ²(a_2, a_1) = (−1)^{|a_1|} a_2 ∧ a_1`
/// after rescaling `e_K ↦ σ_K e_K`.
pub fn exterior_normalize(
    alg: &FiniteAInftyAlgebra<Rational>,
    n: usize,
) -> Result<BTreeMap<SubsetK, i64>, ExteriorError> {
    if !alg.mu1_is_zero() {
        return Err(ExteriorError::RequiresMinimal);
    }
    let idx = |k: SubsetK| alg.index_of(k).ok_or(ExteriorError::MissingLabel(k));
    let expected = |a: SubsetK, b: SubsetK| -> i64 {
        let s = if b.len().is_multiple_of(2) { 1 } else { -1 };
        wedge_sign(a, b) * s
    };
    let coeff = |a: SubsetK, b: SubsetK| -> Result<Rational, ExteriorError> {
        Ok(alg.entry(&[idx(a)?, idx(b)?], idx(a.union(b))?))
    };
    let as_sign = |r: &Rational, a: SubsetK, b: SubsetK| -> Result<i64, ExteriorError> {
        if r.abs().is_one() {
            Ok(i64::from(r.signum()))
        } else {
            Err(ExteriorError::Inconsistent { a, b })
        }
    };
    let mut sigma: BTreeMap<SubsetK, i64> = BTreeMap::new();
    let unit = coeff(SubsetK::EMPTY, SubsetK::EMPTY)?;
    sigma.insert(SubsetK::EMPTY, as_sign(&unit, SubsetK::EMPTY, SubsetK::EMPTY)?);
    for k in SubsetK::all(n) {
        match k.len() {
            0 => {}
            1 => {
                sigma.insert(k, 1);
            }
            _ => {
                let first = SubsetK::singleton(k.iter().next().expect("nonempty"));
                let rest = SubsetK(k.0 & !first.0);
                let a = as_sign(&coeff(first, rest)?, first, rest)?;
                sigma.insert(k, sigma[&first] * sigma[&rest] * a * expected(first, rest));
            }
        }
    }
    for a in SubsetK::all(n) {
        for b in SubsetK::all(n) {
            let (ia, ib) = (idx(a)?, idx(b)?);
            let outs = alg.outputs(&[ia, ib]);
            if a.is_disjoint(b) {
                let ik = idx(a.union(b))?;
                let want = Rational::from_integer(sigma[&a] * sigma[&b] * sigma[&a.union(b)] * expected(a, b));
                if outs.len() != 1 || outs[0].0 != ik || outs[0].1 != want {
                    return Err(ExteriorError::Inconsistent { a, b });
                }
            } else if !outs.is_empty() {
                return Err(ExteriorError::Inconsistent { a, b });
            }
        }
    }
    Ok(sigma)
}
