//! The A∞ relations
//! `Σ (−1)^★ μ(a_k, …, a_{b+r+1}, μ(a_{b+r}, …, a_{b+1}), a_b, …, a_1) = 0`
//! with `★ = Σ_{j ≤ b} (|a_j| − 1)`.
//!
//! Rather than looping over input tuples, every pair of nonzero entries whose
//! output/input labels match is composed and the result accumulated under the
//! combined input tuple. Tuples that receive no contribution satisfy the
//! relation trivially, so the residuals found this way are all of them.

use std::collections::{BTreeMap, HashMap};

use super::{Coefficient, FiniteAInftyAlgebra};

#[derive(Clone, Debug, PartialEq)]
pub struct StasheffViolation<C> {
    pub inputs: Vec<usize>,
    pub output: usize,
    pub value: C,
}

/// Violated relations with at most `max_arity` inputs, sorted by `(arity, inputs, output)`.
pub fn check_stasheff<C: Coefficient>(alg: &FiniteAInftyAlgebra<C>, max_arity: usize) -> Vec<StasheffViolation<C>> {
    // label -> (outer arity, outer inputs, position)
    let mut occurrences: HashMap<usize, Vec<(&Vec<usize>, usize)>> = HashMap::new();
    for (k, table) in &alg.ops {
        if *k > max_arity {
            continue;
        }
        for inputs in table.keys() {
            for (pos, &x) in inputs.iter().enumerate() {
                occurrences.entry(x).or_default().push((inputs, pos));
            }
        }
    }
    let mut residual: HashMap<(Vec<usize>, usize), C> = HashMap::new();
    for (r, table) in &alg.ops {
        for (inner, inner_outs) in table {
            for (c, ci) in inner_outs {
                let Some(occ) = occurrences.get(c) else { continue };
                for &(outer, pos) in occ {
                    let total = outer.len() + r - 1;
                    if total > max_arity || total == 0 {
                        continue;
                    }
                    let star: i64 = outer[pos + 1..].iter().map(|&x| alg.parity(x) - 1).sum();
                    let coef = ci.signed(star.rem_euclid(2) == 1);
                    let mut combined = Vec::with_capacity(total);
                    combined.extend_from_slice(&outer[..pos]);
                    combined.extend_from_slice(inner);
                    combined.extend_from_slice(&outer[pos + 1..]);
                    for (o, co) in alg.outputs(outer) {
                        let term = coef.mul(co);
                        let slot = residual.entry((combined.clone(), *o)).or_insert_with(C::zero);
                        *slot = slot.add(&term);
                    }
                }
            }
        }
    }
    let sorted: BTreeMap<(usize, Vec<usize>, usize), C> =
        residual.into_iter().filter(|(_, v)| !v.is_zero()).map(|((ins, o), v)| ((ins.len(), ins, o), v)).collect();
    sorted.into_iter().map(|((_, inputs, output), value)| StasheffViolation { inputs, output, value }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ainfty::wedge_algebra;

    #[test]
    fn wedge_algebra_is_consistent() {
        for n in 1..4 {
            assert!(check_stasheff(&wedge_algebra(n), 4).is_empty());
        }
    }

    #[test]
    fn flipped_sign_is_detected() {
        let mut alg = wedge_algebra(1);
        // μ²(e1, e2) ↦ −μ²(e1, e2)
        let c = alg.entry(&[1, 2], 3);
        alg.add_entry(vec![1, 2], 3, -(&c + &c));
        assert_eq!(alg.entry(&[1, 2], 3), -c);
        assert!(!check_stasheff(&alg, 3).is_empty());
    }
}
