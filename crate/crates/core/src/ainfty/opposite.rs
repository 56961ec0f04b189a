use super::{Coefficient, FiniteAInftyAlgebra};

/// `∗ = 1 + k(k−1)/2 + (k+1)Σ i_j + Σ_{j<l} i_j i_l` reduced mod 2.
pub fn opposite_sign_exponent(degrees: &[i64]) -> i64 {
    let k = degrees.len() as i64;
    let sum: i64 = degrees.iter().sum();
    let mut pairs = 0i64;
    for (j, a) in degrees.iter().enumerate() {
        for b in &degrees[j + 1..] {
            pairs += a * b;
        }
    }
    (1 + k * (k - 1) / 2 + (k + 1) * sum + pairs).rem_euclid(2)
}

/// `μ_op(x_1, …, x_k) = (−1)^∗ μ(x_k, …, x_1)`.
pub fn opposite<C: Coefficient>(alg: &FiniteAInftyAlgebra<C>) -> FiniteAInftyAlgebra<C> {
    let mut out = FiniteAInftyAlgebra::new(alg.basis.clone());
    for (inputs, o, c) in alg.entries() {
        let degrees: Vec<i64> = inputs.iter().map(|&x| alg.parity(x)).collect();
        let odd = opposite_sign_exponent(&degrees) == 1;
        let reversed: Vec<usize> = inputs.iter().rev().copied().collect();
        out.add_entry(reversed, o, c.signed(odd));
    }
    out
}

/// The closed form `nq(nq−1)/2 + (1+nq)|K_0| + Σ_{j<l}|K_j||K_l|` mod 2.
pub fn exterior_sign_exponent(n: i64, q: i64, k0: i64, sizes: &[i64]) -> i64 {
    let mut pairs = 0i64;
    for (j, a) in sizes.iter().enumerate() {
        for b in &sizes[j + 1..] {
            pairs += a * b;
        }
    }
    (n * q * (n * q - 1) / 2 + (1 + n * q) * k0 + pairs).rem_euclid(2)
}

/// Compares the closed form with the general opposite sign for every size
/// tuple of arity `k = 2 + nq` whose output size `Σ|K_j| − (n+2)q` lies in
/// `[0, n+2]`, for `n ≤ n_max`, `q ≤ q_max`. Tuples that would be too many to
/// list are covered through their parity pattern, which is all either side
/// depends on. Returns the number of cases checked and the first disagreement.
pub fn exterior_sign_agreement(n_max: i64, q_max: i64) -> (usize, Option<(i64, i64, Vec<i64>)>) {
    let mut checked = 0;
    for n in 1..=n_max {
        for q in 0..=q_max {
            let k = (2 + n * q) as usize;
            let m = n + 2;
            let exhaustive = (m + 1).checked_pow(k as u32).is_some_and(|c| c <= 2_000_000);
            let base = if exhaustive { m + 1 } else { 2 };
            let total = (base as usize).pow(k as u32);
            for code in 0..total {
                let mut c = code;
                let sizes: Vec<i64> = (0..k)
                    .map(|_| {
                        let v = (c % base as usize) as i64;
                        c /= base as usize;
                        v
                    })
                    .collect();
                let sum: i64 = sizes.iter().sum();
                let k0_options: Vec<i64> = if exhaustive {
                    let k0 = sum - m * q;
                    if (0..=m).contains(&k0) {
                        vec![k0]
                    } else {
                        vec![]
                    }
                } else {
                    (0..=m).filter(|k0| (k0 - sum + m * q).rem_euclid(2) == 0).collect()
                };
                for k0 in k0_options {
                    checked += 1;
                    if exterior_sign_exponent(n, q, k0, &sizes) != opposite_sign_exponent(&sizes) {
                        return (checked, Some((n, q, sizes)));
                    }
                }
            }
        }
    }
    (checked, None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ainfty::{check_stasheff, wedge_algebra};

    #[test]
    fn even_binary_sign_is_trivial() {
        assert_eq!(opposite_sign_exponent(&[0, 0]), 0);
        assert_eq!(opposite_sign_exponent(&[2, 4]), 0);
    }

    #[test]
    fn opposite_is_an_involution() {
        let alg = wedge_algebra(2);
        assert_eq!(opposite(&opposite(&alg)), alg);
        assert!(check_stasheff(&opposite(&alg), 4).is_empty());
    }

    #[test]
    fn closed_form_agrees_for_small_cases() {
        let (checked, bad) = exterior_sign_agreement(2, 1);
        assert!(checked > 0);
        assert_eq!(bad, None);
    }
}
