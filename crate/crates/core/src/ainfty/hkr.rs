//! Dimensions of the `T`-invariant, bigraded pieces of `Sym(M̃^∨) ⊗ Λ(M̃)`.
//!
//! A pair `(a, K)` with `a ∈ ℤ^{n+2}_{≥0}` is invariant iff `a − e_K ∈ ℤ·𝟙`,
//! i.e. `a = e_K + q𝟙`. Its total degree is `r = (2|a| + n|K|)/(n+2)` and its
//! internal degree is `t = r − |a|`.

use crate::lattice::SubsetK;

/// Invariant pairs `(q, K)` with `a = e_K + q𝟙` in total degree `r` and internal degree `t`.
pub fn hkr_pairs(n: usize, r: i64, t: i64) -> Vec<(i64, SubsetK)> {
    let m = (n + 2) as i64;
    let s = r - t;
    if s < 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for k in SubsetK::all(n) {
        let kl = k.len() as i64;
        if 2 * s + n as i64 * kl != r * m {
            continue;
        }
        // |a| = |K| + q(n+2) = s
        if (s - kl).rem_euclid(m) != 0 {
            continue;
        }
        let q = (s - kl) / m;
        // q = −1 is allowed only when e_K + q𝟙 is still nonnegative, i.e. K = [n+2]
        if q >= 0 || (q == -1 && k == SubsetK::full(n)) {
            out.push((q, k));
        }
    }
    out
}

pub fn hkr_dim(n: usize, r: i64, t: i64) -> usize {
    hkr_pairs(n, r, t).len()
}
