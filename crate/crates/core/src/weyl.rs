//! The Weyl–Clifford algebra `B = ℚ[z_1,…,z_{n+2}]⟨θ_j, ∂_j⟩` with `{∂_i, θ_j} = δ_ij`.
//!
//! Monomials are normal ordered as `z^a θ_S ∂_T` with both `S` and `T` ascending.
//! Degrees are stored scaled by `n+2`, so `z_j ↦ 2`, `θ_j ↦ −n`, `∂_j ↦ n`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use crate::exact::Rational;
use crate::lattice::{LatticeClass, LatticeVector, SubsetK};

/// Largest number of variables `n+2` supported by the operator algebra.
pub const MAX_VARS: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WeylError {
    #[error("the weights a_j sum to {0}, not 1")]
    BadConfig(String),
    #[error("n = {0} is outside the supported range 1..={max}", max = MAX_VARS - 2)]
    UnsupportedDimension(usize),
    #[error("element has both even and odd terms")]
    InhomogeneousParity,
}

/// The dimension `n` and the coefficients `a_j` of `δ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MFConfig {
    n: usize,
    a: Vec<Rational>,
}

impl MFConfig {
    pub fn new(n: usize, a: Vec<Rational>) -> Result<Self, WeylError> {
        if n == 0 || n + 2 > MAX_VARS {
            return Err(WeylError::UnsupportedDimension(n));
        }
        if a.len() != n + 2 {
            return Err(WeylError::BadConfig(format!("{} weights for {} variables", a.len(), n + 2)));
        }
        let s: Rational = a.iter().sum();
        if !s.is_one() {
            return Err(WeylError::BadConfig(s.to_string()));
        }
        Ok(MFConfig { n, a })
    }

    /// `a_j = 1/(n+2)` for all `j`.
    pub fn symmetric(n: usize) -> Result<Self, WeylError> {
        Self::new(n, vec![Rational::new(1, n as i64 + 2); n + 2])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vars(&self) -> usize {
        self.n + 2
    }

    pub fn a(&self) -> &[Rational] {
        &self.a
    }
}

/// `z^a θ_S ∂_T`. Ordering is lexicographic on `(a, S, T)`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub a: [u16; MAX_VARS],
    pub s: SubsetK,
    pub t: SubsetK,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { a: [0; MAX_VARS], s: SubsetK(0), t: SubsetK(0) };

    pub fn new(a: &[u16], s: SubsetK, t: SubsetK) -> Self {
        let mut e = [0; MAX_VARS];
        e[..a.len()].copy_from_slice(a);
        Monomial { a: e, s, t }
    }

    pub fn theta(j: usize) -> Self {
        Monomial { s: SubsetK::singleton(j), ..Self::ONE }
    }

    pub fn partial(j: usize) -> Self {
        Monomial { t: SubsetK::singleton(j), ..Self::ONE }
    }

    pub fn z(exponents: &[u16]) -> Self {
        Self::new(exponents, SubsetK::EMPTY, SubsetK::EMPTY)
    }

    pub fn parity(&self) -> u32 {
        ((self.s.len() + self.t.len()) % 2) as u32
    }

    pub fn z_degree(&self) -> i64 {
        self.a.iter().map(|&x| i64::from(x)).sum()
    }

    /// ℚ-degree times `n+2`.
    pub fn scaled_degree(&self, n: usize) -> i64 {
        2 * self.z_degree() - (n * self.s.len()) as i64 + (n * self.t.len()) as i64
    }

    /// `a + e_S − e_T` in `M̃`.
    pub fn weight_vector(&self, n: usize) -> LatticeVector {
        LatticeVector(
            (0..n + 2)
                .map(|j| i64::from(self.a[j]) + i64::from(self.s.contains(j)) - i64::from(self.t.contains(j)))
                .collect(),
        )
    }

    pub fn weight(&self, n: usize) -> LatticeClass {
        LatticeClass::of(&self.weight_vector(n))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (j, &e) in self.a.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(format!("z{}", j + 1)),
                _ => parts.push(format!("z{}^{e}", j + 1)),
            }
        }
        parts.extend(self.s.iter().map(|j| format!("θ{}", j + 1)));
        parts.extend(self.t.iter().map(|j| format!("∂{}", j + 1)));
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("·"))
        }
    }
}

/// Number of pairs `(p, q)` with `p ∈ left`, `q ∈ right`, `p > q`.
fn inversions(left: u32, right: u32) -> u32 {
    let mut r = right;
    let mut count = 0;
    while r != 0 {
        let q = r.trailing_zeros();
        count += (left >> (q + 1)).count_ones();
        r &= r - 1;
    }
    count
}

/// Normal orderings of `∂_T θ_U` for all `T, U ⊂ [m]`, as lists of `(X, Y, sign)`
/// with `∂_T θ_U = Σ sign · θ_X ∂_Y`.
struct FermionTable {
    m: usize,
    entries: Vec<Vec<(u32, u32, i8)>>,
}

impl FermionTable {
    fn build(m: usize) -> Self {
        let size = 1usize << m;
        let mut entries = Vec::with_capacity(size * size);
        for t in 0..size as u32 {
            for u in 0..size as u32 {
                entries.push(Self::order(t, u, m));
            }
        }
        FermionTable { m, entries }
    }

    fn order(t: u32, u: u32, m: usize) -> Vec<(u32, u32, i8)> {
        let mut terms: BTreeMap<(u32, u32), i32> = BTreeMap::new();
        terms.insert((u, 0), 1);
        for j in (0..m as u32).rev() {
            if t >> j & 1 == 0 {
                continue;
            }
            let bit = 1u32 << j;
            let mut next: BTreeMap<(u32, u32), i32> = BTreeMap::new();
            for ((x, y), s) in terms {
                if x & bit != 0 {
                    let pos = (x & (bit - 1)).count_ones();
                    let sign = if pos.is_multiple_of(2) { s } else { -s };
                    *next.entry((x & !bit, y)).or_insert(0) += sign;
                }
                if y & bit == 0 {
                    let flips = x.count_ones() + (y & (bit - 1)).count_ones();
                    let sign = if flips.is_multiple_of(2) { s } else { -s };
                    *next.entry((x, y | bit)).or_insert(0) += sign;
                }
            }
            terms = next.into_iter().filter(|(_, s)| *s != 0).collect();
        }
        terms.into_iter().map(|((x, y), s)| (x, y, s as i8)).collect()
    }

    fn get(&self, t: u32, u: u32) -> &[(u32, u32, i8)] {
        &self.entries[((t as usize) << self.m) | u as usize]
    }
}

fn fermion_table(m: usize) -> &'static FermionTable {
    static TABLES: [OnceLock<FermionTable>; MAX_VARS + 1] = [const { OnceLock::new() }; MAX_VARS + 1];
    TABLES[m].get_or_init(|| FermionTable::build(m))
}

/// Product of two monomials as a list of `(monomial, ±1)`.
pub fn multiply_monomials(x: &Monomial, y: &Monomial, n: usize) -> Vec<(Monomial, i8)> {
    let table = fermion_table(n + 2);
    let a: [u16; MAX_VARS] = std::array::from_fn(|j| x.a[j] + y.a[j]);
    let mut out = Vec::new();
    for &(xs, ys, sign) in table.get(x.t.0, y.s.0) {
        if x.s.0 & xs != 0 || ys & y.t.0 != 0 {
            continue;
        }
        let flips = inversions(x.s.0, xs) + inversions(ys, y.t.0);
        let sign = if flips.is_multiple_of(2) { sign } else { -sign };
        out.push((Monomial { a, s: SubsetK(x.s.0 | xs), t: SubsetK(ys | y.t.0) }, sign));
    }
    out
}

/// A finite ℚ-combination of normal-ordered monomials.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct OperatorElement {
    terms: BTreeMap<Monomial, Rational>,
}

impl OperatorElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Monomial::ONE)
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, Rational::ONE)
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        OperatorElement { terms }
    }

    /// `W = z_1 ⋯ z_{n+2}`.
    pub fn superpotential(n: usize) -> Self {
        Self::monomial(Monomial::z(&vec![1; n + 2]))
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(it: I) -> Self {
        let mut e = Self::zero();
        for (m, c) in it {
            e.add_term(m, &c);
        }
        e
    }

    pub fn add_term(&mut self, m: Monomial, c: &Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert(Rational::ZERO);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or(Rational::ZERO)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::ONE))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        OperatorElement { terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect() }
    }

    pub fn multiply(&self, other: &Self, n: usize) -> Self {
        let mut out = Self::zero();
        for (x, cx) in &self.terms {
            for (y, cy) in &other.terms {
                let c = cx * cy;
                for (m, s) in multiply_monomials(x, y, n) {
                    if s > 0 {
                        out.add_term(m, &c);
                    } else {
                        out.add_term(m, &-&c);
                    }
                }
            }
        }
        out
    }

    /// Common parity of all terms, `None` for zero or mixed elements.
    pub fn parity(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(Monomial::parity);
        let p = it.next()?;
        it.all(|q| q == p).then_some(p)
    }

    /// Common `(weight, scaled degree, parity)`, if the element is nonzero and homogeneous.
    pub fn bidegree(&self, n: usize) -> Option<(LatticeClass, i64, u32)> {
        let (first, _) = self.terms.iter().next()?;
        let key = (first.weight(n), first.scaled_degree(n), first.parity());
        self.terms
            .keys()
            .all(|m| m.weight(n) == key.0 && m.scaled_degree(n) == key.1 && m.parity() == key.2)
            .then_some(key)
    }
}

impl fmt::Debug for OperatorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(m, c)| format!("{c}·{m:?}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `δ = Σ_j z_j ∂_j + a_j (W/z_j) θ_j`.
pub fn delta(cfg: &MFConfig) -> OperatorElement {
    let m = cfg.vars();
    let mut e = OperatorElement::zero();
    for j in 0..m {
        let mut zj = vec![0u16; m];
        zj[j] = 1;
        e.add_term(Monomial::new(&zj, SubsetK::EMPTY, SubsetK::singleton(j)), &Rational::ONE);
        let mut wj = vec![1u16; m];
        wj[j] = 0;
        e.add_term(Monomial::new(&wj, SubsetK::singleton(j), SubsetK::EMPTY), &cfg.a()[j]);
    }
    e
}

/// `d(x) = δx − (−1)^{|x|} xδ`.
pub fn differential(x: &OperatorElement, cfg: &MFConfig) -> Result<OperatorElement, WeylError> {
    if x.is_zero() {
        return Ok(OperatorElement::zero());
    }
    let p = x.parity().ok_or(WeylError::InhomogeneousParity)?;
    let d = delta(cfg);
    let n = cfg.n();
    let left = d.multiply(x, n);
    let right = x.multiply(&d, n);
    Ok(if p == 0 { left.sub(&right) } else { left.add(&right) })
}

/// `d` applied to a single monomial.
pub fn differential_monomial(x: &Monomial, cfg: &MFConfig) -> OperatorElement {
    differential(&OperatorElement::monomial(*x), cfg).expect("monomials have a parity")
}

/// All monomials of weight class `w` and scaled degree `d`, in the global order.
pub fn bigraded_basis(w: &LatticeClass, d: i64, n: usize) -> Vec<Monomial> {
    let m = n + 2;
    let rep = &w.representative().0;
    let mut out = Vec::new();
    for s in SubsetK::all(n) {
        for t in SubsetK::all(n) {
            let v: Vec<i64> = (0..m).map(|j| rep[j] - i64::from(s.contains(j)) + i64::from(t.contains(j))).collect();
            let vsum: i64 = v.iter().sum();
            let num = d + (n * s.len()) as i64 - (n * t.len()) as i64 - 2 * vsum;
            let den = 2 * m as i64;
            if num.rem_euclid(den) != 0 {
                continue;
            }
            let shift = num / den;
            let a: Vec<i64> = v.iter().map(|x| x + shift).collect();
            if a.iter().any(|&x| x < 0) {
                continue;
            }
            let a16: Vec<u16> = a.iter().map(|&x| u16::try_from(x).expect("exponent fits in u16")).collect();
            out.push(Monomial::new(&a16, s, t));
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> Rational {
        Rational::new(a, b)
    }

    #[test]
    fn odd_square_and_anticommutation() {
        let n = 1;
        let t1 = OperatorElement::monomial(Monomial::theta(0));
        let t2 = OperatorElement::monomial(Monomial::theta(1));
        assert!(t1.multiply(&t1, n).is_zero());
        let t12 = OperatorElement::monomial(Monomial::new(&[], SubsetK(0b11), SubsetK::EMPTY));
        assert_eq!(t2.multiply(&t1, n), t12.scale(&q(-1, 1)));
        assert_eq!(t1.multiply(&t2, n), t12);
    }

    #[test]
    fn clifford_relation() {
        let n = 1;
        let d1 = OperatorElement::monomial(Monomial::partial(0));
        let t1 = OperatorElement::monomial(Monomial::theta(0));
        let t1d1 = OperatorElement::monomial(Monomial::new(&[], SubsetK(1), SubsetK(1)));
        assert_eq!(d1.multiply(&t1, n), OperatorElement::one().sub(&t1d1));
    }

    #[test]
    fn delta_expansion_for_n1() {
        let cfg = MFConfig::symmetric(1).unwrap();
        let d = delta(&cfg);
        assert_eq!(d.len(), 6);
        let mut coeffs: Vec<Rational> = d.terms().map(|(_, c)| c.clone()).collect();
        coeffs.sort();
        assert_eq!(coeffs, vec![q(1, 3), q(1, 3), q(1, 3), q(1, 1), q(1, 1), q(1, 1)]);
        let (w, deg, par) = d.bidegree(1).unwrap();
        assert!(w.is_zero());
        assert_eq!(deg, 3);
        assert_eq!(par, 1);
    }

    #[test]
    fn delta_squares_to_w() {
        for n in 1..5 {
            let cfg = MFConfig::symmetric(n).unwrap();
            let d = delta(&cfg);
            assert_eq!(d.multiply(&d, n), OperatorElement::superpotential(n));
        }
    }

    #[test]
    fn differential_of_generators() {
        let cfg = MFConfig::new(2, vec![q(1, 2), q(1, 4), q(1, 8), q(1, 8)]).unwrap();
        for j in 0..4 {
            let mut zj = [0u16; 4];
            zj[j] = 1;
            let got = differential(&OperatorElement::monomial(Monomial::theta(j)), &cfg).unwrap();
            assert_eq!(got, OperatorElement::monomial(Monomial::z(&zj)));
            let mut wj = [1u16; 4];
            wj[j] = 0;
            let got = differential(&OperatorElement::monomial(Monomial::partial(j)), &cfg).unwrap();
            assert_eq!(got, OperatorElement::term(Monomial::z(&wj), cfg.a()[j].clone()));
        }
        assert!(differential(&OperatorElement::one(), &cfg).unwrap().is_zero());
    }

    #[test]
    fn bad_config_is_rejected() {
        assert!(matches!(MFConfig::new(1, vec![q(1, 3); 2]), Err(WeylError::BadConfig(_))));
        assert!(matches!(MFConfig::new(1, vec![q(1, 2); 3]), Err(WeylError::BadConfig(_))));
        assert!(matches!(MFConfig::symmetric(0), Err(WeylError::UnsupportedDimension(0))));
    }

    #[test]
    fn mixed_parity_differential_errors() {
        let cfg = MFConfig::symmetric(1).unwrap();
        let x = OperatorElement::one().add(&OperatorElement::monomial(Monomial::theta(0)));
        assert_eq!(differential(&x, &cfg), Err(WeylError::InhomogeneousParity));
    }

    #[test]
    fn inversion_count() {
        assert_eq!(inversions(0b100, 0b011), 2);
        assert_eq!(inversions(0b001, 0b110), 0);
    }
}
