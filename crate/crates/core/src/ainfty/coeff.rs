use std::collections::BTreeMap;
use std::fmt::Debug;

use serde::{Deserialize, Serialize};

use crate::exact::Rational;

/// Coefficient ring for structure constants.
pub trait Coefficient: Clone + PartialEq + Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;

    fn signed(&self, odd: bool) -> Self {
        if odd {
            self.neg()
        } else {
            self.clone()
        }
    }
}

impl Coefficient for Rational {
    fn zero() -> Self {
        Rational::ZERO
    }
    fn one() -> Self {
        Rational::ONE
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
}

/// An element `Σ c_e ζ^e` of the group ring `ℚ[ℤ_N]`, `ζ` a generator.
///
/// `order = 0` marks an element built without knowing `N` (only zero and
/// rational multiples of `ζ^0`); it adopts the order of whatever it meets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupRingElement {
    pub order: u32,
    pub terms: BTreeMap<u32, Rational>,
}

impl GroupRingElement {
    pub fn monomial(order: u32, exponent: u32, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            let e = if order == 0 { exponent } else { exponent % order };
            terms.insert(e, c);
        }
        GroupRingElement { order, terms }
    }

    pub fn scalar(c: Rational) -> Self {
        Self::monomial(0, 0, c)
    }

    fn common_order(&self, other: &Self) -> u32 {
        match (self.order, other.order) {
            (0, o) | (o, 0) => o,
            (a, b) => {
                assert_eq!(a, b, "mixing group rings of different orders");
                a
            }
        }
    }

    fn insert(terms: &mut BTreeMap<u32, Rational>, e: u32, c: Rational) {
        let slot = terms.entry(e).or_insert(Rational::ZERO);
        *slot += c;
        if slot.is_zero() {
            terms.remove(&e);
        }
    }
}

impl Coefficient for GroupRingElement {
    fn zero() -> Self {
        GroupRingElement { order: 0, terms: BTreeMap::new() }
    }
    fn one() -> Self {
        Self::scalar(Rational::ONE)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let order = self.common_order(other);
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            Self::insert(&mut terms, *e, c.clone());
        }
        GroupRingElement { order, terms }
    }
    fn mul(&self, other: &Self) -> Self {
        let order = self.common_order(other);
        let mut terms = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = if order == 0 { e1 + e2 } else { (e1 + e2) % order };
                Self::insert(&mut terms, e, c1 * c2);
            }
        }
        GroupRingElement { order, terms }
    }
    fn neg(&self) -> Self {
        GroupRingElement { order: self.order, terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponents_wrap() {
        let z = GroupRingElement::monomial(3, 2, Rational::ONE);
        let z2 = z.mul(&z);
        assert_eq!(z2, GroupRingElement::monomial(3, 1, Rational::ONE));
        assert!(z.add(&z.neg()).is_zero());
        assert_eq!(GroupRingElement::one().mul(&z), z);
    }
}
