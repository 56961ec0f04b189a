use std::collections::BTreeMap;

use super::Coefficient;
use crate::exact::Rational;
use crate::lattice::{self, LatticeVector, SubsetK};
use crate::minimal::MinimalModel;

/// Grading data of one basis vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisElement {
    pub label: String,
    /// ℤ-degree; only its parity enters the sign rules.
    pub degree: i64,
    /// Canonical representative of the `M`-weight, if the algebra is equivariant.
    pub weight: Option<LatticeVector>,
    pub qdegree: Option<Rational>,
    /// The exterior label, for algebras on `Λ*ℚ^{n+2}`.
    pub subset: Option<SubsetK>,
}

impl BasisElement {
    pub fn parity(&self) -> i64 {
        self.degree.rem_euclid(2)
    }
}

/// Inputs written left to right as `(a_k, …, a_1)`, mapped to nonzero output coefficients.
pub type OpTable<C> = BTreeMap<Vec<usize>, Vec<(usize, C)>>;

/// A finite-dimensional A∞ algebra with sparse structure constants.
#[derive(Clone, Debug, PartialEq)]
pub struct FiniteAInftyAlgebra<C> {
    pub basis: Vec<BasisElement>,
    pub ops: BTreeMap<usize, OpTable<C>>,
}

impl<C: Coefficient> FiniteAInftyAlgebra<C> {
    pub fn new(basis: Vec<BasisElement>) -> Self {
        FiniteAInftyAlgebra { basis, ops: BTreeMap::new() }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn parity(&self, i: usize) -> i64 {
        self.basis[i].parity()
    }

    /// Adds `c` to the coefficient of `output` in `μ(inputs)`.
    pub fn add_entry(&mut self, inputs: Vec<usize>, output: usize, c: C) {
        if c.is_zero() {
            return;
        }
        let table = self.ops.entry(inputs.len()).or_default();
        let outs = table.entry(inputs.clone()).or_default();
        match outs.iter_mut().position(|(o, _)| *o == output) {
            Some(pos) => {
                let s = outs[pos].1.add(&c);
                if s.is_zero() {
                    outs.remove(pos);
                } else {
                    outs[pos].1 = s;
                }
            }
            None => {
                outs.push((output, c));
                outs.sort_by_key(|(o, _)| *o);
            }
        }
        if outs.is_empty() {
            table.remove(&inputs);
        }
    }

    pub fn entry(&self, inputs: &[usize], output: usize) -> C {
        self.ops
            .get(&inputs.len())
            .and_then(|t| t.get(inputs))
            .and_then(|v| v.iter().find(|(o, _)| *o == output))
            .map_or_else(C::zero, |(_, c)| c.clone())
    }

    pub fn outputs(&self, inputs: &[usize]) -> &[(usize, C)] {
        self.ops.get(&inputs.len()).and_then(|t| t.get(inputs)).map_or(&[], Vec::as_slice)
    }

    pub fn max_arity(&self) -> usize {
        self.ops.iter().filter(|(_, t)| !t.is_empty()).map(|(k, _)| *k).max().unwrap_or(0)
    }

    pub fn entry_count(&self) -> usize {
        self.ops.values().flat_map(|t| t.values()).map(Vec::len).sum()
    }

    pub fn mu1_is_zero(&self) -> bool {
        self.ops.get(&1).is_none_or(BTreeMap::is_empty)
    }

    /// All `(inputs, output, coefficient)` triples in a fixed order.
    pub fn entries(&self) -> impl Iterator<Item = (&Vec<usize>, usize, &C)> {
        self.ops.values().flat_map(|t| t.iter()).flat_map(|(ins, outs)| outs.iter().map(move |(o, c)| (ins, *o, c)))
    }

    /// Index of the basis vector with a given exterior label.
    pub fn index_of(&self, k: SubsetK) -> Option<usize> {
        self.basis.iter().position(|b| b.subset == Some(k))
    }
}

/// Basis of `Λ*ℚ^{n+2}` indexed by bitmask, with default gradings.
pub fn exterior_basis(n: usize) -> Vec<BasisElement> {
    let nvec = lattice::default_nvec(n);
    SubsetK::all(n)
        .map(|k| BasisElement {
            label: format!("e{k}"),
            degree: lattice::integer_grading(k, &nvec).expect("default grading vector is admissible"),
            weight: Some(lattice::weight(k, n).representative().clone()),
            qdegree: Some(lattice::fractional_grading(k, n)),
            subset: Some(k),
        })
        .collect()
}

/// Sign of `e_A ∧ e_B = sign · e_{A⊔B}` for disjoint `A`, `B`.
pub fn wedge_sign(a: SubsetK, b: SubsetK) -> i64 {
    let mut inv = 0;
    for x in a.iter() {
        inv += b.iter().filter(|&y| y < x).count();
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `Λ*ℚ^{n+2}` with `μ²(a_2, a_1) = (−1)^{|a_1|} a_2 ∧ a_1` and no other products.
pub fn wedge_algebra(n: usize) -> FiniteAInftyAlgebra<Rational> {
    let mut alg = FiniteAInftyAlgebra::new(exterior_basis(n));
    for a in SubsetK::all(n) {
        for b in SubsetK::all(n) {
            if a.is_disjoint(b) {
                let s = wedge_sign(a, b) * if b.len() % 2 == 0 { 1 } else { -1 };
                alg.add_entry(vec![a.0 as usize, b.0 as usize], a.union(b).0 as usize, Rational::from_integer(s));
            }
        }
    }
    alg
}

impl MinimalModel {
    pub fn to_algebra(&self) -> FiniteAInftyAlgebra<Rational> {
        let mut alg = FiniteAInftyAlgebra::new(exterior_basis(self.n));
        for table in self.tables.values() {
            for (inputs, outs) in table {
                let ins: Vec<usize> = inputs.iter().map(|k| k.0 as usize).collect();
                for (o, c) in outs {
                    alg.add_entry(ins.clone(), o.0 as usize, c.clone());
                }
            }
        }
        alg
    }
}
