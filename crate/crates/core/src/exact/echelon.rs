//! Incremental exact Gaussian elimination.
//!
//! Columns are inserted one at a time. Each independent column contributes a
//! fully reduced basis vector whose pivot is its first nonzero coordinate;
//! each dependent column yields a kernel relation among the inserted columns.
//! Processing order is the caller's column order, so every result is a pure
//! function of the input.

use std::collections::HashMap;

use super::{Rational, SparseMatrix, SparseVec};

#[derive(Clone, Debug)]
pub enum Insertion {
    /// The column extended the span; the value is its position among the independent columns.
    Independent(usize),
    /// The column was dependent; the relation `Σ c_j col_j = 0` has coefficient 1 on the new column.
    Dependent(SparseVec),
}

#[derive(Clone, Debug, Default)]
pub struct ColumnEchelon {
    rows: Vec<SparseVec>,
    pivots: Vec<usize>,
    pivot_slot: HashMap<usize, usize>,
    combos: Vec<SparseVec>,
    inserted: usize,
    independent: Vec<usize>,
}

impl ColumnEchelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_columns<'a, I: IntoIterator<Item = &'a SparseVec>>(cols: I) -> Self {
        let mut e = Self::new();
        for c in cols {
            e.insert(c);
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn inserted(&self) -> usize {
        self.inserted
    }

    /// Inserted-column indices that extended the span, in insertion order.
    pub fn independent_columns(&self) -> &[usize] {
        &self.independent
    }

    pub fn insert(&mut self, v: &SparseVec) -> Insertion {
        let idx = self.inserted;
        self.inserted += 1;
        let (r, combo) = self.reduce_vector(v, SparseVec::unit(idx));
        let Some((p, lead)) = r.first().cloned() else {
            return Insertion::Dependent(combo);
        };
        let inv = lead.recip();
        let r = r.scale(&inv);
        let combo = combo.scale(&inv);
        for i in 0..self.rows.len() {
            let c = self.rows[i].get(p);
            if !c.is_zero() {
                let neg = -c;
                self.rows[i] = self.rows[i].axpy(&neg, &r);
                self.combos[i] = self.combos[i].axpy(&neg, &combo);
            }
        }
        self.pivot_slot.insert(p, self.rows.len());
        self.pivots.push(p);
        self.rows.push(r);
        self.combos.push(combo);
        self.independent.push(idx);
        Insertion::Independent(self.independent.len() - 1)
    }

    fn reduce_vector(&self, v: &SparseVec, mut combo: SparseVec) -> (SparseVec, SparseVec) {
        let hits: Vec<(usize, Rational)> =
            v.iter().filter_map(|(i, c)| self.pivot_slot.get(i).map(|&s| (s, c.clone()))).collect();
        let mut r = v.clone();
        for (slot, c) in hits {
            let neg = -c;
            r = r.axpy(&neg, &self.rows[slot]);
            combo = combo.axpy(&neg, &self.combos[slot]);
        }
        (r, combo)
    }

    /// Coefficients `x` over the inserted columns with `Σ x_j col_j = t`, or `None` if `t` is outside the span.
    pub fn solve(&self, t: &SparseVec) -> Option<SparseVec> {
        let mut residual = t.clone();
        let mut x = SparseVec::new();
        for (i, c) in t.iter() {
            if let Some(&s) = self.pivot_slot.get(i) {
                residual = residual.axpy(&-c, &self.rows[s]);
                x = x.axpy(c, &self.combos[s]);
            }
        }
        residual.is_zero().then_some(x)
    }

    pub fn contains(&self, t: &SparseVec) -> bool {
        let (r, _) = self.reduce_vector(t, SparseVec::new());
        r.is_zero()
    }
}

/// Result of reducing a matrix column by column.
#[derive(Clone, Debug)]
pub struct Reduction {
    pub rank: usize,
    pub kernel_basis: Vec<SparseVec>,
    pub pivot_columns: Vec<usize>,
    /// Reduced row echelon form (`rank` rows).
    pub rref: SparseMatrix,
}

pub fn reduce(m: &SparseMatrix) -> Reduction {
    let mut e = ColumnEchelon::new();
    let mut kernel_basis = Vec::new();
    let mut dependent = Vec::new();
    for (j, col) in m.columns().iter().enumerate() {
        if let Insertion::Dependent(rel) = e.insert(col) {
            kernel_basis.push(rel.clone());
            dependent.push((j, rel));
        }
    }
    let pivot_columns = e.independent_columns().to_vec();
    let slot: HashMap<usize, usize> = pivot_columns.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let mut entries: Vec<(usize, usize, Rational)> =
        pivot_columns.iter().enumerate().map(|(i, &c)| (i, c, Rational::ONE)).collect();
    for (j, rel) in &dependent {
        for (c, v) in rel.iter() {
            if c != j {
                entries.push((slot[c], *j, -v));
            }
        }
    }
    Reduction {
        rank: e.rank(),
        kernel_basis,
        pivot_columns,
        rref: SparseMatrix::from_entries(e.rank(), m.cols(), entries),
    }
}

pub fn rank(m: &SparseMatrix) -> usize {
    ColumnEchelon::from_columns(m.columns()).rank()
}
