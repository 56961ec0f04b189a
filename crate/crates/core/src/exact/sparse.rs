use std::collections::BTreeMap;

use super::Rational;

/// Sparse vector over ℚ: strictly increasing indices, no stored zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparseVec {
    entries: Vec<(usize, Rational)>,
}

impl SparseVec {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn unit(i: usize) -> Self {
        SparseVec { entries: vec![(i, Rational::ONE)] }
    }

    /// Builds from arbitrary (index, value) pairs, summing duplicates.
    pub fn from_pairs<I: IntoIterator<Item = (usize, Rational)>>(pairs: I) -> Self {
        let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
        for (i, v) in pairs {
            if v.is_zero() {
                continue;
            }
            let slot = acc.entry(i).or_insert(Rational::ZERO);
            *slot += v;
        }
        SparseVec { entries: acc.into_iter().filter(|(_, v)| !v.is_zero()).collect() }
    }

    pub fn from_dense(values: &[Rational]) -> Self {
        SparseVec {
            entries: values.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(i, v)| (i, v.clone())).collect(),
        }
    }

    pub fn to_dense(&self, len: usize) -> Vec<Rational> {
        let mut out = vec![Rational::ZERO; len];
        for (i, v) in &self.entries {
            out[*i] = v.clone();
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = &(usize, Rational)> {
        self.entries.iter()
    }

    pub fn get(&self, i: usize) -> Rational {
        match self.entries.binary_search_by_key(&i, |(k, _)| *k) {
            Ok(pos) => self.entries[pos].1.clone(),
            Err(_) => Rational::ZERO,
        }
    }

    pub fn first(&self) -> Option<&(usize, Rational)> {
        self.entries.first()
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|(i, _)| *i)
    }

    pub fn scale(&self, c: &Rational) -> SparseVec {
        if c.is_zero() {
            return SparseVec::new();
        }
        SparseVec { entries: self.entries.iter().map(|(i, v)| (*i, v * c)).collect() }
    }

    /// `self + c * other`, merging the sorted index lists.
    pub fn axpy(&self, c: &Rational, other: &SparseVec) -> SparseVec {
        if c.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((ia, va)), Some((ib, vb))) => {
                    if ia < ib {
                        out.push((*ia, va.clone()));
                        a.next();
                    } else if ib < ia {
                        out.push((*ib, vb * c));
                        b.next();
                    } else {
                        let s = va + &(vb * c);
                        if !s.is_zero() {
                            out.push((*ia, s));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((ia, va)), None) => {
                    out.push((*ia, va.clone()));
                    a.next();
                }
                (None, Some((ib, vb))) => {
                    out.push((*ib, vb * c));
                    b.next();
                }
                (None, None) => break,
            }
        }
        SparseVec { entries: out }
    }

    pub fn add(&self, other: &SparseVec) -> SparseVec {
        self.axpy(&Rational::ONE, other)
    }

    pub fn sub(&self, other: &SparseVec) -> SparseVec {
        self.axpy(&-Rational::ONE, other)
    }

    pub fn dot(&self, other: &SparseVec) -> Rational {
        let mut acc = Rational::ZERO;
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        while let (Some((ia, va)), Some((ib, vb))) = (a.peek(), b.peek()) {
            if ia < ib {
                a.next();
            } else if ib < ia {
                b.next();
            } else {
                acc += va * vb;
                a.next();
                b.next();
            }
        }
        acc
    }
}

impl FromIterator<(usize, Rational)> for SparseVec {
    fn from_iter<I: IntoIterator<Item = (usize, Rational)>>(iter: I) -> Self {
        SparseVec::from_pairs(iter)
    }
}

/// Sparse matrix over ℚ, stored column-wise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    columns: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols, columns: vec![SparseVec::new(); cols] }
    }

    pub fn identity(n: usize) -> Self {
        SparseMatrix { rows: n, cols: n, columns: (0..n).map(SparseVec::unit).collect() }
    }

    pub fn from_columns(rows: usize, columns: Vec<SparseVec>) -> Self {
        for c in &columns {
            if let Some(m) = c.max_index() {
                assert!(m < rows, "column entry out of range");
            }
        }
        SparseMatrix { rows, cols: columns.len(), columns }
    }

    pub fn from_entries<I: IntoIterator<Item = (usize, usize, Rational)>>(
        rows: usize,
        cols: usize,
        entries: I,
    ) -> Self {
        let mut per_col: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); cols];
        for (r, c, v) in entries {
            assert!(r < rows && c < cols, "entry out of range");
            per_col[c].push((r, v));
        }
        SparseMatrix { rows, cols, columns: per_col.into_iter().map(SparseVec::from_pairs).collect() }
    }

    pub fn from_dense(rows: &[Vec<Rational>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        Self::from_entries(
            nrows,
            ncols,
            rows.iter().enumerate().flat_map(|(i, row)| row.iter().enumerate().map(move |(j, v)| (i, j, v.clone()))),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, j: usize) -> &SparseVec {
        &self.columns[j]
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.columns
    }

    pub fn get(&self, r: usize, c: usize) -> Rational {
        self.columns[c].get(r)
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(SparseVec::nnz).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(SparseVec::is_zero)
    }

    /// Entries in column-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.columns.iter().enumerate().flat_map(|(c, col)| col.iter().map(move |(r, v)| (*r, c, v)))
    }

    pub fn transpose(&self) -> SparseMatrix {
        SparseMatrix::from_entries(self.cols, self.rows, self.entries().map(|(r, c, v)| (c, r, v.clone())))
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut acc = SparseVec::new();
        for (j, x) in v.iter() {
            acc = acc.axpy(x, &self.columns[*j]);
        }
        acc
    }

    /// Matrix product `self * rhs`.
    pub fn mul(&self, rhs: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        SparseMatrix { rows: self.rows, cols: rhs.cols, columns: rhs.columns.iter().map(|c| self.apply(c)).collect() }
    }

    pub fn add(&self, rhs: &SparseMatrix) -> SparseMatrix {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols, "dimension mismatch");
        SparseMatrix {
            rows: self.rows,
            cols: self.cols,
            columns: self.columns.iter().zip(&rhs.columns).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, rhs: &SparseMatrix) -> SparseMatrix {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols, "dimension mismatch");
        SparseMatrix {
            rows: self.rows,
            cols: self.cols,
            columns: self.columns.iter().zip(&rhs.columns).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> SparseMatrix {
        SparseMatrix {
            rows: self.rows,
            cols: self.cols,
            columns: self.columns.iter().map(|col| col.scale(c)).collect(),
        }
    }

    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        let mut out = vec![vec![Rational::ZERO; self.cols]; self.rows];
        for (r, c, v) in self.entries() {
            out[r][c] = v.clone();
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    #[test]
    fn axpy_cancels_to_empty() {
        let a = SparseVec::from_pairs([(0, q(1)), (3, q(2))]);
        let b = a.scale(&q(-1));
        assert!(a.add(&b).is_zero());
    }

    #[test]
    fn product_and_transpose() {
        let m = SparseMatrix::from_dense(&[vec![q(1), q(2)], vec![q(0), q(3)]]);
        let mt = m.transpose();
        assert_eq!(mt.get(1, 0), q(2));
        let p = m.mul(&mt);
        assert_eq!(p.to_dense(), vec![vec![q(5), q(6)], vec![q(6), q(9)]]);
        assert_eq!(m.mul(&SparseMatrix::identity(2)), m);
    }

    #[test]
    fn no_stored_zeros() {
        let m = SparseMatrix::from_entries(2, 2, [(0, 0, q(1)), (0, 0, q(-1)), (1, 1, q(0))]);
        assert_eq!(m.nnz(), 0);
    }
}
