//! Cohomology of `(B, d)` and its minimal A∞ model.
//!
//! `B` splits into finite pieces indexed by `(weight class, scaled degree)`.
//! Each piece gets a [`Splitting`] whose harmonic part starts with the cocycle
//! `∂̄_K` when the piece is the one carrying `e_K`. The A∞ products are the
//! homological perturbation sums
//!
//! ```text
//! μ^k(y_k,…,y_1) = p λ(y_k,…,y_1),
//! λ(y_k,…,y_1)   = Σ_r μ²_B(Λ(y_k,…,y_{r+1}), Λ(y_r,…,y_1)),
//! Λ(y) = i(y),   Λ(y_k,…,y_1) = H λ(y_k,…,y_1)   (k ≥ 2),
//! ```
//!
//! with `μ²_B(a, b) = (−1)^{|b|} a b` and `H(a) = (−1)^{|a|} h(a)`, which is a
//! homotopy for `μ¹_B(a) = (−1)^{|a|} d a`. Every term is degree 0 in the bar
//! grading, so no further signs appear.

use std::collections::{BTreeMap, HashMap};
use std::hash::Hash;
use std::sync::{Arc, Mutex, OnceLock};

use crate::exact::{ExactError, Rational, SparseMatrix, SparseVec, Splitting};
use crate::lattice::{self, LatticeClass, LatticeVector, SubsetK};
use crate::weyl::{bigraded_basis, differential_monomial, MFConfig, Monomial, OperatorElement, WeylError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MinimalError {
    #[error(transparent)]
    Weyl(#[from] WeylError),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("auxiliary index for j = {0} must differ from j and lie in [n+2]")]
    BadChoice(usize),
    #[error("arity {k} is outside 1..={max}")]
    ArityBound { k: usize, max: usize },
    #[error("piece (weight {weight:?}, degree {degree}/(n+2)) has cohomology of dimension {dim}")]
    UnexpectedCohomology { weight: Vec<i64>, degree: i64, dim: usize },
    #[error("μ^{0} has nonzero entries below arity n+2")]
    PrematureProduct(usize),
}

/// The auxiliary index `k(j) ≠ j` used in `∂̄_j = ∂_j − a_j W/(z_j z_{k(j)}) θ_{k(j)}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DbarChoice {
    aux: Vec<usize>,
}

impl DbarChoice {
    /// `k(j)` = smallest index different from `j`.
    pub fn smallest(n: usize) -> Self {
        DbarChoice { aux: (0..n + 2).map(|j| usize::from(j == 0)).collect() }
    }

    /// 0-based auxiliary indices.
    pub fn new(aux: Vec<usize>, n: usize) -> Result<Self, MinimalError> {
        if aux.len() != n + 2 {
            return Err(MinimalError::BadChoice(aux.len()));
        }
        for (j, &k) in aux.iter().enumerate() {
            if k == j || k >= n + 2 {
                return Err(MinimalError::BadChoice(j));
            }
        }
        Ok(DbarChoice { aux })
    }

    pub fn aux(&self) -> &[usize] {
        &self.aux
    }
}

pub fn dbar(j: usize, choice: &DbarChoice, cfg: &MFConfig) -> Result<OperatorElement, MinimalError> {
    let m = cfg.vars();
    if j >= m {
        return Err(MinimalError::BadChoice(j));
    }
    let k = choice.aux[j];
    if k == j || k >= m {
        return Err(MinimalError::BadChoice(j));
    }
    let mut e = OperatorElement::monomial(Monomial::partial(j));
    let mut a = vec![1u16; m];
    a[j] = 0;
    a[k] = 0;
    e.add_term(Monomial::new(&a, SubsetK::singleton(k), SubsetK::EMPTY), &-&cfg.a()[j]);
    Ok(e)
}

/// `∂̄_K`, the product of `∂̄_j` over `j ∈ K` in ascending order.
pub fn dbar_product(k: SubsetK, choice: &DbarChoice, cfg: &MFConfig) -> Result<OperatorElement, MinimalError> {
    let mut e = OperatorElement::one();
    for j in k.iter() {
        e = e.multiply(&dbar(j, choice, cfg)?, cfg.n());
    }
    Ok(e)
}

/// Piece key: canonical weight representative and ℚ-degree times `n+2`.
pub type PieceKey = (LatticeClass, i64);

/// The piece containing `e_K`: weight `−e_K`, scaled degree `n|K|`.
pub fn exterior_key(k: SubsetK, n: usize) -> PieceKey {
    (lattice::weight(k, n).neg(), (n * k.len()) as i64)
}

/// Inverse of [`exterior_key`].
pub fn exterior_label(key: &PieceKey, n: usize) -> Option<SubsetK> {
    let rep = &key.0.representative().0;
    if rep.iter().any(|&x| x > 1) {
        return None;
    }
    let comp = rep.iter().enumerate().filter(|(_, &x)| x == 1).fold(0u32, |b, (j, _)| b | 1 << j);
    if comp == 0 {
        match key.1 {
            0 => Some(SubsetK::EMPTY),
            d if d == (n * (n + 2)) as i64 => Some(SubsetK::full(n)),
            _ => None,
        }
    } else {
        let k = SubsetK(comp).complement(n);
        (key.1 == (n * k.len()) as i64).then_some(k)
    }
}

/// Key of the piece holding the output of a `k`-ary product of `inputs`.
pub fn target_key(inputs: &[SubsetK], n: usize) -> PieceKey {
    let m = n + 2;
    let mut v = LatticeVector::zero(n);
    let mut deg = 0i64;
    for k in inputs {
        v = v.sub(&k.indicator(n));
        deg += (n * k.len()) as i64;
    }
    deg += (2 - inputs.len() as i64) * m as i64;
    (LatticeClass::of(&v), deg)
}

/// Monomial basis of one piece.
#[derive(Debug)]
pub struct Piece {
    pub key: PieceKey,
    pub basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl Piece {
    fn new(key: PieceKey, n: usize) -> Self {
        let basis = bigraded_basis(&key.0, key.1, n);
        let index = basis.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        Piece { key, basis, index }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn to_vec(&self, x: &OperatorElement) -> SparseVec {
        SparseVec::from_pairs(x.terms().map(|(m, c)| {
            let i = *self.index.get(m).unwrap_or_else(|| panic!("{m:?} is not in piece {:?}", self.key));
            (i, c.clone())
        }))
    }

    pub fn to_element(&self, v: &SparseVec) -> OperatorElement {
        OperatorElement::from_terms(v.iter().map(|(i, c)| (self.basis[*i], c.clone())))
    }
}

/// Insert-once memo: concurrent callers of the same key share one computation.
struct Memo<K, V> {
    map: Mutex<HashMap<K, Arc<OnceLock<V>>>>,
}

impl<K: Hash + Eq + Clone, V: Clone> Memo<K, V> {
    fn new() -> Self {
        Memo { map: Mutex::new(HashMap::new()) }
    }

    fn get_or_init(&self, key: &K, f: impl FnOnce() -> V) -> V {
        let cell = {
            let mut map = self.map.lock().expect("memo lock");
            map.entry(key.clone()).or_insert_with(|| Arc::new(OnceLock::new())).clone()
        };
        cell.get_or_init(f).clone()
    }

    fn len(&self) -> usize {
        self.map.lock().expect("memo lock").len()
    }
}

/// A piece together with its contraction data.
pub struct PieceSplit {
    pub piece: Arc<Piece>,
    pub prev: Arc<Piece>,
    pub splitting: Splitting,
    /// The exterior label whose representative is harmonic vector 0.
    pub label: Option<SubsetK>,
}

/// Single-degree slice of the contraction of one piece.
#[derive(Clone, Debug)]
pub struct PieceContraction {
    pub basis: Vec<Monomial>,
    pub prev_basis: Vec<Monomial>,
    pub inclusion: SparseMatrix,
    pub projection: SparseMatrix,
    pub homotopy: SparseMatrix,
}

/// Lazily computed pieces, splittings and perturbation values for one `(cfg, choice)`.
pub struct MfEngine {
    cfg: MFConfig,
    choice: DbarChoice,
    pieces: Memo<PieceKey, Arc<Piece>>,
    out_columns: Memo<PieceKey, Arc<Vec<SparseVec>>>,
    splits: Memo<PieceKey, Result<Arc<PieceSplit>, MinimalError>>,
    lambdas: Memo<Vec<SubsetK>, Result<Arc<OperatorElement>, MinimalError>>,
}

impl MfEngine {
    pub fn new(cfg: MFConfig, choice: DbarChoice) -> Result<Self, MinimalError> {
        DbarChoice::new(choice.aux.clone(), cfg.n())?;
        Ok(MfEngine {
            cfg,
            choice,
            pieces: Memo::new(),
            out_columns: Memo::new(),
            splits: Memo::new(),
            lambdas: Memo::new(),
        })
    }

    pub fn symmetric(n: usize) -> Result<Self, MinimalError> {
        Self::new(MFConfig::symmetric(n)?, DbarChoice::smallest(n))
    }

    pub fn n(&self) -> usize {
        self.cfg.n()
    }

    pub fn cfg(&self) -> &MFConfig {
        &self.cfg
    }

    pub fn choice(&self) -> &DbarChoice {
        &self.choice
    }

    /// Number of pieces whose contraction has been built so far.
    pub fn cached_pieces(&self) -> usize {
        self.splits.len()
    }

    pub fn piece(&self, key: &PieceKey) -> Arc<Piece> {
        self.pieces.get_or_init(key, || Arc::new(Piece::new(key.clone(), self.n())))
    }

    fn step(&self) -> i64 {
        self.cfg.vars() as i64
    }

    /// Images under `d` of the basis of `key`, in the coordinates of the next piece.
    pub fn differential_columns(&self, key: &PieceKey) -> Arc<Vec<SparseVec>> {
        self.out_columns.get_or_init(key, || {
            let src = self.piece(key);
            let tgt = self.piece(&(key.0.clone(), key.1 + self.step()));
            Arc::new(src.basis.iter().map(|m| tgt.to_vec(&differential_monomial(m, &self.cfg))).collect())
        })
    }

    pub fn split(&self, key: &PieceKey) -> Result<Arc<PieceSplit>, MinimalError> {
        self.splits.get_or_init(key, || {
            let n = self.n();
            let piece = self.piece(key);
            let prev_key = (key.0.clone(), key.1 - self.step());
            let prev = self.piece(&prev_key);
            let in_cols = self.differential_columns(&prev_key);
            let out_cols = self.differential_columns(key);
            let label = exterior_label(key, n);
            let forced = match label {
                Some(k) => vec![piece.to_vec(&dbar_product(k, &self.choice, &self.cfg)?)],
                None => Vec::new(),
            };
            let splitting = Splitting::new(piece.dim(), &in_cols, None, out_cols.to_vec(), &forced)?;
            Ok(Arc::new(PieceSplit { piece, prev, splitting, label }))
        })
    }

    pub fn cohomology_dim(&self, key: &PieceKey) -> Result<usize, MinimalError> {
        Ok(self.split(key)?.splitting.cohomology_dim())
    }

    pub fn contraction_for_piece(&self, key: &PieceKey) -> Result<PieceContraction, MinimalError> {
        let s = self.split(key)?;
        let dim = s.piece.dim();
        let mut pcols = Vec::with_capacity(dim);
        let mut hcols = Vec::with_capacity(dim);
        for b in 0..dim {
            let dec = s.splitting.decompose(&SparseVec::unit(b));
            pcols.push(dec.harmonic);
            hcols.push(dec.preimage);
        }
        Ok(PieceContraction {
            basis: s.piece.basis.clone(),
            prev_basis: s.prev.basis.clone(),
            inclusion: SparseMatrix::from_columns(dim, s.splitting.harmonic().to_vec()),
            projection: SparseMatrix::from_columns(s.splitting.cohomology_dim(), pcols),
            homotopy: SparseMatrix::from_columns(s.prev.dim(), hcols),
        })
    }

    /// `p(x)` expressed on the exterior basis; `x` must be homogeneous.
    pub fn project(&self, x: &OperatorElement) -> Result<Vec<(SubsetK, Rational)>, MinimalError> {
        let Some((w, d, _)) = x.bidegree(self.n()) else {
            return Ok(Vec::new());
        };
        let key = (w, d);
        let s = self.split(&key)?;
        let dim = s.splitting.cohomology_dim();
        if dim == 0 {
            return Ok(Vec::new());
        }
        let Some(label) = s.label.filter(|_| dim == 1) else {
            return Err(MinimalError::UnexpectedCohomology {
                weight: key.0.representative().0.clone(),
                degree: key.1,
                dim,
            });
        };
        let dec = s.splitting.decompose(&s.piece.to_vec(x));
        let c = dec.harmonic.get(0);
        Ok(if c.is_zero() { Vec::new() } else { vec![(label, c)] })
    }

    /// `h(x)` for homogeneous `x`.
    pub fn homotopy(&self, x: &OperatorElement) -> Result<OperatorElement, MinimalError> {
        let Some((w, d, _)) = x.bidegree(self.n()) else {
            return Ok(OperatorElement::zero());
        };
        let s = self.split(&(w, d))?;
        let dec = s.splitting.decompose(&s.piece.to_vec(x));
        Ok(s.prev.to_element(&dec.preimage))
    }

    /// Seidel's `μ²_B(a, b) = (−1)^{|b|} a b`.
    fn mu2_b(&self, a: &OperatorElement, b: &OperatorElement) -> OperatorElement {
        let ab = a.multiply(b, self.n());
        match b.parity() {
            Some(1) => ab.scale(&-Rational::ONE),
            _ => ab,
        }
    }

    fn lambda_sum(&self, inputs: &[SubsetK]) -> Result<OperatorElement, MinimalError> {
        let k = inputs.len();
        let mut acc = OperatorElement::zero();
        for r in 1..k {
            let u = self.big_lambda(&inputs[k - r..])?;
            if u.is_zero() {
                continue;
            }
            let v = self.big_lambda(&inputs[..k - r])?;
            if v.is_zero() {
                continue;
            }
            acc = acc.add(&self.mu2_b(&v, &u));
        }
        Ok(acc)
    }

    fn big_lambda(&self, inputs: &[SubsetK]) -> Result<Arc<OperatorElement>, MinimalError> {
        if inputs.len() == 1 {
            return Ok(Arc::new(dbar_product(inputs[0], &self.choice, &self.cfg)?));
        }
        self.lambdas.get_or_init(&inputs.to_vec(), || {
            let l = self.lambda_sum(inputs)?;
            let h = self.homotopy(&l)?;
            Ok(Arc::new(match l.parity() {
                Some(1) => h.scale(&-Rational::ONE),
                _ => h,
            }))
        })
    }

    /// `μ^k` on the exterior basis; `inputs` are written left to right as `(y_k, …, y_1)`.
    pub fn mu(&self, inputs: &[SubsetK]) -> Result<Vec<(SubsetK, Rational)>, MinimalError> {
        let n = self.n();
        match inputs.len() {
            0 => Err(MinimalError::ArityBound { k: 0, max: usize::MAX }),
            1 => {
                let x = dbar_product(inputs[0], &self.choice, &self.cfg)?;
                let dx = crate::weyl::differential(&x, &self.cfg)?;
                self.project(&dx)
            }
            _ => {
                let key = target_key(inputs, n);
                if self.cohomology_dim(&key)? == 0 {
                    return Ok(Vec::new());
                }
                self.project(&self.lambda_sum(inputs)?)
            }
        }
    }

    /// As [`MfEngine::mu`] but always evaluating the full tree sum, even when the target
    /// piece has no cohomology.
    pub fn mu_full(&self, inputs: &[SubsetK]) -> Result<Vec<(SubsetK, Rational)>, MinimalError> {
        if inputs.len() < 2 {
            return self.mu(inputs);
        }
        self.project(&self.lambda_sum(inputs)?)
    }
}

/// All tuples `(K_1, …, K_k)` with `Σ e_{K_j} ≡ e_{K_0}` in `M` for some `K_0`,
/// each paired with `K_0` and the `M̃` defect `q ≥ 0` (the representation with
/// `K_0 = ∅` is used when both `∅` and `[n+2]` fit).
pub fn weight_admissible_tuples(n: usize, k: usize) -> Vec<(Vec<SubsetK>, SubsetK, i64)> {
    let m = n + 2;
    let mut out = Vec::new();
    for q in 0..=k {
        let mut options: Vec<u32> = Vec::new();
        for bits in 0u32..1 << k {
            let c = bits.count_ones() as usize;
            if c == q || c == q + 1 {
                options.push(bits);
            }
        }
        let mut choice = vec![0usize; m];
        'outer: loop {
            let all_high = choice.iter().all(|&c| options[c].count_ones() as usize == q + 1);
            if !all_high {
                let mut tuple = vec![0u32; k];
                let mut k0 = 0u32;
                for (coord, &c) in choice.iter().enumerate() {
                    let bits = options[c];
                    for (pos, slot) in tuple.iter_mut().enumerate() {
                        if bits >> pos & 1 == 1 {
                            *slot |= 1 << coord;
                        }
                    }
                    if bits.count_ones() as usize == q + 1 {
                        k0 |= 1 << coord;
                    }
                }
                out.push((tuple.into_iter().map(SubsetK).collect(), SubsetK(k0), q as i64));
            }
            for slot in choice.iter_mut() {
                *slot += 1;
                if *slot < options.len() {
                    continue 'outer;
                }
                *slot = 0;
            }
            break;
        }
    }
    out.sort();
    out
}

/// Weight-admissible tuples that also satisfy the degree constraint `k = 2 + nq`,
/// with the matching output label.
pub fn graded_tuples(n: usize, k: usize) -> Vec<(Vec<SubsetK>, SubsetK)> {
    let mut out = Vec::new();
    for (tuple, k0, q) in weight_admissible_tuples(n, k) {
        if k as i64 == 2 + n as i64 * q {
            out.push((tuple, k0));
        } else if k0.is_empty() && q >= 1 && k as i64 == 2 + n as i64 * (q - 1) {
            out.push((tuple, SubsetK::full(n)));
        }
    }
    out
}

pub type MuTable = BTreeMap<Vec<SubsetK>, Vec<(SubsetK, Rational)>>;

/// Sparse tables of `μ^k` on `Λ*ℚ^{n+2}` for `1 ≤ k ≤ max_arity`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalModel {
    pub n: usize,
    pub a_weights: Vec<Rational>,
    pub dbar_aux: Vec<usize>,
    pub max_arity: usize,
    /// Nonzero entries only; inputs written as `(y_k, …, y_1)`.
    pub tables: BTreeMap<usize, MuTable>,
}

#[cfg(feature = "parallel")]
fn map_tuples<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> R + Sync + Send) -> Vec<R> {
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
fn map_tuples<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> R + Sync + Send) -> Vec<R> {
    items.iter().map(f).collect()
}

impl MinimalModel {
    /// Computes every table entry whose inputs pass the weight and degree filters;
    /// entries failing them vanish because their target piece has no cohomology,
    /// which is confirmed piece by piece.
    pub fn compute(engine: &MfEngine, max_arity: usize) -> Result<Self, MinimalError> {
        let n = engine.n();
        let mut tables = BTreeMap::new();
        for k in 1..=max_arity {
            let tuples: Vec<Vec<SubsetK>> = if k == 1 {
                SubsetK::all(n).map(|s| vec![s]).collect()
            } else {
                graded_tuples(n, k).into_iter().map(|(t, _)| t).collect()
            };
            let values = map_tuples(&tuples, |t| engine.mu(t));
            let mut table = MuTable::new();
            for (t, v) in tuples.into_iter().zip(values) {
                let v = v?;
                if !v.is_empty() {
                    table.insert(t, v);
                }
            }
            tables.insert(k, table);
        }
        Ok(MinimalModel {
            n,
            a_weights: engine.cfg().a().to_vec(),
            dbar_aux: engine.choice().aux().to_vec(),
            max_arity,
            tables,
        })
    }

    pub fn entry(&self, inputs: &[SubsetK], output: SubsetK) -> Rational {
        self.tables
            .get(&inputs.len())
            .and_then(|t| t.get(inputs))
            .and_then(|v| v.iter().find(|(k, _)| *k == output))
            .map_or(Rational::ZERO, |(_, c)| c.clone())
    }

    /// Coefficients of `e_∅` in `μ^{n+2}(e_{j_1}, …, e_{j_{n+2}})` for every ordering.
    pub fn permutation_table(&self) -> Vec<(Vec<usize>, Rational)> {
        let m = self.n + 2;
        permutations(m)
            .into_iter()
            .map(|p| {
                let inputs: Vec<SubsetK> = p.iter().map(|&j| SubsetK::singleton(j)).collect();
                (p, self.entry(&inputs, SubsetK::EMPTY))
            })
            .collect()
    }

    /// Sum of [`MinimalModel::permutation_table`]: the coefficient of `W` in the class of `μ^{n+2}`.
    pub fn obstruction_class(&self) -> Result<Rational, MinimalError> {
        for k in 3..self.n + 2 {
            if self.tables.get(&k).is_some_and(|t| !t.is_empty()) {
                return Err(MinimalError::PrematureProduct(k));
            }
        }
        Ok(self.permutation_table().into_iter().map(|(_, c)| c).sum())
    }

    /// Checks the weight and ℚ-degree identities on every stored entry; returns offenders.
    pub fn grading_violations(&self) -> Vec<(Vec<SubsetK>, SubsetK)> {
        let n = self.n;
        let mut bad = Vec::new();
        for (k, table) in &self.tables {
            for (inputs, outs) in table {
                for (k0, _) in outs {
                    let q = lattice::m_tilde_defect(*k0, inputs, n);
                    let degree_ok = {
                        let lhs = lattice::fractional_grading(*k0, n);
                        let rhs: Rational = inputs.iter().map(|s| lattice::fractional_grading(*s, n)).sum::<Rational>()
                            + Rational::from_integer(2 - *k as i64);
                        lhs == rhs
                    };
                    let arity_ok = q.is_some_and(|q| *k as i64 == 2 + n as i64 * q);
                    if !degree_ok || !arity_ok {
                        bad.push((inputs.clone(), *k0));
                    }
                }
            }
        }
        bad
    }
}

/// All permutations of `0..m` in lexicographic order.
pub fn permutations(m: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for j in 0..used.len() {
            if !used[j] {
                used[j] = true;
                cur.push(j);
                rec(cur, used, out);
                cur.pop();
                used[j] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; m], &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::differential;

    #[test]
    fn dbar_is_a_cocycle_of_the_right_degree() {
        for n in 1..4 {
            let cfg = MFConfig::symmetric(n).unwrap();
            let ch = DbarChoice::smallest(n);
            for j in 0..n + 2 {
                let x = dbar(j, &ch, &cfg).unwrap();
                assert!(differential(&x, &cfg).unwrap().is_zero());
                let (w, d, p) = x.bidegree(n).unwrap();
                assert_eq!((w, d), exterior_key(SubsetK::singleton(j), n));
                assert_eq!(p, 1);
            }
        }
    }

    #[test]
    fn dbar_n1_has_two_terms() {
        let cfg = MFConfig::symmetric(1).unwrap();
        let x = dbar(0, &DbarChoice::smallest(1), &cfg).unwrap();
        let expected = OperatorElement::monomial(Monomial::partial(0)).add(&OperatorElement::term(
            Monomial::new(&[0, 0, 1], SubsetK::singleton(1), SubsetK::EMPTY),
            Rational::new(-1, 3),
        ));
        assert_eq!(x, expected);
    }

    #[test]
    fn bad_choice_rejected() {
        assert_eq!(DbarChoice::new(vec![0, 0, 0], 1), Err(MinimalError::BadChoice(0)));
    }

    #[test]
    fn exterior_label_roundtrip() {
        for n in 1..4 {
            for k in SubsetK::all(n) {
                assert_eq!(exterior_label(&exterior_key(k, n), n), Some(k));
            }
        }
    }

    #[test]
    fn admissible_tuple_counts() {
        // n = 2, k = 4, q = 1: each coordinate lies in exactly one or two of the four inputs
        let graded = graded_tuples(2, 4);
        assert_eq!(graded.len(), 10usize.pow(4));
        for (t, k0) in &graded {
            assert_eq!(lattice::homogeneity_defect(*k0, t, 2), Some(1));
        }
    }

    #[test]
    fn permutations_count() {
        assert_eq!(permutations(4).len(), 24);
    }
}
