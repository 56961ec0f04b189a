//! Contractions of finite complexes onto their cohomology.
//!
//! In each degree the space is split as `V = Im ⊕ H ⊕ C`, where `Im` is the
//! image of the incoming differential, `Im ⊕ H` is the kernel of the outgoing
//! one, and `C` is spanned by the basis vectors at the pivot columns of the
//! outgoing differential. `h` inverts `d` from `C` (one degree down) onto `Im`
//! and vanishes on `H ⊕ C`, `p` projects onto `H` along `Im ⊕ C`, and `i`
//! includes the chosen cocycles spanning `H`. With these choices
//! `hh = 0`, `hi = 0`, `ph = 0` and `hdh = h` hold identically.

use super::ChainComplexPiece;
use super::{ColumnEchelon, ExactError, Insertion, Rational, SparseMatrix, SparseVec};

/// The split of one degree, given its incoming and outgoing differentials.
#[derive(Clone, Debug)]
pub struct Splitting {
    dim: usize,
    out_columns: Vec<SparseVec>,
    out_echelon: ColumnEchelon,
    image_sources: Vec<usize>,
    kernel_solver: ColumnEchelon,
    harmonic: Vec<SparseVec>,
    forced: usize,
}

/// Components of a vector under `V = Im ⊕ H ⊕ C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    /// `h(x)` in the coordinates of the previous degree.
    pub preimage: SparseVec,
    /// `p(x)` in harmonic coordinates.
    pub harmonic: SparseVec,
    /// The `C` component in the coordinates of this degree.
    pub complement: SparseVec,
}

impl Splitting {
    /// `in_columns` lists, for each basis vector of the previous degree, its image here;
    /// `out_columns` lists, for each basis vector here, its image one degree up.
    /// `in_pivots` are the previous degree's complement indices (the independent
    /// columns of `in_columns`); pass `None` to recompute them.
    /// `forced` are cocycles that must appear (in order) in the harmonic basis.
    pub fn new(
        dim: usize,
        in_columns: &[SparseVec],
        in_pivots: Option<&[usize]>,
        out_columns: Vec<SparseVec>,
        forced: &[SparseVec],
    ) -> Result<Self, ExactError> {
        if out_columns.len() != dim {
            return Err(ExactError::DimensionMismatch(format!(
                "{} outgoing columns for a space of dimension {dim}",
                out_columns.len()
            )));
        }
        let mut out_echelon = ColumnEchelon::new();
        let mut kernel_relations = Vec::new();
        for c in &out_columns {
            if let Insertion::Dependent(rel) = out_echelon.insert(c) {
                kernel_relations.push(rel);
            }
        }
        let image_sources: Vec<usize> = match in_pivots {
            Some(p) => p.to_vec(),
            None => ColumnEchelon::from_columns(in_columns.iter()).independent_columns().to_vec(),
        };
        let mut kernel_solver = ColumnEchelon::new();
        for &s in &image_sources {
            match kernel_solver.insert(&in_columns[s]) {
                Insertion::Independent(_) => {}
                Insertion::Dependent(_) => {
                    return Err(ExactError::DimensionMismatch("incoming pivot columns are not independent".into()))
                }
            }
        }
        let apply_out = |v: &SparseVec| -> SparseVec {
            let mut acc = SparseVec::new();
            for (j, x) in v.iter() {
                acc = acc.axpy(x, &out_columns[*j]);
            }
            acc
        };
        let mut harmonic = Vec::new();
        for (k, rep) in forced.iter().enumerate() {
            if !apply_out(rep).is_zero() {
                return Err(ExactError::RepresentativeNotCocycle(k));
            }
            match kernel_solver.insert(rep) {
                Insertion::Independent(_) => harmonic.push(rep.clone()),
                Insertion::Dependent(_) => return Err(ExactError::RepresentativeExact(k)),
            }
        }
        let cohomology = kernel_relations.len() - image_sources.len();
        for rel in kernel_relations {
            if harmonic.len() >= cohomology {
                break;
            }
            if let Insertion::Independent(_) = kernel_solver.insert(&rel) {
                harmonic.push(rel);
            }
        }
        debug_assert_eq!(harmonic.len(), cohomology);
        Ok(Splitting { dim, out_columns, out_echelon, image_sources, kernel_solver, harmonic, forced: forced.len() })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn cohomology_dim(&self) -> usize {
        self.harmonic.len()
    }

    /// Number of harmonic vectors that came from the caller's forced list.
    pub fn forced_count(&self) -> usize {
        self.forced
    }

    pub fn harmonic(&self) -> &[SparseVec] {
        &self.harmonic
    }

    /// Basis indices spanning the complement `C` (the pivot columns of the outgoing map).
    pub fn complement_indices(&self) -> &[usize] {
        self.out_echelon.independent_columns()
    }

    pub fn out_rank(&self) -> usize {
        self.out_echelon.rank()
    }

    pub fn image_sources(&self) -> &[usize] {
        &self.image_sources
    }

    pub fn decompose(&self, x: &SparseVec) -> Decomposition {
        let mut dx = SparseVec::new();
        for (j, c) in x.iter() {
            dx = dx.axpy(c, &self.out_columns[*j]);
        }
        let complement = self.out_echelon.solve(&dx).expect("image of a vector lies in the column space");
        let k = x.sub(&complement);
        let coeffs = self.kernel_solver.solve(&k).expect("kernel splits as image plus harmonic part");
        let split = self.image_sources.len();
        let mut preimage = Vec::new();
        let mut harmonic = Vec::new();
        for (i, c) in coeffs.iter() {
            if *i < split {
                preimage.push((self.image_sources[*i], c.clone()));
            } else {
                harmonic.push((*i - split, c.clone()));
            }
        }
        Decomposition {
            preimage: SparseVec::from_pairs(preimage),
            harmonic: SparseVec::from_pairs(harmonic),
            complement,
        }
    }
}

/// Per-degree inclusion, projection and homotopy.
///
/// `homotopy[i]` maps degree `i` to degree `i-1` (`homotopy[0]` has zero rows).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Contraction {
    pub inclusion: Vec<SparseMatrix>,
    pub projection: Vec<SparseMatrix>,
    pub homotopy: Vec<SparseMatrix>,
}

pub fn build_contraction(c: &ChainComplexPiece) -> Contraction {
    let dims = c.dims();
    let maps = c.maps();
    let mut inclusion = Vec::new();
    let mut projection = Vec::new();
    let mut homotopy = Vec::new();
    let mut prev_pivots: Option<Vec<usize>> = None;
    for (i, &dim) in dims.iter().enumerate() {
        let in_columns: Vec<SparseVec> = if i == 0 { Vec::new() } else { maps[i - 1].columns().to_vec() };
        let out_columns: Vec<SparseVec> =
            if i < maps.len() { maps[i].columns().to_vec() } else { vec![SparseVec::new(); dim] };
        let split = Splitting::new(dim, &in_columns, prev_pivots.as_deref(), out_columns, &[])
            .expect("a validated complex always splits");
        let hdim = split.cohomology_dim();
        inclusion.push(SparseMatrix::from_columns(dim, split.harmonic().to_vec()));
        let prev_dim = if i == 0 { 0 } else { dims[i - 1] };
        let mut pcols = Vec::with_capacity(dim);
        let mut hcols = Vec::with_capacity(dim);
        for b in 0..dim {
            let dec = split.decompose(&SparseVec::unit(b));
            pcols.push(dec.harmonic);
            hcols.push(dec.preimage);
        }
        projection.push(SparseMatrix::from_columns(hdim, pcols));
        homotopy.push(SparseMatrix::from_columns(prev_dim, hcols));
        prev_pivots = Some(split.complement_indices().to_vec());
    }
    Contraction { inclusion, projection, homotopy }
}

impl Contraction {
    /// Checks `pi = 1`, `dh + hd = 1 - ip`, `hi = 0`, `ph = 0`, `hh = 0` in every degree.
    /// Returns the names of the identities that fail.
    pub fn violated_identities(&self, c: &ChainComplexPiece) -> Vec<String> {
        let dims = c.dims();
        let maps = c.maps();
        let mut bad = Vec::new();
        for (i, &dim) in dims.iter().enumerate() {
            let inc = &self.inclusion[i];
            let proj = &self.projection[i];
            let h = &self.homotopy[i];
            if proj.mul(inc) != SparseMatrix::identity(inc.cols()) {
                bad.push(format!("p i = 1 (degree {i})"));
            }
            let mut lhs = SparseMatrix::zeros(dim, dim);
            if i > 0 {
                lhs = lhs.add(&maps[i - 1].mul(h));
            }
            if i + 1 < dims.len() {
                lhs = lhs.add(&self.homotopy[i + 1].mul(&maps[i]));
            }
            let rhs = SparseMatrix::identity(dim).sub(&inc.mul(proj));
            if lhs != rhs {
                bad.push(format!("dh + hd = 1 - ip (degree {i})"));
            }
            if i > 0 {
                if !h.mul(inc).is_zero() {
                    bad.push(format!("h i = 0 (degree {i})"));
                }
                if !self.projection[i - 1].mul(h).is_zero() {
                    bad.push(format!("p h = 0 (degree {i})"));
                }
                if i > 1 && !self.homotopy[i - 1].mul(h).is_zero() {
                    bad.push(format!("h h = 0 (degree {i})"));
                }
            }
        }
        bad
    }
}

#[allow(dead_code)]
fn _assert_send_sync() {
    fn is<T: Send + Sync>() {}
    is::<Splitting>();
    is::<Rational>();
}
