//! Finite cochain complexes and bicomplexes, their maps, and the standard
//! constructions between them.
//!
//! Both kinds are instances of [`Complex`], a finitely supported graded
//! space carrying a fixed list of differentials: one (`d`, degree `+1`) for
//! a [`CochainComplex`], two (`∂` of bidegree `(1,0)` and `∂̄` of bidegree
//! `(0,1)`) for a [`Bicomplex`]. Matrices act on column vectors and a
//! differential block is keyed by its source degree.

mod bico;
mod map;
mod ops;
mod validate;

use std::borrow::Cow;
use std::collections::BTreeMap;
use std::fmt::{self, Debug};

use crate::exactlin::Matrix;
use crate::scalar::Field;

pub use bico::{square, totalize, totalize_map, transpose, truncate_third_quadrant, Truncation};
pub use map::{BicomplexMap, BigradedMap, ChainMap, GradedMap};
pub use ops::{
    associator, cokernel, composition, direct_sum, direct_sum_maps, internal_hom, morphism_basis, shift, symmetry,
    tensor, tensor_maps, HomLayout, Tensor,
};
pub use validate::{Defect, Relation, ValidationReport};

pub type Bideg = (i32, i32);

/// An index set for gradings: `i32` for cochain complexes, `(i32, i32)`
/// for bicomplexes.
pub trait Degree: Copy + Ord + Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn add(self, other: Self) -> Self;
    fn sub(self, other: Self) -> Self;
    /// The integer degree entering Koszul signs.
    fn total(self) -> i64;
    /// Degrees of the differentials, in storage order.
    fn differentials() -> &'static [Self];
    fn label(self) -> String;
}

impl Degree for i32 {
    fn zero() -> Self {
        0
    }
    fn add(self, other: Self) -> Self {
        self + other
    }
    fn sub(self, other: Self) -> Self {
        self - other
    }
    fn total(self) -> i64 {
        self as i64
    }
    fn differentials() -> &'static [Self] {
        &[1]
    }
    fn label(self) -> String {
        self.to_string()
    }
}

impl Degree for Bideg {
    fn zero() -> Self {
        (0, 0)
    }
    fn add(self, other: Self) -> Self {
        (self.0 + other.0, self.1 + other.1)
    }
    fn sub(self, other: Self) -> Self {
        (self.0 - other.0, self.1 - other.1)
    }
    fn total(self) -> i64 {
        self.0 as i64 + self.1 as i64
    }
    fn differentials() -> &'static [Self] {
        &[(1, 0), (0, 1)]
    }
    fn label(self) -> String {
        format!("({},{})", self.0, self.1)
    }
}

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum StructureError {
    #[error("block {block} at {at} has shape {found:?}, expected {expected:?}")]
    Shape { block: String, at: String, expected: (usize, usize), found: (usize, usize) },
    #[error("{0}")]
    Domain(String),
}

/// A finitely supported graded vector space with differentials.
///
/// Only nonzero dimensions and nonzero blocks are stored, so derived
/// equality is equality of the underlying data.
#[derive(Clone, PartialEq)]
pub struct Complex<D, F> {
    dims: BTreeMap<D, usize>,
    diffs: Vec<BTreeMap<D, Matrix<F>>>,
}

pub type CochainComplex<F> = Complex<i32, F>;
pub type Bicomplex<F> = Complex<Bideg, F>;

impl<D: Degree, F: Field> Complex<D, F> {
    pub fn zero() -> Self {
        Complex { dims: BTreeMap::new(), diffs: vec![BTreeMap::new(); D::differentials().len()] }
    }

    /// `𝐤` in degree `at`, all differentials zero.
    pub fn point(at: D) -> Self {
        Self::with_dims([(at, 1)])
    }

    /// The unit of the tensor product.
    pub fn unit() -> Self {
        Self::point(D::zero())
    }

    /// Graded space with zero differentials.
    pub fn with_dims(dims: impl IntoIterator<Item = (D, usize)>) -> Self {
        let mut c = Self::zero();
        for (x, n) in dims {
            if n > 0 {
                *c.dims.entry(x).or_insert(0) += n;
            }
        }
        c
    }

    /// Builds a complex from dimensions and one block map per differential.
    /// Blocks are checked for shape; zero blocks are dropped. The
    /// differential relations are not checked here, see [`Complex::validate`].
    pub fn from_blocks(
        dims: impl IntoIterator<Item = (D, usize)>,
        diffs: Vec<BTreeMap<D, Matrix<F>>>,
    ) -> Result<Self, StructureError> {
        assert_eq!(diffs.len(), D::differentials().len(), "wrong number of differentials");
        let mut c = Self::with_dims(dims);
        for (k, blocks) in diffs.into_iter().enumerate() {
            let step = D::differentials()[k];
            for (x, m) in blocks {
                let expected = (c.dim(x.add(step)), c.dim(x));
                if m.shape() != expected {
                    return Err(StructureError::Shape {
                        block: diff_name::<D>(k).to_string(),
                        at: x.label(),
                        expected,
                        found: m.shape(),
                    });
                }
                if !m.is_zero() {
                    c.diffs[k].insert(x, m);
                }
            }
        }
        Ok(c)
    }

    pub fn dim(&self, x: D) -> usize {
        self.dims.get(&x).copied().unwrap_or(0)
    }

    pub fn dims(&self) -> &BTreeMap<D, usize> {
        &self.dims
    }

    /// Degrees of nonzero dimension, ascending.
    pub fn support(&self) -> impl Iterator<Item = D> + '_ {
        self.dims.keys().copied()
    }

    pub fn total_dim(&self) -> usize {
        self.dims.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dims.is_empty()
    }

    /// Block of differential `k` out of degree `x`, zero if not stored.
    pub fn diff(&self, k: usize, x: D) -> Cow<'_, Matrix<F>> {
        match self.diffs[k].get(&x) {
            Some(m) => Cow::Borrowed(m),
            None => Cow::Owned(Matrix::zeros(self.dim(x.add(D::differentials()[k])), self.dim(x))),
        }
    }

    /// Stored (nonzero) blocks of differential `k`.
    pub fn diff_blocks(&self, k: usize) -> &BTreeMap<D, Matrix<F>> {
        &self.diffs[k]
    }

    pub fn map_scalars<G: Field>(&self, f: impl Fn(&F) -> G) -> Complex<D, G> {
        Complex {
            dims: self.dims.clone(),
            diffs: self.diffs.iter().map(|b| b.iter().map(|(x, m)| (*x, map_matrix(m, &f))).collect()).collect(),
        }
    }
}

impl<D: Degree, F: Field> fmt::Debug for Complex<D, F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = f.debug_struct("Complex");
        s.field("dims", &self.dims);
        for (k, blocks) in self.diffs.iter().enumerate() {
            s.field(diff_name::<D>(k), blocks);
        }
        s.finish()
    }
}

pub(crate) fn map_matrix<F: Field, G: Field>(m: &Matrix<F>, f: impl Fn(&F) -> G) -> Matrix<G> {
    Matrix::from_rows(m.to_rows().iter().map(|r| r.iter().map(&f).collect()).collect(), m.cols())
}

pub(crate) fn diff_name<D: Degree>(k: usize) -> &'static str {
    match (D::differentials().len(), k) {
        (1, _) => "d",
        (_, 0) => "∂",
        _ => "∂̄",
    }
}

impl<F: Field> CochainComplex<F> {
    pub fn from_parts(
        dims: impl IntoIterator<Item = (i32, usize)>,
        d: impl IntoIterator<Item = (i32, Matrix<F>)>,
    ) -> Result<Self, StructureError> {
        Self::from_blocks(dims, vec![d.into_iter().collect()])
    }

    pub fn d(&self, n: i32) -> Cow<'_, Matrix<F>> {
        self.diff(0, n)
    }

    /// Lowest and highest degree of the support.
    pub fn range(&self) -> Option<(i32, i32)> {
        Some((*self.dims.keys().next()?, *self.dims.keys().next_back()?))
    }
}

impl<F: Field> Bicomplex<F> {
    pub fn from_parts(
        dims: impl IntoIterator<Item = (Bideg, usize)>,
        del: impl IntoIterator<Item = (Bideg, Matrix<F>)>,
        delbar: impl IntoIterator<Item = (Bideg, Matrix<F>)>,
    ) -> Result<Self, StructureError> {
        Self::from_blocks(dims, vec![del.into_iter().collect(), delbar.into_iter().collect()])
    }

    pub fn del(&self, pq: Bideg) -> Cow<'_, Matrix<F>> {
        self.diff(0, pq)
    }

    pub fn delbar(&self, pq: Bideg) -> Cow<'_, Matrix<F>> {
        self.diff(1, pq)
    }

    /// `∂∂̄` out of `pq`, landing in `pq + (1,1)`.
    pub fn del_delbar(&self, pq: Bideg) -> Matrix<F> {
        self.del((pq.0, pq.1 + 1)).mul(&self.delbar(pq))
    }

    /// Componentwise minimum and maximum of the support.
    pub fn bounds(&self) -> Option<(Bideg, Bideg)> {
        let mut it = self.dims.keys();
        let first = *it.next()?;
        let (mut lo, mut hi) = (first, first);
        for &(p, q) in self.dims.keys() {
            lo = (lo.0.min(p), lo.1.min(q));
            hi = (hi.0.max(p), hi.1.max(q));
        }
        Some((lo, hi))
    }
}

/// Offsets of labelled summands inside a direct sum, in a fixed order.
#[derive(Clone, Debug, PartialEq)]
pub struct Layout<K> {
    entries: Vec<(K, usize, usize)>,
    index: BTreeMap<K, usize>,
    total: usize,
}

impl<K: Ord + Clone> Layout<K> {
    /// Summands in the given order; zero-dimensional ones are skipped.
    pub fn new(parts: impl IntoIterator<Item = (K, usize)>) -> Self {
        let mut entries = Vec::new();
        let mut index = BTreeMap::new();
        let mut total = 0;
        for (k, n) in parts {
            if n == 0 {
                continue;
            }
            let prev = index.insert(k.clone(), entries.len());
            assert!(prev.is_none(), "duplicate summand label");
            entries.push((k, total, n));
            total += n;
        }
        Layout { entries, index, total }
    }

    /// `(offset, dim)` of a summand.
    pub fn get(&self, k: &K) -> Option<(usize, usize)> {
        self.index.get(k).map(|&i| (self.entries[i].1, self.entries[i].2))
    }

    pub fn offset(&self, k: &K) -> usize {
        self.get(k).expect("summand not in layout").0
    }

    pub fn total(&self) -> usize {
        self.total
    }

    /// `(label, offset, dim)` in order.
    pub fn iter(&self) -> impl Iterator<Item = (&K, usize, usize)> {
        self.entries.iter().map(|(k, o, n)| (k, *o, *n))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}
