use std::borrow::Cow;
use std::collections::BTreeMap;
use std::fmt;

use super::{map_matrix, Bideg, Complex, Degree, StructureError};
use crate::exactlin::Matrix;
use crate::scalar::Field;

/// A linear map of graded spaces raising degree by `offset`, with one block
/// per source degree. Blocks need not commute with the differentials.
#[derive(Clone, PartialEq)]
pub struct GradedMap<D, F> {
    source: Complex<D, F>,
    target: Complex<D, F>,
    offset: D,
    blocks: BTreeMap<D, Matrix<F>>,
}

/// A degree-0 map of cochain complexes.
pub type ChainMap<F> = GradedMap<i32, F>;
/// A bidegree-(0,0) map of bicomplexes.
pub type BicomplexMap<F> = GradedMap<Bideg, F>;
/// A map of bicomplexes of arbitrary bidegree, such as a homotopy.
pub type BigradedMap<F> = GradedMap<Bideg, F>;

impl<D: Degree, F: Field> GradedMap<D, F> {
    pub fn new(
        source: Complex<D, F>,
        target: Complex<D, F>,
        offset: D,
        blocks: impl IntoIterator<Item = (D, Matrix<F>)>,
    ) -> Result<Self, StructureError> {
        let mut stored = BTreeMap::new();
        for (x, m) in blocks {
            let expected = (target.dim(x.add(offset)), source.dim(x));
            if m.shape() != expected {
                return Err(StructureError::Shape { block: "map".into(), at: x.label(), expected, found: m.shape() });
            }
            if !m.is_zero() {
                stored.insert(x, m);
            }
        }
        Ok(GradedMap { source, target, offset, blocks: stored })
    }

    /// A degree-0 map from its blocks.
    pub fn morphism(
        source: Complex<D, F>,
        target: Complex<D, F>,
        blocks: impl IntoIterator<Item = (D, Matrix<F>)>,
    ) -> Result<Self, StructureError> {
        Self::new(source, target, D::zero(), blocks)
    }

    pub fn zero(source: Complex<D, F>, target: Complex<D, F>, offset: D) -> Self {
        GradedMap { source, target, offset, blocks: BTreeMap::new() }
    }

    pub fn identity(c: &Complex<D, F>) -> Self {
        let blocks = c.dims().iter().map(|(x, &n)| (*x, Matrix::identity(n))).collect();
        GradedMap { source: c.clone(), target: c.clone(), offset: D::zero(), blocks }
    }

    pub fn source(&self) -> &Complex<D, F> {
        &self.source
    }

    pub fn target(&self) -> &Complex<D, F> {
        &self.target
    }

    pub fn offset(&self) -> D {
        self.offset
    }

    /// Block out of degree `x`, zero if not stored.
    pub fn block(&self, x: D) -> Cow<'_, Matrix<F>> {
        match self.blocks.get(&x) {
            Some(m) => Cow::Borrowed(m),
            None => Cow::Owned(Matrix::zeros(self.target.dim(x.add(self.offset)), self.source.dim(x))),
        }
    }

    /// Stored (nonzero) blocks.
    pub fn blocks(&self) -> &BTreeMap<D, Matrix<F>> {
        &self.blocks
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.is_empty()
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &Self) -> Self {
        assert_eq!(inner.target.dims(), self.source.dims(), "composing maps with mismatched ends");
        let offset = inner.offset.add(self.offset);
        let blocks = inner
            .blocks
            .iter()
            .filter_map(|(x, m)| {
                let outer = self.blocks.get(&x.add(inner.offset))?;
                Some((*x, outer.mul(m)))
            })
            .filter(|(_, m)| !m.is_zero())
            .collect();
        GradedMap { source: inner.source.clone(), target: self.target.clone(), offset, blocks }
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&Matrix<F>, &Matrix<F>) -> Matrix<F>) -> Self {
        assert_eq!(self.offset, other.offset, "adding maps of different degrees");
        assert_eq!(self.source.dims(), other.source.dims());
        assert_eq!(self.target.dims(), other.target.dims());
        let keys: std::collections::BTreeSet<D> = self.blocks.keys().chain(other.blocks.keys()).copied().collect();
        let blocks =
            keys.into_iter().map(|x| (x, f(&self.block(x), &other.block(x)))).filter(|(_, m)| !m.is_zero()).collect();
        GradedMap { source: self.source.clone(), target: self.target.clone(), offset: self.offset, blocks }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a.add(b))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a.sub(b))
    }

    pub fn scale(&self, c: &F) -> Self {
        let blocks =
            if c.is_zero() { BTreeMap::new() } else { self.blocks.iter().map(|(x, m)| (*x, m.scale(c))).collect() };
        GradedMap { source: self.source.clone(), target: self.target.clone(), offset: self.offset, blocks }
    }

    pub fn neg(&self) -> Self {
        self.scale(&F::one().neg())
    }

    pub fn is_injective(&self) -> bool {
        self.source.dims().iter().all(|(x, &n)| self.block(*x).rank() == n)
    }

    pub fn is_surjective(&self) -> bool {
        self.target.dims().iter().all(|(y, &n)| self.block(y.sub(self.offset)).rank() == n)
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    /// Inverse of a degree-0 isomorphism.
    pub fn inverse(&self) -> Option<Self> {
        if self.offset != D::zero() || self.source.dims() != self.target.dims() {
            return None;
        }
        let mut blocks = BTreeMap::new();
        for (x, &n) in self.source.dims() {
            let b = self.block(*x);
            let inv = if n == 0 { Matrix::zeros(0, 0) } else { b.inverse()? };
            blocks.insert(*x, inv);
        }
        Some(GradedMap { source: self.target.clone(), target: self.source.clone(), offset: D::zero(), blocks })
    }

    /// Same blocks, new (dimensionally identical) ends.
    pub fn with_ends(&self, source: Complex<D, F>, target: Complex<D, F>) -> Self {
        assert_eq!(source.dims(), self.source.dims());
        assert_eq!(target.dims(), self.target.dims());
        GradedMap { source, target, offset: self.offset, blocks: self.blocks.clone() }
    }

    pub fn map_scalars<G: Field>(&self, f: impl Fn(&F) -> G) -> GradedMap<D, G> {
        GradedMap {
            source: self.source.map_scalars(&f),
            target: self.target.map_scalars(&f),
            offset: self.offset,
            blocks: self.blocks.iter().map(|(x, m)| (*x, map_matrix(m, &f))).collect(),
        }
    }
}

impl<D: Degree, F: Field> fmt::Debug for GradedMap<D, F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GradedMap")
            .field("source", &self.source)
            .field("target", &self.target)
            .field("offset", &self.offset)
            .field("blocks", &self.blocks)
            .finish()
    }
}
