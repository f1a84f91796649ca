use super::matrix::{rref_rows, Matrix};
use crate::scalar::Field;

/// A linear subspace of `F^n`, stored as the nonzero rows of its reduced row
/// echelon form. Two subspaces are equal iff their stored data is equal.
#[derive(Clone, PartialEq, Debug)]
pub struct Subspace<F> {
    ambient: usize,
    basis: Vec<Vec<F>>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Self::span(ambient, Matrix::<F>::identity(ambient).to_rows())
    }

    /// Span of arbitrary vectors of length `ambient`.
    pub fn span(ambient: usize, vectors: impl IntoIterator<Item = Vec<F>>) -> Self {
        let mut rows: Vec<Vec<F>> = vectors
            .into_iter()
            .inspect(|v| assert_eq!(v.len(), ambient, "vector outside the ambient space"))
            .filter(|v| v.iter().any(|x| !x.is_zero()))
            .collect();
        let pivots = rref_rows(&mut rows, ambient);
        rows.truncate(pivots.len());
        Subspace { ambient, basis: rows, pivots }
    }

    /// Column space of `m`.
    pub fn column_space(m: &Matrix<F>) -> Self {
        Self::span(m.rows(), (0..m.cols()).map(|j| m.column(j)))
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// Echelon basis.
    pub fn basis(&self) -> &[Vec<F>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Basis vectors as the columns of an `ambient × dim` matrix.
    pub fn basis_matrix(&self) -> Matrix<F> {
        Matrix::from_columns(self.ambient, &self.basis)
    }

    /// `v` minus its unique component along this subspace that clears the
    /// pivot positions. Zero iff `v` lies in the subspace.
    pub fn reduce(&self, v: &[F]) -> Vec<F> {
        let mut out = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            let c = out[p].clone();
            if c.is_zero() {
                continue;
            }
            for (x, r) in out.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x = x.sub(&c.mul(r));
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    pub fn contains_space(&self, other: &Self) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    /// First basis vector of `other` not contained in `self`.
    pub fn witness_outside(&self, other: &Self) -> Option<Vec<F>> {
        other.basis.iter().find(|v| !self.contains(v)).cloned()
    }

    /// Coordinates of `v` in the echelon basis, `None` if `v` is outside.
    pub fn coords(&self, v: &[F]) -> Option<Vec<F>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn sum(&self, other: &Self) -> Self {
        assert_eq!(self.ambient, other.ambient);
        Self::span(self.ambient, self.basis.iter().chain(&other.basis).cloned())
    }

    pub fn intersection(&self, other: &Self) -> Self {
        assert_eq!(self.ambient, other.ambient);
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.ambient);
        }
        // x = A a = B b  <=>  [A | -B] (a, b) = 0
        let a = self.basis_matrix();
        let b = other.basis_matrix();
        let k = super::kernel(&a.hstack(&b.neg()));
        let vecs = k.basis.iter().map(|sol| a.apply(&sol[..self.dim()]));
        Self::span(self.ambient, vecs)
    }

    /// The canonical complement of `self` inside `sup`: the vectors of `sup`
    /// vanishing at every pivot position of `self`. Requires `self ⊆ sup`.
    pub fn complement_in(&self, sup: &Self) -> Self {
        Self::span(self.ambient, sup.basis.iter().map(|v| self.reduce(v)))
    }

    /// Image of the subspace under a linear map.
    pub fn image_under(&self, m: &Matrix<F>) -> Self {
        assert_eq!(m.cols(), self.ambient);
        Self::span(m.rows(), self.basis.iter().map(|v| m.apply(v)))
    }
}
