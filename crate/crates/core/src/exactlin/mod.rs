//! Exact linear algebra over a [`Field`]: rank, kernel and image of a
//! matrix, subquotients `N / D` with canonical coset representatives, and
//! the maps that linear maps induce between subquotients.

mod matrix;
mod subspace;

use std::fmt;

pub use matrix::Matrix;
pub use subspace::Subspace;

use crate::scalar::Field;

#[derive(Clone, Debug, PartialEq)]
pub struct RankKernelImage<F> {
    pub rank: usize,
    pub kernel: Subspace<F>,
    pub image: Subspace<F>,
}

/// Rank, kernel and image of `m` computed from a single elimination.
pub fn rank_kernel_image<F: Field>(m: &Matrix<F>) -> RankKernelImage<F> {
    let (r, pivots) = m.rref();
    let kernel = kernel_from_rref(&r, &pivots, m.cols());
    let image = Subspace::span(m.rows(), pivots.iter().map(|&j| m.column(j)));
    RankKernelImage { rank: pivots.len(), kernel, image }
}

pub fn kernel<F: Field>(m: &Matrix<F>) -> Subspace<F> {
    let (r, pivots) = m.rref();
    kernel_from_rref(&r, &pivots, m.cols())
}

pub fn image<F: Field>(m: &Matrix<F>) -> Subspace<F> {
    Subspace::column_space(m)
}

fn kernel_from_rref<F: Field>(r: &Matrix<F>, pivots: &[usize], cols: usize) -> Subspace<F> {
    let mut is_pivot = vec![false; cols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    let vectors = (0..cols).filter(|&f| !is_pivot[f]).map(|f| {
        let mut v = vec![F::zero(); cols];
        v[f] = F::one();
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = r.get(i, f).neg();
        }
        v
    });
    Subspace::span(cols, vectors)
}

/// Which inclusion a containment check was testing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Inclusion {
    /// `denominator ⊆ numerator` of a subquotient.
    DenominatorInNumerator,
    /// `f(source numerator) ⊆ target numerator`.
    NumeratorImage,
    /// `f(source denominator) ⊆ target denominator`.
    DenominatorImage,
}

/// A required inclusion failed; `witness` lies in the smaller space but not
/// in the larger one.
#[derive(Clone, Debug, PartialEq)]
pub struct ContainmentError<F> {
    pub inclusion: Inclusion,
    pub witness: Vec<F>,
}

impl<F: Field> fmt::Display for ContainmentError<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match self.inclusion {
            Inclusion::DenominatorInNumerator => "denominator is not contained in numerator",
            Inclusion::NumeratorImage => "image of the source numerator leaves the target numerator",
            Inclusion::DenominatorImage => "image of the source denominator leaves the target denominator",
        };
        let w: Vec<String> = self.witness.iter().map(|x| x.to_string()).collect();
        write!(f, "{what}; witness ({})", w.join(", "))
    }
}

impl<F: Field> std::error::Error for ContainmentError<F> {}

/// The quotient `num / den` of two nested subspaces.
///
/// `complement` is the canonical complement of `den` in `num` (vectors of
/// `num` vanishing at the pivots of `den`); its echelon basis is the fixed
/// set of coset representatives.
#[derive(Clone, Debug, PartialEq)]
pub struct Subquotient<F> {
    num: Subspace<F>,
    den: Subspace<F>,
    complement: Subspace<F>,
}

impl<F: Field> Subquotient<F> {
    pub fn new(num: Subspace<F>, den: Subspace<F>) -> Result<Self, ContainmentError<F>> {
        assert_eq!(num.ambient(), den.ambient(), "subquotient of different ambient spaces");
        if let Some(witness) = num.witness_outside(&den) {
            return Err(ContainmentError { inclusion: Inclusion::DenominatorInNumerator, witness });
        }
        let complement = den.complement_in(&num);
        Ok(Subquotient { num, den, complement })
    }

    pub fn dim(&self) -> usize {
        self.complement.dim()
    }

    pub fn ambient(&self) -> usize {
        self.num.ambient()
    }

    pub fn numerator(&self) -> &Subspace<F> {
        &self.num
    }

    pub fn denominator(&self) -> &Subspace<F> {
        &self.den
    }

    /// Canonical coset representatives, one per dimension.
    pub fn representatives(&self) -> &[Vec<F>] {
        self.complement.basis()
    }

    /// Coordinates of the class of `v` in the representative basis, `None`
    /// if `v` is not in the numerator.
    pub fn class_coords(&self, v: &[F]) -> Option<Vec<F>> {
        if !self.num.contains(v) {
            return None;
        }
        let r = self.den.reduce(v);
        Some(self.complement.coords(&r).expect("reduced numerator vector lies in the complement"))
    }

    pub fn is_zero_class(&self, v: &[F]) -> bool {
        self.den.contains(v)
    }
}

pub fn subquotient_dim<F: Field>(num: &Subspace<F>, den: &Subspace<F>) -> Result<usize, ContainmentError<F>> {
    Subquotient::new(num.clone(), den.clone()).map(|s| s.dim())
}

/// Matrix of the map `source → target` induced by `f`, in the canonical
/// representative bases.
pub fn induced_subquotient_map<F: Field>(
    f: &Matrix<F>,
    source: &Subquotient<F>,
    target: &Subquotient<F>,
) -> Result<Matrix<F>, ContainmentError<F>> {
    assert_eq!(f.shape(), (target.ambient(), source.ambient()), "map does not fit the subquotients");
    for v in source.num.basis() {
        let w = f.apply(v);
        if !target.num.contains(&w) {
            return Err(ContainmentError { inclusion: Inclusion::NumeratorImage, witness: v.clone() });
        }
    }
    for v in source.den.basis() {
        let w = f.apply(v);
        if !target.den.contains(&w) {
            return Err(ContainmentError { inclusion: Inclusion::DenominatorImage, witness: v.clone() });
        }
    }
    let columns: Vec<Vec<F>> =
        source.representatives().iter().map(|v| target.class_coords(&f.apply(v)).expect("checked above")).collect();
    Ok(Matrix::from_columns(target.dim(), &columns))
}

/// Solves `m x = b`, returning one solution if the system is consistent.
pub fn solve<F: Field>(m: &Matrix<F>, b: &[F]) -> Option<Vec<F>> {
    assert_eq!(m.rows(), b.len());
    let aug = m.hstack(&Matrix::from_columns(b.len(), &[b.to_vec()]));
    let (r, pivots) = aug.rref();
    if pivots.last() == Some(&m.cols()) {
        return None;
    }
    let mut x = vec![F::zero(); m.cols()];
    for (i, &p) in pivots.iter().enumerate() {
        x[p] = r.get(i, m.cols()).clone();
    }
    Some(x)
}
