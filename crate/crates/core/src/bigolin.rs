//! The Bigolin complex `𝓑_{p,q}(A)`.
//!
//! Cells `(r,s)` with `r < p` and `s < q` sit in degree `r + s + 1`; cells
//! with `r ≥ p` and `s ≥ q` sit in degree `r + s`; all others are dropped.
//! Below the corner the differential is `d = ∂ + ∂̄` followed by projection,
//! from `A^{p−1,q−1}` to `A^{p,q}` it is `∂∂̄`, and above it is `d`. Within a
//! degree the cells are ordered lexicographically.
//!
//! `H^{p+q}(𝓑_{p,q}A)` is Bott-Chern cohomology at `(p,q)` and
//! `H^{p+q−1}(𝓑_{p,q}A)` is Aeppli cohomology at `(p−1,q−1)`.

use std::collections::BTreeMap;

use crate::complexes::{Bicomplex, BicomplexMap, Bideg, ChainMap, CochainComplex, Layout};
use crate::exactlin::Matrix;
use crate::scalar::Field;

/// `𝓑_{p,q}(A)` with the position of every cell of `A` inside it.
#[derive(Clone)]
pub struct Bigolin<F> {
    pub complex: CochainComplex<F>,
    corner: Bideg,
    layouts: BTreeMap<i32, Layout<Bideg>>,
}

impl<F: Field> Bigolin<F> {
    pub fn new(a: &Bicomplex<F>, corner: Bideg) -> Self {
        let mut parts: BTreeMap<i32, Vec<(Bideg, usize)>> = BTreeMap::new();
        for (&rs, &n) in a.dims() {
            if let Some(k) = cell_degree(corner, rs) {
                parts.entry(k).or_default().push((rs, n));
            }
        }
        let layouts: BTreeMap<i32, Layout<Bideg>> = parts.into_iter().map(|(k, v)| (k, Layout::new(v))).collect();
        let (p, q) = corner;
        let mut d = Vec::new();
        for (k, ls) in &layouts {
            let Some(lt) = layouts.get(&(k + 1)) else { continue };
            let mut m = Matrix::zeros(lt.total(), ls.total());
            for (&(r, s), off, _) in ls.iter() {
                if (r, s) == (p - 1, q - 1) {
                    if let Some((to, _)) = lt.get(&(p, q)) {
                        m.add_block(to, off, &a.del_delbar((r, s)));
                    }
                    continue;
                }
                for (kk, next) in [(0, (r + 1, s)), (1, (r, s + 1))] {
                    if let (Some((to, _)), Some(b)) = (lt.get(&next), a.diff_blocks(kk).get(&(r, s))) {
                        m.add_block(to, off, b);
                    }
                }
            }
            d.push((*k, m));
        }
        let dims: Vec<(i32, usize)> = layouts.iter().map(|(k, l)| (*k, l.total())).collect();
        let complex = CochainComplex::from_parts(dims, d).expect("Bigolin blocks fit");
        Bigolin { complex, corner, layouts }
    }

    pub fn corner(&self) -> Bideg {
        self.corner
    }

    /// The cells making up degree `k`.
    pub fn layout(&self, k: i32) -> Option<&Layout<Bideg>> {
        self.layouts.get(&k)
    }

    /// Degree and offset of the summand `A^{rs}`, if it survives.
    pub fn locate(&self, rs: Bideg) -> Option<(i32, usize)> {
        let k = cell_degree(self.corner, rs)?;
        let (off, _) = self.layouts.get(&k)?.get(&rs)?;
        Some((k, off))
    }
}

/// Degree of the cell `(r,s)` in `𝓑_{p,q}`, `None` if it is dropped.
pub fn cell_degree(corner: Bideg, (r, s): Bideg) -> Option<i32> {
    let (p, q) = corner;
    if r < p && s < q {
        Some(r + s + 1)
    } else if r >= p && s >= q {
        Some(r + s)
    } else {
        None
    }
}

pub fn bigolin_complex<F: Field>(a: &Bicomplex<F>, p: i32, q: i32) -> CochainComplex<F> {
    Bigolin::new(a, (p, q)).complex
}

/// `𝓑 = 𝓑_{0,0}`.
pub fn bigolin<F: Field>(a: &Bicomplex<F>) -> CochainComplex<F> {
    bigolin_complex(a, 0, 0)
}

/// `𝓑_{p,q}(f)`: `f` applied cell by cell.
pub fn bigolin_map<F: Field>(f: &BicomplexMap<F>, p: i32, q: i32) -> ChainMap<F> {
    let src = Bigolin::new(f.source(), (p, q));
    let tgt = Bigolin::new(f.target(), (p, q));
    bigolin_map_between(f, &src, &tgt)
}

/// `𝓑_{p,q}(f)` between precomputed Bigolin complexes of its ends.
pub fn bigolin_map_between<F: Field>(f: &BicomplexMap<F>, src: &Bigolin<F>, tgt: &Bigolin<F>) -> ChainMap<F> {
    let mut blocks = Vec::new();
    for (k, ls) in &src.layouts {
        let Some(lt) = tgt.layouts.get(k) else { continue };
        let mut m = Matrix::zeros(lt.total(), ls.total());
        for (rs, off, _) in ls.iter() {
            if let (Some((to, _)), Some(b)) = (lt.get(rs), f.blocks().get(rs)) {
                m.add_block(to, off, b);
            }
        }
        blocks.push((*k, m));
    }
    ChainMap::morphism(src.complex.clone(), tgt.complex.clone(), blocks).expect("Bigolin map fits")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::{aeppli, bott_chern, total_cohomology};
    use crate::complexes::{direct_sum, shift, square};
    use crate::scalar::Q;

    fn e_minus1() -> Bicomplex<Q> {
        Bicomplex::from_parts(
            [((-1, 0), 1), ((0, -1), 1), ((-1, -1), 1)],
            [((-1, -1), Matrix::from_i64(1, 1, &[-1]))],
            [((-1, -1), Matrix::from_i64(1, 1, &[1]))],
        )
        .unwrap()
    }

    #[test]
    fn unit_and_square() {
        assert_eq!(bigolin(&Bicomplex::<Q>::unit()), CochainComplex::point(0));
        let b = bigolin(&square::<Q>((-1, -1)));
        assert_eq!(b.dims().iter().map(|(k, n)| (*k, *n)).collect::<Vec<_>>(), vec![(-1, 1), (0, 1)]);
        assert!(b.d(-1).is_invertible());
        assert!(total_cohomology(&b).is_zero());
    }

    #[test]
    fn zigzag_keeps_its_corner() {
        let b = bigolin(&e_minus1());
        assert_eq!(b, CochainComplex::point(-1));
    }

    #[test]
    fn identifications_on_a_sample() {
        let a = direct_sum(&[&e_minus1(), &square((0, -1)), &Bicomplex::point((1, 0))]);
        let (bc, ae) = (bott_chern(&a), aeppli(&a));
        for p in -2..=2 {
            for q in -2..=2 {
                let h = total_cohomology(&bigolin_complex(&a, p, q));
                assert_eq!(h.dim(p + q), bc.dim((p, q)), "BC at {p},{q}");
                assert_eq!(h.dim(p + q - 1), ae.dim((p - 1, q - 1)), "Aeppli at {p},{q}");
            }
        }
    }

    #[test]
    fn corner_moves_by_reindexing() {
        let a = direct_sum(&[&e_minus1(), &square((0, -1)), &Bicomplex::point((1, 0))]);
        for (p, q) in [(1, 0), (-1, 2), (2, 2)] {
            let moved = shift(&bigolin(&shift(&a, (-p, -q))), p + q);
            assert_eq!(bigolin_complex(&a, p, q), moved);
        }
    }

    #[test]
    fn identity_and_fold() {
        let a = e_minus1();
        let id = bigolin_map(&BicomplexMap::identity(&a), 0, 0);
        assert_eq!(id, ChainMap::identity(&bigolin(&a)));
        let aa = direct_sum(&[&a, &a]);
        let fold_blocks = a.dims().iter().map(|(x, &n)| (*x, Matrix::identity(n).hstack(&Matrix::identity(n))));
        let fold = BicomplexMap::morphism(aa, a.clone(), fold_blocks.collect::<Vec<_>>()).unwrap();
        assert!(fold.is_morphism());
        let b = bigolin_map(&fold, 0, 0);
        assert!(b.is_morphism() && b.is_surjective());
        assert_eq!(b.block(-1).to_rows(), Matrix::<Q>::from_i64(1, 2, &[1, 1]).to_rows());
    }
}
