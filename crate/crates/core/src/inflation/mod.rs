//! The bicomplexes `E_n` and the inflation functor `Inf(C) = ⊕ₙ E_n ⊗ Cⁿ`.
//!
//! `E_n` has one generator `(i,j)_n` per cell: for `n ≥ 0` the cells with
//! `i,j ≥ 0, i+j = n` and `i,j > 0, i+j = n+1`; for `n < 0` the cells with
//! `i,j ≤ 0, i+j = n` and `i,j < 0, i+j = n−1`. The differentials are
//! `∂(i,j)_n = j·(i+1,j)_n` and `∂̄(i,j)_n = −i·(i,j+1)_n`.

mod adjunction;

use std::collections::BTreeMap;

pub use adjunction::{counit, left_adjunct, right_adjunct, triangle_bigolin, triangle_inflation, unit};

use crate::complexes::{Bicomplex, BicomplexMap, Bideg, ChainMap, CochainComplex, Layout};
use crate::exactlin::Matrix;
use crate::scalar::{sign, Field};

/// Whether `(i,j)_n` is a generator of `E_n`.
pub fn is_ele_cell(n: i32, (i, j): Bideg) -> bool {
    if n >= 0 {
        (i >= 0 && j >= 0 && i + j == n) || (i > 0 && j > 0 && i + j == n + 1)
    } else {
        (i <= 0 && j <= 0 && i + j == n) || (i < 0 && j < 0 && i + j == n - 1)
    }
}

/// The cells of `E_n`, lexicographically.
pub fn ele_cells(n: i32) -> Vec<Bideg> {
    let r = n.abs() + 1;
    let mut cells: Vec<Bideg> =
        (-r..=r).flat_map(|i| (-r..=r).map(move |j| (i, j))).filter(|&c| is_ele_cell(n, c)).collect();
    cells.sort();
    cells
}

/// Indices `n` with `(p,q)` a cell of `E_n`, ascending.
pub fn ele_indices((p, q): Bideg) -> Vec<i32> {
    [p + q - 1, p + q, p + q + 1].into_iter().filter(|&n| is_ele_cell(n, (p, q))).collect()
}

/// `E_n`, which is also `Inf` of `𝐤` in degree `n`.
pub fn ele<F: Field>(n: i32) -> Bicomplex<F> {
    inflate(&CochainComplex::point(n))
}

/// Coefficient of `(i+1,j)_n` in `∂(i,j)_n` (`k = 0`) or of `(i,j+1)_n` in
/// `∂̄(i,j)_n` (`k = 1`); zero when the target is not a cell.
pub fn ele_coefficient(n: i32, k: usize, (i, j): Bideg) -> i64 {
    let to = if k == 0 { (i + 1, j) } else { (i, j + 1) };
    if !is_ele_cell(n, (i, j)) || !is_ele_cell(n, to) {
        return 0;
    }
    if k == 0 {
        i64::from(j)
    } else {
        -i64::from(i)
    }
}

/// `Inf(C)` with the position of each summand `(p,q)_n ⊗ Cⁿ`.
///
/// At every bidegree the summands are ordered by ascending `n`.
#[derive(Clone)]
pub struct Inflation<F> {
    pub complex: Bicomplex<F>,
    layouts: BTreeMap<Bideg, Layout<i32>>,
}

impl<F: Field> Inflation<F> {
    pub fn new(c: &CochainComplex<F>) -> Self {
        let mut parts: BTreeMap<Bideg, Vec<(i32, usize)>> = BTreeMap::new();
        for (&n, &dim) in c.dims() {
            for cell in ele_cells(n) {
                parts.entry(cell).or_default().push((n, dim));
            }
        }
        let layouts: BTreeMap<Bideg, Layout<i32>> = parts.into_iter().map(|(x, v)| (x, Layout::new(v))).collect();
        let mut diffs = vec![BTreeMap::new(), BTreeMap::new()];
        for (&(i, j), ls) in &layouts {
            for (k, to) in [(0, (i + 1, j)), (1, (i, j + 1))] {
                let Some(lt) = layouts.get(&to) else { continue };
                let mut m = Matrix::zeros(lt.total(), ls.total());
                for (&n, off, dim) in ls.iter() {
                    let e = ele_coefficient(n, k, (i, j));
                    if e != 0 {
                        m.add_block(lt.offset(&n), off, &Matrix::scalar(dim, F::from_i64(e)));
                    }
                    if let Some((to_off, _)) = lt.get(&(n + 1)) {
                        let s = F::from_i64(sign(i64::from(i + j + n)));
                        m.add_block(to_off, off, &c.d(n).scale(&s));
                    }
                }
                diffs[k].insert((i, j), m);
            }
        }
        let dims: Vec<(Bideg, usize)> = layouts.iter().map(|(x, l)| (*x, l.total())).collect();
        let complex = Bicomplex::from_blocks(dims, diffs).expect("inflation blocks fit");
        Inflation { complex, layouts }
    }

    /// Offset of `(p,q)_n ⊗ Cⁿ` inside `Inf(C)^{p,q}`.
    pub fn offset(&self, pq: Bideg, n: i32) -> Option<usize> {
        Some(self.layouts.get(&pq)?.get(&n)?.0)
    }

    /// The summands of `Inf(C)^{p,q}` by index `n`.
    pub fn layout(&self, pq: Bideg) -> Option<&Layout<i32>> {
        self.layouts.get(&pq)
    }
}

pub fn inflate<F: Field>(c: &CochainComplex<F>) -> Bicomplex<F> {
    Inflation::new(c).complex
}

/// `Inf(f)`: `(i,j)_n ⊗ c ↦ (i,j)_n ⊗ f(c)`.
pub fn inflate_map<F: Field>(f: &ChainMap<F>) -> BicomplexMap<F> {
    inflate_map_between(f, &Inflation::new(f.source()), &Inflation::new(f.target()))
}

pub fn inflate_map_between<F: Field>(f: &ChainMap<F>, src: &Inflation<F>, tgt: &Inflation<F>) -> BicomplexMap<F> {
    assert_eq!(f.offset(), 0, "inflation is defined on degree-0 maps");
    let mut blocks = Vec::new();
    for (pq, ls) in &src.layouts {
        let Some(lt) = tgt.layouts.get(pq) else { continue };
        let mut m = Matrix::zeros(lt.total(), ls.total());
        for (n, off, _) in ls.iter() {
            if let (Some((to, _)), Some(b)) = (lt.get(n), f.blocks().get(n)) {
                m.add_block(to, off, b);
            }
        }
        blocks.push((*pq, m));
    }
    BicomplexMap::morphism(src.complex.clone(), tgt.complex.clone(), blocks).expect("inflated map fits")
}

/// The cochain complex `(A^{p,0}, ∂)` for `p ≥ 0`.
///
/// On `Inf(C)` this recovers `C` in nonnegative degrees.
pub fn nonnegative_row<F: Field>(a: &Bicomplex<F>) -> CochainComplex<F> {
    let dims: Vec<(i32, usize)> =
        a.dims().iter().filter(|((p, q), _)| *p >= 0 && *q == 0).map(|((p, _), n)| (*p, *n)).collect();
    let d: Vec<(i32, Matrix<F>)> =
        dims.iter().filter(|(p, _)| a.dim((p + 1, 0)) > 0).map(|&(p, _)| (p, a.del((p, 0)).into_owned())).collect();
    CochainComplex::from_parts(dims, d).expect("row blocks fit")
}

/// The restriction of a bicomplex morphism to the nonnegative `q = 0` rows.
pub fn nonnegative_row_map<F: Field>(f: &BicomplexMap<F>) -> ChainMap<F> {
    let blocks: Vec<(i32, Matrix<F>)> =
        f.blocks().iter().filter(|((p, q), _)| *p >= 0 && *q == 0).map(|((p, _), m)| (*p, m.clone())).collect();
    ChainMap::morphism(nonnegative_row(f.source()), nonnegative_row(f.target()), blocks).expect("row map fits")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::{aeppli, bott_chern, is_pluripotential_acyclic, is_pluripotential_weq};
    use crate::complexes::tensor;
    use crate::scalar::Q;

    fn cells_with_arrows(n: i32) -> Vec<(Bideg, usize, i64)> {
        let e = ele::<Q>(n);
        let mut out = Vec::new();
        for k in 0..2 {
            for (x, m) in e.diff_blocks(k) {
                out.push((*x, k, crate::scalar::format_q(m.get(0, 0)).parse::<i64>().unwrap()));
            }
        }
        out
    }

    #[test]
    fn ele_pictures() {
        assert_eq!(ele::<Q>(0), Bicomplex::unit());
        assert_eq!(ele_cells(1), vec![(0, 1), (1, 0), (1, 1)]);
        assert_eq!(cells_with_arrows(1), vec![((0, 1), 0, 1), ((1, 0), 1, -1)]);
        assert_eq!(ele_cells(-2), vec![(-2, -1), (-2, 0), (-1, -2), (-1, -1), (0, -2)]);
        let mut arrows = cells_with_arrows(-2);
        arrows.sort();
        assert_eq!(arrows, vec![((-2, -1), 0, -1), ((-2, -1), 1, 2), ((-1, -2), 0, -2), ((-1, -2), 1, 1)]);
        for n in -4..=4 {
            let e = ele::<Q>(n);
            assert!(e.is_valid(), "E_{n}");
            assert_eq!(e.total_dim() as i32, 2 * n.abs() + 1);
        }
    }

    fn simplex_chains(k: usize) -> CochainComplex<Q> {
        crate::enrichment::normalized_simplex_chains(k)
    }

    #[test]
    fn inflated_interval() {
        let c = simplex_chains(1);
        let inf = Inflation::new(&c);
        let a = &inf.complex;
        assert!(a.is_valid());
        let dims: Vec<(Bideg, usize)> = a.dims().iter().map(|(x, n)| (*x, *n)).collect();
        assert_eq!(dims, vec![((-1, -1), 1), ((-1, 0), 1), ((0, -1), 1), ((0, 0), 2)]);
        // ∂∂̄ of the generator at (−1,−1) is the difference of the vertices.
        let ddbar = a.del_delbar((-1, -1));
        assert_eq!(ddbar.column(0), vec![Q::from_integer((-1).into()), Q::from_integer(1.into())]);
        // Contractible, not acyclic: the vertices survive as one class.
        assert_eq!(bott_chern(a).dims().into_iter().collect::<Vec<_>>(), vec![((0, 0), 1)]);
        assert_eq!(aeppli(a).dims().into_iter().collect::<Vec<_>>(), vec![((0, 0), 1)]);
    }

    #[test]
    fn inflated_triangle() {
        let inf = inflate(&simplex_chains(2));
        assert!(inf.is_valid());
        assert_eq!(inf.dim((0, 0)), 3);
        assert_eq!(inf.dim((-1, -1)), 1 + 3);
        assert_eq!(inf.dim((-1, 0)), 3);
        assert_eq!(inf.dim((-2, 0)), 1);
    }

    #[test]
    fn inflated_simplices_are_contractible() {
        for k in 1..=3 {
            let c = simplex_chains(k);
            let ones = Matrix::from_rows(vec![vec![Q::from_integer(1.into()); c.dim(0)]], c.dim(0));
            let aug = ChainMap::morphism(c.clone(), CochainComplex::point(0), [(0, ones)]).unwrap();
            assert!(aug.is_morphism());
            assert!(is_pluripotential_weq(&inflate_map(&aug)).is_ok(), "Δ^{k}");
        }
        assert!(is_pluripotential_acyclic(&inflate(
            &CochainComplex::<Q>::from_parts([(-1, 1), (0, 1)], [(-1, Matrix::from_i64(1, 1, &[1]))]).unwrap()
        )));
    }

    #[test]
    fn functoriality_and_row() {
        let c = simplex_chains(2);
        assert_eq!(inflate(&CochainComplex::<Q>::zero()), Bicomplex::zero());
        assert_eq!(inflate_map(&ChainMap::identity(&c)), BicomplexMap::identity(&inflate(&c)));
        let z = inflate_map(&ChainMap::zero(c.clone(), c.clone(), 0));
        assert!(z.is_zero() && z.is_morphism());
        let pos = CochainComplex::<Q>::from_parts(
            [(0, 1), (1, 2), (2, 1)],
            [(0, Matrix::from_i64(2, 1, &[1, 1])), (1, Matrix::from_i64(1, 2, &[1, -1]))],
        )
        .unwrap();
        assert_eq!(nonnegative_row(&inflate(&pos)), pos);
    }

    #[test]
    fn powers_of_e1_match_e_n() {
        let e1 = ele::<Q>(1);
        let em1 = ele::<Q>(-1);
        let (mut p, mut m) = (e1.clone(), em1.clone());
        for n in 2..=3 {
            p = tensor(&p, &e1);
            m = tensor(&m, &em1);
            for (x, y) in [(&p, ele::<Q>(n)), (&m, ele::<Q>(-n))] {
                assert_eq!(bott_chern(x).dims(), bott_chern(&y).dims());
                assert_eq!(aeppli(x).dims(), aeppli(&y).dims());
            }
        }
    }
}
