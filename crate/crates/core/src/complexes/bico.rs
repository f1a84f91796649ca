use std::collections::BTreeMap;

use super::{Bicomplex, BicomplexMap, Bideg, ChainMap, CochainComplex, Layout};
use crate::exactlin::{kernel, Matrix, Subspace};
use crate::scalar::Field;

/// The square with lower-left corner `c`: four one-dimensional cells,
/// `∂ = ∂̄ = 1` out of the corner, `∂̄ = 1` and `∂ = −1` into the top.
pub fn square<F: Field>(c: Bideg) -> Bicomplex<F> {
    let one = |x: i64| Matrix::from_i64(1, 1, &[x]);
    let (p, q) = c;
    Bicomplex::from_parts(
        [((p, q), 1), ((p + 1, q), 1), ((p, q + 1), 1), ((p + 1, q + 1), 1)],
        [((p, q), one(1)), ((p, q + 1), one(-1))],
        [((p, q), one(1)), ((p + 1, q), one(1))],
    )
    .expect("square blocks fit")
}

fn total_layouts<F: Field>(a: &Bicomplex<F>) -> BTreeMap<i32, Layout<Bideg>> {
    let mut parts: BTreeMap<i32, Vec<(Bideg, usize)>> = BTreeMap::new();
    for (&(p, q), &n) in a.dims() {
        parts.entry(p + q).or_default().push(((p, q), n));
    }
    parts.into_iter().map(|(n, v)| (n, Layout::new(v))).collect()
}

/// `Tot(A)^n = ⊕_{p+q=n} A^{p,q}` ordered by `p`, with `d = ∂ + ∂̄`.
pub fn totalize<F: Field>(a: &Bicomplex<F>) -> CochainComplex<F> {
    totalize_with_layout(a).0
}

fn totalize_with_layout<F: Field>(a: &Bicomplex<F>) -> (CochainComplex<F>, BTreeMap<i32, Layout<Bideg>>) {
    let layouts = total_layouts(a);
    let dims: Vec<(i32, usize)> = layouts.iter().map(|(n, l)| (*n, l.total())).collect();
    let mut d = Vec::new();
    for (n, ls) in &layouts {
        let Some(lt) = layouts.get(&(n + 1)) else { continue };
        let mut m = Matrix::zeros(lt.total(), ls.total());
        for (&(p, q), off, _) in ls.iter() {
            if let Some(b) = a.diff_blocks(0).get(&(p, q)) {
                m.add_block(lt.offset(&(p + 1, q)), off, b);
            }
            if let Some(b) = a.diff_blocks(1).get(&(p, q)) {
                m.add_block(lt.offset(&(p, q + 1)), off, b);
            }
        }
        d.push((*n, m));
    }
    (CochainComplex::from_parts(dims, d).expect("total blocks fit"), layouts)
}

/// `Tot(f)` for a bicomplex morphism.
pub fn totalize_map<F: Field>(f: &BicomplexMap<F>) -> ChainMap<F> {
    let (src, ls) = totalize_with_layout(f.source());
    let (tgt, lt) = totalize_with_layout(f.target());
    let mut blocks = Vec::new();
    for (n, l) in &ls {
        let Some(t) = lt.get(n) else { continue };
        let mut m = Matrix::zeros(t.total(), l.total());
        for (pq, off, _) in l.iter() {
            if let (Some((ro, _)), Some(b)) = (t.get(pq), f.blocks().get(pq)) {
                m.add_block(ro, off, b);
            }
        }
        blocks.push((*n, m));
    }
    ChainMap::morphism(src, tgt, blocks).expect("total map fits")
}

/// Swaps `(p,q)` and the roles of `∂` and `∂̄`.
pub fn transpose<F: Field>(a: &Bicomplex<F>) -> Bicomplex<F> {
    let flip = |&(p, q): &Bideg| (q, p);
    Bicomplex::from_parts(
        a.dims().iter().map(|(x, n)| (flip(x), *n)),
        a.diff_blocks(1).iter().map(|(x, m)| (flip(x), m.clone())),
        a.diff_blocks(0).iter().map(|(x, m)| (flip(x), m.clone())),
    )
    .expect("transpose preserves shapes")
}

/// The third-quadrant truncation `τ(B)` and its inclusion into `B`.
#[derive(Clone)]
pub struct Truncation<F> {
    pub complex: Bicomplex<F>,
    pub inclusion: BicomplexMap<F>,
    subspaces: BTreeMap<Bideg, Subspace<F>>,
}

impl<F: Field> Truncation<F> {
    /// Coordinates in `τ(B)^{pq}` of a vector of `B^{pq}` lying in it.
    pub fn coords(&self, pq: Bideg, v: &[F]) -> Option<Vec<F>> {
        self.subspaces.get(&pq)?.coords(v)
    }

    /// Factors a morphism `g : Z → B` with image in `τ(B)` through `τ(B)`.
    pub fn lift(&self, g: &BicomplexMap<F>) -> BicomplexMap<F> {
        let mut blocks = Vec::new();
        for (pq, m) in g.blocks() {
            let s = self.subspaces.get(pq).expect("image lies in the truncation");
            let cols: Vec<Vec<F>> =
                (0..m.cols()).map(|j| s.coords(&m.column(j)).expect("image lies in the truncation")).collect();
            blocks.push((*pq, Matrix::from_columns(s.dim(), &cols)));
        }
        BicomplexMap::morphism(g.source().clone(), self.complex.clone(), blocks).expect("lift fits")
    }

    /// `τ(f)`: the restriction of a morphism to the truncations.
    pub fn restrict(&self, f: &BicomplexMap<F>, target: &Truncation<F>) -> BicomplexMap<F> {
        let mut blocks = Vec::new();
        for (pq, s) in &self.subspaces {
            let Some(t) = target.subspaces.get(pq) else { continue };
            let cols: Vec<Vec<F>> = s
                .basis()
                .iter()
                .map(|v| t.coords(&f.block(*pq).apply(v)).expect("morphisms preserve the truncation"))
                .collect();
            blocks.push((*pq, Matrix::from_columns(t.dim(), &cols)));
        }
        BicomplexMap::morphism(self.complex.clone(), target.complex.clone(), blocks).expect("restriction fits")
    }
}

/// `B^{pq}` for `p,q < 0`, `ker ∂` on `p = 0`, `ker ∂̄` on `q = 0`, and
/// `ker ∂ ∩ ker ∂̄` at the origin; zero elsewhere. Each cell carries the
/// echelon basis of its subspace.
pub fn truncate_third_quadrant<F: Field>(b: &Bicomplex<F>) -> Truncation<F> {
    let mut subspaces = BTreeMap::new();
    for (&(p, q), &n) in b.dims() {
        if p > 0 || q > 0 {
            continue;
        }
        let s = match (p == 0, q == 0) {
            (false, false) => Subspace::full(n),
            (true, false) => kernel(&b.del((p, q))),
            (false, true) => kernel(&b.delbar((p, q))),
            (true, true) => kernel(&b.del((p, q)).vstack(&b.delbar((p, q)))),
        };
        if !s.is_zero() {
            subspaces.insert((p, q), s);
        }
    }
    let mut diffs = vec![BTreeMap::new(), BTreeMap::new()];
    for (&(p, q), s) in &subspaces {
        for (k, step) in [(1, 0), (0, 1)].into_iter().enumerate() {
            let to = (p + step.0, q + step.1);
            let Some(t) = subspaces.get(&to) else { continue };
            let d = b.diff(k, (p, q));
            let cols: Vec<Vec<F>> =
                s.basis().iter().map(|v| t.coords(&d.apply(v)).expect("differentials preserve τ")).collect();
            diffs[k].insert((p, q), Matrix::from_columns(t.dim(), &cols));
        }
    }
    let complex =
        Bicomplex::from_blocks(subspaces.iter().map(|(x, s)| (*x, s.dim())), diffs).expect("truncation blocks fit");
    let inclusion = BicomplexMap::morphism(
        complex.clone(),
        b.clone(),
        subspaces.iter().map(|(x, s)| (*x, s.basis_matrix())).collect::<Vec<_>>(),
    )
    .expect("inclusion fits");
    Truncation { complex, inclusion, subspaces }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::direct_sum;
    use crate::scalar::Q;

    fn e1() -> Bicomplex<Q> {
        Bicomplex::from_parts(
            [((0, 1), 1), ((1, 0), 1), ((1, 1), 1)],
            [((0, 1), Matrix::from_i64(1, 1, &[1]))],
            [((1, 0), Matrix::from_i64(1, 1, &[-1]))],
        )
        .unwrap()
    }

    #[test]
    fn square_is_valid() {
        assert!(square::<Q>((0, 0)).is_valid());
        assert!(square::<Q>((-3, 2)).is_valid());
    }

    #[test]
    fn truncation_examples() {
        let unit = Bicomplex::<Q>::unit();
        assert_eq!(truncate_third_quadrant(&unit).complex, unit);
        assert!(truncate_third_quadrant(&e1()).complex.is_zero());
        let sq = square::<Q>((-1, -1));
        let t = truncate_third_quadrant(&sq);
        assert_eq!(t.complex, sq);
        assert!(t.inclusion.is_morphism());
        let tt = truncate_third_quadrant(&t.complex);
        assert_eq!(tt.complex, t.complex);
    }

    #[test]
    fn totalization_examples() {
        assert_eq!(totalize(&Bicomplex::<Q>::point((2, 3))), CochainComplex::point(5));
        let t = totalize(&e1());
        assert!(t.is_valid());
        assert_eq!(t.dims().values().copied().collect::<Vec<_>>(), vec![2, 1]);
        assert_eq!(t.d(1).rank(), 1);
        let f = totalize_map(&BicomplexMap::identity(&direct_sum(&[&e1(), &square((0, 0))])));
        assert!(f.is_morphism() && f.is_isomorphism());
    }

    #[test]
    fn transpose_is_an_involution() {
        let a = e1();
        assert!(transpose(&a).is_valid());
        assert_eq!(transpose(&transpose(&a)), a);
    }
}
