use std::collections::{BTreeMap, BTreeSet};

use super::{Complex, Degree, GradedMap, Layout};
use crate::exactlin::{induced_subquotient_map, kernel, Matrix, Subquotient, Subspace};
use crate::scalar::{sign, Field};

/// Blockwise direct sum, summands in the given order.
pub fn direct_sum<D: Degree, F: Field>(xs: &[&Complex<D, F>]) -> Complex<D, F> {
    let layouts = sum_layouts(xs);
    let dims: Vec<(D, usize)> = layouts.iter().map(|(x, l)| (*x, l.total())).collect();
    let diffs = (0..D::differentials().len())
        .map(|k| {
            let step = D::differentials()[k];
            let mut blocks = BTreeMap::new();
            for (x, lx) in &layouts {
                let Some(ly) = layouts.get(&x.add(step)) else { continue };
                let mut m = Matrix::zeros(ly.total(), lx.total());
                for (i, c) in xs.iter().enumerate() {
                    if let (Some((ro, _)), Some((co, _)), Some(b)) = (ly.get(&i), lx.get(&i), c.diff_blocks(k).get(x)) {
                        m.add_block(ro, co, b);
                    }
                }
                blocks.insert(*x, m);
            }
            blocks
        })
        .collect();
    Complex::from_blocks(dims, diffs).expect("direct sum blocks fit")
}

fn sum_layouts<D: Degree, F: Field>(xs: &[&Complex<D, F>]) -> BTreeMap<D, Layout<usize>> {
    let degrees: BTreeSet<D> = xs.iter().flat_map(|c| c.support()).collect();
    degrees.into_iter().map(|x| (x, Layout::new(xs.iter().enumerate().map(|(i, c)| (i, c.dim(x)))))).collect()
}

/// Block-diagonal sum of maps of a common degree.
pub fn direct_sum_maps<D: Degree, F: Field>(fs: &[&GradedMap<D, F>]) -> GradedMap<D, F> {
    assert!(!fs.is_empty(), "empty sum of maps");
    let offset = fs[0].offset();
    assert!(fs.iter().all(|f| f.offset() == offset), "summing maps of different degrees");
    let sources: Vec<&Complex<D, F>> = fs.iter().map(|f| f.source()).collect();
    let targets: Vec<&Complex<D, F>> = fs.iter().map(|f| f.target()).collect();
    let ls = sum_layouts(&sources);
    let lt = sum_layouts(&targets);
    let mut blocks = BTreeMap::new();
    for (x, lx) in &ls {
        let Some(ly) = lt.get(&x.add(offset)) else { continue };
        let mut m = Matrix::zeros(ly.total(), lx.total());
        for (i, f) in fs.iter().enumerate() {
            if let (Some((ro, _)), Some((co, _)), Some(b)) = (ly.get(&i), lx.get(&i), f.blocks().get(x)) {
                m.add_block(ro, co, b);
            }
        }
        blocks.insert(*x, m);
    }
    GradedMap::new(direct_sum(&sources), direct_sum(&targets), offset, blocks).expect("sum blocks fit")
}

/// `A[e]`: the space `A^{x}` placed in degree `x + e`, differentials unchanged.
pub fn shift<D: Degree, F: Field>(a: &Complex<D, F>, e: D) -> Complex<D, F> {
    let dims: Vec<(D, usize)> = a.dims().iter().map(|(x, n)| (x.add(e), *n)).collect();
    let diffs = (0..D::differentials().len())
        .map(|k| a.diff_blocks(k).iter().map(|(x, m)| (x.add(e), m.clone())).collect())
        .collect();
    Complex::from_blocks(dims, diffs).expect("shift preserves shapes")
}

/// `A ⊗ B` together with the position of every `a ⊗ b` in it.
///
/// The summands of `(A⊗B)^z` are the `A^x ⊗ B^{z−x}`, ordered by `x`; inside
/// a summand `a_i ⊗ b_j` sits at `i · dim B^{z−x} + j`.
#[derive(Clone)]
pub struct Tensor<D, F> {
    pub complex: Complex<D, F>,
    layouts: BTreeMap<D, Layout<D>>,
    right: BTreeMap<D, usize>,
}

impl<D: Degree, F: Field> Tensor<D, F> {
    pub fn new(a: &Complex<D, F>, b: &Complex<D, F>) -> Self {
        let mut parts: BTreeMap<D, Vec<(D, usize)>> = BTreeMap::new();
        for (x, na) in a.dims() {
            for (y, nb) in b.dims() {
                parts.entry(x.add(*y)).or_default().push((*x, na * nb));
            }
        }
        let layouts: BTreeMap<D, Layout<D>> = parts.into_iter().map(|(z, p)| (z, Layout::new(p))).collect();
        let dims: Vec<(D, usize)> = layouts.iter().map(|(z, l)| (*z, l.total())).collect();
        let mut diffs = Vec::new();
        for (k, &step) in D::differentials().iter().enumerate() {
            let mut blocks = BTreeMap::new();
            for (z, ls) in &layouts {
                let Some(lt) = layouts.get(&z.add(step)) else { continue };
                let mut m = Matrix::zeros(lt.total(), ls.total());
                for (x, off, _) in ls.iter() {
                    let y = z.sub(*x);
                    if let Some(da) = a.diff_blocks(k).get(x) {
                        m.add_block(lt.offset(&x.add(step)), off, &da.kron(&Matrix::identity(b.dim(y))));
                    }
                    if let Some(db) = b.diff_blocks(k).get(&y) {
                        let s = F::from_i64(sign(x.total()));
                        m.add_block(lt.offset(x), off, &Matrix::identity(a.dim(*x)).kron(db).scale(&s));
                    }
                }
                blocks.insert(*z, m);
            }
            diffs.push(blocks);
        }
        let complex = Complex::from_blocks(dims, diffs).expect("tensor blocks fit");
        Tensor { complex, layouts, right: b.dims().clone() }
    }

    /// Degree and index of `a_i ⊗ b_j` for `a_i ∈ A^x`, `b_j ∈ B^y`.
    pub fn position(&self, x: D, i: usize, y: D, j: usize) -> (D, usize) {
        let z = x.add(y);
        (z, self.layouts[&z].offset(&x) + i * self.right[&y] + j)
    }

    /// The summands of degree `z`, labelled by the left degree.
    pub fn layout(&self, z: D) -> Option<&Layout<D>> {
        self.layouts.get(&z)
    }
}

pub fn tensor<D: Degree, F: Field>(a: &Complex<D, F>, b: &Complex<D, F>) -> Complex<D, F> {
    Tensor::new(a, b).complex
}

/// `f ⊗ g` for degree-0 maps; no signs arise.
pub fn tensor_maps<D: Degree, F: Field>(f: &GradedMap<D, F>, g: &GradedMap<D, F>) -> GradedMap<D, F> {
    assert!(f.offset() == D::zero() && g.offset() == D::zero(), "tensor of maps needs degree-0 maps");
    let src = Tensor::new(f.source(), g.source());
    let tgt = Tensor::new(f.target(), g.target());
    let mut blocks = BTreeMap::new();
    for (z, ls) in &src.layouts {
        let Some(lt) = tgt.layouts.get(z) else { continue };
        let mut m = Matrix::zeros(lt.total(), ls.total());
        for (x, off, _) in ls.iter() {
            let y = z.sub(*x);
            if let (Some((ro, _)), Some(fx), Some(gy)) = (lt.get(x), f.blocks().get(x), g.blocks().get(&y)) {
                m.add_block(ro, off, &fx.kron(gy));
            }
        }
        blocks.insert(*z, m);
    }
    GradedMap::morphism(src.complex, tgt.complex, blocks).expect("tensor of maps fits")
}

/// `A ⊗ B → B ⊗ A`, `a ⊗ b ↦ (−1)^{|a||b|} b ⊗ a`.
pub fn symmetry<D: Degree, F: Field>(a: &Complex<D, F>, b: &Complex<D, F>) -> GradedMap<D, F> {
    let ab = Tensor::new(a, b);
    let ba = Tensor::new(b, a);
    let mut blocks = BTreeMap::new();
    for (z, ls) in &ab.layouts {
        let mut m = Matrix::zeros(ba.complex.dim(*z), ls.total());
        for (x, _, _) in ls.iter() {
            let y = z.sub(*x);
            let s = F::from_i64(sign(x.total() * y.total()));
            for i in 0..a.dim(*x) {
                for j in 0..b.dim(y) {
                    let (_, src) = ab.position(*x, i, y, j);
                    let (_, dst) = ba.position(y, j, *x, i);
                    m.set(dst, src, s.clone());
                }
            }
        }
        blocks.insert(*z, m);
    }
    GradedMap::morphism(ab.complex, ba.complex, blocks).expect("symmetry fits")
}

/// `(A ⊗ B) ⊗ C → A ⊗ (B ⊗ C)`.
pub fn associator<D: Degree, F: Field>(a: &Complex<D, F>, b: &Complex<D, F>, c: &Complex<D, F>) -> GradedMap<D, F> {
    let ab = Tensor::new(a, b);
    let left = Tensor::new(&ab.complex, c);
    let bc = Tensor::new(b, c);
    let right = Tensor::new(a, &bc.complex);
    let mut blocks: BTreeMap<D, Matrix<F>> =
        left.complex.dims().iter().map(|(z, n)| (*z, Matrix::zeros(*n, *n))).collect();
    for (x, na) in a.dims() {
        for (y, nb) in b.dims() {
            for (v, nc) in c.dims() {
                let w = x.add(*y);
                let z = w.add(*v);
                let m = blocks.get_mut(&z).unwrap();
                for i in 0..*na {
                    for j in 0..*nb {
                        let (_, ij) = ab.position(*x, i, *y, j);
                        for k in 0..*nc {
                            let (_, jk) = bc.position(*y, j, *v, k);
                            let (_, src) = left.position(w, ij, *v, k);
                            let (_, dst) = right.position(*x, i, y.add(*v), jk);
                            m.set(dst, src, F::one());
                        }
                    }
                }
            }
        }
    }
    GradedMap::morphism(left.complex, right.complex, blocks).expect("associator fits")
}

/// The internal Hom `Hom(A, B)` with the coordinates of its elements.
///
/// `Hom^e = ⊕_x Hom(A^x, B^{x+e})` ordered by `x`; a block `f: A^x → B^{x+e}`
/// is stored row-major, entry `(i, j)` at `i · dim A^x + j`.
#[derive(Clone)]
pub struct HomLayout<D, F> {
    pub complex: Complex<D, F>,
    layouts: BTreeMap<D, Layout<D>>,
    source: Complex<D, F>,
    target: Complex<D, F>,
}

impl<D: Degree, F: Field> HomLayout<D, F> {
    pub fn new(a: &Complex<D, F>, b: &Complex<D, F>) -> Self {
        let mut parts: BTreeMap<D, Vec<(D, usize)>> = BTreeMap::new();
        for (x, na) in a.dims() {
            for (y, nb) in b.dims() {
                parts.entry(y.sub(*x)).or_default().push((*x, na * nb));
            }
        }
        let layouts: BTreeMap<D, Layout<D>> = parts.into_iter().map(|(e, p)| (e, Layout::new(p))).collect();
        let dims: Vec<(D, usize)> = layouts.iter().map(|(e, l)| (*e, l.total())).collect();
        let mut diffs = Vec::new();
        for (k, &step) in D::differentials().iter().enumerate() {
            let mut blocks = BTreeMap::new();
            for (e, ls) in &layouts {
                let Some(lt) = layouts.get(&e.add(step)) else { continue };
                let s = F::from_i64(-sign(e.total()));
                let mut m = Matrix::zeros(lt.total(), ls.total());
                for (x, off, _) in ls.iter() {
                    let y = x.add(*e);
                    if let Some(db) = b.diff_blocks(k).get(&y) {
                        m.add_block(lt.offset(x), off, &db.kron(&Matrix::identity(a.dim(*x))));
                    }
                    let w = x.sub(step);
                    if let Some(da) = a.diff_blocks(k).get(&w) {
                        let block = Matrix::identity(b.dim(y)).kron(&da.transpose()).scale(&s);
                        m.add_block(lt.offset(&w), off, &block);
                    }
                }
                blocks.insert(*e, m);
            }
            diffs.push(blocks);
        }
        let complex = Complex::from_blocks(dims, diffs).expect("hom blocks fit");
        HomLayout { complex, layouts, source: a.clone(), target: b.clone() }
    }

    /// Coordinates of a map of degree `e` as a vector of `Hom^e`.
    pub fn vectorize(&self, f: &GradedMap<D, F>) -> Vec<F> {
        let e = f.offset();
        let mut v = vec![F::zero(); self.complex.dim(e)];
        let Some(l) = self.layouts.get(&e) else { return v };
        for (x, off, _) in l.iter() {
            let m = f.block(*x);
            for i in 0..m.rows() {
                for j in 0..m.cols() {
                    v[off + i * m.cols() + j] = m.get(i, j).clone();
                }
            }
        }
        v
    }

    /// Offset of the block `Hom(A^x, B^{x+e})` inside `Hom^e`.
    pub fn block_offset(&self, e: D, x: D) -> Option<usize> {
        Some(self.layouts.get(&e)?.get(&x)?.0)
    }

    /// The map of degree `e` with coordinates `v`.
    pub fn devectorize(&self, e: D, v: &[F]) -> GradedMap<D, F> {
        assert_eq!(v.len(), self.complex.dim(e));
        let mut blocks = Vec::new();
        if let Some(l) = self.layouts.get(&e) {
            for (x, off, _) in l.iter() {
                let (rows, cols) = (self.target.dim(x.add(e)), self.source.dim(*x));
                let data: Vec<Vec<F>> = (0..rows).map(|i| v[off + i * cols..off + (i + 1) * cols].to_vec()).collect();
                blocks.push((*x, Matrix::from_rows(data, cols)));
            }
        }
        GradedMap::new(self.source.clone(), self.target.clone(), e, blocks).expect("devectorized blocks fit")
    }
}

/// `Hom^{e} = ⊕_x Hom(A^x, B^{x+e})` with `Df = D_B f − (−1)^{|f|} f D_A`.
pub fn internal_hom<D: Degree, F: Field>(a: &Complex<D, F>, b: &Complex<D, F>) -> Complex<D, F> {
    HomLayout::new(a, b).complex
}

/// Composition `Hom(B,C) ⊗ Hom(A,B) → Hom(A,C)`, `g ⊗ f ↦ g ∘ f`; a
/// morphism without signs.
pub fn composition<D: Degree, F: Field>(a: &Complex<D, F>, b: &Complex<D, F>, c: &Complex<D, F>) -> GradedMap<D, F> {
    let (hbc, hab, hac) = (HomLayout::new(b, c), HomLayout::new(a, b), HomLayout::new(a, c));
    let t = Tensor::new(&hbc.complex, &hab.complex);
    let mut blocks: BTreeMap<D, Matrix<F>> =
        t.complex.dims().iter().map(|(z, n)| (*z, Matrix::zeros(hac.complex.dim(*z), *n))).collect();
    for (e1, l1) in &hbc.layouts {
        for (y, off1, _) in l1.iter() {
            for (e2, l2) in &hab.layouts {
                let x = y.sub(*e2);
                let Some((off2, _)) = l2.get(&x) else { continue };
                let z = e1.add(*e2);
                let out = hac.block_offset(z, x).expect("composite block exists");
                let (nc, nb, na) = (c.dim(y.add(*e1)), b.dim(*y), a.dim(x));
                let m = blocks.get_mut(&z).expect("tensor degree");
                for i in 0..nc {
                    for k in 0..nb {
                        for j in 0..na {
                            let (_, col) = t.position(*e1, off1 + i * nb + k, *e2, off2 + k * na + j);
                            m.add_at(out + i * na + j, col, &F::one());
                        }
                    }
                }
            }
        }
    }
    GradedMap::morphism(t.complex, hac.complex, blocks).expect("composition fits")
}

/// A basis of the space of degree-0 morphisms `A → B`, obtained by solving
/// the commutation equations directly in the unknown block entries.
pub fn morphism_basis<D: Degree, F: Field>(a: &Complex<D, F>, b: &Complex<D, F>) -> Vec<GradedMap<D, F>> {
    let unknowns = Layout::new(a.dims().iter().map(|(x, n)| (*x, n * b.dim(*x))));
    let mut rows: Vec<Vec<F>> = Vec::new();
    for (k, &step) in D::differentials().iter().enumerate() {
        for (x, &na) in a.dims() {
            let y = x.add(step);
            let nb = b.dim(y);
            if nb == 0 {
                continue;
            }
            // ∂_B f_x − f_y ∂_A, entry (i, j) of a dim B^y × dim A^x matrix
            let mut eqs = Matrix::zeros(nb * na, unknowns.total());
            if let Some((off, _)) = unknowns.get(x) {
                eqs.add_block(0, off, &b.diff(k, *x).kron(&Matrix::identity(na)));
            }
            if let Some((off, _)) = unknowns.get(&y) {
                let block = Matrix::identity(nb).kron(&a.diff(k, *x).transpose()).neg();
                eqs.add_block(0, off, &block);
            }
            rows.extend(eqs.to_rows());
        }
    }
    let system = Matrix::from_rows(rows, unknowns.total());
    kernel(&system)
        .basis()
        .iter()
        .map(|v| {
            let blocks = unknowns.iter().map(|(x, off, _)| {
                let (r, c) = (b.dim(*x), a.dim(*x));
                (*x, Matrix::from_rows((0..r).map(|i| v[off + i * c..off + (i + 1) * c].to_vec()).collect(), c))
            });
            GradedMap::morphism(a.clone(), b.clone(), blocks.collect::<Vec<_>>()).expect("solution blocks fit")
        })
        .collect()
}

/// Cokernel of a morphism, with the projection from its target. Each
/// degree is presented in the canonical complement of the image.
pub fn cokernel<D: Degree, F: Field>(f: &GradedMap<D, F>) -> (Complex<D, F>, GradedMap<D, F>) {
    assert!(f.offset() == D::zero(), "cokernel of a map of nonzero degree");
    let b = f.target();
    let quotients: BTreeMap<D, Subquotient<F>> = b
        .dims()
        .iter()
        .map(|(x, &n)| {
            let image = Subspace::column_space(&f.block(*x));
            (*x, Subquotient::new(Subspace::full(n), image).expect("image lies in the target"))
        })
        .collect();
    let dims: Vec<(D, usize)> = quotients.iter().map(|(x, s)| (*x, s.dim())).collect();
    let diffs = (0..D::differentials().len())
        .map(|k| {
            let step = D::differentials()[k];
            quotients
                .iter()
                .filter_map(|(x, s)| {
                    let t = quotients.get(&x.add(step))?;
                    let m = induced_subquotient_map(&b.diff(k, *x), s, t).expect("f is a morphism");
                    Some((*x, m))
                })
                .collect()
        })
        .collect();
    let coker = Complex::from_blocks(dims, diffs).expect("cokernel blocks fit");
    let proj = quotients.iter().map(|(x, s)| {
        let n = b.dim(*x);
        let cols: Vec<Vec<F>> = Matrix::<F>::identity(n).to_rows().iter().map(|e| s.class_coords(e).unwrap()).collect();
        (*x, Matrix::from_columns(s.dim(), &cols))
    });
    let proj = GradedMap::morphism(b.clone(), coker.clone(), proj.collect::<Vec<_>>()).expect("projection fits");
    (coker, proj)
}
