//! Unit and counit of `Inf ⊣ 𝓑`, and transposition of morphisms.
//!
//! In negative degrees both the unit and the counit carry the sign
//! opposite to the one that makes the printed formulas literal; with the
//! Koszul sign `(−1)^{i+j+n}` on the connecting terms of `Inf`, these are
//! the signs under which `η` is a chain map and the triangle identities hold.

use super::Inflation;
use crate::bigolin::{bigolin_map_between, Bigolin};
use crate::complexes::{Bicomplex, BicomplexMap, Bideg, ChainMap, CochainComplex};
use crate::exactlin::Matrix;
use crate::inflation::inflate_map_between;
use crate::scalar::{binomial, leibniz, sign, Field, Q};

fn scalar<F: Field>(x: &Q) -> F {
    F::from_q(x)
}

/// Coefficient of `(p,q)_n ⊗ c` in `η(c)` for `c ∈ Cⁿ`.
pub fn unit_coefficient(n: i32, (p, q): Bideg) -> Q {
    let (n, p, q) = (i64::from(n), i64::from(p), i64::from(q));
    if n >= 0 {
        assert!(p >= 0 && q >= 0 && p + q == n);
        binomial(n, p)
    } else {
        assert!(p <= -1 && q <= -1 && p + q == n - 1);
        leibniz(-n, -p) * Q::from_integer(sign(n + 1).into())
    }
}

/// The bidegrees carrying `η(c)` for `c ∈ Cⁿ`.
fn unit_cells(n: i32) -> Vec<Bideg> {
    if n >= 0 {
        (0..=n).map(|p| (p, n - p)).collect()
    } else {
        (n..=-1).map(|p| (p, n - 1 - p)).collect()
    }
}

/// `η_C : C → 𝓑(Inf(C))`.
pub fn unit<F: Field>(c: &CochainComplex<F>) -> ChainMap<F> {
    let inf = Inflation::new(c);
    let b = Bigolin::new(&inf.complex, (0, 0));
    unit_with(c, &inf, &b)
}

pub(crate) fn unit_with<F: Field>(c: &CochainComplex<F>, inf: &Inflation<F>, b: &Bigolin<F>) -> ChainMap<F> {
    let mut blocks = Vec::new();
    for (&n, &dim) in c.dims() {
        let layout = b.layout(n).expect("η lands in 𝓑(Inf C)");
        let mut m = Matrix::zeros(layout.total(), dim);
        for cell in unit_cells(n) {
            let (_, cell_off) = b.locate(cell).expect("unit cell survives in 𝓑");
            let off = inf.offset(cell, n).expect("unit cell carries Cⁿ");
            m.add_block(cell_off + off, 0, &Matrix::scalar(dim, scalar(&unit_coefficient(n, cell))));
        }
        blocks.push((n, m));
    }
    ChainMap::morphism(c.clone(), b.complex.clone(), blocks).expect("unit fits")
}

/// Terms of `ε` at `(p,q)`: `(n, source cell of A, k, coefficient)` where the
/// component `a^{rs}` of the `n`-th summand is sent to `A^{p,q}` by the
/// identity (`k = None`), `∂` (`Some(0)`) or `∂̄` (`Some(1)`).
fn counit_terms((p, q): Bideg) -> Vec<(i32, Bideg, Option<usize>, Q)> {
    let (pp, qq) = (i64::from(p), i64::from(q));
    let mut out = Vec::new();
    if p >= 0 && q >= 0 {
        out.push((p + q, (p, q), None, binomial(pp + qq, pp).recip()));
        if p >= 1 && q >= 1 {
            out.push((p + q - 1, (p - 1, q), Some(0), leibniz(pp + qq, pp)));
            out.push((p + q - 1, (p, q - 1), Some(1), -leibniz(pp + qq, qq)));
        }
    } else if p <= 0 && q <= 0 {
        let (a, b) = (-pp, -qq);
        let s = Q::from_integer(sign(pp + qq).into());
        if p < 0 && q < 0 {
            out.push((p + q + 1, (p, q), None, &s * Q::from_integer(a.into()) * binomial(a + b - 1, a)));
        }
        out.push((p + q, (p - 1, q), Some(0), &s * binomial(a + b - 1, b - 1)));
        out.push((p + q, (p, q - 1), Some(1), -(&s * binomial(a + b - 1, a - 1))));
    }
    out.retain(|t| t.3 != Q::from_integer(0.into()));
    out
}

/// `ε_A : Inf(𝓑(A)) → A`.
pub fn counit<F: Field>(a: &Bicomplex<F>) -> BicomplexMap<F> {
    let b = Bigolin::new(a, (0, 0));
    let inf = Inflation::new(&b.complex);
    counit_with(a, &b, &inf)
}

pub(crate) fn counit_with<F: Field>(a: &Bicomplex<F>, b: &Bigolin<F>, inf: &Inflation<F>) -> BicomplexMap<F> {
    let mut blocks = Vec::new();
    for &pq in inf.complex.dims().keys() {
        let rows = a.dim(pq);
        if rows == 0 {
            continue;
        }
        let mut m = Matrix::zeros(rows, inf.complex.dim(pq));
        for (n, rs, k, coeff) in counit_terms(pq) {
            let (Some(off), Some((deg, cell_off))) = (inf.offset(pq, n), b.locate(rs)) else { continue };
            debug_assert_eq!(deg, n);
            let piece = match k {
                None => Matrix::identity(a.dim(rs)),
                Some(k) => a.diff(k, rs).into_owned(),
            };
            m.add_block(0, off + cell_off, &piece.scale(&scalar(&coeff)));
        }
        blocks.push((pq, m));
    }
    BicomplexMap::morphism(inf.complex.clone(), a.clone(), blocks).expect("counit fits")
}

/// The transpose `ε_A ∘ Inf(h) : Inf(C) → A` of `h : C → 𝓑(A)`.
pub fn left_adjunct<F: Field>(h: &ChainMap<F>, a: &Bicomplex<F>) -> BicomplexMap<F> {
    let b = Bigolin::new(a, (0, 0));
    assert!(h.target() == &b.complex, "h must land in 𝓑(A)");
    let src = Inflation::new(h.source());
    let tgt = Inflation::new(&b.complex);
    counit_with(a, &b, &tgt).compose(&inflate_map_between(h, &src, &tgt))
}

/// The transpose `𝓑(g) ∘ η_C : C → 𝓑(A)` of `g : Inf(C) → A`.
pub fn right_adjunct<F: Field>(g: &BicomplexMap<F>, c: &CochainComplex<F>) -> ChainMap<F> {
    let inf = Inflation::new(c);
    assert!(g.source() == &inf.complex, "g must start at Inf(C)");
    let src = Bigolin::new(&inf.complex, (0, 0));
    let tgt = Bigolin::new(g.target(), (0, 0));
    bigolin_map_between(g, &src, &tgt).compose(&unit_with(c, &inf, &src))
}

/// `ε_{Inf C} ∘ Inf(η_C)`, the identity of `Inf(C)` by the triangle identity.
pub fn triangle_inflation<F: Field>(c: &CochainComplex<F>) -> BicomplexMap<F> {
    let inf = Inflation::new(c);
    let b = Bigolin::new(&inf.complex, (0, 0));
    let eta = unit_with(c, &inf, &b);
    let inf_b = Inflation::new(&b.complex);
    counit_with(&inf.complex, &b, &inf_b).compose(&inflate_map_between(&eta, &inf, &inf_b))
}

/// `𝓑(ε_A) ∘ η_{𝓑A}`, the identity of `𝓑(A)` by the triangle identity.
pub fn triangle_bigolin<F: Field>(a: &Bicomplex<F>) -> ChainMap<F> {
    let b = Bigolin::new(a, (0, 0));
    let inf = Inflation::new(&b.complex);
    let bb = Bigolin::new(&inf.complex, (0, 0));
    let eps = counit_with(a, &b, &inf);
    bigolin_map_between(&eps, &bb, &b).compose(&unit_with(&b.complex, &inf, &bb))
}
