//! Bicomplexes with a real structure: an antilinear involution `σ` over the
//! Gaussian rationals with `σ(A^{p,q}) = A^{q,p}` and `σ∂σ = ∂̄`.
//!
//! `σ` is stored by its linear part: the block `S` at `(p,q)` maps
//! `A^{p,q} → A^{q,p}` and `σ(v) = S·v̄`. Antilinearity therefore holds by
//! construction and validation checks the two remaining identities.

use std::borrow::Cow;
use std::collections::BTreeMap;

use crate::bigolin::{bigolin_map_between, Bigolin};
use crate::complexes::{
    transpose, Bicomplex, BicomplexMap, Bideg, BigradedMap, ChainMap, CochainComplex, Relation, StructureError, Tensor,
    ValidationReport,
};
use crate::exactlin::{kernel, Matrix};
use crate::inflation::{counit, ele, inflate_map, is_ele_cell, unit, Inflation};
use crate::monoidal::oplax_phi;
use crate::scalar::{Field, Q, QI};

fn swap((p, q): Bideg) -> Bideg {
    (q, p)
}

/// A bicomplex over `ℚ(i)` with its real structure.
#[derive(Clone, PartialEq, Debug)]
pub struct RealBicomplex {
    pub complex: Bicomplex<QI>,
    sigma: BTreeMap<Bideg, Matrix<QI>>,
}

impl RealBicomplex {
    /// Absent blocks of `sigma` are zero.
    pub fn new(
        complex: Bicomplex<QI>,
        sigma: impl IntoIterator<Item = (Bideg, Matrix<QI>)>,
    ) -> Result<Self, StructureError> {
        let mut stored = BTreeMap::new();
        for (pq, m) in sigma {
            let expected = (complex.dim(swap(pq)), complex.dim(pq));
            if m.shape() != expected {
                return Err(StructureError::Shape {
                    block: "σ".into(),
                    at: format!("{pq:?}"),
                    expected,
                    found: m.shape(),
                });
            }
            if !m.is_zero() {
                stored.insert(pq, m);
            }
        }
        Ok(RealBicomplex { complex, sigma: stored })
    }

    /// `𝐤` at `(0,0)` with `σ` the conjugation.
    pub fn unit() -> Self {
        RealBicomplex::new(Bicomplex::unit(), [((0, 0), Matrix::identity(1))]).expect("unit fits")
    }

    /// The linear part of `σ : A^{p,q} → A^{q,p}`.
    pub fn sigma(&self, pq: Bideg) -> Cow<'_, Matrix<QI>> {
        match self.sigma.get(&pq) {
            Some(m) => Cow::Borrowed(m),
            None => Cow::Owned(Matrix::zeros(self.complex.dim(swap(pq)), self.complex.dim(pq))),
        }
    }

    pub fn sigma_blocks(&self) -> &BTreeMap<Bideg, Matrix<QI>> {
        &self.sigma
    }

    pub fn apply_sigma(&self, pq: Bideg, v: &[QI]) -> Vec<QI> {
        let conj: Vec<QI> = v.iter().map(Field::conj).collect();
        self.sigma(pq).apply(&conj)
    }

    /// Defects of `∂² = ∂̄² = ∂∂̄ + ∂̄∂ = 0`, `σσ = id` and `σ∂σ = ∂̄`.
    pub fn validate(&self) -> ValidationReport<QI> {
        let mut report = self.complex.validate();
        for pq in self.complex.support() {
            let s = self.sigma(pq);
            let back = self.sigma(swap(pq)).mul(&s.conj());
            report.push(
                Relation::SigmaInvolution,
                format!("({},{})", pq.0, pq.1),
                back.sub(&Matrix::identity(s.cols())),
            );
            let (p, q) = pq;
            let outer = self.sigma((q + 1, p));
            let sds = outer.mul(&self.complex.del((q, p)).conj()).mul(&s.conj());
            report.push(Relation::SigmaIntertwines, format!("({p},{q})"), sds.sub(&self.complex.delbar(pq)));
        }
        report
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_valid()
    }
}

pub fn validate_real(a: &RealBicomplex) -> ValidationReport<QI> {
    a.validate()
}

pub fn complexify(c: &CochainComplex<Q>) -> CochainComplex<QI> {
    c.map_scalars(QI::from_q)
}

pub fn complexify_map(f: &ChainMap<Q>) -> ChainMap<QI> {
    f.map_scalars(QI::from_q)
}

/// The entries of `m` if they are all rational.
pub fn to_rational(m: &Matrix<QI>) -> Option<Matrix<Q>> {
    let rows: Option<Vec<Vec<Q>>> = m
        .to_rows()
        .into_iter()
        .map(|r| r.into_iter().map(|z| num_traits::Zero::is_zero(&z.im).then_some(z.re)).collect())
        .collect();
    Some(Matrix::from_rows(rows?, m.cols()))
}

/// `σf̄σ`, the conjugate of a map of bidegree `e` by the involutions; it has
/// bidegree `ē`. A morphism is real iff it is its own conjugate.
pub fn sigma_conjugate(f: &BigradedMap<QI>, a: &RealBicomplex, b: &RealBicomplex) -> BigradedMap<QI> {
    assert!(f.source() == &a.complex && f.target() == &b.complex, "f must run from A to B");
    let e = f.offset();
    let blocks = a.complex.support().map(|x| {
        let inner = a.sigma(x).conj();
        let m = b.sigma((x.1 + e.0, x.0 + e.1)).mul(&f.block(swap(x)).conj()).mul(&inner);
        (x, m)
    });
    BigradedMap::new(a.complex.clone(), b.complex.clone(), swap(e), blocks.collect::<Vec<_>>()).expect("σfσ fits")
}

/// Defects of `σf = fσ` for a map `A → B`.
pub fn real_morphism_defects(f: &BicomplexMap<QI>, a: &RealBicomplex, b: &RealBicomplex) -> ValidationReport<QI> {
    let mut report = ValidationReport { defects: Vec::new() };
    let conj = sigma_conjugate(f, a, b);
    for x in a.complex.support() {
        report.push(Relation::SigmaEquivariant, format!("({},{})", x.0, x.1), conj.block(x).sub(&f.block(x)));
    }
    report
}

pub fn is_real_morphism(f: &BicomplexMap<QI>, a: &RealBicomplex, b: &RealBicomplex) -> bool {
    f.is_morphism() && real_morphism_defects(f, a, b).is_valid()
}

/// A homotopy `h` of bidegree `(−1,−1)` is real iff `σhσ = −h`.
pub fn is_real_homotopy(h: &BigradedMap<QI>, a: &RealBicomplex, b: &RealBicomplex) -> bool {
    h.offset() == (-1, -1) && sigma_conjugate(h, a, b) == h.neg()
}

/// `(h − σhσ)/2`. Since `σ[∂,[∂̄,h]]σ = −[∂,[∂̄,σhσ]]`, this is a real
/// homotopy between the same real morphisms whenever `h` is a homotopy.
pub fn realify_homotopy(h: &BigradedMap<QI>, a: &RealBicomplex, b: &RealBicomplex) -> BigradedMap<QI> {
    h.sub(&sigma_conjugate(h, a, b)).scale(&QI::from_i64(2).inv())
}

pub fn direct_sum_real(xs: &[&RealBicomplex]) -> RealBicomplex {
    let complexes: Vec<&Bicomplex<QI>> = xs.iter().map(|x| &x.complex).collect();
    let complex = crate::complexes::direct_sum(&complexes);
    let mut sigma = BTreeMap::new();
    for pq in complex.support() {
        let mut m = Matrix::zeros(complex.dim(swap(pq)), complex.dim(pq));
        let (mut row, mut col) = (0, 0);
        for x in xs {
            m.add_block(row, col, &x.sigma(pq));
            row += x.complex.dim(swap(pq));
            col += x.complex.dim(pq);
        }
        sigma.insert(pq, m);
    }
    RealBicomplex::new(complex, sigma).expect("sum of real structures fits")
}

/// `B ⊕ Bᵀ` with `σ` exchanging the summands: `B^{p,q}` is carried
/// identically onto the copy of `B^{p,q}` sitting in bidegree `(q,p)` of `Bᵀ`.
pub fn real_double(b: &Bicomplex<Q>) -> RealBicomplex {
    let t = transpose(b);
    let complex = crate::complexes::direct_sum(&[b, &t]).map_scalars(QI::from_q);
    let mut sigma = BTreeMap::new();
    for pq in complex.support() {
        let (own, other) = (b.dim(pq), b.dim(swap(pq)));
        let mut m = Matrix::zeros(other + own, own + other);
        m.add_block(0, own, &Matrix::identity(other));
        m.add_block(other, 0, &Matrix::identity(own));
        sigma.insert(pq, m);
    }
    RealBicomplex::new(complex, sigma).expect("doubling fits")
}

/// `A ⊗ B` with `σ(a⊗b) = σa ⊗ σb`.
pub fn tensor_real(a: &RealBicomplex, b: &RealBicomplex) -> RealBicomplex {
    let t = Tensor::new(&a.complex, &b.complex);
    let mut sigma = BTreeMap::new();
    for z in t.complex.support() {
        let (ls, lt) = (t.layout(z).expect("support"), t.layout(swap(z)).expect("σ-stable support"));
        let mut m = Matrix::zeros(lt.total(), ls.total());
        for (&x, off, _) in ls.iter() {
            let y = (z.0 - x.0, z.1 - x.1);
            m.add_block(lt.offset(&swap(x)), off, &a.sigma(x).kron(&b.sigma(y)));
        }
        sigma.insert(z, m);
    }
    RealBicomplex::new(t.complex, sigma).expect("tensor of real structures fits")
}

/// Sign of `σ(i,j)_n = ±(j,i)_n`: `+` on the diagonal `i+j = n`, `−` off it.
pub fn ele_sigma_sign(n: i32, (i, j): Bideg) -> i64 {
    if i + j == n {
        1
    } else {
        -1
    }
}

/// The real `E_n`.
pub fn ele_real(n: i32) -> RealBicomplex {
    let complex = ele::<QI>(n);
    let sigma: Vec<(Bideg, Matrix<QI>)> =
        complex.support().map(|c| (c, Matrix::scalar(1, QI::from_i64(ele_sigma_sign(n, c))))).collect();
    RealBicomplex::new(complex, sigma).expect("E_n fits")
}

fn real_inflation(inf: &Inflation<QI>) -> RealBicomplex {
    let mut sigma = BTreeMap::new();
    for pq in inf.complex.support() {
        let (ls, lt) = (inf.layout(pq).expect("support"), inf.layout(swap(pq)).expect("σ-stable support"));
        let mut m = Matrix::zeros(lt.total(), ls.total());
        for (&n, off, dim) in ls.iter() {
            debug_assert!(is_ele_cell(n, swap(pq)));
            m.add_block(lt.offset(&n), off, &Matrix::scalar(dim, QI::from_i64(ele_sigma_sign(n, pq))));
        }
        sigma.insert(pq, m);
    }
    RealBicomplex::new(inf.complex.clone(), sigma).expect("real inflation fits")
}

/// `Inf_ℝ(C)`: `Inf(C ⊗ ℚ(i))` with `σ((i,j)_n ⊗ c⊗z) = σ(i,j)_n ⊗ c⊗z̄`.
pub fn inflate_real(c: &CochainComplex<Q>) -> RealBicomplex {
    real_inflation(&Inflation::new(&complexify(c)))
}

/// `Inf_ℝ(f)` for a rational chain map.
pub fn inflate_real_map(f: &ChainMap<Q>) -> BicomplexMap<QI> {
    inflate_map(&complexify_map(f))
}

/// A ℚ-basis of `{v ∈ ℚ(i)^N : S·v̄ = εv}`, found by splitting `v = x + iy`
/// into the rational system `S_re x + S_im y = εx`, `S_im x − S_re y = εy`.
pub fn fixed_points(s: &Matrix<QI>, eps: i64) -> Vec<Vec<QI>> {
    let n = s.cols();
    let e = Q::from_i64(eps);
    let mut m = Matrix::<Q>::zeros(2 * n, 2 * n);
    for r in 0..n {
        for c in 0..n {
            let z = s.get(r, c);
            m.set(r, c, z.re.clone());
            m.set(r, n + c, z.im.clone());
            m.set(n + r, c, z.im.clone());
            m.set(n + r, n + c, Field::neg(&z.re));
        }
        m.add_at(r, r, &Field::neg(&e));
        m.add_at(n + r, n + r, &Field::neg(&e));
    }
    kernel(&m).basis().iter().map(|v| (0..n).map(|k| QI::new(v[k].clone(), v[n + k].clone())).collect()).collect()
}

/// `𝓑_ℝ(A)`: the fixed points of `σ` in degrees `≥ 0` and the `−i`-twisted
/// fixed points, i.e. the vectors with `σv = −v`, in degrees `≤ −1`.
///
/// Each degree carries a basis matrix `P_k` whose columns are a ℚ-basis of
/// these vectors; it is invertible over `ℚ(i)` since `σ` is an involution, so
/// `P` is an isomorphism `𝓑_ℝ(A) ⊗ ℚ(i) ≅ 𝓑(A)`.
#[derive(Clone)]
pub struct RealBigolin {
    pub complex: CochainComplex<Q>,
    pub bigolin: Bigolin<QI>,
    bases: BTreeMap<i32, Matrix<QI>>,
    inverses: BTreeMap<i32, Matrix<QI>>,
}

impl RealBigolin {
    /// `a` must be a valid real bicomplex.
    pub fn new(a: &RealBicomplex) -> Self {
        let bigolin = Bigolin::new(&a.complex, (0, 0));
        let mut bases = BTreeMap::new();
        for (&k, &n) in bigolin.complex.dims() {
            let layout = bigolin.layout(k).expect("support");
            let mut s = Matrix::zeros(n, n);
            for (&rs, off, _) in layout.iter() {
                let (to, _) = layout.get(&swap(rs)).expect("degrees of 𝓑 are σ-stable");
                s.add_block(to, off, &a.sigma(rs));
            }
            let basis = fixed_points(&s, if k >= 0 { 1 } else { -1 });
            assert_eq!(basis.len(), n, "σ must be an involution");
            bases.insert(k, Matrix::from_columns(n, &basis));
        }
        let inverses: BTreeMap<i32, Matrix<QI>> =
            bases.iter().map(|(k, p)| (*k, p.inverse().expect("a real form spans"))).collect();
        let mut d = Vec::new();
        for (&k, p) in &bases {
            if let Some(inv) = inverses.get(&(k + 1)) {
                let m = inv.mul(&bigolin.complex.d(k)).mul(p);
                d.push((k, to_rational(&m).expect("𝓑(A) commutes with σ")));
            }
        }
        let dims: Vec<(i32, usize)> = bigolin.complex.dims().iter().map(|(k, n)| (*k, *n)).collect();
        let complex = CochainComplex::from_parts(dims, d).expect("real form fits");
        RealBigolin { complex, bigolin, bases, inverses }
    }

    /// The basis matrix `P_k`.
    pub fn basis(&self, k: i32) -> Option<&Matrix<QI>> {
        self.bases.get(&k)
    }

    /// Rational coordinates of the columns of `m ⊂ 𝓑(A)^k`, or `None` if a
    /// column is not in the real form.
    pub fn real_coords(&self, k: i32, m: &Matrix<QI>) -> Option<Matrix<Q>> {
        match self.inverses.get(&k) {
            Some(inv) => to_rational(&inv.mul(m)),
            None => Some(Matrix::zeros(0, m.cols())),
        }
    }

    /// `P : 𝓑_ℝ(A) ⊗ ℚ(i) → 𝓑(A)`.
    pub fn embedding(&self) -> ChainMap<QI> {
        ChainMap::morphism(complexify(&self.complex), self.bigolin.complex.clone(), self.bases.clone())
            .expect("basis matrices fit")
    }
}

pub fn bigolin_real(a: &RealBicomplex) -> CochainComplex<Q> {
    RealBigolin::new(a).complex
}

/// `𝓑_ℝ(f)` for a real morphism `f : A → B`.
pub fn bigolin_real_map(f: &BicomplexMap<QI>, a: &RealBicomplex, b: &RealBicomplex) -> ChainMap<Q> {
    let (ra, rb) = (RealBigolin::new(a), RealBigolin::new(b));
    bigolin_real_map_between(f, &ra, &rb).expect("real morphisms preserve real forms")
}

fn bigolin_real_map_between(
    f: &BicomplexMap<QI>,
    ra: &RealBigolin,
    rb: &RealBigolin,
) -> Result<ChainMap<Q>, StructureError> {
    let g = bigolin_map_between(f, &ra.bigolin, &rb.bigolin);
    let mut blocks = Vec::new();
    for (&k, p) in &ra.bases {
        if rb.complex.dim(k) == 0 {
            continue;
        }
        let m = rb
            .real_coords(k, &g.block(k).mul(p))
            .ok_or_else(|| StructureError::Domain(format!("𝓑(f) leaves the real form in degree {k}")))?;
        blocks.push((k, m));
    }
    ChainMap::morphism(ra.complex.clone(), rb.complex.clone(), blocks)
}

/// The real unit `η : C → 𝓑_ℝ(Inf_ℝ C)`, the complex unit read in real
/// coordinates. Fails with the degree where `η` leaves the real form.
pub fn real_unit(c: &CochainComplex<Q>) -> Result<ChainMap<Q>, StructureError> {
    let inf = inflate_real(c);
    let rb = RealBigolin::new(&inf);
    let eta = unit(&complexify(c));
    let mut blocks = Vec::new();
    for (&n, m) in eta.blocks() {
        let block = rb
            .real_coords(n, m)
            .ok_or_else(|| StructureError::Domain(format!("η leaves the real form in degree {n}")))?;
        blocks.push((n, block));
    }
    ChainMap::morphism(c.clone(), rb.complex, blocks)
}

/// The real counit `ε : Inf_ℝ(𝓑_ℝ A) → A`, i.e. `ε_A ∘ Inf(P)`.
pub fn real_counit(a: &RealBicomplex) -> BicomplexMap<QI> {
    let rb = RealBigolin::new(a);
    counit(&a.complex).compose(&inflate_map(&rb.embedding()))
}

/// `ε_{Inf_ℝ C} ∘ Inf_ℝ(η_C)`, the identity by the triangle identity.
pub fn real_triangle_inflation(c: &CochainComplex<Q>) -> Result<BicomplexMap<QI>, StructureError> {
    let eta = real_unit(c)?;
    let inf = inflate_real(c);
    Ok(real_counit(&inf).compose(&inflate_real_map(&eta)))
}

/// `𝓑_ℝ(ε_A) ∘ η_{𝓑_ℝ A}`, the identity by the triangle identity.
pub fn real_triangle_bigolin(a: &RealBicomplex) -> Result<ChainMap<Q>, StructureError> {
    let ra = RealBigolin::new(a);
    let eta = real_unit(&ra.complex)?;
    let eps = real_counit(a);
    let src = RealBigolin::new(&inflate_real(&ra.complex));
    Ok(bigolin_real_map_between(&eps, &src, &ra)?.compose(&eta))
}

/// `φ_{C,D} : Inf_ℝ(C ⊗ D) → Inf_ℝ(C) ⊗ Inf_ℝ(D)` with its real ends.
pub fn real_oplax_phi(
    c: &CochainComplex<Q>,
    d: &CochainComplex<Q>,
) -> Result<(BicomplexMap<QI>, RealBicomplex, RealBicomplex), StructureError> {
    let phi = oplax_phi(&complexify(c), &complexify(d))?;
    let src = inflate_real(&crate::complexes::tensor(c, d));
    let tgt = tensor_real(&inflate_real(c), &inflate_real(d));
    Ok((phi, src, tgt))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bigolin::bigolin;
    use crate::cohomology::{bott_chern, find_homotopy, homotopy_defect, is_pluripotential_weq, total_cohomology};
    use crate::complexes::{direct_sum, tensor};
    use crate::enrichment::normalized_simplex_chains;
    use crate::inflation::inflate;
    use crate::monoidal::iota;
    use crate::scalar::{imag_unit, q};

    fn qi(re: i64, im: i64) -> QI {
        QI::new(q(re), q(im))
    }

    /// `C` with `d: C⁻² → C⁻¹` of rank one and an extra class in degree 0.
    fn sample() -> CochainComplex<Q> {
        CochainComplex::from_parts([(-2, 2), (-1, 1), (0, 1)], [(-2, Matrix::from_i64(1, 2, &[1, -1]))]).unwrap()
    }

    #[test]
    fn validation() {
        assert!(RealBicomplex::unit().is_valid());
        for n in -3..=3 {
            assert!(ele_real(n).is_valid(), "E_{n}");
        }
        let e1 = ele_real(1);
        assert_eq!(e1.sigma((1, 0)).to_rows(), vec![vec![qi(1, 0)]]);
        assert_eq!(e1.sigma((1, 1)).to_rows(), vec![vec![qi(-1, 0)]]);
        let em1 = ele_real(-1);
        assert_eq!(em1.sigma((-1, 0)).to_rows(), vec![vec![qi(1, 0)]]);
        assert_eq!(em1.sigma((-1, -1)).to_rows(), vec![vec![qi(-1, 0)]]);

        let bad = RealBicomplex::new(
            e1.complex.clone(),
            [((1, 0), Matrix::identity(1)), ((0, 1), Matrix::identity(1)), ((1, 1), Matrix::identity(1))],
        )
        .unwrap();
        let report = bad.validate();
        assert!(!report.is_valid());
        assert!(report.defects.iter().all(|d| d.relation == Relation::SigmaIntertwines));

        let twisted = RealBicomplex::new(Bicomplex::unit(), [((0, 0), Matrix::scalar(1, imag_unit()))]).unwrap();
        assert!(twisted.is_valid(), "any unit-modulus phase is an involution");
        let not_involution = RealBicomplex::new(Bicomplex::unit(), [((0, 0), Matrix::scalar(1, qi(2, 0)))]).unwrap();
        assert_eq!(not_involution.validate().defects[0].relation, Relation::SigmaInvolution);
        assert!(RealBicomplex::new(Bicomplex::unit(), [((0, 0), Matrix::identity(2))]).is_err());
        let zigzag = crate::complexes::direct_sum(&[&ele::<Q>(2), &crate::complexes::square((0, 1))]);
        let doubled = real_double(&zigzag);
        assert!(doubled.is_valid());
        assert_eq!(doubled.complex.dim((0, 1)), zigzag.dim((0, 1)) + zigzag.dim((1, 0)));
    }

    #[test]
    fn antilinearity() {
        let a = ele_real(1);
        let v = vec![qi(2, 3)];
        let z = qi(1, -1);
        let zv: Vec<QI> = v.iter().map(|x| z.mul(x)).collect();
        let lhs = a.apply_sigma((1, 0), &zv);
        let rhs: Vec<QI> = a.apply_sigma((1, 0), &v).iter().map(|x| z.conj().mul(x)).collect();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn inflation() {
        assert!(inflate_real(&CochainComplex::zero()).complex.is_zero());
        assert_eq!(inflate_real(&CochainComplex::point(0)), ele_real(0));
        for n in -2..=2 {
            assert_eq!(inflate_real(&CochainComplex::point(n)), ele_real(n));
        }
        for c in [sample(), normalized_simplex_chains(1), normalized_simplex_chains(2)] {
            let r = inflate_real(&c);
            assert!(r.is_valid());
            assert_eq!(r.complex, inflate(&complexify(&c)));
        }
        // (−1,−1)_{−1}: ∂∂̄ of the edge is the difference of the vertices.
        let r = inflate_real(&normalized_simplex_chains(1));
        assert_eq!(r.complex.del_delbar((-1, -1)).column(0), vec![qi(-1, 0), qi(1, 0)]);
    }

    /// Brute-force fixed points: real and imaginary parts of the standard
    /// basis, symmetrised by `σ`.
    fn oracle_fixed_dim(s: &Matrix<QI>, eps: i64) -> usize {
        let n = s.cols();
        let mut vs = Vec::new();
        for k in 0..n {
            for z in [qi(1, 0), imag_unit()] {
                let mut e = vec![QI::zero(); n];
                e[k] = z;
                let se: Vec<QI> = s.apply(&e.iter().map(Field::conj).collect::<Vec<_>>());
                let eps = QI::from_i64(eps);
                let v: Vec<QI> = e.iter().zip(&se).map(|(x, y)| x.mul(&eps).add(y)).collect();
                vs.push(v.iter().flat_map(|z| [z.re.clone(), z.im.clone()]).collect::<Vec<Q>>());
            }
        }
        Matrix::from_rows(vs, 2 * n).rank()
    }

    #[test]
    fn fixed_points_match_the_oracle() {
        let s = Matrix::from_rows(vec![vec![qi(0, 0), qi(0, 1)], vec![qi(0, 1), qi(0, 0)]], 2);
        for eps in [1, -1] {
            let basis = fixed_points(&s, eps);
            assert_eq!(basis.len(), oracle_fixed_dim(&s, eps));
            for v in &basis {
                let sv = s.apply(&v.iter().map(Field::conj).collect::<Vec<_>>());
                assert_eq!(sv, v.iter().map(|x| x.mul(&QI::from_i64(eps))).collect::<Vec<_>>());
            }
        }
    }

    #[test]
    fn real_bigolin() {
        assert_eq!(bigolin_real(&RealBicomplex::unit()), CochainComplex::point(0));
        let e1 = RealBigolin::new(&ele_real(1));
        assert_eq!(e1.complex.dims().iter().map(|(k, n)| (*k, *n)).collect::<Vec<_>>(), vec![(1, 2), (2, 1)]);
        for k in [1, 2] {
            let mut s = Matrix::zeros(e1.complex.dim(k), e1.complex.dim(k));
            for (&rs, off, _) in e1.bigolin.layout(k).unwrap().iter() {
                let (to, _) = e1.bigolin.layout(k).unwrap().get(&swap(rs)).unwrap();
                s.add_block(to, off, &ele_real(1).sigma(rs));
            }
            assert_eq!(e1.complex.dim(k), oracle_fixed_dim(&s, 1));
        }
        // The degree-2 real form is spanned by i·(1,1).
        assert!(e1.basis(2).unwrap().get(0, 0).re == q(0));

        for a in [ele_real(-2), ele_real(-1), inflate_real(&sample()), direct_sum_real(&[&ele_real(1), &ele_real(-1)])]
        {
            let r = RealBigolin::new(&a);
            assert!(r.complex.is_valid());
            assert!(r.embedding().is_isomorphism());
            assert!(r.embedding().is_morphism());
            assert_eq!(r.bigolin.complex, bigolin(&a.complex));
            assert_eq!(total_cohomology(&r.complex).dims(), total_cohomology(&bigolin(&a.complex)).dims());
        }
        let sum = bigolin_real(&direct_sum_real(&[&ele_real(1), &ele_real(-2)]));
        assert_eq!(sum.dims(), direct_sum(&[&bigolin_real(&ele_real(1)), &bigolin_real(&ele_real(-2))]).dims());
    }

    #[test]
    fn unit_and_counit() {
        let k = CochainComplex::<Q>::point(0);
        assert!(real_unit(&k).unwrap().blocks()[&0].is_identity());
        let e0 = ele_real(0);
        assert_eq!(real_counit(&e0), BicomplexMap::identity(&e0.complex));
        for c in [sample(), normalized_simplex_chains(2), CochainComplex::point(-3)] {
            let eta = real_unit(&c).unwrap();
            assert!(eta.is_morphism());
            let t = real_triangle_inflation(&c).unwrap();
            assert_eq!(t, BicomplexMap::identity(&inflate_real(&c).complex));
        }
        for a in [ele_real(-2), ele_real(1), inflate_real(&sample()), tensor_real(&ele_real(-1), &ele_real(-1))] {
            let rb = RealBigolin::new(&a);
            let eps = real_counit(&a);
            assert!(is_real_morphism(&eps, &inflate_real(&rb.complex), &a));
            assert_eq!(real_triangle_bigolin(&a).unwrap(), ChainMap::identity(&rb.complex));
        }
    }

    #[test]
    fn monoidal_maps_are_real() {
        for k in -2..=0 {
            for l in -2..=0 {
                let i = iota::<QI>(k, l).unwrap();
                let (src, tgt) = (ele_real(k + l), tensor_real(&ele_real(k), &ele_real(l)));
                assert!(tgt.is_valid());
                assert_eq!(sigma_conjugate(&i, &src, &tgt), i, "ι^({k},{l})");
            }
        }
        let (c, d) = (sample(), normalized_simplex_chains(1));
        let (phi, src, tgt) = real_oplax_phi(&c, &d).unwrap();
        assert!(is_real_morphism(&phi, &src, &tgt));
        assert!(is_pluripotential_weq(&phi).is_ok());
    }

    #[test]
    fn real_homotopies() {
        // Inf_ℝ of the disk 𝐤 → 𝐤 is acyclic, so its identity is homotopic to 0.
        let disk = CochainComplex::from_parts([(-1, 1), (0, 1)], [(-1, Matrix::identity(1))]).unwrap();
        let a = inflate_real(&disk);
        let id = BicomplexMap::identity(&a.complex);
        let zero = BicomplexMap::zero(a.complex.clone(), a.complex.clone(), (0, 0));
        assert!(is_real_morphism(&id, &a, &a));
        let found = find_homotopy(&id, &zero).expect("acyclic bicomplexes are contractible");
        let real = realify_homotopy(&found, &a, &a);
        assert!(is_real_homotopy(&real, &a, &a));
        assert!(homotopy_defect(&id, &zero, &real).is_zero());
        assert!(homotopy_defect(&id, &zero, &found).is_zero());
    }

    #[test]
    fn forgetting_the_real_structure() {
        let c = sample();
        let r = inflate_real(&c);
        let plain = inflate(&c);
        assert_eq!(bott_chern(&r.complex).dims(), bott_chern(&plain).dims());
        let t = tensor_real(&r, &ele_real(-1));
        assert_eq!(t.complex, tensor(&r.complex, &ele::<QI>(-1)));
        assert_eq!(bigolin_real(&r).dims(), bigolin(&plain).dims());
    }
}
