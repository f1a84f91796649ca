//! Bott-Chern, Aeppli, Dolbeault and total cohomology, the maps they
//! induce, and the decisions built on them: pluripotential weak
//! equivalence and acyclicity, the `∂∂̄`-lemma, and homotopies.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::complexes::{
    totalize, totalize_map, Bicomplex, BicomplexMap, Bideg, BigradedMap, ChainMap, CochainComplex, Degree, GradedMap,
    HomLayout,
};
use crate::exactlin::{induced_subquotient_map, kernel, solve, ContainmentError, Matrix, Subquotient, Subspace};
use crate::scalar::Field;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Theory {
    BottChern,
    Aeppli,
    /// Row cohomology `ker ∂ / im ∂`.
    Del,
    /// Column cohomology `ker ∂̄ / im ∂̄`.
    Delbar,
    Total,
}

impl fmt::Display for Theory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Theory::BottChern => "Bott-Chern",
            Theory::Aeppli => "Aeppli",
            Theory::Del => "∂-Dolbeault",
            Theory::Delbar => "∂̄-Dolbeault",
            Theory::Total => "total",
        })
    }
}

/// One subquotient per degree of the support.
#[derive(Clone, Debug)]
pub struct CohomologyTable<D, F> {
    pub theory: Theory,
    entries: BTreeMap<D, Subquotient<F>>,
}

impl<D: Degree, F: Field> CohomologyTable<D, F> {
    pub fn dim(&self, x: D) -> usize {
        self.entries.get(&x).map_or(0, |s| s.dim())
    }

    /// Nonzero dimensions.
    pub fn dims(&self) -> BTreeMap<D, usize> {
        self.entries.iter().filter(|(_, s)| s.dim() > 0).map(|(x, s)| (*x, s.dim())).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.values().all(|s| s.dim() == 0)
    }

    /// Numerator, denominator and representatives at `x`, if `x` is in the
    /// support of the complex.
    pub fn entry(&self, x: D) -> Option<&Subquotient<F>> {
        self.entries.get(&x)
    }

    fn entry_or_zero(&self, x: D) -> Subquotient<F> {
        self.entries.get(&x).cloned().unwrap_or_else(|| zero_subquotient())
    }
}

fn zero_subquotient<F: Field>() -> Subquotient<F> {
    Subquotient::new(Subspace::zero(0), Subspace::zero(0)).expect("zero space")
}

fn table<D: Degree, F: Field>(
    theory: Theory,
    support: impl Iterator<Item = D>,
    entry: impl Fn(D) -> (Subspace<F>, Subspace<F>),
) -> CohomologyTable<D, F> {
    let entries = support
        .map(|x| {
            let (num, den) = entry(x);
            (x, Subquotient::new(num, den).expect("a valid complex has nested cycles and boundaries"))
        })
        .collect();
    CohomologyTable { theory, entries }
}

/// `(ker ∂ ∩ ker ∂̄) / im ∂∂̄`.
pub fn bott_chern<F: Field>(a: &Bicomplex<F>) -> CohomologyTable<Bideg, F> {
    table(Theory::BottChern, a.support(), |(p, q)| {
        let num = kernel(&a.del((p, q)).vstack(&a.delbar((p, q))));
        let den = Subspace::column_space(&a.del_delbar((p - 1, q - 1)));
        (num, den)
    })
}

/// `ker ∂∂̄ / (im ∂ + im ∂̄)`.
pub fn aeppli<F: Field>(a: &Bicomplex<F>) -> CohomologyTable<Bideg, F> {
    table(Theory::Aeppli, a.support(), |(p, q)| {
        let num = kernel(&a.del_delbar((p, q)));
        let den = Subspace::column_space(&a.del((p - 1, q)).hstack(&a.delbar((p, q - 1))));
        (num, den)
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Row,
    Column,
}

/// Cohomology of `∂` alone (`Row`) or of `∂̄` alone (`Column`).
pub fn dolbeault<F: Field>(a: &Bicomplex<F>, side: Side) -> CohomologyTable<Bideg, F> {
    let (k, step, theory) = match side {
        Side::Row => (0, (1, 0), Theory::Del),
        Side::Column => (1, (0, 1), Theory::Delbar),
    };
    table(theory, a.support(), |x| {
        let from = (x.0 - step.0, x.1 - step.1);
        (kernel(&a.diff(k, x)), Subspace::column_space(&a.diff(k, from)))
    })
}

/// `ker d / im d` of a cochain complex.
pub fn total_cohomology<F: Field>(c: &CochainComplex<F>) -> CohomologyTable<i32, F> {
    table(Theory::Total, c.support(), |n| (kernel(&c.d(n)), Subspace::column_space(&c.d(n - 1))))
}

/// The table of `theory` for a bicomplex; `Total` is indexed by `(n, 0)`.
pub fn bicomplex_table<F: Field>(a: &Bicomplex<F>, theory: Theory) -> CohomologyTable<Bideg, F> {
    match theory {
        Theory::BottChern => bott_chern(a),
        Theory::Aeppli => aeppli(a),
        Theory::Del => dolbeault(a, Side::Row),
        Theory::Delbar => dolbeault(a, Side::Column),
        Theory::Total => {
            let t = total_cohomology(&totalize(a));
            CohomologyTable {
                theory: Theory::Total,
                entries: t.entries.into_iter().map(|(n, s)| ((n, 0), s)).collect(),
            }
        }
    }
}

/// Matrices of the maps induced by a degree-0 map between two tables,
/// one per degree of either support.
pub fn induced_between<D: Degree, F: Field>(
    f: &GradedMap<D, F>,
    source: &CohomologyTable<D, F>,
    target: &CohomologyTable<D, F>,
) -> Result<BTreeMap<D, Matrix<F>>, (D, ContainmentError<F>)> {
    let degrees: BTreeSet<D> = source.entries.keys().chain(target.entries.keys()).copied().collect();
    degrees
        .into_iter()
        .map(|x| {
            let (s, t) = (source.entry_or_zero(x), target.entry_or_zero(x));
            induced_subquotient_map(&f.block(x), &s, &t).map(|m| (x, m)).map_err(|e| (x, e))
        })
        .collect()
}

/// `H(f)` for a bicomplex morphism in one of the bidegree-wise theories.
pub fn induced_map<F: Field>(
    f: &BicomplexMap<F>,
    theory: Theory,
) -> Result<BTreeMap<Bideg, Matrix<F>>, (Bideg, ContainmentError<F>)> {
    if theory == Theory::Total {
        let g = totalize_map(f);
        let m = induced_chain_map(&g).map_err(|(n, e)| ((n, 0), e))?.into_iter().map(|(n, m)| ((n, 0), m)).collect();
        return Ok(m);
    }
    induced_between(f, &bicomplex_table(f.source(), theory), &bicomplex_table(f.target(), theory))
}

/// `H(f)` for a chain map.
pub fn induced_chain_map<F: Field>(f: &ChainMap<F>) -> Result<BTreeMap<i32, Matrix<F>>, (i32, ContainmentError<F>)> {
    induced_between(f, &total_cohomology(f.source()), &total_cohomology(f.target()))
}

fn is_iso<F: Field>(m: &Matrix<F>) -> bool {
    m.rows() == m.cols() && m.rank() == m.rows()
}

/// Why a map failed to be a pluripotential weak equivalence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeqFailure {
    pub theory: Theory,
    pub at: Bideg,
    pub source_dim: usize,
    pub target_dim: usize,
    pub rank: usize,
}

impl fmt::Display for WeqFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} map at ({},{}) has rank {} between dimensions {} and {}",
            self.theory, self.at.0, self.at.1, self.rank, self.source_dim, self.target_dim
        )
    }
}

/// `Ok(())` iff `f` induces isomorphisms on Bott-Chern and Aeppli
/// cohomology at every bidegree; otherwise the first failure.
pub fn is_pluripotential_weq<F: Field>(f: &BicomplexMap<F>) -> Result<(), WeqFailure> {
    assert!(f.is_morphism(), "weak equivalence test of a non-morphism");
    for theory in [Theory::BottChern, Theory::Aeppli] {
        let maps = induced_map(f, theory).expect("morphisms induce maps");
        for (at, m) in maps {
            if !is_iso(&m) {
                return Err(WeqFailure { theory, at, source_dim: m.cols(), target_dim: m.rows(), rank: m.rank() });
            }
        }
    }
    Ok(())
}

/// Both Bott-Chern and Aeppli cohomology vanish.
pub fn is_pluripotential_acyclic<F: Field>(a: &Bicomplex<F>) -> bool {
    bott_chern(a).is_zero() && aeppli(a).is_zero()
}

/// A chain map inducing isomorphisms on cohomology.
pub fn is_quasi_isomorphism<F: Field>(f: &ChainMap<F>) -> bool {
    induced_chain_map(f).expect("chain maps induce maps").values().all(is_iso)
}

/// The identity-induced map `H_BC → H_A` at every bidegree of the support.
pub fn bc_to_aeppli<F: Field>(a: &Bicomplex<F>) -> BTreeMap<Bideg, Matrix<F>> {
    induced_between(&BicomplexMap::identity(a), &bott_chern(a), &aeppli(a)).expect("H_BC maps to H_A")
}

/// `Ok(())` iff `H_BC → H_A` is an isomorphism everywhere; otherwise the
/// first failing bidegree, ordered by total degree and then by descending `p`.
pub fn ddbar_lemma<F: Field>(a: &Bicomplex<F>) -> Result<(), Bideg> {
    let maps = bc_to_aeppli(a);
    let mut failing: Vec<Bideg> = maps.iter().filter(|(_, m)| !is_iso(m)).map(|(x, _)| *x).collect();
    failing.sort_by_key(|&(p, q)| (p + q, -p));
    failing.first().map_or(Ok(()), |&x| Err(x))
}

/// The comparison maps among the bidegree-wise theories, each induced by
/// the identity of `A`.
#[derive(Clone)]
pub struct ComparisonMaps<F> {
    pub bc_to_del: BTreeMap<Bideg, Matrix<F>>,
    pub bc_to_delbar: BTreeMap<Bideg, Matrix<F>>,
    pub del_to_aeppli: BTreeMap<Bideg, Matrix<F>>,
    pub delbar_to_aeppli: BTreeMap<Bideg, Matrix<F>>,
    pub bc_to_aeppli: BTreeMap<Bideg, Matrix<F>>,
}

pub fn comparison_maps<F: Field>(a: &Bicomplex<F>) -> ComparisonMaps<F> {
    let id = BicomplexMap::identity(a);
    let (bc, ae) = (bott_chern(a), aeppli(a));
    let (del, delbar) = (dolbeault(a, Side::Row), dolbeault(a, Side::Column));
    let ind = |s: &CohomologyTable<Bideg, F>, t: &CohomologyTable<Bideg, F>| {
        induced_between(&id, s, t).expect("comparison maps are well defined")
    };
    ComparisonMaps {
        bc_to_del: ind(&bc, &del),
        bc_to_delbar: ind(&bc, &delbar),
        del_to_aeppli: ind(&del, &ae),
        delbar_to_aeppli: ind(&delbar, &ae),
        bc_to_aeppli: ind(&bc, &ae),
    }
}

/// `∂∂̄h − ∂h∂̄ + ∂̄h∂ + h∂∂̄` for `h` of bidegree `(−1,−1)`, the expansion
/// of `[∂,[∂̄,h]]`.
pub fn homotopy_expansion<F: Field>(h: &BigradedMap<F>) -> BicomplexMap<F> {
    assert_eq!(h.offset(), (-1, -1), "a pluripotential homotopy has bidegree (-1,-1)");
    let (a, b) = (h.source(), h.target());
    let mut blocks = Vec::new();
    for (p, q) in a.support() {
        let t1 = b.del((p - 1, q)).mul(&b.delbar((p - 1, q - 1))).mul(&h.block((p, q)));
        let t2 = b.del((p - 1, q)).mul(&h.block((p, q + 1))).mul(&a.delbar((p, q)));
        let t3 = b.delbar((p, q - 1)).mul(&h.block((p + 1, q))).mul(&a.del((p, q)));
        let t4 = h.block((p + 1, q + 1)).mul(&a.del((p, q + 1))).mul(&a.delbar((p, q)));
        blocks.push(((p, q), t1.sub(&t2).add(&t3).add(&t4)));
    }
    BicomplexMap::morphism(a.clone(), b.clone(), blocks).expect("expansion blocks fit")
}

/// `f − g − [∂,[∂̄,h]]`; zero iff `h` is a pluripotential homotopy from `f` to `g`.
pub fn homotopy_defect<F: Field>(f: &BicomplexMap<F>, g: &BicomplexMap<F>, h: &BigradedMap<F>) -> BicomplexMap<F> {
    f.sub(g).sub(&homotopy_expansion(h))
}

/// A pluripotential homotopy from `f` to `g`, if one exists, found by
/// solving for `h` in the internal Hom.
pub fn find_homotopy<F: Field>(f: &BicomplexMap<F>, g: &BicomplexMap<F>) -> Option<BigradedMap<F>> {
    let hom = HomLayout::new(f.source(), f.target());
    let op = hom.complex.del((-1, 0)).mul(&hom.complex.delbar((-1, -1)));
    let rhs = hom.vectorize(&f.sub(g));
    let v = solve(&op, &rhs)?;
    Some(hom.devectorize((-1, -1), &v))
}

/// Morphisms `A → B` modulo pluripotential homotopy, computed as the
/// quotient of the direct solution space of the commutation equations by
/// the expansions `[∂,[∂̄,h]]` of a basis of bidegree-(−1,−1) maps, both
/// written in `Hom^{0,0}` coordinates.
pub fn morphisms_mod_homotopy_dim<F: Field>(a: &Bicomplex<F>, b: &Bicomplex<F>) -> usize {
    let hom = HomLayout::new(a, b);
    let n = hom.complex.dim((0, 0));
    let morphisms = crate::complexes::morphism_basis(a, b).iter().map(|f| hom.vectorize(f)).collect::<Vec<_>>();
    let m = hom.complex.dim((-1, -1));
    let null = (0..m).map(|i| {
        let mut v = vec![F::zero(); m];
        v[i] = F::one();
        hom.vectorize(&homotopy_expansion(&hom.devectorize((-1, -1), &v)))
    });
    let num = Subspace::span(n, morphisms);
    let den = Subspace::span(n, null);
    Subquotient::new(num, den).expect("null-homotopic maps are morphisms").dim()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::{direct_sum, square};
    use crate::scalar::{q, Q};

    fn one(x: i64) -> Matrix<Q> {
        Matrix::from_i64(1, 1, &[x])
    }

    fn e1() -> Bicomplex<Q> {
        Bicomplex::from_parts([((0, 1), 1), ((1, 0), 1), ((1, 1), 1)], [((0, 1), one(1))], [((1, 0), one(-1))]).unwrap()
    }

    fn e_minus1() -> Bicomplex<Q> {
        // cells (-1,0), (0,-1), (-1,-1); ∂(-1,-1) = -(0,-1), ∂̄(-1,-1) = (-1,0)
        Bicomplex::from_parts([((-1, 0), 1), ((0, -1), 1), ((-1, -1), 1)], [((-1, -1), one(-1))], [((-1, -1), one(1))])
            .unwrap()
    }

    fn dims(t: &CohomologyTable<Bideg, Q>) -> Vec<(Bideg, usize)> {
        t.dims().into_iter().collect()
    }

    #[test]
    fn unit_tables() {
        let u = Bicomplex::<Q>::unit();
        for theory in [Theory::BottChern, Theory::Aeppli, Theory::Del, Theory::Delbar, Theory::Total] {
            assert_eq!(dims(&bicomplex_table(&u, theory)), vec![((0, 0), 1)]);
        }
    }

    #[test]
    fn squares_are_acyclic() {
        let sq = square::<Q>((0, 0));
        for theory in [Theory::BottChern, Theory::Aeppli, Theory::Del, Theory::Delbar, Theory::Total] {
            assert!(bicomplex_table(&sq, theory).is_zero(), "{theory}");
        }
        assert!(is_pluripotential_acyclic(&sq));
        assert!(!is_pluripotential_acyclic(&Bicomplex::<Q>::point((0, 0))));
    }

    #[test]
    fn zigzag_tables() {
        let em1 = e_minus1();
        assert_eq!(dims(&bott_chern(&em1)), vec![((-1, 0), 1), ((0, -1), 1)]);
        assert_eq!(dims(&aeppli(&em1)), vec![((-1, -1), 1)]);
        let a = e1();
        assert_eq!(dims(&dolbeault(&a, Side::Row)), vec![((1, 0), 1)]);
        assert_eq!(dims(&dolbeault(&a, Side::Column)), vec![((0, 1), 1)]);
        assert_eq!(dims(&bott_chern(&a)), vec![((1, 1), 1)]);
        assert_eq!(dims(&aeppli(&a)), vec![((0, 1), 1), ((1, 0), 1)]);
        assert_eq!(bicomplex_table(&a, Theory::Total).dims().into_iter().collect::<Vec<_>>(), vec![((1, 0), 1)]);
    }

    #[test]
    fn total_cohomology_examples() {
        let delta1 =
            CochainComplex::<Q>::from_parts([(-1, 1), (0, 2)], [(-1, Matrix::from_i64(2, 1, &[-1, 1]))]).unwrap();
        assert_eq!(total_cohomology(&delta1).dims().into_iter().collect::<Vec<_>>(), vec![(0, 1)]);
        let disk = CochainComplex::<Q>::from_parts([(0, 1), (1, 1)], [(0, one(1))]).unwrap();
        assert!(total_cohomology(&disk).is_zero());
        assert_eq!(total_cohomology(&CochainComplex::<Q>::point(3)).dim(3), 1);
    }

    #[test]
    fn ddbar_examples() {
        assert_eq!(ddbar_lemma(&Bicomplex::<Q>::point((0, 0))), Ok(()));
        assert_eq!(ddbar_lemma(&direct_sum(&[&square::<Q>((0, 0)), &Bicomplex::point((0, 0))])), Ok(()));
        assert_eq!(ddbar_lemma(&e1()), Err((1, 0)));
    }

    #[test]
    fn weak_equivalence_examples() {
        let a = e1();
        assert_eq!(is_pluripotential_weq(&BicomplexMap::identity(&a)), Ok(()));
        let sq = square::<Q>((0, 0));
        assert_eq!(is_pluripotential_weq(&BicomplexMap::zero(Bicomplex::zero(), sq, (0, 0))), Ok(()));
        let incl = BicomplexMap::morphism(Bicomplex::point((1, 1)), a, [((1, 1), one(1))]).unwrap();
        assert!(incl.is_morphism());
        let failure = is_pluripotential_weq(&incl).unwrap_err();
        assert_eq!(failure.theory, Theory::Aeppli);
    }

    #[test]
    fn square_homotopy_at_the_corner() {
        let sq = square::<Q>((0, 0));
        let id = BicomplexMap::identity(&sq);
        let zero = BicomplexMap::zero(sq.clone(), sq.clone(), (0, 0));
        // ∂∂̄ from the corner is -1, so h = -1 from the top back to the corner
        let h = BigradedMap::new(sq.clone(), sq.clone(), (-1, -1), [((1, 1), one(-1))]).unwrap();
        assert!(homotopy_defect(&id, &zero, &h).is_zero());
        let found = find_homotopy(&id, &zero).unwrap();
        assert!(homotopy_defect(&id, &zero, &found).is_zero());
    }

    #[test]
    fn e1_identity_is_not_null_homotopic() {
        let a = e1();
        let id = BicomplexMap::identity(&a);
        let zero = BicomplexMap::zero(a.clone(), a.clone(), (0, 0));
        assert!(find_homotopy(&id, &zero).is_none());
        // E_1 has no room for a nonzero map of bidegree (-1,-1)
        let h = BigradedMap::zero(a.clone(), a.clone(), (-1, -1));
        assert!(!homotopy_defect(&id, &zero, &h).is_zero());
    }

    #[test]
    fn expansion_matches_the_hom_differential() {
        let a = direct_sum(&[&e1(), &square((0, 0))]);
        let b = direct_sum(&[&e_minus1(), &square((0, 0)), &e1()]);
        let hom = HomLayout::new(&a, &b);
        let op = hom.complex.del((-1, 0)).mul(&hom.complex.delbar((-1, -1)));
        let m = hom.complex.dim((-1, -1));
        for i in 0..m {
            let mut v = vec![q(0); m];
            v[i] = q(i as i64 + 1);
            let h = hom.devectorize((-1, -1), &v);
            assert_eq!(hom.vectorize(&homotopy_expansion(&h)), op.apply(&v));
        }
    }
}
