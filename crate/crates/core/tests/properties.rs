//! Structural invariants on seeded random inputs. Each proptest case draws a
//! seed and builds its objects from the crate's generators.

use bico::bigolin::{bigolin, bigolin_complex, bigolin_map};
use bico::cohomology::{
    aeppli, bicomplex_table, bott_chern, ddbar_lemma, find_homotopy, homotopy_expansion, induced_map,
    is_pluripotential_weq, is_quasi_isomorphism, Theory,
};
use bico::complexes::{
    direct_sum, internal_hom, morphism_basis, shift, tensor, transpose, truncate_third_quadrant, Bicomplex,
    BicomplexMap, GradedMap,
};
use bico::exactlin::{kernel, subquotient_dim, Matrix, Subspace};
use bico::inflation::{counit, ele, inflate_map, nonnegative_row_map, unit};
use bico::monoidal::oplax_phi;
use bico::random::{
    random_base_change, random_bicomplex, random_complex, random_homotopy, random_invertible, random_morphism,
    random_non_quasi_isomorphism, random_quasi_isomorphism, random_real_bicomplex, seeded, TestRng,
};
use bico::realbico::{is_real_homotopy, is_real_morphism, real_oplax_phi, realify_homotopy};
use bico::scalar::{Field, Q, QI};
use proptest::prelude::*;
use rand::Rng;

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig { cases, ..ProptestConfig::default() }
}

fn random_matrix(rng: &mut TestRng, rows: usize, cols: usize) -> Matrix<Q> {
    let entries: Vec<i64> =
        (0..rows * cols).map(|_| if rng.gen_bool(0.4) { rng.gen_range(-3..=3) } else { 0 }).collect();
    Matrix::from_i64(rows, cols, &entries)
}

fn complexified(m: &Matrix<Q>) -> Matrix<QI> {
    Matrix::from_rows(m.to_rows().iter().map(|r| r.iter().map(QI::from_q).collect()).collect(), m.cols())
}

fn small(rng: &mut TestRng) -> Bicomplex<Q> {
    random_bicomplex(rng, -2, 1, 2, 4)
}

proptest! {
    #![proptest_config(config(64))]

    #[test]
    fn kernels_and_ranks(seed in any::<u64>(), rows in 0usize..6, cols in 0usize..6) {
        let mut rng = seeded(seed);
        let m = random_matrix(&mut rng, rows, cols);
        for v in kernel(&m).basis() {
            prop_assert!(m.apply(v).iter().all(|x| x.is_zero()));
        }
        prop_assert_eq!(m.rank(), m.transpose().rank());
        prop_assert_eq!(kernel(&m).dim() + m.rank(), cols);
    }

    #[test]
    fn subquotients_ignore_the_choice_of_spanning_set(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let n = rng.gen_range(1..6);
        let num = random_matrix(&mut rng, n, 4);
        let den = num.mul(&random_matrix(&mut rng, 4, 2));
        let d = subquotient_dim(&Subspace::column_space(&num), &Subspace::column_space(&den)).unwrap();
        let g = random_invertible(&mut rng, 4);
        let h = random_invertible(&mut rng, 2);
        let d2 = subquotient_dim(&Subspace::column_space(&num.mul(&g)), &Subspace::column_space(&den.mul(&h))).unwrap();
        prop_assert_eq!(d, d2);
    }
}

proptest! {
    #![proptest_config(config(24))]

    #[test]
    fn tensor_and_hom_are_bicomplexes(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let (a, b) = (small(&mut rng), small(&mut rng));
        prop_assert!(tensor(&a, &b).is_valid());
        prop_assert!(internal_hom(&a, &b).is_valid());
        let (c, d) = (random_complex(&mut rng, -2, 2, 2), random_complex(&mut rng, -2, 2, 2));
        prop_assert!(tensor(&c, &d).is_valid());
        prop_assert!(internal_hom(&c, &d).is_valid());
    }

    #[test]
    fn tensor_hom_currying(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let a = random_bicomplex(&mut rng, -1, 1, 1, 3);
        let b = random_bicomplex(&mut rng, -1, 1, 1, 3);
        let c = random_bicomplex(&mut rng, -1, 1, 2, 3);
        prop_assert_eq!(morphism_basis(&tensor(&a, &b), &c).len(), morphism_basis(&a, &internal_hom(&b, &c)).len());
    }

    #[test]
    fn shifts_and_truncation(seed in any::<u64>(), p in -2i32..3, q in -2i32..3) {
        let mut rng = seeded(seed);
        let a = small(&mut rng);
        prop_assert_eq!(shift(&shift(&a, (p, q)), (-p, -q)), a.clone());
        let t = truncate_third_quadrant(&a);
        prop_assert!(t.inclusion.is_morphism());
        prop_assert_eq!(&truncate_third_quadrant(&t.complex).complex, &t.complex);
    }

    #[test]
    fn tables_are_additive_and_transpose_symmetric(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let (a, b) = (small(&mut rng), small(&mut rng));
        let sum = direct_sum(&[&a, &b]);
        for t in [Theory::BottChern, Theory::Aeppli, Theory::Del, Theory::Delbar] {
            let (ta, tb, ts) = (bicomplex_table(&a, t), bicomplex_table(&b, t), bicomplex_table(&sum, t));
            for x in sum.support() {
                prop_assert_eq!(ts.dim(x), ta.dim(x) + tb.dim(x));
            }
        }
        let at = transpose(&a);
        for x in a.support() {
            prop_assert_eq!(bott_chern(&a).dim(x), bott_chern(&at).dim((x.1, x.0)));
            prop_assert_eq!(aeppli(&a).dim(x), aeppli(&at).dim((x.1, x.0)));
        }
        if ddbar_lemma(&a).is_ok() {
            for x in a.support() {
                prop_assert_eq!(bott_chern(&a).dim(x), aeppli(&a).dim(x));
            }
        }
    }

    #[test]
    fn homotopy_invariance(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let (a, b) = (small(&mut rng), small(&mut rng));
        let f = random_morphism(&mut rng, &a, &b);
        let h = random_homotopy(&mut rng, &a, &b);
        let g = f.sub(&homotopy_expansion(&h));
        for t in [Theory::BottChern, Theory::Aeppli] {
            prop_assert_eq!(induced_map(&f, t).unwrap(), induced_map(&g, t).unwrap());
        }
        prop_assert!(find_homotopy(&f, &g).is_some());
    }

    #[test]
    fn homotopy_equivalences_are_weak_equivalences(seed in any::<u64>()) {
        // A base change followed by an inclusion into a sum with squares has
        // the projection as a homotopy inverse.
        let mut rng = seeded(seed);
        let a = small(&mut rng);
        let iso = random_base_change(&mut rng, &a);
        prop_assert!(is_pluripotential_weq(&iso).is_ok());
        let sq = bico::complexes::square::<Q>((rng.gen_range(-2..2), rng.gen_range(-2..2)));
        let target = iso.target().clone();
        let blocks: Vec<_> = target.dims().iter().map(|(x, n)| (*x, Matrix::identity(*n).vstack(&Matrix::zeros(sq.dim(*x), *n)))).collect();
        let incl = BicomplexMap::morphism(target.clone(), direct_sum(&[&target, &sq]), blocks).unwrap();
        prop_assert!(is_pluripotential_weq(&incl.compose(&iso)).is_ok());
    }

    #[test]
    fn bigolin_corners_and_functoriality(seed in any::<u64>(), p in -2i32..3, q in -2i32..3) {
        let mut rng = seeded(seed);
        let a = small(&mut rng);
        let moved = shift(&bigolin(&shift(&a, (-p, -q))), p + q);
        prop_assert_eq!(bigolin_complex(&a, p, q), moved);
        let iso = random_base_change(&mut rng, &a);
        prop_assert!(is_quasi_isomorphism(&bigolin_map(&iso, 0, 0)));
        let b = small(&mut rng);
        let sum = direct_sum(&[&a, &b]);
        let blocks: Vec<_> = a.dims().iter().map(|(x, n)| (*x, Matrix::identity(*n).hstack(&Matrix::zeros(*n, b.dim(*x))))).collect();
        let proj = BicomplexMap::morphism(sum, a.clone(), blocks).unwrap();
        let bp = bigolin_map(&proj, p, q);
        prop_assert!(bp.target().dims().iter().all(|(n, d)| bp.block(*n).rank() == *d), "surjections stay surjective");
    }

    #[test]
    fn unit_and_counit_are_natural(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let (c, d) = (random_complex(&mut rng, -2, 2, 2), random_complex(&mut rng, -2, 2, 2));
        let f = random_morphism(&mut rng, &c, &d);
        prop_assert_eq!(unit(&d).compose(&f), bigolin_map(&inflate_map(&f), 0, 0).compose(&unit(&c)));
        let (a, b) = (small(&mut rng), small(&mut rng));
        let g = random_morphism(&mut rng, &a, &b);
        prop_assert_eq!(counit(&b).compose(&inflate_map(&bigolin_map(&g, 0, 0))), g.compose(&counit(&a)));
    }

    #[test]
    fn inflation_preserves_and_reflects(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let f = random_quasi_isomorphism(&mut rng, -3, 3, 2);
        let inf = inflate_map(&f);
        prop_assert!(is_pluripotential_weq(&inf).is_ok());
        prop_assert!(inf.blocks().iter().all(|(_, m)| m.rank() == m.cols()), "injections stay injective");
        let g = random_non_quasi_isomorphism(&mut rng, 0, 3, 2);
        prop_assert!(is_pluripotential_weq(&inflate_map(&g)).is_err());
        // Restricting to the nonnegative row recovers g.
        prop_assert_eq!(nonnegative_row_map(&inflate_map(&g)), g);
    }

    #[test]
    fn real_homotopies_and_phi(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let a = random_real_bicomplex(&mut rng, -1, 1, 2);
        let b = random_real_bicomplex(&mut rng, -1, 1, 2);
        let blocks: Vec<_> = a.complex.support().filter_map(|(p, q)| {
            let rows = b.complex.dim((p - 1, q - 1));
            let cols = a.complex.dim((p, q));
            (rows > 0).then(|| ((p, q), complexified(&random_matrix(&mut rng, rows, cols))))
        }).collect();
        let h = GradedMap::new(a.complex.clone(), b.complex.clone(), (-1, -1), blocks).unwrap();
        let real = realify_homotopy(&h, &a, &b);
        prop_assert!(is_real_homotopy(&real, &a, &b));
        let zero = BicomplexMap::zero(a.complex.clone(), b.complex.clone(), (0, 0));
        let f = zero.add(&homotopy_expansion(&real));
        prop_assert!(is_real_morphism(&f, &a, &b));
        prop_assert!(find_homotopy(&f, &zero).is_some());

        let c = random_complex(&mut rng, -2, 0, 2);
        let d = random_complex(&mut rng, -2, 0, 2);
        let (phi, src, tgt) = real_oplax_phi(&c, &d).unwrap();
        prop_assert!(is_real_morphism(&phi, &src, &tgt));
        prop_assert!(is_pluripotential_weq(&phi).is_ok());
        prop_assert_eq!(phi, oplax_phi(&c, &d).unwrap().map_scalars(QI::from_q));
    }
}

proptest! {
    #![proptest_config(config(4))]

    #[test]
    fn powers_of_e1_and_e_minus_1(n in 2i32..4) {
        for (base, target) in [(1, n), (-1, -n)] {
            let mut power = ele::<Q>(base);
            for _ in 1..n {
                power = tensor(&power, &ele(base));
            }
            let e = ele::<Q>(target);
            prop_assert_eq!(bott_chern(&power).dims(), bott_chern(&e).dims());
            prop_assert_eq!(aeppli(&power).dims(), aeppli(&e).dims());
        }
    }
}
