//! Seeded random complexes, bicomplexes and maps for property checks.
//!
//! Every finite-dimensional bounded complex is a sum of points and lines,
//! and every bounded bicomplex a sum of dots, squares and zigzags; the
//! generators draw such a sum and then apply a random change of basis in
//! each degree, so the differentials come out dense. Base changes are
//! products of unitriangular integer matrices, which keeps entries small.

use std::collections::BTreeMap;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::cohomology::homotopy_expansion;
use crate::complexes::{
    direct_sum, morphism_basis, square, Bicomplex, BicomplexMap, Bideg, BigradedMap, ChainMap, CochainComplex, Complex,
    Degree, GradedMap,
};
use crate::exactlin::Matrix;
use crate::realbico::{direct_sum_real, inflate_real, real_double, RealBicomplex};
use crate::scalar::{Field, Q};

pub type TestRng = ChaCha8Rng;

pub fn seeded(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn small<R: Rng>(rng: &mut R, bound: i64) -> Q {
    Q::from_i64(rng.gen_range(-bound..=bound))
}

fn nonzero<R: Rng>(rng: &mut R) -> Q {
    let n = rng.gen_range(1..=3);
    Q::from_i64(if rng.gen_bool(0.5) { n } else { -n })
}

/// A random `n × n` integer matrix of determinant `±1`.
pub fn random_invertible<R: Rng>(rng: &mut R, n: usize) -> Matrix<Q> {
    let mut lower = Matrix::identity(n);
    let mut upper = Matrix::identity(n);
    for i in 0..n {
        for j in 0..i {
            lower.set(i, j, small(rng, 1));
            upper.set(j, i, small(rng, 1));
        }
        if rng.gen_bool(0.5) {
            upper.set(i, i, Q::from_i64(-1));
        }
    }
    lower.mul(&upper)
}

/// `g_{x+s} ∘ d ∘ g_x⁻¹` for every differential, with the isomorphism
/// `g : C → C'`.
pub fn base_change<D: Degree>(c: &Complex<D, Q>, g: &BTreeMap<D, Matrix<Q>>) -> GradedMap<D, Q> {
    let inv: BTreeMap<D, Matrix<Q>> =
        g.iter().map(|(x, m)| (*x, m.inverse().expect("base change is invertible"))).collect();
    let diffs = D::differentials()
        .iter()
        .enumerate()
        .map(|(k, &step)| c.diff_blocks(k).iter().map(|(x, d)| (*x, g[&x.add(step)].mul(d).mul(&inv[x]))).collect())
        .collect();
    let changed = Complex::from_blocks(c.dims().iter().map(|(x, n)| (*x, *n)), diffs).expect("same shapes");
    GradedMap::morphism(c.clone(), changed, g.clone()).expect("base change fits")
}

pub fn random_base_change<D: Degree, R: Rng>(rng: &mut R, c: &Complex<D, Q>) -> GradedMap<D, Q> {
    let g = c.dims().iter().map(|(x, &n)| (*x, random_invertible(rng, n))).collect();
    base_change(c, &g)
}

/// Points and lines `𝐤 → 𝐤` in degrees `[lo, hi]`, at most `max_dim` per
/// degree, before any base change.
fn split_complex<R: Rng>(rng: &mut R, lo: i32, hi: i32, max_dim: usize, allow_points: bool) -> CochainComplex<Q> {
    let mut dims: BTreeMap<i32, usize> = BTreeMap::new();
    let mut lines: Vec<(i32, Q)> = Vec::new();
    for n in lo..=hi {
        let used = dims.get(&n).copied().unwrap_or(0);
        let free = max_dim - used;
        let count = if n < hi { rng.gen_range(0..=free) } else { 0 };
        for _ in 0..count {
            lines.push((n, nonzero(rng)));
        }
        *dims.entry(n).or_default() += count;
        *dims.entry(n + 1).or_default() += count;
        if allow_points {
            let free = max_dim - dims[&n];
            *dims.entry(n).or_default() += rng.gen_range(0..=free);
        }
    }
    // Sources fill each degree from the bottom, targets from the top.
    let (mut sources, mut targets): (BTreeMap<i32, usize>, BTreeMap<i32, usize>) = Default::default();
    let mut d: BTreeMap<i32, Matrix<Q>> = BTreeMap::new();
    for (n, c) in lines {
        let i = sources.entry(n).or_default();
        let j = targets.entry(n + 1).or_default();
        let m = d.entry(n).or_insert_with(|| Matrix::zeros(dims[&(n + 1)], dims[&n]));
        m.set(dims[&(n + 1)] - 1 - *j, *i, c);
        *i += 1;
        *j += 1;
    }
    CochainComplex::from_parts(dims.into_iter().filter(|(_, k)| *k > 0), d).expect("split complex fits")
}

/// A random cochain complex in degrees `[lo, hi]` with every dimension at
/// most `max_dim`.
pub fn random_complex<R: Rng>(rng: &mut R, lo: i32, hi: i32, max_dim: usize) -> CochainComplex<Q> {
    let c = split_complex(rng, lo, hi, max_dim, true);
    random_base_change(rng, &c).target().clone()
}

/// A random acyclic complex: lines only.
pub fn random_acyclic_complex<R: Rng>(rng: &mut R, lo: i32, hi: i32, max_dim: usize) -> CochainComplex<Q> {
    let c = split_complex(rng, lo, hi, max_dim, false);
    random_base_change(rng, &c).target().clone()
}

/// One indecomposable piece: a dot, a square or a zigzag of two to four cells.
fn random_piece<R: Rng>(rng: &mut R, lo: i32, hi: i32) -> Bicomplex<Q> {
    let start = (rng.gen_range(lo..=hi), rng.gen_range(lo..=hi));
    match rng.gen_range(0..4) {
        0 => Bicomplex::with_dims([(start, 1)]),
        1 => square(start),
        _ => {
            // Alternate ∂ and ∂̄ arrows between two adjacent antidiagonals,
            // all arrows pointing up: low cells map, high cells are hit.
            let len = rng.gen_range(2..=4);
            let first_del = rng.gen_bool(0.5);
            let low_first = rng.gen_bool(0.5);
            let mut cells = vec![start];
            let mut arrows: Vec<(usize, usize)> = Vec::new();
            let mut use_del = first_del;
            let mut low = low_first;
            for i in 1..len {
                let (p, q) = cells[i - 1];
                let step: Bideg = if use_del { (1, 0) } else { (0, 1) };
                let next = if low { (p + step.0, q + step.1) } else { (p - step.0, q - step.1) };
                cells.push(next);
                let k = usize::from(!use_del);
                arrows.push((if low { i - 1 } else { i }, k));
                use_del = !use_del;
                low = !low;
            }
            let mut dims = BTreeMap::new();
            for c in &cells {
                dims.insert(*c, 1usize);
            }
            let mut diffs = vec![BTreeMap::new(), BTreeMap::new()];
            for (from, k) in arrows {
                diffs[k].insert(cells[from], Matrix::scalar(1, nonzero(rng)));
            }
            Bicomplex::from_blocks(dims, diffs).expect("zigzag fits")
        }
    }
}

fn fits(sum: &BTreeMap<Bideg, usize>, piece: &Bicomplex<Q>, lo: i32, hi: i32, max_dim: usize) -> bool {
    piece.dims().iter().all(|(&(p, q), &n)| {
        (lo..=hi).contains(&p) && (lo..=hi).contains(&q) && sum.get(&(p, q)).unwrap_or(&0) + n <= max_dim
    })
}

/// A random bicomplex supported in `[lo, hi]²` with every dimension at most
/// `max_dim`, built from up to `pieces` indecomposables.
pub fn random_bicomplex<R: Rng>(rng: &mut R, lo: i32, hi: i32, max_dim: usize, pieces: usize) -> Bicomplex<Q> {
    let mut parts: Vec<Bicomplex<Q>> = Vec::new();
    let mut dims: BTreeMap<Bideg, usize> = BTreeMap::new();
    for _ in 0..pieces {
        let piece = random_piece(rng, lo, hi);
        if fits(&dims, &piece, lo, hi, max_dim) {
            for (x, n) in piece.dims() {
                *dims.entry(*x).or_default() += n;
            }
            parts.push(piece);
        }
    }
    let refs: Vec<&Bicomplex<Q>> = parts.iter().collect();
    let a = direct_sum(&refs);
    random_base_change(rng, &a).target().clone()
}

/// A random combination of a basis of the morphisms `A → B`.
pub fn random_morphism<D: Degree, R: Rng>(rng: &mut R, a: &Complex<D, Q>, b: &Complex<D, Q>) -> GradedMap<D, Q> {
    let mut f = GradedMap::zero(a.clone(), b.clone(), D::zero());
    for g in morphism_basis(a, b) {
        f = f.add(&g.scale(&small(rng, 2)));
    }
    f
}

/// A random map of bidegree `(−1,−1)`.
pub fn random_homotopy<R: Rng>(rng: &mut R, a: &Bicomplex<Q>, b: &Bicomplex<Q>) -> BigradedMap<Q> {
    let blocks: Vec<(Bideg, Matrix<Q>)> = a
        .dims()
        .iter()
        .filter_map(|(&(p, q), &n)| {
            let rows = b.dim((p - 1, q - 1));
            (rows > 0).then(|| {
                let entries = (0..rows).map(|_| (0..n).map(|_| small(rng, 2)).collect()).collect();
                ((p, q), Matrix::from_rows(entries, n))
            })
        })
        .collect();
    BigradedMap::new(a.clone(), b.clone(), (-1, -1), blocks).expect("homotopy fits")
}

/// A random morphism `f` with a random `h`, and `g = f − [∂,[∂̄,h]]`, so that
/// `h` is a homotopy from `f` to `g`.
pub fn random_homotopic_pair<R: Rng>(
    rng: &mut R,
    a: &Bicomplex<Q>,
    b: &Bicomplex<Q>,
) -> (BicomplexMap<Q>, BicomplexMap<Q>, BigradedMap<Q>) {
    let f = random_morphism(rng, a, b);
    let h = random_homotopy(rng, a, b);
    let g = f.sub(&homotopy_expansion(&h));
    (f, g, h)
}

/// The inclusion `C → C ⊕ K` of a random complex into its sum with a random
/// acyclic complex, seen through a random base change of the target.
pub fn random_quasi_isomorphism<R: Rng>(rng: &mut R, lo: i32, hi: i32, max_dim: usize) -> ChainMap<Q> {
    let c = random_complex(rng, lo, hi, max_dim);
    let k = random_acyclic_complex(rng, lo, hi, max_dim);
    inclusion_then_base_change(rng, &c, &k)
}

/// The inclusion `C → C ⊕ P` where `P` has nonzero cohomology; never a
/// quasi-isomorphism.
pub fn random_non_quasi_isomorphism<R: Rng>(rng: &mut R, lo: i32, hi: i32, max_dim: usize) -> ChainMap<Q> {
    let c = random_complex(rng, lo, hi, max_dim);
    let n = rng.gen_range(lo..=hi);
    let extra = random_acyclic_complex(rng, lo, hi, max_dim);
    let p = direct_sum(&[&extra, &CochainComplex::point(n)]);
    inclusion_then_base_change(rng, &c, &p)
}

/// A random real bicomplex: the real double of a random bicomplex plus the
/// real inflation of a random complex.
pub fn random_real_bicomplex<R: Rng>(rng: &mut R, lo: i32, hi: i32, max_dim: usize) -> RealBicomplex {
    let b = random_bicomplex(rng, lo, hi, max_dim, 2);
    let c = random_complex(rng, lo, hi, max_dim.min(2));
    direct_sum_real(&[&real_double(&b), &inflate_real(&c)])
}

fn inclusion_then_base_change<R: Rng>(rng: &mut R, c: &CochainComplex<Q>, k: &CochainComplex<Q>) -> ChainMap<Q> {
    let sum = direct_sum(&[c, k]);
    let blocks: Vec<(i32, Matrix<Q>)> = c
        .dims()
        .iter()
        .map(|(&n, &dim)| {
            let mut m = Matrix::zeros(sum.dim(n), dim);
            m.add_block(0, 0, &Matrix::identity(dim));
            (n, m)
        })
        .collect();
    let include = ChainMap::morphism(c.clone(), sum.clone(), blocks).expect("inclusion fits");
    random_base_change(rng, &sum).compose(&include)
}
