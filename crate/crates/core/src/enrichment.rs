//! The dg-enrichment of bicomplexes: `𝓔 = 𝓑 ∘ τ` and `[A,B] = 𝓔(Hom(A,B))`.

use crate::bigolin::{bigolin, bigolin_map};
use crate::complexes::{
    composition, internal_hom, morphism_basis, tensor, tensor_maps, truncate_third_quadrant, Bicomplex, ChainMap,
    CochainComplex,
};
use crate::exactlin::Matrix;
use crate::inflation::inflate;
use crate::monoidal::lax_phi_tilde;
use crate::scalar::{sign, Field};

/// `𝓔(A) = 𝓑(τA)`, a complex concentrated in degrees `≤ 0`.
pub fn script_e<F: Field>(a: &Bicomplex<F>) -> CochainComplex<F> {
    bigolin(&truncate_third_quadrant(a).complex)
}

/// The mapping complex `[A,B] = 𝓔(Hom(A,B))`; its degree-0 cycles are the
/// morphisms `A → B`.
pub fn dg_hom<F: Field>(a: &Bicomplex<F>, b: &Bicomplex<F>) -> CochainComplex<F> {
    script_e(&internal_hom(a, b))
}

/// Composition `[B,C] ⊗ [A,B] → [A,C]`: `φ̃` followed by `𝓑` of the
/// inclusion `τX ⊗ τY → τ(X⊗Y)` and of the truncated composition of maps.
pub fn dg_compose<F: Field>(a: &Bicomplex<F>, b: &Bicomplex<F>, c: &Bicomplex<F>) -> ChainMap<F> {
    let (x, y) = (internal_hom(b, c), internal_hom(a, b));
    let (tx, ty) = (truncate_third_quadrant(&x), truncate_third_quadrant(&y));
    let txy = truncate_third_quadrant(&tensor(&x, &y));
    let tac = truncate_third_quadrant(&internal_hom(a, c));
    let include = txy.lift(&tensor_maps(&tx.inclusion, &ty.inclusion));
    let compose = txy.restrict(&composition(a, b, c), &tac);
    let phi = lax_phi_tilde(&tx.complex, &ty.complex).expect("truncations lie in the third quadrant");
    bigolin_map(&compose.compose(&include), 0, 0).compose(&phi)
}

/// `(dim Hom_Ch(N(𝐤Δⁿ), [A,B]), dim Hom_BiCo(Inf(N(𝐤Δⁿ)) ⊗ A, B))`.
pub fn simplicial_hom_dim<F: Field>(a: &Bicomplex<F>, b: &Bicomplex<F>, n: usize) -> (usize, usize) {
    let chains = normalized_simplex_chains::<F>(n);
    let lhs = morphism_basis(&chains, &dg_hom(a, b)).len();
    let rhs = morphism_basis(&tensor(&inflate(&chains), a), b).len();
    (lhs, rhs)
}

/// `k`-element subsets of `0..n` in lexicographic order.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Normalized chains `N(𝐤Δⁿ)` in cochain degrees `[−n, 0]`.
///
/// Degree `−j` has the `j`-simplices (`(j+1)`-subsets of the vertices) in
/// lexicographic order, and `d` is the alternating sum of faces, so
/// `d[01] = [1] − [0]`.
pub fn normalized_simplex_chains<F: Field>(n: usize) -> CochainComplex<F> {
    let faces: Vec<Vec<Vec<usize>>> = (0..=n).map(|j| subsets(n + 1, j + 1)).collect();
    let dims: Vec<(i32, usize)> = (0..=n).map(|j| (-(j as i32), faces[j].len())).collect();
    let mut d = Vec::new();
    for j in 1..=n {
        let mut m = Matrix::zeros(faces[j - 1].len(), faces[j].len());
        for (col, s) in faces[j].iter().enumerate() {
            for omit in 0..s.len() {
                let face: Vec<usize> = s.iter().enumerate().filter(|(i, _)| *i != omit).map(|(_, v)| *v).collect();
                let row = faces[j - 1].binary_search(&face).expect("faces are simplices");
                m.set(row, col, F::from_i64(sign(omit as i64)));
            }
        }
        d.push((-(j as i32), m));
    }
    CochainComplex::from_parts(dims, d).expect("simplex chains fit")
}
