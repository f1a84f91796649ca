//! Exact computations with finite bicomplexes over ℚ.

pub mod bigolin;
pub mod cohomology;
pub mod complexes;
pub mod enrichment;
pub mod exactlin;
pub mod inflation;
pub mod monoidal;
pub mod random;
pub mod realbico;
pub mod scalar;
