use std::fmt;

use super::{diff_name, Complex, Degree, GradedMap};
use crate::exactlin::Matrix;
use crate::scalar::{sign, Field};

/// The identity a defect violates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    DSquared,
    DelSquared,
    DelbarSquared,
    /// `∂∂̄ + ∂̄∂ = 0`.
    Anticommute,
    CommutesWithD,
    CommutesWithDel,
    CommutesWithDelbar,
    /// `σσ = id`.
    SigmaInvolution,
    /// `σ∂σ = ∂̄`.
    SigmaIntertwines,
    /// `fσ = σf` for a map of real bicomplexes.
    SigmaEquivariant,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::DSquared => "d² = 0",
            Relation::DelSquared => "∂² = 0",
            Relation::DelbarSquared => "∂̄² = 0",
            Relation::Anticommute => "∂∂̄ + ∂̄∂ = 0",
            Relation::CommutesWithD => "fd = df",
            Relation::CommutesWithDel => "f∂ = ∂f",
            Relation::CommutesWithDelbar => "f∂̄ = ∂̄f",
            Relation::SigmaInvolution => "σσ = id",
            Relation::SigmaIntertwines => "σ∂σ = ∂̄",
            Relation::SigmaEquivariant => "fσ = σf",
        })
    }
}

/// A violated identity at one (bi)degree, with the nonzero defect matrix.
#[derive(Clone, PartialEq)]
pub struct Defect<F> {
    pub relation: Relation,
    pub at: String,
    pub matrix: Matrix<F>,
}

#[derive(Clone, PartialEq)]
pub struct ValidationReport<F> {
    pub defects: Vec<Defect<F>>,
}

impl<F: Field> ValidationReport<F> {
    pub fn is_valid(&self) -> bool {
        self.defects.is_empty()
    }

    pub(crate) fn push(&mut self, relation: Relation, at: String, matrix: Matrix<F>) {
        if !matrix.is_zero() {
            self.defects.push(Defect { relation, at, matrix });
        }
    }
}

impl<F: Field> fmt::Display for ValidationReport<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.defects.is_empty() {
            return writeln!(f, "valid");
        }
        for d in &self.defects {
            writeln!(f, "{} fails at {}: {:?}", d.relation, d.at, d.matrix)?;
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for Defect<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {}: {:?}", self.relation, self.at, self.matrix)
    }
}

impl<F: Field> fmt::Debug for ValidationReport<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.defects).finish()
    }
}

fn square_relation<D: Degree>(k: usize) -> Relation {
    match diff_name::<D>(k) {
        "d" => Relation::DSquared,
        "∂" => Relation::DelSquared,
        _ => Relation::DelbarSquared,
    }
}

fn commute_relation<D: Degree>(k: usize) -> Relation {
    match diff_name::<D>(k) {
        "d" => Relation::CommutesWithD,
        "∂" => Relation::CommutesWithDel,
        _ => Relation::CommutesWithDelbar,
    }
}

impl<D: Degree, F: Field> Complex<D, F> {
    /// Every differential squares to zero and distinct differentials
    /// anticommute.
    pub fn validate(&self) -> ValidationReport<F> {
        let steps = D::differentials();
        let mut report = ValidationReport { defects: Vec::new() };
        for x in self.support() {
            for (k, &dk) in steps.iter().enumerate() {
                let sq = self.diff(k, x.add(dk)).mul(&self.diff(k, x));
                report.push(square_relation::<D>(k), x.label(), sq);
                for (l, &dl) in steps.iter().enumerate().skip(k + 1) {
                    let kl = self.diff(k, x.add(dl)).mul(&self.diff(l, x));
                    let lk = self.diff(l, x.add(dk)).mul(&self.diff(k, x));
                    report.push(Relation::Anticommute, x.label(), kl.add(&lk));
                }
            }
        }
        report
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_valid()
    }
}

impl<D: Degree, F: Field> GradedMap<D, F> {
    /// Defects of the graded commutator `∂f − (−1)^{|f|} f∂` for every
    /// differential; for degree-0 maps this is plain commutation.
    pub fn validate(&self) -> ValidationReport<F> {
        let e = self.offset();
        let s = F::from_i64(sign(e.total()));
        let mut report = ValidationReport { defects: Vec::new() };
        for x in self.source().support() {
            for (k, &dk) in D::differentials().iter().enumerate() {
                let lhs = self.target().diff(k, x.add(e)).mul(&self.block(x));
                let rhs = self.block(x.add(dk)).mul(&self.source().diff(k, x)).scale(&s);
                report.push(commute_relation::<D>(k), x.label(), lhs.sub(&rhs));
            }
        }
        report
    }

    /// A degree-0 map commuting with all differentials.
    pub fn is_morphism(&self) -> bool {
        self.offset() == D::zero() && self.validate().is_valid()
    }
}
