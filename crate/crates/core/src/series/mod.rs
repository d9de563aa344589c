//! Lacunary harmonic series on the disk with certified truncation.

mod criterion;
mod frequency;
mod lacunary;
mod mobius;
mod super_lacunary;

pub use criterion::{korenblum_consistency, CriterionOptions, CriterionReport};
pub use frequency::Frequency;
pub use lacunary::{AngleArg, LacunarySeries, LacunaryTerm, PartialSumReport, TailPolicy};
pub use mobius::{MobiusSection, MobiusSeries};
pub use super_lacunary::{SuperLacunarySection, SuperLacunarySeries};

use crate::error::Result;
use crate::numerics::BoundaryDepth;

/// A function of the radius alone, with the angle already fixed.
/// Implemented by per-angle sections of the series types and by plain
/// closures; the weighted radial average integrates these.
pub trait RadialSection {
    fn eval(&self, d: BoundaryDepth) -> Result<f64>;
}

impl<F> RadialSection for F
where
    F: Fn(BoundaryDepth) -> Result<f64>,
{
    fn eval(&self, d: BoundaryDepth) -> Result<f64> {
        self(d)
    }
}
