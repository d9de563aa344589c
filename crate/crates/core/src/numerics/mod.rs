//! Near-boundary primitives: boundary depth arithmetic, exact dyadic
//! angles, stable huge powers, and the Poisson kernel.

mod angle;
mod depth;
pub mod poisson;
pub mod reduce;

pub use angle::DyadicAngle;
pub use depth::{BoundaryDepth, FrequencyExponent};
