//! Numerical laboratory for harmonic functions on the unit disk with
//! logarithmic growth bounds.
//!
//! The crate is organized in layers:
//!
//! * [`numerics`] — near-boundary arithmetic ([`BoundaryDepth`]), exact
//!   dyadic angles with modular frequency reduction ([`DyadicAngle`]),
//!   and the Poisson kernel.
//! * [`quad`] — adaptive Gauss–Kronrod quadrature and fixed panel rules.
//! * [`series`] — lacunary and super-lacunary series evaluators with
//!   certified truncation, plus the coefficient criterion for
//!   logarithmic growth.
//! * [`premeasure`] — finitely additive signed arc functions, their
//!   kappa diagnostics, distribution functions, and Poisson integrals.
//! * [`radial`] — the weighted radial average, its block decomposition,
//!   the block kernels and their compactly supported surrogates, and
//!   the cosine coefficient machinery.
//! * [`martingale`] — super-dyadic grids, conditional expectations,
//!   atom families, the shift partition, and LIL diagnostics.
//!
//! Everything is pure and deterministic; all randomness is seeded
//! explicitly.

pub mod error;
pub mod martingale;
pub mod numerics;
pub mod premeasure;
pub mod quad;
pub mod radial;
pub mod series;

pub use error::{Error, Result};
pub use numerics::{BoundaryDepth, DyadicAngle, FrequencyExponent};
