//! Error type shared by all modules of the crate.

/// Crate-wide error enumeration.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// A series evaluation reached its maximum index before the stored
    /// tail bound certified the discarded remainder.
    #[error("series tail not certified at index {max_index}: remainder bound {bound:.3e} > {tol:.3e}")]
    TailNotCertified {
        max_index: u32,
        bound: f64,
        tol: f64,
    },

    /// Plain real angles only support frequencies up to 2^40; larger
    /// frequencies require a dyadic angle for exact reduction.
    #[error("frequency near 2^{log2_freq:.1} too large for a plain real angle (limit 2^40)")]
    FrequencyTooLargeForRealAngle { log2_freq: f64 },

    /// A Moebius-quotient term was evaluated within `dist` of its pole.
    #[error("term n={n}: argument within {dist:.3e} of the pole of w/(w-1)")]
    PoleProximity { n: u32, dist: f64 },

    #[error("quadrature did not converge on [{a:.6e}, {b:.6e}]: err {err:.3e} > tol {tol:.3e}")]
    QuadratureNotConverged { a: f64, b: f64, err: f64, tol: f64 },

    /// The martingale property E(f_n | F_{n-1}) = f_{n-1} failed.
    #[error("not a martingale: level {level} cell {cell} deviates by {dev:.3e}")]
    NotAMartingale { level: u32, cell: usize, dev: f64 },

    #[error("incompatible grids: {0}")]
    IncompatibleGrids(String),

    #[error("shift partition search failed at scale {scale}, arc {arc}")]
    PartitionSearchFailed { scale: u32, arc: usize },

    #[error("invalid series: {0}")]
    InvalidSeries(String),

    #[error("invalid premeasure: {0}")]
    InvalidPremeasure(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
