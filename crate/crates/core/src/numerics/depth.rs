//! Radii near the boundary, parametrized by depth `s = log2(1/(1-r))`.
//!
//! Radii are never stored as `r`: the value `1 - 2^-64` is not
//! representable in an `f64`, while its depth `s = 64` is. All
//! near-boundary arithmetic works in `delta = 1 - r = 2^-s` space.

use std::f64::consts::LN_2;

/// exp(-x) underflows to exact zero below this threshold.
const EXP_UNDERFLOW: f64 = 746.0;

/// A radius `r = 1 - 2^-s` in the unit disk, stored as the depth `s >= 0`.
///
/// `s = 0` is the disk center (`r = 0`, `delta = 1`); each unit of depth
/// halves the distance to the boundary.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct BoundaryDepth {
    s: f64,
}

impl BoundaryDepth {
    /// Depth `s >= 0`, finite.
    pub fn new(s: f64) -> Self {
        assert!(s.is_finite() && s >= 0.0, "depth must be finite and >= 0, got {s}");
        Self { s }
    }

    /// Depth from the boundary gap `delta = 1 - r` in `(0, 1]`.
    pub fn from_delta(delta: f64) -> Self {
        assert!(delta > 0.0 && delta <= 1.0, "delta must lie in (0,1], got {delta}");
        Self::new(-delta.log2())
    }

    /// Depth from a plain radius. Loses accuracy once `1 - r` is below
    /// ~1e-15; intended for moderate radii only.
    pub fn from_radius(r: f64) -> Self {
        assert!((0.0..1.0).contains(&r), "radius must lie in [0,1), got {r}");
        Self::from_delta(1.0 - r)
    }

    /// Depth from the substituted variable `x = ln(1/(1-r)) = s ln 2`.
    pub fn from_x(x: f64) -> Self {
        Self::new(x / LN_2)
    }

    pub fn s(&self) -> f64 {
        self.s
    }

    /// `x = s ln 2`, the integration variable that removes the boundary
    /// singularity of the radial weight.
    pub fn x(&self) -> f64 {
        self.s * LN_2
    }

    /// `delta = 1 - r = 2^-s`. Exact to one rounding; never computed as
    /// `1 - radius()`.
    pub fn delta(&self) -> f64 {
        (-self.s).exp2()
    }

    /// `r = 1 - 2^-s`. Rounds to 1.0 for `s` beyond ~53; callers that
    /// need the gap must use [`Self::delta`].
    pub fn radius(&self) -> f64 {
        if self.s < 1.0 {
            // 1 - exp(-s ln 2) without cancellation for small s
            -(-self.s * LN_2).exp_m1()
        } else {
            1.0 - self.delta()
        }
    }

    /// `-ln r = -ln(1 - delta)`, positive for `s > 0` and infinite at
    /// the center.
    pub fn neg_ln_radius(&self) -> f64 {
        if self.s == 0.0 {
            return f64::INFINITY;
        }
        if self.s >= 1.0 {
            // ln(1-delta) via ln_1p: delta <= 1/2, no cancellation
            -(-self.delta()).ln_1p()
        } else {
            -self.radius().ln()
        }
    }

    /// `r^(2^e)`, formed as `exp(-2^e * (-ln r))` with the exponent
    /// product assembled in log2 space when `2^e` is not representable.
    /// Relative error <= 1e-12 whenever the result >= 1e-300; exact 0
    /// on underflow.
    pub fn pow(&self, f: FrequencyExponent) -> f64 {
        let m = self.pow_exponent_magnitude(f);
        if m >= EXP_UNDERFLOW {
            0.0
        } else {
            (-m).exp()
        }
    }

    /// `1 - r^(2^e)`, accurate when `r^(2^e)` is close to 1.
    pub fn one_minus_pow(&self, f: FrequencyExponent) -> f64 {
        let m = self.pow_exponent_magnitude(f);
        if m >= EXP_UNDERFLOW {
            1.0
        } else {
            -(-m).exp_m1()
        }
    }

    /// `log2(r^(2^e))`, finite even deep in the underflow range
    /// (`-inf` only at the center).
    pub fn pow_log2(&self, f: FrequencyExponent) -> f64 {
        -self.pow_exponent_magnitude(f) / LN_2
    }

    /// Magnitude of the exponent: `2^e * (-ln r)`, possibly `inf`.
    fn pow_exponent_magnitude(&self, f: FrequencyExponent) -> f64 {
        let l = self.neg_ln_radius();
        if !l.is_finite() {
            return f64::INFINITY;
        }
        let e = f.e();
        if e <= 1023 {
            // 2^e exact; one rounding in the product
            (e as f64).exp2() * l
        } else {
            // assemble log2(2^e * l) = e + log2 l to avoid overflow
            let log2_m = e as f64 + l.log2();
            if log2_m > 10.0 {
                f64::INFINITY
            } else {
                log2_m.exp2()
            }
        }
    }

    /// `r^n` for a plain (not power-of-two) frequency `n >= 1`.
    pub fn pow_plain(&self, n: u64) -> f64 {
        assert!(n >= 1);
        let l = self.neg_ln_radius();
        if !l.is_finite() {
            return 0.0;
        }
        let m = n as f64 * l;
        if m >= EXP_UNDERFLOW {
            0.0
        } else {
            (-m).exp()
        }
    }
}

/// A frequency `N = 2^e`, stored by its exponent so that doubly
/// exponential frequencies never materialize as machine integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FrequencyExponent {
    e: u32,
}

impl FrequencyExponent {
    pub fn new(e: u32) -> Self {
        Self { e }
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    /// `N = 2^e` as a float; `inf` past the representable range.
    pub fn as_f64(&self) -> f64 {
        (self.e as f64).exp2()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn depth_radius_round_trip_on_powers_of_two() {
        for s in [0u32, 1, 2, 5, 17, 40, 52] {
            let d = BoundaryDepth::new(s as f64);
            let back = BoundaryDepth::from_radius(d.radius());
            assert_eq!(back.s(), s as f64);
        }
    }

    #[test]
    fn radius_examples() {
        assert_eq!(BoundaryDepth::new(0.0).radius(), 0.0);
        assert_eq!(BoundaryDepth::new(1.0).radius(), 0.5);
        // at s = 64 the radius rounds to 1 while delta stays exact
        let d = BoundaryDepth::new(64.0);
        assert_eq!(d.radius(), 1.0);
        assert_eq!(d.delta(), 2f64.powi(-64));
    }

    #[test]
    fn pow_first_power_is_radius() {
        for s in [0.0, 0.5, 1.0, 7.25, 30.0] {
            let d = BoundaryDepth::new(s);
            let p = d.pow(FrequencyExponent::new(0));
            assert!((p - d.radius()).abs() <= 1e-15, "s={s}: {p} vs {}", d.radius());
        }
    }

    #[test]
    fn pow_underflow_is_exact_zero() {
        // s = e - 10: exponent magnitude ~ 2^10, far below underflow
        let d = BoundaryDepth::new(22.0);
        assert_eq!(d.pow(FrequencyExponent::new(32)), 0.0);
        let log2 = d.pow_log2(FrequencyExponent::new(32));
        assert!(log2 < -1400.0, "log2 = {log2}");
    }

    #[test]
    fn pow_log2_handles_huge_exponents() {
        let d = BoundaryDepth::new(8.0);
        let lg = d.pow_log2(FrequencyExponent::new(2000));
        assert!(lg.is_infinite() && lg < 0.0);
    }

    #[test]
    fn one_minus_pow_near_one() {
        // r^N with N = 2^4, s = 30: 1 - r^N ~ 16 * 2^-30
        let d = BoundaryDepth::new(30.0);
        let gap = d.one_minus_pow(FrequencyExponent::new(4));
        let expect = 16.0 * 2f64.powi(-30);
        assert!((gap - expect).abs() / expect < 1e-6, "{gap} vs {expect}");
    }
}
