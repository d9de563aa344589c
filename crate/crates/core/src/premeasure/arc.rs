//! Arcs on the unit circle with optional exact dyadic endpoints.

use std::f64::consts::PI;

use num_bigint::BigUint;

use crate::numerics::DyadicAngle;

/// One endpoint of an arc: exact dyadic, or a plain angle in radians.
#[derive(Debug, Clone)]
pub enum ArcEnd {
    Dyadic(DyadicAngle),
    Real(f64),
}

impl ArcEnd {
    /// Position as a fraction of the full turn in `[0, 1)`.
    pub fn fraction(&self) -> f64 {
        match self {
            ArcEnd::Dyadic(a) => a.fraction(),
            ArcEnd::Real(t) => (t / (2.0 * PI)).rem_euclid(1.0),
        }
    }

    pub fn radians(&self) -> f64 {
        self.fraction() * 2.0 * PI
    }

    pub fn as_dyadic(&self) -> Option<&DyadicAngle> {
        match self {
            ArcEnd::Dyadic(a) => Some(a),
            ArcEnd::Real(_) => None,
        }
    }
}

impl From<DyadicAngle> for ArcEnd {
    fn from(a: DyadicAngle) -> Self {
        ArcEnd::Dyadic(a)
    }
}

impl From<f64> for ArcEnd {
    fn from(t: f64) -> Self {
        ArcEnd::Real(t)
    }
}

/// An arc of positive length, in positive orientation from `start` to
/// `end`; length lies in `(0, 2*pi]`.
#[derive(Debug, Clone)]
pub struct CircleArc {
    pub start: ArcEnd,
    pub end: ArcEnd,
    pub closed_start: bool,
    pub closed_end: bool,
    full: bool,
}

impl CircleArc {
    /// Half-open arc `[start, end)`. Coincident endpoints are rejected;
    /// use [`CircleArc::full_circle`] for the whole circle.
    pub fn half_open(start: impl Into<ArcEnd>, end: impl Into<ArcEnd>) -> Self {
        let arc = Self {
            start: start.into(),
            end: end.into(),
            closed_start: true,
            closed_end: false,
            full: false,
        };
        assert!(arc.length_fraction() > 0.0, "degenerate arc; use full_circle() for the whole circle");
        arc
    }

    pub fn with_closure(mut self, closed_start: bool, closed_end: bool) -> Self {
        self.closed_start = closed_start;
        self.closed_end = closed_end;
        self
    }

    pub fn full_circle() -> Self {
        Self {
            start: ArcEnd::Real(0.0),
            end: ArcEnd::Real(0.0),
            closed_start: true,
            closed_end: false,
            full: true,
        }
    }

    /// The `i`-th of the `2^depth` dyadic arcs, `[i, i+1) * 2*pi/2^depth`.
    pub fn dyadic(index: u64, depth: u32) -> Self {
        Self::half_open(
            DyadicAngle::from_u64(index, depth),
            DyadicAngle::from_u64(index + 1, depth),
        )
    }

    /// Dyadic arc between numerators `m0..m1` (positive orientation) at
    /// the given depth; `m1 <= m0` wraps around.
    pub fn dyadic_span(m0: u64, m1: u64, depth: u32) -> Self {
        Self::half_open(DyadicAngle::from_u64(m0, depth), DyadicAngle::from_u64(m1, depth))
    }

    pub fn is_full(&self) -> bool {
        self.full
    }

    /// Length as a fraction of the circle, in `(0, 1]`.
    pub fn length_fraction(&self) -> f64 {
        if self.full {
            return 1.0;
        }
        // exact when both ends are dyadic
        if let (Some(a), Some(b)) = (self.start.as_dyadic(), self.end.as_dyadic()) {
            let q = a.depth().max(b.depth());
            let (ma, mb) = (lift(a, q), lift(b, q));
            let modulus = BigUint::from(1u32) << q;
            let diff = (&mb + &modulus - &ma) % &modulus;
            return big_to_f64_frac(&diff, q);
        }
        let d = (self.end.fraction() - self.start.fraction()).rem_euclid(1.0);
        if d == 0.0 {
            1.0
        } else {
            d
        }
    }

    pub fn length_radians(&self) -> f64 {
        self.length_fraction() * 2.0 * PI
    }

    /// Membership test for a plain angle (radians). Endpoint hits follow
    /// the closure flags.
    pub fn contains(&self, theta: f64) -> bool {
        if self.full {
            return true;
        }
        let start = self.start.radians();
        let len = self.length_radians();
        let off = (theta - start).rem_euclid(2.0 * PI);
        if off == 0.0 {
            return self.closed_start;
        }
        if off < len {
            return true;
        }
        if off == len {
            return self.closed_end;
        }
        false
    }

    /// Exact `(midpoint, halfwidth)` as dyadic angles, when both ends
    /// are dyadic. The halfwidth is returned as an angle so that
    /// `N * halfwidth` reduces exactly.
    pub fn dyadic_mid_halfwidth(&self) -> Option<(DyadicAngle, DyadicAngle)> {
        let (a, b) = (self.start.as_dyadic()?, self.end.as_dyadic()?);
        let q = a.depth().max(b.depth()) + 1;
        let ma = lift(a, q - 1);
        let mb = lift(b, q - 1);
        let modulus = BigUint::from(1u32) << (q - 1);
        let span = if self.full {
            modulus.clone()
        } else {
            let d = (&mb + &modulus - &ma) % &modulus;
            if d == BigUint::from(0u32) {
                modulus.clone()
            } else {
                d
            }
        };
        // mid = start + span/2, halfwidth = span/2, both at depth q
        let ma2 = ma << 1u32; // depth q
        let mid = DyadicAngle::new(&ma2 + &span, q);
        let halfwidth = DyadicAngle::new(span, q);
        Some((mid, halfwidth))
    }
}

fn lift(a: &DyadicAngle, q: u32) -> BigUint {
    a.numerator() << (q - a.depth())
}

fn big_to_f64_frac(m: &BigUint, q: u32) -> f64 {
    // m / 2^q for m <= 2^q
    if m.bits() <= 64 {
        let digits = m.to_u64_digits();
        let v = if digits.is_empty() { 0 } else { digits[0] };
        return v as f64 / (q as f64).exp2();
    }
    let shift = m.bits() - 53;
    let digits = (m >> shift).to_u64_digits();
    digits[0] as f64 * ((shift as f64) - q as f64).exp2()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dyadic_arc_length() {
        let arc = CircleArc::dyadic(3, 4);
        assert_eq!(arc.length_fraction(), 1.0 / 16.0);
    }

    #[test]
    fn wrapping_span() {
        // from 7/8 to 1/8 of a turn: length 1/4
        let arc = CircleArc::dyadic_span(7, 1, 3);
        assert_eq!(arc.length_fraction(), 0.25);
        assert!(arc.contains(0.0));
        assert!(!arc.contains(PI));
    }

    #[test]
    fn closure_flags() {
        let arc = CircleArc::dyadic_span(0, 4, 3).with_closure(false, true);
        assert!(!arc.contains(0.0));
        assert!(arc.contains(PI));
        assert!(arc.contains(PI / 2.0));
    }

    #[test]
    fn mid_halfwidth() {
        let arc = CircleArc::dyadic_span(2, 6, 3);
        let (mid, hw) = arc.dyadic_mid_halfwidth().unwrap();
        assert_eq!(mid.fraction(), 0.5); // midpoint of [1/4, 3/4]
        assert_eq!(hw.fraction(), 0.25);
    }

    #[test]
    fn full_circle_mid_halfwidth() {
        let arc = CircleArc::full_circle();
        assert_eq!(arc.length_fraction(), 1.0);
    }
}
