//! The model series `Re sum_n A^n z^(2^(A^n))`: coefficients `A^n` at
//! frequencies `2^(A^n)`, the extremal example of logarithmic growth
//! with doubly exponential gaps.

use std::f64::consts::LN_2;

use crate::error::{Error, Result};
use crate::numerics::{BoundaryDepth, DyadicAngle, FrequencyExponent};
use crate::series::{Frequency, LacunarySeries, LacunaryTerm, RadialSection, TailPolicy};

/// Absolute bound accepted for a discarded series tail.
pub(crate) const TAIL_TOL: f64 = 1e-12;

#[derive(Debug, Clone)]
pub struct SuperLacunarySeries {
    base: u32,
    max_index: u32,
}

impl SuperLacunarySeries {
    /// `base >= 2`; terms run over `n = 1..=max_index`.
    pub fn new(base: u32, max_index: u32) -> Result<Self> {
        if base < 2 {
            return Err(Error::InvalidSeries(format!("base must be >= 2, got {base}")));
        }
        // frequency exponents A^n must fit in u32
        let mut e = 1u64;
        for _ in 0..max_index {
            e = e.saturating_mul(base as u64);
        }
        if e > u32::MAX as u64 {
            return Err(Error::InvalidSeries(format!(
                "base^max_index = {base}^{max_index} exceeds the supported exponent range"
            )));
        }
        Ok(Self { base, max_index })
    }

    /// The sharpness example: base 2.
    pub fn standard() -> Self {
        Self::new(2, 14).unwrap()
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    pub fn max_index(&self) -> u32 {
        self.max_index
    }

    /// Frequency exponent of term `n`: `e_n = A^n`.
    pub fn term_exponent(&self, n: u32) -> u32 {
        (self.base as u64).pow(n).try_into().expect("checked at construction")
    }

    /// Coefficient of term `n`: `A^n`.
    pub fn coefficient(&self, n: u32) -> f64 {
        (self.base as f64).powi(n as i32)
    }

    /// Per-angle radial section with the cosines reduced exactly once.
    pub fn section(&self, angle: &DyadicAngle) -> SuperLacunarySection {
        let terms = (1..=self.max_index)
            .map(|n| {
                let e = self.term_exponent(n);
                let cos = angle.mul_pow2(e).cos();
                TermData { coeff: self.coefficient(n), exponent: FrequencyExponent::new(e), cos }
            })
            .collect();
        SuperLacunarySection {
            base: self.base,
            max_index: self.max_index,
            terms,
        }
    }

    /// Value at `z = r e^{i phi}` with certified truncation.
    pub fn eval(&self, d: BoundaryDepth, angle: &DyadicAngle) -> Result<f64> {
        self.section(angle).eval(d)
    }

    /// The same series expressed as a finite list of lacunary terms.
    pub fn to_lacunary(&self) -> LacunarySeries {
        let terms = (1..=self.max_index)
            .map(|n| LacunaryTerm {
                freq: Frequency::Pow2(self.term_exponent(n)),
                coeff: num_complex::Complex64::new(self.coefficient(n), 0.0),
            })
            .collect();
        LacunarySeries::new(terms, 2.0, TailPolicy::LogGrowth { gamma3: 3.0 })
            .expect("gaps are doubly exponential")
    }
}

#[derive(Debug, Clone, Copy)]
struct TermData {
    coeff: f64,
    exponent: FrequencyExponent,
    cos: f64,
}

/// Fixed-angle section of a [`SuperLacunarySeries`].
#[derive(Debug, Clone)]
pub struct SuperLacunarySection {
    base: u32,
    max_index: u32,
    terms: Vec<TermData>,
}

impl SuperLacunarySection {
    fn certify_tail(&self, d: BoundaryDepth) -> Result<()> {
        // first discarded term, with |cos| <= 1:
        //   t = A^(m+1) * r^(2^(A^(m+1)))
        // successive ratios are <= A * r^(2^(A^(m+1))) which we require
        // to be at most 1/2, so the tail is at most 2 t.
        let m = self.max_index;
        let log2_a = (self.base as f64).log2();
        let e_next = (self.base as u64).saturating_pow(m + 1);
        let pow_log2 = if e_next > u32::MAX as u64 {
            f64::NEG_INFINITY
        } else {
            d.pow_log2(FrequencyExponent::new(e_next as u32))
        };
        let log2_t = (m + 1) as f64 * log2_a + pow_log2;
        let log2_ratio = log2_a + pow_log2;
        let ok = log2_t <= (0.5 * TAIL_TOL).log2() && log2_ratio <= -1.0;
        if ok {
            Ok(())
        } else {
            Err(Error::TailNotCertified {
                max_index: m,
                bound: (log2_t + 1.0).exp2().min(f64::MAX),
                tol: TAIL_TOL,
            })
        }
    }
}

impl RadialSection for SuperLacunarySection {
    fn eval(&self, d: BoundaryDepth) -> Result<f64> {
        self.certify_tail(d)?;
        let mut sum = 0.0;
        for t in &self.terms {
            let p = d.pow(t.exponent);
            if p == 0.0 {
                continue;
            }
            sum += t.coeff * p * t.cos;
        }
        Ok(sum)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vanishes_at_center() {
        let u = SuperLacunarySeries::standard();
        let phi = DyadicAngle::from_u64(37, 9);
        assert_eq!(u.eval(BoundaryDepth::new(0.0), &phi).unwrap(), 0.0);
    }

    #[test]
    fn positive_on_positive_radius() {
        // phi = 0: every cosine is 1
        let u = SuperLacunarySeries::standard();
        let v = u.eval(BoundaryDepth::new(4.0), &DyadicAngle::zero()).unwrap();
        assert!(v > 0.0);
    }

    #[test]
    fn doubling_max_index_changes_nothing() {
        let u8 = SuperLacunarySeries::new(2, 8).unwrap();
        let u16 = SuperLacunarySeries::new(2, 16).unwrap();
        let phi = DyadicAngle::from_u64(1234, 12);
        for s in [1.0, 4.0, 16.0, 60.0] {
            let d = BoundaryDepth::new(s);
            let a = u8.eval(d, &phi).unwrap();
            let b = u16.eval(d, &phi).unwrap();
            assert!((a - b).abs() <= 1e-11, "s={s}: {a} vs {b}");
        }
    }

    #[test]
    fn tail_not_certified_when_radius_outruns_index() {
        // at s = 2^6 the active terms reach n ~ 7; max_index 3 is too short
        let u = SuperLacunarySeries::new(2, 3).unwrap();
        let err = u.eval(BoundaryDepth::new(64.0), &DyadicAngle::zero());
        assert!(matches!(err, Err(Error::TailNotCertified { .. })));
    }
}
