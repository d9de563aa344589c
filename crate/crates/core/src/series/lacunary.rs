//! General lacunary series `Re sum_k c_k z^(n_k)` with gap validation
//! and certified truncation.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numerics::{reduce, BoundaryDepth, DyadicAngle};
use crate::series::super_lacunary::TAIL_TOL;
use crate::series::{Frequency, RadialSection};

#[derive(Debug, Clone)]
pub struct LacunaryTerm {
    pub freq: Frequency,
    pub coeff: Complex64,
}

/// How to certify the tail beyond the stored terms.
#[derive(Debug, Clone, Copy)]
pub enum TailPolicy {
    /// The stored terms are the whole series.
    Complete,
    /// Coefficients of the (virtual) remaining terms obey
    /// `|c_n| <= gamma3 * ln n`, and frequencies keep the gap ratio.
    LogGrowth { gamma3: f64 },
}

#[derive(Debug, Clone)]
pub struct LacunarySeries {
    terms: Vec<LacunaryTerm>,
    gap_ratio: f64,
    tail: TailPolicy,
}

/// Angle argument: exact dyadic, or a plain real limited to
/// frequencies below 2^40.
#[derive(Debug, Clone, Copy)]
pub enum AngleArg<'a> {
    Dyadic(&'a DyadicAngle),
    Real(f64),
}

impl LacunarySeries {
    /// Validates strictly increasing frequencies with
    /// `n_(k+1)/n_k >= lambda > 1`.
    pub fn new(terms: Vec<LacunaryTerm>, gap_ratio: f64, tail: TailPolicy) -> Result<Self> {
        if gap_ratio <= 1.0 {
            return Err(Error::InvalidSeries(format!("gap ratio must exceed 1, got {gap_ratio}")));
        }
        for w in terms.windows(2) {
            let (a, b) = (&w[0].freq, &w[1].freq);
            if b <= a {
                return Err(Error::InvalidSeries(
                    "frequencies must be strictly increasing".into(),
                ));
            }
            // compare in log2 to survive doubly exponential frequencies
            if b.log2() - a.log2() < gap_ratio.log2() - 1e-12 {
                return Err(Error::InvalidSeries(format!(
                    "gap ratio violated between frequencies 2^{:.3} and 2^{:.3}",
                    a.log2(),
                    b.log2()
                )));
            }
        }
        Ok(Self { terms, gap_ratio, tail })
    }

    pub fn terms(&self) -> &[LacunaryTerm] {
        &self.terms
    }

    pub fn gap_ratio(&self) -> f64 {
        self.gap_ratio
    }

    /// Value at `z = r e^{i phi}` with certified truncation.
    pub fn eval(&self, d: BoundaryDepth, angle: AngleArg) -> Result<f64> {
        self.certify_tail(d)?;
        let mut sum = 0.0;
        for t in &self.terms {
            let rho = match t.freq {
                Frequency::Plain(n) => d.pow_plain(n),
                Frequency::Pow2(e) => d.pow(crate::numerics::FrequencyExponent::new(e)),
            };
            if rho == 0.0 {
                continue;
            }
            let psi = match angle {
                AngleArg::Dyadic(a) => match t.freq {
                    Frequency::Plain(n) => a.mul_u64(n).radians(),
                    Frequency::Pow2(e) => a.mul_pow2(e).radians(),
                },
                AngleArg::Real(phi) => {
                    if t.freq.log2() > reduce::PLAIN_FREQ_LIMIT_LOG2 {
                        return Err(Error::FrequencyTooLargeForRealAngle {
                            log2_freq: t.freq.log2(),
                        });
                    }
                    let n = match t.freq {
                        Frequency::Plain(n) => n,
                        Frequency::Pow2(e) => 1u64 << e,
                    };
                    reduce::reduce_mul_mod_2pi(n, phi)
                }
            };
            sum += rho * (t.coeff.re * psi.cos() - t.coeff.im * psi.sin());
        }
        Ok(sum)
    }

    /// Partial sums of absolute coefficients: `S(N) = sum_{n_k <= N} |c_k|`,
    /// reported together with `S(N)/ln N`, and the maximum of that ratio.
    pub fn partial_absolute_sums(&self, thresholds: &[Frequency]) -> PartialSumReport {
        let mut rows = Vec::with_capacity(thresholds.len());
        let mut gamma3_hat = 0.0f64;
        for n in thresholds {
            let ln_n = n.ln();
            assert!(ln_n > 0.0, "thresholds must be >= 2");
            let sum: f64 = self
                .terms
                .iter()
                .filter(|t| t.freq <= *n)
                .map(|t| t.coeff.norm())
                .sum();
            let ratio = sum / ln_n;
            gamma3_hat = gamma3_hat.max(ratio);
            rows.push((ln_n, sum, ratio));
        }
        PartialSumReport { rows, gamma3_hat }
    }

    fn certify_tail(&self, d: BoundaryDepth) -> Result<()> {
        match self.tail {
            TailPolicy::Complete => Ok(()),
            TailPolicy::LogGrowth { gamma3 } => {
                let Some(last) = self.terms.last() else { return Ok(()) };
                let l = d.neg_ln_radius();
                if !l.is_finite() {
                    return Ok(()); // center: every power vanishes
                }
                // virtual frequencies n_last * lambda^j, coefficients
                // gamma3 * ln(n); terms decay once n * (-ln r) grows
                let mut bound = 0.0f64;
                let mut ln_n = last.freq.ln();
                let ln_lambda = self.gap_ratio.ln();
                for _ in 0..512 {
                    ln_n += ln_lambda;
                    // term bound: gamma3 * ln n * exp(-n L)
                    let exponent = -(ln_n.exp()) * l;
                    let term = if exponent < -745.0 { 0.0 } else { gamma3 * ln_n * exponent.exp() };
                    bound += term;
                    // once a term drops below 1e-18 the rest is a
                    // geometric remainder far beneath the tolerance
                    if term < 1e-18 {
                        break;
                    }
                }
                if bound <= TAIL_TOL {
                    Ok(())
                } else {
                    Err(Error::TailNotCertified {
                        max_index: self.terms.len() as u32,
                        bound,
                        tol: TAIL_TOL,
                    })
                }
            }
        }
    }

    /// Fixed-angle section (dyadic angles only).
    pub fn section(&self, angle: &DyadicAngle) -> LacunarySection {
        let data = self
            .terms
            .iter()
            .map(|t| {
                let psi = match t.freq {
                    Frequency::Plain(n) => angle.mul_u64(n).radians(),
                    Frequency::Pow2(e) => angle.mul_pow2(e).radians(),
                };
                (t.freq, t.coeff.re * psi.cos() - t.coeff.im * psi.sin())
            })
            .collect();
        LacunarySection { series: self.clone(), data }
    }
}

#[derive(Debug, Clone)]
pub struct PartialSumReport {
    /// `(ln N, S(N), S(N)/ln N)` per requested threshold.
    pub rows: Vec<(f64, f64, f64)>,
    pub gamma3_hat: f64,
}

#[derive(Debug, Clone)]
pub struct LacunarySection {
    series: LacunarySeries,
    data: Vec<(Frequency, f64)>,
}

impl RadialSection for LacunarySection {
    fn eval(&self, d: BoundaryDepth) -> Result<f64> {
        self.series.certify_tail(d)?;
        let mut sum = 0.0;
        for (freq, projected) in &self.data {
            let rho = match freq {
                Frequency::Plain(n) => d.pow_plain(*n),
                Frequency::Pow2(e) => d.pow(crate::numerics::FrequencyExponent::new(*e)),
            };
            sum += rho * projected;
        }
        Ok(sum)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn term(freq: Frequency, re: f64) -> LacunaryTerm {
        LacunaryTerm { freq, coeff: Complex64::new(re, 0.0) }
    }

    #[test]
    fn empty_series_is_zero() {
        let s = LacunarySeries::new(vec![], 2.0, TailPolicy::Complete).unwrap();
        let v = s.eval(BoundaryDepth::new(3.0), AngleArg::Real(0.7)).unwrap();
        assert_eq!(v, 0.0);
    }

    #[test]
    fn single_term_real_part() {
        // n=1, c=1, r=1/2, phi=0 -> 0.5
        let s = LacunarySeries::new(vec![term(Frequency::Plain(1), 1.0)], 2.0, TailPolicy::Complete)
            .unwrap();
        let v = s.eval(BoundaryDepth::new(1.0), AngleArg::Real(0.0)).unwrap();
        assert!((v - 0.5).abs() < 1e-15);
    }

    #[test]
    fn gap_violation_rejected() {
        let bad = LacunarySeries::new(
            vec![term(Frequency::Plain(8), 1.0), term(Frequency::Plain(11), 1.0)],
            1.5,
            TailPolicy::Complete,
        );
        assert!(bad.is_err());
    }

    #[test]
    fn decreasing_frequencies_rejected() {
        let bad = LacunarySeries::new(
            vec![term(Frequency::Pow2(8), 1.0), term(Frequency::Plain(12), 1.0)],
            2.0,
            TailPolicy::Complete,
        );
        assert!(bad.is_err());
    }

    #[test]
    fn real_angle_frequency_limit() {
        let s = LacunarySeries::new(vec![term(Frequency::Pow2(50), 1.0)], 2.0, TailPolicy::Complete)
            .unwrap();
        let err = s.eval(BoundaryDepth::new(1.0), AngleArg::Real(0.3));
        assert!(matches!(err, Err(Error::FrequencyTooLargeForRealAngle { .. })));
        // the same series evaluates fine on a dyadic angle
        let a = DyadicAngle::from_u64(3, 7);
        assert!(s.eval(BoundaryDepth::new(1.0), AngleArg::Dyadic(&a)).is_ok());
    }

    #[test]
    fn complex_coefficient_projection() {
        // c = i at n = 4: Re(i rho e^{4 i phi}) = -rho sin(4 phi)
        let s = LacunarySeries::new(
            vec![LacunaryTerm { freq: Frequency::Plain(4), coeff: Complex64::new(0.0, 1.0) }],
            2.0,
            TailPolicy::Complete,
        )
        .unwrap();
        let d = BoundaryDepth::new(1.0);
        let phi = 0.4;
        let v = s.eval(d, AngleArg::Real(phi)).unwrap();
        let expect = -d.radius().powi(4) * (4.0 * phi).sin();
        assert!((v - expect).abs() < 1e-14);
    }
}
