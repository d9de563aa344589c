//! Empirical check that the three characterizations of logarithmic
//! growth for a lacunary series are mutually consistent: one-sided
//! bound, two-sided bound, and the `sum |c| <= gamma3 log N`
//! coefficient condition.

use std::f64::consts::LN_2;

use crate::error::Result;
use crate::numerics::{BoundaryDepth, DyadicAngle};
use crate::series::{AngleArg, Frequency, LacunarySeries};

#[derive(Debug, Clone, Copy)]
pub struct CriterionOptions {
    /// Constants are flagged consistent when the finite ones agree
    /// within this factor.
    pub agreement_factor: f64,
    /// `S(N)/ln N` at the largest threshold may exceed the value at the
    /// median threshold by at most this factor; otherwise the partial
    /// sums are flagged as growing.
    pub trend_threshold: f64,
}

impl Default for CriterionOptions {
    fn default() -> Self {
        Self { agreement_factor: 100.0, trend_threshold: 1.5 }
    }
}

#[derive(Debug, Clone)]
pub struct CriterionReport {
    /// `max u / log(e/(1-r))` over the grid.
    pub gamma1_hat: f64,
    /// `max |u| / log(e/(1-r))` over the grid.
    pub gamma2_hat: f64,
    /// `max S(N)/ln N` over thresholds at the series' own frequencies.
    pub gamma3_hat: f64,
    /// `S(N)/ln N` at the largest threshold relative to the median one.
    pub gamma3_trend: f64,
    pub consistent: bool,
    /// True when the series is identically zero on the grid.
    pub degenerate: bool,
}

/// Measures the empirical constants on a grid of `(depth, angle)`
/// samples. This is a consistency check, not a proof: constants are
/// reported as observed on the grid.
pub fn korenblum_consistency(
    series: &LacunarySeries,
    grid: &[(BoundaryDepth, DyadicAngle)],
    options: CriterionOptions,
) -> Result<CriterionReport> {
    let mut gamma1: f64 = 0.0;
    let mut gamma2: f64 = 0.0;
    for (d, angle) in grid {
        let u = series.eval(*d, AngleArg::Dyadic(angle))?;
        let normalizer = 1.0 + d.s() * LN_2; // log(e/(1-r))
        gamma1 = gamma1.max(u / normalizer);
        gamma2 = gamma2.max(u.abs() / normalizer);
    }

    let thresholds: Vec<Frequency> = series
        .terms()
        .iter()
        .map(|t| t.freq)
        .filter(|f| f.ln() > 0.0)
        .collect();
    let (gamma3, trend) = if thresholds.is_empty() {
        (0.0, 1.0)
    } else {
        let report = series.partial_absolute_sums(&thresholds);
        let last = report.rows.last().unwrap().2;
        let mid = report.rows[report.rows.len() / 2].2;
        let trend = if mid > 0.0 { last / mid } else { 1.0 };
        (report.gamma3_hat, trend)
    };

    let degenerate = gamma2 == 0.0 && gamma3 == 0.0;
    let consistent = if degenerate {
        true
    } else {
        let finite = gamma2.is_finite() && gamma3.is_finite();
        let trend_ok = trend <= options.trend_threshold;
        let f = options.agreement_factor;
        let agree = gamma2 <= f * gamma3.max(f64::MIN_POSITIVE)
            && gamma3 <= f * gamma2.max(f64::MIN_POSITIVE);
        finite && trend_ok && agree
    };

    Ok(CriterionReport {
        gamma1_hat: gamma1,
        gamma2_hat: gamma2,
        gamma3_hat: gamma3,
        gamma3_trend: trend,
        consistent,
        degenerate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{LacunaryTerm, TailPolicy};
    use num_complex::Complex64;

    fn small_grid() -> Vec<(BoundaryDepth, DyadicAngle)> {
        let mut grid = Vec::new();
        for j in 0..=5u32 {
            for i in 0..32u64 {
                grid.push((BoundaryDepth::new((1u64 << j) as f64), DyadicAngle::grid_node(i, 5)));
            }
        }
        grid
    }

    #[test]
    fn zero_series_all_constants_zero() {
        let s = LacunarySeries::new(vec![], 2.0, TailPolicy::Complete).unwrap();
        let r = korenblum_consistency(&s, &small_grid(), CriterionOptions::default()).unwrap();
        assert_eq!(r.gamma1_hat, 0.0);
        assert_eq!(r.gamma2_hat, 0.0);
        assert_eq!(r.gamma3_hat, 0.0);
        assert!(r.degenerate);
    }

    #[test]
    fn one_sided_below_two_sided() {
        let terms = (1..=6)
            .map(|k| LacunaryTerm {
                freq: Frequency::Plain(1 << (2 * k)),
                coeff: Complex64::new(-1.0, 0.0),
            })
            .collect();
        let s = LacunarySeries::new(terms, 2.0, TailPolicy::Complete).unwrap();
        let r = korenblum_consistency(&s, &small_grid(), CriterionOptions::default()).unwrap();
        assert!(r.gamma1_hat <= r.gamma2_hat);
    }
}
