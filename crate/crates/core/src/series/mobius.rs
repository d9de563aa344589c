//! The slow-growth example: `Re sum_{n >= start} 2^n w_n / (w_n - 1)`
//! with `w_n = z^(2^(2^n))`. Each term pushes the value toward the
//! half-plane `Re < 1/2`, producing deep narrow troughs that keep the
//! circle averages at zero without radial oscillation.

use crate::error::{Error, Result};
use crate::numerics::{BoundaryDepth, DyadicAngle, FrequencyExponent};
use crate::series::super_lacunary::TAIL_TOL;
use crate::series::RadialSection;

/// Report rather than clamp when `w_n` comes this close to the pole at 1.
pub const POLE_GUARD: f64 = 1e-13;

#[derive(Debug, Clone)]
pub struct MobiusSeries {
    start: u32,
    n_max: u32,
}

impl MobiusSeries {
    /// Terms run over `n = start..=n_max`. The summation start is kept
    /// as a parameter; 2 is the default.
    pub fn new(start: u32, n_max: u32) -> Result<Self> {
        if start < 1 || n_max < start {
            return Err(Error::InvalidSeries(format!(
                "need 1 <= start <= n_max, got start={start}, n_max={n_max}"
            )));
        }
        if n_max > 24 {
            return Err(Error::InvalidSeries(format!(
                "n_max {n_max} exceeds the supported exponent range (2^n <= 2^24)"
            )));
        }
        Ok(Self { start, n_max })
    }

    pub fn standard() -> Self {
        Self::new(2, 14).unwrap()
    }

    pub fn start(&self) -> u32 {
        self.start
    }

    pub fn n_max(&self) -> u32 {
        self.n_max
    }

    /// Frequency exponent of term `n`: the frequency is `2^(2^n)`.
    pub fn term_exponent(n: u32) -> FrequencyExponent {
        FrequencyExponent::new(1u32 << n)
    }

    pub fn section(&self, angle: &DyadicAngle) -> MobiusSection {
        let terms = (self.start..=self.n_max)
            .map(|n| {
                let e = Self::term_exponent(n);
                let theta = angle.mul_pow2(e.e()).radians();
                MobiusTermData {
                    n,
                    coeff: (n as f64).exp2(),
                    exponent: e,
                    sin_theta: theta.sin(),
                    two_sin2_half: 2.0 * (0.5 * theta).sin().powi(2),
                }
            })
            .collect();
        MobiusSection { n_max: self.n_max, terms }
    }

    /// Value at `z = r e^{i phi}` with certified truncation.
    pub fn eval(&self, d: BoundaryDepth, angle: &DyadicAngle) -> Result<f64> {
        self.section(angle).eval(d)
    }

    /// Per-term value `2^n Re Phi(w_n)` at a fixed point.
    pub fn term_value(&self, n: u32, d: BoundaryDepth, angle: &DyadicAngle) -> Result<f64> {
        let e = Self::term_exponent(n);
        let theta = angle.mul_pow2(e.e()).radians();
        let rho = d.pow(e);
        let one_minus_rho = d.one_minus_pow(e);
        let re_phi = re_phi(rho, one_minus_rho, theta, n)?;
        Ok((n as f64).exp2() * re_phi)
    }

    /// `log2` of the ratio `|2^(k+1) a_(k+1)(z)| / |2^k a_k(z)|`,
    /// maximized over a dyadic angle sample on the circle of depth `d`.
    /// Callers pick `d` inside the annulus `2^n <= s <= 2^(n+1)` with
    /// `k > n + 1`; the ratio then decays doubly exponentially in `k`.
    pub fn term_ratio_log2(&self, n: u32, k: u32, d: BoundaryDepth, grid_q: u32) -> f64 {
        assert!(k > n + 1, "need k > n + 1");
        debug_assert!(
            d.s() >= (1u64 << n) as f64 && d.s() <= (1u64 << (n + 1)) as f64,
            "depth outside the annulus for n = {n}"
        );
        let mut best = f64::NEG_INFINITY;
        for i in 0..(1u64 << grid_q) {
            let angle = DyadicAngle::grid_node(i, grid_q);
            let r = term_abs_log2(k + 1, d, &angle) + 1.0 - term_abs_log2(k, d, &angle);
            if r > best {
                best = r;
            }
        }
        best
    }
}

/// `log2 |a_k(z)| = log2 rho_k - log2 |w_k - 1|`, finite deep into the
/// underflow range of `rho_k`.
fn term_abs_log2(k: u32, d: BoundaryDepth, angle: &DyadicAngle) -> f64 {
    let e = MobiusSeries::term_exponent(k);
    let theta = angle.mul_pow2(e.e()).radians();
    let rho = d.pow(e);
    let one_minus_rho = d.one_minus_pow(e);
    let rho_minus_c = 2.0 * (0.5 * theta).sin().powi(2) - one_minus_rho;
    let dist2 = rho_minus_c * rho_minus_c + theta.sin().powi(2);
    d.pow_log2(e) - 0.5 * dist2.log2()
}

#[derive(Debug, Clone, Copy)]
struct MobiusTermData {
    n: u32,
    coeff: f64,
    exponent: FrequencyExponent,
    sin_theta: f64,
    two_sin2_half: f64,
}

/// Fixed-angle section of a [`MobiusSeries`].
#[derive(Debug, Clone)]
pub struct MobiusSection {
    n_max: u32,
    terms: Vec<MobiusTermData>,
}

impl MobiusSection {
    fn certify_tail(&self, d: BoundaryDepth) -> Result<()> {
        // |2^n Phi(w_n)| <= 2^(n+1) rho_n once rho_n <= 1/2, and the
        // term ratio is then below 1/2, so the tail past n_max is at
        // most twice the first discarded bound.
        let e_next = 1u64 << (self.n_max + 1);
        let lg_rho = if e_next > u32::MAX as u64 {
            f64::NEG_INFINITY
        } else {
            d.pow_log2(FrequencyExponent::new(e_next as u32))
        };
        let ok = lg_rho <= -1.0 && (self.n_max as f64 + 3.0) + lg_rho <= (0.5 * TAIL_TOL).log2();
        if ok {
            Ok(())
        } else {
            Err(Error::TailNotCertified {
                max_index: self.n_max,
                bound: ((self.n_max as f64 + 3.0) + lg_rho).exp2().min(f64::MAX),
                tol: TAIL_TOL,
            })
        }
    }
}

impl RadialSection for MobiusSection {
    fn eval(&self, d: BoundaryDepth) -> Result<f64> {
        self.certify_tail(d)?;
        let mut sum = 0.0;
        for t in &self.terms {
            let rho = d.pow(t.exponent);
            if rho < 1e-300 {
                continue;
            }
            let one_minus_rho = d.one_minus_pow(t.exponent);
            let rho_minus_c = t.two_sin2_half - one_minus_rho;
            let dist2 = rho_minus_c * rho_minus_c + t.sin_theta * t.sin_theta;
            if dist2 < POLE_GUARD * POLE_GUARD {
                return Err(Error::PoleProximity { n: t.n, dist: dist2.sqrt() });
            }
            sum += t.coeff * rho * rho_minus_c / dist2;
        }
        Ok(sum)
    }
}

/// `Re(w/(w-1))` for `w = rho e^{i theta}`, written as
/// `rho (rho - cos theta) / ((rho - cos theta)^2 + sin^2 theta)` with
/// `rho - cos theta = 2 sin^2(theta/2) - (1 - rho)` so that nothing
/// cancels when `w` is close to 1.
fn re_phi(rho: f64, one_minus_rho: f64, theta: f64, n: u32) -> Result<f64> {
    if rho < 1e-300 {
        return Ok(0.0);
    }
    let rho_minus_c = 2.0 * (0.5 * theta).sin().powi(2) - one_minus_rho;
    let dist2 = rho_minus_c * rho_minus_c + theta.sin().powi(2);
    if dist2 < POLE_GUARD * POLE_GUARD {
        return Err(Error::PoleProximity { n, dist: dist2.sqrt() });
    }
    Ok(rho * rho_minus_c / dist2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_at_center() {
        let u = MobiusSeries::standard();
        assert_eq!(u.eval(BoundaryDepth::new(0.0), &DyadicAngle::zero()).unwrap(), 0.0);
    }

    #[test]
    fn negative_along_positive_radius() {
        // phi = 0: w_n in (0,1), each term 2^n w/(w-1) < 0
        let u = MobiusSeries::standard();
        for s in [1.0, 3.0, 9.5, 33.0] {
            let v = u.eval(BoundaryDepth::new(s), &DyadicAngle::zero()).unwrap();
            assert!(v < 0.0, "s={s}: {v}");
        }
    }

    #[test]
    fn term_ratio_decreases_in_k() {
        let u = MobiusSeries::standard();
        let d = BoundaryDepth::new(5.0); // inside the n=2 annulus
        let r4 = u.term_ratio_log2(2, 4, d, 5);
        let r5 = u.term_ratio_log2(2, 5, d, 5);
        let r6 = u.term_ratio_log2(2, 6, d, 5);
        assert!(r4 > r5 && r5 > r6, "{r4}, {r5}, {r6}");
    }

    #[test]
    fn pole_reported_not_clamped() {
        // s = 60 at n = 2: w_2 = r^16 is within 1e-16 of 1 on the
        // positive radius
        let u = MobiusSeries::new(2, 8).unwrap();
        let err = u.eval(BoundaryDepth::new(60.0), &DyadicAngle::zero());
        assert!(matches!(err, Err(Error::PoleProximity { n: 2, .. })), "{err:?}");
    }
}
