//! Premeasures: finitely additive signed arc functions on the circle
//! with zero total mass and continuity on shrinking chains. They are
//! evaluated, never stored as sigma-additive measures; the three
//! backing representations are a finite signed atom list, a density
//! integrated by quadrature, and a trigonometric-polynomial density
//! (exact for dyadic arcs, which is what the harmonic-trace
//! construction of a lacunary series produces).

mod arc;
mod moments;

pub use arc::{ArcEnd, CircleArc};

use std::f64::consts::PI;
use std::sync::Arc as StdArc;

use crate::error::{Error, Result};
use crate::numerics::poisson::{poisson_kernel, poisson_kernel_dpsi};
use crate::numerics::{BoundaryDepth, DyadicAngle};
use crate::quad;
use crate::series::{Frequency, SuperLacunarySeries};

/// One term of a trigonometric density: `coeff * cos(N theta)` against
/// `d theta / 2 pi`.
#[derive(Debug, Clone, Copy)]
pub struct TrigTerm {
    pub freq: Frequency,
    pub coeff: f64,
}

type DensityFn = StdArc<dyn Fn(f64) -> f64 + Send + Sync>;

/// A premeasure, i.e. an evaluator `mu(I)` for arcs.
#[derive(Clone)]
pub enum Premeasure {
    /// Finite signed atom list with zero net mass.
    Atoms { atoms: Vec<(f64, f64)> },
    /// Density `f(theta)` against `d theta / 2 pi`, integrated by
    /// quadrature; the stored mean is subtracted so the total mass is
    /// zero. `cells` hints at the number of uniform panels needed to
    /// resolve the density's top frequency.
    Density { f: DensityFn, mean: f64, cells: u64 },
    /// `d mu = (sum_n c_n cos(N_n theta)) d theta / 2 pi`; arc values
    /// are term-wise exact for dyadic arcs.
    TrigPoly { terms: Vec<TrigTerm> },
}

impl std::fmt::Debug for Premeasure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Premeasure::Atoms { atoms } => write!(f, "Premeasure::Atoms({} atoms)", atoms.len()),
            Premeasure::Density { cells, .. } => write!(f, "Premeasure::Density(cells={cells})"),
            Premeasure::TrigPoly { terms } => write!(f, "Premeasure::TrigPoly({} terms)", terms.len()),
        }
    }
}

impl Premeasure {
    /// Signed atoms at the given angles (radians); the net mass must
    /// vanish for this to be a premeasure.
    pub fn from_atoms(atoms: Vec<(f64, f64)>) -> Result<Self> {
        let net: f64 = atoms.iter().map(|(_, m)| m).sum();
        let scale: f64 = atoms.iter().map(|(_, m)| m.abs()).sum();
        if net.abs() > 1e-12 * scale.max(1.0) {
            return Err(Error::InvalidPremeasure(format!(
                "atom masses must sum to zero, got {net:.3e}"
            )));
        }
        let atoms = atoms
            .into_iter()
            .map(|(t, m)| (t.rem_euclid(2.0 * PI), m))
            .collect();
        Ok(Premeasure::Atoms { atoms })
    }

    /// Density `f` against `d theta / 2 pi`. The circle mean of `f` is
    /// computed once and subtracted, so `mu(T) = 0` by construction.
    /// `cells` panels per circle must resolve the top frequency of `f`.
    pub fn from_density(f: impl Fn(f64) -> f64 + Send + Sync + 'static, cells: u64) -> Result<Self> {
        let f: DensityFn = StdArc::new(f);
        let mut g = |t: f64| -> Result<f64> { Ok(f(t)) };
        let mut mean = 0.0;
        let n = cells.max(8);
        for i in 0..n {
            let a = 2.0 * PI * i as f64 / n as f64;
            let b = 2.0 * PI * (i + 1) as f64 / n as f64;
            mean += quad::gauss16(&mut g, a, b)?;
        }
        mean /= 2.0 * PI;
        Ok(Premeasure::Density { f, mean, cells: n })
    }

    /// The boundary trace of `u` at the circle of depth `s = 2^level`,
    /// averaged over arcs: `mu(I) = (1/2pi) int_I u(r e^{i theta}) d theta`,
    /// recentered so the total mass vanishes.
    pub fn from_harmonic_trace(
        u: impl Fn(f64) -> f64 + Send + Sync + 'static,
        level: u32,
    ) -> Result<Self> {
        // one cell per super-dyadic interval: the top active frequency
        // of a trace at depth 2^level has ~one period per cell, and the
        // Gauss rule inside each cell resolves it
        let cells = 1u64 << (1u32 << level).min(20);
        Self::from_density(u, cells * 4)
    }

    /// Exact trace premeasure of a super-lacunary series at depth
    /// `s = 2^level`: the density is the finite cosine sum with
    /// coefficients `A^n r^(2^(A^n))`.
    pub fn from_super_lacunary_trace(series: &SuperLacunarySeries, level: u32) -> Self {
        let d = BoundaryDepth::new((1u64 << level) as f64);
        let terms = (1..=series.max_index())
            .map(|n| {
                let e = series.term_exponent(n);
                TrigTerm {
                    freq: Frequency::Pow2(e),
                    coeff: series.coefficient(n)
                        * d.pow(crate::numerics::FrequencyExponent::new(e)),
                }
            })
            .filter(|t| t.coeff != 0.0)
            .collect();
        Premeasure::TrigPoly { terms }
    }

    /// The boundary premeasure of a super-lacunary series itself:
    /// `mu(I) = sum_n A^n (sin(N_n b) - sin(N_n a)) / (2 pi N_n)`,
    /// an absolutely convergent sum thanks to the 1/N_n factors.
    pub fn from_super_lacunary_boundary(series: &SuperLacunarySeries) -> Self {
        let terms = (1..=series.max_index())
            .map(|n| TrigTerm {
                freq: Frequency::Pow2(series.term_exponent(n)),
                coeff: series.coefficient(n),
            })
            .collect();
        Premeasure::TrigPoly { terms }
    }

    pub fn zero() -> Self {
        Premeasure::TrigPoly { terms: vec![] }
    }

    /// `mu(I)`.
    pub fn mu(&self, arc: &CircleArc) -> Result<f64> {
        if arc.is_full() {
            return Ok(0.0);
        }
        match self {
            Premeasure::Atoms { atoms } => Ok(atoms
                .iter()
                .filter(|(t, _)| arc.contains(*t))
                .map(|(_, m)| m)
                .sum()),
            Premeasure::Density { f, mean, cells } => {
                let a = arc.start.radians();
                let len = arc.length_radians();
                let f = f.clone();
                let mean = *mean;
                let mut g = |t: f64| -> Result<f64> { Ok(f(t) - mean) };
                // panels aligned with the density's resolution hint
                let panel = 2.0 * PI / *cells as f64;
                let n_panels = ((len / panel).ceil() as usize).clamp(1, 1 << 22);
                let mut value = 0.0;
                for i in 0..n_panels {
                    let x0 = a + len * i as f64 / n_panels as f64;
                    let x1 = a + len * (i + 1) as f64 / n_panels as f64;
                    value += quad::gauss16(&mut g, x0, x1)?;
                }
                Ok(value / (2.0 * PI))
            }
            Premeasure::TrigPoly { terms } => Ok(moments::trig_poly_mass(terms, arc)),
        }
    }

    /// Distribution function `omega_phi(theta) = mu([phi, theta))`,
    /// positive orientation; zero when `theta == phi`.
    pub fn distribution(&self, phi: &DyadicAngle, theta: &DyadicAngle) -> Result<f64> {
        if phi == theta {
            return Ok(0.0);
        }
        self.mu(&CircleArc::half_open(phi.clone(), theta.clone()))
    }

    /// Centered moments `int_seg (theta - c)^q d mu(theta)` for
    /// `q = 0..=q_max`, with `c` the segment midpoint.
    pub fn centered_moments(&self, seg: &CircleArc, q_max: usize) -> Result<Vec<f64>> {
        moments::centered_moments(self, seg, q_max)
    }

    /// Exhaustive dyadic sweep of the kappa ratios
    /// `mu(I) / (|I| log(e/|I|))` over all dyadic arcs of length
    /// `>= 2^-depth_max` (normalized measure).
    pub fn kappa_bounds(&self, depth_max: u32) -> Result<KappaBoundReport> {
        assert!(depth_max <= 20, "sweep is 2^depth arcs per level");
        // prefix sums over the finest level make every coarser arc a
        // difference of two entries
        let n = 1u64 << depth_max;
        let mut prefix = Vec::with_capacity(n as usize + 1);
        prefix.push(0.0f64);
        let mut acc = 0.0;
        for i in 0..n {
            acc += self.mu(&CircleArc::dyadic(i, depth_max))?;
            prefix.push(acc);
        }
        let mut report = KappaBoundReport {
            kappa_upper: f64::NEG_INFINITY,
            kappa_abs: 0.0,
            witness_upper: (0, 0),
            witness_abs: (0, 0),
            depth_max,
        };
        for depth in 1..=depth_max {
            let count = 1u64 << depth;
            let stride = (n / count) as usize;
            let norm_len = (-(depth as f64)).exp2();
            let weight = norm_len * (std::f64::consts::E / norm_len).ln();
            for k in 0..count as usize {
                let m = prefix[(k + 1) * stride] - prefix[k * stride];
                let up = m / weight;
                if up > report.kappa_upper {
                    report.kappa_upper = up;
                    report.witness_upper = (depth, k as u64);
                }
                let ab = m.abs() / weight;
                if ab > report.kappa_abs {
                    report.kappa_abs = ab;
                    report.witness_abs = (depth, k as u64);
                }
            }
        }
        Ok(report)
    }

    /// Harmonic extension via the derivative-kernel form of the Poisson
    /// integral of a premeasure:
    /// `u(r e^{i phi}) = int P'(phi - theta) omega_0(theta) d theta`
    /// with `omega_0(theta) = mu([0, theta))`.
    pub fn poisson_integral(&self, d: BoundaryDepth, phi: &DyadicAngle) -> Result<f64> {
        let phi_r = phi.radians();
        let zero = DyadicAngle::zero();
        let omega = |theta: f64| -> Result<f64> {
            let t = theta.rem_euclid(2.0 * PI);
            if t == 0.0 {
                return Ok(0.0);
            }
            self.mu(&CircleArc::half_open(zero.clone(), t))
        };
        let mut integrand = |theta: f64| -> Result<f64> {
            Ok(poisson_kernel_dpsi(d, phi_r - theta) * omega(theta)?)
        };
        // node concentration in windows phi +- 2^-j, j = 0..s+6
        let levels = (d.s().ceil() as u32).saturating_add(6).min(80);
        let mut breaks =
            quad::window_breakpoints(phi_r, phi_r - PI, phi_r + PI, levels);
        if let Premeasure::Atoms { atoms } = self {
            for (t, _) in atoms {
                for cand in [*t, t - 2.0 * PI, t + 2.0 * PI] {
                    if cand > phi_r - PI && cand < phi_r + PI {
                        breaks.push(cand);
                    }
                }
            }
            breaks.sort_by(|a, b| a.partial_cmp(b).unwrap());
            breaks.dedup();
        }
        let tol_per_panel = 1e-11 / breaks.len() as f64;
        let q = quad::adaptive_panels(&mut integrand, &breaks, tol_per_panel, 48)?;
        Ok(q.value)
    }

    /// Direct form `int P(phi - theta) d mu(theta)`, available for the
    /// density-backed representations; used to cross-check the
    /// derivative-kernel form.
    pub fn poisson_integral_direct(&self, d: BoundaryDepth, phi: &DyadicAngle) -> Result<f64> {
        let phi_r = phi.radians();
        match self {
            Premeasure::Atoms { atoms } => Ok(atoms
                .iter()
                .map(|(t, m)| m * poisson_kernel(d, phi_r - t))
                .sum()),
            Premeasure::Density { f, mean, .. } => {
                let f = f.clone();
                let mean = *mean;
                let mut integrand =
                    |theta: f64| -> Result<f64> { Ok(poisson_kernel(d, phi_r - theta) * (f(theta) - mean)) };
                let levels = (d.s().ceil() as u32).saturating_add(6).min(80);
                let breaks = quad::window_breakpoints(phi_r, phi_r - PI, phi_r + PI, levels);
                let q = quad::adaptive_panels(&mut integrand, &breaks, 1e-12, 48)?;
                Ok(q.value / (2.0 * PI))
            }
            Premeasure::TrigPoly { terms } => {
                // Poisson extension of cos(N theta) is r^N cos(N phi)
                let mut sum = 0.0;
                for t in terms {
                    let rho = match t.freq {
                        Frequency::Plain(n) => d.pow_plain(n),
                        Frequency::Pow2(e) => d.pow(crate::numerics::FrequencyExponent::new(e)),
                    };
                    if rho == 0.0 {
                        continue;
                    }
                    let c = match t.freq {
                        Frequency::Plain(n) => phi.mul_u64(n).cos(),
                        Frequency::Pow2(e) => phi.mul_pow2(e).cos(),
                    };
                    sum += t.coeff * rho * c;
                }
                Ok(sum)
            }
        }
    }
}

/// Result of the exhaustive dyadic kappa sweep.
#[derive(Debug, Clone, Copy)]
pub struct KappaBoundReport {
    /// `sup mu(I) / (|I| log(e/|I|))` (signed).
    pub kappa_upper: f64,
    /// The same with `|mu(I)|`.
    pub kappa_abs: f64,
    /// `(depth, index)` of the maximizing arc for the signed ratio.
    pub witness_upper: (u32, u64),
    pub witness_abs: (u32, u64),
    pub depth_max: u32,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_circle_mass_zero() {
        let p = Premeasure::from_density(|t| t.cos(), 64).unwrap();
        assert_eq!(p.mu(&CircleArc::full_circle()).unwrap(), 0.0);
    }

    #[test]
    fn cosine_density_antiderivative() {
        // mu((0, pi/2)) = sin(pi/2)/2pi = 1/2pi
        let p = Premeasure::from_density(|t| t.cos(), 64).unwrap();
        let arc = CircleArc::dyadic_span(0, 1, 2);
        let v = p.mu(&arc).unwrap();
        assert!((v - 1.0 / (2.0 * PI)).abs() < 1e-12, "{v}");
    }

    #[test]
    fn atom_counting() {
        let p = Premeasure::from_atoms(vec![(0.1, 1.0), (PI, -1.0)]).unwrap();
        // arc containing only the first atom
        let arc = CircleArc::half_open(0.0, 1.0);
        assert_eq!(p.mu(&arc).unwrap(), 1.0);
    }

    #[test]
    fn unbalanced_atoms_rejected() {
        assert!(Premeasure::from_atoms(vec![(0.3, 1.0)]).is_err());
    }

    #[test]
    fn trig_poly_matches_antiderivative() {
        // single cos(4 theta): mu([a,b)) = (sin 4b - sin 4a)/(8 pi)
        let p = Premeasure::TrigPoly { terms: vec![TrigTerm { freq: Frequency::Pow2(2), coeff: 1.0 }] };
        let arc = CircleArc::dyadic_span(1, 5, 4);
        let a = 2.0 * PI / 16.0;
        let b = 2.0 * PI * 5.0 / 16.0;
        let expect = ((4.0 * b).sin() - (4.0 * a).sin()) / (8.0 * PI);
        let v = p.mu(&arc).unwrap();
        assert!((v - expect).abs() < 1e-15, "{v} vs {expect}");
    }

    #[test]
    fn nested_chain_tends_to_zero() {
        let p = Premeasure::from_density(|t| t.cos() + 0.5 * (3.0 * t).sin(), 64).unwrap();
        let mut prev = f64::INFINITY;
        for depth in 2..=14 {
            let v = p.mu(&CircleArc::dyadic(0, depth)).unwrap().abs();
            assert!(v < prev.max(1e-3), "depth {depth}: {v} vs {prev}");
            prev = v.max(1e-15);
        }
        assert!(prev < 1e-3);
    }
}
