//! Centered moments `int_seg (theta - c)^q d mu(theta)` of a premeasure
//! over a segment, exact term by term for trigonometric densities.
//!
//! These are the building blocks for integrating piecewise-polynomial
//! kernels against a premeasure: the kernel is collocated by low-degree
//! polynomials on panels and the premeasure supplies the moments, so no
//! quadrature ever has to resolve the density's top frequency.

use std::f64::consts::PI;

use crate::error::Result;
use crate::numerics::{reduce, DyadicAngle};
use crate::premeasure::{CircleArc, Premeasure, TrigTerm};
use crate::quad;
use crate::series::Frequency;

/// `mu(I)` for a trigonometric-polynomial density: term-wise
/// `c (sin(N b) - sin(N a)) / (2 pi N)`, written as
/// `c cos(N mid) sin(N halfwidth) / (pi N)` so nothing cancels on short
/// arcs.
pub fn trig_poly_mass(terms: &[TrigTerm], arc: &CircleArc) -> f64 {
    let mut sum = 0.0;
    if let Some((mid, hw)) = arc.dyadic_mid_halfwidth() {
        for t in terms {
            let inv_n = inv_freq(&t.freq);
            if inv_n == 0.0 {
                continue;
            }
            let (cos_mid, sin_hw) = match t.freq {
                Frequency::Pow2(e) => (mid.mul_pow2(e).cos(), hw.mul_pow2(e).sin()),
                Frequency::Plain(n) => (mid.mul_u64(n).cos(), hw.mul_u64(n).sin()),
            };
            sum += t.coeff * cos_mid * sin_hw * inv_n / PI;
        }
    } else {
        let a = arc.start.radians();
        let len = arc.length_radians();
        let mid = a + 0.5 * len;
        let hw = 0.5 * len;
        for t in terms {
            let inv_n = inv_freq(&t.freq);
            if inv_n == 0.0 {
                continue;
            }
            let Some(n) = plain_multiplier(&t.freq) else {
                // beyond the real-angle limit the term is below
                // c / (pi 2^40); drop it
                continue;
            };
            let cos_mid = reduce::reduce_mul_mod_2pi(n, mid).cos();
            let sin_hw = reduce::reduce_mul_mod_2pi(n, hw).sin();
            sum += t.coeff * cos_mid * sin_hw * inv_n / PI;
        }
    }
    sum
}

pub fn centered_moments(p: &Premeasure, seg: &CircleArc, q_max: usize) -> Result<Vec<f64>> {
    match p {
        Premeasure::TrigPoly { terms } => Ok(trig_moments(terms, seg, q_max)),
        Premeasure::Atoms { atoms } => {
            let c = seg.start.radians() + 0.5 * seg.length_radians();
            let mut out = vec![0.0; q_max + 1];
            for (t, m) in atoms {
                if !seg.contains(*t) {
                    continue;
                }
                // representative of t nearest to the segment center
                let off = (t - c + PI).rem_euclid(2.0 * PI) - PI;
                let mut p = 1.0;
                for slot in out.iter_mut() {
                    *slot += m * p;
                    p *= off;
                }
            }
            Ok(out)
        }
        Premeasure::Density { f, mean, cells } => {
            let a = seg.start.radians();
            let len = seg.length_radians();
            let c = a + 0.5 * len;
            let panel = 2.0 * PI / *cells as f64;
            let n_panels = ((len / panel).ceil() as usize).clamp(1, 1 << 20);
            let mut out = vec![0.0; q_max + 1];
            for q in 0..=q_max {
                let f = f.clone();
                let mean = *mean;
                let mut g =
                    |t: f64| -> Result<f64> { Ok((f(t) - mean) * (t - c).powi(q as i32)) };
                let mut v = 0.0;
                for i in 0..n_panels {
                    let x0 = a + len * i as f64 / n_panels as f64;
                    let x1 = a + len * (i + 1) as f64 / n_panels as f64;
                    v += quad::gauss16(&mut g, x0, x1)?;
                }
                out[q] = v / (2.0 * PI);
            }
            Ok(out)
        }
    }
}

/// Moments of a trigonometric density over a segment, by the stable
/// descending by-parts recursion. With `u = theta - c`, `|u| <= h`:
///
/// ```text
/// C_q = int_0^h u^q cos(N u) du,   S_q = int_0^h u^q sin(N u) du
/// C_q = h^q sin(Nh)/N - (q/N) S_{q-1}
/// S_q = -h^q cos(Nh)/N + (q/N) C_{q-1}
/// ```
///
/// and by parity `M_q = 2 cos(Nc) C_q` (q even), `-2 sin(Nc) S_q` (odd).
fn trig_moments(terms: &[TrigTerm], seg: &CircleArc, q_max: usize) -> Vec<f64> {
    let mut out = vec![0.0; q_max + 1];
    let dyadic = seg.dyadic_mid_halfwidth();
    let (h, reduced): (f64, Box<dyn Fn(&Frequency) -> Option<ReducedPair>>) = match &dyadic {
        Some((mid, hw)) => {
            let mid = mid.clone();
            let hw = hw.clone();
            let h = hw.fraction() * 2.0 * PI;
            (
                h,
                Box::new(move |freq: &Frequency| {
                    let (nm, nh, nh2) = match freq {
                        Frequency::Pow2(e) => {
                            (mid.mul_pow2(*e), hw.mul_pow2(*e), hw.half().mul_pow2(*e))
                        }
                        Frequency::Plain(n) => {
                            (mid.mul_u64(*n), hw.mul_u64(*n), hw.half().mul_u64(*n))
                        }
                    };
                    Some(ReducedPair {
                        cos_nc: nm.cos(),
                        sin_nc: nm.sin(),
                        cos_nh: nh.cos(),
                        sin_nh: nh.sin(),
                        sin_nh_half: nh2.sin(),
                    })
                }),
            )
        }
        None => {
            let a = seg.start.radians();
            let len = seg.length_radians();
            let c = a + 0.5 * len;
            let h = 0.5 * len;
            (
                h,
                Box::new(move |freq: &Frequency| {
                    let n = plain_multiplier(freq)?;
                    let nc = reduce::reduce_mul_mod_2pi(n, c);
                    let nh = reduce::reduce_mul_mod_2pi(n, h);
                    let nh2 = reduce::reduce_mul_mod_2pi(n, 0.5 * h);
                    Some(ReducedPair {
                        cos_nc: nc.cos(),
                        sin_nc: nc.sin(),
                        cos_nh: nh.cos(),
                        sin_nh: nh.sin(),
                        sin_nh_half: nh2.sin(),
                    })
                }),
            )
        }
    };

    for t in terms {
        let inv_n = inv_freq(&t.freq);
        if inv_n == 0.0 {
            continue;
        }
        let Some(r) = reduced(&t.freq) else { continue };
        let mut c_prev = r.sin_nh * inv_n;
        let mut s_prev = 2.0 * r.sin_nh_half * r.sin_nh_half * inv_n;
        let w = t.coeff / (2.0 * PI);
        out[0] += w * 2.0 * r.cos_nc * c_prev;
        let mut h_pow = 1.0;
        for q in 1..=q_max {
            h_pow *= h;
            let c_q = h_pow * r.sin_nh * inv_n - q as f64 * inv_n * s_prev;
            let s_q = -h_pow * r.cos_nh * inv_n + q as f64 * inv_n * c_prev;
            if q % 2 == 0 {
                out[q] += w * 2.0 * r.cos_nc * c_q;
            } else {
                out[q] += w * (-2.0) * r.sin_nc * s_q;
            }
            c_prev = c_q;
            s_prev = s_q;
        }
    }
    out
}

struct ReducedPair {
    cos_nc: f64,
    sin_nc: f64,
    cos_nh: f64,
    sin_nh: f64,
    sin_nh_half: f64,
}

fn inv_freq(freq: &Frequency) -> f64 {
    match freq {
        Frequency::Plain(n) => 1.0 / *n as f64,
        Frequency::Pow2(e) => {
            if *e > 1074 {
                0.0
            } else {
                (-(*e as f64)).exp2()
            }
        }
    }
}

fn plain_multiplier(freq: &Frequency) -> Option<u64> {
    match freq {
        Frequency::Plain(n) => Some(*n),
        Frequency::Pow2(e) if *e <= 40 => Some(1u64 << e),
        Frequency::Pow2(_) => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeroth_moment_matches_mass() {
        let terms = vec![
            TrigTerm { freq: Frequency::Pow2(2), coeff: 1.5 },
            TrigTerm { freq: Frequency::Plain(5), coeff: -0.7 },
        ];
        let p = Premeasure::TrigPoly { terms };
        let seg = CircleArc::dyadic_span(3, 5, 5);
        let m = p.centered_moments(&seg, 3).unwrap();
        let mass = p.mu(&seg).unwrap();
        assert!((m[0] - mass).abs() < 1e-15, "{} vs {mass}", m[0]);
    }

    #[test]
    fn moments_match_quadrature_oracle() {
        // independent route: plain Gauss panels over the density
        let terms = vec![TrigTerm { freq: Frequency::Plain(9), coeff: 2.0 }];
        let p = Premeasure::TrigPoly { terms };
        let seg = CircleArc::dyadic_span(10, 13, 6);
        let m = p.centered_moments(&seg, 4).unwrap();
        let a = seg.start.radians();
        let len = seg.length_radians();
        let c = a + 0.5 * len;
        for (q, got) in m.iter().enumerate() {
            let mut f = |t: f64| -> Result<f64> {
                Ok(2.0 * (9.0 * t).cos() * (t - c).powi(q as i32) / (2.0 * PI))
            };
            let mut expect = 0.0;
            for i in 0..8 {
                let x0 = a + len * i as f64 / 8.0;
                let x1 = a + len * (i + 1) as f64 / 8.0;
                expect += quad::gauss16(&mut f, x0, x1).unwrap();
            }
            assert!((got - expect).abs() < 1e-14, "q={q}: {got} vs {expect}");
        }
    }

    #[test]
    fn huge_frequency_moments_vanish() {
        let terms = vec![TrigTerm { freq: Frequency::Pow2(4096), coeff: 64.0 }];
        let p = Premeasure::TrigPoly { terms };
        let seg = CircleArc::dyadic_span(1, 2, 8);
        let m = p.centered_moments(&seg, 4).unwrap();
        assert!(m.iter().all(|v| *v == 0.0));
    }
}
