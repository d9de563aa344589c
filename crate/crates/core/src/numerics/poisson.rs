//! The Poisson kernel of the unit disk and its angular derivative, in a
//! form that stays stable when `1 - r` is far below machine epsilon.
//!
//! With `delta = 1 - r`,
//!
//! ```text
//! P(r e^{i psi}) = (1 - r^2) / |e^{i psi} - r|^2
//!                = (2 - delta) delta / (delta^2 + 4 (1 - delta) sin^2(psi/2))
//! ```
//!
//! which is algebraically identical to the usual expression but never
//! forms `1 - r`.

use super::BoundaryDepth;

/// Poisson kernel `P(r e^{i psi})`, strictly positive. Normalized so
/// that the angular mean is 1, i.e. `(1/2pi) \int P dpsi = 1`.
pub fn poisson_kernel(d: BoundaryDepth, psi: f64) -> f64 {
    let delta = d.delta();
    let s = (0.5 * psi).sin();
    let denom = delta * delta + 4.0 * (1.0 - delta) * s * s;
    (2.0 - delta) * delta / denom
}

/// Angular derivative `d/dpsi P(r e^{i psi})` in closed form; odd in `psi`.
pub fn poisson_kernel_dpsi(d: BoundaryDepth, psi: f64) -> f64 {
    let delta = d.delta();
    let s = (0.5 * psi).sin();
    let denom = delta * delta + 4.0 * (1.0 - delta) * s * s;
    let num = (2.0 - delta) * delta;
    // d/dpsi denom = 2 (1 - delta) sin psi
    -num * 2.0 * (1.0 - delta) * psi.sin() / (denom * denom)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_at_center_is_one() {
        let d = BoundaryDepth::new(0.0);
        for psi in [0.0, 0.3, 1.5, 3.0] {
            assert_eq!(poisson_kernel(d, psi), 1.0);
        }
    }

    #[test]
    fn kernel_at_half_radius_peak() {
        // r = 1/2, psi = 0: (1 - 1/4) / (1/2)^2 = 3
        let d = BoundaryDepth::new(1.0);
        assert!((poisson_kernel(d, 0.0) - 3.0).abs() < 1e-15);
    }

    #[test]
    fn derivative_is_odd_and_vanishes_at_peak() {
        let d = BoundaryDepth::new(4.0);
        assert_eq!(poisson_kernel_dpsi(d, 0.0), 0.0);
        for psi in [0.05, 0.7, 2.9] {
            let plus = poisson_kernel_dpsi(d, psi);
            let minus = poisson_kernel_dpsi(d, -psi);
            assert_eq!(plus, -minus);
        }
    }

    #[test]
    fn derivative_matches_central_difference() {
        let d = BoundaryDepth::new(4.0);
        let psi = 0.3;
        let h = 1e-6;
        let fd = (poisson_kernel(d, psi + h) - poisson_kernel(d, psi - h)) / (2.0 * h);
        let exact = poisson_kernel_dpsi(d, psi);
        assert!((fd - exact).abs() / exact.abs() < 1e-6, "{fd} vs {exact}");
    }
}
