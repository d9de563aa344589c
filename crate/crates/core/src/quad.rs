//! Adaptive Gauss–Kronrod quadrature plus fixed Gauss–Legendre panel
//! rules. Integrands are fallible so that series-evaluation errors
//! propagate out of the integrator.

use crate::error::{Error, Result};

// 15-point Kronrod nodes (positive half) with the embedded 7-point Gauss rule.
const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0,
];

const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];

const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

#[derive(Debug, Clone, Copy)]
pub struct Quad {
    pub value: f64,
    pub abs_err: f64,
    pub evals: usize,
}

fn gk15<F>(f: &mut F, a: f64, b: f64) -> Result<(f64, f64)>
where
    F: FnMut(f64) -> Result<f64>,
{
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c)?;
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for i in 0..7 {
        let x = h * XGK[i];
        let f1 = f(c - x)?;
        let f2 = f(c + x)?;
        kronrod += WGK[i] * (f1 + f2);
        if i % 2 == 1 {
            gauss += WG[i / 2] * (f1 + f2);
        }
    }
    let value = kronrod * h;
    let err = ((kronrod - gauss) * h).abs();
    Ok((value, err))
}

/// Adaptive bisection to absolute tolerance `abs_tol`.
pub fn adaptive<F>(f: &mut F, a: f64, b: f64, abs_tol: f64, max_depth: u32) -> Result<Quad>
where
    F: FnMut(f64) -> Result<f64>,
{
    let mut evals = 0usize;
    let mut total = Quad { value: 0.0, abs_err: 0.0, evals: 0 };
    adaptive_rec(f, a, b, abs_tol, max_depth, &mut total, &mut evals)?;
    total.evals = evals;
    Ok(total)
}

fn adaptive_rec<F>(
    f: &mut F,
    a: f64,
    b: f64,
    tol: f64,
    depth_left: u32,
    acc: &mut Quad,
    evals: &mut usize,
) -> Result<()>
where
    F: FnMut(f64) -> Result<f64>,
{
    let (v, e) = gk15(f, a, b)?;
    *evals += 15;
    if e <= tol {
        acc.value += v;
        acc.abs_err += e;
        return Ok(());
    }
    if depth_left == 0 {
        return Err(Error::QuadratureNotConverged { a, b, err: e, tol });
    }
    let m = 0.5 * (a + b);
    adaptive_rec(f, a, m, 0.5 * tol, depth_left - 1, acc, evals)?;
    adaptive_rec(f, m, b, 0.5 * tol, depth_left - 1, acc, evals)
}

/// Adaptive quadrature over a list of panels given by breakpoints.
pub fn adaptive_panels<F>(
    f: &mut F,
    breaks: &[f64],
    abs_tol_per_panel: f64,
    max_depth: u32,
) -> Result<Quad>
where
    F: FnMut(f64) -> Result<f64>,
{
    let mut out = Quad { value: 0.0, abs_err: 0.0, evals: 0 };
    for w in breaks.windows(2) {
        let q = adaptive(f, w[0], w[1], abs_tol_per_panel, max_depth)?;
        out.value += q.value;
        out.abs_err += q.abs_err;
        out.evals += q.evals;
    }
    Ok(out)
}

// 16-point Gauss-Legendre rule (positive half).
const XGL16: [f64; 8] = [
    0.0950125098376374401853193,
    0.2816035507792589132304605,
    0.4580167776572273863424194,
    0.6178762444026437484466718,
    0.7554044083550030338951012,
    0.8656312023878317438804679,
    0.9445750230732325760779884,
    0.9894009349916499325961542,
];

const WGL16: [f64; 8] = [
    0.1894506104550684962853967,
    0.1826034150449235888667637,
    0.1691565193950025381893121,
    0.1495959888165767320815017,
    0.1246289712555338720524763,
    0.0951585116824927848099251,
    0.0622535239386478928628438,
    0.0271524594117540948517806,
];

/// Fixed 16-node Gauss–Legendre rule on `[a, b]`.
pub fn gauss16<F>(f: &mut F, a: f64, b: f64) -> Result<f64>
where
    F: FnMut(f64) -> Result<f64>,
{
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let mut sum = 0.0;
    for i in 0..8 {
        let x = h * XGL16[i];
        sum += WGL16[i] * (f(c - x)? + f(c + x)?);
    }
    Ok(sum * h)
}

/// Geometrically refined breakpoints `center ± 2^-j`, `j = 0..=levels`,
/// clipped to `[lo, hi]`. Concentrates nodes around an interior feature
/// of known width ~`2^-levels`.
pub fn window_breakpoints(center: f64, lo: f64, hi: f64, levels: u32) -> Vec<f64> {
    let mut pts = vec![lo, hi];
    for j in 0..=levels {
        let w = (-(j as f64)).exp2();
        for p in [center - w, center + w] {
            if p > lo && p < hi {
                pts.push(p);
            }
        }
    }
    if center > lo && center < hi {
        pts.push(center);
    }
    pts.sort_by(|a, b| a.partial_cmp(b).unwrap());
    pts.dedup();
    pts
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_is_exact() {
        let mut f = |x: f64| Ok(x * x * x - 2.0 * x + 1.0);
        let q = adaptive(&mut f, 0.0, 2.0, 1e-12, 20).unwrap();
        // integral = 4 - 4 + 2 = 2
        assert!((q.value - 2.0).abs() < 1e-12);
    }

    #[test]
    fn integrable_peak() {
        // narrow Lorentzian: integral of eps/(x^2+eps^2) over R is pi
        let eps = 1e-6;
        let mut f = |x: f64| Ok(eps / (x * x + eps * eps));
        let q = adaptive(&mut f, -1.0, 1.0, 1e-10, 60).unwrap();
        let exact = 2.0 * (1.0 / eps).atan();
        assert!((q.value - exact).abs() < 1e-8, "{} vs {}", q.value, exact);
    }

    #[test]
    fn gauss16_degree() {
        let mut f = |x: f64| Ok(x.powi(13));
        let v = gauss16(&mut f, -1.0, 3.0).unwrap();
        let exact = (3f64.powi(14) - 1.0) / 14.0;
        assert!((v - exact).abs() / exact < 1e-13);
    }

    #[test]
    fn error_propagates() {
        let mut f = |_x: f64| -> Result<f64> { Err(Error::InvalidArgument("boom".into())) };
        assert!(adaptive(&mut f, 0.0, 1.0, 1e-8, 10).is_err());
    }
}
