//! Argument reduction `n * phi mod 2*pi` for plain real angles.
//!
//! The product `n * phi` is formed exactly as a double-double via an
//! FMA two-product, then reduced against a double-double 2*pi. Good to
//! a few units in 1e-16 for `n` up to 2^40, which is the stated limit
//! for real-angle evaluation; dyadic angles handle everything larger.

use std::f64::consts::PI;

const TWO_PI_HI: f64 = 6.283185307179586;
const TWO_PI_LO: f64 = 2.4492935982947064e-16;

pub const PLAIN_FREQ_LIMIT_LOG2: f64 = 40.0;

/// `n * phi` reduced to `(-pi, pi]`.
pub fn reduce_mul_mod_2pi(n: u64, phi: f64) -> f64 {
    let nf = n as f64;
    debug_assert!(n < (1u64 << 53), "multiplier must be exactly representable");
    let p = nf * phi;
    let p_err = nf.mul_add(phi, -p); // exact residue of the product
    let k = (p / (2.0 * PI)).round();
    let kh = k * TWO_PI_HI;
    let kh_err = k.mul_add(TWO_PI_HI, -kh);
    // p and kh agree to within ~2*pi, so the leading subtraction is exact
    let mut r = ((p - kh) - kh_err) - k * TWO_PI_LO + p_err;
    if r > PI {
        r -= 2.0 * PI;
    } else if r <= -PI {
        r += 2.0 * PI;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_products_exact() {
        assert!((reduce_mul_mod_2pi(3, 0.5) - 1.5).abs() < 1e-15);
    }

    #[test]
    fn result_stays_in_principal_range() {
        for n in [1u64, 7, 1 << 20, (1 << 40) - 3] {
            for phi in [0.1, 1.0, 2.0, 3.14, 6.28, -2.5] {
                let r = reduce_mul_mod_2pi(n, phi);
                assert!(r > -PI - 1e-12 && r <= PI + 1e-12, "n={n} phi={phi}: {r}");
            }
        }
    }
}
