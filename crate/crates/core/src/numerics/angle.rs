//! Exact dyadic angles `phi = 2*pi*m / 2^q`.
//!
//! Multiplication by a power of two followed by reduction mod 2*pi is an
//! exact integer shift-and-mask, which is what makes `cos(2^(2^n) phi)`
//! computable without catastrophic argument-reduction error.

use std::f64::consts::PI;

use num_bigint::BigUint;

/// `phi = 2*pi*m / 2^q` with `0 <= m < 2^q` after normalization.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DyadicAngle {
    numer: BigUint,
    depth: u32,
}

impl DyadicAngle {
    /// Normalizes `m` mod `2^q`.
    pub fn new(numer: BigUint, depth: u32) -> Self {
        let mut a = Self { numer, depth };
        a.reduce();
        a
    }

    pub fn zero() -> Self {
        Self { numer: BigUint::from(0u32), depth: 0 }
    }

    pub fn from_u64(numer: u64, depth: u32) -> Self {
        Self::new(BigUint::from(numer), depth)
    }

    /// The `i`-th node of the uniform dyadic grid with `2^q` points.
    pub fn grid_node(i: u64, q: u32) -> Self {
        Self::from_u64(i, q)
    }

    /// Uniformly random angle of depth `q` with odd numerator, so the
    /// 2-adic valuation is zero and no frequency `2^e` with `e < q`
    /// reduces it to an exact resonance.
    pub fn random_odd<R: rand::Rng>(q: u32, rng: &mut R) -> Self {
        assert!(q >= 1);
        let bytes = (q as usize + 7) / 8;
        let mut buf = vec![0u8; bytes];
        rng.fill_bytes(&mut buf);
        buf[0] |= 1; // little-endian: force odd
        Self::new(BigUint::from_bytes_le(&buf), q)
    }

    fn reduce(&mut self) {
        let bits = self.numer.bits();
        if bits > self.depth as u64 {
            // keep the low `depth` bits
            let mask = (BigUint::from(1u32) << self.depth) - 1u32;
            self.numer &= mask;
        }
    }

    pub fn numerator(&self) -> &BigUint {
        &self.numer
    }

    pub fn depth(&self) -> u32 {
        self.depth
    }

    pub fn is_zero(&self) -> bool {
        self.numer == BigUint::from(0u32)
    }

    /// Exact reduction of `2^e * phi` mod `2*pi`: shift and mask, no
    /// floating point.
    pub fn mul_pow2(&self, e: u32) -> Self {
        Self::new(&self.numer << e, self.depth)
    }

    /// Exact reduction of `n * phi` mod `2*pi` for an arbitrary integer
    /// multiplier.
    pub fn mul_u64(&self, n: u64) -> Self {
        Self::new(&self.numer * n, self.depth)
    }

    /// Half of this angle, exactly (depth grows by one).
    pub fn half(&self) -> Self {
        Self { numer: self.numer.clone(), depth: self.depth + 1 }
    }

    /// Exact sum of two dyadic angles (common depth = max of the two).
    pub fn add(&self, other: &Self) -> Self {
        let q = self.depth.max(other.depth);
        let a = &self.numer << (q - self.depth);
        let b = &other.numer << (q - other.depth);
        Self::new(a + b, q)
    }

    /// Exact difference `self - other` mod `2*pi`.
    pub fn sub(&self, other: &Self) -> Self {
        let q = self.depth.max(other.depth);
        let a = &self.numer << (q - self.depth);
        let b = &other.numer << (q - other.depth);
        let modulus = BigUint::from(1u32) << q;
        Self::new(a + modulus - b, q)
    }

    /// Fraction of the full turn in `[0, 1)`, accurate to ~2^-63.
    pub fn fraction(&self) -> f64 {
        let f = self.signed_fraction();
        if f < 0.0 {
            f + 1.0
        } else {
            f
        }
    }

    /// Fraction of the full turn mapped to `(-1/2, 1/2]`.
    pub fn signed_fraction(&self) -> f64 {
        let q = self.depth;
        if self.numer.bits() == 0 {
            return 0.0;
        }
        // top 96 bits of m / 2^q
        let frac = if q <= 96 {
            let m = u128_from(&self.numer);
            m as f64 / (q as f64).exp2()
        } else {
            let hi = u128_from(&(&self.numer >> (q - 96)));
            hi as f64 / 96f64.exp2()
        };
        if frac > 0.5 {
            frac - 1.0
        } else {
            frac
        }
    }

    /// Angle in radians, reduced to `(-pi, pi]`.
    pub fn radians(&self) -> f64 {
        self.signed_fraction() * (2.0 * PI)
    }

    pub fn cos(&self) -> f64 {
        self.radians().cos()
    }

    pub fn sin(&self) -> f64 {
        self.radians().sin()
    }
}

fn u128_from(n: &BigUint) -> u128 {
    let digits = n.to_u64_digits();
    match digits.len() {
        0 => 0,
        1 => digits[0] as u128,
        2 => (digits[1] as u128) << 64 | digits[0] as u128,
        _ => panic!("value exceeds 128 bits"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization() {
        let a = DyadicAngle::from_u64(9, 3); // 9 mod 8 = 1
        assert_eq!(a, DyadicAngle::from_u64(1, 3));
    }

    #[test]
    fn doubling_quarter_turn() {
        // e=1, m=1, q=2 (phi = pi/2) -> m=2, q=2 (phi = pi)
        let a = DyadicAngle::from_u64(1, 2);
        assert_eq!(a.mul_pow2(1), DyadicAngle::from_u64(2, 2));
    }

    #[test]
    fn shift_to_full_turn_gives_zero() {
        // e = q: 2^q * m = 0 mod 2^q
        let a = DyadicAngle::from_u64(5, 4);
        assert!(a.mul_pow2(4).is_zero());
    }

    #[test]
    fn shift_below_modulus() {
        // e=64, m=3, q=70 -> m = 3*2^64 mod 2^70
        let a = DyadicAngle::from_u64(3, 70);
        let r = a.mul_pow2(64);
        assert_eq!(*r.numerator(), BigUint::from(3u32) << 64);
        assert_eq!(r.depth(), 70);
    }

    #[test]
    fn half_turn_is_pi() {
        let a = DyadicAngle::from_u64(1 << 11, 12);
        assert_eq!(a.signed_fraction(), 0.5);
        assert_eq!(a.radians(), PI);
    }

    #[test]
    fn signed_fraction_wraps_high_values() {
        // 3/4 of a turn maps to -1/4
        let a = DyadicAngle::from_u64(3, 2);
        assert_eq!(a.signed_fraction(), -0.25);
    }

    #[test]
    fn deep_angle_fraction_accuracy() {
        // m = 2^199 + 1 at q = 200 is essentially half a turn
        let m = (BigUint::from(1u32) << 199u32) + 1u32;
        let a = DyadicAngle::new(m, 200);
        assert!((a.fraction() - 0.5).abs() < 1e-28);
    }
}
