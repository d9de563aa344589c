//! Integer frequencies, either plain or a power of two. Power-of-two
//! frequencies can be doubly exponential and never materialize as
//! machine integers.

use std::cmp::Ordering;

use num_bigint::BigUint;

#[derive(Debug, Clone, Copy)]
pub enum Frequency {
    Plain(u64),
    Pow2(u32),
}

impl Frequency {
    pub fn log2(&self) -> f64 {
        match self {
            Frequency::Plain(n) => (*n as f64).log2(),
            Frequency::Pow2(e) => *e as f64,
        }
    }

    /// Natural logarithm of the frequency.
    pub fn ln(&self) -> f64 {
        match self {
            Frequency::Plain(n) => (*n as f64).ln(),
            Frequency::Pow2(e) => *e as f64 * std::f64::consts::LN_2,
        }
    }

    pub fn to_biguint(&self) -> BigUint {
        match self {
            Frequency::Plain(n) => BigUint::from(*n),
            Frequency::Pow2(e) => BigUint::from(1u32) << *e,
        }
    }

    pub fn is_pow2(&self) -> bool {
        matches!(self, Frequency::Pow2(_))
    }
}

// Plain(16) and Pow2(4) denote the same frequency, so equality goes
// through the numeric comparison rather than the representation.
impl PartialEq for Frequency {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Frequency {}

impl PartialOrd for Frequency {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Frequency {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Frequency::Plain(a), Frequency::Plain(b)) => a.cmp(b),
            (Frequency::Pow2(a), Frequency::Pow2(b)) => a.cmp(b),
            (Frequency::Plain(a), Frequency::Pow2(e)) => {
                if *e >= 64 {
                    Ordering::Less
                } else {
                    a.cmp(&(1u64 << e))
                }
            }
            (Frequency::Pow2(e), Frequency::Plain(b)) => {
                if *e >= 64 {
                    Ordering::Greater
                } else {
                    (1u64 << e).cmp(b)
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mixed_ordering() {
        assert!(Frequency::Plain(15) < Frequency::Pow2(4));
        assert!(Frequency::Plain(16) == Frequency::Pow2(4));
        assert!(Frequency::Pow2(4) < Frequency::Plain(17));
        assert!(Frequency::Plain(u64::MAX) < Frequency::Pow2(64));
    }
}
