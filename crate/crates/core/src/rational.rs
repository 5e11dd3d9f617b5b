//! Exact reduced fractions.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A fraction `numerator / denominator`, always stored in lowest terms with a
/// positive denominator. Two rationals are equal iff their fields are equal.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    numer: i128,
    denom: i128,
}

fn gcd(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Rational {
    pub const ZERO: Rational = Rational { numer: 0, denom: 1 };
    pub const ONE: Rational = Rational { numer: 1, denom: 1 };

    /// Builds `numer / denom` and reduces it.
    ///
    /// Panics if `denom == 0`.
    pub fn new(numer: i128, denom: i128) -> Self {
        assert!(denom != 0, "zero denominator");
        let g = gcd(numer, denom);
        let sign = if denom < 0 { -1 } else { 1 };
        Rational {
            numer: sign * numer / g,
            denom: sign * denom / g,
        }
    }

    pub fn from_counts(favorable: u64, total: u64) -> Self {
        Rational::new(favorable as i128, total as i128)
    }

    pub fn integer(n: i128) -> Self {
        Rational { numer: n, denom: 1 }
    }

    pub fn numer(&self) -> i128 {
        self.numer
    }

    pub fn denom(&self) -> i128 {
        self.denom
    }

    pub fn is_integer(&self) -> bool {
        self.denom == 1
    }

    pub fn checked_mul(self, rhs: Rational) -> Option<Rational> {
        // cross-cancel first so intermediate values stay as small as possible
        let g1 = gcd(self.numer, rhs.denom).max(1);
        let g2 = gcd(rhs.numer, self.denom).max(1);
        let n = (self.numer / g1).checked_mul(rhs.numer / g2)?;
        let d = (self.denom / g2).checked_mul(rhs.denom / g1)?;
        Some(Rational::new(n, d))
    }

    pub fn checked_add(self, rhs: Rational) -> Option<Rational> {
        let g = gcd(self.denom, rhs.denom);
        let lhs_scale = rhs.denom / g;
        let rhs_scale = self.denom / g;
        let n = self
            .numer
            .checked_mul(lhs_scale)?
            .checked_add(rhs.numer.checked_mul(rhs_scale)?)?;
        let d = self.denom.checked_mul(lhs_scale)?;
        Some(Rational::new(n, d))
    }
}

impl Default for Rational {
    fn default() -> Self {
        Rational::ZERO
    }
}

impl Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Rational) -> Rational {
        self.checked_add(rhs).expect("rational addition overflow")
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational {
            numer: -self.numer,
            denom: self.denom,
        }
    }
}

impl Sub for Rational {
    type Output = Rational;
    fn sub(self, rhs: Rational) -> Rational {
        self + (-rhs)
    }
}

impl Mul for Rational {
    type Output = Rational;
    fn mul(self, rhs: Rational) -> Rational {
        self.checked_mul(rhs)
            .expect("rational multiplication overflow")
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        // Continued-fraction comparison: exact and free of overflow.
        let (mut a, mut b) = (self.numer, self.denom);
        let (mut c, mut d) = (other.numer, other.denom);
        let mut flipped = false;
        loop {
            let q1 = a.div_euclid(b);
            let q2 = c.div_euclid(d);
            if q1 != q2 {
                let ord = q1.cmp(&q2);
                return if flipped { ord.reverse() } else { ord };
            }
            let r1 = a.rem_euclid(b);
            let r2 = c.rem_euclid(d);
            match (r1 == 0, r2 == 0) {
                (true, true) => return Ordering::Equal,
                (true, false) => {
                    return if flipped {
                        Ordering::Greater
                    } else {
                        Ordering::Less
                    }
                }
                (false, true) => {
                    return if flipped {
                        Ordering::Less
                    } else {
                        Ordering::Greater
                    }
                }
                (false, false) => {
                    // a/b = q + r1/b, compare b/r1 against d/r2 with order reversed
                    (a, b, c, d) = (b, r1, d, r2);
                    flipped = !flipped;
                }
            }
        }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom == 1 {
            write!(f, "{}", self.numer)
        } else {
            write!(f, "{}/{}", self.numer, self.denom)
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse `{0}` as a rational")]
pub struct ParseRationalError(String);

impl FromStr for Rational {
    type Err = ParseRationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseRationalError(s.to_string());
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s.trim(), "1"),
        };
        let n: i128 = n.parse().map_err(|_| err())?;
        let d: i128 = d.parse().map_err(|_| err())?;
        if d == 0 {
            return Err(err());
        }
        Ok(Rational::new(n, d))
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn reduces_on_construction() {
        let r = Rational::new(40, 64);
        assert_eq!((r.numer(), r.denom()), (5, 8));
        let r = Rational::new(3, -6);
        assert_eq!((r.numer(), r.denom()), (-1, 2));
        assert_eq!(Rational::new(0, -7), Rational::ZERO);
    }

    #[test]
    fn display_and_parse() {
        assert_eq!(Rational::new(33, 81).to_string(), "11/27");
        assert_eq!(Rational::new(64, 64).to_string(), "1");
        assert_eq!("5/8".parse::<Rational>().unwrap(), Rational::new(10, 16));
        assert_eq!("1".parse::<Rational>().unwrap(), Rational::ONE);
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x/2".parse::<Rational>().is_err());
    }

    #[test]
    fn arithmetic() {
        let a = Rational::new(1, 6);
        let b = Rational::new(1, 3);
        assert_eq!(a + b, Rational::new(1, 2));
        assert_eq!(a - b, Rational::new(-1, 6));
        assert_eq!(a * b, Rational::new(1, 18));
    }

    #[test]
    fn ordering_of_close_values() {
        assert!(Rational::new(11, 32) < Rational::new(25, 64));
        assert!(Rational::new(25, 64) < Rational::new(11, 27));
        assert!(Rational::new(11, 27) < Rational::new(7, 16));
        assert!(Rational::new(-1, 2) < Rational::new(1, 3));
        assert_eq!(
            Rational::new(2, 4).cmp(&Rational::new(1, 2)),
            Ordering::Equal
        );
    }

    proptest! {
        #[test]
        fn ordering_matches_cross_multiplication(
            a in -1000i128..1000, b in 1i128..1000, c in -1000i128..1000, d in 1i128..1000
        ) {
            let x = Rational::new(a, b);
            let y = Rational::new(c, d);
            prop_assert_eq!(x.cmp(&y), (a * d).cmp(&(c * b)));
        }

        #[test]
        fn normalization_is_idempotent(a in -10_000i128..10_000, b in 1i128..10_000) {
            let r = Rational::new(a, b);
            prop_assert_eq!(Rational::new(r.numer(), r.denom()), r);
            prop_assert_eq!(gcd(r.numer(), r.denom()), 1);
        }

        #[test]
        fn addition_is_exact(a in -500i128..500, b in 1i128..500, c in -500i128..500, d in 1i128..500) {
            let sum = Rational::new(a, b) + Rational::new(c, d);
            prop_assert_eq!(sum, Rational::new(a * d + c * b, b * d));
        }

        #[test]
        fn string_round_trip(a in -10_000i128..10_000, b in 1i128..10_000) {
            let r = Rational::new(a, b);
            prop_assert_eq!(r.to_string().parse::<Rational>().unwrap(), r);
        }
    }
}
