//! Exact reduced fractions over `i64`.
//!
//! Intermediate products are formed in `i128` and narrowed back after
//! reduction, so every operation either returns the exact result or
//! [`Error::Overflow`]; nothing wraps.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A fraction `num/den` with `den >= 1` and `gcd(|num|, den) = 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Rational {
    num: i64,
    den: i64,
}

impl Rational {
    pub const ZERO: Rational = Rational { num: 0, den: 1 };
    pub const ONE: Rational = Rational { num: 1, den: 1 };

    pub fn new(num: i64, den: i64) -> Result<Self> {
        Self::from_wide(num as i128, den as i128)
    }

    pub const fn from_integer(n: i64) -> Self {
        Rational { num: n, den: 1 }
    }

    fn from_wide(num: i128, den: i128) -> Result<Self> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = (num / g, den / g);
        if den < 0 {
            num = -num;
            den = -den;
        }
        Ok(Rational {
            num: i64::try_from(num).map_err(|_| Error::Overflow)?,
            den: i64::try_from(den).map_err(|_| Error::Overflow)?,
        })
    }

    pub fn numer(&self) -> i64 {
        self.num
    }

    pub fn denom(&self) -> i64 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    pub fn is_negative(&self) -> bool {
        self.num < 0
    }

    pub fn abs(&self) -> Rational {
        Rational {
            num: self.num.abs(),
            den: self.den,
        }
    }

    pub fn checked_neg(&self) -> Result<Rational> {
        Ok(Rational {
            num: self.num.checked_neg().ok_or(Error::Overflow)?,
            den: self.den,
        })
    }

    pub fn checked_add(&self, rhs: &Rational) -> Result<Rational> {
        let (a, b) = (self.num as i128, self.den as i128);
        let (c, d) = (rhs.num as i128, rhs.den as i128);
        Self::from_wide(a * d + c * b, b * d)
    }

    pub fn checked_sub(&self, rhs: &Rational) -> Result<Rational> {
        self.checked_add(&rhs.checked_neg()?)
    }

    pub fn checked_mul(&self, rhs: &Rational) -> Result<Rational> {
        Self::from_wide(
            self.num as i128 * rhs.num as i128,
            self.den as i128 * rhs.den as i128,
        )
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Rational> {
        self.checked_mul(&rhs.recip()?)
    }

    pub fn add_int(&self, n: i64) -> Result<Rational> {
        self.checked_add(&Rational::from_integer(n))
    }

    pub fn recip(&self) -> Result<Rational> {
        Self::from_wide(self.den as i128, self.num as i128)
    }

    pub fn floor(&self) -> i64 {
        Integer::div_floor(&self.num, &self.den)
    }

    pub fn ceil(&self) -> i64 {
        Integer::div_ceil(&self.num, &self.den)
    }

    /// True when `0 < self < 1`.
    pub fn in_unit_interval(&self) -> bool {
        self.num > 0 && self.num < self.den
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as i128 * other.den as i128).cmp(&(other.num as i128 * self.den as i128))
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `"p/q"` or a bare integer `"p"`. The fraction must already be in
/// lowest terms with a positive denominator; `"2/4"` is rejected rather than
/// silently reduced.
impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = |reason| Error::Parse {
            input: s.to_string(),
            reason,
        };
        let trimmed = s.trim();
        let (num, den) = match trimmed.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (trimmed, "1"),
        };
        let num: i64 = num.parse().map_err(|_| err("numerator is not an integer"))?;
        let den: i64 = den
            .parse()
            .map_err(|_| err("denominator is not an integer"))?;
        if den <= 0 {
            return Err(err("denominator must be positive"));
        }
        if num.gcd(&den) != 1 {
            return Err(err("fraction is not in lowest terms"));
        }
        Ok(Rational { num, den })
    }
}

impl TryFrom<String> for Rational {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Rational> for String {
    fn from(r: Rational) -> String {
        r.to_string()
    }
}

/// The multiplicative inverse of `a` modulo `m`, in `0..m`.
pub fn mod_inverse(a: i64, m: i64) -> Result<i64> {
    let eg = a.mod_floor(&m).extended_gcd(&m);
    if eg.gcd != 1 {
        return Err(Error::NotInvertible(a, m));
    }
    Ok(eg.x.mod_floor(&m))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn reduces_and_normalizes_sign() {
        let x = r(4, -6);
        assert_eq!((x.numer(), x.denom()), (-2, 3));
        assert_eq!(r(0, -5), Rational::ZERO);
    }

    #[test]
    fn zero_denominator_is_rejected() {
        assert_eq!(Rational::new(1, 0), Err(Error::DivisionByZero));
        assert_eq!(Rational::ZERO.recip(), Err(Error::DivisionByZero));
    }

    #[test]
    fn floor_and_ceil() {
        assert_eq!(r(7, 2).floor(), 3);
        assert_eq!(r(7, 2).ceil(), 4);
        assert_eq!(r(-7, 5).floor(), -2);
        assert_eq!(r(-7, 5).ceil(), -1);
        assert_eq!(r(-3, 1).floor(), -3);
        assert_eq!(r(-3, 1).ceil(), -3);
    }

    #[test]
    fn overflow_is_an_error() {
        let big = Rational::from_integer(i64::MAX);
        assert_eq!(big.checked_add(&Rational::ONE), Err(Error::Overflow));
        assert_eq!(big.checked_mul(&big), Err(Error::Overflow));
        assert_eq!(
            Rational::from_integer(i64::MIN).checked_neg(),
            Err(Error::Overflow)
        );
    }

    #[test]
    fn ordering_is_by_value() {
        assert!(r(2, 7) < r(1, 3));
        assert!(r(-1, 2) < r(-1, 3));
        assert_eq!(r(3, 6).cmp(&r(1, 2)), Ordering::Equal);
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("2/7".parse::<Rational>().unwrap(), r(2, 7));
        assert_eq!(" -3 / 5 ".parse::<Rational>().unwrap(), r(-3, 5));
        assert_eq!("5".parse::<Rational>().unwrap(), r(5, 1));
        assert!("2/4".parse::<Rational>().is_err());
        assert!("1/0".parse::<Rational>().is_err());
        assert!("1/-3".parse::<Rational>().is_err());
        assert!("a/3".parse::<Rational>().is_err());
        assert_eq!(r(-2, 7).to_string(), "-2/7");
        assert_eq!(r(6, 3).to_string(), "2");
    }

    #[test]
    fn inverses() {
        assert_eq!(mod_inverse(4, 7).unwrap(), 2);
        assert_eq!(mod_inverse(3, 5).unwrap(), 2);
        assert_eq!(mod_inverse(1, 2).unwrap(), 1);
        assert_eq!(mod_inverse(-1, 5).unwrap(), 4);
        assert!(mod_inverse(2, 4).is_err());
    }
}
