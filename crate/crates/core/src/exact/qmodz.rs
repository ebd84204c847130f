use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Rational64;

use super::{Cyclotomic, Rational};
use crate::error::{Error, Result};

/// A root of unity written additively: a rational in `[0, 1)` taken modulo 1.
///
/// `a/b` stands for `exp(2πi·a/b)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QmodZ(Rational64);

impl QmodZ {
    pub const ZERO: QmodZ = QmodZ(Rational64::new_raw(0, 1));

    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        let (num, den) = if den < 0 { (-num, -den) } else { (num, den) };
        QmodZ(Rational64::new(num.rem_euclid(den), den))
    }

    pub fn from_ratio(r: Rational64) -> Self {
        Self::new(*r.numer(), *r.denom())
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }

    pub fn value(&self) -> Rational64 {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.numer() == 0
    }

    /// `k·self`.
    pub fn times(&self, k: i64) -> Self {
        let d = self.denom();
        let n = (self.numer() as i128 * k as i128).rem_euclid(d as i128) as i64;
        Self::new(n, d)
    }

    /// One solution `x` of `d·x = self`, namely `self/d`.
    pub fn divide(&self, d: i64) -> Self {
        assert!(d != 0, "division by zero in QmodZ");
        Self::new(self.numer(), self.denom().checked_mul(d).expect("QmodZ overflow"))
    }

    /// Order of the root of unity (the reduced denominator).
    pub fn order(&self) -> i64 {
        self.denom()
    }

    pub fn to_cyclotomic(&self) -> Cyclotomic {
        Cyclotomic::zeta(self.denom() as u64, self.numer())
    }

    pub fn to_rational(&self) -> Rational {
        Rational::new(BigInt::from(self.numer()), BigInt::from(self.denom()))
    }
}

impl Default for QmodZ {
    fn default() -> Self {
        QmodZ::ZERO
    }
}

impl Add for QmodZ {
    type Output = QmodZ;
    fn add(self, rhs: QmodZ) -> QmodZ {
        let l = self.denom().lcm(&rhs.denom());
        let n = self.numer() * (l / self.denom()) + rhs.numer() * (l / rhs.denom());
        QmodZ::new(n, l)
    }
}

impl AddAssign for QmodZ {
    fn add_assign(&mut self, rhs: QmodZ) {
        *self = *self + rhs;
    }
}

impl Neg for QmodZ {
    type Output = QmodZ;
    fn neg(self) -> QmodZ {
        QmodZ::new(-self.numer(), self.denom())
    }
}

impl Sub for QmodZ {
    type Output = QmodZ;
    fn sub(self, rhs: QmodZ) -> QmodZ {
        self + (-rhs)
    }
}

impl std::iter::Sum for QmodZ {
    fn sum<I: Iterator<Item = QmodZ>>(iter: I) -> Self {
        iter.fold(QmodZ::ZERO, |a, b| a + b)
    }
}

impl fmt::Display for QmodZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

impl FromStr for QmodZ {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidInput(format!("bad QmodZ value {s:?}"));
        let s = s.trim();
        match s.split_once('/') {
            Some((n, d)) => {
                let n: i64 = n.trim().parse().map_err(|_| bad())?;
                let d: i64 = d.trim().parse().map_err(|_| bad())?;
                if d == 0 {
                    return Err(bad());
                }
                Ok(QmodZ::new(n, d))
            }
            None => {
                let n: i64 = s.parse().map_err(|_| bad())?;
                Ok(QmodZ::new(n, 1))
            }
        }
    }
}

impl serde::Serialize for QmodZ {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for QmodZ {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wraps_modulo_one() {
        assert_eq!(QmodZ::new(3, 4) + QmodZ::new(1, 2), QmodZ::new(1, 4));
        assert_eq!(QmodZ::new(-1, 3), QmodZ::new(2, 3));
        assert_eq!(QmodZ::new(5, 5), QmodZ::ZERO);
        assert_eq!(-QmodZ::new(1, 4), QmodZ::new(3, 4));
        assert_eq!(QmodZ::new(1, 3).times(3), QmodZ::ZERO);
    }

    #[test]
    fn to_cyclotomic_values() {
        assert_eq!(QmodZ::ZERO.to_cyclotomic(), Cyclotomic::one());
        assert_eq!(QmodZ::new(1, 2).to_cyclotomic(), Cyclotomic::from_int(-1));
        assert_eq!(QmodZ::new(1, 4).to_cyclotomic(), Cyclotomic::zeta(4, 1));
    }

    #[test]
    fn parse_and_print() {
        assert_eq!("3/4".parse::<QmodZ>().unwrap(), QmodZ::new(3, 4));
        assert_eq!("7/4".parse::<QmodZ>().unwrap(), QmodZ::new(3, 4));
        assert_eq!("0".parse::<QmodZ>().unwrap(), QmodZ::ZERO);
        assert_eq!(QmodZ::new(1, 2).to_string(), "1/2");
        assert!("1/0".parse::<QmodZ>().is_err());
    }
}
