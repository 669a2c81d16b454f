use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use crate::{Error, Result};

/// An integer or half-integer, stored doubled.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt(i64);

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt(0);

    pub const fn from_twice(twice: i64) -> Self {
        Self(twice)
    }

    pub const fn int(n: i64) -> Self {
        Self(2 * n)
    }

    pub const fn twice(self) -> i64 {
        self.0
    }

    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    /// The integer value, if integral.
    pub fn as_int(self) -> Option<i64> {
        self.is_integer().then_some(self.0 / 2)
    }

    /// Validate as a spin: `2l ≥ 0`.
    pub fn spin(twice: i64) -> Result<Self> {
        if twice < 0 {
            return Err(Error::InvalidHalfInt(Self(twice).to_string()));
        }
        Ok(Self(twice))
    }

    /// The weights `m = l, l-1, …, -l` of spin `l`.
    pub fn weights(self) -> impl DoubleEndedIterator<Item = HalfInt> + Clone {
        let l = self.0;
        (0..=l).map(move |i| HalfInt(l - 2 * i))
    }

    /// Dimension `2l + 1`.
    pub fn dim(self) -> usize {
        (self.0 + 1) as usize
    }

    /// Row/column index of weight `m` in the `m = l, …, -l` ordering.
    pub fn index_of(self, m: HalfInt) -> Option<usize> {
        let diff = self.0 - m.0;
        (m.0.abs() <= self.0 && diff % 2 == 0).then_some((diff / 2) as usize)
    }

    /// Weight at position `i` of the `m = l, …, -l` ordering.
    pub fn weight_at(self, i: usize) -> HalfInt {
        HalfInt(self.0 - 2 * i as i64)
    }

    /// `m` is a valid weight of spin `self`.
    pub fn admits(self, m: HalfInt) -> bool {
        self.index_of(m).is_some()
    }

    pub fn abs(self) -> Self {
        Self(self.0.abs())
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 + rhs.0)
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 - rhs.0)
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt(-self.0)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 % 2 == 0 {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

/// Accepts `"n"` or `"n/2"`.
impl FromStr for HalfInt {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidHalfInt(s.to_string());
        let t = s.trim();
        match t.split_once('/') {
            None => t.parse::<i64>().map(HalfInt::int).map_err(|_| bad()),
            Some((n, "2")) => n.trim().parse::<i64>().map(HalfInt).map_err(|_| bad()),
            Some(_) => Err(bad()),
        }
    }
}

impl serde::Serialize for HalfInt {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        assert_eq!("3/2".parse::<HalfInt>().unwrap(), HalfInt::from_twice(3));
        assert_eq!("2".parse::<HalfInt>().unwrap(), HalfInt::int(2));
        assert_eq!("4/2".parse::<HalfInt>().unwrap(), HalfInt::int(2));
        assert!("1/3".parse::<HalfInt>().is_err());
        assert!("x".parse::<HalfInt>().is_err());
        assert_eq!(HalfInt::from_twice(-1).to_string(), "-1/2");
        assert_eq!(HalfInt::int(-3).to_string(), "-3");
    }

    #[test]
    fn weights_and_indices() {
        let l = HalfInt::from_twice(3);
        let ws: Vec<_> = l.weights().map(|m| m.to_string()).collect();
        assert_eq!(ws, ["3/2", "1/2", "-1/2", "-3/2"]);
        assert_eq!(l.index_of(HalfInt::from_twice(-1)), Some(2));
        assert_eq!(l.index_of(HalfInt::int(0)), None);
        assert_eq!(l.weight_at(3), HalfInt::from_twice(-3));
        assert!(HalfInt::spin(-1).is_err());
    }
}
