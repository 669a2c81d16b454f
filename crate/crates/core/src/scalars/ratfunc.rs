use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::laurent::{forward_owned, LaurentPoly};
use super::poly;
use crate::{Error, Result};

/// A rational function in `t` over ℚ.
///
/// Canonical form: the denominator is an ordinary polynomial with nonzero
/// constant term and leading coefficient 1, coprime to the numerator. The
/// numerator may carry negative powers of `t`. With this representative,
/// equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

impl RatFunc {
    pub fn zero() -> Self {
        Self {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn integer(n: i64) -> Self {
        Self::from_poly(LaurentPoly::integer(n))
    }

    pub fn rational(c: BigRational) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }

    pub fn t_pow(e: i64) -> Self {
        Self::from_poly(LaurentPoly::t_pow(e))
    }

    pub fn from_poly(num: LaurentPoly) -> Self {
        Self {
            num,
            den: LaurentPoly::one(),
        }
    }

    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(num, den))
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_poly(&self) -> bool {
        self.den.is_one()
    }

    /// Sign of the numerator's leading coefficient (the sign for large t).
    pub fn is_negative(&self) -> bool {
        self.num.leading_coeff().is_some_and(Signed::is_negative)
    }

    fn normalize(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (sd, dd) = den.to_dense();
        let lc = dd.last().unwrap().clone();
        let (sn, nd) = num.to_dense();
        let mut nd = nd;
        let mut dd = dd;
        if !lc.is_one() {
            let inv = lc.recip();
            nd = poly::scale(&nd, &inv);
            dd = poly::scale(&dd, &inv);
        }
        if !poly::is_constant(&dd) {
            let g = poly::gcd(&nd, &dd);
            if !poly::is_constant(&g) {
                nd = poly::div_exact(&nd, &g);
                dd = poly::div_exact(&dd, &g);
            }
        }
        Self {
            num: LaurentPoly::from_dense(sn - sd, &nd),
            den: LaurentPoly::from_dense(0, &dd),
        }
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(self.den.clone(), self.num.clone()))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            num: self.num.shift(k),
            den: self.den.clone(),
        }
    }

    pub fn pow(&self, n: i64) -> Result<Self> {
        let base = if n < 0 { self.recip()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..n.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// `self / rhs`, failing on a zero divisor.
    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.recip()?)
    }

    pub fn eval_exact(&self, t0: &BigRational) -> Result<BigRational> {
        if t0.is_zero() {
            return Err(Error::InvalidPoint("0".into()));
        }
        let d = self.den.eval_exact(t0);
        if d.is_zero() {
            return Err(Error::Pole(super::rational::fmt_rational(t0)));
        }
        Ok(self.num.eval_exact(t0) / d)
    }

    pub fn eval(&self, t0: f64) -> f64 {
        self.num.eval(t0) / self.den.eval(t0)
    }

    /// Numerator and denominator multiplied by a common power of `t` so the
    /// denominator is balanced around `t^0`; used for display only.
    fn balanced(&self) -> (LaurentPoly, LaurentPoly) {
        let s = self.den.max_exp().unwrap_or(0) / 2;
        (self.num.shift(-s), self.den.shift(-s))
    }

    /// True when the text form needs no parentheses when used as a factor.
    pub fn is_atomic(&self) -> bool {
        self.den.is_one() && self.num.len() <= 1
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let num = &self.num + &rhs.num;
            if self.den.is_one() {
                return RatFunc::from_poly(num);
            }
            return RatFunc::normalize(num, self.den.clone());
        }
        let (_, d1) = self.den.to_dense();
        let (_, d2) = rhs.den.to_dense();
        let g = poly::gcd(&d1, &d2);
        let c1 = LaurentPoly::from_dense(0, &poly::div_exact(&d2, &g));
        let c2 = LaurentPoly::from_dense(0, &poly::div_exact(&d1, &g));
        let num = &(&self.num * &c1) + &(&rhs.num * &c2);
        let den = &self.den * &c1;
        RatFunc::normalize(num, den)
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc::from_poly(&self.num * &rhs.num);
        }
        RatFunc::normalize(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

/// Panics on a zero divisor; use [`RatFunc::checked_div`] otherwise.
impl Div for &RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self.checked_div(rhs).expect("rational function division by zero")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

forward_owned!(RatFunc, Add add, Sub sub, Mul mul, Div div);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl From<LaurentPoly> for RatFunc {
    fn from(p: LaurentPoly) -> Self {
        Self::from_poly(p)
    }
}

impl From<i64> for RatFunc {
    fn from(n: i64) -> Self {
        Self::integer(n)
    }
}

/// `t^2+t^-2`, or `num/(den)` with the denominator balanced around `t^0`,
/// e.g. `1/(t^2-t^-2)`.
impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let (n, d) = self.balanced();
        if n.len() > 1 {
            write!(f, "({n})/({d})")
        } else {
            write!(f, "{n}/({d})")
        }
    }
}

impl serde::Serialize for RatFunc {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("RatFunc", 2)?;
        st.serialize_field("num", &self.num)?;
        st.serialize_field("den", &self.den)?;
        st.end()
    }
}

impl<'de> serde::Deserialize<'de> for RatFunc {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(serde::Deserialize)]
        struct Raw {
            num: LaurentPoly,
            den: LaurentPoly,
        }
        let raw = Raw::deserialize(d)?;
        RatFunc::new(raw.num, raw.den).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn delta() -> RatFunc {
        // t^2 - t^-2
        RatFunc::from_poly(&LaurentPoly::t_pow(2) - &LaurentPoly::t_pow(-2))
    }

    #[test]
    fn reduces_common_factors() {
        // (t^4 - t^-4) / (t^2 - t^-2) = t^2 + t^-2
        let num = &LaurentPoly::t_pow(4) - &LaurentPoly::t_pow(-4);
        let r = RatFunc::new(num, &LaurentPoly::t_pow(2) - &LaurentPoly::t_pow(-2)).unwrap();
        assert!(r.is_poly());
        assert_eq!(r.numer(), &(&LaurentPoly::t_pow(2) + &LaurentPoly::t_pow(-2)));
    }

    #[test]
    fn inverse_and_display() {
        let inv = delta().recip().unwrap();
        assert_eq!(inv.to_string(), "1/(t^2-t^-2)");
        assert_eq!((&inv * &delta()), RatFunc::one());
        assert_eq!(
            RatFunc::zero().recip().unwrap_err(),
            Error::DivisionByZero
        );
    }

    #[test]
    fn sums_over_distinct_denominators() {
        let a = RatFunc::one().checked_div(&RatFunc::from_poly(&LaurentPoly::t_pow(1) - &LaurentPoly::one())).unwrap();
        let b = RatFunc::one().checked_div(&RatFunc::from_poly(&LaurentPoly::t_pow(1) + &LaurentPoly::one())).unwrap();
        // 1/(t-1) + 1/(t+1) = 2t/(t^2-1)
        let s = &a + &b;
        let expect = RatFunc::new(LaurentPoly::monomial(2.into_rational(), 1), &LaurentPoly::t_pow(2) - &LaurentPoly::one()).unwrap();
        assert_eq!(s, expect);
        assert!((&s - &expect).is_zero());
    }

    #[test]
    fn pole_detection() {
        let inv = delta().recip().unwrap();
        let one = BigRational::one();
        assert!(matches!(inv.eval_exact(&one), Err(Error::Pole(_))));
        let two = BigRational::from_integer(2.into());
        assert_eq!(inv.eval_exact(&two).unwrap(), BigRational::new(4.into(), 15.into()));
    }

    trait IntoRational {
        fn into_rational(self) -> BigRational;
    }
    impl IntoRational for i64 {
        fn into_rational(self) -> BigRational {
            BigRational::from_integer(self.into())
        }
    }
}
