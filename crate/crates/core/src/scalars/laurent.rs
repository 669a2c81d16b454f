use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::{self, Dense};
use super::rational::{fmt_rational, parse_rational};

/// A Laurent polynomial in `t` with exact rational coefficients.
///
/// Stored sparsely as exponent → coefficient; zero coefficients are never
/// stored, so structural equality is value equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn integer(n: i64) -> Self {
        Self::constant(BigRational::from_integer(n.into()))
    }

    /// `c · t^exp`.
    pub fn monomial(c: BigRational, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    /// `t^exp`.
    pub fn t_pow(exp: i64) -> Self {
        Self::monomial(BigRational::one(), exp)
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, BigRational)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (e, c) in iter {
            out.add_term(e, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(One::is_one)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigRational)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> BigRational {
        self.terms.get(&exp).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Coefficient of the highest power of `t`.
    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.terms.values().next_back()
    }

    /// If this is a constant, return it.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    /// If this is a single term `c·t^e`, return `(e, c)`.
    pub fn as_monomial(&self) -> Option<(i64, &BigRational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (*e, c))
        } else {
            None
        }
    }

    fn add_term(&mut self, exp: i64, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    /// Substitute `t → t^k` (k may be negative).
    pub fn substitute_power(&self, k: i64) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, c)| (e * k, c.clone())))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Dense form `(shift, coeffs)` with `self = t^shift · Σ coeffs[i] t^i`
    /// and `coeffs[0] != 0`.
    pub(crate) fn to_dense(&self) -> (i64, Dense) {
        let Some(lo) = self.min_exp() else {
            return (0, Vec::new());
        };
        let hi = self.max_exp().unwrap();
        let mut v = vec![BigRational::zero(); (hi - lo + 1) as usize];
        for (e, c) in &self.terms {
            v[(e - lo) as usize] = c.clone();
        }
        (lo, v)
    }

    pub(crate) fn from_dense(shift: i64, coeffs: &[BigRational]) -> Self {
        Self::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (shift + i as i64, c.clone())),
        )
    }

    /// Exact evaluation at a nonzero rational point.
    pub fn eval_exact(&self, t0: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            acc += c * pow_rational(t0, *e);
        }
        acc
    }

    pub fn eval(&self, t0: f64) -> f64 {
        self.terms
            .iter()
            .map(|(e, c)| super::rational::to_f64(c) * t0.powi(*e as i32))
            .sum()
    }
}

pub(crate) fn pow_rational(x: &BigRational, e: i64) -> BigRational {
    let base = if e < 0 { x.recip() } else { x.clone() };
    num_traits::pow::pow(base, e.unsigned_abs() as usize)
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        if self.terms.len() * rhs.terms.len() > 16 {
            let (sa, da) = self.to_dense();
            let (sb, db) = rhs.to_dense();
            return LaurentPoly::from_dense(sa + sb, &poly::mul(&da, &db));
        }
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($ty:ty, $($tr:ident $m:ident),*) => {$(
        impl $tr for $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty {
                (&self).$m(&rhs)
            }
        }
    )*};
}
pub(crate) use forward_owned;

forward_owned!(LaurentPoly, Add add, Sub sub, Mul mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl From<i64> for LaurentPoly {
    fn from(n: i64) -> Self {
        Self::integer(n)
    }
}

impl From<BigRational> for LaurentPoly {
    fn from(c: BigRational) -> Self {
        Self::constant(c)
    }
}

fn fmt_t_power(e: i64) -> String {
    match e {
        0 => String::new(),
        1 => "t".into(),
        _ => format!("t^{e}"),
    }
}

/// Text form, highest power first: `t^2+t^-2`, `3/2*t-1`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { "-" } else { "+" })?;
            }
            let tp = fmt_t_power(*e);
            match (abs.is_one(), tp.is_empty()) {
                (_, true) => write!(f, "{}", fmt_rational(&abs))?,
                (true, false) => write!(f, "{tp}")?,
                (false, false) => write!(f, "{}*{tp}", fmt_rational(&abs))?,
            }
        }
        Ok(())
    }
}

/// Canonical JSON form: an object mapping the exponent (as a decimal string)
/// to the exact coefficient (as `"p/q"` or `"p"`), in increasing exponent
/// order.
impl serde::Serialize for LaurentPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = s.serialize_map(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            map.serialize_entry(&e.to_string(), &fmt_rational(c))?;
        }
        map.end()
    }
}

impl<'de> serde::Deserialize<'de> for LaurentPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = BTreeMap::<String, String>::deserialize(d)?;
        let mut out = LaurentPoly::zero();
        for (k, v) in raw {
            let e: i64 = k
                .parse()
                .map_err(|_| D::Error::custom(format!("bad exponent `{k}`")))?;
            let c = parse_rational(&v)
                .ok_or_else(|| D::Error::custom(format!("bad rational `{v}`")))?;
            out.add_term(e, c);
        }
        Ok(out)
    }
}

impl From<BigInt> for LaurentPoly {
    fn from(n: BigInt) -> Self {
        Self::constant(BigRational::from_integer(n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn no_zero_coefficients_after_cancellation() {
        let a = &LaurentPoly::t_pow(2) + &LaurentPoly::t_pow(-2);
        let b = &a - &LaurentPoly::t_pow(2);
        assert_eq!(b, LaurentPoly::t_pow(-2));
        assert_eq!(b.len(), 1);
        assert!((&b - &b).is_zero());
    }

    #[test]
    fn display_forms() {
        let half = BigRational::new(3.into(), 2.into());
        let p = LaurentPoly::from_terms([(2, BigRational::one()), (-2, BigRational::one())]);
        assert_eq!(p.to_string(), "t^2+t^-2");
        let q = LaurentPoly::from_terms([(1, half), (0, -BigRational::one())]);
        assert_eq!(q.to_string(), "3/2*t-1");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }

    #[test]
    fn json_is_ordered_by_exponent() {
        let p = LaurentPoly::from_terms([
            (10, BigRational::one()),
            (-2, BigRational::new(3.into(), 2.into())),
            (2, BigRational::one()),
        ]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"-2":"3/2","2":"1","10":"1"}"#);
        let back: LaurentPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn eval_matches_exact() {
        let p = LaurentPoly::from_terms([(2, BigRational::one()), (-2, BigRational::one())]);
        let two = BigRational::from_integer(2.into());
        assert_eq!(p.eval_exact(&two), BigRational::new(17.into(), 4.into()));
        assert!((p.eval(2.0) - 4.25).abs() < 1e-15);
    }
}
