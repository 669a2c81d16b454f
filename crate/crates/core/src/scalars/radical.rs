use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed};

use super::laurent::{forward_owned, LaurentPoly};
use super::poly;
use super::ratfunc::RatFunc;
use crate::{Error, Result};

/// One summand `coeff · √radicand`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RadicalTerm {
    pub coeff: RatFunc,
    pub radicand: LaurentPoly,
}

/// An element of ℚ(t) extended by square roots: `Σ coeff_i · √radicand_i`.
///
/// Each radicand is a canonical squarefree representative
/// `n · t^e · P(t)` with `n` a squarefree positive integer, `e ∈ {0, 1}` and
/// `P` a primitive squarefree integer polynomial with `P(0) ≠ 0` and positive
/// leading coefficient. `√` denotes the branch that is positive for large
/// `t`, so every sign lives in the coefficient. Terms are sorted by radicand
/// and radicands are pairwise distinct; distinct canonical radicands are
/// linearly independent over ℚ(t), which makes the zero test structural.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RadicalScalar {
    terms: Vec<RadicalTerm>,
}

const TRIAL_DIVISION_LIMIT: u64 = 100_000;

/// `m = s² · r` with `r` squarefree (for factors below the trial limit).
fn split_square_int(m: &BigInt) -> (BigInt, BigInt) {
    let mut rest = m.clone();
    let mut sq = BigInt::one();
    let mut free = BigInt::one();
    let mut d = 2u64;
    while d <= TRIAL_DIVISION_LIMIT {
        let dd = BigInt::from(d);
        if &dd * &dd > rest {
            break;
        }
        let mut count = 0;
        while rest.is_multiple_of(&dd) {
            rest /= &dd;
            count += 1;
        }
        for _ in 0..count / 2 {
            sq *= &dd;
        }
        if count % 2 == 1 {
            free *= &dd;
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if rest > BigInt::one() {
        let r = rest.sqrt();
        if &r * &r == rest {
            sq *= r;
        } else {
            free *= rest;
        }
    }
    (sq, free)
}

/// Write a nonzero Laurent polynomial as `coeff² · radicand` with canonical
/// radicand; returns `(coeff, radicand)`.
fn sqrt_parts(p: &LaurentPoly) -> Result<(RatFunc, LaurentPoly)> {
    let (shift, dense) = p.to_dense();
    let half = shift.div_euclid(2);
    let odd = shift.rem_euclid(2);
    let (mut content, prim) = poly::primitive_part(&dense);
    if content.is_negative() {
        return Err(Error::NegativeRadicand);
    }
    let (square, free_poly) = if poly::is_constant(&prim) {
        (vec![BigRational::one()], prim)
    } else {
        let factors = poly::squarefree_decomposition(&prim);
        let mut q = vec![BigRational::one()];
        for (i, a) in factors.iter().enumerate() {
            for _ in 0..i.div_ceil(2) {
                q = poly::mul(&q, a);
            }
        }
        let rest = poly::div_exact(&prim, &poly::mul(&q, &q));
        let (c2, free_poly) = poly::primitive_part(&rest);
        content *= c2;
        (q, free_poly)
    };
    let ab = content.numer() * content.denom();
    let (sq, free_int) = split_square_int(&ab);
    let coeff_const = BigRational::new(sq, content.denom().clone());
    let coeff = LaurentPoly::from_dense(half, &square).scale(&coeff_const);
    let radicand = LaurentPoly::from_dense(odd, &free_poly)
        .scale(&BigRational::from_integer(free_int));
    Ok((RatFunc::from_poly(coeff), radicand))
}

impl RadicalScalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from(RatFunc::one())
    }

    pub fn integer(n: i64) -> Self {
        Self::from(RatFunc::integer(n))
    }

    pub fn t_pow(e: i64) -> Self {
        Self::from(RatFunc::t_pow(e))
    }

    /// The positive (for large t) square root of a rational function.
    pub fn sqrt(r: &RatFunc) -> Result<Self> {
        if r.is_zero() {
            return Ok(Self::zero());
        }
        // √(n/d) = √(n·d) / d
        let (c, radicand) = sqrt_parts(&(r.numer() * r.denom()))?;
        let coeff = c.checked_div(&RatFunc::from_poly(r.denom().clone()))?;
        Ok(Self::from_terms([(coeff, radicand)]))
    }

    /// Build from raw `(coeff, radicand)` pairs, canonicalizing each radicand.
    pub fn from_raw<I: IntoIterator<Item = (RatFunc, RatFunc)>>(iter: I) -> Result<Self> {
        let mut acc = Self::zero();
        for (c, r) in iter {
            acc = &acc + &(&Self::sqrt(&r)? * &Self::from(c));
        }
        Ok(acc)
    }

    /// Assumes each radicand is already canonical; merges like terms.
    fn from_terms<I: IntoIterator<Item = (RatFunc, LaurentPoly)>>(iter: I) -> Self {
        let mut map: BTreeMap<LaurentPoly, RatFunc> = BTreeMap::new();
        for (c, r) in iter {
            if c.is_zero() {
                continue;
            }
            match map.get_mut(&r) {
                Some(acc) => *acc = &*acc + &c,
                None => {
                    map.insert(r, c);
                }
            }
        }
        Self {
            terms: map
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(radicand, coeff)| RadicalTerm { coeff, radicand })
                .collect(),
        }
    }

    /// Restore every invariant (used after deserialization or on
    /// hand-assembled input). Idempotent.
    pub fn canonicalize(&self) -> Result<Self> {
        Self::from_raw(
            self.terms
                .iter()
                .map(|t| (t.coeff.clone(), RatFunc::from_poly(t.radicand.clone()))),
        )
    }

    pub fn terms(&self) -> &[RadicalTerm] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_rational().is_some_and(|r| r.is_one())
    }

    /// The value as a rational function if no radical is involved.
    pub fn as_rational(&self) -> Option<RatFunc> {
        match self.terms.as_slice() {
            [] => Some(RatFunc::zero()),
            [t] if t.radicand.is_one() => Some(t.coeff.clone()),
            _ => None,
        }
    }

    pub fn is_single_term(&self) -> bool {
        self.terms.len() == 1
    }

    /// Single term with a coefficient that is negative for large t.
    pub fn is_negative(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].coeff.is_negative()
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|t| RadicalTerm {
                    coeff: &t.coeff * c,
                    radicand: t.radicand.clone(),
                })
                .collect(),
        }
    }

    /// Inverse of a nonzero single-term value: `1/(c√R) = √R / (c·R)`.
    pub fn inv(&self) -> Result<Self> {
        match self.terms.as_slice() {
            [t] => {
                let r = RatFunc::from_poly(t.radicand.clone());
                let coeff = RatFunc::one().checked_div(&(&t.coeff * &r))?;
                Ok(Self {
                    terms: vec![RadicalTerm {
                        coeff,
                        radicand: t.radicand.clone(),
                    }],
                })
            }
            _ => Err(Error::UnsupportedInverse),
        }
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, n: i64) -> Result<Self> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..n.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Exact-then-float evaluation with the positive square-root branch.
    pub fn evaluate_exact(&self, t0: &BigRational) -> Result<f64> {
        let mut acc = 0.0;
        for t in &self.terms {
            let c = t.coeff.eval_exact(t0)?;
            let r = t.radicand.eval_exact(t0);
            if r.is_negative() {
                return Err(Error::DomainError(super::rational::fmt_rational(t0)));
            }
            acc += super::rational::to_f64(&c) * super::rational::to_f64(&r).sqrt();
        }
        Ok(acc)
    }

    fn term_text(t: &RadicalTerm) -> String {
        if t.radicand.is_one() {
            return t.coeff.to_string();
        }
        if t.coeff.is_one() {
            format!("sqrt({})", t.radicand)
        } else if t.coeff.is_atomic() {
            format!("{}*sqrt({})", t.coeff, t.radicand)
        } else {
            format!("({})*sqrt({})", t.coeff, t.radicand)
        }
    }

    /// True when the text form needs no parentheses as a factor.
    pub fn is_atomic(&self) -> bool {
        match self.terms.as_slice() {
            [] => true,
            [t] => t.coeff.is_atomic(),
            _ => false,
        }
    }
}

impl Add for &RadicalScalar {
    type Output = RadicalScalar;
    fn add(self, rhs: &RadicalScalar) -> RadicalScalar {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        RadicalScalar::from_terms(
            self.terms
                .iter()
                .chain(rhs.terms.iter())
                .map(|t| (t.coeff.clone(), t.radicand.clone())),
        )
    }
}

impl Sub for &RadicalScalar {
    type Output = RadicalScalar;
    fn sub(self, rhs: &RadicalScalar) -> RadicalScalar {
        self + &(-rhs)
    }
}

impl Neg for &RadicalScalar {
    type Output = RadicalScalar;
    fn neg(self) -> RadicalScalar {
        RadicalScalar {
            terms: self
                .terms
                .iter()
                .map(|t| RadicalTerm {
                    coeff: -&t.coeff,
                    radicand: t.radicand.clone(),
                })
                .collect(),
        }
    }
}

fn mul_radicands(r1: &LaurentPoly, r2: &LaurentPoly) -> (RatFunc, LaurentPoly) {
    if r1.is_one() {
        return (RatFunc::one(), r2.clone());
    }
    if r2.is_one() {
        return (RatFunc::one(), r1.clone());
    }
    if r1 == r2 {
        return (RatFunc::from_poly(r1.clone()), LaurentPoly::one());
    }
    // Products of canonical radicands have positive leading coefficient.
    sqrt_parts(&(r1 * r2)).expect("product of canonical radicands is positive")
}

impl Mul for &RadicalScalar {
    type Output = RadicalScalar;
    fn mul(self, rhs: &RadicalScalar) -> RadicalScalar {
        if self.is_zero() || rhs.is_zero() {
            return RadicalScalar::zero();
        }
        let mut out = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for a in &self.terms {
            for b in &rhs.terms {
                let (extra, radicand) = mul_radicands(&a.radicand, &b.radicand);
                let mut coeff = &a.coeff * &b.coeff;
                if !extra.is_one() {
                    coeff = &coeff * &extra;
                }
                out.push((coeff, radicand));
            }
        }
        RadicalScalar::from_terms(out)
    }
}

forward_owned!(RadicalScalar, Add add, Sub sub, Mul mul);

impl Neg for RadicalScalar {
    type Output = RadicalScalar;
    fn neg(self) -> RadicalScalar {
        -&self
    }
}

impl From<RatFunc> for RadicalScalar {
    fn from(c: RatFunc) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: vec![RadicalTerm {
                coeff: c,
                radicand: LaurentPoly::one(),
            }],
        }
    }
}

impl From<LaurentPoly> for RadicalScalar {
    fn from(p: LaurentPoly) -> Self {
        Self::from(RatFunc::from_poly(p))
    }
}

impl From<i64> for RadicalScalar {
    fn from(n: i64) -> Self {
        Self::integer(n)
    }
}

impl fmt::Display for RadicalScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            let text = Self::term_text(t);
            if i == 0 {
                write!(f, "{text}")?;
            } else if let Some(rest) = text.strip_prefix('-') {
                write!(f, " - {rest}")?;
            } else {
                write!(f, " + {text}")?;
            }
        }
        Ok(())
    }
}

/// Canonical JSON: a list of `{"coeff": RatFunc, "radicand": RatFunc}`
/// sorted by radicand; zero is the empty list and a pure rational value has
/// the single radicand `{"num": {"0": "1"}, "den": {"0": "1"}}`.
impl serde::Serialize for RadicalScalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        #[derive(serde::Serialize)]
        struct Term<'a> {
            coeff: &'a RatFunc,
            radicand: RatFunc,
        }
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for t in &self.terms {
            seq.serialize_element(&Term {
                coeff: &t.coeff,
                radicand: RatFunc::from_poly(t.radicand.clone()),
            })?;
        }
        seq.end()
    }
}

impl<'de> serde::Deserialize<'de> for RadicalScalar {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(serde::Deserialize)]
        struct Term {
            coeff: RatFunc,
            radicand: RatFunc,
        }
        let raw = Vec::<Term>::deserialize(d)?;
        RadicalScalar::from_raw(raw.into_iter().map(|t| (t.coeff, t.radicand)))
            .map_err(serde::de::Error::custom)
    }
}
