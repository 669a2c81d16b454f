//! The quantum algebra U_t(sl(2)) in PBW normal form.
//!
//! Generators `e, f, k^{±1}` with `k e = t² e k`, `k f = t⁻² f k` and
//! `[e, f] = (k² − k⁻²)/(t² − t⁻²)`. Every element is stored as a finite sum
//! of monomials `e^a f^b k^c`. The Hopf structure follows the convention
//!
//! ```text
//! Δ(k^{±1}) = k^{±1} ⊗ k^{±1}   Δ(e) = e ⊗ k⁻¹ + k ⊗ e   Δ(f) = f ⊗ k⁻¹ + k ⊗ f
//! ε(k^{±1}) = 1   ε(e) = ε(f) = 0
//! S(k) = k⁻¹   S(e) = −t⁻² e   S(f) = −t² f
//! ```
//!
//! Note that `Δ(f)` here is `f ⊗ k⁻¹ + k ⊗ f`, not the `f ⊗ k + k⁻¹ ⊗ f`
//! found in parts of the literature; Clebsch-Gordan tables built on this
//! coproduct differ from such references by the order of tensor factors.

mod hopf;
mod normal;
mod parse;
mod tensor;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::scalars::{RadicalScalar, RatFunc};

pub use hopf::{
    adjoint_action, antipode, bracket_of_k, coproduct, counit, iterated_coproduct, verify_hopf_axioms,
    verify_identity_2_1, Axiom, AxiomCheck, HopfReport,
};
pub use parse::parse_element;
pub use tensor::{Tensor, TensorElement};

pub(crate) use normal::Rewriter;

/// The PBW monomial `e^a f^b k^c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub a: u32,
    pub b: u32,
    pub c: i32,
}

impl Monomial {
    pub const UNIT: Monomial = Monomial { a: 0, b: 0, c: 0 };

    pub const fn new(a: u32, b: u32, c: i32) -> Self {
        Self { a, b, c }
    }

    pub fn is_unit(self) -> bool {
        self == Self::UNIT
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        let mut parts = Vec::new();
        for (name, p) in [("e", self.a as i64), ("f", self.b as i64), ("k", self.c as i64)] {
            match p {
                0 => {}
                1 => parts.push(name.to_string()),
                _ => parts.push(format!("{name}^{p}")),
            }
        }
        write!(f, "{}", parts.join("*"))
    }
}

impl serde::Serialize for Monomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Monomial", 3)?;
        st.serialize_field("a", &self.a)?;
        st.serialize_field("b", &self.b)?;
        st.serialize_field("c", &self.c)?;
        st.end()
    }
}

/// An element of U_t(sl(2)): a finite linear combination of PBW monomials.
///
/// Zero coefficients are never stored, so `==` is exact equality.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AlgebraElement {
    terms: BTreeMap<Monomial, RadicalScalar>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Monomial::UNIT)
    }

    pub fn scalar(c: RadicalScalar) -> Self {
        Self::term(Monomial::UNIT, c)
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, RadicalScalar::one())
    }

    pub fn term(m: Monomial, c: RadicalScalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms }
    }

    pub fn e() -> Self {
        Self::monomial(Monomial::new(1, 0, 0))
    }

    pub fn f() -> Self {
        Self::monomial(Monomial::new(0, 1, 0))
    }

    pub fn k() -> Self {
        Self::k_pow(1)
    }

    pub fn k_inv() -> Self {
        Self::k_pow(-1)
    }

    pub fn k_pow(c: i32) -> Self {
        Self::monomial(Monomial::new(0, 0, c))
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, RadicalScalar)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (m, c) in iter {
            out.add_term(m, c);
        }
        out
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: RadicalScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(slot) => {
                *slot = &*slot + &c;
                if slot.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    /// Terms in increasing `(a, b, c)` order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &RadicalScalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> RadicalScalar {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The scalar value if this is a multiple of the unit.
    pub fn as_scalar(&self) -> Option<RadicalScalar> {
        match self.terms.len() {
            0 => Some(RadicalScalar::zero()),
            1 => self.terms.get(&Monomial::UNIT).cloned(),
            _ => None,
        }
    }

    /// Every coefficient is a plain rational function.
    pub fn has_rational_coeffs(&self) -> bool {
        self.terms.values().all(|c| c.as_rational().is_some())
    }

    pub fn scale(&self, c: &RadicalScalar) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, x)| (*m, x * c)))
    }

    pub fn scale_rat(&self, c: &RatFunc) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, x)| (*m, x.scale(c))).collect(),
        }
    }

    pub(crate) fn mul_with(&self, rhs: &Self, rw: &mut Rewriter) -> Self {
        let mut acc: BTreeMap<Monomial, RadicalScalar> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                let c = c1 * c2;
                for (m, r) in rw.mul_monomials(*m1, *m2) {
                    let v = c.scale(&r);
                    match acc.get_mut(&m) {
                        Some(slot) => *slot = &*slot + &v,
                        None => {
                            acc.insert(m, v);
                        }
                    }
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Self { terms: acc }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut rw = Rewriter::default();
        let mut acc = Self::one();
        for _ in 0..n {
            acc = acc.mul_with(self, &mut rw);
        }
        acc
    }

    /// `xy − yx`.
    pub fn commutator(&self, rhs: &Self) -> Self {
        &(self * rhs) - &(rhs * self)
    }

    /// Inverse for the invertible elements reachable by the parser: nonzero
    /// single-radical scalars times a power of `k`.
    pub fn inverse(&self) -> Option<Self> {
        let (m, c) = match self.terms.iter().collect::<Vec<_>>().as_slice() {
            [(m, c)] => (**m, *c),
            _ => return None,
        };
        if m.a != 0 || m.b != 0 {
            return None;
        }
        let inv = c.inv().ok()?;
        Some(Self::term(Monomial::new(0, 0, -m.c), inv))
    }
}

impl Add for &AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        AlgebraElement {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Mul for &AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.mul_with(rhs, &mut Rewriter::default())
    }
}

crate::scalars::forward_owned!(AlgebraElement, Add add, Sub sub, Mul mul);

impl Neg for AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        -&self
    }
}

impl From<RadicalScalar> for AlgebraElement {
    fn from(c: RadicalScalar) -> Self {
        Self::scalar(c)
    }
}

impl From<Monomial> for AlgebraElement {
    fn from(m: Monomial) -> Self {
        Self::monomial(m)
    }
}

/// Canonical text form: monomials in decreasing `(a, b, c)` order, signs
/// pulled out of single-term coefficients, compound coefficients in
/// parentheses. The output parses back to the same element.
impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            let body = if m.is_unit() {
                if abs.is_atomic() {
                    abs.to_string()
                } else {
                    format!("({abs})")
                }
            } else if abs.is_one() {
                m.to_string()
            } else if abs.is_atomic() {
                format!("{abs} * {m}")
            } else {
                format!("({abs})*{m}")
            };
            match (i, neg) {
                (0, true) => write!(f, "-{body}")?,
                (0, false) => write!(f, "{body}")?,
                (_, true) => write!(f, " - {body}")?,
                (_, false) => write!(f, " + {body}")?,
            }
        }
        Ok(())
    }
}

/// JSON: list of `{"monomial": {"a","b","c"}, "coeff": RadicalScalar}` in the
/// same order as the text form.
impl serde::Serialize for AlgebraElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        #[derive(serde::Serialize)]
        struct Term<'a> {
            monomial: &'a Monomial,
            coeff: &'a RadicalScalar,
        }
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (m, c) in self.terms.iter().rev() {
            seq.serialize_element(&Term { monomial: m, coeff: c })?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::t_delta;

    #[test]
    fn k_e_reorders() {
        let ke = &AlgebraElement::k() * &AlgebraElement::e();
        assert_eq!(ke, AlgebraElement::term(Monomial::new(1, 0, 1), RadicalScalar::t_pow(2)));
        assert_eq!(ke.to_string(), "t^2 * e*k");
    }

    #[test]
    fn f_e_commutation() {
        let fe = &AlgebraElement::f() * &AlgebraElement::e();
        let inv = RadicalScalar::from(t_delta().recip().unwrap());
        let expect = AlgebraElement::from_terms([
            (Monomial::new(1, 1, 0), RadicalScalar::one()),
            (Monomial::new(0, 0, 2), -&inv),
            (Monomial::new(0, 0, -2), inv),
        ]);
        assert_eq!(fe, expect);
        let comm = &fe - &(&AlgebraElement::e() * &AlgebraElement::f());
        assert_eq!(
            comm.to_string(),
            "-(1/(t^2-t^-2))*k^2 + (1/(t^2-t^-2))*k^-2"
        );
    }

    #[test]
    fn unit_law_and_inverse_k() {
        let x = &(&AlgebraElement::e() * &AlgebraElement::f()) + &AlgebraElement::k_pow(-3);
        assert_eq!(&AlgebraElement::one() * &x, x);
        assert_eq!(&x * &AlgebraElement::one(), x);
        assert_eq!(&AlgebraElement::k() * &AlgebraElement::k_inv(), AlgebraElement::one());
    }

    #[test]
    fn display_of_unit_and_zero() {
        assert_eq!(AlgebraElement::zero().to_string(), "0");
        assert_eq!(AlgebraElement::one().to_string(), "1");
        assert_eq!(AlgebraElement::k_inv().to_string(), "k^-1");
        let x = AlgebraElement::scalar(RadicalScalar::integer(-3));
        assert_eq!(x.to_string(), "-3");
    }
}
