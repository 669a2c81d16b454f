use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{AlgebraElement, Monomial, Rewriter};
use crate::scalars::{RadicalScalar, RatFunc};

/// An element of the `N`-fold tensor power of U_t(sl(2)), stored in the
/// basis of tensor products of PBW monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor<const N: usize> {
    terms: BTreeMap<[Monomial; N], RadicalScalar>,
}

/// `U ⊗ U`.
pub type TensorElement = Tensor<2>;

impl<const N: usize> Default for Tensor<N> {
    fn default() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }
}

impl<const N: usize> Tensor<N> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::basis([Monomial::UNIT; N])
    }

    pub fn basis(ms: [Monomial; N]) -> Self {
        let mut out = Self::zero();
        out.add_term(ms, RadicalScalar::one());
        out
    }

    /// `x_1 ⊗ … ⊗ x_N`.
    pub fn pure(xs: [&AlgebraElement; N]) -> Self {
        let mut acc: Vec<([Monomial; N], RadicalScalar)> =
            vec![([Monomial::UNIT; N], RadicalScalar::one())];
        for (slot, x) in xs.iter().enumerate() {
            let mut next = Vec::with_capacity(acc.len() * x.len());
            for (ms, c) in &acc {
                for (m, d) in x.terms() {
                    let mut ms = *ms;
                    ms[slot] = *m;
                    next.push((ms, c * d));
                }
            }
            acc = next;
        }
        Self::from_terms(acc)
    }

    pub fn from_terms<I: IntoIterator<Item = ([Monomial; N], RadicalScalar)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (ms, c) in iter {
            out.add_term(ms, c);
        }
        out
    }

    pub(crate) fn add_term(&mut self, ms: [Monomial; N], c: RadicalScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&ms) {
            Some(slot) => {
                *slot = &*slot + &c;
                if slot.is_zero() {
                    self.terms.remove(&ms);
                }
            }
            None => {
                self.terms.insert(ms, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[Monomial; N], &RadicalScalar)> {
        self.terms.iter()
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

    pub fn scale(&self, c: &RadicalScalar) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, x)| (*m, x * c)))
    }

    /// Apply a linear map to each basis tensor and sum the results.
    pub fn contract<F>(&self, mut f: F) -> AlgebraElement
    where
        F: FnMut(&[Monomial; N]) -> AlgebraElement,
    {
        let mut out = AlgebraElement::zero();
        for (ms, c) in &self.terms {
            out = &out + &f(ms).scale(c);
        }
        out
    }

    pub(crate) fn mul_with(&self, rhs: &Self, rw: &mut Rewriter) -> Self {
        let mut out = Self::zero();
        for (xa, ca) in &self.terms {
            for (xb, cb) in &rhs.terms {
                let c = ca * cb;
                let mut acc: Vec<([Monomial; N], RatFunc)> =
                    vec![([Monomial::UNIT; N], RatFunc::one())];
                for slot in 0..N {
                    let prods = rw.mul_monomials(xa[slot], xb[slot]);
                    let mut next = Vec::with_capacity(acc.len() * prods.len());
                    for (ms, r) in &acc {
                        for (m, s) in &prods {
                            let mut ms = *ms;
                            ms[slot] = *m;
                            next.push((ms, r * s));
                        }
                    }
                    acc = next;
                }
                for (ms, r) in acc {
                    out.add_term(ms, c.scale(&r));
                }
            }
        }
        out
    }
}

impl<const N: usize> Add for &Tensor<N> {
    type Output = Tensor<N>;
    fn add(self, rhs: &Tensor<N>) -> Tensor<N> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl<const N: usize> Add for Tensor<N> {
    type Output = Tensor<N>;
    fn add(self, rhs: Tensor<N>) -> Tensor<N> {
        &self + &rhs
    }
}

impl<const N: usize> Sub for &Tensor<N> {
    type Output = Tensor<N>;
    fn sub(self, rhs: &Tensor<N>) -> Tensor<N> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl<const N: usize> Neg for &Tensor<N> {
    type Output = Tensor<N>;
    fn neg(self) -> Tensor<N> {
        Tensor {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl<const N: usize> Mul for &Tensor<N> {
    type Output = Tensor<N>;
    fn mul(self, rhs: &Tensor<N>) -> Tensor<N> {
        self.mul_with(rhs, &mut Rewriter::default())
    }
}

/// `c * (m1) ⊗ (m2)` terms joined by ` + `, in decreasing order.
impl<const N: usize> fmt::Display for Tensor<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (ms, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let factors: Vec<String> = ms.iter().map(|m| format!("({m})")).collect();
            write!(f, "({c}) * {}", factors.join(" ⊗ "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn componentwise_product() {
        let a = Tensor::pure([&AlgebraElement::k(), &AlgebraElement::f()]);
        let b = Tensor::pure([&AlgebraElement::e(), &AlgebraElement::k_inv()]);
        let ab = &a * &b;
        let expect = Tensor::pure([
            &(&AlgebraElement::k() * &AlgebraElement::e()),
            &(&AlgebraElement::f() * &AlgebraElement::k_inv()),
        ]);
        assert_eq!(ab, expect);
        assert_eq!(&Tensor::<2>::one() * &ab, ab);
    }
}
