//! The irreducible representations `π^l` of U_t(sl(2)) on `V^l`, in the
//! weight basis `e_m`, `m = l, l-1, …, -l`:
//!
//! ```text
//! π(e) e_m = √([l-m][l+m+1]) e_{m+1}
//! π(f) e_m = √([l+m][l-m+1]) e_{m-1}
//! π(k^{±1}) e_m = t^{±2m} e_m
//! ```
//!
//! Tensor products act through the coproduct.

mod matrix;

use std::collections::HashMap;
use std::fmt;

use crate::scalars::{qint, HalfInt, LaurentPoly, RadicalScalar, RatFunc};
use crate::uqsl2::{coproduct, AlgebraElement, Monomial};
use crate::{Error, Result};

pub use matrix::Matrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    E,
    F,
    K,
    KInv,
}

impl Generator {
    pub const ALL: [Generator; 4] = [Generator::E, Generator::F, Generator::K, Generator::KInv];

    pub fn element(self) -> AlgebraElement {
        match self {
            Generator::E => AlgebraElement::e(),
            Generator::F => AlgebraElement::f(),
            Generator::K => AlgebraElement::k(),
            Generator::KInv => AlgebraElement::k_inv(),
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Generator::E => "e",
            Generator::F => "f",
            Generator::K => "k",
            Generator::KInv => "k^-1",
        };
        write!(f, "{s}")
    }
}

/// `π^l(x)` with rows and columns indexed by `m = l, …, -l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepMatrix {
    pub spin: HalfInt,
    pub matrix: Matrix,
}

impl RepMatrix {
    /// Entry `(m, n)` by weight; zero outside the weight range.
    pub fn entry(&self, m: HalfInt, n: HalfInt) -> RadicalScalar {
        match (self.spin.index_of(m), self.spin.index_of(n)) {
            (Some(i), Some(j)) => self.matrix.get(i, j).clone(),
            _ => RadicalScalar::zero(),
        }
    }
}

impl serde::Serialize for RepMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("RepMatrix", 2)?;
        st.serialize_field("l", &self.spin)?;
        st.serialize_field("rows", &self.matrix)?;
        st.end()
    }
}

/// `(π^k ⊗ π^l)(Δx)`, indexed by weight pairs `(p, n)` with `p` major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorRepMatrix {
    pub spins: (HalfInt, HalfInt),
    pub matrix: Matrix,
}

impl TensorRepMatrix {
    pub fn index_of(&self, p: HalfInt, n: HalfInt) -> Option<usize> {
        tensor_index(self.spins.0, self.spins.1, p, n)
    }
}

/// Position of `e_p ⊗ e_n` in `V^k ⊗ V^l`.
pub fn tensor_index(k: HalfInt, l: HalfInt, p: HalfInt, n: HalfInt) -> Option<usize> {
    Some(k.index_of(p)? * l.dim() + l.index_of(n)?)
}

impl serde::Serialize for TensorRepMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("TensorRepMatrix", 3)?;
        st.serialize_field("k", &self.spins.0)?;
        st.serialize_field("l", &self.spins.1)?;
        st.serialize_field("rows", &self.matrix)?;
        st.end()
    }
}

fn check_spin(l: HalfInt) -> Result<()> {
    if l.twice() < 0 {
        return Err(Error::InvalidHalfInt(l.to_string()));
    }
    Ok(())
}

/// `[l-m][l+m+1]` with `m` given doubled.
fn raise_factor(l2: i64, m2: i64) -> LaurentPoly {
    &qint((l2 - m2) / 2) * &qint((l2 + m2) / 2 + 1)
}

/// `[l+m][l-m+1]` with `m` given doubled.
fn lower_factor(l2: i64, m2: i64) -> LaurentPoly {
    &qint((l2 + m2) / 2) * &qint((l2 - m2) / 2 + 1)
}

/// Matrix of a single monomial, built column by column: `e^a f^b k^c`
/// sends `e_n` to `t^{2cn} √(Π ladder factors) e_{n-b+a}`.
fn monomial_matrix(l: HalfInt, mono: Monomial) -> Matrix {
    let l2 = l.twice();
    let dim = l.dim();
    let mut out = Matrix::zeros(dim, dim);
    for j in 0..dim {
        let n2 = l.weight_at(j).twice();
        let mut w = n2;
        let mut prod = LaurentPoly::one();
        for _ in 0..mono.b {
            prod = &prod * &lower_factor(l2, w);
            w -= 2;
        }
        for _ in 0..mono.a {
            prod = &prod * &raise_factor(l2, w);
            w += 2;
        }
        if prod.is_zero() || w.abs() > l2 {
            continue;
        }
        let root = RadicalScalar::sqrt(&RatFunc::from_poly(prod))
            .expect("products of q-integers are positive");
        let i = l.index_of(HalfInt::from_twice(w)).expect("weight in range");
        out.set(i, j, root.scale(&RatFunc::t_pow(mono.c as i64 * n2)));
    }
    out
}

/// `π^l(g)` for a generator.
pub fn generator_matrix(l: HalfInt, g: Generator) -> Result<RepMatrix> {
    check_spin(l)?;
    let mono = match g {
        Generator::E => Monomial::new(1, 0, 0),
        Generator::F => Monomial::new(0, 1, 0),
        Generator::K => Monomial::new(0, 0, 1),
        Generator::KInv => Monomial::new(0, 0, -1),
    };
    Ok(RepMatrix {
        spin: l,
        matrix: monomial_matrix(l, mono),
    })
}

/// Memo of monomial matrices for one spin.
#[derive(Default)]
pub(crate) struct RepCache {
    memo: HashMap<(HalfInt, Monomial), Matrix>,
}

impl RepCache {
    pub(crate) fn monomial(&mut self, l: HalfInt, m: Monomial) -> &Matrix {
        self.memo.entry((l, m)).or_insert_with(|| monomial_matrix(l, m))
    }

    pub(crate) fn element(&mut self, l: HalfInt, x: &AlgebraElement) -> Matrix {
        let mut out = Matrix::zeros(l.dim(), l.dim());
        for (m, c) in x.terms() {
            out = &out + &self.monomial(l, *m).scale(c);
        }
        out
    }
}

/// `π^l(x)`, extended multiplicatively and linearly from the generators.
pub fn rep_of_element(l: HalfInt, x: &AlgebraElement) -> Result<RepMatrix> {
    check_spin(l)?;
    Ok(RepMatrix {
        spin: l,
        matrix: RepCache::default().element(l, x),
    })
}

/// `(π^k ⊗ π^l)(Δx)`.
pub fn tensor_rep_of_element(k: HalfInt, l: HalfInt, x: &AlgebraElement) -> Result<TensorRepMatrix> {
    check_spin(k)?;
    check_spin(l)?;
    let mut cache = RepCache::default();
    let dim = k.dim() * l.dim();
    let mut out = Matrix::zeros(dim, dim);
    for ([m1, m2], c) in coproduct(x).terms() {
        let a = cache.monomial(k, *m1).clone();
        let b = cache.monomial(l, *m2);
        if a.is_zero() || b.is_zero() {
            continue;
        }
        out = &out + &a.kron(b).scale(c);
    }
    Ok(TensorRepMatrix {
        spins: (k, l),
        matrix: out,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{qint_rf, t_delta};

    fn half() -> HalfInt {
        HalfInt::from_twice(1)
    }

    #[test]
    fn spin_half_generators() {
        let e = generator_matrix(half(), Generator::E).unwrap();
        assert!(e.entry(half(), -half()).is_one());
        assert!(e.entry(-half(), half()).is_zero());
        let k = generator_matrix(half(), Generator::K).unwrap();
        assert_eq!(k.entry(half(), half()), RadicalScalar::t_pow(1));
        assert_eq!(k.entry(-half(), -half()), RadicalScalar::t_pow(-1));
    }

    #[test]
    fn spin_one_lowering() {
        let one = HalfInt::int(1);
        let f = generator_matrix(one, Generator::F).unwrap();
        let r2 = RadicalScalar::sqrt(&qint_rf(2)).unwrap();
        assert_eq!(f.entry(HalfInt::ZERO, one), r2);
        assert_eq!(f.entry(-one, HalfInt::ZERO), r2);
        assert_eq!(f.matrix.transpose(), generator_matrix(one, Generator::E).unwrap().matrix);
    }

    #[test]
    fn element_examples() {
        let kk = &AlgebraElement::k() * &AlgebraElement::k_inv();
        assert_eq!(rep_of_element(half(), &kk).unwrap().matrix, Matrix::identity(2));
        let comm = AlgebraElement::e().commutator(&AlgebraElement::f());
        let m = rep_of_element(half(), &comm).unwrap();
        assert!(m.entry(half(), half()).is_one());
        assert_eq!(m.entry(-half(), -half()), RadicalScalar::integer(-1));
        let lam = &AlgebraElement::e() * &AlgebraElement::k_inv();
        let one = HalfInt::int(1);
        let m = rep_of_element(one, &lam).unwrap();
        let r2 = RadicalScalar::sqrt(&qint_rf(2)).unwrap();
        assert_eq!(m.entry(one, HalfInt::ZERO), r2);
        assert_eq!(m.entry(HalfInt::ZERO, -one), r2.scale(&RatFunc::t_pow(2)));
    }

    #[test]
    fn commutator_matches_k_bracket() {
        let l = HalfInt::from_twice(3);
        let e = generator_matrix(l, Generator::E).unwrap().matrix;
        let f = generator_matrix(l, Generator::F).unwrap().matrix;
        let k2 = rep_of_element(l, &AlgebraElement::k_pow(2)).unwrap().matrix;
        let km2 = rep_of_element(l, &AlgebraElement::k_pow(-2)).unwrap().matrix;
        let lhs = &(&e * &f) - &(&f * &e);
        let rhs = (&k2 - &km2).scale_rat(&t_delta().recip().unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn tensor_examples() {
        let (k, l) = (half(), HalfInt::int(1));
        let tk = tensor_rep_of_element(k, l, &AlgebraElement::k()).unwrap();
        for p in k.weights() {
            for n in l.weights() {
                let i = tk.index_of(p, n).unwrap();
                assert_eq!(tk.matrix.get(i, i), &RadicalScalar::t_pow((p + n).twice()));
            }
        }
        let t1 = tensor_rep_of_element(k, l, &AlgebraElement::one()).unwrap();
        assert_eq!(t1.matrix, Matrix::identity(6));
        let te = tensor_rep_of_element(half(), half(), &AlgebraElement::e()).unwrap();
        let e = generator_matrix(half(), Generator::E).unwrap().matrix;
        let kk = generator_matrix(half(), Generator::K).unwrap().matrix;
        let ki = generator_matrix(half(), Generator::KInv).unwrap().matrix;
        assert_eq!(te.matrix, &e.kron(&ki) + &kk.kron(&e));
        let h = half();
        let i = te.index_of(h, -h).unwrap();
        let j = te.index_of(-h, -h).unwrap();
        assert_eq!(te.matrix.get(i, j), &RadicalScalar::t_pow(1));
        let i = te.index_of(h, h).unwrap();
        let j = te.index_of(h, -h).unwrap();
        assert_eq!(te.matrix.get(i, j), &RadicalScalar::t_pow(1));
        let j = te.index_of(-h, h).unwrap();
        assert_eq!(te.matrix.get(i, j), &RadicalScalar::t_pow(-1));
    }
}
