use std::collections::BTreeMap;

use crate::rep::{tensor_index, tensor_rep_of_element, Matrix, RepCache};
use crate::scalars::{HalfInt, RadicalScalar};
use crate::uqsl2::{antipode, coproduct, counit, iterated_coproduct, AlgebraElement};
use crate::{Error, Result};

use super::orbit::adjoint_orbit;

/// A tensor operator `T: V^l → Hom(V^w, V^j)` given by its components
/// `T_m = T(e_m)`, each a `(2j+1) × (2w+1)` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorOperator {
    pub carrier: HalfInt,
    pub source: HalfInt,
    pub target: HalfInt,
    pub components: BTreeMap<HalfInt, Matrix>,
}

impl TensorOperator {
    pub fn component(&self, m: HalfInt) -> &Matrix {
        &self.components[&m]
    }

    pub fn zero(carrier: HalfInt, source: HalfInt, target: HalfInt) -> Self {
        let components = carrier
            .weights()
            .map(|m| (m, Matrix::zeros(target.dim(), source.dim())))
            .collect();
        Self {
            carrier,
            source,
            target,
            components,
        }
    }

    pub fn scale(&self, c: &RadicalScalar) -> Self {
        Self {
            components: self.components.iter().map(|(m, x)| (*m, x.scale(c))).collect(),
            ..self.clone()
        }
    }

    fn validate(&self) -> Result<()> {
        for m in self.carrier.weights() {
            let x = self
                .components
                .get(&m)
                .ok_or_else(|| Error::Dimension(format!("missing component m = {m}")))?;
            if x.rows() != self.target.dim() || x.cols() != self.source.dim() {
                return Err(Error::Dimension(format!(
                    "component m = {m} is {}x{}, expected {}x{}",
                    x.rows(),
                    x.cols(),
                    self.target.dim(),
                    self.source.dim()
                )));
            }
        }
        if self.components.len() != self.carrier.dim() {
            return Err(Error::Dimension("extra components".into()));
        }
        Ok(())
    }
}

/// `m ↦ π^j(λ_m^l)`, the representation restricted to the adjoint orbit.
pub fn tensor_operator_from_rep(l: i64, j: HalfInt) -> Result<TensorOperator> {
    let basis = adjoint_orbit(l)?;
    let mut cache = RepCache::default();
    let mut components = BTreeMap::new();
    for (m, mu) in &basis.unnormalized {
        let mi = m.as_int().expect("integer weight");
        let x = cache.element(j, mu).scale(&super::orbit::orbit_prefactor(l, mi));
        components.insert(*m, x);
    }
    Ok(TensorOperator {
        carrier: basis.spin(),
        source: j,
        target: j,
        components,
    })
}

/// The elements every equivariance check is run on: the generators and
/// one composite guard.
pub fn check_elements() -> Vec<AlgebraElement> {
    let composite = &(&AlgebraElement::e() * &AlgebraElement::f()) * &AlgebraElement::k();
    vec![
        AlgebraElement::e(),
        AlgebraElement::f(),
        AlgebraElement::k(),
        AlgebraElement::k_inv(),
        composite,
    ]
}

/// `Σ_n π^l(a)_{nm} T_n = Σ π^j(a⁽¹⁾) T_m π^w(S a⁽²⁾)` for each check element.
pub fn check_tensor_operator(t: &TensorOperator) -> Result<bool> {
    t.validate()?;
    let mut cache = RepCache::default();
    let weights: Vec<HalfInt> = t.carrier.weights().collect();
    for a in check_elements() {
        let carrier = cache.element(t.carrier, &a);
        let terms: Vec<(Matrix, Matrix)> = coproduct(&a)
            .terms()
            .map(|([m1, m2], c)| {
                let left = cache.monomial(t.target, *m1).scale(c);
                let right = cache.element(t.source, &antipode(&AlgebraElement::monomial(*m2)));
                (left, right)
            })
            .collect();
        for (col, m) in weights.iter().enumerate() {
            let mut lhs = Matrix::zeros(t.target.dim(), t.source.dim());
            for (row, n) in weights.iter().enumerate() {
                let c = carrier.get(row, col);
                if !c.is_zero() {
                    lhs = &lhs + &t.component(*n).scale(c);
                }
            }
            let mut rhs = Matrix::zeros(t.target.dim(), t.source.dim());
            for (left, right) in &terms {
                rhs = &rhs + &(&(left * t.component(*m)) * right);
            }
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `ε(a) T_m = Σ Σ_n π^l(S a₃)_{nm} π^j(a₁) T_n π^w(S a₂)` for each check
/// element, with `(Δ ⊗ id)Δ(a) = Σ a₁ ⊗ a₂ ⊗ a₃`: the operator is an
/// invariant of the action on `Hom(V^l, Hom(V^w, V^j))`.
pub fn check_epsilon_invariance(t: &TensorOperator) -> Result<bool> {
    t.validate()?;
    let mut cache = RepCache::default();
    let weights: Vec<HalfInt> = t.carrier.weights().collect();
    for a in check_elements() {
        let eps = counit(&a);
        let terms: Vec<(Matrix, Matrix, Matrix)> = iterated_coproduct(&a)
            .terms()
            .map(|([u, v, y], c)| {
                let left = cache.monomial(t.target, *u).scale(c);
                let right = cache.element(t.source, &antipode(&AlgebraElement::monomial(*v)));
                let carrier = cache.element(t.carrier, &antipode(&AlgebraElement::monomial(*y)));
                (left, right, carrier)
            })
            .collect();
        for (col, m) in weights.iter().enumerate() {
            let mut rhs = Matrix::zeros(t.target.dim(), t.source.dim());
            for (left, right, carrier) in &terms {
                let mut mixed = Matrix::zeros(t.target.dim(), t.source.dim());
                for (row, n) in weights.iter().enumerate() {
                    let c = carrier.get(row, col);
                    if !c.is_zero() {
                        mixed = &mixed + &t.component(*n).scale(c);
                    }
                }
                if !mixed.is_zero() {
                    rhs = &rhs + &(&(left * &mixed) * right);
                }
            }
            if rhs != t.component(*m).scale(&eps) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The map `Ť: V^l ⊗ V^w → V^j`, `e_m ⊗ e_n ↦ T_m e_n`.
pub fn hat_matrix(t: &TensorOperator) -> Result<Matrix> {
    t.validate()?;
    let mut out = Matrix::zeros(t.target.dim(), t.carrier.dim() * t.source.dim());
    for m in t.carrier.weights() {
        let x = t.component(m);
        for n in t.source.weights() {
            let col = tensor_index(t.carrier, t.source, m, n).expect("valid weights");
            let src = t.source.index_of(n).expect("valid weight");
            for row in 0..t.target.dim() {
                out.set(row, col, x.get(row, src).clone());
            }
        }
    }
    Ok(out)
}

/// `Ť ∘ (π^l ⊗ π^w)Δ(a) = π^j(a) ∘ Ť` for each check element.
pub fn check_hat_intertwiner(t: &TensorOperator) -> Result<bool> {
    let hat = hat_matrix(t)?;
    let mut cache = RepCache::default();
    for a in check_elements() {
        let tensor = tensor_rep_of_element(t.carrier, t.source, &a)?.matrix;
        let target = cache.element(t.target, &a);
        if &hat * &tensor != &target * &hat {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spin_one_on_spin_one() {
        let t = tensor_operator_from_rep(1, HalfInt::int(1)).unwrap();
        let top = t.component(HalfInt::int(1));
        let r2 = RadicalScalar::sqrt(&crate::scalars::qint_rf(2)).unwrap();
        // row m = 1, column n = 0
        assert_eq!(top.get(0, 1), &r2);
        assert!(check_tensor_operator(&t).unwrap());
        assert!(check_epsilon_invariance(&t).unwrap());
        assert!(check_hat_intertwiner(&t).unwrap());
    }

    #[test]
    fn zeroed_component_breaks_equivariance() {
        let mut t = tensor_operator_from_rep(1, HalfInt::int(1)).unwrap();
        t.components.insert(HalfInt::ZERO, Matrix::zeros(3, 3));
        assert!(!check_tensor_operator(&t).unwrap());
        assert!(!check_epsilon_invariance(&t).unwrap());
        assert!(!check_hat_intertwiner(&t).unwrap());
    }

    #[test]
    fn zero_operator_is_trivially_equivariant() {
        let h = HalfInt::from_twice(1);
        let t = TensorOperator::zero(HalfInt::int(1), h, h);
        assert!(check_hat_intertwiner(&t).unwrap());
        assert!(check_tensor_operator(&t).unwrap());
    }

    #[test]
    fn shape_errors() {
        let mut t = tensor_operator_from_rep(1, HalfInt::int(1)).unwrap();
        t.components.insert(HalfInt::ZERO, Matrix::zeros(2, 3));
        assert!(matches!(check_tensor_operator(&t), Err(Error::Dimension(_))));
    }
}
