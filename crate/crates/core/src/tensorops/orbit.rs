use std::collections::BTreeMap;

use serde::Serialize;

use crate::scalars::{qfact, qint, HalfInt, LaurentPoly, RadicalScalar, RatFunc};
use crate::uqsl2::{adjoint_action, bracket_of_k, AlgebraElement, Monomial};
use crate::{Error, Result};

/// Which construction produced an [`AdjointBasis`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Construction {
    /// repeated `ad f` applied to `e^l k^{-l}`
    Recursive,
    /// the explicit double sum in `e^{l-p} f^{l-m-p} P(k) k^{-m}`
    ClosedForm,
}

/// The basis `λ_m^l` of the spin-`l` submodule of the adjoint
/// representation, with its unnormalized companion
/// `μ_m = (ad f)^{l-m}(e^l k^{-l})`, `λ_m = √([l+m]!/([2l]![l-m]!)) μ_m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjointBasis {
    pub l: i64,
    pub construction: Construction,
    /// `λ_m`, keyed by `m`
    pub vectors: BTreeMap<HalfInt, AlgebraElement>,
    /// `μ_m`, keyed by `m`; coefficients are rational functions
    pub unnormalized: BTreeMap<HalfInt, AlgebraElement>,
}

impl AdjointBasis {
    pub fn spin(&self) -> HalfInt {
        HalfInt::int(self.l)
    }

    pub fn lambda(&self, m: i64) -> &AlgebraElement {
        &self.vectors[&HalfInt::int(m)]
    }

    pub fn mu(&self, m: i64) -> &AlgebraElement {
        &self.unnormalized[&HalfInt::int(m)]
    }

    /// Weights `l, l-1, …, -l`.
    pub fn weights(&self) -> impl Iterator<Item = i64> {
        let l = self.l;
        (0..=2 * l).map(move |i| l - i)
    }
}

fn check_l(l: i64) -> Result<()> {
    if l < 1 {
        return Err(Error::Range(format!("orbit spin l = {l} must be at least 1")));
    }
    Ok(())
}

fn qfact_rf(n: i64) -> RatFunc {
    RatFunc::from_poly(qfact(n).expect("non-negative argument"))
}

/// `√([l+m]!/([2l]![l-m]!))`.
pub fn orbit_prefactor(l: i64, m: i64) -> RadicalScalar {
    let r = qfact_rf(l + m)
        .checked_div(&(&qfact_rf(2 * l) * &qfact_rf(l - m)))
        .expect("nonzero");
    RadicalScalar::sqrt(&r).expect("positive")
}

fn normalize(l: i64, construction: Construction, mu: BTreeMap<HalfInt, AlgebraElement>) -> AdjointBasis {
    let vectors = mu
        .iter()
        .map(|(m, x)| {
            let mi = m.as_int().expect("integer weight");
            (*m, x.scale(&orbit_prefactor(l, mi)))
        })
        .collect();
    AdjointBasis {
        l,
        construction,
        vectors,
        unnormalized: mu,
    }
}

/// `λ_m^l` by repeated adjoint action of `f` on `e^l k^{-l}`.
pub fn adjoint_orbit(l: i64) -> Result<AdjointBasis> {
    check_l(l)?;
    let f = AlgebraElement::f();
    let mut mu = BTreeMap::new();
    let mut x = AlgebraElement::monomial(Monomial::new(l as u32, 0, -(l as i32)));
    for m in (-l..=l).rev() {
        let next = adjoint_action(&f, &x);
        mu.insert(HalfInt::int(m), x);
        x = next;
    }
    Ok(normalize(l, Construction::Recursive, mu))
}

/// The unnormalized closed form of `μ_m^l`:
///
/// ```text
/// Σ_{p=0}^{N} (-1)^p [l]![l-m]!/([p]![l-p]!) e^{l-p} f^{l-m-p}
///   · ( Σ_{i=0}^{l-m-p} (-1)^i t^{2i} t^{2(l+m)i} / ([i]![l-m-i-p]!) · [k+m+p-i-1]!/[k+m-i-1]! ) k^{-m}
/// ```
///
/// with `N = min(l, l-m)` and `[k+s+p]!/[k+s]! = [k+s+p]⋯[k+s+1]`.
pub fn orbit_closed_form_term(l: i64, m: i64) -> AlgebraElement {
    let n_max = l.min(l - m);
    let mut out = AlgebraElement::zero();
    for p in 0..=n_max {
        let outer = (&qfact_rf(l) * &qfact_rf(l - m))
            .checked_div(&(&qfact_rf(p) * &qfact_rf(l - p)))
            .expect("nonzero");
        let outer = if p % 2 == 0 { outer } else { -outer };
        let mut inner = AlgebraElement::zero();
        for i in 0..=(l - m - p) {
            let c = RatFunc::t_pow(2 * i + 2 * (l + m) * i)
                .checked_div(&(&qfact_rf(i) * &qfact_rf(l - m - i - p)))
                .expect("nonzero");
            let c = if i % 2 == 0 { c } else { -c };
            // [k+m+p-i-1]!/[k+m-i-1]! = Π_{s=m-i}^{m+p-i-1} [k+s]
            let mut prod = AlgebraElement::one();
            for s in (m - i)..(m + p - i) {
                prod = &prod * &bracket_of_k(s);
            }
            inner = &inner + &prod.scale_rat(&c);
        }
        let ef = AlgebraElement::monomial(Monomial::new((l - p) as u32, (l - m - p) as u32, 0));
        let km = AlgebraElement::k_pow(-m as i32);
        out = &out + &(&(&ef * &inner) * &km).scale_rat(&outer);
    }
    out
}

/// `λ_m^l` from the explicit formula.
pub fn adjoint_orbit_closed_form(l: i64) -> Result<AdjointBasis> {
    check_l(l)?;
    let mu = (-l..=l)
        .map(|m| (HalfInt::int(m), orbit_closed_form_term(l, m)))
        .collect();
    Ok(normalize(l, Construction::ClosedForm, mu))
}

/// Per-weight comparison of the two constructions.
#[derive(Clone, Debug, Serialize)]
pub struct OrbitComparison {
    pub l: i64,
    pub equal: bool,
    /// weights where the explicit formula differs from the recursion
    pub mismatched_weights: Vec<i64>,
    /// for each mismatched weight, the difference (closed form minus recursion)
    pub differences: Vec<String>,
}

pub fn compare_orbit_constructions(l: i64) -> Result<OrbitComparison> {
    let rec = adjoint_orbit(l)?;
    let closed = adjoint_orbit_closed_form(l)?;
    let mut mismatched = Vec::new();
    let mut differences = Vec::new();
    for m in rec.weights() {
        let d = closed.mu(m) - rec.mu(m);
        if !d.is_zero() {
            mismatched.push(m);
            differences.push(d.to_string());
        }
    }
    Ok(OrbitComparison {
        l,
        equal: mismatched.is_empty() && rec.vectors == closed.vectors,
        mismatched_weights: mismatched,
        differences,
    })
}

/// Outcome of [`verify_orbit_relations`], per relation.
///
/// On `μ` the relations read `ad_e μ_m = [l-m][l+m+1] μ_{m+1}`,
/// `ad_f μ_m = μ_{m-1}` (with `μ_{-l-1} = 0`) and
/// `ad_{k^{±1}} μ_m = t^{±2m} μ_m`; multiplying by the square-root
/// prefactors turns them into the normalized ladder relations for `λ`.
#[derive(Clone, Debug, Default, Serialize)]
pub struct OrbitRelations {
    pub ad_e: bool,
    pub ad_f: bool,
    pub ad_k: bool,
    pub ad_k_inv: bool,
    /// `ad_e μ_l = 0`
    pub highest_weight: bool,
    /// `ad_f μ_{-l} = 0`
    pub lowest_weight: bool,
    /// all `μ_m` have rational-function coefficients
    pub rational: bool,
}

impl OrbitRelations {
    pub fn holds(&self) -> bool {
        self.ad_e
            && self.ad_f
            && self.ad_k
            && self.ad_k_inv
            && self.highest_weight
            && self.lowest_weight
            && self.rational
    }
}

pub fn verify_orbit_relations(basis: &AdjointBasis) -> OrbitRelations {
    let l = basis.l;
    let (e, f, k, ki) = (
        AlgebraElement::e(),
        AlgebraElement::f(),
        AlgebraElement::k(),
        AlgebraElement::k_inv(),
    );
    let zero = AlgebraElement::zero();
    let mut r = OrbitRelations {
        ad_e: true,
        ad_f: true,
        ad_k: true,
        ad_k_inv: true,
        highest_weight: adjoint_action(&e, basis.mu(l)).is_zero(),
        lowest_weight: adjoint_action(&f, basis.mu(-l)).is_zero(),
        rational: basis.unnormalized.values().all(AlgebraElement::has_rational_coeffs),
    };
    for m in basis.weights() {
        let mu = basis.mu(m);
        let up = if m < l {
            let c = &qint(l - m) * &qint(l + m + 1);
            basis.mu(m + 1).scale_rat(&RatFunc::from_poly(c))
        } else {
            zero.clone()
        };
        r.ad_e &= adjoint_action(&e, mu) == up;
        let down = if m > -l { basis.mu(m - 1).clone() } else { zero.clone() };
        r.ad_f &= adjoint_action(&f, mu) == down;
        r.ad_k &= adjoint_action(&k, mu) == mu.scale_rat(&RatFunc::from_poly(LaurentPoly::t_pow(2 * m)));
        r.ad_k_inv &= adjoint_action(&ki, mu) == mu.scale_rat(&RatFunc::t_pow(-2 * m));
    }
    r
}
