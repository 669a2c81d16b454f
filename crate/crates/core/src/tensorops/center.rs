use serde::Serialize;

use crate::clebsch::{cg_special_00, cg_table};
use crate::rep::Generator;
use crate::scalars::{qfact, HalfInt, RadicalScalar, RatFunc};
use crate::uqsl2::{adjoint_action, counit, AlgebraElement};
use crate::{Error, Result};

use super::orbit::{adjoint_orbit, AdjointBasis};

fn check_j(j: i64) -> Result<AdjointBasis> {
    if j < 1 {
        return Err(Error::Range(format!("central element needs j ≥ 1, got {j}")));
    }
    adjoint_orbit(j)
}

/// `Σ_m c_m λ_m λ_{-m}`, computed on `μ`: the square-root prefactors of
/// `λ_m` and `λ_{-m}` multiply to `1/[2j]!`.
fn quadratic(basis: &AdjointBasis, coeff: impl Fn(i64) -> RadicalScalar) -> AlgebraElement {
    let inv = RatFunc::from_poly(qfact(2 * basis.l).expect("non-negative"))
        .recip()
        .expect("nonzero");
    let mut out = AlgebraElement::zero();
    for m in basis.weights() {
        let c = coeff(m).scale(&inv);
        out = &out + &(basis.mu(m) * basis.mu(-m)).scale(&c);
    }
    out
}

/// The invariant `C = Σ_m (jm, j(-m) | 00)_t λ_m λ_{-m}` built from the
/// closed-form singlet coefficients.
///
/// The closed form is read with its tensor factors swapped, i.e. the
/// coefficient of `λ_m λ_{-m}` is `cg_special_00(j, -m, m)
/// = (-1)^{j+m} t^{-2m} / √[2j+1]`; this is the reading under which the
/// singlet is invariant for the coproduct in use. See
/// [`central_element_literal`] for the verbatim reading.
pub fn central_element(j: i64) -> Result<AlgebraElement> {
    let basis = check_j(j)?;
    let hj = HalfInt::int(j);
    Ok(quadratic(&basis, |m| cg_special_00(hj, HalfInt::int(-m), HalfInt::int(m))))
}

/// `Σ_m cg_special_00(j, m, -m) λ_m λ_{-m}`, the closed form read verbatim.
/// This element is not central; it is kept for comparison.
pub fn central_element_literal(j: i64) -> Result<AlgebraElement> {
    let basis = check_j(j)?;
    let hj = HalfInt::int(j);
    Ok(quadratic(&basis, |m| cg_special_00(hj, HalfInt::int(m), HalfInt::int(-m))))
}

/// `Σ_p (jp, j(-p) | 00)_t λ_p λ_{-p}` with coefficients taken from the
/// recursively computed CG table.
pub fn central_element_from_table(j: i64) -> Result<AlgebraElement> {
    let basis = check_j(j)?;
    let hj = HalfInt::int(j);
    let table = cg_table(hj, hj)?;
    let z = HalfInt::ZERO;
    Ok(quadratic(&basis, |p| {
        table.get(z, HalfInt::int(p), HalfInt::int(-p), z)
    }))
}

/// Both characterizations of centrality, per generator.
#[derive(Clone, Debug, Serialize)]
pub struct CentralReport {
    /// `x g - g x = 0`
    pub commutes: Vec<(String, bool)>,
    /// `ad_g(x) = ε(g) x`
    pub ad_invariant: Vec<(String, bool)>,
    pub central: bool,
    /// the two characterizations give the same verdict
    pub agree: bool,
}

pub fn central_report(x: &AlgebraElement) -> CentralReport {
    let mut commutes = Vec::new();
    let mut ad_invariant = Vec::new();
    for g in Generator::ALL {
        let a = g.element();
        commutes.push((g.to_string(), x.commutator(&a).is_zero()));
        ad_invariant.push((g.to_string(), adjoint_action(&a, x) == x.scale(&counit(&a))));
    }
    let c = commutes.iter().all(|v| v.1);
    let a = ad_invariant.iter().all(|v| v.1);
    CentralReport {
        commutes,
        ad_invariant,
        central: c && a,
        agree: c == a,
    }
}

/// `x` commutes with `e, f, k, k⁻¹` and is ad-invariant under each.
pub fn verify_central(x: &AlgebraElement) -> bool {
    central_report(x).central
}
