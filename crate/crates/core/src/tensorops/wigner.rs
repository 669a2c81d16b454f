use serde::Serialize;

use crate::clebsch::{cg_special_ll, CGTable};
use crate::scalars::{qfact, qint, HalfInt, RadicalScalar, RatFunc};
use crate::{Error, Result};

use super::operator::TensorOperator;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessKind {
    /// `T_{mn}·cg_ref ≠ T_ref·cg_{mn}`
    Mismatch,
    /// the CG coefficient vanishes but the matrix entry does not
    NonzeroOutsideCg,
    /// `p + n = m` yet both the entry and the CG coefficient are zero
    BothVanish,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub m: HalfInt,
    pub p: HalfInt,
    pub n: HalfInt,
    pub kind: WitnessKind,
}

/// The reduced matrix element `α` with `[T_p]_{mn} = α (lp, wn | jm)_t`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReducedME {
    pub alpha: RadicalScalar,
    pub consistent: bool,
    pub witnesses: Vec<Witness>,
}

/// Extract `α` by exact cross-multiplication against the first index
/// triple with a nonzero CG coefficient. `cg` must be the table for
/// `(carrier, source)`.
pub fn reduced_matrix_element(t: &TensorOperator, cg: &CGTable) -> Result<ReducedME> {
    if cg.k != t.carrier || cg.l != t.source {
        return Err(Error::Dimension(format!(
            "CG table for ({}, {}) does not match operator ({}, {})",
            cg.k, cg.l, t.carrier, t.source
        )));
    }
    let j = t.target;
    let not_in = || Error::NotInDecomposition {
        k: t.carrier.to_string(),
        l: t.source.to_string(),
        j: j.to_string(),
    };
    if !cg.js().contains(&j) {
        return Err(not_in());
    }
    let mut cells = Vec::new();
    for p in t.carrier.weights() {
        let x = t.component(p);
        for (row, m) in j.weights().enumerate() {
            for (col, n) in t.source.weights().enumerate() {
                cells.push((m, p, n, x.get(row, col).clone(), cg.get(j, p, n, m)));
            }
        }
    }
    let (t_ref, cg_ref) = cells
        .iter()
        .find(|c| !c.4.is_zero())
        .map(|c| (c.3.clone(), c.4.clone()))
        .ok_or_else(not_in)?;
    let alpha = t_ref.checked_div(&cg_ref)?;
    let mut witnesses = Vec::new();
    let mut consistent = true;
    for (m, p, n, x, c) in cells {
        let kind = if c.is_zero() {
            if !x.is_zero() {
                Some(WitnessKind::NonzeroOutsideCg)
            } else if p + n == m {
                Some(WitnessKind::BothVanish)
            } else {
                None
            }
        } else if &x * &cg_ref != &t_ref * &c {
            Some(WitnessKind::Mismatch)
        } else {
            None
        };
        if let Some(kind) = kind {
            consistent &= kind == WitnessKind::BothVanish;
            witnesses.push(Witness { m, p, n, kind });
        }
    }
    Ok(ReducedME {
        alpha,
        consistent,
        witnesses,
    })
}

fn integer_orbit_spin(l: HalfInt, j: HalfInt) -> Result<i64> {
    let li = l
        .as_int()
        .filter(|v| *v >= 0)
        .ok_or_else(|| Error::Range(format!("l = {l} must be a non-negative integer")))?;
    if j.twice() < li {
        return Err(Error::Range(format!("2j = {} < l = {li}", j.twice())));
    }
    Ok(li)
}

fn qfact_rf(n: i64) -> Result<RatFunc> {
    Ok(RatFunc::from_poly(qfact(n)?))
}

/// The quoted closed form
/// `α = t^{l(l+1)} [l]! √([2j+l+1]! / ([2l]! [2j-l]! [2j+1]!))`, evaluated
/// exactly as written.
pub fn reduced_me_closed_form(l: HalfInt, j: HalfInt) -> Result<RadicalScalar> {
    let li = integer_orbit_spin(l, j)?;
    let j2 = j.twice();
    let den = &(&qfact_rf(2 * li)? * &qfact_rf(j2 - li)?) * &qfact_rf(j2 + 1)?;
    let root = RadicalScalar::sqrt(&qfact_rf(j2 + li + 1)?.checked_div(&den)?)?;
    let pre = qfact_rf(li)?.shift(li * (li + 1));
    Ok(root.scale(&pre))
}

/// `α` from the highest component alone: the explicit matrix element
/// `π^j(λ_l^l)_{mn} = √([j-m+l]![j+m]!/([j+m-l]![j-m]!)) t^{-2l(m-l)} δ_{m,n+l}`
/// divided by the closed form of `(ll, jn | jm)_t`, taken at `m = j`.
pub fn alpha_from_highest_component(l: HalfInt, j: HalfInt) -> Result<RadicalScalar> {
    let li = integer_orbit_spin(l, j)?;
    let m = j;
    let n = m - l;
    let h = |x: HalfInt| x.twice() / 2;
    let num = &qfact_rf(h(j - m) + li)? * &qfact_rf(h(j + m))?;
    let den = &qfact_rf(h(j + m) - li)? * &qfact_rf(h(j - m))?;
    let entry = RadicalScalar::sqrt(&num.checked_div(&den)?)?
        .scale(&RatFunc::t_pow(-li * (m.twice() - 2 * li)));
    let cg = cg_special_ll(l, j, m, n)?;
    entry.checked_div(&cg)
}

/// `t^{l(l+1)} [l]! √([2j+l+1]! / ([2l]! [2j-l]! [2j+1]))`: the value both
/// proof formulas lead to, with `[2j+1]` in place of `[2j+1]!`.
pub fn reduced_me_corrected(l: HalfInt, j: HalfInt) -> Result<RadicalScalar> {
    let li = integer_orbit_spin(l, j)?;
    let j2 = j.twice();
    let den = &(&qfact_rf(2 * li)? * &qfact_rf(j2 - li)?) * &RatFunc::from_poly(qint(j2 + 1));
    let root = RadicalScalar::sqrt(&qfact_rf(j2 + li + 1)?.checked_div(&den)?)?;
    Ok(root.scale(&qfact_rf(li)?.shift(li * (li + 1))))
}
