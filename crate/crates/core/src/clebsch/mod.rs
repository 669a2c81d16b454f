//! Clebsch-Gordan coefficients `(kp, ln | jm)_t` for
//! `V^k ⊗ V^l = ⊕_{j=|k-l|}^{k+l} V^j`.
//!
//! Highest-weight vectors are found from `Δ(e) v = 0`, normalized by
//! `Σ c_p² = 1` with the coefficient at the largest `p` positive for `t > 1`,
//! and lowered with `Δ(f)`.

use std::collections::BTreeMap;

use crate::rep::{tensor_index, tensor_rep_of_element, Matrix};
use crate::scalars::{qfact, qint, qint_rf, HalfInt, LaurentPoly, RadicalScalar, RatFunc};
use crate::uqsl2::AlgebraElement;
use crate::{Error, Result};

fn in_triangle(k: HalfInt, l: HalfInt, j: HalfInt) -> bool {
    j.twice() >= 0
        && (k - l).abs() <= j
        && j <= k + l
        && (k + l - j).is_integer()
}

fn check_triangle(k: HalfInt, l: HalfInt, j: HalfInt) -> Result<()> {
    if k.twice() < 0 || l.twice() < 0 {
        return Err(Error::InvalidHalfInt(format!("{k}, {l}")));
    }
    if !in_triangle(k, l, j) {
        return Err(Error::Range(format!(
            "j = {j} is not in the decomposition of {k} ⊗ {l}"
        )));
    }
    Ok(())
}

/// Highest-weight coefficients `c_p` of the `V^j` summand, as
/// `(p, c_p)` with `n = j - p`, in increasing `p`.
pub fn cg_highest(k: HalfInt, l: HalfInt, j: HalfInt) -> Result<Vec<(HalfInt, RadicalScalar)>> {
    check_triangle(k, l, j)?;
    let p_min = (-k).max(j - l);
    let p_max = k.min(j + l);
    let half = |x: HalfInt| x.twice() / 2;
    // c_p = s_p √r_p before normalization
    let mut s = RatFunc::one();
    let mut r = RatFunc::one();
    let mut raw = Vec::new();
    let mut p = p_min;
    loop {
        raw.push((p, s.clone(), r.clone()));
        if p == p_max {
            break;
        }
        // √([k-p][k+p+1]) t^{-2(j-p)} c_p + t^{2(p+1)} √([l-j+p+1][l+j-p]) c_{p+1} = 0
        let up = &qint_rf(half(k - p)) * &qint_rf(half(k + p) + 1);
        let down = &qint_rf(half(l - j + p) + 1) * &qint_rf(half(l + j - p));
        let exp = -(j - p).twice() - (p.twice() + 2);
        s = -s.shift(exp);
        r = &r * &up.checked_div(&down)?;
        p = p + HalfInt::int(1);
    }
    let norm = raw
        .iter()
        .fold(RatFunc::zero(), |acc, (_, s, r)| &acc + &(&(s * s) * r));
    let flip = raw.last().is_some_and(|(_, s, _)| s.is_negative());
    raw.into_iter()
        .map(|(p, s, r)| {
            let s = if flip { -s } else { s };
            let root = RadicalScalar::sqrt(&r.checked_div(&norm)?)?;
            Ok((p, root.scale(&s)))
        })
        .collect()
}

/// All coefficients `(kp, ln | jm)_t` for fixed `k, l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CGTable {
    pub k: HalfInt,
    pub l: HalfInt,
    /// keyed by `(j, m, p)`; `n = m - p`
    entries: BTreeMap<(HalfInt, HalfInt, HalfInt), RadicalScalar>,
}

impl CGTable {
    /// The summands `j = |k-l|, …, k+l`, increasing.
    pub fn js(&self) -> Vec<HalfInt> {
        let lo = (self.k - self.l).abs();
        let count = ((self.k + self.l - lo).twice() / 2 + 1) as usize;
        (0..count).map(|i| lo + HalfInt::int(i as i64)).collect()
    }

    /// `(kp, ln | jm)_t`; zero unless `p + n = m` and all indices are valid.
    pub fn get(&self, j: HalfInt, p: HalfInt, n: HalfInt, m: HalfInt) -> RadicalScalar {
        if p + n != m {
            return RadicalScalar::zero();
        }
        self.entries.get(&(j, m, p)).cloned().unwrap_or_default()
    }

    /// The pairs `(p, n)` with `p + n = m`, in decreasing `p`, with values.
    pub fn column(&self, j: HalfInt, m: HalfInt) -> Vec<(HalfInt, HalfInt, RadicalScalar)> {
        self.k
            .weights()
            .filter(|&p| self.l.admits(m - p))
            .map(|p| (p, m - p, self.get(j, p, m - p, m)))
            .collect()
    }

    /// The embedding `V^j → V^k ⊗ V^l`, `e_m ↦ Σ_p (kp, l(m-p) | jm) e_p ⊗ e_{m-p}`.
    pub fn embedding(&self, j: HalfInt) -> Matrix {
        let mut out = Matrix::zeros(self.k.dim() * self.l.dim(), j.dim());
        for (col, m) in j.weights().enumerate() {
            for (p, n, c) in self.column(j, m) {
                let row = tensor_index(self.k, self.l, p, n).expect("valid weights");
                out.set(row, col, c);
            }
        }
        out
    }
}

/// Build the full table by lowering each highest-weight vector.
pub fn cg_table(k: HalfInt, l: HalfInt) -> Result<CGTable> {
    if k.twice() < 0 || l.twice() < 0 {
        return Err(Error::InvalidHalfInt(format!("{k}, {l}")));
    }
    let lower = tensor_rep_of_element(k, l, &AlgebraElement::f())?.matrix;
    let mut table = CGTable {
        k,
        l,
        entries: BTreeMap::new(),
    };
    let dim = k.dim() * l.dim();
    for j in table.js() {
        let mut v = vec![RadicalScalar::zero(); dim];
        for (p, c) in cg_highest(k, l, j)? {
            v[tensor_index(k, l, p, j - p).expect("valid weights")] = c;
        }
        let mut m = j;
        loop {
            for p in k.weights() {
                if let Some(idx) = tensor_index(k, l, p, m - p) {
                    if !v[idx].is_zero() {
                        table.entries.insert((j, m, p), v[idx].clone());
                    }
                }
            }
            if m == -j {
                break;
            }
            // v_{m-1} = Δ(f) v_m / √([j+m][j-m+1])
            let h = |x: HalfInt| x.twice() / 2;
            let factor = &qint_rf(h(j + m)) * &qint_rf(h(j - m) + 1);
            let inv = RadicalScalar::sqrt(&factor)?.inv()?;
            v = lower.mul_vec(&v).iter().map(|x| x * &inv).collect();
            m = m - HalfInt::int(1);
        }
    }
    Ok(table)
}

fn qfact_rf(n: i64) -> Result<RatFunc> {
    Ok(RatFunc::from_poly(qfact(n)?))
}

/// `(jm, jn | 00)_t = (-1)^{j-m} t^{2m} / √[2j+1] · δ_{m,-n}`, the closed form
/// for the invariant in `V^j ⊗ V^j`.
///
/// With the coproduct used here this literal form is the coefficient of
/// `e_n ⊗ e_m` (factors swapped): `cg_table(j, j)` has
/// `(jp, j(-p) | 00) = ± cg_special_00(j, -p, p)`.
pub fn cg_special_00(j: HalfInt, m: HalfInt, n: HalfInt) -> RadicalScalar {
    if m != -n || !j.admits(m) {
        return RadicalScalar::zero();
    }
    let sign = if ((j - m).twice() / 2) % 2 == 0 { 1 } else { -1 };
    let num = RatFunc::integer(sign).shift(m.twice());
    let root = RadicalScalar::sqrt(&qint_rf(j.twice() + 1)).expect("[2j+1] > 0");
    root.inv().expect("nonzero").scale(&num)
}

/// `(ll, jn | jm)_t` in closed form for integer `l`:
///
/// ```text
/// t^{-{-l(l+1)+2(m+1)l}} √([2j+1] [2l]![2j-l]![j+m]![j-m+l]! / ([2j+l+1]![l]!²[j-m]![j+m-l]!)) δ_{m,n+l}
/// ```
pub fn cg_special_ll(l: HalfInt, j: HalfInt, m: HalfInt, n: HalfInt) -> Result<RadicalScalar> {
    let li = l
        .as_int()
        .filter(|v| *v >= 0)
        .ok_or_else(|| Error::Range(format!("l = {l} must be a non-negative integer")))?;
    if j.twice() < li {
        return Err(Error::Range(format!("2j = {} < l = {li}", j.twice())));
    }
    if m != n + l || !j.admits(m) || !j.admits(n) {
        return Ok(RadicalScalar::zero());
    }
    let h = |x: HalfInt| x.twice() / 2;
    let (jpm, jmm) = (h(j + m), h(j - m));
    let num = [
        qint_rf(j.twice() + 1),
        qfact_rf(2 * li)?,
        qfact_rf(j.twice() - li)?,
        qfact_rf(jpm)?,
        qfact_rf(jmm + li)?,
    ];
    let den = [
        qfact_rf(j.twice() + li + 1)?,
        qfact_rf(li)?,
        qfact_rf(li)?,
        qfact_rf(jmm)?,
        qfact_rf(jpm - li)?,
    ];
    let num = num.iter().fold(RatFunc::one(), |a, x| &a * x);
    let den = den.iter().fold(RatFunc::one(), |a, x| &a * x);
    let root = RadicalScalar::sqrt(&num.checked_div(&den)?)?;
    // m is an integer or half-integer; 2(m+1)l = (2m+2)·l
    let exp = li * (li + 1) - (m.twice() + 2) * li;
    Ok(root.scale(&RatFunc::t_pow(exp)))
}

/// Global sign relating two families of values: `Some(1)` if equal,
/// `Some(-1)` if exactly opposite, `None` otherwise.
pub fn global_sign<I>(pairs: I) -> Option<i8>
where
    I: IntoIterator<Item = (RadicalScalar, RadicalScalar)>,
{
    let mut plus = true;
    let mut minus = true;
    for (a, b) in pairs {
        plus &= a == b;
        minus &= a == -&b;
    }
    match (plus, minus) {
        (true, _) => Some(1),
        (false, true) => Some(-1),
        _ => None,
    }
}

/// How the `j = 0` column of `cg_table(j, j)` relates to [`cg_special_00`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Special00Comparison {
    /// sign against `cg_special_00(j, p, n)` read literally
    pub literal: Option<i8>,
    /// sign against `cg_special_00(j, n, p)` with the factors swapped
    pub swapped: Option<i8>,
}

pub fn compare_special_00(j: HalfInt) -> Result<Special00Comparison> {
    let table = cg_table(j, j)?;
    let z = HalfInt::ZERO;
    let rows: Vec<_> = j.weights().map(|p| (p, table.get(z, p, -p, z))).collect();
    Ok(Special00Comparison {
        literal: global_sign(rows.iter().map(|(p, v)| (v.clone(), cg_special_00(j, *p, -*p)))),
        swapped: global_sign(rows.iter().map(|(p, v)| (v.clone(), cg_special_00(j, -*p, *p)))),
    })
}

/// Sign relating `cg_table(l, j)` at `p = l` to [`cg_special_ll`] over all
/// `(m, n)`; `None` if they are not equal up to one global sign.
pub fn compare_special_ll(l: HalfInt, j: HalfInt) -> Result<Option<i8>> {
    let table = cg_table(l, j)?;
    let mut pairs = Vec::new();
    for m in j.weights() {
        for n in j.weights() {
            pairs.push((table.get(j, l, n, m), cg_special_ll(l, j, m, n)?));
        }
    }
    Ok(global_sign(pairs))
}

/// `Σ_m t^{4m}` over the weights of spin `j`; equals `[2j+1]`.
pub fn weight_sum(j: HalfInt) -> LaurentPoly {
    j.weights()
        .fold(LaurentPoly::zero(), |acc, m| &acc + &LaurentPoly::t_pow(2 * m.twice()))
}

/// `[2j+1]` as a Laurent polynomial.
pub fn dimension_bracket(j: HalfInt) -> LaurentPoly {
    qint(j.twice() + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(twice: i64) -> HalfInt {
        HalfInt::from_twice(twice)
    }

    fn inv_sqrt2() -> RadicalScalar {
        RadicalScalar::sqrt(&qint_rf(2)).unwrap().inv().unwrap()
    }

    #[test]
    fn highest_of_top_summand_is_unit() {
        let v = cg_highest(h(2), h(1), h(3)).unwrap();
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].0, h(2));
        assert!(v[0].1.is_one());
    }

    #[test]
    fn spin_half_singlet() {
        let v = cg_highest(h(1), h(1), h(0)).unwrap();
        assert_eq!(v[0], (h(-1), inv_sqrt2().scale(&-RatFunc::t_pow(1))));
        assert_eq!(v[1], (h(1), inv_sqrt2().scale(&RatFunc::t_pow(-1))));
    }

    #[test]
    fn spin_half_triplet_middle() {
        let t = cg_table(h(1), h(1)).unwrap();
        let z = HalfInt::ZERO;
        assert_eq!(t.get(h(2), h(1), h(-1), z), inv_sqrt2().scale(&RatFunc::t_pow(1)));
        assert_eq!(t.get(h(2), h(-1), h(1), z), inv_sqrt2().scale(&RatFunc::t_pow(-1)));
    }

    #[test]
    fn triangle_is_enforced() {
        assert!(matches!(cg_highest(h(1), h(1), h(4)), Err(Error::Range(_))));
        assert!(matches!(cg_highest(h(2), h(2), h(1)), Err(Error::Range(_))));
    }

    #[test]
    fn special_00_values() {
        let v = cg_special_00(h(1), h(1), h(-1));
        assert_eq!(v, inv_sqrt2().scale(&RatFunc::t_pow(1)));
        let root3 = RadicalScalar::sqrt(&qint_rf(3)).unwrap().inv().unwrap();
        assert_eq!(cg_special_00(h(2), h(0), h(0)), -root3);
        assert!(cg_special_00(h(2), h(2), h(0)).is_zero());
    }

    #[test]
    fn special_ll_matches_table() {
        for twice_j in 2..=4 {
            assert_eq!(compare_special_ll(h(2), h(twice_j)).unwrap(), Some(1));
        }
        assert!(cg_special_ll(h(2), h(2), h(2), h(2)).unwrap().is_zero());
    }

    #[test]
    fn weight_sum_is_dimension_bracket() {
        for twice in 0..=6 {
            assert_eq!(weight_sum(h(twice)), dimension_bracket(h(twice)));
        }
    }
}
