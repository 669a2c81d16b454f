//! Normal ordering of products of PBW monomials.
//!
//! Products are rewritten into `e^a f^b k^c` using
//! `k e = t² e k`, `k f = t⁻² f k` and `f e = e f − (k² − k⁻²)/(t² − t⁻²)`.
//! The only nontrivial step is moving a block `f^b` past `e^a`; this is done
//! one `f` at a time, which yields
//! `f^b e^a = Σ_i e^{a-i} f^{b-i} P_i(k)` with `P_i` Laurent polynomials in
//! `k` over ℚ(t).

use std::collections::{BTreeMap, HashMap};

use super::Monomial;
use crate::scalars::{t_delta, RatFunc};

/// A Laurent polynomial in `k` with rational-function coefficients.
pub(crate) type KPoly = BTreeMap<i32, RatFunc>;

fn kpoly_add_term(p: &mut KPoly, exp: i32, c: RatFunc) {
    if c.is_zero() {
        return;
    }
    let slot = p.entry(exp).or_insert_with(RatFunc::zero);
    *slot = &*slot + &c;
    if slot.is_zero() {
        p.remove(&exp);
    }
}

fn kpoly_mul(a: &KPoly, b: &KPoly) -> KPoly {
    let mut out = KPoly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            kpoly_add_term(&mut out, ea + eb, ca * cb);
        }
    }
    out
}

/// `P(k) ↦ P(t^s k)`.
fn kpoly_rescale(p: &KPoly, s: i64) -> KPoly {
    p.iter()
        .map(|(e, c)| (*e, c.shift(s * *e as i64)))
        .collect()
}

/// `G_a(k) = Σ_{j<a} (t^{4j} k² − t^{-4j} k⁻²)/(t² − t⁻²)`, the correction
/// in `f e^a = e^a f − e^{a-1} G_a(k)`.
fn g_poly(a: u32) -> KPoly {
    let inv = t_delta().recip().expect("t^2 - t^-2 is nonzero");
    let mut out = KPoly::new();
    for j in 0..a as i64 {
        kpoly_add_term(&mut out, 2, inv.shift(4 * j));
        kpoly_add_term(&mut out, -2, -inv.shift(-4 * j));
    }
    out
}

/// Memoized expansion of `f^b e^a`.
#[derive(Default)]
pub(crate) struct Rewriter {
    memo: HashMap<(u32, u32), Vec<KPoly>>,
}

impl Rewriter {
    fn f_pow_e_pow(&mut self, b: u32, a: u32) -> Vec<KPoly> {
        if a == 0 || b == 0 {
            return vec![KPoly::from([(0, RatFunc::one())])];
        }
        if let Some(v) = self.memo.get(&(b, a)) {
            return v.clone();
        }
        // f^b e^a = (f^{b-1} e^a) f − (f^{b-1} e^{a-1}) G_a(k)
        let first = self.f_pow_e_pow(b - 1, a);
        let second = self.f_pow_e_pow(b - 1, a - 1);
        let g = g_poly(a);
        let n = a.min(b) as usize + 1;
        let mut out = vec![KPoly::new(); n];
        for (i, p) in first.iter().enumerate() {
            for (e, c) in kpoly_rescale(p, -2) {
                kpoly_add_term(&mut out[i], e, c);
            }
        }
        for (i, p) in second.iter().enumerate() {
            for (e, c) in kpoly_mul(p, &g) {
                kpoly_add_term(&mut out[i + 1], e, -c);
            }
        }
        self.memo.insert((b, a), out.clone());
        out
    }

    /// Normal-ordered product of two monomials.
    pub(crate) fn mul_monomials(&mut self, x: Monomial, y: Monomial) -> Vec<(Monomial, RatFunc)> {
        // x·y = t^{2c·a' − 2c·b'} e^a (f^b e^{a'}) f^{b'} k^{c+c'}
        let c = x.c as i64;
        let base_shift = 2 * c * y.a as i64 - 2 * c * y.b as i64;
        if x.b == 0 || y.a == 0 {
            let m = Monomial::new(x.a + y.a, x.b + y.b, x.c + y.c);
            return vec![(m, RatFunc::t_pow(base_shift))];
        }
        let parts = self.f_pow_e_pow(x.b, y.a);
        let mut out = Vec::new();
        for (i, p) in parts.iter().enumerate() {
            let i = i as u32;
            for (d, r) in p {
                // P_i(k) f^{b'} = f^{b'} P_i(t^{-2b'} k)
                let shift = base_shift - 2 * y.b as i64 * *d as i64;
                let m = Monomial::new(x.a + y.a - i, x.b - i + y.b, d + x.c + y.c);
                out.push((m, r.shift(shift)));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f_times_e() {
        let mut rw = Rewriter::default();
        let inv = t_delta().recip().unwrap();
        let got: BTreeMap<Monomial, RatFunc> = rw
            .mul_monomials(Monomial::new(0, 1, 0), Monomial::new(1, 0, 0))
            .into_iter()
            .collect();
        let expect = BTreeMap::from([
            (Monomial::new(1, 1, 0), RatFunc::one()),
            (Monomial::new(0, 0, 2), -inv.clone()),
            (Monomial::new(0, 0, -2), inv),
        ]);
        assert_eq!(got, expect);
    }

    #[test]
    fn k_past_e_and_f() {
        let mut rw = Rewriter::default();
        let ke = rw.mul_monomials(Monomial::new(0, 0, 1), Monomial::new(1, 0, 0));
        assert_eq!(ke, vec![(Monomial::new(1, 0, 1), RatFunc::t_pow(2))]);
        let kf = rw.mul_monomials(Monomial::new(0, 0, 1), Monomial::new(0, 1, 0));
        assert_eq!(kf, vec![(Monomial::new(0, 1, 1), RatFunc::t_pow(-2))]);
    }
}
