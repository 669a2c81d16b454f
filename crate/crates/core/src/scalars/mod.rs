//! Exact scalar arithmetic: ℚ[t, t⁻¹] ⊂ ℚ(t) ⊂ ℚ(t)(√…).

mod eval;
mod halfint;
mod laurent;
pub(crate) mod poly;
mod qnum;
mod radical;
mod ratfunc;
pub mod rational;

pub use eval::{evaluate_at, evaluate_at_f64, Evaluate};
pub use halfint::HalfInt;
pub use laurent::LaurentPoly;
pub use qnum::{qfact, qint};
pub use radical::{RadicalScalar, RadicalTerm};
pub use ratfunc::RatFunc;
pub(crate) use laurent::forward_owned;

/// `t² − t⁻²`, the denominator of the q-commutator.
pub fn t_delta() -> RatFunc {
    RatFunc::from_poly(&LaurentPoly::t_pow(2) - &LaurentPoly::t_pow(-2))
}

/// `[n]` as a rational function.
pub fn qint_rf(n: i64) -> RatFunc {
    RatFunc::from_poly(qint(n))
}

/// `[n]!` as a rational function; panics on negative `n`.
pub fn qfact_rf(n: i64) -> RatFunc {
    RatFunc::from_poly(qfact(n).expect("non-negative factorial argument"))
}

/// `√x` for a rational function that is positive for large `t`.
pub fn sqrt_rf(x: &RatFunc) -> crate::Result<RadicalScalar> {
    RadicalScalar::sqrt(x)
}
