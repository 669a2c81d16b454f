use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::laurent::LaurentPoly;
use super::radical::RadicalScalar;
use super::ratfunc::RatFunc;
use super::rational::{fmt_rational, to_f64};
use crate::{Error, Result};

/// Numeric evaluation at a positive point `t0`, computed exactly in ℚ and
/// converted to `f64` only at the end (square roots are taken in `f64`).
pub trait Evaluate {
    fn evaluate_exact(&self, t0: &BigRational) -> Result<f64>;
}

impl Evaluate for LaurentPoly {
    fn evaluate_exact(&self, t0: &BigRational) -> Result<f64> {
        Ok(to_f64(&self.eval_exact(t0)))
    }
}

impl Evaluate for RatFunc {
    fn evaluate_exact(&self, t0: &BigRational) -> Result<f64> {
        self.eval_exact(t0).map(|v| to_f64(&v))
    }
}

impl Evaluate for RadicalScalar {
    fn evaluate_exact(&self, t0: &BigRational) -> Result<f64> {
        RadicalScalar::evaluate_exact(self, t0)
    }
}

/// Evaluate at an exact rational point; `t0` must be positive.
pub fn evaluate_at<T: Evaluate + ?Sized>(x: &T, t0: &BigRational) -> Result<f64> {
    if !t0.is_positive() {
        return Err(Error::InvalidPoint(fmt_rational(t0)));
    }
    x.evaluate_exact(t0)
}

/// Evaluate at a float point, converted exactly to a rational first.
pub fn evaluate_at_f64<T: Evaluate + ?Sized>(x: &T, t0: f64) -> Result<f64> {
    let exact = BigRational::from_float(t0).ok_or_else(|| Error::InvalidPoint(t0.to_string()))?;
    if exact.is_zero() {
        return Err(Error::InvalidPoint(t0.to_string()));
    }
    evaluate_at(x, &exact)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::qint;

    #[test]
    fn classical_limit_of_qint() {
        for n in 0..=8 {
            let v = evaluate_at_f64(&qint(n), 1.0).unwrap();
            assert_eq!(v, n as f64);
        }
    }

    #[test]
    fn sqrt_q2_at_two() {
        let x = RadicalScalar::sqrt(&RatFunc::from_poly(qint(2))).unwrap();
        let v = evaluate_at_f64(&x, 2.0).unwrap();
        assert!((v - 2.0615528128088303).abs() < 1e-12);
    }

    #[test]
    fn rejects_non_positive_points() {
        assert!(matches!(evaluate_at_f64(&qint(2), 0.0), Err(Error::InvalidPoint(_))));
        assert!(matches!(evaluate_at_f64(&qint(2), -1.0), Err(Error::InvalidPoint(_))));
    }

    #[test]
    fn pole_at_classical_point() {
        let inv = RatFunc::from_poly(&LaurentPoly::t_pow(2) - &LaurentPoly::t_pow(-2)).recip().unwrap();
        assert!(matches!(evaluate_at_f64(&inv, 1.0), Err(Error::Pole(_))));
    }
}
