use super::laurent::LaurentPoly;
use crate::{Error, Result};

/// The q-integer `[n] = (t^{2n} - t^{-2n}) / (t^2 - t^{-2})` as the Laurent
/// polynomial `Σ_{i=0}^{n-1} t^{2(n-1-2i)}`; `[-n] = -[n]`.
pub fn qint(n: i64) -> LaurentPoly {
    let m = n.abs();
    let p = LaurentPoly::from_terms((0..m).map(|i| (2 * (m - 1 - 2 * i), num_rational::BigRational::from_integer(1.into()))));
    if n < 0 {
        -p
    } else {
        p
    }
}

/// `[n]! = [1][2]⋯[n]`, with `[0]! = 1`.
pub fn qfact(n: i64) -> Result<LaurentPoly> {
    if n < 0 {
        return Err(Error::NegativeFactorial(n));
    }
    Ok((1..=n).fold(LaurentPoly::one(), |acc, i| &acc * &qint(i)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert!(qint(0).is_zero());
        assert!(qint(1).is_one());
        assert_eq!(qint(2), &LaurentPoly::t_pow(2) + &LaurentPoly::t_pow(-2));
        assert_eq!(qint(-3), -qint(3));
    }

    #[test]
    fn factorials() {
        assert!(qfact(0).unwrap().is_one());
        assert_eq!(qfact(2).unwrap(), qint(2));
        let three = &(&LaurentPoly::t_pow(4) + &LaurentPoly::one()) + &LaurentPoly::t_pow(-4);
        assert_eq!(qfact(3).unwrap(), &qint(2) * &three);
        assert_eq!(qfact(-1).unwrap_err(), Error::NegativeFactorial(-1));
    }

    #[test]
    fn qint_matches_quotient_definition() {
        use super::super::RatFunc;
        let delta = &LaurentPoly::t_pow(2) - &LaurentPoly::t_pow(-2);
        for n in -6..=6 {
            let num = &LaurentPoly::t_pow(2 * n) - &LaurentPoly::t_pow(-2 * n);
            let r = RatFunc::new(num, delta.clone()).unwrap();
            assert_eq!(r, RatFunc::from_poly(qint(n)), "n = {n}");
        }
    }
}
