//! Dense univariate polynomials over ℚ, used internally for gcd and
//! squarefree work. Index `i` holds the coefficient of `t^i`; vectors are
//! kept trimmed so the zero polynomial is the empty vector.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub(crate) type Dense = Vec<BigRational>;

pub(crate) fn trim(p: &mut Dense) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

pub(crate) fn is_constant(p: &[BigRational]) -> bool {
    p.len() <= 1
}

pub(crate) fn mul(a: &[BigRational], b: &[BigRational]) -> Dense {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    trim(&mut out);
    out
}

pub(crate) fn sub(a: &[BigRational], b: &[BigRational]) -> Dense {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_else(BigRational::zero);
        let y = b.get(i).cloned().unwrap_or_else(BigRational::zero);
        out.push(x - y);
    }
    trim(&mut out);
    out
}

pub(crate) fn scale(p: &[BigRational], c: &BigRational) -> Dense {
    if c.is_zero() {
        return Vec::new();
    }
    p.iter().map(|x| x * c).collect()
}

pub(crate) fn make_monic(p: &[BigRational]) -> Dense {
    match p.last() {
        None => Vec::new(),
        Some(lc) if lc.is_one() => p.to_vec(),
        Some(lc) => {
            let inv = lc.recip();
            p.iter().map(|x| x * &inv).collect()
        }
    }
}

/// Polynomial long division; `b` must be nonzero.
pub(crate) fn divrem(a: &[BigRational], b: &[BigRational]) -> (Dense, Dense) {
    assert!(!b.is_empty(), "polynomial division by zero");
    if a.len() < b.len() {
        return (Vec::new(), a.to_vec());
    }
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    let inv_lc = b[db].recip();
    let mut quot = vec![BigRational::zero(); a.len() - db];
    for i in (0..quot.len()).rev() {
        let c = &rem[i + db] * &inv_lc;
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                rem[i + j] -= &c * bj;
            }
        }
        quot[i] = c;
    }
    trim(&mut quot);
    trim(&mut rem);
    (quot, rem)
}

pub(crate) fn div_exact(a: &[BigRational], b: &[BigRational]) -> Dense {
    let (q, r) = divrem(a, b);
    debug_assert!(r.is_empty(), "inexact polynomial division");
    q
}

/// Monic gcd; `gcd(0, 0) = 0`.
pub(crate) fn gcd(a: &[BigRational], b: &[BigRational]) -> Dense {
    let mut x = make_monic(a);
    let mut y = make_monic(b);
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        if is_constant(&y) {
            return vec![BigRational::one()];
        }
        let (_, r) = divrem(&x, &y);
        x = y;
        y = make_monic(&r);
    }
    x
}

pub(crate) fn derivative(p: &[BigRational]) -> Dense {
    let mut out: Dense = p
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
        .collect();
    trim(&mut out);
    out
}

/// Yun's squarefree decomposition of a nonzero polynomial: returns monic
/// `a_1, a_2, …` with `p = lc(p) · Π a_i^i`, each `a_i` squarefree and the
/// `a_i` pairwise coprime.
pub(crate) fn squarefree_decomposition(p: &[BigRational]) -> Vec<Dense> {
    let f = make_monic(p);
    let one = vec![BigRational::one()];
    if is_constant(&f) {
        return Vec::new();
    }
    let df = derivative(&f);
    let a0 = gcd(&f, &df);
    let mut b = div_exact(&f, &a0);
    let c = div_exact(&df, &a0);
    let mut d = sub(&c, &derivative(&b));
    let mut factors = Vec::new();
    while !is_constant(&b) {
        let a = gcd(&b, &d);
        let b_next = div_exact(&b, &a);
        let c_next = div_exact(&d, &a);
        d = sub(&c_next, &derivative(&b_next));
        b = b_next;
        factors.push(a);
    }
    while factors.last() == Some(&one) {
        factors.pop();
    }
    factors
}

/// Split `p` into `content · primitive` where `primitive` has coprime integer
/// coefficients and a positive leading coefficient.
pub(crate) fn primitive_part(p: &[BigRational]) -> (BigRational, Dense) {
    if p.is_empty() {
        return (BigRational::zero(), Vec::new());
    }
    let mut den_lcm = BigInt::one();
    for c in p {
        den_lcm = den_lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = p
        .iter()
        .map(|c| c.numer() * (&den_lcm / c.denom()))
        .collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    if p.last().is_some_and(Signed::is_negative) {
        g = -g;
    }
    let prim = ints
        .into_iter()
        .map(|x| BigRational::from_integer(x / &g))
        .collect();
    (BigRational::new(g, den_lcm), prim)
}
