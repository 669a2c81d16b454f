//! Oracles shared by the integration tests.

use qsl2::scalars::HalfInt;

fn fact(n: i64) -> f64 {
    (1..=n).map(|i| i as f64).product()
}

/// Racah's closed form for classical su(2) coefficients (Condon-Shortley phase).
pub fn classical_cg(j1: HalfInt, m1: HalfInt, j2: HalfInt, m2: HalfInt, j: HalfInt, m: HalfInt) -> f64 {
    if m1 + m2 != m {
        return 0.0;
    }
    let i = |x: HalfInt| x.twice() / 2;
    let pre = ((j.twice() + 1) as f64 * fact(i(j1 + j2 - j)) * fact(i(j1 - j2 + j)) * fact(i(j2 - j1 + j))
        / fact(i(j1 + j2 + j) + 1))
    .sqrt()
        * (fact(i(j + m)) * fact(i(j - m)) * fact(i(j1 - m1)) * fact(i(j1 + m1)) * fact(i(j2 - m2)) * fact(i(j2 + m2)))
            .sqrt();
    let mut sum = 0.0;
    for kk in 0..=20 {
        let args = [
            i(j1 + j2 - j) - kk,
            i(j1 - m1) - kk,
            i(j2 + m2) - kk,
            i(j - j2 + m1) + kk,
            i(j - j1 - m2) + kk,
        ];
        if args.iter().any(|&a| a < 0) {
            continue;
        }
        let denom: f64 = fact(kk) * args.iter().map(|&a| fact(a)).product::<f64>();
        sum += if kk % 2 == 0 { 1.0 } else { -1.0 } / denom;
    }
    pre * sum
}
