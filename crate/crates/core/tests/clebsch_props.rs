use num_rational::BigRational;
use qsl2::clebsch::{cg_special_00, cg_table, compare_special_00, CGTable};
use qsl2::rep::{generator_matrix, tensor_rep_of_element, Generator};
use qsl2::scalars::{evaluate_at, HalfInt, RadicalScalar};
use qsl2::uqsl2::AlgebraElement;

mod common;
use common::classical_cg;

fn h(twice: i64) -> HalfInt {
    HalfInt::from_twice(twice)
}

fn small_pairs() -> Vec<(HalfInt, HalfInt)> {
    let mut out = Vec::new();
    for k in 0..=3 {
        for l in 0..=3 {
            out.push((h(k), h(l)));
        }
    }
    out
}

#[test]
fn columns_intertwine_the_actions() {
    for (k, l) in small_pairs() {
        let table = cg_table(k, l).unwrap();
        for g in [Generator::E, Generator::F, Generator::K] {
            let tensor = tensor_rep_of_element(k, l, &g.element()).unwrap().matrix;
            for j in table.js() {
                let emb = table.embedding(j);
                let pj = generator_matrix(j, g).unwrap().matrix;
                assert_eq!(&tensor * &emb, &emb * &pj, "k={k} l={l} j={j} g={g}");
            }
        }
    }
}

fn dot(a: &[(HalfInt, HalfInt, RadicalScalar)], b: &[(HalfInt, HalfInt, RadicalScalar)]) -> RadicalScalar {
    a.iter()
        .zip(b)
        .fold(RadicalScalar::zero(), |acc, (x, y)| &acc + &(&x.2 * &y.2))
}

#[test]
fn columns_are_orthonormal() {
    for (k, l) in small_pairs() {
        let table = cg_table(k, l).unwrap();
        let js = table.js();
        for &j in &js {
            for m in j.weights() {
                for &j2 in &js {
                    if !j2.admits(m) {
                        continue;
                    }
                    let d = dot(&table.column(j, m), &table.column(j2, m));
                    if j == j2 {
                        assert!(d.is_one(), "k={k} l={l} j={j} m={m}: {d}");
                    } else {
                        assert!(d.is_zero(), "k={k} l={l} j={j} j'={j2} m={m}: {d}");
                    }
                }
            }
        }
    }
}

#[test]
fn columns_are_complete() {
    for (k, l) in small_pairs() {
        let table = cg_table(k, l).unwrap();
        for p in k.weights() {
            for n in l.weights() {
                for p2 in k.weights() {
                    let n2 = p + n - p2;
                    if !l.admits(n2) {
                        continue;
                    }
                    let mut s = RadicalScalar::zero();
                    for j in table.js() {
                        let m = p + n;
                        s = &s + &(&table.get(j, p, n, m) * &table.get(j, p2, n2, m));
                    }
                    if p == p2 {
                        assert!(s.is_one(), "k={k} l={l} p={p} n={n}");
                    } else {
                        assert!(s.is_zero(), "k={k} l={l} p={p} n={n} p'={p2}");
                    }
                }
            }
        }
    }
}

#[test]
fn top_summand_highest_coefficient_is_one() {
    for (k, l) in small_pairs() {
        let table = cg_table(k, l).unwrap();
        assert!(table.get(k + l, k, l, k + l).is_one());
    }
}

#[test]
fn invariant_column_is_the_swapped_closed_form() {
    for twice in 0..=4 {
        let j = h(twice);
        let cmp = compare_special_00(j).unwrap();
        assert_eq!(cmp.swapped.map(i8::abs), Some(1), "j={j}");
        if twice > 0 {
            assert_eq!(cmp.literal, None, "j={j}");
        }
    }
    // the k = l = 1 invariant column, entry by entry
    let table = cg_table(h(2), h(2)).unwrap();
    let z = HalfInt::ZERO;
    let sign = compare_special_00(h(2)).unwrap().swapped.unwrap();
    for p in h(2).weights() {
        let expect = cg_special_00(h(2), -p, p);
        let expect = if sign < 0 { -expect } else { expect };
        assert_eq!(table.get(z, p, -p, z), expect);
    }
}

fn check_classical(table: &CGTable, t0: &BigRational) {
    for j in table.js() {
        for m in j.weights() {
            for (p, n, c) in table.column(j, m) {
                let got = evaluate_at(&c, t0).unwrap();
                let want = classical_cg(table.k, p, table.l, n, j, m);
                assert!(
                    (got - want).abs() < 1e-4,
                    "k={} l={} j={j} m={m} p={p}: {got} vs {want}",
                    table.k,
                    table.l
                );
            }
        }
    }
}

#[test]
fn classical_limit_matches_racah() {
    let t0 = BigRational::new(1_000_001.into(), 1_000_000.into());
    for k in 0..=2 {
        for l in 0..=2 {
            check_classical(&cg_table(h(k), h(l)).unwrap(), &t0);
        }
    }
}

#[test]
fn racah_oracle_sanity() {
    // ⟨1/2 1/2; 1/2 -1/2 | 0 0⟩ = 1/√2
    let v = classical_cg(h(1), h(1), h(1), h(-1), h(0), h(0));
    assert!((v - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-12);
    let v = classical_cg(h(2), h(0), h(2), h(0), h(2), h(0));
    assert!(v.abs() < 1e-12);
}

#[test]
fn identity_embedding_for_trivial_factor() {
    let table = cg_table(h(0), h(3)).unwrap();
    let x = tensor_rep_of_element(h(0), h(3), &AlgebraElement::e()).unwrap();
    assert_eq!(x.matrix, generator_matrix(h(3), Generator::E).unwrap().matrix);
    for m in h(3).weights() {
        assert!(table.get(h(3), HalfInt::ZERO, m, m).is_one());
    }
}
