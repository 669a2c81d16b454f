use proptest::prelude::*;
use qsl2::scalars::{LaurentPoly, RadicalScalar};
use qsl2::uqsl2::{
    adjoint_action, antipode, coproduct, counit, parse_element, verify_hopf_axioms,
    AlgebraElement, Monomial, Tensor,
};

fn monomial(max_ab: u32, max_c: i32) -> impl Strategy<Value = AlgebraElement> {
    (0..=max_ab, 0..=max_ab, -max_c..=max_c)
        .prop_map(|(a, b, c)| AlgebraElement::monomial(Monomial::new(a, b, c)))
}

fn coeff() -> impl Strategy<Value = RadicalScalar> {
    (-3i64..=3, -2i64..=2)
        .prop_filter("nonzero", |(n, _)| *n != 0)
        .prop_map(|(n, e)| RadicalScalar::from(LaurentPoly::integer(n).shift(e)))
}

fn element(max_ab: u32, max_c: i32, max_terms: usize) -> impl Strategy<Value = AlgebraElement> {
    prop::collection::vec(((0..=max_ab, 0..=max_ab, -max_c..=max_c), coeff()), 1..=max_terms)
        .prop_map(|ts| {
            AlgebraElement::from_terms(
                ts.into_iter()
                    .map(|((a, b, c), x)| (Monomial::new(a, b, c), x)),
            )
        })
}

fn k2() -> AlgebraElement {
    AlgebraElement::k_pow(2)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn multiplication_is_associative(x in monomial(3, 3), y in monomial(3, 3), z in monomial(3, 3)) {
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
    }

    #[test]
    fn unit_law(x in element(3, 3, 4)) {
        prop_assert_eq!(&AlgebraElement::one() * &x, x.clone());
        prop_assert_eq!(&x * &AlgebraElement::one(), x);
    }

    #[test]
    fn printer_round_trips(x in element(3, 3, 4)) {
        prop_assert_eq!(parse_element(&x.to_string()).unwrap(), x);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn coproduct_is_multiplicative(x in monomial(2, 2), y in monomial(2, 2)) {
        prop_assert_eq!(coproduct(&(&x * &y)), &coproduct(&x) * &coproduct(&y));
    }

    #[test]
    fn antipode_reverses_products(x in monomial(2, 3), y in monomial(2, 3)) {
        prop_assert_eq!(antipode(&(&x * &y)), &antipode(&y) * &antipode(&x));
    }

    #[test]
    fn adjoint_is_an_action(a in monomial(1, 1), b in monomial(1, 1), x in monomial(1, 2)) {
        let lhs = adjoint_action(&a, &adjoint_action(&b, &x));
        prop_assert_eq!(lhs, adjoint_action(&(&a * &b), &x));
    }

    #[test]
    fn counit_axiom(x in element(2, 2, 3)) {
        let d = coproduct(&x);
        let mut left = AlgebraElement::zero();
        let mut right = AlgebraElement::zero();
        for ([m1, m2], c) in d.terms() {
            let e1 = counit(&AlgebraElement::monomial(*m1));
            let e2 = counit(&AlgebraElement::monomial(*m2));
            left = &left + &AlgebraElement::monomial(*m2).scale(&(c * &e1));
            right = &right + &AlgebraElement::monomial(*m1).scale(&(c * &e2));
        }
        prop_assert_eq!(&left, &x);
        prop_assert_eq!(&right, &x);
    }

    #[test]
    fn hopf_axioms_on_random_elements(x in element(2, 2, 2)) {
        prop_assert!(verify_hopf_axioms(&[x]).all_passed());
    }
}

#[test]
fn antipode_squared_is_conjugation_by_k2() {
    for src in ["e", "f", "k", "e*f", "e^2*f*k"] {
        let x = parse_element(src).unwrap();
        let s2 = antipode(&antipode(&x));
        let conj = &(&AlgebraElement::k_pow(-2) * &x) * &k2();
        assert_eq!(s2, conj, "{src}");
    }
}

#[test]
fn adjoint_on_unit_is_counit() {
    for a in [
        AlgebraElement::e(),
        AlgebraElement::f(),
        AlgebraElement::k(),
        AlgebraElement::k_inv(),
    ] {
        let got = adjoint_action(&a, &AlgebraElement::one());
        assert_eq!(got, AlgebraElement::scalar(counit(&a)));
    }
}

#[test]
fn coproduct_of_k_power_is_grouplike() {
    let x = AlgebraElement::k_pow(-3);
    assert_eq!(coproduct(&x), Tensor::pure([&x, &x]));
}
