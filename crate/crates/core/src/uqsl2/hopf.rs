use std::fmt;

use super::{AlgebraElement, Monomial, Rewriter, Tensor, TensorElement};
use crate::scalars::{t_delta, RadicalScalar, RatFunc};

fn delta_e() -> TensorElement {
    Tensor::pure([&AlgebraElement::e(), &AlgebraElement::k_inv()])
        + Tensor::pure([&AlgebraElement::k(), &AlgebraElement::e()])
}

fn delta_f() -> TensorElement {
    Tensor::pure([&AlgebraElement::f(), &AlgebraElement::k_inv()])
        + Tensor::pure([&AlgebraElement::k(), &AlgebraElement::f()])
}

fn tensor_pow(x: &TensorElement, n: u32, rw: &mut Rewriter) -> TensorElement {
    let mut acc = TensorElement::one();
    for _ in 0..n {
        acc = acc.mul_with(x, rw);
    }
    acc
}

fn coproduct_monomial(m: Monomial, rw: &mut Rewriter) -> TensorElement {
    let kc = Monomial::new(0, 0, m.c);
    let mut out = TensorElement::basis([kc, kc]);
    if m.b > 0 {
        out = tensor_pow(&delta_f(), m.b, rw).mul_with(&out, rw);
    }
    if m.a > 0 {
        out = tensor_pow(&delta_e(), m.a, rw).mul_with(&out, rw);
    }
    out
}

/// `Δ(x)`, extended multiplicatively from the generators.
pub fn coproduct(x: &AlgebraElement) -> TensorElement {
    let mut rw = Rewriter::default();
    let mut out = TensorElement::zero();
    for (m, c) in x.terms() {
        out = &out + &coproduct_monomial(*m, &mut rw).scale(c);
    }
    out
}

/// `(Δ ⊗ id)Δ(x)`.
pub fn iterated_coproduct(x: &AlgebraElement) -> Tensor<3> {
    delta_left(&coproduct(x))
}

fn delta_left(t: &TensorElement) -> Tensor<3> {
    let mut rw = Rewriter::default();
    let mut out = Tensor::<3>::zero();
    for ([m1, m2], c) in t.terms() {
        for ([u, v], d) in coproduct_monomial(*m1, &mut rw).terms() {
            out.add_term([*u, *v, *m2], c * d);
        }
    }
    out
}

fn delta_right(t: &TensorElement) -> Tensor<3> {
    let mut rw = Rewriter::default();
    let mut out = Tensor::<3>::zero();
    for ([m1, m2], c) in t.terms() {
        for ([u, v], d) in coproduct_monomial(*m2, &mut rw).terms() {
            out.add_term([*m1, *u, *v], c * d);
        }
    }
    out
}

fn counit_monomial(m: &Monomial) -> bool {
    m.a == 0 && m.b == 0
}

/// `ε(x)`: the sum of the coefficients of the pure powers of `k`.
pub fn counit(x: &AlgebraElement) -> RadicalScalar {
    x.terms()
        .filter(|(m, _)| counit_monomial(m))
        .fold(RadicalScalar::zero(), |acc, (_, c)| &acc + c)
}

fn antipode_monomial(m: Monomial, rw: &mut Rewriter) -> AlgebraElement {
    // S(e^a f^b k^c) = k^{-c} (−t² f)^b (−t⁻² e)^a
    let sign = if (m.a + m.b).is_multiple_of(2) { 1 } else { -1 };
    let scale = RatFunc::integer(sign).shift(2 * m.b as i64 - 2 * m.a as i64);
    let kf = AlgebraElement::monomial(Monomial::new(0, 0, -m.c))
        .mul_with(&AlgebraElement::monomial(Monomial::new(0, m.b, 0)), rw);
    kf.mul_with(&AlgebraElement::monomial(Monomial::new(m.a, 0, 0)), rw)
        .scale_rat(&scale)
}

/// `S(x)`, extended as an anti-homomorphism.
pub fn antipode(x: &AlgebraElement) -> AlgebraElement {
    let mut rw = Rewriter::default();
    let mut out = AlgebraElement::zero();
    for (m, c) in x.terms() {
        out = &out + &antipode_monomial(*m, &mut rw).scale(c);
    }
    out
}

/// `ad_a(b) = Σ a⁽¹⁾ b S(a⁽²⁾)`.
pub fn adjoint_action(a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
    let mut rw = Rewriter::default();
    coproduct(a).contract(|[m1, m2]| {
        let left = AlgebraElement::monomial(*m1).mul_with(b, &mut rw);
        left.mul_with(&antipode_monomial(*m2, &mut rw), &mut rw)
    })
}

/// Checks `Σ (a⁽¹⁾)⁽¹⁾ ⊗ S((a⁽¹⁾)⁽²⁾) a⁽²⁾ = a ⊗ 1` exactly.
pub fn verify_identity_2_1(a: &AlgebraElement) -> bool {
    let mut rw = Rewriter::default();
    let mut lhs = TensorElement::zero();
    for ([u, v, y], c) in iterated_coproduct(a).terms() {
        let right = antipode_monomial(*v, &mut rw).mul_with(&AlgebraElement::monomial(*y), &mut rw);
        for (m, d) in right.terms() {
            lhs.add_term([*u, *m], c * d);
        }
    }
    lhs == Tensor::pure([a, &AlgebraElement::one()])
}

/// `[k + m] = (t^{2m} k² − t^{−2m} k⁻²)/(t² − t⁻²)`.
pub fn bracket_of_k(m: i64) -> AlgebraElement {
    let inv = t_delta().recip().expect("t^2 - t^-2 is nonzero");
    AlgebraElement::from_terms([
        (Monomial::new(0, 0, 2), RadicalScalar::from(inv.shift(2 * m))),
        (Monomial::new(0, 0, -2), RadicalScalar::from(-inv.shift(-2 * m))),
    ])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    Coassociativity,
    CounitLeft,
    CounitRight,
    AntipodeLeft,
    AntipodeRight,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::Coassociativity => "(Δ⊗id)Δ = (id⊗Δ)Δ",
            Axiom::CounitLeft => "(ε⊗id)Δ = id",
            Axiom::CounitRight => "(id⊗ε)Δ = id",
            Axiom::AntipodeLeft => "m(S⊗id)Δ = ε",
            Axiom::AntipodeRight => "m(id⊗S)Δ = ε",
        };
        write!(f, "{s}")
    }
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct AxiomCheck {
    pub axiom: Axiom,
    pub element: String,
    pub passed: bool,
}

/// Outcome of [`verify_hopf_axioms`]; one entry per (axiom, element).
#[derive(Clone, Debug, Default, serde::Serialize)]
pub struct HopfReport {
    pub checks: Vec<AxiomCheck>,
}

impl HopfReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Exact check of coassociativity, the counit axiom and the antipode axiom
/// on each sample element.
pub fn verify_hopf_axioms(sample: &[AlgebraElement]) -> HopfReport {
    let mut report = HopfReport::default();
    let mut rw = Rewriter::default();
    for a in sample {
        let d = coproduct(a);
        let eps = AlgebraElement::scalar(counit(a));
        let mut push = |axiom, passed| {
            report.checks.push(AxiomCheck {
                axiom,
                element: a.to_string(),
                passed,
            })
        };
        push(Axiom::Coassociativity, delta_left(&d) == delta_right(&d));

        let left_counit = d.contract(|[m1, m2]| {
            if counit_monomial(m1) {
                AlgebraElement::monomial(*m2)
            } else {
                AlgebraElement::zero()
            }
        });
        push(Axiom::CounitLeft, &left_counit == a);
        let right_counit = d.contract(|[m1, m2]| {
            if counit_monomial(m2) {
                AlgebraElement::monomial(*m1)
            } else {
                AlgebraElement::zero()
            }
        });
        push(Axiom::CounitRight, &right_counit == a);

        let left_s = d.contract(|[m1, m2]| {
            antipode_monomial(*m1, &mut rw).mul_with(&AlgebraElement::monomial(*m2), &mut rw)
        });
        push(Axiom::AntipodeLeft, left_s == eps);
        let right_s = d.contract(|[m1, m2]| {
            AlgebraElement::monomial(*m1).mul_with(&antipode_monomial(*m2, &mut rw), &mut rw)
        });
        push(Axiom::AntipodeRight, right_s == eps);
    }
    report
}
