use num_rational::BigRational;
use proptest::prelude::*;
use sweil::algebra::{FieldElem, Gen, XiKind};
use sweil::constants;
use sweil::eisenstein::{middle, reflected, siegel_fe_factor, siegel_reflected};
use sweil::laurent::{expand_expr, expand_symbol, expr_coeff, AffineArg, Laurent, LaurentError, SymbolKind, ZetaExpr};
use sweil::rational::{q, qi, Q};
use sweil::scalar::Symbolic;

fn xf(n: i64) -> FieldElem {
    FieldElem::xi_f(qi(n))
}

fn xfe(n: i64) -> FieldElem {
    FieldElem::xi_feta(qi(n))
}

fn xe(n: i64) -> FieldElem {
    FieldElem::xi_e(qi(n))
}

fn ratio(num: &[FieldElem], den: &[FieldElem]) -> FieldElem {
    let n = num.iter().fold(FieldElem::one(), |a, x| a.mul(x));
    let d = den.iter().fold(FieldElem::one(), |a, x| a.mul(x));
    n.div(&d).unwrap()
}

#[test]
fn pole_of_xi_f_through_a_doubled_argument() {
    let l = expand_symbol(&Symbolic, SymbolKind::F, AffineArg::two_s_plus(qi(1)), q(-1, 2), 0).unwrap();
    assert_eq!(l.order(), -1);
    let res = FieldElem::gen(Gen::residue());
    // xi_F(2u) near u = 0 has residue -ResF/2 under xi_F(s) = xi_F(1 - s)
    assert_eq!(l.coefficient(-1).unwrap(), res.scale(&BigRational::new((-1).into(), 2.into())));
}

#[test]
fn xi_e_at_zero_through_2s() {
    let e = ZetaExpr::xi_e(AffineArg::two_s_plus(qi(0)), 1);
    let l = expand_expr(&Symbolic, &e, qi(0), -1).unwrap();
    assert_eq!(l.order(), -1);
    assert_eq!(l.coefficient(-1).unwrap(), xe(0).scale(&BigRational::new(1.into(), 2.into())));
}

#[test]
fn regular_point_gives_the_value() {
    let l = expand_symbol(&Symbolic, SymbolKind::F, AffineArg::s_plus(qi(3)), qi(0), 0).unwrap();
    assert_eq!(l.order(), 0);
    assert_eq!(l.coefficient(0).unwrap(), xf(3));
}

#[test]
fn middle_factor_on_the_boundary() {
    let f = middle(6, 3).unwrap();
    assert_eq!(expr_coeff(&Symbolic, &f, q(3, 2), 0).unwrap(), ratio(&[xe(3)], &[xe(6)]));
    let f = middle(5, 2).unwrap();
    assert_eq!(expr_coeff(&Symbolic, &f, qi(1), 0).unwrap(), ratio(&[xe(3)], &[xe(5)]));
}

#[test]
fn reflected_factor_one_step_in() {
    let g = reflected(7, 3).unwrap();
    let v = expr_coeff(&Symbolic, &g, q(3, 2), 0).unwrap();
    assert_eq!(v, ratio(&[xe(3), xe(-1)], &[xfe(5), xf(6), xe(7)]));
}

#[test]
fn siegel_reflected_shape() {
    let h = siegel_reflected(4).unwrap();
    let s0 = q(7, 3);
    let at = |a: Q| a + s0 * 2;
    let v = expr_coeff(&Symbolic, &h, s0, 0).unwrap();
    let expect = ratio(
        &[FieldElem::xi_e(at(qi(0))), FieldElem::xi_f(at(qi(3)))],
        &[FieldElem::xi_e(at(qi(3))), FieldElem::xi_f(at(qi(4)))],
    );
    assert_eq!(v, expect);
}

#[test]
fn unit_quotient_is_one() {
    let g = reflected(7, 3).unwrap();
    let one = g.div(&g).unwrap();
    let l = expand_expr(&Symbolic, &one, q(3, 2), 2).unwrap();
    assert_eq!(l.coefficient(0).unwrap(), FieldElem::one());
    assert!(l.coefficient(1).unwrap().is_zero());
    assert!(l.coefficient(2).unwrap().is_zero());
}

#[test]
fn beta_has_a_simple_zero_at_minus_half() {
    for r in 2..=4u32 {
        let beta = siegel_fe_factor(2 * r - 1);
        let l = expand_expr(&Symbolic, &beta, q(-1, 2), 1).unwrap();
        assert!(l.coefficient(-1).unwrap().is_zero());
        assert!(l.coefficient(0).unwrap().is_zero());
        assert!(!l.coefficient(1).unwrap().is_zero());
    }
    let b1 = expr_coeff(&Symbolic, &constants::beta(3), q(-1, 2), 1).unwrap();
    let expect = ratio(&[xf(4), xfe(3)], &[xe(0)]).scale(&BigRational::from_integer(2.into()));
    assert_eq!(b1, expect);
}

#[test]
fn product_of_simple_poles() {
    let a = expand_symbol(&Symbolic, SymbolKind::F, AffineArg::s_plus(qi(0)), qi(1), 1).unwrap();
    let b = expand_symbol(&Symbolic, SymbolKind::F, AffineArg::new(qi(1), -1), qi(1), 1).unwrap();
    let p = a.mul(&b).unwrap();
    assert_eq!(p.order(), -2);
    assert_eq!(p.coefficient(-2).unwrap(), a.coefficient(-1).unwrap().mul(&b.coefficient(-1).unwrap()));
}

#[test]
fn coefficients_past_the_window_are_refused() {
    let l = expand_symbol(&Symbolic, SymbolKind::Feta, AffineArg::s_plus(qi(2)), qi(0), 1).unwrap();
    assert!(matches!(l.coefficient(2), Err(LaurentError::BeyondTruncation { d: 2, hi: 1 })));
    let z: Laurent<FieldElem> = Laurent::zero(qi(0), 3);
    assert!(z.inv().is_err());
}

#[test]
fn mismatched_points_are_refused() {
    let a = Laurent::constant(qi(0), FieldElem::one(), 2);
    let b = Laurent::constant(qi(1), FieldElem::one(), 2);
    assert!(matches!(a.add(&b), Err(LaurentError::PointMismatch(..))));
}

#[test]
fn derivative_data_follows_the_functional_equation() {
    // xi_F(1 - s) = xi_F(s): the expansion at 1/2 has no odd terms
    let l = expand_symbol(&Symbolic, SymbolKind::F, AffineArg::s_plus(qi(0)), q(1, 2), 4).unwrap();
    assert!(l.coefficient(1).unwrap().is_zero());
    assert!(l.coefficient(3).unwrap().is_zero());
    let d2 = FieldElem::xi_data(XiKind::F, q(1, 2), 2).unwrap().scale(&BigRational::new(1.into(), 2.into()));
    assert_eq!(l.coefficient(2).unwrap(), d2);
}

fn arb_series() -> impl Strategy<Value = Laurent<FieldElem>> {
    let coeff = prop_oneof![
        (-4i64..5).prop_map(FieldElem::int),
        (2i64..6).prop_map(|n| FieldElem::xi_f(qi(n))),
        (1i64..5).prop_map(|n| FieldElem::xi_feta(qi(n))),
    ];
    (-2i32..2, prop::collection::vec(coeff, 1..5)).prop_map(|(start, c)| Laurent::from_coeffs(q(1, 2), start, c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(a in arb_series(), b in arb_series(), c in arb_series()) {
        let lo = |x: &Laurent<FieldElem>, y: &Laurent<FieldElem>| x.hi().min(y.hi());
        let ab = a.mul(&b).unwrap();
        let ba = b.mul(&a).unwrap();
        for d in ab.order()..=lo(&ab, &ba) {
            prop_assert_eq!(ab.coefficient(d).unwrap(), ba.coefficient(d).unwrap());
        }
        let left = a.mul(&b.add(&c).unwrap()).unwrap();
        let right = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
        let top = lo(&left, &right);
        for d in left.order().min(right.order())..=top {
            prop_assert_eq!(left.coefficient(d).unwrap(), right.coefficient(d).unwrap());
        }
        let z = a.sub(&a).unwrap();
        for d in z.order()..=z.hi() {
            prop_assert!(z.coefficient(d).unwrap().is_zero());
        }
    }

    #[test]
    fn inverse_round_trip(a in arb_series()) {
        prop_assume!(a.leading().is_some());
        let one = a.mul(&a.inv().unwrap()).unwrap();
        prop_assert_eq!(one.order(), 0);
        for d in 0..=one.hi() {
            let expect = if d == 0 { FieldElem::one() } else { FieldElem::zero() };
            prop_assert_eq!(one.coefficient(d).unwrap(), expect);
        }
    }
}
