use proptest::prelude::*;
use sweil::algebra::FieldElem;
use sweil::constants;
use sweil::eisenstein::{
    middle, pole_order, pz_vanishing_order, reflected, siegel_fe_factor, ConstKey, ConstMode, ConstantTermExpr, EisError,
    EisSymbol, Engine, LinComb,
};
use sweil::laurent::expr_coeff;
use sweil::rational::{q, qi};
use sweil::scalar::Symbolic;
use sweil::Error;

fn sym() -> Engine<'static, Symbolic> {
    Engine::new(&Symbolic)
}

#[test]
fn pole_table_examples() {
    for r in 2..=6u32 {
        let ri = r as i64;
        assert_eq!(pole_order(2 * r - 1, r, q(ri, 2)).unwrap().order, 2);
        assert_eq!(pole_order(2 * r - 1, 2 * r - 1, q(-1, 2)).unwrap().order, 0);
        for n in 2 * r..2 * r + 4 {
            assert_eq!(pole_order(n, r, q(ri, 2)).unwrap().order, 1);
        }
        assert_eq!(pole_order(2 * r + 1, r, q(ri + 2, 2)).unwrap().order, 0);
    }
    let f = pole_order(4, 4, qi(2)).unwrap();
    assert_eq!((f.order, f.exact), (1, false));
}

#[test]
fn pole_table_refuses_unknown_points() {
    assert!(matches!(pole_order(4, 4, q(-1, 2)), Err(EisError::UnknownPole { .. })));
    assert!(pole_order(5, 2, q(1, 3)).is_err());
    assert!(pole_order(3, 0, qi(0)).is_err());
}

#[test]
fn regularizing_polynomial() {
    for r in 1..=6u32 {
        let ri = r as i64;
        assert_eq!(pz_vanishing_order(2 * r, r, q(ri, 2)), 0);
        assert_eq!(pz_vanishing_order(2 * r + 1, r, q(ri + 2, 2)), 0);
    }
}

proptest! {
    #[test]
    fn pole_bound_above_the_centre(r in 1u32..7, extra in 1u32..6, k in 0i64..12) {
        let n = r + extra;
        let s0 = q(r as i64 + 1 + k, 2);
        prop_assert!(pz_vanishing_order(n, r, s0) <= 1);
        if let Ok(f) = pole_order(n, r, s0) {
            prop_assert!(f.order <= 1);
        }
    }
}

#[test]
fn below_the_pole_is_empty() {
    let eng = sym();
    for r in 2..=5u32 {
        let at = q(r as i64, 2);
        assert!(eng.constant_term(2 * r, r, -2, at).unwrap().is_empty());
        assert!(eng.constant_term(2 * r - 1, r, -3, at).unwrap().is_empty());
    }
}

#[test]
fn boundary_double_pole_coefficient() {
    let eng = sym();
    for r in 2..=5u32 {
        let ri = r as i64;
        let at = q(ri, 2);
        let ct = eng.constant_term_formal(2 * r, r, -2, at).unwrap();
        assert_eq!(ct.len(), 2);
        assert_eq!(ct.basis(), vec![(qi(ri), 0)]);
        let l = ct.extract(qi(ri), 0);
        let f = expr_coeff(&Symbolic, &middle(2 * r, r).unwrap(), at, 0).unwrap();
        let g = expr_coeff(&Symbolic, &reflected(2 * r, r).unwrap(), at, -1).unwrap();
        assert_eq!(l.coeff(&EisSymbol::e(2 * r - 1, r, -2, at)), f);
        assert_eq!(l.coeff(&EisSymbol::e(2 * r - 1, r - 1, -1, q(ri - 1, 2))), g);
    }
}

#[test]
fn boundary_simple_pole_coefficient() {
    let eng = sym();
    for r in 2..=4u32 {
        let ri = r as i64;
        let at = q(ri, 2);
        let ct = eng.constant_term(2 * r, r, -1, at).unwrap();
        let at_r: Vec<_> = ct.iter().filter(|(e, ..)| *e == qi(ri)).collect();
        assert_eq!(at_r.len(), 5);
        let logs = ct.extract(qi(ri), 1);
        let g = expr_coeff(&Symbolic, &reflected(2 * r, r).unwrap(), at, -1).unwrap();
        assert_eq!(logs.len(), 1);
        assert_eq!(logs.coeff(&EisSymbol::e(2 * r - 1, r - 1, -1, q(ri - 1, 2))), g.neg());
    }
}

#[test]
fn extraction_of_nothing() {
    let ct: ConstantTermExpr<FieldElem> = ConstantTermExpr::new();
    assert!(ct.extract(qi(2), 0).is_empty());
}

#[test]
fn base_identity_fixes_d() {
    let eng = sym();
    for r in 2..=5u32 {
        let d = eng.constant(ConstKey::SecondRange { n: 2 * r - 1, r }).unwrap();
        assert_eq!(d, constants::d_nr(2 * r - 1, r).unwrap());
    }
}

#[test]
fn siegel_functional_equation_rewrite() {
    let eng = sym();
    for r in 2..=4u32 {
        let m = 2 * r - 1;
        let beta = siegel_fe_factor(m);
        let b1 = expr_coeff(&Symbolic, &beta, q(-1, 2), 1).unwrap();
        let b2 = expr_coeff(&Symbolic, &beta, q(-1, 2), 2).unwrap();
        let at = q(1, 2);
        let l0 = eng.siegel_fe_rewrite(m, 0, q(-1, 2)).unwrap();
        assert_eq!(l0.len(), 1);
        assert_eq!(l0.coeff(&EisSymbol::e(m, m, -1, at)), b1.neg());
        let l1 = eng.siegel_fe_rewrite(m, 1, q(-1, 2)).unwrap();
        assert_eq!(l1.len(), 2);
        assert_eq!(l1.coeff(&EisSymbol::e(m, m, 0, at)), b1);
        assert_eq!(l1.coeff(&EisSymbol::e(m, m, -1, at)), b2.neg());
        assert!(eng.siegel_fe_rewrite(m, -1, q(-1, 2)).unwrap().is_empty());
    }
}

#[test]
fn first_term_rewrites() {
    let eng = sym();
    for r in 2..=5u32 {
        let ri = r as i64;
        let at = q(ri - 1, 2);
        let l = LinComb::single(EisSymbol::e(2 * r - 1, r - 1, -1, at), FieldElem::one());
        let out = eng.rewrite(&l).unwrap();
        let c = constants::c_nr(2 * r - 1, r - 1).unwrap();
        assert_eq!(out.len(), 1);
        assert_eq!(out.coeff(&EisSymbol::e(2 * r - 1, 2 * r - 1, -1, q(1, 2))), c);

        let l = LinComb::single(EisSymbol::e(2 * r - 2, r - 1, -1, at), FieldElem::one());
        let out = eng.rewrite(&l).unwrap();
        assert_eq!(out.coeff(&EisSymbol::e(2 * r - 2, 2 * r - 2, 0, qi(0))), constants::c_r(r - 1).unwrap());
    }
    let plain = LinComb::single(EisSymbol::e(5, 2, 0, qi(3)), FieldElem::int(7));
    let out = eng.rewrite(&plain).unwrap();
    assert_eq!(out.len(), 1);
    assert_eq!(out.coeff(&EisSymbol::e(5, 2, 0, qi(3))), FieldElem::int(7));
}

#[test]
fn derived_and_closed_constants_agree() {
    let derived = sym();
    let closed = Engine::new(&Symbolic).with_mode(ConstMode::Closed);
    let keys = [
        ConstKey::FirstTerm { n: 7, r: 2 },
        ConstKey::FirstTerm { n: 9, r: 4 },
        ConstKey::Boundary { r: 3 },
        ConstKey::SecondRange { n: 5, r: 4 },
    ];
    for k in keys {
        assert_eq!(derived.constant(k).unwrap(), closed.constant(k).unwrap(), "{k:?}");
    }
    assert!(!derived.facts_used().is_empty());
}

#[test]
fn induction_closes() {
    let eng = sym();
    for r in 2..=5u32 {
        let two_c = FieldElem::int(2).mul(&constants::c_r(r).unwrap());
        let chain = eng.second_term_chain(r, r - 2).unwrap();
        assert_eq!(chain.len(), r as usize - 1);
        for st in &chain {
            assert_eq!(st.n, 2 * r - st.j - 1);
            assert_eq!(st.coef_c.neg(), two_c);
            assert_eq!(st.coef_a, eng.middle_product(r, st.j).unwrap());
            assert_eq!(st.coef_b, eng.reflected_product(r, st.j).unwrap());
            assert!(st.rest.is_empty(), "r={r} j={}: {}", st.j, st.rest);
            assert!(st.log_parts.iter().all(|(_, l)| l.is_empty()));
            assert!(!st.gamma().is_zero());
        }
    }
}

#[test]
fn boundary_value_is_two() {
    let eng = sym();
    for r in 2..=6u32 {
        assert_eq!(eng.boundary_two(r).unwrap(), FieldElem::int(2));
    }
}

#[test]
fn out_of_range_requests() {
    let eng = sym();
    assert!(matches!(eng.second_term_chain(1, 0), Err(Error::Range(_))));
    assert!(eng.second_term_chain(3, 2).is_err());
    assert!(eng.boundary_two(1).is_err());
    assert!(eng.constant(ConstKey::FirstTerm { n: 4, r: 2 }).is_err());
    assert!(eng.constant(ConstKey::SecondRange { n: 6, r: 3 }).is_err());
    assert!(eng.constant_term(1, 1, 0, qi(0)).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn extraction_partitions(r in 1u32..5, extra in 1u32..4, d in -2i32..1) {
        let n = (r + extra).min(2 * r + 1);
        let ct = sym().constant_term_formal(n, r, d, q(r as i64, 2)).unwrap();
        let parts: Vec<_> = ct.basis().into_iter().map(|b| (b, ct.extract(b.0, b.1))).collect();
        let total: usize = parts.iter().map(|(_, l)| l.len()).sum();
        prop_assert_eq!(total, ct.len());
        let rebuilt = ConstantTermExpr::from_parts(parts);
        let a: Vec<_> = ct.iter().map(|(e, k, s, c)| (e, k, *s, c.clone())).collect();
        let b: Vec<_> = rebuilt.iter().map(|(e, k, s, c)| (e, k, *s, c.clone())).collect();
        prop_assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(&b) {
            prop_assert_eq!((x.0, x.1, x.2), (y.0, y.1, y.2));
            prop_assert_eq!(&x.3, &y.3);
        }
    }
}
