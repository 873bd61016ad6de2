use proptest::prelude::*;
use sweil::algebra::{canonicalize, AlgebraError, FieldElem, Gen, XiKind};
use sweil::constants;
use sweil::rational::{q, qi, Q};

fn xi(kind: XiKind, arg: Q, order: i32) -> Gen {
    Gen::Xi { kind, arg, order }
}

#[test]
fn canonicalize_reflects_to_the_right_half() {
    assert_eq!(canonicalize(XiKind::F, qi(-1), 0).unwrap(), (xi(XiKind::F, qi(2), 0), 1));
    assert_eq!(canonicalize(XiKind::F, qi(0), -1).unwrap(), (Gen::residue(), -1));
    assert_eq!(canonicalize(XiKind::F, q(1, 2), 1).unwrap(), (xi(XiKind::F, q(1, 2), 1), -1));
    assert_eq!(canonicalize(XiKind::Feta, q(-3, 2), 3).unwrap(), (xi(XiKind::Feta, q(5, 2), 3), -1));
}

#[test]
fn canonicalize_rejects_pole_data_off_the_pole() {
    assert!(matches!(canonicalize(XiKind::F, qi(3), -1), Err(AlgebraError::BadOrder { .. })));
    assert!(canonicalize(XiKind::Feta, qi(1), -1).is_err());
}

#[test]
fn odd_derivatives_at_the_centre_vanish() {
    let g = xi(XiKind::F, q(1, 2), 1);
    assert!(g.vanishes());
    assert!(FieldElem::xi_data(XiKind::F, q(1, 2), 1).unwrap().is_zero());
    assert!(!FieldElem::xi_data(XiKind::F, q(1, 2), 2).unwrap().is_zero());
}

#[test]
fn residue_conventions() {
    let res = FieldElem::gen(Gen::residue());
    assert_eq!(FieldElem::xi_f(qi(1)), res);
    assert_eq!(FieldElem::xi_f(qi(0)), res.neg());
    assert!(FieldElem::xi_e(qi(1)).add(&FieldElem::xi_e(qi(0))).is_zero());
    assert_eq!(FieldElem::xi_e(qi(1)), res.mul(&FieldElem::xi_feta(qi(1))));
}

#[test]
fn quotients_cancel() {
    let x = FieldElem::xi_f(qi(3));
    let y = FieldElem::xi_feta(q(5, 2));
    let one = x.div(&y).unwrap().mul(&y.div(&x).unwrap());
    assert!(one.is_one());
    assert_eq!(FieldElem::zero().inv(), Err(AlgebraError::DivisionByZero));
}

#[test]
fn c31_reduces() {
    let expect = FieldElem::xi_f(qi(4)).div(&FieldElem::xi_f(qi(3))).unwrap();
    assert_eq!(constants::c_nr(3, 1).unwrap(), expect);
}

#[test]
fn rendering_is_stable() {
    assert_eq!(FieldElem::xi_f(qi(3)).to_string(), "xiF(3)");
    assert_eq!(FieldElem::xi_feta(qi(2)).to_string(), "xiFeta(2)");
    assert_eq!(Gen::residue().to_string(), "ResF");
    assert_eq!(xi(XiKind::F, q(1, 2), 1).to_string(), "xiF'(1/2)");
    assert_eq!(Gen::DiscE.to_string(), "DE");
}

#[test]
fn disc_powers_add() {
    let a = FieldElem::disc_e(q(1, 2));
    let b = FieldElem::disc_e(q(-3, 2));
    assert_eq!(a.mul(&b), FieldElem::disc_e(qi(-1)));
    assert_eq!(a.powi(4).unwrap(), FieldElem::disc_e(qi(2)));
    assert!(FieldElem::disc_e(qi(0)).is_one());
}

fn arb_gen() -> impl Strategy<Value = FieldElem> {
    prop_oneof![
        (2i64..12).prop_map(|n| FieldElem::xi_f(q(n, 2))),
        (1i64..12).prop_map(|n| FieldElem::xi_feta(q(n, 2))),
        (-4i64..5).prop_map(|n| FieldElem::disc_e(q(n, 2))),
        Just(FieldElem::gen(Gen::residue())),
        (-5i64..6).prop_map(FieldElem::int),
    ]
}

fn arb_elem() -> impl Strategy<Value = FieldElem> {
    arb_gen().prop_recursive(3, 12, 2, |inner| {
        (inner.clone(), inner, 0u8..3).prop_map(|(a, b, op)| match op {
            0 => a.add(&b),
            1 => a.sub(&b),
            _ => a.mul(&b),
        })
    })
}

proptest! {
    #[test]
    fn field_laws(a in arb_elem(), b in arb_elem(), c in arb_elem()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.add(&b).sub(&b), a.clone());
        prop_assert!(a.sub(&a).is_zero());
        if !b.is_zero() {
            prop_assert_eq!(a.mul(&b).div(&b).unwrap(), a.clone());
            prop_assert!(b.div(&b).unwrap().is_one());
        }
    }

    #[test]
    fn canonicalize_is_idempotent(n in -12i64..14, k in -1i32..4, eta in any::<bool>()) {
        let kind = if eta { XiKind::Feta } else { XiKind::F };
        let at = q(n, 2);
        if let Ok((g, _)) = canonicalize(kind, at, k) {
            if let Gen::Xi { kind, arg, order } = g {
                prop_assert!(arg >= q(1, 2));
                if !g.vanishes() {
                    prop_assert_eq!(canonicalize(kind, arg, order).unwrap(), (g, 1));
                }
            }
        }
    }
}
