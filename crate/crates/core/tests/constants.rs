use num_rational::BigRational;
use sweil::algebra::{FieldElem, Gen};
use sweil::constants::{self, LocalValue};
use sweil::laurent::expr_coeff;
use sweil::numeric::{bind_eval, Binding};
use sweil::rational::{q, qi};
use sweil::scalar::Symbolic;

fn xe(n: i64) -> FieldElem {
    FieldElem::xi_e(qi(n))
}

fn xf(n: i64) -> FieldElem {
    FieldElem::xi_f(qi(n))
}

fn xfe(n: i64) -> FieldElem {
    FieldElem::xi_feta(qi(n))
}

fn prod(it: impl IntoIterator<Item = FieldElem>) -> FieldElem {
    it.into_iter().fold(FieldElem::one(), |a, x| a.mul(&x))
}

fn half() -> BigRational {
    BigRational::new(1.into(), 2.into())
}

#[test]
fn first_term_constant_on_the_edge() {
    for r in 1..=5i64 {
        let lead = xf(2 * r + 2).div(&xf(2 * r + 1)).unwrap();
        let tail = prod((2..=r).map(|i| xe(i).div(&xe(r + i)).unwrap()));
        assert_eq!(constants::c_nr(2 * r as u32 + 1, r as u32).unwrap(), lead.mul(&tail));
    }
}

#[test]
fn boundary_constant() {
    assert_eq!(constants::c_r(1).unwrap(), xe(1).div(&xe(2)).unwrap().scale(&half()));
    for r in 1..=6i64 {
        let c = prod((1..=r).map(|i| xe(i).div(&xe(r + i)).unwrap())).scale(&half());
        assert_eq!(constants::c_r(r as u32).unwrap(), c);
        assert_eq!(constants::c_r_recursive(&Symbolic, r as u32).unwrap(), c);
    }
    let b = Binding::new(30).unwrap();
    let v = bind_eval(&constants::c_r(2).unwrap(), &b).unwrap().value.to_f64();
    assert!(v.is_finite() && v != 0.0);
}

#[test]
fn second_range_constants() {
    for r in 2..=6i64 {
        let ru = r as u32;
        let base = constants::c_nr(2 * ru - 1, ru - 1)
            .unwrap()
            .mul(&prod([xe(1), xf(2 * r - 1)]))
            .div(&prod([xe(2 * r - 1), xf(2 * r)]))
            .unwrap();
        assert_eq!(constants::d_nr(2 * ru - 1, ru).unwrap(), base);
        if r >= 3 {
            let next = base.mul(&xe(2 * r - 1)).div(&xe(r - 1)).unwrap();
            assert_eq!(constants::d_nr(2 * ru - 2, ru).unwrap(), next);
        }
        for n in ru + 1..2 * ru {
            assert_eq!(constants::d_nr(n, ru).unwrap(), constants::d_nr_recursive(&Symbolic, n, ru).unwrap());
        }
    }
}

#[test]
fn closed_and_recursive_first_term_constants() {
    for r in 1..=4u32 {
        for n in 2 * r + 1..=10 {
            assert_eq!(constants::c_nr(n, r).unwrap(), constants::c_nr_recursive(&Symbolic, n, r).unwrap(), "({n},{r})");
        }
    }
}

#[test]
fn weak_first_term_display() {
    for r in 1..=3i64 {
        for n in 2 * r + 1..=2 * r + 3 {
            let de = FieldElem::disc_e(q(n * (2 * r - n), 2));
            let p = prod(
                (0..n)
                    .map(|i| FieldElem::xi_eta(qi(i + 1 - 2 * r), i).div(&FieldElem::xi_eta(qi(2 * n - 2 * r - i), i)).unwrap()),
            );
            assert_eq!(constants::a_nr(n as u32, r as u32).unwrap(), de.mul(&p), "({n},{r})");
        }
    }
}

#[test]
fn weak_second_range() {
    for r in 2..=5u32 {
        for n in r + 1..2 * r {
            let bd = constants::b_nr(n, r).unwrap().mul(&constants::d_nr(n, r).unwrap());
            let ni = n as i64;
            let window = prod((1..=r as i64).map(|i| xe(i).div(&xe(ni - i + 1)).unwrap()));
            assert_eq!(bd, window);
            assert_eq!(constants::xi_e_window(n, r), window);
        }
        let n = 2 * r - 1;
        let ri = r as i64;
        let expect = FieldElem::disc_e(q(-(n as i64), 2)).mul(&xe(0)).div(&prod([xfe(2 * ri - 1), xf(2 * ri)])).unwrap();
        assert_eq!(constants::weak2(n, r).unwrap(), expect);
    }
}

#[test]
fn lambda_and_phi0() {
    for r in 1..=4u32 {
        for n in r + 1..=2 * r + 2 {
            let (ni, ri) = (n as i64, r as i64);
            let at = expr_coeff(&Symbolic, &constants::lambda(n, r), q(ri, 2), 0).unwrap();
            let expect = FieldElem::disc_e(q(-ri * ni, 2)).mul(&prod((1..=ri).map(|i| xe(ni - i + 1).div(&xe(i)).unwrap())));
            assert_eq!(at, expect, "({n},{r})");
            assert_eq!(constants::lambda_value(n, r), expect);
            assert!(constants::phi0(n, r).mul(&FieldElem::disc_e(q(ri * ni, 2))).is_one());
        }
    }
}

#[test]
fn siegel_residue_rank_two() {
    let expect = prod([xf(1), xfe(2)]).div(&prod([xf(4), xfe(3)])).unwrap().scale(&half());
    assert_eq!(constants::siegel_residue(2), expect);
    assert_eq!(xf(1), FieldElem::gen(Gen::residue()));
}

#[test]
fn telescoping_product() {
    for r in 2..=8u32 {
        for n in r + 1..2 * r {
            assert!(constants::telescope(n, r).unwrap().is_one(), "({n},{r})");
        }
    }
}

#[test]
fn unramified_local_factor() {
    assert_eq!(constants::d_local(1, q(1, 2), 3, true).unwrap(), LocalValue::Exact(BigRational::new(9.into(), 8.into())));
    assert_eq!(constants::d_local(2, qi(0), 2, false).unwrap(), LocalValue::Exact(BigRational::new(8.into(), 9.into())));
    assert!(matches!(constants::d_local(2, q(1, 3), 5, true).unwrap(), LocalValue::Approx(_)));
    assert!(constants::d_local(1, q(-1, 2), 3, true).is_err());
    assert!(constants::d_local(1, qi(0), 1, true).is_err());
}

#[test]
fn ranges_are_enforced() {
    assert!(constants::c_nr(4, 2).is_err());
    assert!(constants::d_nr(6, 3).is_err());
    assert!(constants::d_nr(3, 3).is_err());
    assert!(constants::c_r(0).is_err());
    assert!(constants::a_nr(3, 2).is_err());
    assert!(constants::weak2(7, 3).is_err());
    assert!(constants::telescope(2, 1).is_err());
}
