use sweil::algebra::{FieldElem, Gen, XiKind};
use sweil::constants;
use sweil::numeric::{bind_eval, Binding, Real};
use sweil::rational::{q, qi};
use sweil::scalar::Scalar;

const PI_OVER_6: f64 = std::f64::consts::PI / 6.0;
const TWO_CATALAN_OVER_PI: f64 = 2.0 * 0.915_965_594_177_219 / std::f64::consts::PI;

fn binding() -> Binding {
    Binding::new(30).unwrap()
}

fn value(b: &Binding, g: Gen) -> f64 {
    b.gen_value(&g).unwrap().0.to_f64()
}

#[test]
fn xi_q_at_two() {
    let b = binding();
    let v = value(&b, Gen::Xi { kind: XiKind::F, arg: qi(2), order: 0 });
    assert!((v - PI_OVER_6).abs() < 1e-15, "{v}");
}

#[test]
fn xi_twisted_at_two() {
    let b = binding();
    let v = value(&b, Gen::Xi { kind: XiKind::Feta, arg: qi(2), order: 0 });
    assert!((v - TWO_CATALAN_OVER_PI).abs() < 1e-15, "{v}");
}

#[test]
fn zeta_two_at_full_precision() {
    let b = binding();
    let p = b.bits();
    let z = b.with_evaluator(|ev| ev.zeta(qi(2)).map(|v| Real::from_raw(v, p))).unwrap();
    let pi = b.with_evaluator(|ev| ev.pi());
    let expect = pi.mul(&pi).mul(&Real::from_q(q(1, 6), p));
    assert!(z.sub(&expect).abs().to_f64() < 1e-28);
}

#[test]
fn residue_at_one() {
    let b = binding();
    let (r, err) = b.gen_value(&Gen::residue()).unwrap();
    assert!((r.to_f64() - 1.0).abs() < 1e-10);
    assert!(err < 1e-10);
}

#[test]
fn binding_of_exact_elements() {
    let b = binding();
    let one = bind_eval(&FieldElem::one(), &b).unwrap();
    assert_eq!(one.value.to_f64(), 1.0);
    let ratio = FieldElem::xi_e(qi(1)).div(&FieldElem::xi_e(qi(0))).unwrap();
    let v = bind_eval(&ratio, &b).unwrap().value;
    assert!(v.add(&Real::int(1, b.bits())).abs().to_f64() < 1e-28);
}

#[test]
fn boundary_constant_matches_the_direct_product() {
    let b = binding();
    let xf = |n: i64| b.gen_value(&Gen::Xi { kind: XiKind::F, arg: qi(n), order: 0 }).unwrap().0;
    let xfe = |n: i64| b.gen_value(&Gen::Xi { kind: XiKind::Feta, arg: qi(n), order: 0 }).unwrap().0;
    let e = |n: i64| if n == 1 { value_res(&b).mul(&xfe(1)) } else { xf(n).mul(&xfe(n)) };
    let direct = e(1).mul(&e(2)).mul(&e(3).mul(&e(4)).inv().unwrap()).mul(&Real::from_q(q(1, 2), b.bits()));
    let v = bind_eval(&constants::c_r(2).unwrap(), &b).unwrap();
    assert!(v.value.sub(&direct).abs().to_f64() < 1e-25 * direct.abs().to_f64());
    assert!(v.value.to_f64().is_finite() && v.value.to_f64() != 0.0);
}

fn value_res(b: &Binding) -> Real {
    b.gen_value(&Gen::residue()).unwrap().0
}

#[test]
fn functional_equations_and_factorization() {
    let b = binding();
    let p = b.bits();
    for k in 0..6 {
        let s = q(13 + 29 * k, 37) - qi(2);
        b.with_evaluator(|ev| {
            let w = |v| Real::from_raw(v, p);
            let f = w(ev.xi_f_raw(s).unwrap());
            let fm = w(ev.xi_f_raw(qi(1) - s).unwrap());
            assert!(f.sub(&fm).abs().to_f64() < 1e-25 * f.abs().to_f64());
            let eta = w(ev.xi_feta(s).unwrap());
            let etam = w(ev.xi_feta(qi(1) - s).unwrap());
            assert!(eta.sub(&etam).abs().to_f64() < 1e-25 * eta.abs().to_f64());
            let e = w(ev.xi_e_direct(s).unwrap());
            assert!(e.sub(&f.mul(&eta)).abs().to_f64() < 1e-25 * e.abs().to_f64());
        });
    }
}

#[test]
fn centre_derivative_vanishes() {
    let b = binding();
    for kind in [XiKind::F, XiKind::Feta] {
        let (d, _) = b.gen_value(&Gen::Xi { kind, arg: q(1, 2), order: 1 }).unwrap();
        assert!(d.abs().to_f64() < 1e-20);
        let (d2, _) = b.gen_value(&Gen::Xi { kind, arg: q(1, 2), order: 2 }).unwrap();
        assert!(d2.abs().to_f64() > 1e-3);
    }
}

#[test]
fn discriminants() {
    let b = binding();
    assert!((value(&b, Gen::DiscE) - 4.0).abs() < 1e-30);
    assert!((value(&b, Gen::DiscF) - 1.0).abs() < 1e-30);
    assert!((value(&b, Gen::LogDiscE) - 4f64.ln()).abs() < 1e-15);
}

#[test]
fn gamma_half() {
    let b = binding();
    let p = b.bits();
    let g = b.with_evaluator(|ev| ev.gamma(q(1, 2)).map(|v| Real::from_raw(v, p))).unwrap();
    assert!((g.to_f64() - std::f64::consts::PI.sqrt()).abs() < 1e-15);
}

#[test]
fn zero_denominator_is_refused() {
    let b = binding();
    let x = FieldElem::xi_f(qi(3));
    let z = x.sub(&x);
    assert!(z.is_zero());
    assert!(FieldElem::one().div(&z).is_err());
    assert!(FieldElem::gen(Gen::Xi { kind: XiKind::F, arg: q(1, 2), order: 1 }).is_zero());
    let vanishing = FieldElem::gen(Gen::DiscE).sub(&FieldElem::int(4));
    assert!(bind_eval(&FieldElem::one().div(&vanishing).unwrap(), &b).is_err());
}
