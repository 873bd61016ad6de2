//! High-precision values of the completed zeta functions of Q and Q(i).

use sweil::algebra::{FieldElem, Gen, XiKind};
use sweil::numeric::{bind_eval, Binding, Real};
use sweil::rational::q;
use sweil::scalar::Scalar;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let b = Binding::new(40)?;
    let p = b.bits();

    let s = q(7, 3);
    let (lhs, rhs, direct, split) = b.with_evaluator(|ev| -> Result<_, sweil::numeric::NumericError> {
        let w = |v| Real::from_raw(v, p);
        Ok((w(ev.xi_f_raw(s)?), w(ev.xi_f_raw(q(1, 1) - s)?), w(ev.xi_e_direct(s)?), w(ev.xi_f_raw(s)?).mul(&w(ev.xi_feta(s)?))))
    })?;
    println!("xi_Q(7/3)           = {}", lhs.to_sci(35));
    println!("functional equation : {:e}", lhs.sub(&rhs).abs().to_f64());
    println!("xi_E = xi_F xi_F(eta): {:e}", direct.sub(&split).abs().to_f64());

    let (res, err) = b.gen_value(&Gen::residue())?;
    println!("Res xi_Q at 1       = {} (+- {err:.1e})", res.to_sci(30));
    let (d, _) = b.gen_value(&Gen::Xi { kind: XiKind::F, arg: q(1, 2), order: 1 })?;
    println!("xi_Q'(1/2)          = {:e}", d.to_f64());

    let c = FieldElem::xi_f(q(4, 1)).div(&FieldElem::xi_f(q(3, 1)))?;
    let v = bind_eval(&c, &b)?;
    println!("xiF(4)/xiF(3)       = {} (rel err {:.1e})", v.value.to_sci(30), v.rel_err);
    Ok(())
}
