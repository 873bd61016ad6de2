//! Exact arithmetic in the field of formal completed-zeta values.

use sweil::algebra::{canonicalize, FieldElem, XiKind};
use sweil::rational::q;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let x3 = FieldElem::xi_f(q(3, 1));
    let x4 = FieldElem::xi_f(q(4, 1));
    let ratio = x4.div(&x3)?;
    println!("xiF(4)/xiF(3)        = {ratio}");

    // xi_F(-2) is xi_F(3) under s -> 1 - s.
    println!("xiF(-2) == xiF(3)    : {}", FieldElem::xi_f(q(-2, 1)) == x3);

    // Residue convention at the poles.
    println!("xiF(1), xiF(0)       = {}, {}", FieldElem::xi_f(q(1, 1)), FieldElem::xi_f(q(0, 1)));
    println!("xiE(0)               = {}", FieldElem::xi_e(q(0, 1)));

    let (g, sign) = canonicalize(XiKind::Feta, q(-3, 2), 1)?;
    println!("xiFeta'(-3/2)        = {sign} * {g}");

    let sum = ratio.add(&FieldElem::one()).mul(&x3);
    println!("(xiF(4)/xiF(3)+1)*xiF(3) = {sum}");
    println!("DE^(1/2) * DE^(3/2)  = {}", FieldElem::disc_e(q(1, 2)).mul(&FieldElem::disc_e(q(3, 2))));
    Ok(())
}
