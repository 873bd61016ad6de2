//! Laurent expansion of zeta quotients at rational points.

use sweil::eisenstein::{middle, siegel_fe_factor, siegel_reflected};
use sweil::laurent::{expand_expr, expr_coeff, AffineArg, Laurent, ZetaExpr};
use sweil::rational::q;
use sweil::scalar::Symbolic;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ctx = Symbolic;

    let h = siegel_reflected(4)?;
    println!("H^(4)(s) = {h}");
    println!("{}", expand_expr(&ctx, &h, q(0, 1), 1)?);

    let f = middle(7, 3)?;
    println!("F^(7,3)(3/2) = {}", expr_coeff(&ctx, &f, q(3, 2), 0)?);

    let beta = siegel_fe_factor(3);
    println!("beta_3 at -1/2, order 1: {}", expr_coeff(&ctx, &beta, q(-1, 2), 1)?);

    // Series arithmetic directly.
    let z = ZetaExpr::xi_e(AffineArg::two_s_plus(q(0, 1)), 1);
    let a = expand_expr(&ctx, &z, q(0, 1), 2)?;
    let prod: Laurent<_> = a.mul(&a.inv()?)?;
    println!("xiE(2s) * xiE(2s)^(-1) at 0:\n{prod}");
    Ok(())
}
