//! Constant terms of spherical Eisenstein series and extraction.

use sweil::eisenstein::{pole_order, pz_vanishing_order, Engine};
use sweil::rational::{q, qi};
use sweil::scalar::Symbolic;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ctx = Symbolic;
    let eng = Engine::new(&ctx);

    for (m, t) in [(5, 3), (6, 3), (7, 3)] {
        let f = pole_order(m, t, q(3, 2))?;
        println!("E^({m},{t}) at 3/2: pole {} ({}), P_z order {}", f.order, f.provenance, pz_vanishing_order(m, t, q(3, 2)));
    }

    let ct = eng.constant_term(5, 2, -1, q(1, 1))?;
    println!("\nconstant term of E^(5,2)_(-1)(1):\n{ct}");
    for (e, k) in ct.basis() {
        println!("  ||a||^{e} log^{k}: {}", ct.extract(e, k));
    }

    println!("\nbelow the pole: {} terms", eng.constant_term(5, 2, -2, q(1, 1))?.len());
    let formal = eng.constant_term_formal(4, 2, -2, q(1, 1))?.extract(qi(2), 0);
    println!("E^(4,2)_(-2)(1) at ||a||^2, before the vanishing is used:\n  {formal}");
    println!("\npole facts consulted: {:#?}", eng.facts_used());
    Ok(())
}
