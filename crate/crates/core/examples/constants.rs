//! Closed forms of the constants and the local factor.

use sweil::constants::{self, LocalValue};
use sweil::rational::q;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("c_(3,1)   = {}", constants::c_nr(3, 1)?);
    println!("c_2       = {}", constants::c_r(2)?);
    println!("d_(5,3)   = {}", constants::d_nr(5, 3)?);
    println!("a_(5,2)   = {}", constants::a_nr(5, 2)?);
    println!("b_(5,3)   = {}", constants::b_nr(5, 3)?);
    println!("weak2(5,3)= {}", constants::weak2(5, 3)?);
    println!("lambda_(5,3)(s) = {}", constants::lambda(5, 3));
    println!("residue of the Siegel series on U(3,3): {}", constants::siegel_residue(3));
    println!("telescope(7,5) = {}", constants::telescope(7, 5)?);

    match constants::d_local(3, q(1, 1), 5, false)? {
        LocalValue::Exact(x) => println!("d_(3,v)(1) at q = 5, inert: {x}"),
        LocalValue::Approx(x) => println!("d_(3,v)(1) at q = 5, inert: {x}"),
    }
    if let Err(e) = constants::d_nr(9, 3) {
        println!("d_(9,3): {e}");
    }
    Ok(())
}
