//! First and second term constants re-derived from constant terms.

use sweil::constants;
use sweil::eisenstein::Engine;
use sweil::scalar::Symbolic;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ctx = Symbolic;
    let eng = Engine::new(&ctx);

    let c = eng.derive_first_term(7, 3)?;
    println!("c_(7,3) derived: {}", c.value);
    println!("  from {}  and  {}", c.lhs, c.rhs);
    println!("  closed form agrees: {}", c.value == constants::c_nr(7, 3)?);

    let b = eng.derive_boundary(3)?;
    println!("c_3 derived = closed: {}", b.value == constants::c_r(3)?);

    for n in 4..=5 {
        let d = eng.derive_second_range(n, 3)?;
        println!("d_({n},3) = {}", d.value);
        println!("  closed form agrees: {}", d.value == constants::d_nr(n, 3)?);
    }
    Ok(())
}
