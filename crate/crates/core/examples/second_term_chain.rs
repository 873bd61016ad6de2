//! The second term induction, stage by stage, with its gamma constants.

use sweil::constants::c_r;
use sweil::eisenstein::Engine;
use sweil::rational::{big, qi};
use sweil::scalar::Symbolic;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let r = std::env::args().nth(1).map_or(Ok(4), |a| a.parse())?;
    let ctx = Symbolic;
    let eng = Engine::new(&ctx);

    println!("1 + beta H = {}", eng.boundary_two(r)?);
    let two_c = c_r(r)?.scale(&big(qi(2)));
    for st in eng.second_term_chain(r, r - 2)? {
        println!("\nj = {}, n = {}", st.j, st.n);
        println!("  E_0 coefficient is 2 c_r: {}", st.coef_c.neg() == two_c);
        println!("  stray terms: {}, log terms: {}", st.rest.len(), st.log_parts.iter().map(|(_, l)| l.len()).sum::<usize>());
        println!("  gamma_{} = {}", st.j, st.gamma());
    }
    Ok(())
}
