//! Inverted root sets and the rank-one assembly of c_1, c_2.

use sweil::intertwining::{assemble_c1_c2, expected_c1_c2, rank_one_factor, sigma_plus, sigma_plus_enumerated, WeylElem};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (n, r) = (5, 2);
    for w in [WeylElem::W1, WeylElem::W2] {
        let roots = sigma_plus(w, n, r)?;
        let shown: Vec<String> = roots.iter().map(|a| a.to_string()).collect();
        println!("{w:?}: {{{}}}  (enumeration agrees: {})", shown.join(", "), roots == sigma_plus_enumerated(w, n, r)?);
        for a in roots {
            let f = rank_one_factor(a, n, r)?;
            println!("   {a:>6}: {}", f.to_expr());
        }
    }
    let (c1, c2) = assemble_c1_c2(n, r)?;
    let (f, g) = expected_c1_c2(n, r)?;
    println!("c_1 = {}", c1.as_ref().expect("r < n"));
    println!("c_2 = {c2}");
    println!("match F and G: {} {}", c1 == f, c2 == g);
    Ok(())
}
