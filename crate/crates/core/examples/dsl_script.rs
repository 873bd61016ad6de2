//! Parsing and running an identity script.

use sweil::verify::dsl::{exec_script, parse_script};
use sweil::verify::{Mode, RunOptions, Runner};

const SCRIPT: &str = include_str!("scripts/identities.sweil");

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let script = parse_script(SCRIPT)?;
    let runner = Runner::new(RunOptions { mode: Mode::Both, ..Default::default() })?;
    for r in exec_script(&script, &runner) {
        println!("{:?} {}", r.status, r.note.unwrap_or_default());
    }

    match parse_script("assert F(7,3)@3/2[0] == xiE(11/2... )") {
        Err(e) => println!("\nsyntax error: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
