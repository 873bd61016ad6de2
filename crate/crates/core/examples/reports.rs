//! Running registered checks and emitting NDJSON reports.

use sweil::verify::{registry, sweep, Mode, Params, RunOptions, Runner};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let runner = Runner::new(RunOptions { mode: Mode::Both, digits: 30, ..Default::default() })?;
    let mut jobs = Vec::new();
    for name in ["d-nr", "boundary-two", "second-term"] {
        let def = registry().iter().find(|d| d.name == name).expect("registered");
        jobs.extend(sweep(def, 3, Params::default()).into_iter().map(|p| (name.to_string(), p)));
    }
    jobs.push(("d-nr".into(), Params::nr(9, 3)));
    for r in runner.run_all(&jobs) {
        println!("{}", r.to_json());
    }
    Ok(())
}
