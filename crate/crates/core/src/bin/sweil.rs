use std::fs;
use std::io::{self, Write};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, ValueEnum};
use sweil::eisenstein::{ConstMode, Window};
use sweil::verify::dsl::{exec_script, parse_script};
use sweil::verify::{registry, sweep, CheckReport, Mode, Params, RunOptions, Runner, Status};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Consts {
    Derived,
    Closed,
}

/// Verify constant-term identities of spherical Eisenstein series on U(n,n).
///
/// Prints one JSON report per check. Exit code 0 when every check passes,
/// 1 when any fails, 2 on usage or engine errors.
#[derive(Parser, Debug)]
#[command(name = "sweil", version)]
struct Cli {
    /// Check to run; repeatable. Default: every registered check.
    #[arg(long = "check", value_name = "NAME")]
    checks: Vec<String>,
    #[arg(long)]
    r: Option<u32>,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    j: Option<u32>,
    /// Largest r in default sweeps.
    #[arg(long, default_value_t = 5)]
    r_max: u32,
    #[arg(long, value_enum, default_value_t = Mode::Both)]
    mode: Mode,
    /// Decimal digits of numeric precision.
    #[arg(long, default_value_t = 30)]
    prec: u32,
    /// Laurent order window as LO,HI.
    #[arg(long, default_value = "-2,2", allow_hyphen_values = true, value_parser = parse_window)]
    window: Window,
    /// Source of the constants used by rewrites.
    #[arg(long, value_enum, default_value_t = Consts::Derived)]
    consts: Consts,
    /// Script to execute after the checks.
    #[arg(long, value_name = "FILE")]
    script: Option<String>,
    /// Write reports here instead of stdout.
    #[arg(long, value_name = "FILE")]
    out: Option<String>,
    /// Print the check registry and exit.
    #[arg(long)]
    list: bool,
}

fn parse_window(s: &str) -> Result<Window, String> {
    let (lo, hi) = s.split_once(',').ok_or("expected LO,HI")?;
    let lo: i32 = lo.trim().parse().map_err(|e| format!("bad LO: {e}"))?;
    let hi: i32 = hi.trim().parse().map_err(|e| format!("bad HI: {e}"))?;
    if lo > hi {
        return Err(format!("empty window {lo},{hi}"));
    }
    Ok(Window { lo, hi })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("sweil: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, Box<dyn std::error::Error>> {
    if cli.list {
        for d in registry() {
            println!("{:<18} {}", d.name, d.description);
        }
        return Ok(ExitCode::SUCCESS);
    }
    for name in &cli.checks {
        if !registry().iter().any(|d| d.name == name) {
            return Err(format!("unknown check `{name}`; see --list").into());
        }
    }
    let script = match &cli.script {
        Some(path) => Some(parse_script(&fs::read_to_string(path)?).map_err(|e| format!("{path}: {e}"))?),
        None => None,
    };
    let consts = match cli.consts {
        Consts::Derived => ConstMode::Derived,
        Consts::Closed => ConstMode::Closed,
    };
    let runner = Runner::new(RunOptions { mode: cli.mode, window: cli.window, digits: cli.prec, consts })?;
    let given = Params { n: cli.n, r: cli.r, j: cli.j };
    let run_registry = !cli.checks.is_empty() || script.is_none();
    let mut jobs = Vec::new();
    for d in registry() {
        if run_registry && (cli.checks.is_empty() || cli.checks.iter().any(|c| c == d.name)) {
            jobs.extend(sweep(d, cli.r_max, given).into_iter().map(|p| (d.name.to_string(), p)));
        }
    }
    let start = Instant::now();
    let mut reports = runner.run_all(&jobs);
    if let Some(s) = &script {
        reports.extend(exec_script(s, &runner));
    }
    let mut sink: Box<dyn Write> = match &cli.out {
        Some(p) => Box::new(io::BufWriter::new(fs::File::create(p)?)),
        None => Box::new(io::stdout().lock()),
    };
    for r in &reports {
        writeln!(sink, "{}", r.to_json())?;
    }
    sink.flush()?;
    let count = |s: Status| reports.iter().filter(|r| r.status == s).count();
    let (pass, fail, error) = (count(Status::Pass), count(Status::Fail), count(Status::Error));
    eprintln!("{} reports: {pass} pass, {fail} fail, {error} error in {:.2}s", reports.len(), start.elapsed().as_secs_f64());
    Ok(exit_code(&reports))
}

fn exit_code(reports: &[CheckReport]) -> ExitCode {
    if reports.iter().any(|r| r.status == Status::Error) {
        ExitCode::from(2)
    } else if reports.iter().any(|r| r.status == Status::Fail) {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}
