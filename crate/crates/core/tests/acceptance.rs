//! One line per acceptance criterion; exits nonzero if any fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use sweil::algebra::{FieldElem, Gen, XiKind};
use sweil::constants;
use sweil::eisenstein::{ConstKey, Engine};
use sweil::intertwining::{assemble_c1_c2, expected_c1_c2, sigma_plus, sigma_plus_enumerated, WeylElem};
use sweil::numeric::{bind_eval, Binding, Real};
use sweil::rational::{q, qi, Q};
use sweil::scalar::{Scalar, Symbolic};
use sweil::verify::{registry, sweep, Mode, Params, RunOptions, Runner};

const DIGITS: u32 = 30;
const ABS_TOL: f64 = 1e-10;
const REL_TOL: f64 = 1e-8;
const BACKEND_TOL: f64 = 1e-20;
const CHAIN_BUDGET: Duration = Duration::from_secs(10);
const CLI_BUDGET: Duration = Duration::from_secs(60);

type Verdict = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn rel_diff(a: &Real, b: &Real) -> f64 {
    a.sub(b).abs().to_f64() / b.abs().to_f64().max(f64::MIN_POSITIVE)
}

fn second_term_chain() -> Verdict {
    let start = Instant::now();
    let eng = Engine::new(&Symbolic);
    let mut stages = 0;
    for r in 2..=5 {
        let two_c = FieldElem::int(2).mul(&constants::c_r(r).map_err(err)?);
        for st in eng.second_term_chain(r, r - 2).map_err(err)? {
            ensure(st.coef_c.neg() == two_c, || format!("r={r} j={}: E_0 coefficient {} != 2c_r", st.j, st.coef_c.neg()))?;
            let _gamma = st.gamma();
            stages += 1;
        }
    }
    let t = start.elapsed();
    ensure(t < CHAIN_BUDGET, || format!("took {t:?}"))?;
    Ok(format!("{stages} stages, {:.2}s", t.as_secs_f64()))
}

fn boundary_two() -> Verdict {
    let two = FieldElem::int(2);
    for r in 2..=6 {
        let v = Engine::new(&Symbolic).boundary_two(r).map_err(err)?;
        ensure(v == two, || format!("r={r}: symbolic value {v}"))?;
    }
    let b = Binding::new(DIGITS).map_err(err)?;
    let mut worst = 0f64;
    for r in 2..=4 {
        let v = Engine::new(&b).boundary_two(r).map_err(err)?;
        let d = v.sub(&Real::int(2, b.bits())).abs().to_f64();
        ensure(d <= ABS_TOL, || format!("r={r}: numeric deviation {d:e}"))?;
        worst = worst.max(d);
    }
    Ok(format!("symbolic r=2..6, numeric max deviation {worst:.1e}"))
}

fn constant_coherence() -> Verdict {
    let b = Binding::new(DIGITS).map_err(err)?;
    let sym = Engine::new(&Symbolic);
    let num = Engine::new(&b);
    let mut worst = 0f64;
    let mut count = 0;
    let mut compare = |label: String, closed: FieldElem, rec: FieldElem, derived: FieldElem, nrec: Real| -> Result<(), String> {
        ensure(closed == rec, || format!("{label}: recursion {rec} != closed {closed}"))?;
        ensure(closed == derived, || format!("{label}: derivation {derived} != closed {closed}"))?;
        let nc = bind_eval(&closed, &b).map_err(err)?.value;
        let d = rel_diff(&nrec, &nc);
        ensure(d <= REL_TOL, || format!("{label}: numeric relative deviation {d:e}"))?;
        worst = worst.max(d);
        count += 1;
        Ok(())
    };
    for r in 1..=4u32 {
        for n in 2 * r + 1..=10 {
            compare(
                format!("c({n},{r})"),
                constants::c_nr(n, r).map_err(err)?,
                constants::c_nr_recursive(&Symbolic, n, r).map_err(err)?,
                sym.constant(ConstKey::FirstTerm { n, r }).map_err(err)?,
                constants::c_nr_recursive(&b, n, r).map_err(err)?,
            )?;
        }
    }
    for r in 1..=6u32 {
        compare(
            format!("c_r({r})"),
            constants::c_r(r).map_err(err)?,
            constants::c_r_recursive(&Symbolic, r).map_err(err)?,
            sym.constant(ConstKey::Boundary { r }).map_err(err)?,
            constants::c_r_recursive(&b, r).map_err(err)?,
        )?;
        for n in r + 1..2 * r {
            compare(
                format!("d({n},{r})"),
                constants::d_nr(n, r).map_err(err)?,
                constants::d_nr_recursive(&Symbolic, n, r).map_err(err)?,
                sym.constant(ConstKey::SecondRange { n, r }).map_err(err)?,
                constants::d_nr_recursive(&b, n, r).map_err(err)?,
            )?;
            let derived_num = num.constant(ConstKey::SecondRange { n, r }).map_err(err)?;
            let d = rel_diff(&derived_num, &bind_eval(&constants::d_nr(n, r).map_err(err)?, &b).map_err(err)?.value);
            ensure(d <= REL_TOL, || format!("d({n},{r}) numeric derivation deviates by {d:e}"))?;
        }
    }
    let c31 = FieldElem::xi_f(qi(4)).div(&FieldElem::xi_f(qi(3))).map_err(err)?;
    ensure(constants::c_nr(3, 1).map_err(err)? == c31, || "c(3,1) is not xiF(4)/xiF(3)".into())?;
    Ok(format!("{count} constants, max relative deviation {worst:.1e}, c(3,1) = xiF(4)/xiF(3)"))
}

fn run_registry(runner: &Runner, names: &[&str], r_max: u32, keep: impl Fn(&Params) -> bool) -> Result<usize, String> {
    let mut jobs = Vec::new();
    for def in registry().iter().filter(|d| names.contains(&d.name)) {
        for p in sweep(def, r_max, Params::default()).into_iter().filter(|p| keep(p)) {
            jobs.push((def.name.to_string(), p));
        }
    }
    let reports = runner.run_all(&jobs);
    for rep in &reports {
        ensure(rep.passed(), || {
            format!("{} {}: {:?} {}", rep.check, rep.params, rep.status, rep.note.clone().unwrap_or_default())
        })?;
    }
    Ok(reports.len())
}

fn weak_constants() -> Verdict {
    let runner = Runner::new(RunOptions { mode: Mode::Symbolic, ..RunOptions::default() }).map_err(err)?;
    let n = run_registry(&runner, &["a-nr", "b-nr", "weak-second-term"], 5, |p| p.r.is_some_and(|r| r <= 5))?;
    Ok(format!("{n} exact comparisons for r <= 5"))
}

fn intertwining() -> Verdict {
    let mut sets = 0;
    for n in 1..=8u32 {
        for r in 1..=n {
            for w in [WeylElem::W1, WeylElem::W2] {
                if w == WeylElem::W1 && r == n {
                    continue;
                }
                let closed = sigma_plus(w, n, r).map_err(err)?;
                let brute = sigma_plus_enumerated(w, n, r).map_err(err)?;
                ensure(closed == brute, || format!("{w:?} at ({n},{r}): closed list differs from enumeration"))?;
                sets += 1;
            }
            let (c1, c2) = assemble_c1_c2(n, r).map_err(err)?;
            let (e1, e2) = expected_c1_c2(n, r).map_err(err)?;
            ensure(c1 == e1 && c2 == e2, || format!("({n},{r}): assembled c_1, c_2 differ from the closed quotients"))?;
            for c in c1.iter().chain([&c2]) {
                ensure(c.de().is_zero() && c.df().is_zero(), || format!("({n},{r}): discriminant exponents do not cancel"))?;
            }
        }
    }
    let runner = Runner::new(RunOptions::default()).map_err(err)?;
    let reports = run_registry(&runner, &["intertwining"], 8, |_| true)?;
    Ok(format!("{sets} root sets, {reports} assembly reports"))
}

fn sample_points() -> Vec<Q> {
    (0..20).map(|k| q(13 + 29 * k, 37) - qi(2)).collect()
}

fn richardson(f: &[f64]) -> f64 {
    let mut t = f.to_vec();
    for level in 1..t.len() {
        let p = 2f64.powi(level as i32);
        for i in (level..t.len()).rev() {
            t[i] = (p * t[i] - t[i - 1]) / (p - 1.0);
        }
    }
    t[t.len() - 1]
}

fn numeric_backend() -> Verdict {
    let b = Binding::new(DIGITS).map_err(err)?;
    let p = b.bits();
    let w = |v| Real::from_raw(v, p);
    let mut worst_fe = 0f64;
    let mut worst_split = 0f64;
    for s in sample_points() {
        let (fe_f, fe_eta, split) = b
            .with_evaluator(|ev| -> Result<_, sweil::numeric::NumericError> {
                let f = w(ev.xi_f_raw(s)?);
                let eta = w(ev.xi_feta(s)?);
                let fe_f = rel_diff(&w(ev.xi_f_raw(qi(1) - s)?), &f);
                let fe_eta = rel_diff(&w(ev.xi_feta(qi(1) - s)?), &eta);
                let split = rel_diff(&f.mul(&eta), &w(ev.xi_e_direct(s)?));
                Ok((fe_f, fe_eta, split))
            })
            .map_err(err)?;
        ensure(fe_f < BACKEND_TOL && fe_eta < BACKEND_TOL, || {
            format!("functional equation residual at {s}: {fe_f:e}, {fe_eta:e}")
        })?;
        ensure(split < BACKEND_TOL, || format!("factorization residual at {s}: {split:e}"))?;
        worst_fe = worst_fe.max(fe_f).max(fe_eta);
        worst_split = worst_split.max(split);
    }
    let mut worst_deriv = 0f64;
    for kind in [XiKind::F, XiKind::Feta] {
        let (d, _) = b.gen_value(&Gen::Xi { kind, arg: q(1, 2), order: 1 }).map_err(err)?;
        let d = d.abs().to_f64();
        ensure(d < BACKEND_TOL, || format!("{kind:?} derivative at 1/2: {d:e}"))?;
        worst_deriv = worst_deriv.max(d);
    }
    let samples = (0..8)
        .map(|k| {
            let h = q(1, 8 << k);
            b.with_evaluator(|ev| ev.xi_f_raw(qi(1) + h).map(|v| Real::from_raw(v, p).mul(&Real::from_q(h, p)).to_f64()))
        })
        .collect::<Result<Vec<_>, _>>()
        .map_err(err)?;
    let limit = richardson(&samples);
    let (res, _) = b.gen_value(&Gen::residue()).map_err(err)?;
    let res = res.to_f64();
    ensure((limit - 1.0).abs() <= ABS_TOL, || format!("Richardson limit {limit}"))?;
    ensure((res - limit).abs() <= ABS_TOL, || format!("residue {res} vs Richardson limit {limit}"))?;
    Ok(format!(
        "fe {worst_fe:.1e}, split {worst_split:.1e}, derivative {worst_deriv:.1e}, residue - limit {:.1e}",
        (res - limit).abs()
    ))
}

fn headless_cli() -> Verdict {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_sweil")).output().map_err(err)?;
    let t = start.elapsed();
    ensure(out.status.code() == Some(0), || format!("exit status {:?}", out.status.code()))?;
    ensure(t < CLI_BUDGET, || format!("took {t:?}"))?;
    let stdout = String::from_utf8_lossy(&out.stdout);
    let mut total = 0;
    let mut seen = std::collections::BTreeSet::new();
    for line in stdout.lines() {
        let v: serde_json::Value = serde_json::from_str(line).map_err(err)?;
        ensure(v["status"] == "pass", || format!("report not passing: {line}"))?;
        seen.insert(v["check"].as_str().unwrap_or_default().to_string());
        total += 1;
    }
    for suite in ["partition", "telescope", "ring-laws", "poles"] {
        ensure(seen.contains(suite), || format!("suite {suite} missing from the default run"))?;
    }
    Ok(format!("{total} reports, {:.1}s", t.as_secs_f64()))
}

type Criterion = (&'static str, fn() -> Verdict);

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("second term chain closes with E_0 coefficient 2c_r (r = 2..5)", second_term_chain),
        ("boundary value equals 2 (symbolic r = 2..6, numeric r = 2..4)", boundary_two),
        ("closed, recursive and derived constants agree", constant_coherence),
        ("weak first and second term constants match closed forms (r <= 5)", weak_constants),
        ("inverted root sets and rank-one assembly (n <= 8)", intertwining),
        ("numeric backend residuals and residue at 1", numeric_backend),
        ("default CLI run is green within budget", headless_cli),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let v = f();
        let t = start.elapsed().as_secs_f64();
        match v {
            Ok(detail) => println!("PASS criterion {}: {name} [{detail}] ({t:.1}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {name} [{why}] ({t:.1}s)", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
