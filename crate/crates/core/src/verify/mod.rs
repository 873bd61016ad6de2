//! Check registry, comparison backends, reports and the script language.

pub(crate) mod backend;
mod checks;
pub mod dsl;
mod report;

pub use backend::{Backend, Tol};
pub use checks::{registry, sweep, CheckDef, ParamShape};
pub use report::{CheckReport, Mode, Params, Status};

use std::time::Instant;

use rayon::prelude::*;

use crate::eisenstein::{ConstMode, Window};
use crate::numeric::Binding;
use crate::scalar::Symbolic;
use crate::Result;

/// Settings shared by every check of a run.
#[derive(Clone, Copy, Debug)]
pub struct RunOptions {
    pub mode: Mode,
    pub window: Window,
    pub digits: u32,
    pub consts: ConstMode,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { mode: Mode::Both, window: Window::default(), digits: 30, consts: ConstMode::Derived }
    }
}

/// Runs checks against one shared numeric binding.
pub struct Runner {
    opts: RunOptions,
    binding: Option<Binding>,
}

impl Runner {
    pub fn new(opts: RunOptions) -> Result<Self> {
        let binding = match opts.mode {
            Mode::Symbolic => None,
            _ => Some(Binding::new(opts.digits)?),
        };
        Ok(Runner { opts, binding })
    }

    pub fn options(&self) -> RunOptions {
        self.opts
    }

    pub fn binding(&self) -> Option<&Binding> {
        self.binding.as_ref()
    }

    /// Run one registered check.
    pub fn run(&self, name: &str, params: Params) -> CheckReport {
        let start = Instant::now();
        let mut report = match checks::find(name) {
            None => CheckReport::error(name, params, self.opts.mode, format!("unknown check `{name}`")),
            Some(def) => self.run_def(def, params),
        };
        report.elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
        report
    }

    fn run_def(&self, def: &CheckDef, params: Params) -> CheckReport {
        let mode = self.opts.mode;
        if let Err(e) = def.shape.validate(&params) {
            return CheckReport::error(def.name, params, mode, e.to_string());
        }
        let symbolic = || (def.symbolic)(&Symbolic, params, &self.opts);
        let numeric = || {
            let b = self.binding.as_ref().expect("binding exists outside symbolic mode");
            (def.numeric)(b, params, &self.opts)
        };
        let outcome = match mode {
            Mode::Symbolic => symbolic(),
            Mode::Numeric => numeric(),
            Mode::Both => match symbolic() {
                Ok(s) if s.passed => numeric().map(|n| s.merge_numeric(n)),
                other => other,
            },
        };
        match outcome {
            Ok(o) => o.into_report(def.name, params, mode),
            Err(e) => CheckReport::error(def.name, params, mode, e.to_string()),
        }
    }

    /// Run a batch in parallel; reports come back in input order.
    pub fn run_all(&self, jobs: &[(String, Params)]) -> Vec<CheckReport> {
        jobs.par_iter().map(|(name, p)| self.run(name, *p)).collect()
    }
}
