use std::fmt;

use serde::Serialize;

/// Evaluation mode of a check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Symbolic,
    Numeric,
    Both,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Symbolic => "symbolic",
            Mode::Numeric => "numeric",
            Mode::Both => "both",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub j: Option<u32>,
}

impl Params {
    pub fn r(r: u32) -> Self {
        Params { r: Some(r), ..Self::default() }
    }

    pub fn nr(n: u32, r: u32) -> Self {
        Params { n: Some(n), r: Some(r), j: None }
    }

    pub fn rj(r: u32, j: u32) -> Self {
        Params { r: Some(r), j: Some(j), n: None }
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (k, v) in [("n", self.n), ("r", self.r), ("j", self.j)] {
            if let Some(v) = v {
                parts.push(format!("{k}={v}"));
            }
        }
        f.write_str(&parts.join(","))
    }
}

/// Outcome of one check, serialized as one line of NDJSON.
#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub params: Params,
    pub mode: Mode,
    pub status: Status,
    pub lhs: String,
    pub rhs: String,
    pub abs_err: Option<f64>,
    pub elapsed_ms: f64,
    pub facts_used: Vec<String>,
    /// Error message, the failing comparison, or recorded side constants.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckReport {
    pub fn error(check: &str, params: Params, mode: Mode, msg: String) -> Self {
        CheckReport {
            check: check.to_string(),
            params,
            mode,
            status: Status::Error,
            lhs: String::new(),
            rhs: String::new(),
            abs_err: None,
            elapsed_ms: 0.0,
            facts_used: Vec::new(),
            note: Some(msg),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports always serialize")
    }
}
