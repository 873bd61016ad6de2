use std::collections::HashMap;
use std::fmt;
use std::time::Instant;

use num_rational::BigRational;
use num_traits::Zero;

use super::parser::{BinOp, Builtin, Expr, Script, StmtKind, XiName};
use crate::algebra::{FieldElem, Gen};
use crate::constants;
use crate::eisenstein::{middle, reflected, siegel_reflected};
use crate::laurent::{expand_expr, expr_coeff, AffineArg, AffineExp, ZetaExpr};
use crate::numeric::Binding;
use crate::rational::{fmt_q, Q};
use crate::scalar::{Coeffs, Symbolic};
use crate::verify::backend::{Backend, Tol};
use crate::verify::{CheckReport, Mode, Params, Runner, Status};
use crate::{Error, Result};

/// Value of a script expression: a constant or a function of `s`.
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Const(FieldElem),
    Func(ZetaExpr),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Const(c) => write!(f, "{c}"),
            Value::Func(z) => write!(f, "{z}"),
        }
    }
}

/// Where numeric comparisons of functions of `s` are made.
const SAMPLE: (i64, i64) = (37, 10);

fn err(msg: impl Into<String>) -> Error {
    Error::Range(msg.into())
}

impl Value {
    fn func(z: ZetaExpr) -> Value {
        if z.is_constant() {
            Value::Const(z.constant_part().clone())
        } else {
            Value::Func(z)
        }
    }

    fn as_func(&self) -> ZetaExpr {
        match self {
            Value::Const(c) => ZetaExpr::constant(c.clone()),
            Value::Func(z) => z.clone(),
        }
    }

    fn add(&self, o: &Value, sub: bool) -> Result<Value> {
        match (self, o) {
            (Value::Const(a), Value::Const(b)) => Ok(Value::Const(if sub { a.sub(b) } else { a.add(b) })),
            _ => Err(err("sums involving functions of s are not expressible")),
        }
    }

    fn mul(&self, o: &Value) -> Value {
        match (self, o) {
            (Value::Const(a), Value::Const(b)) => Value::Const(a.mul(b)),
            _ => Value::func(self.as_func().mul(&o.as_func())),
        }
    }

    fn div(&self, o: &Value) -> Result<Value> {
        Ok(match (self, o) {
            (Value::Const(a), Value::Const(b)) => Value::Const(a.div(b)?),
            _ => Value::func(self.as_func().div(&o.as_func())?),
        })
    }

    fn pow(&self, e: AffineExp, base: &Expr) -> Result<Value> {
        if !e.b.is_zero() {
            return match base {
                Expr::Gen(Gen::DiscE) => Ok(Value::func(ZetaExpr::one().with_de(e))),
                Expr::Gen(Gen::DiscF) => Ok(Value::func(ZetaExpr::one().with_df(e))),
                _ => Err(err("only DE and DF take exponents depending on s")),
            };
        }
        if e.a.is_integer() {
            let k = *e.a.numer();
            return Ok(match self {
                Value::Const(c) => Value::Const(c.powi(k)?),
                Value::Func(z) => Value::func(z.powi(i32::try_from(k).map_err(|_| err("exponent too large"))?)?),
            });
        }
        match base {
            Expr::Gen(g @ (Gen::DiscE | Gen::DiscF)) => Ok(Value::Const(FieldElem::gen_pow(*g, e.a))),
            _ => Err(err(format!("fractional power {} of something other than DE or DF", fmt_q(e.a)))),
        }
    }

    fn coeff(&self, at: Q, d: i32) -> Result<Value> {
        Ok(Value::Const(match self {
            Value::Const(c) if d == 0 => c.clone(),
            Value::Const(_) => FieldElem::zero(),
            Value::Func(z) => expr_coeff(&Symbolic, z, at, d)?,
        }))
    }
}

fn arg(e: AffineExp) -> AffineArg {
    AffineArg::new(e.a, e.b.to_integer())
}

fn call(b: Builtin, a: &[u32]) -> Result<Value> {
    let c = Value::Const;
    let f = Value::func;
    Ok(match (b, a) {
        (Builtin::C, [n, r]) => c(constants::c_nr(*n, *r)?),
        (Builtin::C, [r]) => c(constants::c_r(*r)?),
        (Builtin::D, [n, r]) => c(constants::d_nr(*n, *r)?),
        (Builtin::A, [n, r]) => c(constants::a_nr(*n, *r)?),
        (Builtin::B, [n, r]) => c(constants::b_nr(*n, *r)?),
        (Builtin::Weak2, [n, r]) => c(constants::weak2(*n, *r)?),
        (Builtin::Res, [n]) => c(constants::siegel_residue(*n)),
        (Builtin::Phi0, [n, r]) => c(constants::phi0(*n, *r)),
        (Builtin::F, [n, r]) => f(middle(*n, *r)?),
        (Builtin::G, [n, r]) => f(reflected(*n, *r)?),
        (Builtin::H, [n]) => f(siegel_reflected(*n)?),
        (Builtin::Beta, [n]) => f(constants::beta(*n)),
        (Builtin::Lambda, [n, r]) => f(constants::lambda(*n, *r)),
        _ => unreachable!("arity is checked by the parser"),
    })
}

/// Evaluate an expression exactly.
pub fn eval(e: &Expr, env: &HashMap<String, Value>) -> Result<Value> {
    Ok(match e {
        Expr::Int(n) => Value::Const(FieldElem::rational(BigRational::from_integer(n.clone()))),
        Expr::Var(v) => env.get(v).cloned().ok_or_else(|| err(format!("unbound name `{v}`")))?,
        Expr::Call(b, a) => call(*b, a)?,
        Expr::Xi(name, a) if a.b.is_zero() => Value::Const(match name {
            XiName::E => FieldElem::xi_e(a.a),
            XiName::Kind(k) => FieldElem::xi(*k, a.a),
        }),
        Expr::Xi(name, a) => Value::func(match name {
            XiName::E => ZetaExpr::xi_e(arg(*a), 1),
            XiName::Kind(k) => ZetaExpr::xi(*k, arg(*a), 1),
        }),
        Expr::Deriv(k, at, p) => Value::Const(FieldElem::xi_data(*k, *at, *p)?),
        Expr::Gen(g) => Value::Const(FieldElem::gen(*g)),
        Expr::Neg(x) => eval(x, env)?.mul(&Value::Const(FieldElem::int(-1))),
        Expr::Bin(op, l, r) => {
            let (a, b) = (eval(l, env)?, eval(r, env)?);
            match op {
                BinOp::Add => a.add(&b, false)?,
                BinOp::Sub => a.add(&b, true)?,
                BinOp::Mul => a.mul(&b),
                BinOp::Div => a.div(&b)?,
            }
        }
        Expr::Pow(base, ex) => eval(base, env)?.pow(*ex, base)?,
        Expr::Coeff(x, at, d) => eval(x, env)?.coeff(*at, *d)?,
    })
}

/// Numeric image of a value; functions are sampled at a fixed point.
fn numeric(v: &Value, b: &Binding) -> Result<crate::numeric::Real> {
    match v {
        Value::Const(c) => b.embed(c),
        Value::Func(z) => expr_coeff(b, z, Q::new(SAMPLE.0, SAMPLE.1), 0),
    }
}

/// `1e-10 * max(1, |rhs|)`.
fn assert_tol(rhs: &crate::numeric::Real) -> Tol {
    Tol::Abs(1e-10 * rhs.abs().to_f64().max(1.0))
}

fn report(check: &str, mode: Mode, status: Status, lhs: String, rhs: String, note: String) -> CheckReport {
    CheckReport {
        check: check.into(),
        params: Params::default(),
        mode,
        status,
        lhs,
        rhs,
        abs_err: None,
        elapsed_ms: 0.0,
        facts_used: Vec::new(),
        note: Some(note),
    }
}

fn expand_text(v: &Value, at: Q, lo: i32, hi: i32, num: Option<&Binding>) -> Result<String> {
    let z = v.as_func();
    let series = expand_expr(&Symbolic, &z, at, hi)?;
    let mut parts = Vec::new();
    for d in lo..=hi {
        let c = series.coefficient(d)?;
        let shown = match num {
            Some(b) => b.render(&b.embed(&c)?),
            None => c.to_string(),
        };
        parts.push(format!("[{d}] {shown}"));
    }
    Ok(parts.join("; "))
}

/// Run a script: one report per `expand` and `assert`.
pub fn exec_script(script: &Script, runner: &Runner) -> Vec<CheckReport> {
    let mode = runner.options().mode;
    let mut env: HashMap<String, Value> = HashMap::new();
    let mut out = Vec::new();
    for st in &script.stmts {
        let start = Instant::now();
        let note = format!("line {}: {}", st.line, st.text);
        let mut rep = match &st.kind {
            StmtKind::Let { name, expr } => match eval(expr, &env) {
                Ok(v) => {
                    env.insert(name.clone(), v);
                    continue;
                }
                Err(e) => report("let", mode, Status::Error, String::new(), String::new(), format!("{note}: {e}")),
            },
            StmtKind::Expand { expr, at, lo, hi } => {
                let num = if mode == Mode::Numeric { runner.binding() } else { None };
                match eval(expr, &env).and_then(|v| Ok((expand_text(&v, *at, *lo, *hi, num)?, v))) {
                    Ok((text, v)) => {
                        report("expand", mode, Status::Pass, v.to_string(), text, format!("{note}: at s = {}", fmt_q(*at)))
                    }
                    Err(e) => report("expand", mode, Status::Error, String::new(), String::new(), format!("{note}: {e}")),
                }
            }
            StmtKind::Assert { lhs, rhs } => assert(lhs, rhs, &env, runner, note),
        };
        rep.elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
        out.push(rep);
    }
    out
}

fn assert(lhs: &Expr, rhs: &Expr, env: &HashMap<String, Value>, runner: &Runner, note: String) -> CheckReport {
    let mode = runner.options().mode;
    let (a, b) = match (eval(lhs, env), eval(rhs, env)) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => {
            return report("assert", mode, Status::Error, String::new(), String::new(), format!("{note}: {e}"))
        }
    };
    let mut rep = report("assert", mode, Status::Pass, a.to_string(), b.to_string(), note);
    if mode != Mode::Numeric && a != b {
        rep.status = Status::Fail;
        let diff = a
            .add(&b, true)
            .map(|d| d.to_string())
            .unwrap_or_else(|_| format!("({a}) / ({b}) = {}", a.div(&b).map(|q| q.to_string()).unwrap_or_default()));
        rep.note = Some(format!("{}: difference {diff}", rep.note.unwrap_or_default()));
        return rep;
    }
    if mode == Mode::Symbolic {
        return rep;
    }
    let bnd = runner.binding().expect("binding exists outside symbolic mode");
    match (numeric(&a, bnd), numeric(&b, bnd)) {
        (Ok(x), Ok(y)) => {
            let (ok, e) = bnd.agree(&x, &y, assert_tol(&y));
            rep.abs_err = e;
            if mode == Mode::Numeric {
                rep.lhs = bnd.render(&x);
                rep.rhs = bnd.render(&y);
            }
            if !ok {
                rep.status = Status::Fail;
            }
        }
        (Err(e), _) | (_, Err(e)) => {
            rep.status = Status::Error;
            rep.note = Some(format!("{}: {e}", rep.note.unwrap_or_default()));
        }
    }
    rep
}
