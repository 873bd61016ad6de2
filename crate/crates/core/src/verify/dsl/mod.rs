//! A small language for stating and checking zeta identities.
//!
//! ```text
//! # comments run to the end of the line
//! let x = c(5,2) * 1
//! assert x == c(5,2)
//! expand H(4) at 0 order (-1,1)
//! assert F(7,3)@3/2[0] == xiE(4)/xiE(7)
//! ```
//!
//! Atoms are integers, `let` names, constants `c(n,r)`, `c(r)`, `d(n,r)`,
//! `a(n,r)`, `b(n,r)`, `weak2(n,r)`, `res(n)`, `phi0(n,r)`, functions of `s`
//! `F(n,r)`, `G(n,r)`, `H(n)`, `beta(n)`, `lambda(n,r)`, completed zeta values
//! `xiE(..)`, `xiF(..)`, `xiFeta(..)` at constant or affine arguments, and the
//! generators `xiF'(q)`, `ResF`, `polF(k)`, `DE`, `DF`, `logDE`, `logDF`.
//! `f@q[d]` is the coefficient of `(s-q)^d`. Exponents are integers or
//! parenthesized affine forms such as `DE^(-1/2*s+3/4)`.

mod exec;
mod lexer;
mod parser;

pub use exec::{eval, exec_script, Value};
pub use parser::{parse_expr, parse_script, BinOp, Builtin, Expr, Script, Stmt, StmtKind, XiName};

/// A syntax or name-resolution error at a source location.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {col}: {msg}")]
pub struct DslError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

impl DslError {
    pub fn new(line: usize, col: usize, msg: String) -> Self {
        DslError { line, col, msg }
    }
}
