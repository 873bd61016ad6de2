use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::lexer::{lex, Spanned, Tok};
use super::DslError;
use crate::algebra::{Gen, XiKind};
use crate::laurent::AffineExp;
use crate::rational::{qi, Q};

/// Named constants and factors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Builtin {
    /// `c(n,r)` or `c(r)`.
    C,
    D,
    A,
    B,
    Weak2,
    Res,
    Phi0,
    F,
    G,
    H,
    Beta,
    Lambda,
}

impl Builtin {
    fn lookup(name: &str) -> Option<Builtin> {
        Some(match name {
            "c" => Builtin::C,
            "d" => Builtin::D,
            "a" => Builtin::A,
            "b" => Builtin::B,
            "weak2" => Builtin::Weak2,
            "res" => Builtin::Res,
            "phi0" => Builtin::Phi0,
            "F" => Builtin::F,
            "G" => Builtin::G,
            "H" => Builtin::H,
            "beta" => Builtin::Beta,
            "lambda" => Builtin::Lambda,
            _ => return None,
        })
    }

    fn arities(self) -> &'static [usize] {
        match self {
            Builtin::C => &[1, 2],
            Builtin::Res | Builtin::H | Builtin::Beta => &[1],
            _ => &[2],
        }
    }
}

/// Which completed zeta function.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum XiName {
    E,
    Kind(XiKind),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Int(BigInt),
    Var(String),
    Call(Builtin, Vec<u32>),
    /// `xi(arg)`, a function of `s` when the slope is nonzero.
    Xi(XiName, AffineExp),
    /// A derivative generator such as `xiF'(3)`.
    Deriv(XiKind, Q, i32),
    Gen(Gen),
    Neg(Box<Expr>),
    Bin(BinOp, Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, AffineExp),
    /// Laurent coefficient at a point.
    Coeff(Box<Expr>, Q, i32),
}

#[derive(Clone, Debug, PartialEq)]
pub enum StmtKind {
    Let { name: String, expr: Expr },
    Expand { expr: Expr, at: Q, lo: i32, hi: i32 },
    Assert { lhs: Expr, rhs: Expr },
}

#[derive(Clone, Debug, PartialEq)]
pub struct Stmt {
    pub line: usize,
    pub text: String,
    pub kind: StmtKind,
}

/// A parsed script.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Script {
    pub stmts: Vec<Stmt>,
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
    vars: HashSet<String>,
}

type PResult<T> = Result<T, DslError>;

const KEYWORDS: [&str; 5] = ["let", "expand", "assert", "at", "order"];

pub fn parse_script(src: &str) -> PResult<Script> {
    let mut p = Parser { toks: lex(src)?, pos: 0, vars: HashSet::new() };
    let lines: Vec<&str> = src.lines().collect();
    let mut script = Script::default();
    loop {
        match p.peek() {
            Tok::Eof => break,
            Tok::End => {
                p.pos += 1;
                continue;
            }
            _ => {}
        }
        let line = p.here().line;
        let kind = p.statement()?;
        match p.peek() {
            Tok::End | Tok::Eof => {}
            t => return Err(p.error(format!("expected end of statement, found {}", t.describe()))),
        }
        let text = lines.get(line - 1).map(|l| l.split('#').next().unwrap_or("").trim().to_string()).unwrap_or_default();
        script.stmts.push(Stmt { line, text, kind });
    }
    Ok(script)
}

/// Parse a single expression, with no variables in scope.
pub fn parse_expr(src: &str) -> PResult<Expr> {
    let mut p = Parser { toks: lex(src)?, pos: 0, vars: HashSet::new() };
    let e = p.expr()?;
    match p.peek() {
        Tok::Eof | Tok::End => Ok(e),
        t => Err(p.error(format!("unexpected {} after expression", t.describe()))),
    }
}

impl Parser {
    fn here(&self) -> &Spanned {
        &self.toks[self.pos]
    }

    fn peek(&self) -> &Tok {
        &self.here().tok
    }

    fn error(&self, msg: String) -> DslError {
        let h = self.here();
        DslError::new(h.line, h.col, msg)
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if t != Tok::Eof {
            self.pos += 1;
        }
        t
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == t {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, t: Tok) -> PResult<()> {
        if self.eat(&t) {
            Ok(())
        } else {
            Err(self.error(format!("expected {}, found {}", t.describe(), self.peek().describe())))
        }
    }

    fn keyword(&mut self, kw: &str) -> PResult<()> {
        match self.peek() {
            Tok::Ident(s) if s == kw => {
                self.pos += 1;
                Ok(())
            }
            t => Err(self.error(format!("expected `{kw}`, found {}", t.describe()))),
        }
    }

    fn statement(&mut self) -> PResult<StmtKind> {
        let Tok::Ident(head) = self.peek().clone() else {
            return Err(self.error(format!("expected `let`, `expand` or `assert`, found {}", self.peek().describe())));
        };
        self.pos += 1;
        match head.as_str() {
            "let" => {
                let name = match self.peek().clone() {
                    Tok::Ident(n) if is_reserved(&n) => return Err(self.error(format!("`{n}` is a reserved name"))),
                    Tok::Ident(n) => n,
                    t => return Err(self.error(format!("expected a name, found {}", t.describe()))),
                };
                self.pos += 1;
                self.expect(Tok::Assign)?;
                let expr = self.expr()?;
                self.vars.insert(name.clone());
                Ok(StmtKind::Let { name, expr })
            }
            "expand" => {
                let expr = self.expr()?;
                self.keyword("at")?;
                let at = self.rational()?;
                self.keyword("order")?;
                self.expect(Tok::LParen)?;
                let lo = self.small_int()?;
                self.expect(Tok::Comma)?;
                let hi = self.small_int()?;
                self.expect(Tok::RParen)?;
                if lo > hi {
                    return Err(self.error(format!("empty order window ({lo},{hi})")));
                }
                Ok(StmtKind::Expand { expr, at, lo, hi })
            }
            "assert" => {
                let lhs = self.expr()?;
                self.expect(Tok::EqEq)?;
                let rhs = self.expr()?;
                Ok(StmtKind::Assert { lhs, rhs })
            }
            _ => {
                self.pos -= 1;
                Err(self.error(format!("expected `let`, `expand` or `assert`, found `{head}`")))
            }
        }
    }

    fn expr(&mut self) -> PResult<Expr> {
        let mut e = self.term()?;
        loop {
            let op = match self.peek() {
                Tok::Plus => BinOp::Add,
                Tok::Minus => BinOp::Sub,
                _ => return Ok(e),
            };
            self.pos += 1;
            e = Expr::Bin(op, Box::new(e), Box::new(self.term()?));
        }
    }

    fn term(&mut self) -> PResult<Expr> {
        let mut e = self.unary()?;
        loop {
            let op = match self.peek() {
                Tok::Star => BinOp::Mul,
                Tok::Slash => BinOp::Div,
                _ => return Ok(e),
            };
            self.pos += 1;
            e = Expr::Bin(op, Box::new(e), Box::new(self.unary()?));
        }
    }

    fn unary(&mut self) -> PResult<Expr> {
        if self.eat(&Tok::Minus) {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        let base = self.postfix()?;
        if !self.eat(&Tok::Caret) {
            return Ok(base);
        }
        let exp = match self.peek().clone() {
            Tok::Int(n) => {
                self.pos += 1;
                AffineExp::constant(Q::from_integer(self.to_i64(&n)?))
            }
            Tok::LParen => {
                self.pos += 1;
                let a = self.affine()?;
                self.expect(Tok::RParen)?;
                a
            }
            t => return Err(self.error(format!("expected an exponent, found {}", t.describe()))),
        };
        Ok(Expr::Pow(Box::new(base), exp))
    }

    fn postfix(&mut self) -> PResult<Expr> {
        let mut e = self.atom()?;
        while self.eat(&Tok::At) {
            let at = self.rational()?;
            self.expect(Tok::LBracket)?;
            let d = self.small_int()?;
            self.expect(Tok::RBracket)?;
            e = Expr::Coeff(Box::new(e), at, d);
        }
        Ok(e)
    }

    fn atom(&mut self) -> PResult<Expr> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.pos += 1;
                Ok(Expr::Int(n))
            }
            Tok::LParen => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            Tok::Ident(name) => self.named(&name),
            t => Err(self.error(format!("expected an expression, found {}", t.describe()))),
        }
    }

    fn named(&mut self, name: &str) -> PResult<Expr> {
        if self.vars.contains(name) {
            self.pos += 1;
            return Ok(Expr::Var(name.to_string()));
        }
        let simple = match name {
            "ResF" => Some(Gen::residue()),
            "DE" => Some(Gen::DiscE),
            "DF" => Some(Gen::DiscF),
            "logDE" => Some(Gen::LogDiscE),
            "logDF" => Some(Gen::LogDiscF),
            _ => None,
        };
        if let Some(g) = simple {
            self.pos += 1;
            return Ok(Expr::Gen(g));
        }
        if name == "polF" {
            self.pos += 1;
            self.expect(Tok::LParen)?;
            let k = self.small_int()?;
            self.expect(Tok::RParen)?;
            if k < 0 {
                return Err(self.error(format!("polF needs a nonnegative order, got {k}")));
            }
            return Ok(Expr::Gen(Gen::Xi { kind: XiKind::F, arg: qi(1), order: k }));
        }
        if let Some(b) = Builtin::lookup(name) {
            self.pos += 1;
            let args = self.int_args()?;
            if !b.arities().contains(&args.len()) {
                return Err(self.error(format!("`{name}` takes {:?} arguments, got {}", b.arities(), args.len())));
            }
            return Ok(Expr::Call(b, args));
        }
        let base = name.trim_end_matches('\'');
        let primes = (name.len() - base.len()) as i32;
        let xi = match base {
            "xiE" => Some(XiName::E),
            "xiF" => Some(XiName::Kind(XiKind::F)),
            "xiFeta" => Some(XiName::Kind(XiKind::Feta)),
            _ => None,
        };
        let Some(xi) = xi else {
            if name == "s" {
                return Err(self.error("`s` may only appear in arguments and exponents".into()));
            }
            return Err(self.error(format!("unknown name `{name}`")));
        };
        self.pos += 1;
        self.expect(Tok::LParen)?;
        let arg = self.affine()?;
        self.expect(Tok::RParen)?;
        if !arg.b.is_integer() {
            return Err(self.error(format!("argument slope must be an integer, got {arg}")));
        }
        match (xi, primes) {
            (_, 0) => Ok(Expr::Xi(xi, arg)),
            (XiName::Kind(k), p) if arg.b.is_zero() => Ok(Expr::Deriv(k, arg.a, p)),
            (XiName::E, _) => Err(self.error("derivatives are only defined for xiF and xiFeta".into())),
            _ => Err(self.error("derivatives take a constant argument".into())),
        }
    }

    fn int_args(&mut self) -> PResult<Vec<u32>> {
        self.expect(Tok::LParen)?;
        let mut out = Vec::new();
        loop {
            let n = self.small_int()?;
            out.push(u32::try_from(n).map_err(|_| self.error(format!("expected a nonnegative integer, got {n}")))?);
            if !self.eat(&Tok::Comma) {
                break;
            }
        }
        self.expect(Tok::RParen)?;
        Ok(out)
    }

    fn to_i64(&self, n: &BigInt) -> PResult<i64> {
        n.to_i64().ok_or_else(|| self.error(format!("integer {n} is too large")))
    }

    fn small_int(&mut self) -> PResult<i32> {
        let neg = self.eat(&Tok::Minus);
        match self.bump() {
            Tok::Int(n) => {
                let v = n.to_i32().ok_or_else(|| self.error(format!("integer {n} is too large")))?;
                Ok(if neg { -v } else { v })
            }
            t => {
                self.pos -= 1;
                Err(self.error(format!("expected an integer, found {}", t.describe())))
            }
        }
    }

    fn unsigned_rational(&mut self) -> PResult<Q> {
        let num = match self.peek().clone() {
            Tok::Int(n) => {
                self.pos += 1;
                self.to_i64(&n)?
            }
            t => return Err(self.error(format!("expected a number, found {}", t.describe()))),
        };
        if self.eat(&Tok::Slash) {
            let den = match self.peek().clone() {
                Tok::Int(n) if !n.is_zero() => {
                    self.pos += 1;
                    self.to_i64(&n)?
                }
                t => return Err(self.error(format!("expected a nonzero denominator, found {}", t.describe()))),
            };
            return Ok(Q::new(num, den));
        }
        Ok(Q::from_integer(num))
    }

    fn rational(&mut self) -> PResult<Q> {
        let neg = self.eat(&Tok::Minus);
        let x = self.unsigned_rational()?;
        Ok(if neg { -x } else { x })
    }

    fn is_s(&self) -> bool {
        matches!(self.peek(), Tok::Ident(s) if s == "s")
    }

    /// `a + b*s` written as a signed sum of `s`, `q`, `q*s` and `qs` terms.
    fn affine(&mut self) -> PResult<AffineExp> {
        let mut acc = AffineExp::default();
        let mut first = true;
        loop {
            let sign = if self.eat(&Tok::Minus) {
                -1
            } else if self.eat(&Tok::Plus) || first {
                1
            } else {
                return Ok(acc);
            };
            first = false;
            let sign = Q::from_integer(sign);
            if self.is_s() {
                self.pos += 1;
                acc.b += sign;
                continue;
            }
            let x = self.unsigned_rational()?;
            if self.eat(&Tok::Star) && !self.is_s() {
                return Err(self.error(format!("expected `s`, found {}", self.peek().describe())));
            }
            if self.is_s() {
                self.pos += 1;
                acc.b += sign * x;
            } else {
                acc.a += sign * x;
            }
        }
    }
}

fn is_reserved(name: &str) -> bool {
    KEYWORDS.contains(&name)
        || Builtin::lookup(name).is_some()
        || matches!(name, "s" | "ResF" | "DE" | "DF" | "logDE" | "logDF" | "polF")
        || ["xiE", "xiF", "xiFeta"].contains(&name.trim_end_matches('\''))
}
