use std::fmt;

use super::{Expr, ExprVec};

const ADD: u8 = 1;
const MUL: u8 = 2;
const NEG: u8 = 3;
const POW: u8 = 4;
const ATOM: u8 = 5;

fn prec(e: &Expr) -> u8 {
    match e {
        Expr::Add(..) | Expr::Sub(..) => ADD,
        Expr::Mul(..) | Expr::Div(..) => MUL,
        Expr::Neg(_) => NEG,
        Expr::IntPow(..) => POW,
        Expr::Var(_) | Expr::Const(_) | Expr::Call(..) => ATOM,
    }
}

fn wrap(f: &mut fmt::Formatter<'_>, e: &Expr, parens: bool) -> fmt::Result {
    if parens {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

fn binary(f: &mut fmt::Formatter<'_>, a: &Expr, op: &str, b: &Expr, level: u8) -> fmt::Result {
    wrap(f, a, prec(a) < level)?;
    f.write_str(op)?;
    wrap(f, b, prec(b) <= level)
}

/// Minimal-parenthesis rendering. Non-integer and negative constants are
/// printed in parentheses (`(1/2)`, `(-3)`) so that re-parsing folds them back
/// into a single constant.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Var(i) => write!(f, "x{}", i + 1),
            Expr::Const(q) => {
                if q.is_integer() && !self.is_negative_const() {
                    write!(f, "{q}")
                } else {
                    write!(f, "({q})")
                }
            }
            Expr::Neg(a) => {
                f.write_str("-")?;
                wrap(f, a, prec(a) < NEG)
            }
            Expr::Add(a, b) => binary(f, a, " + ", b, ADD),
            Expr::Sub(a, b) => binary(f, a, " - ", b, ADD),
            Expr::Mul(a, b) => binary(f, a, "*", b, MUL),
            Expr::Div(a, b) => binary(f, a, "/", b, MUL),
            Expr::IntPow(a, e) => {
                wrap(f, a, prec(a) <= POW)?;
                write!(f, "^{e}")
            }
            Expr::Call(p, a) => write!(f, "{p}({a})"),
        }
    }
}

impl fmt::Display for ExprVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.comps.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}
