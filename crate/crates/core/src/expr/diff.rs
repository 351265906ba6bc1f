use num::{BigRational, Zero};

use super::Expr;
use crate::primitive::Primitive;

// Simplifying constructors: fold constants and drop neutral elements, so that
// derivatives of simple expressions come out in their textbook form.

pub(super) fn simp_add(a: Expr, b: Expr) -> Expr {
    if a.is_zero_const() {
        b
    } else if b.is_zero_const() {
        a
    } else {
        Expr::add(a, b)
    }
}

fn simp_sub(a: Expr, b: Expr) -> Expr {
    if b.is_zero_const() {
        a
    } else if a.is_zero_const() {
        simp_neg(b)
    } else {
        Expr::sub(a, b)
    }
}

fn simp_neg(a: Expr) -> Expr {
    match a {
        Expr::Neg(inner) => *inner,
        a => Expr::neg(a),
    }
}

pub(super) fn simp_mul(a: Expr, b: Expr) -> Expr {
    if a.is_zero_const() || b.is_zero_const() {
        Expr::Const(BigRational::zero())
    } else if a.is_one_const() {
        b
    } else if b.is_one_const() {
        a
    } else {
        Expr::mul(a, b)
    }
}

fn simp_div(a: Expr, b: Expr) -> Expr {
    if a.is_zero_const() {
        a
    } else if b.is_one_const() {
        a
    } else {
        Expr::div(a, b)
    }
}

fn simp_pow(a: Expr, e: u32) -> Expr {
    match e {
        0 => Expr::int(1),
        1 => a,
        e => Expr::pow(a, e),
    }
}

impl Expr {
    /// Symbolic partial derivative with respect to `Var(var)`.
    pub fn diff(&self, var: usize) -> Expr {
        match self {
            Expr::Var(i) => Expr::int(i64::from(*i == var)),
            Expr::Const(_) => Expr::int(0),
            Expr::Neg(a) => simp_neg(a.diff(var)),
            Expr::Add(a, b) => simp_add(a.diff(var), b.diff(var)),
            Expr::Sub(a, b) => simp_sub(a.diff(var), b.diff(var)),
            Expr::Mul(a, b) => simp_add(
                simp_mul(a.diff(var), (**b).clone()),
                simp_mul((**a).clone(), b.diff(var)),
            ),
            Expr::Div(a, b) => simp_div(
                simp_sub(
                    simp_mul(a.diff(var), (**b).clone()),
                    simp_mul((**a).clone(), b.diff(var)),
                ),
                simp_pow((**b).clone(), 2),
            ),
            Expr::IntPow(a, e) => {
                if *e == 0 {
                    return Expr::int(0);
                }
                simp_mul(
                    simp_mul(Expr::int(i64::from(*e)), simp_pow((**a).clone(), e - 1)),
                    a.diff(var),
                )
            }
            Expr::Call(p, a) => {
                let inner = (**a).clone();
                let outer = match p {
                    Primitive::Exp => self.clone(),
                    Primitive::Sin => Expr::call(Primitive::Cos, inner.clone()),
                    Primitive::Cos => simp_neg(Expr::call(Primitive::Sin, inner.clone())),
                    Primitive::Log => return simp_div(a.diff(var), inner),
                };
                simp_mul(outer, a.diff(var))
            }
        }
    }
}
