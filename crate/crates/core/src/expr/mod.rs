//! Expression language for polynomial, rational and elementary maps `K^d → K^m`.
//!
//! Text syntax: `x1 ... xd` for coordinates, integer literals, `+ - * /`, `^` with
//! a non-negative integer exponent, unary minus, parentheses and the calls
//! `exp`, `sin`, `cos`, `log`. Output coordinates are separated by `;`.

mod diff;
mod eval;
mod parse;
mod print;
mod random;

use num::{BigRational, One, Signed, Zero};

use crate::primitive::Primitive;

pub use parse::{parse, parse_expr, parse_infer, ParseError};
pub use eval::eval_generic;
pub use random::{random_expr, random_polynomial};

/// Expression AST. Variables are 0-based (`x1` is `Var(0)`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Expr {
    Var(usize),
    Const(BigRational),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    IntPow(Box<Expr>, u32),
    Call(Primitive, Box<Expr>),
}

impl Expr {
    pub fn int(n: i64) -> Expr {
        Expr::Const(BigRational::from_integer(n.into()))
    }

    pub fn is_const(&self) -> bool {
        matches!(self, Expr::Const(_))
    }

    fn as_const(&self) -> Option<&BigRational> {
        match self {
            Expr::Const(q) => Some(q),
            _ => None,
        }
    }

    // Constructors that fold constant subtrees and nothing else. The parser
    // builds every node through these, so parsed ASTs are always folded.

    pub fn neg(a: Expr) -> Expr {
        match a {
            Expr::Const(q) => Expr::Const(-q),
            a => Expr::Neg(Box::new(a)),
        }
    }

    pub fn add(a: Expr, b: Expr) -> Expr {
        match (a.as_const(), b.as_const()) {
            (Some(x), Some(y)) => Expr::Const(x + y),
            _ => Expr::Add(Box::new(a), Box::new(b)),
        }
    }

    pub fn sub(a: Expr, b: Expr) -> Expr {
        match (a.as_const(), b.as_const()) {
            (Some(x), Some(y)) => Expr::Const(x - y),
            _ => Expr::Sub(Box::new(a), Box::new(b)),
        }
    }

    pub fn mul(a: Expr, b: Expr) -> Expr {
        match (a.as_const(), b.as_const()) {
            (Some(x), Some(y)) => Expr::Const(x * y),
            _ => Expr::Mul(Box::new(a), Box::new(b)),
        }
    }

    /// Division by a literal zero stays unfolded and fails at evaluation time.
    pub fn div(a: Expr, b: Expr) -> Expr {
        match (a.as_const(), b.as_const()) {
            (Some(x), Some(y)) if !y.is_zero() => Expr::Const(x / y),
            _ => Expr::Div(Box::new(a), Box::new(b)),
        }
    }

    pub fn pow(a: Expr, e: u32) -> Expr {
        match a.as_const() {
            Some(x) => Expr::Const(num::pow(x.clone(), e as usize)),
            None => Expr::IntPow(Box::new(a), e),
        }
    }

    pub fn call(p: Primitive, a: Expr) -> Expr {
        Expr::Call(p, Box::new(a))
    }

    /// Rebuilds the tree bottom-up through the folding constructors.
    pub fn folded(&self) -> Expr {
        self.map_children(Expr::folded, true)
    }

    /// Replaces `Var(i)` by `subs[i]`.
    pub fn substitute(&self, subs: &[Expr]) -> Expr {
        match self {
            Expr::Var(i) => subs[*i].clone(),
            other => other.map_children(|c| c.substitute(subs), false),
        }
    }

    fn map_children(&self, f: impl Fn(&Expr) -> Expr, fold: bool) -> Expr {
        let bx = |e: &Expr| Box::new(f(e));
        if fold {
            return match self {
                Expr::Var(_) | Expr::Const(_) => self.clone(),
                Expr::Neg(a) => Expr::neg(f(a)),
                Expr::Add(a, b) => Expr::add(f(a), f(b)),
                Expr::Sub(a, b) => Expr::sub(f(a), f(b)),
                Expr::Mul(a, b) => Expr::mul(f(a), f(b)),
                Expr::Div(a, b) => Expr::div(f(a), f(b)),
                Expr::IntPow(a, e) => Expr::pow(f(a), *e),
                Expr::Call(p, a) => Expr::call(*p, f(a)),
            };
        }
        match self {
            Expr::Var(_) | Expr::Const(_) => self.clone(),
            Expr::Neg(a) => Expr::Neg(bx(a)),
            Expr::Add(a, b) => Expr::Add(bx(a), bx(b)),
            Expr::Sub(a, b) => Expr::Sub(bx(a), bx(b)),
            Expr::Mul(a, b) => Expr::Mul(bx(a), bx(b)),
            Expr::Div(a, b) => Expr::Div(bx(a), bx(b)),
            Expr::IntPow(a, e) => Expr::IntPow(bx(a), *e),
            Expr::Call(p, a) => Expr::Call(*p, bx(a)),
        }
    }

    fn children(&self) -> Vec<&Expr> {
        match self {
            Expr::Var(_) | Expr::Const(_) => vec![],
            Expr::Neg(a) | Expr::IntPow(a, _) | Expr::Call(_, a) => vec![a],
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => vec![a, b],
        }
    }

    fn any(&self, pred: &impl Fn(&Expr) -> bool) -> bool {
        pred(self) || self.children().into_iter().any(|c| c.any(pred))
    }

    pub fn has_div(&self) -> bool {
        self.any(&|e| matches!(e, Expr::Div(..)))
    }

    pub fn has_primitive(&self) -> bool {
        self.any(&|e| matches!(e, Expr::Call(..)))
    }

    /// Largest variable index plus one (0 for constants).
    pub fn min_arity(&self) -> usize {
        match self {
            Expr::Var(i) => i + 1,
            other => other.children().into_iter().map(Expr::min_arity).max().unwrap_or(0),
        }
    }

    /// Total degree for division- and primitive-free expressions.
    pub fn degree(&self) -> Option<u32> {
        Some(match self {
            Expr::Var(_) => 1,
            Expr::Const(_) => 0,
            Expr::Neg(a) => a.degree()?,
            Expr::Add(a, b) | Expr::Sub(a, b) => a.degree()?.max(b.degree()?),
            Expr::Mul(a, b) => a.degree()? + b.degree()?,
            Expr::IntPow(a, e) => a.degree()? * e,
            Expr::Div(..) | Expr::Call(..) => return None,
        })
    }

    fn is_zero_const(&self) -> bool {
        self.as_const().is_some_and(Zero::is_zero)
    }

    fn is_one_const(&self) -> bool {
        self.as_const().is_some_and(One::is_one)
    }

    fn is_negative_const(&self) -> bool {
        self.as_const().is_some_and(Signed::is_negative)
    }
}

/// An ordered list of expressions over a common arity: a map `K^arity → K^len`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExprVec {
    arity: usize,
    comps: Vec<Expr>,
}

impl ExprVec {
    /// Fails with an arity error when some component uses a variable beyond `arity`.
    pub fn new(arity: usize, comps: Vec<Expr>) -> crate::Result<Self> {
        let used = comps.iter().map(Expr::min_arity).max().unwrap_or(0);
        if used > arity {
            return Err(crate::Error::Arity { expected: arity, found: used });
        }
        Ok(ExprVec { arity, comps })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn out_dim(&self) -> usize {
        self.comps.len()
    }

    pub fn comps(&self) -> &[Expr] {
        &self.comps
    }

    /// Partial derivative of every component with respect to `Var(var)`.
    pub fn diff(&self, var: usize) -> ExprVec {
        ExprVec { arity: self.arity, comps: self.comps.iter().map(|e| e.diff(var)).collect() }
    }

    /// Directional derivative `Σ_i v_i ∂/∂x_i`, with the direction as extra
    /// variables `x_{d+1} .. x_{2d}`.
    pub fn directional(&self) -> ExprVec {
        let d = self.arity;
        let comps = self
            .comps
            .iter()
            .map(|e| {
                (0..d).fold(Expr::int(0), |acc, i| {
                    diff::simp_add(acc, diff::simp_mul(Expr::Var(d + i), e.diff(i)))
                })
            })
            .collect();
        ExprVec { arity: 2 * d, comps }
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &ExprVec) -> crate::Result<ExprVec> {
        if inner.out_dim() != self.arity {
            return Err(crate::Error::Arity { expected: self.arity, found: inner.out_dim() });
        }
        Ok(ExprVec {
            arity: inner.arity,
            comps: self.comps.iter().map(|e| e.substitute(&inner.comps)).collect(),
        })
    }

    pub fn folded(&self) -> ExprVec {
        ExprVec { arity: self.arity, comps: self.comps.iter().map(Expr::folded).collect() }
    }

    pub fn has_div(&self) -> bool {
        self.comps.iter().any(Expr::has_div)
    }

    pub fn has_primitive(&self) -> bool {
        self.comps.iter().any(Expr::has_primitive)
    }
}
