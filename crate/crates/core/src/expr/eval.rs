use super::{Expr, ExprVec};
use crate::error::{Error, Result};
use crate::scalars::Ring;

impl Expr {
    /// Evaluates over any ring; `env[i]` is the value of `x{i+1}`.
    pub fn eval<R: Ring>(&self, env: &[R], ctx: &R::Ctx) -> Result<R> {
        Ok(match self {
            Expr::Var(i) => env.get(*i).cloned().ok_or(Error::Arity { expected: i + 1, found: env.len() })?,
            Expr::Const(q) => R::from_rational_in(ctx, q)?,
            Expr::Neg(a) => -a.eval(env, ctx)?,
            Expr::Add(a, b) => a.eval(env, ctx)? + b.eval(env, ctx)?,
            Expr::Sub(a, b) => a.eval(env, ctx)? - b.eval(env, ctx)?,
            Expr::Mul(a, b) => a.eval(env, ctx)? * b.eval(env, ctx)?,
            Expr::Div(a, b) => {
                let num = a.eval(env, ctx)?;
                let den = b.eval(env, ctx)?.try_invert().ok_or(Error::DivisionByNonUnit)?;
                num * den
            }
            Expr::IntPow(a, e) => a.eval(env, ctx)?.pow_in(ctx, *e),
            Expr::Call(p, a) => a.eval(env, ctx)?.apply_primitive(*p)?,
        })
    }
}

impl ExprVec {
    /// Evaluates every component. `env` must have exactly `arity` entries, all
    /// belonging to `ctx`.
    pub fn eval<R: Ring>(&self, env: &[R], ctx: &R::Ctx) -> Result<Vec<R>> {
        if env.len() != self.arity {
            return Err(Error::Arity { expected: self.arity, found: env.len() });
        }
        if env.iter().any(|x| !x.belongs_to(ctx)) {
            return Err(Error::BackendMismatch {
                expected: format!("{ctx:?}"),
                found: "an element of another ring".into(),
            });
        }
        self.comps.iter().map(|e| e.eval(env, ctx)).collect()
    }
}

/// Free-function form of [`ExprVec::eval`].
pub fn eval_generic<R: Ring>(e: &ExprVec, env: &[R], ctx: &R::Ctx) -> Result<Vec<R>> {
    e.eval(env, ctx)
}
