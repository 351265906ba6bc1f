use num::BigRational;
use rand::Rng;

use super::Expr;
use crate::primitive::Primitive;

fn small_const<R: Rng + ?Sized>(rng: &mut R) -> Expr {
    let n: i64 = rng.random_range(-5..=5);
    let d: i64 = rng.random_range(1..=3);
    Expr::Const(BigRational::new(n.into(), d.into()))
}

/// Random polynomial in `arity` variables of total degree at most `max_degree`:
/// a sum of up to `max_terms` terms `c · ∏ (x_i + c_i)^{k_i}`.
pub fn random_polynomial<R: Rng + ?Sized>(rng: &mut R, arity: usize, max_degree: u32, max_terms: usize) -> Expr {
    let terms = rng.random_range(1..=max_terms.max(1));
    let mut acc: Option<Expr> = None;
    for _ in 0..terms {
        let mut budget = rng.random_range(0..=max_degree);
        let mut term = small_const(rng);
        while budget > 0 && arity > 0 {
            let k = rng.random_range(1..=budget);
            budget -= k;
            let var = Expr::Var(rng.random_range(0..arity));
            let base = if rng.random_bool(0.5) { var } else { Expr::add(var, small_const(rng)) };
            term = Expr::mul(term, Expr::pow(base, k));
        }
        acc = Some(match acc {
            None => term,
            Some(a) => Expr::add(a, term),
        });
    }
    acc.expect("at least one term")
}

/// Random folded expression tree of the given depth. Division and Float-only
/// primitives are included only when requested.
pub fn random_expr<R: Rng + ?Sized>(rng: &mut R, arity: usize, depth: u32, with_div: bool, with_primitives: bool) -> Expr {
    if depth == 0 || rng.random_bool(0.25) {
        return if arity > 0 && rng.random_bool(0.7) {
            Expr::Var(rng.random_range(0..arity))
        } else {
            small_const(rng)
        };
    }
    let sub = |rng: &mut R| random_expr(rng, arity, depth - 1, with_div, with_primitives);
    let choices = 6 + usize::from(with_div) + usize::from(with_primitives);
    match rng.random_range(0..choices) {
        0 => Expr::neg(sub(rng)),
        1 => Expr::add(sub(rng), sub(rng)),
        2 => Expr::sub(sub(rng), sub(rng)),
        3 | 4 => Expr::mul(sub(rng), sub(rng)),
        5 => Expr::pow(sub(rng), rng.random_range(0..=3)),
        6 if with_div => Expr::div(sub(rng), sub(rng)),
        _ => {
            let p = Primitive::ALL[rng.random_range(0..Primitive::ALL.len())];
            Expr::call(p, sub(rng))
        }
    }
}
