use std::sync::Arc;

use super::full::FullScalar;
use super::mapfn::MapFn;
use super::points::{extended_contains, sym_contains, HyperPoint, SymPoint};
use crate::cubic::{CubicCtx, CubicParams, CubicScalar};
use crate::error::{Error, Result};
use crate::scalars::{Backend, RingValue};
use crate::subset::Subset;
use crate::vector::{self, Vector};

fn backend_of(x: &[RingValue], t: &RingValue) -> Backend {
    x.first().map(Backend::of).unwrap_or_else(|| Backend::of(t))
}

fn check_point(f: &MapFn, x: &[RingValue], v: &[RingValue], t: &RingValue) -> Result<Backend> {
    let backend = Backend::of(t);
    vector::check(&backend, x, f.d_in())?;
    vector::check(&backend, v, f.d_in())?;
    f.domain().require(x)?;
    f.domain().require(&vector::axpy(x, t, v))?;
    Ok(backend)
}

/// Evaluates `f` at a point of `K^{d_in}`.
pub fn apply(f: &MapFn, x: &[RingValue]) -> Result<Vector> {
    let backend = x.first().map(Backend::of).unwrap_or(Backend::Rational);
    f.domain().require(x)?;
    f.eval(x, &backend)
}

/// Lifts `f` to the cubic ring of the input coordinates. On restricted
/// domains every character point of the input must lie in the domain.
pub fn lift_sym(f: &MapFn, input: &[CubicScalar], params: &Arc<CubicParams>) -> Result<Vec<CubicScalar>> {
    let carrier = input.first().map(CubicScalar::carrier).unwrap_or_else(|| params.full());
    let ctx = CubicCtx { params: params.clone(), carrier };
    if input.len() != f.d_in() {
        return Err(Error::Arity { expected: f.d_in(), found: input.len() });
    }
    for c in input {
        if c.params() != params {
            return Err(Error::ParamsMismatch);
        }
        if c.carrier() != carrier {
            return Err(Error::CarrierMismatch);
        }
    }
    if !f.domain().is_full() {
        for s in carrier.subsets() {
            let point = input.iter().map(|c| c.character(s)).collect::<Result<Vector>>()?;
            f.domain().require(&point)?;
        }
    }
    f.eval(input, &ctx)
}

/// `x + Σ_A u_A e_A` as coordinates over `params` (full carrier).
fn cubic_point(params: &Arc<CubicParams>, u: &[Vector]) -> Result<Vec<CubicScalar>> {
    let d = u[0].len();
    (0..d)
        .map(|i| CubicScalar::from_coeffs(params, params.full(), u.iter().map(|ua| ua[i].clone()).collect()))
        .collect()
}

/// First-order slope `f^{[1]}(x, v, t)`: the difference quotient for unit
/// `t`, otherwise the `e_1` coefficient of the lift of `f` at `x + e_1 v`.
pub fn slope1(f: &MapFn, x: &[RingValue], v: &[RingValue], t: &RingValue) -> Result<Vector> {
    let backend = check_point(f, x, v, t)?;
    if let Some(t_inv) = t.try_invert() {
        let fx = f.eval(x, &backend)?;
        let fy = f.eval(&vector::axpy(x, t, v), &backend)?;
        return Ok(vector::scale(&t_inv, &vector::sub(&fy, &fx)));
    }
    let params = CubicParams::new(backend, vec![t.clone()])?;
    let out = lift_sym(f, &cubic_point(&params, &[x.to_vec(), v.to_vec()])?, &params)?;
    Ok(out.iter().map(|c| c.top().clone()).collect())
}

/// `f^1_t(x, v) = (f(x), f^{[1]}(x, v, t))`.
pub fn tangent_map_t(f: &MapFn, t: &RingValue, x: &[RingValue], v: &[RingValue]) -> Result<(Vector, Vector)> {
    let slope = slope1(f, x, v, t)?;
    Ok((f.eval(x, &backend_of(x, t))?, slope))
}

fn require_extended(f: &MapFn, p: &HyperPoint) -> Result<()> {
    if p.dim() != f.d_in() {
        return Err(Error::Dimension { expected: f.d_in(), found: p.dim() });
    }
    if !extended_contains(f.domain(), p) {
        return Err(Error::DomainViolation(format!("order-{} point outside the extended domain", p.order())));
    }
    Ok(())
}

/// Second-order full slope. Uses the closed four-point formula when `t_1`,
/// `t_2` and `t_1 + t_2 t_12` are units, and the recursion otherwise.
pub fn slope2_full(f: &MapFn, p: &HyperPoint) -> Result<Vector> {
    if p.order() != 2 {
        return Err(Error::Dimension { expected: 2, found: p.order() });
    }
    require_extended(f, p)?;
    let (t1, t2, t12) = (p.t(Subset(1)), p.t(Subset(2)), p.t(Subset(3)));
    let s = t1 + &(t2 * t12);
    match (t1.try_invert(), t2.try_invert(), s.try_invert()) {
        (Some(i1), Some(i2), Some(is)) => slope2_closed(f, p, &i1, &i2, &is),
        _ => slope_n_full(f, p),
    }
}

fn slope2_closed(f: &MapFn, p: &HyperPoint, i1: &RingValue, i2: &RingValue, is: &RingValue) -> Result<Vector> {
    let backend = p.backend();
    let (v0, v1, v2, v12) = (p.w(Subset(0)), p.w(Subset(1)), p.w(Subset(2)), p.w(Subset(3)));
    let (t1, t2, t12) = (p.t(Subset(1)), p.t(Subset(2)), p.t(Subset(3)));
    let s = t1 + &(t2 * t12);
    let a = vector::axpy(v0, t2, v2);
    let b = vector::axpy(&a, &s, &vector::axpy(v1, t2, v12));
    let c = vector::axpy(v0, t1, v1);
    let eval = |x: &[RingValue]| f.eval(x, &backend);
    let outer = vector::scale(is, &vector::sub(&eval(&b)?, &eval(&a)?));
    let inner = vector::scale(i1, &vector::sub(&eval(&c)?, &eval(v0)?));
    Ok(vector::scale(i2, &vector::sub(&outer, &inner)))
}

/// Full slope `f^{[n]}` for `n ≤ 4`: the top coefficient of `f` evaluated in
/// the derived ring `R_n`. Float primitives go through the ring only when
/// every parameter vanishes, and through nested difference quotients when
/// every intermediate parameter is a unit.
pub fn slope_n_full(f: &MapFn, p: &HyperPoint) -> Result<Vector> {
    require_extended(f, p)?;
    if p.order() == 0 {
        return f.eval(p.w(Subset(0)), &p.backend());
    }
    let params = p.full_params()?;
    if f.uses_primitives() && !params.all_zero() {
        return slope_n_nested(f, p);
    }
    let d = p.dim();
    let input = (0..d)
        .map(|i| FullScalar::from_coeffs(&params, p.w_all().iter().map(|w| w[i].clone()).collect()))
        .collect::<Result<Vec<_>>>()?;
    let out = f.eval(&input, &params)?;
    Ok(out.iter().map(|c| c.top().clone()).collect())
}

/// `f^{[n]}` by literally nesting difference quotients. Requires every
/// parameter met along the way to be a unit.
pub fn slope_n_nested(f: &MapFn, p: &HyperPoint) -> Result<Vector> {
    if p.order() == 0 {
        return f.eval(p.w(Subset(0)), &p.backend());
    }
    let tn = p.t(Subset::single(p.order()));
    let inv = tn
        .try_invert()
        .ok_or_else(|| Error::NonUnitParameter(format!("t_{} = {tn}", p.order())))?;
    let (base, moved) = p.faces();
    let hi = slope_n_nested(f, &moved)?;
    let lo = slope_n_nested(f, &base)?;
    Ok(vector::scale(&inv, &vector::sub(&hi, &lo)))
}

/// Symmetric slope of any order `n ≤ 4`: the top coefficient of the lift at
/// `x + Σ_A u_A e_A` over `K_t^n`.
pub fn slope_sym(f: &MapFn, q: &SymPoint) -> Result<Vector> {
    if q.dim() != f.d_in() {
        return Err(Error::Dimension { expected: f.d_in(), found: q.dim() });
    }
    if !sym_contains(f.domain(), q) {
        return Err(Error::DomainViolation(format!("order-{} point outside the symmetric extended domain", q.order())));
    }
    let params = CubicParams::new(q.backend(), q.t().to_vec())?;
    let out = lift_sym(f, &cubic_point(&params, q.u_all())?, &params)?;
    Ok(out.iter().map(|c| c.top().clone()).collect())
}

/// Second-order symmetric slope: the four-point divided difference for unit
/// `t_1, t_2`, the top lift coefficient otherwise.
pub fn slope2_sym(f: &MapFn, q: &SymPoint) -> Result<Vector> {
    if q.order() != 2 {
        return Err(Error::Dimension { expected: 2, found: q.order() });
    }
    let (t1, t2) = (&q.t()[0], &q.t()[1]);
    let Some(inv) = (t1 * t2).try_invert() else {
        return slope_sym(f, q);
    };
    if q.dim() != f.d_in() {
        return Err(Error::Dimension { expected: f.d_in(), found: q.dim() });
    }
    if !sym_contains(f.domain(), q) {
        return Err(Error::DomainViolation("order-2 point outside the symmetric extended domain".into()));
    }
    let backend = q.backend();
    let pts = q.evaluation_points();
    let vals = pts.iter().map(|x| f.eval(x, &backend)).collect::<Result<Vec<_>>>()?;
    let num = vector::add(&vector::sub(&vals[3], &vals[1]), &vector::sub(&vals[0], &vals[2]));
    Ok(vector::scale(&inv, &num))
}
