use super::mapfn::MapFn;
use super::points::SymPoint;
use super::slope::{slope1, slope2_sym, tangent_map_t};
use crate::error::Result;
use crate::groupoid::LawReport;
use crate::scalars::{Backend, RingValue};
use crate::vector::{self, Vector};

fn vec_eq(a: &[RingValue], b: &[RingValue]) -> bool {
    a.first().map(Backend::of).is_none_or(|backend| backend.vec_eq(a, b))
}

fn describe_err<T>(r: &Result<T>) -> String {
    match r {
        Err(e) => format!("error: {e}"),
        Ok(_) => "ok".into(),
    }
}

/// `(g∘f)^1_t = g^1_t ∘ f^1_t` on sampled `(x, v, t)`.
pub fn check_chain_rule<S>(f: &MapFn, g: &MapFn, law: &str, samples: usize, mut sampler: S) -> LawReport
where
    S: FnMut() -> Result<(Vector, Vector, RingValue)>,
{
    let mut report = LawReport::new(law);
    let gf = match MapFn::compose(g, f) {
        Ok(gf) => gf,
        Err(e) => {
            report.record(Some(format!("cannot compose: {e}")));
            return report;
        }
    };
    for _ in 0..samples {
        let outcome = sampler().and_then(|(x, v, t)| {
            let lhs = tangent_map_t(&gf, &t, &x, &v)?;
            let (fx, fv) = tangent_map_t(f, &t, &x, &v)?;
            let rhs = tangent_map_t(g, &t, &fx, &fv)?;
            let ok = vec_eq(&lhs.0, &rhs.0) && vec_eq(&lhs.1, &rhs.1);
            Ok((!ok).then(|| {
                format!(
                    "x={} v={} t={t}: composite slope {} vs {}",
                    vector::format(&x),
                    vector::format(&v),
                    vector::format(&lhs.1),
                    vector::format(&rhs.1)
                )
            }))
        });
        report.record(outcome.unwrap_or_else(|e| Some(describe_err::<()>(&Err(e)))));
    }
    report
}

/// Flip invariance `f^{[2]}(q) = f^{[2]}(σ q)` for order-2 symmetric points.
pub fn check_schwarz<S>(f: &MapFn, law: &str, samples: usize, mut sampler: S) -> LawReport
where
    S: FnMut() -> Result<SymPoint>,
{
    let mut report = LawReport::new(law);
    for _ in 0..samples {
        let outcome = sampler().and_then(|q| {
            let a = slope2_sym(f, &q)?;
            let b = slope2_sym(f, &q.flip(1, 2))?;
            Ok((!vec_eq(&a, &b)).then(|| {
                format!("t={:?}: {} vs flipped {}", q.t(), vector::format(&a), vector::format(&b))
            }))
        });
        report.record(outcome.unwrap_or_else(|e| Some(format!("error: {e}"))));
    }
    report
}

/// Additivity `f^{[1]}(x, v+v', t) = f^{[1]}(x, v, t) + f^{[1]}(x+tv, v', t)`,
/// plus homogeneity `f^{[1]}(x, sv, 0) = s f^{[1]}(x, v, 0)` whenever `t = 0`.
/// Samples are `(x, v, v', t, s)`.
pub fn check_additivity<S>(f: &MapFn, law: &str, samples: usize, mut sampler: S) -> LawReport
where
    S: FnMut() -> Result<(Vector, Vector, Vector, RingValue, RingValue)>,
{
    let mut report = LawReport::new(law);
    for _ in 0..samples {
        let outcome = sampler().and_then(|(x, v, w, t, s)| {
            let lhs = slope1(f, &x, &vector::add(&v, &w), &t)?;
            let rhs = vector::add(&slope1(f, &x, &v, &t)?, &slope1(f, &vector::axpy(&x, &t, &v), &w, &t)?);
            if !vec_eq(&lhs, &rhs) {
                return Ok(Some(format!(
                    "additivity at x={} v={} v'={} t={t}",
                    vector::format(&x),
                    vector::format(&v),
                    vector::format(&w)
                )));
            }
            if t.is_zero() {
                let scaled = slope1(f, &x, &vector::scale(&s, &v), &t)?;
                if !vec_eq(&scaled, &vector::scale(&s, &slope1(f, &x, &v, &t)?)) {
                    return Ok(Some(format!("homogeneity at x={} v={} s={s}", vector::format(&x), vector::format(&v))));
                }
            }
            Ok(None)
        });
        report.record(outcome.unwrap_or_else(|e| Some(format!("error: {e}"))));
    }
    report
}
