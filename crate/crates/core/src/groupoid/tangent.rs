use super::{DomainSpec, Groupoid};
use crate::error::{Error, Result};
use crate::sampling::{self, ParamMode, SampleRng};
use crate::scalars::{Backend, RingValue};
use crate::vector::{self, Vector};

/// An arrow `(x, v, t)` of the tangent groupoid: source `(x, t)`, target `(x + tv, t)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Arrow1 {
    pub x: Vector,
    pub v: Vector,
    pub t: RingValue,
}

/// An object `(x, t)`.
pub type TangentObject = (Vector, RingValue);

impl Arrow1 {
    pub fn source(&self) -> TangentObject {
        (self.x.clone(), self.t.clone())
    }

    pub fn target(&self) -> TangentObject {
        (vector::axpy(&self.x, &self.t, &self.v), self.t.clone())
    }

    /// The pair `(x + tv, x)`.
    pub fn anchor(&self) -> (Vector, Vector) {
        (vector::axpy(&self.x, &self.t, &self.v), self.x.clone())
    }
}

/// The tangent groupoid `U^{1}` of a domain `U`: arrows `(x, v, t)` with
/// `x ∈ U` and `x + tv ∈ U`, for every scalar `t`.
#[derive(Debug, Clone, PartialEq)]
pub struct TangentGroupoid {
    domain: DomainSpec,
    backend: Backend,
}

impl TangentGroupoid {
    pub fn new(domain: DomainSpec, backend: Backend) -> Self {
        TangentGroupoid { domain, backend }
    }

    pub fn domain(&self) -> &DomainSpec {
        &self.domain
    }

    pub fn backend(&self) -> &Backend {
        &self.backend
    }

    pub fn dim(&self) -> usize {
        self.domain.dim()
    }

    /// Validated constructor: checks dimensions, backend and both endpoints.
    pub fn arrow(&self, x: Vector, v: Vector, t: RingValue) -> Result<Arrow1> {
        let d = self.dim();
        vector::check(&self.backend, &x, d)?;
        vector::check(&self.backend, &v, d)?;
        self.backend.check(&t)?;
        let a = Arrow1 { x, v, t };
        self.validate(&a)?;
        Ok(a)
    }

    pub fn validate(&self, a: &Arrow1) -> Result<()> {
        self.domain.require(&a.x)?;
        self.domain.require(&a.target().0)
    }

    pub fn contains(&self, a: &Arrow1) -> bool {
        self.validate(a).is_ok()
    }

    fn vec_eq(&self, a: &[RingValue], b: &[RingValue]) -> bool {
        self.backend.vec_eq(a, b)
    }

    fn scalar_eq(&self, a: &RingValue, b: &RingValue) -> bool {
        self.backend.ring_eq(a, b).unwrap_or(false)
    }

    /// `(x', v', t) ∗ (x, v, t) = (x, v + v', t)` when `x' = x + tv`. The
    /// composite is re-validated against the domain.
    pub fn try_compose(&self, a: &Arrow1, b: &Arrow1) -> Result<Arrow1> {
        let (bt, _) = b.target();
        if !self.scalar_eq(&a.t, &b.t) || !self.vec_eq(&a.x, &bt) {
            return Err(Error::NotComposable(format!(
                "source ({}, {}) differs from target ({}, {})",
                vector::format(&a.x),
                a.t,
                vector::format(&bt),
                b.t
            )));
        }
        let c = Arrow1 { x: b.x.clone(), v: vector::add(&a.v, &b.v), t: b.t.clone() };
        self.validate(&c)?;
        Ok(c)
    }

    /// `(x, v, t)^{-1} = (x + tv, -v, t)`.
    pub fn invert(&self, a: &Arrow1) -> Arrow1 {
        Arrow1 { x: a.target().0, v: vector::neg(&a.v), t: a.t.clone() }
    }

    pub fn unit_at(&self, x: &[RingValue], t: &RingValue) -> Arrow1 {
        Arrow1 { x: x.to_vec(), v: vector::zeros(&self.backend, x.len()), t: t.clone() }
    }

    /// `Υ^{-1}(z, x) = (x, (z - x)/t, t)`; needs `t` to be a unit.
    pub fn anchor_inverse(&self, z: &[RingValue], x: &[RingValue], t: &RingValue) -> Result<Arrow1> {
        let inv = t.try_invert().ok_or_else(|| Error::NotUnit(format!("t = {t}")))?;
        self.arrow(x.to_vec(), vector::scale(&inv, &vector::sub(z, x)), t.clone())
    }

    /// `Φ_s(x, v, t) = (x, sv, t s^{-1})`.
    pub fn rescale(&self, a: &Arrow1, s: &RingValue) -> Result<Arrow1> {
        self.backend.check(s)?;
        let inv = s.try_invert().ok_or_else(|| Error::NotUnit(format!("rescaling factor {s}")))?;
        Ok(Arrow1 { x: a.x.clone(), v: vector::scale(s, &a.v), t: &a.t * &inv })
    }

    pub fn arrows_approx_eq(&self, a: &Arrow1, b: &Arrow1) -> bool {
        self.vec_eq(&a.x, &b.x) && self.vec_eq(&a.v, &b.v) && self.scalar_eq(&a.t, &b.t)
    }

    /// Random point of the domain (rejection sampling).
    pub fn sample_point(&self, rng: &mut SampleRng) -> Result<Vector> {
        for _ in 0..1000 {
            let x = sampling::vector(rng, &self.backend, self.dim());
            if self.domain.contains(&x) {
                return Ok(x);
            }
        }
        Err(Error::DomainViolation("could not sample a point of the domain".into()))
    }

    /// A chain of `len` composable arrows `a_1, …, a_len` with
    /// `source(a_i) = target(a_{i+1})`, built from the last arrow backwards.
    pub fn sample_chain(&self, rng: &mut SampleRng, mode: ParamMode, len: usize) -> Result<Vec<Arrow1>> {
        for _ in 0..1000 {
            let t = sampling::param(rng, &self.backend, mode);
            let mut x = self.sample_point(rng)?;
            let mut chain = Vec::with_capacity(len);
            let mut ok = true;
            for _ in 0..len {
                let v = sampling::vector(rng, &self.backend, self.dim());
                let a = Arrow1 { x: x.clone(), v, t: t.clone() };
                // the composite of any sub-chain must stay inside the domain,
                // which holds once every intermediate point does
                if !self.contains(&a) {
                    ok = false;
                    break;
                }
                x = a.target().0;
                chain.push(a);
            }
            if ok {
                chain.reverse();
                return Ok(chain);
            }
        }
        Err(Error::DomainViolation("could not sample a composable chain".into()))
    }

    /// A random arrow.
    pub fn sample_arrow(&self, rng: &mut SampleRng, mode: ParamMode) -> Result<Arrow1> {
        Ok(self.sample_chain(rng, mode, 1)?.remove(0))
    }
}

impl Groupoid for TangentGroupoid {
    type Object = TangentObject;
    type Arrow = Arrow1;

    fn source(&self, a: &Arrow1) -> TangentObject {
        a.source()
    }

    fn target(&self, a: &Arrow1) -> TangentObject {
        a.target()
    }

    fn unit(&self, x: &TangentObject) -> Arrow1 {
        self.unit_at(&x.0, &x.1)
    }

    fn inverse(&self, a: &Arrow1) -> Arrow1 {
        self.invert(a)
    }

    fn compose(&self, a: &Arrow1, b: &Arrow1) -> Result<Arrow1> {
        self.try_compose(a, b)
    }

    fn objects_eq(&self, x: &TangentObject, y: &TangentObject) -> bool {
        self.vec_eq(&x.0, &y.0) && self.scalar_eq(&x.1, &y.1)
    }

    fn arrows_eq(&self, a: &Arrow1, b: &Arrow1) -> bool {
        self.arrows_approx_eq(a, b)
    }
}
