use super::{Groupoid, LawReport};
use crate::error::{Error, Result};
use crate::sampling::{self, SampleRng};
use crate::scalars::{Backend, RingValue};
use crate::vector::{self, Vector};

/// An element `(v0, v1, v2, v12)` of the derived double groupoid: the
/// tangent groupoid in direction 2 of the tangent groupoid in direction 1.
#[derive(Debug, Clone, PartialEq)]
pub struct Square {
    pub v0: Vector,
    pub v1: Vector,
    pub v2: Vector,
    pub v12: Vector,
}

/// The double groupoid `U^{1,2}` over `U = K^d` at fixed parameters `(t1, t2)`.
///
/// Horizontal structure (direction 1): source `(v0, v2)`, target
/// `(v0 + t1 v1, v2 + t1 v12)`, composite `a ∗ b = (b.v0, a.v1 + b.v1, b.v2, a.v12 + b.v12)`.
/// Vertical structure (direction 2): source `(v0, v1)`, target
/// `(v0 + t2 v2, v1 + t2 v12)`, composite `a • c = (c.v0, c.v1, a.v2 + c.v2, a.v12 + c.v12)`.
#[derive(Debug, Clone, PartialEq)]
pub struct DerivedDouble {
    pub dim: usize,
    pub t1: RingValue,
    pub t2: RingValue,
    pub backend: Backend,
}

impl DerivedDouble {
    pub fn new(backend: Backend, dim: usize, t1: RingValue, t2: RingValue) -> Result<Self> {
        backend.check(&t1)?;
        backend.check(&t2)?;
        Ok(DerivedDouble { dim, t1, t2, backend })
    }

    pub fn horizontal(&self) -> Horizontal<'_> {
        Horizontal(self)
    }

    pub fn vertical(&self) -> Vertical<'_> {
        Vertical(self)
    }

    /// The four corner points `v0`, `v0 + t1 v1`, `v0 + t2 v2`,
    /// `v0 + t1 v1 + t2 v2 + t1 t2 v12`.
    pub fn corners(&self, s: &Square) -> [Vector; 4] {
        let t12 = &self.t1 * &self.t2;
        let p1 = vector::axpy(&s.v0, &self.t1, &s.v1);
        let p2 = vector::axpy(&s.v0, &self.t2, &s.v2);
        let p12 = vector::axpy(&vector::axpy(&p1, &self.t2, &s.v2), &t12, &s.v12);
        [s.v0.clone(), p1, p2, p12]
    }

    pub fn square_eq(&self, a: &Square, b: &Square) -> bool {
        let e = |x: &[RingValue], y: &[RingValue]| self.backend.vec_eq(x, y);
        e(&a.v0, &b.v0) && e(&a.v1, &b.v1) && e(&a.v2, &b.v2) && e(&a.v12, &b.v12)
    }

    fn pair_eq(&self, a: &(Vector, Vector), b: &(Vector, Vector)) -> bool {
        self.backend.vec_eq(&a.0, &b.0) && self.backend.vec_eq(&a.1, &b.1)
    }

    pub fn sample_square(&self, rng: &mut SampleRng) -> Square {
        let mut v = || sampling::vector(rng, &self.backend, self.dim);
        Square { v0: v(), v1: v(), v2: v(), v12: v() }
    }
}

impl DerivedDouble {
    /// `len` squares `a_1, …, a_len` composable in one direction
    /// (`source(a_i) = target(a_{i+1})`).
    pub fn sample_chain(&self, rng: &mut SampleRng, horizontal: bool, len: usize) -> Vec<Square> {
        let mut chain = vec![self.sample_square(rng)];
        while chain.len() < len {
            let prev = chain.last().expect("non-empty");
            let mut next = self.sample_square(rng);
            if horizontal {
                (next.v0, next.v2) = self.horizontal().target(prev);
            } else {
                (next.v0, next.v1) = self.vertical().target(prev);
            }
            chain.push(next);
        }
        chain.reverse();
        chain
    }

    /// The unit square `(x, 0, 0, 0)` for both structures.
    pub fn double_unit(&self, x: &[RingValue]) -> Square {
        let z = vector::zeros(&self.backend, x.len());
        Square { v0: x.to_vec(), v1: z.clone(), v2: z.clone(), v12: z }
    }
}

/// The horizontal groupoid of a [`DerivedDouble`]; objects are pairs `(x, dx)`.
pub struct Horizontal<'a>(pub &'a DerivedDouble);

/// The vertical groupoid of a [`DerivedDouble`]; objects are pairs `(x, dx)`.
pub struct Vertical<'a>(pub &'a DerivedDouble);

impl Groupoid for Horizontal<'_> {
    type Object = (Vector, Vector);
    type Arrow = Square;

    fn source(&self, a: &Square) -> (Vector, Vector) {
        (a.v0.clone(), a.v2.clone())
    }

    fn target(&self, a: &Square) -> (Vector, Vector) {
        let t = &self.0.t1;
        (vector::axpy(&a.v0, t, &a.v1), vector::axpy(&a.v2, t, &a.v12))
    }

    fn unit(&self, x: &(Vector, Vector)) -> Square {
        let z = vector::zeros(&self.0.backend, x.0.len());
        Square { v0: x.0.clone(), v1: z.clone(), v2: x.1.clone(), v12: z }
    }

    fn inverse(&self, a: &Square) -> Square {
        let (v0, v2) = self.target(a);
        Square { v0, v1: vector::neg(&a.v1), v2, v12: vector::neg(&a.v12) }
    }

    fn compose(&self, a: &Square, b: &Square) -> Result<Square> {
        if !self.0.pair_eq(&self.source(a), &self.target(b)) {
            return Err(Error::NotComposable("horizontal source and target differ".into()));
        }
        Ok(Square {
            v0: b.v0.clone(),
            v1: vector::add(&a.v1, &b.v1),
            v2: b.v2.clone(),
            v12: vector::add(&a.v12, &b.v12),
        })
    }

    fn objects_eq(&self, x: &(Vector, Vector), y: &(Vector, Vector)) -> bool {
        self.0.pair_eq(x, y)
    }

    fn arrows_eq(&self, a: &Square, b: &Square) -> bool {
        self.0.square_eq(a, b)
    }
}

impl Groupoid for Vertical<'_> {
    type Object = (Vector, Vector);
    type Arrow = Square;

    fn source(&self, a: &Square) -> (Vector, Vector) {
        (a.v0.clone(), a.v1.clone())
    }

    fn target(&self, a: &Square) -> (Vector, Vector) {
        let t = &self.0.t2;
        (vector::axpy(&a.v0, t, &a.v2), vector::axpy(&a.v1, t, &a.v12))
    }

    fn unit(&self, x: &(Vector, Vector)) -> Square {
        let z = vector::zeros(&self.0.backend, x.0.len());
        Square { v0: x.0.clone(), v1: x.1.clone(), v2: z.clone(), v12: z }
    }

    fn inverse(&self, a: &Square) -> Square {
        let (v0, v1) = self.target(a);
        Square { v0, v1, v2: vector::neg(&a.v2), v12: vector::neg(&a.v12) }
    }

    fn compose(&self, a: &Square, c: &Square) -> Result<Square> {
        if !self.0.pair_eq(&self.source(a), &self.target(c)) {
            return Err(Error::NotComposable("vertical source and target differ".into()));
        }
        Ok(Square {
            v0: c.v0.clone(),
            v1: c.v1.clone(),
            v2: vector::add(&a.v2, &c.v2),
            v12: vector::add(&a.v12, &c.v12),
        })
    }

    fn objects_eq(&self, x: &(Vector, Vector), y: &(Vector, Vector)) -> bool {
        self.0.pair_eq(x, y)
    }

    fn arrows_eq(&self, a: &Square, b: &Square) -> bool {
        self.0.square_eq(a, b)
    }
}

/// A random quadruple `(a, b, c, d)` arranged as
/// ```text
///   a b
///   c d
/// ```
/// so that `a ∗ b`, `c ∗ d`, `a • c` and `b • d` are all defined.
pub fn sample_interchange(dd: &DerivedDouble, rng: &mut SampleRng) -> [Square; 4] {
    let (t1, t2) = (&dd.t1, &dd.t2);
    let mut v = || sampling::vector(rng, &dd.backend, dd.dim);
    let d = Square { v0: v(), v1: v(), v2: v(), v12: v() };
    // c ∗ d: source_h(c) = target_h(d)
    let c = Square {
        v0: vector::axpy(&d.v0, t1, &d.v1),
        v1: v(),
        v2: vector::axpy(&d.v2, t1, &d.v12),
        v12: v(),
    };
    // b • d: source_v(b) = target_v(d)
    let b = Square {
        v0: vector::axpy(&d.v0, t2, &d.v2),
        v1: vector::axpy(&d.v1, t2, &d.v12),
        v2: v(),
        v12: v(),
    };
    // a ∗ b and a • c
    let a = Square {
        v0: vector::axpy(&b.v0, t1, &b.v1),
        v1: vector::axpy(&c.v1, t2, &c.v12),
        v2: vector::axpy(&b.v2, t1, &b.v12),
        v12: v(),
    };
    [a, b, c, d]
}

/// Checks `(a • c) ∗ (b • d) = (a ∗ b) • (c ∗ d)` on sampled quadruples.
pub fn check_interchange<S>(dd: &DerivedDouble, law: &str, samples: usize, mut sampler: S) -> LawReport
where
    S: FnMut() -> Result<[Square; 4]>,
{
    let (h, vg) = (dd.horizontal(), dd.vertical());
    let mut report = LawReport::new(law);
    for _ in 0..samples {
        let outcome = sampler().and_then(|[a, b, c, d]| {
            let lhs = h.compose(&vg.compose(&a, &c)?, &vg.compose(&b, &d)?)?;
            let rhs = vg.compose(&h.compose(&a, &b)?, &h.compose(&c, &d)?)?;
            Ok((dd.square_eq(&lhs, &rhs), [a, b, c, d]))
        });
        report.record(match outcome {
            Ok((true, _)) => None,
            Ok((false, q)) => Some(format!("interchange fails on {q:?}")),
            Err(e) => Some(e.to_string()),
        });
    }
    report
}
