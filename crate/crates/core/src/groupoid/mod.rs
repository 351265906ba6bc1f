//! Groupoids: the tangent groupoid `U^{1}`, finite groupoids with their
//! bisection groups, ternary (torsor) products, the derived double groupoid,
//! and generic law checkers.

mod domain;
mod double;
mod finite;
mod report;
mod tangent;
mod torsor;

use std::fmt::Debug;

use crate::error::Result;

pub use domain::{DomainShape, DomainSpec};
pub use double::{check_interchange, sample_interchange, DerivedDouble, Horizontal, Square, Vertical};
pub use finite::{bisection_map, bisections, is_bisection, rel_compose, unit_section, ArrowSet, FiniteGroupoid};
pub use report::LawReport;
pub use tangent::{Arrow1, TangentGroupoid, TangentObject};
pub use torsor::{check_torsor, ternary};

/// A groupoid given by its structure maps. Composition `a ∗ b` is defined
/// when `source(a) = target(b)`.
pub trait Groupoid {
    type Object: Clone + Debug;
    type Arrow: Clone + Debug;

    fn source(&self, a: &Self::Arrow) -> Self::Object;
    fn target(&self, a: &Self::Arrow) -> Self::Object;
    fn unit(&self, x: &Self::Object) -> Self::Arrow;
    fn inverse(&self, a: &Self::Arrow) -> Self::Arrow;
    fn compose(&self, a: &Self::Arrow, b: &Self::Arrow) -> Result<Self::Arrow>;
    fn objects_eq(&self, x: &Self::Object, y: &Self::Object) -> bool;
    fn arrows_eq(&self, a: &Self::Arrow, b: &Self::Arrow) -> bool;
}

/// Checks every groupoid axiom on `samples` composable triples `(a, b, c)`
/// (`source(a) = target(b)`, `source(b) = target(c)`) drawn from `sampler`.
///
/// Covered: source/target of composites and units, associativity, both unit
/// laws, both inverse laws and the source/target of inverses. A sample fails
/// if any of them fails; the counterexample names the first failing axiom.
pub fn check_groupoid<G, S>(g: &G, law: &str, samples: usize, mut sampler: S) -> LawReport
where
    G: Groupoid,
    S: FnMut() -> Result<[G::Arrow; 3]>,
{
    let mut report = LawReport::new(law);
    for _ in 0..samples {
        let outcome = sampler().and_then(|[a, b, c]| {
            Ok(groupoid_axioms(g, &a, &b, &c)?.map(|axiom| format!("{axiom}: a={a:?}, b={b:?}, c={c:?}")))
        });
        match outcome {
            Ok(failure) => report.record(failure),
            Err(e) => report.record(Some(format!("sampler or composition error: {e}"))),
        }
    }
    report
}

fn groupoid_axioms<G: Groupoid>(g: &G, a: &G::Arrow, b: &G::Arrow, c: &G::Arrow) -> Result<Option<&'static str>> {
    let oe = |x: &G::Object, y: &G::Object| g.objects_eq(x, y);
    let ae = |x: &G::Arrow, y: &G::Arrow| g.arrows_eq(x, y);

    let ab = g.compose(a, b)?;
    let bc = g.compose(b, c)?;
    if !oe(&g.source(&ab), &g.source(b)) || !oe(&g.target(&ab), &g.target(a)) {
        return Ok(Some("source/target of composite"));
    }
    if !oe(&g.source(&bc), &g.source(c)) || !oe(&g.target(&bc), &g.target(b)) {
        return Ok(Some("source/target of composite"));
    }
    if !ae(&g.compose(&ab, c)?, &g.compose(a, &bc)?) {
        return Ok(Some("associativity"));
    }
    for x in [a, b, c] {
        let (sx, tx) = (g.source(x), g.target(x));
        let (us, ut) = (g.unit(&sx), g.unit(&tx));
        if !oe(&g.source(&us), &sx) || !oe(&g.target(&us), &sx) {
            return Ok(Some("source/target of unit"));
        }
        if !ae(&g.compose(x, &us)?, x) || !ae(&g.compose(&ut, x)?, x) {
            return Ok(Some("unit law"));
        }
        let inv = g.inverse(x);
        if !oe(&g.source(&inv), &tx) || !oe(&g.target(&inv), &sx) {
            return Ok(Some("source/target of inverse"));
        }
        if !ae(&g.compose(x, &inv)?, &ut) || !ae(&g.compose(&inv, x)?, &us) {
            return Ok(Some("inverse law"));
        }
    }
    Ok(None)
}
