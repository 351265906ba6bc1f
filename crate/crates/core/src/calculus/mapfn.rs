use crate::error::{Error, Result};
use crate::expr::{parse, ExprVec};
use crate::groupoid::DomainSpec;
use crate::primitive::Primitive;
use crate::scalars::Ring;

/// How a map is computed.
#[derive(Debug, Clone, PartialEq)]
pub enum Body {
    /// Expression vector, portable across every ring.
    Expr(ExprVec),
    /// A Float-native primitive applied componentwise.
    Native(Primitive),
    /// `outer ∘ inner`.
    Composite(Box<MapFn>, Box<MapFn>),
}

/// A map `f : U → K^{d_out}` with `U ⊆ K^{d_in}`.
#[derive(Debug, Clone, PartialEq)]
pub struct MapFn {
    d_in: usize,
    d_out: usize,
    body: Body,
    domain: DomainSpec,
}

impl MapFn {
    pub fn from_expr(e: ExprVec) -> Self {
        MapFn { d_in: e.arity(), d_out: e.out_dim(), domain: DomainSpec::full(e.arity()), body: Body::Expr(e) }
    }

    pub fn parse(text: &str, arity: usize) -> Result<Self> {
        Ok(Self::from_expr(parse(text, arity)?))
    }

    pub fn native(p: Primitive, dim: usize) -> Self {
        MapFn { d_in: dim, d_out: dim, body: Body::Native(p), domain: DomainSpec::full(dim) }
    }

    pub fn identity(dim: usize) -> Self {
        let comps = (0..dim).map(crate::expr::Expr::Var).collect();
        Self::from_expr(ExprVec::new(dim, comps).expect("variables in range"))
    }

    pub fn with_domain(mut self, domain: DomainSpec) -> Result<Self> {
        if domain.dim() != self.d_in {
            return Err(Error::Dimension { expected: self.d_in, found: domain.dim() });
        }
        self.domain = domain;
        Ok(self)
    }

    /// `outer ∘ inner`. Two expression maps are composed by substitution;
    /// anything else is kept as a composite. The domain is that of `inner`.
    pub fn compose(outer: &MapFn, inner: &MapFn) -> Result<MapFn> {
        if outer.d_in != inner.d_out {
            return Err(Error::Arity { expected: outer.d_in, found: inner.d_out });
        }
        let body = match (&outer.body, &inner.body) {
            (Body::Expr(o), Body::Expr(i)) => Body::Expr(o.compose(i)?),
            _ => Body::Composite(Box::new(outer.clone()), Box::new(inner.clone())),
        };
        Ok(MapFn { d_in: inner.d_in, d_out: outer.d_out, body, domain: inner.domain.clone() })
    }

    pub fn d_in(&self) -> usize {
        self.d_in
    }

    pub fn d_out(&self) -> usize {
        self.d_out
    }

    pub fn body(&self) -> &Body {
        &self.body
    }

    pub fn domain(&self) -> &DomainSpec {
        &self.domain
    }

    /// True when evaluation needs Float-native primitives.
    pub fn uses_primitives(&self) -> bool {
        match &self.body {
            Body::Expr(e) => e.has_primitive(),
            Body::Native(_) => true,
            Body::Composite(o, i) => o.uses_primitives() || i.uses_primitives(),
        }
    }

    /// Evaluates `f` over any ring by plain ring arithmetic.
    pub fn eval<R: Ring>(&self, x: &[R], ctx: &R::Ctx) -> Result<Vec<R>> {
        if x.len() != self.d_in {
            return Err(Error::Arity { expected: self.d_in, found: x.len() });
        }
        match &self.body {
            Body::Expr(e) => e.eval(x, ctx),
            Body::Native(p) => x.iter().map(|xi| xi.apply_primitive(*p)).collect(),
            Body::Composite(outer, inner) => outer.eval(&inner.eval(x, ctx)?, ctx),
        }
    }
}
