//! The iterated derived ring `R_n` computing full-cubic slopes.
//!
//! `R_n` has basis `e_S`, `S ⊆ {1..n}`, generated by `e_1, …, e_n` with
//! `e_k² = T_k e_k` and `T_k = Σ_{B ⊆ {k+1..n}} t_{{k}∪B} e_B`. It is obtained by
//! adjoining `e_n` to `K` (with `e_n² = t_n e_n`), then `e_{n-1}` over that
//! ring, and so on: exactly the scalar extension performed by one step of
//! `f^{[n]} = (f^{[n-1]})^{[1]}` when the parameters of the inner step are
//! themselves variables. Evaluating `f` at `Σ_A w_A e_A` therefore yields
//! `f^{[n]}` as the coefficient of `e_{1..n}`.

use std::sync::Arc;

use num::BigRational;

use crate::cubic::{CubicParams, CubicScalar};
use crate::error::{Error, Result};
use crate::linalg;
use crate::primitive::Primitive;
use crate::scalars::{Backend, Ring, RingValue};
use crate::subset::Subset;

/// Largest order supported by the full-cubic tower.
pub const MAX_FULL_ORDER: usize = 4;

/// Parameters `t_A` (`A ≠ ∅`) of `R_n` with a precomputed product table.
#[derive(Debug, Clone)]
pub struct FullParams {
    n: usize,
    backend: Backend,
    /// `t[bits(A)]`; `t[0] = 1`.
    t: Vec<RingValue>,
    /// `table[s * 2^n + r]` holds the coefficients of `e_s · e_r`.
    table: Vec<Vec<RingValue>>,
}

impl PartialEq for FullParams {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.backend == other.backend && self.t == other.t
    }
}

impl FullParams {
    /// `t_nonempty[i]` is `t_A` for `A` with bitmask `i + 1`.
    pub fn new(backend: Backend, n: usize, t_nonempty: Vec<RingValue>) -> Result<Arc<Self>> {
        if n > MAX_FULL_ORDER {
            return Err(Error::OrderTooLarge(n, MAX_FULL_ORDER));
        }
        let size = 1usize << n;
        if t_nonempty.len() != size - 1 {
            return Err(Error::Dimension { expected: size - 1, found: t_nonempty.len() });
        }
        for v in &t_nonempty {
            backend.check(v)?;
        }
        let mut t = Vec::with_capacity(size);
        t.push(backend.one());
        t.extend(t_nonempty);
        let mut params = FullParams { n, backend, t, table: Vec::new() };
        let mut table = Vec::with_capacity(size * size);
        for s in 0..size {
            for r in 0..size {
                table.push(params.mul_set(s, r));
            }
        }
        params.table = table;
        Ok(Arc::new(params))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn backend(&self) -> &Backend {
        &self.backend
    }

    pub fn t_of(&self, a: Subset) -> &RingValue {
        &self.t[a.bits() as usize]
    }

    pub fn size(&self) -> usize {
        1 << self.n
    }

    pub fn all_zero(&self) -> bool {
        self.t[1..].iter().all(RingValue::is_zero)
    }

    fn unit_vec(&self, s: usize) -> Vec<RingValue> {
        let mut v = vec![self.backend.zero(); self.size()];
        v[s] = self.backend.one();
        v
    }

    /// `e_s · Π_{j ∈ b} e_j`.
    fn mul_set(&self, s: usize, b: usize) -> Vec<RingValue> {
        let mut v = self.unit_vec(s);
        for j in Subset(b as u32).dirs() {
            v = self.mul_gen(&v, j);
        }
        v
    }

    /// `v · e_k`, using `e_S e_k = T_k e_S` when `k ∈ S`. Recursion only
    /// involves generators above `k`, so it terminates.
    fn mul_gen(&self, v: &[RingValue], k: usize) -> Vec<RingValue> {
        let bit = 1usize << (k - 1);
        let above = Subset::full(self.n).bits() as usize & !((bit << 1) - 1);
        let mut out = vec![self.backend.zero(); self.size()];
        for (s, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if s & bit == 0 {
                out[s | bit] = &out[s | bit] + c;
                continue;
            }
            for b in Subset(above as u32).subsets() {
                let tb = &self.t[bit | b.bits() as usize];
                if tb.is_zero() {
                    continue;
                }
                let scale = c * tb;
                for (i, p) in self.mul_set(s, b.bits() as usize).iter().enumerate() {
                    if !p.is_zero() {
                        out[i] = &out[i] + &(&scale * p);
                    }
                }
            }
        }
        out
    }

    /// The `2^n` characters `R_n → K`, each given by its values on the basis.
    ///
    /// Generators are assigned from `e_n` down to `e_1`: `e_k ↦ 0` or
    /// `e_k ↦ χ(T_k)`. Character `c` (a bitmask) sends `e_k` to the non-zero
    /// option exactly when `k ∈ c`.
    pub fn characters(&self) -> Vec<Vec<RingValue>> {
        let size = self.size();
        (0..size)
            .map(|choice| {
                let mut g = vec![self.backend.zero(); self.n + 1];
                for k in (1..=self.n).rev() {
                    if choice & (1 << (k - 1)) == 0 {
                        continue;
                    }
                    let bit = 1usize << (k - 1);
                    let above = Subset::full(self.n).bits() as usize & !((bit << 1) - 1);
                    g[k] = Subset(above as u32).subsets().fold(self.backend.zero(), |acc, b| {
                        let prod = b.dirs().fold(self.t[bit | b.bits() as usize].clone(), |p, j| p * g[j].clone());
                        acc + prod
                    });
                }
                (0..size)
                    .map(|s| Subset(s as u32).dirs().fold(self.backend.one(), |p, k| p * g[k].clone()))
                    .collect()
            })
            .collect()
    }
}

/// An element of `R_n`.
#[derive(Debug, Clone)]
pub struct FullScalar {
    params: Arc<FullParams>,
    coeffs: Vec<RingValue>,
}

impl PartialEq for FullScalar {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.params, &other.params) || self.params == other.params) && self.coeffs == other.coeffs
    }
}

impl FullScalar {
    pub fn from_coeffs(params: &Arc<FullParams>, coeffs: Vec<RingValue>) -> Result<Self> {
        if coeffs.len() != params.size() {
            return Err(Error::Dimension { expected: params.size(), found: coeffs.len() });
        }
        for c in &coeffs {
            params.backend.check(c)?;
        }
        Ok(FullScalar { params: params.clone(), coeffs })
    }

    pub fn coeffs(&self) -> &[RingValue] {
        &self.coeffs
    }

    pub fn top(&self) -> &RingValue {
        self.coeffs.last().expect("non-empty")
    }

    fn check(&self, other: &FullScalar) {
        assert!(
            Arc::ptr_eq(&self.params, &other.params) || self.params == other.params,
            "full-cubic arithmetic across rings"
        );
    }

    fn mul_ref(&self, other: &FullScalar) -> FullScalar {
        self.check(other);
        let size = self.params.size();
        let mut out = vec![self.params.backend.zero(); size];
        for (s, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (r, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (i, p) in self.params.table[s * size + r].iter().enumerate() {
                    if !p.is_zero() {
                        out[i] = &out[i] + &(&ab * p);
                    }
                }
            }
        }
        FullScalar { params: self.params.clone(), coeffs: out }
    }

    /// Inverse through the multiplication matrix.
    pub fn try_inverse(&self) -> Option<FullScalar> {
        let size = self.params.size();
        let mut rows = vec![vec![self.params.backend.zero(); size]; size];
        for r in 0..size {
            let col = self.mul_ref(&FullScalar { params: self.params.clone(), coeffs: self.params.unit_vec(r) });
            for (i, v) in col.coeffs.into_iter().enumerate() {
                rows[i][r] = v;
            }
        }
        let y = linalg::solve(&self.params.backend, rows, self.params.unit_vec(0))?;
        Some(FullScalar { params: self.params.clone(), coeffs: y })
    }

    /// Value under each character (see [`FullParams::characters`]).
    pub fn character_values(&self) -> Vec<RingValue> {
        self.params
            .characters()
            .iter()
            .map(|chi| {
                chi.iter()
                    .zip(&self.coeffs)
                    .fold(self.params.backend.zero(), |acc, (c, v)| acc + c * v)
            })
            .collect()
    }
}

impl std::ops::Add for FullScalar {
    type Output = FullScalar;
    fn add(self, rhs: FullScalar) -> FullScalar {
        self.check(&rhs);
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect();
        FullScalar { params: self.params, coeffs }
    }
}

impl std::ops::Sub for FullScalar {
    type Output = FullScalar;
    fn sub(self, rhs: FullScalar) -> FullScalar {
        self.check(&rhs);
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect();
        FullScalar { params: self.params, coeffs }
    }
}

impl std::ops::Mul for FullScalar {
    type Output = FullScalar;
    fn mul(self, rhs: FullScalar) -> FullScalar {
        self.mul_ref(&rhs)
    }
}

impl std::ops::Neg for FullScalar {
    type Output = FullScalar;
    fn neg(self) -> FullScalar {
        let coeffs = self.coeffs.iter().map(|a| -a).collect();
        FullScalar { params: self.params, coeffs }
    }
}

impl Ring for FullScalar {
    type Ctx = Arc<FullParams>;

    fn zero_in(ctx: &Arc<FullParams>) -> Self {
        FullScalar { params: ctx.clone(), coeffs: vec![ctx.backend.zero(); ctx.size()] }
    }

    fn one_in(ctx: &Arc<FullParams>) -> Self {
        FullScalar { params: ctx.clone(), coeffs: ctx.unit_vec(0) }
    }

    fn from_rational_in(ctx: &Arc<FullParams>, q: &BigRational) -> Result<Self> {
        let mut out = Self::zero_in(ctx);
        out.coeffs[0] = ctx.backend.from_rational(q)?;
        Ok(out)
    }

    fn belongs_to(&self, ctx: &Arc<FullParams>) -> bool {
        Arc::ptr_eq(&self.params, ctx) || *self.params == **ctx
    }

    fn try_invert(&self) -> Option<Self> {
        self.try_inverse()
    }

    /// Float primitives lift only when every parameter vanishes, where `R_n`
    /// coincides with the jet ring `K_0^n`.
    fn apply_primitive(&self, prim: Primitive) -> Result<Self> {
        if !self.params.all_zero() {
            return Err(Error::UnsupportedPrimitive(prim.name().into()));
        }
        let jets = CubicParams::zeros(self.params.backend, self.params.n)?;
        let x = CubicScalar::from_coeffs(&jets, jets.full(), self.coeffs.clone())?;
        let y = x.apply_native(prim)?;
        Ok(FullScalar { params: self.params.clone(), coeffs: y.coeffs().to_vec() })
    }
}
