use std::sync::Arc;

use super::full::FullParams;
use crate::error::{Error, Result};
use crate::groupoid::DomainSpec;
use crate::scalars::{Backend, RingValue};
use crate::subset::Subset;
use crate::vector::{self, Vector};

/// A point of the full extended domain `U^{[n]}`: vectors `w_A` for every
/// `A ⊆ {1..n}` and scalars `t_A` for every non-empty `A`. Both are indexed by
/// the bitmask of `A`; `t[0]` is unused and set to `1`.
///
/// For `n = 2` the fields are `(v0, v1, v2, v12)` and `(t1, t2, t12)`.
#[derive(Debug, Clone, PartialEq)]
pub struct HyperPoint {
    n: usize,
    w: Vec<Vector>,
    t: Vec<RingValue>,
}

impl HyperPoint {
    /// `t_nonempty[i]` is `t_A` for the set with bitmask `i + 1`.
    pub fn new(n: usize, w: Vec<Vector>, t_nonempty: Vec<RingValue>) -> Result<Self> {
        let size = 1usize << n;
        if w.len() != size {
            return Err(Error::Dimension { expected: size, found: w.len() });
        }
        if t_nonempty.len() != size - 1 {
            return Err(Error::Dimension { expected: size - 1, found: t_nonempty.len() });
        }
        let backend = t_nonempty
            .first()
            .map(Backend::of)
            .or_else(|| w.first().and_then(|v| v.first()).map(Backend::of))
            .unwrap_or(Backend::Rational);
        let d = w[0].len();
        for v in &w {
            vector::check(&backend, v, d)?;
        }
        for t in &t_nonempty {
            backend.check(t)?;
        }
        let mut t = Vec::with_capacity(size);
        t.push(backend.one());
        t.extend(t_nonempty);
        Ok(HyperPoint { n, w, t })
    }

    /// Order-2 point `(v0, v1, v2, v12; t1, t2, t12)`.
    #[allow(clippy::too_many_arguments)]
    pub fn order2(v0: Vector, v1: Vector, v2: Vector, v12: Vector, t1: RingValue, t2: RingValue, t12: RingValue) -> Result<Self> {
        Self::new(2, vec![v0, v1, v2, v12], vec![t1, t2, t12])
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.w[0].len()
    }

    pub fn backend(&self) -> Backend {
        Backend::of(&self.t[0])
    }

    pub fn w(&self, a: Subset) -> &Vector {
        &self.w[a.bits() as usize]
    }

    pub fn t(&self, a: Subset) -> &RingValue {
        &self.t[a.bits() as usize]
    }

    pub(crate) fn w_all(&self) -> &[Vector] {
        &self.w
    }

    pub(crate) fn full_params(&self) -> Result<Arc<FullParams>> {
        FullParams::new(self.backend(), self.n, self.t[1..].to_vec())
    }

    /// Splits off direction `n`: the base point (sets without `n`) and the
    /// point moved by `t_n` along the sets containing `n`.
    pub(crate) fn faces(&self) -> (HyperPoint, HyperPoint) {
        let half = 1usize << (self.n - 1);
        let tn = &self.t[half];
        let base_w = self.w[..half].to_vec();
        let moved_w = (0..half).map(|a| vector::axpy(&self.w[a], tn, &self.w[a | half])).collect();
        let base_t = self.t[..half].to_vec();
        let moved_t = (0..half).map(|a| if a == 0 { self.t[0].clone() } else { &self.t[a] + &(tn * &self.t[a | half]) }).collect();
        (
            HyperPoint { n: self.n - 1, w: base_w, t: base_t },
            HyperPoint { n: self.n - 1, w: moved_w, t: moved_t },
        )
    }

    /// The `2^n` points of `U` at which membership is decided.
    pub fn evaluation_points(&self) -> Result<Vec<Vector>> {
        let params = self.full_params()?;
        Ok(params
            .characters()
            .iter()
            .map(|chi| {
                chi.iter().zip(&self.w).fold(vector::zeros(&self.backend(), self.dim()), |acc, (c, w)| {
                    vector::axpy(&acc, c, w)
                })
            })
            .collect())
    }
}

/// A point of the symmetric extended domain `U^{[n]}_t`: base `x`, directions
/// `u_A` for non-empty `A` (indexed by bitmask, `u[0] = x`) and `t ∈ K^n`.
#[derive(Debug, Clone, PartialEq)]
pub struct SymPoint {
    n: usize,
    u: Vec<Vector>,
    t: Vec<RingValue>,
}

impl SymPoint {
    /// `u[i]` is the coefficient of `e_A` for `A` with bitmask `i` (so `u[0]`
    /// is the base point).
    pub fn new(u: Vec<Vector>, t: Vec<RingValue>) -> Result<Self> {
        let n = t.len();
        let size = 1usize << n;
        if u.len() != size {
            return Err(Error::Dimension { expected: size, found: u.len() });
        }
        let backend = t.first().map(Backend::of).or_else(|| u[0].first().map(Backend::of)).unwrap_or(Backend::Rational);
        let d = u[0].len();
        for v in &u {
            vector::check(&backend, v, d)?;
        }
        for s in &t {
            backend.check(s)?;
        }
        Ok(SymPoint { n, u, t })
    }

    pub fn order2(v0: Vector, v1: Vector, v2: Vector, v12: Vector, t1: RingValue, t2: RingValue) -> Result<Self> {
        Self::new(vec![v0, v1, v2, v12], vec![t1, t2])
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.u[0].len()
    }

    pub fn u(&self, a: Subset) -> &Vector {
        &self.u[a.bits() as usize]
    }

    pub fn u_all(&self) -> &[Vector] {
        &self.u
    }

    pub fn t(&self) -> &[RingValue] {
        &self.t
    }

    pub fn backend(&self) -> Backend {
        self.t.first().map(Backend::of).or_else(|| self.u[0].first().map(Backend::of)).unwrap_or(Backend::Rational)
    }

    /// Relabels directions by the transposition `(i j)` (1-based): swaps
    /// `t_i ↔ t_j` and moves `u_A` to `u_{σ(A)}`.
    pub fn flip(&self, i: usize, j: usize) -> SymPoint {
        let swap = |a: usize| {
            let s = Subset(a as u32);
            let mut out = s.without(i).without(j);
            if s.contains(i) {
                out = out.with(j);
            }
            if s.contains(j) {
                out = out.with(i);
            }
            out.bits() as usize
        };
        let mut u = self.u.clone();
        for (a, v) in self.u.iter().enumerate() {
            u[swap(a)] = v.clone();
        }
        let mut t = self.t.clone();
        t.swap(i - 1, j - 1);
        SymPoint { n: self.n, u, t }
    }

    /// `x + Σ_{∅≠A⊆S} t_A u_A` for every `S`, indexed by bitmask.
    pub fn evaluation_points(&self) -> Vec<Vector> {
        let size = 1usize << self.n;
        (0..size)
            .map(|s| {
                Subset(s as u32).subsets().fold(vector::zeros(&self.backend(), self.dim()), |acc, a| {
                    let ta = a.dirs().fold(self.backend().one(), |p, k| p * self.t[k - 1].clone());
                    vector::axpy(&acc, &ta, &self.u[a.bits() as usize])
                })
            })
            .collect()
    }
}

/// Membership of a full-cubic point in `U^{[n]} = (U^{[n-1]})^{[1]}`,
/// decided recursively on the two faces along direction `n`.
pub fn extended_contains(domain: &DomainSpec, p: &HyperPoint) -> bool {
    if p.dim() != domain.dim() {
        return false;
    }
    if p.order() == 0 {
        return domain.contains(p.w(Subset(0)));
    }
    let (base, moved) = p.faces();
    extended_contains(domain, &base) && extended_contains(domain, &moved)
}

/// Membership of a symmetric point in `U^{[n]}_t`.
pub fn sym_contains(domain: &DomainSpec, q: &SymPoint) -> bool {
    q.dim() == domain.dim() && q.evaluation_points().iter().all(|x| domain.contains(x))
}
