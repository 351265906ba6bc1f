//! The hypercube of rings `K_t^{C;n}`, `C ⊆ {1..n}`, with its edge maps.

use std::sync::Arc;

use super::{CubicParams, CubicScalar};
use crate::error::{Error, Result};
use crate::subset::Subset;

/// A hypercube edge `B → B ∪ {k}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub lower: Subset,
    pub dir: usize,
}

impl Edge {
    pub fn upper(&self) -> Subset {
        self.lower.with(self.dir)
    }
}

/// A square face spanned by directions `j < k` over a base vertex avoiding both.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Face {
    pub base: Subset,
    pub j: usize,
    pub k: usize,
}

impl Face {
    pub fn top(&self) -> Subset {
        self.base.with(self.j).with(self.k)
    }
}

/// All vertex rings of one parameter vector.
#[derive(Debug, Clone, PartialEq)]
pub struct CubicRing {
    params: Arc<CubicParams>,
}

impl CubicRing {
    pub fn new(params: Arc<CubicParams>) -> Self {
        CubicRing { params }
    }

    pub fn params(&self) -> &Arc<CubicParams> {
        &self.params
    }

    pub fn vertices(&self) -> impl Iterator<Item = Subset> {
        self.params.full().subsets()
    }

    pub fn edges(&self) -> Vec<Edge> {
        let full = self.params.full();
        let mut out = Vec::new();
        for lower in full.subsets() {
            for dir in full.difference(lower).dirs() {
                out.push(Edge { lower, dir });
            }
        }
        out
    }

    pub fn faces(&self) -> Vec<Face> {
        let full = self.params.full();
        let mut out = Vec::new();
        for base in full.subsets() {
            let free: Vec<usize> = full.difference(base).dirs().collect();
            for (i, &j) in free.iter().enumerate() {
                for &k in &free[i + 1..] {
                    out.push(Face { base, j, k });
                }
            }
        }
        out
    }

    /// Checks `α_jα_k = α_kα_j`, `α_jβ_k = β_kα_j`, `β_jα_k = α_kβ_j` and
    /// `β_jβ_k = β_kβ_j` on `x`, an element of the top vertex of `face`.
    /// Returns the name of the first composite pair that disagrees.
    pub fn check_face(&self, face: &Face, x: &CubicScalar) -> Result<Option<&'static str>> {
        if x.carrier() != face.top() {
            return Err(Error::CarrierMismatch);
        }
        let (j, k) = (face.j, face.k);
        let backend = *self.params.backend();
        let agree = |a: CubicScalar, b: CubicScalar| backend.vec_eq(a.coeffs(), b.coeffs());
        if !agree(x.source(k)?.source(j)?, x.source(j)?.source(k)?) {
            return Ok(Some("alpha_j alpha_k"));
        }
        if !agree(x.target(k)?.source(j)?, x.source(j)?.target(k)?) {
            return Ok(Some("alpha_j beta_k"));
        }
        if !agree(x.source(k)?.target(j)?, x.target(j)?.source(k)?) {
            return Ok(Some("beta_j alpha_k"));
        }
        if !agree(x.target(k)?.target(j)?, x.target(j)?.target(k)?) {
            return Ok(Some("beta_j beta_k"));
        }
        Ok(None)
    }
}
