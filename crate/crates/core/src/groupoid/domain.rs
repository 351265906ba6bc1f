use crate::error::{Error, Result};
use crate::scalars::RingValue;
use crate::vector;

/// Shape of an open set `U ⊆ K^d`.
#[derive(Debug, Clone, PartialEq)]
pub enum DomainShape {
    FullSpace,
    /// Euclidean open ball; Float backend only.
    OpenBall { center: Vec<RingValue>, radius: RingValue },
    /// Everything except finitely many points; exact backends.
    FiniteComplement { excluded: Vec<Vec<RingValue>> },
    /// `x_coord > 0` (0-based coordinate); Float backend only.
    HalfSpacePositive { coord: usize },
}

/// A domain `U ⊆ K^d` with decidable membership.
#[derive(Debug, Clone, PartialEq)]
pub struct DomainSpec {
    dim: usize,
    shape: DomainShape,
}

impl DomainSpec {
    pub fn new(dim: usize, shape: DomainShape) -> Result<Self> {
        match &shape {
            DomainShape::FullSpace => {}
            DomainShape::OpenBall { center, radius } => {
                if center.len() != dim {
                    return Err(Error::Dimension { expected: dim, found: center.len() });
                }
                let r = radius.to_f64().ok_or_else(|| Error::InvalidStructure("ball radius must be real".into()))?;
                if !(r > 0.0) || center.iter().any(|c| c.to_f64().is_none()) {
                    return Err(Error::InvalidStructure("a ball needs a real center and positive radius".into()));
                }
            }
            DomainShape::FiniteComplement { excluded } => {
                for p in excluded {
                    if p.len() != dim {
                        return Err(Error::Dimension { expected: dim, found: p.len() });
                    }
                }
            }
            DomainShape::HalfSpacePositive { coord } => {
                if *coord >= dim {
                    return Err(Error::DirectionOutOfRange { k: coord + 1, n: dim });
                }
            }
        }
        Ok(DomainSpec { dim, shape })
    }

    pub fn full(dim: usize) -> Self {
        DomainSpec { dim, shape: DomainShape::FullSpace }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn shape(&self) -> &DomainShape {
        &self.shape
    }

    pub fn is_full(&self) -> bool {
        self.shape == DomainShape::FullSpace
    }

    /// Membership test. Real-valued shapes read exact values through `f64`
    /// and contain no prime-field points.
    pub fn contains(&self, x: &[RingValue]) -> bool {
        if x.len() != self.dim {
            return false;
        }
        match &self.shape {
            DomainShape::FullSpace => true,
            DomainShape::OpenBall { center, radius } => {
                let mut dist2 = 0.0;
                for (xi, ci) in x.iter().zip(center) {
                    match (xi.to_f64(), ci.to_f64()) {
                        (Some(a), Some(b)) => dist2 += (a - b) * (a - b),
                        _ => return false,
                    }
                }
                radius.to_f64().is_some_and(|r| dist2.sqrt() < r)
            }
            DomainShape::FiniteComplement { excluded } => !excluded.iter().any(|p| p.as_slice() == x),
            DomainShape::HalfSpacePositive { coord } => x[*coord].to_f64().is_some_and(|v| v > 0.0),
        }
    }

    pub fn require(&self, x: &[RingValue]) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::DomainViolation(format!("{} is outside the domain", vector::format(x))))
        }
    }
}
