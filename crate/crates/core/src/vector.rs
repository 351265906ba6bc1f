//! Coordinate vectors over a backend, as plain slices of ring values.

use crate::error::{Error, Result};
use crate::scalars::{Backend, RingValue};

pub type Vector = Vec<RingValue>;

pub fn add(a: &[RingValue], b: &[RingValue]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[RingValue], b: &[RingValue]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn neg(a: &[RingValue]) -> Vector {
    a.iter().map(|x| -x).collect()
}

pub fn scale(c: &RingValue, a: &[RingValue]) -> Vector {
    a.iter().map(|x| c * x).collect()
}

/// `x + t·v`.
pub fn axpy(x: &[RingValue], t: &RingValue, v: &[RingValue]) -> Vector {
    x.iter().zip(v).map(|(xi, vi)| xi + &(t * vi)).collect()
}

pub fn zeros(backend: &Backend, d: usize) -> Vector {
    vec![backend.zero(); d]
}

/// Checks length and backend of every entry.
pub fn check(backend: &Backend, v: &[RingValue], d: usize) -> Result<()> {
    if v.len() != d {
        return Err(Error::Dimension { expected: d, found: v.len() });
    }
    v.iter().try_for_each(|x| backend.check(x))
}

pub fn format(v: &[RingValue]) -> String {
    let items: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("[{}]", items.join(", "))
}
