//! Dense linear solves over a backend.

use crate::scalars::{Backend, RingValue};

/// Solves `m · y = rhs` for a square matrix given by rows. Returns `None`
/// when the matrix is singular (on Float: when no pivot exceeds the
/// tolerance relative to the largest entry).
pub fn solve(backend: &Backend, mut m: Vec<Vec<RingValue>>, mut rhs: Vec<RingValue>) -> Option<Vec<RingValue>> {
    let n = rhs.len();
    debug_assert!(m.len() == n && m.iter().all(|r| r.len() == n));
    let threshold = match backend {
        Backend::Float { tol } => {
            let scale = m.iter().flatten().map(RingValue::magnitude).fold(0.0, f64::max);
            tol * scale
        }
        _ => 0.0,
    };
    for col in 0..n {
        let pivot = if backend.is_exact() {
            (col..n).find(|&r| !m[r][col].is_zero())?
        } else {
            let best = (col..n).max_by(|&a, &b| m[a][col].magnitude().total_cmp(&m[b][col].magnitude()))?;
            if m[best][col].magnitude() <= threshold {
                return None;
            }
            best
        };
        m.swap(col, pivot);
        rhs.swap(col, pivot);
        let inv = m[col][col].try_invert()?;
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] * &inv;
            for c in col..n {
                let delta = &factor * &m[col][c];
                m[r][c] = &m[r][c] - &delta;
            }
            let delta = &factor * &rhs[col];
            rhs[r] = &rhs[r] - &delta;
        }
    }
    Some((0..n).map(|i| &rhs[i] * &m[i][i].try_invert().expect("pivot is a unit")).collect())
}
