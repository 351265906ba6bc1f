use std::fmt::Write;

use super::mapfn::MapFn;
use super::slope::slope1;
use crate::error::{Error, Result};
use crate::scalars::{Backend, RingValue};

/// One probe `t` with its slope and distance to the extrapolated limit.
#[derive(Debug, Clone, PartialEq)]
pub struct LimitRow {
    pub t: f64,
    pub slope: Vec<f64>,
    pub error: f64,
}

/// Slopes at `t0·2^{-k}` with a Richardson estimate of the `t → 0` limit
/// under the model `slope(t) = L + c·t`.
///
/// Row errors are distances to `limit`. `limit_error` is the gap between the
/// last two Richardson estimates.
#[derive(Debug, Clone, PartialEq)]
pub struct LimitTable {
    pub rows: Vec<LimitRow>,
    pub limit: Vec<f64>,
    pub limit_error: f64,
}

impl LimitTable {
    /// Header `t,slope_0,…,slope_{d-1},richardson_err`, one line per row and
    /// a closing `t = 0` line holding the limit and its error estimate.
    pub fn to_csv(&self) -> String {
        let d = self.limit.len();
        let mut out = String::from("t");
        for i in 0..d {
            let _ = write!(out, ",slope_{i}");
        }
        out.push_str(",richardson_err\n");
        for row in &self.rows {
            let _ = write!(out, "{}", row.t);
            for s in &row.slope {
                let _ = write!(out, ",{s}");
            }
            let _ = writeln!(out, ",{}", row.error);
        }
        out.push('0');
        for l in &self.limit {
            let _ = write!(out, ",{l}");
        }
        let _ = writeln!(out, ",{}", self.limit_error);
        out
    }

    /// True when the error column never increases.
    pub fn monotone(&self) -> bool {
        self.rows.windows(2).all(|w| w[1].error <= w[0].error)
    }
}

pub fn estimate_limit_slope(f: &MapFn, x: &[f64], v: &[f64], t0: f64, halvings: usize) -> Result<LimitTable> {
    if !(t0.is_finite() && t0 != 0.0) {
        return Err(Error::NonUnitParameter(format!("t0 = {t0}")));
    }
    let backend = Backend::float();
    let xs: Vec<RingValue> = x.iter().map(|&a| RingValue::Float(a)).collect();
    let vs: Vec<RingValue> = v.iter().map(|&a| RingValue::Float(a)).collect();
    let mut rows = Vec::with_capacity(halvings + 1);
    for k in 0..=halvings {
        let t = t0 / f64::powi(2.0, k as i32);
        let s = slope1(f, &xs, &vs, &RingValue::Float(t))?;
        debug_assert!(s.iter().all(|c| c.belongs_to(&backend)));
        let slope = s.iter().map(|c| c.to_f64().expect("float backend")).collect();
        rows.push(LimitRow { t, slope, error: 0.0 });
    }
    let extrapolate = |prev: &LimitRow, last: &LimitRow| -> Vec<f64> {
        last.slope.iter().zip(&prev.slope).map(|(a, b)| 2.0 * a - b).collect()
    };
    let (limit, limit_error) = match rows.as_slice() {
        [.., a, b, c] => {
            let (earlier, limit) = (extrapolate(a, b), extrapolate(b, c));
            let gap = limit.iter().zip(&earlier).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max);
            (limit, gap)
        }
        [a, b] => (extrapolate(a, b), 0.0),
        [only] => (only.slope.clone(), 0.0),
        [] => unreachable!("at least one row"),
    };
    for row in &mut rows {
        row.error = row.slope.iter().zip(&limit).map(|(s, l)| (s - l).abs()).fold(0.0, f64::max);
    }
    Ok(LimitTable { rows, limit, limit_error })
}
